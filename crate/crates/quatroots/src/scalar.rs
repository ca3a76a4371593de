//! Exact scalar tower: arbitrary-precision rationals, Gaussian rationals and
//! quaternions with rational coordinates, plus congruence-class machinery.
//!
//! Everything here is exact. Square roots are never taken at this layer;
//! norms are carried around squared so that every comparison stays decidable.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

fn rzero() -> Rational {
    <Rational as Zero>::zero()
}

fn rone() -> Rational {
    <Rational as One>::one()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Exact coefficient ring operations shared by the scalar tower.
///
/// `Quaternion` implements this too; its multiplication is non-commutative,
/// so algorithms that require commutativity bound on [`CommutativeCoeff`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

/// Marker for commutative coefficient fields (rationals, Gaussian rationals).
pub trait CommutativeCoeff: Coeff {}

impl Coeff for Rational {
    fn zero() -> Self {
        rzero()
    }
    fn one() -> Self {
        rone()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl CommutativeCoeff for Rational {}

/// Element of Q(i): the complex numbers with rational real and imaginary part.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: rzero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational::new(rzero(), rone())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Coeff for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(rzero(), rzero())
    }
    fn one() -> Self {
        GaussianRational::new(rone(), rzero())
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
    fn neg(&self) -> Self {
        GaussianRational::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
}

impl CommutativeCoeff for GaussianRational {}

/// Real quaternion x0 + x1 i + x2 j + x3 k with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Quaternion {
    pub x0: Rational,
    pub x1: Rational,
    pub x2: Rational,
    pub x3: Rational,
}

impl Quaternion {
    pub fn new(x0: Rational, x1: Rational, x2: Rational, x3: Rational) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64) -> Self {
        Quaternion::new(rat_int(x0), rat_int(x1), rat_int(x2), rat_int(x3))
    }

    pub fn from_rational(r: Rational) -> Self {
        Quaternion::new(r, rzero(), rzero(), rzero())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }
    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }
    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    /// Embeds c + k d for complex c = x0 + x1 i and d = x3 + x2 i,
    /// i.e. k (x3 + x2 i) = x3 k + x2 j.
    pub fn from_complex_pair(c: &GaussianRational, d: &GaussianRational) -> Self {
        Quaternion::new(c.re.clone(), c.im.clone(), d.im.clone(), d.re.clone())
    }

    /// Inverse of `from_complex_pair`: the unique (c, d) with q = c + k d.
    pub fn complex_parts(&self) -> (GaussianRational, GaussianRational) {
        (
            GaussianRational::new(self.x0.clone(), self.x1.clone()),
            GaussianRational::new(self.x3.clone(), self.x2.clone()),
        )
    }

    pub fn from_complex(z: &GaussianRational) -> Self {
        Quaternion::new(
            z.re.clone(),
            z.im.clone(),
            rzero(),
            rzero(),
        )
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.x0.clone(), -&self.x1, -&self.x2, -&self.x3)
    }

    pub fn re_part(&self) -> Rational {
        self.x0.clone()
    }

    /// x1^2 + x2^2 + x3^2, the squared norm of the imaginary part.
    pub fn imag_norm_sq(&self) -> Rational {
        &self.x1 * &self.x1 + &self.x2 * &self.x2 + &self.x3 * &self.x3
    }

    /// |q|^2 = x0^2 + x1^2 + x2^2 + x3^2, kept rational.
    pub fn norm_sq(&self) -> Rational {
        &self.x0 * &self.x0 + self.imag_norm_sq()
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.x1) && Zero::is_zero(&self.x2) && Zero::is_zero(&self.x3)
    }

    /// True when x2 = x3 = 0, i.e. the value lies in the complex subring.
    pub fn is_complex(&self) -> bool {
        Zero::is_zero(&self.x2) && Zero::is_zero(&self.x3)
    }

    pub fn as_complex(&self) -> Option<GaussianRational> {
        if self.is_complex() {
            Some(GaussianRational::new(self.x0.clone(), self.x1.clone()))
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<Quaternion> {
        let n = self.norm_sq();
        if Zero::is_zero(&n) {
            return Err(Error::ZeroDivision);
        }
        let c = self.conj();
        Ok(Quaternion::new(c.x0 / &n, c.x1 / &n, c.x2 / &n, c.x3 / &n))
    }

    /// Congruence test: q ~ r iff Re q = Re r and |q| = |r|, both exact.
    pub fn congruent(&self, other: &Quaternion) -> bool {
        self.x0 == other.x0 && self.imag_norm_sq() == other.imag_norm_sq()
    }

    pub fn class_rep(&self) -> SphericalClassRep {
        SphericalClassRep {
            re: self.x0.clone(),
            imag_norm_sq: self.imag_norm_sq(),
        }
    }
}

impl Coeff for Quaternion {
    fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }
    fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        Quaternion::new(
            &self.x0 + &rhs.x0,
            &self.x1 + &rhs.x1,
            &self.x2 + &rhs.x2,
            &self.x3 + &rhs.x3,
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        Quaternion::new(
            &self.x0 - &rhs.x0,
            &self.x1 - &rhs.x1,
            &self.x2 - &rhs.x2,
            &self.x3 - &rhs.x3,
        )
    }
    /// Hamilton product with i j = k, j k = i, k i = j.
    fn mul(&self, rhs: &Self) -> Self {
        let (a0, a1, a2, a3) = (&self.x0, &self.x1, &self.x2, &self.x3);
        let (b0, b1, b2, b3) = (&rhs.x0, &rhs.x1, &rhs.x2, &rhs.x3);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
    fn neg(&self) -> Self {
        Quaternion::new(-&self.x0, -&self.x1, -&self.x2, -&self.x3)
    }
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn is_zero(&self) -> bool {
        self.is_real() && Zero::is_zero(&self.x0)
    }
}

/// A congruence class of non-real quaternions, stored exactly as the pair
/// (real part, squared norm of the imaginary part). The class contains the
/// complex conjugate pair re +- i sqrt(imag_norm_sq).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct SphericalClassRep {
    pub re: Rational,
    pub imag_norm_sq: Rational,
}

impl SphericalClassRep {
    pub fn new(re: Rational, imag_norm_sq: Rational) -> Self {
        SphericalClassRep { re, imag_norm_sq }
    }

    /// |z|^2 for either complex representative of the class.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.imag_norm_sq
    }

    /// The monic real quadratic (t - z)(t - z-bar) = t^2 - 2 re t + |z|^2.
    pub fn characteristic_poly_coeffs(&self) -> (Rational, Rational) {
        // returns (constant, linear) coefficients; quadratic coeff is 1
        (self.norm_sq(), rat_int(-2) * &self.re)
    }
}

// ---------------------------------------------------------------------------
// sqrt enclosures and related exact comparisons

fn isqrt_floor(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

/// Rational lower bound on sqrt(r), accurate to about `bits` fractional bits.
pub fn sqrt_lower(r: &Rational, bits: u32) -> Rational {
    assert!(!r.is_negative());
    if Zero::is_zero(r) {
        return rzero();
    }
    // sqrt(p/q) = sqrt(p q)/q; scale by 4^bits for precision.
    let p = r.numer();
    let q = r.denom();
    let scale = BigInt::one() << (2 * bits);
    let s = isqrt_floor(&(p * q * &scale));
    Rational::new(s, q * (BigInt::one() << bits))
}

/// Rational upper bound on sqrt(r), accurate to about `bits` fractional bits.
pub fn sqrt_upper(r: &Rational, bits: u32) -> Rational {
    assert!(!r.is_negative());
    if Zero::is_zero(r) {
        return rzero();
    }
    let p = r.numer();
    let q = r.denom();
    let scale = BigInt::one() << (2 * bits);
    let s = isqrt_floor(&(p * q * &scale)) + BigInt::one();
    Rational::new(s, q * (BigInt::one() << bits))
}

/// Decides sqrt(x_sq) < 1 + sqrt(h_sq) exactly (both arguments nonnegative).
pub fn lt_one_plus_sqrt(x_sq: &Rational, h_sq: &Rational) -> bool {
    // sqrt(x) < 1 + sqrt(h)  <=>  x < 1 + 2 sqrt(h) + h
    //                        <=>  x - 1 - h < 2 sqrt(h)
    let lhs = x_sq - rone() - h_sq;
    if lhs.is_negative() || Zero::is_zero(&lhs) {
        return true;
    }
    &lhs * &lhs < rat_int(4) * h_sq
}

/// f64 upper bound on sqrt(r): never rounds below the true value.
pub fn sqrt_f64_up(r: &Rational) -> f64 {
    let lo = sqrt_lower(r, 80);
    if &lo * &lo == *r {
        // perfect square: no rounding slack needed if f64 represents it
        let v = lo.to_f64().unwrap_or(f64::INFINITY);
        if v.is_finite() && Rational::from_float(v).as_ref() == Some(&lo) {
            return v;
        }
    }
    let u = sqrt_upper(r, 80);
    let v = u.to_f64().unwrap_or(f64::INFINITY);
    // nudge one ulp upward to absorb the rational->f64 rounding
    let next = f64::from_bits(v.to_bits() + 1);
    if v.is_finite() {
        next
    } else {
        v
    }
}

/// Nearest rational to `x` with denominator at most `max_den`, by continued
/// fractions. Returns `None` for non-finite input.
pub fn rational_reconstruct(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let negative = x < 0.0;
    let mut v = x.abs();
    // convergents p/q of the continued fraction of |x|
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let max_den = BigInt::from(max_den);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e18 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if Zero::is_zero(&q1) {
        return None;
    }
    let r = Rational::new(p1, q1);
    Some(if negative { -r } else { r })
}

// ---------------------------------------------------------------------------
// Display

fn fmt_rat(r: &Rational) -> String {
    r.to_string()
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(fm, "0");
        }
        let mut parts = Vec::new();
        if !Zero::is_zero(&self.re) {
            parts.push(fmt_rat(&self.re));
        }
        if !Zero::is_zero(&self.im) {
            parts.push(format!("{}i", fmt_rat(&self.im)));
        }
        write!(fm, "{}", join_signed(&parts))
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(fm, "0");
        }
        let mut parts = Vec::new();
        if !Zero::is_zero(&self.x0) {
            parts.push(fmt_rat(&self.x0));
        }
        for (c, unit) in [(&self.x1, "i"), (&self.x2, "j"), (&self.x3, "k")] {
            if !Zero::is_zero(c) {
                parts.push(format!("{}{}", fmt_rat(c), unit));
            }
        }
        write!(fm, "{}", join_signed(&parts))
    }
}

impl fmt::Display for SphericalClassRep {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            fm,
            "(re = {}, |Im|^2 = {})",
            fmt_rat(&self.re),
            fmt_rat(&self.imag_norm_sq)
        )
    }
}

fn join_signed(parts: &[String]) -> String {
    let mut out = String::new();
    for (n, p) in parts.iter().enumerate() {
        if n == 0 {
            out.push_str(p);
        } else if let Some(stripped) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}
