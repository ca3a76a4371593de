//! Dense univariate polynomials over the exact scalar tower.
//!
//! `Poly<T>` works for any coefficient ring, including the non-commutative
//! quaternions: the variable t commutes with coefficients, products keep
//! coefficient order, and evaluation places coefficients on the left.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Coeff, CommutativeCoeff, GaussianRational, Quaternion, Rational};

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<T: Coeff> {
    coeffs: Vec<T>, // ascending degree, trailing zeros trimmed
}

pub type RealPoly = Poly<Rational>;
pub type ComplexPoly = Poly<GaussianRational>;
pub type QuatPoly = Poly<Quaternion>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * t^k.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn var() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg_or_0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of t^k, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub(&rhs.coeff(k)));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    /// Product with coefficient order preserved: (AB)_k = sum a_i b_j over i+j=k.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    /// c * P (constant on the left of every coefficient).
    pub fn scale_left(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| c.mul(a)).collect())
    }

    /// P * c (constant on the right).
    pub fn scale_right(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Left-coefficient evaluation sum a_i q^i (Horner).
    pub fn eval_left(&self, q: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(c);
        }
        acc
    }

    pub fn map<U: Coeff, F: Fn(&T) -> U>(&self, f: F) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Right division: Q = quotient * B + remainder with deg rem < deg B.
    /// Requires an invertible leading coefficient of B.
    pub fn right_divide(&self, b: &Self) -> Result<(Self, Self)> {
        let bd = b.degree().ok_or(Error::ZeroDivision)?;
        let blead_inv = b.leading().unwrap().inv().ok_or(Error::ZeroDivision)?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < bd {
                break;
            }
            let c = rem.leading().unwrap().mul(&blead_inv);
            let step = Poly::monomial(c, rd - bd);
            quot = quot.add(&step);
            rem = rem.sub(&step.mul(b));
        }
        Ok((quot, rem))
    }
}

impl<T: CommutativeCoeff> Poly<T> {
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut m = T::zero(); // running value of the exponent as a field element
        for c in self.coeffs.iter().skip(1) {
            m = m.add(&T::one());
            out.push(c.mul(&m));
        }
        Poly::new(out)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.inv().expect("field leading coefficient");
                self.scale_left(&inv)
            }
        }
    }

    pub fn divmod(&self, b: &Self) -> Result<(Self, Self)> {
        self.right_divide(b)
    }

    /// Exact division; error if the remainder is nonzero.
    pub fn exact_div(&self, b: &Self) -> Result<Self> {
        let (q, r) = self.divmod(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::ZeroDivision)
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divmod(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    fn gcd_pair(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r.monic(); // monic remainders keep coefficient growth down
        }
        a.monic()
    }
}

/// Monic gcd of a family; zero polynomials are skipped.
pub fn euclid_gcd<T: CommutativeCoeff>(ps: &[Poly<T>]) -> Result<Poly<T>> {
    let mut acc: Option<Poly<T>> = None;
    for p in ps.iter().filter(|p| !p.is_zero()) {
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => g.gcd_pair(p),
        });
    }
    acc.ok_or(Error::AllZero)
}

impl QuatPoly {
    /// Monic normalization by left multiplication with the inverse leading
    /// coefficient; preserves the root set.
    pub fn monic_left(&self) -> Result<QuatPoly> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = lead.inverse()?;
        Ok(self.scale_left(&inv))
    }

    /// Coefficient-wise conjugate.
    pub fn conj(&self) -> QuatPoly {
        self.map(|c| c.conj())
    }
}

// ---------------------------------------------------------------------------
// Decomposition Q = f + k g and the real/imaginary splits

/// Splits Q into the unique complex pair (f, g) with Q = f + k g.
pub fn decompose(q: &QuatPoly) -> (ComplexPoly, ComplexPoly) {
    let f = q.map(|c| c.complex_parts().0);
    let g = q.map(|c| c.complex_parts().1);
    (f, g)
}

pub fn recompose(f: &ComplexPoly, g: &ComplexPoly) -> QuatPoly {
    let n = f.coeffs().len().max(g.coeffs().len());
    let mut out = Vec::with_capacity(n);
    for idx in 0..n {
        out.push(Quaternion::from_complex_pair(&f.coeff(idx), &g.coeff(idx)));
    }
    Poly::new(out)
}

/// Splits f into real polynomials (f1, f2) with f = f1 + f2 i.
pub fn split_complex(f: &ComplexPoly) -> (RealPoly, RealPoly) {
    (f.map(|c| c.re.clone()), f.map(|c| c.im.clone()))
}

pub fn assemble_complex(f1: &RealPoly, f2: &RealPoly) -> ComplexPoly {
    let n = f1.coeffs().len().max(f2.coeffs().len());
    let mut out = Vec::with_capacity(n);
    for idx in 0..n {
        out.push(GaussianRational::new(f1.coeff(idx), f2.coeff(idx)));
    }
    Poly::new(out)
}

pub fn lift_real(p: &RealPoly) -> ComplexPoly {
    p.map(|c| GaussianRational::from_rational(c.clone()))
}

pub fn lift_complex(f: &ComplexPoly) -> QuatPoly {
    f.map(Quaternion::from_complex)
}

pub fn lift_real_to_quat(p: &RealPoly) -> QuatPoly {
    p.map(|c| Quaternion::from_rational(c.clone()))
}

// ---------------------------------------------------------------------------
// Sturm sequences

fn sign(r: &Rational) -> i8 {
    use num::Signed;
    if num::Zero::is_zero(r) {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn sturm_chain(p: &RealPoly) -> Vec<RealPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].divmod(&chain[n - 1]).expect("nonzero divisor");
        chain.push(r.neg());
    }
    chain.pop();
    chain
}

fn sign_variations(chain: &[RealPoly], x: &Rational) -> usize {
    let mut vars = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign(&p.eval_left(x));
        if s != 0 {
            if last != 0 && s != last {
                vars += 1;
            }
            last = s;
        }
    }
    vars
}

/// Number of distinct real roots of p in (lo, hi].
/// Precondition: p(lo) != 0 and p(hi) != 0 (callers perturb endpoints).
pub fn sturm_real_root_count(p: &RealPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    assert!(lo < hi, "empty interval");
    let chain = sturm_chain(p);
    Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
}

/// Same count reusing a precomputed chain.
pub fn sturm_count_with_chain(chain: &[RealPoly], lo: &Rational, hi: &Rational) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

// ---------------------------------------------------------------------------
// Display

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(fm, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(fm, " + ")?;
            }
            first = false;
            match k {
                0 => write!(fm, "({})", c)?,
                1 => write!(fm, "({})*t", c)?,
                _ => write!(fm, "({})*t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn qp(coeffs: &[Quaternion]) -> QuatPoly {
        Poly::new(coeffs.to_vec())
    }

    fn qi(x0: i64, x1: i64, x2: i64, x3: i64) -> Quaternion {
        Quaternion::from_ints(x0, x1, x2, x3)
    }

    /// t^2 - (i+j) t - k, the running example.
    fn running_example() -> QuatPoly {
        qp(&[qi(0, 0, 0, -1), qi(0, -1, -1, 0), qi(1, 0, 0, 0)])
    }

    #[test]
    fn noncommutative_product() {
        // (t - j)(t - i) = t^2 - (i+j) t + j i = t^2 - (i+j) t - k
        let a = qp(&[Quaternion::j().neg(), Quaternion::one()]);
        let b = qp(&[Quaternion::i().neg(), Quaternion::one()]);
        assert_eq!(a.mul(&b), running_example());
        // real factor commutes: (t^2+1)(t-k) = t^3 - k t^2 + t - k
        let real = qp(&[qi(1, 0, 0, 0), qi(0, 0, 0, 0), qi(1, 0, 0, 0)]);
        let lin = qp(&[Quaternion::k().neg(), Quaternion::one()]);
        let expect = qp(&[
            qi(0, 0, 0, -1),
            qi(1, 0, 0, 0),
            qi(0, 0, 0, -1),
            qi(1, 0, 0, 0),
        ]);
        assert_eq!(real.mul(&lin), expect);
        let p = running_example();
        assert_eq!(p.mul(&QuatPoly::one()), p);
    }

    #[test]
    fn evaluation() {
        let p = running_example();
        assert!(p.eval_left(&Quaternion::i()).is_zero());
        // at j the value is -2k: j is not a root
        assert_eq!(p.eval_left(&Quaternion::j()), qi(0, 0, 0, -2));
        assert_eq!(p.eval_left(&Quaternion::zero()), qi(0, 0, 0, -1));
    }

    #[test]
    fn right_division() {
        let p = running_example();
        let ti = qp(&[Quaternion::i().neg(), Quaternion::one()]);
        let (q, r) = p.right_divide(&ti).unwrap();
        assert_eq!(q, qp(&[Quaternion::j().neg(), Quaternion::one()]));
        assert!(r.is_zero());

        let tj = qp(&[Quaternion::j().neg(), Quaternion::one()]);
        let (_, r) = p.right_divide(&tj).unwrap();
        assert_eq!(r, qp(&[qi(0, 0, 0, -2)]));

        let (q, r) = p.right_divide(&QuatPoly::one()).unwrap();
        assert_eq!(q, p);
        assert!(r.is_zero());

        assert!(p.right_divide(&QuatPoly::zero()).is_err());
    }

    #[test]
    fn decompose_examples() {
        let p = running_example();
        let (f, g) = decompose(&p);
        // f = t^2 - i t, g = -i t - 1
        let gi = GaussianRational::i();
        let f_expect = Poly::new(vec![
            GaussianRational::zero(),
            gi.neg(),
            GaussianRational::one(),
        ]);
        let g_expect = Poly::new(vec![GaussianRational::one().neg(), gi.neg()]);
        assert_eq!(f, f_expect);
        assert_eq!(g, g_expect);
        assert_eq!(recompose(&f, &g), p);

        // complex input decomposes as (Q, 0)
        let c = lift_complex(&f_expect);
        let (fc, gc) = decompose(&c);
        assert_eq!(fc, f_expect);
        assert!(gc.is_zero());
    }

    #[test]
    fn split_examples() {
        let gi = GaussianRational::i();
        let f: ComplexPoly = Poly::new(vec![
            GaussianRational::zero(),
            gi.neg(),
            GaussianRational::one(),
        ]);
        let (f1, f2) = split_complex(&f);
        assert_eq!(f1, Poly::new(vec![rat_int(0), rat_int(0), rat_int(1)]));
        assert_eq!(f2, Poly::new(vec![rat_int(0), rat_int(-1)]));
        assert_eq!(assemble_complex(&f1, &f2), f);
    }

    #[test]
    fn gcd_examples() {
        let gi = GaussianRational::i();
        // gcd(t^2 - i t, -i t - 1) = t - i
        let f: ComplexPoly = Poly::new(vec![
            GaussianRational::zero(),
            gi.neg(),
            GaussianRational::one(),
        ]);
        let g: ComplexPoly = Poly::new(vec![GaussianRational::one().neg(), gi.neg()]);
        let e = euclid_gcd(&[f, g]).unwrap();
        assert_eq!(
            e,
            Poly::new(vec![gi.neg(), GaussianRational::one()])
        );

        // gcd(t^3 + t, 0, -t^2 - 1, 0) = t^2 + 1
        let a: RealPoly = Poly::new(vec![rat_int(0), rat_int(1), rat_int(0), rat_int(1)]);
        let b: RealPoly = Poly::new(vec![rat_int(-1), rat_int(0), rat_int(-1)]);
        let d = euclid_gcd(&[a, RealPoly::zero(), b, RealPoly::zero()]).unwrap();
        assert_eq!(d, Poly::new(vec![rat_int(1), rat_int(0), rat_int(1)]));

        // gcd(P, P) = monic(P)
        let p: RealPoly = Poly::new(vec![rat_int(2), rat_int(4)]);
        assert_eq!(
            euclid_gcd(&[p.clone(), p]).unwrap(),
            Poly::new(vec![rat(1, 2), rat_int(1)])
        );

        assert_eq!(
            euclid_gcd::<Rational>(&[RealPoly::zero()]),
            Err(Error::AllZero)
        );
    }

    #[test]
    fn sturm_counts() {
        let lo = rat_int(-10);
        let hi = rat_int(10);
        let p: RealPoly = Poly::new(vec![rat_int(1), rat_int(0), rat_int(1)]);
        assert_eq!(sturm_real_root_count(&p, &lo, &hi).unwrap(), 0);
        let p: RealPoly = Poly::new(vec![rat_int(-2), rat_int(0), rat_int(1)]);
        assert_eq!(sturm_real_root_count(&p, &lo, &hi).unwrap(), 2);
        let p: RealPoly = Poly::new(vec![rat_int(0), rat_int(1), rat_int(0), rat_int(1)]);
        assert_eq!(sturm_real_root_count(&p, &lo, &hi).unwrap(), 1);
        assert!(sturm_real_root_count(&RealPoly::zero(), &lo, &hi).is_err());
    }

    #[test]
    fn evaluation_not_multiplicative() {
        // (t - j)(t - i) at j: product evaluations would give 0, actual is -2k
        let a = qp(&[Quaternion::j().neg(), Quaternion::one()]);
        let b = qp(&[Quaternion::i().neg(), Quaternion::one()]);
        let prod = a.mul(&b);
        let at = Quaternion::j();
        let lhs = prod.eval_left(&at);
        let rhs = a.eval_left(&at).mul(&b.eval_left(&at));
        assert_ne!(lhs, rhs);
        assert!(rhs.is_zero());
    }
}
