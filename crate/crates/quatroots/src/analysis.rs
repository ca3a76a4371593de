//! Root classification for quaternion polynomials: the maximal complex right
//! factor E(t), the real-component gcd D(t), existence predicates backed by
//! Bezout/Barnett rank cross-checks, the closed-form quadratic case, height
//! bounds, and integer-root enumeration.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::bezout::{barnett_stack, bezout_matrix, bezoutian};
use crate::error::{Error, Result};
use crate::numeric::{all_complex_roots, pair_conjugates};
use crate::poly::{
    decompose, euclid_gcd, lift_complex, lift_real, split_complex, sturm_chain,
    sturm_count_with_chain, ComplexPoly, Poly, QuatPoly, RealPoly,
};
use crate::scalar::{
    lt_one_plus_sqrt, rat, rat_int, sqrt_f64_up, sqrt_upper, Coeff, GaussianRational, Quaternion,
    Rational, SphericalClassRep,
};

// ---------------------------------------------------------------------------
// Heights and bounds

/// Exact squared heights of Q and of its complex / real components.
#[derive(Clone, Debug, PartialEq)]
pub struct Heights {
    /// H(Q)^2 = max(1, |a_i/a_0|^2)
    pub hq_sq: Rational,
    /// H1^2, H1 = min over the nonzero of {H(f), H(g)}
    pub h1_sq: Rational,
    /// H2^2, H2 = min over the nonzero of {H(f1), H(f2), H(g1), H(g2)}
    pub h2_sq: Rational,
    /// Components excluded from the mins because they are zero polynomials.
    pub excluded: Vec<&'static str>,
}

impl Heights {
    pub fn hq(&self) -> f64 {
        sqrt_f64_up(&self.hq_sq)
    }
    pub fn h1(&self) -> f64 {
        sqrt_f64_up(&self.h1_sq)
    }
    pub fn h2(&self) -> f64 {
        sqrt_f64_up(&self.h2_sq)
    }
}

/// The three root-radius bounds: |rho| < 1 + H(Q) in general,
/// |rho| < 1 + H1 for isolated complex roots, |rho| < 1 + H2^(1/2) for
/// spherical roots. Radii are rounded up for display; all certification
/// against them happens on exact squared forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Bounds {
    pub heights: Heights,
    pub general: f64,
    pub isolated_complex: f64,
    pub spherical: f64,
}

fn height_sq_quat_monic(p: &QuatPoly) -> Rational {
    let n = p.deg_or_0();
    let mut best: Rational = rat_int(1);
    for c in p.coeffs().iter().take(n) {
        let v = c.norm_sq();
        if v > best {
            best = v;
        }
    }
    best
}

fn height_sq_complex(p: &ComplexPoly) -> Rational {
    let lead_sq = p.leading().expect("nonzero").norm_sq();
    let mut best: Rational = rat_int(1);
    for c in p.coeffs().iter().take(p.deg_or_0()) {
        let v = c.norm_sq() / &lead_sq;
        if v > best {
            best = v;
        }
    }
    best
}

fn height_sq_real(p: &RealPoly) -> Rational {
    let lead = p.leading().expect("nonzero");
    let lead_sq = lead * lead;
    let mut best: Rational = rat_int(1);
    for c in p.coeffs().iter().take(p.deg_or_0()) {
        let v = (c * c) / &lead_sq;
        if v > best {
            best = v;
        }
    }
    best
}

/// Decides sqrt(x_sq) < 1 + h_sq^(1/4) exactly (the spherical bound, where
/// h_sq stores the square of the height).
pub fn lt_one_plus_quartic_root(x_sq: &Rational, h_sq: &Rational) -> bool {
    // With s = sqrt(x_sq): s < 1 + h_sq^(1/4)  <=>  s <= 1 or (s-1)^4 < h_sq.
    // (s-1)^4 = x_sq^2 + 6 x_sq + 1 - 4 (x_sq + 1) s, so the condition is
    //   L := x_sq^2 + 6 x_sq + 1 - h_sq < 4 (x_sq + 1) s,
    // decidable by squaring since the right side is nonnegative.
    if x_sq <= &rat_int(1) {
        return true;
    }
    let lhs = x_sq * x_sq + rat_int(6) * x_sq + rat_int(1) - h_sq;
    if !lhs.is_positive() {
        return true;
    }
    let rhs_sq = rat_int(16) * (x_sq + rat_int(1)) * (x_sq + rat_int(1)) * x_sq;
    &lhs * &lhs < rhs_sq
}

// ---------------------------------------------------------------------------
// Report types

#[derive(Clone, Debug, PartialEq)]
pub enum RealRoot {
    /// Exactly certified rational root (divisibility by t - r verified).
    Rational(Rational),
    /// Certified isolating interval (lo, hi] containing one real root.
    Interval { lo: Rational, hi: Rational },
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedComplexRoot {
    pub re: f64,
    pub im: f64,
    pub residual_bound: f64,
    /// Present when the root was reconstructed as Gaussian rational and
    /// verified by exact evaluation.
    pub exact: Option<GaussianRational>,
}

/// A conjugate-pair class seen numerically but not certified rational.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxClass {
    pub re: f64,
    pub imag_norm_sq: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagStatus {
    Pass,
    Warn,
    NotApplicable,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConsistencyFlag {
    pub name: &'static str,
    pub status: FlagStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootReport {
    pub monic_input: QuatPoly,
    pub f: ComplexPoly,
    pub g: ComplexPoly,
    pub f1: RealPoly,
    pub f2: RealPoly,
    pub g1: RealPoly,
    pub g2: RealPoly,
    pub e: ComplexPoly,
    pub d: RealPoly,
    pub rank_bez_fg: usize,
    pub rank_barnett: usize,
    pub has_complex_root: bool,
    pub max_complex_roots: usize,
    pub has_real_root: bool,
    pub has_spherical_root: bool,
    pub has_isolated_complex_root: bool,
    pub real_roots: Vec<RealRoot>,
    pub spherical_classes: Vec<SphericalClassRep>,
    pub approx_spherical_classes: Vec<ApproxClass>,
    pub isolated_complex_roots: Vec<IsolatedComplexRoot>,
    pub bounds: Bounds,
    pub input_in_complex_subring: bool,
    pub consistency_flags: Vec<ConsistencyFlag>,
}

impl RootReport {
    pub fn all_checks_pass(&self) -> bool {
        self.consistency_flags
            .iter()
            .all(|f| f.status != FlagStatus::Fail)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticSolution {
    /// The complex root q = -c0/c1.
    pub q: GaussianRational,
    /// The second root sigma = (q - conj(p))^-1 p (q - conj(p)).
    pub sigma: Quaternion,
    /// The left factor constant: Q = (t - p)(t - q).
    pub p: Quaternion,
    /// True when the two roots coincide.
    pub coincident: bool,
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Residual tolerance for accepted numeric roots; defaults to
    /// 1e-10 * (1 + H(Q))^n when unset.
    pub tol: Option<f64>,
    pub max_iters: usize,
    /// When false, no floating-point work is done: approximated root lists
    /// stay empty and every exact field is still filled in.
    pub numeric: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            tol: None,
            max_iters: 400,
            numeric: true,
        }
    }
}

// ---------------------------------------------------------------------------
// Preparation: monic normalization, decomposition, E and D

struct Prepared {
    monic: QuatPoly,
    n: usize,
    f: ComplexPoly,
    g: ComplexPoly,
    f1: RealPoly,
    f2: RealPoly,
    g1: RealPoly,
    g2: RealPoly,
    e: ComplexPoly,
    d: RealPoly,
}

fn prepare(q: &QuatPoly) -> Result<Prepared> {
    let n = q.degree().ok_or(Error::DegreeZero)?;
    if n < 1 {
        return Err(Error::DegreeZero);
    }
    let monic = q.monic_left()?;
    let (f, g) = decompose(&monic);
    let (f1, f2) = split_complex(&f);
    let (g1, g2) = split_complex(&g);
    let e = euclid_gcd(&[f.clone(), g.clone()])?;
    let d = euclid_gcd(&[f1.clone(), f2.clone(), g1.clone(), g2.clone()])?;
    Ok(Prepared {
        monic,
        n,
        f,
        g,
        f1,
        f2,
        g1,
        g2,
        e,
        d,
    })
}

/// The maximal monic complex right factor E(t) = gcd(f, g).
pub fn compute_e(q: &QuatPoly) -> Result<ComplexPoly> {
    Ok(prepare(q)?.e)
}

/// D(t) = gcd(f1, f2, g1, g2), the real gcd of the four components.
pub fn compute_d(q: &QuatPoly) -> Result<RealPoly> {
    Ok(prepare(q)?.d)
}

/// Q has a complex root iff bez(f, g) = 0.
pub fn has_complex_root(q: &QuatPoly) -> Result<bool> {
    let p = prepare(q)?;
    let bez = bezoutian(&p.f, &p.g)?;
    debug_assert_eq!(bez.is_zero(), p.e.deg_or_0() > 0);
    Ok(bez.is_zero())
}

/// Upper bound n - rank Bez(f, g) on the number of complex roots.
pub fn max_complex_roots(q: &QuatPoly) -> Result<usize> {
    let p = prepare(q)?;
    let rank = bezout_matrix(&p.f, &p.g)?.rank();
    Ok(p.n - rank)
}

// ---------------------------------------------------------------------------
// Real roots of D (exact Sturm bisection with rational certification)

fn real_root_bound(p: &RealPoly) -> Rational {
    // Cauchy-style: every real root has |r| < 1 + max|c_i/lead|
    let lead = p.leading().expect("nonzero");
    let mut best = rat_int(1);
    for c in p.coeffs().iter().take(p.deg_or_0()) {
        let v = (c / lead).abs();
        if v > best {
            best = v;
        }
    }
    best + rat_int(1)
}

fn squarefree_part<T: crate::scalar::CommutativeCoeff>(p: &Poly<T>) -> Poly<T> {
    if p.deg_or_0() < 2 {
        return p.monic();
    }
    let der = p.derivative();
    let g = euclid_gcd(&[p.clone(), der]).expect("nonzero input");
    p.exact_div(&g).expect("gcd divides").monic()
}

/// Best rational approximation to a rational with bounded denominator,
/// by the continued fraction of the value itself.
fn best_rational_in(mid: &Rational, max_den: &BigInt) -> Rational {
    let mut p0 = BigInt::zero();
    let mut q0 = BigInt::one();
    let mut p1 = BigInt::one();
    let mut q1 = BigInt::zero();
    let mut num = mid.numer().clone();
    let mut den = mid.denom().clone();
    loop {
        if den.is_zero() {
            break;
        }
        let a = num::Integer::div_floor(&num, &den);
        let r = &num - &a * &den;
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if &q2 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        num = den;
        den = r;
    }
    if q1.is_zero() {
        mid.clone()
    } else {
        Rational::new(p1, q1)
    }
}

/// Distinct real roots of p: rational ones exactly, the rest as isolating
/// intervals narrowed below `width`.
pub fn real_roots(p: &RealPoly, width: &Rational) -> Vec<RealRoot> {
    if p.deg_or_0() == 0 {
        return Vec::new();
    }
    let sf = squarefree_part(p);
    if sf.deg_or_0() == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(&sf);
    let bound = real_root_bound(&sf);
    let total = sturm_count_with_chain(&chain, &bound.clone().neg(), &bound);
    let mut out = Vec::new();
    let mut stack = vec![(bound.clone().neg(), bound, total)];
    let max_den = BigInt::from(1_000_000_000_000u64);
    while let Some((lo, hi, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            // try a rational certificate once the interval is decently small
            let (mut lo, mut hi) = (lo, hi);
            loop {
                let mid = (&lo + &hi) / rat_int(2);
                let cand = best_rational_in(&mid, &max_den);
                if cand > lo && cand <= hi && Coeff::is_zero(&sf.eval_left(&cand)) {
                    out.push(RealRoot::Rational(cand));
                    break;
                }
                if &hi - &lo < *width {
                    out.push(RealRoot::Interval { lo, hi });
                    break;
                }
                if Coeff::is_zero(&sf.eval_left(&mid)) {
                    out.push(RealRoot::Rational(mid));
                    break;
                }
                let left = sturm_count_with_chain(&chain, &lo, &mid);
                if left == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            continue;
        }
        // split point must not be a root of the chain's head; nudge until clear
        let mut mid = (&lo + &hi) / rat_int(2);
        let eps = (&hi - &lo) / rat_int(1_000_003);
        while Coeff::is_zero(&sf.eval_left(&mid)) {
            mid = &mid + &eps;
        }
        let left = sturm_count_with_chain(&chain, &lo, &mid);
        stack.push((lo, mid.clone(), left));
        stack.push((mid, hi, count - left));
    }
    out.sort_by(|a, b| {
        let key = |r: &RealRoot| match r {
            RealRoot::Rational(x) => x.clone(),
            RealRoot::Interval { lo, .. } => lo.clone(),
        };
        key(a).cmp(&key(b))
    });
    out
}

/// Exact count of distinct real roots (no isolation).
fn count_real_roots(p: &RealPoly) -> usize {
    if p.deg_or_0() == 0 {
        return 0;
    }
    let sf = squarefree_part(p);
    if sf.deg_or_0() == 0 {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let bound = real_root_bound(&sf);
    sturm_count_with_chain(&chain, &bound.clone().neg(), &bound)
}

// ---------------------------------------------------------------------------
// Spherical classes and isolated complex roots

/// Certified spherical classes (exact) plus uncertified numeric candidates.
fn spherical_classes_of_d(
    d: &RealPoly,
    tol: f64,
    max_iters: usize,
) -> Result<(Vec<SphericalClassRep>, Vec<ApproxClass>)> {
    if d.deg_or_0() == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let sf = squarefree_part(d);
    let mut exact = Vec::new();
    if sf.deg_or_0() >= 2 {
        let roots = all_complex_roots(&lift_real(&sf), tol, max_iters)?;
        let pairing = pair_conjugates(&roots, &sf)?;
        let max_den = 1_000_000_000u64;
        let mut approx = Vec::new();
        for (re, im) in pairing.pairs {
            let cand_re = crate::scalar::rational_reconstruct(re, max_den);
            let cand_s = crate::scalar::rational_reconstruct(im * im, max_den);
            let mut certified = false;
            if let (Some(cre), Some(cs)) = (cand_re, cand_s) {
                if cs.is_positive() {
                    let rep = SphericalClassRep::new(cre.clone(), cs.clone());
                    let (c0, c1) = rep.characteristic_poly_coeffs();
                    let psi = Poly::new(vec![c0, c1, rat_int(1)]);
                    if psi.divides(&sf) {
                        exact.push(rep);
                        certified = true;
                    }
                }
            }
            if !certified {
                approx.push(ApproxClass {
                    re,
                    imag_norm_sq: im * im,
                });
            }
        }
        exact.sort_by(|a, b| (a.re.clone(), a.imag_norm_sq.clone()).cmp(&(b.re.clone(), b.imag_norm_sq.clone())));
        exact.dedup();
        return Ok((exact, approx));
    }
    Ok((exact, Vec::new()))
}

/// The non-real congruence classes determined by D, certified exactly.
pub fn spherical_classes(q: &QuatPoly) -> Result<Vec<SphericalClassRep>> {
    let p = prepare(q)?;
    let tol = default_tolerance(&heights_prepared(&p), p.n, &ClassifyOptions::default());
    Ok(spherical_classes_of_d(&p.d, tol, 400)?.0)
}

/// Spherical-root predicate. Where Q has no real root this matches the rank
/// criterion n > rank B_f1(f2, g1, g2); otherwise it is answered directly
/// from the non-real roots of D.
pub fn has_spherical_root(q: &QuatPoly) -> Result<bool> {
    let p = prepare(q)?;
    Ok(has_spherical_prepared(&p))
}

fn has_spherical_prepared(p: &Prepared) -> bool {
    let deg_d = p.d.deg_or_0();
    if deg_d == 0 {
        return false;
    }
    let sf = squarefree_part(&p.d);
    // D has a non-real root iff its squarefree part has more roots than its
    // distinct real ones
    sf.deg_or_0() > count_real_roots(&p.d)
}

/// Numeric extraction of the isolated complex roots: roots of E that are not
/// roots of D, each Gaussian-rational candidate certified by exact evaluation.
pub fn isolated_complex_roots(q: &QuatPoly) -> Result<Vec<IsolatedComplexRoot>> {
    let p = prepare(q)?;
    let tol = default_tolerance(&heights_prepared(&p), p.n, &ClassifyOptions::default());
    isolated_roots_prepared(&p, tol, 400)
}

fn isolated_roots_prepared(
    p: &Prepared,
    tol: f64,
    max_iters: usize,
) -> Result<Vec<IsolatedComplexRoot>> {
    let d_lift = lift_real(&p.d);
    let common = euclid_gcd(&[p.e.clone(), d_lift])?;
    let iso = p.e.exact_div(&common)?.monic();
    if iso.deg_or_0() == 0 {
        return Ok(Vec::new());
    }
    let sf = squarefree_part(&iso);
    let roots = all_complex_roots(&sf, tol, max_iters)?;
    let max_den = 1_000_000_000u64;
    let mut out = Vec::new();
    for r in roots {
        let exact = match (
            crate::scalar::rational_reconstruct(r.re, max_den),
            crate::scalar::rational_reconstruct(r.im, max_den),
        ) {
            (Some(re), Some(im)) => {
                let z = GaussianRational::new(re, im);
                if p.e.eval_left(&z).is_zero() {
                    Some(z)
                } else {
                    None
                }
            }
            _ => None,
        };
        out.push(IsolatedComplexRoot {
            re: r.re,
            im: r.im,
            residual_bound: r.residual_bound,
            exact,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Heights, bounds, tolerance

fn heights_prepared(p: &Prepared) -> Heights {
    let hq_sq = height_sq_quat_monic(&p.monic);
    let mut excluded = Vec::new();
    let mut h1_sq: Option<Rational> = None;
    for (poly, name) in [(&p.f, "f"), (&p.g, "g")] {
        if poly.is_zero() {
            excluded.push(name);
            continue;
        }
        let h = height_sq_complex(poly);
        h1_sq = Some(match h1_sq {
            None => h,
            Some(prev) => prev.min(h),
        });
    }
    let mut h2_sq: Option<Rational> = None;
    for (poly, name) in [
        (&p.f1, "f1"),
        (&p.f2, "f2"),
        (&p.g1, "g1"),
        (&p.g2, "g2"),
    ] {
        if poly.is_zero() {
            excluded.push(name);
            continue;
        }
        let h = height_sq_real(poly);
        h2_sq = Some(match h2_sq {
            None => h,
            Some(prev) => prev.min(h),
        });
    }
    Heights {
        hq_sq,
        // f and f1 are nonzero for monic input, so both mins are inhabited
        h1_sq: h1_sq.expect("f is nonzero"),
        h2_sq: h2_sq.expect("f1 is nonzero"),
        excluded,
    }
}

fn bounds_from_heights(h: Heights) -> Bounds {
    let general = 1.0 + h.hq();
    let isolated_complex = 1.0 + h.h1();
    // spherical radius is 1 + H2^(1/2) = 1 + (H2^2)^(1/4)
    let h2 = sqrt_upper(&h.h2_sq, 80);
    let spherical = 1.0 + sqrt_f64_up(&h2);
    Bounds {
        heights: h,
        general,
        isolated_complex,
        spherical,
    }
}

/// H(Q), H1, H2 of (the monic normalization of) Q.
pub fn heights(q: &QuatPoly) -> Result<Heights> {
    Ok(heights_prepared(&prepare(q)?))
}

/// The three root-radius bounds for monic Q.
pub fn root_bounds(q: &QuatPoly) -> Result<Bounds> {
    Ok(bounds_from_heights(heights(q)?))
}

fn default_tolerance(h: &Heights, n: usize, opts: &ClassifyOptions) -> f64 {
    opts.tol
        .unwrap_or_else(|| 1e-10 * (1.0 + h.hq()).powi(n as i32))
}

// ---------------------------------------------------------------------------
// Quadratic solver (closed form for the complex-root case)

pub fn solve_quadratic_complex_case(q: &QuatPoly) -> Result<QuadraticSolution> {
    if q.degree() != Some(2) {
        return Err(Error::NonPolynomial("expected a degree-2 polynomial".into()));
    }
    let p = prepare(q)?;
    if p.g.is_zero() {
        return Err(Error::NotQuaternionic);
    }
    if p.d.deg_or_0() > 0 {
        return Err(Error::HasRealFactor);
    }
    // f = t^2 + b1 t + b0, g = c1 t + c0
    let b0 = p.f.coeff(0);
    let b1 = p.f.coeff(1);
    let c0 = p.g.coeff(0);
    let c1 = p.g.coeff(1);
    let cond = c0.mul(&c0).sub(&c0.mul(&b1).mul(&c1)).add(&b0.mul(&c1).mul(&c1));
    if !cond.is_zero() {
        return Err(Error::ConditionFails);
    }
    // these degenerate cases cannot occur once the condition holds
    assert!(!c1.is_zero(), "c1 = 0 would force Q into C[t]");
    assert!(!c0.is_zero(), "c0 = 0 would give Q the real factor t");
    let root_q = c0.mul(&c1.inv().unwrap()).neg();
    let p_const = {
        let complex_part = b0.mul(&c1).mul(&c0.inv().unwrap());
        Quaternion::from_complex_pair(&complex_part, &c1).neg()
    };
    let q_quat = Quaternion::from_complex(&root_q);
    let w = q_quat.sub(&p_const.conj());
    assert!(!Coeff::is_zero(&w), "p = conj(q) cannot occur here");
    let sigma = w.inverse()?.mul(&p_const).mul(&w);
    debug_assert!(p.monic.eval_left(&q_quat).is_zero());
    debug_assert!(p.monic.eval_left(&sigma).is_zero());
    let coincident = sigma == q_quat;
    Ok(QuadraticSolution {
        q: root_q,
        sigma,
        p: p_const,
        coincident,
    })
}

// ---------------------------------------------------------------------------
// Integer-root enumeration

/// All roots of monic Q whose four coordinates are integers. Every root lies
/// strictly inside the ball of radius 1 + H(Q); candidate congruence classes
/// are pruned through the real companion polynomial conj(Q) * Q.
pub fn enumerate_integer_roots(q: &QuatPoly) -> Result<Vec<Quaternion>> {
    let p = prepare(q)?;
    let hq_sq = height_sq_quat_monic(&p.monic);
    // largest integer radius allowed by the strict bound
    let mut cap: i64 = 1 + sqrt_f64_up(&hq_sq).ceil() as i64;
    while cap > 0 && !lt_one_plus_sqrt(&rat_int(cap * cap), &hq_sq) {
        cap -= 1;
    }
    // companion polynomial: conj(Q) Q = f1^2 + f2^2 + g1^2 + g2^2 has real
    // coefficients, and the characteristic quadratic of every root divides it
    let companion = {
        let sq = |r: &RealPoly| r.mul(r);
        sq(&p.f1).add(&sq(&p.f2)).add(&sq(&p.g1)).add(&sq(&p.g2))
    };
    // integer-scaled companion values at small points: if the monic integer
    // quadratic psi divides the companion, psi(x) divides these for every
    // integer x, which prunes nearly all candidate classes cheaply
    let companion_int: Vec<num::BigInt> = {
        let mut l = num::BigInt::from(1);
        for c in companion.coeffs() {
            l = num::Integer::lcm(&l, c.denom());
        }
        companion
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect()
    };
    let eval_int = |x: i64| -> num::BigInt {
        let mut acc = num::BigInt::from(0);
        for c in companion_int.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let samples = [eval_int(0), eval_int(1), eval_int(-1)];
    let survives = |a: i64, s: i64| -> bool {
        for (x, v) in [(0i64, &samples[0]), (1, &samples[1]), (-1, &samples[2])] {
            let psi_x = num::BigInt::from(x * x - 2 * a * x + a * a + s);
            if !num::Zero::is_zero(&(v % &psi_x)) {
                return false;
            }
        }
        true
    };
    let mut out = Vec::new();
    for a in -cap..=cap {
        let qa = Quaternion::from_ints(a, 0, 0, 0);
        if p.monic.eval_left(&qa).is_zero() {
            out.push(qa);
        }
        let mut s: i64 = 1;
        while lt_one_plus_sqrt(&rat_int(a * a + s), &hq_sq) {
            let psi = Poly::new(vec![rat_int(a * a + s), rat_int(-2 * a), rat_int(1)]);
            if survives(a, s) && psi.divides(&companion) {
                let r = (s as f64).sqrt() as i64 + 1;
                for x2 in -r..=r {
                    for x3 in -r..=r {
                        for x4 in -r..=r {
                            if x2 * x2 + x3 * x3 + x4 * x4 != s {
                                continue;
                            }
                            let qq = Quaternion::from_ints(a, x2, x3, x4);
                            if p.monic.eval_left(&qq).is_zero() {
                                out.push(qq);
                            }
                        }
                    }
                }
            }
            s += 1;
        }
    }
    out.sort_by_key(|q| {
        (
            q.x0.to_integer(),
            q.x1.to_integer(),
            q.x2.to_integer(),
            q.x3.to_integer(),
        )
    });
    out.dedup();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Full classification

fn push_check(flags: &mut Vec<ConsistencyFlag>, name: &'static str, ok: bool, detail: String) {
    flags.push(ConsistencyFlag {
        name,
        status: if ok { FlagStatus::Pass } else { FlagStatus::Fail },
        detail,
    });
}

pub fn classify(q: &QuatPoly) -> Result<RootReport> {
    classify_with(q, &ClassifyOptions::default())
}

pub fn classify_with(q: &QuatPoly, opts: &ClassifyOptions) -> Result<RootReport> {
    let p = prepare(q)?;
    let n = p.n;
    let heights = heights_prepared(&p);
    let tol = default_tolerance(&heights, n, opts);
    let bounds = bounds_from_heights(heights);
    let mut flags: Vec<ConsistencyFlag> = Vec::new();

    let input_in_complex_subring = p.g.is_zero();

    // ranks and the two rank/degree identities
    let rank_bez_fg = bezout_matrix(&p.f, &p.g)?.rank();
    let deg_e = p.e.deg_or_0();
    push_check(
        &mut flags,
        "deg_E_rank",
        deg_e == n - rank_bez_fg,
        format!("deg E = {}, n - rank Bez(f,g) = {}", deg_e, n - rank_bez_fg),
    );

    let stack = barnett_stack(&p.f1, &[p.f2.clone(), p.g1.clone(), p.g2.clone()])?;
    let rank_barnett = stack.rank();
    let deg_d = p.d.deg_or_0();
    push_check(
        &mut flags,
        "deg_D_rank",
        deg_d == n - rank_barnett,
        format!(
            "deg D = {}, n - rank B_f1(f2,g1,g2) = {}",
            deg_d,
            n - rank_barnett
        ),
    );

    // E is a right factor of Q
    let (_, rem) = p.monic.right_divide(&lift_complex(&p.e))?;
    push_check(
        &mut flags,
        "E_right_factor",
        rem.is_zero(),
        format!("remainder {}", rem),
    );

    // D divides E
    push_check(
        &mut flags,
        "D_divides_E",
        lift_real(&p.d).divides(&p.e),
        format!("D = {}, E = {}", p.d, p.e),
    );

    // Existence of a complex root: bez(f,g) = 0 iff deg E > 0
    let bez = bezoutian(&p.f, &p.g)?;
    let has_complex = bez.is_zero();
    push_check(
        &mut flags,
        "complex_root_criterion",
        has_complex == (deg_e > 0),
        format!("bez(f,g) = {}, deg E = {}", bez, deg_e),
    );

    // real roots of Q = real roots of D
    let width = rat(1, 1_000_000_000_000);
    let real = real_roots(&p.d, &width);
    let has_real = !real.is_empty();
    let has_spherical = has_spherical_prepared(&p);

    // certified spherical classes are exact results; the numeric root finder
    // only proposes candidates, so the search runs even in exact-only mode
    // and only the uncertified leftovers count as numeric output
    let (spherical, approx_all) = spherical_classes_of_d(&p.d, tol, opts.max_iters)?;
    let (approx_spherical, isolated) = if opts.numeric {
        let iso = isolated_roots_prepared(&p, tol, opts.max_iters)?;
        (approx_all, iso)
    } else {
        (Vec::new(), Vec::new())
    };

    // rank and parity criteria apply only without real roots
    if has_real {
        flags.push(ConsistencyFlag {
            name: "spherical_rank_criterion",
            status: FlagStatus::NotApplicable,
            detail: "Q has a real root; rank equivalence not asserted".into(),
        });
        flags.push(ConsistencyFlag {
            name: "deg_d_parity",
            status: FlagStatus::NotApplicable,
            detail: "Q has a real root".into(),
        });
        flags.push(ConsistencyFlag {
            name: "isolated_equivalence",
            status: FlagStatus::NotApplicable,
            detail: "Q has a real root; equivalence not asserted".into(),
        });
    } else {
        push_check(
        &mut flags,
            "spherical_rank_criterion",
            has_spherical == (n > rank_barnett),
            format!(
                "spherical = {}, n = {}, rank stack = {}",
                has_spherical, n, rank_barnett
            ),
        );
        push_check(
        &mut flags,
            "deg_d_parity",
            deg_d % 2 == 0,
            format!("deg D = {}", deg_d),
        );
        let by_degree = deg_e > deg_d;
        let by_rank = rank_bez_fg < rank_barnett;
        let mut ok = by_degree == by_rank;
        let mut detail = format!("deg E > deg D: {}, rank criterion: {}", by_degree, by_rank);
        if opts.numeric {
            ok = ok && (by_degree == !isolated.is_empty());
            detail.push_str(&format!(", roots found: {}", isolated.len()));
        }
        push_check(&mut flags, "isolated_equivalence", ok, detail);
    }

    // no real factor means only isolated roots
    if deg_d == 0 {
        push_check(
        &mut flags,
            "no_real_factor_isolated_only",
            spherical.is_empty() && approx_spherical.is_empty(),
            "deg D = 0 so no spherical classes may appear".into(),
        );
    }

    // norm bounds on everything we output
    let mut bound_ok = true;
    let mut bound_detail = String::new();
    for rep in &spherical {
        if !lt_one_plus_quartic_root(&rep.norm_sq(), &bounds.heights.h2_sq) {
            bound_ok = false;
            bound_detail.push_str(&format!("spherical class {} exceeds the bound; ", rep));
        }
    }
    for root in &isolated {
        match &root.exact {
            Some(z) => {
                if !lt_one_plus_sqrt(&z.norm_sq(), &bounds.heights.h1_sq) {
                    bound_ok = false;
                    bound_detail.push_str(&format!("isolated root {} exceeds the bound; ", z));
                }
            }
            None => {
                let norm = (root.re * root.re + root.im * root.im).sqrt();
                if norm >= bounds.isolated_complex + 1e-9 {
                    bound_ok = false;
                    bound_detail.push_str("approximate isolated root exceeds the bound; ");
                }
            }
        }
    }
    for r in &real {
        let x_sq = match r {
            RealRoot::Rational(x) => x * x,
            RealRoot::Interval { lo, hi } => {
                let m = lo.abs().max(hi.abs());
                &m * &m
            }
        };
        if !lt_one_plus_sqrt(&x_sq, &bounds.heights.hq_sq) {
            bound_ok = false;
            bound_detail.push_str("real root exceeds the general bound; ");
        }
    }
    push_check(
        &mut flags,
        "root_norm_bounds",
        bound_ok,
        if bound_detail.is_empty() {
            "all output roots inside their radii".into()
        } else {
            bound_detail
        },
    );

    if input_in_complex_subring {
        flags.push(ConsistencyFlag {
            name: "complex_subring_input",
            status: FlagStatus::Warn,
            detail: "Q lies in C[t]; every conjugate of a complex root is also a root".into(),
        });
    }
    if !approx_spherical.is_empty() {
        flags.push(ConsistencyFlag {
            name: "uncertified_spherical_classes",
            status: FlagStatus::Warn,
            detail: format!(
                "{} conjugate pairs could not be certified rational",
                approx_spherical.len()
            ),
        });
    }

    let has_isolated_complex = deg_e > deg_d;
    Ok(RootReport {
        monic_input: p.monic,
        f: p.f,
        g: p.g,
        f1: p.f1,
        f2: p.f2,
        g1: p.g1,
        g2: p.g2,
        e: p.e,
        d: p.d,
        rank_bez_fg,
        rank_barnett,
        has_complex_root: has_complex,
        max_complex_roots: n - rank_bez_fg,
        has_real_root: has_real,
        has_spherical_root: has_spherical,
        has_isolated_complex_root: has_isolated_complex,
        real_roots: real,
        spherical_classes: spherical,
        approx_spherical_classes: approx_spherical,
        isolated_complex_roots: isolated,
        bounds,
        input_in_complex_subring,
        consistency_flags: flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(x0: i64, x1: i64, x2: i64, x3: i64) -> Quaternion {
        Quaternion::from_ints(x0, x1, x2, x3)
    }

    fn qp(coeffs: &[Quaternion]) -> QuatPoly {
        Poly::new(coeffs.to_vec())
    }

    /// t^2 - (i+j) t - k
    fn example_quadratic() -> QuatPoly {
        qp(&[qi(0, 0, 0, -1), qi(0, -1, -1, 0), qi(1, 0, 0, 0)])
    }

    /// t^3 - k t^2 + t - k = (t^2+1)(t-k)
    fn example_cubic() -> QuatPoly {
        qp(&[
            qi(0, 0, 0, -1),
            qi(1, 0, 0, 0),
            qi(0, 0, 0, -1),
            qi(1, 0, 0, 0),
        ])
    }

    /// t^2 - (1+2i+j) t + (i-1-k) = (t-(1+i+j))(t-i)
    fn example_constructed() -> QuatPoly {
        qp(&[qi(-1, 1, 0, -1), qi(-1, -2, -1, 0), qi(1, 0, 0, 0)])
    }

    fn gauss(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(rat_int(re), rat_int(im))
    }

    #[test]
    fn compute_e_examples() {
        let e = compute_e(&example_quadratic()).unwrap();
        assert_eq!(e, Poly::new(vec![gauss(0, -1), gauss(1, 0)])); // t - i
        let e = compute_e(&example_cubic()).unwrap();
        assert_eq!(
            e,
            Poly::new(vec![gauss(1, 0), gauss(0, 0), gauss(1, 0)])
        ); // t^2 + 1
        let tk = qp(&[qi(0, 0, 0, -1), qi(1, 0, 0, 0)]);
        assert_eq!(compute_e(&tk).unwrap().deg_or_0(), 0);
    }

    #[test]
    fn compute_d_examples() {
        let d = compute_d(&example_cubic()).unwrap();
        assert_eq!(d, Poly::new(vec![rat_int(1), rat_int(0), rat_int(1)]));
        let d = compute_d(&example_quadratic()).unwrap();
        assert_eq!(d.deg_or_0(), 0);
        // (t-1)(t-k) = t^2 - (1+k) t + k -> D = t - 1
        let p = qp(&[qi(0, 0, 0, 1), qi(-1, 0, 0, -1), qi(1, 0, 0, 0)]);
        assert_eq!(
            compute_d(&p).unwrap(),
            Poly::new(vec![rat_int(-1), rat_int(1)])
        );
    }

    #[test]
    fn predicates() {
        assert!(has_complex_root(&example_quadratic()).unwrap());
        assert!(has_complex_root(&example_cubic()).unwrap());
        let tk = qp(&[qi(0, 0, 0, -1), qi(1, 0, 0, 0)]);
        assert!(!has_complex_root(&tk).unwrap());
        assert_eq!(max_complex_roots(&example_quadratic()).unwrap(), 1);
        assert_eq!(max_complex_roots(&example_cubic()).unwrap(), 2);
        assert_eq!(max_complex_roots(&tk).unwrap(), 0);
        assert!(has_spherical_root(&example_cubic()).unwrap());
        assert!(!has_spherical_root(&example_quadratic()).unwrap());
        assert!(!has_spherical_root(&tk).unwrap());
    }

    #[test]
    fn spherical_class_examples() {
        let classes = spherical_classes(&example_cubic()).unwrap();
        assert_eq!(
            classes,
            vec![SphericalClassRep::new(rat_int(0), rat_int(1))]
        );
        assert!(spherical_classes(&example_quadratic()).unwrap().is_empty());
        // (t^2 - 2t + 2)(t - j) -> class (1, 1)
        let real_quad = qp(&[qi(2, 0, 0, 0), qi(-2, 0, 0, 0), qi(1, 0, 0, 0)]);
        let lin = qp(&[qi(0, 0, -1, 0), qi(1, 0, 0, 0)]);
        let p = real_quad.mul(&lin);
        assert_eq!(
            spherical_classes(&p).unwrap(),
            vec![SphericalClassRep::new(rat_int(1), rat_int(1))]
        );
    }

    #[test]
    fn isolated_root_examples() {
        let iso = isolated_complex_roots(&example_quadratic()).unwrap();
        assert_eq!(iso.len(), 1);
        assert_eq!(iso[0].exact, Some(GaussianRational::i()));
        assert!(isolated_complex_roots(&example_cubic()).unwrap().is_empty());
        let iso = isolated_complex_roots(&example_constructed()).unwrap();
        assert_eq!(iso.len(), 1);
        assert_eq!(iso[0].exact, Some(GaussianRational::i()));
    }

    #[test]
    fn quadratic_solver_worked_examples() {
        let sol = solve_quadratic_complex_case(&example_quadratic()).unwrap();
        assert_eq!(sol.q, GaussianRational::i());
        assert_eq!(sol.p, qi(0, 0, 1, 0));
        assert_eq!(sol.sigma, qi(0, 1, 0, 0));
        assert!(sol.coincident);

        let sol = solve_quadratic_complex_case(&example_constructed()).unwrap();
        assert_eq!(sol.q, GaussianRational::i());
        assert_eq!(sol.p, qi(1, 1, 1, 0));
        assert_eq!(
            sol.sigma,
            Quaternion::new(rat_int(1), rat(4, 3), rat(1, 3), rat(1, 3))
        );
        assert!(!sol.coincident);
        // sigma is congruent to p
        assert!(sol.sigma.congruent(&sol.p));

        // t^2 + 1 + k: R(f,g) = 1, no complex root
        let p = qp(&[qi(1, 0, 0, 1), qi(0, 0, 0, 0), qi(1, 0, 0, 0)]);
        assert_eq!(solve_quadratic_complex_case(&p), Err(Error::ConditionFails));

        // complex input rejected
        let p = qp(&[qi(1, 0, 0, 0), qi(0, 1, 0, 0), qi(1, 0, 0, 0)]);
        assert_eq!(
            solve_quadratic_complex_case(&p),
            Err(Error::NotQuaternionic)
        );

        // real factor rejected: (t-1)(t-k)
        let p = qp(&[qi(0, 0, 0, 1), qi(-1, 0, 0, -1), qi(1, 0, 0, 0)]);
        assert_eq!(solve_quadratic_complex_case(&p), Err(Error::HasRealFactor));
    }

    #[test]
    fn heights_worked_example() {
        let h = heights(&example_constructed()).unwrap();
        assert_eq!(h.hq_sq, rat_int(6));
        assert_eq!(h.h1_sq, rat_int(1)); // H(g) = 1 with g = -i t - 1
        let b = root_bounds(&example_constructed()).unwrap();
        assert!((b.general - (1.0 + 6f64.sqrt())).abs() < 1e-9);
        assert!((b.isolated_complex - 2.0).abs() < 1e-12);

        // t - k: all heights 1
        let tk = qp(&[qi(0, 0, 0, -1), qi(1, 0, 0, 0)]);
        let h = heights(&tk).unwrap();
        assert_eq!(h.hq_sq, rat_int(1));
        assert_eq!(h.h1_sq, rat_int(1));
    }

    #[test]
    fn integer_roots_examples() {
        // t - (1+i+j+k)
        let p = qp(&[qi(-1, -1, -1, -1), qi(1, 0, 0, 0)]);
        assert_eq!(enumerate_integer_roots(&p).unwrap(), vec![qi(1, 1, 1, 1)]);

        // t^2 + 1: the whole sphere of roots; six integer lattice points
        let p = qp(&[qi(1, 0, 0, 0), qi(0, 0, 0, 0), qi(1, 0, 0, 0)]);
        let roots = enumerate_integer_roots(&p).unwrap();
        assert_eq!(roots.len(), 6);
        assert!(roots.contains(&qi(0, 1, 0, 0)));
        assert!(roots.contains(&qi(0, -1, 0, 0)));
        assert!(roots.contains(&qi(0, 0, 1, 0)));
        assert!(roots.contains(&qi(0, 0, 0, -1)));

        // t^2 - (i+j) t - k: only root is i
        let roots = enumerate_integer_roots(&example_quadratic()).unwrap();
        assert_eq!(roots, vec![qi(0, 1, 0, 0)]);
    }

    #[test]
    fn real_root_isolation() {
        // (t - 1/3)(t^2 - 2) has rational root 1/3 and irrational +-sqrt(2)
        let p: RealPoly = Poly::new(vec![rat(2, 3), rat_int(-2), rat(-1, 3), rat_int(1)]);
        let roots = real_roots(&p, &rat(1, 1_000_000_000_000));
        assert_eq!(roots.len(), 3);
        let mut rational_found = 0;
        let mut intervals = 0;
        for r in &roots {
            match r {
                RealRoot::Rational(x) => {
                    assert_eq!(*x, rat(1, 3));
                    rational_found += 1;
                }
                RealRoot::Interval { lo, hi } => {
                    let sqrt2 = 2f64.sqrt();
                    let lo = num::ToPrimitive::to_f64(lo).unwrap();
                    let hi = num::ToPrimitive::to_f64(hi).unwrap();
                    assert!(hi - lo < 1e-11);
                    assert!(
                        (lo <= sqrt2 && sqrt2 <= hi) || (lo <= -sqrt2 && -sqrt2 <= hi)
                    );
                    intervals += 1;
                }
            }
        }
        assert_eq!(rational_found, 1);
        assert_eq!(intervals, 2);
    }

    #[test]
    fn classify_worked_examples() {
        let r = classify(&example_quadratic()).unwrap();
        assert!(r.has_complex_root);
        assert!(!r.has_real_root);
        assert!(!r.has_spherical_root);
        assert!(r.has_isolated_complex_root);
        assert_eq!(r.isolated_complex_roots.len(), 1);
        assert!(r.spherical_classes.is_empty());
        assert!(r.all_checks_pass());

        let r = classify(&example_cubic()).unwrap();
        assert!(!r.has_real_root);
        assert!(r.has_spherical_root);
        assert!(!r.has_isolated_complex_root);
        assert_eq!(
            r.spherical_classes,
            vec![SphericalClassRep::new(rat_int(0), rat_int(1))]
        );
        assert!(r.isolated_complex_roots.is_empty());
        assert!(r.all_checks_pass());

        // (t-1)(t-k): real root 1, rank equivalences not applicable
        let p = qp(&[qi(0, 0, 0, 1), qi(-1, 0, 0, -1), qi(1, 0, 0, 0)]);
        let r = classify(&p).unwrap();
        assert!(r.has_real_root);
        assert_eq!(r.real_roots, vec![RealRoot::Rational(rat_int(1))]);
        assert!(r
            .consistency_flags
            .iter()
            .any(|f| f.name == "spherical_rank_criterion" && f.status == FlagStatus::NotApplicable));
        assert!(r.all_checks_pass());
    }

    #[test]
    fn classify_no_numeric_agrees_on_exact_fields() {
        let opts = ClassifyOptions {
            numeric: false,
            ..Default::default()
        };
        let full = classify(&example_quadratic()).unwrap();
        let exact = classify_with(&example_quadratic(), &opts).unwrap();
        assert_eq!(full.e, exact.e);
        assert_eq!(full.d, exact.d);
        assert_eq!(full.rank_bez_fg, exact.rank_bez_fg);
        assert_eq!(full.rank_barnett, exact.rank_barnett);
        assert_eq!(full.has_complex_root, exact.has_complex_root);
        assert_eq!(full.has_spherical_root, exact.has_spherical_root);
        assert_eq!(full.has_real_root, exact.has_real_root);
        assert!(exact.isolated_complex_roots.is_empty());
    }

    #[test]
    fn classify_scaling_invariance() {
        // classify(c Q) matches classify(Q) after normalization
        let c = qi(2, -1, 3, 1);
        let scaled = example_cubic().scale_left(&c);
        let a = classify(&example_cubic()).unwrap();
        let b = classify(&scaled).unwrap();
        assert_eq!(a.monic_input, b.monic_input);
        assert_eq!(a.e, b.e);
        assert_eq!(a.d, b.d);
        assert_eq!(a.spherical_classes, b.spherical_classes);
    }

    #[test]
    fn classify_rejects_constants() {
        let p = qp(&[qi(3, 0, 0, 0)]);
        assert_eq!(classify(&p).unwrap_err(), Error::DegreeZero);
    }

    #[test]
    fn quartic_root_bound_comparison() {
        // sqrt(2) < 1 + 16^(1/4) = 3
        assert!(lt_one_plus_quartic_root(&rat_int(2), &rat_int(16)));
        // sqrt(16) = 4 < 1 + 1^(1/4) = 2 is false
        assert!(!lt_one_plus_quartic_root(&rat_int(16), &rat_int(1)));
    }
}
