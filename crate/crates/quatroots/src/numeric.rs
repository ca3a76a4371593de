//! Floating-point extraction of all complex roots of exact polynomials via
//! Aberth-Ehrlich simultaneous iteration, with a posteriori residual bounds
//! and conjugate pairing for real-coefficient inputs.

use num::complex::Complex64;
use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::{ComplexPoly, RealPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxRoot {
    pub re: f64,
    pub im: f64,
    /// Upper bound on |p(root)| from a running-error Horner evaluation.
    pub residual_bound: f64,
    pub multiplicity_hint: usize,
}

impl ApproxRoot {
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

fn to_c64(p: &ComplexPoly) -> Vec<Complex64> {
    p.coeffs()
        .iter()
        .map(|c| {
            let (re, im) = c.to_f64();
            Complex64::new(re, im)
        })
        .collect()
}

fn eval_horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    // returns (p(z), p'(z))
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// |p(z)| plus a standard running-error bound for Horner in f64.
fn residual_bound(coeffs: &[Complex64], z: Complex64) -> f64 {
    let az = z.norm();
    let mut p = Complex64::new(0.0, 0.0);
    let mut magnitude_sum = 0.0;
    for c in coeffs.iter().rev() {
        p = p * z + c;
        magnitude_sum = magnitude_sum * az + c.norm();
    }
    let n = coeffs.len() as f64;
    p.norm() + 4.0 * n * f64::EPSILON * magnitude_sum
}

/// Numeric height: max(1, |c_i / lead|).
fn height_f64(coeffs: &[Complex64]) -> f64 {
    let lead = coeffs.last().unwrap().norm();
    coeffs
        .iter()
        .map(|c| c.norm() / lead)
        .fold(1.0_f64, f64::max)
}

/// All deg(p) complex roots by Aberth-Ehrlich iteration from deterministic
/// initial points on a circle of radius 1 + height(p). Bit-deterministic for
/// identical inputs.
pub fn all_complex_roots(p: &ComplexPoly, tol: f64, max_iters: usize) -> Result<Vec<ApproxRoot>> {
    let n = p.degree().expect("nonzero polynomial");
    assert!(n >= 1, "degree must be at least 1");
    assert!(tol > 0.0, "tolerance must be positive");
    let coeffs = to_c64(p);
    let radius = 1.0 + height_f64(&coeffs);

    // fixed irrational angular offset so symmetric inputs do not stall
    let offset = 0.4f64;
    let mut roots: Vec<Complex64> = (0..n)
        .map(|m| {
            let theta = 2.0 * std::f64::consts::PI * (m as f64) / (n as f64) + offset;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let mut converged = false;
    for _ in 0..max_iters {
        let mut max_step = 0.0_f64;
        for m in 0..n {
            let z = roots[m];
            let (pv, dv) = eval_horner(&coeffs, z);
            if pv.norm() == 0.0 {
                continue;
            }
            let w = if dv.norm() > 0.0 {
                pv / dv
            } else {
                // flat derivative: fall back to a small outward push
                Complex64::new(1e-8, 1e-8)
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for l in 0..n {
                if l != m {
                    let d = z - roots[l];
                    if d.norm() > 0.0 {
                        repulsion += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * repulsion;
            let step = if denom.norm() > 0.0 { w / denom } else { w };
            roots[m] = z - step;
            let rel = step.norm() / (1.0 + roots[m].norm());
            max_step = max_step.max(rel);
        }
        if max_step < 1e-16 {
            converged = true;
            break;
        }
    }
    if !converged {
        // accept anyway if every residual already clears the tolerance
        let ok = roots.iter().all(|&z| residual_bound(&coeffs, z) <= tol);
        if !ok {
            return Err(Error::NoConvergence { iters: max_iters });
        }
    }

    let mut out: Vec<ApproxRoot> = roots
        .iter()
        .map(|&z| ApproxRoot {
            re: z.re,
            im: z.im,
            residual_bound: residual_bound(&coeffs, z),
            multiplicity_hint: 1,
        })
        .collect();
    if let Some(bad) = out.iter().find(|r| r.residual_bound > tol) {
        let _ = bad;
        return Err(Error::NoConvergence { iters: max_iters });
    }

    // cluster nearby roots for a multiplicity hint
    let cluster_eps = 1e-6 * radius;
    for m in 0..out.len() {
        let zm = out[m].as_complex();
        out[m].multiplicity_hint = out
            .iter()
            .filter(|r| (r.as_complex() - zm).norm() < cluster_eps)
            .count();
    }

    out.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(out)
}

/// Outcome of conjugate pairing for roots of a real polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugatePairing {
    /// One entry per conjugate pair, as (re, im) with im > 0.
    pub pairs: Vec<(f64, f64)>,
    pub real_roots: Vec<f64>,
}

/// Matches roots of a real-coefficient polynomial into conjugate pairs.
/// Roots with |im| below an input-scaled threshold count as real.
pub fn pair_conjugates(roots: &[ApproxRoot], p: &RealPoly) -> Result<ConjugatePairing> {
    let radius = 1.0
        + p.coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY).abs())
            .fold(1.0_f64, f64::max);
    let threshold = 1e-8 * radius;

    let mut real_roots = Vec::new();
    let mut ups: Vec<Complex64> = Vec::new();
    let mut downs: Vec<Complex64> = Vec::new();
    for r in roots {
        if r.im.abs() <= threshold {
            real_roots.push(r.re);
        } else if r.im > 0.0 {
            ups.push(r.as_complex());
        } else {
            downs.push(r.as_complex());
        }
    }

    let mut pairs = Vec::with_capacity(ups.len());
    for &u in &ups {
        if downs.is_empty() {
            return Err(Error::PairingAmbiguity { re: u.re, im: u.im });
        }
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        let mut second_d = f64::INFINITY;
        for (idx, &d) in downs.iter().enumerate() {
            let dist = (u.conj() - d).norm();
            if dist < best_d {
                second_d = best_d;
                best_d = dist;
                best = idx;
            } else if dist < second_d {
                second_d = dist;
            }
        }
        if second_d - best_d < 1e-14 * radius && downs.len() > 1 {
            // a genuine tie: two conjugate candidates at the same distance
            // only matters when the candidates themselves differ
            let tied: Vec<_> = downs
                .iter()
                .filter(|&&d| ((u.conj() - d).norm() - best_d).abs() < 1e-14 * radius)
                .collect();
            if tied.len() > 1 && tied.windows(2).any(|w| (*w[0] - *w[1]).norm() > threshold) {
                return Err(Error::PairingAmbiguity { re: u.re, im: u.im });
            }
        }
        let d = downs.remove(best);
        let re = 0.5 * (u.re + d.re);
        let im = 0.5 * (u.im - d.im);
        pairs.push((re, im));
    }
    // leftover downs (threshold asymmetry) are treated as real roots
    for d in downs {
        real_roots.push(d.re);
    }
    real_roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pairs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(ConjugatePairing { pairs, real_roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{lift_real, Poly};
    use crate::scalar::{rat_int, GaussianRational};

    fn gp(cs: &[(i64, i64)]) -> ComplexPoly {
        Poly::new(
            cs.iter()
                .map(|&(re, im)| GaussianRational::new(rat_int(re), rat_int(im)))
                .collect(),
        )
    }

    fn rp(cs: &[i64]) -> RealPoly {
        Poly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn roots_of_t2_plus_1() {
        let roots = all_complex_roots(&gp(&[(1, 0), (0, 0), (1, 0)]), 1e-12, 200).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].re.abs()) < 1e-12 && (roots[0].im + 1.0).abs() < 1e-12);
        assert!((roots[1].re.abs()) < 1e-12 && (roots[1].im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn linear_exact() {
        let roots = all_complex_roots(&gp(&[(0, -1), (1, 0)]), 1e-12, 200).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].re).abs() < 1e-15 && (roots[0].im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn planted_pair() {
        // (t - i)(t - (2+3i)) = t^2 - (2+4i)t + (-3+2i)
        let p = gp(&[(-3, 2), (-2, -4), (1, 0)]);
        let roots = all_complex_roots(&p, 1e-10, 500).unwrap();
        assert_eq!(roots.len(), 2);
        let a = roots[0].as_complex();
        let b = roots[1].as_complex();
        assert!((a - Complex64::new(0.0, 1.0)).norm() < 1e-10);
        assert!((b - Complex64::new(2.0, 3.0)).norm() < 1e-10);
    }

    #[test]
    fn determinism() {
        let p = gp(&[(5, -3), (2, 1), (-4, 0), (1, 0)]);
        let a = all_complex_roots(&p, 1e-10, 500).unwrap();
        let b = all_complex_roots(&p, 1e-10, 500).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pairing_examples() {
        let p = rp(&[1, 0, 1]);
        let roots = all_complex_roots(&lift_real(&p), 1e-12, 200).unwrap();
        let pairing = pair_conjugates(&roots, &p).unwrap();
        assert_eq!(pairing.pairs.len(), 1);
        assert!(pairing.pairs[0].0.abs() < 1e-12);
        assert!((pairing.pairs[0].1 - 1.0).abs() < 1e-12);
        assert!(pairing.real_roots.is_empty());

        // (t^2+1)(t^2-2t+2) -> pairs (0,1) and (1,1)
        let p = rp(&[2, -2, 3, -2, 1]);
        let roots = all_complex_roots(&lift_real(&p), 1e-10, 500).unwrap();
        let pairing = pair_conjugates(&roots, &p).unwrap();
        assert_eq!(pairing.pairs.len(), 2);
        assert!(pairing.pairs[0].0.abs() < 1e-9 && (pairing.pairs[0].1 - 1.0).abs() < 1e-9);
        assert!((pairing.pairs[1].0 - 1.0).abs() < 1e-9 && (pairing.pairs[1].1 - 1.0).abs() < 1e-9);

        // t - 1 -> a single real root
        let p = rp(&[-1, 1]);
        let roots = all_complex_roots(&lift_real(&p), 1e-12, 200).unwrap();
        let pairing = pair_conjugates(&roots, &p).unwrap();
        assert!(pairing.pairs.is_empty());
        assert_eq!(pairing.real_roots.len(), 1);
        assert!((pairing.real_roots[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn residuals_are_certified() {
        let p = gp(&[(-3, 2), (-2, -4), (1, 0)]);
        let roots = all_complex_roots(&p, 1e-10, 500).unwrap();
        for r in &roots {
            assert!(r.residual_bound <= 1e-10);
        }
    }
}
