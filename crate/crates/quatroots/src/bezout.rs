//! Bezout matrices, Bezoutians, Sylvester resultants, Barnett stacked
//! matrices and exact rank over commutative coefficient fields.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::CommutativeCoeff;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix<T> {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<T>,
}

impl<T: CommutativeCoeff> ExactMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Stacks matrices vertically; all blocks must share the column count.
    pub fn vstack(blocks: &[ExactMatrix<T>]) -> Self {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            entries.extend_from_slice(&b.entries);
        }
        ExactMatrix::new(rows, cols, entries)
    }

    /// Rank via exact row reduction. The pivot is the first nonzero entry
    /// scanning columns left to right; pivot choice does not affect rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m.get(r, col).is_zero());
            let pr = match pivot {
                Some(pr) => pr,
                None => continue,
            };
            m.swap_rows(rank, pr);
            let inv = m.get(rank, col).inv().expect("nonzero pivot");
            for r in (rank + 1)..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).mul(&inv);
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(rank, c)));
                    m.set(r, c, v);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Determinant by fraction-free (Bareiss) elimination; a code path
    /// independent of `rank` so the resultant identity stays a cross-check.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match ((k + 1)..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            let prev_inv = prev.inv().expect("previous pivot nonzero");
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = m
                        .get(k, k)
                        .mul(m.get(i, j))
                        .sub(&m.get(i, k).mul(m.get(k, j)));
                    m.set(i, j, num.mul(&prev_inv));
                }
            }
            prev = m.get(k, k).clone();
        }
        let det = m.get(n - 1, n - 1).clone();
        if negate {
            det.neg()
        } else {
            det
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Bezout matrix of P and Q: the d x d matrix (c_{i,j}) of coefficients of
/// the Cayley quotient (P(x)Q(y) - P(y)Q(x)) / (x - y), d = max(deg P, deg Q).
///
/// One of P, Q may be zero (the matrix is then zero), not both.
pub fn bezout_matrix<T: CommutativeCoeff>(p: &Poly<T>, q: &Poly<T>) -> Result<ExactMatrix<T>> {
    bezout_matrix_sized(p, q, None)
}

/// Same, but with the dimension forced to `d` (used by the Barnett stack,
/// where every block must be n x n with n = deg P).
fn bezout_matrix_sized<T: CommutativeCoeff>(
    p: &Poly<T>,
    q: &Poly<T>,
    forced_d: Option<usize>,
) -> Result<ExactMatrix<T>> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::DegreeTooSmall);
    }
    let d = forced_d.unwrap_or_else(|| p.deg_or_0().max(q.deg_or_0()));
    if d < 1 {
        return Err(Error::DegreeTooSmall);
    }
    // Numerator as a polynomial in x with coefficients in F[y]:
    //   N_i(y) = p_i Q(y) - q_i P(y).
    // Synthetic division by (x - y) over F[y]:
    //   C_{d-1} = N_d,   C_i = N_{i+1} + y C_{i+1}.
    let coeff_poly = |i: usize| -> Poly<T> {
        let pi = p.coeff(i);
        let qi = q.coeff(i);
        q.scale_left(&pi).sub(&p.scale_left(&qi))
    };
    let mut rows: Vec<Poly<T>> = vec![Poly::zero(); d];
    rows[d - 1] = coeff_poly(d);
    for i in (0..d - 1).rev() {
        let shifted = rows[i + 1].mul(&Poly::var());
        rows[i] = coeff_poly(i + 1).add(&shifted);
    }
    debug_assert!(coeff_poly(0).add(&rows[0].mul(&Poly::var())).is_zero());
    let mut m = ExactMatrix::zeros(d, d);
    for (i, row) in rows.iter().enumerate() {
        for j in 0..d {
            m.set(i, j, row.coeff(j));
        }
    }
    Ok(m)
}

/// Determinant of the Bezout matrix.
pub fn bezoutian<T: CommutativeCoeff>(p: &Poly<T>, q: &Poly<T>) -> Result<T> {
    Ok(bezout_matrix(p, q)?.determinant())
}

/// Sylvester resultant R(P, Q), the determinant of the (deg P + deg Q)
/// Sylvester matrix. R(P, c) = c^{deg P} for constant c.
pub fn sylvester_resultant<T: CommutativeCoeff>(p: &Poly<T>, q: &Poly<T>) -> Result<T> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let m = q.degree().ok_or(Error::ZeroPolynomial)?;
    let size = n + m;
    if size == 0 {
        return Ok(T::one());
    }
    let mut mat = ExactMatrix::zeros(size, size);
    // m rows of P coefficients (descending), then n rows of Q coefficients
    for r in 0..m {
        for (s, c) in (0..=n).map(|s| (s, p.coeff(n - s))) {
            mat.set(r, r + s, c);
        }
    }
    for r in 0..n {
        for (s, c) in (0..=m).map(|s| (s, q.coeff(m - s))) {
            mat.set(m + r, r + s, c);
        }
    }
    Ok(mat.determinant())
}

/// The stacked Barnett matrix B_P(Q1, ..., Qk): vertical stack of the n x n
/// Bezout matrices Bez(P, Qj). Zero Qj contribute zero blocks.
pub fn barnett_stack<T: CommutativeCoeff>(
    p: &Poly<T>,
    qs: &[Poly<T>],
) -> Result<ExactMatrix<T>> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 1 {
        return Err(Error::DegreeTooSmall);
    }
    assert!(!qs.is_empty());
    let mut blocks = Vec::with_capacity(qs.len());
    for (idx, q) in qs.iter().enumerate() {
        if let Some(dq) = q.degree() {
            if dq >= n {
                return Err(Error::DegreeViolation {
                    index: idx + 1,
                    found: dq,
                    bound: n - 1,
                });
            }
        }
        if q.is_zero() {
            blocks.push(ExactMatrix::zeros(n, n));
        } else {
            blocks.push(bezout_matrix_sized(p, q, Some(n))?);
        }
    }
    Ok(ExactMatrix::vstack(&blocks))
}

/// Barnett's degree formula: deg gcd(P, Q1, ..., Qk) = n - rank B_P(Q1..Qk).
pub fn gcd_degree_barnett<T: CommutativeCoeff>(p: &Poly<T>, qs: &[Poly<T>]) -> Result<usize> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(n - barnett_stack(p, qs)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Coeff, GaussianRational, Rational};

    fn rp(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn gp(cs: &[(i64, i64)]) -> Poly<GaussianRational> {
        Poly::new(
            cs.iter()
                .map(|&(re, im)| GaussianRational::new(rat_int(re), rat_int(im)))
                .collect(),
        )
    }

    #[test]
    fn bezout_examples() {
        // P = t, Q = 1 -> [1]
        let m = bezout_matrix(&rp(&[0, 1]), &rp(&[1])).unwrap();
        assert_eq!((m.rows, m.cols), (1, 1));
        assert_eq!(*m.get(0, 0), rat_int(1));

        // P = t^2 - i t, Q = -i t - 1 -> [[i, -1], [-1, -i]]
        let p = gp(&[(0, 0), (0, -1), (1, 0)]);
        let q = gp(&[(-1, 0), (0, -1)]);
        let m = bezout_matrix(&p, &q).unwrap();
        let i = GaussianRational::i();
        assert_eq!(*m.get(0, 0), i);
        assert_eq!(*m.get(0, 1), GaussianRational::one().neg());
        assert_eq!(*m.get(1, 0), GaussianRational::one().neg());
        assert_eq!(*m.get(1, 1), i.neg());
        assert_eq!(m.rank(), 1);
        assert!(m.determinant().is_zero());

        // P = t^3 + t, Q = -t^2 - 1 -> [[-1,0,-1],[0,0,0],[-1,0,-1]]
        let m = bezout_matrix(&rp(&[0, 1, 0, 1]), &rp(&[-1, 0, -1])).unwrap();
        let expect = [[-1, 0, -1], [0, 0, 0], [-1, 0, -1]];
        for (r, row) in expect.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(*m.get(r, c), rat_int(v));
            }
        }
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn bezout_symmetry() {
        let p = rp(&[3, -1, 4, 2]);
        let q = rp(&[2, 7, -5]);
        let m = bezout_matrix(&p, &q).unwrap();
        for r in 0..m.rows {
            for c in 0..m.cols {
                assert_eq!(m.get(r, c), m.get(c, r));
            }
        }
    }

    #[test]
    fn resultant_quadratic_linear() {
        // R(t^2 + b1 t + b0, c1 t + c0) = c0^2 - c0 b1 c1 + b0 c1^2
        let (b0, b1, c0, c1) = (rat_int(3), rat_int(-2), rat_int(5), rat_int(7));
        let f = Poly::new(vec![b0.clone(), b1.clone(), rat_int(1)]);
        let g = Poly::new(vec![c0.clone(), c1.clone()]);
        let r = sylvester_resultant(&f, &g).unwrap();
        assert_eq!(r, &c0 * &c0 - &c0 * &b1 * &c1 + &b0 * &c1 * &c1);

        // f = t^2 - i t, g = -i t - 1 -> 0
        let f = gp(&[(0, 0), (0, -1), (1, 0)]);
        let g = gp(&[(-1, 0), (0, -1)]);
        assert!(sylvester_resultant(&f, &g).unwrap().is_zero());

        // R(P, 1) = 1
        let p = rp(&[1, 2, 3]);
        assert_eq!(sylvester_resultant(&p, &rp(&[1])).unwrap(), rat_int(1));
    }

    #[test]
    fn bezout_resultant_identity_small() {
        // bez(P,Q) = (-1)^{n(n-1)/2} p0^{n-m} R(P,Q); P = t^2+1, Q = t
        let p = rp(&[1, 0, 1]);
        let q = rp(&[0, 1]);
        let bez = bezoutian(&p, &q).unwrap();
        let r = sylvester_resultant(&p, &q).unwrap();
        assert_eq!(bez, -r);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::<Rational>::zeros(3, 3).rank(), 0);
        let m = ExactMatrix::new(
            2,
            2,
            vec![rat_int(0), rat_int(1), rat_int(1), rat_int(1)],
        );
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn barnett_examples() {
        // P = t^3 + t, Qs = (0, -t^2-1, 0) -> 9x3 with one nonzero block
        let p = rp(&[0, 1, 0, 1]);
        let qs = [rp(&[]), rp(&[-1, 0, -1]), rp(&[])];
        let m = barnett_stack(&p, &qs).unwrap();
        assert_eq!((m.rows, m.cols), (9, 3));
        assert_eq!(m.rank(), 1);
        assert_eq!(gcd_degree_barnett(&p, &qs).unwrap(), 2);

        // single block equals Bez(P, Q1)
        let q1 = rp(&[-1, 0, -1]);
        let single = barnett_stack(&p, std::slice::from_ref(&q1)).unwrap();
        assert_eq!(single, bezout_matrix(&p, &q1).unwrap());

        // P = t^2 - it, Qs = (-it - 1) -> rank 1, gcd degree 1
        let p = gp(&[(0, 0), (0, -1), (1, 0)]);
        let q = gp(&[(-1, 0), (0, -1)]);
        assert_eq!(gcd_degree_barnett(&p, &[q]).unwrap(), 1);

        // coprime: P = t^2, Qs = (t + 1) -> gcd degree 0
        let p = rp(&[0, 0, 1]);
        assert_eq!(gcd_degree_barnett(&p, &[rp(&[1, 1])]).unwrap(), 0);

        // degree violation
        let p = rp(&[0, 1]);
        let too_big = rp(&[0, 0, 1]);
        assert!(matches!(
            barnett_stack(&p, &[too_big]),
            Err(Error::DegreeViolation { .. })
        ));
    }
}
