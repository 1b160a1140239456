//! Dense univariate polynomials with rational coefficients, lowest degree first.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::num::{rat, Rat};

pub type Poly = Vec<Rat>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn mul(a: &[Rat], b: &[Rat]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn div_rem(a: &[Rat], b: &[Rat]) -> Result<(Poly, Poly)> {
    let db = degree(b).ok_or(Error::ZeroDivision)?;
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let lead = b[db].clone();
    let mut q = vec![Rat::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        for (i, bc) in b[..=db].iter().enumerate() {
            r[dr - db + i] -= &c * bc;
        }
        q[dr - db] = c;
        trim(&mut r);
    }
    trim(&mut q);
    Ok((q, r))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let big: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|&e| e * e != n).collect();
    out.extend(big);
    out
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u64) -> Poly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p: Poly = vec![Rat::zero(); n as usize + 1];
    p[0] = rat(-1);
    p[n as usize] = rat(1);
    for d in divisors(n) {
        if d < n {
            p = div_rem(&p, &cyclotomic(d)).expect("nonzero divisor").0;
        }
    }
    p
}

/// Characteristic polynomial `det(x I - M)` by the Faddeev-LeVerrier recursion.
pub fn char_poly(m: &ExactMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut mk = ExactMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
        let mut inner = mk.clone();
        for i in 0..n {
            inner[(i, i)] += &coeffs[n - k + 1];
        }
        mk = m.try_mul(&inner)?;
        let tr: Rat = (0..n).map(|i| mk[(i, i)].clone()).sum();
        coeffs[n - k] = -tr / rat(k as i64);
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(15).len() as u64 - 1, euler_phi(15));
    }

    #[test]
    fn char_poly_examples() {
        let m = ExactMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(char_poly(&m).unwrap(), p(&[-1, 0, 0, 1]));
        assert_eq!(char_poly(&ExactMatrix::identity(2)).unwrap(), p(&[1, -2, 1]));
    }

    #[test]
    fn division() {
        let (q, r) = div_rem(&p(&[-1, 0, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_empty());
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
