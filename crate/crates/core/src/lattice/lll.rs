//! Integral LLL reduction (δ = 3/4) acting directly on an integer Gram matrix.
//!
//! This is the fraction-free variant: instead of the Gram–Schmidt
//! coefficients it keeps the integers `d_i` (leading principal minors) and
//! `λ_ij = d_j μ_ij`, so every intermediate value is exact.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::normal_form::IntRows;
use crate::num::Int;

struct State {
    g: IntRows,
    h: IntRows,
    d: Vec<Int>,      // d[0] = 1, d[i] for i = 1..=n (1-based)
    lam: Vec<Vec<Int>>, // lam[k][j], 1-based, j < k
}

fn round_div(a: &Int, b: &Int) -> Int {
    // nearest integer to a / b, b > 0
    let two = Int::from(2);
    (&two * a + b).div_floor(&(&two * b))
}

impl State {
    fn red(&mut self, k: usize, l: usize) {
        let dl = &self.d[l];
        if (&self.lam[k][l] * Int::from(2)).abs() <= *dl {
            return;
        }
        let q = round_div(&self.lam[k][l], dl);
        let (k0, l0) = (k - 1, l - 1);
        let n = self.g.len();
        let hl = self.h[l0].clone();
        for (a, b) in self.h[k0].iter_mut().zip(&hl) {
            *a -= &q * b;
        }
        // rows then columns of the Gram matrix
        let gl = self.g[l0].clone();
        for j in 0..n {
            self.g[k0][j] -= &q * &gl[j];
        }
        for i in 0..n {
            let t = &q * &self.g[i][l0];
            self.g[i][k0] -= t;
        }
        let dlq = &q * &self.d[l];
        self.lam[k][l] -= dlq;
        for i in 1..l {
            let t = &q * &self.lam[l][i];
            self.lam[k][i] -= t;
        }
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        let (k0, k1) = (k - 1, k - 2);
        self.h.swap(k0, k1);
        self.g.swap(k0, k1);
        for row in self.g.iter_mut() {
            row.swap(k0, k1);
        }
        for j in 1..k - 1 {
            let t = self.lam[k][j].clone();
            self.lam[k][j] = self.lam[k - 1][j].clone();
            self.lam[k - 1][j] = t;
        }
        let lam = self.lam[k][k - 1].clone();
        let b = (&self.d[k - 2] * &self.d[k] + &lam * &lam) / &self.d[k - 1];
        for i in k + 1..=kmax {
            let t = self.lam[i][k].clone();
            self.lam[i][k] = (&self.d[k] * &self.lam[i][k - 1] - &lam * &t) / &self.d[k - 1];
            self.lam[i][k - 1] = (&b * &t + &lam * &self.lam[i][k]) / &self.d[k];
        }
        self.d[k - 1] = b;
    }
}

/// LLL-reduces the basis whose Gram matrix is `gram` (integer, positive
/// definite). Returns `(reduced_gram, h)` with `reduced_gram = h * gram * h^T`.
pub fn lll_gram(gram: &[Vec<Int>]) -> Result<(IntRows, IntRows)> {
    let n = gram.len();
    let h: IntRows = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();
    if n <= 1 {
        return Ok((gram.to_vec(), h));
    }
    let mut st = State {
        g: gram.to_vec(),
        h,
        d: vec![Int::zero(); n + 1],
        lam: vec![vec![Int::zero(); n + 1]; n + 1],
    };
    st.d[0] = Int::one();
    st.d[1] = st.g[0][0].clone();
    if !st.d[1].is_positive() {
        return Err(Error::NotPositiveDefinite);
    }
    let mut k = 2;
    let mut kmax = 1;
    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = st.g[k - 1][j - 1].clone();
                for i in 1..j {
                    u = (&st.d[i] * &u - &st.lam[k][i] * &st.lam[j][i]) / &st.d[i - 1];
                }
                if j < k {
                    st.lam[k][j] = u;
                } else {
                    if !u.is_positive() {
                        return Err(Error::NotPositiveDefinite);
                    }
                    st.d[k] = u;
                }
            }
        }
        loop {
            st.red(k, k - 1);
            let lhs = Int::from(4) * &st.d[k] * &st.d[k - 2];
            let l = &st.lam[k][k - 1];
            let rhs = Int::from(3) * &st.d[k - 1] * &st.d[k - 1] - Int::from(4) * l * l;
            if lhs < rhs {
                st.swap(k, kmax);
                if k > 2 {
                    k -= 1;
                }
                continue;
            }
            for l in (1..k - 1).rev() {
                st.red(k, l);
            }
            k += 1;
            break;
        }
    }
    Ok((st.g, st.h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    fn ir(rows: &[&[i64]]) -> IntRows {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    fn congruence(h: &IntRows, g: &IntRows) -> IntRows {
        let n = g.len();
        let mut out = vec![vec![Int::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Int::zero();
                for a in 0..n {
                    for b in 0..n {
                        s += &h[i][a] * &g[a][b] * &h[j][b];
                    }
                }
                out[i][j] = s;
            }
        }
        out
    }

    #[test]
    fn skewed_basis_of_z2() {
        // basis (1,0), (100,1) of Z^2
        let g = ir(&[&[1, 100], &[100, 10001]]);
        let (r, h) = lll_gram(&g).unwrap();
        assert_eq!(r, ir(&[&[1, 0], &[0, 1]]));
        assert_eq!(congruence(&h, &g), r);
    }

    #[test]
    fn reduced_input_unchanged() {
        let g = ir(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let (r, h) = lll_gram(&g).unwrap();
        assert_eq!(r, g);
        assert_eq!(h, g);
    }

    #[test]
    fn rejects_indefinite() {
        assert!(lll_gram(&ir(&[&[1, 2], &[2, 1]])).is_err());
    }
}
