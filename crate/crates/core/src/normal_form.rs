//! Hermite and Smith normal forms, kernels and saturation over the integers.
//!
//! Convention: lattices are row spans. `hnf` produces the row-style
//! (upper echelon) Hermite form `H = U * M` with positive pivots, entries
//! above each pivot reduced into `[0, pivot)`, and zero rows at the bottom.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::num::{from_int, Int, Rat};

pub type IntRows = Vec<Vec<Int>>;

fn identity_rows(n: usize) -> IntRows {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

/// Replaces rows `r` and `i` by the unimodular combination that puts
/// `gcd(a, b)` into row `r` and zero into row `i` at column `c`.
fn gcd_combine(rows: &mut IntRows, r: usize, i: usize, c: usize, track: Option<&mut IntRows>) {
    let a = rows[r][c].clone();
    let b = rows[i][c].clone();
    // plain elimination when `a | b`, so a finished pivot row is left alone
    let (g, x, y) = if !a.is_zero() && (&b % &a).is_zero() {
        (a.clone(), Int::one(), Int::zero())
    } else {
        let eg = a.extended_gcd(&b);
        (eg.gcd, eg.x, eg.y)
    };
    let ag = &a / &g;
    let bg = &b / &g;
    let combine = |m: &mut IntRows| {
        let (rr, ri) = (m[r].clone(), m[i].clone());
        for k in 0..rr.len() {
            m[r][k] = &x * &rr[k] + &y * &ri[k];
            m[i][k] = &ag * &ri[k] - &bg * &rr[k];
        }
    };
    combine(rows);
    if let Some(u) = track {
        combine(u);
    }
}

fn hnf_impl(mut rows: IntRows, cols: usize, mut track: Option<&mut IntRows>) -> IntRows {
    let m = rows.len();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if !rows[i][c].is_zero() {
                if rows[r][c].is_zero() {
                    rows.swap(r, i);
                    if let Some(u) = track.as_deref_mut() {
                        u.swap(r, i);
                    }
                } else {
                    gcd_combine(&mut rows, r, i, c, track.as_deref_mut());
                }
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for v in rows[r].iter_mut() {
                *v = -v.clone();
            }
            if let Some(u) = track.as_deref_mut() {
                for v in u[r].iter_mut() {
                    *v = -v.clone();
                }
            }
        }
        let piv = rows[r][c].clone();
        for i in 0..r {
            let q = rows[i][c].div_floor(&piv);
            if q.is_zero() {
                continue;
            }
            let pr = rows[r].clone();
            for (v, p) in rows[i].iter_mut().zip(&pr) {
                *v -= &q * p;
            }
            if let Some(u) = track.as_deref_mut() {
                let ur = u[r].clone();
                for (v, p) in u[i].iter_mut().zip(&ur) {
                    *v -= &q * p;
                }
            }
        }
        r += 1;
    }
    rows
}

/// Row-style Hermite normal form with transform: returns `(H, U)` with
/// `H = U * M`, `U` unimodular.
pub fn hnf_with_transform(rows: &[Vec<Int>], cols: usize) -> (IntRows, IntRows) {
    let mut u = identity_rows(rows.len());
    let h = hnf_impl(rows.to_vec(), cols, Some(&mut u));
    (h, u)
}

/// Hermite normal form without the transform; zero rows are dropped.
///
/// Large generating sets are folded in chunks so intermediate entries stay
/// bounded by the running basis.
pub fn hnf_basis(rows: &[Vec<Int>], cols: usize) -> IntRows {
    let chunk = cols.max(1);
    let mut basis: IntRows = Vec::new();
    for block in rows.chunks(chunk) {
        let mut stack = basis;
        stack.extend(block.iter().cloned());
        basis = hnf_impl(stack, cols, None);
        basis.retain(|r| r.iter().any(|v| !v.is_zero()));
    }
    basis
}

/// Hermite normal form of an integer `ExactMatrix`.
pub fn hnf(m: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let rows = m.to_int_rows()?;
    let (h, u) = hnf_with_transform(&rows, m.cols());
    Ok((
        ExactMatrix::from_int_rows(&h, m.cols()),
        ExactMatrix::from_int_rows(&u, m.rows()),
    ))
}

/// HNF basis of the Z-span of rational rows: returns `(denominator, basis)`
/// with the span equal to `basis / denominator`.
pub fn rational_span(rows: &[Vec<Rat>], cols: usize) -> (Int, IntRows) {
    let d = crate::num::common_denominator(rows.iter().flatten());
    let ints: IntRows = rows
        .iter()
        .map(|r| r.iter().map(|v| (v * from_int(&d)).to_integer()).collect())
        .collect();
    (d, hnf_basis(&ints, cols))
}

/// Integer left kernel `{x : x * A = 0}` as HNF basis rows.
pub fn left_kernel(a: &[Vec<Int>], cols: usize) -> IntRows {
    let (h, u) = hnf_with_transform(a, cols);
    let ker: IntRows = h
        .iter()
        .zip(u)
        .filter(|(hr, _)| hr.iter().all(|v| v.is_zero()))
        .map(|(_, ur)| ur)
        .collect();
    let n = a.len();
    hnf_basis(&ker, n)
}

/// Integer right kernel `{x : M x^T = 0}`, saturated, as HNF rows.
pub fn integer_kernel(m: &[Vec<Int>], cols: usize) -> IntRows {
    let mt: IntRows = (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect();
    left_kernel(&mt, m.len())
}

/// The saturation `Q B ∩ Z^n` of integer rows `B`, in HNF.
pub fn saturate(b: &[Vec<Int>], cols: usize) -> IntRows {
    if b.is_empty() {
        return Vec::new();
    }
    let k = integer_kernel(b, cols);
    if k.is_empty() {
        return identity_rows(cols);
    }
    integer_kernel(&k, cols)
}

/// Smith normal form: `(d, U, V)` with `U * M * V = diag(d_1, .., d_r, 0, ..)`,
/// `d_1 | d_2 | ... | d_r` all positive and `r = rank(M)`.
pub fn snf_with_transforms(m: &[Vec<Int>], cols: usize) -> (Vec<Int>, IntRows, IntRows) {
    let rows = m.len();
    let mut a = m.to_vec();
    let mut u = identity_rows(rows);
    let mut v = identity_rows(cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (rt, ut) = (a[t].clone(), u[t].clone());
                for k in 0..cols {
                    a[i][k] -= &q * &rt[k];
                }
                for k in 0..rows {
                    u[i][k] -= &q * &ut[k];
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let s = row[t].clone();
                    row[j] -= &q * &s;
                }
                for row in v.iter_mut() {
                    let s = row[t].clone();
                    row[j] -= &q * &s;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let (ri, ui) = (a[i].clone(), u[i].clone());
                    for k in 0..cols {
                        a[t][k] += &ri[k];
                    }
                    for k in 0..rows {
                        u[t][k] += &ui[k];
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    (diag, u, v)
}

/// Invariant factors of an integer matrix (positive, dividing chain, length = rank).
pub fn snf(m: &ExactMatrix) -> Result<Vec<Int>> {
    let rows = m.to_int_rows()?;
    if m.is_square() {
        let det = m.det()?.to_integer().abs();
        if !det.is_zero() {
            return Ok(snf_mod_det(rows, &det));
        }
    }
    Ok(snf_with_transforms(&rows, m.cols()).0)
}

/// Invariant factors of a nonsingular square matrix with `|det| = d`.
/// Since `d Z^n` lies in the row lattice, all work happens modulo `d`,
/// which keeps entries below `d`.
fn snf_mod_det(mut a: IntRows, d: &Int) -> Vec<Int> {
    let n = a.len();
    let reduce = |a: &mut IntRows| {
        for row in a.iter_mut() {
            for v in row.iter_mut() {
                *v = v.mod_floor(d);
            }
        }
    };
    reduce(&mut a);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        let pivot = (t..n).flat_map(|i| (t..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((pi, pj)) = pivot else {
            diag.extend(std::iter::repeat_n(d.clone(), n - t));
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            for i in t + 1..n {
                if !a[i][t].is_zero() {
                    gcd_combine(&mut a, t, i, t, None);
                }
            }
            let mut cols = transpose(&a);
            for j in t + 1..n {
                if !cols[j][t].is_zero() {
                    gcd_combine(&mut cols, t, j, t, None);
                }
            }
            a = transpose(&cols);
            reduce(&mut a);
            // row t is now (p, 0, ...) modulo d, and so is gcd(p, d)
            a[t][t] = a[t][t].gcd(d);
            if (t + 1..n).any(|i| !a[i][t].is_zero()) {
                continue;
            }
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let ri = a[i].clone();
                    for (v, w) in a[t].iter_mut().zip(ri) {
                        *v = (&*v + w).mod_floor(d);
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].clone());
    }
    diag
}

fn transpose(a: &IntRows) -> IntRows {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Right kernel basis over Q, returned as saturated primitive integer rows
/// (a basis of the integer kernel lattice) in HNF.
pub fn kernel_q(m: &ExactMatrix) -> IntRows {
    let d = m.denominator();
    let rows: IntRows = m
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|v| (v * from_int(&d)).to_integer()).collect())
        .collect();
    if m.rows() == 0 {
        return identity_rows(m.cols());
    }
    integer_kernel(&rows, m.cols())
}

/// Right kernel basis over `F_p` in reduced row echelon form.
pub fn kernel_mod_p(m: &ExactMatrix, p: u64) -> Result<Vec<Vec<u64>>> {
    if !crate::num::is_prime(p) {
        return Err(Error::input(format!("modulus {p} is not prime")));
    }
    let rows = m.to_int_rows()?;
    let pm = Int::from(p);
    let red: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| {
                    let x = v.mod_floor(&pm);
                    x.try_into().expect("residue fits in u64")
                })
                .collect()
        })
        .collect();
    Ok(fp::kernel(&red, m.cols(), p))
}

/// Linear algebra over a prime field with `u64` residues.
pub mod fp {
    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * a as u128) % p as u128) as u64;
            }
            a = ((a as u128 * a as u128) % p as u128) as u64;
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form; returns nonzero rows and pivot columns.
    pub fn rref(rows: &[Vec<u64>], cols: usize, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v % p).collect()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == a.len() {
                break;
            }
            let Some(pi) = (r..a.len()).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(r, pi);
            let iv = inv(a[r][c], p);
            for v in a[r].iter_mut() {
                *v = (*v * iv) % p;
            }
            let pr = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (v, q) in row.iter_mut().zip(&pr) {
                        *v = (*v + p * p - f * q) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }

    /// Right kernel `{x : M x^T = 0}` in RREF.
    pub fn kernel(rows: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
        let (r, piv) = rref(rows, cols, p);
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !piv.contains(c)) {
            let mut x = vec![0u64; cols];
            x[free] = 1;
            for (i, &pc) in piv.iter().enumerate() {
                x[pc] = (p - r[i][free] % p) % p;
            }
            basis.push(x);
        }
        rref(&basis, cols, p).0
    }
}
