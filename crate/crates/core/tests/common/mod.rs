//! Random inputs shared by the property and acceptance suites.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use unilat::cyclotomic::{CycloElement, CycloField, FractionalIdeal};
use unilat::num::{from_int, rat, Int, Rat};
use unilat::{ExactMatrix, Lattice, LinearCode};

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// A random integer matrix with entries in `[-r, r]`.
pub fn int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, r: i64) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-r..=r)).collect()).collect()
}

pub fn to_exact(m: &[Vec<i64>], cols: usize) -> ExactMatrix {
    let rows: Vec<Vec<Int>> = m.iter().map(|r| ints(r)).collect();
    ExactMatrix::from_int_rows(&rows, cols)
}

/// A random unimodular matrix built from elementary row operations.
pub fn unimodular<R: Rng>(rng: &mut R, n: usize) -> ExactMatrix {
    let mut u = ExactMatrix::identity(n);
    if n < 2 {
        return u;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = rat(rng.gen_range(-2..=2));
        for k in 0..n {
            let v = &u[(j, k)] * &c;
            u[(i, k)] += v;
        }
        if rng.gen_bool(0.3) {
            u.swap_rows(i, j);
        }
    }
    u
}

/// A random integral positive definite Gram matrix `B Bᵀ` of dimension `n`.
pub fn integral_lattice<R: Rng>(rng: &mut R, n: usize) -> Lattice {
    loop {
        let b = to_exact(&int_matrix(rng, n, n, 3), n);
        if b.det().unwrap() != rat(0) {
            return Lattice::from_gram(b.congruence(&ExactMatrix::identity(n)).unwrap()).unwrap();
        }
    }
}

/// A random lattice with a rational Gram matrix (integral Gram scaled by `1/q`).
pub fn rational_lattice<R: Rng>(rng: &mut R, n: usize) -> Lattice {
    let l = integral_lattice(rng, n);
    let q = Rat::new(Int::from(1), Int::from(rng.gen_range(1..=4)));
    l.scaled(&q).unwrap()
}

/// Coordinate bounds `|c_i| <= sqrt(b (G^-1)_ii)` that contain every vector
/// of norm at most `b`, where `b` is the smallest diagonal Gram entry.
pub fn coefficient_radii(l: &Lattice) -> Vec<i64> {
    let g = l.gram();
    let inv = g.inverse().unwrap();
    let b = (0..l.dim()).map(|i| g[(i, i)].clone()).min().unwrap();
    (0..l.dim())
        .map(|i| (unilat::num::to_f64(&(&b * &inv[(i, i)])).sqrt() + 1e-9).floor() as i64)
        .collect()
}

/// Minimum and number of minimal vectors by exhausting the box given by
/// [`coefficient_radii`].
pub fn brute_force_minimum(l: &Lattice) -> (Rat, usize) {
    let n = l.dim();
    let radii = coefficient_radii(l);
    let d = l.gram().denominator();
    let g: Vec<Vec<i128>> = l
        .gram()
        .scale(&from_int(&d))
        .to_int_rows()
        .unwrap()
        .iter()
        .map(|row| row.iter().map(|v| i128::try_from(v.clone()).unwrap()).collect())
        .collect();
    let mut c: Vec<i64> = radii.iter().map(|r| -r).collect();
    let mut best: Option<(i128, usize)> = None;
    loop {
        if c.iter().any(|&x| x != 0) {
            let mut s: i128 = 0;
            for i in 0..n {
                for j in 0..n {
                    s += g[i][j] * (c[i] * c[j]) as i128;
                }
            }
            best = match best {
                Some((b, k)) if s == b => Some((b, k + 1)),
                Some((b, _)) if s < b => Some((s, 1)),
                None => Some((s, 1)),
                keep => keep,
            };
        }
        let mut i = 0;
        loop {
            if i == n {
                let (b, k) = best.unwrap();
                return (from_int(&Int::from(b)) / from_int(&d), k);
            }
            c[i] += 1;
            if c[i] <= radii[i] {
                break;
            }
            c[i] = -radii[i];
            i += 1;
        }
    }
}

pub fn random_code<R: Rng>(rng: &mut R, p: u64, n: usize, k: usize) -> LinearCode {
    let rows: Vec<Vec<u64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
    LinearCode::new(p, n, &rows).unwrap()
}

/// A random self-orthogonal code grown one isotropic word at a time.
pub fn self_orthogonal_code<R: Rng>(rng: &mut R, p: u64, n: usize) -> LinearCode {
    let mut c = LinearCode::zero(p, n).unwrap();
    for _ in 0..20 * n {
        if 2 * c.dim() >= n {
            break;
        }
        let d = c.dual();
        let coeffs: Vec<u64> = (0..d.dim()).map(|_| rng.gen_range(0..p)).collect();
        let mut w = vec![0u64; n];
        for (a, row) in coeffs.iter().zip(d.generator()) {
            for (x, g) in w.iter_mut().zip(row) {
                *x = (*x + a * g) % p;
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<u64>() % p;
        if norm == 0 && !c.contains(&w) {
            let mut rows = c.generator().to_vec();
            rows.push(w);
            let next = LinearCode::new(p, n, &rows).unwrap();
            if next.is_self_orthogonal() {
                c = next;
            }
        }
    }
    c
}

/// A random signed permutation matrix of order exactly `p` (prime) on `Z^n`.
pub fn signed_permutation<R: Rng>(rng: &mut R, n: usize, p: usize) -> Option<ExactMatrix> {
    let cycles = rng.gen_range(if p == 2 { 0 } else { 1 }..=n / p);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let mut m = ExactMatrix::zeros(n, n);
    let mut used = 0;
    for _ in 0..cycles {
        let cyc = &idx[used..used + p];
        let mut signs: Vec<i64> = (0..p).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        // the cycle has order p only if its signs multiply to 1
        if signs.iter().product::<i64>() == -1 {
            signs[0] = -signs[0];
        }
        for t in 0..p {
            m[(cyc[t], cyc[(t + 1) % p])] = rat(signs[t]);
        }
        used += p;
    }
    let mut nontrivial = cycles > 0;
    for &i in &idx[used..] {
        let s = if p == 2 && rng.gen_bool(0.5) { -1 } else { 1 };
        nontrivial |= s == -1;
        m[(i, i)] = rat(s);
    }
    nontrivial.then_some(m)
}

/// Signed coordinate permutations of order `p` that preserve E8 inside `Z^8`
/// (an even number of sign changes).
pub fn e8_automorphism<R: Rng>(rng: &mut R, p: usize) -> ExactMatrix {
    loop {
        if let Some(m) = signed_permutation(rng, 8, p) {
            let negs = m.entries().iter().filter(|v| **v == rat(-1)).count();
            if negs % 2 == 0 {
                return m;
            }
        }
    }
}

pub fn element<R: Rng>(rng: &mut R, f: &CycloField, r: i64) -> CycloElement {
    loop {
        let x = f.element((0..f.degree()).map(|_| rat(rng.gen_range(-r..=r))).collect()).unwrap();
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random integral or fractional ideal with one or two generators.
pub fn ideal<R: Rng>(rng: &mut R, f: &CycloField) -> FractionalIdeal {
    let mut gens = vec![element(rng, f, 2)];
    if rng.gen_bool(0.5) {
        gens.push(f.from_rat(rat(rng.gen_range(2..=5))));
    }
    let j = FractionalIdeal::generated_by(f, &gens).unwrap();
    if rng.gen_bool(0.3) {
        j.scale(&f.from_rat(Rat::new(Int::from(1), Int::from(rng.gen_range(2..=3))))).unwrap()
    } else {
        j
    }
}

/// A random totally positive element `r Σ x x̄`.
pub fn totally_positive<R: Rng>(rng: &mut R, f: &CycloField) -> CycloElement {
    let mut a = f.zero();
    for _ in 0..rng.gen_range(1..=2) {
        let x = element(rng, f, 2);
        a = &a + &(&x * &x.conj());
    }
    a.scale(&Rat::new(Int::from(rng.gen_range(1..=3)), Int::from(rng.gen_range(1..=3))))
}
