use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::interval::{cos_sin_table, Interval};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::num::{rat, to_int, Int, Rat};
use crate::poly;

/// The cyclotomic field `Q(ζ_m)` with its power basis `1, ζ, ..., ζ^{φ(m)-1}`.
///
/// `m ≡ 2 (mod 4)` is replaced by `m/2`, which gives the same field; `ζ`
/// then denotes the primitive `m/2`-th root.
#[derive(Clone)]
pub struct CycloField(Arc<Inner>);

struct Inner {
    m: u64,
    degree: usize,
    min_poly: Vec<Int>,
    /// `ζ^k` in the power basis, `0 <= k < m`.
    powers: Vec<Vec<Rat>>,
    int_powers: Vec<Vec<Int>>,
    /// trace of multiplication by `ζ^k`, `0 <= k < m`.
    power_traces: Vec<Rat>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.0.m == other.0.m
    }
}

impl Eq for CycloField {}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.m)
    }
}

impl CycloField {
    pub fn new(m: u64) -> Result<Self> {
        let m = if m % 4 == 2 { m / 2 } else { m };
        if m < 3 {
            return Err(Error::input("cyclotomic index must give a field of degree at least 2"));
        }
        let phi = poly::cyclotomic(m);
        let n = phi.len() - 1;
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(m as usize);
        let mut cur: Vec<Rat> = (0..n).map(|i| rat((i == 0) as i64)).collect();
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by ζ and reduce with the monic Φ_m
            let top = cur[n - 1].clone();
            let mut next = vec![Rat::zero(); n];
            next[1..n].clone_from_slice(&cur[..n - 1]);
            for (x, c) in next.iter_mut().zip(&phi) {
                *x -= &top * c;
            }
            cur = next;
        }
        let power_traces = (0..m as usize)
            .map(|k| (0..n).map(|j| powers[(k + j) % m as usize][j].clone()).sum())
            .collect();
        let min_poly = phi.iter().map(|c| to_int(c).expect("cyclotomic polynomials are integral")).collect();
        let int_powers = powers
            .iter()
            .map(|p| p.iter().map(|c| to_int(c).expect("ζ^k is integral")).collect())
            .collect();
        Ok(CycloField(Arc::new(Inner {
            m,
            degree: n,
            min_poly,
            powers,
            int_powers,
            power_traces,
        })))
    }

    pub fn m(&self) -> u64 {
        self.0.m
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Coefficients of `Φ_m`, lowest degree first.
    pub fn min_poly(&self) -> &[Int] {
        &self.0.min_poly
    }

    pub fn element(&self, coeffs: Vec<Rat>) -> Result<CycloElement> {
        if coeffs.len() != self.degree() {
            return Err(Error::DimensionMismatch(format!(
                "an element of Q(zeta_{}) has {} coefficients",
                self.m(),
                self.degree()
            )));
        }
        Ok(CycloElement {
            field: self.clone(),
            coeffs,
        })
    }

    /// Reads up to `m` coefficients of `Σ c_k ζ^k` and reduces them.
    pub fn from_exponents(&self, coeffs: &[Rat]) -> CycloElement {
        let mut out = vec![Rat::zero(); self.degree()];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.0.powers[k % self.m() as usize]) {
                *o += c * p;
            }
        }
        CycloElement {
            field: self.clone(),
            coeffs: out,
        }
    }

    pub fn from_rat(&self, q: Rat) -> CycloElement {
        let mut c = vec![Rat::zero(); self.degree()];
        c[0] = q;
        CycloElement {
            field: self.clone(),
            coeffs: c,
        }
    }

    pub fn zero(&self) -> CycloElement {
        self.from_rat(Rat::zero())
    }

    pub fn one(&self) -> CycloElement {
        self.from_rat(Rat::one())
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CycloElement {
        let idx = k.mod_floor(&(self.m() as i64)) as usize;
        CycloElement {
            field: self.clone(),
            coeffs: self.0.powers[idx].clone(),
        }
    }

    pub fn zeta(&self) -> CycloElement {
        self.zeta_pow(1)
    }

    pub fn power_basis(&self) -> Vec<CycloElement> {
        (0..self.degree() as i64).map(|k| self.zeta_pow(k)).collect()
    }

    /// `Φ_m'(ζ)`; the different of `Z[ζ_m]` is the principal ideal it generates.
    pub fn min_poly_derivative_at_zeta(&self) -> CycloElement {
        let coeffs: Vec<Rat> = self
            .min_poly()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Rat::from_integer(c * Int::from(i)))
            .collect();
        self.from_exponents(&coeffs)
    }

    /// Exponents `k` with `gcd(k, m) = 1`, `1 <= k < m`; `ζ ↦ e^{2πik/m}` are the embeddings.
    pub fn embedding_exponents(&self) -> Vec<u64> {
        (1..self.m()).filter(|k| k.gcd(&self.m()) == 1).collect()
    }

    /// Certified enclosures of the real and imaginary parts of every complex
    /// embedding of `x`, with radius about `2^-bits` per term.
    pub fn embeddings(&self, x: &CycloElement, bits: u32) -> Vec<(u64, Interval, Interval)> {
        let table = cos_sin_table(self.m(), bits);
        self.embedding_exponents()
            .into_iter()
            .map(|k| {
                let mut re = Interval::point(Rat::zero());
                let mut im = Interval::point(Rat::zero());
                for (i, a) in x.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let (c, s) = &table[((k * i as u64) % self.m()) as usize];
                    re = &re + &c.scale(a);
                    im = &im + &s.scale(a);
                }
                (k, re, im)
            })
            .collect()
    }

    /// The Gram matrix `Tr(α ζ^i conj(ζ^j))` of the trace form on the power basis.
    pub fn trace_form_gram(&self, alpha: &CycloElement) -> ExactMatrix {
        let n = self.degree();
        let m = self.m() as i64;
        // entry (i, j) depends only on i - j mod m
        let traces: Vec<Rat> = (0..m).map(|k| (alpha * &self.zeta_pow(k)).trace()).collect();
        let mut g = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = traces[(i as i64 - j as i64).rem_euclid(m) as usize].clone();
            }
        }
        g
    }
}

/// An element `Σ c_i ζ^i` of a cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElement {
    field: CycloField,
    coeffs: Vec<Rat>,
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(crate::num::fmt_rat).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl CycloElement {
    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, q: &Rat) -> CycloElement {
        CycloElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Rows `ζ^i · x` in the power basis.
    pub fn mul_matrix(&self) -> ExactMatrix {
        let n = self.field.degree();
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| (&self.field.zeta_pow(i as i64) * self).coeffs)
            .collect();
        ExactMatrix::from_rows(rows, n).expect("square")
    }

    /// `Tr_{F/Q}(x)`, the trace of multiplication by `x`.
    pub fn trace(&self) -> Rat {
        self.coeffs
            .iter()
            .zip(&self.field.0.power_traces)
            .map(|(c, t)| c * t)
            .sum()
    }

    /// The image under the automorphism `ζ ↦ ζ^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: u64) -> CycloElement {
        let m = self.field.m();
        let mut ex = vec![Rat::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            ex[((k * i as u64) % m) as usize] += c;
        }
        self.field.from_exponents(&ex)
    }

    /// Product of the conjugates `σ_k(x)`, `k ≠ 1`, so `x · adjugate = N(x)`.
    fn adjugate(&self) -> CycloElement {
        self.field
            .embedding_exponents()
            .into_iter()
            .filter(|&k| k != 1)
            .fold(self.field.one(), |acc, k| &acc * &self.galois(k))
    }

    pub fn norm(&self) -> Rat {
        (self * &self.adjugate()).coeffs[0].clone()
    }

    pub fn inv(&self) -> Result<CycloElement> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let adj = self.adjugate();
        let n = (self * &adj).coeffs[0].clone();
        Ok(adj.scale(&(Rat::one() / n)))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycloElement {
        let m = self.field.m() as i64;
        let ex: Vec<Rat> = {
            let mut v = vec![Rat::zero(); m as usize];
            for (i, c) in self.coeffs.iter().enumerate() {
                v[((m - i as i64) % m) as usize] += c;
            }
            v
        };
        self.field.from_exponents(&ex)
    }

    /// `x = conj(x)`, i.e. `x` lies in the maximal real subfield.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn pow(&self, e: i64) -> Result<CycloElement> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field.one();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Certified test that every real embedding of `x` is positive.
    ///
    /// Elements not fixed by conjugation, and zero, are not totally positive.
    /// The precision doubles until every enclosure excludes zero, which
    /// terminates because a nonzero element has no zero embedding.
    pub fn is_totally_positive(&self) -> bool {
        if self.is_zero() || !self.is_real() {
            return false;
        }
        let m = self.field.m();
        let ks: Vec<u64> = self.field.embedding_exponents().into_iter().filter(|k| 2 * k < m).collect();
        let mut bits = 32;
        loop {
            let table = cos_sin_table(m, bits);
            let mut undecided = false;
            for &k in &ks {
                let mut v = Interval::point(Rat::zero());
                for (i, a) in self.coeffs.iter().enumerate() {
                    if !a.is_zero() {
                        v = &v + &table[((k * i as u64) % m) as usize].0.scale(a);
                    }
                }
                if v.is_negative() {
                    return false;
                }
                if !v.is_positive() {
                    undecided = true;
                }
            }
            if !undecided {
                return true;
            }
            bits *= 2;
        }
    }
}

fn numerators(c: &[Rat]) -> (Int, Vec<Int>) {
    let d = crate::num::common_denominator(c.iter());
    let v = c.iter().map(|x| (x * Rat::from_integer(d.clone())).to_integer()).collect();
    (d, v)
}

fn same_field(a: &CycloElement, b: &CycloElement) {
    assert!(a.field == b.field, "elements of different cyclotomic fields");
}

impl Add for &CycloElement {
    type Output = CycloElement;
    fn add(self, o: &CycloElement) -> CycloElement {
        same_field(self, o);
        CycloElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycloElement {
    type Output = CycloElement;
    fn sub(self, o: &CycloElement) -> CycloElement {
        same_field(self, o);
        CycloElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        self.scale(&rat(-1))
    }
}

impl Mul for &CycloElement {
    type Output = CycloElement;
    fn mul(self, o: &CycloElement) -> CycloElement {
        same_field(self, o);
        // multiply integer numerators over a common denominator
        let (da, a) = numerators(&self.coeffs);
        let (db, b) = numerators(&o.coeffs);
        let n = a.len();
        let m = self.field.m() as usize;
        let mut conv = vec![Int::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<Int> = conv[..n].to_vec();
        for (k, c) in conv.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.field.0.int_powers[k % m]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        let d = Rat::from_integer(da * db);
        CycloElement {
            field: self.field.clone(),
            coeffs: out.into_iter().map(|v| Rat::from_integer(v) / &d).collect(),
        }
    }
}
