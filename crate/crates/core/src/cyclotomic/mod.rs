//! Cyclotomic fields `Q(ζ_m)`, fractional ideals of `Z[ζ_m]`, and the ideal
//! lattices `(J, b_α)` with `b_α(x, y) = Tr(α x conj(y))`.

mod field;
mod ideal;
pub mod interval;

pub use field::{CycloElement, CycloField};
pub use ideal::FractionalIdeal;

use crate::error::{Error, Result};
use crate::lattice::{EnumOptions, Lattice};
use crate::num::{from_int, Int, Rat};
use num_integer::Integer;
use num_traits::Signed;

/// The trace dual `Δ = {x : Tr(x conj(y)) ∈ Z for all y ∈ Z[ζ_m]}` (the
/// codifferent), from the inverse of the trace Gram matrix of the power basis.
pub fn trace_dual_z(field: &CycloField) -> FractionalIdeal {
    let g = field.trace_form_gram(&field.one());
    let inv = g.inverse().expect("trace form is nondegenerate");
    FractionalIdeal::from_z_span(field, &inv.row_vecs()).expect("the codifferent is an ideal")
}

/// A fractional ideal with a conjugation-invariant, totally positive `α`.
#[derive(Clone, Debug)]
pub struct IdealLatticeSpec {
    ideal: FractionalIdeal,
    alpha: CycloElement,
}

impl IdealLatticeSpec {
    pub fn new(ideal: FractionalIdeal, alpha: CycloElement) -> Result<Self> {
        if ideal.field() != alpha.field() {
            return Err(Error::input("ideal and alpha live in different fields"));
        }
        if !alpha.is_real() {
            return Err(Error::pre("alpha must be fixed by complex conjugation"));
        }
        if !alpha.is_totally_positive() {
            return Err(Error::NotTotallyPositive);
        }
        Ok(IdealLatticeSpec { ideal, alpha })
    }

    pub fn ideal(&self) -> &FractionalIdeal {
        &self.ideal
    }

    pub fn alpha(&self) -> &CycloElement {
        &self.alpha
    }

    pub fn field(&self) -> &CycloField {
        self.ideal.field()
    }
}

/// The lattice `(J, b_α)`. Its parent is the whole field with the same form
/// on the power basis, so lattices sharing `(m, α)` can be compared directly.
pub fn ideal_lattice(spec: &IdealLatticeSpec) -> Result<Lattice> {
    ideal_as_lattice(spec.field(), &spec.ideal, &spec.alpha)
}

fn ideal_as_lattice(field: &CycloField, j: &FractionalIdeal, alpha: &CycloElement) -> Result<Lattice> {
    Lattice::in_parent(field.trace_form_gram(alpha), j.basis_matrix())
}

/// `conj(J)^{-1} Δ α^{-1}`, the ideal underlying the dual lattice.
pub fn ideal_dual(spec: &IdealLatticeSpec) -> Result<FractionalIdeal> {
    let field = spec.field();
    spec.ideal
        .conj()
        .inv()?
        .mul(&trace_dual_z(field))
        .scale(&spec.alpha.inv()?)
}

/// Whether the dual formula agrees with the matrix dual of [`ideal_lattice`].
pub fn dual_routes_agree(spec: &IdealLatticeSpec) -> Result<bool> {
    let by_formula = ideal_as_lattice(spec.field(), &ideal_dual(spec)?, &spec.alpha)?;
    let by_matrix = ideal_lattice(spec)?.dual();
    by_formula.same_module(&by_matrix)
}

/// `(J, b_α)` is unimodular iff `(J conj(J))^{-1} Δ α^{-1} = Z[ζ_m]`.
pub fn is_unimodular(spec: &IdealLatticeSpec) -> Result<bool> {
    let field = spec.field();
    let lhs = spec
        .ideal
        .relative_norm_ideal()
        .inv()?
        .mul(&trace_dual_z(field))
        .scale(&spec.alpha.inv()?)?;
    Ok(lhs == FractionalIdeal::unit(field))
}

/// The real cyclotomic units `η_a = ζ^k (1 - ζ^a)/(1 - ζ)`, `1 < a < m/2`,
/// `gcd(a, m) = 1`, with `k` chosen to make `η_a` real.
pub fn cyclotomic_units(field: &CycloField) -> Vec<CycloElement> {
    let m = field.m() as i64;
    let one = field.one();
    let denom = (&one - &field.zeta()).inv().expect("1 - ζ is nonzero");
    (2..)
        .take_while(|a| 2 * a < m)
        .filter(|a: &i64| a.gcd(&m) == 1)
        .filter_map(|a| {
            // (1 - ζ^a)/(1 - ζ) = ζ^{(a-1)/2} · (real), exponents taken mod m
            let half = if (a - 1) % 2 == 0 {
                (a - 1) / 2
            } else {
                // m is odd here, so 2 is invertible mod m
                ((a - 1) * (m + 1) / 2).mod_floor(&m)
            };
            let eta = &(&field.zeta_pow(-half) * &(&one - &field.zeta_pow(a))) * &denom;
            eta.is_real().then_some(eta)
        })
        .collect()
}

/// Limits for [`find_tp_generator`].
#[derive(Clone, Debug)]
pub struct TpSearch {
    /// Largest `|e_i|` in the unit words `∏ u_i^{e_i}`.
    pub max_exponent: i64,
    /// Largest number of short vectors examined while looking for a generator.
    pub max_vectors: usize,
    pub enumeration: EnumOptions,
}

impl Default for TpSearch {
    fn default() -> Self {
        TpSearch {
            max_exponent: 2,
            max_vectors: 200_000,
            enumeration: EnumOptions::default(),
        }
    }
}

/// Some `g` with `(g) = J`, found among short vectors of `(J, b_1)`.
pub fn find_generator(j: &FractionalIdeal, opts: &TpSearch) -> Result<Option<CycloElement>> {
    let field = j.field();
    let lat = ideal_as_lattice(field, j, &field.one())?;
    let target = j.norm();
    let basis = j.basis_elements();
    let mut bound = lat.minimum(&opts.enumeration)?.minimum;
    loop {
        let vs = lat.short_vectors(&bound, &opts.enumeration)?;
        for v in &vs {
            let x = v
                .coords
                .iter()
                .zip(&basis)
                .fold(field.zero(), |acc, (c, b)| &acc + &b.scale(&from_int(c)));
            if x.norm().abs() == target {
                return Ok(Some(x));
            }
        }
        if vs.len() >= opts.max_vectors {
            return Ok(None);
        }
        bound *= Rat::from_integer(Int::from(2));
    }
}

/// Searches for a totally positive generator of `J` among `±ζ^k ∏ u_i^{e_i} g`,
/// `|e_i| <= max_exponent`, where `g` is any generator of `J`.
///
/// `Ok(None)` means the bounded search found nothing; it is not a proof that
/// no such generator exists. Fails with [`Error::NoGenerator`] when no
/// generator of `J` turns up at all.
pub fn find_tp_generator(
    j: &FractionalIdeal,
    units: &[CycloElement],
    opts: &TpSearch,
) -> Result<Option<CycloElement>> {
    let field = j.field();
    if units.iter().any(|u| u.field() != field) {
        return Err(Error::input("units live in a different field"));
    }
    let g = find_generator(j, opts)?.ok_or_else(|| Error::NoGenerator("no generator among short vectors".into()))?;
    let inverses = units.iter().map(|u| u.inv()).collect::<Result<Vec<_>>>()?;
    let words = exponent_words(units.len(), opts.max_exponent);
    let roots: Vec<CycloElement> = (0..field.m() as i64)
        .flat_map(|k| {
            let z = field.zeta_pow(k);
            [z.clone(), -&z]
        })
        .collect();
    for w in words {
        let mut u = g.clone();
        for (e, (a, ai)) in w.iter().zip(units.iter().zip(&inverses)) {
            let f = if *e >= 0 { a } else { ai };
            for _ in 0..e.unsigned_abs() {
                u = &u * f;
            }
        }
        for r in &roots {
            let c = r * &u;
            if c.is_real() && c.is_totally_positive() {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// All exponent vectors in `[-e, e]^r`, ordered by `Σ|e_i|` then lexicographically.
fn exponent_words(r: usize, e: i64) -> Vec<Vec<i64>> {
    let mut words: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..r {
        words = words
            .into_iter()
            .flat_map(|w| {
                (-e..=e).map(move |x| {
                    let mut w2 = w.clone();
                    w2.push(x);
                    w2
                })
            })
            .collect();
    }
    words.sort_by_key(|w| (w.iter().map(|x| x.abs()).sum::<i64>(), w.clone()));
    words
}

#[cfg(test)]
mod tests;
