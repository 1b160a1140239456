//! Kneser 2-neighbors and the Koch lattice `Λ(C)`.

use num_integer::Integer;
use num_traits::One;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::ExactMatrix;
use crate::normal_form;
use crate::num::{from_int, ratio, to_int, Int, Rat};

/// The 2-neighbor `L^{(v),2}`, generated by `{ℓ ∈ L : (v, ℓ) even}` and
/// `v/2`, with `v` given in basis coordinates of `L`.
///
/// The result lives in the parent of `L` (or in `L` itself when detached).
pub fn two_neighbor(l: &Lattice, v: &[Int]) -> Result<Lattice> {
    let n = l.dim();
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!("neighbor vector needs {n} coordinates")));
    }
    if !l.is_integral() {
        return Err(Error::pre("2-neighbors need an integral lattice"));
    }
    let vr: Vec<Rat> = v.iter().map(from_int).collect();
    let gv: Vec<Int> = l
        .gram()
        .left_apply(&vr)
        .iter()
        .map(|x| to_int(x).expect("integral Gram"))
        .collect();
    let norm: Int = gv.iter().zip(v).map(|(a, b)| a * b).sum();
    if !norm.is_multiple_of(&Int::from(4)) {
        return Err(Error::NeighborNorm(format!("(v,v) = {norm} is not divisible by 4")));
    }
    let Some(j0) = gv.iter().position(|a| a.is_odd()) else {
        return Err(Error::DegenerateNeighborVector);
    };
    let unit = |i: usize| -> Vec<Int> { (0..n).map(|j| Int::from((i == j) as i32)).collect() };
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut r = unit(i);
        if i == j0 {
            r[j0] = Int::from(2);
        } else if gv[i].is_odd() {
            r[j0] += Int::one();
        }
        rows.push(r);
    }
    // span of the even sublattice and v/2, scaled by 2
    let mut scaled: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().map(|x| x * 2).collect()).collect();
    scaled.push(v.to_vec());
    let basis = normal_form::hnf_basis(&scaled, n);
    let coords = ExactMatrix::from_int_rows(&basis, n).scale(&ratio(1, 2));
    let m = l.rational_sublattice(&coords)?;
    debug_assert!(m.is_integral() && m.det() == l.det());
    Ok(m)
}

/// The Koch lattice `Λ(C)`: the 2-neighbor of `A_3(C)` whose even sublattice
/// is `{x : (x, 1/3 (e_1 + ... + e_n)) even}` and which avoids the short glue
/// vector `1/6 (e_1 + ... + e_n)`.
///
/// Concretely `v = 1/3 (e_1 + ... + e_n) - 2 e_1`, so `v/2` has norm
/// `n/12 + 2`. `C` must be a self-dual ternary code of length divisible by
/// 12 that contains the all-ones word.
pub fn koch_lambda(c: &LinearCode) -> Result<Lattice> {
    if c.p() != 3 {
        return Err(Error::pre("the Koch construction needs a ternary code"));
    }
    if !c.is_self_dual() {
        return Err(Error::pre("the Koch construction needs a self-dual code"));
    }
    let n = c.len();
    if !n.is_multiple_of(12) {
        return Err(Error::NeighborNorm(format!(
            "(v,v) = {n}/3 is not divisible by 4 (length must be a multiple of 12)"
        )));
    }
    if !c.contains(&vec![1; n]) {
        return Err(Error::pre("the all-ones word is not in the code"));
    }
    let a = c.construction_a()?;
    let mut ones = vec![ratio(1, 3); n];
    ones[0] -= Rat::from_integer(Int::from(2));
    let v = a
        .coords_of(&ones)
        .ok_or_else(|| Error::Inconsistent("construction A lattice has full rank".into()))?;
    let v: Vec<Int> = v
        .iter()
        .map(|x| to_int(x).ok_or_else(|| Error::pre("v is not in A_3(C)")))
        .collect::<Result<_>>()?;
    two_neighbor(&a, &v)
}
