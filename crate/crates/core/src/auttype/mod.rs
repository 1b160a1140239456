//! Prime-order automorphisms: fixed and image lattices, the type
//! `p-(z,d)-s`, its structural laws, and a bound/parity scan over types.
//!
//! Matrices act on row vectors of basis coordinates: the basis vector `b_i`
//! maps to `Σ_j σ_ij b_j`, so `σ` is an isometry iff `σ G σᵀ = G`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::bounds;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::ExactMatrix;
use crate::normal_form::{self, IntRows};
use crate::num::{exact_log, from_int, is_prime, primes_up_to, rat, Int, Rat};
use crate::poly;

/// Default cap on the order search.
pub const DEFAULT_ORDER_CAP: u64 = 10_000;

/// `p-(z,d)-s`: `z` is the dimension of the image over `Q[ζ_p]`, `d` the
/// fixed dimension and `p^s = [L : L_K ⊕ L_I]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutomorphismType {
    pub p: u64,
    pub z: usize,
    pub d: usize,
    pub s: usize,
}

impl AutomorphismType {
    pub fn dim(&self) -> usize {
        self.d + self.z * (self.p as usize - 1)
    }

    /// `s <= min(z, d)`.
    pub fn index_law(&self) -> bool {
        self.s <= self.z.min(self.d)
    }

    /// `z - s` even and nonnegative; only asserted for odd `p`.
    pub fn parity_law(&self) -> Option<bool> {
        (self.p != 2).then(|| self.z >= self.s && (self.z - self.s).is_multiple_of(2))
    }
}

impl fmt::Display for AutomorphismType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-({},{})-{}", self.p, self.z, self.d, self.s)
    }
}

fn int_matrix(sigma: &ExactMatrix) -> Result<IntRows> {
    sigma
        .to_int_rows()
        .map_err(|_| Error::input("automorphism matrix must have integer entries"))
}

/// Smallest `N <= cap` with `σ^N = I`.
pub fn matrix_order(sigma: &ExactMatrix, cap: u64) -> Result<u64> {
    if !sigma.is_square() {
        return Err(Error::NotSquare {
            rows: sigma.rows(),
            cols: sigma.cols(),
        });
    }
    let id = ExactMatrix::identity(sigma.rows());
    let mut power = sigma.clone();
    for k in 1..=cap {
        if power == id {
            return Ok(k);
        }
        power = power.try_mul(sigma)?;
    }
    Err(Error::OrderExceedsCap(cap))
}

/// Checks that `σ` maps `L` onto itself isometrically and returns its order.
pub fn check_automorphism(l: &Lattice, sigma: &ExactMatrix, cap: u64) -> Result<u64> {
    if !sigma.is_square() {
        return Err(Error::NotSquare {
            rows: sigma.rows(),
            cols: sigma.cols(),
        });
    }
    if sigma.rows() != l.dim() {
        return Err(Error::DimensionMismatch(format!(
            "automorphism is {}x{}, lattice has dimension {}",
            sigma.rows(),
            sigma.cols(),
            l.dim()
        )));
    }
    int_matrix(sigma)?;
    if &sigma.congruence(l.gram())? != l.gram() {
        return Err(Error::NotAnIsometry);
    }
    // σ G σᵀ = G forces det σ = ±1, so σ is invertible over Z.
    matrix_order(sigma, cap)
}

/// The matrix of the map induced on `L` by a linear map `P` of its parent
/// (acting on parent row vectors), i.e. `σ` with `σ C = C P` for the basis
/// coordinates `C`. Fails unless `P` maps `L` into itself.
pub fn induced_automorphism(l: &Lattice, parent_map: &ExactMatrix) -> Result<ExactMatrix> {
    let (_, c) = l.parent_coords();
    let image = c.try_mul(parent_map)?;
    let rows = image
        .row_vecs()
        .iter()
        .map(|r| l.coords_of(r).ok_or_else(|| Error::pre("map leaves the span of the lattice")))
        .collect::<Result<Vec<_>>>()?;
    let sigma = ExactMatrix::from_rows(rows, l.dim())?;
    if !sigma.is_integral() {
        return Err(Error::pre("map does not preserve the lattice"));
    }
    Ok(sigma)
}

/// `L_K`, `L_I` and the type of an automorphism of prime order `p`.
#[derive(Clone, Debug)]
pub struct FixImageSplit {
    /// `L ∩ ker(σ - 1)`, in the coordinates of `L`'s parent.
    pub fixed: Lattice,
    /// `L ∩ im(σ - 1)`.
    pub image: Lattice,
    /// Bases of `L_K` and `L_I` in basis coordinates of `L`.
    pub fixed_basis: IntRows,
    pub image_basis: IntRows,
    /// `[L : L_K ⊕ L_I]`.
    pub index: Int,
    pub ty: AutomorphismType,
}

pub fn split_fix_image(l: &Lattice, sigma: &ExactMatrix, p: u64) -> Result<FixImageSplit> {
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    let order = check_automorphism(l, sigma, p)
        .map_err(|e| match e {
            Error::OrderExceedsCap(_) => Error::pre(format!("automorphism does not have order {p}")),
            other => other,
        })?;
    if order != p {
        return Err(Error::pre(format!("automorphism has order {order}, not {p}")));
    }
    let n = l.dim();
    let s = int_matrix(sigma)?;
    let a: IntRows = s
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, v)| if i == j { v - Int::one() } else { v.clone() })
                .collect()
        })
        .collect();
    let fixed_basis = normal_form::left_kernel(&a, n);
    let image_basis = normal_form::saturate(&a, n);
    let d = fixed_basis.len();
    let img = image_basis.len();
    if d + img != n || !img.is_multiple_of(p as usize - 1) {
        return Err(Error::Inconsistent("fixed and image dimensions do not fit".into()));
    }
    let mut both = fixed_basis.clone();
    both.extend(image_basis.iter().cloned());
    let index = ExactMatrix::from_int_rows(&both, n).det()?.abs().to_integer();
    let s_exp = exact_log(&index, p)
        .ok_or_else(|| Error::Inconsistent(format!("index {index} is not a power of {p}")))?;
    cross_check_projection(sigma, p, &fixed_basis, &image_basis)?;
    let ty = AutomorphismType {
        p,
        z: img / (p as usize - 1),
        d,
        s: s_exp as usize,
    };
    Ok(FixImageSplit {
        fixed: l.sublattice(&fixed_basis)?,
        image: l.sublattice(&image_basis)?,
        fixed_basis,
        image_basis,
        index,
        ty,
    })
}

/// `π_K = (1/p)(1 + σ + ... + σ^{p-1})` must fix `L_K` and kill `L_I`.
fn cross_check_projection(sigma: &ExactMatrix, p: u64, fixed: &IntRows, image: &IntRows) -> Result<()> {
    let n = sigma.rows();
    let mut sum = ExactMatrix::zeros(n, n);
    let mut power = ExactMatrix::identity(n);
    for _ in 0..p {
        sum = sum.add(&power)?;
        power = power.try_mul(sigma)?;
    }
    let pi = sum.scale(&(Rat::one() / rat(p as i64)));
    let apply = |row: &[Int]| pi.left_apply(&row.iter().map(from_int).collect::<Vec<_>>());
    let fixes = fixed
        .iter()
        .all(|r| apply(r) == r.iter().map(from_int).collect::<Vec<_>>());
    let kills = image.iter().all(|r| apply(r).iter().all(Zero::is_zero));
    if fixes && kills {
        Ok(())
    } else {
        Err(Error::Inconsistent("projection onto the fixed space disagrees".into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail(String),
    NotApplicable(String),
}

impl LawStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, LawStatus::Fail(_))
    }
}

impl fmt::Display for LawStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawStatus::Pass => write!(f, "pass"),
            LawStatus::Fail(why) => write!(f, "FAIL ({why})"),
            LawStatus::NotApplicable(why) => write!(f, "not applicable ({why})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TypeLawReport {
    pub split: FixImageSplit,
    /// `s <= min(z, d)`.
    pub index_bound: LawStatus,
    /// Both discriminant groups are `(Z/pZ)^s` (for unimodular `L`).
    pub discriminant: LawStatus,
    /// `z ≡ s (mod 2)` (for odd `p`).
    pub parity: LawStatus,
}

impl TypeLawReport {
    pub fn all_hold(&self) -> bool {
        !(self.index_bound.is_fail() || self.discriminant.is_fail() || self.parity.is_fail())
    }
}

pub fn verify_type_laws(l: &Lattice, sigma: &ExactMatrix, p: u64) -> Result<TypeLawReport> {
    let split = split_fix_image(l, sigma, p)?;
    let ty = split.ty;
    let index_bound = if ty.index_law() {
        LawStatus::Pass
    } else {
        LawStatus::Fail(format!("s = {} exceeds min(z, d) = {}", ty.s, ty.z.min(ty.d)))
    };
    let discriminant = if !l.is_unimodular() {
        LawStatus::NotApplicable("lattice is not unimodular".into())
    } else {
        let want: Vec<Int> = vec![Int::from(p); ty.s];
        let fk = split.fixed.discriminant_group()?.invariant_factors;
        let fi = split.image.discriminant_group()?.invariant_factors;
        if fk == want && fi == want {
            LawStatus::Pass
        } else {
            LawStatus::Fail(format!("discriminant groups {fk:?} and {fi:?}, expected {}^{}", p, ty.s))
        }
    };
    let parity = match ty.parity_law() {
        None => LawStatus::NotApplicable("p = 2".into()),
        Some(true) => LawStatus::Pass,
        Some(false) => LawStatus::Fail(format!("z - s = {} - {} is not even", ty.z, ty.s)),
    };
    Ok(TypeLawReport {
        split,
        index_bound,
        discriminant,
        parity,
    })
}

/// Characteristic polynomial of a finite-order matrix as `∏ Φ_d^{a_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorization {
    pub order: u64,
    /// `(d, a_d)` with `a_d > 0`, by increasing `d`.
    pub factors: Vec<(u64, usize)>,
    /// Whether `Φ_order` divides the minimal polynomial.
    pub top_divides_minpoly: bool,
}

pub fn cyclo_factor(sigma: &ExactMatrix, cap: u64) -> Result<CycloFactorization> {
    int_matrix(sigma)?;
    let order = matrix_order(sigma, cap)?;
    let mut rest = poly::char_poly(sigma)?;
    let mut factors = Vec::new();
    for d in poly::divisors(order) {
        let phi = poly::cyclotomic(d);
        let mut a = 0;
        loop {
            let (q, r) = poly::div_rem(&rest, &phi)?;
            if !r.is_empty() {
                break;
            }
            rest = q;
            a += 1;
        }
        if a > 0 {
            factors.push((d, a));
        }
    }
    if rest != vec![rat(1)] {
        return Err(Error::Inconsistent("characteristic polynomial is not a product of cyclotomic factors".into()));
    }
    // finite order means σ is semisimple, so the minimal polynomial is ∏ Φ_d over the d present
    let top_divides_minpoly = factors.iter().any(|&(d, _)| d == order);
    Ok(CycloFactorization {
        order,
        factors,
        top_divides_minpoly,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSide {
    Fixed,
    Image,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanStatus {
    Allowed,
    ExcludedByParity,
    /// No lattice of dimension `dim`, minimum at least `min` and determinant
    /// `det` can exist.
    ExcludedByBound {
        side: BoundSide,
        dim: usize,
        det: Int,
        min: Rat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub ty: AutomorphismType,
    pub status: ScanStatus,
    pub note: String,
}

impl ScanRow {
    pub fn is_allowed(&self) -> bool {
        self.status == ScanStatus::Allowed
    }
}

/// Every type `p-(z,d)-s` with `d + z(p-1) = n`, `z >= 1`, `0 <= s <= min(z,d)`,
/// classified by the parity law (odd `p`) and the Hermite bounds applied to
/// `L_K` (dimension `d`, determinant `p^s`) and `L_I` (dimension `z(p-1)`,
/// determinant `p^s`), both of minimum at least `min`.
pub fn scan_types(n: usize, min: &Rat, p: u64) -> Result<Vec<ScanRow>> {
    if n == 0 || min <= &Rat::zero() {
        return Err(Error::input("dimension and minimum must be positive"));
    }
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    let step = p as usize - 1;
    let mut rows = Vec::new();
    for z in 1..=n / step {
        let d = n - z * step;
        for s in 0..=z.min(d) {
            let ty = AutomorphismType { p, z, d, s };
            let det = Int::from(p).pow(s as u32);
            let detq = from_int(&det);
            let bound = |side: BoundSide, dim: usize| ScanStatus::ExcludedByBound {
                side,
                dim,
                det: det.clone(),
                min: min.clone(),
            };
            let (status, note) = if ty.parity_law() == Some(false) {
                (ScanStatus::ExcludedByParity, format!("z - s = {} is odd", z as i64 - s as i64))
            } else if d > 0 && !bounds::exists_possible(d, min, &detq) {
                (
                    bound(BoundSide::Fixed, d),
                    format!("no lattice of dim {d}, min >= {min}, det {p}^{s}"),
                )
            } else if !bounds::exists_possible(z * step, min, &detq) {
                (
                    bound(BoundSide::Image, z * step),
                    format!("no lattice of dim {}, min >= {min}, det {p}^{s}", z * step),
                )
            } else {
                (ScanStatus::Allowed, classification_note(n, min, &ty).unwrap_or_default())
            };
            rows.push(ScanRow { ty, status, note });
        }
    }
    Ok(rows)
}

/// Types that survive the scan but are known to be impossible because the
/// genus of the fixed lattice has been enumerated.
const CLASSIFICATION_EXCLUSIONS: &[(usize, i64, AutomorphismType, &str)] = &[(
    48,
    6,
    AutomorphismType { p: 7, z: 6, d: 12, s: 6 },
    "excluded by classification: no lattice in the genus of L_K has minimum 6",
)];

fn classification_note(n: usize, min: &Rat, ty: &AutomorphismType) -> Option<String> {
    CLASSIFICATION_EXCLUSIONS
        .iter()
        .find(|(dim, m, t, _)| *dim == n && *min == rat(*m) && t == ty)
        .map(|(.., why)| why.to_string())
}

/// [`scan_types`] for every prime `p <= n + 1`.
pub fn scan_all(n: usize, min: &Rat) -> Result<Vec<ScanRow>> {
    let mut out = Vec::new();
    for p in primes_up_to(n as u64 + 1) {
        out.extend(scan_types(n, min, p)?);
    }
    Ok(out)
}
