//! Hermite constants, upper bounds for them, and the resulting existence test.
//!
//! All decisions compare `n`-th powers in exact rationals. The tabulated
//! bounds `b_n` (7 <= n <= 36) are decimals and are read as exact rationals.

use num_traits::{One, Pow, ToPrimitive};

use crate::error::{Error, Result};
use crate::lattice::{EnumOptions, Lattice};
use crate::num::{rat, ratio, Int, Rat};

/// Upper bounds `b_n` for the Hermite constant, `n = 7..=36`.
pub const TABLE: [(usize, &str); 30] = [
    (7, "1.8115"),
    (8, "2"),
    (9, "2.1327"),
    (10, "2.2637"),
    (11, "2.3934"),
    (12, "2.5218"),
    (13, "2.6494"),
    (14, "2.7759"),
    (15, "2.9015"),
    (16, "3.0264"),
    (17, "3.1507"),
    (18, "3.2744"),
    (19, "3.3975"),
    (20, "3.5201"),
    (21, "3.6423"),
    (22, "3.7641"),
    (23, "3.8855"),
    (24, "4.0067"),
    (25, "4.1275"),
    (26, "4.2481"),
    (27, "4.3685"),
    (28, "4.4887"),
    (29, "4.6087"),
    (30, "4.7286"),
    (31, "4.8484"),
    (32, "4.9681"),
    (33, "5.0877"),
    (34, "5.2072"),
    (35, "5.3267"),
    (36, "5.4462"),
];

/// Parses a plain decimal such as `2.5218` into an exact rational.
pub fn parse_decimal(s: &str) -> Result<Rat> {
    let bad = || Error::input(format!("bad decimal `{s}`"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac}");
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let num: Int = digits.parse().map_err(|_| bad())?;
    let den = Int::from(10u32).pow(frac.len() as u32);
    let q = Rat::new(num, den);
    Ok(if neg { -q } else { q })
}

/// `γ_n^n` for the dimensions where the Hermite constant is known.
pub fn exact_gamma_pow(n: usize) -> Option<Rat> {
    Some(match n {
        1 => rat(1),
        2 => ratio(4, 3),
        3 => rat(2),
        4 => rat(4),
        5 => rat(8),
        6 => ratio(64, 3),
        7 => rat(64),
        8 => rat(256),
        24 => Rat::from_integer(Int::from(4u32).pow(24u32)),
        _ => return None,
    })
}

pub fn table_bound(n: usize) -> Option<Rat> {
    TABLE
        .iter()
        .find(|(k, _)| *k == n)
        .map(|(_, s)| parse_decimal(s).expect("table entries are decimals"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Exact,
    Table,
    None,
}

/// What is known about `γ_n` from above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaBound {
    pub n: usize,
    /// `γ_n^n`, when known exactly.
    pub exact_pow_n: Option<Rat>,
    /// The tabulated bound `b_n` itself (not its power).
    pub table: Option<Rat>,
}

impl GammaBound {
    pub fn kind(&self) -> BoundKind {
        if self.exact_pow_n.is_some() {
            BoundKind::Exact
        } else if self.table.is_some() {
            BoundKind::Table
        } else {
            BoundKind::None
        }
    }

    /// The strongest available bound on `γ_n^n`.
    pub fn governing_pow_n(&self) -> Option<Rat> {
        let table = self.table.as_ref().map(|b| b.pow(self.n as i32));
        match (self.exact_pow_n.clone(), table) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

pub fn upper_gamma(n: usize) -> GammaBound {
    GammaBound {
        n,
        exact_pow_n: exact_gamma_pow(n),
        table: table_bound(n),
    }
}

/// `2 + 2 floor(n/24)`, the largest possible minimum of an even unimodular
/// lattice of dimension `n`.
pub fn extremal_min(n: u64) -> Result<u64> {
    if n == 0 || !n.is_multiple_of(8) {
        return Err(Error::pre(format!(
            "even unimodular lattices need a positive dimension divisible by 8, got {n}"
        )));
    }
    Ok(2 + 2 * (n / 24))
}

/// `γ(L)^n = min(L)^n / det(L)`, kept as the exact pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteValue {
    pub n: usize,
    pub min_pow_n: Rat,
    pub det: Rat,
}

impl HermiteValue {
    pub fn gamma_pow_n(&self) -> Rat {
        &self.min_pow_n / &self.det
    }

    /// Floating-point `γ(L)`, for display only.
    pub fn approx(&self) -> f64 {
        let g = self.gamma_pow_n();
        let v = g.numer().to_f64().unwrap_or(f64::NAN) / g.denom().to_f64().unwrap_or(f64::NAN);
        v.powf(1.0 / self.n as f64)
    }
}

pub fn hermite_gamma(l: &Lattice, opts: &EnumOptions) -> Result<HermiteValue> {
    let min = l.minimum(opts)?.minimum;
    Ok(HermiteValue {
        n: l.dim(),
        min_pow_n: min.pow(l.dim() as i32),
        det: l.det(),
    })
}

/// `γ_n = 4 δ_n^{2/n}` for a center density `δ_n`, for display only.
pub fn gamma_from_center_density(delta: f64, n: usize) -> f64 {
    4.0 * delta.powf(2.0 / n as f64)
}

/// Whether a lattice of dimension `dim`, minimum at least `min` and
/// determinant `det` is compatible with every known bound. `false` means it
/// cannot exist; dimensions without a bound always give `true`.
pub fn exists_possible(dim: usize, min: &Rat, det: &Rat) -> bool {
    if dim == 0 {
        return det.is_one();
    }
    let lhs = min.pow(dim as i32);
    let b = upper_gamma(dim);
    let exact = b.exact_pow_n.map(|g| g * det);
    let table = b.table.map(|t| t.pow(dim as i32) * det);
    !exact.into_iter().chain(table).any(|rhs| lhs > rhs)
}
