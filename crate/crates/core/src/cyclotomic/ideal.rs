use num_integer::Integer;
use num_traits::{One, Signed};

use super::field::{CycloElement, CycloField};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::normal_form::{self, IntRows};
use crate::num::{from_int, Int, Rat};

/// A nonzero fractional ideal `J = (1/d) H` of `Z[ζ_m]`, where the rows of
/// the integer HNF matrix `H` are a Z-basis of `dJ` in the power basis and
/// `d` is minimal, so equal ideals have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalIdeal {
    field: CycloField,
    denominator: Int,
    basis: IntRows,
}

impl FractionalIdeal {
    /// The ideal with Z-basis given by the rows (which must span an
    /// `O`-module of full rank; closure under `ζ` is checked).
    pub fn from_z_span(field: &CycloField, rows: &[Vec<Rat>]) -> Result<Self> {
        let n = field.degree();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("ideal rows need {n} coordinates")));
        }
        let j = Self::from_module_rows(field, rows)?;
        if !j.is_zeta_closed() {
            return Err(Error::input("rows are not closed under multiplication by zeta"));
        }
        Ok(j)
    }

    /// As [`FractionalIdeal::from_z_span`] for rows already known to span a
    /// `Z[ζ]`-module.
    fn from_module_rows(field: &CycloField, rows: &[Vec<Rat>]) -> Result<Self> {
        let n = field.degree();
        let (d, h) = normal_form::rational_span(rows, n);
        if h.len() != n {
            return Err(Error::input("rows do not span a full-rank ideal"));
        }
        Ok(Self::canonical(field, d, h))
    }

    /// Builds the ideal directly from a denominator and numerator rows.
    pub fn from_parts(field: &CycloField, denominator: Int, rows: &[Vec<Int>]) -> Result<Self> {
        if !denominator.is_positive() {
            return Err(Error::input("ideal denominator must be positive"));
        }
        let d = from_int(&denominator);
        let rows: Vec<Vec<Rat>> = rows.iter().map(|r| r.iter().map(|v| from_int(v) / &d).collect()).collect();
        Self::from_z_span(field, &rows)
    }

    fn canonical(field: &CycloField, d: Int, h: IntRows) -> Self {
        let g = h.iter().flatten().fold(d.clone(), |g, v| g.gcd(v));
        let (d, h) = if g.is_one() {
            (d, h)
        } else {
            (&d / &g, h.iter().map(|r| r.iter().map(|v| v / &g).collect()).collect())
        };
        FractionalIdeal {
            field: field.clone(),
            denominator: d,
            basis: h,
        }
    }

    /// The ideal generated by the given elements.
    pub fn generated_by(field: &CycloField, gens: &[CycloElement]) -> Result<Self> {
        let zetas = field.power_basis();
        let rows: Vec<Vec<Rat>> = gens
            .iter()
            .flat_map(|g| zetas.iter().map(move |z| (g * z).coeffs().to_vec()))
            .collect();
        if gens.iter().all(CycloElement::is_zero) {
            return Err(Error::input("the zero ideal is not a fractional ideal"));
        }
        Self::from_module_rows(field, &rows)
    }

    pub fn principal(x: &CycloElement) -> Result<Self> {
        Self::generated_by(x.field(), std::slice::from_ref(x))
    }

    pub fn unit(field: &CycloField) -> Self {
        Self::principal(&field.one()).expect("1 generates the ring of integers")
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn denominator(&self) -> &Int {
        &self.denominator
    }

    /// HNF rows of `denominator · J`.
    pub fn numerator_basis(&self) -> &IntRows {
        &self.basis
    }

    /// The Z-basis `rows / denominator` as elements.
    pub fn basis_elements(&self) -> Vec<CycloElement> {
        let d = from_int(&self.denominator);
        self.basis
            .iter()
            .map(|r| {
                self.field
                    .element(r.iter().map(|v| from_int(v) / &d).collect())
                    .expect("row length equals degree")
            })
            .collect()
    }

    /// Basis rows as a rational matrix.
    pub fn basis_matrix(&self) -> ExactMatrix {
        let n = self.field.degree();
        ExactMatrix::from_int_rows(&self.basis, n).scale(&(Rat::one() / from_int(&self.denominator)))
    }

    pub fn contains(&self, x: &CycloElement) -> bool {
        self.basis_matrix()
            .solve_left(x.coeffs())
            .is_some_and(|c| c.iter().all(|v| v.is_integer()))
    }

    pub fn is_zeta_closed(&self) -> bool {
        // H Z H^{-1} must be integral, Z the matrix of multiplication by ζ
        let n = self.field.degree();
        let h = ExactMatrix::from_int_rows(&self.basis, n);
        let z = self.field.zeta().mul_matrix();
        let hinv = h.inverse().expect("full rank");
        h.try_mul(&z).and_then(|hz| hz.try_mul(&hinv)).is_ok_and(|m| m.is_integral())
    }

    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    /// The absolute norm `[O : J]` (as a rational for fractional `J`).
    pub fn norm(&self) -> Rat {
        self.basis_matrix().det().expect("square").abs()
    }

    pub fn mul(&self, other: &FractionalIdeal) -> FractionalIdeal {
        let a = self.basis_elements();
        let b = other.basis_elements();
        let rows: Vec<Vec<Rat>> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| (x * y).coeffs().to_vec()))
            .collect();
        Self::from_module_rows(&self.field, &rows).expect("product of ideals is an ideal")
    }

    pub fn scale(&self, x: &CycloElement) -> Result<FractionalIdeal> {
        if x.is_zero() {
            return Err(Error::input("the zero ideal is not a fractional ideal"));
        }
        let rows: Vec<Vec<Rat>> = self.basis_elements().iter().map(|b| (b * x).coeffs().to_vec()).collect();
        Self::from_module_rows(&self.field, &rows)
    }

    pub fn conj(&self) -> FractionalIdeal {
        let rows: Vec<Vec<Rat>> = self
            .basis_elements()
            .iter()
            .map(|b| b.conj().coeffs().to_vec())
            .collect();
        Self::from_module_rows(&self.field, &rows).expect("conjugate of an ideal is an ideal")
    }

    /// `J · conj(J)`, the ideal whose intersection with the real subfield is
    /// the relative norm.
    pub fn relative_norm_ideal(&self) -> FractionalIdeal {
        self.mul(&self.conj())
    }

    /// `J* = {x : Tr(xy) ∈ Z for all y ∈ J}`.
    pub fn trace_dual(&self) -> FractionalIdeal {
        let b = self.basis_elements();
        let n = b.len();
        let mut t = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                t[(i, j)] = (&b[i] * &b[j]).trace();
            }
        }
        let dual = t
            .inverse()
            .expect("trace form is nondegenerate")
            .try_mul(&self.basis_matrix())
            .expect("square");
        Self::from_module_rows(&self.field, &dual.row_vecs()).expect("trace dual of an ideal is an ideal")
    }

    /// `J^{-1} = Φ_m'(ζ) · J*`, verified by `J J^{-1} = (1)`.
    pub fn inv(&self) -> Result<FractionalIdeal> {
        let inv = self.trace_dual().scale(&self.field.min_poly_derivative_at_zeta())?;
        if self.mul(&inv) != Self::unit(&self.field) {
            return Err(Error::Inconsistent("ideal inverse check failed".into()));
        }
        Ok(inv)
    }

    pub fn is_conj_invariant(&self) -> bool {
        self.conj() == *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};

    fn field(m: u64) -> CycloField {
        CycloField::new(m).unwrap()
    }

    #[test]
    fn products() {
        let f = field(3);
        let one_minus = &f.one() - &f.zeta();
        let p = FractionalIdeal::principal(&one_minus).unwrap();
        let three = FractionalIdeal::principal(&f.from_rat(rat(3))).unwrap();
        assert_eq!(p.mul(&p.conj()), three);
        assert_eq!(p.mul(&FractionalIdeal::unit(&f)), p);
        assert_eq!(p.norm(), rat(3));
    }

    #[test]
    fn inverses() {
        let f = field(4);
        let two = FractionalIdeal::principal(&f.from_rat(rat(2))).unwrap();
        let half = FractionalIdeal::principal(&f.from_rat(ratio(1, 2))).unwrap();
        assert_eq!(two.inv().unwrap(), half);
        assert_eq!(half.denominator(), &Int::from(2));
        let f = field(12);
        let x = f.element(vec![rat(2), rat(1), rat(0), rat(-3)]).unwrap();
        let j = FractionalIdeal::generated_by(&f, &[x.clone(), f.from_rat(rat(7))]).unwrap();
        let inv = j.inv().unwrap();
        assert!(inv.is_zeta_closed());
        assert_eq!(j.mul(&inv), FractionalIdeal::unit(&f));
    }

    #[test]
    fn rejects_non_ideals() {
        let f = field(4);
        let rows = vec![vec![rat(1), rat(0)], vec![rat(0), rat(2)]];
        assert!(FractionalIdeal::from_z_span(&f, &rows).is_err());
        assert!(FractionalIdeal::principal(&f.zero()).is_err());
    }
}
