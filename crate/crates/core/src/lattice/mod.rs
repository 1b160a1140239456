//! Lattices given by Gram matrices, optionally embedded in a parent lattice.

mod enumerate;
mod isometry;
mod lll;

pub use enumerate::{EnumOptions, ShortVector};
pub use isometry::{is_isometric, Fingerprint, IsometryOptions, IsometryResult};
pub use lll::lll_gram;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::normal_form::{self, IntRows};
use crate::num::{from_int, Int, Rat};

use enumerate::{scaled_norm, to_original, Enumerator};

/// Basis rows of a lattice expressed in the coordinates of a parent lattice
/// with Gram matrix `parent_gram`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub parent_gram: ExactMatrix,
    pub coords: ExactMatrix,
}

/// A positive definite lattice, stored by its Gram matrix.
///
/// When an [`Embedding`] is present, `gram = coords * parent_gram * coords^T`
/// holds exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    gram: ExactMatrix,
    embedding: Option<Embedding>,
}

/// Invariant factors `d_1 | ... | d_k` (each > 1) of `L^# / L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<Int>,
}

impl DiscriminantGroup {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    /// `Some(p)` when the group is `(Z/pZ)^k` for `k >= 1`.
    pub fn elementary_prime(&self) -> Option<Int> {
        let first = self.invariant_factors.first()?;
        if self.invariant_factors.iter().all(|d| d == first) {
            Some(first.clone())
        } else {
            None
        }
    }
}

/// Minimum and kissing data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVectorReport {
    pub minimum: Rat,
    /// Number of vectors attaining the minimum, both signs counted.
    pub count: usize,
    /// One representative per ± pair, in basis coordinates.
    pub vectors: Vec<Vec<Int>>,
}

/// Arithmetic flags of a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub integral: bool,
    pub even: bool,
    pub unimodular: bool,
    /// `Some(p)` if integral with discriminant group `(Z/pZ)^k`, `k >= 1`.
    pub elementary_prime: Option<Int>,
}

/// Result of [`Lattice::meet_join`].
#[derive(Clone, Debug)]
pub struct MeetJoin {
    pub meet: Lattice,
    pub join: Lattice,
    /// `[A : A ∩ B]`, `None` if infinite.
    pub index_in_a: Option<Int>,
    /// `[B : A ∩ B]`, `None` if infinite.
    pub index_in_b: Option<Int>,
}

impl Lattice {
    /// Builds a lattice from a symmetric positive definite Gram matrix.
    pub fn from_gram(gram: ExactMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::input("Gram matrix is not symmetric"));
        }
        if !gram.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Lattice {
            gram,
            embedding: None,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_gram(ExactMatrix::from_i64(rows))
    }

    /// The lattice spanned by the (linearly independent) rows of `coords`
    /// inside a parent with Gram matrix `parent_gram`.
    pub fn in_parent(parent_gram: ExactMatrix, coords: ExactMatrix) -> Result<Self> {
        if coords.cols() != parent_gram.rows() {
            return Err(Error::DimensionMismatch(
                "coords width differs from parent dimension".into(),
            ));
        }
        let gram = coords.congruence(&parent_gram)?;
        let mut l = Self::from_gram(gram)?;
        l.embedding = Some(Embedding {
            parent_gram,
            coords,
        });
        Ok(l)
    }

    /// The Z-span of arbitrary rational rows in parent coordinates (the rows
    /// may be dependent); the basis is the canonical HNF of the span.
    pub fn span_in_parent(parent_gram: ExactMatrix, rows: &[Vec<Rat>]) -> Result<Self> {
        let n = parent_gram.rows();
        let (d, basis) = normal_form::rational_span(rows, n);
        let coords = ExactMatrix::from_int_rows(&basis, n).scale(&from_int(&d).recip());
        Self::in_parent(parent_gram, coords)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        self.embedding.as_ref()
    }

    /// Drops the parent embedding.
    pub fn detached(&self) -> Lattice {
        Lattice {
            gram: self.gram.clone(),
            embedding: None,
        }
    }

    /// Basis rows in parent coordinates, treating a detached lattice as its own parent.
    pub fn parent_coords(&self) -> (ExactMatrix, ExactMatrix) {
        match &self.embedding {
            Some(e) => (e.parent_gram.clone(), e.coords.clone()),
            None => (self.gram.clone(), ExactMatrix::identity(self.dim())),
        }
    }

    pub fn det(&self) -> Rat {
        self.gram.det().expect("Gram matrix is square")
    }

    pub fn inner(&self, x: &[Rat], y: &[Rat]) -> Rat {
        self.gram.form(x, y)
    }

    pub fn norm_of(&self, x: &[Rat]) -> Rat {
        self.gram.form(x, x)
    }

    pub fn is_integral(&self) -> bool {
        self.gram.is_integral()
    }

    pub fn is_even(&self) -> bool {
        self.is_integral()
            && (0..self.dim()).all(|i| {
                let v = self.gram[(i, i)].numer();
                v % 2u32 == Int::zero()
            })
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.det().is_one()
    }

    /// The sublattice spanned by integer coefficient rows (in this lattice's
    /// basis), embedded in this lattice's parent (or in this lattice itself
    /// when detached).
    pub fn sublattice(&self, rows: &[Vec<Int>]) -> Result<Lattice> {
        let c = ExactMatrix::from_int_rows(rows, self.dim());
        self.rational_sublattice(&c)
    }

    /// As [`Lattice::sublattice`], for rational coefficient rows (which may
    /// leave the lattice, e.g. dual or neighbor bases).
    pub fn rational_sublattice(&self, c: &ExactMatrix) -> Result<Lattice> {
        let (pg, pc) = self.parent_coords();
        Lattice::in_parent(pg, c.try_mul(&pc)?)
    }

    /// Coefficients of a parent-coordinate vector in this basis, if it lies in
    /// the rational span (`None` otherwise). Integral iff the vector is in the lattice.
    pub fn coords_of(&self, parent_vec: &[Rat]) -> Option<Vec<Rat>> {
        let (_, pc) = self.parent_coords();
        pc.solve_left(parent_vec)
    }

    /// The dual lattice; its basis is the dual basis.
    pub fn dual(&self) -> Lattice {
        let inv = self.gram.inverse().expect("positive definite Gram is invertible");
        let embedding = self.embedding.as_ref().map(|e| Embedding {
            parent_gram: e.parent_gram.clone(),
            coords: &inv * &e.coords,
        });
        Lattice {
            gram: inv,
            embedding,
        }
    }

    /// `gram` scaled to integers, with the scale factor.
    pub(crate) fn integer_gram(&self) -> (Int, IntRows) {
        let d = self.gram.denominator();
        let scaled = self.gram.scale(&from_int(&d));
        (d, scaled.to_int_rows().expect("scaled Gram is integral"))
    }

    /// LLL-reduced lattice (δ = 3/4) and the unimodular transform `T`
    /// with `reduced basis = T * basis`.
    pub fn lll(&self) -> Result<(Lattice, ExactMatrix)> {
        let (_, g) = self.integer_gram();
        let (_, h) = lll_gram(&g)?;
        let t = ExactMatrix::from_int_rows(&h, self.dim());
        let reduced = match &self.embedding {
            Some(e) => Lattice::in_parent(e.parent_gram.clone(), &t * &e.coords)?,
            None => Lattice::from_gram(t.congruence(&self.gram)?)?,
        };
        Ok((reduced, t))
    }

    /// Nonzero vectors of norm at most `bound`, one per ± pair, sorted by norm.
    pub fn short_vectors(&self, bound: &Rat, opts: &EnumOptions) -> Result<Vec<ShortVector>> {
        if self.dim() == 0 {
            return Ok(Vec::new());
        }
        let (d, g) = self.integer_gram();
        let (rg, h) = lll_gram(&g)?;
        let e = Enumerator::new(&rg)?;
        let scaled = (bound * from_int(&d)).floor().to_integer();
        let b = scaled
            .to_i128()
            .ok_or_else(|| Error::input("enumeration bound too large"))?;
        let raw = e.run(b, opts)?;
        let mut out: Vec<ShortVector> = raw
            .into_iter()
            .map(|(norm, y)| ShortVector {
                norm: scaled_norm(norm, &d),
                coords: to_original(&y, &h),
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Both signs of every vector from [`Lattice::short_vectors`].
    pub fn short_vectors_signed(&self, bound: &Rat, opts: &EnumOptions) -> Result<Vec<ShortVector>> {
        let mut out = Vec::new();
        for v in self.short_vectors(bound, opts)? {
            let neg = ShortVector {
                norm: v.norm.clone(),
                coords: v.coords.iter().map(|c| -c).collect(),
            };
            out.push(v);
            out.push(neg);
        }
        Ok(out)
    }

    /// Exact minimum and number of minimal vectors.
    pub fn minimum(&self, opts: &EnumOptions) -> Result<ShortVectorReport> {
        if self.dim() == 0 {
            return Err(Error::EmptyLattice);
        }
        let (red, _) = self.lll()?;
        let bound = (0..red.dim())
            .map(|i| red.gram[(i, i)].clone())
            .min()
            .expect("nonempty");
        self.minimum_capped(&bound, opts)?
            .ok_or_else(|| Error::Inconsistent("basis vector shorter than enumeration bound".into()))
    }

    /// Minimum restricted to norms `<= cap`; `Ok(None)` means `min > cap`.
    pub fn minimum_capped(&self, cap: &Rat, opts: &EnumOptions) -> Result<Option<ShortVectorReport>> {
        if self.dim() == 0 {
            return Err(Error::EmptyLattice);
        }
        let vs = self.short_vectors(cap, opts)?;
        let Some(min) = vs.first().map(|v| v.norm.clone()) else {
            return Ok(None);
        };
        let vectors: Vec<Vec<Int>> = vs
            .into_iter()
            .take_while(|v| v.norm == min)
            .map(|v| v.coords)
            .collect();
        Ok(Some(ShortVectorReport {
            minimum: min,
            count: 2 * vectors.len(),
            vectors,
        }))
    }

    /// `#{x in L : (x,x) = norm, (x, beta) = ip}`, both signs counted.
    ///
    /// Vectors are filtered during enumeration, so large shells are never
    /// stored.
    pub fn count_slice(&self, beta: &[Rat], norm: &Rat, ip: &Rat, opts: &EnumOptions) -> Result<usize> {
        if beta.len() != self.dim() {
            return Err(Error::DimensionMismatch("beta length".into()));
        }
        if self.dim() == 0 {
            return Ok(0);
        }
        let (d, g) = self.integer_gram();
        let target_norm = norm * from_int(&d);
        if !target_norm.is_integer() {
            return Ok(0);
        }
        let (rg, h) = lll_gram(&g)?;
        // (x, beta) for x = y h equals y . (h G beta)
        let gb = self.gram.left_apply(beta);
        let w: Vec<Rat> = h
            .iter()
            .map(|row| row.iter().zip(&gb).map(|(a, b)| from_int(a) * b).sum())
            .collect();
        let scale = crate::num::common_denominator(w.iter().chain(std::iter::once(ip)));
        let too_big = || Error::input("slice data too large for enumeration");
        let to_i = |q: &Rat| (q * from_int(&scale)).to_integer().to_i128().ok_or_else(too_big);
        let w: Vec<i128> = w.iter().map(to_i).collect::<Result<_>>()?;
        let target = to_i(ip)?;
        let nt = target_norm.to_integer().to_i128().ok_or_else(too_big)?;
        let dot = |y: &[i64]| -> Option<i128> {
            y.iter().zip(&w).try_fold(0i128, |acc, (a, b)| acc.checked_add(b.checked_mul(*a as i128)?))
        };
        let keep = |n: i128, y: &[i64]| n == nt && dot(y).is_some_and(|t| t == target || -t == target);
        let e = Enumerator::new(&rg)?;
        let hits = e.run_filtered(nt, opts, &keep)?;
        Ok(hits
            .iter()
            .map(|(_, y)| {
                let t = dot(y).expect("checked in filter");
                (t == target) as usize + (-t == target) as usize
            })
            .sum())
    }

    /// Invariant factors of `L^#/L` for an integral lattice.
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup> {
        if !self.is_integral() {
            return Err(Error::NonIntegral("lattice is not integral".into()));
        }
        let d = normal_form::snf(&self.gram)?;
        Ok(DiscriminantGroup {
            invariant_factors: d.into_iter().filter(|v| !v.is_one()).collect(),
        })
    }

    pub fn classify(&self) -> Classification {
        let integral = self.is_integral();
        let elementary_prime = if integral {
            self.discriminant_group()
                .ok()
                .and_then(|g| g.elementary_prime())
                .filter(|p| {
                    p.to_u64().is_some_and(crate::num::is_prime)
                })
        } else {
            None
        };
        Classification {
            integral,
            even: self.is_even(),
            unimodular: self.is_unimodular(),
            elementary_prime,
        }
    }

    /// Whether two embedded lattices span the same Z-module in a common parent.
    pub fn same_module(&self, other: &Lattice) -> Result<bool> {
        let (pa, ca) = self.parent_coords();
        let (pb, cb) = other.parent_coords();
        if pa != pb {
            return Err(Error::pre("lattices live in different parents"));
        }
        let n = pa.rows();
        Ok(normal_form::rational_span(&ca.row_vecs(), n) == normal_form::rational_span(&cb.row_vecs(), n))
    }

    /// Intersection and sum of two lattices embedded in the same parent.
    pub fn meet_join(&self, other: &Lattice) -> Result<MeetJoin> {
        let (Some(ea), Some(eb)) = (&self.embedding, &other.embedding) else {
            return Err(Error::pre("meet/join needs lattices with a declared parent"));
        };
        if ea.parent_gram != eb.parent_gram {
            return Err(Error::pre("lattices have different parents"));
        }
        let pg = ea.parent_gram.clone();
        let n = pg.rows();
        let mut all = ea.coords.row_vecs();
        all.extend(eb.coords.row_vecs());
        let join = Lattice::span_in_parent(pg.clone(), &all)?;

        // x A + y B = 0  =>  x A is in the meet.
        let d = crate::num::common_denominator(all.iter().flatten());
        let ints: IntRows = all
            .iter()
            .map(|r| r.iter().map(|v| (v * from_int(&d)).to_integer()).collect())
            .collect();
        let ker = normal_form::left_kernel(&ints, n);
        let ka = self.dim();
        let meet_rows: Vec<Vec<Rat>> = ker
            .iter()
            .map(|k| {
                let x: Vec<Rat> = k[..ka].iter().map(from_int).collect();
                ea.coords.left_apply(&x)
            })
            .filter(|r| r.iter().any(|v| !v.is_zero()))
            .collect();
        let meet = Lattice::span_in_parent(pg, &meet_rows)?;
        let index = |big: &Lattice| -> Option<Int> {
            if meet.dim() != big.dim() {
                return None;
            }
            let q = meet.det() / big.det();
            crate::num::rat_sqrt(&q).map(|r| r.to_integer())
        };
        Ok(MeetJoin {
            index_in_a: index(self),
            index_in_b: index(other),
            meet,
            join,
        })
    }

    /// The lattice with Gram matrix scaled by `c > 0`.
    pub fn scaled(&self, c: &Rat) -> Result<Lattice> {
        if !c.is_positive() {
            return Err(Error::input("scale must be positive"));
        }
        Lattice::from_gram(self.gram.scale(c))
    }

    /// Orthogonal sum.
    pub fn orthogonal_sum(&self, other: &Lattice) -> Lattice {
        let (a, b) = (self.dim(), other.dim());
        let mut g = ExactMatrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                g[(i, j)] = self.gram[(i, j)].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                g[(a + i, a + j)] = other.gram[(i, j)].clone();
            }
        }
        Lattice {
            gram: g,
            embedding: None,
        }
    }
}

#[cfg(test)]
mod tests;
