//! Linear codes over `Z/pZ` and the code lattices `A_p(C)`.

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{EnumOptions, Lattice};
use crate::matrix::ExactMatrix;
use crate::normal_form::{self, fp, IntRows};
use crate::num::{is_prime, rat, Int, Rat};

/// A linear code of length `n` over `F_p`, stored by the reduced row echelon
/// form of a generator matrix (so equal codes compare equal).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCode {
    p: u64,
    n: usize,
    generator: Vec<Vec<u64>>,
}

/// Largest dimension accepted by [`LinearCode::min_weight`].
pub const MAX_MIN_WEIGHT_DIM: usize = 13;

impl LinearCode {
    /// The code spanned by `rows` (any generating set).
    pub fn new(p: u64, n: usize, rows: &[Vec<u64>]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("codeword length must be {n}")));
        }
        let (generator, _) = fp::rref(rows, n, p);
        Ok(LinearCode { p, n, generator })
    }

    pub fn zero(p: u64, n: usize) -> Result<Self> {
        Self::new(p, n, &[])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Vec<u64>] {
        &self.generator
    }

    fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        a.iter().zip(b).fold(0u64, |acc, (x, y)| (acc + x * y) % self.p)
    }

    pub fn contains(&self, word: &[u64]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let mut rows = self.generator.clone();
        rows.push(word.iter().map(|v| v % self.p).collect());
        fp::rref(&rows, self.n, self.p).0.len() == self.dim()
    }

    pub fn dual(&self) -> LinearCode {
        let generator = if self.generator.is_empty() {
            (0..self.n)
                .map(|i| (0..self.n).map(|j| (i == j) as u64).collect())
                .collect()
        } else {
            fp::kernel(&self.generator, self.n, self.p)
        };
        LinearCode {
            p: self.p,
            n: self.n,
            generator,
        }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.generator
            .iter()
            .all(|a| self.generator.iter().all(|b| self.dot(a, b) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        self.n == 2 * self.dim() && self.is_self_orthogonal()
    }

    fn word(&self, msg: &[u64]) -> Vec<u64> {
        let mut w = vec![0u64; self.n];
        for (m, row) in msg.iter().zip(&self.generator) {
            if *m == 0 {
                continue;
            }
            for (x, g) in w.iter_mut().zip(row) {
                *x = (*x + m * g) % self.p;
            }
        }
        w
    }

    /// Minimum Hamming weight of a nonzero codeword.
    ///
    /// Enumerates messages whose leading nonzero coefficient is 1 (scalar
    /// multiples share a weight), split by the leading position.
    pub fn min_weight(&self) -> Result<usize> {
        let k = self.dim();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        if k > MAX_MIN_WEIGHT_DIM {
            return Err(Error::input(format!(
                "min_weight supports dimension <= {MAX_MIN_WEIGHT_DIM}, got {k}"
            )));
        }
        let p = self.p;
        let best = (0..k)
            .into_par_iter()
            .map(|lead| {
                // messages (0,..,0,1,m_{lead+1},..,m_{k-1})
                let tail = k - lead - 1;
                let total = p.pow(tail as u32);
                let mut best = usize::MAX;
                let mut msg = vec![0u64; k];
                msg[lead] = 1;
                for idx in 0..total {
                    let mut r = idx;
                    for slot in msg[lead + 1..].iter_mut() {
                        *slot = r % p;
                        r /= p;
                    }
                    let w = self.word(&msg).iter().filter(|&&x| x != 0).count();
                    if w < best {
                        best = w;
                        if best <= 1 {
                            break;
                        }
                    }
                }
                best
            })
            .min()
            .expect("k >= 1");
        Ok(best)
    }

    /// The code lattice `A_p(C) = { (1/p) Σ c_i e_i : c mod p in C }` inside
    /// the frame parent with Gram matrix `p I_n`.
    pub fn construction_a(&self) -> Result<Lattice> {
        let n = self.n;
        let p = Int::from(self.p);
        let mut rows: IntRows = self
            .generator
            .iter()
            .map(|r| r.iter().map(|&v| Int::from(v)).collect())
            .collect();
        for i in 0..n {
            rows.push((0..n).map(|j| if i == j { p.clone() } else { Int::zero() }).collect());
        }
        let h = normal_form::hnf_basis(&rows, n);
        let pr = rat(self.p as i64);
        let coords = ExactMatrix::from_int_rows(&h, n).scale(&pr.recip());
        Lattice::in_parent(ExactMatrix::scalar(n, pr), coords)
    }

    /// The frame vectors `e_1, .., e_n` of a Construction A lattice, in the
    /// lattice's basis coordinates.
    pub fn standard_frame(lattice: &Lattice) -> Result<Vec<Vec<Int>>> {
        let n = lattice
            .embedding()
            .ok_or_else(|| Error::pre("lattice has no frame parent"))?
            .parent_gram
            .rows();
        (0..n)
            .map(|i| {
                let e: Vec<Rat> = (0..n).map(|j| rat((i == j) as i64)).collect();
                let c = lattice
                    .coords_of(&e)
                    .ok_or_else(|| Error::pre("frame vector outside the lattice span"))?;
                c.iter()
                    .map(|v| {
                        crate::num::to_int(v).ok_or_else(|| Error::pre("frame vector not in the lattice"))
                    })
                    .collect()
            })
            .collect()
    }
}

fn check_frame(l: &Lattice, frame: &[Vec<Int>], p: u64) -> Result<ExactMatrix> {
    let n = l.dim();
    if frame.len() != n || frame.iter().any(|f| f.len() != n) {
        return Err(Error::pre(format!("a frame needs {n} vectors of length {n}")));
    }
    let f = ExactMatrix::from_int_rows(frame, n);
    let g = f.congruence(l.gram())?;
    let pr = rat(p as i64);
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { pr.clone() } else { rat(0) };
            if g[(i, j)] != want {
                return Err(Error::pre(format!(
                    "frame vectors must be pairwise orthogonal of norm {p}"
                )));
            }
        }
    }
    Ok(f)
}

/// Recovers the code `C` with `L = A_p(C)` from a `p`-frame of `L` given in
/// basis coordinates.
pub fn frame_extract(l: &Lattice, frame: &[Vec<Int>], p: u64) -> Result<LinearCode> {
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    let n = l.dim();
    let f = check_frame(l, frame, p)?;
    // basis of L in frame coordinates; p * X must be integral
    let x = f.inverse()?.scale(&rat(p as i64));
    let rows = x
        .to_int_rows()
        .map_err(|_| Error::pre("lattice is not contained in the dual of the frame lattice"))?;
    let pm = Int::from(p);
    let words: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| num_integer::Integer::mod_floor(v, &pm).to_u64().expect("residue"))
                .collect()
        })
        .collect();
    let code = LinearCode::new(p, n, &words)?;
    let expect = rat(p as i64).pow(n as i32 - 2 * code.dim() as i32);
    if l.det() != expect {
        return Err(Error::Inconsistent("frame extraction determinant mismatch".into()));
    }
    Ok(code)
}

/// Searches for `dim L` pairwise orthogonal vectors of norm `p`.
pub fn find_frame(l: &Lattice, p: u64, opts: &EnumOptions) -> Result<Option<Vec<Vec<Int>>>> {
    let n = l.dim();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let pr = rat(p as i64);
    let cands: Vec<Vec<Int>> = l
        .short_vectors(&pr, opts)?
        .into_iter()
        .filter(|v| v.norm == pr)
        .map(|v| v.coords)
        .collect();
    if cands.len() < n {
        return Ok(None);
    }
    let rc: Vec<Vec<Rat>> = cands
        .iter()
        .map(|c| c.iter().map(crate::num::from_int).collect())
        .collect();
    let gv: Vec<Vec<Rat>> = rc.iter().map(|c| l.gram().left_apply(c)).collect();
    let m = cands.len();
    let orth: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| rc[j].iter().zip(&gv[i]).map(|(a, b)| a * b).sum::<Rat>().is_zero())
                .collect()
        })
        .collect();
    let mut nodes = 0u64;
    let mut chosen = Vec::new();
    let all: Vec<usize> = (0..m).collect();
    fn go(
        avail: &[usize],
        need: usize,
        orth: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if need == 0 {
            return Ok(true);
        }
        for (pos, &c) in avail.iter().enumerate() {
            if avail.len() - pos < need {
                break;
            }
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            let rest: Vec<usize> = avail[pos + 1..].iter().copied().filter(|&d| orth[c][d]).collect();
            if rest.len() + 1 < need {
                continue;
            }
            chosen.push(c);
            if go(&rest, need - 1, orth, chosen, nodes, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    if go(&all, n, &orth, &mut chosen, &mut nodes, opts.budget)? {
        Ok(Some(chosen.into_iter().map(|i| cands[i].clone()).collect()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn duals() {
        let z = LinearCode::zero(3, 2).unwrap();
        assert_eq!(z.dual().dim(), 2);
        assert!(!z.is_self_dual());
        assert!(fixtures::tetracode().is_self_dual());
        assert!(fixtures::golay12().is_self_dual());
        let t = LinearCode::new(3, 4, &[vec![1, 1, 1, 0], vec![0, 1, 2, 1]]).unwrap();
        assert_eq!(t, fixtures::tetracode());
        assert_eq!(t.dual(), t);
    }

    #[test]
    fn min_weights() {
        assert_eq!(fixtures::tetracode().min_weight().unwrap(), 3);
        assert_eq!(fixtures::golay12().min_weight().unwrap(), 6);
        assert_eq!(LinearCode::zero(3, 4).unwrap().min_weight(), Err(Error::ZeroCode));
    }

    #[test]
    fn construction_a_examples() {
        let opts = EnumOptions::default();
        let l = LinearCode::zero(3, 2).unwrap().construction_a().unwrap();
        assert_eq!(l.gram(), &ExactMatrix::scalar(2, rat(3)));
        assert_eq!(l.det(), rat(9));
        assert_eq!(l.minimum(&opts).unwrap().minimum, rat(3));
        let t = fixtures::tetracode().construction_a().unwrap();
        assert!(t.is_unimodular() && !t.is_even());
        assert_eq!(t.minimum(&opts).unwrap().minimum, rat(1));
    }

    #[test]
    fn frame_round_trip_tetracode() {
        let c = fixtures::tetracode();
        let l = c.construction_a().unwrap();
        let frame = LinearCode::standard_frame(&l).unwrap();
        assert_eq!(frame_extract(&l, &frame, 3).unwrap(), c);
    }

    #[test]
    fn frame_errors() {
        let z2 = Lattice::from_gram(ExactMatrix::identity(2)).unwrap();
        let opts = EnumOptions::default();
        assert_eq!(find_frame(&z2, 3, &opts).unwrap(), None);
        let bad = vec![vec![Int::from(1), Int::from(0)], vec![Int::from(0), Int::from(1)]];
        assert!(matches!(frame_extract(&z2, &bad, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn find_frame_examples() {
        let opts = EnumOptions::default();
        let l = Lattice::from_gram(ExactMatrix::scalar(2, rat(3))).unwrap();
        let f = find_frame(&l, 3, &opts).unwrap().unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(find_frame(&fixtures::e8(), 3, &opts).unwrap(), None);
    }
}
