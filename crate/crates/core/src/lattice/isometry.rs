//! Isometry testing for small lattices.
//!
//! Invariants are compared first; if they agree, images of an LLL basis of
//! `A` are searched among the short vectors of `B` by backtracking, pruning
//! on the Gram rows built so far.

use num_traits::{One, Signed, ToPrimitive};

use super::{EnumOptions, Lattice};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::num::{from_int, Int, Rat};

#[derive(Clone, Debug)]
pub struct IsometryOptions {
    /// Largest dimension attempted; larger inputs give `Inconclusive`.
    pub dim_cap: usize,
    /// Number of norm layers in the theta-series fingerprint.
    pub theta_depth: usize,
    /// Backtracking node budget.
    pub search_budget: u64,
    pub enumeration: EnumOptions,
}

impl Default for IsometryOptions {
    fn default() -> Self {
        IsometryOptions {
            dim_cap: 12,
            theta_depth: 3,
            search_budget: 50_000_000,
            enumeration: EnumOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsometryResult {
    /// `t * gram(B) * t^T = gram(A)` with `t` unimodular.
    Yes(ExactMatrix),
    No(String),
    Inconclusive(String),
}

/// Cheap isometry invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub det: Rat,
    pub integral: bool,
    pub even: bool,
    /// `(norm, count)` for the first `theta_depth` nonzero norms, both signs counted.
    pub theta: Vec<(Rat, usize)>,
}

impl Fingerprint {
    pub fn of(l: &Lattice, depth: usize, opts: &EnumOptions) -> Result<Self> {
        let mut theta = Vec::new();
        if l.dim() > 0 && depth > 0 {
            let min = l.minimum(opts)?.minimum;
            let mut bound = min.clone();
            loop {
                let vs = l.short_vectors(&bound, opts)?;
                let mut layers: Vec<(Rat, usize)> = Vec::new();
                for v in &vs {
                    match layers.last_mut() {
                        Some((n, c)) if *n == v.norm => *c += 2,
                        _ => layers.push((v.norm.clone(), 2)),
                    }
                }
                if layers.len() >= depth {
                    layers.truncate(depth);
                    theta = layers;
                    break;
                }
                bound = &bound + &min;
            }
        }
        Ok(Fingerprint {
            dim: l.dim(),
            det: l.det(),
            integral: l.is_integral(),
            even: l.is_even(),
            theta,
        })
    }
}

fn int_gram(g: &ExactMatrix, scale: &Int) -> Result<Vec<Vec<i128>>> {
    let s = from_int(scale);
    (0..g.rows())
        .map(|i| {
            g.row(i)
                .iter()
                .map(|v| {
                    (v * &s)
                        .to_integer()
                        .to_i128()
                        .ok_or_else(|| Error::input("Gram entries too large"))
                })
                .collect()
        })
        .collect()
}

struct Backtrack<'a> {
    target: &'a [Vec<i128>],
    cands: Vec<Vec<usize>>, // per basis index: candidate ids
    ips: &'a [Vec<i128>],   // candidate id -> G_B * w (scaled)
    vecs: &'a [Vec<i128>],
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Backtrack<'_> {
    fn search(&mut self, i: usize) -> Option<bool> {
        if i == self.target.len() {
            return Some(true);
        }
        for k in 0..self.cands[i].len() {
            let c = self.cands[i][k];
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let ok = (0..i).all(|j| {
                let w = &self.vecs[self.chosen[j]];
                let ip: i128 = w.iter().zip(&self.ips[c]).map(|(a, b)| a * b).sum();
                ip == self.target[i][j]
            });
            if !ok {
                continue;
            }
            self.chosen.push(c);
            match self.search(i + 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.chosen.pop();
        }
        Some(false)
    }
}

/// Decides whether `a` and `b` are isometric.
pub fn is_isometric(a: &Lattice, b: &Lattice, opts: &IsometryOptions) -> Result<IsometryResult> {
    if a.dim() != b.dim() {
        return Ok(IsometryResult::No("dimensions differ".into()));
    }
    if a.dim() > opts.dim_cap {
        return Ok(IsometryResult::Inconclusive(format!(
            "dimension {} over cap {}",
            a.dim(),
            opts.dim_cap
        )));
    }
    if a.det() != b.det() {
        return Ok(IsometryResult::No("determinants differ".into()));
    }
    let fa = Fingerprint::of(a, opts.theta_depth, &opts.enumeration)?;
    let fb = Fingerprint::of(b, opts.theta_depth, &opts.enumeration)?;
    if fa != fb {
        return Ok(IsometryResult::No("invariants differ".into()));
    }
    let n = a.dim();
    if n == 0 {
        return Ok(IsometryResult::Yes(ExactMatrix::zeros(0, 0)));
    }
    let (ra, ua) = a.detached().lll()?;
    let ga = ra.gram();
    let scale = num_integer::Integer::lcm(&ga.denominator(), &b.gram().denominator());
    let ta = int_gram(ga, &scale)?;
    let gb = int_gram(b.gram(), &scale)?;
    let max_norm = (0..n).map(|i| ga[(i, i)].clone()).max().expect("n > 0");
    let cand_vecs = b.short_vectors_signed(&max_norm, &opts.enumeration)?;
    let vecs: Vec<Vec<i128>> = cand_vecs
        .iter()
        .map(|v| v.coords.iter().map(|c| c.to_i128().unwrap_or(i128::MAX)).collect())
        .collect();
    let ips: Vec<Vec<i128>> = vecs
        .iter()
        .map(|w| (0..n).map(|r| (0..n).map(|c| gb[r][c] * w[c]).sum()).collect())
        .collect();
    let norms: Vec<i128> = vecs
        .iter()
        .zip(&ips)
        .map(|(w, g)| w.iter().zip(g).map(|(x, y)| x * y).sum())
        .collect();
    let cands: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..vecs.len()).filter(|&k| norms[k] == ta[i][i]).collect())
        .collect();
    let mut bt = Backtrack {
        target: &ta,
        cands,
        ips: &ips,
        vecs: &vecs,
        chosen: Vec::new(),
        nodes: 0,
        budget: opts.search_budget,
    };
    match bt.search(0) {
        None => Ok(IsometryResult::Inconclusive("search budget exhausted".into())),
        Some(false) => Ok(IsometryResult::No("no isometry extends the basis images".into())),
        Some(true) => {
            let w = ExactMatrix::from_int_rows(
                &bt.chosen
                    .iter()
                    .map(|&c| cand_vecs[c].coords.clone())
                    .collect::<Vec<_>>(),
                n,
            );
            let t = &ua.inverse()? * &w;
            let check = t.congruence(b.gram())?;
            if &check != a.gram() || !t.is_integral() || !t.det()?.abs().is_one() {
                return Err(Error::Inconsistent("isometry verification failed".into()));
            }
            Ok(IsometryResult::Yes(t))
        }
    }
}
