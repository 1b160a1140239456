//! Fincke–Pohst enumeration of short lattice vectors.
//!
//! The search tree is pruned with a floating-point Cholesky decomposition of
//! the (LLL-reduced, integer-scaled) Gram matrix, widened by a small relative
//! slack. Every leaf is then re-checked with exact `i128` arithmetic, so the
//! reported vectors and norms are exact; the slack only admits extra
//! candidates, never drops valid ones.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::normal_form::IntRows;
use crate::num::{from_int, Int, Rat};

/// Tuning knobs for enumeration.
#[derive(Clone, Debug)]
pub struct EnumOptions {
    /// Maximum number of search-tree nodes before failing with
    /// [`Error::BudgetExceeded`].
    pub budget: u64,
    /// Split the top of the search tree across the rayon pool.
    pub parallel: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: 1_000_000_000,
            parallel: true,
        }
    }
}

/// A lattice vector in basis coordinates together with its exact norm.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ShortVector {
    pub norm: Rat,
    pub coords: Vec<Int>,
}

/// Precomputed data for enumerating one integer Gram matrix.
pub(crate) struct Enumerator {
    n: usize,
    gram: Vec<Vec<i128>>,
    q: Vec<f64>,
    mu: Vec<Vec<f64>>, // mu[i][j] for j > i
}

struct Search<'a> {
    e: &'a Enumerator,
    bound_f: f64,
    bound: i128,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
    budget: u64,
    local_nodes: u64,
    keep: &'a Keep<'a>,
    out: Vec<(i128, Vec<i64>)>,
}

/// Leaf filter applied before a vector is stored.
pub(crate) type Keep<'a> = dyn Fn(i128, &[i64]) -> bool + Sync + 'a;

impl Enumerator {
    pub(crate) fn new(gram: &[Vec<Int>]) -> Result<Self> {
        let n = gram.len();
        let too_big = || Error::input("Gram entries too large for enumeration");
        let g: Vec<Vec<i128>> = gram
            .iter()
            .map(|r| r.iter().map(|v| v.to_i128().ok_or_else(too_big)).collect())
            .collect::<Result<_>>()?;
        let gf: Vec<Vec<f64>> = g.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect();
        let mut q = vec![0.0; n];
        let mut mu = vec![vec![0.0; n]; n];
        for i in 0..n {
            let mut s = gf[i][i];
            for k in 0..i {
                s -= mu[k][i] * mu[k][i] * q[k];
            }
            if s <= 0.0 {
                return Err(Error::NotPositiveDefinite);
            }
            q[i] = s;
            for j in i + 1..n {
                let mut t = gf[i][j];
                for k in 0..i {
                    t -= mu[k][i] * mu[k][j] * q[k];
                }
                mu[i][j] = t / q[i];
            }
        }
        Ok(Enumerator { n, gram: g, q, mu })
    }

    fn exact_norm(&self, y: &[i64]) -> Option<i128> {
        let mut s: i128 = 0;
        for i in 0..self.n {
            if y[i] == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for j in 0..self.n {
                if y[j] != 0 {
                    row = row.checked_add(self.gram[i][j].checked_mul(y[j] as i128)?)?;
                }
            }
            s = s.checked_add(row.checked_mul(y[i] as i128)?)?;
        }
        Some(s)
    }

    /// All nonzero `y` (one per ± pair: the last nonzero coordinate is
    /// positive) with `y G y^T <= bound`, as `(norm, y)`.
    pub(crate) fn run(&self, bound: i128, opts: &EnumOptions) -> Result<Vec<(i128, Vec<i64>)>> {
        self.run_filtered(bound, opts, &|_, _| true)
    }

    /// As [`Enumerator::run`], storing only the leaves accepted by `keep`.
    pub(crate) fn run_filtered(
        &self,
        bound: i128,
        opts: &EnumOptions,
        keep: &Keep<'_>,
    ) -> Result<Vec<(i128, Vec<i64>)>> {
        let n = self.n;
        if n == 0 || bound <= 0 {
            return Ok(Vec::new());
        }
        let nodes = AtomicU64::new(0);
        let abort = AtomicBool::new(false);
        let bound_f = bound as f64 * (1.0 + 1e-9) + 1e-9;
        let make = || Search {
            e: self,
            bound_f,
            bound,
            nodes: &nodes,
            abort: &abort,
            budget: opts.budget,
            local_nodes: 0,
            keep,
            out: Vec::new(),
        };
        // Split off the top levels as independent prefixes.
        let split = if opts.parallel { n.min(2) } else { 0 };
        let mut prefixes: Vec<(Vec<i64>, f64)> = vec![(vec![0; n], 0.0)];
        for depth in 0..split {
            let level = n - 1 - depth;
            let mut next = Vec::new();
            for (y, partial) in &prefixes {
                let zero_above = y[level + 1..].iter().all(|&v| v == 0);
                let (lo, hi) = self.range(level, y, *partial, bound_f);
                let lo = if zero_above { lo.max(0) } else { lo };
                for v in lo..=hi {
                    let mut y2 = y.clone();
                    y2[level] = v;
                    let p = partial + self.layer(level, &y2);
                    if p <= bound_f {
                        next.push((y2, p));
                    }
                }
            }
            prefixes = next;
            nodes.fetch_add(prefixes.len() as u64, Ordering::Relaxed);
        }
        let start_level = n as isize - 1 - split as isize;
        let run_prefix = |(y, partial): &(Vec<i64>, f64)| -> Vec<(i128, Vec<i64>)> {
            let mut s = make();
            let mut y = y.clone();
            if start_level < 0 {
                s.leaf(&y);
            } else {
                s.descend(start_level as usize, &mut y, *partial);
            }
            s.flush();
            s.out
        };
        let parts: Vec<Vec<(i128, Vec<i64>)>> = if opts.parallel {
            prefixes.par_iter().map(run_prefix).collect()
        } else {
            prefixes.iter().map(run_prefix).collect()
        };
        if abort.load(Ordering::Relaxed) {
            return Err(Error::BudgetExceeded(opts.budget));
        }
        let mut out: Vec<(i128, Vec<i64>)> = parts.into_iter().flatten().collect();
        out.sort();
        Ok(out)
    }

    fn center(&self, level: usize, y: &[i64]) -> f64 {
        -(level + 1..self.n).map(|j| self.mu[level][j] * y[j] as f64).sum::<f64>()
    }

    fn layer(&self, level: usize, y: &[i64]) -> f64 {
        let t = y[level] as f64 - self.center(level, y);
        self.q[level] * t * t
    }

    fn range(&self, level: usize, y: &[i64], partial: f64, bound_f: f64) -> (i64, i64) {
        let c = self.center(level, y);
        let rem = (bound_f - partial).max(0.0);
        let r = (rem / self.q[level]).sqrt() + 1e-9;
        ((c - r).ceil() as i64, (c + r).floor() as i64)
    }
}

impl Search<'_> {
    fn flush(&mut self) {
        if self.local_nodes > 0 {
            let total = self.nodes.fetch_add(self.local_nodes, Ordering::Relaxed) + self.local_nodes;
            self.local_nodes = 0;
            if total > self.budget {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
    }

    fn leaf(&mut self, y: &[i64]) {
        if y.iter().all(|&v| v == 0) {
            return;
        }
        if let Some(norm) = self.e.exact_norm(y) {
            if norm <= self.bound && (self.keep)(norm, y) {
                self.out.push((norm, y.to_vec()));
            }
        }
    }

    fn descend(&mut self, level: usize, y: &mut Vec<i64>, partial: f64) {
        if self.abort.load(Ordering::Relaxed) {
            return;
        }
        let zero_above = y[level + 1..].iter().all(|&v| v == 0);
        let (lo, hi) = self.e.range(level, y, partial, self.bound_f);
        let lo = if zero_above { lo.max(0) } else { lo };
        let c = self.e.center(level, y);
        for v in lo..=hi {
            self.local_nodes += 1;
            if self.local_nodes >= 4096 {
                self.flush();
                if self.abort.load(Ordering::Relaxed) {
                    return;
                }
            }
            y[level] = v;
            let t = v as f64 - c;
            let p = partial + self.e.q[level] * t * t;
            if p > self.bound_f {
                continue;
            }
            if level == 0 {
                self.leaf(y);
            } else {
                self.descend(level - 1, y, p);
            }
        }
        y[level] = 0;
    }
}

/// Converts reduced-basis coefficients back to original coordinates with a
/// canonical sign (first nonzero coordinate positive).
pub(crate) fn to_original(y: &[i64], transform: &IntRows) -> Vec<Int> {
    let n = transform.first().map_or(0, |r| r.len());
    let mut x = vec![Int::zero(); n];
    for (yi, row) in y.iter().zip(transform) {
        if *yi == 0 {
            continue;
        }
        let yi = Int::from(*yi);
        for (xj, t) in x.iter_mut().zip(row) {
            *xj += &yi * t;
        }
    }
    if x.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        for v in x.iter_mut() {
            *v = -v.clone();
        }
    }
    x
}

pub(crate) fn scaled_norm(norm: i128, scale: &Int) -> Rat {
    from_int(&Int::from(norm)) / from_int(scale)
}
