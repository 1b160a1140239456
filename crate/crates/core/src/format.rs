//! Plain-text file formats.
//!
//! Every format is whitespace separated, with `#` starting a comment line.
//!
//! ```text
//! lattice 2        code 3 4 2       matrix 2 3
//! 2 1              1 0 2 2          1 0 1/2
//! 1 2              0 1 2 1          0 1 0
//! ```
//!
//! A lattice may carry an ambient space: after its Gram rows, a `parent m`
//! header with `m` Gram rows, then `coords` with one row of length `m` per
//! basis vector.
//!
//! An ideal of `Z[ζ_m]` is `ideal m`, then `denominator d`, then `φ(m)`
//! integer rows spanning `d J` in the power basis `1, ζ, ..., ζ^{φ(m)-1}`.

use crate::codes::LinearCode;
use crate::cyclotomic::{CycloElement, CycloField, FractionalIdeal};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::ExactMatrix;
use crate::num::{fmt_rat, parse_rat, Rat};

struct Lines<'a> {
    inner: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("").trim();
                (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
            })
            .collect();
        Lines { inner, pos: 0 }
    }

    fn last_line(&self) -> usize {
        self.inner.last().map_or(1, |l| l.0)
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let r = self.inner.get(self.pos).cloned().ok_or_else(|| Error::Parse {
            line: self.last_line(),
            msg: format!("unexpected end of input, expected {what}"),
        })?;
        self.pos += 1;
        Ok(r)
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.inner.get(self.pos)
    }

    fn header(&mut self, keyword: &str, args: usize) -> Result<(usize, Vec<usize>)> {
        let (line, toks) = self.next(&format!("`{keyword}` header"))?;
        if toks.first() != Some(&keyword) || toks.len() != args + 1 {
            return Err(perr(line, format!("expected `{keyword}` followed by {args} integer(s)")));
        }
        let vals = toks[1..]
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| perr(line, format!("bad integer `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok((line, vals))
    }

    fn rat_rows(&mut self, rows: usize, cols: usize) -> Result<ExactMatrix> {
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let (line, toks) = self.next("a matrix row")?;
            if toks.len() != cols {
                return Err(perr(line, format!("expected {cols} entries, found {}", toks.len())));
            }
            for t in toks {
                data.push(parse_rat(t).map_err(|_| perr(line, format!("bad number `{t}`")))?);
            }
        }
        ExactMatrix::from_vec(rows, cols, data)
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Some((line, _)) => Err(perr(*line, "trailing content".into())),
            None => Ok(()),
        }
    }
}

fn perr(line: usize, msg: String) -> Error {
    Error::Parse { line, msg }
}

fn invalid(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => perr(line, other.to_string()),
    }
}

fn write_rows(out: &mut String, m: &ExactMatrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(fmt_rat).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    let mut lines = Lines::new(text);
    let (hline, dims) = lines.header("lattice", 1)?;
    let n = dims[0];
    let gram = lines.rat_rows(n, n)?;
    if lines.peek().is_none() {
        return Lattice::from_gram(gram).map_err(|e| invalid(hline, e));
    }
    let (pline, pd) = lines.header("parent", 1)?;
    let parent = lines.rat_rows(pd[0], pd[0])?;
    let (cline, toks) = lines.next("`coords`")?;
    if toks != ["coords"] {
        return Err(perr(cline, "expected `coords`".into()));
    }
    let coords = lines.rat_rows(n, pd[0])?;
    lines.finish()?;
    let l = Lattice::in_parent(parent, coords).map_err(|e| invalid(pline, e))?;
    if l.gram() != &gram {
        return Err(perr(hline, "Gram matrix does not match coords in parent".into()));
    }
    Ok(l)
}

pub fn write_lattice(l: &Lattice) -> String {
    let mut out = format!("lattice {}\n", l.dim());
    write_rows(&mut out, l.gram());
    if let Some(e) = l.embedding() {
        out.push_str(&format!("parent {}\n", e.parent_gram.rows()));
        write_rows(&mut out, &e.parent_gram);
        out.push_str("coords\n");
        write_rows(&mut out, &e.coords);
    }
    out
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines = Lines::new(text);
    let (hline, h) = lines.header("code", 3)?;
    let (p, n, k) = (h[0] as u64, h[1], h[2]);
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (line, toks) = lines.next("a codeword")?;
        if toks.len() != n {
            return Err(perr(line, format!("expected {n} symbols, found {}", toks.len())));
        }
        let row = toks
            .iter()
            .map(|t| match t.parse::<u64>() {
                Ok(v) if v < p => Ok(v),
                _ => Err(perr(line, format!("bad symbol `{t}` for p = {p}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    lines.finish()?;
    let code = LinearCode::new(p, n, &rows).map_err(|e| invalid(hline, e))?;
    if code.dim() != k {
        return Err(perr(hline, format!("rows span a code of dimension {}, not {k}", code.dim())));
    }
    Ok(code)
}

pub fn write_code(c: &LinearCode) -> String {
    let mut out = format!("code {} {} {}\n", c.p(), c.len(), c.dim());
    for r in c.generator() {
        let row: Vec<String> = r.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("matrix", 2)?;
    let m = lines.rat_rows(h[0], h[1])?;
    lines.finish()?;
    Ok(m)
}

pub fn write_matrix(m: &ExactMatrix) -> String {
    let mut out = format!("matrix {} {}\n", m.rows(), m.cols());
    write_rows(&mut out, m);
    out
}

pub fn parse_ideal(text: &str) -> Result<FractionalIdeal> {
    let mut lines = Lines::new(text);
    let (hline, h) = lines.header("ideal", 1)?;
    let field = CycloField::new(h[0] as u64).map_err(|e| invalid(hline, e))?;
    let (dline, toks) = lines.next("`denominator`")?;
    if toks.len() != 2 || toks[0] != "denominator" {
        return Err(perr(dline, "expected `denominator d`".into()));
    }
    let d = crate::num::Int::parse_bytes(toks[1].as_bytes(), 10)
        .ok_or_else(|| perr(dline, format!("bad integer `{}`", toks[1])))?;
    let n = field.degree();
    let rows = lines.rat_rows(n, n)?;
    lines.finish()?;
    let rows = rows.to_int_rows().map_err(|_| perr(dline + 1, "ideal rows must be integers".into()))?;
    FractionalIdeal::from_parts(&field, d, &rows).map_err(|e| invalid(hline, e))
}

pub fn write_ideal(j: &FractionalIdeal) -> String {
    let mut out = format!("ideal {}\ndenominator {}\n", j.field().m(), j.denominator());
    for r in j.numerator_basis() {
        let row: Vec<String> = r.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses `Σ c_k ζ^k` from up to `m` coefficients (so `ζ^{-1} = ζ^{m-1}` can
/// be written directly).
pub fn parse_element(field: &CycloField, text: &str) -> Result<CycloElement> {
    let c = parse_vector(text)?;
    if c.len() > field.m() as usize {
        return Err(perr(1, format!("at most {} coefficients expected", field.m())));
    }
    Ok(field.from_exponents(&c))
}

/// Parses a vector given as whitespace or comma separated rationals.
pub fn parse_vector(text: &str) -> Result<Vec<Rat>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| parse_rat(t).map_err(|_| perr(1, format!("bad number `{t}`"))))
        .collect()
}
