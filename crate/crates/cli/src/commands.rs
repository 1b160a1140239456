use std::fmt::Write;
use std::fs;
use std::path::Path;

use unilat::auttype::{cyclo_factor, split_fix_image, verify_type_laws, BoundSide, ScanRow, ScanStatus};
use unilat::bounds::{self, BoundKind};
use unilat::codes::LinearCode;
use unilat::cyclotomic::{self, CycloElement, CycloField, FractionalIdeal, IdealLatticeSpec};
use unilat::format;
use unilat::lattice::{is_isometric, IsometryOptions, IsometryResult};
use unilat::neighbor::{koch_lambda, two_neighbor};
use unilat::num::{fmt_rat, parse_rat, rat, to_f64, Int, Rat};
use unilat::{EnumOptions, ExactMatrix, Lattice};

use crate::args::{AutCmd, BoundCmd, Cli, CodeCmd, Command, ConstructCmd, IdealArgs, IdealCmd, LatCmd, ScanArgs};
use crate::Failure;

type Outcome = Result<String, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let opts = EnumOptions {
        budget: cli.budget,
        ..EnumOptions::default()
    };
    match &cli.command {
        Command::Lat(c) => lat(c, &opts),
        Command::Code(c) => code(c),
        Command::Construct(c) => construct(c),
        Command::Aut(c) => aut(c),
        Command::Scan(a) => scan(a),
        Command::Ideal(c) => ideal(c),
        Command::Bound(c) => bound(c),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

/// Attaches the file name to parse errors.
fn in_file<T>(path: &Path, r: unilat::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match e {
        unilat::Error::Parse { .. } => Failure::Parse(format!("{}: {e}", path.display())),
        other => other.into(),
    })
}

fn load_lattice(path: &Path) -> Result<Lattice, Failure> {
    in_file(path, format::parse_lattice(&read(path)?))
}

fn load_code(path: &Path) -> Result<LinearCode, Failure> {
    in_file(path, format::parse_code(&read(path)?))
}

fn load_matrix(path: &Path) -> Result<ExactMatrix, Failure> {
    in_file(path, format::parse_matrix(&read(path)?))
}

fn arg_rat(name: &str, text: &str) -> Result<Rat, Failure> {
    parse_rat(text.trim()).map_err(|_| Failure::Parse(format!("--{name}: bad number `{text}`")))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn lat(cmd: &LatCmd, opts: &EnumOptions) -> Outcome {
    match cmd {
        LatCmd::Info { file, min, kissing } => {
            let l = load_lattice(file)?;
            let c = l.classify();
            let mut out = String::new();
            writeln!(out, "dimension {}", l.dim()).unwrap();
            writeln!(out, "determinant {}", fmt_rat(&l.det())).unwrap();
            writeln!(out, "integral {}", yes(c.integral)).unwrap();
            writeln!(out, "even {}", yes(c.even)).unwrap();
            writeln!(out, "unimodular {}", yes(c.unimodular)).unwrap();
            let elem = c.elementary_prime.map_or("no".to_string(), |p| p.to_string());
            writeln!(out, "p-elementary {elem}").unwrap();
            if *min || *kissing {
                let (reduced, _) = l.lll()?;
                let r = reduced.minimum(opts)?;
                writeln!(out, "minimum {}", fmt_rat(&r.minimum)).unwrap();
                if *kissing {
                    writeln!(out, "kissing {}", r.count).unwrap();
                }
            }
            Ok(out)
        }
        LatCmd::Dual { file } => Ok(format::write_lattice(&load_lattice(file)?.dual())),
        LatCmd::Lll { file } => {
            let (r, t) = load_lattice(file)?.lll()?;
            Ok(format!("{}transform\n{}", format::write_lattice(&r.detached()), format::write_matrix(&t)))
        }
        LatCmd::Disc { file } => {
            let g = load_lattice(file)?.discriminant_group()?;
            if g.is_trivial() {
                return Ok("trivial\n".into());
            }
            let f: Vec<String> = g.invariant_factors.iter().map(Int::to_string).collect();
            Ok(format!("order {}\ninvariant factors {}\n", g.order(), f.join(" ")))
        }
        LatCmd::Isom { first, second, cap } => {
            let a = load_lattice(first)?;
            let b = load_lattice(second)?;
            let iso = IsometryOptions {
                dim_cap: *cap,
                enumeration: opts.clone(),
                ..IsometryOptions::default()
            };
            Ok(match is_isometric(&a, &b, &iso)? {
                IsometryResult::Yes(t) => format!("isometric\n{}", format::write_matrix(&t)),
                IsometryResult::No(why) => format!("not isometric: {why}\n"),
                IsometryResult::Inconclusive(why) => format!("inconclusive: {why}\n"),
            })
        }
    }
}

fn code(cmd: &CodeCmd) -> Outcome {
    match cmd {
        CodeCmd::Info { file } => {
            let c = load_code(file)?;
            let mut out = String::new();
            writeln!(out, "field F{}", c.p()).unwrap();
            writeln!(out, "length {}", c.len()).unwrap();
            writeln!(out, "dimension {}", c.dim()).unwrap();
            writeln!(out, "self-orthogonal {}", yes(c.is_self_orthogonal())).unwrap();
            writeln!(out, "self-dual {}", yes(c.is_self_dual())).unwrap();
            match c.min_weight() {
                Ok(w) => writeln!(out, "minimum weight {w}").unwrap(),
                Err(unilat::Error::ZeroCode) => writeln!(out, "minimum weight none").unwrap(),
                Err(e) => return Err(e.into()),
            }
            Ok(out)
        }
        CodeCmd::Dual { file } => Ok(format::write_code(&load_code(file)?.dual())),
    }
}

fn construct(cmd: &ConstructCmd) -> Outcome {
    let l = match cmd {
        ConstructCmd::A { code } => load_code(code)?.construction_a()?,
        ConstructCmd::Neighbor { lattice, v } => {
            let l = load_lattice(lattice)?;
            let v = format::parse_vector(v).map_err(|e| Failure::Parse(format!("--v: {e}")))?;
            let v = v
                .iter()
                .map(|x| x.is_integer().then(|| x.to_integer()))
                .collect::<Option<Vec<Int>>>()
                .ok_or_else(|| Failure::Parse("--v: coordinates must be integers".into()))?;
            two_neighbor(&l, &v)?
        }
        ConstructCmd::Koch { code } => koch_lambda(&load_code(code)?)?,
    };
    Ok(format::write_lattice(&l))
}

fn aut(cmd: &AutCmd) -> Outcome {
    match cmd {
        AutCmd::Type { lattice, sigma, p, verify } => {
            let l = load_lattice(lattice)?;
            let s = load_matrix(sigma)?;
            let mut out = String::new();
            let (split, report) = if *verify {
                let r = verify_type_laws(&l, &s, *p)?;
                (r.split.clone(), Some(r))
            } else {
                (split_fix_image(&l, &s, *p)?, None)
            };
            writeln!(out, "type {}", split.ty).unwrap();
            writeln!(out, "fixed dimension {} determinant {}", split.ty.d, fmt_rat(&split.fixed.det())).unwrap();
            let img = split.image.dim();
            writeln!(out, "image dimension {img} determinant {}", fmt_rat(&split.image.det())).unwrap();
            writeln!(out, "index {}", split.index).unwrap();
            if let Some(r) = report {
                writeln!(out, "index law {}", r.index_bound).unwrap();
                writeln!(out, "discriminant law {}", r.discriminant).unwrap();
                writeln!(out, "parity law {}", r.parity).unwrap();
                if !r.all_hold() {
                    return Err(Failure::Domain(format!("{out}a type law fails")));
                }
            }
            Ok(out)
        }
        AutCmd::Cyclo { matrix, cap } => {
            let f = cyclo_factor(&load_matrix(matrix)?, *cap)?;
            let factors: Vec<String> = f
                .factors
                .iter()
                .map(|(d, a)| if *a == 1 { format!("Phi_{d}") } else { format!("Phi_{d}^{a}") })
                .collect();
            Ok(format!(
                "order {}\ncharacteristic polynomial {}\nPhi_{} divides minimal polynomial {}\n",
                f.order,
                factors.join(" "),
                f.order,
                yes(f.top_divides_minpoly)
            ))
        }
    }
}

fn status(row: &ScanRow) -> String {
    match &row.status {
        ScanStatus::Allowed if row.note.is_empty() => "allowed".into(),
        ScanStatus::Allowed => format!("allowed ({})", row.note),
        ScanStatus::ExcludedByParity => format!("excluded: parity, {}", row.note),
        ScanStatus::ExcludedByBound { side, .. } => {
            let side = match side {
                BoundSide::Fixed => "fixed",
                BoundSide::Image => "image",
            };
            format!("excluded: {side} bound, {}", row.note)
        }
    }
}

fn scan(a: &ScanArgs) -> Outcome {
    let min = arg_rat("min", &a.min)?;
    let rows = match a.p {
        Some(p) => unilat::auttype::scan_types(a.dim, &min, p)?,
        None => unilat::auttype::scan_all(a.dim, &min)?,
    };
    let mut out = String::from("p\ttype\tdim L_K\tdet L_K\tstatus\n");
    for r in rows.iter().filter(|r| a.all || r.is_allowed()) {
        let t = &r.ty;
        let det = Int::from(t.p).pow(t.s as u32);
        writeln!(out, "{}\t{t}\t{}\t{det}\t{}", t.p, t.d, status(r)).unwrap();
    }
    let allowed = rows.iter().filter(|r| r.is_allowed()).count();
    writeln!(out, "{allowed} of {} types allowed", rows.len()).unwrap();
    Ok(out)
}

fn field(m: u64) -> Result<CycloField, Failure> {
    Ok(CycloField::new(m)?)
}

fn element(f: &CycloField, text: &str) -> Result<CycloElement, Failure> {
    format::parse_element(f, text).map_err(|e| Failure::Parse(format!("--alpha: {e}")))
}

fn spec(a: &IdealArgs) -> Result<IdealLatticeSpec, Failure> {
    let f = field(a.m)?;
    let j = match &a.ideal {
        Some(path) => {
            let j = in_file(path, format::parse_ideal(&read(path)?))?;
            if j.field() != &f {
                return Err(Failure::Domain(format!("ideal file is over Q(ζ_{}), not Q(ζ_{})", j.field().m(), f.m())));
            }
            j
        }
        None => FractionalIdeal::unit(&f),
    };
    Ok(IdealLatticeSpec::new(j, element(&f, &a.alpha)?)?)
}

fn ideal(cmd: &IdealCmd) -> Outcome {
    match cmd {
        IdealCmd::Lattice(a) => Ok(format::write_lattice(&cyclotomic::ideal_lattice(&spec(a)?)?)),
        IdealCmd::Dual(a) => {
            let s = spec(a)?;
            let dual = cyclotomic::ideal_dual(&s)?;
            if !cyclotomic::dual_routes_agree(&s)? {
                return Err(unilat::Error::Inconsistent("dual formula disagrees with the matrix dual".into()).into());
            }
            Ok(format::write_ideal(&dual))
        }
        IdealCmd::Unimodular(a) => {
            let s = spec(a)?;
            let l = cyclotomic::ideal_lattice(&s)?;
            Ok(format!(
                "unimodular {}\ndeterminant {}\neven {}\n",
                yes(cyclotomic::is_unimodular(&s)?),
                fmt_rat(&l.det()),
                yes(l.is_even())
            ))
        }
        IdealCmd::TpTest { m, alpha } => {
            let f = field(*m)?;
            let x = element(&f, alpha)?;
            let mut out = String::new();
            writeln!(out, "real {}", yes(x.is_real())).unwrap();
            for (k, re, im) in f.embeddings(&x, 64) {
                let sign = if re.is_positive() {
                    "positive"
                } else if re.is_negative() {
                    "negative"
                } else {
                    "undecided at 64 bits"
                };
                let mid = to_f64(&((&re.lo + &re.hi) / rat(2)));
                let imid = to_f64(&((&im.lo + &im.hi) / rat(2)));
                writeln!(out, "embedding {k}: {mid:.6} {imid:+.6}i {sign}").unwrap();
            }
            writeln!(out, "totally positive {}", yes(x.is_totally_positive())).unwrap();
            Ok(out)
        }
    }
}

fn bound(cmd: &BoundCmd) -> Outcome {
    match cmd {
        BoundCmd::Gamma { n } => {
            let b = bounds::upper_gamma(*n);
            Ok(match (b.kind(), b.governing_pow_n()) {
                (BoundKind::Exact, Some(v)) => format!("gamma_{n}^{n} = {} (exact)\n", fmt_rat(&v)),
                (BoundKind::Table, Some(_)) => {
                    let text = bounds::TABLE.iter().find(|(k, _)| k == n).map_or("?", |(_, v)| v);
                    format!("gamma_{n} <= {text} (table)\n")
                }
                _ => format!("gamma_{n}: no bound available\n"),
            })
        }
        BoundCmd::Extremal { n } => Ok(format!("{}\n", bounds::extremal_min(*n)?)),
        BoundCmd::Exists { dim, min, det } => {
            let min = arg_rat("min", min)?;
            let det = arg_rat("det", det)?;
            let ok = bounds::exists_possible(*dim, &min, &det);
            Ok(if ok { "possible\n" } else { "impossible\n" }.to_string())
        }
    }
}
