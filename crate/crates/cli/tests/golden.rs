//! Reports on the shipped fixtures must match the committed golden files
//! byte for byte.

use std::path::{Path, PathBuf};
use std::process::Command;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn unilat(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_unilat"))
        .args(args)
        .current_dir(root().join("fixtures"))
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

const CASES: &[(&str, &[&str])] = &[
    ("f47.txt", &["lat", "info", "f47.lat", "--min"]),
    ("f23.txt", &["lat", "info", "f23.lat", "--min"]),
    ("f11.txt", &["lat", "info", "f11.lat", "--kissing"]),
    ("e8.txt", &["lat", "info", "e8.lat", "--kissing"]),
    ("tetracode.txt", &["code", "info", "tetracode.code"]),
    ("golay12.txt", &["code", "info", "golay12.code"]),
    ("qr24.txt", &["code", "info", "qr24.code"]),
];

#[test]
fn info_reports_match_golden_files() {
    for (file, args) in CASES {
        let (code, out) = unilat(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(out, golden(file), "{args:?}");
    }
}

#[test]
fn fixtures_round_trip() {
    use unilat::format;
    for entry in std::fs::read_dir(root().join("fixtures")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        match path.extension().and_then(|e| e.to_str()) {
            Some("lat") => {
                let l = format::parse_lattice(&text).unwrap();
                let canon = format::write_lattice(&l);
                assert_eq!(format::write_lattice(&format::parse_lattice(&canon).unwrap()), canon);
            }
            Some("code") => {
                let c = format::parse_code(&text).unwrap();
                let canon = format::write_code(&c);
                assert_eq!(format::parse_code(&canon).unwrap(), c);
                assert_eq!(format::write_code(&format::parse_code(&canon).unwrap()), canon);
            }
            Some("mat") => {
                let m = format::parse_matrix(&text).unwrap();
                assert_eq!(format::parse_matrix(&format::write_matrix(&m)).unwrap(), m);
            }
            _ => panic!("unexpected fixture {}", path.display()),
        }
    }
}

#[test]
fn documented_examples() {
    assert_eq!(unilat(&["bound", "extremal", "--n", "48"]), (0, "6\n".into()));
    let (code, out) = unilat(&["scan", "--dim", "48", "--min", "6", "--p", "47"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).filter(|l| l.ends_with("\tallowed")).collect();
    assert_eq!(rows, ["47\t47-(1,2)-1\t2\t47\tallowed"]);
    let (_, out) = unilat(&["lat", "info", "f47.lat", "--min"]);
    assert!(out.contains("determinant 47\n") && out.contains("even yes\n") && out.contains("minimum 6\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(unilat(&["lat", "info", "missing.lat"]).0, 2);
    assert_eq!(unilat(&["lat", "info", "tetracode.code"]).0, 2);
    assert_eq!(unilat(&["construct", "koch", "tetracode.code"]).0, 1);
    assert_eq!(unilat(&["--budget", "10", "lat", "info", "e8.lat", "--min"]).0, 3);
    assert_eq!(unilat(&["ideal", "lattice", "--m", "5", "--alpha", "-1"]).0, 1);
    assert_eq!(unilat(&["bound", "exists", "--dim", "2", "--min", "x", "--det", "1"]).0, 2);
}

#[test]
fn e8_from_cyclotomic_ideal() {
    let alpha = "4/15 -1/15 -1/15 1/15 1/15 0 -1/15 -1/15";
    let (code, out) = unilat(&["ideal", "unimodular", "--m", "15", "--alpha", alpha]);
    assert_eq!(code, 0);
    assert_eq!(out, "unimodular yes\ndeterminant 1\neven yes\n");
}
