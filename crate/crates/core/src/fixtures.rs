//! Standard lattices and codes used as fixtures throughout the crate.

use crate::codes::LinearCode;
use crate::format;
use crate::lattice::Lattice;
use crate::matrix::ExactMatrix;
use crate::num::{ratio, rat, Rat};

/// Gram matrix of the root system with the given simply-laced Dynkin edges.
fn cartan(n: usize, edges: &[(usize, usize)]) -> Lattice {
    let mut g = ExactMatrix::scalar(n, rat(2));
    for &(a, b) in edges {
        g[(a, b)] = rat(-1);
        g[(b, a)] = rat(-1);
    }
    Lattice::from_gram(g).expect("Cartan matrices are positive definite")
}

fn chain(len: usize) -> Vec<(usize, usize)> {
    (1..len).map(|i| (i - 1, i)).collect()
}

pub fn a_n(n: usize) -> Lattice {
    cartan(n, &chain(n))
}

pub fn d_n(n: usize) -> Lattice {
    assert!(n >= 3);
    let mut e = chain(n - 1);
    e.push((n - 3, n - 1));
    cartan(n, &e)
}

/// `E_n` for `n` in 6..=8: a chain of `n-1` nodes with a branch at node 2.
pub fn e_n(n: usize) -> Lattice {
    assert!((6..=8).contains(&n));
    let mut e = chain(n - 1);
    e.push((2, n - 1));
    cartan(n, &e)
}

pub fn e8() -> Lattice {
    e_n(8)
}

/// `E_8 = D_8^+` inside the parent `Z^8`.
pub fn e8_in_z8() -> Lattice {
    let mut rows: Vec<Vec<Rat>> = (0..7)
        .map(|i| (0..8).map(|j| rat((j == i) as i64 - (j == i + 1) as i64)).collect())
        .collect();
    rows.push((0..8).map(|j| rat((j >= 6) as i64)).collect());
    rows.push(vec![ratio(1, 2); 8]);
    Lattice::span_in_parent(ExactMatrix::identity(8), &rows).expect("E8 construction")
}

/// Fixed lattice Gram matrices `F_47`, `F_23`, `F_11` of prime order
/// automorphisms of extremal 48-dimensional lattices.
pub fn f47() -> Lattice {
    Lattice::from_i64(&[&[6, 1], &[1, 8]]).expect("F47")
}

pub fn f23() -> Lattice {
    Lattice::from_i64(&[&[6, 3, 2, 2], &[3, 6, 2, 0], &[2, 2, 6, 3], &[2, 0, 3, 6]]).expect("F23")
}

pub fn f11() -> Lattice {
    Lattice::from_i64(&[
        &[6, -2, 1, 3, 2, 0, 3, -1],
        &[-2, 6, 3, 1, -2, 1, 1, 0],
        &[1, 3, 6, 3, 0, 3, 3, 2],
        &[3, 1, 3, 6, 2, 3, 3, 2],
        &[2, -2, 0, 2, 6, 3, 3, 3],
        &[0, 1, 3, 3, 3, 6, 3, 3],
        &[3, 1, 3, 3, 3, 3, 6, 2],
        &[-1, 0, 2, 2, 3, 3, 2, 6],
    ])
    .expect("F11")
}

pub const TETRACODE: &str = include_str!("../../../fixtures/tetracode.code");
pub const GOLAY12: &str = include_str!("../../../fixtures/golay12.code");
pub const QR24: &str = include_str!("../../../fixtures/qr24.code");

pub fn tetracode() -> LinearCode {
    format::parse_code(TETRACODE).expect("tetracode fixture")
}

/// Extended ternary Golay code `[12, 6, 6]` containing the all-ones word.
pub fn golay12() -> LinearCode {
    format::parse_code(GOLAY12).expect("golay fixture")
}

/// Extended ternary quadratic residue code `[24, 12, 9]` containing the all-ones word.
pub fn qr24() -> LinearCode {
    format::parse_code(QR24).expect("qr24 fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_lattice_determinants() {
        assert_eq!(a_n(2).det(), rat(3));
        assert_eq!(d_n(4).det(), rat(4));
        assert_eq!(e_n(6).det(), rat(3));
        assert_eq!(e_n(7).det(), rat(2));
        assert_eq!(e8().det(), rat(1));
        assert_eq!(e8_in_z8().det(), rat(1));
        assert!(e8_in_z8().is_even());
    }

    #[test]
    fn fixed_lattice_determinants() {
        assert_eq!(f47().det(), rat(47));
        assert_eq!(f23().det(), rat(529));
        assert_eq!(f11().det(), rat(11i64.pow(4)));
    }
}
