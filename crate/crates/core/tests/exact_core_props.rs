use num_traits::Signed;
use proptest::prelude::*;
use unilat::normal_form::{hnf, kernel_mod_p, kernel_q, snf};
use unilat::num::{rat, Rat};
use unilat::ExactMatrix;

fn matrix(max_dim: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-10i64..=10, r * c)))
}

fn square(max_dim: usize) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (1..=max_dim).prop_flat_map(|n| (Just(n), prop::collection::vec(-10i64..=10, n * n)))
}

fn build(r: usize, c: usize, v: &[i64]) -> ExactMatrix {
    ExactMatrix::from_vec(r, c, v.iter().map(|&x| rat(x)).collect()).unwrap()
}

fn cofactor_det(m: &ExactMatrix) -> Rat {
    let n = m.rows();
    if n == 0 {
        return rat(1);
    }
    (0..n)
        .map(|j| {
            let minor_rows: Vec<Vec<Rat>> = (1..n)
                .map(|i| (0..n).filter(|&k| k != j).map(|k| m[(i, k)].clone()).collect())
                .collect();
            let minor = ExactMatrix::from_rows(minor_rows, n - 1).unwrap();
            let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
            sign * &m[(0, j)] * cofactor_det(&minor)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hnf_is_a_unimodular_row_reduction((r, c, v) in matrix(6)) {
        let m = build(r, c, &v);
        let (h, u) = hnf(&m).unwrap();
        // U M = H with U unimodular means both row spans coincide
        prop_assert_eq!(u.det().unwrap().abs(), rat(1));
        prop_assert_eq!(u.try_mul(&m).unwrap(), h.clone());
        let mut last_pivot: Option<usize> = None;
        for i in 0..h.rows() {
            match h.row(i).iter().position(|x| *x != rat(0)) {
                None => {
                    prop_assert!((i..h.rows()).all(|k| h.row(k).iter().all(|x| *x == rat(0))));
                    break;
                }
                Some(p) => {
                    prop_assert!(last_pivot.is_none_or(|q| p > q));
                    prop_assert!(h[(i, p)] > rat(0));
                    for k in 0..i {
                        prop_assert!(h[(k, p)] >= rat(0) && h[(k, p)] < h[(i, p)]);
                    }
                    last_pivot = Some(p);
                }
            }
        }
        prop_assert_eq!(last_pivot.map_or(0, |_| h.rank()), m.rank());
    }

    #[test]
    fn snf_product_is_det((n, v) in square(6)) {
        let m = build(n, n, &v);
        let det = m.det().unwrap();
        prop_assume!(det != rat(0));
        let d = snf(&m).unwrap();
        prop_assert_eq!(d.len(), n);
        for w in d.windows(2) {
            prop_assert!((&w[1] % &w[0]) == 0.into());
        }
        let prod: Rat = d.iter().map(|x| Rat::from_integer(x.clone())).product();
        prop_assert_eq!(prod, det.abs());
    }

    #[test]
    fn det_matches_cofactor_expansion((n, v) in square(4)) {
        let m = build(n, n, &v);
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn rational_kernel_is_annihilated((r, c, v) in matrix(5)) {
        let m = build(r, c, &v);
        let k = kernel_q(&m);
        prop_assert_eq!(k.len(), c - m.rank());
        for row in &k {
            let x: Vec<Rat> = row.iter().map(|v| Rat::from_integer(v.clone())).collect();
            prop_assert!(m.transpose().left_apply(&x).iter().all(|v| *v == rat(0)));
        }
    }
}

#[test]
fn kernel_examples() {
    assert_eq!(kernel_q(&ExactMatrix::zeros(2, 2)).len(), 2);
    let a = ExactMatrix::from_i64(&[&[-1, 1, 0], &[0, -1, 1], &[1, 0, -1]]);
    assert_eq!(kernel_q(&a), vec![vec![1.into(), 1.into(), 1.into()]]);
    assert_eq!(kernel_mod_p(&ExactMatrix::from_i64(&[&[1, 1]]), 2).unwrap(), vec![vec![1, 1]]);
    assert!(kernel_mod_p(&ExactMatrix::from_i64(&[&[1, 1]]), 4).is_err());
}
