mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unilat::auttype::{induced_automorphism, matrix_order, verify_type_laws};
use unilat::fixtures;
use unilat::num::{from_int, rat, Int, Rat};
use unilat::{ExactMatrix, Lattice};

/// A unimodular lattice together with an automorphism of prime order `p`,
/// written in a randomly changed basis.
fn sample(seed: u64, p: u64, use_e8: bool) -> Option<(Lattice, ExactMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (l, sigma) = if use_e8 {
        let l = fixtures::e8_in_z8();
        let m = common::e8_automorphism(&mut rng, p as usize);
        let s = induced_automorphism(&l, &m).unwrap();
        (l.detached(), s)
    } else {
        let n = 8;
        let s = common::signed_permutation(&mut rng, n, p as usize)?;
        (Lattice::from_gram(ExactMatrix::identity(n)).unwrap(), s)
    };
    let u = common::unimodular(&mut rng, l.dim());
    let ui = u.inverse().unwrap();
    let g = u.congruence(l.gram()).unwrap();
    let s = u.try_mul(&sigma).unwrap().try_mul(&ui).unwrap();
    Some((Lattice::from_gram(g).unwrap(), s))
}

fn ints_to_rats(r: &[Int]) -> Vec<Rat> {
    r.iter().map(from_int).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn split_laws(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7]), use_e8 in any::<bool>()) {
        let Some((l, sigma)) = sample(seed, p, use_e8) else { return Ok(()); };
        prop_assert_eq!(sigma.congruence(l.gram()).unwrap(), l.gram().clone());
        prop_assert_eq!(matrix_order(&sigma, 100).unwrap(), p);
        let report = verify_type_laws(&l, &sigma, p).unwrap();
        prop_assert!(report.all_hold(), "{:?}", report.split.ty);
        let split = &report.split;
        let ty = split.ty;
        prop_assert_eq!(ty.d + ty.z * (p as usize - 1), l.dim());
        prop_assert_eq!(split.index.clone(), Int::from(p).pow(ty.s as u32));
        prop_assert!(ty.s <= ty.z.min(ty.d));
        prop_assert_eq!(
            split.fixed.det() * split.image.det(),
            l.det() * from_int(&(&split.index * &split.index))
        );
        for r in &split.fixed_basis {
            let x = ints_to_rats(r);
            prop_assert_eq!(sigma.left_apply(&x), x);
        }
        // the orbit sums of L_I vanish, so it holds no nonzero fixed vector
        for r in &split.image_basis {
            let mut acc = vec![rat(0); l.dim()];
            let mut x = ints_to_rats(r);
            for _ in 0..p {
                acc = acc.iter().zip(&x).map(|(a, b)| a + b).collect();
                x = sigma.left_apply(&x);
            }
            prop_assert!(acc.iter().all(|v| *v == rat(0)));
        }
    }
}
