mod common;

use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unilat::num::{rat, Int};
use unilat::{EnumOptions, Lattice};

fn lattice(max_dim: usize) -> impl Strategy<Value = Lattice> {
    (1..=max_dim, any::<u64>()).prop_map(|(n, seed)| common::rational_lattice(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

fn integral(max_dim: usize) -> impl Strategy<Value = Lattice> {
    (1..=max_dim, any::<u64>()).prop_map(|(n, seed)| common::integral_lattice(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn double_dual_is_identity(l in lattice(6)) {
        let back = l.dual().dual();
        prop_assert_eq!(back.gram(), l.gram());
        prop_assert_eq!(l.dual().det() * l.det(), rat(1));
    }

    #[test]
    fn lll_preserves_det(l in lattice(6)) {
        let (r, t) = l.lll().unwrap();
        prop_assert_eq!(r.det(), l.det());
        prop_assert_eq!(t.det().unwrap().abs(), rat(1));
    }

    #[test]
    fn minimum_matches_brute_force(l in integral(5)) {
        let (reduced, _) = l.lll().unwrap();
        let reduced = reduced.detached();
        let r = reduced.minimum(&EnumOptions::default()).unwrap();
        let (bmin, bcount) = common::brute_force_minimum(&reduced);
        prop_assert_eq!(r.minimum, bmin);
        prop_assert_eq!(r.count, bcount);
    }

    #[test]
    fn minimum_is_basis_independent(l in lattice(6), seed in any::<u64>()) {
        let u = common::unimodular(&mut ChaCha8Rng::seed_from_u64(seed), l.dim());
        let other = Lattice::from_gram(u.congruence(l.gram()).unwrap()).unwrap();
        let o = EnumOptions::default();
        let a = l.minimum(&o).unwrap();
        let b = other.minimum(&o).unwrap();
        prop_assert_eq!((a.minimum, a.count), (b.minimum, b.count));
    }

    #[test]
    fn discriminant_order_is_det(l in integral(6)) {
        let g = l.discriminant_group().unwrap();
        prop_assert_eq!(Int::from(g.order()), l.det().to_integer());
        for w in g.invariant_factors.windows(2) {
            prop_assert!((&w[1] % &w[0]) == 0.into());
        }
    }
}
