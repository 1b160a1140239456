use super::*;
use crate::num::{int, rat, ratio};

fn opts() -> EnumOptions {
    EnumOptions::default()
}

pub(crate) fn e8() -> Lattice {
    crate::fixtures::e8()
}

#[test]
fn dual_examples() {
    let z = Lattice::from_gram(ExactMatrix::identity(3)).unwrap();
    assert_eq!(z.dual().gram(), z.gram());
    let l = Lattice::from_gram(ExactMatrix::scalar(2, rat(3))).unwrap();
    assert_eq!(l.dual().gram(), &ExactMatrix::scalar(2, ratio(1, 3)));
    let f47 = Lattice::from_i64(&[&[6, 1], &[1, 8]]).unwrap();
    assert_eq!(f47.dual().det(), ratio(1, 47));
}

#[test]
fn minimum_examples() {
    let l = Lattice::from_gram(ExactMatrix::scalar(2, rat(3))).unwrap();
    let r = l.minimum(&opts()).unwrap();
    assert_eq!((r.minimum, r.count), (rat(3), 4));
    let r = e8().minimum(&opts()).unwrap();
    assert_eq!((r.minimum, r.count), (rat(2), 240));
    let f23 = crate::fixtures::f23();
    assert_eq!(f23.minimum(&opts()).unwrap().minimum, rat(6));
    let empty = Lattice::from_gram(ExactMatrix::zeros(0, 0)).unwrap();
    assert_eq!(empty.minimum(&opts()), Err(Error::EmptyLattice));
}

#[test]
fn minimum_cap() {
    let f47 = Lattice::from_i64(&[&[6, 1], &[1, 8]]).unwrap();
    assert!(f47.minimum_capped(&rat(5), &opts()).unwrap().is_none());
    assert_eq!(f47.minimum_capped(&rat(6), &opts()).unwrap().unwrap().count, 2);
}

#[test]
fn short_vector_examples() {
    let z2 = Lattice::from_gram(ExactMatrix::identity(2)).unwrap();
    let v = z2.short_vectors(&rat(1), &opts()).unwrap();
    assert_eq!(v.len(), 2);
    let v = z2.short_vectors(&rat(2), &opts()).unwrap();
    assert_eq!(v.iter().filter(|s| s.norm == rat(1)).count(), 2);
    assert_eq!(v.iter().filter(|s| s.norm == rat(2)).count(), 2);
    assert_eq!(e8().short_vectors(&rat(2), &opts()).unwrap().len(), 120);
}

#[test]
fn budget_is_enforced() {
    let tight = EnumOptions {
        budget: 10,
        parallel: false,
    };
    assert_eq!(
        e8().short_vectors(&rat(4), &tight),
        Err(Error::BudgetExceeded(10))
    );
}

#[test]
fn count_slice_z2() {
    let z2 = Lattice::from_gram(ExactMatrix::identity(2)).unwrap();
    let e1 = [rat(1), rat(0)];
    assert_eq!(z2.count_slice(&e1, &rat(1), &rat(1), &opts()).unwrap(), 1);
    assert_eq!(z2.count_slice(&e1, &rat(1), &rat(0), &opts()).unwrap(), 2);
}

#[test]
fn lll_examples() {
    let z2 = Lattice::from_i64(&[&[1, 100], &[100, 10001]]).unwrap();
    let (r, t) = z2.lll().unwrap();
    assert_eq!(r.gram(), &ExactMatrix::identity(2));
    assert_eq!(t.congruence(z2.gram()).unwrap(), *r.gram());
    let i4 = Lattice::from_gram(ExactMatrix::identity(4)).unwrap();
    assert_eq!(i4.lll().unwrap().0, i4);
}

#[test]
fn discriminant_examples() {
    let z = Lattice::from_gram(ExactMatrix::identity(4)).unwrap();
    assert!(z.discriminant_group().unwrap().is_trivial());
    let f11 = crate::fixtures::f11();
    assert_eq!(f11.discriminant_group().unwrap().invariant_factors, vec![int(11); 4]);
    let l = Lattice::from_gram(ExactMatrix::scalar(2, rat(3))).unwrap();
    assert_eq!(l.discriminant_group().unwrap().invariant_factors, vec![int(3), int(3)]);
    let frac = Lattice::from_gram(ExactMatrix::scalar(2, ratio(1, 3))).unwrap();
    assert!(frac.discriminant_group().is_err());
}

#[test]
fn classify_examples() {
    let c = crate::fixtures::f47().classify();
    assert!(c.integral && c.even);
    assert_eq!(c.elementary_prime, Some(int(47)));
    let c = Lattice::from_i64(&[&[1]]).unwrap().classify();
    assert!(c.integral && !c.even && c.unimodular);
    let c = Lattice::from_gram(ExactMatrix::scalar(2, ratio(1, 3))).unwrap().classify();
    assert!(!c.integral);
}

#[test]
fn meet_join_examples() {
    let z2 = ExactMatrix::identity(2);
    let a = Lattice::in_parent(z2.clone(), ExactMatrix::scalar(2, rat(2))).unwrap();
    let b = Lattice::in_parent(z2.clone(), ExactMatrix::identity(2)).unwrap();
    let mj = a.meet_join(&b).unwrap();
    assert!(mj.meet.same_module(&a).unwrap());
    assert!(mj.join.same_module(&b).unwrap());
    assert_eq!(mj.index_in_b, Some(int(4)));
    assert_eq!(mj.index_in_a, Some(int(1)));
    let same = a.meet_join(&a).unwrap();
    assert_eq!(same.index_in_a, Some(int(1)));
    assert!(same.join.same_module(&a).unwrap());

    let e8 = crate::fixtures::e8_in_z8();
    let z8 = Lattice::in_parent(ExactMatrix::identity(8), ExactMatrix::identity(8)).unwrap();
    let mj = e8.meet_join(&z8).unwrap();
    assert_eq!(mj.index_in_a, Some(int(2)));
    assert_eq!(mj.index_in_b, Some(int(2)));
    assert_eq!(mj.meet.det(), rat(4));

    let other = Lattice::in_parent(ExactMatrix::scalar(2, rat(2)), ExactMatrix::identity(2)).unwrap();
    assert!(a.meet_join(&other).is_err());
    assert!(Lattice::from_gram(z2).unwrap().meet_join(&a).is_err());
}

#[test]
fn isometry_examples() {
    let z2 = Lattice::from_gram(ExactMatrix::identity(2)).unwrap();
    let skew = Lattice::from_i64(&[&[1, 3], &[3, 10]]).unwrap();
    match is_isometric(&z2, &skew, &IsometryOptions::default()).unwrap() {
        IsometryResult::Yes(t) => assert_eq!(t.congruence(skew.gram()).unwrap(), *z2.gram()),
        other => panic!("{other:?}"),
    }
    let two = Lattice::from_gram(ExactMatrix::scalar(2, rat(2))).unwrap();
    assert!(matches!(
        is_isometric(&z2, &two, &IsometryOptions::default()).unwrap(),
        IsometryResult::No(_)
    ));
    let capped = IsometryOptions {
        dim_cap: 1,
        ..Default::default()
    };
    assert!(matches!(
        is_isometric(&z2, &z2, &capped).unwrap(),
        IsometryResult::Inconclusive(_)
    ));
    // A_2 vs Z^2 scaled: same det 3? no: A_2 det 3 vs diag(1,3) det 3
    let a2 = Lattice::from_i64(&[&[2, -1], &[-1, 2]]).unwrap();
    let d13 = Lattice::from_i64(&[&[1, 0], &[0, 3]]).unwrap();
    assert!(matches!(
        is_isometric(&a2, &d13, &IsometryOptions::default()).unwrap(),
        IsometryResult::No(_)
    ));
}
