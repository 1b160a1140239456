use super::*;
use crate::matrix::ExactMatrix;
use crate::num::{rat, ratio};

fn field(m: u64) -> CycloField {
    CycloField::new(m).unwrap()
}

fn el(f: &CycloField, c: &[i64]) -> CycloElement {
    f.element(c.iter().map(|&x| rat(x)).collect()).unwrap()
}

/// `μ(m/g) φ(m) / φ(m/g)` with `g = gcd(k, m)`: the trace of `ζ^k`.
fn ramanujan(k: u64, m: u64) -> Rat {
    use crate::poly::euler_phi;
    let g = num_integer::gcd(k, m);
    let q = m / g;
    let mut mu = 1i64;
    let mut r = q;
    let mut p = 2;
    while r > 1 {
        if r.is_multiple_of(p) {
            r /= p;
            if r.is_multiple_of(p) {
                mu = 0;
                break;
            }
            mu = -mu;
        }
        p += 1;
    }
    Rat::new((mu * euler_phi(m) as i64).into(), (euler_phi(q) as i64).into())
}

#[test]
fn field_basics() {
    assert_eq!(field(4).degree(), 2);
    assert_eq!(field(6).m(), 3);
    assert!(CycloField::new(2).is_err());
    assert_eq!(field(15).degree(), 8);
}

#[test]
fn traces() {
    let f4 = field(4);
    assert_eq!(f4.one().trace(), rat(2));
    assert_eq!(f4.zeta().trace(), rat(0));
    assert_eq!(field(5).zeta().trace(), rat(-1));
    for m in [3u64, 4, 5, 7, 8, 9, 12, 15, 20, 24] {
        let f = field(m);
        for k in 0..m {
            let z = f.zeta_pow(k as i64);
            let by_matrix: Rat = (0..f.degree()).map(|i| z.mul_matrix()[(i, i)].clone()).sum();
            assert_eq!(z.trace(), by_matrix);
            assert_eq!(z.trace(), ramanujan(k, m), "m = {m}, k = {k}");
        }
    }
}

#[test]
fn arithmetic() {
    let f = field(7);
    let x = el(&f, &[1, 2, 0, -1, 0, 3]);
    assert_eq!(&x * &x.inv().unwrap(), f.one());
    assert_eq!(x.conj().conj(), x);
    assert_eq!(x.trace(), x.conj().trace());
    assert_eq!(f.zero().inv(), Err(crate::Error::ZeroDivision));
    assert_eq!(&f.zeta_pow(3) * &f.zeta_pow(4), f.one());
    assert_eq!(f.zeta().conj(), f.zeta_pow(-1));
    assert_eq!((&f.one() - &f.zeta()).norm(), rat(7));
}

#[test]
fn total_positivity() {
    let f = field(5);
    assert!(f.one().is_totally_positive());
    assert!(!f.from_rat(rat(-1)).is_totally_positive());
    let a = &(&f.from_rat(rat(2)) + &f.zeta()) + &f.zeta_pow(-1);
    assert!(a.is_totally_positive());
    // ζ + ζ^{-1} = 2cos(2π/5) > 0, 2cos(4π/5) < 0
    let b = &f.zeta() + &f.zeta_pow(-1);
    assert!(!b.is_totally_positive());
    assert!(!f.zeta().is_totally_positive());
    // a root-of-unity sum that is very close to zero in one embedding
    let f = field(12);
    let s3 = &f.zeta() + &f.zeta_pow(-1);
    let near = &s3 - &f.from_rat(ratio(17320508, 10000000));
    assert!(!near.is_totally_positive());
    let near = &s3.scale(&rat(2)) - &f.from_rat(ratio(3464101, 1000000));
    assert!(!near.is_totally_positive());
}

#[test]
fn codifferent() {
    let f = field(4);
    assert_eq!(trace_dual_z(&f), FractionalIdeal::principal(&f.from_rat(ratio(1, 2))).unwrap());
    let f = field(3);
    let u = &f.one() - &f.zeta();
    assert_eq!(trace_dual_z(&f), FractionalIdeal::principal(&u.inv().unwrap()).unwrap());
    for m in [5u64, 8, 9, 12, 15] {
        let f = field(m);
        let by_derivative = FractionalIdeal::principal(&f.min_poly_derivative_at_zeta().inv().unwrap()).unwrap();
        assert_eq!(trace_dual_z(&f), by_derivative, "m = {m}");
        assert_eq!(trace_dual_z(&f), FractionalIdeal::unit(&f).trace_dual());
    }
}

#[test]
fn codifferent_47() {
    let f = field(47);
    let u = &f.one() - &f.zeta();
    let want = FractionalIdeal::principal(&u.pow(-45).unwrap()).unwrap();
    assert_eq!(trace_dual_z(&f), want);
}

#[test]
fn small_ideal_lattices() {
    let f = field(4);
    let spec = IdealLatticeSpec::new(FractionalIdeal::unit(&f), f.from_rat(ratio(1, 2))).unwrap();
    let l = ideal_lattice(&spec).unwrap();
    assert_eq!(l.gram(), &ExactMatrix::identity(2));
    assert!(is_unimodular(&spec).unwrap());
    assert_eq!(ideal_dual(&spec).unwrap(), FractionalIdeal::unit(&f));
    assert!(dual_routes_agree(&spec).unwrap());

    let f = field(3);
    let spec = IdealLatticeSpec::new(FractionalIdeal::unit(&f), f.one()).unwrap();
    let l = ideal_lattice(&spec).unwrap();
    assert_eq!(l.gram(), &ExactMatrix::from_i64(&[&[2, -1], &[-1, 2]]));
    assert!(!is_unimodular(&spec).unwrap());
    let u = &f.one() - &f.zeta();
    let dual = ideal_dual(&spec).unwrap();
    assert_eq!(dual, FractionalIdeal::principal(&u.inv().unwrap()).unwrap());
    assert_eq!(dual.norm(), ratio(1, 3));
    assert!(dual_routes_agree(&spec).unwrap());

    let f = field(5);
    let spec = IdealLatticeSpec::new(FractionalIdeal::unit(&f), f.one()).unwrap();
    assert_eq!(ideal_lattice(&spec).unwrap().det(), rat(125));
}

#[test]
fn spec_validation() {
    let f = field(5);
    let j = FractionalIdeal::unit(&f);
    assert_eq!(IdealLatticeSpec::new(j.clone(), f.from_rat(rat(-1))).unwrap_err(), crate::Error::NotTotallyPositive);
    assert!(matches!(IdealLatticeSpec::new(j, f.zeta()), Err(crate::Error::Precondition(_))));
}

#[test]
fn unimodularity_is_scale_invariant() {
    let f = field(4);
    let x = el(&f, &[1, 1]);
    let j = FractionalIdeal::principal(&x).unwrap();
    let alpha = f.from_rat(ratio(1, 2)).scale(&rat(1)).clone();
    let nx = &x * &x.conj();
    let spec = IdealLatticeSpec::new(j, &alpha * &nx.inv().unwrap()).unwrap();
    assert!(is_unimodular(&spec).unwrap());
    assert!(ideal_lattice(&spec).unwrap().is_unimodular());
}

#[test]
fn tp_generators() {
    let opts = TpSearch::default();
    let f = field(4);
    let two = FractionalIdeal::principal(&f.from_rat(rat(2))).unwrap();
    assert_eq!(find_tp_generator(&two, &cyclotomic_units(&f), &opts).unwrap(), Some(f.from_rat(rat(2))));
    let f = field(3);
    let u = &f.one() - &f.zeta();
    let p = FractionalIdeal::principal(&u).unwrap();
    let three = p.mul(&p.conj());
    assert_eq!(find_tp_generator(&three, &[], &opts).unwrap(), Some(f.from_rat(rat(3))));
    assert_eq!(find_tp_generator(&p, &[], &opts).unwrap(), None);
}

#[test]
fn units_are_real_units() {
    for m in [5u64, 7, 9, 12, 15, 16, 20, 24] {
        let f = field(m);
        let us = cyclotomic_units(&f);
        assert_eq!(us.len(), (f.degree() / 2).saturating_sub(1).min(us.len()));
        for u in us {
            assert!(u.is_real());
            assert!(u.is_integral() && u.inv().unwrap().is_integral(), "m = {m}");
        }
    }
}
