//! Small helpers around `BigInt` / `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_int(v: &Int) -> Rat {
    BigRational::from_integer(v.clone())
}

/// Returns the integer value of `q`, or `None` if `q` is not integral.
pub fn to_int(q: &Rat) -> Option<Int> {
    if q.is_integer() {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> Int {
    values
        .into_iter()
        .fold(Int::one(), |acc, v| acc.lcm(v.denom()))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::input(format!("invalid rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().map_err(|_| bad())?;
            let d: Int = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::ZeroDivision);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(from_int(&s.parse::<Int>().map_err(|_| bad())?)),
    }
}

/// Canonical text form: `a` for integers, `a/b` otherwise, lowest terms, `b > 0`.
pub fn fmt_rat(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact `p`-adic exponent of a positive integer that is a pure power of `p`.
pub fn exact_log(value: &Int, p: u64) -> Option<u32> {
    if !value.is_positive() {
        return None;
    }
    let p = Int::from(p);
    let mut v = value.clone();
    let mut e = 0;
    while !v.is_one() {
        let (q, r) = v.div_rem(&p);
        if !r.is_zero() {
            return None;
        }
        v = q;
        e += 1;
    }
    Some(e)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

/// Rounds to the nearest integer, halves away from zero.
pub fn round_rat(q: &Rat) -> Int {
    q.round().to_integer()
}

/// Nonnegative floor square root of a perfect-square rational, if it is one.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

pub fn to_f64(q: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert_eq!(fmt_rat(&ratio(-6, 4)), "-3/2");
        assert_eq!(fmt_rat(&rat(47)), "47");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn logs_and_primes() {
        assert_eq!(exact_log(&int(121), 11), Some(2));
        assert_eq!(exact_log(&int(1), 5), Some(0));
        assert_eq!(exact_log(&int(12), 2), None);
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(rat_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rat_sqrt(&rat(2)), None);
    }
}
