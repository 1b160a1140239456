//! Certified real intervals with rational endpoints, enough to decide the
//! sign of `Σ a_i cos(2π k i / m)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::num::{rat, Int, Rat};

/// A closed interval `[lo, hi]` containing some real number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn point(q: Rat) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn around(center: Rat, radius: Rat) -> Self {
        Interval {
            lo: &center - &radius,
            hi: center + radius,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Widens the endpoints to multiples of `2^-bits`, keeping denominators small.
    pub fn round(&self, bits: u32) -> Self {
        let scale = Rat::from_integer(Int::one() << bits);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Interval { lo, hi }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        let (a, b) = (&self.lo * q, &self.hi * q);
        if q.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Interval::point(rat(1));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        Interval {
            lo: c.iter().min().expect("four products").clone(),
            hi: c.iter().max().expect("four products").clone(),
        }
    }
}

/// `atan(1/x)` for an integer `x >= 2`, to within `2^-bits`.
fn atan_inv(x: u64, bits: u32) -> Interval {
    let eps = Rat::new(Int::one(), Int::one() << bits);
    let x = Int::from(x);
    let x2 = &x * &x;
    let mut sum = Rat::zero();
    let mut xpow = x.clone();
    let mut k: u64 = 0;
    loop {
        let term = Rat::new(Int::one(), Int::from(2 * k + 1) * &xpow);
        if term < eps {
            // alternating series with decreasing terms
            return Interval::around(sum, term);
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        xpow *= &x2;
        k += 1;
    }
}

/// An enclosure of `π` of width about `2^-bits`, from Machin's formula.
pub fn pi(bits: u32) -> Interval {
    let a = atan_inv(5, bits + 6).scale(&rat(16));
    let b = atan_inv(239, bits + 6).scale(&rat(4));
    (&a - &b).round(bits + 4)
}

fn factorial(k: u32) -> Int {
    (1..=k).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// Taylor enclosure of `cos` (`offset = 0`) or `sin` (`offset = 1`) on a
/// nonnegative interval `t`, with the Lagrange remainder added.
fn taylor(t: &Interval, offset: u32, bits: u32) -> Interval {
    let eps = Rat::new(Int::one(), Int::one() << bits);
    let mut sum = Interval::point(Rat::zero());
    let mut k = 0u32;
    loop {
        let e = 2 * k + offset;
        let term = t.pow(e).scale(&Rat::new(Int::one(), factorial(e)));
        sum = if k.is_multiple_of(2) { &sum + &term } else { &sum - &term };
        let next = 2 * (k + 1) + offset;
        let bound = t.hi.abs().pow(next as i32) / Rat::from_integer(factorial(next));
        if bound < eps {
            let rem = Interval::around(Rat::zero(), bound);
            return (&sum + &rem).round(bits + 2);
        }
        k += 1;
    }
}

fn cos_sin_with(pi: &Interval, j: u64, m: u64, bits: u32) -> (Interval, Interval) {
    let j = j % m;
    // reduce to the angle 2π j'/m in [0, π]; sin changes sign for the reflection
    let (jr, sign) = if 2 * j > m { (m - j, -1) } else { (j, 1) };
    let theta = pi.scale(&Rat::new(Int::from(2 * jr), Int::from(m)));
    let c = taylor(&theta, 0, bits + 4);
    let s = taylor(&theta, 1, bits + 4).scale(&rat(sign));
    (c, s)
}

/// Enclosures of `cos(2π j / m)` and `sin(2π j / m)`.
pub fn cos_sin_frac(j: u64, m: u64, bits: u32) -> (Interval, Interval) {
    cos_sin_with(&pi(bits + 8), j, m, bits)
}

/// [`cos_sin_frac`] for `j = 0, .., m-1`.
pub fn cos_sin_table(m: u64, bits: u32) -> Vec<(Interval, Interval)> {
    let p = pi(bits + 8);
    let half: Vec<(Interval, Interval)> = (0..=m / 2).map(|j| cos_sin_with(&p, j, m, bits)).collect();
    (0..m)
        .map(|j| {
            if j <= m / 2 {
                half[j as usize].clone()
            } else {
                let (c, s) = &half[(m - j) as usize];
                (c.clone(), -s)
            }
        })
        .collect()
}
