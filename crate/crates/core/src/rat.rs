//! Rational scalars and small combinatorial helpers.

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number; always stored in lowest terms with a positive
/// denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Invalid(alloc::format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// d! / (α₀! ⋯ α_m!) for |α| = d.
pub fn multinomial(alpha: &[u32]) -> BigInt {
    let d: u32 = alpha.iter().sum();
    let mut acc = factorial(d as usize);
    for &a in alpha {
        acc /= factorial(a as usize);
    }
    acc
}

pub fn pow(q: &Rat, e: u32) -> Rat {
    num_traits::pow::pow(q.clone(), e as usize)
}

/// Least common multiple of the denominators in `v`.
pub fn denominator_lcm(v: &[Rat]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scales `v` by a nonzero rational so that it becomes a primitive integer
/// vector with positive first nonzero entry. Zero vectors are returned as is.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let l = denominator_lcm(v);
    let mut ints: Vec<BigInt> = v.iter().map(|q| (q * int(&l)).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign_neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x /= &g;
        if sign_neg {
            *x = -x.clone();
        }
    }
    ints
}

/// Scales `v` so that its first nonzero entry equals 1. Returns `None` for the
/// zero vector.
pub fn normalize_first_one(v: &[Rat]) -> Option<Vec<Rat>> {
    let lead = v.iter().find(|q| !q.is_zero())?.clone();
    Some(v.iter().map(|q| q / &lead).collect())
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn axpy(alpha: &Rat, x: &[Rat], y: &mut [Rat]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn scaled(alpha: &Rat, x: &[Rat]) -> Vec<Rat> {
    x.iter().map(|xi| alpha * xi).collect()
}

/// Number of bits of the larger of numerator and denominator.
pub fn height_bits(q: &Rat) -> u64 {
    q.numer().bits().max(q.denom().bits())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("-4").unwrap(), rat(-4));
        assert_eq!(parse_rat(" 2/-4 ").unwrap(), ratio(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(fmt_rat(&ratio(-6, 4)), "-3/2");
        assert_eq!(fmt_rat(&rat(0)), "0");
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial_usize(10, 3), 120);
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(factorial(0), BigInt::one());
    }

    #[test]
    fn primitive_vectors() {
        let v = [ratio(-1, 2), ratio(1, 3), rat(0)];
        let p = primitive_integer(&v);
        assert_eq!(p, [BigInt::from(3), BigInt::from(-2), BigInt::zero()]);
    }
}
