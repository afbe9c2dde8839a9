//! Fixed-point complex arithmetic for root extraction.
//!
//! Values are Gaussian integers scaled by `2^w`. Roots are found by
//! Durand–Kerner iteration, first at a cheap working precision and then
//! refined at the requested one. Everything that is reported back to the
//! caller is converted to exact dyadic rationals, so residuals can be
//! evaluated exactly.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{self, Rat};

/// Exact complex rational `re + i·im`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn real(re: Rat) -> Self {
        CRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        CRat::real(Rat::zero())
    }

    pub fn one() -> Self {
        CRat::real(Rat::one())
    }

    pub fn add(&self, o: &CRat) -> CRat {
        CRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &CRat) -> CRat {
        CRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &CRat) -> CRat {
        CRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn scale(&self, q: &Rat) -> CRat {
        CRat {
            re: &self.re * q,
            im: &self.im * q,
        }
    }

    pub fn pow(&self, e: u32) -> CRat {
        (0..e).fold(CRat::one(), |acc, _| acc.mul(self))
    }

    /// `|re| + |im|`, an upper bound for the modulus.
    pub fn norm_bound(&self) -> Rat {
        self.re.abs() + self.im.abs()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// Gaussian integer scaled by `2^w`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

impl Fx {
    fn zero() -> Self {
        Fx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn from_rat(q: &Rat, w: u32) -> Self {
        Fx {
            re: round_div(&(q.numer() << w), q.denom()),
            im: BigInt::zero(),
        }
    }

    fn rescale(&self, from: u32, to: u32) -> Self {
        let shift = |v: &BigInt| {
            if to >= from {
                v << (to - from)
            } else {
                v >> (from - to)
            }
        };
        Fx {
            re: shift(&self.re),
            im: shift(&self.im),
        }
    }

    fn add(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Fx, w: u32) -> Fx {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> w,
            im: (&self.re * &o.im + &self.im * &o.re) >> w,
        }
    }

    /// `None` when the divisor is zero at this precision.
    fn div(&self, o: &Fx, w: u32) -> Option<Fx> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let nre = &self.re * &o.re + &self.im * &o.im;
        let nim = &self.im * &o.re - &self.re * &o.im;
        Some(Fx {
            re: round_div(&(nre << w), &den),
            im: round_div(&(nim << w), &den),
        })
    }

    /// max(|re|, |im|) in units of `2^-w`.
    fn magnitude(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }

    fn to_crat(&self, w: u32) -> CRat {
        let den = BigInt::one() << w;
        CRat {
            re: Rat::new(self.re.clone(), den.clone()),
            im: Rat::new(self.im.clone(), den),
        }
    }
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_mod_floor(d);
    if (r << 1u32) >= d.abs() {
        q + 1
    } else {
        q
    }
}

/// Horner evaluation of a monic polynomial given by fixed-point coefficients
/// `c[0] + c[1] z + ⋯ + c[n−1] z^{n−1} + z^n`.
fn eval_monic(c: &[Fx], z: &Fx, w: u32) -> Fx {
    let mut acc = Fx {
        re: BigInt::one() << w,
        im: BigInt::zero(),
    };
    for ci in c.iter().rev() {
        acc = acc.mul(z, w).add(ci);
    }
    acc
}

/// One Durand–Kerner sweep; returns the largest update magnitude, or `None`
/// if two approximations collided.
fn dk_sweep(c: &[Fx], z: &mut [Fx], w: u32) -> Option<BigInt> {
    let mut worst = BigInt::zero();
    for k in 0..z.len() {
        let mut den = Fx {
            re: BigInt::one() << w,
            im: BigInt::zero(),
        };
        for j in 0..z.len() {
            if j != k {
                den = den.mul(&z[k].sub(&z[j]), w);
            }
        }
        let step = eval_monic(c, &z[k], w).div(&den, w)?;
        worst = worst.max(step.magnitude());
        z[k] = z[k].sub(&step);
    }
    Some(worst)
}

fn run_dk(c: &[Fx], z: &mut [Fx], w: u32, target_bits: u32, max_iter: usize) -> bool {
    let tol = BigInt::one() << w.saturating_sub(target_bits);
    for _ in 0..max_iter {
        match dk_sweep(c, z, w) {
            Some(worst) if worst <= tol => return true,
            Some(_) => {}
            None => return false,
        }
    }
    false
}

/// Approximations of all complex roots of a squarefree univariate polynomial
/// (ascending rational coefficients, degree ≥ 1), accurate to roughly
/// `prec` bits. Each root is returned as an exact dyadic rational.
pub fn complex_roots(coeffs: &[Rat], prec: u32) -> Result<Vec<CRat>> {
    let n = coeffs.len().checked_sub(1).ok_or(Error::ZeroPolynomial)?;
    if n == 0 || coeffs[n].is_zero() {
        return Err(Error::Invalid("polynomial must have a nonzero leading term".into()));
    }
    let lead = &coeffs[n];
    let monic: Vec<Rat> = coeffs[..n].iter().map(|c| c / lead).collect();
    if n == 1 {
        return Ok(vec![CRat::real(-monic[0].clone())]);
    }

    // coarse phase
    let w0 = 96;
    let c0: Vec<Fx> = monic.iter().map(|q| Fx::from_rat(q, w0)).collect();
    // Cauchy bound scales the classical (0.4 + 0.9i)^k start
    let bound = monic
        .iter()
        .map(|q| q.abs())
        .fold(Rat::zero(), |a, b| if b > a { b } else { a })
        + Rat::one();
    let radius = Fx::from_rat(&bound, w0);
    let seed = Fx {
        re: (BigInt::from(2) << w0) / 5,
        im: (BigInt::from(9) << w0) / 10,
    };
    let mut z = Vec::with_capacity(n);
    let mut cur = seed.clone();
    for _ in 0..n {
        z.push(cur.mul(&radius, w0));
        cur = cur.mul(&seed, w0);
    }
    let coarse_ok = run_dk(&c0, &mut z, w0, 48, 400 + 40 * n);

    // fine phase at the requested precision plus guard bits
    let w = prec + 64;
    let c: Vec<Fx> = monic.iter().map(|q| Fx::from_rat(q, w)).collect();
    let mut z: Vec<Fx> = z.iter().map(|x| x.rescale(w0, w)).collect();
    let max_iter = if coarse_ok { 64 } else { 2000 + 100 * n };
    if !run_dk(&c, &mut z, w, prec + 8, max_iter) {
        return Err(Error::RootRefinement { bits: prec });
    }
    Ok(z.iter().map(|x| x.to_crat(w)).collect())
}

/// Continued-fraction convergents of `x` with denominators below
/// `2^max_den_bits`.
pub fn convergents(x: &Rat, max_den_bits: u64) -> Vec<Rat> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    loop {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2.bits() > max_den_bits {
            break;
        }
        out.push(Rat::new(h2.clone(), k2.clone()));
        let frac = &rest - Rat::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
        h0 = core::mem::replace(&mut h1, h2);
        k0 = core::mem::replace(&mut k1, k2);
    }
    out
}

/// Solves the consistent complex system `A c = b` (rows ≥ cols, full column
/// rank) in fixed point with partial row pivoting. `cols[k]` is column `k`.
pub(crate) fn solve_complex(cols: &[Vec<CRat>], b: &[CRat], prec: u32) -> Option<Vec<CRat>> {
    let w = prec + 64;
    let r = cols.len();
    let n = b.len();
    let to_fx = |q: &CRat| Fx {
        re: round_div(&(q.re.numer() << w), q.re.denom()),
        im: round_div(&(q.im.numer() << w), q.im.denom()),
    };
    let mut a: Vec<Vec<Fx>> = (0..n)
        .map(|i| {
            let mut row: Vec<Fx> = cols.iter().map(|c| to_fx(&c[i])).collect();
            row.push(to_fx(&b[i]));
            row
        })
        .collect();
    let mut used = vec![false; n];
    let mut pivots = Vec::with_capacity(r);
    for k in 0..r {
        let p = (0..n)
            .filter(|&i| !used[i])
            .max_by(|&i, &j| a[i][k].magnitude().cmp(&a[j][k].magnitude()))?;
        if a[p][k].magnitude().is_zero() {
            return None;
        }
        used[p] = true;
        pivots.push(p);
        for i in 0..n {
            if used[i] || a[i][k].magnitude().is_zero() {
                continue;
            }
            let f = a[i][k].div(&a[p][k], w)?;
            for j in k..=r {
                let t = f.mul(&a[p][j], w);
                a[i][j] = a[i][j].sub(&t);
            }
        }
    }
    let mut x = vec![Fx::zero(); r];
    for k in (0..r).rev() {
        let p = pivots[k];
        let mut acc = a[p][r].clone();
        for j in k + 1..r {
            acc = acc.sub(&a[p][j].mul(&x[j], w));
        }
        x[k] = acc.div(&a[p][k], w)?;
    }
    Some(x.iter().map(|v| v.to_crat(w)).collect())
}

/// Decimal rendering of a rational with `digits` fractional digits,
/// truncated toward zero.
pub fn to_decimal(q: &Rat, digits: usize) -> String {
    let neg = q.is_negative();
    let a = q.abs();
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (a.numer() * &scale) / a.denom();
    let (int_part, frac) = scaled.div_rem(&scale);
    let mut s = String::new();
    if neg && !scaled.is_zero() {
        s.push('-');
    }
    s.push_str(&alloc::format!("{int_part}"));
    if digits > 0 {
        let f = alloc::format!("{frac}");
        s.push('.');
        for _ in f.len()..digits {
            s.push('0');
        }
        s.push_str(&f);
    }
    s
}

/// `⌈log₂ |q|⌉`-style exponent: the smallest `e` with `|q| ≤ 2^e`
/// (`None` for zero).
pub fn log2_ceil(q: &Rat) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let a = q.abs();
    let mut e = a.numer().bits() as i64 - a.denom().bits() as i64 + 1;
    let two = Rat::from_integer(BigInt::from(2));
    let bound = |e: i64| {
        if e >= 0 {
            rat::pow(&two, e as u32)
        } else {
            rat::pow(&two, (-e) as u32).recip()
        }
    };
    while a > bound(e) {
        e += 1;
    }
    while a <= bound(e - 1) {
        e -= 1;
    }
    Some(e)
}
