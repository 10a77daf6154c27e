//! Exact integer predicates: square testing and integer roots.

use std::collections::BTreeSet;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric;
use crate::poly::IntPoly;

/// Constant terms up to this size also get their divisors tried as roots.
const DIVISOR_SCAN_LIMIT: u64 = 1_000_000_000;

/// Iteration budget for the numeric candidate search in [`integer_roots`].
const ROOT_ITERS: usize = 500;

/// `⌊√n⌋` by Newton iteration from a power-of-two guess above the root.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    match n.sign() {
        Sign::Minus => return Err(Error::NegativeSqrt),
        Sign::NoSign => return Ok(BigInt::zero()),
        Sign::Plus => {}
    }
    let bits = n.bits();
    let mut x = BigInt::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return Ok(x);
        }
        x = y;
    }
}

/// The nonnegative square root of `n` when `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    // squares mod 16 are 0, 1, 4, 9
    let low = (n & BigInt::from(15)).to_u8().unwrap_or(0);
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let k = isqrt(n).ok()?;
    (&k * &k == *n).then_some(k)
}

/// Every integer root of `p`, ascending, each verified by exact evaluation.
///
/// Candidates come from the floor, ceiling, and rounding of the real part of
/// each numeric root approximation, plus all divisors of the constant term
/// when it is small enough to factor by trial division. A candidate is
/// reported only if `p(k) = 0` exactly.
pub fn integer_roots(p: &IntPoly) -> Vec<BigInt> {
    let mut found = BTreeSet::new();
    let mut p = p.clone();
    while p.degree() >= 1 && p.constant().is_zero() {
        found.insert(BigInt::zero());
        p = IntPoly::new(p.coeffs()[1..].to_vec());
    }
    if p.is_zero() || p.degree() == 0 {
        return found.into_iter().collect();
    }

    let mut candidates: BTreeSet<BigInt> = BTreeSet::new();
    if let Ok((approx, _)) = numeric::approximate_roots(&p, ROOT_ITERS) {
        for z in approx {
            for v in [z.re.floor(), z.re.ceil(), z.re.round()] {
                if let Some(k) = num_traits::FromPrimitive::from_f64(v) {
                    candidates.insert(k);
                }
            }
        }
    }
    if let Some(c) = p.constant().abs().to_u64().filter(|&c| c <= DIVISOR_SCAN_LIMIT) {
        for d in divisors(c) {
            candidates.insert(BigInt::from(d));
            candidates.insert(-BigInt::from(d));
        }
    }
    for k in candidates {
        if !found.contains(&k) && p.eval(&k).is_zero() {
            found.insert(k);
        }
    }
    found.into_iter().collect()
}

/// Positive divisors of `n > 0`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
