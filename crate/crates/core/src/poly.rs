//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored lowest degree first, so `coeffs()[i]` is the
//! coefficient of `x^i`. Everything in the exact phase of the classifier
//! goes through [`IntPoly`]; [`RatPoly`] only exists to accept rational
//! input before it is scaled to a monic integral representative.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from coefficients ordered lowest degree first.
    /// Trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from coefficients ordered highest degree first,
    /// the way polynomials are usually written down.
    pub fn from_desc(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    /// Monic polynomial with the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(IntPoly::from_i64(&[1]), |acc, &r| {
            acc.mul(&IntPoly::from_i64(&[-r, 1]))
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn constant(&self) -> BigInt {
        self.coeff(0)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients converted to `f64`, failing if any of them overflows.
    pub fn to_f64_coeffs(&self) -> Result<Vec<f64>> {
        self.coeffs
            .iter()
            .map(|c| match c.to_f64() {
                Some(v) if v.is_finite() => Ok(v),
                _ => Err(Error::PrecisionExceeded),
            })
            .collect()
    }

    /// Horner evaluation in double precision complex arithmetic.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        Ok(horner_c(&self.to_f64_coeffs()?, z))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Quotient and remainder by a monic divisor; exact over the integers.
    ///
    /// Panics if `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree();
        if self.is_zero() || self.degree() < dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let lead = std::mem::take(&mut rem[k + dd]);
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + j] -= &lead * c;
            }
            quot[k] = lead;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// `p(scale·x + offset)`.
    pub fn compose_linear(&self, scale: &BigInt, offset: &BigInt) -> IntPoly {
        let lin = IntPoly::new(vec![offset.clone(), scale.clone()]);
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            acc.mul(&lin).add(&IntPoly::new(vec![c.clone()]))
        })
    }

    /// `p(x + k)`.
    pub fn shift(&self, k: &BigInt) -> IntPoly {
        self.compose_linear(&BigInt::one(), k)
    }

    /// True when the polynomial has the shape `x^n + p·x + q`.
    pub fn is_trinomial(&self) -> bool {
        let n = self.degree();
        self.is_monic() && n >= 3 && self.coeffs[2..n].iter().all(Zero::is_zero)
    }
}

pub(crate) fn horner_c(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl From<IntPoly> for RatPoly {
    fn from(p: IntPoly) -> Self {
        RatPoly::from(&p)
    }
}

/// Scales a rational polynomial to a monic integral one with the same
/// splitting field.
///
/// With `ĝ = g / lead(g)` of degree `n`, returns `f(x) = λⁿ·ĝ(x/λ)` for the
/// least positive `λ` making every coefficient integral. The roots of `f`
/// are `λ` times the roots of `g`.
pub fn normalize_to_monic_integral(g: &RatPoly) -> Result<(IntPoly, BigInt)> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = g.degree();
    let lead = g.coeffs[n].clone();
    let monic: Vec<BigRational> = g.coeffs.iter().map(|c| c / &lead).collect();

    // λ needs p^ceil(e/(n-i)) for every p^e exactly dividing a denominator.
    let mut need: Vec<(BigInt, u32)> = Vec::new();
    for (i, c) in monic.iter().enumerate().take(n) {
        let k = (n - i) as u32;
        for (p, e) in factor_small(c.denom()) {
            let want = e.div_ceil(k);
            match need.iter_mut().find(|(q, _)| *q == p) {
                Some(slot) => slot.1 = slot.1.max(want),
                None => need.push((p, want)),
            }
        }
    }
    let lambda = need
        .iter()
        .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize));

    let mut out = Vec::with_capacity(n + 1);
    let mut power = BigInt::one();
    for i in (0..=n).rev() {
        let scaled = &monic[i] * BigRational::from_integer(power.clone());
        debug_assert!(scaled.is_integer());
        out.push(scaled.to_integer());
        power *= &lambda;
    }
    out.reverse();
    Ok((IntPoly::new(out), lambda))
}

/// Prime factorization by trial division. Denominators of user input are
/// small, so nothing cleverer is needed here.
fn factor_small(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Removes the `x^4` term of a monic quintic with `x = 5y + a`, returning
/// `f(x) = 5⁵·g((x − a)/5)` and the shift `a` (the `x^4` coefficient of `g`).
///
/// When `a = 0` the input is returned unchanged instead of being scaled.
pub fn depress_quintic(g: &IntPoly) -> Result<(IntPoly, BigInt)> {
    if g.degree() != 5 || g.is_zero() {
        return Err(Error::DegreeOutOfRange(g.degree()));
    }
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let a = g.coeff(4);
    if a.is_zero() {
        return Ok((g.clone(), a));
    }
    let lin = IntPoly::new(vec![-&a, BigInt::one()]);
    let five = BigInt::from(5);
    let mut acc = IntPoly::zero();
    for (i, c) in g.coeffs().iter().enumerate().rev() {
        let w = c * num_traits::pow(five.clone(), 5 - i);
        acc = acc.mul(&lin).add(&IntPoly::new(vec![w]));
    }
    debug_assert!(acc.coeff(4).is_zero() && acc.is_monic());
    Ok((acc, a))
}

/// Greatest common divisor over Q, returned as a primitive integer
/// polynomial with positive leading coefficient.
pub fn gcd_over_q(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    x
}

fn content(p: &IntPoly) -> BigInt {
    p.coeffs
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let mut c = content(p);
    if p.leading().is_some_and(Signed::is_negative) {
        c = -c;
    }
    IntPoly::new(p.coeffs.iter().map(|x| x / &c).collect())
}

fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree();
    let lb = b.leading().cloned().unwrap_or_default();
    let mut r = a.clone();
    while !r.is_zero() && r.degree() >= db {
        let k = r.degree() - db;
        let lr = r.leading().cloned().unwrap_or_default();
        let mut shifted = vec![BigInt::zero(); k];
        shifted.extend(b.coeffs.iter().map(|c| c * &lr));
        r = r.scale(&lb).sub(&IntPoly::new(shifted));
    }
    r
}
