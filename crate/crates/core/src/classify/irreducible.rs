//! Exact irreducibility test for monic integer polynomials of degree ≤ 5.
//!
//! Such a polynomial is reducible iff it has a monic factor of degree one or
//! two. Linear factors come from [`integer_roots`]; quadratic factors are
//! searched for among candidates built from pairs of numeric roots and, when
//! the constant term is small, from its divisors. Every candidate is
//! confirmed by exact division.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{divisors, integer_roots, is_perfect_square};
use crate::numeric::{approximate_roots, cauchy_radius};
use crate::poly::{gcd_over_q, IntPoly};

const ROOT_ITERS: usize = 500;
const DIVISOR_LIMIT: u64 = 1_000_000_000;
/// Cap on `(a, b)` pairs tried by the quintic divisor enumeration.
const QUINTIC_PAIR_BUDGET: u64 = 400_000;

pub fn is_irreducible(f: &IntPoly) -> bool {
    find_factor(f).is_none()
}

/// A monic factor of degree 1 or 2, if `f` has one.
///
/// Panics if `f` is not monic.
pub fn find_factor(f: &IntPoly) -> Option<IntPoly> {
    assert!(f.is_monic(), "irreducibility test needs a monic polynomial");
    let n = f.degree();
    if n <= 1 {
        return None;
    }
    if let Some(k) = pick_root(integer_roots(f)) {
        return Some(IntPoly::new(vec![-k, BigInt::one()]));
    }
    if n <= 3 {
        return None;
    }
    quadratic_factor(f).or_else(|| {
        // repeated factors are always found above; kept as a backstop
        let g = gcd_over_q(f, &f.derivative());
        (g.degree() > 0 && g.is_monic()).then_some(g)
    })
}

/// Smallest root by magnitude, positive on ties.
fn pick_root(roots: Vec<BigInt>) -> Option<BigInt> {
    roots
        .into_iter()
        .min_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)))
}

fn divides(q: &IntPoly, f: &IntPoly) -> bool {
    f.div_rem_monic(q).1.is_zero()
}

fn quad(a: &BigInt, b: &BigInt) -> IntPoly {
    IntPoly::new(vec![b.clone(), a.clone(), BigInt::one()])
}

fn quadratic_factor(f: &IntPoly) -> Option<IntPoly> {
    numeric_candidates(f).or_else(|| match f.degree() {
        4 => quartic_divisor_search(f),
        5 => quintic_divisor_search(f),
        _ => None,
    })
}

/// `x² − (ρᵢ + ρⱼ)x + ρᵢρⱼ` for every pair of approximate roots, with each
/// coefficient rounded both ways.
fn numeric_candidates(f: &IntPoly) -> Option<IntPoly> {
    let (roots, _) = approximate_roots(f, ROOT_ITERS).ok()?;
    let ints = |v: f64| -> Vec<BigInt> {
        let mut out: Vec<BigInt> = [v.floor(), v.ceil()]
            .into_iter()
            .filter_map(num_traits::FromPrimitive::from_f64)
            .collect();
        out.dedup();
        out
    };
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let s = roots[i] + roots[j];
            let m = roots[i] * roots[j];
            for a in ints(-s.re) {
                for b in ints(m.re) {
                    let q = quad(&a, &b);
                    if divides(&q, f) {
                        return Some(q);
                    }
                }
            }
        }
    }
    None
}

fn small_divisors(c: &BigInt) -> Option<Vec<BigInt>> {
    let c = c.abs().to_u64().filter(|&c| c > 0 && c <= DIVISOR_LIMIT)?;
    Some(
        divisors(c)
            .into_iter()
            .flat_map(|d| [BigInt::from(d), -BigInt::from(d)])
            .collect(),
    )
}

/// `(x² + ax + b)(x² + ex + d)` with `b·d` the constant term: for each
/// divisor pair, `a` is pinned down by the `x³` and `x` coefficients.
fn quartic_divisor_search(f: &IntPoly) -> Option<IntPoly> {
    let [c0, c1, c2, c3] = [0, 1, 2, 3].map(|i| f.coeff(i));
    for b in small_divisors(&c0)? {
        let d = &c0 / &b;
        let mut candidates = Vec::new();
        if d != b {
            // a(d − b) = c1 − b·c3
            let num = &c1 - &b * &c3;
            let den = &d - &b;
            if (&num % &den).is_zero() {
                candidates.push(num / den);
            }
        } else if c1 == &b * &c3 {
            // a² − c3·a + (c2 − 2b) = 0
            let disc = &c3 * &c3 - 4 * (&c2 - 2 * &b);
            if let Some(root) = is_perfect_square(&disc) {
                for t in [&c3 + &root, &c3 - &root] {
                    if (&t % BigInt::from(2)).is_zero() {
                        candidates.push(t / 2);
                    }
                }
            }
        }
        for a in candidates {
            let q = quad(&a, &b);
            if divides(&q, f) {
                return Some(q);
            }
        }
    }
    None
}

/// Trial division by `x² + ax + b` with `b` dividing the constant term and
/// `|a|` at most twice the root bound, filtered first by `f(±1)`.
fn quintic_divisor_search(f: &IntPoly) -> Option<IntPoly> {
    let bs = small_divisors(&f.constant())?;
    let coeffs = f.to_f64_coeffs().ok()?;
    let radius = cauchy_radius(&coeffs).ceil() + 1.0;
    let spec_bound = (f.max_abs_coeff() + 1u32) * 2u32;
    let a_max = BigInt::from(2 * radius as i64).min(spec_bound).to_i64()?;
    let bs: Vec<BigInt> = bs
        .into_iter()
        .filter(|b| b.abs().to_f64().is_some_and(|v| v <= radius * radius))
        .collect();
    if (bs.len() as u64) * (2 * a_max as u64 + 1) > QUINTIC_PAIR_BUDGET {
        return None;
    }
    let f1 = f.eval(&BigInt::one());
    let fm1 = f.eval(&-BigInt::one());
    for b in &bs {
        for a in -a_max..=a_max {
            let a = BigInt::from(a);
            // q(±1) must divide f(±1)
            let q1 = BigInt::one() + &a + b;
            let qm1 = BigInt::one() - &a + b;
            if (!q1.is_zero() && !(&f1 % &q1).is_zero())
                || (!qm1.is_zero() && !(&fm1 % &qm1).is_zero())
            {
                continue;
            }
            let q = quad(&a, b);
            if divides(&q, f) {
                return Some(q);
            }
        }
    }
    None
}
