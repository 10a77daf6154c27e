//! Closed-form discriminants and resolvents for degrees three to five.
//!
//! Each formula is a table of `(coefficient, exponents)` monomials in the
//! polynomial's coefficients, evaluated exactly. Quintic formulas assume the
//! `x^4` term has been removed and are written in the depressed coefficients
//! `x^5 + p·x^3 + q·x^2 + r·x + s`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::IntPoly;

type Term<const N: usize> = (i64, [u32; N]);

fn eval_terms<const N: usize>(terms: &[Term<N>], vars: [&BigInt; N]) -> BigInt {
    let mut total = BigInt::zero();
    for (coef, exps) in terms {
        let mut m = BigInt::from(*coef);
        for (v, &e) in vars.iter().zip(exps) {
            if e > 0 {
                m *= num_traits::pow((*v).clone(), e as usize);
            }
        }
        total += m;
    }
    total
}

// cubic x^3 + ax^2 + bx + c, exponents of (a, b, c)
const DISC_CUBIC: [Term<3>; 5] = [
    (1, [2, 2, 0]),
    (-4, [3, 0, 1]),
    (-4, [0, 3, 0]),
    (18, [1, 1, 1]),
    (-27, [0, 0, 2]),
];

// quartic x^4 + ax^3 + bx^2 + cx + d, exponents of (a, b, c, d)
const DISC_QUARTIC: [Term<4>; 16] = [
    (1, [2, 2, 2, 0]),
    (-4, [3, 0, 3, 0]),
    (-4, [2, 3, 0, 1]),
    (18, [3, 1, 1, 1]),
    (-27, [4, 0, 0, 2]),
    (-4, [0, 3, 2, 0]),
    (18, [1, 1, 3, 0]),
    (16, [0, 4, 0, 1]),
    (-80, [1, 2, 1, 1]),
    (-6, [2, 0, 2, 1]),
    (144, [2, 1, 0, 2]),
    (-27, [0, 0, 4, 0]),
    (144, [0, 1, 2, 1]),
    (-128, [0, 2, 0, 2]),
    (-192, [1, 0, 1, 2]),
    (256, [0, 0, 0, 3]),
];

// depressed quintic, exponents of (p, q, r, s)
const DISC_QUINTIC: [Term<4>; 19] = [
    (-4, [3, 2, 2, 0]),
    (16, [4, 0, 3, 0]),
    (16, [3, 3, 0, 1]),
    (-72, [4, 1, 1, 1]),
    (108, [5, 0, 0, 2]),
    (-27, [0, 4, 2, 0]),
    (144, [1, 2, 3, 0]),
    (-128, [2, 0, 4, 0]),
    (108, [0, 5, 0, 1]),
    (-630, [1, 3, 1, 1]),
    (560, [2, 1, 2, 1]),
    (825, [2, 2, 0, 2]),
    (-900, [3, 0, 1, 2]),
    (256, [0, 0, 5, 0]),
    (-1600, [0, 1, 3, 1]),
    (2250, [0, 2, 1, 2]),
    (2000, [1, 0, 2, 2]),
    (-3750, [1, 1, 0, 3]),
    (3125, [0, 0, 0, 4]),
];

// Sextic resolvent x^6 + Ax^5 + Bx^4 + Cx^3 + Dx^2 + Ex + F.
const R6_A: [Term<4>; 1] = [(8, [0, 0, 1, 0])];

const R6_B: [Term<4>; 4] = [
    (2, [1, 2, 0, 0]),
    (-6, [2, 0, 1, 0]),
    (40, [0, 0, 2, 0]),
    (-50, [0, 1, 0, 1]),
];

const R6_C: [Term<4>; 7] = [
    (-2, [0, 4, 0, 0]),
    (21, [1, 2, 1, 0]),
    (-40, [2, 0, 2, 0]),
    (160, [0, 0, 3, 0]),
    (-15, [2, 1, 0, 1]),
    (-400, [0, 1, 1, 1]),
    (125, [1, 0, 0, 2]),
];

const R6_D: [Term<4>; 12] = [
    (1, [2, 4, 0, 0]),
    (-6, [3, 2, 1, 0]),
    (-8, [0, 4, 1, 0]),
    (9, [4, 0, 2, 0]),
    (76, [1, 2, 2, 0]),
    (-136, [2, 0, 3, 0]),
    (400, [0, 0, 4, 0]),
    (-50, [1, 3, 0, 1]),
    (90, [2, 1, 1, 1]),
    (-1400, [0, 1, 2, 1]),
    (625, [0, 2, 0, 2]),
    (500, [1, 0, 1, 2]),
];

const R6_E: [Term<4>; 21] = [
    (-2, [1, 6, 0, 0]),
    (19, [2, 4, 1, 0]),
    (-51, [3, 2, 2, 0]),
    (3, [0, 4, 2, 0]),
    (32, [4, 0, 3, 0]),
    (76, [1, 2, 3, 0]),
    (-256, [2, 0, 4, 0]),
    (512, [0, 0, 5, 0]),
    (-31, [3, 3, 0, 1]),
    (-58, [0, 5, 0, 1]),
    (117, [4, 1, 1, 1]),
    (105, [1, 3, 1, 1]),
    (260, [2, 1, 2, 1]),
    (-2400, [0, 1, 3, 1]),
    (-108, [5, 0, 0, 2]),
    (-325, [2, 2, 0, 2]),
    (525, [3, 0, 1, 2]),
    (2750, [0, 2, 1, 2]),
    (-500, [1, 0, 2, 2]),
    (625, [1, 1, 0, 3]),
    (-3125, [0, 0, 0, 4]),
];

const R6_F: [Term<4>; 31] = [
    (1, [0, 8, 0, 0]),
    (-13, [1, 6, 1, 0]),
    (1, [5, 2, 2, 0]),
    (65, [2, 4, 2, 0]),
    (-4, [6, 0, 3, 0]),
    (-128, [3, 2, 3, 0]),
    (17, [0, 4, 3, 0]),
    (48, [4, 0, 4, 0]),
    (-16, [1, 2, 4, 0]),
    (-192, [2, 0, 5, 0]),
    (256, [0, 0, 6, 0]),
    (-4, [5, 3, 0, 1]),
    (-12, [2, 5, 0, 1]),
    (18, [6, 1, 1, 1]),
    (12, [3, 3, 1, 1]),
    (-124, [0, 5, 1, 1]),
    (196, [4, 1, 2, 1]),
    (590, [1, 3, 2, 1]),
    (-160, [2, 1, 3, 1]),
    (-1600, [0, 1, 4, 1]),
    (-27, [7, 0, 0, 2]),
    (-150, [4, 2, 0, 2]),
    (-125, [1, 4, 0, 2]),
    (-99, [5, 0, 1, 2]),
    (-725, [2, 2, 1, 2]),
    (1200, [3, 0, 2, 2]),
    (3250, [0, 2, 2, 2]),
    (-2000, [1, 0, 3, 2]),
    (-1250, [1, 1, 1, 3]),
    (3125, [2, 0, 0, 4]),
    (-9375, [0, 0, 1, 4]),
];

pub fn disc_cubic(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    eval_terms(&DISC_CUBIC, [a, b, c])
}

pub fn disc_quartic(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    eval_terms(&DISC_QUARTIC, [a, b, c, d])
}

/// Discriminant of `x^5 + p·x^3 + q·x^2 + r·x + s`.
pub fn disc_quintic(p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) -> BigInt {
    eval_terms(&DISC_QUINTIC, [p, q, r, s])
}

/// Cubic whose roots are `r₁r₂ + r₃r₄`, `r₁r₃ + r₂r₄`, `r₁r₄ + r₂r₃`.
pub fn resolvent_cubic(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> IntPoly {
    let big_a = -b;
    let big_b = a * c - 4 * d;
    let big_c = -(a * a * d + c * c - b * d * 4u32);
    IntPoly::new(vec![big_c, big_b, big_a, BigInt::from(1)])
}

/// Sextic resolvent of the depressed quintic `x^5 + p·x^3 + q·x^2 + r·x + s`.
pub fn resolvent_sextic(p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) -> IntPoly {
    let v = [p, q, r, s];
    IntPoly::new(vec![
        eval_terms(&R6_F, v),
        eval_terms(&R6_E, v),
        eval_terms(&R6_D, v),
        eval_terms(&R6_C, v),
        eval_terms(&R6_B, v),
        eval_terms(&R6_A, v),
        BigInt::from(1),
    ])
}

/// The two Kappe–Warren products `(a² − 4(b − r))·Δ` and `(r² − 4d)·Δ` for
/// a quartic whose resolvent cubic has the integer root `r`. The group is
/// C4 when both are squares and D8 otherwise.
pub fn kappe_warren_products(
    a: &BigInt,
    b: &BigInt,
    d: &BigInt,
    r: &BigInt,
    delta: &BigInt,
) -> (BigInt, BigInt) {
    let n1 = (a * a - 4 * (b - r)) * delta;
    let n2 = (r * r - 4 * d) * delta;
    (n1, n2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticAux {
    pub delta: BigInt,
    pub r3: IntPoly,
}

impl QuarticAux {
    /// Panics unless `f` is a monic quartic.
    pub fn of(f: &IntPoly) -> Self {
        assert!(f.degree() == 4 && f.is_monic());
        let [d, c, b, a] = [0, 1, 2, 3].map(|i| f.coeff(i));
        QuarticAux {
            delta: disc_quartic(&a, &b, &c, &d),
            r3: resolvent_cubic(&a, &b, &c, &d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuinticAux {
    pub delta: BigInt,
    pub r6: IntPoly,
}

impl QuinticAux {
    /// Panics unless `f` is a monic quintic with zero `x^4` coefficient.
    pub fn of(f: &IntPoly) -> Self {
        assert!(f.degree() == 5 && f.is_monic() && f.coeff(4).is_zero());
        let [s, r, q, p] = [0, 1, 2, 3].map(|i| f.coeff(i));
        QuinticAux {
            delta: disc_quintic(&p, &q, &r, &s),
            r6: resolvent_sextic(&p, &q, &r, &s),
        }
    }
}

/// Specializations for trinomials `x^n + p·x + q`.
pub mod trinomial {
    use super::*;

    pub fn disc_cubic(p: &BigInt, q: &BigInt) -> BigInt {
        -4 * p * p * p - 27 * q * q
    }

    pub fn disc_quartic(p: &BigInt, q: &BigInt) -> BigInt {
        -27 * num_traits::pow(p.clone(), 4) + 256 * q * q * q
    }

    /// The often quoted trinomial form has `+p²` as constant term; the general
    /// formula and every worked quartic give `−p²`.
    pub fn resolvent_cubic(p: &BigInt, q: &BigInt) -> IntPoly {
        IntPoly::new(vec![-(p * p), -4 * q, BigInt::zero(), BigInt::from(1)])
    }

    pub fn disc_quintic(p: &BigInt, q: &BigInt) -> BigInt {
        256 * num_traits::pow(p.clone(), 5) + 3125 * num_traits::pow(q.clone(), 4)
    }

    pub fn resolvent_sextic(p: &BigInt, q: &BigInt) -> IntPoly {
        let pw = |k: usize| num_traits::pow(p.clone(), k);
        let q4 = num_traits::pow(q.clone(), 4);
        IntPoly::new(vec![
            256 * pw(6) - 9375 * p * &q4,
            512 * pw(5) - 3125 * &q4,
            400 * pw(4),
            160 * pw(3),
            40 * pw(2),
            8 * p,
            BigInt::from(1),
        ])
    }
}
