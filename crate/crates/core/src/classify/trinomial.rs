//! Shortcut decision procedures for trinomials `x^n + p·x + q`, `n = 3, 4, 5`.
//!
//! These are kept separate from the general path and used to cross-check it.

use num_bigint::BigInt;
use num_traits::Zero;

use super::group::GaloisGroup;
use crate::error::{Error, Result};
use crate::exact::{integer_roots, is_perfect_square};
use crate::numeric::{self, Tolerances};
use crate::poly::IntPoly;
use crate::resolvent::trinomial as formulas;

#[derive(Clone, Debug, PartialEq)]
pub struct TrinomialOutcome {
    pub group: GaloisGroup,
    pub delta: BigInt,
    /// `None` for cubics, which need no resolvent.
    pub resolvent: Option<IntPoly>,
}

/// Classifies the irreducible trinomial `x^n + p·x + q`.
pub fn classify_trinomial(n: usize, p: &BigInt, q: &BigInt, tol: &Tolerances) -> Result<TrinomialOutcome> {
    match n {
        3 => Ok(cubic(p, q)),
        4 => Ok(quartic(p, q)),
        5 => quintic(p, q, tol),
        _ => Err(Error::DegreeOutOfRange(n)),
    }
}

fn cubic(p: &BigInt, q: &BigInt) -> TrinomialOutcome {
    let delta = formulas::disc_cubic(p, q);
    let group = if is_perfect_square(&delta).is_some() {
        GaloisGroup::A3
    } else {
        GaloisGroup::S3
    };
    TrinomialOutcome {
        group,
        delta,
        resolvent: None,
    }
}

fn quartic(p: &BigInt, q: &BigInt) -> TrinomialOutcome {
    let delta = formulas::disc_quartic(p, q);
    let r3 = formulas::resolvent_cubic(p, q);
    let root = integer_roots(&r3).into_iter().next();
    let group = match (is_perfect_square(&delta).is_some(), root) {
        (true, Some(_)) => GaloisGroup::V,
        (true, None) => GaloisGroup::A4,
        (false, None) => GaloisGroup::S4,
        (false, Some(r)) => {
            let both = is_perfect_square(&(&r * &delta)).is_some()
                && is_perfect_square(&((&r * &r - 4 * q) * &delta)).is_some();
            if both {
                GaloisGroup::C4
            } else {
                GaloisGroup::D8
            }
        }
    };
    TrinomialOutcome {
        group,
        delta,
        resolvent: Some(r3),
    }
}

// The usual statement of this shortcut labels the two quintic leaves without a resolvent
// root as S4 and A4; for a quintic these can only be S5 and A5.
fn quintic(p: &BigInt, q: &BigInt, tol: &Tolerances) -> Result<TrinomialOutcome> {
    let delta = formulas::disc_quintic(p, q);
    let r6 = formulas::resolvent_sextic(p, q);
    let root = integer_roots(&r6).into_iter().next();
    let group = match (is_perfect_square(&delta).is_some(), root) {
        (false, Some(_)) => GaloisGroup::F20,
        (false, None) => GaloisGroup::S5,
        (true, None) => GaloisGroup::A5,
        (true, Some(theta)) => {
            let f = IntPoly::new(vec![q.clone(), p.clone(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::from(1)]);
            if numeric::stauduhar(&f, &theta, tol)?.is_cyclic() {
                GaloisGroup::C5
            } else {
                GaloisGroup::D10
            }
        }
    };
    Ok(TrinomialOutcome {
        group,
        delta,
        resolvent: Some(r6),
    })
}
