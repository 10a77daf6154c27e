//! Galois groups of irreducible monic integer polynomials of degree at most
//! five.
//!
//! The answer is decided by two exact questions, whether an integer is a
//! square and whether a monic polynomial has an integer root, asked of the
//! discriminant and of a resolvent. Only the split between D10 and C5 needs
//! floating point: approximate the roots, order them so a resolvent root is
//! matched, and check whether one more invariant is an integer.
//!
//! ```
//! use galois_core::{classify, GaloisGroup, IntPoly, RatPoly};
//!
//! let f = IntPoly::from_desc(&[1, 0, 0, 5, 5]); // x^4 + 5x + 5
//! let report = classify(&RatPoly::from(&f)).unwrap();
//! assert_eq!(report.group, GaloisGroup::C4);
//! ```

pub mod classify;
pub mod error;
pub mod exact;
pub mod numeric;
pub mod poly;
pub mod resolvent;

pub use classify::{
    classify, classify_cubic, classify_quartic, classify_quintic, classify_with,
    cycle_type_mod_p, dedekind_check, dedekind_witness, find_factor, is_irreducible, Certificate,
    ClassifyReport, DedekindViolation, GaloisGroup, KappeWarren,
};
pub use error::{Error, Result};
pub use exact::{integer_roots, is_perfect_square, isqrt};
pub use numeric::{RootSet, ThetaOrdering, Tolerances};
pub use poly::{depress_quintic, normalize_to_monic_integral, IntPoly, RatPoly};
