//! Degree dispatch and the discriminant/resolvent decision trees.
//!
//! | degree | square Δ? | resolvent integer root? | group |
//! |--------|-----------|-------------------------|-------|
//! | 4 | no | no | S4 |
//! | 4 | yes | no | A4 |
//! | 4 | yes | yes | V |
//! | 4 | no | yes | C4 or D8 (Kappe–Warren) |
//! | 5 | no | no | S5 |
//! | 5 | yes | no | A5 |
//! | 5 | no | yes | F20 |
//! | 5 | yes | yes | C5 or D10 (numeric σ₁ test) |

mod dedekind;
mod group;
mod irreducible;
pub mod trinomial;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

pub use dedekind::{cycle_type_mod_p, dedekind_check, dedekind_witness, primes_up_to, DedekindViolation};
pub use group::GaloisGroup;
pub use irreducible::{find_factor, is_irreducible};

use crate::error::{Error, Result};
use crate::exact::{integer_roots, is_perfect_square};
use crate::numeric::{self, RootSet, ThetaOrdering, Tolerances};
use crate::poly::{depress_quintic, normalize_to_monic_integral, IntPoly, RatPoly};
use crate::resolvent::{kappe_warren_products, QuarticAux, QuinticAux};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappeWarren {
    pub n1: BigInt,
    pub n2: BigInt,
    pub n1_sqrt: Option<BigInt>,
    pub n2_sqrt: Option<BigInt>,
}

impl KappeWarren {
    pub fn both_square(&self) -> bool {
        self.n1_sqrt.is_some() && self.n2_sqrt.is_some()
    }
}

/// Everything needed to re-check a classification by hand.
///
/// Optional fields are filled exactly along the branch that was taken.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub input: RatPoly,
    /// Monic integral scaling of the input.
    pub normalized: IntPoly,
    pub lambda: BigInt,
    /// `x^4` coefficient removed by quintic depression, zero otherwise.
    pub shift: BigInt,
    /// The polynomial the decision tree ran on: `normalized`, or its
    /// depression for quintics.
    pub classified: IntPoly,
    pub delta: BigInt,
    pub delta_sqrt: Option<BigInt>,
    pub resolvent: Option<IntPoly>,
    /// Every integer root of the resolvent.
    pub resolvent_roots: Vec<BigInt>,
    /// The root the decision used.
    pub resolvent_root: Option<BigInt>,
    pub kappe_warren: Option<KappeWarren>,
    pub roots: Option<RootSet>,
    pub theta_ordering: Option<ThetaOrdering>,
    pub sigma1: Option<Complex64>,
    pub sigma1_integer: Option<BigInt>,
    /// Whether the trinomial shortcut ran and agreed.
    pub fast_path: bool,
    pub tolerances: Tolerances,
}

impl Certificate {
    fn for_poly(f: &IntPoly, tol: &Tolerances) -> Self {
        Certificate {
            input: RatPoly::from(f),
            normalized: f.clone(),
            lambda: BigInt::one(),
            shift: BigInt::zero(),
            classified: f.clone(),
            delta: BigInt::zero(),
            delta_sqrt: None,
            resolvent: None,
            resolvent_roots: Vec::new(),
            resolvent_root: None,
            kappe_warren: None,
            roots: None,
            theta_ordering: None,
            sigma1: None,
            sigma1_integer: None,
            fast_path: false,
            tolerances: *tol,
        }
    }

    fn set_delta(&mut self, delta: BigInt) -> Result<()> {
        if delta.is_zero() {
            return Err(Error::NotSquarefree);
        }
        self.delta_sqrt = is_perfect_square(&delta);
        self.delta = delta;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassifyReport {
    pub group: GaloisGroup,
    pub certificate: Certificate,
    pub dedekind_checked: Option<bool>,
    pub warnings: Vec<String>,
}

impl ClassifyReport {
    /// Runs the mod-p cycle-type check against the normalized polynomial
    /// and records the outcome.
    pub fn run_dedekind(&mut self, prime_bound: u64) -> Option<DedekindViolation> {
        let witness = dedekind_witness(&self.certificate.normalized, self.group, prime_bound);
        self.dedekind_checked = Some(witness.is_none());
        witness
    }
}

fn require_monic(f: &IntPoly, degree: usize) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() != degree {
        return Err(Error::DegreeOutOfRange(f.degree()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(())
}

fn report(group: GaloisGroup, certificate: Certificate, warnings: Vec<String>) -> ClassifyReport {
    ClassifyReport {
        group,
        certificate,
        dedekind_checked: None,
        warnings,
    }
}

/// Irreducible monic cubic: A3 when the discriminant is a square, else S3.
pub fn classify_cubic(f: &IntPoly) -> Result<ClassifyReport> {
    require_monic(f, 3)?;
    let mut cert = Certificate::for_poly(f, &Tolerances::default());
    let [c, b, a] = [0, 1, 2].map(|i| f.coeff(i));
    cert.set_delta(crate::resolvent::disc_cubic(&a, &b, &c))?;
    let group = if cert.delta_sqrt.is_some() {
        GaloisGroup::A3
    } else {
        GaloisGroup::S3
    };
    Ok(report(group, cert, Vec::new()))
}

/// Irreducible monic quartic via the discriminant, the resolvent cubic, and
/// for the C4/D8 pair the Kappe–Warren products.
pub fn classify_quartic(f: &IntPoly) -> Result<ClassifyReport> {
    require_monic(f, 4)?;
    let mut cert = Certificate::for_poly(f, &Tolerances::default());
    let mut warnings = Vec::new();
    let aux = QuarticAux::of(f);
    cert.set_delta(aux.delta)?;
    let roots = integer_roots(&aux.r3);
    cert.resolvent = Some(aux.r3);
    cert.resolvent_roots = roots.clone();

    let group = match (cert.delta_sqrt.is_some(), roots.first()) {
        (false, None) => GaloisGroup::S4,
        (true, None) => GaloisGroup::A4,
        (true, Some(r)) => {
            if roots.len() != 3 {
                warnings.push(format!(
                    "resolvent cubic has {} integer roots, expected 3 for V",
                    roots.len()
                ));
            }
            cert.resolvent_root = Some(r.clone());
            GaloisGroup::V
        }
        (false, Some(r)) => {
            if roots.len() != 1 {
                warnings.push(format!(
                    "resolvent cubic has {} integer roots, expected exactly 1 for C4 or D8",
                    roots.len()
                ));
            }
            let [a, b, d] = [3, 2, 0].map(|i| f.coeff(i));
            let (n1, n2) = kappe_warren_products(&a, &b, &d, r, &cert.delta);
            let kw = KappeWarren {
                n1_sqrt: is_perfect_square(&n1),
                n2_sqrt: is_perfect_square(&n2),
                n1,
                n2,
            };
            let group = if kw.both_square() {
                GaloisGroup::C4
            } else {
                GaloisGroup::D8
            };
            cert.resolvent_root = Some(r.clone());
            cert.kappe_warren = Some(kw);
            group
        }
    };
    Ok(report(group, cert, warnings))
}

/// Irreducible monic quintic via the discriminant, the sextic resolvent, and
/// for the C5/D10 pair the numeric σ₁ test. A nonzero `x^4` term is removed
/// first.
pub fn classify_quintic(f: &IntPoly, tol: &Tolerances) -> Result<ClassifyReport> {
    require_monic(f, 5)?;
    let (g, shift) = depress_quintic(f)?;
    let mut cert = Certificate::for_poly(f, tol);
    cert.shift = shift;
    cert.classified = g.clone();
    let mut warnings = Vec::new();
    let aux = QuinticAux::of(&g);
    cert.set_delta(aux.delta)?;
    let roots = integer_roots(&aux.r6);
    if roots.len() > 1 {
        warnings.push(format!(
            "sextic resolvent has {} integer roots, expected at most 1",
            roots.len()
        ));
    }
    cert.resolvent = Some(aux.r6);
    cert.resolvent_roots = roots.clone();
    cert.resolvent_root = roots.first().cloned();

    let group = match (cert.delta_sqrt.is_some(), roots.first()) {
        (false, None) => GaloisGroup::S5,
        (true, None) => GaloisGroup::A5,
        (false, Some(_)) => GaloisGroup::F20,
        (true, Some(target)) => {
            let st = numeric::stauduhar(&g, target, tol)?;
            let group = if st.is_cyclic() {
                GaloisGroup::C5
            } else {
                GaloisGroup::D10
            };
            cert.sigma1 = Some(st.sigma1);
            cert.sigma1_integer = st.sigma1_integer;
            cert.theta_ordering = Some(st.ordering);
            cert.roots = Some(st.roots);
            group
        }
    };
    Ok(report(group, cert, warnings))
}

/// Classifies with the default tolerances.
pub fn classify(g: &RatPoly) -> Result<ClassifyReport> {
    classify_with(g, &Tolerances::default())
}

/// Normalizes, checks irreducibility, and dispatches on degree. Trinomials
/// additionally run the shortcut path, which must agree with the general one.
pub fn classify_with(g: &RatPoly, tol: &Tolerances) -> Result<ClassifyReport> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = g.degree();
    if !(1..=5).contains(&n) {
        return Err(Error::DegreeOutOfRange(n));
    }
    let (f, lambda) = normalize_to_monic_integral(g)?;
    if let Some(factor) = find_factor(&f) {
        return Err(Error::Reducible { factor });
    }

    let mut rep = match n {
        1 => {
            let mut cert = Certificate::for_poly(&f, tol);
            cert.set_delta(BigInt::one())?;
            report(GaloisGroup::C1, cert, Vec::new())
        }
        2 => {
            let mut cert = Certificate::for_poly(&f, tol);
            let (c, b) = (f.coeff(0), f.coeff(1));
            cert.set_delta(&b * &b - 4 * c)?;
            if cert.delta_sqrt.is_some() {
                return Err(Error::Invariant(
                    "square discriminant for an irreducible quadratic".into(),
                ));
            }
            report(GaloisGroup::S2, cert, Vec::new())
        }
        3 => classify_cubic(&f)?,
        4 => classify_quartic(&f)?,
        _ => classify_quintic(&f, tol)?,
    };
    rep.certificate.input = g.clone();
    rep.certificate.lambda = lambda;
    rep.certificate.tolerances = *tol;

    let classified = &rep.certificate.classified;
    if n >= 3 && classified.is_trinomial() {
        let (p, q) = (classified.coeff(1), classified.coeff(0));
        let fast = trinomial::classify_trinomial(n, &p, &q, tol)?;
        let cert = &rep.certificate;
        if fast.group != rep.group {
            return Err(Error::FastPathDisagreement(format!(
                "general path gives {}, shortcut gives {}",
                rep.group, fast.group
            )));
        }
        if fast.delta != cert.delta || fast.resolvent != cert.resolvent {
            return Err(Error::FastPathDisagreement(
                "discriminant or resolvent differs".into(),
            ));
        }
        rep.certificate.fast_path = true;
    }

    if rep.group.is_even() != rep.certificate.delta_sqrt.is_some() {
        return Err(Error::Invariant(format!(
            "{} with discriminant {} breaks the square-discriminant law",
            rep.group, rep.certificate.delta
        )));
    }
    Ok(rep)
}
