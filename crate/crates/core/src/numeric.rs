//! Floating-point phase: complex root approximation and the D10/C5 split.
//!
//! Roots come from simultaneous Weierstrass (Durand–Kerner) iteration
//! started on a circle of radius equal to the Cauchy bound, followed by a
//! few guarded Newton steps per root. The quintic roots are then ordered so
//! that the ten-term invariant θ₁ hits the integer root of the sextic
//! resolvent, and σ₁ is tested for integrality.

use std::f64::consts::TAU;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::{horner_c, IntPoly};

/// Knobs for the floating-point phase. Every value used in a decision is
/// copied into the certificate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// `|f(ρ)|` must be below `residual · Σ|aᵢ||ρ|ⁱ`.
    pub residual: f64,
    /// Relative tolerance for `|θ₁ − target|`, scaled by `max(1, |target|)`.
    pub theta: f64,
    /// Absolute tolerance for deciding that σ₁ is an integer.
    pub sigma: f64,
    /// Relative imaginary part below which a root is treated as real.
    pub pairing: f64,
    pub max_iters: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: 1e-12,
            theta: 1e-3,
            sigma: 1e-3,
            pairing: 1e-8,
            max_iters: 500,
        }
    }
}

/// Approximates all complex roots of the polynomial with coefficients
/// `c` (lowest degree first, nonzero leading coefficient).
///
/// Always returns `deg` approximations; the flag says whether the
/// simultaneous iteration settled before the budget ran out.
pub fn polynomial_roots(c: &[f64], max_iters: usize) -> (Vec<Complex64>, bool) {
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return (Vec::new(), true);
    }
    let lead = c[n];
    let a: Vec<f64> = c.iter().map(|x| x / lead).collect();
    if n == 1 {
        return (vec![Complex64::new(-a[0], 0.0)], true);
    }
    let radius = cauchy_radius(&a);
    if radius == 0.0 {
        return (vec![Complex64::new(0.0, 0.0); n], true);
    }

    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / n as f64 + 0.4))
        .collect();
    let floor = radius * 1e-12;
    let mut converged = false;
    for _ in 0..max_iters {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            let num = horner_c(&a, z[i]);
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(f64::EPSILON * radius, 0.0);
            }
            let step = num / den;
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            worst = worst.max(step.norm() / z[i].norm().max(floor));
        }
        if worst < 1e-14 {
            converged = true;
            break;
        }
    }

    let da: Vec<f64> = a.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    for zi in z.iter_mut() {
        *zi = newton_polish(&a, &da, *zi);
    }
    (z, converged)
}

/// Newton steps that are only taken while they shrink the residual.
fn newton_polish(a: &[f64], da: &[f64], mut z: Complex64) -> Complex64 {
    let mut fz = horner_c(a, z).norm();
    for _ in 0..10 {
        let d = horner_c(da, z);
        if d.norm() == 0.0 {
            break;
        }
        let cand = z - horner_c(a, z) / d;
        let fc = horner_c(a, cand).norm();
        // also stops on NaN
        if fc.partial_cmp(&fz) != Some(std::cmp::Ordering::Less) {
            break;
        }
        z = cand;
        fz = fc;
    }
    z
}

/// Unique positive root of `xⁿ − Σ_{i<n} |aᵢ| xⁱ` for monic `a`; every root
/// of the polynomial lies in the closed disk of that radius.
pub fn cauchy_radius(a: &[f64]) -> f64 {
    let n = a.len() - 1;
    let mags: Vec<f64> = a[..n].iter().map(|c| c.abs()).collect();
    let max = mags.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return 0.0;
    }
    // h(x)/xⁿ avoids overflow for large x
    let g = |x: f64| 1.0 - mags.iter().enumerate().map(|(i, m)| m * x.powi(i as i32 - n as i32)).sum::<f64>();
    let mut hi = 1.0 + max;
    let mut lo = hi;
    for _ in 0..4000 {
        if g(lo) <= 0.0 {
            break;
        }
        hi = lo;
        lo /= 2.0;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Root approximations of an integer polynomial.
pub fn approximate_roots(f: &IntPoly, max_iters: usize) -> Result<(Vec<Complex64>, bool)> {
    Ok(polynomial_roots(&f.to_f64_coeffs()?, max_iters))
}

/// Five root approximations of a quintic, with conjugate pairing.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: [Complex64; 5],
    pub residuals: [f64; 5],
    /// Index of the complex conjugate partner; `None` for real roots.
    pub conjugate_pairing: [Option<usize>; 5],
}

impl RootSet {
    pub fn real_count(&self) -> usize {
        self.conjugate_pairing.iter().filter(|p| p.is_none()).count()
    }

    /// Roots with real roots put exactly on the axis and paired roots made
    /// exact conjugates of one another.
    pub fn snapped(&self) -> [Complex64; 5] {
        let mut out = self.roots;
        for i in 0..5 {
            match self.conjugate_pairing[i] {
                None => out[i].im = 0.0,
                Some(j) if i < j => {
                    let avg = (self.roots[i] + self.roots[j].conj()) * 0.5;
                    out[i] = avg;
                    out[j] = avg.conj();
                }
                Some(_) => {}
            }
        }
        out
    }
}

/// All five roots of a monic quintic.
pub fn all_roots(f: &IntPoly, tol: &Tolerances) -> Result<RootSet> {
    if f.is_zero() || f.degree() != 5 {
        return Err(Error::DegreeOutOfRange(f.degree()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let c = f.to_f64_coeffs()?;
    let (z, _) = polynomial_roots(&c, tol.max_iters);
    let mut roots = [Complex64::new(0.0, 0.0); 5];
    let mut residuals = [0.0; 5];
    for i in 0..5 {
        roots[i] = z[i];
        residuals[i] = horner_c(&c, z[i]).norm();
        let scale: f64 = c
            .iter()
            .enumerate()
            .map(|(k, a)| a.abs() * z[i].norm().powi(k as i32))
            .sum();
        if residuals[i].is_nan() || residuals[i] > tol.residual * scale {
            return Err(Error::ConvergenceFailure(tol.max_iters));
        }
    }
    let conjugate_pairing = pair_conjugates(&roots, tol.pairing)?;
    Ok(RootSet {
        roots,
        residuals,
        conjugate_pairing,
    })
}

fn pair_conjugates(roots: &[Complex64; 5], tol: f64) -> Result<[Option<usize>; 5]> {
    let mut pairing = [None; 5];
    let is_real = |z: &Complex64| z.im.abs() <= tol * z.norm().max(1.0);
    let mut taken = [false; 5];
    for i in 0..5 {
        if is_real(&roots[i]) {
            taken[i] = true;
        }
    }
    for i in 0..5 {
        if taken[i] || roots[i].im < 0.0 {
            continue;
        }
        let partner = (0..5)
            .filter(|&j| !taken[j] && j != i && roots[j].im < 0.0)
            .min_by(|&x, &y| {
                let dx = (roots[x] - roots[i].conj()).norm();
                let dy = (roots[y] - roots[i].conj()).norm();
                dx.total_cmp(&dy)
            });
        let Some(j) = partner else {
            return Err(Error::NumericAmbiguity("unpaired complex root".into()));
        };
        if (roots[j] - roots[i].conj()).norm() > 1e-6 * roots[i].norm().max(1.0) {
            return Err(Error::NumericAmbiguity(
                "complex roots do not come in conjugate pairs".into(),
            ));
        }
        taken[i] = true;
        taken[j] = true;
        pairing[i] = Some(j);
        pairing[j] = Some(i);
    }
    if taken.iter().any(|t| !t) {
        return Err(Error::NumericAmbiguity("unpaired complex root".into()));
    }
    Ok(pairing)
}

/// Monomials `r_a² r_b r_c` of θ₁, zero-based.
const THETA_TERMS: [(usize, usize, usize); 10] = [
    (0, 1, 4),
    (0, 2, 3),
    (1, 0, 2),
    (1, 3, 4),
    (2, 0, 4),
    (2, 1, 3),
    (3, 0, 1),
    (3, 2, 4),
    (4, 0, 3),
    (4, 1, 2),
];

pub fn theta1(r: &[Complex64; 5]) -> Complex64 {
    THETA_TERMS
        .iter()
        .map(|&(s, a, b)| r[s] * r[s] * r[a] * r[b])
        .sum()
}

/// `r₁r₂² + r₂r₃² + r₃r₄² + r₄r₅² + r₅r₁²`.
pub fn sigma1(r: &[Complex64; 5]) -> Complex64 {
    (0..5).map(|i| r[i] * r[(i + 1) % 5] * r[(i + 1) % 5]).sum()
}

/// The image of an ordering under the involution (2,5)(3,4).
pub fn involute(r: &[Complex64; 5]) -> [Complex64; 5] {
    [r[0], r[4], r[3], r[2], r[1]]
}

pub fn apply_perm(roots: &[Complex64; 5], perm: &[usize; 5]) -> [Complex64; 5] {
    perm.map(|i| roots[i])
}

/// All 120 orderings of five roots, lexicographic.
pub fn permutations5() -> &'static [[usize; 5]] {
    static PERMS: OnceLock<Vec<[usize; 5]>> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = Vec::with_capacity(120);
        let mut cur = [0usize; 5];
        fn go(depth: usize, used: u8, cur: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
            if depth == 5 {
                out.push(*cur);
                return;
            }
            for i in 0..5 {
                if used & (1 << i) == 0 {
                    cur[depth] = i;
                    go(depth + 1, used | (1 << i), cur, out);
                }
            }
        }
        go(0, 0, &mut cur, &mut out);
        out
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaOrdering {
    /// `perm[i]` is the index into the root set placed at position `i`.
    pub perm: [usize; 5],
    pub theta_value: Complex64,
    pub target: BigInt,
    pub mismatch: f64,
    /// How many of the 120 orderings land within tolerance of the target.
    pub matching: usize,
    /// Every matching ordering, best first.
    pub matches: Vec<[usize; 5]>,
}

/// Number of orderings whose θ₁ lies within tolerance of `target`.
pub fn count_theta_matches(roots: &[Complex64; 5], target: f64, tol: &Tolerances) -> usize {
    let limit = tol.theta * target.abs().max(1.0);
    permutations5()
        .iter()
        .filter(|p| (theta1(&apply_perm(roots, p)) - target).norm() < limit)
        .count()
}

/// Finds an ordering of the roots for which θ₁ equals `target`.
///
/// The stabilizer of θ₁ in S5 has order 20, so a clean match is exactly 20
/// orderings; anything else means the tolerance cannot separate the
/// conjugates of θ₁.
pub fn find_theta_ordering(rs: &RootSet, target: &BigInt, tol: &Tolerances) -> Result<ThetaOrdering> {
    let roots = rs.snapped();
    let t = target.to_f64().ok_or(Error::PrecisionExceeded)?;
    let limit = tol.theta * t.abs().max(1.0);
    let mut scored: Vec<([usize; 5], Complex64, f64)> = permutations5()
        .iter()
        .map(|perm| {
            let theta = theta1(&apply_perm(&roots, perm));
            (*perm, theta, (theta - t).norm())
        })
        .collect();
    scored.sort_by(|a, b| a.2.total_cmp(&b.2));
    let matches: Vec<[usize; 5]> = scored.iter().take_while(|s| s.2 < limit).map(|s| s.0).collect();
    let matching = matches.len();
    let (perm, theta_value, mismatch) = scored[0];
    if matching == 0 {
        return Err(Error::NoOrdering {
            target: target.clone(),
            best: mismatch,
        });
    }
    if matching != 20 {
        return Err(Error::AmbiguousOrdering {
            target: target.clone(),
        });
    }
    Ok(ThetaOrdering {
        perm,
        theta_value,
        target: target.clone(),
        mismatch,
        matching,
        matches,
    })
}

/// `round(Re z)` when `z` lies within `tol` of it in both components.
pub fn is_near_integer(z: Complex64, tol: f64) -> Option<BigInt> {
    let k = z.re.round();
    if z.im.abs() < tol && (z.re - k).abs() < tol {
        BigInt::from_f64(k)
    } else {
        None
    }
}

/// Evidence produced by the numeric D10/C5 decision.
#[derive(Clone, Debug, PartialEq)]
pub struct Stauduhar {
    pub roots: RootSet,
    pub ordering: ThetaOrdering,
    pub sigma1: Complex64,
    pub sigma2: Complex64,
    pub sigma1_integer: Option<BigInt>,
}

impl Stauduhar {
    pub fn is_cyclic(&self) -> bool {
        self.sigma1_integer.is_some()
    }
}

fn prefer(a: Complex64, b: Complex64, tol: f64) -> bool {
    if (a.re - b.re).abs() > tol {
        a.re > b.re
    } else {
        a.im < b.im - tol
    }
}

/// Runs the numeric phase for a depressed quintic whose sextic resolvent
/// has the integer root `target` and whose discriminant is a square.
pub fn stauduhar(f: &IntPoly, target: &BigInt, tol: &Tolerances) -> Result<Stauduhar> {
    let roots = all_roots(f, tol)?;
    if roots.real_count() % 2 == 0 {
        return Err(Error::NumericAmbiguity(format!(
            "{} real roots found for a real quintic",
            roots.real_count()
        )));
    }
    let mut ordering = find_theta_ordering(&roots, target, tol)?;
    let snapped = roots.snapped();

    // The matching orderings split into cosets of C5. On some of them σ₁ can
    // coincide with its image σ₂, and then integrality says nothing; use the
    // orderings that separate them, check they agree, and report the σ₁ with
    // the largest real part (then the smallest imaginary part) so the
    // certificate does not depend on root-finder order.
    let mut chosen: Option<([usize; 5], Complex64, Complex64, Option<BigInt>)> = None;
    for perm in &ordering.matches {
        let ordered = apply_perm(&snapped, perm);
        let s1 = sigma1(&ordered);
        let s2 = sigma1(&involute(&ordered));

        // σ₁ and σ₂ are swapped by D10, so their symmetric functions are integers.
        let sum = s1 + s2;
        let prod = s1 * s2;
        if is_near_integer(sum, tol.sigma).is_none()
            || is_near_integer(prod, tol.sigma * prod.norm().max(1.0)).is_none()
        {
            return Err(Error::NumericAmbiguity(format!(
                "σ₁ + σ₂ = {sum:.6} or σ₁σ₂ = {prod:.6} is not integral"
            )));
        }
        if (s1 - s2).norm() < tol.sigma {
            continue;
        }
        let int1 = is_near_integer(s1, tol.sigma);
        if int1.is_some() != is_near_integer(s2, tol.sigma).is_some() {
            return Err(Error::NumericAmbiguity("only one of σ₁, σ₂ is integral".into()));
        }
        match &chosen {
            None => chosen = Some((*perm, s1, s2, int1)),
            Some(c) if c.3.is_some() != int1.is_some() => {
                return Err(Error::NumericAmbiguity(
                    "orderings with the same θ₁ disagree on whether σ₁ is integral".into(),
                ))
            }
            Some(c) if prefer(s1, c.1, tol.sigma) => chosen = Some((*perm, s1, s2, int1)),
            Some(_) => {}
        }
    }
    let Some((perm, s1, s2, sigma1_integer)) = chosen else {
        return Err(Error::NumericAmbiguity(
            "σ₁ and σ₂ coincide for every ordering, so σ₁ cannot separate D10 from C5".into(),
        ));
    };
    if perm != ordering.perm {
        ordering.theta_value = theta1(&apply_perm(&snapped, &perm));
        ordering.mismatch = (ordering.theta_value - target.to_f64().unwrap_or(f64::NAN)).norm();
        ordering.perm = perm;
    }
    Ok(Stauduhar {
        roots,
        ordering,
        sigma1: s1,
        sigma2: s2,
        sigma1_integer,
    })
}
