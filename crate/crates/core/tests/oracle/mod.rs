//! Reference computations used only by tests. Nothing here calls into the
//! library's algorithms; only `IntPoly` is borrowed as a container.
#![allow(dead_code)]

use std::collections::BTreeSet;

use galois_core::IntPoly;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::Rng;

/// Determinant by fraction-free Gaussian elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Resultant of `f` and `g` (coefficients lowest first) via the Sylvester
/// matrix.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

/// Discriminant of a monic polynomial as `(−1)^{n(n−1)/2} Res(f, f′)`.
pub fn discriminant(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let r = resultant(f, &df);
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Roots of a monic polynomial (coefficients lowest first) by Aberth–Ehrlich
/// iteration, followed by Newton polishing.
pub fn aberth_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let bound = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.7, 1.1 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::one() / (z[i] - z[j]))
                .sum();
            let w = ratio / (Complex64::one() - ratio * s);
            z[i] -= w;
            moved = moved.max(w.norm() / z[i].norm().max(1.0));
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&c, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            let next = *zi - p / dp;
            if horner(&c, next).0.norm() < p.norm() {
                *zi = next;
            } else {
                break;
            }
        }
    }
    z
}

pub fn int_roots(f: &IntPoly) -> Vec<Complex64> {
    let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
    aberth_roots(&c)
}

/// `∏_{i<j} (ρᵢ − ρⱼ)²`.
pub fn numeric_discriminant(roots: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::one();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = roots[i] - roots[j];
            acc *= d * d;
        }
    }
    acc
}

pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Largest relative distance after matching each value in `a` to a distinct
/// nearest value in `b`.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, rel_err(*x, *y)))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .unwrap();
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

/// The ten-term invariant, written out from scratch.
pub fn theta(r: &[Complex64]) -> Complex64 {
    let [r1, r2, r3, r4, r5] = [r[0], r[1], r[2], r[3], r[4]];
    r1 * r1 * r2 * r5
        + r1 * r1 * r3 * r4
        + r2 * r2 * r1 * r3
        + r2 * r2 * r4 * r5
        + r3 * r3 * r1 * r5
        + r3 * r3 * r2 * r4
        + r4 * r4 * r1 * r2
        + r4 * r4 * r3 * r5
        + r5 * r5 * r1 * r4
        + r5 * r5 * r2 * r3
}

/// Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![a.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Distinct θ values over all orderings of five roots.
pub fn theta_orbit(roots: &[Complex64]) -> Vec<Complex64> {
    let mut vals: Vec<Complex64> = Vec::new();
    for p in permutations(5) {
        let ordered: Vec<Complex64> = p.iter().map(|&i| roots[i]).collect();
        let t = theta(&ordered);
        if vals.iter().all(|v| rel_err(t, *v) > 1e-7) {
            vals.push(t);
        }
    }
    vals
}

fn i128_coeffs(f: &IntPoly) -> Vec<i128> {
    f.coeffs().iter().map(|c| c.to_i128().unwrap()).collect()
}

fn divides_i128(f: &[i128], q: &[i128]) -> bool {
    // q monic
    let mut r = f.to_vec();
    let dq = q.len() - 1;
    if r.len() < q.len() {
        return r.iter().all(|&c| c == 0);
    }
    for k in (0..=r.len() - q.len()).rev() {
        let t = r[k + dq];
        if t == 0 {
            continue;
        }
        for (j, &c) in q.iter().enumerate() {
            r[k + j] -= t * c;
        }
    }
    r[..dq].iter().all(|&c| c == 0)
}

/// Exhaustive search for a monic factor of degree 1 or 2, using the root
/// bound `B = 1 + max|aᵢ|`: a linear factor `x − k` has `|k| < B`, and a
/// quadratic factor `x² + ax + b` has `|a| < 2B`, `|b| < B²`.
pub fn brute_factor(f: &IntPoly) -> Option<Vec<i128>> {
    let c = i128_coeffs(f);
    let n = c.len() - 1;
    if n <= 1 {
        return None;
    }
    let bound = 1 + c[..n].iter().map(|x| x.abs()).max().unwrap_or(0);
    for k in -bound..=bound {
        if divides_i128(&c, &[-k, 1]) {
            return Some(vec![-k, 1]);
        }
    }
    if n >= 4 {
        for b in -(bound * bound)..=(bound * bound) {
            if b == 0 || c[0] % b != 0 {
                continue;
            }
            for a in -2 * bound..=2 * bound {
                if divides_i128(&c, &[b, a, 1]) {
                    return Some(vec![b, a, 1]);
                }
            }
        }
    }
    None
}

/// Permutations of `{0,..,n−1}` satisfying `keep`.
fn perms_where(n: usize, keep: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    permutations(n).into_iter().filter(|p| keep(p)).collect()
}

fn is_even(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

/// The transitive groups of degree ≤ 5, each built from a description that
/// does not use generators.
pub fn named_group(name: &str) -> Vec<Vec<usize>> {
    match name {
        "C1" => vec![vec![0]],
        "S2" => permutations(2),
        "A3" => perms_where(3, is_even),
        "S3" => permutations(3),
        // rotations of a square with vertices 0,1,2,3 in order
        "C4" => perms_where(4, |p| (0..4).all(|i| p[(i + 1) % 4] == (p[i] + 1) % 4)),
        // symmetries of that square: adjacency preserved
        "D8" => perms_where(4, |p| {
            (0..4).all(|i| {
                let d = (p[(i + 1) % 4] + 4 - p[i]) % 4;
                d == 1 || d == 3
            })
        }),
        // identity and the three double transpositions
        "V" => perms_where(4, |p| {
            let fixed = (0..4).filter(|&i| p[i] == i).count();
            fixed == 4 || (fixed == 0 && (0..4).all(|i| p[p[i]] == i))
        }),
        "A4" => perms_where(4, is_even),
        "S4" => permutations(4),
        // i ↦ i + b
        "C5" => perms_where(5, |p| (0..5).all(|i| p[i] == (i + p[0]) % 5)),
        // i ↦ ±i + b
        "D10" => perms_where(5, |p| {
            (0..5).all(|i| p[i] == (i + p[0]) % 5) || (0..5).all(|i| p[i] == (5 - i + p[0]) % 5)
        }),
        // i ↦ a·i + b, a ≠ 0
        "F20" => perms_where(5, |p| {
            (1..5).any(|a| (0..5).all(|i| p[i] == (a * i + p[0]) % 5))
        }),
        "A5" => perms_where(5, is_even),
        "S5" => permutations(5),
        _ => panic!("unknown group {name}"),
    }
}

pub fn all_even(group: &[Vec<usize>]) -> bool {
    group.iter().all(|p| is_even(p))
}

pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn cycle_types(group: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    group.iter().map(|p| cycle_type(p)).collect()
}

pub const EVEN_GROUPS: [&str; 6] = ["A3", "V", "A4", "C5", "D10", "A5"];

/// Monic polynomial of degree `n` with lower coefficients uniform in
/// `[-bound, bound]`.
pub fn random_monic(rng: &mut StdRng, n: usize, bound: i64) -> IntPoly {
    let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
    c.push(1);
    IntPoly::from_i64(&c)
}

/// Same, with the `x^{n−1}` coefficient forced to zero.
pub fn random_depressed(rng: &mut StdRng, n: usize, bound: i64) -> IntPoly {
    let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
    c[n - 1] = 0;
    c.push(1);
    IntPoly::from_i64(&c)
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn abs_big(v: &BigInt) -> BigInt {
    v.abs()
}
