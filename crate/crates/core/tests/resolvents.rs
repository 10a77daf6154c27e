mod oracle;

use galois_core::resolvent::{
    disc_cubic, disc_quartic, disc_quintic, kappe_warren_products, resolvent_cubic,
    resolvent_sextic, trinomial,
};
use galois_core::{depress_quintic, IntPoly};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// The formula discriminant of a monic polynomial of degree 3–5; quintics
/// are depressed first, which is the polynomial returned alongside.
fn formula_disc(f: &IntPoly) -> (IntPoly, BigInt) {
    let c = |i| f.coeff(i);
    match f.degree() {
        3 => (f.clone(), disc_cubic(&c(2), &c(1), &c(0))),
        4 => (f.clone(), disc_quartic(&c(3), &c(2), &c(1), &c(0))),
        5 => {
            let (g, _) = depress_quintic(f).unwrap();
            let d = disc_quintic(&g.coeff(3), &g.coeff(2), &g.coeff(1), &g.coeff(0));
            (g, d)
        }
        n => panic!("degree {n}"),
    }
}

#[test]
fn discriminant_against_resultant_and_roots() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut worst = 0.0f64;
    for i in 0..600 {
        let f = oracle::random_monic(&mut rng, 3 + i % 3, 20);
        let (g, delta) = formula_disc(&f);
        assert_eq!(delta, oracle::discriminant(g.coeffs()), "{f}");
        if delta.is_zero() {
            continue;
        }
        let roots = oracle::int_roots(&g);
        let num = oracle::numeric_discriminant(&roots);
        let exact = Complex64::new(delta.to_f64().unwrap(), 0.0);
        let err = (num - exact).norm() / exact.norm();
        worst = worst.max(err);
        assert!(err < 1e-6, "{g}: {num} vs {delta}");
    }
    assert!(worst < 1e-6);
}

#[test]
fn resolvent_cubic_roots_are_pair_sums() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for _ in 0..200 {
        let f = oracle::random_monic(&mut rng, 4, 20);
        let r = oracle::int_roots(&f);
        let sums = [
            r[0] * r[1] + r[2] * r[3],
            r[0] * r[2] + r[1] * r[3],
            r[0] * r[3] + r[1] * r[2],
        ];
        let r3 = resolvent_cubic(&f.coeff(3), &f.coeff(2), &f.coeff(1), &f.coeff(0));
        let r3_roots = oracle::int_roots(&r3);
        let d = oracle::multiset_distance(&sums, &r3_roots);
        assert!(d < 1e-6, "{f}: R3 = {r3}, distance {d}");
    }
}

#[test]
fn resolvent_sextic_roots_are_theta_orbit() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut done = 0;
    while done < 200 {
        let f = oracle::random_depressed(&mut rng, 5, 10);
        if oracle::discriminant(f.coeffs()).is_zero() {
            continue;
        }
        let r = oracle::int_roots(&f);
        let orbit = oracle::theta_orbit(&r);
        if orbit.len() != 6 {
            // coincident θ values; the orbit multiset is not recoverable
            continue;
        }
        let r6 = resolvent_sextic(&f.coeff(3), &f.coeff(2), &f.coeff(1), &f.coeff(0));
        let r6_roots = oracle::int_roots(&r6);
        let d = oracle::multiset_distance(&orbit, &r6_roots);
        assert!(d < 1e-4, "{f}: R6 = {r6}, distance {d}");
        done += 1;
    }
}

#[test]
fn worked_example_discriminants() {
    let b = BigInt::from;
    assert_eq!(disc_cubic(&b(0), &b(1), &b(1)), b(-31));
    assert_eq!(disc_cubic(&b(3), &b(0), &b(-3)), b(81));
    assert_eq!(disc_quartic(&b(0), &b(0), &b(-1), &b(-1)), b(-283));
    assert_eq!(disc_quartic(&b(0), &b(0), &b(8), &b(12)), b(331776));
    assert_eq!(disc_quartic(&b(0), &b(0), &b(36), &b(63)), b(18662400));
    assert_eq!(disc_quartic(&b(0), &b(0), &b(3), &b(3)), b(4725));
    assert_eq!(disc_quartic(&b(0), &b(0), &b(5), &b(5)), b(15125));
    assert_eq!(disc_quintic(&b(0), &b(0), &b(-1), &b(-1)), b(2869));
    assert_eq!(disc_quintic(&b(0), &b(0), &b(20), &b(16)), b(2).pow(16) * b(5).pow(6));
    assert_eq!(disc_quintic(&b(0), &b(0), &b(15), &b(12)), b(2).pow(10) * b(3).pow(4) * b(5).pow(5));
    assert_eq!(disc_quintic(&b(0), &b(0), &b(-5), &b(12)), b(2).pow(12) * b(5).pow(6));
    assert_eq!(disc_quintic(&b(-10), &b(5), &b(10), &b(1)), b(5).pow(8) * b(7).pow(2));
    assert_eq!(
        kappe_warren_products(&b(0), &b(0), &b(5), &b(5), &b(15125)),
        (b(302500), b(75625))
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn trinomial_closed_forms(p in -10_000i64..=10_000, q in -10_000i64..=10_000) {
        let (p, q) = (BigInt::from(p), BigInt::from(q));
        let z = BigInt::zero();
        prop_assert_eq!(disc_cubic(&z, &p, &q), trinomial::disc_cubic(&p, &q));
        prop_assert_eq!(disc_quartic(&z, &z, &p, &q), trinomial::disc_quartic(&p, &q));
        prop_assert_eq!(resolvent_cubic(&z, &z, &p, &q), trinomial::resolvent_cubic(&p, &q));
        prop_assert_eq!(disc_quintic(&z, &z, &p, &q), trinomial::disc_quintic(&p, &q));
        prop_assert_eq!(resolvent_sextic(&z, &z, &p, &q), trinomial::resolvent_sextic(&p, &q));
        let p5 = p.pow(5u32);
        let expect = IntPoly::new(vec![
            BigInt::from(256) * p.pow(6u32) - BigInt::from(9375) * &p * q.pow(4u32),
            BigInt::from(512) * &p5 - BigInt::from(3125) * q.pow(4u32),
            BigInt::from(400) * p.pow(4u32),
            BigInt::from(160) * p.pow(3u32),
            BigInt::from(40) * &p * &p,
            BigInt::from(8) * &p,
            BigInt::from(1),
        ]);
        prop_assert_eq!(trinomial::resolvent_sextic(&p, &q), expect);
    }

    #[test]
    fn discriminants_against_resultant(c in prop::collection::vec(-1000i64..=1000, 4)) {
        let quartic = IntPoly::from_i64(&[c[0], c[1], c[2], c[3], 1]);
        prop_assert_eq!(formula_disc(&quartic).1, oracle::discriminant(quartic.coeffs()));
        let cubic = IntPoly::from_i64(&[c[0], c[1], c[2], 1]);
        prop_assert_eq!(formula_disc(&cubic).1, oracle::discriminant(cubic.coeffs()));
        let quintic = IntPoly::from_i64(&[c[0], c[1], c[2], c[3], 0, 1]);
        prop_assert_eq!(formula_disc(&quintic).1, oracle::discriminant(quintic.coeffs()));
    }
}
