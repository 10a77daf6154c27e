//! Factorization shapes modulo small primes, used as an independent check
//! on a claimed Galois group: for a prime not dividing the discriminant, the
//! degrees of the irreducible factors of `f mod p` form the cycle type of an
//! element of the group.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::group::GaloisGroup;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Dense polynomial over `F_p`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Fp {
    c: Vec<u64>,
    p: u64,
}

impl Fp {
    fn new(mut c: Vec<u64>, p: u64) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Fp { c, p }
    }

    fn reduce(f: &IntPoly, p: u64) -> Self {
        let m = BigInt::from(p);
        Fp::new(
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().expect("reduced below p"))
                .collect(),
            p,
        )
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn x(p: u64) -> Self {
        Fp::new(vec![0, 1], p)
    }

    fn sub(&self, o: &Fp) -> Fp {
        let n = self.c.len().max(o.c.len());
        let get = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        Fp::new(
            (0..n)
                .map(|i| (get(&self.c, i) + self.p - get(&o.c, i)) % self.p)
                .collect(),
            self.p,
        )
    }

    fn mul(&self, o: &Fp) -> Fp {
        if self.is_zero() || o.is_zero() {
            return Fp::new(vec![], self.p);
        }
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        Fp::new(out, self.p)
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    fn div_rem(&self, d: &Fp) -> (Fp, Fp) {
        let p = self.p;
        if self.degree() < d.degree() || self.is_zero() {
            return (Fp::new(vec![], p), self.clone());
        }
        let lead_inv = self.inv(*d.c.last().expect("nonzero divisor"));
        let dd = d.degree();
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let t = r[k + dd] * lead_inv % p;
            q[k] = t;
            for (j, &dc) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - t * dc % p) % p;
            }
        }
        r.truncate(dd);
        (Fp::new(q, p), Fp::new(r, p))
    }

    fn rem(&self, d: &Fp) -> Fp {
        self.div_rem(d).1
    }

    fn monic(&self) -> Fp {
        match self.c.last() {
            None => self.clone(),
            Some(&l) => {
                let inv = self.inv(l);
                Fp::new(self.c.iter().map(|x| x * inv % self.p).collect(), self.p)
            }
        }
    }

    fn gcd(&self, o: &Fp) -> Fp {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Fp {
        Fp::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * (i as u64 % self.p) % self.p)
                .collect(),
            self.p,
        )
    }

    /// `self^e mod m`.
    fn pow_mod(&self, mut e: u64, m: &Fp) -> Fp {
        let mut base = self.rem(m);
        let mut acc = Fp::new(vec![1], self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Degrees of the irreducible factors of `f mod p`, descending, by
/// distinct-degree factorization.
///
/// `f` must be monic and `p` a prime below 2³¹ not dividing the
/// discriminant; a prime for which `f mod p` is not squarefree is
/// reported as [`Error::BadPrime`].
pub fn cycle_type_mod_p(f: &IntPoly, p: u64) -> Result<Vec<usize>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let fp = Fp::reduce(f, p);
    if fp.degree() == 0 {
        return Ok(Vec::new());
    }
    if fp.gcd(&fp.derivative()).degree() > 0 {
        return Err(Error::BadPrime(p));
    }
    let x = Fp::x(p);
    let mut rest = fp;
    let mut h = x.clone();
    let mut shape = Vec::new();
    let mut k = 1;
    while rest.degree() >= 2 * k {
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() > 0 {
            shape.extend(std::iter::repeat_n(k, g.degree() / k));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
        k += 1;
    }
    if rest.degree() > 0 {
        shape.push(rest.degree());
    }
    shape.sort_unstable_by(|a, b| b.cmp(a));
    Ok(shape)
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// A prime whose factorization shape is not a cycle type of `claimed`,
/// with that shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindViolation {
    pub prime: u64,
    pub shape: Vec<usize>,
}

/// Checks every good prime up to `prime_bound` and returns the first one
/// whose shape contradicts `claimed`.
pub fn dedekind_witness(
    f: &IntPoly,
    claimed: GaloisGroup,
    prime_bound: u64,
) -> Option<DedekindViolation> {
    if f.degree() != claimed.degree() {
        return Some(DedekindViolation {
            prime: 0,
            shape: vec![f.degree()],
        });
    }
    let types = claimed.cycle_types();
    for p in primes_up_to(prime_bound) {
        match cycle_type_mod_p(f, p) {
            Ok(shape) if !types.contains(&shape) => {
                return Some(DedekindViolation { prime: p, shape })
            }
            _ => {}
        }
    }
    None
}

/// True when every prime up to `prime_bound` not dividing the discriminant
/// shows a factorization shape that is a cycle type of `claimed`.
pub fn dedekind_check(f: &IntPoly, claimed: GaloisGroup, prime_bound: u64) -> bool {
    dedekind_witness(f, claimed, prime_bound).is_none()
}
