//! Principal ideal domain arithmetic.
//!
//! Everything the gcd-Toda recurrence and the unimodular reductions need is
//! expressed through the [`Pid`] trait: gcd, Bézout coefficients, exact
//! division and a canonical choice of associate. Two instances ship with the
//! crate: arbitrary precision integers ([`num_bigint::BigInt`]) and
//! univariate polynomials over a prime field ([`PolyModP`]).
//!
//! Values of a runtime-parameterized ring (polynomials carry their modulus)
//! cannot produce a zero out of thin air, so constants are derived from an
//! existing value with [`Pid::zero_like`] and [`Pid::one_like`].

mod integer;
mod poly;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

pub use poly::PolyModP;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("extended gcd of (0, 0) is undefined")]
    BothZero,
    #[error("operands belong to different rings")]
    Mismatch,
    #[error("invalid modulus {0}: expected a prime below 65536")]
    InvalidModulus(u64),
}

/// A Euclidean domain with a distinguished canonical associate per class.
///
/// The arithmetic operators panic when the operands live in different rings
/// (polynomials over different primes). Containers validate this once on
/// construction via [`Pid::same_ring`].
pub trait Pid:
    Clone
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;

    fn one_like(&self) -> Self;

    fn is_zero(&self) -> bool;

    fn is_unit(&self) -> bool;

    fn same_ring(&self, other: &Self) -> bool;

    /// The unit `u` such that `u * self` is canonical. Returns one for zero.
    fn unit_normal(&self) -> Self;

    /// Multiplicative inverse of a unit, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;

    /// Euclidean division. The remainder is smaller than `divisor` in the
    /// Euclidean norm (absolute value, degree). Panics on a zero divisor.
    fn div_rem(&self, divisor: &Self) -> (Self, Self);

    /// Size measure used to bound iteration counts: bit length for
    /// integers, degree for polynomials, zero for zero.
    fn size(&self) -> u64;

    fn canonical(&self) -> Self {
        self.unit_normal() * self.clone()
    }

    fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// Canonical greatest common divisor; `gcd(0, 0) = 0`.
    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.canonical()
    }
}

/// Bézout data for a pair `(a, b)`:
/// `a*p + b*q = d`, `a = s*d`, `b = -t*d`, with `d` canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bezout<R> {
    pub d: R,
    pub p: R,
    pub q: R,
    pub s: R,
    pub t: R,
}

pub fn gcd<R: Pid>(a: &R, b: &R) -> R {
    a.gcd(b)
}

pub fn canonical<R: Pid>(a: &R) -> R {
    a.canonical()
}

pub fn associates<R: Pid>(a: &R, b: &R) -> bool {
    a.canonical() == b.canonical()
}

pub fn extended_gcd<R: Pid>(a: &R, b: &R) -> Result<Bezout<R>, RingError> {
    if !a.same_ring(b) {
        return Err(RingError::Mismatch);
    }
    if a.is_zero() && b.is_zero() {
        return Err(RingError::BothZero);
    }
    // Invariant: old_r = a*old_x + b*old_y, r = a*x + b*y.
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_x, mut x) = (a.one_like(), a.zero_like());
    let (mut old_y, mut y) = (a.zero_like(), a.one_like());
    while !r.is_zero() {
        let (quot, rem) = old_r.div_rem(&r);
        old_r = std::mem::replace(&mut r, rem);
        let next_x = old_x - quot.clone() * x.clone();
        old_x = std::mem::replace(&mut x, next_x);
        let next_y = old_y - quot * y.clone();
        old_y = std::mem::replace(&mut y, next_y);
    }
    let unit = old_r.unit_normal();
    let d = unit.clone() * old_r;
    let p = unit.clone() * old_x;
    let q = unit * old_y;
    let s = exact_div(a, &d)?;
    let t = -exact_div(b, &d)?;
    Ok(Bezout { d, p, q, s, t })
}

/// The unique `c` with `a = b*c`.
pub fn exact_div<R: Pid>(a: &R, b: &R) -> Result<R, RingError> {
    if !a.same_ring(b) {
        return Err(RingError::Mismatch);
    }
    if b.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    let (quot, rem) = a.div_rem(b);
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(RingError::NotDivisible {
            dividend: a.to_string(),
            divisor: b.to_string(),
        })
    }
}

/// Whether `a` divides `b`. Everything divides zero, including zero.
pub fn divides<R: Pid>(a: &R, b: &R) -> bool {
    if b.is_zero() {
        return true;
    }
    if a.is_zero() {
        return false;
    }
    b.div_rem(a).1.is_zero()
}

/// `base^exp` by repeated squaring.
pub fn pow<R: Pid>(base: &R, mut exp: u32) -> R {
    let mut acc = base.one_like();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn check_bezout<R: Pid>(a: &R, b: &R) {
        let bz = extended_gcd(a, b).unwrap();
        assert_eq!(a.clone() * bz.p.clone() + b.clone() * bz.q.clone(), bz.d);
        assert_eq!(bz.s.clone() * bz.d.clone(), *a);
        assert_eq!(-(bz.t.clone() * bz.d.clone()), *b);
        assert!(bz.d.is_canonical());
        assert_eq!(bz.d, a.gcd(b));
    }

    #[test]
    fn integer_gcd_examples() {
        assert_eq!(gcd(&z(4), &z(6)), z(2));
        assert_eq!(gcd(&z(0), &z(-7)), z(7));
        assert_eq!(gcd(&z(0), &z(0)), z(0));
        assert_eq!(gcd(&z(-12), &z(18)), z(6));
    }

    #[test]
    fn extended_gcd_relations() {
        check_bezout(&z(4), &z(6));
        check_bezout(&z(-4), &z(6));
        check_bezout(&z(35), &z(-15));
    }

    #[test]
    fn extended_gcd_with_zero_operand() {
        let bz = extended_gcd(&z(-5), &z(0)).unwrap();
        assert_eq!(bz, Bezout { d: z(5), p: z(-1), q: z(0), s: z(-1), t: z(0) });
        let bz = extended_gcd(&z(0), &z(-5)).unwrap();
        assert_eq!(bz, Bezout { d: z(5), p: z(0), q: z(-1), s: z(0), t: z(1) });
        assert_eq!(extended_gcd(&z(0), &z(0)), Err(RingError::BothZero));
    }

    #[test]
    fn exact_division() {
        assert_eq!(exact_div(&z(108), &z(6)).unwrap(), z(18));
        assert_eq!(exact_div(&z(-9), &z(-9)).unwrap(), z(1));
        assert!(matches!(exact_div(&z(7), &z(2)), Err(RingError::NotDivisible { .. })));
        assert_eq!(exact_div(&z(7), &z(0)), Err(RingError::DivisionByZero));
    }

    #[test]
    fn divisibility() {
        assert!(divides(&z(6), &z(972)));
        assert!(!divides(&z(2), &z(3)));
        assert!(divides(&z(0), &z(0)));
        assert!(divides(&z(5), &z(0)));
        assert!(!divides(&z(0), &z(5)));
    }

    #[test]
    fn canonical_integers_are_nonnegative() {
        assert_eq!(z(-3).canonical(), z(3));
        assert_eq!(z(0).canonical(), z(0));
        assert!(associates(&z(-8), &z(8)));
        assert!(!associates(&z(4), &z(8)));
    }

    #[test]
    fn polynomial_gcd_over_f2() {
        // x^2 + 1 = (x + 1)^2 over F_2
        let a = PolyModP::new(2, &[1, 0, 1]).unwrap();
        let b = PolyModP::new(2, &[1, 1]).unwrap();
        assert_eq!(gcd(&a, &b), b);
        check_bezout(&a, &b);
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let a = PolyModP::new(2, &[1, 1]).unwrap();
        let b = PolyModP::new(3, &[1, 1]).unwrap();
        assert_eq!(extended_gcd(&a, &b), Err(RingError::Mismatch));
        assert_eq!(exact_div(&a, &b), Err(RingError::Mismatch));
    }

    #[test]
    fn power() {
        assert_eq!(pow(&z(3), 5), z(243));
        assert_eq!(pow(&z(7), 0), z(1));
    }

    fn divisors_brute(v: i64) -> Vec<i64> {
        (1..=v.abs().max(1)).filter(|d| v % d == 0).collect()
    }

    // All monic polynomials of degree <= max_deg over F_p.
    fn monic_polys(p: u32, max_deg: usize) -> Vec<PolyModP> {
        let mut out = Vec::new();
        for deg in 0..=max_deg {
            let count = (p as usize).pow(deg as u32);
            for idx in 0..count {
                let mut coeffs = Vec::with_capacity(deg + 1);
                let mut k = idx;
                for _ in 0..deg {
                    coeffs.push((k % p as usize) as i64);
                    k /= p as usize;
                }
                coeffs.push(1);
                out.push(PolyModP::new(p, &coeffs).unwrap());
            }
        }
        out
    }

    fn poly_strategy(p: u32, max_deg: usize) -> impl Strategy<Value = PolyModP> {
        prop::collection::vec(0..p as i64, 0..=max_deg + 1)
            .prop_map(move |c| PolyModP::new(p, &c).unwrap())
    }

    #[test]
    fn polynomial_gcd_matches_divisor_enumeration() {
        for p in [2u32, 3] {
            let all = monic_polys(p, 4);
            let sample: Vec<_> = all.iter().step_by(7).cloned().collect();
            for a in &sample {
                for b in sample.iter().step_by(3) {
                    let g = gcd(a, b);
                    let best = all
                        .iter()
                        .filter(|d| divides(*d, a) && divides(*d, b))
                        .max_by_key(|d| d.degree())
                        .unwrap();
                    assert_eq!(&g, best, "gcd({a}, {b})");
                }
            }
        }
    }

    fn poly_pair() -> impl Strategy<Value = (PolyModP, PolyModP)> {
        prop::sample::select(vec![2u32, 3, 5])
            .prop_flat_map(|p| (poly_strategy(p, 4), poly_strategy(p, 4)))
    }

    proptest! {
        #[test]
        fn integer_gcd_matches_divisor_enumeration(a in -1000i64..=1000, b in -1000i64..=1000) {
            let g = gcd(&z(a), &z(b));
            if a == 0 && b == 0 {
                prop_assert_eq!(g, z(0));
            } else {
                let best = divisors_brute(if a == 0 { b } else { a })
                    .into_iter()
                    .filter(|d| a % d == 0 && b % d == 0)
                    .max()
                    .unwrap();
                prop_assert_eq!(g, z(best));
            }
        }

        #[test]
        fn gcd_commutative_associative(a in -500i64..500, b in -500i64..500, c in -500i64..500) {
            let (a, b, c) = (z(a), z(b), z(c));
            prop_assert_eq!(gcd(&a, &b), gcd(&b, &a));
            prop_assert_eq!(gcd(&gcd(&a, &b), &c), gcd(&a, &gcd(&b, &c)));
        }

        #[test]
        fn integer_bezout_relations(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            prop_assume!(a != 0 || b != 0);
            check_bezout(&z(a), &z(b));
        }

        #[test]
        fn exact_div_inverts_multiplication(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            prop_assume!(b != 0);
            prop_assert_eq!(exact_div(&(z(a) * z(b)), &z(b)).unwrap(), z(a));
        }

        #[test]
        fn poly_bezout_and_exact_div((a, b) in poly_pair()) {
            if !(a.is_zero() && b.is_zero()) {
                check_bezout(&a, &b);
            }
            if !b.is_zero() {
                prop_assert_eq!(exact_div(&(a.clone() * b.clone()), &b).unwrap(), a.clone());
            }
            let g = gcd(&a, &b);
            prop_assert!(divides(&g, &a) && divides(&g, &b));
        }

        #[test]
        fn canonical_absorbs_units(a in poly_strategy(5, 4), c in 1i64..5) {
            let unit = PolyModP::new(5, &[c]).unwrap();
            prop_assert_eq!((unit * a.clone()).canonical(), a.canonical());
            let canon = a.canonical();
            prop_assert_eq!(canon.canonical(), canon.clone());
            prop_assert!(canon.is_zero() || canon.leading() == 1);
        }

        #[test]
        fn canonical_integer_units(a in -1000i64..1000) {
            prop_assert_eq!((z(-1) * z(a)).canonical(), z(a).canonical());
            prop_assert!(z(a).canonical() >= z(0));
        }
    }
}
