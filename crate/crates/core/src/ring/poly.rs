use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Pid, RingError};

/// Polynomial over the prime field `F_p`, coefficients in ascending degree.
///
/// Coefficients are residues in `[0, p)` with no trailing zeros; the zero
/// polynomial has no coefficients. `p` is a prime below `2^16`, so products
/// of two residues fit comfortably in a `u64`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyModP {
    modulus: u32,
    coeffs: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl PolyModP {
    /// Builds a polynomial from signed coefficients, reducing them mod `p`.
    pub fn new(modulus: u32, coeffs: &[i64]) -> Result<Self, RingError> {
        Self::check_modulus(modulus as u64)?;
        let m = modulus as i64;
        let coeffs = coeffs.iter().map(|c| c.rem_euclid(m) as u32).collect();
        Ok(Self::from_residues(modulus, coeffs))
    }

    pub fn check_modulus(modulus: u64) -> Result<(), RingError> {
        if modulus < 1 << 16 && is_prime(modulus) {
            Ok(())
        } else {
            Err(RingError::InvalidModulus(modulus))
        }
    }

    pub fn zero(modulus: u32) -> Self {
        Self { modulus, coeffs: Vec::new() }
    }

    pub fn constant(modulus: u32, c: i64) -> Self {
        Self::from_residues(modulus, vec![c.rem_euclid(modulus as i64) as u32])
    }

    /// The monomial `x`.
    pub fn x(modulus: u32) -> Self {
        Self::from_residues(modulus, vec![0, 1])
    }

    fn from_residues(modulus: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn mulmod(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.modulus as u64) as u32
    }

    fn inv_residue(&self, a: u32) -> u32 {
        // Fermat: a^(p-2)
        let p = self.modulus as u64;
        let (mut base, mut exp, mut acc) = (a as u64 % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }

    fn scaled(&self, c: u32) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.mulmod(a, c)).collect();
        Self::from_residues(self.modulus, coeffs)
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "ring mismatch: F_{}[x] vs F_{}[x]", self.modulus, other.modulus);
    }
}

impl Add for PolyModP {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.assert_same(&rhs);
        let p = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        Self::from_residues(p, coeffs)
    }
}

impl Neg for PolyModP {
    type Output = Self;

    fn neg(self) -> Self {
        let p = self.modulus;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        Self::from_residues(p, coeffs)
    }
}

impl Sub for PolyModP {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for PolyModP {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.assert_same(&rhs);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero(self.modulus);
        }
        let p = self.modulus as u64;
        let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::from_residues(self.modulus, acc.into_iter().map(|c| c as u32).collect())
    }
}

impl Pid for PolyModP {
    fn zero_like(&self) -> Self {
        Self::zero(self.modulus)
    }

    fn one_like(&self) -> Self {
        Self::from_residues(self.modulus, vec![1])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }

    fn unit_normal(&self) -> Self {
        match self.coeffs.last() {
            Some(&lead) => Self::from_residues(self.modulus, vec![self.inv_residue(lead)]),
            None => self.one_like(),
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit()
            .then(|| Self::from_residues(self.modulus, vec![self.inv_residue(self.coeffs[0])]))
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.assert_same(divisor);
        let divisor_deg = divisor.degree().expect("polynomial division by zero");
        let p = self.modulus;
        let lead_inv = self.inv_residue(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= divisor_deg {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - divisor_deg];
        for shift in (0..quot.len()).rev() {
            let c = self.mulmod(rem[shift + divisor_deg], lead_inv);
            quot[shift] = c;
            if c == 0 {
                continue;
            }
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let sub = self.mulmod(c, d);
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.truncate(divisor_deg);
        (Self::from_residues(p, quot), Self::from_residues(p, rem))
    }

    fn size(&self) -> u64 {
        self.degree().unwrap_or(0) as u64
    }

    fn canonical(&self) -> Self {
        match self.coeffs.last() {
            Some(&lead) if lead != 1 => self.scaled(self.inv_residue(lead)),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("[0]");
        }
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}
