use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Pid;

impl Pid for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }

    fn one_like(&self) -> Self {
        BigInt::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }

    fn same_ring(&self, _other: &Self) -> bool {
        true
    }

    fn unit_normal(&self) -> Self {
        if self.sign() == Sign::Minus {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.clone())
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        Integer::div_rem(self, divisor)
    }

    fn size(&self) -> u64 {
        self.bits()
    }

    fn canonical(&self) -> Self {
        self.abs()
    }

    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
}
