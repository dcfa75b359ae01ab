use core::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::rational::ExactValue;

/// Outcome of `Z1^(1/n1)` vs `Z2^(1/n2)`, decided by the exact cross powers
/// `Z1^e1` vs `Z2^e2` with `(e1, e2) = (n2, n1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizedComparison {
    pub outcome: Ordering,
    pub exponents: (usize, usize),
}

impl NormalizedComparison {
    pub fn is_at_most(&self) -> bool {
        self.outcome != Ordering::Greater
    }
}

/// Compares normalized values. Zeros are handled before powering: both zero is
/// `Equal`, otherwise the zero side is `Less`.
pub fn compare_values(z1: &ExactValue, n1: usize, z2: &ExactValue, n2: usize) -> NormalizedComparison {
    let exponents = (n2, n1);
    let outcome = match (z1.is_zero(), z2.is_zero()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => {
            let pw = |x: BigUint, e: usize| -> BigUint { Pow::pow(x, e) };
            // p1^e1 q2^e2  vs  p2^e2 q1^e1
            let lhs = pw(z1.numer(), n2) * pw(z2.denom(), n1);
            let rhs = pw(z2.numer(), n1) * pw(z1.denom(), n2);
            lhs.cmp(&rhs)
        }
    };
    NormalizedComparison { outcome, exponents }
}
