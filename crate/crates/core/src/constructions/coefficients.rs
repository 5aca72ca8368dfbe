//! Exact coefficients of the recursive shell's reach, `a n^2 + b n + c`
//! after each step.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionCoefficients {
    pub step: u32,
    pub quadratic: BigRational,
    pub linear: BigRational,
    pub constant: BigRational,
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn pow2(e: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << e)
}

impl RecursionCoefficients {
    /// The bound `a n^2 + b n + c` at a given `n`.
    pub fn evaluate(&self, n: i64) -> BigRational {
        let n = q(n, 1);
        &self.quadratic * &n * &n + &self.linear * &n + &self.constant
    }
}

/// Step `i` by iterating the recursion from `(13/32, -53/8, 193/4)`.
pub fn recursion_coefficients(i: u32) -> RecursionCoefficients {
    let mut a = q(13, 32);
    let mut b = q(-53, 8);
    let mut c = q(193, 4);
    let two = q(2, 1);
    for _ in 0..i {
        let next_a = q(1, 4) + &a / &two;
        let next_b = -(&two * &a) + &b - q(3, 1);
        let next_c = &two * &a - &two * &b + &two * &c + q(16, 1);
        a = next_a;
        b = next_b;
        c = next_c;
    }
    RecursionCoefficients {
        step: i,
        quadratic: a,
        linear: b,
        constant: c,
    }
}

/// Step `i` from the closed forms.
pub fn closed_form_coefficients(i: u32) -> RecursionCoefficients {
    let step = q(i64::from(i), 1);
    let quadratic = q(1, 2) - q(3, 1) / pow2(i + 5);
    let linear = -(q(4, 1) * &step) - q(3, 1) / pow2(i + 3) - q(25, 4);
    let constant = q(689, 8) * pow2(i) - q(8, 1) * &step - q(75, 2) - q(3, 1) / pow2(i + 3);
    debug_assert!(!quadratic.is_zero());
    RecursionCoefficients {
        step: i,
        quadratic,
        linear,
        constant,
    }
}
