//! Exact rational coefficients.
//!
//! `Rational` is `num_rational::BigRational`: always stored in lowest terms
//! with a positive denominator, zero represented as `0/1`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"num/den"` form, also for integers (`"3/1"`).
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Scales a projective point to a primitive integer vector whose first
/// nonzero entry is positive. Returns `None` for the zero vector.
pub fn primitive_integer_vector(values: &[Rational]) -> Option<Vec<BigInt>> {
    let first = values.iter().position(|v| !v.is_zero())?;
    let den = common_denominator(values);
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in ints.iter_mut() {
            *v /= &g;
        }
    }
    if ints[first].is_negative() {
        for v in ints.iter_mut() {
            *v = -v.clone();
        }
    }
    Some(ints)
}

/// Rescales a projective point so that its first nonzero coordinate is 1.
pub fn normalize_projective(values: &[Rational]) -> Option<Vec<Rational>> {
    let first = values.iter().position(|v| !v.is_zero())?;
    let lead = values[first].clone();
    Some(values.iter().map(|v| v / &lead).collect())
}
