//! Exact rational values used where floating point cannot certify equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub type Exact = BigRational;

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Exact {
    Exact::new(num.into(), den.into())
}

pub fn integer(v: impl Into<BigInt>) -> Exact {
    Exact::from_integer(v.into())
}

pub fn to_f64(x: &Exact) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_f64().unwrap_or(f64::NAN)
}

/// Always `num/den`, including for integers (`1/1`).
pub fn fraction_string(x: &Exact) -> String {
    format!("{}/{}", x.numer(), x.denom())
}
