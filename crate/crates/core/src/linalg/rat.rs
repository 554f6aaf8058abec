//! Exact rational scalars.
//!
//! [`Rat`] is `num`'s arbitrary-precision rational: always in lowest terms
//! with a positive denominator, so arithmetic never overflows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Formats as `num/den`, denominator always present, so the text round-trips without floats.
pub fn to_fraction_string(q: &Rat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_fraction(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}
