//! Exact rational arithmetic helpers. All carrier arithmetic in this crate
//! is exact; no floating point is used anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

/// Shorthand for `p/q` as an exact rational.
pub fn q(p: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(p), BigInt::from(den))
}

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

pub fn is_unit_interval(x: &Q) -> bool {
    !x.is_negative() && *x <= Q::one()
}

trait Negative {
    fn is_negative(&self) -> bool;
}

impl Negative for Q {
    fn is_negative(&self) -> bool {
        use num_traits::Signed;
        Signed::is_negative(self)
    }
}

/// Parse `p/q` or an integer literal into an exact rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}
