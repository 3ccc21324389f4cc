//! Exact rational helpers and the `"p/q"` text format.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational.
pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `ceil(a / b)` for `b > 0`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -Integer::div_floor(&-a, &b)
}

/// `floor(a / b)` for `b > 0`.
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    Integer::div_floor(&a, &b)
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Q) -> Q {
    x - x.floor()
}

pub fn floor_i64(x: &Q) -> i64 {
    x.floor()
        .to_integer()
        .to_i64()
        .expect("floor does not fit in i64")
}

pub fn ceil_i64(x: &Q) -> i64 {
    x.ceil()
        .to_integer()
        .to_i64()
        .expect("ceil does not fit in i64")
}

/// The integer value of `x`, if it is an integer that fits in `i64`.
pub fn as_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

/// Renders `p/q` with `q > 0` and `gcd(p, q) = 1`; integers without `/1`.
pub fn format_q(x: &Q) -> String {
    // Ratio keeps itself reduced with a positive denominator.
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

/// Inverse of `a` modulo `m` (`m >= 1`), if it exists, in `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let g = a.extended_gcd(&m);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ceil_and_floor_handle_signs() {
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(ceil_div(6, 3), 2);
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(floor_div(0, 5), 0);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_q(&q(14, 5)), "14/5");
        assert_eq!(format_q(&q(-5, 14)), "-5/14");
        assert_eq!(format_q(&q(6, -3)), "-2");
        assert_eq!(format_q(&q(0, 7)), "0");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert_eq!(parse_q(" 4/6 ").unwrap(), q(2, 3));
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }

    proptest! {
        #[test]
        fn text_format_round_trips(n in -10_000i64..10_000, d in 1i64..10_000) {
            let x = q(n, d);
            prop_assert_eq!(parse_q(&format_q(&x)).unwrap(), x);
        }

        #[test]
        fn frac_is_in_unit_interval(n in -10_000i64..10_000, d in 1i64..500) {
            let x = q(n, d);
            let f = frac(&x);
            prop_assert!(f >= Q::zero() && f < Q::one());
            prop_assert!((x - f).is_integer());
        }
    }
}
