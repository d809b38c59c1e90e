//! Arbitrary-precision integer and rational scalars.
//!
//! Rationals are kept in canonical form at all times: reduced to lowest
//! terms, denominator positive, zero stored as 0/1. `num_rational`
//! normalizes on construction and after every arithmetic operation, so
//! equality is a plain field-wise comparison.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedDiv, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// `n/d` in lowest terms. Panics if `d` is zero; use [`checked_div`] for
/// fallible division of existing rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_div(b).ok_or(Error::DivisionByZero)
}

/// Parse the canonical wire syntax: optional sign, digits, optional
/// `/digits`. The denominator may not carry its own sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("malformed rational: {s:?}"));
    let (num_part, den_part) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let signed_digits = |t: &str| {
        let t = t.strip_prefix(['+', '-']).unwrap_or(t);
        digits(t)
    };
    if !signed_digits(num_part) || !den_part.map_or(true, digits) {
        return Err(bad());
    }
    let numer: Integer = num_part.parse().map_err(|_| bad())?;
    let denom: Integer = match den_part {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => Integer::one(),
    };
    if denom.is_zero() {
        return Err(Error::InvalidArgument(format!("zero denominator: {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical rendering: `num/den`, or just `num` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when the value is an integer (denominator 1).
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// `r^e` for nonnegative integer exponents, with the convention `r^0 = 1`
/// for every `r`, including zero.
pub fn rat_pow(r: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> Integer {
    let mut acc = Integer::one();
    for t in 2..=n {
        acc *= Integer::from(t);
    }
    acc
}

/// Falling factorial `(x)_i = x (x-1) ... (x-i+1)`; empty product for i = 0.
pub fn falling_factorial(x: &Rational, i: usize) -> Rational {
    let mut acc = Rational::one();
    for t in 0..i {
        acc *= x - rat_int(t as i64);
    }
    acc
}

/// Binomial coefficient for integer arguments, zero outside `0 <= r <= n`.
pub fn binomial_int(n: i64, r: i64) -> Integer {
    if r < 0 || r > n {
        return Integer::zero();
    }
    let mut acc = Integer::one();
    for t in 0..r {
        acc = acc * Integer::from(n - t) / Integer::from(t + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(alpha, n) = (alpha)_n / n!` for
/// rational `alpha`, the single extension used everywhere a binomial takes
/// a non-integer argument.
pub fn binomial_rat(alpha: &Rational, n: usize) -> Rational {
    falling_factorial(alpha, n) / Rational::from_integer(factorial(n))
}

/// Integer-valued sign flip helper: (-1)^e.
pub fn neg_one_pow(e: i64) -> Integer {
    if e.rem_euclid(2) == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// True when `r` is a nonnegative rational.
pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_arithmetic_examples() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(3, 4) - rat(3, 4), rat_int(0));
        assert_eq!(checked_div(&rat(2, 3), &rat_int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&rat(2, 3), &rat(1, 3)), Ok(rat_int(2)));
    }

    #[test]
    fn canonical_zero_and_reduction() {
        let z = rat(0, 7);
        assert!(z.numer().is_zero());
        assert!(z.denom().is_one());
        let r = rat(-4, -6);
        assert_eq!(r, rat(2, 3));
        assert!(r.denom().is_positive());
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-2", "5/3", "-7/2", "+3/4", "10/4"] {
            let r = parse_rational(s).unwrap();
            let rendered = format_rational(&r);
            assert_eq!(parse_rational(&rendered).unwrap(), r);
        }
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert_eq!(format_rational(&rat_int(-3)), "-3");
    }

    #[test]
    fn parse_rejects_bad_syntax() {
        for s in ["", "/", "1/", "/2", "1/-2", "1.5", "a", "1/2/3", "1 /2", "--1"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
        assert!(parse_rational("3/0").is_err());
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&rat(7, 2), 0), rat_int(1));
        assert_eq!(falling_factorial(&rat_int(5), 3), rat_int(60));
        assert_eq!(falling_factorial(&rat_int(-2), 3), rat_int(-24));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_int(5, 2), Integer::from(10));
        assert_eq!(binomial_int(5, 0), Integer::from(1));
        assert_eq!(binomial_int(3, 5), Integer::from(0));
        assert_eq!(binomial_int(3, -1), Integer::from(0));
        // C(-1, n) = (-1)^n, the geometric-series coefficients
        assert_eq!(binomial_rat(&rat_int(-1), 3), rat_int(-1));
        assert_eq!(binomial_rat(&rat(1, 2), 2), rat(-1, 8));
        // rational C agrees with the integer triangle on integer input
        for n in 0..8i64 {
            for r in 0..=n {
                assert_eq!(
                    binomial_rat(&rat_int(n), r as usize),
                    Rational::from_integer(binomial_int(n, r))
                );
            }
        }
    }

    #[test]
    fn pow_conventions() {
        assert_eq!(rat_pow(&rat_int(0), 0), rat_int(1));
        assert_eq!(rat_pow(&rat(-1, 2), 3), rat(-1, 8));
    }

    proptest! {
        #[test]
        fn arithmetic_stays_reduced(an in -200i64..200, ad in 1i64..40, bn in -200i64..200, bd in 1i64..40) {
            use num_integer::Integer as _;
            let a = rat(an, ad);
            let b = rat(bn, bd);
            for v in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(v.denom().is_positive());
                prop_assert!(v.numer().gcd(v.denom()).is_one());
            }
            if !b.is_zero() {
                let q = &a / &b;
                prop_assert!(q.denom().is_positive());
                prop_assert!(q.numer().gcd(q.denom()).is_one());
            }
        }
    }
}
