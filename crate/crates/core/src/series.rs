//! Truncated formal power series over the rationals.
//!
//! A series of order N carries exactly the coefficients of x^0 .. x^N;
//! arithmetic truncates eagerly at N and never consults anything beyond
//! it. Binary operations require both operands to share the same order.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::scalar::{binomial_rat, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>, // length order + 1
}

impl PowerSeries {
    /// The zero series to order `order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Build from coefficients of x^0..x^N (length fixes the order).
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, s: &Rational) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Repeated truncated multiplication; exponent 0 gives the series 1.
    pub fn powi(&self, e: usize) -> PowerSeries {
        let mut acc = PowerSeries::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// ln(1+x) to order N: coefficient of x^n is (-1)^(n+1)/n for n >= 1.
    pub fn log1p(order: usize) -> PowerSeries {
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            *c = rat(sign, n as i64);
        }
        PowerSeries { coeffs }
    }

    /// (1+x)^alpha to order N via the generalized binomial series,
    /// coefficient of x^n being C(alpha, n) = (alpha)_n / n!.
    pub fn pow_binomial(alpha: &Rational, order: usize) -> PowerSeries {
        let coeffs = (0..=order).map(|n| binomial_rat(alpha, n)).collect();
        PowerSeries { coeffs }
    }

    fn assert_same_order(&self, rhs: &PowerSeries) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "power series order mismatch: {} vs {}",
            self.order(),
            rhs.order()
        );
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.assert_same_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        PowerSeries { coeffs }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.assert_same_order(rhs);
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }
}
