//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored by ascending power with no trailing zeros, so
//! the zero polynomial is the empty vector and structural equality is
//! polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::scalar::{rat_int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// Build from ascending-power coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![rat_int(0), rat_int(1)])
    }

    /// The linear polynomial `x - c`.
    pub fn x_minus(c: &Rational) -> Self {
        Polynomial::from_coeffs(vec![-c.clone(), rat_int(1)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^j`; zero beyond the degree.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // Horner, highest power first.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    #[test]
    fn expansion_of_linear_product() {
        let p = &Polynomial::x_minus(&rat_int(1)) * &Polynomial::x_minus(&rat_int(2));
        assert_eq!(p, Polynomial::from_coeffs(vec![rat_int(2), rat_int(-3), rat_int(1)]));
    }

    #[test]
    fn multiplicative_identity_and_squares() {
        let p = Polynomial::from_coeffs(vec![rat(1, 2), rat_int(0), rat(-3, 7)]);
        assert_eq!(&p * &Polynomial::one(), p);
        let x = Polynomial::x();
        assert_eq!(&x * &x, Polynomial::from_coeffs(vec![rat_int(0), rat_int(0), rat_int(1)]));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Polynomial::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        let q = &Polynomial::x() - &Polynomial::x();
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn eval_matches_coefficients() {
        let p = Polynomial::from_coeffs(vec![rat_int(2), rat_int(-3), rat_int(1)]);
        assert_eq!(p.eval(&rat_int(1)), rat_int(0));
        assert_eq!(p.eval(&rat_int(2)), rat_int(0));
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 4));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-20i64..20, 1i64..8), 0..5)
            .prop_map(|cs| Polynomial::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn mul_distributes_over_add(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
