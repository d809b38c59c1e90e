//! Classical Stirling numbers (signed first kind, second kind) and the
//! r-restricted variant of the first kind.
//!
//! Tables are built bottom-up from the two-term recurrences and queried
//! with signed indices; anything outside the triangle is zero. The
//! structs are immutable after construction, so sharing them across
//! threads needs no synchronization.

use num_traits::{One, Zero};

use crate::scalar::{Integer, Rational};

/// Triangle of signed Stirling numbers of the first kind:
/// s(i+1,j) = s(i,j-1) - i*s(i,j), s(0,0) = 1.
#[derive(Clone, Debug)]
pub struct StirlingFirst {
    rows: Vec<Vec<Integer>>,
}

impl StirlingFirst {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![Integer::one()]);
        for i in 0..n_max {
            let prev = &rows[i];
            let mut row = vec![Integer::zero(); i + 2];
            for j in 0..=i + 1 {
                let mut v = if j > 0 { prev[j - 1].clone() } else { Integer::zero() };
                if j <= i {
                    v -= Integer::from(i) * &prev[j];
                }
                row[j] = v;
            }
            rows.push(row);
        }
        StirlingFirst { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: i64, j: i64) -> Integer {
        if i < 0 || j < 0 || j > i {
            return Integer::zero();
        }
        self.rows[i as usize][j as usize].clone()
    }
}

/// Triangle of Stirling numbers of the second kind:
/// S(i+1,j) = S(i,j-1) + j*S(i,j), S(0,0) = 1.
#[derive(Clone, Debug)]
pub struct StirlingSecond {
    rows: Vec<Vec<Integer>>,
}

impl StirlingSecond {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![Integer::one()]);
        for i in 0..n_max {
            let prev = &rows[i];
            let mut row = vec![Integer::zero(); i + 2];
            for j in 0..=i + 1 {
                let mut v = if j > 0 { prev[j - 1].clone() } else { Integer::zero() };
                if j <= i {
                    v += Integer::from(j) * &prev[j];
                }
                row[j] = v;
            }
            rows.push(row);
        }
        StirlingSecond { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: i64, j: i64) -> Integer {
        if i < 0 || j < 0 || j > i {
            return Integer::zero();
        }
        self.rows[i as usize][j as usize].clone()
    }
}

/// Unsigned r-Stirling numbers of the first kind: permutations of
/// {1,...,i} into j cycles with 1,...,r in distinct cycles.
///
/// Boundary: the row i = r is the delta at j = r; everything with
/// i < r or j < r vanishes. For i > r:
/// [i,j]_r = [i-1,j-1]_r + (i-1)[i-1,j]_r.
#[derive(Clone, Debug)]
pub struct RStirlingFirst {
    r: usize,
    rows: Vec<Vec<Integer>>, // rows[d] is row i = r + d, entries j = 0..=i
}

impl RStirlingFirst {
    pub fn new(r: usize, n_max: usize) -> Self {
        assert!(n_max >= r, "table must reach row i = r");
        let mut base = vec![Integer::zero(); r + 1];
        base[r] = Integer::one();
        let mut rows = vec![base];
        for i in r..n_max {
            let prev = &rows[i - r];
            let mut row = vec![Integer::zero(); i + 2];
            for j in 0..=i + 1 {
                let mut v = if j > 0 { prev[j - 1].clone() } else { Integer::zero() };
                if j <= i {
                    v += Integer::from(i) * &prev[j];
                }
                row[j] = v;
            }
            rows.push(row);
        }
        RStirlingFirst { r, rows }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: i64, j: i64) -> Integer {
        if i < self.r as i64 || j < 0 || j > i {
            return Integer::zero();
        }
        self.rows[(i as usize) - self.r][j as usize].clone()
    }
}

/// n-th harmonic number 1 + 1/2 + ... + 1/n (0 for n = 0).
pub fn harmonic(n: usize) -> Rational {
    (1..=n).map(|t| Rational::new(Integer::one(), Integer::from(t))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::scalar::{binomial_int, rat, rat_int};

    #[test]
    fn first_kind_small_rows() {
        let s = StirlingFirst::new(4);
        let expect: [&[i64]; 5] =
            [&[1], &[0, 1], &[0, -1, 1], &[0, 2, -3, 1], &[0, -6, 11, -6, 1]];
        for (i, row) in expect.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(s.get(i as i64, j as i64), Integer::from(v), "s({i},{j})");
            }
        }
        assert_eq!(s.get(3, 2), Integer::from(-3));
        assert_eq!(s.get(4, 2), Integer::from(11));
    }

    #[test]
    fn second_kind_small_values() {
        let s = StirlingSecond::new(5);
        assert_eq!(s.get(3, 2), Integer::from(3));
        assert_eq!(s.get(4, 2), Integer::from(7));
        assert_eq!(s.get(5, 3), Integer::from(25));
        assert_eq!(s.get(4, 1), Integer::one());
    }

    #[test]
    fn out_of_triangle_is_zero() {
        let s1 = StirlingFirst::new(6);
        let s2 = StirlingSecond::new(6);
        for t in [(-1, 0), (2, 3), (5, -1), (0, 1)] {
            assert_eq!(s1.get(t.0, t.1), Integer::zero());
            assert_eq!(s2.get(t.0, t.1), Integer::zero());
        }
    }

    #[test]
    fn diagonal_and_subdiagonal() {
        let n = 30;
        let s1 = StirlingFirst::new(n);
        let s2 = StirlingSecond::new(n);
        for i in 1..=n as i64 {
            assert_eq!(s1.get(i, i), Integer::one());
            assert_eq!(s2.get(i, i), Integer::one());
            assert_eq!(s1.get(i, i - 1), -binomial_int(i, 2));
            assert_eq!(s2.get(i, i - 1), binomial_int(i, 2));
        }
    }

    #[test]
    fn kinds_are_mutually_inverse() {
        let n = 15;
        let s1 = StirlingFirst::new(n);
        let s2 = StirlingSecond::new(n);
        for i in 0..=n as i64 {
            for l in 0..=n as i64 {
                let dot: Integer = (0..=i).map(|j| s1.get(i, j) * s2.get(j, l)).sum();
                let expect = if i == l { Integer::one() } else { Integer::zero() };
                assert_eq!(dot, expect, "orthogonality at ({i},{l})");
            }
        }
    }

    #[test]
    fn first_kind_generates_falling_factorials() {
        // sum_j s(i,j) x^j = x(x-1)...(x-i+1)
        let n = 15;
        let s = StirlingFirst::new(n);
        for i in 0..=n {
            let lhs = Polynomial::from_coeffs(
                (0..=i).map(|j| Rational::from(s.get(i as i64, j as i64))).collect(),
            );
            let mut rhs = Polynomial::one();
            for t in 0..i {
                rhs = &rhs * &Polynomial::x_minus(&rat_int(t as i64));
            }
            assert_eq!(lhs, rhs, "row {i}");
        }
    }

    #[test]
    fn r_zero_matches_unsigned_first_kind() {
        let n = 12;
        let s = StirlingFirst::new(n);
        let r0 = RStirlingFirst::new(0, n);
        for i in 0..=n as i64 {
            for j in 0..=i {
                let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                assert_eq!(r0.get(i, j), s.get(i, j) * Integer::from(sign));
            }
        }
    }

    #[test]
    fn r_stirling_boundaries() {
        let t = RStirlingFirst::new(3, 8);
        for j in 0..=8 {
            let expect = if j == 3 { Integer::one() } else { Integer::zero() };
            assert_eq!(t.get(3, j), expect);
        }
        assert_eq!(t.get(2, 2), Integer::zero()); // below row r
        // [4,3]_3: element 4 joins one of the 3 protected cycles or its own;
        // three ways to keep the count at 3... via recurrence: [4,3]_3 = [3,2]_3 + 3[3,3]_3 = 3
        assert_eq!(t.get(4, 3), Integer::from(3));
        assert_eq!(t.get(4, 4), Integer::one());
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), rat_int(0));
        assert_eq!(harmonic(1), rat_int(1));
        assert_eq!(harmonic(3), rat(11, 6));
        assert_eq!(harmonic(4), rat(25, 12));
    }
}
