//! Moment-generating Stirling numbers c (first kind) and b (second kind).
//!
//! Both families carry a rational shift parameter k. At k = 0 they reduce
//! to the classical numbers: c becomes the signed first kind, b becomes
//! j! times the second kind.
//!
//! Each family has two independent computation paths. The `*_def`
//! functions expand the defining sums term by term; the table types grow
//! rows by the two-term recurrences. Tests pin the paths against each
//! other, and the generating-function helpers give a third view of the
//! same triangles.

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::scalar::{binomial_int, factorial, neg_one_pow, rat_int, rat_pow, Rational};
use crate::series::PowerSeries;
use crate::stirling::StirlingFirst;

/// c_{i,j,k} from its defining sum over signed first-kind numbers:
/// sum_{r=j}^{i} C(r,j) (-k)^{r-j} s(i,r).
pub fn msn1_def(i: i64, j: i64, k: &Rational) -> Rational {
    if i < 0 || j < 0 || j > i {
        return Rational::zero();
    }
    let s = StirlingFirst::new(i as usize);
    let minus_k = -k;
    let mut acc = Rational::zero();
    for r in j..=i {
        acc += Rational::from(binomial_int(r, j))
            * rat_pow(&minus_k, (r - j) as usize)
            * Rational::from(s.get(i, r));
    }
    acc
}

/// b_{i,j,k} from its defining alternating sum
/// sum_{r=0}^{j} C(j,r) (-1)^{j-r} (r+k)^i, with 0^0 = 1.
pub fn msn2_def(i: i64, j: i64, k: &Rational) -> Rational {
    if i < 0 || j < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::zero();
    for r in 0..=j {
        let base = k + rat_int(r);
        acc += Rational::from(binomial_int(j, r) * neg_one_pow(j - r)) * rat_pow(&base, i as usize);
    }
    acc
}

/// Triangle of c_{i,j,k} for fixed k, grown by
/// c_{i+1,j,k} = c_{i,j-1,k} - (i+k) c_{i,j,k}.
#[derive(Clone, Debug)]
pub struct Msn1Table {
    k: Rational,
    rows: Vec<Vec<Rational>>,
}

/// Triangle of b_{i,j,k} for fixed k, grown by
/// b_{i+1,j,k} = j b_{i,j-1,k} + (j+k) b_{i,j,k}.
///
/// (Split (r+k)^{i+1} = (r+k)^i ((j+k) - (j-r)) in the defining sum and
/// absorb j-r into the binomial; at k = 0 this is the classical
/// second-kind recursion scaled by j!.)
#[derive(Clone, Debug)]
pub struct Msn2Table {
    k: Rational,
    rows: Vec<Vec<Rational>>,
}

fn grow_rows(n_max: usize, step: impl Fn(usize, usize, &[Rational]) -> Rational) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Rational::one()]);
    for i in 0..n_max {
        let row = (0..=i + 1).map(|j| step(i, j, &rows[i])).collect();
        rows.push(row);
    }
    rows
}

impl Msn1Table {
    pub fn new(n_max: usize, k: &Rational) -> Self {
        let rows = grow_rows(n_max, |i, j, prev| {
            let mut v = if j > 0 { prev[j - 1].clone() } else { Rational::zero() };
            if j <= i {
                v -= (k + rat_int(i as i64)) * &prev[j];
            }
            v
        });
        Msn1Table { k: k.clone(), rows }
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: i64, j: i64) -> Rational {
        table_get(&self.rows, i, j)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }
}

impl Msn2Table {
    pub fn new(n_max: usize, k: &Rational) -> Self {
        let rows = grow_rows(n_max, |i, j, prev| {
            let mut v = if j > 0 {
                rat_int(j as i64) * &prev[j - 1]
            } else {
                Rational::zero()
            };
            if j <= i {
                v += (k + rat_int(j as i64)) * &prev[j];
            }
            v
        });
        Msn2Table { k: k.clone(), rows }
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: i64, j: i64) -> Rational {
        table_get(&self.rows, i, j)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }
}

fn table_get(rows: &[Vec<Rational>], i: i64, j: i64) -> Rational {
    if i < 0 || j < 0 || j > i {
        return Rational::zero();
    }
    assert!((i as usize) < rows.len(), "row {i} beyond table size {}", rows.len() - 1);
    rows[i as usize][j as usize].clone()
}

/// Row generating polynomial of the first kind:
/// sum_j c_{i,j,k} x^j = (x-k)(x-k-1)...(x-k-i+1).
pub fn msn1_ogf(i: usize, k: &Rational) -> Polynomial {
    let mut p = Polynomial::one();
    for t in 0..i {
        p = &p * &Polynomial::x_minus(&(k + rat_int(t as i64)));
    }
    p
}

/// Column exponential generating series of the first kind, truncated:
/// sum_i c_{i,j,k} x^i/i! = (1+x)^{-k} ln(1+x)^j / j!.
pub fn msn1_egf(j: usize, k: &Rational, order: usize) -> PowerSeries {
    let series = &PowerSeries::pow_binomial(&-k, order) * &PowerSeries::log1p(order).powi(j);
    series.scale(&Rational::new(1.into(), factorial(j)))
}
