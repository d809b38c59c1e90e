//! Exact moment vectors of discrete distributions and the linear maps
//! between their ordinary, factorial, and central kinds.
//!
//! Every conversion is a triangular change of basis with c/b
//! coefficients, so converting back and forth is exact — the inverse
//! pairs compose to the identity by the c/b inversion property, not up
//! to rounding. The Poisson and phase-type generators plus the
//! truncated mass-function oracle give independent numbers to test the
//! maps against.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::msn::{Msn1Table, Msn2Table};
use crate::scalar::{
    binomial_int, factorial, falling_factorial, rat_int, rat_pow, Rational,
};
use crate::stirling::StirlingSecond;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MomentKind {
    Ordinary,
    Factorial,
    Central,
}

impl MomentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MomentKind::Ordinary => "ordinary",
            MomentKind::Factorial => "factorial",
            MomentKind::Central => "central",
        }
    }
}

impl std::fmt::Display for MomentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MomentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ordinary" => Ok(MomentKind::Ordinary),
            "factorial" => Ok(MomentKind::Factorial),
            "central" => Ok(MomentKind::Central),
            other => Err(Error::InvalidArgument(format!("unknown moment kind: {other:?}"))),
        }
    }
}

/// Moments indexed by order, `values[0] = 1` always. The mean rides
/// along explicitly because the central values alone do not determine
/// the conversion parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentVector {
    kind: MomentKind,
    mean: Rational,
    values: Vec<Rational>,
}

impl MomentVector {
    pub fn ordinary(values: Vec<Rational>) -> Result<Self> {
        Self::raw_kind(MomentKind::Ordinary, values)
    }

    pub fn factorial(values: Vec<Rational>) -> Result<Self> {
        Self::raw_kind(MomentKind::Factorial, values)
    }

    /// Central moments must carry their mean; `values[1]`, if present,
    /// has to be 0.
    pub fn central(values: Vec<Rational>, mean: Rational) -> Result<Self> {
        Self::check_leading(&values)?;
        if values.len() > 1 && !values[1].is_zero() {
            return Err(Error::InvalidArgument(format!(
                "central moments need values[1] = 0, got {}",
                values[1]
            )));
        }
        Ok(MomentVector { kind: MomentKind::Central, mean, values })
    }

    fn raw_kind(kind: MomentKind, values: Vec<Rational>) -> Result<Self> {
        Self::check_leading(&values)?;
        let mean = values.get(1).cloned().unwrap_or_else(Rational::zero);
        Ok(MomentVector { kind, mean, values })
    }

    fn check_leading(values: &[Rational]) -> Result<()> {
        match values.first() {
            Some(v) if v.is_one() => Ok(()),
            Some(v) => Err(Error::InvalidArgument(format!(
                "every moment vector starts with the order-0 moment 1, got {v}"
            ))),
            None => Err(Error::InvalidArgument("empty moment vector".into())),
        }
    }

    pub fn kind(&self) -> MomentKind {
        self.kind
    }

    pub fn mean(&self) -> &Rational {
        &self.mean
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Highest moment order carried.
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    fn expect_kind(&self, want: MomentKind) -> Result<()> {
        if self.kind == want {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "expected {} moments, got {}",
                want.as_str(),
                self.kind.as_str()
            )))
        }
    }
}

/// M_m = sum_j b_{m,j,0} F_j / j!
pub fn ordinary_from_factorial(f: &MomentVector) -> Result<MomentVector> {
    f.expect_kind(MomentKind::Factorial)?;
    let b = Msn2Table::new(f.order(), &Rational::zero());
    let values = weighted_sums(f.values(), |m, j| {
        b.get(m, j) / Rational::from(factorial(j as usize))
    });
    MomentVector::ordinary(values)
}

/// F_m = sum_j c_{m,j,0} M_j
pub fn factorial_from_ordinary(m: &MomentVector) -> Result<MomentVector> {
    m.expect_kind(MomentKind::Ordinary)?;
    let c = Msn1Table::new(m.order(), &Rational::zero());
    let values = weighted_sums(m.values(), |i, j| c.get(i, j));
    MomentVector::factorial(values)
}

/// C_m = sum_j C(m,j) (-M_1)^{m-j} M_j
pub fn central_from_ordinary(m: &MomentVector) -> Result<MomentVector> {
    m.expect_kind(MomentKind::Ordinary)?;
    let neg_mean = -m.mean();
    let values = weighted_sums(m.values(), |i, j| {
        Rational::from(binomial_int(i, j)) * rat_pow(&neg_mean, (i - j) as usize)
    });
    MomentVector::central(values, m.mean().clone())
}

/// M_m = sum_r C(m,r) M_1^{m-r} C_r
pub fn ordinary_from_central(c: &MomentVector) -> Result<MomentVector> {
    c.expect_kind(MomentKind::Central)?;
    let values = weighted_sums(c.values(), |m, r| {
        Rational::from(binomial_int(m, r)) * rat_pow(c.mean(), (m - r) as usize)
    });
    MomentVector::ordinary(values)
}

/// C_m = sum_j b_{m,j,-F_1} F_j / j!
pub fn central_from_factorial(f: &MomentVector) -> Result<MomentVector> {
    f.expect_kind(MomentKind::Factorial)?;
    let b = Msn2Table::new(f.order(), &-f.mean());
    let values = weighted_sums(f.values(), |m, j| {
        b.get(m, j) / Rational::from(factorial(j as usize))
    });
    MomentVector::central(values, f.mean().clone())
}

/// F_m = sum_j c_{m,j,-M_1} C_j
pub fn factorial_from_central(c: &MomentVector) -> Result<MomentVector> {
    c.expect_kind(MomentKind::Central)?;
    let table = Msn1Table::new(c.order(), &-c.mean());
    let values = weighted_sums(c.values(), |m, j| table.get(m, j));
    MomentVector::factorial(values)
}

/// Convert to any kind; same kind is a copy.
pub fn convert(v: &MomentVector, to: MomentKind) -> Result<MomentVector> {
    use MomentKind::*;
    match (v.kind(), to) {
        (from, to) if from == to => Ok(v.clone()),
        (Factorial, Ordinary) => ordinary_from_factorial(v),
        (Ordinary, Factorial) => factorial_from_ordinary(v),
        (Ordinary, Central) => central_from_ordinary(v),
        (Central, Ordinary) => ordinary_from_central(v),
        (Factorial, Central) => central_from_factorial(v),
        (Central, Factorial) => factorial_from_central(v),
        _ => unreachable!("all kind pairs handled"),
    }
}

fn weighted_sums(values: &[Rational], weight: impl Fn(i64, i64) -> Rational) -> Vec<Rational> {
    (0..values.len() as i64)
        .map(|m| {
            let mut acc = Rational::zero();
            for (j, v) in values.iter().take(m as usize + 1).enumerate() {
                acc += weight(m, j as i64) * v;
            }
            acc
        })
        .collect()
}

/// Ordinary Poisson moments M_m = sum_j S_{m,j} lambda^j up to m_max.
pub fn poisson_moments(lambda: &Rational, m_max: usize) -> Result<MomentVector> {
    if !lambda.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "Poisson rate must be positive, got {lambda}"
        )));
    }
    let s = StirlingSecond::new(m_max);
    let values = (0..=m_max as i64)
        .map(|m| {
            let mut acc = Rational::zero();
            for j in 0..=m {
                acc += Rational::from(s.get(m, j)) * rat_pow(lambda, j as usize);
            }
            acc
        })
        .collect();
    MomentVector::ordinary(values)
}

/// Distribution of the absorption step of a substochastic chain: start
/// row `p`, transient block `P`, absorption forced eventually because
/// I - P is invertible. Starting mass sums to 1, so the support is
/// {1, 2, ...}.
#[derive(Clone, Debug)]
pub struct PhaseType {
    start: Matrix,     // 1 x d
    transient: Matrix, // d x d
    resolvent: Matrix, // (I - P)^-1, cached for every moment formula
    ones: Matrix,      // d x 1
}

impl PhaseType {
    pub fn new(start: Vec<Rational>, transient: Vec<Vec<Rational>>) -> Result<Self> {
        let d = start.len();
        if d == 0 {
            return Err(Error::InvalidArgument("empty start vector".into()));
        }
        if transient.len() != d || transient.iter().any(|row| row.len() != d) {
            return Err(Error::InvalidArgument(format!(
                "transient matrix must be {d}x{d} to match the start vector"
            )));
        }
        if start.iter().any(Signed::is_negative)
            || transient.iter().flatten().any(Signed::is_negative)
        {
            return Err(Error::InvalidArgument(
                "start and transient entries must be nonnegative".into(),
            ));
        }
        let total: Rational = start.iter().cloned().sum();
        if !total.is_one() {
            return Err(Error::InvalidArgument(format!(
                "start vector must sum to 1, got {total}"
            )));
        }
        let transient = Matrix::from_rows(transient);
        let mut some_strict = false;
        for r in 0..d {
            let row_sum = transient.row_sum(r);
            if row_sum > Rational::one() {
                return Err(Error::InvalidArgument(format!(
                    "transient row {r} sums to {row_sum} > 1"
                )));
            }
            some_strict |= row_sum < Rational::one();
        }
        if !some_strict {
            return Err(Error::InvalidArgument(
                "every transient row sums to 1; absorption is unreachable".into(),
            ));
        }
        let identity = Matrix::identity(d);
        let resolvent = (&identity - &transient).inverse()?;
        Ok(PhaseType {
            start: Matrix::row_vector(start),
            transient,
            resolvent,
            ones: Matrix::column_of_ones(d),
        })
    }

    pub fn dimension(&self) -> usize {
        self.start.cols()
    }

    /// Largest transient row sum; the geometric decay rate the tail
    /// bound works with.
    pub fn max_row_sum(&self) -> Rational {
        (0..self.dimension())
            .map(|r| self.transient.row_sum(r))
            .max()
            .expect("at least one row")
    }

    fn mass(&self, m: &Matrix) -> Rational {
        (&(&self.start * m) * &self.ones).scalar()
    }

    /// F_m = m! p P^{m-1} (I-P)^{-m} e for m >= 1; F_0 = 1.
    pub fn factorial_moment(&self, m: usize) -> Rational {
        if m == 0 {
            return Rational::one();
        }
        let mat = &self.transient.pow(m - 1) * &self.resolvent.pow(m);
        Rational::from(factorial(m)) * self.mass(&mat)
    }

    /// M_m = sum_r b_{m,r,1} p (P (I-P)^{-1})^r e.
    pub fn ordinary_moment(&self, m: usize) -> Rational {
        let b = Msn2Table::new(m, &Rational::one());
        let step = &self.transient * &self.resolvent;
        let mut row = self.start.clone();
        let mut acc = Rational::zero();
        for r in 0..=m {
            acc += b.get(m as i64, r as i64) * (&row * &self.ones).scalar();
            if r < m {
                row = &row * &step;
            }
        }
        acc
    }

    pub fn factorial_moments(&self, m_max: usize) -> MomentVector {
        let values = (0..=m_max).map(|m| self.factorial_moment(m)).collect();
        MomentVector::factorial(values).expect("F_0 = 1 by construction")
    }

    pub fn ordinary_moments(&self, m_max: usize) -> MomentVector {
        let values = (0..=m_max).map(|m| self.ordinary_moment(m)).collect();
        MomentVector::ordinary(values).expect("M_0 = 1 by construction")
    }

    /// Exact masses P(X = n) = p P^{n-1} (I-P) e for n = 1..n_max, plus
    /// the leftover mass p P^{n_max} e beyond the cutoff.
    pub fn pmf(&self, n_max: usize) -> TruncatedPmf {
        let absorb = &Matrix::identity(self.dimension()) - &self.transient;
        let mut row = self.start.clone();
        let mut probs = Vec::with_capacity(n_max);
        for _ in 1..=n_max {
            probs.push((&(&row * &absorb) * &self.ones).scalar());
            row = &row * &self.transient;
        }
        let tail_mass = (&row * &self.ones).scalar();
        TruncatedPmf { probs, tail_mass }
    }
}

/// Masses for n = 1..=support_max and the exact mass not enumerated.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedPmf {
    probs: Vec<Rational>, // index t holds P(X = t+1)
    tail_mass: Rational,
}

impl TruncatedPmf {
    pub fn support_max(&self) -> usize {
        self.probs.len()
    }

    pub fn prob(&self, n: usize) -> &Rational {
        assert!((1..=self.probs.len()).contains(&n), "n outside enumerated support");
        &self.probs[n - 1]
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    pub fn tail_mass(&self) -> &Rational {
        &self.tail_mass
    }
}

/// Moment of the enumerated part only: sum over n = 1..=support_max of
/// weight(n) * P(X = n), where the weight is n^m, (n)_m, or (n-center)^m
/// by kind. The tail contribution is NOT included; bound it separately.
pub fn truncated_moment(
    pmf: &TruncatedPmf,
    kind: MomentKind,
    m: usize,
    center: &Rational,
) -> Rational {
    let mut acc = Rational::zero();
    for (t, p) in pmf.probs().iter().enumerate() {
        let n = rat_int(t as i64 + 1);
        let weight = match kind {
            MomentKind::Ordinary => rat_pow(&n, m),
            MomentKind::Factorial => falling_factorial(&n, m),
            MomentKind::Central => rat_pow(&(n - center), m),
        };
        acc += weight * p;
    }
    acc
}

/// Exact upper bound for the moment mass beyond a truncation point:
/// if every mass beyond n_trunc satisfies P(X = n_trunc + j) <=
/// tail_mass * rho^{j-1} (true for phase type with rho the largest
/// transient row sum), then
///
///   sum_{j>=1} (n_trunc+j)^m P(X = n_trunc+j)
///     <= tail_mass * sum_t C(m,t) (n_trunc+1)^{m-t} * sum_{i>=0} i^t rho^i
///
/// and the inner geometric-power sums close exactly via second-kind
/// numbers. Falling-factorial weights (n)_m <= n^m are covered by the
/// same bound. Requires 0 <= rho < 1.
pub fn tail_moment_bound(
    tail_mass: &Rational,
    rho: &Rational,
    n_trunc: usize,
    m: usize,
) -> Result<Rational> {
    if rho.is_negative() || *rho >= Rational::one() {
        return Err(Error::InvalidArgument(format!(
            "tail bound needs a decay rate in [0, 1), got {rho}"
        )));
    }
    let s = StirlingSecond::new(m);
    // sum_{i>=0} i^t rho^i = sum_u S(t,u) u! rho^u / (1-rho)^{u+1}
    let power_sum = |t: usize| -> Rational {
        let mut acc = Rational::zero();
        for u in 0..=t {
            let numer = Rational::from(s.get(t as i64, u as i64) * factorial(u)) * rat_pow(rho, u);
            acc += numer / rat_pow(&(Rational::one() - rho), u + 1);
        }
        acc
    };
    let shifted = rat_int(n_trunc as i64 + 1);
    let mut acc = Rational::zero();
    for t in 0..=m {
        acc += Rational::from(binomial_int(m as i64, t as i64))
            * rat_pow(&shifted, m - t)
            * power_sum(t);
    }
    Ok(tail_mass * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn rv(ints: &[i64]) -> Vec<Rational> {
        ints.iter().map(|&n| rat_int(n)).collect()
    }

    fn geometric_half() -> PhaseType {
        PhaseType::new(vec![rat_int(1)], vec![vec![rat(1, 2)]]).unwrap()
    }

    #[test]
    fn factorial_to_ordinary_pinned() {
        let f = MomentVector::factorial(rv(&[1, 2, 4, 8])).unwrap();
        let m = ordinary_from_factorial(&f).unwrap();
        assert_eq!(m.values(), rv(&[1, 2, 6, 22]).as_slice());
        assert_eq!(m.mean(), &rat_int(2));
        let back = factorial_from_ordinary(&m).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn ordinary_to_central_pinned() {
        let m = MomentVector::ordinary(rv(&[1, 2, 6])).unwrap();
        let c = central_from_ordinary(&m).unwrap();
        assert_eq!(c.values(), rv(&[1, 0, 2]).as_slice());
        assert_eq!(c.mean(), &rat_int(2));
        assert_eq!(ordinary_from_central(&c).unwrap(), m);
    }

    #[test]
    fn factorial_to_central_pinned() {
        let f = MomentVector::factorial(rv(&[1, 2, 4, 8])).unwrap();
        let c = central_from_factorial(&f).unwrap();
        assert_eq!(c.values(), rv(&[1, 0, 2, 2]).as_slice());
        let back = factorial_from_central(&c).unwrap();
        assert_eq!(back, f);
        let short = MomentVector::central(rv(&[1, 0, 2]), rat_int(2)).unwrap();
        assert_eq!(factorial_from_central(&short).unwrap().values(), rv(&[1, 2, 4]).as_slice());
    }

    #[test]
    fn degenerate_vectors_convert_cleanly() {
        let point = MomentVector::ordinary(rv(&[1, 0, 0])).unwrap();
        assert_eq!(factorial_from_ordinary(&point).unwrap().values(), rv(&[1, 0, 0]).as_slice());
        assert_eq!(central_from_ordinary(&point).unwrap().values(), rv(&[1, 0, 0]).as_slice());
        let pair = MomentVector::ordinary(vec![rat_int(1), rat(5, 3)]).unwrap();
        assert_eq!(central_from_ordinary(&pair).unwrap().values(), rv(&[1, 0]).as_slice());
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let m = MomentVector::ordinary(rv(&[1, 2])).unwrap();
        assert!(matches!(ordinary_from_factorial(&m), Err(Error::InvalidArgument(_))));
        let f = MomentVector::factorial(rv(&[1, 2])).unwrap();
        assert!(matches!(factorial_from_ordinary(&f), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn vector_invariants_are_enforced() {
        assert!(MomentVector::ordinary(vec![]).is_err());
        assert!(MomentVector::ordinary(rv(&[2, 1])).is_err());
        assert!(MomentVector::central(rv(&[1, 1]), rat_int(1)).is_err());
        assert!(MomentVector::central(rv(&[1, 0, 5]), rat_int(1)).is_ok());
    }

    #[test]
    fn poisson_pinned_and_validated() {
        let m = poisson_moments(&rat_int(2), 3).unwrap();
        assert_eq!(m.values(), rv(&[1, 2, 6, 22]).as_slice());
        let tiny = poisson_moments(&rat(7, 3), 1).unwrap();
        assert_eq!(tiny.values(), &[rat_int(1), rat(7, 3)]);
        assert!(poisson_moments(&rat_int(0), 3).is_err());
        assert!(poisson_moments(&rat_int(-1), 3).is_err());
    }

    #[test]
    fn poisson_factorial_moments_are_rate_powers() {
        for lambda in [rat_int(1), rat_int(2), rat(7, 3)] {
            let m = poisson_moments(&lambda, 10).unwrap();
            let f = factorial_from_ordinary(&m).unwrap();
            for (order, value) in f.values().iter().enumerate() {
                assert_eq!(value, &rat_pow(&lambda, order), "lambda={lambda}, m={order}");
            }
        }
    }

    #[test]
    fn phase_type_validation() {
        let half = rat(1, 2);
        let zero = Rational::zero();
        let usage = |r: crate::error::Result<PhaseType>| {
            assert!(matches!(r, Err(Error::InvalidArgument(_))));
        };
        usage(PhaseType::new(vec![], vec![]));
        // not square
        usage(PhaseType::new(vec![rat_int(1)], vec![vec![half.clone(), half.clone()]]));
        // negative entry
        usage(PhaseType::new(vec![rat_int(1)], vec![vec![rat(-1, 2)]]));
        // start does not sum to 1
        usage(PhaseType::new(
            vec![half.clone(), rat(1, 3)],
            vec![vec![zero.clone(); 2], vec![zero.clone(); 2]],
        ));
        // a row sum above 1
        usage(PhaseType::new(vec![rat_int(1)], vec![vec![rat(3, 2)]]));
        // every row stochastic: the chain never absorbs
        usage(PhaseType::new(
            vec![half.clone(), half.clone()],
            vec![vec![half.clone(), half.clone()], vec![zero.clone(), rat_int(1)]],
        ));
        // reducible chain stuck in a stochastic state: I - P singular
        // even though one row sum is below 1
        let stuck = PhaseType::new(
            vec![half.clone(), half.clone()],
            vec![vec![rat_int(1), zero.clone()], vec![zero.clone(), half.clone()]],
        );
        assert!(matches!(stuck, Err(Error::SingularMatrix { .. })));
    }

    #[test]
    fn geometric_moments_and_pmf() {
        let ph = geometric_half();
        assert_eq!(ph.factorial_moment(1), rat_int(2));
        assert_eq!(ph.factorial_moment(2), rat_int(4));
        assert_eq!(ph.ordinary_moment(1), rat_int(2));
        assert_eq!(ph.ordinary_moment(2), rat_int(6));
        assert_eq!(
            ordinary_from_factorial(&ph.factorial_moments(6)).unwrap(),
            ph.ordinary_moments(6)
        );

        let pmf = ph.pmf(3);
        assert_eq!(pmf.probs(), &[rat(1, 2), rat(1, 4), rat(1, 8)]);
        assert_eq!(pmf.tail_mass(), &rat(1, 8));
        let total: Rational = pmf.probs().iter().cloned().sum::<Rational>() + pmf.tail_mass();
        assert!(total.is_one());
    }

    #[test]
    fn truncated_moments_of_a_point_mass() {
        // P = 0 puts all mass on n = 1.
        let ph = PhaseType::new(vec![rat_int(1)], vec![vec![Rational::zero()]]).unwrap();
        let pmf = ph.pmf(4);
        assert!(pmf.tail_mass().is_zero());
        let zero = Rational::zero();
        for m in 0..5 {
            assert_eq!(truncated_moment(&pmf, MomentKind::Ordinary, m, &zero), rat_int(1));
        }
        assert_eq!(truncated_moment(&pmf, MomentKind::Factorial, 2, &zero), Rational::zero());
        assert_eq!(
            truncated_moment(&pmf, MomentKind::Central, 2, &rat_int(1)),
            Rational::zero()
        );
    }

    #[test]
    fn truncation_plus_bound_brackets_the_true_moment() {
        // Geometric(1/2) truncated at 60 terms: the enumerated part of
        // M_2 lands within the tail bound of the exact value 6, and the
        // bound itself is far below 2^-40.
        let ph = geometric_half();
        let pmf = ph.pmf(60);
        let approx = truncated_moment(&pmf, MomentKind::Ordinary, 2, &Rational::zero());
        let bound = tail_moment_bound(pmf.tail_mass(), &rat(1, 2), 60, 2).unwrap();
        let gap = rat_int(6) - &approx;
        assert!(gap.is_positive() && gap <= bound);
        assert!(bound < rat_pow(&rat(1, 2), 40));
        // m = 0: the enumerated masses reproduce 1 - tail exactly.
        assert_eq!(
            truncated_moment(&pmf, MomentKind::Ordinary, 0, &Rational::zero()),
            Rational::one() - pmf.tail_mass()
        );
    }

    #[test]
    fn tail_bound_rejects_nondecaying_rates() {
        assert!(tail_moment_bound(&rat(1, 8), &rat_int(1), 3, 2).is_err());
        assert!(tail_moment_bound(&rat(1, 8), &rat(-1, 2), 3, 2).is_err());
        // rho = 0 is fine: only the first step past the cutoff remains.
        let b = tail_moment_bound(&rat(1, 8), &Rational::zero(), 3, 2).unwrap();
        assert_eq!(b, rat(16, 8));
    }

    #[test]
    fn two_phase_formulas_agree_with_each_other() {
        let ph = PhaseType::new(
            vec![rat(1, 2), rat(1, 2)],
            vec![vec![rat(1, 4), rat(1, 4)], vec![Rational::zero(), rat(1, 2)]],
        )
        .unwrap();
        assert_eq!(ph.max_row_sum(), rat(1, 2));
        assert_eq!(
            factorial_from_ordinary(&ph.ordinary_moments(4)).unwrap(),
            ph.factorial_moments(4)
        );
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_vector() -> impl Strategy<Value = MomentVector> {
        let tail = proptest::collection::vec(arb_rational(), 7);
        (0..3usize, arb_rational(), tail).prop_map(|(which, mean, tail)| {
            let mut values = vec![rat_int(1)];
            values.extend(tail);
            match which {
                0 => MomentVector::ordinary(values).unwrap(),
                1 => MomentVector::factorial(values).unwrap(),
                _ => {
                    values[1] = Rational::zero();
                    MomentVector::central(values, mean).unwrap()
                }
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn conversions_round_trip(v in arb_vector()) {
            for to in [MomentKind::Ordinary, MomentKind::Factorial, MomentKind::Central] {
                let there = convert(&v, to).unwrap();
                let back = convert(&there, v.kind()).unwrap();
                prop_assert_eq!(&back, &v);
            }
        }

        #[test]
        fn conversion_triangle_commutes(v in arb_vector()) {
            use MomentKind::*;
            for (via, to) in [
                (Ordinary, Central), (Ordinary, Factorial),
                (Factorial, Ordinary), (Factorial, Central),
                (Central, Ordinary), (Central, Factorial),
            ] {
                let direct = convert(&v, to).unwrap();
                let detour = convert(&convert(&v, via).unwrap(), to).unwrap();
                prop_assert_eq!(&detour, &direct);
            }
        }
    }
}
