//! Named verification suite for the c/b families.
//!
//! Every entry in the catalog evaluates both sides of one proven identity
//! exactly over a finite grid of indices and shift parameters, recording
//! each mismatch instead of stopping at the first. A report passes iff it
//! has no failures, so a full catalog run is a machine check of the whole
//! identity set.
//!
//! Multi-part identities index their sub-statements 0..N in the first
//! entry of `indices` (part a = 0, b = 1, ...); the `parameter_ranges`
//! string of each report spells out the grid that was covered.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::msn::{msn1_def, msn1_egf, msn1_ogf, Msn1Table, Msn2Table};
use crate::poly::Polynomial;
use crate::scalar::{
    binomial_int, binomial_rat, factorial, falling_factorial, format_rational, is_integer,
    neg_one_pow, rat_int, rat_pow, Rational,
};
use crate::stirling::{harmonic, RStirlingFirst, StirlingFirst, StirlingSecond};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityName {
    LemmaBasic,
    OgfSplit,
    PowerExpansion,
    ClosedForms,
    HarmonicClosedForm,
    SumEval,
    SumCorollary,
    Recursions,
    RStirlingMatch,
    Inversion,
    CrossInverse,
    Convolution,
    ConvolutionCorollary,
    BinomialShift,
    BinomialShiftCorollary,
    EgfMatch,
}

pub const CATALOG: [IdentityName; 16] = [
    IdentityName::LemmaBasic,
    IdentityName::OgfSplit,
    IdentityName::PowerExpansion,
    IdentityName::ClosedForms,
    IdentityName::HarmonicClosedForm,
    IdentityName::SumEval,
    IdentityName::SumCorollary,
    IdentityName::Recursions,
    IdentityName::RStirlingMatch,
    IdentityName::Inversion,
    IdentityName::CrossInverse,
    IdentityName::Convolution,
    IdentityName::ConvolutionCorollary,
    IdentityName::BinomialShift,
    IdentityName::BinomialShiftCorollary,
    IdentityName::EgfMatch,
];

impl IdentityName {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityName::LemmaBasic => "lemma_basic",
            IdentityName::OgfSplit => "ogf_split",
            IdentityName::PowerExpansion => "power_expansion",
            IdentityName::ClosedForms => "closed_forms",
            IdentityName::HarmonicClosedForm => "harmonic_closed_form",
            IdentityName::SumEval => "sum_eval",
            IdentityName::SumCorollary => "sum_corollary",
            IdentityName::Recursions => "recursions",
            IdentityName::RStirlingMatch => "r_stirling_match",
            IdentityName::Inversion => "inversion",
            IdentityName::CrossInverse => "cross_inverse",
            IdentityName::Convolution => "convolution",
            IdentityName::ConvolutionCorollary => "convolution_corollary",
            IdentityName::BinomialShift => "binomial_shift",
            IdentityName::BinomialShiftCorollary => "binomial_shift_corollary",
            IdentityName::EgfMatch => "egf_match",
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CATALOG
            .iter()
            .copied()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One grid point where the two sides disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub indices: Vec<i64>,
    pub k_values: Vec<Rational>,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: IdentityName,
    pub parameter_ranges: String,
    pub checked: u64,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    checked: u64,
    failures: Vec<IdentityFailure>,
}

impl Checker {
    fn new() -> Self {
        Checker { checked: 0, failures: Vec::new() }
    }

    fn eq(&mut self, indices: &[i64], ks: &[&Rational], lhs: Rational, rhs: Rational) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(IdentityFailure {
                indices: indices.to_vec(),
                k_values: ks.iter().map(|k| (*k).clone()).collect(),
                lhs,
                rhs,
            });
        }
    }

    /// Coefficient-wise comparison; the term degree is appended to the
    /// indices so a report pinpoints the exact monomial.
    fn eq_poly(&mut self, indices: &[i64], ks: &[&Rational], lhs: &Polynomial, rhs: &Polynomial) {
        let deg = lhs.degree().unwrap_or(0).max(rhs.degree().unwrap_or(0));
        for t in 0..=deg {
            let mut with_term = indices.to_vec();
            with_term.push(t as i64);
            self.eq(&with_term, ks, lhs.coeff(t), rhs.coeff(t));
        }
    }

    fn finish(mut self, identity: IdentityName, parameter_ranges: String) -> IdentityReport {
        self.failures
            .sort_by(|a, b| a.indices.cmp(&b.indices).then_with(|| a.k_values.cmp(&b.k_values)));
        IdentityReport {
            identity,
            parameter_ranges,
            checked: self.checked,
            failures: self.failures,
        }
    }
}

/// Lazily built c/b triangles, one per shift value, large enough for
/// every index the grid can touch.
struct Tables {
    n: usize,
    msn1: HashMap<Rational, Msn1Table>,
    msn2: HashMap<Rational, Msn2Table>,
}

impl Tables {
    fn new(n: usize) -> Self {
        Tables { n, msn1: HashMap::new(), msn2: HashMap::new() }
    }

    fn c(&mut self, i: i64, j: i64, k: &Rational) -> Rational {
        let n = self.n;
        self.msn1.entry(k.clone()).or_insert_with(|| Msn1Table::new(n, k)).get(i, j)
    }

    fn b(&mut self, i: i64, j: i64, k: &Rational) -> Rational {
        let n = self.n;
        self.msn2.entry(k.clone()).or_insert_with(|| Msn2Table::new(n, k)).get(i, j)
    }
}

fn fmt_ks(ks: &[Rational]) -> String {
    let parts: Vec<String> = ks.iter().map(format_rational).collect();
    format!("{{{}}}", parts.join(", "))
}

fn indicator(cond: bool) -> Rational {
    if cond {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn require_integer_ks(identity: &'static str, ks: &[Rational]) -> Result<()> {
    for k in ks {
        if !is_integer(k) {
            return Err(Error::NonIntegerK { identity, k: k.clone() });
        }
    }
    Ok(())
}

/// Evaluate one named identity exactly over 0 <= j <= i <= n_max and the
/// supplied shift values (pairs of them where the statement takes two).
///
/// Two entries constrain their shifts: `harmonic_closed_form` is stated
/// for integer k >= 1 and `cross_inverse` for integer pairs, so handing
/// those a non-integer k is a usage error. Everything else accepts any
/// rational k.
pub fn verify_identity(name: IdentityName, n_max: usize, ks: &[Rational]) -> Result<IdentityReport> {
    let mut ch = Checker::new();
    // headroom: several statements reach i+1 or i+n beyond the grid top
    let mut t = Tables::new(n_max + 4);
    let ranges = match name {
        IdentityName::LemmaBasic => check_lemma_basic(&mut ch, &mut t, n_max, ks),
        IdentityName::OgfSplit => check_ogf_split(&mut ch, &mut t, n_max, ks),
        IdentityName::PowerExpansion => check_power_expansion(&mut ch, n_max, ks),
        IdentityName::ClosedForms => check_closed_forms(&mut ch, &mut t, n_max, ks),
        IdentityName::HarmonicClosedForm => check_harmonic_closed_form(&mut ch, &mut t, n_max, ks)?,
        IdentityName::SumEval => check_sum_eval(&mut ch, &mut t, n_max, ks),
        IdentityName::SumCorollary => check_sum_corollary(&mut ch, &mut t, n_max, ks),
        IdentityName::Recursions => check_recursions(&mut ch, n_max, ks),
        IdentityName::RStirlingMatch => check_r_stirling_match(&mut ch, &mut t, n_max),
        IdentityName::Inversion => check_inversion(&mut ch, &mut t, n_max, ks),
        IdentityName::CrossInverse => check_cross_inverse(&mut ch, &mut t, n_max, ks)?,
        IdentityName::Convolution => check_convolution(&mut ch, &mut t, n_max, ks),
        IdentityName::ConvolutionCorollary => check_convolution_corollary(&mut ch, &mut t, n_max, ks),
        IdentityName::BinomialShift => check_binomial_shift(&mut ch, &mut t, n_max, ks),
        IdentityName::BinomialShiftCorollary => {
            check_binomial_shift_corollary(&mut ch, &mut t, n_max, ks)
        }
        IdentityName::EgfMatch => check_egf_match(&mut ch, &mut t, n_max, ks),
    };
    Ok(ch.finish(name, ranges))
}

/// Run the whole catalog, narrowing the shift list per identity so one
/// mixed list can drive everything: integer-only statements silently
/// drop the shifts they cannot be stated for.
pub fn verify_all(n_max: usize, ks: &[Rational]) -> Vec<IdentityReport> {
    CATALOG
        .iter()
        .map(|&name| {
            let narrowed = admissible_ks(name, ks);
            verify_identity(name, n_max, &narrowed)
                .expect("narrowed shift values satisfy the identity's domain")
        })
        .collect()
}

/// The subset of `ks` an identity can be stated for.
pub fn admissible_ks(name: IdentityName, ks: &[Rational]) -> Vec<Rational> {
    match name {
        IdentityName::HarmonicClosedForm => {
            ks.iter().filter(|k| is_integer(k) && **k >= Rational::one()).cloned().collect()
        }
        IdentityName::CrossInverse => ks.iter().filter(|k| is_integer(k)).cloned().collect(),
        _ => ks.to_vec(),
    }
}

// part a: c_{i,j,0} = s_{i,j}; b: c_{i,j,k} = 0 above the diagonal;
// c: unit diagonal; d: c_{i+1,i,k} = -C(i+1,2) - k(i+1)
fn check_lemma_basic(ch: &mut Checker, t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    let s = StirlingFirst::new(n_max);
    let zero = Rational::zero();
    for i in 0..=n {
        for j in 0..=i {
            ch.eq(&[0, i, j], &[&zero], t.c(i, j, &zero), Rational::from(s.get(i, j)));
        }
    }
    for k in ks {
        for i in 0..=n {
            for j in i + 1..=i + 2 {
                ch.eq(&[1, i, j], &[k], msn1_def(i, j, k), Rational::zero());
            }
            ch.eq(&[2, i, i], &[k], t.c(i, i, k), Rational::one());
            let rhs = Rational::from(-binomial_int(i + 1, 2)) - k * rat_int(i + 1);
            ch.eq(&[3, i], &[k], t.c(i + 1, i, k), rhs);
        }
    }
    format!("parts a-d as 0-3; 0 <= j <= i <= {n_max}; k in {}", fmt_ks(ks))
}

// products of row polynomials: split at any cut (b), single step (c),
// shift exchange (d), index/shift symmetry (e), prefix completion (f);
// e and f only make sense for integer k >= 0
fn check_ogf_split(ch: &mut Checker, _t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    for k in ks {
        for n2 in 0..=n {
            for i in 0..=n - n2 {
                let lhs = msn1_ogf((i + n2) as usize, k);
                let rhs = &msn1_ogf(n2 as usize, k) * &msn1_ogf(i as usize, &(k + rat_int(n2)));
                ch.eq_poly(&[1, n2, i], &[k], &lhs, &rhs);
            }
        }
        for i in 0..n {
            let lhs = msn1_ogf((i + 1) as usize, k);
            let rhs = &msn1_ogf(1, k) * &msn1_ogf(i as usize, &(k + Rational::one()));
            ch.eq_poly(&[2, i], &[k], &lhs, &rhs);
        }
        for i in 0..=n {
            let lhs = &msn1_ogf(i as usize, k) * &Polynomial::x_minus(&(k + rat_int(i)));
            let rhs = &msn1_ogf(i as usize, &(k + Rational::one())) * &Polynomial::x_minus(k);
            ch.eq_poly(&[3, i], &[k], &lhs, &rhs);
        }
        if is_integer(k) && !k.is_negative() {
            let kk = k.to_integer().to_usize().expect("small nonnegative integer shift");
            let zero = Rational::zero();
            for i in 0..=n {
                let gi_k = msn1_ogf(i as usize, k);
                let f_k = msn1_ogf(kk, &zero);
                let f_i = msn1_ogf(i as usize, &zero);
                let g_ki = msn1_ogf(kk, &rat_int(i));
                ch.eq_poly(&[4, i], &[k], &(&gi_k * &f_k), &(&g_ki * &f_i));
                let lhs = msn1_ogf(i as usize + kk, &zero);
                ch.eq_poly(&[5, i], &[k], &lhs, &(&f_k * &gi_k));
            }
        }
    }
    format!(
        "parts b-f as 1-5; 0 <= i, i+n <= {n_max}; k in {}; parts e,f at integer k >= 0 only",
        fmt_ks(ks)
    )
}

// (x-k)^i re-expanded in the row polynomials through the second kind
fn check_power_expansion(ch: &mut Checker, n_max: usize, ks: &[Rational]) -> String {
    let s2 = StirlingSecond::new(n_max);
    for k in ks {
        for i in 0..=n_max {
            let lhs = Polynomial::x_minus(k).pow(i);
            let mut rhs = Polynomial::zero();
            for r in 0..=i {
                let coeff = Rational::from(s2.get(i as i64, r as i64));
                rhs = &rhs + &msn1_ogf(r, k).scale(&coeff);
            }
            ch.eq_poly(&[i as i64], &[k], &lhs, &rhs);
        }
    }
    format!("0 <= i <= {n_max}; k in {}", fmt_ks(ks))
}

// column 0 as a falling factorial (a, and b at shift 1), the alternating
// harmonic value at shift 1 (d), and the two row-shift relations into
// the classical triangle (e, f)
fn check_closed_forms(ch: &mut Checker, t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    let s = StirlingFirst::new(n_max + 1);
    let one = Rational::one();
    let minus_one = -Rational::one();
    for k in ks {
        for i in 0..=n {
            ch.eq(&[0, i], &[k], t.c(i, 0, k), falling_factorial(&-k, i as usize));
        }
    }
    for i in 0..=n {
        let sign = Rational::from(neg_one_pow(i));
        let fact = Rational::from(factorial(i as usize));
        ch.eq(&[1, i], &[&one], t.c(i, 0, &one), &sign * &fact);
        let alt = Rational::from(neg_one_pow(i + 1)) * &fact * harmonic(i as usize);
        ch.eq(&[3, i], &[&one], t.c(i, 1, &one), alt);
        for j in 0..=i + 1 {
            ch.eq(&[4, i, j], &[&one], t.c(i, j - 1, &one), Rational::from(s.get(i + 1, j)));
            let rhs = Rational::from(s.get(i, j - 1) + s.get(i, j));
            ch.eq(&[5, i, j], &[&minus_one], t.c(i + 1, j, &minus_one), rhs);
        }
    }
    format!(
        "parts a,b,d,e,f as 0,1,3,4,5; 0 <= i <= {n_max}, 0 <= j <= i+1; k in {} for part a",
        fmt_ks(ks)
    )
}

// column 1 in terms of harmonic numbers; stated for integer k >= 1
// (the general-k statement needs H_{k-1}, so smaller shifts are skipped)
fn check_harmonic_closed_form(
    ch: &mut Checker,
    t: &mut Tables,
    n_max: usize,
    ks: &[Rational],
) -> Result<String> {
    require_integer_ks("harmonic_closed_form", ks)?;
    for k in ks {
        if *k < Rational::one() {
            continue;
        }
        let kk = k.to_integer().to_usize().expect("small positive integer shift");
        for i in 0..=n_max {
            let lhs = t.c(i as i64, 1, k);
            let h_diff = harmonic(kk + i - 1) - harmonic(kk - 1);
            let rhs = Rational::from(neg_one_pow(i as i64 + 1) * factorial(i))
                * binomial_rat(&(k + rat_int(i as i64 - 1)), i)
                * h_diff;
            ch.eq(&[i as i64], &[k], lhs, rhs);
        }
    }
    Ok(format!("0 <= i <= {n_max}; integer k >= 1 from {}", fmt_ks(ks)))
}

// row evaluated at a point: sum_r c_{i,r,k1} k2^r = (k2-k1)_i.
// The falling factorial is oriented as the generating-function argument
// k2-k1; evaluating (i,k1,k2) = (1,0,1) fixes the orientation.
fn check_sum_eval(ch: &mut Checker, t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    for k1 in ks {
        for k2 in ks {
            for i in 0..=n {
                let mut lhs = Rational::zero();
                for r in 0..=i {
                    lhs += t.c(i, r, k1) * rat_pow(k2, r as usize);
                }
                let rhs = falling_factorial(&(k2 - k1), i as usize);
                ch.eq(&[i], &[k1, k2], lhs, rhs);
            }
        }
    }
    format!("0 <= i <= {n_max}; (k1, k2) over all pairs from {}", fmt_ks(ks))
}

fn row_sum_at(t: &mut Tables, i: i64, k: &Rational, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for r in 0..=i {
        acc += t.c(i, r, k) * rat_pow(x, r as usize);
    }
    acc
}

// consequences of the row evaluation: plain row sums (a, b), evaluation
// at j+k and i+k (c, d), the two zero characterizations (e, f, over
// integer grids where membership is meaningful), and the shift-2 column
// value (g)
fn check_sum_corollary(ch: &mut Checker, t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    let one = Rational::one();
    let two = rat_int(2);
    for k in ks {
        for i in 0..=n {
            let lhs = row_sum_at(t, i, k, &one);
            ch.eq(&[0, i], &[k], lhs, t.c(i, 0, &(k - &one)));
            let at_i_plus_k = row_sum_at(t, i, k, &(k + rat_int(i)));
            ch.eq(&[3, i], &[k], at_i_plus_k, Rational::from(factorial(i as usize)));
        }
        for j in ks {
            for i in 0..=n {
                let lhs = row_sum_at(t, i, k, &(j + k));
                ch.eq(&[2, i], &[k, j], lhs, falling_factorial(j, i as usize));
            }
        }
    }
    for i in 0..=n {
        let lhs = row_sum_at(t, i, &two, &one);
        let sign_fact = Rational::from(neg_one_pow(i) * factorial(i as usize));
        ch.eq(&[1, i], &[&two], lhs, sign_fact.clone());
        let rhs = Rational::from(neg_one_pow(i) * factorial(i as usize + 1));
        ch.eq(&[6, i], &[&two], t.c(i, 0, &two), rhs);
    }
    for k in ks.iter().filter(|k| is_integer(k)) {
        let kk = k.to_integer().to_i64().expect("small integer shift");
        for i in 1..=n {
            for m in kk - 2..=kk + i + 1 {
                let sum = row_sum_at(t, i, k, &rat_int(m));
                let lhs = indicator(sum.is_zero());
                let rhs = indicator(kk <= m && m <= kk + i - 1);
                ch.eq(&[4, i, m], &[k], lhs, rhs);
            }
        }
    }
    for kk in -(n + 2)..=3 {
        let k = rat_int(kk);
        for i in 1..=n {
            let sum = row_sum_at(t, i, &k, &one);
            let lhs = indicator(sum.is_zero());
            let rhs = indicator(-i + 2 <= kk && kk <= 1);
            ch.eq(&[5, i, kk], &[&k], lhs, rhs);
        }
    }
    format!(
        "parts a-g as 0-6; 0 <= i <= {n_max}; k in {}; e over integer k, \
         m in k-2..k+i+1; f over integer k in -{}..3",
        fmt_ks(ks),
        n + 2
    )
}

// the three recurrences; both sides come from the definitional sum, so
// this is independent of how the cached triangles are built
fn check_recursions(ch: &mut Checker, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    let split_max = n.min(3);
    for k in ks {
        for n2 in 0..=split_max {
            let shifted = k + rat_int(n2);
            for i in 0..=n - n2 {
                for j in 0..=i + n2 {
                    let lhs = msn1_def(i + n2, j, k);
                    let mut rhs = Rational::zero();
                    for r in 0..=j {
                        rhs += msn1_def(n2, r, k) * msn1_def(i, j - r, &shifted);
                    }
                    ch.eq(&[0, n2, i, j], &[k], lhs, rhs);
                }
            }
        }
        let up = k + Rational::one();
        for i in 0..=n {
            for j in 0..=i + 1 {
                let lhs = msn1_def(i + 1, j, k);
                let rhs_b = msn1_def(i, j - 1, k) - (k + rat_int(i)) * msn1_def(i, j, k);
                ch.eq(&[1, i, j], &[k], lhs.clone(), rhs_b);
                let rhs_c = msn1_def(i, j - 1, &up) - k * msn1_def(i, j, &up);
                ch.eq(&[2, i, j], &[k], lhs, rhs_c);
            }
        }
    }
    format!(
        "parts a-c as 0-2; split 0 <= n <= {split_max}, i+n <= {n_max}; \
         single steps 0 <= i <= {n_max}, 0 <= j <= i+1; k in {}",
        fmt_ks(ks)
    )
}

// (-1)^{i-j} c_{i-r,j-r,r} against the native restricted-cycle recurrence
fn check_r_stirling_match(ch: &mut Checker, t: &mut Tables, n_max: usize) -> String {
    let r_max = 4usize;
    for r in 0..=r_max {
        let native = RStirlingFirst::new(r, r + n_max);
        let k = rat_int(r as i64);
        for i in 0..=(r + n_max) as i64 {
            for j in 0..=i + 1 {
                let lhs = Rational::from(native.get(i, j));
                let rhs = Rational::from(neg_one_pow(i - j)) * t.c(i - r as i64, j - r as i64, &k);
                ch.eq(&[i, j], &[&k], lhs, rhs);
            }
        }
    }
    format!("0 <= r <= {r_max}; 0 <= i <= r+{n_max}, 0 <= j <= i+1")
}

// c against b: the diagonal product both ways round (right inverse with
// j! on the diagonal, left inverse after dividing rows by r!)
fn check_inversion(ch: &mut Checker, t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    for k in ks {
        for i in 0..=n {
            for j in 0..=i {
                let mut right = Rational::zero();
                let mut left = Rational::zero();
                for r in j..=i {
                    right += t.c(i, r, k) * t.b(r, j, k);
                    left += t.b(i, r, k) / Rational::from(factorial(r as usize)) * t.c(r, j, k);
                }
                let delta = indicator(i == j);
                ch.eq(&[0, i, j], &[k], right, &delta * &Rational::from(factorial(j as usize)));
                ch.eq(&[1, i, j], &[k], left, delta);
            }
        }
    }
    format!("right/left as 0/1; 0 <= j <= i <= {n_max}; k in {}", fmt_ks(ks))
}

// mixed-shift product: sum_r c_{i,r,k1} b_{r,j,k2} = i! C(k2-k1, i-j),
// stated for integer k2 >= k1
fn check_cross_inverse(
    ch: &mut Checker,
    t: &mut Tables,
    n_max: usize,
    ks: &[Rational],
) -> Result<String> {
    require_integer_ks("cross_inverse", ks)?;
    let n = n_max as i64;
    for k1 in ks {
        for k2 in ks.iter().filter(|k2| *k2 >= k1) {
            let diff = k2 - k1;
            for i in 0..=n {
                for j in 0..=i {
                    let mut lhs = Rational::zero();
                    for r in j..=i {
                        lhs += t.c(i, r, k1) * t.b(r, j, k2);
                    }
                    let rhs = Rational::from(factorial(i as usize))
                        * binomial_rat(&diff, (i - j) as usize);
                    ch.eq(&[i, j], &[k1, k2], lhs, rhs);
                }
            }
        }
    }
    Ok(format!(
        "0 <= j <= i <= {n_max}; integer pairs k1 <= k2 from {}",
        fmt_ks(ks)
    ))
}

// binomial convolution of two columns lands in the summed shift
fn check_convolution(ch: &mut Checker, t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    for k1 in ks {
        for k2 in ks {
            let ksum = k1 + k2;
            for i in 0..=n {
                for j1 in 0..=i {
                    for j2 in 0..=(i - j1) + 1 {
                        let mut lhs = Rational::zero();
                        for r in 0..=i {
                            lhs += Rational::from(binomial_int(i, r))
                                * t.c(i - r, j1, k1)
                                * t.c(r, j2, k2);
                        }
                        let rhs = Rational::from(binomial_int(j1 + j2, j1))
                            * t.c(i, j1 + j2, &ksum);
                        ch.eq(&[i, j1, j2], &[k1, k2], lhs, rhs);
                    }
                }
            }
        }
    }
    format!(
        "0 <= i <= {n_max}, 0 <= j1 <= i, 0 <= j2 <= i-j1+1; (k1, k2) over all pairs from {}",
        fmt_ks(ks)
    )
}

// a: convolving a column with (k)_{i-r} recovers the classical triangle;
// b: the alternating falling-factorial transform steps the shift up
fn check_convolution_corollary(
    ch: &mut Checker,
    t: &mut Tables,
    n_max: usize,
    ks: &[Rational],
) -> String {
    let n = n_max as i64;
    let s = StirlingFirst::new(n_max);
    for k in ks {
        let up = k + Rational::one();
        for i in 0..=n {
            for j in 0..=i {
                let mut conv = Rational::zero();
                let mut alt = Rational::zero();
                for r in j..=i {
                    conv += Rational::from(binomial_int(i, r))
                        * falling_factorial(k, (i - r) as usize)
                        * t.c(r, j, k);
                    alt += falling_factorial(&rat_int(i), (i - r) as usize)
                        * Rational::from(neg_one_pow(i - r))
                        * t.c(r, j, k);
                }
                ch.eq(&[0, i, j], &[k], conv, Rational::from(s.get(i, j)));
                ch.eq(&[1, i, j], &[k], alt, t.c(i, j, &up));
            }
        }
    }
    format!("parts a,b as 0,1; 0 <= j <= i <= {n_max}; k in {}", fmt_ks(ks))
}

// resumming a row with binomial weights in k2 moves the shift down by k2
fn check_binomial_shift(ch: &mut Checker, t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    let n = n_max as i64;
    for k1 in ks {
        for k2 in ks {
            let down = k1 - k2;
            for i in 0..=n {
                for j in 0..=i {
                    let mut lhs = Rational::zero();
                    for r in j..=i {
                        lhs += Rational::from(binomial_int(r, j))
                            * rat_pow(k2, (r - j) as usize)
                            * t.c(i, r, k1);
                    }
                    ch.eq(&[i, j], &[k1, k2], lhs, t.c(i, j, &down));
                }
            }
        }
    }
    format!("0 <= j <= i <= {n_max}; (k1, k2) over all pairs from {}", fmt_ks(ks))
}

// the three weight specializations: k2 = k lands on the classical
// triangle, k2 = 1 steps down, k2 = -1 steps up
fn check_binomial_shift_corollary(
    ch: &mut Checker,
    t: &mut Tables,
    n_max: usize,
    ks: &[Rational],
) -> String {
    let n = n_max as i64;
    let s = StirlingFirst::new(n_max);
    for k in ks {
        let down = k - Rational::one();
        let up = k + Rational::one();
        for i in 0..=n {
            for j in 0..=i {
                let mut at_k = Rational::zero();
                let mut plain = Rational::zero();
                let mut alternating = Rational::zero();
                for r in j..=i {
                    let weight = Rational::from(binomial_int(r, j));
                    let c = t.c(i, r, k);
                    at_k += &weight * &(rat_pow(k, (r - j) as usize) * &c);
                    plain += &weight * &c;
                    alternating += &weight * &(Rational::from(neg_one_pow(r - j)) * &c);
                }
                ch.eq(&[0, i, j], &[k], at_k, Rational::from(s.get(i, j)));
                ch.eq(&[1, i, j], &[k], plain, t.c(i, j, &down));
                ch.eq(&[2, i, j], &[k], alternating, t.c(i, j, &up));
            }
        }
    }
    format!("parts a-c as 0-2; 0 <= j <= i <= {n_max}; k in {}", fmt_ks(ks))
}

// the series coefficients times i! land back on the triangle
fn check_egf_match(ch: &mut Checker, t: &mut Tables, n_max: usize, ks: &[Rational]) -> String {
    for k in ks {
        for j in 0..=n_max {
            let egf = msn1_egf(j, k, n_max);
            for i in 0..=n_max {
                let lhs = egf.coeff(i) * Rational::from(factorial(i));
                ch.eq(&[j as i64, i as i64], &[k], lhs, t.c(i as i64, j as i64, k));
            }
        }
    }
    format!("0 <= j <= {n_max}, 0 <= i <= {n_max}; k in {}", fmt_ks(ks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn standard_ks() -> Vec<Rational> {
        vec![rat_int(0), rat_int(1), rat_int(-1), rat_int(2), rat(1, 2), rat(-3, 7)]
    }

    #[test]
    fn catalog_names_round_trip() {
        assert_eq!(CATALOG.len(), 16);
        for name in CATALOG {
            assert_eq!(name.as_str().parse::<IdentityName>().unwrap(), name);
        }
        assert!(matches!(
            "nosuch".parse::<IdentityName>(),
            Err(Error::UnknownIdentity(s)) if s == "nosuch"
        ));
    }

    #[test]
    fn whole_catalog_passes_on_mixed_shifts() {
        let ks = standard_ks();
        let reports = verify_all(6, &ks);
        assert_eq!(reports.len(), CATALOG.len());
        for report in &reports {
            assert!(report.checked > 0, "{} checked nothing", report.identity);
            assert!(
                report.pass(),
                "{} failed at {:?}",
                report.identity,
                report.failures.first()
            );
        }
    }

    #[test]
    fn inversion_passes_on_its_documented_grid() {
        let ks = vec![rat_int(0), rat_int(1), rat_int(-2), rat(3, 2)];
        let report = verify_identity(IdentityName::Inversion, 8, &ks).unwrap();
        assert!(report.pass());
        assert_eq!(report.checked, 2 * 45 * 4); // both orders, 45 (i,j) cells, 4 shifts
    }

    #[test]
    fn integer_only_identities_reject_fractions() {
        let ks = vec![rat(1, 2)];
        for name in [IdentityName::HarmonicClosedForm, IdentityName::CrossInverse] {
            let err = verify_identity(name, 4, &ks).unwrap_err();
            assert!(matches!(err, Error::NonIntegerK { identity, .. } if identity == name.as_str()));
        }
    }

    #[test]
    fn narrowing_keeps_only_statable_shifts() {
        let ks = standard_ks();
        let harmonic = admissible_ks(IdentityName::HarmonicClosedForm, &ks);
        assert_eq!(harmonic, vec![rat_int(1), rat_int(2)]);
        let cross = admissible_ks(IdentityName::CrossInverse, &ks);
        assert_eq!(cross, vec![rat_int(0), rat_int(1), rat_int(-1), rat_int(2)]);
        assert_eq!(admissible_ks(IdentityName::SumEval, &ks), ks);
    }

    #[test]
    fn failures_are_recorded_and_sorted() {
        let mut ch = Checker::new();
        let k = rat_int(1);
        ch.eq(&[2, 0], &[&k], rat_int(5), rat_int(5));
        ch.eq(&[2, 1], &[&k], rat_int(1), rat_int(2));
        ch.eq(&[0, 1], &[&k], rat_int(3), rat_int(4));
        let report = ch.finish(IdentityName::SumEval, "test grid".into());
        assert_eq!(report.checked, 3);
        assert!(!report.pass());
        assert_eq!(report.failures.len(), 2);
        assert_eq!(report.failures[0].indices, vec![0, 1]);
        assert_eq!(report.failures[1].indices, vec![2, 1]);
        assert_eq!(report.failures[0].lhs, rat_int(3));
        assert_eq!(report.failures[0].rhs, rat_int(4));
    }
}
