//! Periodic/aperiodic classification and the bound report.
//!
//! A repeat is β-periodic when its left arm has a periodic prefix of length at
//! least `β u`; a palindrome is β-periodic when it is not ordinary and its left
//! arm has a periodic suffix of length at least `β u`. The asymmetry is
//! intentional, each class is counted by a different argument.

use num::bigint::BigInt;
use num::{BigRational, ToPrimitive, Zero};
use serde::Serialize;

use crate::covermap::{self, BASEL};
use crate::enumerate::{compute_runs, enumerate_all_palindromes, enumerate_all_repeats};
use crate::rational::{self, Rational};
use crate::word::{check_alpha, is_periodic, GappedPalindrome, GappedRepeat, Run, Segment, Word};
use crate::{Error, Result};

/// Absolute slack for comparisons against bounds that involve π².
pub const FLOAT_SLACK: f64 = 1e-6;

pub const SCHEMA_VERSION: u32 = 1;

pub fn default_beta_repeats() -> Rational {
    Rational::new(2, 3)
}

pub fn default_beta_palindromes() -> Rational {
    Rational::new(6, 7)
}

fn big(r: Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// `E(w)`, the sum of `len / period` over the given runs.
pub fn sum_of_exponents(runs: &[Run]) -> BigRational {
    runs.iter().fold(BigRational::zero(), |acc, r| acc + big(r.exponent()))
}

/// Longest periodic suffix of `w[s]`, by testing every suffix from the longest down.
pub fn longest_periodic_suffix_len(w: &Word, s: Segment) -> Result<usize> {
    let f = w.factor(s)?;
    for len in (2..=f.len()).rev() {
        if is_periodic(&f[f.len() - len..])? {
            return Ok(len);
        }
    }
    Ok(0)
}

/// Longest periodic prefix of `w[s]`.
pub fn longest_periodic_prefix_len(w: &Word, s: Segment) -> Result<usize> {
    let f = w.factor(s)?;
    for len in (2..=f.len()).rev() {
        if is_periodic(&f[..len])? {
            return Ok(len);
        }
    }
    Ok(0)
}

/// Answers the same questions as [`longest_periodic_suffix_len`] and
/// [`longest_periodic_prefix_len`] from the runs of the word.
///
/// A periodic factor extends to exactly one run with the same period, so the
/// longest periodic suffix of `[b..e]` is the longest intersection of `[b..e]`
/// with a run through `e` that still spans two periods.
pub struct PeriodicityIndex {
    covering: Vec<Vec<Run>>,
}

impl PeriodicityIndex {
    pub fn new(n: usize, runs: &[Run]) -> Self {
        let mut covering = vec![Vec::new(); n + 1];
        for r in runs {
            for slot in &mut covering[r.beg..=r.end] {
                slot.push(*r);
            }
        }
        PeriodicityIndex { covering }
    }

    pub fn from_word(w: &Word) -> Self {
        Self::new(w.len(), &compute_runs(w))
    }

    fn check(&self, s: Segment) -> Result<()> {
        let n = self.covering.len() - 1;
        if s.beg == 0 || s.beg > s.end || s.end > n {
            return Err(Error::Range { beg: s.beg, end: s.end, len: n });
        }
        Ok(())
    }

    pub fn suffix_len(&self, s: Segment) -> Result<usize> {
        self.check(s)?;
        let best = self.covering[s.end]
            .iter()
            .map(|r| (s.end + 1 - r.beg.max(s.beg), r.period))
            .filter(|&(len, p)| len >= 2 * p)
            .map(|(len, _)| len)
            .max();
        Ok(best.unwrap_or(0))
    }

    pub fn prefix_len(&self, s: Segment) -> Result<usize> {
        self.check(s)?;
        let best = self.covering[s.beg]
            .iter()
            .map(|r| (r.end.min(s.end) + 1 - s.beg, r.period))
            .filter(|&(len, p)| len >= 2 * p)
            .map(|(len, _)| len)
            .max();
        Ok(best.unwrap_or(0))
    }
}

fn reaches(len: usize, beta: Rational, u: usize) -> bool {
    rational::cmp_scaled(len as i64, beta, u as i64) != std::cmp::Ordering::Less
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PalindromeClasses {
    pub ordinary: Vec<GappedPalindrome>,
    pub periodic: Vec<GappedPalindrome>,
    pub aperiodic: Vec<GappedPalindrome>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepeatClasses {
    pub periodic: Vec<GappedRepeat>,
    pub aperiodic: Vec<GappedRepeat>,
}

fn check_beta(beta: Rational) -> Result<()> {
    if !(rational::is_positive(beta) && beta < Rational::from_integer(1)) {
        return Err(Error::Parameter(format!("beta must lie in (0, 1), got {}", rational::render(beta))));
    }
    Ok(())
}

pub fn classify_palindromes_with(
    index: &PeriodicityIndex,
    pals: &[GappedPalindrome],
    beta: Rational,
) -> Result<PalindromeClasses> {
    check_beta(beta)?;
    let mut out = PalindromeClasses::default();
    for p in pals {
        if p.is_ordinary() {
            out.ordinary.push(*p);
        } else if reaches(index.suffix_len(p.left)?, beta, p.arm_len()) {
            out.periodic.push(*p);
        } else {
            out.aperiodic.push(*p);
        }
    }
    Ok(out)
}

pub fn classify_palindromes(w: &Word, pals: &[GappedPalindrome], beta: Rational) -> Result<PalindromeClasses> {
    classify_palindromes_with(&PeriodicityIndex::from_word(w), pals, beta)
}

pub fn classify_repeats_with(index: &PeriodicityIndex, reps: &[GappedRepeat], beta: Rational) -> Result<RepeatClasses> {
    check_beta(beta)?;
    let mut out = RepeatClasses::default();
    for r in reps {
        if reaches(index.prefix_len(r.left)?, beta, r.arm_len()) {
            out.periodic.push(*r);
        } else {
            out.aperiodic.push(*r);
        }
    }
    Ok(out)
}

pub fn classify_repeats(w: &Word, reps: &[GappedRepeat], beta: Rational) -> Result<RepeatClasses> {
    classify_repeats_with(&PeriodicityIndex::from_word(w), reps, beta)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    LessEq,
}

/// One comparison `value relation bound`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    pub relation: Relation,
    pub bound: f64,
    /// Whether the comparison was carried out in exact arithmetic; otherwise
    /// it was done in floating point with [`FLOAT_SLACK`].
    pub exact: bool,
    pub pass: bool,
}

impl Check {
    fn float(name: &'static str, count: usize, relation: Relation, bound: f64) -> Self {
        let value = count as f64;
        let pass = value <= bound - FLOAT_SLACK;
        Check { name, value, relation, bound, exact: false, pass }
    }

    fn exact(name: &'static str, value: &BigRational, relation: Relation, bound: &BigRational) -> Self {
        let pass = match relation {
            Relation::Less => value < bound,
            Relation::LessEq => value <= bound,
        };
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        Check { name, value: f(value), relation, bound: f(bound), exact: true, pass }
    }
}

/// A cover-conflict-freeness check on a point image.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverCheck {
    pub name: &'static str,
    pub gamma: String,
    pub points: usize,
    pub conflicts: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub runs: usize,
    pub repeats: usize,
    pub periodic_repeats: usize,
    pub aperiodic_repeats: usize,
    pub palindromes: usize,
    pub ordinary_palindromes: usize,
    pub periodic_palindromes: usize,
    pub aperiodic_palindromes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub schema_version: u32,
    pub n: usize,
    pub alpha: String,
    pub beta_repeats: String,
    pub beta_palindromes: String,
    pub counts: Counts,
    /// `E(w)` as an exact fraction.
    pub sum_of_exponents: String,
    pub checks: Vec<Check>,
    pub cover: Vec<CoverCheck>,
    pub all_pass: bool,
}

/// Bound report with the default β values (2/3 for repeats, 6/7 for palindromes).
pub fn verify_bounds(w: &Word, alpha: Rational) -> Result<BoundReport> {
    verify_bounds_with(w, alpha, default_beta_repeats(), default_beta_palindromes())
}

/// Bound report with explicit β values.
///
/// `beta_repeats` must lie in `[2/3, 1)` and `beta_palindromes` in `[6/7, 1)`,
/// the ranges on which the class lemmas are stated.
pub fn verify_bounds_with(
    w: &Word,
    alpha: Rational,
    beta_repeats: Rational,
    beta_palindromes: Rational,
) -> Result<BoundReport> {
    check_alpha(alpha)?;
    let one = Rational::from_integer(1);
    if alpha == one {
        return Err(Error::Parameter("alpha must be > 1 for the bounds".into()));
    }
    let n = w.len();
    if n < 2 {
        return Err(Error::Parameter(format!("bounds need n >= 2, got {n}")));
    }
    if !(default_beta_repeats() <= beta_repeats && beta_repeats < one) {
        return Err(Error::Parameter(format!(
            "beta for repeats must lie in [2/3, 1), got {}",
            rational::render(beta_repeats)
        )));
    }
    if !(default_beta_palindromes() <= beta_palindromes && beta_palindromes < one) {
        return Err(Error::Parameter(format!(
            "beta for palindromes must lie in [6/7, 1), got {}",
            rational::render(beta_palindromes)
        )));
    }

    let runs = compute_runs(w);
    let index = PeriodicityIndex::new(n, &runs);
    let reps = enumerate_all_repeats(w, alpha)?;
    let pals = enumerate_all_palindromes(w, alpha)?;
    let rc = classify_repeats_with(&index, &reps, beta_repeats)?;
    let pc = classify_palindromes_with(&index, &pals, beta_palindromes)?;
    let e = sum_of_exponents(&runs);

    let counts = Counts {
        runs: runs.len(),
        repeats: reps.len(),
        periodic_repeats: rc.periodic.len(),
        aperiodic_repeats: rc.aperiodic.len(),
        palindromes: pals.len(),
        ordinary_palindromes: pc.ordinary.len(),
        periodic_palindromes: pc.periodic.len(),
        aperiodic_palindromes: pc.aperiodic.len(),
    };

    let a = rational::to_f64(alpha);
    let nf = n as f64;
    let int = |v: usize| BigRational::from_integer(BigInt::from(v));
    let (ba, bp) = (big(alpha), big(beta_palindromes));
    let br = big(beta_repeats);
    let two = int(2);
    let checks = vec![
        Check::float("repeats", counts.repeats, Relation::Less, 3.0 * (BASEL + 2.5) * a * nf),
        Check::float("palindromes", counts.palindromes, Relation::Less, 7.0 * (BASEL + 0.5) * a * nf - 5.0 * nf - 1.0),
        Check::exact("ordinary_palindromes", &int(counts.ordinary_palindromes), Relation::LessEq, &int(2 * n - 1)),
        Check::exact(
            "periodic_palindromes",
            &int(counts.periodic_palindromes),
            Relation::LessEq,
            &(&two * (&ba - int(1)) * &e / &bp),
        ),
        Check::exact("periodic_repeats", &int(counts.periodic_repeats), Relation::LessEq, &(&two * &ba * &e / &br)),
        Check::float(
            "aperiodic_palindromes",
            counts.aperiodic_palindromes,
            Relation::Less,
            a * nf * (BASEL - 0.5) / (1.0 - rational::to_f64(beta_palindromes)),
        ),
        Check::float(
            "aperiodic_repeats",
            counts.aperiodic_repeats,
            Relation::Less,
            a * nf * (BASEL - 0.5) / (1.0 - rational::to_f64(beta_repeats)),
        ),
        Check::exact("sum_of_exponents", &e, Relation::Less, &int(3 * n)),
        Check::exact("runs", &int(counts.runs), Relation::Less, &int(n)),
    ];

    let cover_check = |name, beta: Rational, image: Vec<covermap::Point>| -> Result<CoverCheck> {
        let gamma = (one - beta) / alpha;
        let conflicts = covermap::cover_conflicts(&image, gamma)?.len();
        Ok(CoverCheck { name, gamma: rational::render(gamma), points: image.len(), conflicts, pass: conflicts == 0 })
    };
    let cover = vec![
        cover_check("phi_aperiodic_repeats", beta_repeats, rc.aperiodic.iter().map(covermap::phi).collect())?,
        cover_check("phi_t_aperiodic_palindromes", beta_palindromes, pc.aperiodic.iter().map(covermap::phi_t).collect())?,
    ];

    let all_pass = checks.iter().all(|c| c.pass) && cover.iter().all(|c| c.pass);
    Ok(BoundReport {
        schema_version: SCHEMA_VERSION,
        n,
        alpha: rational::render(alpha),
        beta_repeats: rational::render(beta_repeats),
        beta_palindromes: rational::render(beta_palindromes),
        counts,
        sum_of_exponents: e.to_string(),
        checks,
        cover,
        all_pass,
    })
}
