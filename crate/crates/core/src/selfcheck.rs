//! Differential and property checks on a single word, shared by the fuzzer
//! and the test suites.

use std::collections::HashSet;
use std::fmt;

use crate::bounds::{self, default_beta_palindromes};
use crate::covermap::{self, Point};
use crate::enumerate::{self, compute_runs, manacher};
use crate::oracle;
use crate::rational::{self, Rational};
use crate::word::{GappedPalindrome, GappedRepeat, Word};

/// Words longer than this skip the oracle comparisons.
pub const ORACLE_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Drops one repeat from the production output, to prove the harness
    /// notices.
    pub inject_fault: bool,
}

fn same<T: PartialEq + fmt::Debug>(check: &'static str, got: &[T], want: &[T]) -> Result<(), Mismatch> {
    if got == want {
        return Ok(());
    }
    let missing: Vec<_> = want.iter().filter(|x| !got.contains(x)).collect();
    let extra: Vec<_> = got.iter().filter(|x| !want.contains(x)).collect();
    Err(Mismatch { check, detail: format!("missing {missing:?}, unexpected {extra:?}") })
}

fn fail(check: &'static str, detail: String) -> Result<(), Mismatch> {
    Err(Mismatch { check, detail })
}

/// φ is injective, inverted by [`covermap::restore_repeat_from_point`], stays in
/// the region, and never hits both `(x, y)` and `(x + 1, y)`.
pub fn check_phi(w: &Word, reps: &[GappedRepeat]) -> Result<(), Mismatch> {
    let image: HashSet<Point> = reps.iter().map(covermap::phi).collect();
    if image.len() != reps.len() {
        return fail("phi", "two repeats share a point".into());
    }
    for r in reps {
        let p = covermap::phi(r);
        if !covermap::in_region(p, w.len()) {
            return fail("phi", format!("{p:?} of {r:?} outside the region"));
        }
        if covermap::restore_repeat_from_point(w, p) != Some(*r) {
            return fail("phi", format!("{p:?} does not restore {r:?}"));
        }
        if image.contains(&Point::new(p.x + 1, p.y)) {
            return fail("phi", format!("both {p:?} and its right neighbour are images"));
        }
    }
    Ok(())
}

/// φ⊤ on the non-ordinary palindromes: injective, inverted by
/// [`covermap::restore_palindrome_from_point`], `d >= 3`, mid-point identities,
/// and the exclusion family around the image of every β-aperiodic palindrome.
pub fn check_phi_t(w: &Word, pals: &[GappedPalindrome], beta: Rational) -> Result<(), Mismatch> {
    let gapped: Vec<GappedPalindrome> = pals.iter().copied().filter(|p| !p.is_ordinary()).collect();
    let image: HashSet<Point> = gapped.iter().map(covermap::phi_t).collect();
    if image.len() != gapped.len() {
        return fail("phi_t", "two palindromes share a point".into());
    }
    for g in &gapped {
        let p = covermap::phi_t(g);
        if p.y < 3 || !covermap::in_region(p, w.len()) {
            return fail("phi_t", format!("{p:?} of {g:?} has d < 3 or leaves the region"));
        }
        if covermap::restore_palindrome_from_point(w, p) != Some(*g) {
            return fail("phi_t", format!("{p:?} does not restore {g:?}"));
        }
        if !covermap::mid_point_identities_hold(g) {
            return fail("phi_t", format!("mid-point identities fail for {g:?}"));
        }
    }
    let classes = bounds::classify_palindromes(w, pals, beta).map_err(|e| Mismatch { check: "phi_t", detail: e.to_string() })?;
    for g in &classes.aperiodic {
        if let Some(q) = covermap::phi_t_exclusions(g).into_iter().find(|q| image.contains(q)) {
            return fail("phi_t", format!("{q:?} is excluded by {g:?} but is an image"));
        }
    }
    Ok(())
}

/// Runs every check on `w` at `alpha`; the first failure is returned.
pub fn check_word(w: &Word, alpha: Rational, options: Options) -> Result<(), Mismatch> {
    let err = |check| move |e: crate::Error| Mismatch { check, detail: e.to_string() };
    let runs = compute_runs(w);
    let ordinary = manacher(w);
    let by_period = enumerate::repeats_by_period(w, alpha).map_err(err("repeats"))?;
    let mut repeats = enumerate::enumerate_all_repeats(w, alpha).map_err(err("repeats"))?;
    if options.inject_fault && !repeats.is_empty() {
        repeats.remove(repeats.len() / 2);
    }
    let by_diagonal = enumerate::palindromes_by_diagonal(w, alpha).map_err(err("palindromes"))?;
    let palindromes = enumerate::enumerate_all_palindromes(w, alpha).map_err(err("palindromes"))?;
    let overlapping = enumerate::overlap_repeats_from_runs(&runs);

    same("repeats", &repeats, &by_period)?;
    same("palindromes", &palindromes, &by_diagonal)?;
    if w.len() <= ORACLE_CAP {
        let all = oracle::oracle_maximal_gapped_repeats(w);
        let want: Vec<_> = all.iter().copied().filter(|r| r.is_alpha_gapped(alpha)).collect();
        same("repeats", &by_period, &want)?;
        let want: Vec<_> = all.iter().copied().filter(|r| r.overlaps()).collect();
        same("overlap", &overlapping, &want)?;
        let want: Vec<_> = oracle::oracle_maximal_gapped_palindromes(w)
            .into_iter()
            .filter(|p| p.is_alpha_gapped(alpha))
            .collect();
        same("palindromes", &by_diagonal, &want)?;
        same("runs", &runs, &oracle::oracle_runs(w))?;
        same("ordinary", &ordinary, &oracle::oracle_maximal_ordinary_palindromes(w))?;
    }
    for r in &runs {
        if !r.is_valid_in(w) {
            return fail("runs", format!("{r:?} is not a run"));
        }
    }
    check_phi(w, &by_period)?;
    check_phi_t(w, &by_diagonal, default_beta_palindromes())?;

    if w.len() >= 2 && alpha > Rational::from_integer(1) {
        let report = bounds::verify_bounds(w, alpha).map_err(err("bounds"))?;
        if !report.all_pass {
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
            let covers: Vec<_> = report.cover.iter().filter(|c| !c.pass).map(|c| c.name).collect();
            return fail("bounds", format!("alpha {}: failed {failed:?} {covers:?}", rational::render(alpha)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_trial;

    #[test]
    fn random_words_pass() {
        for seed in 0..150 {
            let w = random_trial(50, 2 + (seed % 3) as u32, seed);
            for alpha in [Rational::new(3, 2), Rational::from_integer(4)] {
                check_word(&w, alpha, Options::default()).unwrap();
            }
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let w = Word::from("abaababaab");
        let m = check_word(&w, Rational::from_integer(2), Options { inject_fault: true }).unwrap_err();
        assert_eq!(m.check, "repeats");
    }
}
