//! Production enumerators.
//!
//! * [`compute_runs`]: all runs via periodic probing with extension queries.
//! * [`manacher`]: maximal ordinary palindromes in linear time.
//! * [`overlap_repeats_from_runs`]: maximal repeats with overlapping arms, read
//!   off the borders of each run.
//! * [`repeats_by_period`] / [`palindromes_by_diagonal`]: quadratic scans that
//!   produce every maximal α-gapped repeat/palindrome directly.

pub mod lce;
mod manacher;
mod runs;

pub use manacher::manacher;
pub use runs::compute_runs;

use crate::rational::Rational;
use crate::word::{check_alpha, GappedPalindrome, GappedRepeat, Run, Segment, Word};
use crate::Result;

/// Maximal repeats of a fixed period `q` are the maximal intervals of
/// positions `j` with `w[j] = w[j + q]`; `keep` filters them before collection.
fn scan_periods(w: &Word, mut keep: impl FnMut(&GappedRepeat) -> bool) -> Vec<GappedRepeat> {
    let s = w.symbols();
    let n = s.len();
    let mut out = Vec::new();
    for q in 1..n {
        let mut j = 0;
        while j + q < n {
            if s[j] != s[j + q] {
                j += 1;
                continue;
            }
            let start = j;
            while j + q < n && s[j] == s[j + q] {
                j += 1;
            }
            let r = GappedRepeat { left: Segment { beg: start + 1, end: j }, right: Segment { beg: start + 1 + q, end: j + q } };
            if keep(&r) {
                out.push(r);
            }
        }
    }
    out.sort();
    out
}

/// Every maximal α-gapped repeat, one period at a time. `O(n^2)`.
pub fn repeats_by_period(w: &Word, alpha: Rational) -> Result<Vec<GappedRepeat>> {
    check_alpha(alpha)?;
    Ok(scan_periods(w, |r| r.is_alpha_gapped(alpha)))
}

/// Every maximal gapped repeat regardless of α (equivalently, α = ∞).
pub fn all_maximal_repeats(w: &Word) -> Vec<GappedRepeat> {
    scan_periods(w, |_| true)
}

fn scan_diagonals(w: &Word, mut keep: impl FnMut(&GappedPalindrome) -> bool) -> Vec<GappedPalindrome> {
    let s = w.symbols();
    let n = s.len();
    let mut out = Vec::new();
    // 1-based positions i and sigma - i are paired; i stays on the left half.
    for sigma in 2..=2 * n {
        let lo = 1.max(sigma.saturating_sub(n));
        let hi = sigma / 2;
        let mut i = lo;
        while i <= hi {
            if s[i - 1] != s[sigma - i - 1] {
                i += 1;
                continue;
            }
            let start = i;
            while i <= hi && s[i - 1] == s[sigma - i - 1] {
                i += 1;
            }
            let end = i - 1;
            let p = if end == hi {
                // The matches reach the centre, so the pair extends inwards
                // until both arms become the same palindromic segment.
                GappedPalindrome::ordinary(Segment { beg: start, end: sigma - start })
            } else {
                GappedPalindrome {
                    left: Segment { beg: start, end },
                    right: Segment { beg: sigma - end, end: sigma - start },
                }
            };
            if keep(&p) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

/// Every maximal α-gapped palindrome (ordinary ones included), one
/// antidiagonal `end(L) + beg(R)` at a time. `O(n^2)`.
pub fn palindromes_by_diagonal(w: &Word, alpha: Rational) -> Result<Vec<GappedPalindrome>> {
    check_alpha(alpha)?;
    Ok(scan_diagonals(w, |p| p.is_alpha_gapped(alpha)))
}

pub fn all_maximal_palindromes(w: &Word) -> Vec<GappedPalindrome> {
    scan_diagonals(w, |_| true)
}

/// Maximal gapped repeats whose arms overlap, read off the runs of `w`.
///
/// Such a repeat lives inside one run `(b, e, p)`, its arms touch both run
/// borders and its period is a multiple of `p`; so each run contributes
/// `([b..e-q], [b+q..e])` for `q = p, 2p, ...` as long as `2q <= len - 1`.
pub fn overlap_repeats_from_runs(runs: &[Run]) -> Vec<GappedRepeat> {
    let mut out = Vec::new();
    for run in runs {
        let len = run.len();
        let mut q = run.period;
        while 2 * q < len {
            out.push(GappedRepeat {
                left: Segment { beg: run.beg, end: run.end - q },
                right: Segment { beg: run.beg + q, end: run.end },
            });
            q += run.period;
        }
    }
    out.sort();
    out
}

/// Overlapping repeats from the runs plus the non-overlapping ones from the
/// per-period scan. The result equals [`repeats_by_period`].
pub fn enumerate_all_repeats(w: &Word, alpha: Rational) -> Result<Vec<GappedRepeat>> {
    check_alpha(alpha)?;
    let mut out = overlap_repeats_from_runs(&compute_runs(w));
    out.extend(scan_periods(w, |r| !r.overlaps() && r.is_alpha_gapped(alpha)));
    out.sort();
    Ok(out)
}

/// Maximal ordinary palindromes from Manacher plus the non-ordinary ones from
/// the antidiagonal scan. The result equals [`palindromes_by_diagonal`].
pub fn enumerate_all_palindromes(w: &Word, alpha: Rational) -> Result<Vec<GappedPalindrome>> {
    check_alpha(alpha)?;
    let mut out: Vec<GappedPalindrome> = manacher(w).into_iter().map(GappedPalindrome::ordinary).collect();
    out.extend(scan_diagonals(w, |p| !p.is_ordinary() && p.is_alpha_gapped(alpha)));
    out.sort();
    Ok(out)
}
