//! Brute-force enumerators that follow the definitions literally.
//!
//! Every candidate triple (or segment) is generated and checked by direct
//! symbol comparisons; nothing here shares code with [`crate::enumerate`].
//! Costs are cubic or worse, which is fine for words of a few hundred symbols.

use crate::word::{GappedPalindrome, GappedRepeat, Run, Segment, Symbol, Word};

/// Whether arms of a gapped repeat may overlap when deciding maximality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overlap {
    Allowed,
    /// Only pairs with a non-negative gap are repeats; an extension that
    /// would make the arms overlap does not count.
    Prohibited,
}

/// All maximal gapped repeats with overlapping arms allowed; no α filter.
pub fn oracle_maximal_gapped_repeats(w: &Word) -> Vec<GappedRepeat> {
    oracle_maximal_gapped_repeats_with(w, Overlap::Allowed)
}

pub fn oracle_maximal_gapped_repeats_with(w: &Word, overlap: Overlap) -> Vec<GappedRepeat> {
    let s = w.symbols();
    let n = s.len();
    // 0-based (bl, br, u) below; arms are s[bl..bl+u] and s[br..br+u].
    let is_repeat = |bl: usize, br: usize, u: usize| -> bool {
        u >= 1
            && bl < br
            && br + u <= n
            && (0..u).all(|k| s[bl + k] == s[br + k])
            && (overlap == Overlap::Allowed || bl + u <= br)
    };
    let mut out = Vec::new();
    for bl in 0..n {
        for br in bl + 1..n {
            for u in 1..=n - br {
                if s[bl + u - 1] != s[br + u - 1] {
                    break;
                }
                if !is_repeat(bl, br, u) {
                    continue;
                }
                let extends_left = bl > 0 && is_repeat(bl - 1, br - 1, u + 1);
                let extends_right = is_repeat(bl, br, u + 1);
                if !extends_left && !extends_right {
                    out.push(GappedRepeat::new(bl + 1, br + 1, u).unwrap());
                }
            }
        }
    }
    out.sort();
    out
}

/// All maximal gapped palindromes, including maximal ordinary palindromes;
/// no α filter.
pub fn oracle_maximal_gapped_palindromes(w: &Word) -> Vec<GappedPalindrome> {
    let s = w.symbols();
    let n = s.len();
    // A gapped palindrome is fixed by the outer ends bl (left arm start) and
    // er (right arm end) plus the arm length u; right arm start is er + 1 - u.
    let is_palindrome = |bl: usize, er: usize, u: usize| -> bool {
        u >= 1 && er < n && u <= er + 1 && bl + u <= er + 1 && (0..u).all(|k| s[bl + k] == s[er - k])
    };
    let mut out = Vec::new();
    for bl in 0..n {
        for er in bl..n {
            for u in 1..=er - bl + 1 {
                if s[bl + u - 1] != s[er + 1 - u] {
                    break;
                }
                debug_assert!(is_palindrome(bl, er, u));
                let extends_out = bl > 0 && is_palindrome(bl - 1, er + 1, u + 1);
                let extends_in = is_palindrome(bl, er, u + 1);
                if !extends_out && !extends_in {
                    out.push(GappedPalindrome::new(bl + 1, er + 2 - u, u).unwrap());
                }
            }
        }
    }
    out.sort();
    out
}

fn brute_smallest_period(f: &[Symbol]) -> usize {
    (1..=f.len()).find(|&p| (p..f.len()).all(|i| f[i] == f[i - p])).unwrap_or(f.len())
}

/// All runs: factors with exponent at least 2 that cannot be extended by one
/// position on either side without breaking their smallest period.
pub fn oracle_runs(w: &Word) -> Vec<Run> {
    let s = w.symbols();
    let n = s.len();
    let mut out = Vec::new();
    for b in 0..n {
        for e in b + 1..n {
            let f = &s[b..=e];
            let p = brute_smallest_period(f);
            if 2 * p > f.len() {
                continue;
            }
            let left_breaks = b == 0 || s[b - 1] != s[b - 1 + p];
            let right_breaks = e + 1 == n || s[e + 1] != s[e + 1 - p];
            if left_breaks && right_breaks {
                out.push(Run { beg: b + 1, end: e + 1, period: p });
            }
        }
    }
    out.sort();
    out
}

/// All non-empty palindromic segments that cannot be extended outwards.
pub fn oracle_maximal_ordinary_palindromes(w: &Word) -> Vec<Segment> {
    let s = w.symbols();
    let n = s.len();
    let mut out = Vec::new();
    for b in 0..n {
        for e in b..n {
            let f = &s[b..=e];
            if !f.iter().eq(f.iter().rev()) {
                continue;
            }
            if b == 0 || e + 1 == n || s[b - 1] != s[e + 1] {
                out.push(Segment { beg: b + 1, end: e + 1 });
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn rep(bl: usize, br: usize, u: usize) -> GappedRepeat {
        GappedRepeat::new(bl, br, u).unwrap()
    }

    fn pal(bl: usize, br: usize, u: usize) -> GappedPalindrome {
        GappedPalindrome::new(bl, br, u).unwrap()
    }

    fn seg(b: usize, e: usize) -> Segment {
        Segment::new(b, e).unwrap()
    }

    #[test]
    fn repeat_examples() {
        assert_eq!(oracle_maximal_gapped_repeats(&w("aaa")), vec![rep(1, 2, 2), rep(1, 3, 1)]);
        assert!(oracle_maximal_gapped_repeats(&w("ab")).is_empty());
        assert!(oracle_maximal_gapped_repeats(&w("a")).is_empty());
        assert!(oracle_maximal_gapped_repeats(&w("")).is_empty());
        assert_eq!(oracle_maximal_gapped_repeats(&w("abab")), vec![rep(1, 3, 2)]);
    }

    #[test]
    fn prohibiting_overlaps_changes_the_maximal_set_of_aaa() {
        let no_overlap = oracle_maximal_gapped_repeats_with(&w("aaa"), Overlap::Prohibited);
        assert_eq!(no_overlap, vec![rep(1, 2, 1), rep(1, 3, 1), rep(2, 3, 1)]);
    }

    #[test]
    fn palindrome_examples() {
        assert_eq!(
            oracle_maximal_gapped_palindromes(&w("ab")),
            vec![GappedPalindrome::ordinary(seg(1, 1)), GappedPalindrome::ordinary(seg(2, 2))]
        );
        assert!(oracle_maximal_gapped_palindromes(&w("abcdba")).contains(&pal(1, 5, 2)));
        let abccba = oracle_maximal_gapped_palindromes(&w("abccba"));
        assert!(abccba.contains(&GappedPalindrome::ordinary(seg(1, 6))));
        assert!(!abccba.contains(&pal(1, 5, 2)));
    }

    #[test]
    fn gap_one_palindromes_are_never_maximal() {
        // (1,3,1) in "aaa" extends inwards to (1,2,2) and further to the ordinary [1..3].
        let pals = oracle_maximal_gapped_palindromes(&w("aaa"));
        assert!(!pals.contains(&pal(1, 3, 1)));
        assert!(!pals.contains(&pal(1, 2, 2)));
        assert!(pals.iter().all(|p| p.is_ordinary()));
    }

    #[test]
    fn run_examples() {
        assert_eq!(oracle_runs(&w("aaa")), vec![Run { beg: 1, end: 3, period: 1 }]);
        assert_eq!(oracle_runs(&w("abaab")), vec![Run { beg: 3, end: 4, period: 1 }]);
        assert!(oracle_runs(&w("ab")).is_empty());
    }

    #[test]
    fn ordinary_palindrome_examples() {
        assert_eq!(oracle_maximal_ordinary_palindromes(&w("aba")), vec![seg(1, 1), seg(1, 3), seg(3, 3)]);
        assert_eq!(
            oracle_maximal_ordinary_palindromes(&w("aaa")),
            vec![seg(1, 1), seg(1, 2), seg(1, 3), seg(2, 3), seg(3, 3)]
        );
        assert_eq!(oracle_maximal_ordinary_palindromes(&w("ab")), vec![seg(1, 1), seg(2, 2)]);
    }

    fn all_words(len: usize, sigma: u32) -> Vec<Word> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| (0..sigma).map(move |c| [v.clone(), vec![c]].concat()))
                .collect();
        }
        out.into_iter().map(Word::new).collect()
    }

    #[test]
    fn outputs_satisfy_type_invariants_and_ordinary_subset_matches() {
        for len in 0..=10 {
            for word in all_words(len, 2) {
                let reps = oracle_maximal_gapped_repeats(&word);
                assert!(reps.iter().all(|r| r.is_valid_in(&word) && r.is_maximal_in(&word)));
                let pals = oracle_maximal_gapped_palindromes(&word);
                assert!(pals.iter().all(|p| p.is_valid_in(&word) && p.is_maximal_in(&word)));
                let ordinary: Vec<Segment> = pals.iter().filter(|p| p.is_ordinary()).map(|p| p.left).collect();
                let direct = oracle_maximal_ordinary_palindromes(&word);
                assert_eq!(ordinary, direct, "{word:?}");
                assert!(direct.len() <= (2 * word.len()).saturating_sub(1));
                // Non-ordinary maximal palindromes always have a gap of at least two.
                assert!(pals.iter().all(|p| p.is_ordinary() || p.gap() >= 2), "{word:?}");
                assert!(oracle_runs(&word).iter().all(|r| r.is_valid_in(&word)));
            }
        }
    }
}
