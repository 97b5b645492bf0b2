//! Words, segments and the objects enumerated over them.
//!
//! Positions are 1-based: `w[1]` is the first symbol and a segment
//! `[beg..end]` is inclusive on both ends.

use std::cmp::Ordering;
use std::fmt;

use crate::rational::{self, Rational};
use crate::{Error, Result};

pub type Symbol = u32;

/// An immutable sequence of integer symbols.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word { symbols }
    }

    /// Decodes raw bytes, one symbol per byte.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        Word { symbols: bytes.iter().map(|&b| b as Symbol).collect() }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// The symbol at 1-based position `i`.
    ///
    /// Panics if `i` is not in `1..=n`.
    #[inline]
    pub fn at(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    /// The symbol at 1-based position `i`, or `None` outside the word
    /// (including position 0).
    #[inline]
    pub fn get(&self, i: usize) -> Option<Symbol> {
        i.checked_sub(1).and_then(|k| self.symbols.get(k).copied())
    }

    pub fn factor(&self, s: Segment) -> Result<&[Symbol]> {
        if s.end > self.len() {
            return Err(Error::Range { beg: s.beg, end: s.end, len: self.len() });
        }
        Ok(&self.symbols[s.beg - 1..s.end])
    }

    pub fn reversed(&self) -> Word {
        Word { symbols: self.symbols.iter().rev().copied().collect() }
    }
}

impl From<&str> for Word {
    fn from(text: &str) -> Self {
        Word::from_bytes(text.as_bytes())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.iter().all(|&c| (0x20..0x7f).contains(&c)) {
            let text: String = self.symbols.iter().map(|&c| c as u8 as char).collect();
            write!(f, "Word({text:?})")
        } else {
            write!(f, "Word({:?})", self.symbols)
        }
    }
}

/// Returns `w[beg(s)..end(s)]`.
pub fn factor(w: &Word, s: Segment) -> Result<&[Symbol]> {
    w.factor(s)
}

/// The least `p` in `1..=|f|` with `f[i] = f[i + p]` for every valid `i`.
///
/// A word without a proper period gets `|f|`; [`is_periodic`] is the only
/// place that interprets that value.
pub fn smallest_period(f: &[Symbol]) -> Result<usize> {
    if f.is_empty() {
        return Err(Error::Empty);
    }
    Ok(f.len() - border_array(f)[f.len() - 1])
}

/// True iff the smallest period of `f` is at most `floor(|f| / 2)`.
pub fn is_periodic(f: &[Symbol]) -> Result<bool> {
    Ok(smallest_period(f)? <= f.len() / 2)
}

/// `border[i]` is the length of the longest proper border of `f[..=i]`.
pub(crate) fn border_array(f: &[Symbol]) -> Vec<usize> {
    let mut border = vec![0; f.len()];
    let mut k = 0;
    for i in 1..f.len() {
        while k > 0 && f[i] != f[k] {
            k = border[k - 1];
        }
        if f[i] == f[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// A non-empty inclusive interval of positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub beg: usize,
    pub end: usize,
}

impl Segment {
    pub fn new(beg: usize, end: usize) -> Result<Self> {
        if beg == 0 || beg > end {
            return Err(Error::Parameter(format!("segment [{beg}..{end}] must satisfy 1 <= beg <= end")));
        }
        Ok(Segment { beg, end })
    }

    /// Segment of length `len >= 1` starting at `beg`.
    pub(crate) fn at(beg: usize, len: usize) -> Self {
        debug_assert!(beg >= 1 && len >= 1);
        Segment { beg, end: beg + len - 1 }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.end - self.beg + 1
    }

    pub fn within(&self, n: usize) -> bool {
        self.beg >= 1 && self.beg <= self.end && self.end <= n
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.beg, self.end)
    }
}

fn canonical_key(left: &Segment, right: &Segment) -> (usize, usize, usize) {
    (left.beg, right.beg, left.len())
}

/// A pair of equal factors at distinct start positions; the arms may overlap.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GappedRepeat {
    pub left: Segment,
    pub right: Segment,
}

impl GappedRepeat {
    /// Builds `(w[left_beg..left_beg+u-1], w[right_beg..right_beg+u-1])`.
    pub fn new(left_beg: usize, right_beg: usize, arm_len: usize) -> Result<Self> {
        if left_beg == 0 || arm_len == 0 || right_beg <= left_beg {
            return Err(Error::Parameter(format!(
                "gapped repeat needs 1 <= left_beg < right_beg and u >= 1, got ({left_beg}, {right_beg}, {arm_len})"
            )));
        }
        Ok(GappedRepeat { left: Segment::at(left_beg, arm_len), right: Segment::at(right_beg, arm_len) })
    }

    pub fn arm_len(&self) -> usize {
        self.left.len()
    }

    /// `q = beg(right) - beg(left)`.
    pub fn period(&self) -> usize {
        self.right.beg - self.left.beg
    }

    /// `beg(right) - end(left) - 1`; negative when the arms overlap.
    pub fn gap(&self) -> isize {
        self.right.beg as isize - self.left.end as isize - 1
    }

    pub fn overlaps(&self) -> bool {
        self.left.end >= self.right.beg
    }

    pub fn is_alpha_gapped(&self, alpha: Rational) -> bool {
        rational::le_scaled(self.period() as i64, alpha, self.arm_len() as i64)
    }

    /// Checks every structural invariant and the factor equality in `w`.
    pub fn is_valid_in(&self, w: &Word) -> bool {
        self.left.len() == self.right.len()
            && self.left.beg < self.right.beg
            && self.left.within(w.len())
            && self.right.within(w.len())
            && w.factor(self.left).ok() == w.factor(self.right).ok()
    }

    /// Neither both arms extend to the left nor both to the right.
    pub fn is_maximal_in(&self, w: &Word) -> bool {
        let left_ok = self.left.beg == 1 || w.at(self.left.beg - 1) != w.at(self.right.beg - 1);
        let right_ok = self.right.end == w.len() || w.at(self.left.end + 1) != w.at(self.right.end + 1);
        left_ok && right_ok
    }
}

impl Ord for GappedRepeat {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_key(&self.left, &self.right).cmp(&canonical_key(&other.left, &other.right))
    }
}

impl PartialOrd for GappedRepeat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GappedRepeat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.left, self.right)
    }
}

/// A pair of segments where the right arm is the reverse of the left arm.
/// The arms coincide for an ordinary palindrome.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GappedPalindrome {
    pub left: Segment,
    pub right: Segment,
}

impl GappedPalindrome {
    pub fn new(left_beg: usize, right_beg: usize, arm_len: usize) -> Result<Self> {
        if left_beg == 0 || arm_len == 0 || right_beg < left_beg {
            return Err(Error::Parameter(format!(
                "gapped palindrome needs 1 <= left_beg <= right_beg and u >= 1, got ({left_beg}, {right_beg}, {arm_len})"
            )));
        }
        Ok(GappedPalindrome { left: Segment::at(left_beg, arm_len), right: Segment::at(right_beg, arm_len) })
    }

    /// The ordinary palindrome occupying `s`.
    pub fn ordinary(s: Segment) -> Self {
        GappedPalindrome { left: s, right: s }
    }

    pub fn arm_len(&self) -> usize {
        self.left.len()
    }

    pub fn period(&self) -> usize {
        self.right.beg - self.left.beg
    }

    pub fn gap(&self) -> isize {
        self.right.beg as isize - self.left.end as isize - 1
    }

    pub fn is_ordinary(&self) -> bool {
        self.left == self.right
    }

    pub fn is_alpha_gapped(&self, alpha: Rational) -> bool {
        rational::le_scaled(self.period() as i64, alpha, self.arm_len() as i64)
    }

    pub fn is_valid_in(&self, w: &Word) -> bool {
        if self.left.len() != self.right.len()
            || self.left.beg > self.right.beg
            || !self.left.within(w.len())
            || !self.right.within(w.len())
        {
            return false;
        }
        let u = self.arm_len();
        (0..u).all(|k| w.at(self.left.beg + k) == w.at(self.right.end - k))
    }

    /// Extendable neither outwards nor inwards.
    ///
    /// Inward extension turns `(L, R)` into `([bL..eL+1], [bR-1..eR])`, which
    /// is a gapped palindrome whenever `bL < bR` and `w[eL+1] = w[bR-1]`;
    /// the two compared positions may coincide or cross.
    pub fn is_maximal_in(&self, w: &Word) -> bool {
        let n = w.len();
        let outward_ok = self.left.beg == 1 || self.right.end == n || w.at(self.left.beg - 1) != w.at(self.right.end + 1);
        let inward_ok = self.left.beg == self.right.beg || w.at(self.left.end + 1) != w.at(self.right.beg - 1);
        outward_ok && inward_ok
    }
}

impl Ord for GappedPalindrome {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_key(&self.left, &self.right).cmp(&canonical_key(&other.left, &other.right))
    }
}

impl PartialOrd for GappedPalindrome {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GappedPalindrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.left, self.right)
    }
}

/// A maximal repetition `w[beg..end]` with smallest period `period`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Run {
    pub beg: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.end - self.beg + 1
    }

    pub fn segment(&self) -> Segment {
        Segment { beg: self.beg, end: self.end }
    }

    /// `len / period`, at least 2.
    pub fn exponent(&self) -> Rational {
        Rational::new(self.len() as i64, self.period as i64)
    }

    /// Checks smallest period, exponent and maximality against `w`.
    pub fn is_valid_in(&self, w: &Word) -> bool {
        let Ok(f) = w.factor(self.segment()) else { return false };
        if self.period == 0 || 2 * self.period > f.len() || smallest_period(f).ok() != Some(self.period) {
            return false;
        }
        let p = self.period;
        let left_ok = self.beg == 1 || w.at(self.beg - 1) != w.at(self.beg - 1 + p);
        let right_ok = self.end == w.len() || w.at(self.end + 1) != w.at(self.end + 1 - p);
        left_ok && right_ok
    }
}

impl fmt::Debug for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.beg, self.end, self.period)
    }
}

/// α, β and γ with their admissible ranges checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl Params {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self> {
        check_alpha(alpha)?;
        if !(rational::is_positive(beta) && beta < Rational::from_integer(1)) {
            return Err(Error::Parameter(format!("beta must lie in (0, 1), got {}", rational::render(beta))));
        }
        check_gamma(gamma)?;
        Ok(Params { alpha, beta, gamma })
    }
}

pub(crate) fn check_alpha(alpha: Rational) -> Result<()> {
    if alpha < Rational::from_integer(1) {
        return Err(Error::Parameter(format!("alpha must be >= 1, got {}", rational::render(alpha))));
    }
    Ok(())
}

pub(crate) fn check_gamma(gamma: Rational) -> Result<()> {
    if !(rational::is_positive(gamma) && gamma <= Rational::from_integer(1)) {
        return Err(Error::Parameter(format!("gamma must lie in (0, 1], got {}", rational::render(gamma))));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn brute_smallest_period(f: &[Symbol]) -> usize {
        (1..=f.len()).find(|&p| (0..f.len() - p).all(|i| f[i] == f[i + p])).unwrap()
    }

    fn periods(f: &[Symbol]) -> Vec<usize> {
        (1..f.len()).filter(|&p| (0..f.len() - p).all(|i| f[i] == f[i + p])).collect()
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    fn all_words(len: usize, sigma: u32) -> Vec<Vec<Symbol>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| (0..sigma).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                }))
                .collect();
        }
        out
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor(&w("aaa"), Segment::new(1, 2).unwrap()).unwrap(), w("aa").symbols());
        assert_eq!(factor(&w("abaab"), Segment::new(3, 4).unwrap()).unwrap(), w("aa").symbols());
        assert_eq!(factor(&w("ab"), Segment::new(2, 2).unwrap()).unwrap(), w("b").symbols());
        assert!(matches!(factor(&w("ab"), Segment::new(2, 3).unwrap()), Err(Error::Range { .. })));
        assert!(Segment::new(0, 1).is_err());
        assert!(Segment::new(3, 2).is_err());
    }

    #[test]
    fn smallest_period_examples() {
        assert_eq!(smallest_period(w("abab").symbols()).unwrap(), 2);
        assert_eq!(smallest_period(w("aaa").symbols()).unwrap(), 1);
        assert_eq!(smallest_period(w("abaab").symbols()).unwrap(), 3);
        assert_eq!(smallest_period(w("ab").symbols()).unwrap(), 2);
        assert_eq!(smallest_period(&[]), Err(Error::Empty));
    }

    #[test]
    fn is_periodic_examples() {
        assert!(is_periodic(w("aa").symbols()).unwrap());
        assert!(!is_periodic(w("ab").symbols()).unwrap());
        assert!(!is_periodic(w("abaab").symbols()).unwrap());
        assert!(!is_periodic(w("a").symbols()).unwrap());
        assert!(is_periodic(&[]).is_err());
    }

    #[test]
    fn smallest_period_matches_exhaustive_scan_on_small_words() {
        for len in 1..=12 {
            for f in all_words(len, 2) {
                assert_eq!(smallest_period(&f).unwrap(), brute_smallest_period(&f), "{f:?}");
            }
        }
    }

    #[test]
    fn fine_wilf_on_all_factors() {
        for len in 1..=11 {
            for f in all_words(len, 2) {
                let ps = periods(&f);
                for &p in &ps {
                    for &p2 in &ps {
                        if p + p2 <= f.len() {
                            let g = gcd(p, p2);
                            assert!((0..f.len() - g).all(|i| f[i] == f[i + g]), "{f:?} {p} {p2}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn periodic_occurrences_are_spaced_by_the_period() {
        for word in all_words(12, 2).into_iter().chain(all_words(8, 3)) {
            let n = word.len();
            for b in 0..n {
                for e in b + 1..n {
                    let u = &word[b..=e];
                    let p = brute_smallest_period(u);
                    if p > u.len() / 2 {
                        continue;
                    }
                    let occ: Vec<usize> = (0..=n - u.len()).filter(|&s| &word[s..s + u.len()] == u).collect();
                    for pair in occ.windows(2) {
                        assert!(pair[1] - pair[0] >= p, "{word:?} {u:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn run_exponent_is_exact() {
        let r = Run { beg: 1, end: 5, period: 2 };
        assert_eq!(r.exponent(), Rational::new(5, 2));
        assert!(r.is_valid_in(&w("ababa")));
        assert!(!r.is_valid_in(&w("ababab")));
    }

    #[test]
    fn palindrome_maximality_follows_inward_extension() {
        // Gap 1: the middle symbol pairs with itself, so the pair extends inwards.
        let p = GappedPalindrome::new(1, 3, 1).unwrap();
        assert!(p.is_valid_in(&w("aba")));
        assert!(!p.is_maximal_in(&w("aba")));
        let abc = w("abcdba");
        let p = GappedPalindrome::new(1, 5, 2).unwrap();
        assert!(p.is_valid_in(&abc) && p.is_maximal_in(&abc));
        assert!(GappedPalindrome::ordinary(Segment::new(1, 3).unwrap()).is_maximal_in(&w("aba")));
    }

    #[test]
    fn params_ranges() {
        let r = Rational::new;
        assert!(Params::new(r(3, 2), r(6, 7), r(1, 28)).is_ok());
        assert!(Params::new(r(1, 2), r(6, 7), r(1, 28)).is_err());
        assert!(Params::new(r(2, 1), r(1, 1), r(1, 28)).is_err());
        assert!(Params::new(r(2, 1), r(1, 2), r(0, 1)).is_err());
        assert!(Params::new(r(2, 1), r(1, 2), r(1, 1)).is_ok());
    }

    proptest! {
        #[test]
        fn smallest_period_is_a_period_and_minimal(f in prop::collection::vec(0u32..3, 1..32)) {
            let p = smallest_period(&f).unwrap();
            prop_assert_eq!(p, brute_smallest_period(&f));
            prop_assert_eq!(is_periodic(&f).unwrap(), 2 * p <= f.len());
        }
    }
}
