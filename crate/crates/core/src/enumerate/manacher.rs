use crate::word::{Segment, Word};

/// All maximal ordinary palindromes (non-empty, both parities) in linear time.
pub fn manacher(w: &Word) -> Vec<Segment> {
    let s = w.symbols();
    let n = s.len();
    let mut out = Vec::with_capacity(2 * n);

    // odd[i]: radius of the longest odd palindrome centred at i (length 2r - 1).
    let mut odd = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize); // rightmost window [l, r)
    for i in 0..n {
        let mut k = if i < r { odd[l + r - 1 - i].min(r - i) } else { 1 };
        while i + k < n && i >= k && s[i + k] == s[i - k] {
            k += 1;
        }
        odd[i] = k;
        if i + k > r {
            l = i + 1 - k;
            r = i + k;
        }
    }
    // even[i]: half-length of the longest even palindrome with right half starting at i.
    let mut even = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize);
    for i in 0..n {
        let mut k = if i < r { even[l + r - i].min(r - i) } else { 0 };
        while i + k < n && i > k && s[i + k] == s[i - k - 1] {
            k += 1;
        }
        even[i] = k;
        if i + k > r {
            l = i - k;
            r = i + k;
        }
    }

    for i in 0..n {
        let k = odd[i];
        out.push(Segment { beg: i + 2 - k, end: i + k });
        let k = even[i];
        if k > 0 {
            out.push(Segment { beg: i - k + 1, end: i + k });
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_maximal_ordinary_palindromes;

    fn seg(b: usize, e: usize) -> Segment {
        Segment { beg: b, end: e }
    }

    #[test]
    fn examples() {
        assert_eq!(manacher(&Word::from("aba")), vec![seg(1, 1), seg(1, 3), seg(3, 3)]);
        assert_eq!(manacher(&Word::from("aaa")).len(), 5);
        assert_eq!(manacher(&Word::from("ab")), vec![seg(1, 1), seg(2, 2)]);
        assert!(manacher(&Word::from("")).is_empty());
    }

    #[test]
    fn agrees_with_oracle_on_structured_words() {
        for text in ["abacabadabacaba", "aabbaabbaa", "abcbaabcba", "aaaaaaab", "baaaaaaa", "abba"] {
            let w = Word::from(text);
            assert_eq!(manacher(&w), oracle_maximal_ordinary_palindromes(&w), "{text}");
        }
    }
}
