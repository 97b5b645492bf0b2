//! Longest common extensions over an integer alphabet.
//!
//! Suffix array by prefix doubling, LCP by Kasai's algorithm, and a
//! block-decomposed range-minimum structure on top of the LCP array.

use crate::word::Symbol;

/// Suffix array of `s` (0-based suffix starts in lexicographic order).
pub fn suffix_array(s: &[Symbol]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut rank = compress(s);
    let mut sa: Vec<u32> = (0..n as u32).collect();
    counting_sort(&mut sa, &rank, n.max(*rank.iter().max().unwrap() as usize + 1));
    let mut next_rank = vec![0u32; n];
    let mut second = Vec::with_capacity(n);
    let mut k = 1;
    loop {
        // Order by second key: suffixes without a second half first, then the
        // rest in the order of their second halves; the stable sort by first
        // key then yields the order on 2k-prefixes.
        second.clear();
        second.extend((n.saturating_sub(k)..n).map(|i| i as u32));
        second.extend(sa.iter().filter(|&&j| j as usize >= k).map(|&j| j - k as u32));
        sa.copy_from_slice(&second);
        counting_sort(&mut sa, &rank, n);

        let key2 = |i: usize| -> i64 { if i + k < n { rank[i + k] as i64 } else { -1 } };
        next_rank[sa[0] as usize] = 0;
        for r in 1..n {
            let (a, b) = (sa[r - 1] as usize, sa[r] as usize);
            let differs = rank[a] != rank[b] || key2(a) != key2(b);
            next_rank[b] = next_rank[a] + differs as u32;
        }
        std::mem::swap(&mut rank, &mut next_rank);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        k *= 2;
    }
    sa
}

fn compress(s: &[Symbol]) -> Vec<u32> {
    let mut alphabet: Vec<Symbol> = s.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    s.iter().map(|c| alphabet.binary_search(c).unwrap() as u32).collect()
}

/// Stable sort of `items` by `key[item]`, keys below `bound`.
fn counting_sort(items: &mut [u32], key: &[u32], bound: usize) {
    let mut count = vec![0usize; bound + 1];
    for &i in items.iter() {
        count[key[i as usize] as usize + 1] += 1;
    }
    for c in 1..count.len() {
        count[c] += count[c - 1];
    }
    let mut out = vec![0u32; items.len()];
    for &i in items.iter() {
        let slot = &mut count[key[i as usize] as usize];
        out[*slot] = i;
        *slot += 1;
    }
    items.copy_from_slice(&out);
}

/// `lcp[r]` = longest common prefix of suffixes `sa[r - 1]` and `sa[r]`; `lcp[0] = 0`.
pub fn lcp_array(s: &[Symbol], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

const BLOCK: usize = 32;

/// Range minimum: sparse table over block minima plus in-block scans.
struct RangeMin {
    values: Vec<u32>,
    table: Vec<Vec<u32>>,
}

impl RangeMin {
    fn new(values: Vec<u32>) -> Self {
        let blocks: Vec<u32> = values.chunks(BLOCK).map(|c| *c.iter().min().unwrap()).collect();
        let mut table = vec![blocks];
        let mut width = 1;
        while 2 * width <= table[0].len() {
            let prev = table.last().unwrap();
            let level: Vec<u32> = (0..prev.len() - width).map(|i| prev[i].min(prev[i + width])).collect();
            table.push(level);
            width *= 2;
        }
        RangeMin { values, table }
    }

    /// Minimum of `values[lo..=hi]`.
    fn query(&self, lo: usize, hi: usize) -> u32 {
        let (bl, bh) = (lo / BLOCK, hi / BLOCK);
        if bl == bh {
            return *self.values[lo..=hi].iter().min().unwrap();
        }
        let mut best = (*self.values[lo..(bl + 1) * BLOCK].iter().min().unwrap())
            .min(*self.values[bh * BLOCK..=hi].iter().min().unwrap());
        if bl + 1 < bh {
            let (a, b) = (bl + 1, bh - 1);
            let level = usize::BITS as usize - 1 - (b - a + 1).leading_zeros() as usize;
            let t = &self.table[level];
            best = best.min(t[a]).min(t[b + 1 - (1 << level)]);
        }
        best
    }
}

/// Forward longest-common-extension queries on one string.
pub struct ForwardLce {
    rank: Vec<u32>,
    rmq: RangeMin,
    n: usize,
}

impl ForwardLce {
    pub fn new(s: &[Symbol]) -> Self {
        let sa = suffix_array(s);
        let mut rank = vec![0u32; s.len()];
        for (r, &i) in sa.iter().enumerate() {
            rank[i as usize] = r as u32;
        }
        let lcp = lcp_array(s, &sa, &rank);
        ForwardLce { rank, rmq: RangeMin::new(lcp), n: s.len() }
    }

    /// Length of the longest common prefix of the suffixes at 0-based `i` and `j`.
    pub fn query(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.n - i;
        }
        if i >= self.n || j >= self.n {
            return 0;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a + 1, b) } else { (b + 1, a) };
        self.rmq.query(lo, hi) as usize
    }
}

/// Forward and backward extensions with a short direct-comparison fast path.
pub struct Lce<'a> {
    s: &'a [Symbol],
    forward: ForwardLce,
    backward: ForwardLce,
}

const DIRECT: usize = 16;

impl<'a> Lce<'a> {
    pub fn new(s: &'a [Symbol]) -> Self {
        let reversed: Vec<Symbol> = s.iter().rev().copied().collect();
        Lce { s, forward: ForwardLce::new(s), backward: ForwardLce::new(&reversed) }
    }

    /// Number of `k >= 0` with `s[i + k] = s[j + k]` for all smaller `k` too.
    pub fn forward(&self, i: usize, j: usize) -> usize {
        let n = self.s.len();
        let limit = n.saturating_sub(i.max(j)).min(DIRECT);
        let mut k = 0;
        while k < limit && self.s[i + k] == self.s[j + k] {
            k += 1;
        }
        if k < DIRECT { k } else { self.forward.query(i, j) }
    }

    /// Number of `k >= 0` with `s[i - k] = s[j - k]` for all smaller `k` too.
    pub fn backward(&self, i: usize, j: usize) -> usize {
        let n = self.s.len();
        let limit = (i.min(j) + 1).min(DIRECT);
        let mut k = 0;
        while k < limit && self.s[i - k] == self.s[j - k] {
            k += 1;
        }
        if k < DIRECT { k } else { self.backward.query(n - 1 - i, n - 1 - j) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_sa(s: &[Symbol]) -> Vec<u32> {
        let mut sa: Vec<u32> = (0..s.len() as u32).collect();
        sa.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
        sa
    }

    fn naive_lce(s: &[Symbol], i: usize, j: usize) -> usize {
        s[i..].iter().zip(&s[j..]).take_while(|(a, b)| a == b).count()
    }

    #[test]
    fn suffix_array_small() {
        let s: Vec<Symbol> = b"banana".iter().map(|&b| b as Symbol).collect();
        assert_eq!(suffix_array(&s), vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(suffix_array(&[7]), vec![0]);
        assert!(suffix_array(&[]).is_empty());
        assert_eq!(suffix_array(&[1_000_000, 3, 1_000_000]), vec![1, 2, 0]);
    }

    #[test]
    fn range_min_spans_blocks() {
        let values: Vec<u32> = (0..300).map(|i| (i * 7919 % 101) as u32).collect();
        let rmq = RangeMin::new(values.clone());
        for lo in (0..300).step_by(7) {
            for hi in lo..300 {
                assert_eq!(rmq.query(lo, hi), *values[lo..=hi].iter().min().unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn suffix_array_matches_naive(s in prop::collection::vec(0u32..4, 0..200)) {
            prop_assert_eq!(suffix_array(&s), naive_sa(&s));
        }

        #[test]
        fn lce_matches_naive(s in prop::collection::vec(0u32..2, 1..150), a in 0usize..150, b in 0usize..150) {
            let n = s.len();
            let (i, j) = (a % n, b % n);
            let lce = Lce::new(&s);
            prop_assert_eq!(lce.forward(i, j), naive_lce(&s, i, j));
            let back = (0..=i.min(j)).take_while(|&k| s[i - k] == s[j - k]).count();
            prop_assert_eq!(lce.backward(i, j), back);
        }
    }
}
