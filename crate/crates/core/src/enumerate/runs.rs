use std::collections::HashSet;

use super::lce::Lce;
use crate::word::{Run, Word};

/// All runs of `w`, sorted by `(beg, end, period)`.
///
/// For every period `p`, the positions `0, p, 2p, ...` are probed with a
/// forward and a backward extension query; every run of period `p` contains
/// one of these positions early enough to be found, so `O(n log n)` queries
/// suffice. A maximal segment of period `p` whose smallest period is a proper
/// divisor of `p` coincides with the run of that smaller period, which was
/// already recorded when the smaller period was processed.
pub fn compute_runs(w: &Word) -> Vec<Run> {
    let s = w.symbols();
    let n = s.len();
    if n < 2 {
        return Vec::new();
    }
    let lce = Lce::new(s);
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut runs = Vec::new();
    for p in 1..=n / 2 {
        let mut i = 0;
        while i + p < n {
            let fwd = lce.forward(i, i + p);
            let bwd = if i == 0 { 0 } else { lce.backward(i - 1, i + p - 1) };
            if fwd + bwd >= p {
                let (b, e) = (i - bwd, i + p + fwd - 1);
                if seen.insert((b, e)) {
                    runs.push(Run { beg: b + 1, end: e + 1, period: p });
                }
                // Later probes inside this run would find it again.
                let last_probe = e + 1 - p;
                i = (last_probe / p + 1) * p;
            } else {
                i += p;
            }
        }
    }
    runs.sort();
    runs
}
