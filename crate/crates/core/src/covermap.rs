//! Point mappings of maximal repeats and palindromes, γ-cover geometry, and
//! the two numeric lemmas the counting argument rests on.
//!
//! A repeat maps to `phi = (end(left), q)`; a non-ordinary palindrome maps to
//! `phi_t = (m, d)`, the rounded mid-point of its left arm and the rounded
//! distance to the mid-point of its right arm. Both images lie in the region
//! `{(x, y) : 1 <= y <= n - 1, 1 <= x <= n - y}`.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::integer::Integer;
use num::rational::Ratio;
use num::{BigRational, One, ToPrimitive, Zero};
use serde::Serialize;

use crate::rational::{self, Rational};
use crate::word::{check_gamma, GappedPalindrome, GappedRepeat, Segment, Word};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

pub fn in_region(p: Point, n: usize) -> bool {
    let n = n as i64;
    1 <= p.y && p.y < n && 1 <= p.x && p.x <= n - p.y
}

pub fn phi(r: &GappedRepeat) -> Point {
    Point::new(r.left.end as i64, r.period() as i64)
}

/// Inverse of [`phi`] on maximal repeats; `None` when no maximal repeat maps to `p`.
pub fn restore_repeat_from_point(w: &Word, p: Point) -> Option<GappedRepeat> {
    let n = w.len();
    if n < 2 || !in_region(p, n) {
        return None;
    }
    let (x, q) = (p.x as usize, p.y as usize);
    if w.at(x) != w.at(x + q) {
        return None;
    }
    if x + q < n && w.at(x + 1) == w.at(x + q + 1) {
        return None;
    }
    let mut s = x;
    while s > 1 && w.at(s - 1) == w.at(s - 1 + q) {
        s -= 1;
    }
    Some(GappedRepeat { left: Segment { beg: s, end: x }, right: Segment { beg: s + q, end: x + q } })
}

/// `(ceil((bL + eL) / 2), floor((bR + eR) / 2) - ceil((bL + eL) / 2))`.
///
/// Meant for maximal non-ordinary palindromes; for those `d >= 3`.
pub fn phi_t(g: &GappedPalindrome) -> Point {
    let m = (g.left.beg + g.left.end).div_ceil(2) as i64;
    let right_mid = ((g.right.beg + g.right.end) / 2) as i64;
    Point::new(m, right_mid - m)
}

/// `c(u) = ((u + 1) mod 2) / 2`: zero for odd `u`, one half for even `u`.
pub fn mid_correction(u: usize) -> Rational {
    Rational::new(((u + 1) % 2) as i64, 2)
}

/// Checks the identities tying `(m, d)` back to the arm borders, in exact
/// rationals, together with the alternative form
/// `(m, d) = ((bL + eL) / 2 + c(u), q - 2 c(u))`.
pub fn mid_point_identities_hold(g: &GappedPalindrome) -> bool {
    let Point { x: m, y: d } = phi_t(g);
    let u = g.arm_len();
    let c = mid_correction(u);
    let half = Rational::new(1, 2);
    let (m, d) = (Rational::from_integer(m), Rational::from_integer(d));
    let uh = Rational::new(u as i64, 2);
    let int = |v: usize| Rational::from_integer(v as i64);
    let diff = uh - c;
    let odd_half = diff.numer().is_odd() && *diff.denom() == 2;
    odd_half
        && int(g.left.beg) == m - c - uh + half
        && int(g.left.end) == m - c + uh - half
        && int(g.right.beg) == m + d + c - uh + half
        && m == Rational::new((g.left.beg + g.left.end) as i64, 2) + c
        && d == int(g.period()) - c * 2
}

/// Inverse of [`phi_t`]: the maximal palindrome through the pair `(m, m + d)`,
/// found by extending inwards and outwards. If the inward matches reach the
/// centre the result is the ordinary palindrome around it.
pub fn restore_palindrome_from_point(w: &Word, p: Point) -> Option<GappedPalindrome> {
    let n = w.len();
    if n < 2 || !in_region(p, n) {
        return None;
    }
    let (m, d) = (p.x as usize, p.y as usize);
    if w.at(m) != w.at(m + d) {
        return None;
    }
    let sigma = 2 * m + d;
    let mut e = m;
    while 2 * (e + 1) <= sigma && w.at(e + 1) == w.at(sigma - e - 1) {
        e += 1;
    }
    let mut s = m;
    while s > 1 && sigma - s < n && w.at(s - 1) == w.at(sigma - s + 1) {
        s -= 1;
    }
    if e == sigma / 2 {
        return Some(GappedPalindrome::ordinary(Segment { beg: s, end: sigma - s }));
    }
    Some(GappedPalindrome { left: Segment { beg: s, end: e }, right: Segment { beg: sigma - e, end: sigma - s } })
}

/// The points `(m + i, d - 2i)` for `i` in `[-floor(u/2) - 1, -1] ∪ [1, ceil(u/2)]`,
/// none of which can be the image of a maximal non-ordinary palindrome.
pub fn phi_t_exclusions(g: &GappedPalindrome) -> Vec<Point> {
    let Point { x: m, y: d } = phi_t(g);
    let u = g.arm_len() as i64;
    let below = -(u / 2) - 1..=-1;
    let above = 1..=(u + 1) / 2;
    below.chain(above).map(|i| Point::new(m + i, d - 2 * i)).collect()
}

/// `hat` γ-covers `p` iff `x̂ - γŷ <= x <= x̂` and `ŷ(1 - γ) <= y <= ŷ`.
pub fn gamma_covers(hat: Point, p: Point, gamma: Rational) -> bool {
    let (num, den) = (*gamma.numer() as i128, *gamma.denom() as i128);
    let (hx, hy, x, y) = (hat.x as i128, hat.y as i128, p.x as i128, p.y as i128);
    (hx - x) * den <= num * hy && x <= hx && hy * (den - num) <= y * den && y <= hy
}

/// Integer points covered by a point, as inclusive ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct CoverRect {
    x_lo: i64,
    x_hi: i64,
    y_lo: i64,
    y_hi: i64,
}

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

fn cover_rect(hat: Point, gamma: Rational) -> CoverRect {
    let (num, den) = (*gamma.numer() as i128, *gamma.denom() as i128);
    let (hx, hy) = (hat.x as i128, hat.y as i128);
    CoverRect {
        x_lo: ceil_div(hx * den - num * hy, den) as i64,
        x_hi: hat.x,
        y_lo: ceil_div(hy * (den - num), den) as i64,
        y_hi: hat.y,
    }
}

/// All unordered pairs of distinct points that γ-cover a common integer point.
///
/// Works on the covered rectangles directly (sweep over their x-ranges), never
/// on the covered lattice points.
pub fn cover_conflicts(points: &[Point], gamma: Rational) -> Result<Vec<(Point, Point)>> {
    check_gamma(gamma)?;
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut rects: Vec<(CoverRect, Point)> = pts.iter().map(|&p| (cover_rect(p, gamma), p)).collect();
    rects.retain(|(r, _)| r.x_lo <= r.x_hi && r.y_lo <= r.y_hi);
    rects.sort_by_key(|(r, p)| (r.x_lo, *p));
    let mut out = Vec::new();
    for i in 0..rects.len() {
        let (a, pa) = rects[i];
        for &(b, pb) in rects[i + 1..].iter().take_while(|(b, _)| b.x_lo <= a.x_hi) {
            if a.y_lo.max(b.y_lo) <= a.y_hi.min(b.y_hi) {
                out.push(if pa < pb { (pa, pb) } else { (pb, pa) });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Which case of the closed form produced an interval count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CountBranch {
    /// `0 < ψ - floor(ψ) <= δ`: `floor(1/γ) + 1` integers.
    FloorPlusOne,
    /// Otherwise: `floor(1/γ)` integers.
    Floor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalCount {
    pub count: u64,
    pub branch: CountBranch,
}

/// `|[ψ - 1/γ, ψ) ∩ Z|`, counted directly and by the closed form; the two
/// must agree.
pub fn interval_int_count(psi: Rational, gamma: Rational) -> Result<IntervalCount> {
    check_gamma(gamma)?;
    let inv = gamma.recip();
    let lo = psi - inv;
    let direct = (rational::floor_i64(lo)..=rational::ceil_i64(psi))
        .filter(|&k| {
            let k = Rational::from_integer(k);
            lo <= k && k < psi
        })
        .count() as u64;

    let whole = rational::floor_i64(inv) as u64;
    let delta = inv - inv.floor();
    let frac = psi - psi.floor();
    let (count, branch) = if Rational::zero() < frac && frac <= delta {
        (whole + 1, CountBranch::FloorPlusOne)
    } else {
        (whole, CountBranch::Floor)
    };
    if count != direct {
        return Err(Error::Invariant(format!(
            "interval count for psi={} gamma={}: direct {direct}, closed form {count}",
            rational::render(psi),
            rational::render(gamma)
        )));
    }
    Ok(IntervalCount { count, branch })
}

/// `g(i) = |{y >= 1 : (i - 1)/γ <= y < i/γ}|`.
pub fn band_size(i: u64, gamma: Rational) -> u64 {
    let inv = gamma.recip();
    let hi = rational::ceil_i64(inv * Rational::from_integer(i as i64));
    let lo = rational::ceil_i64(inv * Rational::from_integer(i as i64 - 1)).max(1);
    (hi - lo).max(0) as u64
}

#[derive(Clone, Debug, PartialEq)]
pub struct InequalityCheck {
    pub holds: bool,
    /// `Σ f(i) g(i)` with `f(i) = n / i^2`, `i = 1..=ceil(nγ)`.
    pub lhs: BigRational,
    /// `Σ f(i) / γ` over the same range.
    pub rhs: BigRational,
}

/// Evaluates `Σ f(i) g(i) <= Σ f(i) / γ` for `f(i) = n / i^2` exactly.
///
/// Both sums are accumulated over the common denominator `lcm(1^2, ..., N^2)`,
/// which is grown incrementally, so every step is a big-by-small operation.
pub fn check_nonincreasing_inequality(n: u64, gamma: Rational) -> Result<InequalityCheck> {
    check_gamma(gamma)?;
    if n == 0 {
        return Err(Error::Parameter("n must be >= 1".into()));
    }
    let (a, b) = (*gamma.numer() as u64, *gamma.denom() as u64);
    let terms = rational::ceil_i64(gamma * Rational::from_integer(n as i64)) as u64;
    let mut denom = BigUint::one();
    // Both sides multiplied by `a`, the numerator of γ, to keep them integral.
    let mut lhs = BigUint::zero();
    let mut rhs = BigUint::zero();
    for i in 1..=terms {
        let sq = i * i;
        let common = (&denom % sq).to_u64().unwrap().gcd(&sq);
        let grow = sq / common;
        if grow > 1 {
            denom *= grow;
            lhs *= grow;
            rhs *= grow;
        }
        let share = &denom / sq;
        lhs += &share * (a * band_size(i, gamma)) * n;
        rhs += &share * b * n;
    }
    let holds = lhs <= rhs;
    let scaled = BigInt::from(denom) * BigInt::from(a);
    Ok(InequalityCheck {
        holds,
        lhs: Ratio::new_raw(BigInt::from(lhs), scaled.clone()),
        rhs: Ratio::new_raw(BigInt::from(rhs), scaled),
    })
}

/// Upper bounds on conflict-free point sets in the region of a length-`n` word.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PointBounds {
    /// `n π² / (6γ)` for any conflict-free subset of the region.
    pub general: f64,
    /// `n (π²/6 - 1/2) / γ` for conflict-free subsets of a `phi` or `phi_t` image.
    pub refined: f64,
    /// `n π²/6 - 3n/4`, only stated for `γ = 1`.
    pub unit_gamma: Option<f64>,
}

pub const BASEL: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

pub fn point_bounds(n: usize, gamma: Rational) -> Result<PointBounds> {
    check_gamma(gamma)?;
    if n < 2 {
        return Err(Error::Parameter(format!("point bounds need n >= 2, got {n}")));
    }
    let nf = n as f64;
    let g = rational::to_f64(gamma);
    Ok(PointBounds {
        general: nf * BASEL / g,
        refined: nf * (BASEL - 0.5) / g,
        unit_gamma: (gamma == Rational::from_integer(1)).then_some(nf * BASEL - 0.75 * nf),
    })
}
