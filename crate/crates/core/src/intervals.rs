//! Exact one-dimensional segment lemmas over arbitrary-precision
//! rationals.
//!
//! Conventions, fixed across the crate: *depth* counts **open** interiors
//! (a point lying on an endpoint is not inside), while *contiguity* of a
//! union is decided over **closed** intervals (touching endpoints connect).
//! All arithmetic here is exact; floating-point data enters only through
//! [`rational_from_f64_grid`], which snaps to a fixed decimal grid.

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used by every interval operation.
pub type Rat = BigRational;

/// Decimal grid pitch used when converting floating-point endpoints to
/// rationals: values are rounded to the nearest multiple of 1e-12.
pub const RATIONAL_GRID: f64 = 1e-12;

/// Convenience constructor for the rational n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Snap a float to the 1e-12 decimal grid, exactly. This is the single
/// boundary between floating-point geometry and exact interval sweeps.
pub fn rational_from_f64_grid(x: f64) -> Rat {
    debug_assert!(x.is_finite());
    let scaled = (x / RATIONAL_GRID).round();
    BigRational::new(BigInt::from(scaled as i128), BigInt::from(1_000_000_000_000i64))
}

/// A closed interval [lo, hi] with exact rational endpoints and positive
/// length. Its weight in both segment lemmas is its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedInterval {
    lo: Rat,
    hi: Rat,
}

impl WeightedInterval {
    /// Requires `lo < hi` strictly; zero-length intervals are rejected.
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidArgument(format!(
                "interval needs lo < hi (got [{lo}, {hi}])"
            )));
        }
        Ok(WeightedInterval { lo, hi })
    }

    pub fn from_ints(lo: i64, hi: i64) -> Result<Self> {
        Self::new(rat(lo, 1), rat(hi, 1))
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn length(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2, 1)
    }
}

/// Piecewise-constant open-coverage profile of an interval family:
/// `multiplicities[i]` is the number of open interiors covering the cell
/// `(breakpoints[i], breakpoints[i+1])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthProfile {
    breakpoints: Vec<Rat>,
    multiplicities: Vec<usize>,
}

impl DepthProfile {
    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn max_depth(&self) -> usize {
        self.multiplicities.iter().copied().max().unwrap_or(0)
    }

    /// Sum of cell length times multiplicity; equals the total length of
    /// the family.
    pub fn weighted_length(&self) -> Rat {
        let mut acc = Rat::zero();
        for (i, &m) in self.multiplicities.iter().enumerate() {
            if m > 0 {
                let len = &self.breakpoints[i + 1] - &self.breakpoints[i];
                acc += len * rat(m as i64, 1);
            }
        }
        acc
    }

    /// Multiplicity-weighted centroid; equals the length-weighted centroid
    /// of the family.
    pub fn weighted_centroid(&self) -> Option<Rat> {
        let total = self.weighted_length();
        if total.is_zero() {
            return None;
        }
        let mut acc = Rat::zero();
        for (i, &m) in self.multiplicities.iter().enumerate() {
            if m > 0 {
                let len = &self.breakpoints[i + 1] - &self.breakpoints[i];
                let mid = (&self.breakpoints[i + 1] + &self.breakpoints[i]) / rat(2, 1);
                acc += len * mid * rat(m as i64, 1);
            }
        }
        Some(acc / total)
    }

    /// True when no zero-multiplicity cell separates covered cells.
    pub fn is_contiguous(&self) -> bool {
        let covered: Vec<usize> = self
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, _)| i)
            .collect();
        match (covered.first(), covered.last()) {
            (Some(&a), Some(&b)) => self.multiplicities[a..=b].iter().all(|&m| m > 0),
            _ => true,
        }
    }
}

fn require_nonempty(intervals: &[WeightedInterval]) -> Result<()> {
    if intervals.is_empty() {
        return Err(Error::InvalidArgument("empty interval family".into()));
    }
    Ok(())
}

fn total_length(intervals: &[WeightedInterval]) -> Rat {
    intervals.iter().map(|iv| iv.length()).sum()
}

fn length_weighted_centroid(intervals: &[WeightedInterval]) -> Rat {
    let total = total_length(intervals);
    let acc: Rat = intervals
        .iter()
        .map(|iv| iv.length() * iv.midpoint())
        .sum();
    acc / total
}

fn hull(intervals: &[WeightedInterval]) -> (Rat, Rat) {
    let lo = intervals.iter().map(|iv| iv.lo().clone()).min().unwrap();
    let hi = intervals.iter().map(|iv| iv.hi().clone()).max().unwrap();
    (lo, hi)
}

/// Is the union of the closed intervals a single segment? Returns the
/// leftmost maximal gap when it is not. Touching endpoints connect.
pub fn union_is_contiguous(intervals: &[WeightedInterval]) -> (bool, Option<(Rat, Rat)>) {
    if intervals.is_empty() {
        return (true, None);
    }
    let mut sorted: Vec<&WeightedInterval> = intervals.iter().collect();
    sorted.sort_by(|a, b| a.lo().cmp(b.lo()));
    let mut reach = sorted[0].hi().clone();
    for iv in &sorted[1..] {
        if *iv.lo() > reach {
            return (false, Some((reach, iv.lo().clone())));
        }
        if *iv.hi() > reach {
            reach = iv.hi().clone();
        }
    }
    (true, None)
}

/// Maximum number of open interiors sharing a point, with an exact witness
/// point attaining it.
pub fn max_open_depth(intervals: &[WeightedInterval]) -> (usize, Rat) {
    if intervals.is_empty() {
        return (0, Rat::zero());
    }
    // Events sorted by position: at each position close the intervals
    // ending there before opening the ones starting there, so the running
    // count over each gap counts strict interiors.
    let mut events: Vec<(Rat, i32)> = Vec::with_capacity(2 * intervals.len());
    for iv in intervals {
        events.push((iv.lo().clone(), 1));
        events.push((iv.hi().clone(), -1));
    }
    events.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut best = 0usize;
    let mut best_at = events[0].0.clone();
    let mut count = 0i32;
    let mut i = 0;
    while i < events.len() {
        let here = events[i].0.clone();
        while i < events.len() && events[i].0 == here {
            count += events[i].1;
            i += 1;
        }
        if i < events.len() && count as usize > best {
            best = count as usize;
            best_at = (&here + &events[i].0) / rat(2, 1);
        }
    }
    (best, best_at)
}

/// Full open-coverage profile over the sorted distinct endpoints.
/// Independent of [`max_open_depth`] and [`union_is_contiguous`]; tests
/// assert their mutual consistency.
pub fn depth_profile(intervals: &[WeightedInterval]) -> DepthProfile {
    let mut breakpoints: Vec<Rat> = intervals
        .iter()
        .flat_map(|iv| [iv.lo().clone(), iv.hi().clone()])
        .collect();
    breakpoints.sort();
    breakpoints.dedup();
    let mut multiplicities = Vec::new();
    for w in breakpoints.windows(2) {
        let count = intervals
            .iter()
            .filter(|iv| *iv.lo() <= w[0] && *iv.hi() >= w[1])
            .count();
        multiplicities.push(count);
    }
    DepthProfile {
        breakpoints,
        multiplicities,
    }
}

/// Cover a contiguous union of weighted segments by the segment of length
/// `sum of lengths` centered at their length-weighted centroid. The
/// containment `union ⊆ cover` is asserted exactly; a violation would
/// falsify the underlying lemma and is reported as an internal error.
pub fn goodman_segment_cover(intervals: &[WeightedInterval]) -> Result<WeightedInterval> {
    require_nonempty(intervals)?;
    if let (false, Some(gap)) = union_is_contiguous(intervals) {
        return Err(Error::DisconnectedUnion { gap });
    }
    let total = total_length(intervals);
    let c = length_weighted_centroid(intervals);
    let half = total / rat(2, 1);
    let cover = WeightedInterval::new(&c - &half, &c + &half)?;
    let (lo, hi) = hull(intervals);
    if *cover.lo() > lo || *cover.hi() < hi {
        return Err(Error::Internal(format!(
            "segment cover [{}, {}] fails to contain hull [{lo}, {hi}]",
            cover.lo(),
            cover.hi()
        )));
    }
    Ok(cover)
}

/// Dual fit: when every point lies in at most `k` open interiors, the
/// segment of length `(sum of lengths)/k` centered at the length-weighted
/// centroid lies inside the hull of the union. Exact; a violation would
/// falsify the underlying lemma and is reported as an internal error.
pub fn dual_segment_fit(intervals: &[WeightedInterval], k: usize) -> Result<WeightedInterval> {
    require_nonempty(intervals)?;
    if k == 0 {
        return Err(Error::InvalidArgument("depth bound k must be >= 1".into()));
    }
    let (depth, witness) = max_open_depth(intervals);
    if depth > k {
        return Err(Error::DepthExceeded {
            depth,
            limit: k,
            witness,
        });
    }
    let total = total_length(intervals);
    let c = length_weighted_centroid(intervals);
    let half = total / rat(2 * k as i64, 1);
    let fit = WeightedInterval::new(&c - &half, &c + &half)?;
    let (lo, hi) = hull(intervals);
    if *fit.lo() < lo || *fit.hi() > hi {
        return Err(Error::Internal(format!(
            "dual segment [{}, {}] escapes hull [{lo}, {hi}]",
            fit.lo(),
            fit.hi()
        )));
    }
    Ok(fit)
}
