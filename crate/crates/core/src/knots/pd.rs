//! Planar-diagram codes.
//!
//! A crossing `X a b c d` lists its four arc labels counterclockwise, starting at the
//! incoming under-strand, so the under-strand runs `a → c`. Arcs of a component carry
//! consecutive labels in traversal order. The over-strand direction, and with it the
//! crossing sign, is inferred from this numbering.
//!
//! File format (UTF-8, one directive per line, `#` starts a comment):
//!
//! ```text
//! comp 1        # a component starts at arc 1
//! X 1 5 2 4
//! ...
//! comp 7        # the next component starts at arc 7
//! free 1        # one extra crossingless unknotted component
//! ```
//!
//! Without any `comp` line all arcs form one component. A file with no crossings and
//! no `free` line is the unknot.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::ParseError;

/// Passes through a crossing: positions `(0, 2)` are the under-strand, `(1, 3)` the over-strand.
pub(crate) const OVER_POSITIONS: (usize, usize) = (1, 3);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDCode {
    crossings: Vec<[i64; 4]>,
    /// Inclusive arc-label ranges, one per component that meets a crossing.
    ranges: Vec<(i64, i64)>,
    free_loops: usize,
    /// `+1` when the over-strand enters at position 3, `-1` when it enters at position 1.
    signs: Vec<i8>,
}

impl PDCode {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `n` disjoint crossingless circles.
    pub fn unlink(n: usize) -> Self {
        Self { crossings: Vec::new(), ranges: Vec::new(), free_loops: n, signs: Vec::new() }
    }

    /// Validates crossings against component boundaries (first arc label of each component).
    /// An empty `starts` means a single component.
    pub fn new(crossings: Vec<[i64; 4]>, starts: &[i64], free_loops: usize) -> Result<Self, ParseError> {
        if crossings.is_empty() {
            if !starts.is_empty() {
                return Err(ParseError::Traversal("component declared without crossings".into()));
            }
            return Ok(Self::unlink(free_loops));
        }
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for x in &crossings {
            for &a in x {
                *counts.entry(a).or_default() += 1;
            }
        }
        if let Some((&arc, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(ParseError::ArcMultiplicity { arc, count });
        }
        let min = *counts.keys().next().unwrap();
        let max = *counts.keys().next_back().unwrap();
        let mut bounds: BTreeSet<i64> = starts.iter().copied().collect();
        if bounds.is_empty() {
            bounds.insert(min);
        }
        if *bounds.iter().next().unwrap() != min {
            return Err(ParseError::Traversal(format!(
                "arc {min} precedes the first component boundary"
            )));
        }
        let bounds: Vec<i64> = bounds.into_iter().collect();
        let mut ranges = Vec::with_capacity(bounds.len());
        for (i, &lo) in bounds.iter().enumerate() {
            let hi = bounds.get(i + 1).map_or(max, |next| next - 1);
            if hi < lo {
                return Err(ParseError::Traversal(format!("component starting at {lo} has no arcs")));
            }
            for arc in lo..=hi {
                if !counts.contains_key(&arc) {
                    return Err(ParseError::ArcMultiplicity { arc, count: 0 });
                }
            }
            ranges.push((lo, hi));
        }
        let mut pd = Self { crossings, ranges, free_loops, signs: Vec::new() };
        pd.signs = pd.infer_signs()?;
        Ok(pd)
    }

    pub fn crossings(&self) -> &[[i64; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.ranges.len() + self.free_loops
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    /// Crossing signs in input order.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// All arc labels in ascending order.
    pub fn arcs(&self) -> Vec<i64> {
        self.ranges.iter().flat_map(|&(lo, hi)| lo..=hi).collect()
    }

    fn range_of(&self, arc: i64) -> (i64, i64) {
        *self
            .ranges
            .iter()
            .find(|&&(lo, hi)| (lo..=hi).contains(&arc))
            .expect("arc outside component ranges")
    }

    fn succ(&self, arc: i64) -> i64 {
        let (lo, hi) = self.range_of(arc);
        if arc == hi { lo } else { arc + 1 }
    }

    /// Determines which end of each over-pass is incoming.
    fn infer_signs(&self) -> Result<Vec<i8>, ParseError> {
        // ends[arc] = number of passes at which `arc` is the incoming strand.
        let mut ends: BTreeMap<i64, usize> = BTreeMap::new();
        // over_in[i] = Some(position) once decided.
        let mut over_in: Vec<Option<usize>> = vec![None; self.crossings.len()];
        let mut ambiguous: Vec<usize> = Vec::new();
        for (i, x) in self.crossings.iter().enumerate() {
            let [a, b, c, d] = *x;
            if self.succ(a) != c || self.range_of(a) != self.range_of(c) {
                return Err(ParseError::Traversal(format!(
                    "crossing {} (X {a} {b} {c} {d}): under-strand {a} is not followed by {c}",
                    i + 1
                )));
            }
            *ends.entry(a).or_default() += 1;
            let fwd = self.range_of(b) == self.range_of(d) && self.succ(b) == d;
            let bwd = self.range_of(b) == self.range_of(d) && self.succ(d) == b;
            match (fwd, bwd) {
                (true, false) => {
                    over_in[i] = Some(OVER_POSITIONS.0);
                    *ends.entry(b).or_default() += 1;
                }
                (false, true) => {
                    over_in[i] = Some(OVER_POSITIONS.1);
                    *ends.entry(d).or_default() += 1;
                }
                (true, true) => ambiguous.push(i),
                (false, false) => {
                    return Err(ParseError::Traversal(format!(
                        "crossing {} (X {a} {b} {c} {d}): over-strand arcs {b} and {d} are not consecutive",
                        i + 1
                    )));
                }
            }
        }
        // Two-arc components whose passes are all over-passes admit both orientations;
        // the lower label is taken to end at the lowest-indexed such crossing.
        for &i in &ambiguous {
            let [_, b, _, d] = self.crossings[i];
            if b == d {
                return Err(ParseError::Traversal(format!(
                    "crossing {}: component {b} passes through a single crossing",
                    i + 1
                )));
            }
            let (lo, hi) = (b.min(d), b.max(d));
            let pick = match (ends.get(&lo).copied().unwrap_or(0), ends.get(&hi).copied().unwrap_or(0)) {
                (0, _) => lo,
                (_, 0) => hi,
                _ => {
                    return Err(ParseError::Traversal(format!(
                        "crossing {}: arcs {lo} and {hi} already end elsewhere",
                        i + 1
                    )));
                }
            };
            *ends.entry(pick).or_default() += 1;
            over_in[i] = Some(if pick == b { OVER_POSITIONS.0 } else { OVER_POSITIONS.1 });
        }
        if let Some((&arc, _)) = ends.iter().find(|(_, &n)| n != 1) {
            return Err(ParseError::Traversal(format!("arc {arc} ends at more than one crossing")));
        }
        Ok(over_in
            .into_iter()
            .map(|p| if p == Some(OVER_POSITIONS.1) { 1 } else { -1 })
            .collect())
    }

    /// Swaps over and under strands at every crossing.
    pub fn mirror(&self) -> Self {
        let crossings: Vec<[i64; 4]> = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s > 0 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        let starts: Vec<i64> = self.ranges.iter().map(|r| r.0).collect();
        Self::new(crossings, &starts, self.free_loops).expect("mirror of a valid diagram is valid")
    }

    /// Renders in the text format accepted by [`parse_pd`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(lo, hi) in &self.ranges {
            writeln!(f, "comp {lo}")?;
            for x in self.crossings.iter().filter(|x| (lo..=hi).contains(&x[0])) {
                writeln!(f, "X {} {} {} {}", x[0], x[1], x[2], x[3])?;
            }
        }
        if self.free_loops > 0 && !(self.crossings.is_empty() && self.free_loops == 1) {
            writeln!(f, "free {}", self.free_loops)?;
        }
        Ok(())
    }
}

/// Parses the PD text format described in the module docs.
pub fn parse_pd(text: &str) -> Result<PDCode, ParseError> {
    let mut crossings = Vec::new();
    let mut starts = Vec::new();
    let mut free: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |reason: String| ParseError::Line { line: line_no, reason };
        let mut toks = line.split_whitespace();
        let head = toks.next().unwrap();
        let nums: Result<Vec<i64>, _> = toks.map(str::parse::<i64>).collect();
        let nums = nums.map_err(|e| bad(format!("{e} in {line:?}")))?;
        match head {
            "X" => {
                let q: [i64; 4] = nums
                    .try_into()
                    .map_err(|_| bad(format!("expected 4 arc labels in {line:?}")))?;
                crossings.push(q);
            }
            "comp" => match nums.as_slice() {
                [k] => starts.push(*k),
                _ => return Err(bad(format!("expected `comp <first arc>` in {line:?}"))),
            },
            "free" => match nums.as_slice() {
                [n] if *n >= 0 => free = Some(free.unwrap_or(0) + *n as usize),
                _ => return Err(bad(format!("expected `free <count>` in {line:?}"))),
            },
            other => return Err(bad(format!("unknown directive {other:?}"))),
        }
    }
    let free = match free {
        Some(n) => n,
        None if crossings.is_empty() => 1,
        None => 0,
    };
    PDCode::new(crossings, &starts, free)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "# right-handed trefoil\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n";
    const HOPF: &str = "comp 1\nX 2 3 1 4\ncomp 3\nX 4 1 3 2\n";

    #[test]
    fn parses_trefoil() {
        let pd = parse_pd(TREFOIL).unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.component_count(), 1);
    }

    #[test]
    fn parses_hopf() {
        let pd = parse_pd(HOPF).unwrap();
        assert_eq!(pd.crossing_count(), 2);
        assert_eq!(pd.component_count(), 2);
        assert_eq!(pd.signs()[0], pd.signs()[1]);
    }

    #[test]
    fn rejects_triple_arc() {
        let err = parse_pd("X 1 1 2 2\nX 1 3 4 3\n").unwrap_err();
        assert!(matches!(err, ParseError::ArcMultiplicity { arc: 1, count: 3 }), "{err}");
        assert!(err.to_string().contains("arc multiplicity"));
    }

    #[test]
    fn rejects_bad_traversal() {
        let err = parse_pd("X 1 5 3 4\nX 2 1 4 6\nX 5 3 6 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Traversal(_)), "{err}");
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_pd("X 1 2 3 4\nX 1 2 three 4\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 2, .. }), "{err}");
        let err = parse_pd("Y 1 2 3 4\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 1, .. }));
    }

    #[test]
    fn empty_text_is_unknot() {
        let pd = parse_pd("# nothing\n").unwrap();
        assert_eq!(pd, PDCode::unknot());
        assert_eq!(parse_pd("free 2").unwrap().component_count(), 2);
    }

    #[test]
    fn kink_sign() {
        // Arc 1 leaves at position 1 and returns as the under-strand: positive kink.
        let pd = parse_pd("X 1 1 2 2").unwrap();
        assert_eq!(pd.signs(), &[1]);
        assert_eq!(parse_pd("X 2 1 1 2").unwrap().signs(), &[-1]);
    }

    #[test]
    fn text_round_trip() {
        let pd = parse_pd(HOPF).unwrap();
        assert_eq!(parse_pd(&pd.to_text()).unwrap(), pd);
        let pd = parse_pd(TREFOIL).unwrap();
        assert_eq!(parse_pd(&pd.to_text()).unwrap(), pd);
    }

    #[test]
    fn mirror_flips_signs() {
        let pd = parse_pd(TREFOIL).unwrap();
        let m = pd.mirror();
        assert!(pd.signs().iter().zip(m.signs()).all(|(a, b)| *a == -*b));
    }
}
