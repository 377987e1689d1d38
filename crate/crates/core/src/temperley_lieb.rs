//! Temperley-Lieb algebra `TL_n(δ)` over `Z[A, A^{-1}]`, the Jones representation of the
//! braid group, and the Markov trace by diagram closure.
//!
//! Boundary points of an `n`-strand diagram are numbered `0..n` along the bottom (left to
//! right) and `n..2n` along the top (left to right). A product `x · y` stacks `y` on top
//! of `x`, matching braid words read bottom to top.

use std::collections::BTreeMap;

use crate::error::KnotError;
use crate::knots::bracket::loop_value;
use crate::knots::braid::BraidWord;
use crate::knots::jones::normalize_bracket;
use crate::laurent::{HalfExpLaurent, Laurent};

/// Largest strand count accepted (Catalan(10) = 16796 basis diagrams).
pub const MAX_STRANDS: usize = 10;

/// A non-crossing perfect matching of the `2n` boundary points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    partner: Vec<u8>,
}

impl PlanarMatching {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| if p < n { p + n } else { p - n } as u8).collect();
        Self { partner }
    }

    /// The generator `e_i` (1-based): a cap joining bottom `i-1, i` and a cup joining top `i-1, i`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator index out of range");
        let mut m = Self::identity(n);
        let (l, r) = (i - 1, i);
        m.partner[l] = r as u8;
        m.partner[r] = l as u8;
        m.partner[n + l] = (n + r) as u8;
        m.partner[n + r] = (n + l) as u8;
        m
    }

    /// Validates a raw partner table.
    pub fn from_partner(partner: Vec<u8>) -> Option<Self> {
        let len = partner.len();
        if len % 2 != 0 {
            return None;
        }
        for (p, &q) in partner.iter().enumerate() {
            let q = q as usize;
            if q >= len || q == p || partner[q] as usize != p {
                return None;
            }
        }
        let m = Self { partner };
        m.is_planar().then_some(m)
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    /// Position of a point going around the rectangle: bottom left to right, then top
    /// right to left.
    fn circular(&self, p: usize) -> usize {
        let n = self.strands();
        if p < n { p } else { 3 * n - 1 - p }
    }

    /// No two pairs interleave in circular order.
    pub fn is_planar(&self) -> bool {
        let pairs: Vec<(usize, usize)> = (0..self.partner.len())
            .filter(|&p| p < self.partner(p))
            .map(|p| {
                let (a, b) = (self.circular(p), self.circular(self.partner(p)));
                (a.min(b), a.max(b))
            })
            .collect();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return false;
                }
            }
        }
        true
    }

    /// Stacks `upper` on `self`; returns the resulting matching and the closed loops formed.
    pub fn compose(&self, upper: &Self) -> (Self, usize) {
        let n = self.strands();
        assert_eq!(n, upper.strands(), "strand mismatch");
        let mut out = vec![0u8; 2 * n];
        let mut middle_seen = vec![false; n];
        // Walks from a point of `self` (lower = true) or `upper` until it exits on the outer boundary.
        let walk = |mut lower: bool, mut p: usize, seen: &mut [bool]| -> usize {
            loop {
                let q = if lower { self.partner(p) } else { upper.partner(p) };
                if lower {
                    if q < n {
                        return q;
                    }
                    seen[q - n] = true;
                    lower = false;
                    p = q - n;
                } else {
                    if q >= n {
                        return q;
                    }
                    seen[q] = true;
                    lower = true;
                    p = q + n;
                }
            }
        };
        for p in 0..n {
            let q = walk(true, p, &mut middle_seen);
            out[p] = q as u8;
        }
        for p in n..2 * n {
            let q = walk(false, p, &mut middle_seen);
            out[p] = q as u8;
        }
        // Bottom endpoints map into [0, n) of `self`, top endpoints into [n, 2n) of `upper`,
        // and these coordinates already coincide with the result's numbering.
        let mut loops = 0;
        for start in 0..n {
            if middle_seen[start] {
                continue;
            }
            loops += 1;
            let mut m = start;
            loop {
                middle_seen[m] = true;
                // Middle point m is top point n+m of `self` and bottom point m of `upper`.
                let up = upper.partner(m);
                debug_assert!(up < n);
                middle_seen[up] = true;
                let down = self.partner(n + up) - n;
                if down == start {
                    break;
                }
                m = down;
            }
        }
        (Self { partner: out }, loops)
    }

    /// Loops in the trace closure (top point `i` joined to bottom point `i`).
    pub fn closure_loops(&self) -> usize {
        let n = self.strands();
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner(p);
                seen[q] = true;
                p = if q < n { q + n } else { q - n };
                if p == start {
                    break;
                }
            }
        }
        loops
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<PlanarMatching, Laurent>,
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(PlanarMatching::identity(n), Laurent::one())
    }

    pub fn basis(m: PlanarMatching, coeff: Laurent) -> Self {
        let mut e = Self::zero(m.strands());
        e.add_term(m, &coeff);
        e
    }

    /// `e_i` with coefficient 1.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(PlanarMatching::generator(n, i), Laurent::one())
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &Laurent)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PlanarMatching) -> Laurent {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: PlanarMatching, coeff: &Laurent) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, KnotError> {
        if self.n != other.n {
            return Err(KnotError::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Laurent) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &(c * k));
        }
        out
    }

    /// Markov closure value `Σ c_m δ^{loops(m) - 1}` (the bracket of the closure).
    pub fn closure_bracket(&self) -> Laurent {
        let delta = loop_value();
        let mut out = Laurent::zero();
        for (m, c) in &self.terms {
            out += &(c * &delta.pow(m.closure_loops() as u32 - 1));
        }
        out
    }
}

/// Diagrammatic product; each closed loop contributes `δ = -A² - A^{-2}`.
pub fn tl_mul(x: &TLElement, y: &TLElement) -> Result<TLElement, KnotError> {
    if x.n != y.n {
        return Err(KnotError::StrandMismatch(x.n, y.n));
    }
    let delta = loop_value();
    let mut out = TLElement::zero(x.n);
    for (mx, cx) in &x.terms {
        for (my, cy) in &y.terms {
            let (m, loops) = mx.compose(my);
            let coeff = &(cx * cy) * &delta.pow(loops as u32);
            out.add_term(m, &coeff);
        }
    }
    Ok(out)
}

/// `σ_i ↦ A·1 + A^{-1}·e_i`, `σ_i^{-1} ↦ A^{-1}·1 + A·e_i`, multiplied in word order.
pub fn braid_to_tl(b: &BraidWord) -> Result<TLElement, KnotError> {
    let n = b.strands();
    if n > MAX_STRANDS {
        return Err(KnotError::TooManyStrands { strands: n, limit: MAX_STRANDS });
    }
    let id = PlanarMatching::identity(n);
    let mut acc = TLElement::identity(n);
    for l in b.letters() {
        let s = l.sign();
        let mut img = TLElement::basis(id.clone(), Laurent::monomial(1, s));
        img.add_term(PlanarMatching::generator(n, l.index), &Laurent::monomial(1, -s));
        acc = tl_mul(&acc, &img)?;
    }
    Ok(acc)
}

/// Jones polynomial of the braid closure from the Markov trace.
pub fn markov_trace_jones(b: &BraidWord) -> Result<HalfExpLaurent, KnotError> {
    let elem = braid_to_tl(b)?;
    normalize_bracket(&elem.closure_bracket(), b.exponent_sum())
}

/// Every non-crossing matching on `n` strands, in canonical order.
pub fn all_matchings(n: usize) -> Vec<PlanarMatching> {
    // Non-crossing matchings of points on a circle: pair the first point with each
    // point that leaves an even count on both sides.
    fn rec(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in (1..points.len()).step_by(2) {
            let outer = rec(&points[k + 1..]);
            for inner in rec(&points[1..k]) {
                for o in &outer {
                    let mut full = vec![(points[0], points[k])];
                    full.extend_from_slice(&inner);
                    full.extend_from_slice(o);
                    out.push(full);
                }
            }
        }
        out
    }
    let circle: Vec<usize> = (0..2 * n).collect();
    let raw = rec(&circle);
    let from_circular = |c: usize| if c < n { c } else { 3 * n - 1 - c };
    let mut out: Vec<PlanarMatching> = raw
        .into_iter()
        .map(|pairs| {
            let mut partner = vec![0u8; 2 * n];
            for (a, b) in pairs {
                let (a, b) = (from_circular(a), from_circular(b));
                partner[a] = b as u8;
                partner[b] = a as u8;
            }
            PlanarMatching { partner }
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn defining_relations() {
        let e1 = TLElement::generator(2, 1);
        assert_eq!(tl_mul(&e1, &e1).unwrap(), e1.scale(&loop_value()));
        let e1 = TLElement::generator(3, 1);
        let e2 = TLElement::generator(3, 2);
        let e121 = tl_mul(&tl_mul(&e1, &e2).unwrap(), &e1).unwrap();
        assert_eq!(e121, e1);
        let e212 = tl_mul(&tl_mul(&e2, &e1).unwrap(), &e2).unwrap();
        assert_eq!(e212, e2);
    }

    #[test]
    fn far_generators_commute() {
        let e1 = TLElement::generator(4, 1);
        let e3 = TLElement::generator(4, 3);
        assert_eq!(tl_mul(&e1, &e3).unwrap(), tl_mul(&e3, &e1).unwrap());
    }

    #[test]
    fn mismatched_strands() {
        let a = TLElement::identity(2);
        let b = TLElement::identity(3);
        assert!(matches!(tl_mul(&a, &b), Err(KnotError::StrandMismatch(2, 3))));
    }

    #[test]
    fn braid_images() {
        assert_eq!(braid_to_tl(&word("n=2")).unwrap(), TLElement::identity(2));
        assert_eq!(braid_to_tl(&word("n=2 +1 -1")).unwrap(), TLElement::identity(2));
        let lhs = braid_to_tl(&word("n=3 +1 +2 +1")).unwrap();
        let rhs = braid_to_tl(&word("n=3 +2 +1 +2")).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn jones_from_trace() {
        assert_eq!(markov_trace_jones(&word("n=2 +1 +1 +1")).unwrap().to_string(), "t + t^3 - t^4");
        assert_eq!(markov_trace_jones(&word("n=2")).unwrap().to_string(), "-t^(-1/2) - t^(1/2)");
        assert_eq!(markov_trace_jones(&word("n=2 +1")).unwrap(), HalfExpLaurent::one());
    }

    #[test]
    fn catalan_counts_and_planarity() {
        let counts: Vec<usize> = (1..=6).map(|n| all_matchings(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
        assert!(all_matchings(4).iter().all(PlanarMatching::is_planar));
        // bottom 0-2 and bottom 1-3 interleave
        assert!(PlanarMatching::from_partner(vec![2, 3, 0, 1, 6, 7, 4, 5]).is_none());
    }

    #[test]
    fn strand_guard() {
        let b = BraidWord::new(MAX_STRANDS + 1, vec![]).unwrap();
        assert!(matches!(braid_to_tl(&b), Err(KnotError::TooManyStrands { .. })));
    }
}
