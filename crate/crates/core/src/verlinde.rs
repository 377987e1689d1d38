//! SU(2) Verlinde dimensions and their realization as admissible colorings of
//! trivalent spine graphs.
//!
//! Labels are representation dimensions `1..=r-1`. A vertex triple `(m, n, p)` is
//! admissible when `m + n + p` is odd, the triangle inequalities
//! `|m - n| + 1 ≤ p ≤ m + n - 1` hold, and `m + n + p ≤ 2r - 1`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use astro_float::{BigFloat, Consts, RoundingMode};

use crate::error::{NumericError, ParseError};

/// Absolute distance to the nearest integer allowed for the Verlinde sum.
pub const INTEGRALITY_TOL: f64 = 1e-6;

const PRECISION_BITS: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

/// The Verlinde sum `r^{g-1} Σ_{j=1}^{r-1} (2 sin²(jπ/r))^{-(g-1)}` in extended precision,
/// together with its nearest integer.
pub fn verlinde_sum(g: u32, r: u32) -> Result<(BigFloat, u64), NumericError> {
    if g < 1 || r < 2 {
        return Err(NumericError::InvalidArgument(format!("need g >= 1 and r >= 2, got g={g}, r={r}")));
    }
    let p = PRECISION_BITS;
    let mut cc = Consts::new().map_err(|e| NumericError::InvalidArgument(format!("{e:?}")))?;
    let pi = cc.pi(p, RM);
    let rr = BigFloat::from_u32(r, p);
    let two = BigFloat::from_u32(2, p);
    let k = (g - 1) as usize;
    let mut sum = BigFloat::from_u32(0, p);
    let mut approx = 0.0f64;
    for j in 1..r {
        let angle = pi.mul(&BigFloat::from_u32(j, p), p, RM).div(&rr, p, RM);
        let s = angle.sin(p, RM, &mut cc);
        let base = two.mul(&s, p, RM).mul(&s, p, RM);
        let term = base.powi(k, p, RM).reciprocal(p, RM);
        sum = sum.add(&term, p, RM);
        let sf = (j as f64 * std::f64::consts::PI / r as f64).sin();
        approx += (2.0 * sf * sf).powi(-(k as i32));
    }
    let scale = rr.powi(k, p, RM);
    let total = sum.mul(&scale, p, RM);
    approx *= (r as f64).powi(k as i32);
    // The f64 estimate picks the candidate; the extended value certifies it.
    let guess = approx.round().max(0.0) as u64;
    let tol = BigFloat::from_f64(INTEGRALITY_TOL, p);
    for cand in [guess, guess.saturating_sub(1), guess + 1] {
        let diff = total.sub(&BigFloat::from_u64(cand, p), p, RM).abs();
        if diff.cmp(&tol) == Some(-1) {
            return Ok((total, cand));
        }
    }
    Err(NumericError::NotIntegral { value: total.to_string(), tol: INTEGRALITY_TOL })
}

/// `dim H_r` for a closed genus-`g` surface at level `r`.
pub fn verlinde_dim(g: u32, r: u32) -> Result<u64, NumericError> {
    if g == 1 && r >= 2 {
        // every summand is 1
        return Ok((r - 1) as u64);
    }
    verlinde_sum(g, r).map(|(_, n)| n)
}

/// Distance from the Verlinde sum to its nearest integer, as `f64`.
pub fn verlinde_integrality_defect(g: u32, r: u32) -> Result<f64, NumericError> {
    let (total, n) = verlinde_sum(g, r)?;
    let p = PRECISION_BITS;
    let diff = total.sub(&BigFloat::from_u64(n, p), p, RM).abs();
    Ok(diff.to_string().parse::<f64>().unwrap_or(f64::NAN))
}

#[inline]
fn admissible_unchecked(m: u32, n: u32, p: u32, r: u32) -> bool {
    (m + n + p) % 2 == 1 && p > m.abs_diff(n) && p < m + n && m + n + p < 2 * r
}

/// Quantized Clebsch-Gordan condition on dimension labels.
pub fn admissible(m: u32, n: u32, p: u32, r: u32) -> Result<bool, NumericError> {
    for x in [m, n, p] {
        if x < 1 || x > r.saturating_sub(1) {
            return Err(NumericError::InvalidArgument(format!("label {x} outside 1..={}", r.saturating_sub(1))));
        }
    }
    Ok(admissible_unchecked(m, n, p, r))
}

/// A cubic multigraph (loops and parallel edges allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivalentGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TrivalentGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, ParseError> {
        let mut degree = vec![0usize; vertices];
        for &(a, b) in &edges {
            if a >= vertices || b >= vertices {
                return Err(ParseError::Graph(format!("edge ({a}, {b}) names a missing vertex")));
            }
            degree[a] += 1;
            degree[b] += 1;
        }
        if let Some((v, d)) = degree.iter().enumerate().find(|(_, &d)| d != 3) {
            return Err(ParseError::Graph(format!("vertex {v} has degree {d}, expected 3")));
        }
        Ok(Self { vertices, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Genus of the surface whose spine this is (`|E| - |V| + 1` for a connected graph).
    pub fn genus(&self) -> usize {
        self.edges.len() + 1 - self.vertices
    }

    /// Edge slots at each vertex; a loop occupies two slots of the same vertex.
    fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::with_capacity(3); self.vertices];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push(e);
            inc[b].push(e);
        }
        inc
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TrivalentGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.edges {
            writeln!(f, "e {a} {b}")?;
        }
        Ok(())
    }
}

impl FromStr for TrivalentGraph {
    type Err = ParseError;

    /// Lines `e v1 v2` with 0-based vertex ids; `#` starts a comment.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut edges = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || ParseError::Line { line: i + 1, reason: format!("expected `e v1 v2`, got {line:?}") };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["e", a, b] => {
                    let a: usize = a.parse().map_err(|_| bad())?;
                    let b: usize = b.parse().map_err(|_| bad())?;
                    edges.push((a, b));
                }
                _ => return Err(bad()),
            }
        }
        let vertices = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        Self::new(vertices, edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpineKind {
    /// Loops at both ends joined by a chain of double-edge blocks.
    Chain,
    /// A cycle of `g - 1` double-edge beads joined by single edges.
    Necklace,
}

/// The canonical genus-`g` spine (`g ≥ 2`): the theta graph for `g = 2`, the chain otherwise.
pub fn spine_graph(g: u32) -> TrivalentGraph {
    if g == 2 {
        return TrivalentGraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
    }
    spine_graph_of_kind(g, SpineKind::Chain)
}

pub fn spine_graph_of_kind(g: u32, kind: SpineKind) -> TrivalentGraph {
    assert!(g >= 2, "spines exist for genus at least 2");
    let g = g as usize;
    let v = 2 * g - 2;
    let mut edges = Vec::with_capacity(3 * g - 3);
    match kind {
        SpineKind::Chain => {
            edges.push((0, 0));
            for i in 0..g - 1 {
                edges.push((2 * i, 2 * i + 1));
                if i + 1 < g - 1 {
                    edges.push((2 * i + 1, 2 * i + 2));
                    edges.push((2 * i + 1, 2 * i + 2));
                }
            }
            edges.push((v - 1, v - 1));
        }
        SpineKind::Necklace => {
            let beads = g - 1;
            for b in 0..beads {
                let (x, y) = (2 * b, 2 * b + 1);
                edges.push((x, y));
                edges.push((x, y));
                edges.push((y, (2 * b + 2) % v));
            }
        }
    }
    TrivalentGraph::new(v, edges).expect("spine construction is cubic")
}

/// Admissible colorings with labels in `1..=r-1`. Edges are colored in breadth-first
/// order from vertex 0 and a branch is cut as soon as a fully colored vertex fails.
pub fn count_colorings(graph: &TrivalentGraph, r: u32) -> u64 {
    enumerate_colorings(graph, r, false).0
}

/// Like [`count_colorings`] but also returns every coloring (labels indexed by edge), in
/// lexicographic order of the breadth-first edge sequence.
pub fn list_colorings(graph: &TrivalentGraph, r: u32) -> Vec<Vec<u32>> {
    enumerate_colorings(graph, r, true).1
}

fn enumerate_colorings(graph: &TrivalentGraph, r: u32, keep: bool) -> (u64, Vec<Vec<u32>>) {
    if graph.edges.is_empty() {
        return (1, if keep { vec![Vec::new()] } else { Vec::new() });
    }
    if r < 2 {
        return (0, Vec::new());
    }
    let inc = graph.incidence();
    // breadth-first edge order
    let mut order = Vec::with_capacity(graph.edges.len());
    let mut edge_seen = vec![false; graph.edges.len()];
    let mut vert_seen = vec![false; graph.vertices];
    let mut queue = VecDeque::new();
    for start in 0..graph.vertices {
        if vert_seen[start] {
            continue;
        }
        vert_seen[start] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &e in &inc[v] {
                if !edge_seen[e] {
                    edge_seen[e] = true;
                    order.push(e);
                    let (a, b) = graph.edges[e];
                    let w = if a == v { b } else { a };
                    if !vert_seen[w] {
                        vert_seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let position: Vec<usize> = {
        let mut pos = vec![0; order.len()];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        pos
    };
    // vertices that become fully colored at each step
    let mut completes: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    for (v, slots) in inc.iter().enumerate() {
        let last = slots.iter().map(|&e| position[e]).max().unwrap();
        completes[last].push(v);
    }

    struct Search<'a> {
        r: u32,
        order: &'a [usize],
        inc: &'a [Vec<usize>],
        completes: &'a [Vec<usize>],
        labels: Vec<u32>,
        count: u64,
        keep: bool,
        found: Vec<Vec<u32>>,
    }
    impl Search<'_> {
        fn go(&mut self, step: usize) {
            if step == self.order.len() {
                self.count += 1;
                if self.keep {
                    self.found.push(self.labels.clone());
                }
                return;
            }
            let e = self.order[step];
            for label in 1..self.r {
                self.labels[e] = label;
                let ok = self.completes[step].iter().all(|&v| {
                    let s = &self.inc[v];
                    admissible_unchecked(self.labels[s[0]], self.labels[s[1]], self.labels[s[2]], self.r)
                });
                if ok {
                    self.go(step + 1);
                }
            }
            self.labels[e] = 0;
        }
    }
    let mut search = Search {
        r,
        order: &order,
        inc: &inc,
        completes: &completes,
        labels: vec![0; graph.edges.len()],
        count: 0,
        keep,
        found: Vec::new(),
    };
    search.go(0);
    (search.count, search.found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_is_r_minus_one() {
        for r in 2..20 {
            assert_eq!(verlinde_dim(1, r).unwrap(), (r - 1) as u64);
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(verlinde_dim(2, 3).unwrap(), 4);
        assert_eq!(verlinde_dim(2, 4).unwrap(), 10);
        for g in 1..7 {
            assert_eq!(verlinde_dim(g, 2).unwrap(), 1);
        }
        assert!(verlinde_dim(0, 3).is_err());
    }

    #[test]
    fn admissible_examples() {
        assert!(admissible(1, 1, 1, 2).unwrap());
        assert!(admissible(2, 2, 1, 3).unwrap());
        assert!(!admissible(3, 3, 3, 4).unwrap());
        assert!(!admissible(1, 1, 2, 5).unwrap());
        assert!(admissible(0, 1, 1, 3).is_err());
        assert!(admissible(1, 1, 3, 3).is_err());
    }

    #[test]
    fn admissible_is_symmetric() {
        for r in 2..9 {
            for m in 1..r {
                for n in 1..r {
                    for p in 1..r {
                        let a = admissible(m, n, p, r).unwrap();
                        for (x, y, z) in [(m, p, n), (n, m, p), (n, p, m), (p, m, n), (p, n, m)] {
                            assert_eq!(a, admissible(x, y, z, r).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spine_shapes() {
        let theta = spine_graph(2);
        assert_eq!((theta.vertex_count(), theta.edges().len()), (2, 3));
        for g in 3..8 {
            for kind in [SpineKind::Chain, SpineKind::Necklace] {
                let s = spine_graph_of_kind(g, kind);
                assert_eq!((s.vertex_count(), s.edges().len()), (2 * g as usize - 2, 3 * g as usize - 3));
                assert_eq!(s.genus(), g as usize);
            }
        }
    }

    #[test]
    fn theta_colorings() {
        let theta = spine_graph(2);
        assert_eq!(count_colorings(&theta, 2), 1);
        let list = list_colorings(&theta, 3);
        assert_eq!(list.len(), 4);
        assert!(list.contains(&vec![1, 1, 1]));
        assert!(list.contains(&vec![1, 2, 2]) && list.contains(&vec![2, 1, 2]) && list.contains(&vec![2, 2, 1]));
        assert_eq!(count_colorings(&theta, 4), 10);
    }

    #[test]
    fn every_genus_three_spine_agrees() {
        // the five connected cubic multigraphs on four vertices
        let graphs = [
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            vec![(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)],
            vec![(0, 0), (0, 1), (1, 2), (1, 2), (2, 3), (3, 3)],
            vec![(0, 0), (0, 1), (1, 2), (1, 3), (2, 3), (2, 3)],
            vec![(0, 0), (0, 1), (1, 2), (1, 3), (2, 2), (3, 3)],
        ];
        for r in 2..9 {
            let dim = verlinde_dim(3, r).unwrap();
            for edges in &graphs {
                let g = TrivalentGraph::new(4, edges.clone()).unwrap();
                assert_eq!(count_colorings(&g, r), dim, "r={r} {edges:?}");
            }
        }
    }

    #[test]
    fn graph_text() {
        let g: TrivalentGraph = "# theta\ne 0 1\ne 0 1\ne 0 1\n".parse().unwrap();
        assert_eq!(g, spine_graph(2));
        let dumbbell: TrivalentGraph = "e 0 0\ne 0 1\ne 1 1".parse().unwrap();
        assert_eq!(count_colorings(&dumbbell, 5), verlinde_dim(2, 5).unwrap());
        assert!("e 0 1\ne 0 1".parse::<TrivalentGraph>().is_err());
        assert!(matches!("e 0".parse::<TrivalentGraph>(), Err(ParseError::Line { line: 1, .. })));
    }
}
