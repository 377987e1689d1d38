//! Kauffman bracket `⟨D⟩ ∈ Z[A, A^{-1}]`, normalized so that `⟨unknot⟩ = 1`.
//!
//! Smoothing `X a b c d` with coefficient `A` joins `a–b` and `c–d`; with `A^{-1}` it
//! joins `a–d` and `b–c`. Every state with `L` loops contributes `A^{σ} δ^{L-1}`,
//! `δ = -A² - A^{-2}`.

use std::collections::HashMap;
use std::thread;

use crate::error::KnotError;
use crate::knots::pd::PDCode;
use crate::laurent::Laurent;

/// Largest diagram accepted by the state sums.
pub const MAX_CROSSINGS: usize = 24;

/// `δ = -A² - A^{-2}`.
pub fn loop_value() -> Laurent {
    Laurent::from_terms([(2, -1), (-2, -1)])
}

fn check_guard(d: &PDCode) -> Result<(), KnotError> {
    if d.crossing_count() > MAX_CROSSINGS {
        return Err(KnotError::TooManyCrossings { crossings: d.crossing_count(), limit: MAX_CROSSINGS });
    }
    Ok(())
}

fn unlink_bracket(loops: usize) -> Laurent {
    if loops == 0 { Laurent::one() } else { loop_value().pow(loops as u32 - 1) }
}

/// Crossings relabelled to dense indices `0..2n`.
fn dense_crossings(d: &PDCode) -> (Vec<[usize; 4]>, usize) {
    let arcs = d.arcs();
    let index: HashMap<i64, usize> = arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let xs = d.crossings().iter().map(|x| x.map(|a| index[&a])).collect();
    (xs, arcs.len())
}

fn count_loops(xs: &[[usize; 4]], arcs: usize, state: u64, parent: &mut [usize]) -> usize {
    for (i, p) in parent.iter_mut().enumerate().take(arcs) {
        *p = i;
    }
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut loops = arcs;
    let mut union = |parent: &mut [usize], a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
            loops -= 1;
        }
    };
    for (i, &[a, b, c, d]) in xs.iter().enumerate() {
        if state >> i & 1 == 0 {
            union(parent, a, b);
            union(parent, c, d);
        } else {
            union(parent, a, d);
            union(parent, b, c);
        }
    }
    loops
}

/// (A-exponent, loop count) -> number of states, over a range of states.
fn tally_states(xs: &[[usize; 4]], arcs: usize, states: std::ops::Range<u64>) -> HashMap<(i64, usize), i64> {
    let n = xs.len() as i64;
    let mut tally = HashMap::new();
    let mut parent = vec![0usize; arcs];
    for state in states {
        let sigma = n - 2 * state.count_ones() as i64;
        let loops = count_loops(xs, arcs, state, &mut parent);
        *tally.entry((sigma, loops)).or_insert(0) += 1;
    }
    tally
}

/// Brute-force sum over all `2^n` smoothing states, split across threads.
pub fn kauffman_bracket(d: &PDCode) -> Result<Laurent, KnotError> {
    check_guard(d)?;
    let n = d.crossing_count();
    if n == 0 {
        return Ok(unlink_bracket(d.free_loops()));
    }
    let (xs, arcs) = dense_crossings(d);
    let total: u64 = 1 << n;
    let workers = if n < 12 || cfg!(target_arch = "wasm32") {
        1
    } else {
        thread::available_parallelism().map_or(1, |p| p.get()).min(16) as u64
    };
    let chunk = total.div_ceil(workers);
    let tallies: Vec<HashMap<(i64, usize), i64>> = if workers == 1 {
        vec![tally_states(&xs, arcs, 0..total)]
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let xs = &xs;
                    s.spawn(move || tally_states(xs, arcs, w * chunk..((w + 1) * chunk).min(total)))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("state-sum worker panicked")).collect()
        })
    };
    let mut merged: HashMap<(i64, usize), i64> = HashMap::new();
    for t in tallies {
        for (k, v) in t {
            *merged.entry(k).or_insert(0) += v;
        }
    }
    let delta = loop_value();
    let max_loops = merged.keys().map(|k| k.1).max().unwrap_or(1) + d.free_loops();
    let delta_pows: Vec<Laurent> = {
        let mut v = vec![Laurent::one()];
        for i in 1..max_loops {
            let next = &v[i - 1] * &delta;
            v.push(next);
        }
        v
    };
    let mut out = Laurent::zero();
    for ((sigma, loops), count) in merged {
        let l = loops + d.free_loops();
        out += &delta_pows[l - 1].shift(sigma).scale(count);
    }
    Ok(out)
}

/// Crossing-by-crossing evaluation that merges partial states with the same boundary
/// connectivity. Agrees exactly with [`kauffman_bracket`].
pub fn kauffman_bracket_memo(d: &PDCode) -> Result<Laurent, KnotError> {
    check_guard(d)?;
    if d.crossing_count() == 0 {
        return Ok(unlink_bracket(d.free_loops()));
    }
    let (xs, _) = dense_crossings(d);
    let delta = loop_value();
    // Key: sorted pairs of open arc ends joined through processed crossings, plus
    // whether a loop has already closed (the first loop is not weighted).
    type Key = (Vec<(usize, usize)>, bool);
    let mut states: HashMap<Key, Laurent> = HashMap::new();
    states.insert((Vec::new(), false), Laurent::one());
    for &[a, b, c, dd] in &xs {
        let mut next: HashMap<Key, Laurent> = HashMap::new();
        for ((pairs, closed), poly) in &states {
            for (joins, shift) in [([(a, b), (c, dd)], 1i64), ([(a, dd), (b, c)], -1)] {
                let mut partner: HashMap<usize, usize> = HashMap::with_capacity(pairs.len() * 2 + 4);
                for &(u, v) in pairs {
                    partner.insert(u, v);
                    partner.insert(v, u);
                }
                let mut new_loops = 0usize;
                for (x, y) in joins {
                    if x == y {
                        new_loops += 1;
                        continue;
                    }
                    if partner.get(&x) == Some(&y) {
                        partner.remove(&x);
                        partner.remove(&y);
                        new_loops += 1;
                        continue;
                    }
                    // An arc whose first end is seen here stays open under its own label.
                    let ex = match partner.remove(&x) {
                        Some(p) => {
                            partner.remove(&p);
                            p
                        }
                        None => x,
                    };
                    let ey = match partner.remove(&y) {
                        Some(q) => {
                            partner.remove(&q);
                            q
                        }
                        None => y,
                    };
                    partner.insert(ex, ey);
                    partner.insert(ey, ex);
                }
                let mut key_pairs: Vec<(usize, usize)> =
                    partner.iter().filter(|(u, v)| u < v).map(|(&u, &v)| (u, v)).collect();
                key_pairs.sort_unstable();
                let mut weight = poly.shift(shift);
                let mut seen = *closed;
                for _ in 0..new_loops {
                    if seen {
                        weight = &weight * &delta;
                    }
                    seen = true;
                }
                *next.entry((key_pairs, seen)).or_insert_with(Laurent::zero) += &weight;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let mut out = Laurent::zero();
    for ((pairs, closed), poly) in states {
        debug_assert!(pairs.is_empty() && closed);
        out += &poly;
    }
    Ok(&out * &delta.pow(d.free_loops() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::braid::{braid_closure_pd, BraidWord};

    fn closure(s: &str) -> PDCode {
        braid_closure_pd(&s.parse::<BraidWord>().unwrap())
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(kauffman_bracket(&PDCode::unknot()).unwrap(), Laurent::one());
        assert_eq!(kauffman_bracket_memo(&PDCode::unknot()).unwrap(), Laurent::one());
    }

    #[test]
    fn one_crossing_kink() {
        // A-smoothing leaves two loops, B-smoothing one: A·δ + A^{-1} = -A^3.
        let pd = closure("n=2 +1");
        assert_eq!(kauffman_bracket(&pd).unwrap(), Laurent::monomial(-1, 3));
        let neg = closure("n=2 -1");
        assert_eq!(kauffman_bracket(&neg).unwrap(), Laurent::monomial(-1, -3));
    }

    #[test]
    fn trefoil_bracket() {
        let want = Laurent::from_terms([(5, -1), (-3, -1), (-7, 1)]);
        assert_eq!(kauffman_bracket(&closure("n=2 +1 +1 +1")).unwrap(), want);
    }

    #[test]
    fn two_unlink() {
        let want = loop_value();
        assert_eq!(kauffman_bracket(&closure("n=2")).unwrap(), want);
        assert_eq!(kauffman_bracket_memo(&closure("n=2")).unwrap(), want);
    }

    #[test]
    fn memo_agrees_with_state_sum() {
        for s in ["n=2 +1 +1", "n=3 +1 -2 +1 -2", "n=3 +1 +1 +2 -1 +2", "n=4 +1 +2 +3 -1 -2 +3", "n=3 +2 +2 +2 +1"] {
            let pd = closure(s);
            assert_eq!(kauffman_bracket(&pd).unwrap(), kauffman_bracket_memo(&pd).unwrap(), "{s}");
        }
    }

    #[test]
    fn guard_rejects_large_diagrams() {
        let word = format!("n=2 {}", vec!["+1"; MAX_CROSSINGS + 1].join(" "));
        let pd = closure(&word);
        assert!(matches!(kauffman_bracket(&pd), Err(KnotError::TooManyCrossings { .. })));
        assert!(matches!(kauffman_bracket_memo(&pd), Err(KnotError::TooManyCrossings { .. })));
    }
}
