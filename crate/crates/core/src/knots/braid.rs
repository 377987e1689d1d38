//! Braid words and their trace closures.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::knots::pd::PDCode;

/// One letter `σ_i^{±1}`, with `1 ≤ i ≤ strands - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn new(index: usize, positive: bool) -> Self {
        Self { index, positive }
    }

    pub fn sign(&self) -> i64 {
        if self.positive { 1 } else { -1 }
    }

    pub fn inverse(&self) -> Self {
        Self { index: self.index, positive: !self.positive }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, ParseError> {
        if strands == 0 {
            return Err(ParseError::Braid("a braid needs at least one strand".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(ParseError::Braid(format!(
                "generator {} out of range for {strands} strands",
                l.index
            )));
        }
        Ok(Self { strands, letters })
    }

    /// Builds from signed generator indices: `+2` is `σ_2`, `-1` is `σ_1^{-1}`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self, ParseError> {
        if signed.contains(&0) {
            return Err(ParseError::Braid("generator index 0 is not allowed".into()));
        }
        let letters = signed.iter().map(|&s| Letter::new(s.unsigned_abs() as usize, s > 0)).collect();
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum; equals the writhe of the closure.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(Letter::sign).sum()
    }

    pub fn signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.sign() * l.index as i64).collect()
    }

    /// All letter signs flipped.
    pub fn mirror(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().map(Letter::inverse).collect() }
    }

    /// Moves the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self { strands: self.strands, letters }
    }

    /// `g · self · g^{-1}`.
    pub fn conjugate(&self, g: Letter) -> Result<Self, ParseError> {
        let mut letters = vec![g];
        letters.extend_from_slice(&self.letters);
        letters.push(g.inverse());
        Self::new(self.strands, letters)
    }

    /// Markov stabilization `b ↦ b · σ_n^{±1}` in `B_{n+1}`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, positive));
        Self { strands: self.strands + 1, letters }
    }

    /// Replaces the letter at `pos` (`None` deletes it).
    pub fn with_letter(&self, pos: usize, letter: Option<Letter>) -> Self {
        let mut letters = self.letters.clone();
        match letter {
            Some(l) => letters[pos] = l,
            None => {
                letters.remove(pos);
            }
        }
        Self { strands: self.strands, letters }
    }

    /// Permutation of strand positions induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        at
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.strands)?;
        for l in &self.letters {
            write!(f, " {}{}", if l.positive { '+' } else { '-' }, l.index)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    /// `n=<strands>` header followed by whitespace-separated signed generator indices.
    /// Without a header the strand count is one more than the largest index.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut strands: Option<usize> = None;
        let mut signed = Vec::new();
        for tok in s.split_whitespace() {
            if let Some(n) = tok.strip_prefix("n=") {
                if strands.is_some() {
                    return Err(ParseError::Braid("duplicate strand header".into()));
                }
                strands = Some(n.parse().map_err(|_| ParseError::Braid(format!("bad header {tok:?}")))?);
                continue;
            }
            let v: i64 = tok.parse().map_err(|_| ParseError::Braid(format!("bad letter {tok:?}")))?;
            signed.push(v);
        }
        let strands =
            strands.unwrap_or_else(|| signed.iter().map(|v| v.unsigned_abs() as usize + 1).max().unwrap_or(1));
        Self::from_signed(strands, &signed)
    }
}

/// PD code of the trace closure. Strands run upward; `σ_i` is the positive crossing in
/// which the strand coming from position `i` passes over.
pub fn braid_closure_pd(b: &BraidWord) -> PDCode {
    let n = b.strands();
    // Segments are provisional arcs between consecutive crossing passes of one strand.
    let mut seg_count = n;
    let mut at_pos: Vec<usize> = (0..n).collect();
    let mut touched = vec![false; n];
    let mut quads: Vec<[usize; 4]> = Vec::with_capacity(b.len());
    for l in b.letters() {
        let (left, right) = (l.index - 1, l.index);
        touched[left] = true;
        touched[right] = true;
        let (in_l, in_r) = (at_pos[left], at_pos[right]);
        let (out_r, out_l) = (seg_count, seg_count + 1);
        seg_count += 2;
        // Counterclockwise from the incoming under-strand.
        quads.push(if l.positive {
            [in_r, out_r, out_l, in_l]
        } else {
            [in_l, in_r, out_r, out_l]
        });
        at_pos[left] = out_l;
        at_pos[right] = out_r;
    }
    // Closing strands identifies each top segment with the bottom segment below it.
    let mut parent: Vec<usize> = (0..seg_count).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let nxt = parent[c];
            parent[c] = r;
            c = nxt;
        }
        r
    }
    for (p, &top) in at_pos.iter().enumerate() {
        let (a, c) = (find(&mut parent, top), find(&mut parent, p));
        parent[a] = c;
    }
    let free_loops = touched.iter().filter(|&&t| !t).count();
    if quads.is_empty() {
        return PDCode::unlink(free_loops);
    }
    let quads: Vec<[usize; 4]> = quads
        .iter()
        .map(|q| q.map(|s| find(&mut parent, s)))
        .collect();

    // Each arc ends at exactly one pass: the under-in slot (0) or the over-in slot.
    let mut end_of = std::collections::HashMap::new();
    for (x, (q, l)) in quads.iter().zip(b.letters()).enumerate() {
        end_of.insert(q[0], (x, 0usize));
        let over_in = if l.positive { 3 } else { 1 };
        end_of.insert(q[over_in], (x, over_in));
    }
    let mut label: std::collections::HashMap<usize, i64> = std::collections::HashMap::new();
    let mut starts = Vec::new();
    let mut next_label = 1i64;
    let mut arcs: Vec<usize> = end_of.keys().copied().collect();
    arcs.sort_by_key(|a| end_of[a]);
    for &seed in &arcs {
        if label.contains_key(&seed) {
            continue;
        }
        let mut cycle = Vec::new();
        let mut arc = seed;
        loop {
            cycle.push(arc);
            let (x, pos) = end_of[&arc];
            arc = quads[x][pos ^ 2];
            if arc == seed {
                break;
            }
        }
        // Start numbering at the arc that ends at the lowest-indexed crossing.
        let first = (0..cycle.len()).min_by_key(|&i| end_of[&cycle[i]]).unwrap();
        cycle.rotate_left(first);
        starts.push(next_label);
        for a in cycle {
            label.insert(a, next_label);
            next_label += 1;
        }
    }
    let crossings = quads.iter().map(|q| q.map(|s| label[&s])).collect();
    PDCode::new(crossings, &starts, free_loops).expect("braid closure yields a valid diagram")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_render() {
        let b = word("n=3 +1 -2 +1");
        assert_eq!(b.strands(), 3);
        assert_eq!(b.signed(), vec![1, -2, 1]);
        assert_eq!(b.to_string(), "n=3 +1 -2 +1");
        assert_eq!(word("+2 -1").strands(), 3);
        assert!("n=2 +2".parse::<BraidWord>().is_err());
        assert!("n=2 0".parse::<BraidWord>().is_err());
        assert!("n=2 x".parse::<BraidWord>().is_err());
    }

    #[test]
    fn closure_component_counts() {
        let unknot = braid_closure_pd(&word("n=2 +1"));
        assert_eq!((unknot.crossing_count(), unknot.component_count()), (1, 1));
        let trefoil = braid_closure_pd(&word("n=2 +1 +1 +1"));
        assert_eq!((trefoil.crossing_count(), trefoil.component_count()), (3, 1));
        let hopf = braid_closure_pd(&word("n=2 +1 +1"));
        assert_eq!((hopf.crossing_count(), hopf.component_count()), (2, 2));
        let unlink = braid_closure_pd(&word("n=2"));
        assert_eq!((unlink.crossing_count(), unlink.component_count()), (0, 2));
        let with_free = braid_closure_pd(&word("n=3 +1"));
        assert_eq!(with_free.component_count(), 2);
    }

    #[test]
    fn closure_signs_follow_letters() {
        for s in ["n=3 +1 -2 +1 +2", "n=2 +1 -1", "n=4 -3 +1 +2 -1 -3"] {
            let b = word(s);
            let pd = braid_closure_pd(&b);
            let got: Vec<i64> = pd.signs().iter().map(|&x| x as i64).collect();
            let want: Vec<i64> = b.letters().iter().map(Letter::sign).collect();
            assert_eq!(got, want, "{s}");
        }
    }

    #[test]
    fn component_count_is_cycle_count() {
        let b = word("n=4 +1 +3 -2 +3");
        let perm = b.permutation();
        let mut seen = [false; 4];
        let mut cycles = 0;
        for s in 0..4 {
            if !seen[s] {
                cycles += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p];
                }
            }
        }
        assert_eq!(braid_closure_pd(&b).component_count(), cycles);
    }
}
