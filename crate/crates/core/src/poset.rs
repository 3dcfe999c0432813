//! Finite posets, order ideals, order-preserving maps and the state lattice.
//!
//! States are vectors `g` in `{0..k-1}^n`. The state space of the `k`-state
//! model on a DAG is the set of order-preserving maps from its transitive
//! closure into the chain `0 < 1 < ... < k-1`, a distributive lattice under
//! coordinate-wise min and max. Lattices of order ideals are represented the
//! same way, as 0-1 indicator vectors ordered by inclusion.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};

/// Largest supported number of states per vertex (entries are stored as `u8`).
pub const MAX_STATES: usize = 256;

/// Element label of a poset: a vertex, or a pair `(element, r)` of a product with a chain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Vertex(usize),
    Product(Box<Label>, usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Vertex(v) => write!(f, "{v}"),
            Label::Product(inner, r) => write!(f, "({inner},{r})"),
        }
    }
}

/// A finite partial order stored as a dense `leq` matrix over indexed elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetRel {
    labels: Vec<Label>,
    // leq[a * n + b] is a <= b
    leq: Vec<bool>,
}

impl PosetRel {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(labels: Vec<Label>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::NotAPoset(format!(
                "relation matrix has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        let p = Self { labels, leq };
        p.validate()?;
        Ok(p)
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<Label>, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), labels.len() * labels.len());
        Self { labels, leq }
    }

    /// The partial order on `1..=n` generated by the strict relations `a < b`.
    pub fn from_relations(
        n: usize,
        relations: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in relations {
            for w in [a, b] {
                if w == 0 || w > n {
                    return Err(Error::BadVertex { vertex: w, n });
                }
            }
            leq[(a - 1) * n + (b - 1)] = true;
        }
        // Floyd-Warshall style closure
        for m in 0..n {
            for a in 0..n {
                if leq[a * n + m] {
                    for b in 0..n {
                        if leq[m * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        Self::new((1..=n).map(Label::Vertex).collect(), leq)
    }

    pub fn chain(m: usize) -> Self {
        let leq = (0..m * m).map(|x| x / m <= x % m).collect();
        Self::from_parts_unchecked((1..=m).map(Label::Vertex).collect(), leq)
    }

    pub fn antichain(m: usize) -> Self {
        let leq = (0..m * m).map(|x| x / m == x % m).collect();
        Self::from_parts_unchecked((1..=m).map(Label::Vertex).collect(), leq)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(Error::NotAPoset(format!(
                    "{} <= {} fails",
                    self.labels[a], self.labels[a]
                )));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(Error::NotAPoset(format!(
                        "{} and {} are mutually related",
                        self.labels[a], self.labels[b]
                    )));
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        return Err(Error::NotAPoset(format!(
                            "not transitive at {} <= {} <= {}",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// `a <= b` for 0-based element indices.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// All `(a, b)` with `a < b`, row-major.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n * n)
            .map(move |x| (x / n, x % n))
            .filter(move |&(a, b)| a != b && self.leq(a, b))
    }

    /// Cover relations `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        self.strict_pairs()
            .filter(|&(a, b)| !(0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b)))
            .collect()
    }

    pub fn is_order_ideal(&self, indicator: &StateVector) -> bool {
        indicator.len() == self.len()
            && indicator.0.iter().all(|&x| x <= 1)
            && self
                .strict_pairs()
                .all(|(a, b)| indicator.0[b] == 0 || indicator.0[a] == 1)
    }

    /// `{elements, strict_relations}` JSON with labels rendered as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let elements: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        let relations: Vec<[String; 2]> = self
            .strict_pairs()
            .map(|(a, b)| [elements[a].clone(), elements[b].clone()])
            .collect();
        json!({ "elements": elements, "strict_relations": relations })
    }
}

/// Parses the poset file format: a header line `n`, then one `a b` line per relation `a < b`.
/// The transitive closure of the listed relations is taken.
pub fn parse_poset(text: &str) -> Result<PosetRel> {
    let mut n: Option<usize> = None;
    let mut relations = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| Error::Syntax {
            line: lineno + 1,
            message,
        };
        let nums = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| syntax(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match (n, nums.as_slice()) {
            (None, [m]) => n = Some(*m),
            (Some(_), [a, b]) => relations.push((*a, *b)),
            _ => return Err(syntax(format!("unexpected line {line:?}"))),
        }
    }
    let n = n.ok_or(Error::Syntax {
        line: 1,
        message: "missing element count".into(),
    })?;
    PosetRel::from_relations(n, relations)
}

/// A state `g` in `{0..k-1}^n`; coordinate `i` belongs to vertex (or element) `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateVector(pub Vec<u8>);

impl StateVector {
    pub fn new(values: impl IntoIterator<Item = u8>) -> Self {
        Self(values.into_iter().collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn constant(n: usize, value: u8) -> Self {
        Self(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    /// Coordinate-wise comparison.
    pub fn leq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn comparable(&self, other: &Self) -> bool {
        self.leq(other) || other.leq(self)
    }

    pub fn meet(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn join(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `j <= i` in the poset implies `g_j <= g_i`.
    pub fn is_order_preserving(&self, poset: &PosetRel) -> bool {
        self.len() == poset.len() && poset.strict_pairs().all(|(a, b)| self.0[a] <= self.0[b])
    }

    pub fn check_range(&self, n: usize, k: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::BadState(format!(
                "{self} has length {}, expected {n}",
                self.len()
            )));
        }
        if let Some(v) = self.0.iter().find(|&&v| v as usize >= k) {
            return Err(Error::BadState(format!(
                "{self} has entry {v} outside 0..{k}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for StateVector {
    /// Digit strings (`01011`) when every entry is below 10, else `(10,2,0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl FromStr for StateVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadState(format!("cannot parse state {s:?}"));
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            inner
                .split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()
                .map(Self)
        } else {
            let digits: Vec<u8> = s
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?;
            if digits.is_empty() {
                return Err(bad());
            }
            Ok(Self(digits))
        }
    }
}

/// A finite set of states ordered coordinate-wise, stored in lexicographic order.
///
/// Lexicographic order is a linear extension of the coordinate-wise order, so
/// index order can be used wherever a linear extension is needed.
#[derive(Clone, Debug)]
pub struct StateLattice {
    k: usize,
    n: usize,
    states: Vec<StateVector>,
    index: HashMap<StateVector, usize>,
}

impl PartialEq for StateLattice {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.states == other.states
    }
}

impl StateLattice {
    /// Builds a lattice from arbitrary states (sorted and deduplicated).
    pub fn from_states(
        n: usize,
        k: usize,
        states: impl IntoIterator<Item = StateVector>,
    ) -> Result<Self> {
        let set: BTreeSet<StateVector> = states.into_iter().collect();
        for s in &set {
            s.check_range(n, k)?;
        }
        let states: Vec<StateVector> = set.into_iter().collect();
        let index = states
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        Ok(Self {
            k,
            n,
            states,
            index,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn states(&self) -> &[StateVector] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, g: &StateVector) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &StateVector) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn bottom(&self) -> Option<&StateVector> {
        self.states.first()
    }

    pub fn top(&self) -> Option<&StateVector> {
        self.states.last()
    }

    /// Indices of the members `h <= g`, in lexicographic order.
    pub fn below(&self, g: &StateVector) -> impl Iterator<Item = usize> + '_ {
        let g = g.clone();
        self.states
            .iter()
            .enumerate()
            .filter(move |(_, h)| h.leq(&g))
            .map(|(i, _)| i)
    }

    /// Whether coordinate-wise meets and joins of members stay inside.
    pub fn is_sublattice(&self) -> bool {
        self.states.iter().all(|g| {
            self.states
                .iter()
                .all(|h| self.contains(&g.meet(h)) && self.contains(&g.join(h)))
        })
    }

    pub fn is_chain(&self) -> bool {
        self.states.windows(2).all(|w| w[0].leq(&w[1]))
    }
}

/// Coordinate-wise `(min, max)` of two states.
pub fn lattice_meet_join(g: &StateVector, h: &StateVector) -> (StateVector, StateVector) {
    (g.meet(h), g.join(h))
}

/// Unordered incomparable pairs `(g, h)` with `g` before `h` lexicographically,
/// ordered by the position of `g`, then of `h`.
pub fn incomparable_pairs(lattice: &StateLattice) -> Vec<(StateVector, StateVector)> {
    let states = lattice.states();
    let mut out = Vec::new();
    for (a, g) in states.iter().enumerate() {
        for h in &states[a + 1..] {
            if !g.comparable(h) {
                out.push((g.clone(), h.clone()));
            }
        }
    }
    out
}

// Depth-first enumeration in lexicographic order. With `reversed` the
// constraint is `a <= b => g_a >= g_b` (indicators of order ideals).
fn enumerate_monotone(poset: &PosetRel, k: usize, reversed: bool) -> Vec<StateVector> {
    let n = poset.len();
    if k == 0 {
        return Vec::new();
    }
    // for each element, the covers linking it to an earlier index
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut upper: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, b) in poset.covers() {
        if a < b {
            lower[b].push(a);
        } else {
            upper[a].push(b);
        }
    }
    if reversed {
        std::mem::swap(&mut lower, &mut upper);
    }
    let mut out = Vec::new();
    let mut g = vec![0u8; n];
    fn rec(
        pos: usize,
        k: usize,
        g: &mut Vec<u8>,
        lower: &[Vec<usize>],
        upper: &[Vec<usize>],
        out: &mut Vec<StateVector>,
    ) {
        if pos == g.len() {
            out.push(StateVector(g.clone()));
            return;
        }
        // g[pos] must be >= every already-assigned element below it, <= every one above
        let lo = lower[pos].iter().map(|&a| g[a]).max().unwrap_or(0);
        let hi = upper[pos]
            .iter()
            .map(|&b| g[b])
            .min()
            .unwrap_or((k - 1) as u8);
        if lo > hi {
            return;
        }
        for v in lo..=hi {
            g[pos] = v;
            rec(pos + 1, k, g, lower, upper, out);
        }
    }
    rec(0, k, &mut g, &lower, &upper, &mut out);
    out
}

/// All order ideals as 0-1 indicator vectors, lexicographically ordered.
pub fn order_ideals(poset: &PosetRel) -> Vec<StateVector> {
    enumerate_monotone(poset, 2, true)
}

/// `J(P)`: the order ideals ordered by inclusion.
pub fn ideal_lattice(poset: &PosetRel) -> StateLattice {
    let states = order_ideals(poset);
    let n = poset.len();
    let index = states
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    StateLattice {
        k: 2,
        n,
        states,
        index,
    }
}

/// All order-preserving maps `poset -> {0..k-1}`.
pub fn order_preserving_maps(poset: &PosetRel, k: usize) -> StateLattice {
    let states = enumerate_monotone(poset, k, false);
    let index = states
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    StateLattice {
        k,
        n: poset.len(),
        states,
        index,
    }
}

/// Product with the chain `0 < ... < m-1`, elements `(i, r)` listed element-major.
pub fn chain_product(poset: &PosetRel, m: usize) -> PosetRel {
    let n = poset.len();
    let size = n * m;
    let mut labels = Vec::with_capacity(size);
    for l in poset.labels() {
        for r in 0..m {
            labels.push(Label::Product(Box::new(l.clone()), r));
        }
    }
    let mut leq = vec![false; size * size];
    for a in 0..size {
        for b in 0..size {
            leq[a * size + b] = poset.leq(a / m, b / m) && a % m <= b % m;
        }
    }
    PosetRel::from_parts_unchecked(labels, leq)
}

/// The order ideal `{(i, r) : 0 <= r <= k - g_i - 2}` of `closure x chain(k-1)`,
/// as 1-based `(vertex, r)` pairs.
pub fn state_to_ideal(
    closure: &PosetRel,
    g: &StateVector,
    k: usize,
) -> Result<BTreeSet<(usize, usize)>> {
    g.check_range(closure.len(), k)?;
    if !g.is_order_preserving(closure) {
        return Err(Error::NotAState(g.to_string()));
    }
    let mut out = BTreeSet::new();
    for (i, &gi) in g.values().iter().enumerate() {
        // r ranges over 0..=k-g_i-2, i.e. k-1-g_i values
        for r in 0..(k - 1 - gi as usize) {
            out.insert((i + 1, r));
        }
    }
    Ok(out)
}

/// [`state_to_ideal`] as an indicator over the elements of `chain_product(closure, k-1)`.
pub fn state_to_ideal_indicator(
    closure: &PosetRel,
    g: &StateVector,
    k: usize,
) -> Result<StateVector> {
    let ideal = state_to_ideal(closure, g, k)?;
    let m = k - 1;
    let mut ind = vec![0u8; closure.len() * m];
    for (i, r) in ideal {
        ind[(i - 1) * m + r] = 1;
    }
    Ok(StateVector(ind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dag::parse_dag;

    fn s(x: &str) -> StateVector {
        x.parse().unwrap()
    }

    fn strs(v: &[StateVector]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    fn fig1() -> PosetRel {
        PosetRel::from_relations(5, [(1, 3), (2, 3), (3, 4), (3, 5)]).unwrap()
    }

    fn fig2_closure() -> PosetRel {
        parse_dag("5 2\n1 3\n1 4\n2 4\n3 5\n4 5")
            .unwrap()
            .transitive_closure()
    }

    fn fig3_closure() -> PosetRel {
        parse_dag("3 3\n1 2\n1 3").unwrap().transitive_closure()
    }

    #[test]
    fn fig1_ideals() {
        let ideals = order_ideals(&fig1());
        let mut expected = vec![
            "00000", "10000", "01000", "11000", "11100", "11110", "11101", "11111",
        ];
        expected.sort();
        assert_eq!(strs(&ideals), expected);
    }

    #[test]
    fn small_ideal_counts() {
        assert_eq!(order_ideals(&PosetRel::antichain(2)).len(), 4);
        assert_eq!(
            strs(&order_ideals(&PosetRel::chain(3))),
            ["000", "100", "110", "111"]
        );
    }

    #[test]
    fn fig2_states() {
        let g = order_preserving_maps(&fig2_closure(), 2);
        let mut expected = vec![
            "00000", "00001", "00011", "00101", "01011", "00111", "01111", "10111", "11111",
        ];
        expected.sort();
        assert_eq!(strs(g.states()), expected);
        assert!(g.is_sublattice());
    }

    #[test]
    fn single_element_states() {
        for k in 1..6 {
            assert_eq!(order_preserving_maps(&PosetRel::chain(1), k).len(), k);
        }
    }

    #[test]
    fn chain_product_fig3() {
        let prod = chain_product(&fig3_closure(), 2);
        let labels: Vec<String> = prod.labels().iter().map(ToString::to_string).collect();
        assert_eq!(
            labels,
            ["(1,0)", "(1,1)", "(2,0)", "(2,1)", "(3,0)", "(3,1)"]
        );
        let covers: BTreeSet<(String, String)> = prod
            .covers()
            .into_iter()
            .map(|(a, b)| (labels[a].clone(), labels[b].clone()))
            .collect();
        let expected: BTreeSet<(String, String)> = [
            ("(1,0)", "(1,1)"),
            ("(1,0)", "(2,0)"),
            ("(1,0)", "(3,0)"),
            ("(1,1)", "(2,1)"),
            ("(1,1)", "(3,1)"),
            ("(2,0)", "(2,1)"),
            ("(3,0)", "(3,1)"),
        ]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(covers, expected);
    }

    #[test]
    fn chain_product_degenerate() {
        let p = fig1();
        let prod = chain_product(&p, 1);
        assert_eq!(prod.len(), p.len());
        assert_eq!(
            prod.strict_pairs().collect::<Vec<_>>(),
            p.strict_pairs().collect::<Vec<_>>()
        );

        let two_chains = chain_product(&PosetRel::antichain(2), 2);
        assert_eq!(
            two_chains.strict_pairs().collect::<Vec<_>>(),
            vec![(0, 1), (2, 3)]
        );
    }

    #[test]
    fn fig3_state_to_ideal() {
        let tr = fig3_closure();
        let ideal = state_to_ideal(&tr, &s("012"), 3).unwrap();
        assert_eq!(ideal, BTreeSet::from([(1, 0), (1, 1), (2, 0)]));
        assert!(state_to_ideal(&tr, &s("222"), 3).unwrap().is_empty());
        assert_eq!(state_to_ideal(&tr, &s("000"), 3).unwrap().len(), 6);
        assert!(matches!(
            state_to_ideal(&tr, &s("100"), 3),
            Err(Error::NotAState(_))
        ));
        assert!(matches!(
            state_to_ideal(&tr, &s("013"), 3),
            Err(Error::BadState(_))
        ));
    }

    #[test]
    fn meet_join_examples() {
        let (m, j) = lattice_meet_join(&s("01111"), &s("10111"));
        assert_eq!(
            (m.to_string(), j.to_string()),
            ("00111".into(), "11111".into())
        );
        let g = s("00101");
        assert_eq!(lattice_meet_join(&g, &g), (g.clone(), g.clone()));
        let h = s("00111");
        assert_eq!(lattice_meet_join(&g, &h), (g, h));
    }

    #[test]
    fn incomparable_counts() {
        let g = order_preserving_maps(&fig2_closure(), 2);
        assert_eq!(incomparable_pairs(&g).len(), 5);
        assert_eq!(incomparable_pairs(&ideal_lattice(&fig1())).len(), 2);
        assert!(incomparable_pairs(&order_preserving_maps(&PosetRel::chain(4), 2)).is_empty());
        assert_eq!(
            incomparable_pairs(&order_preserving_maps(&PosetRel::chain(2), 3)).len(),
            1
        );
    }

    #[test]
    fn state_text_roundtrip() {
        assert_eq!(s("01011").values(), &[0, 1, 0, 1, 1]);
        assert_eq!(s("(10,0,3)").to_string(), "(10,0,3)");
        assert!("01a".parse::<StateVector>().is_err());
        assert!("".parse::<StateVector>().is_err());
    }

    #[test]
    fn poset_file() {
        let p = parse_poset("5 # five events\n1 3\n2 3\n3 4\n3 5\n").unwrap();
        assert_eq!(p, fig1());
        assert!(matches!(
            parse_poset("2\n1 2\n2 1"),
            Err(Error::NotAPoset(_))
        ));
        assert!(matches!(
            parse_poset("2\n1 3"),
            Err(Error::BadVertex { .. })
        ));
    }

    #[test]
    fn rejects_non_posets() {
        let labels = vec![Label::Vertex(1), Label::Vertex(2), Label::Vertex(3)];
        // 1 <= 2 <= 3 without 1 <= 3
        let leq = vec![true, true, false, false, true, true, false, false, true];
        assert!(matches!(
            PosetRel::new(labels.clone(), leq),
            Err(Error::NotAPoset(_))
        ));
        let not_reflexive = vec![false; 9];
        assert!(PosetRel::new(labels, not_reflexive).is_err());
    }

    #[test]
    fn poset_json() {
        let v = fig3_closure().to_json();
        assert_eq!(v["elements"], json!(["1", "2", "3"]));
        assert_eq!(v["strict_relations"], json!([["1", "2"], ["1", "3"]]));
    }
}
