//! Directed acyclic graphs with 1-indexed vertex labels.
//!
//! A [`DagSpec`] also carries `k`, the number of states of every innovation.
//! Acyclicity is checked once, at construction, and the topological order
//! computed there is reused by every downstream evaluation.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::{Label, PosetRel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DagSpec {
    n: usize,
    k: usize,
    edges: BTreeSet<(usize, usize)>,
    // 0-based, sorted ascending
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    // 1-based labels
    topo: Vec<usize>,
}

impl DagSpec {
    /// Builds and validates a DAG. Edges are `(u, v)` pairs meaning `u -> v`.
    pub fn new(
        n: usize,
        k: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams(
                "a DAG needs at least one vertex".into(),
            ));
        }
        check_k(k)?;
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::BadVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::CyclicGraph(vec![u]));
            }
            if !set.insert((u, v)) {
                return Err(Error::InvalidParams(format!("duplicate edge {u} -> {v}")));
            }
        }
        let mut parents = vec![Vec::new(); n];
        let mut children = vec![Vec::new(); n];
        for &(u, v) in &set {
            parents[v - 1].push(u - 1);
            children[u - 1].push(v - 1);
        }
        let topo = kahn(&parents, &children)?;
        Ok(Self {
            n,
            k,
            edges: set,
            parents,
            children,
            topo,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Same graph with a different number of innovation states.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        check_k(k)?;
        Ok(Self { k, ..self.clone() })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::BadVertex {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Parents of `v` as 1-based labels.
    pub fn parents(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.parents[v - 1].iter().map(|p| p + 1).collect())
    }

    /// 0-based parent indices of the 0-based vertex `idx`.
    pub(crate) fn parent_indices(&self, idx: usize) -> &[usize] {
        &self.parents[idx]
    }

    /// Topological order, smallest label first among ready vertices.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Every `u` with a directed path `u -> ... -> v`, excluding `v`.
    pub fn ancestors(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        let mut seen = vec![false; self.n];
        let mut stack = vec![v - 1];
        while let Some(w) = stack.pop() {
            for &p in &self.parents[w] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        Ok(seen
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i + 1)
            .collect())
    }

    /// The transitive closure poset: `j <= i` iff `j == i` or `j` is an ancestor of `i`.
    pub fn transitive_closure(&self) -> PosetRel {
        let n = self.n;
        // leq[j * n + i]; filled in topological order so parents are complete first
        let mut leq = vec![false; n * n];
        for &v in &self.topo {
            let i = v - 1;
            leq[i * n + i] = true;
            for &p in &self.parents[i] {
                for j in 0..n {
                    if leq[j * n + p] {
                        leq[j * n + i] = true;
                    }
                }
            }
        }
        let labels = (1..=n).map(Label::Vertex).collect();
        PosetRel::from_parts_unchecked(labels, leq)
    }

    /// Serializes in the DAG file format; `parse_dag(serialize())` is the identity.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > crate::poset::MAX_STATES {
        return Err(Error::InvalidParams(format!(
            "state count k = {k} must be in 1..={}",
            crate::poset::MAX_STATES
        )));
    }
    Ok(())
}

fn kahn(parents: &[Vec<usize>], children: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = parents.len();
    let mut indeg: Vec<usize> = parents.iter().map(Vec::len).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v + 1);
        for &c in &children[v] {
            indeg[c] -= 1;
            if indeg[c] == 0 {
                ready.push(Reverse(c));
            }
        }
    }
    if order.len() < n {
        let stuck = (0..n).filter(|&v| indeg[v] > 0).map(|v| v + 1).collect();
        return Err(Error::CyclicGraph(stuck));
    }
    Ok(order)
}

/// Parses the DAG file format: a header line `n k`, then one `u v` edge per line.
/// `#` starts a comment; blank lines are ignored.
pub fn parse_dag(text: &str) -> Result<DagSpec> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields = parse_pair(line, lineno + 1)?;
        match header {
            None => header = Some(fields),
            Some((n, _)) => {
                for w in [fields.0, fields.1] {
                    if w == 0 || w > n {
                        return Err(Error::BadVertex { vertex: w, n });
                    }
                }
                edges.push(fields);
            }
        }
    }
    let (n, k) = header.ok_or(Error::Syntax {
        line: 1,
        message: "missing `n k` header".into(),
    })?;
    DagSpec::new(n, k, edges)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Syntax {
            line: lineno,
            message: format!("expected two integers, found {:?}", line),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|e| Error::Syntax {
            line: lineno,
            message: format!("{s:?}: {e}"),
        })
    };
    Ok((parse(toks[0])?, parse(toks[1])?))
}

impl FromStr for DagSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_dag(s)
    }
}

impl fmt::Display for DagSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}
