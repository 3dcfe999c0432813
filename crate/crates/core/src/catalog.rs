//! Bundled example inputs and a fixed catalog of small DAGs used by the
//! exhaustive checks.

use crate::dag::{parse_dag, DagSpec};
use crate::poset::{parse_poset, PosetRel};

pub const FIG1_POSET: &str = include_str!("../data/fig1.poset");
pub const FIG2_DAG: &str = include_str!("../data/fig2.dag");
pub const FIG3_DAG: &str = include_str!("../data/fig3.dag");
/// Six polynomials in `p` coordinates that vanish on the `fig2.dag` model.
pub const FIG2_P_GENERATORS: &str = include_str!("../data/fig2_p_generators.txt");

/// Five-vertex DAG with edges 1→3, 1→4, 2→4, 3→5, 4→5 and `k = 2`.
pub fn fig2() -> DagSpec {
    parse_dag(FIG2_DAG).expect("bundled fig2.dag")
}

/// Three-vertex DAG with edges 1→2, 1→3 and `k = 3`.
pub fn fig3() -> DagSpec {
    parse_dag(FIG3_DAG).expect("bundled fig3.dag")
}

/// Five-element poset with covers 1<3, 2<3, 3<4, 3<5.
pub fn fig1() -> PosetRel {
    parse_poset(FIG1_POSET).expect("bundled fig1.poset")
}

// name, vertex count, edges
type Entry = (&'static str, usize, &'static [(usize, usize)]);

const ENTRIES: &[Entry] = &[
    ("single", 1, &[]),
    ("chain2", 2, &[(1, 2)]),
    ("antichain2", 2, &[]),
    ("chain3", 3, &[(1, 2), (2, 3)]),
    ("antichain3", 3, &[]),
    ("fork3", 3, &[(1, 2), (1, 3)]),
    ("collider3", 3, &[(1, 3), (2, 3)]),
    ("triangle3", 3, &[(1, 2), (1, 3), (2, 3)]),
    ("edge_plus_isolated3", 3, &[(1, 2)]),
    ("chain4", 4, &[(1, 2), (2, 3), (3, 4)]),
    ("diamond4", 4, &[(1, 2), (1, 3), (2, 4), (3, 4)]),
    ("star_out4", 4, &[(1, 2), (1, 3), (1, 4)]),
    ("star_in4", 4, &[(1, 4), (2, 4), (3, 4)]),
    ("n_shape4", 4, &[(1, 3), (2, 3), (2, 4)]),
    ("two_chains4", 4, &[(1, 2), (3, 4)]),
    ("y_shape4", 4, &[(1, 3), (2, 3), (3, 4)]),
    ("antichain4", 4, &[]),
    ("fig2", 5, &[(1, 3), (1, 4), (2, 4), (3, 5), (4, 5)]),
    ("bowtie5", 5, &[(1, 3), (2, 3), (3, 4), (3, 5)]),
    ("chain5", 5, &[(1, 2), (2, 3), (3, 4), (4, 5)]),
    (
        "complete5",
        5,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    ),
    ("star_out5", 5, &[(1, 2), (1, 3), (1, 4), (1, 5)]),
    ("fence5", 5, &[(1, 2), (3, 2), (3, 4), (5, 4)]),
    ("two_paths5", 5, &[(1, 2), (2, 3), (1, 4), (4, 5)]),
];

/// The catalog DAGs, each with `k` innovation states.
pub fn catalog(k: usize) -> Vec<(&'static str, DagSpec)> {
    ENTRIES
        .iter()
        .map(|(name, n, edges)| {
            let dag = DagSpec::new(*n, k, edges.iter().copied()).expect("catalog DAGs are acyclic");
            (*name, dag)
        })
        .collect()
}

/// A random DAG on `1..=n` with each forward edge `u -> v` (`u < v`) present
/// with probability one half.
pub fn random_dag<R: rand::Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> DagSpec {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    DagSpec::new(n, k, edges).expect("forward edges are acyclic")
}
