//! Discrete max-linear Bayesian networks.
//!
//! A DAG on `1..=n` with `k` innovation states per vertex defines random
//! variables `X_i = max(Z_j : j in an(i) ∪ {i})`. The reachable states form a
//! distributive lattice; this crate enumerates it, computes exact joint
//! distributions, relates binary models to conjunctive Bayesian networks,
//! changes coordinates through the zeta transform, and checks the toric
//! structure of the model in those coordinates.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod dag;
pub mod error;
pub mod model;
pub mod poset;
pub mod report;
pub mod transforms;
pub mod verify;

pub use algebra::{
    buchberger_check, hibi_generators, monomial_map, parse_polynomial, BinomialGenerator, Monomial,
    MonomialMap, MonomialOrder, OrderKind, Polynomial, Rational, VariableId,
};
pub use dag::{parse_dag, DagSpec};
pub use error::{Error, Result};
pub use model::{
    cbn_distribution, full_distribution, joint_factored, joint_oracle, oracle_distribution,
    state_lattice, verify_theorem31, Distribution, ParamTable, SymbolicDistribution,
};
pub use poset::{
    chain_product, ideal_lattice, order_ideals, order_preserving_maps, parse_poset, state_to_ideal,
    PosetRel, StateLattice, StateVector,
};
pub use report::Report;
pub use transforms::{alpha_params, moebius_inverse, x_params, zeta_transform, QCoordinates};
