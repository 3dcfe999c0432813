//! Exact evaluation of the discrete max-linear model and of the conjunctive
//! Bayesian network (CBN) model.
//!
//! In the max-linear model every vertex has an independent innovation
//! `Z_i ~ theta^(i)` on `{0..k-1}` and `X_i = max(Z_i, max_{j in pa(i)} X_j)`.
//! Its joint distribution factors over the DAG with conditional probabilities
//! determined by `M_i`, the largest parent value:
//!
//! * `0` if `g_i < M_i`,
//! * `theta_0 + ... + theta_{M_i}` if `g_i = M_i`,
//! * `theta_{g_i}` if `g_i > M_i`.
//!
//! Everything is generic over [`Scalar`], so the same code produces rational
//! probabilities or symbolic polynomials in the `theta` variables.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, Polynomial, Rational, Scalar, VariableId};
use crate::dag::DagSpec;
use crate::error::{Error, Result};
use crate::poset::{ideal_lattice, order_preserving_maps, PosetRel, StateLattice, StateVector};
use crate::report::Report;

/// Default bound on `k^n` for the innovation-enumeration oracle.
pub const DEFAULT_ORACLE_LIMIT: u128 = 10_000_000;

/// Innovation distributions, one row `(theta_0, ..., theta_{k-1})` per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamTable<T = Rational> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> ParamTable<T> {
    /// Rows without simplex validation (symbolic tables, shifted tables in tests).
    pub fn from_rows_unchecked(rows: Vec<Vec<T>>) -> Self {
        Self { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn k(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// `theta_state^(vertex)`, 1-based vertex.
    pub fn get(&self, vertex: usize, state: usize) -> &T {
        &self.rows[vertex - 1][state]
    }

    /// Exchanges `theta_0` and `theta_1` in every row of a 2-state table.
    pub fn swap_binary(&self) -> Result<Self> {
        if self.k() != 2 {
            return Err(Error::InvalidParams(format!(
                "swap needs k = 2, table has k = {}",
                self.k()
            )));
        }
        Ok(Self {
            rows: self
                .rows
                .iter()
                .map(|r| vec![r[1].clone(), r[0].clone()])
                .collect(),
        })
    }

    fn check_shape(&self, n: usize, k: usize) -> Result<()> {
        if self.n() != n || self.rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidParams(format!(
                "parameter table is {}x{}, model needs {n}x{k}",
                self.n(),
                self.k()
            )));
        }
        Ok(())
    }
}

impl ParamTable<Rational> {
    /// Validates nonnegative rows of equal length summing to one.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let k = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || k == 0 {
            return Err(Error::InvalidParams("empty parameter table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidParams(format!(
                    "row {} has {} entries, expected {k}",
                    i + 1,
                    row.len()
                )));
            }
            if row.iter().any(|x| x < &Rational::zero()) {
                return Err(Error::InvalidParams(format!(
                    "row {} has a negative entry",
                    i + 1
                )));
            }
            let total: Rational = row.iter().cloned().sum();
            if !total.is_one() {
                return Err(Error::InvalidParams(format!(
                    "row {} sums to {total}, not 1",
                    i + 1
                )));
            }
        }
        Ok(Self { rows })
    }

    pub fn uniform(n: usize, k: usize) -> Self {
        let p = Rational::new(1.into(), (k as i64).into());
        Self {
            rows: vec![vec![p; k]; n],
        }
    }

    pub fn point_mass(n: usize, k: usize, state: usize) -> Self {
        let row: Vec<Rational> = (0..k)
            .map(|j| {
                if j == state {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Self { rows: vec![row; n] }
    }

    /// Strictly positive random rows: integer weights in `1..=1000/k`
    /// normalized to sum one, so every denominator is at most 1000.
    pub fn random<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Self {
        let top = (1000 / k as i64).max(1);
        let rows = (0..n)
            .map(|_| {
                let w: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=top)).collect();
                let total: i64 = w.iter().sum();
                w.iter()
                    .map(|&x| Rational::new(x.into(), total.into()))
                    .collect()
            })
            .collect();
        Self { rows }
    }

    /// `{"theta": [["1/2", "1/2"], ...]}`
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ThetaFile = serde_json::from_str(text)?;
        let rows = file
            .theta
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let theta: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        serde_json::to_value(ThetaFile { theta }).expect("serializable")
    }

    pub fn to_polynomial(&self) -> ParamTable<Polynomial> {
        ParamTable {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().cloned().map(Polynomial::constant).collect())
                .collect(),
        }
    }
}

impl ParamTable<Polynomial> {
    /// The table of indeterminates `theta_j^(i)`.
    pub fn symbolic(n: usize, k: usize) -> Self {
        let rows = (1..=n)
            .map(|i| {
                (0..k)
                    .map(|j| Polynomial::var(VariableId::theta(i, j)))
                    .collect()
            })
            .collect();
        Self { rows }
    }
}

#[derive(Serialize, Deserialize)]
struct ThetaFile {
    theta: Vec<Vec<String>>,
}

/// Deterministic generator for randomized checks.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Probabilities keyed by state. States missing from the map have probability zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution<T = Rational> {
    probs: BTreeMap<StateVector, T>,
}

pub type SymbolicDistribution = Distribution<Polynomial>;

impl<T: Scalar> Distribution<T> {
    pub fn from_map(probs: BTreeMap<StateVector, T>) -> Self {
        Self { probs }
    }

    pub fn get(&self, g: &StateVector) -> Option<&T> {
        self.probs.get(g)
    }

    /// Probability of `g`, zero when absent.
    pub fn prob(&self, g: &StateVector) -> T {
        self.probs.get(g).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&StateVector, &T)> {
        self.probs.iter()
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn total(&self) -> T {
        self.probs.values().cloned().fold(T::zero(), |a, b| a + b)
    }

    pub fn into_map(self) -> BTreeMap<StateVector, T> {
        self.probs
    }
}

impl Distribution<Rational> {
    /// JSON map digit-string -> `"num/den"`.
    pub fn to_json(&self) -> serde_json::Value {
        rational_map_json(&self.probs)
    }
}

impl Distribution<Polynomial> {
    pub fn evaluate(&self, theta: &ParamTable<Rational>) -> Result<Distribution<Rational>> {
        let probs = self
            .probs
            .iter()
            .map(|(g, p)| Ok((g.clone(), evaluate_theta(p, theta)?)))
            .collect::<Result<_>>()?;
        Ok(Distribution { probs })
    }
}

pub(crate) fn rational_map_json(map: &BTreeMap<StateVector, Rational>) -> serde_json::Value {
    let obj: serde_json::Map<String, serde_json::Value> = map
        .iter()
        .map(|(g, p)| (g.to_string(), serde_json::Value::String(format_rational(p))))
        .collect();
    serde_json::Value::Object(obj)
}

/// Evaluates a polynomial in the `theta` variables at a rational table.
pub fn evaluate_theta(p: &Polynomial, theta: &ParamTable<Rational>) -> Result<Rational> {
    p.evaluate(|v| match v {
        VariableId::Theta { vertex, state }
            if *vertex >= 1 && *vertex <= theta.n() && *state < theta.k() =>
        {
            Some(theta.get(*vertex, *state).clone())
        }
        _ => None,
    })
}

/// `P(X_i = g_i | X_pa(i) = g_pa(i))` for 1-based vertex `i`.
///
/// When `g_i = M_i = k-1` the sum runs over the whole row, which is returned
/// as exactly one; for rational tables that is the same value, and for
/// symbolic tables it keeps products free of `theta_0 + ... + theta_{k-1}`.
pub fn conditional_probability<T: Scalar>(
    dag: &DagSpec,
    theta: &ParamTable<T>,
    i: usize,
    g: &StateVector,
) -> Result<T> {
    dag.check_vertex(i)?;
    g.check_range(dag.n(), dag.k())?;
    theta.check_shape(dag.n(), dag.k())?;
    Ok(conditional_unchecked(dag, theta, i - 1, g))
}

fn conditional_unchecked<T: Scalar>(
    dag: &DagSpec,
    theta: &ParamTable<T>,
    idx: usize,
    g: &StateVector,
) -> T {
    let vals = g.values();
    let m = dag
        .parent_indices(idx)
        .iter()
        .map(|&p| vals[p])
        .max()
        .unwrap_or(0) as usize;
    let gi = vals[idx] as usize;
    let row = &theta.rows[idx];
    if gi < m {
        T::zero()
    } else if gi == m {
        if m + 1 == row.len() {
            T::one()
        } else {
            row[..=m].iter().cloned().fold(T::zero(), |a, b| a + b)
        }
    } else {
        row[gi].clone()
    }
}

/// `p_g`, the product of the conditional probabilities over all vertices.
pub fn joint_factored<T: Scalar>(
    dag: &DagSpec,
    theta: &ParamTable<T>,
    g: &StateVector,
) -> Result<T> {
    g.check_range(dag.n(), dag.k())?;
    theta.check_shape(dag.n(), dag.k())?;
    Ok(joint_unchecked(dag, theta, g))
}

fn joint_unchecked<T: Scalar>(dag: &DagSpec, theta: &ParamTable<T>, g: &StateVector) -> T {
    let mut acc = T::one();
    for idx in 0..dag.n() {
        let c = conditional_unchecked(dag, theta, idx, g);
        if c.is_zero() {
            return T::zero();
        }
        acc = acc * c;
    }
    acc
}

/// The state lattice `G(D, k)` of the model on `dag`.
pub fn state_lattice(dag: &DagSpec) -> StateLattice {
    order_preserving_maps(&dag.transitive_closure(), dag.k())
}

/// The factored joint distribution over every lattice state.
pub fn full_distribution<T: Scalar>(
    dag: &DagSpec,
    theta: &ParamTable<T>,
) -> Result<Distribution<T>> {
    full_distribution_on(dag, theta, &state_lattice(dag))
}

/// As [`full_distribution`], reusing a lattice already computed for `dag`.
pub fn full_distribution_on<T: Scalar>(
    dag: &DagSpec,
    theta: &ParamTable<T>,
    lattice: &StateLattice,
) -> Result<Distribution<T>> {
    theta.check_shape(dag.n(), dag.k())?;
    let probs = lattice
        .states()
        .iter()
        .map(|g| (g.clone(), joint_unchecked(dag, theta, g)))
        .collect();
    Ok(Distribution { probs })
}

fn box_size(n: usize, k: usize) -> u128 {
    (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

/// Calls `f` on every vector of `{0..k-1}^n`, in lexicographic order.
pub fn for_each_vector(n: usize, k: usize, mut f: impl FnMut(&StateVector)) {
    let mut z = StateVector::zeros(n);
    loop {
        f(&z);
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if (z.0[pos] as usize) + 1 < k {
                z.0[pos] += 1;
                break;
            }
            z.0[pos] = 0;
        }
    }
}

// X_i = max of z over an(i) and i itself
fn solve_structural(ancestry: &[Vec<usize>], z: &StateVector) -> StateVector {
    StateVector(
        ancestry
            .iter()
            .map(|anc| anc.iter().map(|&j| z.0[j]).max().unwrap_or(0))
            .collect(),
    )
}

fn ancestry(dag: &DagSpec) -> Vec<Vec<usize>> {
    (1..=dag.n())
        .map(|v| {
            let mut a: Vec<usize> = dag
                .ancestors(v)
                .expect("valid vertex")
                .into_iter()
                .map(|u| u - 1)
                .collect();
            a.push(v - 1);
            a
        })
        .collect()
}

/// `P(X = g)` by summing `prod_i theta_{z_i}^(i)` over all innovation vectors
/// `z` whose solved structural equations give `g`.
pub fn joint_oracle<T: Scalar>(
    dag: &DagSpec,
    theta: &ParamTable<T>,
    g: &StateVector,
    limit: u128,
) -> Result<T> {
    g.check_range(dag.n(), dag.k())?;
    theta.check_shape(dag.n(), dag.k())?;
    let size = box_size(dag.n(), dag.k());
    if size > limit {
        return Err(Error::TooLarge { size, limit });
    }
    let anc = ancestry(dag);
    let mut acc = T::zero();
    for_each_vector(dag.n(), dag.k(), |z| {
        if &solve_structural(&anc, z) == g {
            acc = acc.clone() + innovation_weight(theta, z);
        }
    });
    Ok(acc)
}

/// The oracle distribution for every reachable state, from one pass over all innovations.
pub fn oracle_distribution<T: Scalar>(
    dag: &DagSpec,
    theta: &ParamTable<T>,
    limit: u128,
) -> Result<Distribution<T>> {
    theta.check_shape(dag.n(), dag.k())?;
    let size = box_size(dag.n(), dag.k());
    if size > limit {
        return Err(Error::TooLarge { size, limit });
    }
    let anc = ancestry(dag);
    let mut probs: BTreeMap<StateVector, T> = BTreeMap::new();
    for_each_vector(dag.n(), dag.k(), |z| {
        let x = solve_structural(&anc, z);
        let w = innovation_weight(theta, z);
        let slot = probs.entry(x).or_insert_with(T::zero);
        *slot = slot.clone() + w;
    });
    Ok(Distribution { probs })
}

fn innovation_weight<T: Scalar>(theta: &ParamTable<T>, z: &StateVector) -> T {
    z.0.iter().enumerate().fold(T::one(), |acc, (i, &zi)| {
        acc * theta.rows[i][zi as usize].clone()
    })
}

/// CBN conditional probability of element `i` (1-based) given its parents,
/// the elements it covers in `poset`. `theta` rows are `(theta_0, theta_1)`.
pub fn cbn_conditional<T: Scalar>(
    poset: &PosetRel,
    theta: &ParamTable<T>,
    i: usize,
    g: &StateVector,
) -> Result<T> {
    let n = poset.len();
    if i == 0 || i > n {
        return Err(Error::BadVertex { vertex: i, n });
    }
    g.check_range(n, 2)?;
    theta.check_shape(n, 2)?;
    let covers = poset.covers();
    Ok(cbn_conditional_unchecked(&covers, theta, i - 1, g))
}

fn cbn_conditional_unchecked<T: Scalar>(
    covers: &[(usize, usize)],
    theta: &ParamTable<T>,
    idx: usize,
    g: &StateVector,
) -> T {
    let all_parents_occurred = covers
        .iter()
        .filter(|&&(_, b)| b == idx)
        .all(|&(a, _)| g.0[a] == 1);
    match (all_parents_occurred, g.0[idx]) {
        (false, 0) => T::one(),
        (false, _) => T::zero(),
        (true, b) => theta.rows[idx][b as usize].clone(),
    }
}

/// The CBN distribution over `J(poset)`.
pub fn cbn_distribution<T: Scalar>(
    poset: &PosetRel,
    theta: &ParamTable<T>,
) -> Result<Distribution<T>> {
    theta.check_shape(poset.len(), 2)?;
    let covers = poset.covers();
    let lattice = ideal_lattice(poset);
    let probs = lattice
        .states()
        .iter()
        .map(|g| {
            let p = (0..poset.len()).fold(T::one(), |acc, idx| {
                acc * cbn_conditional_unchecked(&covers, theta, idx, g)
            });
            (g.clone(), p)
        })
        .collect();
    Ok(Distribution { probs })
}

/// `phi(g)_i = 0` if `i` is in the ideal `g`, else `1`.
pub fn cbn_to_dmlbn_state(closure: &PosetRel, g: &StateVector) -> Result<StateVector> {
    if !closure.is_order_ideal(g) {
        return Err(Error::NotAnIdeal(g.to_string()));
    }
    Ok(StateVector(g.0.iter().map(|&b| 1 - b).collect()))
}

/// Checks `rho_g(theta_0, theta_1) = psi_phi(g)(theta_1, theta_0)` for every
/// ideal `g`, symbolically and at `trials` random rational tables.
pub fn verify_theorem31(dag: &DagSpec, trials: usize, seed: u64) -> Result<Report> {
    let dag = dag.with_k(2)?;
    let closure = dag.transitive_closure();
    let n = dag.n();
    let mut report = Report::new("theorem31");

    let symbolic = ParamTable::symbolic(n, 2);
    let rho = cbn_distribution(&closure, &symbolic)?;
    let psi = full_distribution(&dag, &symbolic.swap_binary()?)?;
    let lattice_size = psi.len();
    report.check(rho.len() == lattice_size, || {
        format!("|J(D^tr)| = {} but |G(D,2)| = {lattice_size}", rho.len())
    });
    for (g, r) in rho.iter() {
        let phi = cbn_to_dmlbn_state(&closure, g)?;
        let p = psi.get(&phi);
        report.check(p == Some(r), || {
            format!("symbolic: rho[{g}] = {r}, psi[{phi}] = {p:?}")
        });
    }

    let mut rng = seeded_rng(seed);
    for trial in 0..trials {
        let theta = ParamTable::random(n, 2, &mut rng);
        let rho = cbn_distribution(&closure, &theta)?;
        let psi = full_distribution(&dag, &theta.swap_binary()?)?;
        for (g, r) in rho.iter() {
            let phi = cbn_to_dmlbn_state(&closure, g)?;
            let p = psi.prob(&phi);
            report.check(&p == r, || {
                format!("trial {trial}: rho[{g}] = {r}, psi[{phi}] = {p}")
            });
        }
    }
    report.summary = format!(
        "{} states, symbolic and {trials} random tables, {} checks, {} failures",
        lattice_size,
        report.checked,
        report.failures.len()
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, rat};
    use crate::dag::parse_dag;

    fn fig2() -> DagSpec {
        parse_dag("5 2\n1 3\n1 4\n2 4\n3 5\n4 5").unwrap()
    }

    fn s(x: &str) -> StateVector {
        x.parse().unwrap()
    }

    fn poly(x: &str) -> Polynomial {
        parse_polynomial(x).unwrap()
    }

    #[test]
    fn conditional_cases() {
        let dag = fig2();
        let theta = ParamTable::symbolic(5, 2);
        let g = s("00011");
        assert_eq!(
            conditional_probability(&dag, &theta, 4, &g).unwrap(),
            poly("theta1^(4)")
        );
        assert_eq!(
            conditional_probability(&dag, &theta, 5, &g).unwrap(),
            Polynomial::one()
        );
        // g_3 = 0 below its parent g_1 = 1
        assert!(conditional_probability(&dag, &theta, 3, &s("10000"))
            .unwrap()
            .is_zero());
        assert!(matches!(
            conditional_probability(&dag, &theta, 6, &g),
            Err(Error::BadVertex { .. })
        ));
        assert!(matches!(
            conditional_probability(&dag, &theta, 1, &s("00021")),
            Err(Error::BadState(_))
        ));
    }

    #[test]
    fn partial_row_sum_for_k3() {
        let dag = parse_dag("2 3\n1 2").unwrap();
        let theta = ParamTable::symbolic(2, 3);
        assert_eq!(
            conditional_probability(&dag, &theta, 2, &s("11")).unwrap(),
            poly("theta0^(2) + theta1^(2)")
        );
        assert_eq!(
            conditional_probability(&dag, &theta, 2, &s("22")).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn joint_examples() {
        let dag = fig2();
        let theta = ParamTable::symbolic(5, 2);
        let p = |g: &str| joint_factored(&dag, &theta, &s(g)).unwrap();
        assert_eq!(
            p("00011"),
            poly("theta0^(1)*theta0^(2)*theta0^(3)*theta1^(4)")
        );
        assert_eq!(p("11111"), poly("theta1^(1)*theta1^(2)"));
        assert!(p("10000").is_zero());
    }

    #[test]
    fn uniform_fig2() {
        let dist = full_distribution(&fig2(), &ParamTable::uniform(5, 2)).unwrap();
        assert_eq!(dist.len(), 9);
        assert_eq!(dist.total(), Rational::one());
        assert_eq!(dist.prob(&s("11111")), rat(1, 4));
    }

    #[test]
    fn degenerate_distributions() {
        let one = parse_dag("1 3").unwrap();
        let theta = ParamTable::new(vec![vec![rat(1, 4), rat(1, 4), rat(1, 2)]]).unwrap();
        let dist = full_distribution(&one, &theta).unwrap();
        let probs: Vec<Rational> = dist.iter().map(|(_, p)| p.clone()).collect();
        assert_eq!(probs, theta.rows()[0]);

        let dist = full_distribution(&fig2(), &ParamTable::point_mass(5, 2, 0)).unwrap();
        for (g, p) in dist.iter() {
            let expected = if g == &s("00000") {
                Rational::one()
            } else {
                Rational::zero()
            };
            assert_eq!(p, &expected, "{g}");
        }
    }

    #[test]
    fn oracle_small_cases() {
        let one = parse_dag("1 3").unwrap();
        let theta = ParamTable::new(vec![vec![rat(1, 6), rat(1, 3), rat(1, 2)]]).unwrap();
        for j in 0..3u8 {
            let p =
                joint_oracle(&one, &theta, &StateVector::new([j]), DEFAULT_ORACLE_LIMIT).unwrap();
            assert_eq!(&p, theta.get(1, j as usize));
        }
        let dag = fig2();
        let theta = ParamTable::uniform(5, 2);
        assert!(
            joint_oracle(&dag, &theta, &s("10000"), DEFAULT_ORACLE_LIMIT)
                .unwrap()
                .is_zero()
        );
        assert!(matches!(
            joint_oracle(&dag, &theta, &s("10000"), 31),
            Err(Error::TooLarge {
                size: 32,
                limit: 31
            })
        ));
    }

    #[test]
    fn oracle_matches_factored_fig2() {
        let dag = fig2();
        let mut rng = seeded_rng(11);
        for _ in 0..5 {
            let theta = ParamTable::random(5, 2, &mut rng);
            let oracle = oracle_distribution(&dag, &theta, DEFAULT_ORACLE_LIMIT).unwrap();
            let factored = full_distribution(&dag, &theta).unwrap();
            assert_eq!(oracle, factored);
        }
    }

    #[test]
    fn param_table_validation() {
        assert!(ParamTable::new(vec![vec![rat(1, 2), rat(1, 3)]]).is_err());
        assert!(ParamTable::new(vec![vec![rat(3, 2), rat(-1, 2)]]).is_err());
        assert!(ParamTable::new(vec![vec![rat(1, 2), rat(1, 2)], vec![Rational::one()]]).is_err());
        let t = ParamTable::from_json(r#"{"theta": [["1/2", "1/2"], ["1/3", "2/3"]]}"#).unwrap();
        assert_eq!(t.get(2, 1), &rat(2, 3));
        assert_eq!(ParamTable::from_json(&t.to_json().to_string()).unwrap(), t);
        assert!(ParamTable::from_json(r#"{"theta": [["1/2", "1/3"]]}"#).is_err());
    }

    #[test]
    fn random_tables_are_bounded() {
        let mut rng = seeded_rng(3);
        for k in 1..5 {
            let t = ParamTable::random(4, k, &mut rng);
            for row in t.rows() {
                assert_eq!(row.iter().cloned().sum::<Rational>(), Rational::one());
                for x in row {
                    assert!(x > &Rational::zero());
                    assert!(x.denom() <= &1000.into());
                }
            }
        }
    }

    fn fig1() -> PosetRel {
        PosetRel::from_relations(5, [(1, 3), (2, 3), (3, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn cbn_conditionals() {
        let p = fig1();
        let theta = ParamTable::symbolic(5, 2);
        assert_eq!(
            cbn_conditional(&p, &theta, 3, &s("11000")).unwrap(),
            poly("theta0^(3)")
        );
        assert_eq!(
            cbn_conditional(&p, &theta, 4, &s("11000")).unwrap(),
            Polynomial::one()
        );
        assert!(cbn_conditional(&p, &theta, 4, &s("11010"))
            .unwrap()
            .is_zero());
        assert!(cbn_conditional(&p, &theta, 4, &s("11020")).is_err());
    }

    #[test]
    fn cbn_single_element() {
        let theta = ParamTable::symbolic(1, 2);
        let d = cbn_distribution(&PosetRel::chain(1), &theta).unwrap();
        assert_eq!(d.prob(&s("0")), poly("theta0^(1)"));
        assert_eq!(d.prob(&s("1")), poly("theta1^(1)"));
    }

    #[test]
    fn cbn_normalized_on_ideals() {
        let p = fig1();
        let theta = ParamTable::random(5, 2, &mut seeded_rng(5));
        let d = cbn_distribution(&p, &theta).unwrap();
        assert_eq!(d.len(), 8);
        assert_eq!(d.total(), Rational::one());
        assert!(d.iter().all(|(g, _)| p.is_order_ideal(g)));
    }

    #[test]
    fn phi_examples() {
        let tr = fig2().transitive_closure();
        assert_eq!(cbn_to_dmlbn_state(&tr, &s("10100")).unwrap(), s("01011"));
        assert_eq!(cbn_to_dmlbn_state(&tr, &s("11111")).unwrap(), s("00000"));
        assert_eq!(cbn_to_dmlbn_state(&tr, &s("00000")).unwrap(), s("11111"));
        assert!(matches!(
            cbn_to_dmlbn_state(&tr, &s("00100")),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn theorem31_small() {
        let report = verify_theorem31(&fig2(), 10, 1).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let report = verify_theorem31(&parse_dag("1 2").unwrap(), 3, 1).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn vector_enumeration() {
        let mut seen = Vec::new();
        for_each_vector(2, 3, |z| seen.push(z.to_string()));
        assert_eq!(seen, ["00", "01", "02", "10", "11", "12", "20", "21", "22"]);
    }
}
