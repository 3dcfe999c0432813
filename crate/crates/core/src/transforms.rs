//! Coordinate changes that turn the model into a toric one.
//!
//! * `q_g = sum_{h <= g} p_h`: the zeta transform over the state lattice, and
//!   its inverse (Möbius inversion) by triangular back-substitution.
//! * `alpha_j^(i) = theta_0^(i) + ... + theta_j^(i)`: cumulative parameters, in
//!   which `q_g = prod_i alpha_{g_i}^(i)`.
//! * `alpha_j^(i) = prod_{r=0}^{k-j-2} x_r^(i)`: the multiplicative change that
//!   makes the parameterization match the Hibi monomial map.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{format_rational, Polynomial, Rational, Scalar, VariableId};
use crate::dag::DagSpec;
use crate::error::{Error, Result};
use crate::model::{
    full_distribution_on, rational_map_json, state_lattice, Distribution, ParamTable,
};
use crate::poset::{StateLattice, StateVector};
use crate::report::Report;

/// Zeta-transformed coordinates `q_g`, one per lattice state.
#[derive(Clone, Debug, PartialEq)]
pub struct QCoordinates<T = Rational> {
    q: BTreeMap<StateVector, T>,
}

impl<T: Scalar> QCoordinates<T> {
    pub fn from_map(q: BTreeMap<StateVector, T>) -> Self {
        Self { q }
    }

    pub fn get(&self, g: &StateVector) -> Option<&T> {
        self.q.get(g)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&StateVector, &T)> {
        self.q.iter()
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }
}

impl QCoordinates<Rational> {
    pub fn to_json(&self) -> serde_json::Value {
        rational_map_json(&self.q)
    }
}

/// `q_g = sum of p_h over lattice members h <= g`.
pub fn zeta_transform<T: Scalar>(
    dist: &Distribution<T>,
    lattice: &StateLattice,
) -> Result<QCoordinates<T>> {
    if let Some((g, _)) = dist.iter().find(|(g, _)| !lattice.contains(g)) {
        return Err(Error::SupportMismatch(format!(
            "{g} carries probability but is not a lattice state"
        )));
    }
    let p: Vec<T> = lattice.states().iter().map(|g| dist.prob(g)).collect();
    let q = lattice
        .states()
        .iter()
        .map(|g| {
            let sum = lattice
                .below(g)
                .fold(T::zero(), |acc, h| acc + p[h].clone());
            (g.clone(), sum)
        })
        .collect();
    Ok(QCoordinates { q })
}

/// The unique `p` with `zeta_transform(p) = q`.
///
/// Lexicographic order is a linear extension of the lattice, so solving
/// `p_g = q_g - sum_{h < g} p_h` in that order only uses solved values.
pub fn moebius_inverse<T: Scalar>(
    q: &QCoordinates<T>,
    lattice: &StateLattice,
) -> Result<Distribution<T>> {
    if q.len() != lattice.len() || lattice.states().iter().any(|g| !q.q.contains_key(g)) {
        return Err(Error::SupportMismatch(format!(
            "q has {} coordinates, lattice has {} states",
            q.len(),
            lattice.len()
        )));
    }
    let states = lattice.states();
    let mut p: Vec<T> = Vec::with_capacity(states.len());
    for (idx, g) in states.iter().enumerate() {
        let lower = lattice
            .below(g)
            .take_while(|&h| h < idx)
            .fold(T::zero(), |acc, h| acc + p[h].clone());
        p.push(q.q[g].clone() - lower);
    }
    Ok(Distribution::from_map(
        states.iter().cloned().zip(p).collect(),
    ))
}

/// Cumulative parameters, row `i` = `(alpha_0^(i), ..., alpha_{k-1}^(i))`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaTable<T = Rational> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> AlphaTable<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// `alpha_index^(vertex)`, 1-based vertex.
    pub fn get(&self, vertex: usize, index: usize) -> &T {
        &self.rows[vertex - 1][index]
    }
}

/// Multiplicative parameters, row `i` = `(x_0^(i), ..., x_{k-2}^(i))`.
#[derive(Clone, Debug, PartialEq)]
pub struct XTable<T = Rational> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> XTable<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn get(&self, vertex: usize, index: usize) -> &T {
        &self.rows[vertex - 1][index]
    }
}

impl XTable<Polynomial> {
    pub fn symbolic(n: usize, k: usize) -> Self {
        let rows = (1..=n)
            .map(|i| {
                (0..k.saturating_sub(1))
                    .map(|r| Polynomial::var(VariableId::x(i, r)))
                    .collect()
            })
            .collect();
        Self { rows }
    }
}

fn rows_json(rows: &[Vec<Rational>]) -> serde_json::Value {
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect();
    serde_json::json!(rows)
}

impl AlphaTable<Rational> {
    pub fn to_json(&self) -> serde_json::Value {
        rows_json(&self.rows)
    }
}

impl XTable<Rational> {
    pub fn to_json(&self) -> serde_json::Value {
        rows_json(&self.rows)
    }
}

/// Partial sums of each row; the last entry is the full row sum, fixed to one.
pub fn alpha_params<T: Scalar>(theta: &ParamTable<T>) -> AlphaTable<T> {
    let rows = theta
        .rows()
        .iter()
        .map(|row| {
            let mut acc = T::zero();
            let mut out: Vec<T> = row
                .iter()
                .map(|x| {
                    acc = acc.clone() + x.clone();
                    acc.clone()
                })
                .collect();
            if let Some(last) = out.last_mut() {
                *last = T::one();
            }
            out
        })
        .collect();
    AlphaTable { rows }
}

/// Inverse of [`alpha_params`]: `theta_0 = alpha_0`, `theta_j = alpha_j - alpha_{j-1}`.
pub fn theta_from_alpha(alpha: &AlphaTable<Rational>) -> Result<ParamTable<Rational>> {
    let mut rows = Vec::with_capacity(alpha.rows.len());
    for (i, row) in alpha.rows.iter().enumerate() {
        let monotone = row.first().is_some_and(|a| a >= &Rational::zero())
            && row.windows(2).all(|w| w[0] <= w[1])
            && row.last().is_some_and(One::is_one);
        if !monotone {
            return Err(Error::NotMonotone { row: i + 1 });
        }
        let mut prev = Rational::zero();
        rows.push(
            row.iter()
                .map(|a| {
                    let d = a - &prev;
                    prev = a.clone();
                    d
                })
                .collect(),
        );
    }
    ParamTable::new(rows)
}

/// `x_{k-j-1}^(i) = alpha_{j-1}^(i) / alpha_j^(i)` for `j = 1..k-1`.
pub fn x_params(alpha: &AlphaTable<Rational>) -> Result<XTable<Rational>> {
    let mut rows = Vec::with_capacity(alpha.rows.len());
    for (i, row) in alpha.rows.iter().enumerate() {
        let k = row.len();
        let mut x = vec![Rational::zero(); k.saturating_sub(1)];
        for j in 1..k {
            if row[j].is_zero() {
                return Err(Error::DivideByZero {
                    vertex: i + 1,
                    index: j,
                });
            }
            x[k - j - 1] = &row[j - 1] / &row[j];
        }
        rows.push(x);
    }
    Ok(XTable { rows })
}

/// `alpha_j^(i) = prod_{r=0}^{k-j-2} x_r^(i)`; the empty product gives `alpha_{k-1} = 1`.
pub fn alpha_from_x<T: Scalar>(x: &XTable<T>) -> AlphaTable<T> {
    let rows = x
        .rows
        .iter()
        .map(|row| {
            let k = row.len() + 1;
            (0..k)
                .map(|j| {
                    row[..k - j - 1]
                        .iter()
                        .cloned()
                        .fold(T::one(), |a, b| a * b)
                })
                .collect()
        })
        .collect();
    AlphaTable { rows }
}

/// `prod_i alpha_{g_i}^(i)`.
pub fn alpha_product<T: Scalar>(alpha: &AlphaTable<T>, g: &StateVector) -> T {
    g.values()
        .iter()
        .enumerate()
        .fold(T::one(), |acc, (i, &gi)| {
            acc * alpha.rows[i][gi as usize].clone()
        })
}

/// Checks `zeta(full_distribution)(g) = prod_i alpha_{g_i}^(i)` at every lattice state.
pub fn q_monomial_identity_check(dag: &DagSpec, theta: &ParamTable<Rational>) -> Result<Report> {
    let lattice = state_lattice(dag);
    let dist = full_distribution_on(dag, theta, &lattice)?;
    let q = zeta_transform(&dist, &lattice)?;
    let alpha = alpha_params(theta);
    let mut report = Report::new("eq5");
    for (g, lhs) in q.iter() {
        let rhs = alpha_product(&alpha, g);
        report.check(lhs == &rhs, || {
            format!("q[{g}] = {lhs} but prod alpha = {rhs}")
        });
    }
    report.summary = format!(
        "{} states, {} failures",
        lattice.len(),
        report.failures.len()
    );
    Ok(report)
}

/// `theta_j^(i) -> alpha_j^(i) - alpha_{j-1}^(i)` as polynomials in the
/// `alpha` variables, with `alpha_{k-1}^(i) = 1`.
pub fn theta_in_alpha_vars(n: usize, k: usize) -> BTreeMap<VariableId, Polynomial> {
    let alpha = |i: usize, j: usize| {
        if j + 1 == k {
            Polynomial::one()
        } else {
            Polynomial::var(VariableId::alpha(i, j))
        }
    };
    let mut map = BTreeMap::new();
    for i in 1..=n {
        for j in 0..k {
            let prev = if j == 0 {
                Polynomial::zero()
            } else {
                alpha(i, j - 1)
            };
            map.insert(VariableId::theta(i, j), &alpha(i, j) - &prev);
        }
    }
    map
}

/// The symbolic form of [`q_monomial_identity_check`]: with `theta` written
/// in `alpha` variables, the zeta transform of the symbolic distribution must
/// equal `prod_i alpha_{g_i}^(i)` as polynomials.
pub fn q_monomial_identity_symbolic(dag: &DagSpec) -> Result<Report> {
    let (n, k) = (dag.n(), dag.k());
    let lattice = state_lattice(dag);
    let dist = full_distribution_on(dag, &ParamTable::symbolic(n, k), &lattice)?;
    let q = zeta_transform(&dist, &lattice)?;
    let subst = theta_in_alpha_vars(n, k);
    let alpha = AlphaTable {
        rows: (1..=n)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if j + 1 == k {
                            Polynomial::one()
                        } else {
                            Polynomial::var(VariableId::alpha(i, j))
                        }
                    })
                    .collect()
            })
            .collect(),
    };
    let mut report = Report::new("eq5-symbolic");
    for (g, lhs) in q.iter() {
        let lhs = lhs.substitute(&subst);
        let rhs = alpha_product(&alpha, g);
        report.check(lhs == rhs, || {
            format!("q[{g}] = {lhs} but prod alpha = {rhs}")
        });
    }
    report.summary = format!(
        "{} states, {} failures",
        lattice.len(),
        report.failures.len()
    );
    Ok(report)
}
