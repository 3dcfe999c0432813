//! Hibi binomials of a state lattice and the monomial map whose kernel they generate.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Polynomial, Rational, VariableId};
use crate::error::{Error, Result};
use crate::model::Distribution;
use crate::poset::{incomparable_pairs, state_to_ideal, PosetRel, StateLattice, StateVector};
use crate::report::Report;

/// `q_g q_h - q_{g meet h} q_{g join h}` for an incomparable pair `(g, h)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinomialGenerator {
    pub g: StateVector,
    pub h: StateVector,
    pub meet: StateVector,
    pub join: StateVector,
    pub poly: Polynomial,
}

impl BinomialGenerator {
    pub fn new(g: StateVector, h: StateVector) -> Result<Self> {
        if g.comparable(&h) {
            return Err(Error::BadState(format!("{g} and {h} are comparable")));
        }
        let meet = g.meet(&h);
        let join = g.join(&h);
        let q = |s: &StateVector| Polynomial::var(VariableId::Q(s.clone()));
        let poly = &(&q(&g) * &q(&h)) - &(&q(&meet) * &q(&join));
        Ok(Self {
            g,
            h,
            meet,
            join,
            poly,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pair": [self.g.to_string(), self.h.to_string()],
            "meet": self.meet.to_string(),
            "join": self.join.to_string(),
            "text": self.to_string(),
            "polynomial": self.poly.to_json(),
        })
    }
}

impl fmt::Display for BinomialGenerator {
    /// `q[g]*q[h] - q[meet]*q[join]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q[{}]*q[{}] - q[{}]*q[{}]",
            self.g, self.h, self.meet, self.join
        )
    }
}

/// One generator per incomparable pair, in [`incomparable_pairs`] order.
pub fn hibi_generators(lattice: &StateLattice) -> Vec<BinomialGenerator> {
    incomparable_pairs(lattice)
        .into_iter()
        .map(|(g, h)| BinomialGenerator::new(g, h).expect("incomparable by construction"))
        .collect()
}

/// The assignment `q_g -> t * prod_{(i, r) in g~} x_r^(i)` over a lattice.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MonomialMap {
    images: BTreeMap<StateVector, Polynomial>,
}

impl MonomialMap {
    pub fn image(&self, g: &StateVector) -> Option<&Polynomial> {
        self.images.get(g)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&StateVector, &Polynomial)> {
        self.images.iter()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// The map of a distributive lattice `J(P)` given by its ideal indicators:
    /// `q_g -> t * prod_{i in g} x_i`, with `x_i` written `x0^(i)`.
    pub fn for_ideal_lattice(lattice: &StateLattice) -> Self {
        let images = lattice
            .states()
            .iter()
            .map(|g| {
                let m = g
                    .values()
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b == 1)
                    .fold(Polynomial::var(VariableId::T), |acc, (i, _)| {
                        &acc * &Polynomial::var(VariableId::x(i + 1, 0))
                    });
                (g.clone(), m)
            })
            .collect();
        Self { images }
    }
}

/// `q_g -> t * prod_{(i, r) in g~} x_r^(i)` with `g~ = state_to_ideal(g, k)`.
pub fn monomial_map(closure: &PosetRel, lattice: &StateLattice) -> Result<MonomialMap> {
    let k = lattice.k();
    let mut images = BTreeMap::new();
    for g in lattice.states() {
        let ideal = state_to_ideal(closure, g, k)?;
        let m = ideal
            .into_iter()
            .fold(Polynomial::var(VariableId::T), |acc, (i, r)| {
                &acc * &Polynomial::var(VariableId::x(i, r))
            });
        images.insert(g.clone(), m);
    }
    Ok(MonomialMap { images })
}

/// Applies the map to every `q` variable; other variables pass through.
pub fn substitute(poly: &Polynomial, map: &MonomialMap) -> Result<Polynomial> {
    poly.try_substitute(|v| match v {
        VariableId::Q(g) => map
            .image(g)
            .cloned()
            .map(Some)
            .ok_or_else(|| Error::UnmappedVariable(v.to_string())),
        _ => Ok(None),
    })
}

/// Checks that every generator maps to the zero polynomial.
pub fn verify_vanishing(generators: &[BinomialGenerator], map: &MonomialMap) -> Report {
    let mut report = Report::new("vanishing");
    for gen in generators {
        match substitute(&gen.poly, map) {
            Ok(image) => report.check(image.is_zero(), || format!("{gen} maps to {image}")),
            Err(e) => report.check(false, || format!("{gen}: {e}")),
        }
    }
    report.summary = format!(
        "{} generators, {} failures",
        generators.len(),
        report.failures.len()
    );
    report
}

/// Rewrites a polynomial in `q` variables through `q_g = sum_{h <= g} p_h`.
pub fn pullback_to_p(poly: &Polynomial, lattice: &StateLattice) -> Result<Polynomial> {
    poly.try_substitute(|v| match v {
        VariableId::Q(g) if lattice.contains(g) => {
            let sum = lattice.below(g).fold(Polynomial::zero(), |acc, h| {
                acc + Polynomial::var(VariableId::P(lattice.states()[h].clone()))
            });
            Ok(Some(sum))
        }
        _ => Err(Error::UnmappedVariable(v.to_string())),
    })
}

/// Evaluates a polynomial in `p` variables at a distribution.
pub fn evaluate_at_distribution(
    poly: &Polynomial,
    dist: &Distribution<Rational>,
) -> Result<Rational> {
    poly.evaluate(|v| match v {
        VariableId::P(g) => dist.get(g).cloned(),
        _ => None,
    })
}

/// `t = 1` specialization used when comparing with probabilities.
pub fn dehomogenize(poly: &Polynomial) -> Polynomial {
    let one = BTreeMap::from([(VariableId::T, Polynomial::one())]);
    poly.substitute(&one)
}
