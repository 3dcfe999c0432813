//! Verification suites shared by the command line, the examples and the tests.
//! Each returns a [`Report`]; randomized suites are fully determined by `seed`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::algebra::{
    buchberger_check, evaluate_at_distribution, hibi_generators, monomial_map, verify_vanishing,
    MonomialMap, MonomialOrder, Polynomial, Rational,
};
use crate::dag::DagSpec;
use crate::error::Result;
use crate::model::{
    for_each_vector, full_distribution_on, joint_factored, oracle_distribution, seeded_rng,
    state_lattice, ParamTable,
};
use crate::poset::{
    chain_product, ideal_lattice, state_to_ideal_indicator, PosetRel, StateLattice,
};
use crate::report::Report;
use crate::transforms::{
    alpha_from_x, alpha_params, moebius_inverse, q_monomial_identity_check,
    q_monomial_identity_symbolic, theta_from_alpha, x_params, zeta_transform, QCoordinates,
};

pub use crate::model::verify_theorem31 as theorem31;

/// Every Hibi generator of `G(D, k)` maps to zero under the monomial map.
pub fn vanishing(dag: &DagSpec) -> Result<Report> {
    let lattice = state_lattice(dag);
    let map = monomial_map(&dag.transitive_closure(), &lattice)?;
    Ok(verify_vanishing(&hibi_generators(&lattice), &map))
}

/// The same check for the ideal lattice `J(P)` of a poset.
pub fn vanishing_ideals(poset: &PosetRel) -> Report {
    let lattice = ideal_lattice(poset);
    verify_vanishing(
        &hibi_generators(&lattice),
        &MonomialMap::for_ideal_lattice(&lattice),
    )
}

/// Every S-polynomial of the Hibi generators reduces to zero under the
/// default degree reverse lexicographic order.
pub fn groebner(lattice: &StateLattice) -> Report {
    buchberger_check(
        &hibi_generators(lattice),
        &MonomialOrder::hibi_default(lattice),
    )
}

/// Factored joint against brute-force enumeration of the innovations on all
/// of `{0..k-1}^n`, and `p_g = 0` exactly off the order-preserving maps.
pub fn oracle(dag: &DagSpec, trials: usize, seed: u64, limit: u128) -> Result<Report> {
    let closure = dag.transitive_closure();
    let lattice_size = state_lattice(dag).len();
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("oracle");
    let mut passed_trials = 0;
    for trial in 0..trials {
        let theta = ParamTable::random(dag.n(), dag.k(), &mut rng);
        let oracle = oracle_distribution(dag, &theta, limit)?;
        let before = report.failures.len();
        let mut first_err = None;
        for_each_vector(dag.n(), dag.k(), |g| {
            let factored = match joint_factored(dag, &theta, g) {
                Ok(p) => p,
                Err(e) => {
                    first_err.get_or_insert(e);
                    return;
                }
            };
            let expected = oracle.prob(g);
            report.check(factored == expected, || {
                format!("trial {trial}: p[{g}] factored {factored}, oracle {expected}")
            });
            let monotone = g.is_order_preserving(&closure);
            report.check(factored.is_zero() != monotone, || {
                format!("trial {trial}: p[{g}] = {factored} but order-preserving = {monotone}")
            });
        });
        if let Some(e) = first_err {
            return Err(e);
        }
        if report.failures.len() == before {
            passed_trials += 1;
        }
    }
    let verdict = if report.passed() {
        "exact match"
    } else {
        "mismatch"
    };
    report.summary =
        format!("{passed_trials}/{trials} trials, {lattice_size} states each, {verdict}");
    Ok(report)
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(-1000i64..=1000)),
        BigInt::from(rng.gen_range(1i64..=1000)),
    )
}

/// Zeta and Möbius are mutually inverse on random rational functions on the
/// lattice, and the `theta <-> alpha <-> x` changes of parameters roundtrip.
pub fn moebius(dag: &DagSpec, trials: usize, seed: u64) -> Result<Report> {
    let lattice = state_lattice(dag);
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("moebius");
    for trial in 0..trials {
        let f: BTreeMap<_, _> = lattice
            .states()
            .iter()
            .map(|g| (g.clone(), random_rational(&mut rng)))
            .collect();

        let dist = crate::model::Distribution::from_map(f.clone());
        let back = moebius_inverse(&zeta_transform(&dist, &lattice)?, &lattice)?;
        report.check(back == dist, || {
            format!("trial {trial}: moebius(zeta(f)) != f")
        });

        let q = QCoordinates::from_map(f);
        let again = zeta_transform(&moebius_inverse(&q, &lattice)?, &lattice)?;
        report.check(again == q, || {
            format!("trial {trial}: zeta(moebius(q)) != q")
        });

        let theta = ParamTable::random(dag.n(), dag.k(), &mut rng);
        let alpha = alpha_params(&theta);
        report.check(theta_from_alpha(&alpha)? == theta, || {
            format!("trial {trial}: theta -> alpha -> theta")
        });
        let x = x_params(&alpha)?;
        report.check(alpha_from_x(&x) == alpha, || {
            format!("trial {trial}: alpha -> x -> alpha")
        });
    }
    report.summary = format!(
        "{trials} trials on {} states, {} checks, {} failures",
        lattice.len(),
        report.checked,
        report.failures.len()
    );
    Ok(report)
}

/// `q_g = prod_i alpha_{g_i}^(i)`: symbolically, then at random rational tables.
pub fn eq5(dag: &DagSpec, trials: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("eq5");
    report.merge(q_monomial_identity_symbolic(dag)?);
    let mut rng = seeded_rng(seed);
    for _ in 0..trials {
        let theta = ParamTable::random(dag.n(), dag.k(), &mut rng);
        report.merge(q_monomial_identity_check(dag, &theta)?);
    }
    report.summary = format!(
        "{} states, symbolic and {trials} random tables, {} checks, {} failures",
        state_lattice(dag).len(),
        report.checked,
        report.failures.len()
    );
    Ok(report)
}

/// Each polynomial in `p` coordinates evaluates to zero at the distribution of
/// `trials` random parameter tables.
pub fn polynomials_vanish(
    dag: &DagSpec,
    polys: &[Polynomial],
    trials: usize,
    seed: u64,
) -> Result<Report> {
    let lattice = state_lattice(dag);
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("p-vanishing");
    for trial in 0..trials {
        let theta = ParamTable::random(dag.n(), dag.k(), &mut rng);
        let dist = full_distribution_on(dag, &theta, &lattice)?;
        for poly in polys {
            let value = evaluate_at_distribution(poly, &dist)?;
            report.check(value.is_zero(), || {
                format!("trial {trial}: {poly} = {value}")
            });
        }
    }
    report.summary = format!(
        "{} polynomials at {trials} random distributions, {} failures",
        polys.len(),
        report.failures.len()
    );
    Ok(report)
}

/// `|G(D,k)| = |J(D^tr x chain(k-1))|` and `g -> g~` is an order-reversing
/// bijection onto the ideals.
pub fn correspondence(dag: &DagSpec) -> Result<Report> {
    let k = dag.k();
    let closure = dag.transitive_closure();
    let states = state_lattice(dag);
    let ideals = ideal_lattice(&chain_product(&closure, k - 1));
    let mut report = Report::new("correspondence");
    report.check(states.len() == ideals.len(), || {
        format!("|G| = {} but |J| = {}", states.len(), ideals.len())
    });
    let images = states
        .states()
        .iter()
        .map(|g| state_to_ideal_indicator(&closure, g, k))
        .collect::<Result<Vec<_>>>()?;
    for (g, img) in states.states().iter().zip(&images) {
        report.check(ideals.contains(img), || {
            format!("image of {g} is not an ideal")
        });
    }
    let mut seen: Vec<_> = images.iter().collect();
    seen.sort();
    seen.dedup();
    report.check(seen.len() == images.len(), || {
        "g -> g~ is not injective".to_string()
    });
    for (a, g) in states.states().iter().enumerate() {
        for (b, h) in states.states().iter().enumerate() {
            report.check(g.leq(h) == images[b].leq(&images[a]), || {
                format!("{g} <= {h} is not reversed by the ideal map")
            });
        }
    }
    report.summary = format!(
        "{} states, {} checks, {} failures",
        states.len(),
        report.checked,
        report.failures.len()
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fig1, fig2, fig3};
    use crate::model::DEFAULT_ORACLE_LIMIT;

    #[test]
    fn suites_pass_on_bundled_inputs() {
        for dag in [fig2(), fig3()] {
            assert!(vanishing(&dag).unwrap().passed());
            assert!(groebner(&state_lattice(&dag)).passed());
            assert!(moebius(&dag, 3, 1).unwrap().passed());
            assert!(eq5(&dag, 3, 1).unwrap().passed());
            assert!(correspondence(&dag).unwrap().passed());
        }
        assert!(vanishing_ideals(&fig1()).passed());
        assert!(theorem31(&fig2(), 3, 1).unwrap().passed());
    }

    #[test]
    fn oracle_summary_text() {
        let report = oracle(&fig2(), 5, 7, DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(report.summary, "5/5 trials, 9 states each, exact match");
        assert!(oracle(&fig2(), 1, 7, 10).is_err());
    }

    #[test]
    fn nonvanishing_polynomial_fails() {
        let p = crate::algebra::parse_polynomial("p[00000] - p[11111]").unwrap();
        let report = polynomials_vanish(&fig2(), &[p], 2, 0).unwrap();
        assert_eq!(report.failures.len(), 2);
        assert!(report.first_failure().unwrap().starts_with("trial 0:"));
    }
}
