//! The zeta transform turns the distribution into products of cumulative
//! parameters alpha; the x parameters are ratios of consecutive alphas.
//!
//! cargo run --example moebius_coordinates

use maxlin::algebra::format_rational;
use maxlin::catalog::fig3;
use maxlin::model::{seeded_rng, state_lattice};
use maxlin::transforms::{alpha_params, alpha_product, theta_in_alpha_vars, x_params};
use maxlin::{full_distribution, moebius_inverse, zeta_transform, ParamTable};

fn main() -> maxlin::Result<()> {
    let dag = fig3();
    let (n, k) = (dag.n(), dag.k());
    let lattice = state_lattice(&dag);

    let symbolic = full_distribution(&dag, &ParamTable::symbolic(n, k))?;
    let q = zeta_transform(&symbolic, &lattice)?;
    let in_alpha = theta_in_alpha_vars(n, k);
    println!("q coordinates written in alpha variables:");
    for (g, value) in q.iter() {
        println!("  q[{g}] = {}", value.substitute(&in_alpha));
    }

    let theta = ParamTable::random(n, k, &mut seeded_rng(4));
    let alpha = alpha_params(&theta);
    let x = x_params(&alpha)?;
    println!(
        "\ntheta {}\nalpha {}\nx     {}",
        theta.to_json(),
        alpha.to_json(),
        x.to_json()
    );

    let dist = full_distribution(&dag, &theta)?;
    let q = zeta_transform(&dist, &lattice)?;
    for (g, value) in q.iter() {
        assert_eq!(value, &alpha_product(&alpha, g));
    }
    println!(
        "q[012] = {} = alpha0^(1) * alpha1^(2)",
        format_rational(q.get(&"012".parse()?).unwrap())
    );
    assert_eq!(moebius_inverse(&q, &lattice)?, dist);
    println!("Möbius inversion recovers all {} probabilities", dist.len());
    Ok(())
}
