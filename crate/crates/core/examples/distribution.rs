//! Exact joint distributions: symbolic, at a rational table, and by brute force.
//!
//! cargo run --example distribution

use maxlin::algebra::format_rational;
use maxlin::catalog::fig3;
use maxlin::model::{seeded_rng, DEFAULT_ORACLE_LIMIT};
use maxlin::{full_distribution, oracle_distribution, ParamTable};

fn main() -> maxlin::Result<()> {
    let dag = fig3();
    let (n, k) = (dag.n(), dag.k());

    println!(
        "symbolic distribution on {} states:",
        full_distribution(&dag, &ParamTable::symbolic(n, k))?.len()
    );
    for (g, p) in full_distribution(&dag, &ParamTable::symbolic(n, k))?.iter() {
        println!("  p[{g}] = {p}");
    }

    let theta = ParamTable::random(n, k, &mut seeded_rng(1));
    println!("\nrandom table {}", theta.to_json());
    let dist = full_distribution(&dag, &theta)?;
    let oracle = oracle_distribution(&dag, &theta, DEFAULT_ORACLE_LIMIT)?;
    for (g, p) in dist.iter() {
        println!(
            "  p[{g}] = {:>12}  oracle {:>12}",
            format_rational(p),
            format_rational(&oracle.prob(g))
        );
    }
    println!("total = {}", format_rational(&dist.total()));
    assert_eq!(dist, oracle);
    Ok(())
}
