//! A binary network and the conjunctive Bayesian network on its closure
//! describe the same distributions once the states and parameters are flipped.
//!
//! cargo run --example cbn_correspondence

use maxlin::catalog::{fig1, fig2};
use maxlin::model::cbn_to_dmlbn_state;
use maxlin::{cbn_distribution, full_distribution, verify, ParamTable};

fn main() -> maxlin::Result<()> {
    let covers: Vec<String> = fig1()
        .covers()
        .iter()
        .map(|(a, b)| format!("{}<{}", a + 1, b + 1))
        .collect();
    println!(
        "CBN on the five-element poset with covers {}:",
        covers.join(", ")
    );
    for (g, p) in cbn_distribution(&fig1(), &ParamTable::symbolic(5, 2))?.iter() {
        println!("  p[{g}] = {p}");
    }

    let dag = fig2();
    let closure = dag.transitive_closure();
    let theta = ParamTable::symbolic(dag.n(), 2);
    let rho = cbn_distribution(&closure, &theta)?;
    let psi = full_distribution(&dag, &theta.swap_binary()?)?;
    println!("\nideal g -> state phi(g), rho[g] and psi[phi(g)] with theta0 and theta1 swapped:");
    for (g, r) in rho.iter() {
        let phi = cbn_to_dmlbn_state(&closure, g)?;
        println!(
            "  {g} -> {phi}  {r}  |  {}",
            psi.get(&phi).expect("reachable")
        );
    }

    let report = verify::theorem31(&dag, 20, 0)?;
    println!("\n{}: {}", report.suite, report.summary);
    Ok(())
}
