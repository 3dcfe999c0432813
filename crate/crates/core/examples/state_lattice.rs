//! Enumerate the states of a network and their order-ideal encoding.
//!
//! cargo run --example state_lattice [-- DAG_FILE [K]]

use maxlin::catalog::fig2;
use maxlin::poset::{chain_product, ideal_lattice, state_to_ideal};
use maxlin::{parse_dag, state_lattice};

fn main() -> maxlin::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut dag = match args.next() {
        Some(path) => parse_dag(&std::fs::read_to_string(path)?)?,
        None => fig2(),
    };
    if let Some(k) = args.next() {
        dag = dag.with_k(k.parse().expect("K must be an integer"))?;
    }
    println!(
        "n = {}, k = {}, edges {:?}",
        dag.n(),
        dag.k(),
        dag.edges().collect::<Vec<_>>()
    );
    println!("topological order {:?}", dag.topological_order());

    let closure = dag.transitive_closure();
    let lattice = state_lattice(&dag);
    println!(
        "\n{} states; each with its ideal of D^tr x chain(k-1):",
        lattice.len()
    );
    for g in lattice.states() {
        let ideal: Vec<String> = state_to_ideal(&closure, g, dag.k())?
            .into_iter()
            .map(|(i, r)| format!("({i},{r})"))
            .collect();
        println!("  {g}  {{{}}}", ideal.join(", "));
    }

    let ideals = ideal_lattice(&closure);
    println!("\n{} order ideals of D^tr:", ideals.len());
    for ideal in ideals.states() {
        println!("  {ideal}");
    }
    let product = ideal_lattice(&chain_product(&closure, dag.k() - 1));
    println!(
        "\n|G(D,k)| = {}, |J(D^tr x chain(k-1))| = {}",
        lattice.len(),
        product.len()
    );
    Ok(())
}
