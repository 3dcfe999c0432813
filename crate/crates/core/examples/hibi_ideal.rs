//! Binomial generators of the model's ideal in q coordinates, their images
//! under the monomial parameterization, and vanishing in p coordinates.
//!
//! cargo run --example hibi_ideal

use maxlin::algebra::{hibi, parse_polynomial};
use maxlin::catalog::{fig2, fig3, FIG2_P_GENERATORS};
use maxlin::{hibi_generators, monomial_map, state_lattice, verify};
use num_traits::Zero;

fn main() -> maxlin::Result<()> {
    let dag = fig2();
    let lattice = state_lattice(&dag);
    let map = monomial_map(&dag.transitive_closure(), &lattice)?;
    println!("generators and the images of their two terms:");
    for gen in hibi_generators(&lattice) {
        let image = |s| map.image(s).expect("lattice state").to_string();
        println!(
            "  {gen}\n    q[{}]q[{}] -> {} * {}",
            gen.g,
            gen.h,
            image(&gen.g),
            image(&gen.h)
        );
        assert!(hibi::substitute(&gen.poly, &map)?.is_zero());
    }

    let small = fig3();
    let map = monomial_map(&small.transitive_closure(), &state_lattice(&small))?;
    println!("\nk = 3: q[012] -> {}", map.image(&"012".parse()?).unwrap());
    println!("{}", verify::vanishing(&small)?.summary);

    let polys = FIG2_P_GENERATORS
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(parse_polynomial)
        .collect::<maxlin::Result<Vec<_>>>()?;
    let report = verify::polynomials_vanish(&dag, &polys, 25, 0)?;
    println!("\np-coordinate polynomials: {}", report.summary);
    Ok(())
}
