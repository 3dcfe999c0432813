//! The binomial generators form a Gröbner basis: every S-polynomial reduces to
//! zero. A generating set that is not a basis fails the same check.
//!
//! cargo run --example groebner_check [-- K]

use maxlin::algebra::groebner::{s_pair_check, OrderKind};
use maxlin::algebra::{parse_polynomial, reduce, MonomialOrder, VariableId};
use maxlin::catalog::catalog;
use maxlin::{buchberger_check, hibi_generators, state_lattice};

fn main() -> maxlin::Result<()> {
    let k = std::env::args()
        .nth(1)
        .map_or(2, |a| a.parse().expect("K must be an integer"));
    for (name, dag) in catalog(k) {
        let lattice = state_lattice(&dag);
        let order = MonomialOrder::hibi_default(&lattice);
        let report = buchberger_check(&hibi_generators(&lattice), &order);
        println!("{name:>20}: {}", report.summary);
        assert!(report.passed());
    }

    // x^2 - y and xy - 1 under lex with x > y: the S-polynomial leaves y^2 - x
    let (x, y) = (VariableId::x(1, 0), VariableId::x(2, 0));
    let order = MonomialOrder::new(OrderKind::Lex, [y, x]);
    let basis = [
        parse_polynomial("x0^(1)^2 - x0^(2)")?,
        parse_polynomial("x0^(1)*x0^(2) - 1")?,
    ];
    let report = s_pair_check(&basis, &order, true);
    println!(
        "\nnot a basis: {}",
        report.first_failure().unwrap_or("passed")
    );
    let r = reduce(&parse_polynomial("x0^(1)^3")?, &basis, &order);
    println!("x^3 reduces to {r}");
    Ok(())
}
