//! Runs every verification suite over the bundled catalog of small DAGs.
//!
//! cargo run --release --example verify_catalog [-- K TRIALS SEED]

use maxlin::catalog::catalog;
use maxlin::model::DEFAULT_ORACLE_LIMIT;
use maxlin::{state_lattice, verify, Report};

fn main() -> maxlin::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let k = args.next().unwrap_or(2) as usize;
    let trials = args.next().unwrap_or(10) as usize;
    let seed = args.next().unwrap_or(0);

    let mut failed = 0;
    for (name, dag) in catalog(k) {
        let mut reports: Vec<Report> = vec![
            verify::vanishing(&dag)?,
            verify::oracle(&dag, trials, seed, DEFAULT_ORACLE_LIMIT)?,
            verify::moebius(&dag, trials, seed)?,
            verify::eq5(&dag, trials, seed)?,
            verify::correspondence(&dag)?,
            verify::groebner(&state_lattice(&dag)),
        ];
        if k == 2 {
            reports.push(verify::theorem31(&dag, trials, seed)?);
        }
        let bad: Vec<&Report> = reports.iter().filter(|r| !r.passed()).collect();
        let checks: usize = reports.iter().map(|r| r.checked).sum();
        println!(
            "{name:>20}: {} suites, {checks} checks, {} failing",
            reports.len(),
            bad.len()
        );
        for r in bad {
            println!("    {}: {}", r.suite, r.first_failure().unwrap_or_default());
            failed += 1;
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
