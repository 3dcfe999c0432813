//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use maxlin::algebra::{hibi, parse_polynomial, Polynomial, VariableId};
use maxlin::catalog::{catalog, fig1, fig2, fig3, random_dag, FIG2_P_GENERATORS};
use maxlin::cli::{run, Command, CommandConfig, Format};
use maxlin::model::{
    cbn_distribution, cbn_to_dmlbn_state, full_distribution, seeded_rng, state_lattice, ParamTable,
    DEFAULT_ORACLE_LIMIT,
};
use maxlin::poset::{chain_product, ideal_lattice, StateLattice, StateVector};
use maxlin::transforms::{theta_in_alpha_vars, zeta_transform};
use maxlin::verify;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn s(x: &str) -> StateVector {
    x.parse().unwrap()
}

fn poly(x: &str) -> Polynomial {
    parse_polynomial(x).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_ok(report: maxlin::Report) -> Result<maxlin::Report, String> {
    match report.first_failure() {
        None => Ok(report),
        Some(f) => Err(format!("{}: {f}", report.suite)),
    }
}

fn cli_lines(
    command: Command,
    configure: impl FnOnce(&mut CommandConfig),
) -> Result<Vec<String>, String> {
    let mut config = CommandConfig::new(command);
    config.format = Format::Text;
    configure(&mut config);
    let out = run(&config);
    ensure(out.status == 0, || {
        format!("exit status {}: {}", out.status, out.output)
    })?;
    Ok(out.output.lines().map(str::to_string).collect())
}

fn monomial_table(rows: &[(&str, &str)]) -> Vec<(StateVector, Polynomial)> {
    rows.iter().map(|(g, m)| (s(g), poly(m))).collect()
}

fn criterion_1() -> Outcome {
    let states = cli_lines(Command::Lattice, |c| c.dag = Some(data("fig2.dag")))?;
    let expected = [
        "00000", "00001", "00011", "00101", "00111", "01011", "01111", "10111", "11111",
    ];
    ensure(states == expected, || format!("lattice emitted {states:?}"))?;
    let ideals = cli_lines(Command::Ideals, |c| c.dag = Some(data("fig2.dag")))?;
    let got: BTreeSet<&str> = ideals.iter().map(String::as_str).collect();
    let expected: BTreeSet<&str> = [
        "00000", "10000", "01000", "10100", "11000", "11100", "11010", "11110", "11111",
    ]
    .into();
    ensure(ideals.len() == 9 && got == expected, || {
        format!("ideals emitted {ideals:?}")
    })?;
    Ok("9 states and 9 ideals".into())
}

fn criterion_2() -> Outcome {
    let expected = monomial_table(&[
        (
            "00000",
            "theta0^(1)*theta0^(2)*theta0^(3)*theta0^(4)*theta0^(5)",
        ),
        (
            "00001",
            "theta0^(1)*theta0^(2)*theta0^(3)*theta0^(4)*theta1^(5)",
        ),
        ("00011", "theta0^(1)*theta0^(2)*theta0^(3)*theta1^(4)"),
        ("00101", "theta0^(1)*theta0^(2)*theta1^(3)*theta0^(4)"),
        ("00111", "theta0^(1)*theta0^(2)*theta1^(3)*theta1^(4)"),
        ("01011", "theta0^(1)*theta1^(2)*theta0^(3)"),
        ("01111", "theta0^(1)*theta1^(2)*theta1^(3)"),
        ("10111", "theta1^(1)*theta0^(2)"),
        ("11111", "theta1^(1)*theta1^(2)"),
    ]);
    let dist =
        full_distribution(&fig2(), &ParamTable::symbolic(5, 2)).map_err(|e| e.to_string())?;
    ensure(dist.len() == 9, || format!("{} states", dist.len()))?;
    for (g, m) in &expected {
        ensure(dist.get(g) == Some(m), || {
            format!("p[{g}] = {:?}, expected {m}", dist.get(g))
        })?;
    }
    Ok("9 monomials match".into())
}

fn criterion_3() -> Outcome {
    let expected = monomial_table(&[
        ("00000", "theta0^(1)*theta0^(2)"),
        ("10000", "theta1^(1)*theta0^(2)"),
        ("01000", "theta0^(1)*theta1^(2)"),
        ("11000", "theta1^(1)*theta1^(2)*theta0^(3)"),
        (
            "11100",
            "theta1^(1)*theta1^(2)*theta1^(3)*theta0^(4)*theta0^(5)",
        ),
        (
            "11110",
            "theta1^(1)*theta1^(2)*theta1^(3)*theta1^(4)*theta0^(5)",
        ),
        (
            "11101",
            "theta1^(1)*theta1^(2)*theta1^(3)*theta0^(4)*theta1^(5)",
        ),
        (
            "11111",
            "theta1^(1)*theta1^(2)*theta1^(3)*theta1^(4)*theta1^(5)",
        ),
    ]);
    let dist = cbn_distribution(&fig1(), &ParamTable::symbolic(5, 2)).map_err(|e| e.to_string())?;
    ensure(dist.len() == 8, || format!("{} states", dist.len()))?;
    for (g, m) in &expected {
        ensure(dist.get(g) == Some(m), || {
            format!("p[{g}] = {:?}, expected {m}", dist.get(g))
        })?;
    }
    Ok("8 monomials match".into())
}

fn criterion_4() -> Outcome {
    let dag = fig2();
    let report = report_ok(verify::theorem31(&dag, 100, 0).map_err(|e| e.to_string())?)?;
    let closure = dag.transitive_closure();
    let phi = cbn_to_dmlbn_state(&closure, &s("10100")).map_err(|e| e.to_string())?;
    ensure(phi == s("01011"), || format!("phi(10100) = {phi}"))?;
    let symbolic = ParamTable::symbolic(5, 2);
    let rho = cbn_distribution(&closure, &symbolic).map_err(|e| e.to_string())?;
    let psi = full_distribution(&dag, &symbolic).map_err(|e| e.to_string())?;
    let want_rho = poly("theta1^(1)*theta0^(2)*theta1^(3)");
    let want_psi = poly("theta0^(1)*theta1^(2)*theta0^(3)");
    ensure(rho.get(&s("10100")) == Some(&want_rho), || {
        format!("rho[10100] = {:?}", rho.get(&s("10100")))
    })?;
    ensure(psi.get(&s("01011")) == Some(&want_psi), || {
        format!("psi[01011] = {:?}", psi.get(&s("01011")))
    })?;
    Ok(format!("{}; 10100 -> 01011 matches", report.summary))
}

fn criterion_5() -> Outcome {
    let mut summaries = Vec::new();
    for dag in [fig2(), fig3()] {
        let report = report_ok(verify::eq5(&dag, 100, 0).map_err(|e| e.to_string())?)?;
        summaries.push(report.summary);
    }
    let dag = fig3();
    let lattice = state_lattice(&dag);
    let dist = full_distribution(&dag, &ParamTable::symbolic(3, 3)).map_err(|e| e.to_string())?;
    let q = zeta_transform(&dist, &lattice).map_err(|e| e.to_string())?;
    let q012 = q
        .get(&s("012"))
        .ok_or("q[012] missing")?
        .substitute(&theta_in_alpha_vars(3, 3));
    ensure(q012 == poly("alpha0^(1)*alpha1^(2)"), || {
        format!("q[012] = {q012}")
    })?;
    Ok(format!(
        "{}; q[012] = alpha0^(1)*alpha1^(2)",
        summaries.join("; ")
    ))
}

// canonical text of each polynomial
fn generator_set<S: AsRef<str>>(lines: &[S]) -> BTreeSet<String> {
    lines.iter().map(|l| poly(l.as_ref()).to_string()).collect()
}

fn brute_force_incomparable(lattice: &StateLattice) -> usize {
    let states = lattice.states();
    let mut count = 0;
    for g in states {
        for h in states {
            if !g.leq(h) && !h.leq(g) {
                count += 1;
            }
        }
    }
    count / 2
}

fn criterion_6() -> Outcome {
    let lines = cli_lines(Command::Generators, |c| c.dag = Some(data("fig2.dag")))?;
    let expected = generator_set(&[
        "q[01111]*q[10111] - q[00111]*q[11111]",
        "q[01011]*q[10111] - q[00011]*q[11111]",
        "q[00111]*q[01011] - q[00011]*q[01111]",
        "q[00101]*q[01011] - q[00001]*q[01111]",
        "q[00011]*q[00101] - q[00001]*q[00111]",
    ]);
    ensure(
        lines.len() == 5 && generator_set(&lines) == expected,
        || format!("fig2 generators {lines:?}"),
    )?;

    let lines = cli_lines(Command::Generators, |c| c.poset = Some(data("fig1.poset")))?;
    let expected = generator_set(&[
        "q[10000]*q[01000] - q[00000]*q[11000]",
        "q[11110]*q[11101] - q[11100]*q[11111]",
    ]);
    ensure(
        lines.len() == 2 && generator_set(&lines) == expected,
        || format!("fig1 generators {lines:?}"),
    )?;

    let mut rng = seeded_rng(0);
    for trial in 0..50 {
        let n = 1 + (trial % 5);
        let k = 2 + (trial / 5) % 2;
        let dag = random_dag(n, k, &mut rng);
        let lattice = state_lattice(&dag);
        let gens = hibi::hibi_generators(&lattice);
        let pairs = brute_force_incomparable(&lattice);
        ensure(gens.len() == pairs, || {
            format!(
                "{dag}: {} generators, {pairs} incomparable pairs",
                gens.len()
            )
        })?;
    }
    Ok("5 + 2 binomials match; 50 random DAGs counted".into())
}

fn criterion_7() -> Outcome {
    let mut generators = 0;
    let mut lattices = 0;
    for k in 2..=4 {
        for (name, dag) in catalog(k) {
            let report = report_ok(verify::vanishing(&dag).map_err(|e| e.to_string())?)
                .map_err(|e| format!("{name}, k = {k}: {e}"))?;
            generators += report.checked;
            lattices += 1;
        }
    }
    let dag = fig3();
    let lattice = state_lattice(&dag);
    let map = hibi::monomial_map(&dag.transitive_closure(), &lattice).map_err(|e| e.to_string())?;
    let image = hibi::substitute(&Polynomial::var(VariableId::Q(s("012"))), &map)
        .map_err(|e| e.to_string())?;
    ensure(image == poly("t*x0^(1)*x1^(1)*x0^(2)"), || {
        format!("psi(q[012]) = {image}")
    })?;
    Ok(format!(
        "{generators} generators on {lattices} lattices map to 0; psi(q[012]) = {image}"
    ))
}

fn criterion_8() -> Outcome {
    let polys: Vec<Polynomial> = FIG2_P_GENERATORS
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(poly)
        .collect();
    ensure(polys.len() == 6, || {
        format!("{} polynomials in the data file", polys.len())
    })?;
    let report =
        report_ok(verify::polynomials_vanish(&fig2(), &polys, 100, 0).map_err(|e| e.to_string())?)?;
    Ok(report.summary)
}

fn criterion_9() -> Outcome {
    let mut runs = 0;
    for k in 2..=3 {
        for (name, dag) in catalog(k) {
            report_ok(
                verify::oracle(&dag, 50, 0, DEFAULT_ORACLE_LIMIT).map_err(|e| e.to_string())?,
            )
            .map_err(|e| format!("{name}, k = {k}: {e}"))?;
            runs += 1;
        }
    }
    Ok(format!(
        "{runs} DAG/k combinations, 50 trials each, exact match"
    ))
}

fn criterion_10() -> Outcome {
    let mut checks = 0;
    for dag in [fig2(), fig3()] {
        checks += report_ok(verify::moebius(&dag, 100, 0).map_err(|e| e.to_string())?)?.checked;
    }
    Ok(format!("{checks} roundtrip checks exact"))
}

fn criterion_11() -> Outcome {
    let mut lattices = 0;
    for k in 2..=4 {
        for (name, dag) in catalog(k) {
            report_ok(verify::correspondence(&dag).map_err(|e| e.to_string())?)
                .map_err(|e| format!("{name}, k = {k}: {e}"))?;
            lattices += 1;
        }
    }
    let dag = fig3();
    let g = state_lattice(&dag).len();
    let j = ideal_lattice(&chain_product(&dag.transitive_closure(), 2)).len();
    ensure(g == 14 && j == 14, || format!("fig3: |G| = {g}, |J| = {j}"))?;
    Ok(format!(
        "{lattices} lattices in bijection; fig3 counts 14 = 14"
    ))
}

fn criterion_12() -> Outcome {
    let mut pairs = 0;
    let mut lattices = 0;
    for k in 2..=3 {
        for (name, dag) in catalog(k) {
            let report = report_ok(verify::groebner(&state_lattice(&dag)))
                .map_err(|e| format!("{name}, k = {k}: {e}"))?;
            pairs += report.checked;
            lattices += 1;
        }
    }
    report_ok(verify::groebner(&ideal_lattice(&fig1())))?;
    Ok(format!(
        "{lattices} catalog lattices and J(fig1), {pairs} S-pairs reduce to 0"
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("fig2 lattice and ideals", criterion_1),
        ("fig2 symbolic distribution", criterion_2),
        ("fig1 CBN distribution", criterion_3),
        ("CBN correspondence", criterion_4),
        ("q as a product of alpha", criterion_5),
        ("Hibi generators", criterion_6),
        ("monomial map vanishing", criterion_7),
        ("p-coordinate generators vanish", criterion_8),
        ("oracle equivalence", criterion_9),
        ("transform roundtrips", criterion_10),
        ("lattice correspondence", criterion_11),
        ("Groebner property", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {:>2} ({name}): {detail} [{secs:.2}s]",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "FAIL criterion {:>2} ({name}): {detail} [{secs:.2}s]",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
