//! Monomial orders, multivariate division and the Buchberger S-pair criterion.
//!
//! Nothing here completes a basis. [`buchberger_check`] only verifies that
//! every S-polynomial of a given generating set reduces to zero, which is
//! exactly the condition for the set to be a Gröbner basis.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::algebra::hibi::BinomialGenerator;
use crate::algebra::{Monomial, Polynomial, Rational, VariableId};
use crate::poset::StateLattice;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// A monomial order over a ranked set of variables. Higher rank means a
/// larger variable; unranked variables are larger than every ranked one and
/// are compared by their canonical order.
#[derive(Clone, Debug)]
pub struct MonomialOrder {
    kind: OrderKind,
    rank: HashMap<VariableId, usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, ranked: impl IntoIterator<Item = VariableId>) -> Self {
        let rank = ranked
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        Self { kind, rank }
    }

    /// Degree reverse lexicographic order with `q_g` ranked by the lattice's
    /// linear extension: smaller lattice elements are smaller variables.
    pub fn hibi_default(lattice: &StateLattice) -> Self {
        Self::with_lattice(OrderKind::DegRevLex, lattice)
    }

    pub fn with_lattice(kind: OrderKind, lattice: &StateLattice) -> Self {
        Self::new(kind, lattice.states().iter().cloned().map(VariableId::Q))
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn cmp_vars(&self, a: &VariableId, b: &VariableId) -> Ordering {
        let ra = self.rank.get(a).copied().unwrap_or(usize::MAX);
        let rb = self.rank.get(b).copied().unwrap_or(usize::MAX);
        ra.cmp(&rb).then_with(|| a.cmp(b))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.kind == OrderKind::DegRevLex {
            let by_degree = a.degree().cmp(&b.degree());
            if by_degree != Ordering::Equal {
                return by_degree;
            }
        }
        let mut vars: Vec<&VariableId> = a
            .powers()
            .iter()
            .chain(b.powers())
            .map(|(v, _)| v)
            .collect();
        vars.sort_by(|x, y| self.cmp_vars(x, y));
        vars.dedup();
        match self.kind {
            // largest variable first; the larger exponent wins
            OrderKind::Lex => {
                for v in vars.iter().rev() {
                    let c = a.exponent(v).cmp(&b.exponent(v));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            }
            // smallest variable first; the larger exponent loses
            OrderKind::DegRevLex => {
                for v in &vars {
                    let c = a.exponent(v).cmp(&b.exponent(v));
                    if c != Ordering::Equal {
                        return c.reverse();
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn leading_term(&self, p: &Polynomial) -> Option<(Monomial, Rational)> {
        p.terms()
            .max_by(|x, y| self.cmp(x.0, y.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }
}

/// `lcm/LT(f) * f - lcm/LT(g) * g` with monic leading terms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (Some((mf, cf)), Some((mg, cg))) = (order.leading_term(f), order.leading_term(g)) else {
        return Polynomial::zero();
    };
    let lcm = mf.lcm(&mg);
    let a = f.mul_monomial(&lcm.checked_div(&mf).expect("lcm"), &cf.recip());
    let b = g.mul_monomial(&lcm.checked_div(&mg).expect("lcm"), &cg.recip());
    &a - &b
}

/// Division by a fixed list of polynomials with precomputed leading terms.
pub struct Reducer<'a> {
    basis: &'a [Polynomial],
    order: &'a MonomialOrder,
    leads: Vec<Option<(Monomial, Rational)>>,
    by_lead: HashMap<Monomial, usize>,
    lead_degrees: BTreeSet<u32>,
}

impl<'a> Reducer<'a> {
    pub fn new(basis: &'a [Polynomial], order: &'a MonomialOrder) -> Self {
        let leads: Vec<_> = basis.iter().map(|b| order.leading_term(b)).collect();
        let mut by_lead = HashMap::new();
        let mut lead_degrees = BTreeSet::new();
        for (i, lt) in leads.iter().enumerate() {
            if let Some((m, _)) = lt {
                by_lead.entry(m.clone()).or_insert(i);
                lead_degrees.insert(m.degree());
            }
        }
        Self {
            basis,
            order,
            leads,
            by_lead,
            lead_degrees,
        }
    }

    /// Lowest-index basis element whose leading monomial divides `m`.
    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let divisor_count: usize = m
            .powers()
            .iter()
            .map(|(_, e)| *e as usize + 1)
            .try_fold(1usize, |acc, x| acc.checked_mul(x))
            .unwrap_or(usize::MAX);
        if divisor_count <= self.basis.len() {
            let mut best: Option<usize> = None;
            for_each_divisor(m, &mut |d| {
                if self.lead_degrees.contains(&d.degree()) {
                    if let Some(&i) = self.by_lead.get(d) {
                        best = Some(best.map_or(i, |b| b.min(i)));
                    }
                }
            });
            best
        } else {
            self.leads
                .iter()
                .position(|lt| lt.as_ref().is_some_and(|(lm, _)| lm.divides(m)))
        }
    }

    /// Remainder of the standard division algorithm.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let mut p = f.clone();
        let mut remainder = Polynomial::zero();
        while let Some((m, c)) = self.order.leading_term(&p) {
            match self.find_divisor(&m) {
                Some(i) => {
                    let (lm, lc) = self.leads[i].as_ref().expect("nonzero divisor");
                    let quotient = m.checked_div(lm).expect("divides");
                    p -= self.basis[i].mul_monomial(&quotient, &(&c / lc));
                }
                None => {
                    let lead = Polynomial::monomial(m, c);
                    p -= &lead;
                    remainder += lead;
                }
            }
        }
        remainder
    }
}

fn for_each_divisor(m: &Monomial, f: &mut dyn FnMut(&Monomial)) {
    fn rec(
        powers: &[(VariableId, u32)],
        acc: &mut Vec<(VariableId, u32)>,
        f: &mut dyn FnMut(&Monomial),
    ) {
        match powers.split_first() {
            None => f(&Monomial::from_powers(acc.iter().cloned())),
            Some(((v, e), rest)) => {
                for k in 0..=*e {
                    if k > 0 {
                        acc.push((v.clone(), k));
                    }
                    rec(rest, acc, f);
                    if k > 0 {
                        acc.pop();
                    }
                }
            }
        }
    }
    rec(m.powers(), &mut Vec::new(), f);
}

/// Remainder of `f` on division by `basis`.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    Reducer::new(basis, order).reduce(f)
}

/// Checks that every S-polynomial of `polys` reduces to zero. With
/// `skip_coprime`, pairs whose leading monomials are coprime are counted as
/// passing without reduction (Buchberger's first criterion).
pub fn s_pair_check(polys: &[Polynomial], order: &MonomialOrder, skip_coprime: bool) -> Report {
    let reducer = Reducer::new(polys, order);
    let mut report = Report::new("groebner");
    let mut skipped = 0usize;
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let (Some((mi, _)), Some((mj, _))) = (&reducer.leads[i], &reducer.leads[j]) else {
                continue;
            };
            if skip_coprime && mi.is_coprime(mj) {
                skipped += 1;
                report.check(true, String::new);
                continue;
            }
            let s = s_polynomial(&polys[i], &polys[j], order);
            let r = reducer.reduce(&s);
            report.check(r.is_zero(), || {
                format!("S({}, {}) reduces to {r}", polys[i], polys[j])
            });
        }
    }
    report.summary = format!(
        "{} generators, {} S-pairs ({} by coprime criterion), {} irreducible",
        polys.len(),
        report.checked,
        skipped,
        report.failures.len()
    );
    report
}

/// [`s_pair_check`] on the binomials of a Hibi generating set.
pub fn buchberger_check(generators: &[BinomialGenerator], order: &MonomialOrder) -> Report {
    let polys: Vec<Polynomial> = generators.iter().map(|g| g.poly.clone()).collect();
    s_pair_check(&polys, order, true)
}

/// Leading monomial of each generator under `order`.
pub fn leading_monomials(generators: &[BinomialGenerator], order: &MonomialOrder) -> Vec<Monomial> {
    generators
        .iter()
        .filter_map(|g| order.leading_term(&g.poly).map(|(m, _)| m))
        .collect()
}
