//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are named by family and index (`p[01011]`, `q[00111]`, `t`,
//! `theta0^(3)`, `alpha1^(2)`, `x0^(1)`). A [`Polynomial`] is a map from
//! [`Monomial`] to a nonzero coefficient, so two equal polynomials always have
//! identical term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Peekable;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::{Chars, FromStr};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::poset::StateVector;

/// A polynomial variable. The derived order (family, then indices) is the
/// canonical variable order used for storage and printing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VariableId {
    P(StateVector),
    Q(StateVector),
    T,
    /// `theta_state^(vertex)`
    Theta {
        vertex: usize,
        state: usize,
    },
    Alpha {
        vertex: usize,
        index: usize,
    },
    X {
        vertex: usize,
        index: usize,
    },
}

impl VariableId {
    pub fn theta(vertex: usize, state: usize) -> Self {
        Self::Theta { vertex, state }
    }

    pub fn alpha(vertex: usize, index: usize) -> Self {
        Self::Alpha { vertex, index }
    }

    pub fn x(vertex: usize, index: usize) -> Self {
        Self::X { vertex, index }
    }

    pub fn family(&self) -> &'static str {
        match self {
            Self::P(_) => "p",
            Self::Q(_) => "q",
            Self::T => "t",
            Self::Theta { .. } => "theta",
            Self::Alpha { .. } => "alpha",
            Self::X { .. } => "x",
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::P(g) => write!(f, "p[{g}]"),
            Self::Q(g) => write!(f, "q[{g}]"),
            Self::T => write!(f, "t"),
            Self::Theta { vertex, state } => write!(f, "theta{state}^({vertex})"),
            Self::Alpha { vertex, index } => write!(f, "alpha{index}^({vertex})"),
            Self::X { vertex, index } => write!(f, "x{index}^({vertex})"),
        }
    }
}

impl FromStr for VariableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars().peekable();
        let v = parse_variable(&mut chars)?;
        skip_ws(&mut chars);
        match chars.next() {
            None => Ok(v),
            Some(c) => Err(parse_error(format!(
                "trailing {c:?} after variable in {s:?}"
            ))),
        }
    }
}

/// A product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(VariableId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: VariableId) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        let mut map: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Self(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn powers(&self) -> &[(VariableId, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &VariableId) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    fn merge(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            let (v, e) = match ord {
                std::cmp::Ordering::Less => {
                    i += 1;
                    (a[i - 1].0.clone(), f(a[i - 1].1, 0))
                }
                std::cmp::Ordering::Greater => {
                    j += 1;
                    (b[j - 1].0.clone(), f(0, b[j - 1].1))
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (a[i - 1].0.clone(), f(a[i - 1].1, b[j - 1].1))
                }
            };
            if e > 0 {
                out.push((v, e));
            }
        }
        Self(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, |x, y| x + y)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.merge(other, u32::max)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(self.merge(other, |x, y| x - y))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().all(|(v, _)| other.exponent(v) == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact multivariate polynomial in canonical form (no zero coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn var(v: VariableId) -> Self {
        Self::monomial(Monomial::var(v), Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> Vec<VariableId> {
        let mut vars: Vec<VariableId> = self
            .terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|(v, _)| v.clone()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(n, x)| (n.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Replaces variables by polynomials. `image` returns `Ok(None)` to keep a
    /// variable as it is.
    pub fn try_substitute<F>(&self, mut image: F) -> Result<Self>
    where
        F: FnMut(&VariableId) -> Result<Option<Polynomial>>,
    {
        let mut cache: BTreeMap<VariableId, Option<Polynomial>> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut prod = Self::constant(c.clone());
            for (v, e) in m.powers() {
                if !cache.contains_key(v) {
                    cache.insert(v.clone(), image(v)?);
                }
                match &cache[v] {
                    Some(p) => prod = &prod * &p.pow(*e),
                    None => kept.push((v.clone(), *e)),
                }
            }
            let kept = Monomial::from_powers(kept);
            out += prod.mul_monomial(&kept, &Rational::one());
        }
        Ok(out)
    }

    /// Substitutes from a map; variables not in the map are kept.
    pub fn substitute(&self, map: &BTreeMap<VariableId, Polynomial>) -> Self {
        self.try_substitute(|v| Ok(map.get(v).cloned()))
            .expect("infallible substitution")
    }

    /// Evaluates with every variable bound by `value`.
    pub fn evaluate<F>(&self, mut value: F) -> Result<Rational>
    where
        F: FnMut(&VariableId) -> Option<Rational>,
    {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.powers() {
                let x = value(v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                term *= num_traits::pow(x, *e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .display_order()
            .into_iter()
            .map(|(m, c)| JsonTerm {
                coeff: format_rational(c),
                vars: m
                    .powers()
                    .iter()
                    .map(|(v, e)| (v.to_string(), *e))
                    .collect(),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let terms: Vec<JsonTerm> = serde_json::from_value(value.clone())?;
        let mut p = Self::zero();
        for t in terms {
            let c = parse_rational(&t.coeff)?;
            let powers = t
                .vars
                .iter()
                .map(|(v, e)| Ok((v.parse::<VariableId>()?, *e)))
                .collect::<Result<Vec<_>>>()?;
            p.add_term(Monomial::from_powers(powers), c);
        }
        Ok(p)
    }

    // higher degree first, then descending canonical monomial order
    fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        terms
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: String,
    vars: BTreeMap<String, u32>,
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<VariableId> for Polynomial {
    fn from(v: VariableId) -> Self {
        Self::var(v)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl SubAssign for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        *self -= &rhs;
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

fn parse_error(message: String) -> Error {
    Error::Syntax { line: 1, message }
}

fn skip_ws(chars: &mut Peekable<Chars<'_>>) {
    while chars.peek().is_some_and(|c| c.is_whitespace()) {
        chars.next();
    }
}

fn parse_uint(chars: &mut Peekable<Chars<'_>>) -> Result<String> {
    skip_ws(chars);
    let mut digits = String::new();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            digits.push(c);
            chars.next();
        } else {
            break;
        }
    }
    if digits.is_empty() {
        return Err(parse_error(format!(
            "expected a number, found {:?}",
            chars.peek()
        )));
    }
    Ok(digits)
}

fn parse_small(chars: &mut Peekable<Chars<'_>>) -> Result<usize> {
    let d = parse_uint(chars)?;
    d.parse().map_err(|e| parse_error(format!("{d}: {e}")))
}

fn expect(chars: &mut Peekable<Chars<'_>>, want: char) -> Result<()> {
    skip_ws(chars);
    match chars.next() {
        Some(c) if c == want => Ok(()),
        other => Err(parse_error(format!("expected {want:?}, found {other:?}"))),
    }
}

fn parse_variable(chars: &mut Peekable<Chars<'_>>) -> Result<VariableId> {
    skip_ws(chars);
    let mut name = String::new();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_alphabetic() {
            name.push(c);
            chars.next();
        } else {
            break;
        }
    }
    match name.as_str() {
        "p" | "q" => {
            expect(chars, '[')?;
            let mut inner = String::new();
            for c in chars.by_ref() {
                if c == ']' {
                    let g: StateVector = inner.parse()?;
                    return Ok(if name == "p" {
                        VariableId::P(g)
                    } else {
                        VariableId::Q(g)
                    });
                }
                inner.push(c);
            }
            Err(parse_error(format!("unterminated {name}[")))
        }
        "t" => Ok(VariableId::T),
        "theta" | "alpha" | "x" => {
            let lower = parse_small(chars)?;
            expect(chars, '^')?;
            expect(chars, '(')?;
            let vertex = parse_small(chars)?;
            expect(chars, ')')?;
            Ok(match name.as_str() {
                "theta" => VariableId::theta(vertex, lower),
                "alpha" => VariableId::alpha(vertex, lower),
                _ => VariableId::x(vertex, lower),
            })
        }
        _ => Err(parse_error(format!("unknown variable name {name:?}"))),
    }
}

fn parse_factor(chars: &mut Peekable<Chars<'_>>) -> Result<Polynomial> {
    skip_ws(chars);
    let base = match chars.peek() {
        Some(c) if c.is_ascii_digit() => {
            let num = parse_uint(chars)?;
            skip_ws(chars);
            let text = if chars.peek() == Some(&'/') {
                chars.next();
                format!("{num}/{}", parse_uint(chars)?)
            } else {
                num
            };
            Polynomial::constant(parse_rational(&text)?)
        }
        Some('(') => {
            chars.next();
            let inner = parse_sum(chars)?;
            expect(chars, ')')?;
            inner
        }
        _ => Polynomial::var(parse_variable(chars)?),
    };
    skip_ws(chars);
    // the `^(` of an indexed name was consumed by parse_variable
    if chars.peek() == Some(&'^') {
        chars.next();
        let e = parse_small(chars)?;
        return Ok(base.pow(e as u32));
    }
    Ok(base)
}

fn parse_term(chars: &mut Peekable<Chars<'_>>) -> Result<Polynomial> {
    let mut acc = parse_factor(chars)?;
    loop {
        skip_ws(chars);
        if chars.peek() == Some(&'*') {
            chars.next();
            acc = &acc * &parse_factor(chars)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_sum(chars: &mut Peekable<Chars<'_>>) -> Result<Polynomial> {
    let mut acc = Polynomial::zero();
    let mut first = true;
    loop {
        skip_ws(chars);
        let sign = match chars.peek() {
            Some('+') => {
                chars.next();
                1
            }
            Some('-') => {
                chars.next();
                -1
            }
            _ if first => 1,
            _ => return Ok(acc),
        };
        let term = parse_term(chars)?;
        if sign < 0 {
            acc -= term;
        } else {
            acc += term;
        }
        first = false;
    }
}

/// Parses the polynomial text grammar, e.g.
/// `q[01111]*q[10111] - q[00111]*q[11111]` or `2/3*theta0^(1)^2 + t - 1`.
pub fn parse_polynomial(s: &str) -> Result<Polynomial> {
    let mut chars = s.chars().peekable();
    let p = parse_sum(&mut chars)?;
    skip_ws(&mut chars);
    match chars.next() {
        None => Ok(p),
        Some(c) => Err(parse_error(format!("unexpected {c:?} in {s:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn variable_names_roundtrip() {
        for name in [
            "p[01011]",
            "q[(10,0)]",
            "t",
            "theta0^(3)",
            "alpha1^(2)",
            "x0^(12)",
        ] {
            let v: VariableId = name.parse().unwrap();
            assert_eq!(v.to_string(), name);
        }
        assert_eq!(
            "p[0010 1]".parse::<VariableId>().unwrap().to_string(),
            "p[00101]"
        );
        assert!("y".parse::<VariableId>().is_err());
        assert!("theta0".parse::<VariableId>().is_err());
    }

    #[test]
    fn variable_order_is_family_first() {
        let vars: Vec<VariableId> = [
            "x0^(1)",
            "t",
            "q[01]",
            "theta1^(1)",
            "p[11]",
            "theta0^(2)",
            "alpha0^(1)",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        let mut sorted = vars.clone();
        sorted.sort();
        let names: Vec<String> = sorted.iter().map(ToString::to_string).collect();
        assert_eq!(
            names,
            [
                "p[11]",
                "q[01]",
                "t",
                "theta1^(1)",
                "theta0^(2)",
                "alpha0^(1)",
                "x0^(1)"
            ]
        );
    }

    #[test]
    fn arithmetic_and_display() {
        let a = poly("q[01111]*q[10111] - q[00111]*q[11111]");
        assert_eq!(a.to_string(), "q[01111]*q[10111] - q[00111]*q[11111]");
        assert!((&a - &a).is_zero());
        let b = poly("(t + 1)^2");
        assert_eq!(b, poly("t^2 + 2*t + 1"));
        assert_eq!(poly("1/2*x0^(1) - 3").to_string(), "1/2*x0^(1) - 3");
        assert_eq!(poly("-theta0^(1)").to_string(), "-theta0^(1)");
        assert_eq!(poly("0").to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        assert!("q[01".parse::<Polynomial>().is_err());
        assert!("q[01] +".parse::<Polynomial>().is_err());
        assert!("q[01] q[10]".parse::<Polynomial>().is_err());
        assert!("1/0".parse::<Polynomial>().is_err());
    }

    #[test]
    fn monomial_ops() {
        let m = |s: &str| poly(s).terms().next().unwrap().0.clone();
        let a = m("t*x0^(1)^2");
        let b = m("x0^(1)*x1^(1)");
        assert_eq!(a.lcm(&b), m("t*x0^(1)^2*x1^(1)"));
        assert!(m("x0^(1)").divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.checked_div(&m("x0^(1)")), Some(m("t*x0^(1)")));
        assert!(m("t").is_coprime(&b));
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn substitution_and_evaluation() {
        let p = poly("q[01]*q[10] - q[00]*q[11]");
        let image = |v: &VariableId| match v {
            VariableId::Q(g) => {
                let mut m = Polynomial::var(VariableId::T);
                for (i, &b) in g.values().iter().enumerate() {
                    if b == 0 {
                        m = &m * &Polynomial::var(VariableId::x(i + 1, 0));
                    }
                }
                Ok(Some(m))
            }
            _ => Ok(None),
        };
        assert!(p.try_substitute(image).unwrap().is_zero());

        let r = poly("2*t + x0^(1)^2").evaluate(|v| match v {
            VariableId::T => Some(Rational::new(1.into(), 2.into())),
            _ => Some(Rational::from_integer(3.into())),
        });
        assert_eq!(r.unwrap(), Rational::from_integer(10.into()));
        assert!(matches!(
            poly("t").evaluate(|_| None),
            Err(Error::UnboundVariable(_))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let p = poly("q[01111]*q[10111] - 3/4*q[00111]^2 + 1");
        let j = p.to_json();
        assert_eq!(j[0]["vars"]["q[01111]"], 1);
        assert_eq!(Polynomial::from_json(&j).unwrap(), p);
    }
}
