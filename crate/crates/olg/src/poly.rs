//! Sparse polynomials over `Q(ζ)`, diagonal group elements, exterior words and
//! elements of the Koszul algebra `A[e_1..e_N][G]`.
//!
//! Variables are indexed from 0 internally; text forms use `x1..xN`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclo::{fmt_rational, parse_rational, quantum_bracket, root_of_unity, Cyclotomic, Phase, Rational};
use crate::error::{Error, Result};

/// Exponent vector `x_1^{γ_1}⋯x_N^{γ_N}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(o.0.iter()) {
            e.push(a.checked_sub(*b)?);
        }
        Some(Monomial(e))
    }

    pub fn weighted_degree(&self, q: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(q.iter())
            .filter(|(e, _)| **e > 0)
            .map(|(e, w)| w * BigInt::from(*e))
            .sum()
    }

    /// True when every variable with positive exponent lies in `vars`.
    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e == 0 || vars.contains(&i))
    }

    /// Graded reverse-lexicographic comparison under weights `q`: weighted
    /// degree first, then the monomial with the smaller exponent in the last
    /// differing variable is larger.
    pub fn cmp_weighted(&self, o: &Monomial, q: &[Rational]) -> std::cmp::Ordering {
        self.weighted_degree(q).cmp(&o.weighted_degree(q)).then_with(|| {
            for i in (0..self.0.len()).rev() {
                if self.0[i] != o.0[i] {
                    return o.0[i].cmp(&self.0[i]);
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A polynomial in a fixed number of variables with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Polynomial {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Cyclotomic) -> Polynomial {
        Polynomial::term(Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Polynomial {
        Polynomial::constant(n, Cyclotomic::one())
    }

    pub fn term(m: Monomial, c: Cyclotomic) -> Polynomial {
        let n = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn var(n: usize, i: usize) -> Polynomial {
        Polynomial::term(Monomial::var(n, i), Cyclotomic::one())
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Cyclotomic)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyclotomic {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Cyclotomic) {
        assert_eq!(m.nvars(), self.n, "monomial dimension mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Multiplies every monomial's coefficient by `f(monomial)`.
    pub fn scale_monomials(&self, f: impl Fn(&Monomial) -> Cyclotomic) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &(c * &f(m)));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Cyclotomic) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (k, x) in &self.terms {
            out.add_term(k.mul(m), &(x * c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sets the listed variables to zero.
    pub fn substitute_zero(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.0[v] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Classical partial derivative `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut k = m.clone();
                k.0[i] -= 1;
                out.add_term(k, &(c * &Cyclotomic::from_int(e as i64)));
            }
        }
        out
    }

    /// The same polynomial viewed in `n` variables through `map[i] = new index of x_i`.
    pub fn relabel(&self, n: usize, map: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(n);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    pub fn checked_add(&self, o: &Polynomial) -> Result<Polynomial> {
        same_dim(self, o)?;
        Ok(self + o)
    }

    pub fn checked_mul(&self, o: &Polynomial) -> Result<Polynomial> {
        same_dim(self, o)?;
        Ok(self * o)
    }

    /// Text form using `x1..xN`; cyclotomic coefficients are parenthesised.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = match c.as_rational() {
                Some(r) => {
                    let neg = r < Rational::zero();
                    let a = if neg { -r } else { r };
                    let coef = fmt_rational(&a);
                    let body = if m.is_one() {
                        coef
                    } else if coef == "1" {
                        m.to_string()
                    } else {
                        format!("{coef}*{m}")
                    };
                    (neg, body)
                }
                None => {
                    let body = if m.is_one() { format!("({c})") } else { format!("({c})*{m}") };
                    (false, body)
                }
            };
            match (idx, neg) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }
}

fn same_dim(a: &Polynomial, b: &Polynomial) -> Result<()> {
    if a.n != b.n {
        return Err(Error::InvalidArgument(format!("polynomials in {} and {} variables", a.n, b.n)));
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.n, o.n, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.n, o.n, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.n, o.n, "polynomial dimension mismatch");
        let mut out = Polynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! owned_polyop {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, o: Polynomial) -> Polynomial {
                (&self).$method(&o)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, o: &Polynomial) -> Polynomial {
                (&self).$method(o)
            }
        }
    };
}
owned_polyop!(Add, add);
owned_polyop!(Sub, sub);
owned_polyop!(Mul, mul);

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: Cyclotomic,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<TermRepr> =
            self.terms.iter().map(|(m, c)| TermRepr { exp: m.0.clone(), coeff: c.clone() }).collect();
        let mut st = s.serialize_struct("Polynomial", 3)?;
        st.serialize_field("nvars", &self.n)?;
        st.serialize_field("text", &self.pretty())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// A diagonal symmetry `(e^{2πi q_1}, …, e^{2πi q_N})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    phases: Vec<Phase>,
}

impl GroupElement {
    pub fn new(phases: Vec<Phase>) -> GroupElement {
        GroupElement { phases }
    }

    pub fn from_fracs(fracs: &[(i64, i64)]) -> GroupElement {
        GroupElement::new(fracs.iter().map(|&(k, m)| Phase::from_frac(k, m)).collect())
    }

    pub fn identity(n: usize) -> GroupElement {
        GroupElement { phases: vec![Phase::zero(); n] }
    }

    /// Parses `1/3,2/3,0`.
    pub fn parse(s: &str) -> Result<GroupElement> {
        let phases = s
            .split(',')
            .map(|t| parse_rational(t).map(Phase::new))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElement { phases })
    }

    pub fn nvars(&self) -> usize {
        self.phases.len()
    }

    pub fn phases(&self) -> &[Phase] {
        &self.phases
    }

    pub fn phase(&self, i: usize) -> &Phase {
        &self.phases[i]
    }

    pub fn is_identity(&self) -> bool {
        self.phases.iter().all(Phase::is_zero)
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        assert_eq!(self.nvars(), o.nvars(), "group element dimension mismatch");
        GroupElement { phases: self.phases.iter().zip(o.phases.iter()).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn inv(&self) -> GroupElement {
        GroupElement { phases: self.phases.iter().map(Phase::neg).collect() }
    }

    pub fn pow(&self, k: i64) -> GroupElement {
        GroupElement { phases: self.phases.iter().map(|p| p.scale(k)).collect() }
    }

    /// Order: lcm of the phase denominators.
    pub fn order(&self) -> u64 {
        self.phases.iter().fold(1u64, |acc, p| num_integer::lcm(acc, p.order()))
    }

    /// `λ_i` as a root of unity.
    pub fn lambda(&self, i: usize) -> Cyclotomic {
        root_of_unity(&self.phases[i])
    }

    /// `g^{(i)}`: the element acting like `g` on `x_i` and trivially elsewhere.
    pub fn component(&self, i: usize) -> GroupElement {
        self.range(i, i + 1)
    }

    /// `g^{(i)} g^{(i+1)} ⋯ g^{(j-1)}` (0-based, half open).
    pub fn range(&self, i: usize, j: usize) -> GroupElement {
        GroupElement {
            phases: self
                .phases
                .iter()
                .enumerate()
                .map(|(k, p)| if k >= i && k < j { p.clone() } else { Phase::zero() })
                .collect(),
        }
    }

    /// Restriction to a block of variables, in block order.
    pub fn restrict(&self, block: &[usize]) -> GroupElement {
        GroupElement { phases: block.iter().map(|&i| self.phases[i].clone()).collect() }
    }

    /// Moving index `I_g = {i : λ_i ≠ 1}`.
    pub fn moving(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| !self.phases[i].is_zero()).collect()
    }

    pub fn fixed(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.phases[i].is_zero()).collect()
    }

    /// Scalar by which `g` acts on a monomial.
    pub fn monomial_scalar(&self, m: &Monomial) -> Cyclotomic {
        let mut total = Phase::zero();
        for (p, &e) in self.phases.iter().zip(m.0.iter()) {
            if e > 0 && !p.is_zero() {
                total = total.add(&p.scale(e as i64));
            }
        }
        root_of_unity(&total)
    }

    /// `χ(g) = Π λ_i`.
    pub fn chi(&self) -> Cyclotomic {
        let total = self.phases.iter().fold(Phase::zero(), |acc, p| acc.add(p));
        root_of_unity(&total)
    }

    pub fn text(&self) -> String {
        self.phases.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.text())
    }
}

/// `^g f`: each monomial `x^γ` is scaled by `Π λ_i^{γ_i}`.
pub fn group_act(g: &GroupElement, f: &Polynomial) -> Result<Polynomial> {
    if g.nvars() != f.nvars() {
        return Err(Error::InvalidArgument(format!(
            "group element in {} variables acting on a polynomial in {}",
            g.nvars(),
            f.nvars()
        )));
    }
    if g.is_identity() {
        return Ok(f.clone());
    }
    Ok(f.scale_monomials(|m| g.monomial_scalar(m)))
}

/// Quantum derivative `∂^g_{x_i}`: `x^γ ↦ [γ_i]_{λ_i} x^γ / x_i`.
pub fn quantum_partial(g: &GroupElement, i: usize, f: &Polynomial) -> Polynomial {
    let lambda = g.lambda(i);
    let mut out = Polynomial::zero(f.nvars());
    for (m, c) in f.terms() {
        let e = m.0[i];
        if e == 0 {
            continue;
        }
        let br = quantum_bracket(e, &lambda).expect("positive exponent");
        if br.is_zero() {
            continue;
        }
        let mut k = m.clone();
        k.0[i] -= 1;
        out.add_term(k, &(c * &br));
    }
    out
}

/// `ρ_i(g)`: acts by `g` on the variables `x_j` with `j < i` only.
pub fn rho_prefix(g: &GroupElement, i: usize, f: &Polynomial) -> Polynomial {
    let prefix = g.range(0, i);
    if prefix.is_identity() {
        return f.clone();
    }
    f.scale_monomials(|m| prefix.monomial_scalar(m))
}

/// Common weighted degree of all terms of `f`.
pub fn weighted_degree(f: &Polynomial, q: &[Rational]) -> Result<Rational> {
    let mut it = f.terms().map(|(m, _)| m.weighted_degree(q));
    let Some(d) = it.next() else {
        return Err(Error::InvalidArgument("weighted degree of the zero polynomial".into()));
    };
    for e in it {
        if e != d {
            return Err(Error::NonHomogeneous(format!("{} vs {}", fmt_rational(&d), fmt_rational(&e))));
        }
    }
    Ok(d)
}

/// A normalized product `e_{i_1}⋯e_{i_p}` with strictly increasing indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExteriorWord(Vec<usize>);

impl ExteriorWord {
    pub fn empty() -> ExteriorWord {
        ExteriorWord(Vec::new())
    }

    /// Normalizes an arbitrary index list: returns the sign of the sorting
    /// permutation, or `None` when an index repeats.
    pub fn from_indices(idx: &[usize]) -> Option<(i32, ExteriorWord)> {
        let mut v = idx.to_vec();
        let mut sign = 1;
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((sign, ExteriorWord(v)))
    }

    pub fn sorted(idx: Vec<usize>) -> ExteriorWord {
        let (s, w) = ExteriorWord::from_indices(&idx).expect("distinct indices");
        assert_eq!(s, 1, "indices must be increasing");
        w
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

impl fmt::Display for ExteriorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let s: Vec<String> = self.0.iter().map(|i| format!("e{}", i + 1)).collect();
        f.write_str(&s.join("*"))
    }
}

/// Product of exterior words with the sign of the reordering; `None` is zero.
pub fn exterior_product(a: &ExteriorWord, b: &ExteriorWord) -> Option<(i32, ExteriorWord)> {
    let mut idx = a.0.clone();
    idx.extend_from_slice(&b.0);
    ExteriorWord::from_indices(&idx)
}

/// `Σ f · e_I · g` in `A[e_1..e_N][G]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulElement {
    n: usize,
    terms: BTreeMap<(ExteriorWord, GroupElement), Polynomial>,
}

impl KoszulElement {
    pub fn zero(n: usize) -> KoszulElement {
        KoszulElement { n, terms: BTreeMap::new() }
    }

    pub fn single(f: Polynomial, word: ExteriorWord, g: GroupElement) -> KoszulElement {
        let mut k = KoszulElement::zero(f.nvars());
        k.add_term(f, word, g);
        k
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, f: Polynomial, word: ExteriorWord, g: GroupElement) {
        if f.is_zero() {
            return;
        }
        let key = (word, g);
        let merged = match self.terms.remove(&key) {
            Some(old) => &old + &f,
            None => f,
        };
        if !merged.is_zero() {
            self.terms.insert(key, merged);
        }
    }

    pub fn add(&self, o: &KoszulElement) -> KoszulElement {
        let mut out = self.clone();
        for ((w, g), f) in &o.terms {
            out.add_term(f.clone(), w.clone(), g.clone());
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> KoszulElement {
        let mut out = KoszulElement::zero(self.n);
        for ((w, g), f) in &self.terms {
            out.add_term(f.scale(c), w.clone(), g.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExteriorWord, &GroupElement, &Polynomial)> {
        self.terms.iter().map(|((w, g), f)| (w, g, f))
    }

    /// Exterior-degree `p` part.
    pub fn degree_part(&self, p: usize) -> KoszulElement {
        let mut out = KoszulElement::zero(self.n);
        for ((w, g), f) in &self.terms {
            if w.len() == p {
                out.add_term(f.clone(), w.clone(), g.clone());
            }
        }
        out
    }

    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((w, g), f)| format!("({f})*{w}*[{g}]"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for KoszulElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// Parses the polynomial grammar `x1^3*x2 + x2^4` (aliases `x,y,z,w` for the
/// first four variables). The number of variables is the largest index used.
pub fn parse_polynomial(s: &str) -> Result<Polynomial> {
    parse_polynomial_with(s, None)
}

/// Like [`parse_polynomial`] but in exactly `n` variables.
pub fn parse_polynomial_in(s: &str, n: usize) -> Result<Polynomial> {
    parse_polynomial_with(s, Some(n))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Num(text.parse().expect("digits")));
            }
            'x' | 'y' | 'z' | 'w' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i > start {
                    if c != 'x' {
                        return Err(Error::Parse(format!("unknown variable `{c}{}`", chars[start..i].iter().collect::<String>())));
                    }
                    let k: usize = chars[start..i].iter().collect::<String>().parse().map_err(|_| Error::Parse("bad index".into()))?;
                    if k == 0 {
                        return Err(Error::Parse("variables are numbered from x1".into()));
                    }
                    out.push(Tok::Var(k - 1));
                } else {
                    out.push(Tok::Var(match c {
                        'x' => 0,
                        'y' => 1,
                        'z' => 2,
                        _ => 3,
                    }));
                }
            }
            _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct RawTerm {
    coeff: Rational,
    exps: BTreeMap<usize, u32>,
}

fn parse_polynomial_with(s: &str, n: Option<usize>) -> Result<Polynomial> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut terms: Vec<RawTerm> = Vec::new();
    let mut first = true;
    while pos < toks.len() {
        let mut sign = Rational::from_integer(1.into());
        match toks[pos] {
            Tok::Plus if !first => pos += 1,
            Tok::Minus => {
                sign = -sign;
                pos += 1
            }
            _ if first => {}
            _ => return Err(Error::Parse("expected `+` or `-` between terms".into())),
        }
        first = false;
        let mut term = RawTerm { coeff: sign, exps: BTreeMap::new() };
        loop {
            match toks.get(pos) {
                Some(Tok::Num(k)) => {
                    pos += 1;
                    let mut r = Rational::from_integer(k.clone());
                    if toks.get(pos) == Some(&Tok::Slash) {
                        pos += 1;
                        match toks.get(pos) {
                            Some(Tok::Num(d)) if !d.is_zero() => {
                                r /= Rational::from_integer(d.clone());
                                pos += 1;
                            }
                            _ => return Err(Error::Parse("expected a nonzero denominator after `/`".into())),
                        }
                    }
                    term.coeff *= r;
                }
                Some(Tok::Var(v)) => {
                    let v = *v;
                    pos += 1;
                    let mut e = 1u32;
                    if toks.get(pos) == Some(&Tok::Caret) {
                        pos += 1;
                        match toks.get(pos) {
                            Some(Tok::Num(k)) => {
                                e = k.to_u32().ok_or_else(|| Error::Parse("exponent too large".into()))?;
                                pos += 1;
                            }
                            _ => return Err(Error::Parse("expected an exponent after `^`".into())),
                        }
                    }
                    *term.exps.entry(v).or_insert(0) += e;
                }
                _ => return Err(Error::Parse("expected a number or a variable".into())),
            }
            match toks.get(pos) {
                Some(Tok::Star) => pos += 1,
                Some(Tok::Plus) | Some(Tok::Minus) | None => break,
                Some(Tok::Num(_)) | Some(Tok::Var(_)) => {
                    return Err(Error::Parse("implicit multiplication is not allowed; write `*`".into()))
                }
                Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
            }
        }
        terms.push(term);
    }
    let used = terms.iter().flat_map(|t| t.exps.keys().copied()).max().map_or(0, |m| m + 1);
    let n = match n {
        Some(n) if n < used => return Err(Error::Parse(format!("polynomial uses x{used} but only {n} variables were requested"))),
        Some(n) => n,
        None => used,
    };
    let mut p = Polynomial::zero(n);
    for t in terms {
        let mut e = vec![0u32; n];
        for (v, k) in t.exps {
            e[v] = k;
        }
        p.add_term(Monomial(e), &Cyclotomic::from_rational(t.coeff));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;

    #[test]
    fn parse_and_print() {
        let p = parse_polynomial("x1^3*x2 + x2^4").unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.pretty(), "x1^3*x2 + x2^4");
        let q = parse_polynomial("x^2*y + y^2*x").unwrap();
        assert_eq!(q, parse_polynomial("x1^2*x2 + x1*x2^2").unwrap());
        assert_eq!(parse_polynomial("1/2*x1 - 3").unwrap().pretty(), "1/2*x1 - 3");
        assert!(parse_polynomial("2x1").is_err());
        assert!(parse_polynomial("x1 x2").is_err());
        assert!(parse_polynomial("x0").is_err());
    }

    #[test]
    fn group_action_examples() {
        let f = parse_polynomial("x1^2").unwrap();
        let g = GroupElement::from_fracs(&[(1, 3)]);
        let z3 = Cyclotomic::zeta_pow(3, 1);
        assert_eq!(group_act(&g, &f).unwrap(), f.scale(&(&z3 * &z3)));
        let h = GroupElement::from_fracs(&[(1, 2), (1, 2)]);
        let xy = parse_polynomial("x1*x2").unwrap();
        assert_eq!(group_act(&h, &xy).unwrap(), xy);
        assert!(group_act(&h, &f).is_err());
    }

    #[test]
    fn quantum_partial_examples() {
        let f = parse_polynomial("x1^3").unwrap();
        let e = GroupElement::identity(1);
        assert_eq!(quantum_partial(&e, 0, &f), parse_polynomial("3*x1^2").unwrap());
        let g = GroupElement::from_fracs(&[(1, 3)]);
        assert!(quantum_partial(&g, 0, &f).is_zero());
        assert!(quantum_partial(&g, 0, &Polynomial::one(1)).is_zero());
    }

    #[test]
    fn rho_prefix_examples() {
        let g = GroupElement::from_fracs(&[(1, 2), (0, 1)]);
        let f = parse_polynomial("x1*x2").unwrap();
        assert_eq!(rho_prefix(&g, 0, &f), f);
        assert_eq!(rho_prefix(&g, 1, &f), -&f);
    }

    #[test]
    fn weighted_degree_examples() {
        let f = parse_polynomial("x1^3*x2 + x2^4").unwrap();
        assert_eq!(weighted_degree(&f, &[rat(1, 4), rat(1, 4)]).unwrap(), rat(1, 1));
        let g = parse_polynomial("x1 + x1^2").unwrap();
        assert!(matches!(weighted_degree(&g, &[rat(1, 3)]), Err(Error::NonHomogeneous(_))));
        assert!(matches!(weighted_degree(&Polynomial::zero(1), &[rat(1, 3)]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn exterior_examples() {
        let e1 = ExteriorWord::sorted(vec![0]);
        let e2 = ExteriorWord::sorted(vec![1]);
        let e13 = ExteriorWord::sorted(vec![0, 2]);
        assert_eq!(exterior_product(&e2, &e1), Some((-1, ExteriorWord::sorted(vec![0, 1]))));
        assert_eq!(exterior_product(&e1, &e1), None);
        assert_eq!(exterior_product(&e13, &e2), Some((-1, ExteriorWord::sorted(vec![0, 1, 2]))));
    }
}
