//! Invertible polynomials: validation, atomic decomposition, weights, the
//! maximal diagonal symmetry group and its subgroups, and fixed loci.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cyclo::{fmt_rational, rat, Cyclotomic, Phase, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{GroupElement, Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AtomKind {
    Fermat,
    Loop,
    Chain,
}

impl fmt::Display for AtomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AtomKind::Fermat => "Fermat",
            AtomKind::Loop => "Loop",
            AtomKind::Chain => "Chain",
        })
    }
}

/// One atomic summand. `vars[k]` is the global index of the `k`-th atom
/// variable in the atom's own order, and `exps[k]` its diagonal exponent:
/// a loop is `Σ x_k^{n_k} x_{k+1}` (indices cyclic), a chain
/// `x_1^{n_1}x_2 + … + x_{M-1}^{n_{M-1}}x_M + x_M^{n_M}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Atom {
    pub kind: AtomKind,
    pub exps: Vec<u32>,
    pub vars: Vec<usize>,
}

impl Atom {
    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// The atom as a polynomial in `n` variables.
    pub fn polynomial(&self, n: usize) -> Polynomial {
        let m = self.len();
        let mut w = Polynomial::zero(n);
        for k in 0..m {
            let mut e = vec![0u32; n];
            e[self.vars[k]] = self.exps[k];
            let next = match self.kind {
                AtomKind::Fermat => None,
                AtomKind::Loop => Some((k + 1) % m),
                AtomKind::Chain => (k + 1 < m).then_some(k + 1),
            };
            if let Some(j) = next {
                e[self.vars[j]] += 1;
            }
            w.add_term(Monomial(e), &Cyclotomic::one());
        }
        w
    }

    pub fn label(&self) -> String {
        let ns: Vec<String> = self.exps.iter().map(u32::to_string).collect();
        format!("{}({})", self.kind, ns.join(","))
    }
}

/// A validated invertible polynomial.
#[derive(Clone, Debug)]
pub struct Invertible {
    w: Polynomial,
    /// Row `i` is the exponent vector of the monomial in which `x_i` has
    /// exponent at least 2.
    e: Vec<Vec<u32>>,
    q: Vec<Rational>,
    atoms: Vec<Atom>,
}

impl Invertible {
    pub fn new(w: &Polynomial) -> Result<Invertible> {
        let e = validate_invertible(w)?;
        let q = weights(&e)?;
        let atoms = decompose_atomic(&e)?;
        Ok(Invertible { w: w.clone(), e, q, atoms })
    }

    pub fn parse(s: &str) -> Result<Invertible> {
        Invertible::new(&crate::poly::parse_polynomial(s)?)
    }

    /// Builds a direct sum of atoms on consecutive variables.
    pub fn from_atoms(spec: &[(AtomKind, Vec<u32>)]) -> Result<Invertible> {
        let n: usize = spec.iter().map(|(_, e)| e.len()).sum();
        let mut w = Polynomial::zero(n);
        let mut off = 0;
        for (kind, exps) in spec {
            let atom = Atom { kind: *kind, exps: exps.clone(), vars: (off..off + exps.len()).collect() };
            w = &w + &atom.polynomial(n);
            off += exps.len();
        }
        Invertible::new(&w)
    }

    pub fn fermat(n: u32) -> Invertible {
        Invertible::from_atoms(&[(AtomKind::Fermat, vec![n])]).expect("valid Fermat")
    }

    pub fn loop_type(exps: &[u32]) -> Result<Invertible> {
        Invertible::from_atoms(&[(AtomKind::Loop, exps.to_vec())])
    }

    pub fn chain(exps: &[u32]) -> Result<Invertible> {
        Invertible::from_atoms(&[(AtomKind::Chain, exps.to_vec())])
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.w
    }

    pub fn nvars(&self) -> usize {
        self.w.nvars()
    }

    pub fn exponent_matrix(&self) -> &[Vec<u32>] {
        &self.e
    }

    pub fn weights(&self) -> &[Rational] {
        &self.q
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Index of the atom containing variable `i`, and its position in the atom.
    pub fn atom_of(&self, i: usize) -> (usize, usize) {
        for (a, atom) in self.atoms.iter().enumerate() {
            if let Some(k) = atom.vars.iter().position(|&v| v == i) {
                return (a, k);
            }
        }
        unreachable!("every variable belongs to an atom")
    }

    /// True when every atom occupies consecutive variables in its own order.
    pub fn is_standard_order(&self) -> bool {
        self.atoms.iter().all(|a| a.vars.windows(2).all(|w| w[1] == w[0] + 1))
    }

    /// `|det E_W|`.
    pub fn det(&self) -> BigInt {
        det_int(&self.e).abs()
    }

    /// `Π (1/q_i − 1)`.
    pub fn milnor_number(&self) -> Rational {
        self.q.iter().map(|q| q.recip() - Rational::one()).product()
    }

    /// Relabels variables so that atoms sit on consecutive variables in
    /// their own order; returns the new polynomial and the map old → new.
    pub fn canonical(&self) -> (Invertible, Vec<usize>) {
        let mut atoms = self.atoms.clone();
        atoms.sort_by_key(|a| a.vars.iter().copied().min());
        let mut map = vec![0; self.nvars()];
        let mut next = 0;
        for a in &atoms {
            for &v in &a.vars {
                map[v] = next;
                next += 1;
            }
        }
        let w = self.w.relabel(self.nvars(), &map);
        (Invertible::new(&w).expect("relabelled invertible polynomial"), map)
    }

    /// `W^T`, the polynomial with exponent matrix `E^T`.
    pub fn transpose_mirror(&self) -> Result<Invertible> {
        let n = self.nvars();
        let mut w = Polynomial::zero(n);
        for i in 0..n {
            let e: Vec<u32> = (0..n).map(|j| self.e[j][i]).collect();
            w.add_term(Monomial(e), &Cyclotomic::one());
        }
        Invertible::new(&w)
    }

    pub fn is_symmetry(&self, g: &GroupElement) -> bool {
        g.nvars() == self.nvars()
            && self.e.iter().all(|row| {
                let s: Rational = row
                    .iter()
                    .zip(g.phases())
                    .map(|(&a, p)| p.value() * BigInt::from(a))
                    .sum();
                s.is_integer()
            })
    }

    pub fn check_symmetry(&self, g: &GroupElement) -> Result<()> {
        if self.is_symmetry(g) {
            Ok(())
        } else {
            Err(Error::NotASymmetry(format!("({g}) does not preserve {}", self.w)))
        }
    }

    /// `G_W` from the Smith normal form of `E_W`.
    pub fn symmetry_group(&self) -> SymmetryGroup {
        let n = self.nvars();
        let a: Vec<Vec<i64>> = self.e.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        let (d, v) = smith_normal_form(&a);
        let mut gens = Vec::new();
        for k in 0..n {
            if d[k] > 1 {
                let g = GroupElement::new((0..n).map(|i| Phase::new(rat(v[i][k], d[k]))).collect());
                gens.push(g);
            }
        }
        SymmetryGroup::generate(n, &gens)
    }

    /// Closure of `gens` inside `G_W`.
    pub fn subgroup_generate(&self, gens: &[GroupElement]) -> Result<SymmetryGroup> {
        for g in gens {
            if g.nvars() != self.nvars() {
                return Err(Error::InvalidArgument(format!("generator ({g}) has the wrong number of entries")));
            }
            self.check_symmetry(g)?;
        }
        Ok(SymmetryGroup::generate(self.nvars(), gens))
    }

    /// `G_W ∩ SL_N`.
    pub fn sl_subgroup(&self) -> SymmetryGroup {
        let full = self.symmetry_group();
        let sl: Vec<GroupElement> = full.elements.iter().filter(|g| g.chi().is_one()).cloned().collect();
        SymmetryGroup::from_elements_greedy(self.nvars(), sl)
    }

    /// Parses `full`, `SL` or `gens:1/3,2/3;0,1/2`.
    pub fn group_from_spec(&self, spec: &str) -> Result<SymmetryGroup> {
        let spec = spec.trim();
        match spec {
            "full" => Ok(self.symmetry_group()),
            "SL" => Ok(self.sl_subgroup()),
            _ => {
                let Some(list) = spec.strip_prefix("gens:") else {
                    return Err(Error::Parse(format!("unknown group spec `{spec}`; use full, SL or gens:...")));
                };
                let gens = list
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(GroupElement::parse)
                    .collect::<Result<Vec<_>>>()?;
                self.subgroup_generate(&gens)
            }
        }
    }

    pub fn fixed_locus(&self, g: &GroupElement) -> FixedLocus {
        let moving = g.moving();
        let fixed = g.fixed();
        let w_g = self.w.substitute_zero(&moving);
        let chain_l = self
            .atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| a.kind == AtomKind::Chain)
            .map(|(idx, a)| (idx, a.vars.iter().take_while(|&&v| !g.phase(v).is_zero()).count()))
            .collect();
        FixedLocus { g: g.clone(), fixed, moving, w_g, chain_l }
    }

    /// Moving variables of `g` inside atom `a`, as positions in the atom's order.
    pub fn atom_moving(&self, a: usize, g: &GroupElement) -> Vec<usize> {
        self.atoms[a].vars.iter().enumerate().filter(|(_, &v)| !g.phase(v).is_zero()).map(|(k, _)| k).collect()
    }

    pub fn weights_text(&self) -> Vec<String> {
        self.q.iter().map(fmt_rational).collect()
    }
}

/// Data attached to the fixed locus of `g`.
#[derive(Clone, Debug, Serialize)]
pub struct FixedLocus {
    pub g: GroupElement,
    pub fixed: Vec<usize>,
    /// The moving index `I_g`.
    pub moving: Vec<usize>,
    /// `W` with the moving variables set to 0 (still in all `N` variables).
    pub w_g: Polynomial,
    /// `(atom index, l_g)` for each chain atom.
    pub chain_l: Vec<(usize, usize)>,
}

impl FixedLocus {
    pub fn n_g(&self) -> usize {
        self.fixed.len()
    }
}

/// A finite subgroup of the diagonal torus.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    n: usize,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
}

impl SymmetryGroup {
    /// Closure of `gens` under multiplication; elements are sorted.
    pub fn generate(n: usize, gens: &[GroupElement]) -> SymmetryGroup {
        let gens: Vec<GroupElement> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut seen = BTreeSet::new();
        let e = GroupElement::identity(n);
        seen.insert(e.clone());
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        SymmetryGroup { n, generators: gens, elements: seen.into_iter().collect() }
    }

    /// Picks generators greedily from a list of elements that forms a group.
    fn from_elements_greedy(n: usize, elements: Vec<GroupElement>) -> SymmetryGroup {
        let mut gens: Vec<GroupElement> = Vec::new();
        let mut current = SymmetryGroup::generate(n, &gens);
        for g in &elements {
            if !current.contains(g) {
                gens.push(g.clone());
                current = SymmetryGroup::generate(n, &gens);
            }
        }
        current
    }

    pub fn trivial(n: usize) -> SymmetryGroup {
        SymmetryGroup::generate(n, &[])
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    /// Generators paired with their orders.
    pub fn generator_orders(&self) -> Vec<(GroupElement, u64)> {
        self.generators.iter().map(|g| (g.clone(), g.order())).collect()
    }

    /// Text form `gens:a,b;c,d`.
    pub fn spec_text(&self) -> String {
        let g: Vec<String> = self.generators.iter().map(|g| g.text()).collect();
        format!("gens:{}", g.join(";"))
    }

    /// Direct product `G × H` acting on disjoint variable sets.
    pub fn product(&self, other: &SymmetryGroup) -> SymmetryGroup {
        let n = self.n + other.n;
        let lift = |g: &GroupElement, left: bool| {
            let mut ph = vec![Phase::zero(); n];
            for (k, p) in g.phases().iter().enumerate() {
                ph[if left { k } else { self.n + k }] = p.clone();
            }
            GroupElement::new(ph)
        };
        let mut gens: Vec<GroupElement> = self.generators.iter().map(|g| lift(g, true)).collect();
        gens.extend(other.generators.iter().map(|g| lift(g, false)));
        SymmetryGroup::generate(n, &gens)
    }
}

/// `χ(g) = Π λ_i`.
pub fn character_chi(g: &GroupElement) -> Cyclotomic {
    g.chi()
}

/// Checks the invertibility conditions and returns `E_W` with rows ordered
/// so that row `i` is the monomial in which `x_i` has exponent at least 2.
pub fn validate_invertible(w: &Polynomial) -> Result<Vec<Vec<u32>>> {
    let n = w.nvars();
    if w.is_zero() {
        return Err(Error::InvalidArgument("W must be nonzero".into()));
    }
    if w.len() != n {
        return Err(Error::NotSquare(format!("{} monomials in {} variables", w.len(), n)));
    }
    for (m, c) in w.terms() {
        if !c.is_one() {
            return Err(Error::NotClassifiable(format!(
                "monomial {m} has coefficient {c}; rescale the variables so every coefficient is 1"
            )));
        }
    }
    let rows: Vec<Vec<u32>> = w.terms().map(|(m, _)| m.0.clone()).collect();
    if det_int(&rows).is_zero() {
        return Err(Error::Degenerate("the exponent matrix is singular".into()));
    }
    let q = weights(&rows)?;
    if let Some(i) = q.iter().position(|x| !x.is_positive() || *x > rat(1, 2)) {
        return Err(Error::BadWeights(format!(
            "weight q{} = {} lies outside (0, 1/2]",
            i + 1,
            fmt_rational(&q[i])
        )));
    }
    let mut ordered: Vec<Option<Vec<u32>>> = vec![None; n];
    for row in rows {
        let support: Vec<usize> = (0..n).filter(|&j| row[j] > 0).collect();
        if support.len() == 2 && support.iter().all(|&j| row[j] == 1) {
            return Err(Error::NotClassifiable(format!(
                "cross term {} is not allowed",
                Monomial(row.clone())
            )));
        }
        let big: Vec<usize> = support.iter().copied().filter(|&j| row[j] >= 2).collect();
        if big.len() != 1 || support.len() > 2 {
            return Err(Error::NotClassifiable(format!(
                "monomial {} is not of the form x_i^a or x_i^a*x_j",
                Monomial(row.clone())
            )));
        }
        let i = big[0];
        if ordered[i].is_some() {
            return Err(Error::NotClassifiable(format!("x{} is the leading variable of two monomials", i + 1)));
        }
        ordered[i] = Some(row);
    }
    let e: Vec<Vec<u32>> = ordered
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| Error::NotClassifiable(format!("no monomial is led by x{}", i + 1))))
        .collect::<Result<_>>()?;
    for i in 0..n {
        for j in 0..n {
            if i != j && e[i][j] > 1 {
                return Err(Error::NotClassifiable(format!("off-diagonal exponent {} in row {}", e[i][j], i + 1)));
            }
        }
    }
    Ok(e)
}

/// Unique solution of `E q = (1,…,1)`.
pub fn weights(e: &[Vec<u32>]) -> Result<Vec<Rational>> {
    let n = e.len();
    let cols: Vec<Vec<Rational>> =
        (0..n).map(|j| (0..n).map(|i| Rational::from_integer(BigInt::from(e[i][j]))).collect()).collect();
    if det_int(e).is_zero() {
        return Err(Error::Degenerate("the exponent matrix is singular".into()));
    }
    let ones = vec![Rational::one(); n];
    linalg::solve_columns(&cols, &ones).ok_or_else(|| Error::Degenerate("E q = 1 has no solution".into()))
}

/// Partitions a validated exponent matrix into atoms via the digraph
/// `i → j` when `a_ij > 0`, `i ≠ j`.
pub fn decompose_atomic(e: &[Vec<u32>]) -> Result<Vec<Atom>> {
    let n = e.len();
    let mut out_edge: Vec<Option<usize>> = vec![None; n];
    let mut in_edge: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && e[i][j] > 0 {
                if e[i][j] != 1 || out_edge[i].is_some() || in_edge[j].is_some() {
                    return Err(Error::NotClassifiable(format!("variable x{} or x{} has too many links", i + 1, j + 1)));
                }
                out_edge[i] = Some(j);
                in_edge[j] = Some(i);
            }
        }
    }
    let mut seen = vec![false; n];
    let mut atoms = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        if out_edge[start].is_none() && in_edge[start].is_none() {
            seen[start] = true;
            atoms.push(Atom { kind: AtomKind::Fermat, exps: vec![e[start][start]], vars: vec![start] });
            continue;
        }
        let mut head = start;
        let mut steps = 0;
        while let Some(p) = in_edge[head] {
            head = p;
            steps += 1;
            if head == start || steps > n {
                break;
            }
        }
        let is_loop = in_edge[head].is_some();
        if is_loop {
            let mut cyc = vec![start];
            let mut v = out_edge[start].expect("cycle");
            while v != start {
                cyc.push(v);
                v = out_edge[v].expect("cycle");
            }
            let s = *cyc.iter().min().expect("nonempty");
            let pos = cyc.iter().position(|&x| x == s).expect("present");
            cyc.rotate_left(pos);
            for &v in &cyc {
                seen[v] = true;
            }
            atoms.push(Atom { kind: AtomKind::Loop, exps: cyc.iter().map(|&v| e[v][v]).collect(), vars: cyc });
        } else {
            let mut path = vec![head];
            let mut v = head;
            while let Some(nx) = out_edge[v] {
                path.push(nx);
                v = nx;
            }
            for &v in &path {
                seen[v] = true;
            }
            atoms.push(Atom { kind: AtomKind::Chain, exps: path.iter().map(|&v| e[v][v]).collect(), vars: path });
        }
    }
    atoms.sort_by_key(|a| a.vars.iter().copied().min());
    Ok(atoms)
}

/// `E^T`.
pub fn transpose_mirror(e: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = e.len();
    (0..n).map(|i| (0..n).map(|j| e[j][i]).collect()).collect()
}

fn det_int(e: &[Vec<u32>]) -> BigInt {
    let m: Vec<Vec<Rational>> =
        e.iter().map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
    let d = linalg::determinant(&m);
    d.to_integer()
}

/// Smith normal form `U A V = D` of a square integer matrix. Returns the
/// diagonal of `D` (non-negative, each dividing the next) and `V`.
pub fn smith_normal_form(a: &[Vec<i64>]) -> (Vec<i64>, Vec<Vec<i64>>) {
    let n = a.len();
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut v: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for t in 0..n {
        loop {
            let Some((pi, pj)) = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
            else {
                return finish(m, v);
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..n {
                let f = Integer::div_floor(&m[i][t], &p);
                if f != 0 {
                    for j in 0..n {
                        m[i][j] -= f * m[t][j];
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..n {
                let f = Integer::div_floor(&m[t][j], &p);
                if f != 0 {
                    for i in 0..n {
                        m[i][j] -= f * m[i][t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= f * row[t];
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..n).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    for j in 0..n {
                        m[t][j] += m[i][j];
                    }
                }
                None => break,
            }
        }
    }
    finish(m, v)
}

fn finish(m: Vec<Vec<i64>>, mut v: Vec<Vec<i64>>) -> (Vec<i64>, Vec<Vec<i64>>) {
    let n = m.len();
    let mut d = vec![0; n];
    for k in 0..n {
        d[k] = m[k][k];
        if d[k] < 0 {
            d[k] = -d[k];
            for row in v.iter_mut() {
                row[k] = -row[k];
            }
        }
    }
    (d, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    #[test]
    fn validation_examples() {
        let e = validate_invertible(&parse_polynomial("x1^3").unwrap()).unwrap();
        assert_eq!(e, vec![vec![3]]);
        let e = validate_invertible(&parse_polynomial("x1^2*x2 + x2^2*x1").unwrap()).unwrap();
        assert_eq!(e, vec![vec![2, 1], vec![1, 2]]);
        let err = validate_invertible(&parse_polynomial("x1^2 + x1*x2").unwrap()).unwrap_err();
        assert_eq!(err.code(), "NotClassifiable");
        assert_eq!(validate_invertible(&parse_polynomial("x1^3 + x1^2").unwrap()).unwrap_err().code(), "NotSquare");
        assert_eq!(validate_invertible(&parse_polynomial("x1^3 + x2^3 + x1^2*x2").unwrap()).unwrap_err().code(), "NotSquare");
        assert_eq!(validate_invertible(&parse_polynomial("2*x1^3").unwrap()).unwrap_err().code(), "NotClassifiable");
        assert_eq!(validate_invertible(&parse_polynomial("x1^2*x2 + x1^4*x2^2").unwrap()).unwrap_err().code(), "Degenerate");
        assert_eq!(validate_invertible(&parse_polynomial("x1 + x2^3").unwrap()).unwrap_err().code(), "BadWeights");
    }

    #[test]
    fn atoms_and_weights() {
        let c = Invertible::parse("x1^3*x2 + x2^4").unwrap();
        assert_eq!(c.atoms()[0].kind, AtomKind::Chain);
        assert_eq!(c.atoms()[0].exps, vec![3, 4]);
        assert_eq!(c.weights(), &[rat(1, 4), rat(1, 4)]);
        let l = Invertible::parse("x1^2*x2 + x2^2*x1").unwrap();
        assert_eq!(l.atoms()[0].kind, AtomKind::Loop);
        assert_eq!(l.weights(), &[rat(1, 3), rat(1, 3)]);
        let ch = Invertible::chain(&[2, 2]).unwrap();
        assert_eq!(ch.weights(), &[rat(1, 4), rat(1, 2)]);
        let f = Invertible::parse("x^3 + y^2*z + z^2*y").unwrap();
        let kinds: Vec<AtomKind> = f.atoms().iter().map(|a| a.kind).collect();
        assert_eq!(kinds, vec![AtomKind::Fermat, AtomKind::Loop]);
        let p = Invertible::parse("x2^3*x1 + x1^4").unwrap();
        assert_eq!(p.atoms()[0].vars, vec![1, 0]);
        assert!(!p.is_standard_order());
        let (c, map) = p.canonical();
        assert!(c.is_standard_order());
        assert_eq!(map, vec![1, 0]);
        assert_eq!(c.polynomial(), Invertible::chain(&[3, 4]).unwrap().polynomial());
    }

    #[test]
    fn transpose_examples() {
        let c = Invertible::chain(&[3, 4]).unwrap();
        let t = c.transpose_mirror().unwrap();
        assert_eq!(transpose_mirror(c.exponent_matrix()), vec![vec![3, 0], vec![1, 4]]);
        assert_eq!(t.transpose_mirror().unwrap().polynomial(), c.polynomial());
    }

    #[test]
    fn group_orders() {
        for (w, ord) in [("x1^3", 3), ("x1^2*x2 + x2^2*x1", 3), ("x1^2*x2 + x2^2", 4), ("x1^3*x2 + x2^4", 12)] {
            let inv = Invertible::parse(w).unwrap();
            let g = inv.symmetry_group();
            assert_eq!(g.order(), ord, "{w}");
            assert_eq!(BigInt::from(ord), inv.det());
            assert!(g.elements().iter().all(|x| inv.is_symmetry(x)));
        }
        let ch = Invertible::chain(&[2, 2]).unwrap();
        let els: Vec<String> = ch.symmetry_group().elements().iter().map(|g| g.text()).collect();
        assert_eq!(els, vec!["0,0", "1/4,1/2", "1/2,0", "3/4,1/2"]);
    }

    #[test]
    fn subgroups() {
        let f = Invertible::fermat(4);
        let h = f.group_from_spec("gens:1/2").unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(f.group_from_spec("gens:").unwrap().order(), 1);
        assert_eq!(f.group_from_spec("gens:1/3").unwrap_err().code(), "NotASymmetry");
        let ff = Invertible::parse("x1^3 + x2^3").unwrap();
        let sl = ff.sl_subgroup();
        assert_eq!(sl.order(), 3);
        assert!(sl.contains(&GroupElement::parse("1/3,2/3").unwrap()));
    }

    #[test]
    fn fixed_loci() {
        let c = Invertible::chain(&[2, 2, 2]).unwrap();
        let g = GroupElement::parse("1/2,0,0").unwrap();
        assert!(c.is_symmetry(&g));
        let fl = c.fixed_locus(&g);
        assert_eq!(fl.moving, vec![0]);
        assert_eq!(fl.chain_l, vec![(0, 1)]);
        assert_eq!(fl.w_g, parse_polynomial("x2^2*x3 + x3^2").unwrap());
    }

    #[test]
    fn smith_examples() {
        let (d, _) = smith_normal_form(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(d, vec![1, 3]);
        let (d, _) = smith_normal_form(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(d, vec![2, 2]);
        let (d, _) = smith_normal_form(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(d, vec![1, 6]);
    }
}
