//! Word cochains built from quantum differential operators, and a lazy
//! evaluator for the homotopy `H*`, the curving `d_W` and the cup product on
//! reduced bar cochains of `A = Q[x_1..x_N]` with values in `A[G̃]`.

use std::collections::{BTreeMap, HashMap};

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::invertible::Invertible;
use crate::milnor::{JacClass, JacobianRing};
use crate::poly::{group_act, quantum_partial, ExteriorWord, GroupElement, KoszulElement, Monomial, Polynomial};

use super::operators::second_order_apply;

/// An element `Σ f_G · G` of the crossed product `A[G̃]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Value {
    n: usize,
    parts: BTreeMap<GroupElement, Polynomial>,
}

impl Value {
    pub fn zero(n: usize) -> Value {
        Value { n, parts: BTreeMap::new() }
    }

    pub fn single(f: Polynomial, g: GroupElement) -> Value {
        let mut v = Value::zero(f.nvars());
        v.add_part(f, g);
        v
    }

    fn add_part(&mut self, f: Polynomial, g: GroupElement) {
        if f.is_zero() {
            return;
        }
        let merged = match self.parts.remove(&g) {
            Some(old) => &old + &f,
            None => f,
        };
        if !merged.is_zero() {
            self.parts.insert(g, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = (&GroupElement, &Polynomial)> {
        self.parts.iter()
    }

    /// Coefficient of the identity element.
    pub fn identity_part(&self) -> Polynomial {
        self.parts.get(&GroupElement::identity(self.n)).cloned().unwrap_or_else(|| Polynomial::zero(self.n))
    }

    fn add_assign(&mut self, o: &Value) {
        for (g, f) in &o.parts {
            self.add_part(f.clone(), g.clone());
        }
    }

    fn scale(&self, c: &Cyclotomic) -> Value {
        let mut out = Value::zero(self.n);
        for (g, f) in &self.parts {
            out.add_part(f.scale(c), g.clone());
        }
        out
    }

    /// `(u G)(v H) = u · ^G v · GH`.
    fn mul(&self, o: &Value) -> Value {
        let mut out = Value::zero(self.n);
        for (g, u) in &self.parts {
            for (h, v) in &o.parts {
                let tv = group_act(g, v).expect("matching dimensions");
                out.add_part(u * &tv, g.mul(h));
            }
        }
        out
    }
}

/// One factor of a word: a 0-cochain (polynomial or group element) or a
/// first or second order quantum differential operator consuming one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordAtom {
    Coefficient(Polynomial),
    Group(GroupElement),
    /// `∂^g_i: f ↦ ∂^g_{x_i}(f) g^{(i)}`.
    First { i: usize, g: GroupElement },
    /// `∂^{g,h}_{i,j}`.
    Second { i: usize, j: usize, g: GroupElement, h: GroupElement },
}

impl WordAtom {
    fn consumes_input(&self) -> bool {
        matches!(self, WordAtom::First { .. } | WordAtom::Second { .. })
    }
}

/// `coef · (cup product of the atoms)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordTerm {
    pub coef: Cyclotomic,
    pub atoms: Vec<WordAtom>,
}

impl WordTerm {
    pub fn arity(&self) -> usize {
        self.atoms.iter().filter(|a| a.consumes_input()).count()
    }

    /// Product of all group labels.
    pub fn sector(&self, n: usize) -> GroupElement {
        self.atoms.iter().fold(GroupElement::identity(n), |acc, a| match a {
            WordAtom::Coefficient(_) => acc,
            WordAtom::Group(g) => acc.mul(g),
            WordAtom::First { i, g } => acc.mul(&g.component(*i)),
            WordAtom::Second { i, j, g, h } => acc.mul(&g.component(*i)).mul(&h.component(*j)),
        })
    }

    fn evaluate(&self, n: usize, inputs: &[Monomial]) -> Result<Value> {
        let mut acc = Value::single(Polynomial::constant(n, self.coef.clone()), GroupElement::identity(n));
        let mut next = 0;
        for atom in &self.atoms {
            let factor = match atom {
                WordAtom::Coefficient(f) => Value::single(f.clone(), GroupElement::identity(n)),
                WordAtom::Group(g) => Value::single(Polynomial::one(n), g.clone()),
                WordAtom::First { i, g } => {
                    let a = Polynomial::term(inputs[next].clone(), Cyclotomic::one());
                    next += 1;
                    Value::single(quantum_partial(g, *i, &a), g.component(*i))
                }
                WordAtom::Second { i, j, g, h } => {
                    let a = Polynomial::term(inputs[next].clone(), Cyclotomic::one());
                    next += 1;
                    let (f, label) = second_order_apply(*i, *j, g, h, &a)?;
                    Value::single(f, label)
                }
            };
            acc = acc.mul(&factor);
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

/// A formal sum of words of one arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordCochain {
    pub n: usize,
    pub arity: usize,
    pub terms: Vec<WordTerm>,
}

impl WordCochain {
    pub fn new(n: usize, arity: usize, terms: Vec<WordTerm>) -> Result<WordCochain> {
        if let Some(t) = terms.iter().find(|t| t.arity() != arity) {
            return Err(Error::UnsupportedWord(format!("word of arity {} in a cochain of arity {arity}: {t:?}", t.arity())));
        }
        Ok(WordCochain { n, arity, terms })
    }

    pub fn evaluate(&self, inputs: &[Monomial]) -> Result<Value> {
        let mut out = Value::zero(self.n);
        for t in &self.terms {
            out.add_assign(&t.evaluate(self.n, inputs)?);
        }
        Ok(out)
    }
}

/// `Υ*` on Koszul cochains, split by degree (index `p` holds arity `p`):
/// `Υ*(a e_I g) = a g^{(1)}⋯g^{(i_1−1)} ∂^g_{i_1} g^{(i_1+1)}⋯∂^g_{i_p} g^{(i_p+1)}⋯g^{(N)}`.
pub fn upsilon_star(k: &KoszulElement) -> Vec<WordCochain> {
    let n = k.nvars();
    let mut by_degree: Vec<Vec<WordTerm>> = vec![Vec::new(); n + 1];
    for (word, g, f) in k.terms() {
        let mut atoms = vec![WordAtom::Coefficient(f.clone())];
        let mut prev = 0;
        for &i in word.indices() {
            atoms.push(WordAtom::Group(g.range(prev, i)));
            atoms.push(WordAtom::First { i, g: g.clone() });
            prev = i + 1;
        }
        atoms.push(WordAtom::Group(g.range(prev, n)));
        atoms.retain(|a| !matches!(a, WordAtom::Group(h) if h.is_identity()));
        by_degree[word.len()].push(WordTerm { coef: Cyclotomic::one(), atoms });
    }
    by_degree.into_iter().enumerate().map(|(p, terms)| WordCochain { n, arity: p, terms }).collect()
}

/// Increasing `p`-subsets of `0..n`.
fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, p, &mut Vec::new(), &mut out);
    out
}

fn permutations_signed(p: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == used.len() {
            out.push((cur.clone(), sign));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                let inv = cur.iter().filter(|&&u| u > v).count() as i64;
                used[v] = true;
                cur.push(v);
                rec(cur, used, if inv % 2 == 0 { sign } else { -sign }, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(&mut Vec::new(), &mut vec![false; p], 1, &mut out);
    out
}

/// `Φ*`: `φ ↦ Σ_{i_1<⋯<i_p} Σ_σ (−1)^σ φ(x_{i_σ(1)} ⊗ ⋯ ⊗ x_{i_σ(p)}) e_{i_1}⋯e_{i_p}`.
pub fn phi_star(c: &WordCochain) -> Result<KoszulElement> {
    let n = c.n;
    let mut out = KoszulElement::zero(n);
    let perms = permutations_signed(c.arity);
    for set in subsets(n, c.arity) {
        for (sigma, sgn) in &perms {
            let inputs: Vec<Monomial> = sigma.iter().map(|&k| Monomial::var(n, set[k])).collect();
            let v = c.evaluate(&inputs)?;
            for (g, f) in v.parts() {
                out.add_term(f.scale(&Cyclotomic::from_int(*sgn)), ExteriorWord::sorted(set.clone()), g.clone());
            }
        }
    }
    Ok(out)
}

/// One term `sign · u ⊗ x_{k_1} ⊗ ⋯ ⊗ x_{k_r} ⊗ v` of `Φ∘Υ(1 ⊗ b_1 ⊗ ⋯ ⊗ b_r ⊗ 1)`.
struct Splitting {
    sign: i64,
    u: Monomial,
    xs: Vec<usize>,
    v: Monomial,
}

/// `Φ_r ∘ Υ_r (1 ⊗ b_1 ⊗ ⋯ ⊗ b_r ⊗ 1)` for monomials `b_k`.
fn phi_upsilon(n: usize, bs: &[Monomial]) -> Vec<Splitting> {
    let r = bs.len();
    let mut out = Vec::new();
    let perms = permutations_signed(r);
    for set in subsets(n, r) {
        // Every b_k must contain x_{i_k}.
        if (0..r).any(|k| bs[k].0[set[k]] == 0) {
            continue;
        }
        let mut splits: Vec<(Monomial, Monomial)> = vec![(Monomial::one(n), Monomial::one(n))];
        for k in 0..r {
            let i = set[k];
            let gamma = &bs[k].0;
            let mut next = Vec::new();
            for (u, v) in &splits {
                for s in 0..gamma[i] {
                    let mut a1 = vec![0u32; n];
                    let mut a2 = vec![0u32; n];
                    for t in 0..n {
                        if t < i {
                            a2[t] = gamma[t];
                        } else if t > i {
                            a1[t] = gamma[t];
                        }
                    }
                    a1[i] = gamma[i] - 1 - s;
                    a2[i] = s;
                    next.push((u.mul(&Monomial(a1)), v.mul(&Monomial(a2))));
                }
            }
            splits = next;
        }
        for (u, v) in splits {
            for (sigma, sgn) in &perms {
                out.push(Splitting { sign: *sgn, u: u.clone(), xs: sigma.iter().map(|&k| set[k]).collect(), v: v.clone() });
            }
        }
    }
    out
}

pub type NodeId = usize;

#[derive(Clone, Debug)]
enum Node {
    Word(WordCochain),
    Cup(NodeId, NodeId),
    Homotopy(NodeId),
    Curving(NodeId),
    Sum(Vec<(Cyclotomic, NodeId)>),
}

/// Lazily evaluates cochains assembled from words with cup products, the
/// homotopy `H*` and the curving `d_W`, memoizing every evaluation.
///
/// `(H*φ)(a_1..a_m) = Σ_{i=1}^{m} (−1)^i Σ φ(a_1, …, a_{i−1}, u, x_{k_1}, …, x_{k_r}) · v`
/// over the terms of `Φ∘Υ(1 ⊗ a_i ⊗ ⋯ ⊗ a_m ⊗ 1)`, and
/// `(d_W φ)(a_1..a_m) = Σ_i (−1)^{i−1} φ(a_1, …, a_{i−1}, W, a_i, …)`.
/// A constant in any slot evaluates to zero (reduced bar complex).
pub struct Evaluator {
    n: usize,
    w: Polynomial,
    nodes: Vec<(Node, usize)>,
    memo: HashMap<(NodeId, Vec<Monomial>), Value>,
}

impl Evaluator {
    pub fn new(w: &Polynomial) -> Evaluator {
        Evaluator { n: w.nvars(), w: w.clone(), nodes: Vec::new(), memo: HashMap::new() }
    }

    fn push(&mut self, node: Node, arity: usize) -> NodeId {
        self.nodes.push((node, arity));
        self.nodes.len() - 1
    }

    pub fn arity(&self, id: NodeId) -> usize {
        self.nodes[id].1
    }

    pub fn word(&mut self, c: WordCochain) -> NodeId {
        let a = c.arity;
        self.push(Node::Word(c), a)
    }

    pub fn cup(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let arity = self.arity(a) + self.arity(b);
        self.push(Node::Cup(a, b), arity)
    }

    /// `H*`: lowers the arity by one.
    pub fn homotopy(&mut self, a: NodeId) -> Result<NodeId> {
        let arity = self.arity(a);
        if arity == 0 {
            return Err(Error::InvalidArgument("the homotopy needs a cochain of positive arity".into()));
        }
        Ok(self.push(Node::Homotopy(a), arity - 1))
    }

    /// `d_W = φ{m_0}`: lowers the arity by one.
    pub fn curving(&mut self, a: NodeId) -> Result<NodeId> {
        let arity = self.arity(a);
        if arity == 0 {
            return Err(Error::InvalidArgument("the curving needs a cochain of positive arity".into()));
        }
        Ok(self.push(Node::Curving(a), arity - 1))
    }

    pub fn sum(&mut self, parts: Vec<(Cyclotomic, NodeId)>) -> Result<NodeId> {
        let Some(&(_, first)) = parts.first() else {
            return Err(Error::InvalidArgument("empty sum of cochains".into()));
        };
        let arity = self.arity(first);
        if parts.iter().any(|&(_, id)| self.arity(id) != arity) {
            return Err(Error::InvalidArgument("summands of different arity".into()));
        }
        Ok(self.push(Node::Sum(parts), arity))
    }

    pub fn eval(&mut self, id: NodeId, inputs: &[Monomial]) -> Result<Value> {
        if inputs.len() != self.arity(id) {
            return Err(Error::InvalidArgument(format!(
                "cochain of arity {} evaluated on {} inputs",
                self.arity(id),
                inputs.len()
            )));
        }
        if inputs.iter().any(Monomial::is_one) {
            return Ok(Value::zero(self.n));
        }
        let key = (id, inputs.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let node = self.nodes[id].0.clone();
        let v = match node {
            Node::Word(c) => c.evaluate(inputs)?,
            Node::Cup(a, b) => {
                let p = self.arity(a);
                let x = self.eval(a, &inputs[..p])?;
                if x.is_zero() {
                    x
                } else {
                    x.mul(&self.eval(b, &inputs[p..])?)
                }
            }
            Node::Sum(parts) => {
                let mut out = Value::zero(self.n);
                for (c, a) in parts {
                    out.add_assign(&self.eval(a, inputs)?.scale(&c));
                }
                out
            }
            Node::Curving(a) => {
                let mut out = Value::zero(self.n);
                let w: Vec<(Monomial, Cyclotomic)> = self.w.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
                for pos in 0..=inputs.len() {
                    let sign = Cyclotomic::from_int(if pos % 2 == 0 { 1 } else { -1 });
                    for (m, c) in &w {
                        let mut args = inputs.to_vec();
                        args.insert(pos, m.clone());
                        out.add_assign(&self.eval(a, &args)?.scale(&(&sign * c)));
                    }
                }
                out
            }
            Node::Homotopy(a) => {
                let mut out = Value::zero(self.n);
                let m = inputs.len();
                for i in 1..=m {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    for sp in phi_upsilon(self.n, &inputs[i - 1..]) {
                        let mut args = inputs[..i - 1].to_vec();
                        args.push(sp.u.clone());
                        args.extend(sp.xs.iter().map(|&k| Monomial::var(self.n, k)));
                        let val = self.eval(a, &args)?;
                        if val.is_zero() {
                            continue;
                        }
                        let right = Value::single(Polynomial::term(sp.v, Cyclotomic::one()), GroupElement::identity(self.n));
                        out.add_assign(&val.mul(&right).scale(&Cyclotomic::from_int(sign * sp.sign)));
                    }
                }
                out
            }
        };
        self.memo.insert(key, v.clone());
        Ok(v)
    }
}

/// True when `H*(c)` vanishes on every tuple drawn from `samples`.
pub fn homotopy_vanishes(w: &Polynomial, c: &WordCochain, samples: &[Monomial]) -> Result<bool> {
    let mut ev = Evaluator::new(w);
    let id = ev.word(c.clone());
    let h = ev.homotopy(id)?;
    let k = ev.arity(h);
    let mut idx = vec![0usize; k];
    loop {
        let inputs: Vec<Monomial> = idx.iter().map(|&t| samples[t].clone()).collect();
        if !ev.eval(h, &inputs)?.is_zero() {
            return Ok(false);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(true);
            }
            idx[pos] += 1;
            if idx[pos] < samples.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn common_sector(k: &KoszulElement) -> Result<GroupElement> {
    let mut it = k.terms().map(|(_, g, _)| g.clone());
    let Some(g) = it.next() else {
        return Err(Error::InvalidArgument("zero Koszul cochain has no sector".into()));
    };
    if it.any(|h| h != g) {
        return Err(Error::InvalidArgument("Koszul cochain spans several sectors".into()));
    }
    Ok(g)
}

/// `[Σ_k (−1)^k (d_W H*)^k φ_{2k}]` in `Jac(W)` for `φ = Υ*(a) ∪ Υ*(b)`,
/// evaluated on reduced bar cochains. Requires `gh = e`.
pub fn retract_cup_oracle(inv: &Invertible, a: &KoszulElement, b: &KoszulElement) -> Result<JacClass> {
    let ring = JacobianRing::full(inv.polynomial(), inv.weights())?;
    if a.is_zero() || b.is_zero() {
        return Ok(JacClass::zero(ring.dim()));
    }
    let g = common_sector(a)?;
    let h = common_sector(b)?;
    let gh = g.mul(&h);
    if !gh.is_identity() {
        return Err(Error::NonIdentityTarget(gh.text()));
    }
    let n = inv.nvars();
    let mut ev = Evaluator::new(inv.polynomial());
    let ua = upsilon_star(a);
    let ub = upsilon_star(b);
    let mut by_total: BTreeMap<usize, Vec<(Cyclotomic, NodeId)>> = BTreeMap::new();
    for ca in ua.into_iter().filter(|c| !c.terms.is_empty()) {
        for cb in ub.iter().filter(|c| !c.terms.is_empty()) {
            let total = ca.arity + cb.arity;
            if total % 2 == 1 {
                continue;
            }
            let x = ev.word(ca.clone());
            let y = ev.word(cb.clone());
            let c = ev.cup(x, y);
            by_total.entry(total).or_default().push((Cyclotomic::one(), c));
        }
    }
    let mut result = Polynomial::zero(n);
    for (total, parts) in by_total {
        let mut id = ev.sum(parts)?;
        for _ in 0..total / 2 {
            id = ev.homotopy(id)?;
            id = ev.curving(id)?;
        }
        let v = ev.eval(id, &[])?;
        let sign = Cyclotomic::from_int(if (total / 2) % 2 == 0 { 1 } else { -1 });
        result = &result + &v.identity_part().scale(&sign);
    }
    Ok(ring.normal_form(&result))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::kappa_representative;

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn upsilon_then_phi_is_identity() {
        let n = 3;
        let g = GroupElement::from_fracs(&[(1, 3), (2, 5), (1, 2)]);
        for p in 0..=3 {
            for set in subsets(n, p) {
                let f = Polynomial::term(mono(&[1, 0, 2]), Cyclotomic::from_int(2));
                let k = KoszulElement::single(f, ExteriorWord::sorted(set.clone()), g.clone());
                let u = upsilon_star(&k);
                assert_eq!(phi_star(&u[p]).unwrap(), k, "I = {set:?}");
            }
        }
    }

    #[test]
    fn fermat_cube() {
        let inv = Invertible::fermat(3);
        let g = GroupElement::from_fracs(&[(1, 3)]);
        let a = kappa_representative(&inv, &g).unwrap();
        let b = kappa_representative(&inv, &g.inv()).unwrap();
        let got = retract_cup_oracle(&inv, &a, &b).unwrap();
        let ring = JacobianRing::full(inv.polynomial(), inv.weights()).unwrap();
        let want = Polynomial::term(mono(&[1]), &Cyclotomic::from_int(3) / &(&Cyclotomic::one() - &g.lambda(0)));
        assert_eq!(got, ring.normal_form(&want));
    }

    #[test]
    fn non_identity_target_is_rejected() {
        let inv = Invertible::fermat(3);
        let g = GroupElement::from_fracs(&[(1, 3)]);
        let a = kappa_representative(&inv, &g).unwrap();
        assert!(matches!(retract_cup_oracle(&inv, &a, &a), Err(Error::NonIdentityTarget(_))));
    }

    #[test]
    fn loop_two_by_two() {
        let inv = Invertible::loop_type(&[2, 2]).unwrap();
        let ring = JacobianRing::full(inv.polynomial(), inv.weights()).unwrap();
        for g in inv.symmetry_group().elements().iter().filter(|g| !g.is_identity()) {
            let a = kappa_representative(&inv, g).unwrap();
            let b = kappa_representative(&inv, &g.inv()).unwrap();
            let one = Cyclotomic::one();
            let den = &(&g.lambda(0) - &one) * &(&g.lambda(1) - &one);
            let want = ring.normal_form(&Polynomial::term(mono(&[1, 1]), &Cyclotomic::from_int(-3) / &den));
            assert_eq!(retract_cup_oracle(&inv, &a, &b).unwrap(), want, "g = {g}");
        }
    }

    #[test]
    fn mismatched_degrees_vanish() {
        let inv = Invertible::loop_type(&[2, 2]).unwrap();
        let g = inv.symmetry_group().elements()[1].clone();
        let a = KoszulElement::single(Polynomial::one(2), ExteriorWord::sorted(vec![0, 1]), g.clone());
        let b = KoszulElement::single(Polynomial::one(2), ExteriorWord::empty(), g.inv());
        assert!(retract_cup_oracle(&inv, &a, &b).unwrap().is_zero());
    }

    #[test]
    fn homotopy_vanishing_rules() {
        let w = Invertible::loop_type(&[2, 2, 2]).unwrap().polynomial().clone();
        let g = GroupElement::from_fracs(&[(1, 9), (7, 9), (4, 9)]);
        let h = g.inv();
        let samples = vec![mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 1]), mono(&[2, 1, 0]), mono(&[0, 1, 2]), mono(&[1, 1, 1])];
        let first = |i: usize, g: &GroupElement| WordAtom::First { i, g: g.clone() };
        let second = |i: usize, j: usize| WordAtom::Second { i, j, g: g.clone(), h: h.clone() };
        let cochain = |atoms: Vec<WordAtom>| {
            let t = WordTerm { coef: Cyclotomic::one(), atoms };
            WordCochain::new(3, t.arity(), vec![t]).unwrap()
        };
        // Second-order operator in the last position.
        let a = cochain(vec![first(2, &g), WordAtom::Group(g.component(0)), second(1, 0)]);
        assert!(homotopy_vanishes(&w, &a, &samples).unwrap());
        // Second-order operator followed by increasing first-order ones.
        let b = cochain(vec![second(1, 0), first(1, &h), WordAtom::Group(h.component(1)), first(2, &g)]);
        assert!(homotopy_vanishes(&w, &b, &samples).unwrap());
        // Strictly increasing first-order operators with group insertions.
        let c = cochain(vec![first(0, &g), WordAtom::Group(h.component(2)), first(1, &h), first(2, &g)]);
        assert!(homotopy_vanishes(&w, &c, &samples).unwrap());
        // A decreasing pair does not vanish.
        let d = cochain(vec![first(1, &g), first(0, &h)]);
        assert!(!homotopy_vanishes(&w, &d, &samples).unwrap());
    }
}
