//! Twisted braces, the Hochschild and curving differentials, the cup product,
//! the group action on cochains and the comparison map `Ψ`.

use crate::error::{Error, Result};

use super::algebra::FiniteAlgebra;
use super::cochain::{Cochain, Tensor};
use super::scalar::Z12;

type Sparse = Vec<(usize, Z12)>;

fn sign(exp: i64) -> Z12 {
    if exp.rem_euclid(2) == 0 {
        Z12::ONE
    } else {
        Z12::int(-1)
    }
}

fn to_sparse(v: &[Z12]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, &x)| (i, x)).collect()
}

/// Increasing `k`-subsets of `0..p`.
fn combinations(p: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, p: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..p {
            cur.push(i);
            rec(i + 1, p, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, p, k, &mut Vec::new(), &mut out);
    out
}

enum Slot {
    /// The input at position `input`, twisted by group element `twist`.
    Plain { input: usize, twist: usize },
    /// `φ_j°` applied to inputs `first..first+|φ_j|`, each twisted by `twist`.
    Insert { j: usize, first: usize, twist: usize },
}

/// One summand of `φ{φ_1, …, φ_k}`: the slots of `φ` receiving the `φ_j`,
/// the 0-based input positions `i_j − 1` where each `φ_j` starts, and the sign
/// exponent `Σ_j (i_j − 1)(|φ_j| − 1)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BraceTerm {
    pub slots: Vec<usize>,
    pub positions: Vec<usize>,
    pub arities: Vec<usize>,
    pub exponent: i64,
}

impl BraceTerm {
    fn new(slots: &[usize], p: usize, arities: &[usize]) -> BraceTerm {
        let mut positions = Vec::with_capacity(slots.len());
        let (mut pos, mut c, mut exponent) = (0usize, 0usize, 0i64);
        for s in 0..p {
            if c < slots.len() && slots[c] == s {
                positions.push(pos);
                exponent += pos as i64 * (arities[c] as i64 - 1);
                pos += arities[c];
                c += 1;
            } else {
                pos += 1;
            }
        }
        BraceTerm { slots: slots.to_vec(), positions, arities: arities.to_vec(), exponent }
    }

    pub fn sign(&self) -> i64 {
        if self.exponent.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

/// Every summand of `φ{φ_1, …, φ_k}` for `|φ| = p` and `|φ_j| = arities[j]`,
/// for tracing signs.
pub fn brace_terms(p: usize, arities: &[usize]) -> Vec<BraceTerm> {
    if arities.len() > p {
        return Vec::new();
    }
    combinations(p, arities.len()).iter().map(|s| BraceTerm::new(s, p, arities)).collect()
}

/// Operations on cochains of one algebra, with the twisted basis vectors
/// `^g e_b` precomputed.
#[derive(Clone, Debug)]
pub struct Lab {
    alg: FiniteAlgebra,
    twist: Vec<Vec<Sparse>>,
}

impl Lab {
    pub fn new(alg: FiniteAlgebra) -> Lab {
        let d = alg.dim();
        let twist = (0..alg.group().order())
            .map(|g| {
                let m = alg.group().matrix(g);
                (0..d).map(|b| (0..d).filter(|&i| !m[i][b].is_zero()).map(|i| (i, m[i][b])).collect()).collect()
            })
            .collect();
        Lab { alg, twist }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn group_order(&self) -> usize {
        self.alg.group().order()
    }

    /// `m_2` in the identity sector.
    pub fn m2(&self) -> Cochain {
        let d = self.dim();
        Cochain::single(0, Tensor { dim: d, arity: 2, data: self.alg.structure().to_vec() })
    }

    /// `m_0 = W` in the identity sector.
    pub fn m0(&self) -> Result<Cochain> {
        let w = self.alg.curving().ok_or(Error::MissingCurving)?;
        Ok(Cochain::single(0, Tensor { dim: self.dim(), arity: 0, data: w.to_vec() }))
    }

    /// The identity map `A → A`, in the identity sector.
    pub fn identity_map(&self) -> Cochain {
        let d = self.dim();
        let mut t = Tensor::zero(d, 1);
        for a in 0..d {
            t.data[a * d + a] = Z12::ONE;
        }
        Cochain::single(0, t)
    }

    /// A random homogeneous cochain of the given arity in one sector.
    pub fn random<R: rand::Rng>(&self, arity: usize, sector: usize, rng: &mut R) -> Cochain {
        Cochain::single(sector, Tensor::random(self.dim(), arity, rng))
    }

    fn brace_parts(&self, phi: &Tensor, g: usize, args: &[(usize, &Tensor)]) -> Option<(usize, Tensor)> {
        let grp = self.alg.group();
        let d = self.dim();
        let p = phi.arity;
        let k = args.len();
        if k > p {
            return None;
        }
        let r = p + args.iter().map(|(_, t)| t.arity).sum::<usize>() - k;
        let mut prefix = vec![0usize];
        for (j, (gj, _)) in args.iter().enumerate() {
            prefix.push(grp.mul(*gj, prefix[j]));
        }
        let mut sector = g;
        for (gj, _) in args.iter().rev() {
            sector = grp.mul(sector, *gj);
        }
        let mut out = Tensor::zero(d, r);
        let total = d.pow(r as u32);
        let mut idx = vec![0usize; r];
        let mut inserted: Vec<Sparse> = vec![Vec::new(); k];
        let mut buf = vec![Z12::ZERO; d];
        for slots in combinations(p, k) {
            let term = BraceTerm::new(&slots, p, &args.iter().map(|(_, t)| t.arity).collect::<Vec<_>>());
            let layout: Vec<Slot> = (0..p)
                .map(|s| match slots.iter().position(|&x| x == s) {
                    Some(j) => Slot::Insert { j, first: term.positions[j], twist: prefix[j] },
                    None => {
                        let before = slots.iter().filter(|&&x| x < s).count();
                        let input = s + args[..before].iter().map(|(_, t)| t.arity).sum::<usize>() - before;
                        Slot::Plain { input, twist: prefix[before] }
                    }
                })
                .collect();
            let sgn = sign(term.exponent);
            'tuples: for base in 0..total {
                let mut rest = base;
                for q in (0..r).rev() {
                    idx[q] = rest % d;
                    rest /= d;
                }
                for slot in &layout {
                    if let Slot::Insert { j, first, twist } = *slot {
                        let t = args[j].1;
                        let inputs: Vec<&[(usize, Z12)]> =
                            (0..t.arity).map(|q| self.twist[twist][idx[first + q]].as_slice()).collect();
                        buf.iter_mut().for_each(|x| *x = Z12::ZERO);
                        t.eval_into(&inputs, Z12::ONE, &mut buf);
                        inserted[j] = to_sparse(&buf);
                        if inserted[j].is_empty() {
                            continue 'tuples;
                        }
                    }
                }
                let slot_vecs: Vec<&[(usize, Z12)]> = layout
                    .iter()
                    .map(|slot| match *slot {
                        Slot::Plain { input, twist } => self.twist[twist][idx[input]].as_slice(),
                        Slot::Insert { j, .. } => inserted[j].as_slice(),
                    })
                    .collect();
                phi.eval_into(&slot_vecs, sgn, &mut out.data[base * d..(base + 1) * d]);
            }
        }
        Some((sector, out))
    }

    /// The twisted brace `φ{φ_1, …, φ_k}`, extended multilinearly over parts.
    pub fn brace(&self, phi: &Cochain, args: &[&Cochain]) -> Cochain {
        let mut out = Cochain::zero(self.dim());
        let arg_parts: Vec<Vec<(usize, &Tensor)>> =
            args.iter().map(|c| c.parts().map(|(_, g, t)| (g, t)).collect()).collect();
        for (_, g, t) in phi.parts() {
            let mut choice = vec![0usize; args.len()];
            if arg_parts.iter().any(Vec::is_empty) {
                return out;
            }
            loop {
                let chosen: Vec<(usize, &Tensor)> = choice.iter().enumerate().map(|(j, &c)| arg_parts[j][c]).collect();
                if let Some((s, res)) = self.brace_parts(t, g, &chosen) {
                    out.add_part(s, res, Z12::ONE);
                }
                let mut j = 0;
                loop {
                    if j == choice.len() {
                        break;
                    }
                    choice[j] += 1;
                    if choice[j] < arg_parts[j].len() {
                        break;
                    }
                    choice[j] = 0;
                    j += 1;
                }
                if j == choice.len() {
                    break;
                }
            }
        }
        out
    }

    /// `∂_H φ = (−1)^{|φ|−1} m_2{φ} − φ{m_2}`.
    pub fn hochschild_d(&self, phi: &Cochain) -> Cochain {
        let m2 = self.m2();
        let mut out = Cochain::zero(self.dim());
        let arities: std::collections::BTreeSet<usize> = phi.parts().map(|(p, _, _)| p).collect();
        for p in arities {
            let part = phi.arity_part(p);
            out = out.add_scaled(&self.brace(&m2, &[&part]), sign(p as i64 - 1));
            out = out.sub(&self.brace(&part, &[&m2]));
        }
        out
    }

    /// `d_W φ = φ{m_0}`.
    pub fn curving_d(&self, phi: &Cochain) -> Result<Cochain> {
        Ok(self.brace(phi, &[&self.m0()?]))
    }

    /// `∂_H + d_W`.
    pub fn total_d(&self, phi: &Cochain) -> Result<Cochain> {
        Ok(self.hochschild_d(phi).add(&self.curving_d(phi)?))
    }

    /// `h^*(φ)(a_1, …) = h φ(^{h^{-1}}a_1, …) h^{-1}`.
    pub fn act(&self, h: usize, phi: &Cochain) -> Cochain {
        let grp = self.alg.group();
        let d = self.dim();
        let hinv = grp.inv(h);
        let mut out = Cochain::zero(d);
        for (p, g, t) in phi.parts() {
            let mut res = Tensor::zero(d, p);
            let mut buf = vec![Z12::ZERO; d];
            for base in 0..d.pow(p as u32) {
                let mut rest = base;
                let mut inputs: Vec<&[(usize, Z12)]> = vec![&[]; p];
                for q in (0..p).rev() {
                    inputs[q] = self.twist[hinv][rest % d].as_slice();
                    rest /= d;
                }
                buf.iter_mut().for_each(|x| *x = Z12::ZERO);
                t.eval_into(&inputs, Z12::ONE, &mut buf);
                let v = self.alg.act(h, &buf);
                res.data[base * d..(base + 1) * d].copy_from_slice(&v);
            }
            out.add_part(grp.conj(h, g), res, Z12::ONE);
        }
        out
    }

    /// `φ_1 ∪ φ_2 = (−1)^{|φ_1|(|φ_2|−1)} m_2{φ_1, g_1^* φ_2}`.
    pub fn cup(&self, a: &Cochain, b: &Cochain) -> Cochain {
        let m2 = self.m2();
        let mut out = Cochain::zero(self.dim());
        for (p, g, t) in a.parts() {
            let x = Cochain::single(g, t.clone());
            for (q, h, u) in b.parts() {
                let y = self.act(g, &Cochain::single(h, u.clone()));
                let s = sign(p as i64 * (q as i64 - 1));
                out = out.add_scaled(&self.brace(&m2, &[&x, &y]), s);
            }
        }
        out
    }

    /// `Σ_h h^* φ`, a `G`-invariant cochain.
    pub fn reynolds(&self, phi: &Cochain) -> Cochain {
        (0..self.group_order()).fold(Cochain::zero(self.dim()), |acc, h| acc.add(&self.act(h, phi)))
    }

    pub fn is_invariant(&self, phi: &Cochain) -> bool {
        (1..self.group_order()).all(|h| &self.act(h, phi) == phi)
    }

    /// `Ψ(φ)(a_1g_1 ⊗ ⋯ ⊗ a_pg_p) = φ(a_1 ⊗ ^{g_1}a_2 ⊗ ⋯ ⊗ ^{g_1⋯g_{p−1}}a_p) g_1⋯g_p`,
    /// a cochain on `A[G]` with basis `e_a g` at index `a·|G| + g`.
    pub fn psi(&self, phi: &Cochain) -> Cochain {
        let grp = self.alg.group();
        let d = self.dim();
        let n = grp.order();
        let dim = d * n;
        let mut out = Cochain::zero(dim);
        for (p, h, t) in phi.parts() {
            let mut res = Tensor::zero(dim, p);
            let mut buf = vec![Z12::ZERO; d];
            for base in 0..dim.pow(p as u32) {
                let mut digits = vec![0usize; p];
                let mut rest = base;
                for q in (0..p).rev() {
                    digits[q] = rest % dim;
                    rest /= dim;
                }
                let mut prefix = 0usize;
                let mut inputs: Vec<&[(usize, Z12)]> = Vec::with_capacity(p);
                for &x in &digits {
                    let (a, g) = (x / n, x % n);
                    inputs.push(self.twist[prefix][a].as_slice());
                    prefix = grp.mul(prefix, g);
                }
                buf.iter_mut().for_each(|x| *x = Z12::ZERO);
                t.eval_into(&inputs, Z12::ONE, &mut buf);
                let target = grp.mul(h, prefix);
                for (c, &v) in buf.iter().enumerate() {
                    res.data[base * dim + c * n + target] = v;
                }
            }
            out.add_part(0, res, Z12::ONE);
        }
        out
    }

    /// [`Lab::psi`] restricted to invariant cochains.
    pub fn psi_checked(&self, phi: &Cochain) -> Result<Cochain> {
        if !self.is_invariant(phi) {
            return Err(Error::NotInvariant("Ψ is only defined on G-invariant cochains".into()));
        }
        Ok(self.psi(phi))
    }

    /// The lab for `A[G]` with its trivial group.
    pub fn crossed_lab(&self) -> Result<Lab> {
        Ok(Lab::new(self.alg.crossed_product()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn poly3() -> Lab {
        Lab::new(FiniteAlgebra::truncated_polynomial(3, 3, None).unwrap())
    }

    #[test]
    fn associativity_as_brace() {
        let lab = poly3();
        let m2 = lab.m2();
        assert!(lab.brace(&m2, &[&m2]).is_zero());
        assert!(lab.hochschild_d(&m2).is_zero());
    }

    #[test]
    fn brace_with_too_many_arguments_vanishes() {
        let lab = poly3();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let phi = lab.random(1, 1, &mut rng);
        let a = lab.random(1, 2, &mut rng);
        assert!(lab.brace(&phi, &[&a, &a]).is_zero());
    }

    #[test]
    fn zero_cochains_multiply_in_the_crossed_product() {
        let lab = poly3();
        let d = 3;
        let vec = |v: [i64; 3]| Tensor { dim: d, arity: 0, data: v.iter().map(|&x| Z12::int(x)).collect() };
        let a = Cochain::single(1, vec([0, 1, 0]));
        let b = Cochain::single(2, vec([0, 1, 1]));
        // (x g)(x + x²)h = x·^g(x + x²) gh = (ζx² ) gh
        let got = lab.cup(&a, &b);
        let zeta = Z12::root_of_unity(3, 1).unwrap();
        let mut want = Tensor::zero(d, 0);
        want.data[2] = zeta;
        assert_eq!(got, Cochain::single(lab.algebra().group().mul(1, 2), want));
    }

    #[test]
    fn derivations_are_cocycles() {
        let lab = poly3();
        let mut t = Tensor::zero(3, 1);
        // x d/dx: x^k ↦ k x^k
        for k in 0..3 {
            t.data[k * 3 + k] = Z12::int(k as i64);
        }
        assert!(lab.hochschild_d(&Cochain::single(0, t)).is_zero());
    }

    #[test]
    fn curving_of_identity_is_w() {
        let lab = Lab::new(FiniteAlgebra::truncated_polynomial(4, 3, Some(3)).unwrap());
        assert_eq!(lab.curving_d(&lab.identity_map()).unwrap(), lab.m0().unwrap());
        assert!(matches!(poly3().curving_d(&poly3().identity_map()), Err(Error::MissingCurving)));
    }

    #[test]
    fn action_law_and_identity() {
        let lab = poly3();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let phi = lab.random(2, 1, &mut rng);
        assert_eq!(lab.act(0, &phi), phi);
        let grp = lab.algebra().group();
        for h1 in 0..3 {
            for h2 in 0..3 {
                assert_eq!(lab.act(grp.mul(h1, h2), &phi), lab.act(h1, &lab.act(h2, &phi)));
            }
        }
    }

    #[test]
    fn psi_recovers_crossed_product_multiplication() {
        let lab = poly3();
        let m2 = lab.m2();
        let sum = lab.reynolds(&m2).scale(Z12::int(1));
        // m2 is invariant, so the Reynolds sum is |G| m2.
        assert_eq!(sum, m2.scale(Z12::int(3)));
        let b = lab.crossed_lab().unwrap();
        assert_eq!(lab.psi_checked(&m2).unwrap(), b.m2());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let phi = lab.random(1, 1, &mut rng);
        if !lab.is_invariant(&phi) {
            assert!(matches!(lab.psi_checked(&phi), Err(Error::NotInvariant(_))));
        }
    }

    #[test]
    fn brace_term_signs() {
        // φ{φ_1, φ_2} with |φ| = 2, |φ_1| = 2, |φ_2| = 3: φ_2 starts at input 3.
        let terms = brace_terms(2, &[2, 3]);
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].positions, vec![0, 2]);
        assert_eq!(terms[0].sign(), 1);
        let single = brace_terms(3, &[2]);
        assert_eq!(single.iter().map(BraceTerm::sign).collect::<Vec<_>>(), vec![1, -1, 1]);
        assert!(brace_terms(1, &[1, 1]).is_empty());
    }

    #[test]
    fn untwisted_group_algebra_braces() {
        let lab = Lab::new(FiniteAlgebra::cyclic_group_algebra(2).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = lab.random(1, 0, &mut rng);
        let b = lab.random(2, 0, &mut rng);
        // Leibniz for the classical cup product.
        let lhs = lab.hochschild_d(&lab.cup(&a, &b));
        let rhs = lab.cup(&lab.hochschild_d(&a), &b).sub(&lab.cup(&a, &lab.hochschild_d(&b)));
        assert_eq!(lhs, rhs);
    }
}
