//! The orbifold B-model state space `H = ⊕_{g∈G} H_g` with `H_g ≅ Jac(W_g)`,
//! its cup product, `G`-action and pairing.

mod export;
mod frobenius;

use std::sync::OnceLock;

use rand::Rng;

use crate::cyclo::{root_of_unity, Cyclotomic, Phase};
use crate::error::{Error, Result};
use crate::invertible::{AtomKind, FixedLocus, Invertible, SymmetryGroup};
use crate::linalg;
use crate::milnor::{JacClass, JacobianRing};
use crate::poly::{group_act, ExteriorWord, GroupElement, Monomial, Polynomial};

pub use export::{export_csv, export_json};
pub use frobenius::{check_g_frobenius, AxiomResult, FrobeniusReport};

/// One twisted sector `H_g ≅ Jac(W_g)` shifted by `|I_g|`.
#[derive(Clone, Debug)]
pub struct Sector {
    pub g: GroupElement,
    pub locus: FixedLocus,
    pub ring: JacobianRing,
    /// `|I_g| mod 2`.
    pub parity: u8,
}

impl Sector {
    pub fn dim(&self) -> usize {
        self.ring.dim()
    }
}

/// An element of `H`, one Jacobian-ring class per sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    parts: Vec<JacClass>,
}

impl Element {
    pub fn parts(&self) -> &[JacClass] {
        &self.parts
    }

    pub fn part(&self, s: usize) -> &JacClass {
        &self.parts[s]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(JacClass::is_zero)
    }

    pub fn add(&self, o: &Element) -> Element {
        Element { parts: self.parts.iter().zip(&o.parts).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Element) -> Element {
        Element { parts: self.parts.iter().zip(&o.parts).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Element {
        Element { parts: self.parts.iter().map(|a| a.scale(c)).collect() }
    }

    /// Sectors with a nonzero component.
    pub fn support(&self) -> Vec<usize> {
        (0..self.parts.len()).filter(|&s| !self.parts[s].is_zero()).collect()
    }
}

/// `(sector, basis index)` coordinates of a basis vector of `H`.
pub type BasisRef = (usize, usize);

pub struct OrbifoldAlgebra {
    inv: Invertible,
    group: SymmetryGroup,
    sectors: Vec<Sector>,
    basis: Vec<BasisRef>,
    /// `gens[s * |G| + t]`: the coefficient `c` with `1_g ∪ 1_h = c · 1_{gh}`, or `None` for 0.
    gens: Vec<Option<Polynomial>>,
    table: OnceLock<Vec<Vec<Element>>>,
}

impl OrbifoldAlgebra {
    pub fn new(inv: &Invertible, group: &SymmetryGroup) -> Result<OrbifoldAlgebra> {
        if group.nvars() != inv.nvars() {
            return Err(Error::InvalidArgument("group and polynomial have different numbers of variables".into()));
        }
        for g in group.elements() {
            inv.check_symmetry(g)?;
        }
        let sectors = crate::par::try_map(group.elements().to_vec(), |g| {
            let locus = inv.fixed_locus(&g);
            let ring = JacobianRing::new(&locus.w_g, inv.weights(), &locus.fixed)?;
            let parity = (locus.moving.len() % 2) as u8;
            Ok::<_, Error>(Sector { g, locus, ring, parity })
        })?;
        let basis = sectors.iter().enumerate().flat_map(|(s, sec)| (0..sec.dim()).map(move |k| (s, k))).collect();
        let mut alg = OrbifoldAlgebra {
            inv: inv.clone(),
            group: group.clone(),
            sectors,
            basis,
            gens: Vec::new(),
            table: OnceLock::new(),
        };
        let ng = alg.sectors.len();
        let pairs: Vec<(usize, usize)> = (0..ng).flat_map(|s| (0..ng).map(move |t| (s, t))).collect();
        alg.gens = crate::par::map(pairs, |(s, t)| alg.generator_product(&alg.sectors[s].g, &alg.sectors[t].g));
        Ok(alg)
    }

    /// The algebra for `G_W`.
    pub fn full(inv: &Invertible) -> Result<OrbifoldAlgebra> {
        OrbifoldAlgebra::new(inv, &inv.symmetry_group())
    }

    pub fn invertible(&self) -> &Invertible {
        &self.inv
    }

    pub fn group(&self) -> &SymmetryGroup {
        &self.group
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn nvars(&self) -> usize {
        self.inv.nvars()
    }

    pub fn sector_index(&self, g: &GroupElement) -> Result<usize> {
        self.group
            .index_of(g)
            .ok_or_else(|| Error::InvalidArgument(format!("({g}) is not in the group")))
    }

    pub fn identity_sector(&self) -> usize {
        0
    }

    /// Total dimension of `H`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisRef] {
        &self.basis
    }

    pub fn zero(&self) -> Element {
        Element { parts: self.sectors.iter().map(|s| JacClass::zero(s.dim())).collect() }
    }

    pub fn basis_element(&self, (s, k): BasisRef) -> Element {
        let mut e = self.zero();
        e.parts[s] = JacClass::basis(self.sectors[s].dim(), k);
        e
    }

    /// The generator `1_g`.
    pub fn generator(&self, s: usize) -> Element {
        self.from_polynomial(s, &Polynomial::one(self.nvars()))
    }

    /// The unit `1_e`.
    pub fn unit(&self) -> Element {
        self.generator(self.identity_sector())
    }

    /// `[f] · 1_g` for a polynomial `f`, reduced in `Jac(W_g)`.
    pub fn from_polynomial(&self, s: usize, f: &Polynomial) -> Element {
        let mut e = self.zero();
        e.parts[s] = self.sectors[s].ring.normal_form(f);
        e
    }

    /// Parity of a basis vector.
    pub fn parity(&self, (s, _): BasisRef) -> u8 {
        self.sectors[s].parity
    }

    /// `χ(g)` for the element of sector `s`.
    pub fn chi(&self, s: usize) -> Cyclotomic {
        self.sectors[s].g.chi()
    }

    /// `ρ_{g,h} = Π_{i∈I_h} (λ_i^g)^{-1}`.
    pub fn rho_cocycle(&self, g: &GroupElement, h: &GroupElement) -> Cyclotomic {
        rho_cocycle(g, h)
    }

    /// `g^*`: `f·1_h ↦ (^g f)·ρ_{g,h}·1_h`.
    pub fn group_action(&self, g: &GroupElement, a: &Element) -> Element {
        let mut out = self.zero();
        for (s, sec) in self.sectors.iter().enumerate() {
            if a.parts[s].is_zero() {
                continue;
            }
            let rho = rho_cocycle(g, &sec.g);
            let basis = sec.ring.basis();
            for (k, c) in a.parts[s].coeffs.iter().enumerate() {
                if !c.is_zero() {
                    out.parts[s].coeffs[k] = &(c * &g.monomial_scalar(&basis[k])) * &rho;
                }
            }
        }
        out
    }

    /// `c` with `1_g ∪ 1_h = c · 1_{gh}`, or `None` when the product vanishes.
    pub fn cup_generators(&self, g: &GroupElement, h: &GroupElement) -> Result<Option<Polynomial>> {
        let s = self.sector_index(g)?;
        let t = self.sector_index(h)?;
        Ok(self.gens[s * self.sectors.len() + t].clone())
    }

    fn generator_product(&self, g: &GroupElement, h: &GroupElement) -> Option<Polynomial> {
        let n = self.nvars();
        let gh = g.mul(h);
        let mut c = Polynomial::one(n);
        let mut sign_exp = 0usize;
        let mut h_before = 0usize;
        for (a, atom) in self.inv.atoms().iter().enumerate() {
            let g_mov = self.inv.atom_moving(a, g);
            let h_mov = self.inv.atom_moving(a, h);
            sign_exp += h_before * g_mov.len();
            h_before += h_mov.len();
            if g_mov.is_empty() || h_mov.is_empty() {
                continue;
            }
            let inverse = atom.vars.iter().all(|&v| *h.phase(v) == g.phase(v).neg());
            if !inverse {
                return None;
            }
            let l = g_mov.len();
            let hess = atom_twisted_hessian(&self.inv, a, g).expect("nontrivial atom component");
            let hess = if (l * (l - 1) / 2) % 2 == 1 { -&hess } else { hess };
            c = &c * &hess;
        }
        let sign = local_order_sign(&self.inv, g) * local_order_sign(&self.inv, h) * local_order_sign(&self.inv, &gh);
        let sign = if sign_exp % 2 == 1 { -sign } else { sign };
        Some(if sign < 0 { -&c } else { c })
    }

    /// Product of two basis vectors.
    pub fn cup_basis(&self, (s, k): BasisRef, (t, l): BasisRef) -> Element {
        let f = Polynomial::term(self.sectors[s].ring.basis()[k].clone(), Cyclotomic::one());
        let h = Polynomial::term(self.sectors[t].ring.basis()[l].clone(), Cyclotomic::one());
        self.cup_lifted(s, &f, t, &h)
    }

    /// `(f·1_g) ∪ (h·1_{g'})` from arbitrary polynomial lifts `f`, `h`:
    /// the class of `f · ^g h · c` in `Jac(W_{gg'})`.
    pub fn cup_lifted(&self, s: usize, f: &Polynomial, t: usize, h: &Polynomial) -> Element {
        let mut out = self.zero();
        let Some(c) = &self.gens[s * self.sectors.len() + t] else {
            return out;
        };
        let g = &self.sectors[s].g;
        let target = self.group.index_of(&g.mul(&self.sectors[t].g)).expect("closed under products");
        let gh = group_act(g, h).expect("dimensions agree");
        let prod = &(f * &gh) * c;
        out.parts[target] = self.sectors[target].ring.normal_form(&prod);
        out
    }

    fn table(&self) -> &Vec<Vec<Element>> {
        self.table.get_or_init(|| {
            let rows: Vec<BasisRef> = self.basis.clone();
            crate::par::map(rows, |a| self.basis.iter().map(|&b| self.cup_basis(a, b)).collect())
        })
    }

    fn flat_index(&self, (s, k): BasisRef) -> usize {
        self.basis.iter().position(|&b| b == (s, k)).expect("basis vector")
    }

    /// Coordinates `(basis vector, coefficient)` of the nonzero entries.
    pub fn coordinates(&self, a: &Element) -> Vec<(usize, Cyclotomic)> {
        let mut out = Vec::new();
        let mut idx = 0;
        for part in &a.parts {
            for c in &part.coeffs {
                if !c.is_zero() {
                    out.push((idx, c.clone()));
                }
                idx += 1;
            }
        }
        out
    }

    pub fn cup(&self, a: &Element, b: &Element) -> Element {
        let table = self.table();
        let mut out = self.zero();
        let ca = self.coordinates(a);
        let cb = self.coordinates(b);
        for (i, x) in &ca {
            for (j, y) in &cb {
                let p = &table[*i][*j];
                if !p.is_zero() {
                    out = out.add(&p.scale(&(x * y)));
                }
            }
        }
        out
    }

    /// `η(α, β) = Res(identity component of α ∪ β)`.
    pub fn pairing_eta(&self, a: &Element, b: &Element) -> Cyclotomic {
        let p = self.cup(a, b);
        let e = self.identity_sector();
        self.sectors[e].ring.residue(&p.parts[e])
    }

    /// Gram matrix of `η` on the basis of `H`.
    pub fn gram_matrix(&self) -> Vec<Vec<Cyclotomic>> {
        let b: Vec<Element> = self.basis.iter().map(|&r| self.basis_element(r)).collect();
        crate::par::map(b.clone(), |x| b.iter().map(|y| self.pairing_eta(&x, y)).collect())
    }

    pub fn describe(&self, a: &Element) -> String {
        let mut parts = Vec::new();
        for (s, sec) in self.sectors.iter().enumerate() {
            if a.parts[s].is_zero() {
                continue;
            }
            let f = sec.ring.lift(&a.parts[s]);
            parts.push(format!("({f})*1[{}]", sec.g));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Replaces the canonical lift of a class in sector `s` by a random
    /// representative of the same class: adds `Σ r_j ∂_j W_g` over fixed
    /// variables and `x_i r_i` over moving ones, with `r` random of bounded degree.
    pub fn perturbed_lift<R: Rng>(&self, s: usize, f: &Polynomial, rng: &mut R) -> Polynomial {
        let n = self.nvars();
        let sec = &self.sectors[s];
        let mut out = f.clone();
        for &j in &sec.locus.fixed {
            let r = random_polynomial(n, 2, rng);
            out = &out + &(&r * &sec.locus.w_g.derivative(j));
        }
        for &i in &sec.locus.moving {
            let r = random_polynomial(n, 2, rng);
            out = &out + &(&r * &Polynomial::var(n, i));
        }
        out
    }

    /// The `G`-invariant subspace of `H` and its product table.
    pub fn invariant_subalgebra(&self) -> Result<InvariantSubalgebra> {
        let mut basis = Vec::new();
        for (s, sec) in self.sectors.iter().enumerate() {
            let d = sec.dim();
            // Rows of `g − 1` on the coordinates of `H_s`, one block per `g`.
            let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
            for g in self.group.elements() {
                let mut block = vec![vec![Cyclotomic::zero(); d]; d];
                for k in 0..d {
                    let img = self.group_action(g, &self.basis_element((s, k)));
                    for (j, c) in img.parts[s].coeffs.iter().enumerate() {
                        block[j][k] = c.clone();
                    }
                    block[k][k] -= &Cyclotomic::one();
                }
                rows.extend(block);
            }
            for v in linalg::kernel(&rows, d) {
                let mut e = self.zero();
                e.parts[s] = JacClass { coeffs: v, parity: sec.parity };
                basis.push(e);
            }
        }
        let coords: Vec<Vec<Cyclotomic>> = basis.iter().map(|e| self.dense(e)).collect();
        let mut table = Vec::new();
        for a in &basis {
            let mut row = Vec::new();
            for b in &basis {
                let p = self.dense(&self.cup(a, b));
                let x = linalg::solve_columns(&coords, &p)
                    .ok_or_else(|| Error::NotInvariant(format!("{} ∪ {}", self.describe(a), self.describe(b))))?;
                row.push(x);
            }
            table.push(row);
        }
        Ok(InvariantSubalgebra { basis, table })
    }

    /// Flat coordinate vector over the basis of `H`.
    pub fn dense(&self, a: &Element) -> Vec<Cyclotomic> {
        a.parts.iter().flat_map(|p| p.coeffs.iter().cloned()).collect()
    }

    pub fn basis_label(&self, r: BasisRef) -> String {
        let (s, k) = r;
        format!("{}*1[{}]", self.sectors[s].ring.basis()[k], self.sectors[s].g)
    }

    #[doc(hidden)]
    pub fn flat(&self, r: BasisRef) -> usize {
        self.flat_index(r)
    }
}

/// Basis and structure constants of the invariant subalgebra.
#[derive(Clone, Debug)]
pub struct InvariantSubalgebra {
    pub basis: Vec<Element>,
    /// `table[i][j]` expresses `basis[i] ∪ basis[j]` in `basis`.
    pub table: Vec<Vec<Vec<Cyclotomic>>>,
}

/// `ρ_{g,h} = Π_{i∈I_h} (λ_i^g)^{-1}`.
pub fn rho_cocycle(g: &GroupElement, h: &GroupElement) -> Cyclotomic {
    let total = h.moving().iter().fold(Phase::zero(), |acc, &i| acc.add(g.phase(i)));
    root_of_unity(&total.neg())
}

/// Sign relating `e_{I_g}` in increasing global order to the product of
/// the per-atom generators in each atom's own variable order.
fn local_order_sign(inv: &Invertible, g: &GroupElement) -> i32 {
    let mut idx = Vec::new();
    for (a, atom) in inv.atoms().iter().enumerate() {
        for k in inv.atom_moving(a, g) {
            idx.push(atom.vars[k]);
        }
    }
    ExteriorWord::from_indices(&idx).expect("distinct indices").0
}

fn one_minus(c: &Cyclotomic) -> Cyclotomic {
    &Cyclotomic::one() - c
}

/// `Hess^g` of atom `a` of `inv`, as a polynomial in all variables.
pub fn atom_twisted_hessian(inv: &Invertible, a: usize, g: &GroupElement) -> Result<Polynomial> {
    let atom = &inv.atoms()[a];
    let n = inv.nvars();
    let m = atom.len();
    let lam: Vec<Cyclotomic> = atom.vars.iter().map(|&v| g.lambda(v)).collect();
    let l = atom.vars.iter().take_while(|&&v| !g.phase(v).is_zero()).count();
    if atom.vars.iter().all(|&v| g.phase(v).is_zero()) {
        return Err(Error::IdentityElement);
    }
    let mut e = vec![0u32; n];
    let coef = match atom.kind {
        AtomKind::Fermat => {
            e[atom.vars[0]] = atom.exps[0] - 2;
            &Cyclotomic::from_int(atom.exps[0] as i64) / &one_minus(&lam[0])
        }
        AtomKind::Loop => {
            let prod: i64 = atom.exps.iter().map(|&x| x as i64).product();
            let sign = if m % 2 == 0 { -1 } else { 1 };
            let mut den = Cyclotomic::one();
            for k in 0..m {
                e[atom.vars[k]] = atom.exps[k] - 1;
                den = &den * &one_minus(&lam[k]);
            }
            &Cyclotomic::from_int(sign + prod) / &den
        }
        AtomKind::Chain => {
            let mut num = Cyclotomic::one();
            let mut den = Cyclotomic::one();
            for k in 0..l {
                num = &num * &Cyclotomic::from_int(atom.exps[k] as i64);
                den = &den * &one_minus(&lam[k]);
                e[atom.vars[k]] = atom.exps[k] - if k == 0 { 2 } else { 1 };
            }
            if l < m {
                e[atom.vars[l]] += 1;
            }
            &num / &den
        }
    };
    Ok(Polynomial::term(Monomial(e), coef))
}

/// `Hess^g(W)` for an elementary invertible polynomial.
pub fn twisted_hessian(inv: &Invertible, g: &GroupElement) -> Result<Polynomial> {
    if inv.atoms().len() != 1 {
        return Err(Error::InvalidArgument("the twisted Hessian is defined for a single atom".into()));
    }
    atom_twisted_hessian(inv, 0, g)
}

fn random_polynomial<R: Rng>(n: usize, max_deg: u32, rng: &mut R) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..3 {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
        let c = rng.gen_range(-3i64..=3);
        p.add_term(Monomial(e), &Cyclotomic::from_int(c));
    }
    p
}

/// Products of all pairs of basis vectors.
pub fn structure_constants(alg: &OrbifoldAlgebra) -> Vec<(BasisRef, BasisRef, Element)> {
    let mut out = Vec::new();
    for &a in alg.basis() {
        for &b in alg.basis() {
            out.push((a, b, alg.cup_basis(a, b)));
        }
    }
    out
}

/// `(g, dim H_g, parity)` for every sector.
pub fn sector_dimensions(alg: &OrbifoldAlgebra) -> Vec<(GroupElement, usize, u8)> {
    alg.sectors.iter().map(|s| (s.g.clone(), s.dim(), s.parity)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::poly::parse_polynomial_in;

    #[test]
    fn invariant_subspaces() {
        // x^3 under G_W: x scales by ζ_3 and each twisted generator by χ^{-1}, so only 1 survives.
        let alg = OrbifoldAlgebra::full(&Invertible::fermat(3)).unwrap();
        let sub = alg.invariant_subalgebra().unwrap();
        assert_eq!(sub.basis.len(), 1);
        assert_eq!(sub.table[0][0], vec![Cyclotomic::one()]);
        // With the trivial group everything is invariant.
        let inv = Invertible::fermat(4);
        let plain = OrbifoldAlgebra::new(&inv, &SymmetryGroup::trivial(1)).unwrap();
        assert_eq!(plain.invariant_subalgebra().unwrap().basis.len(), 3);
        // x^4 under ⟨1/2⟩: 1 and x^2 in the identity sector.
        let half = inv.group_from_spec("gens:1/2").unwrap();
        let sub = OrbifoldAlgebra::new(&inv, &half).unwrap().invariant_subalgebra().unwrap();
        assert_eq!(sub.basis.len(), 2);
    }

    #[test]
    fn fermat_cubic_sectors() {
        let inv = Invertible::fermat(3);
        let alg = OrbifoldAlgebra::full(&inv).unwrap();
        let dims: Vec<(usize, u8)> = alg.sectors().iter().map(|s| (s.dim(), s.parity)).collect();
        assert_eq!(dims, vec![(2, 0), (1, 1), (1, 1)]);
        let g = GroupElement::parse("1/3").unwrap();
        let gi = g.inv();
        let c = alg.cup_generators(&g, &gi).unwrap().unwrap();
        let z = Cyclotomic::zeta_pow(3, 1);
        let expected = Polynomial::term(Monomial(vec![1]), &Cyclotomic::from_int(3) / &(&Cyclotomic::one() - &z));
        assert_eq!(c, expected);
        assert!(alg.cup_generators(&g, &g).unwrap().is_none());
        assert_eq!(rho_cocycle(&g, &g), Cyclotomic::zeta_pow(3, -1));
        let s = alg.sector_index(&g).unwrap();
        let t = alg.sector_index(&gi).unwrap();
        let eta = alg.pairing_eta(&alg.generator(s), &alg.generator(t));
        assert_eq!(eta, &Cyclotomic::one() / &(&Cyclotomic::one() - &z));
    }

    #[test]
    fn unit_and_restriction() {
        let inv = Invertible::chain(&[2, 2, 2]).unwrap();
        let alg = OrbifoldAlgebra::full(&inv).unwrap();
        let u = alg.unit();
        for &b in alg.basis() {
            let x = alg.basis_element(b);
            assert_eq!(alg.cup(&u, &x), x);
            assert_eq!(alg.cup(&x, &u), x);
        }
        let g = GroupElement::parse("1/2,0,0").unwrap();
        let s = alg.sector_index(&g).unwrap();
        let f = parse_polynomial_in("x1 + x3", 3).unwrap();
        let lhs = alg.cup(&alg.from_polynomial(0, &f), &alg.generator(s));
        assert_eq!(lhs, alg.from_polynomial(s, &parse_polynomial_in("x3", 3).unwrap()));
    }

    #[test]
    fn loop_generator_product() {
        let inv = Invertible::loop_type(&[2, 2]).unwrap();
        let alg = OrbifoldAlgebra::full(&inv).unwrap();
        for g in alg.group().elements().iter().filter(|g| !g.is_identity()) {
            let c = alg.cup_generators(g, &g.inv()).unwrap().unwrap();
            let den = &(&g.lambda(0) - &Cyclotomic::one()) * &(&g.lambda(1) - &Cyclotomic::one());
            let expected = Polynomial::term(Monomial(vec![1, 1]), &Cyclotomic::from_int(-3) / &den);
            assert_eq!(c, expected);
        }
        assert_eq!(inv.weights(), &[rat(1, 3), rat(1, 3)]);
    }
}
