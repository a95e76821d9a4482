//! Finite-dimensional associative algebras with a group of automorphisms and
//! an optional central curving element.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::scalar::Z12;

pub type Matrix = Vec<Vec<Z12>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    let mut out = vec![vec![Z12::ZERO; d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn identity_matrix(d: usize) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| if i == j { Z12::ONE } else { Z12::ZERO }).collect()).collect()
}

/// A finite matrix group, closed under products; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    matrices: Vec<Matrix>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Closes the generators under multiplication. Fails beyond `limit` elements.
    pub fn generate(d: usize, gens: &[Matrix], limit: usize) -> Result<FiniteGroup> {
        for g in gens {
            if g.len() != d || g.iter().any(|r| r.len() != d) {
                return Err(Error::InvalidArgument(format!("group generator is not {d}×{d}")));
            }
        }
        let mut matrices = vec![identity_matrix(d)];
        let mut index: HashMap<Matrix, usize> = HashMap::from([(matrices[0].clone(), 0)]);
        let mut frontier = 0;
        while frontier < matrices.len() {
            for g in gens {
                let prod = mat_mul(&matrices[frontier], g);
                if !index.contains_key(&prod) {
                    if matrices.len() == limit {
                        return Err(Error::InvalidArgument(format!("group generated has more than {limit} elements")));
                    }
                    index.insert(prod.clone(), matrices.len());
                    matrices.push(prod);
                }
            }
            frontier += 1;
        }
        let n = matrices.len();
        let table: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| index[&mat_mul(&matrices[i], &matrices[j])]).collect()).collect();
        let inverse = (0..n).map(|i| (0..n).find(|&j| table[i][j] == 0).expect("finite group")).collect();
        Ok(FiniteGroup { matrices, table, inverse })
    }

    pub fn trivial(d: usize) -> FiniteGroup {
        FiniteGroup { matrices: vec![identity_matrix(d)], table: vec![vec![0]], inverse: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }
}

/// An associative algebra with basis `e_0..e_{d−1}`, structure constants
/// `e_a e_b = Σ_c mult[a][b][c] e_c`, a unit, an optional central curving
/// element `W`, and a group acting by automorphisms that fix `W`.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    pub name: String,
    dim: usize,
    mult: Vec<Z12>,
    unit: Vec<Z12>,
    curving: Option<Vec<Z12>>,
    group: FiniteGroup,
}

impl FiniteAlgebra {
    /// Validates associativity, the unit, centrality of `W` and that the
    /// group acts by automorphisms fixing `W`.
    pub fn new(
        name: &str,
        dim: usize,
        mult: Vec<Z12>,
        unit: Vec<Z12>,
        curving: Option<Vec<Z12>>,
        group: FiniteGroup,
    ) -> Result<FiniteAlgebra> {
        if mult.len() != dim * dim * dim || unit.len() != dim || curving.as_ref().is_some_and(|w| w.len() != dim) {
            return Err(Error::InvalidArgument(format!("structure data does not match dimension {dim}")));
        }
        if group.matrix(0).len() != dim {
            return Err(Error::InvalidArgument("group matrices do not match the algebra dimension".into()));
        }
        let alg = FiniteAlgebra { name: name.to_string(), dim, mult, unit, curving, group };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        let basis = |a: usize| -> Vec<Z12> { (0..d).map(|i| if i == a { Z12::ONE } else { Z12::ZERO }).collect() };
        for a in 0..d {
            let ea = basis(a);
            if self.product(&self.unit, &ea) != ea || self.product(&ea, &self.unit) != ea {
                return Err(Error::InvalidArgument(format!("{}: the unit does not act as identity on e_{a}", self.name)));
            }
            for b in 0..d {
                let eb = basis(b);
                let ab = self.product(&ea, &eb);
                for c in 0..d {
                    let ec = basis(c);
                    if self.product(&ab, &ec) != self.product(&ea, &self.product(&eb, &ec)) {
                        return Err(Error::InvalidArgument(format!("{}: product is not associative at ({a},{b},{c})", self.name)));
                    }
                }
                for g in 0..self.group.order() {
                    let lhs = self.act(g, &ab);
                    let rhs = self.product(&self.act(g, &ea), &self.act(g, &eb));
                    if lhs != rhs {
                        return Err(Error::InvalidArgument(format!("{}: group element {g} is not an automorphism", self.name)));
                    }
                }
            }
            if let Some(w) = &self.curving {
                if self.product(w, &ea) != self.product(&ea, w) {
                    return Err(Error::InvalidArgument(format!("{}: W is not central", self.name)));
                }
            }
        }
        if let Some(w) = &self.curving {
            for g in 0..self.group.order() {
                if &self.act(g, w) != w {
                    return Err(Error::InvalidArgument(format!("{}: group element {g} does not fix W", self.name)));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn unit(&self) -> &[Z12] {
        &self.unit
    }

    pub fn curving(&self) -> Option<&[Z12]> {
        self.curving.as_deref()
    }

    /// Structure constants, indexed `(a·d + b)·d + c`.
    pub fn structure(&self) -> &[Z12] {
        &self.mult
    }

    pub fn product(&self, x: &[Z12], y: &[Z12]) -> Vec<Z12> {
        let d = self.dim;
        let mut out = vec![Z12::ZERO; d];
        for a in 0..d {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..d {
                if y[b].is_zero() {
                    continue;
                }
                let s = x[a] * y[b];
                for c in 0..d {
                    out[c] += s * self.mult[(a * d + b) * d + c];
                }
            }
        }
        out
    }

    /// `^g x`.
    pub fn act(&self, g: usize, x: &[Z12]) -> Vec<Z12> {
        let m = self.group.matrix(g);
        (0..self.dim).map(|i| (0..self.dim).fold(Z12::ZERO, |acc, j| acc + m[i][j] * x[j])).collect()
    }

    /// `Q[x]/(x^n)` with the cyclic group of order `order` acting by
    /// `x ↦ ζ_order x`, and optional curving `W = x^w`.
    pub fn truncated_polynomial(n: usize, order: i64, w: Option<usize>) -> Result<FiniteAlgebra> {
        if n == 0 {
            return Err(Error::InvalidArgument("Q[x]/(x^0) is the zero ring".into()));
        }
        let mut mult = vec![Z12::ZERO; n * n * n];
        for a in 0..n {
            for b in 0..n {
                if a + b < n {
                    mult[(a * n + b) * n + a + b] = Z12::ONE;
                }
            }
        }
        let mut unit = vec![Z12::ZERO; n];
        unit[0] = Z12::ONE;
        let curving = match w {
            Some(e) if e >= n => return Err(Error::InvalidArgument(format!("x^{e} vanishes in Q[x]/(x^{n})"))),
            Some(e) => {
                let mut v = vec![Z12::ZERO; n];
                v[e] = Z12::ONE;
                Some(v)
            }
            None => None,
        };
        let gen: Matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Z12::root_of_unity(order, i as i64) } else { Ok(Z12::ZERO) }).collect())
            .collect::<Result<_>>()?;
        let group = FiniteGroup::generate(n, &[gen], 64)?;
        let wname = w.map(|e| format!(", W = x^{e}")).unwrap_or_default();
        FiniteAlgebra::new(&format!("Q[x]/(x^{n}), Z/{order}{wname}"), n, mult, unit, curving, group)
    }

    /// The group algebra `Q[Z/m]` with trivial group action.
    pub fn cyclic_group_algebra(m: usize) -> Result<FiniteAlgebra> {
        if m == 0 {
            return Err(Error::InvalidArgument("Z/0 is not finite".into()));
        }
        let mut mult = vec![Z12::ZERO; m * m * m];
        for a in 0..m {
            for b in 0..m {
                mult[(a * m + b) * m + (a + b) % m] = Z12::ONE;
            }
        }
        let mut unit = vec![Z12::ZERO; m];
        unit[0] = Z12::ONE;
        FiniteAlgebra::new(&format!("Q[Z/{m}], trivial G"), m, mult, unit, None, FiniteGroup::trivial(m))
    }

    /// `A[G]` with `(a g)(b h) = a ^g b gh`, basis `e_a g` at index `a·|G| + g`,
    /// curving `W e`, and trivial group.
    pub fn crossed_product(&self) -> Result<FiniteAlgebra> {
        let d = self.dim;
        let n = self.group.order();
        let dim = d * n;
        let mut mult = vec![Z12::ZERO; dim * dim * dim];
        for a in 0..d {
            for g in 0..n {
                for b in 0..d {
                    let mut eb = vec![Z12::ZERO; d];
                    eb[b] = Z12::ONE;
                    let gb = self.act(g, &eb);
                    let mut ea = vec![Z12::ZERO; d];
                    ea[a] = Z12::ONE;
                    let prod = self.product(&ea, &gb);
                    for h in 0..n {
                        let gh = self.group.mul(g, h);
                        let (x, y) = (a * n + g, b * n + h);
                        for c in 0..d {
                            mult[(x * dim + y) * dim + c * n + gh] = prod[c];
                        }
                    }
                }
            }
        }
        let lift = |v: &[Z12]| -> Vec<Z12> {
            let mut out = vec![Z12::ZERO; dim];
            for a in 0..d {
                out[a * n] = v[a];
            }
            out
        };
        let unit = lift(&self.unit);
        let curving = self.curving.as_ref().map(|w| lift(w));
        FiniteAlgebra::new(&format!("({})[G]", self.name), dim, mult, unit, curving, FiniteGroup::trivial(dim))
    }

    pub fn from_fixture(f: &AlgebraFixture) -> Result<FiniteAlgebra> {
        let d = f.dim;
        let mut mult = Vec::with_capacity(d * d * d);
        if f.mult.len() != d {
            return Err(Error::InvalidArgument("mult must be a d×d×d array".into()));
        }
        for row in &f.mult {
            if row.len() != d {
                return Err(Error::InvalidArgument("mult must be a d×d×d array".into()));
            }
            for v in row {
                if v.len() != d {
                    return Err(Error::InvalidArgument("mult must be a d×d×d array".into()));
                }
                mult.extend(v.iter().map(FixtureScalar::value));
            }
        }
        let unit = f.unit.iter().map(FixtureScalar::value).collect();
        let curving = f.curving.as_ref().map(|w| w.iter().map(FixtureScalar::value).collect());
        let gens: Vec<Matrix> =
            f.generators.iter().map(|m| m.iter().map(|r| r.iter().map(FixtureScalar::value).collect()).collect()).collect();
        let group = FiniteGroup::generate(d, &gens, 64)?;
        FiniteAlgebra::new(f.name.as_deref().unwrap_or("fixture"), d, mult, unit, curving, group)
    }
}

/// A scalar in a fixture: an integer, or four integers `[c0, c1, c2, c3]`
/// meaning `Σ c_k ζ_12^k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FixtureScalar {
    Int(i64),
    Zeta12([i64; 4]),
}

impl FixtureScalar {
    fn value(&self) -> Z12 {
        match self {
            FixtureScalar::Int(n) => Z12::int(*n),
            FixtureScalar::Zeta12(c) => Z12(*c),
        }
    }
}

/// JSON description of a [`FiniteAlgebra`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFixture {
    pub name: Option<String>,
    pub dim: usize,
    /// `mult[a][b][c]`: coefficient of `e_c` in `e_a e_b`.
    pub mult: Vec<Vec<Vec<FixtureScalar>>>,
    pub unit: Vec<FixtureScalar>,
    #[serde(default)]
    pub curving: Option<Vec<FixtureScalar>>,
    /// Generators of the acting group, as `d×d` matrices acting on columns.
    #[serde(default)]
    pub generators: Vec<Vec<Vec<FixtureScalar>>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_polynomials() {
        let a = FiniteAlgebra::truncated_polynomial(3, 3, None).unwrap();
        assert_eq!(a.group().order(), 3);
        assert!(a.group().is_abelian());
        let b = FiniteAlgebra::truncated_polynomial(4, 3, Some(3)).unwrap();
        assert_eq!(b.curving().unwrap()[3], Z12::ONE);
        // x ↦ ix does not fix x³.
        assert!(FiniteAlgebra::truncated_polynomial(4, 4, Some(3)).is_err());
    }

    #[test]
    fn crossed_product_is_associative() {
        let a = FiniteAlgebra::truncated_polynomial(3, 3, None).unwrap();
        let b = a.crossed_product().unwrap();
        assert_eq!(b.dim(), 9);
        let c = FiniteAlgebra::truncated_polynomial(4, 3, Some(3)).unwrap().crossed_product().unwrap();
        assert!(c.curving().is_some());
    }

    #[test]
    fn fixture_round_trip() {
        let json = r#"{"name": "Q[Z/2]", "dim": 2,
            "mult": [[[1,0],[0,1]],[[0,1],[1,0]]], "unit": [1,0], "generators": []}"#;
        let f: AlgebraFixture = serde_json::from_str(json).unwrap();
        let a = FiniteAlgebra::from_fixture(&f).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.group().order(), 1);
        let bad = r#"{"dim": 1, "mult": [[[2]]], "unit": [1]}"#;
        assert!(FiniteAlgebra::from_fixture(&serde_json::from_str(bad).unwrap()).is_err());
    }
}
