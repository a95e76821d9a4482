//! Dense twisted Hochschild cochains `C^p(A, A[G])`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::scalar::Z12;

/// A multilinear map `A^{⊗p} → A` stored densely; the entry for inputs
/// `e_{a_1} ⊗ ⋯ ⊗ e_{a_p}` and output `e_c` sits at `((a_1 d + a_2) d + ⋯) d + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    pub dim: usize,
    pub arity: usize,
    pub data: Vec<Z12>,
}

impl Tensor {
    pub fn zero(dim: usize, arity: usize) -> Tensor {
        Tensor { dim, arity, data: vec![Z12::ZERO; dim.pow(arity as u32 + 1)] }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Z12::is_zero)
    }

    /// Coefficients drawn uniformly from `{−1, 0, 1}`.
    pub fn random<R: Rng>(dim: usize, arity: usize, rng: &mut R) -> Tensor {
        let data = (0..dim.pow(arity as u32 + 1)).map(|_| Z12::int(rng.gen_range(-1..=1))).collect();
        Tensor { dim, arity, data }
    }

    /// The output vector for basis inputs at flat index `base`.
    pub fn row(&self, base: usize) -> &[Z12] {
        &self.data[base * self.dim..(base + 1) * self.dim]
    }

    /// Adds `scale · T(v_1, …, v_p)` to `out`, for sparse input vectors.
    pub fn eval_into(&self, slots: &[&[(usize, Z12)]], scale: Z12, out: &mut [Z12]) {
        fn rec(t: &Tensor, slots: &[&[(usize, Z12)]], base: usize, coef: Z12, out: &mut [Z12]) {
            match slots.split_first() {
                None => {
                    for (o, &x) in out.iter_mut().zip(t.row(base)) {
                        if !x.is_zero() {
                            *o += coef * x;
                        }
                    }
                }
                Some((first, rest)) => {
                    for &(i, c) in first.iter() {
                        rec(t, rest, base * t.dim + i, coef * c, out);
                    }
                }
            }
        }
        if !scale.is_zero() {
            rec(self, slots, 0, scale, out);
        }
    }

    fn add_scaled(&mut self, o: &Tensor, s: Z12) {
        for (x, &y) in self.data.iter_mut().zip(&o.data) {
            if !y.is_zero() {
                *x += s * y;
            }
        }
    }
}

/// A cochain in `C^•(A, A[G])`: a finite sum of homogeneous parts `φ° g`,
/// keyed by `(arity, sector)`. Zero parts are never stored, so equality is
/// equality of cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub dim: usize,
    parts: BTreeMap<(usize, usize), Tensor>,
}

impl Cochain {
    pub fn zero(dim: usize) -> Cochain {
        Cochain { dim, parts: BTreeMap::new() }
    }

    pub fn single(sector: usize, t: Tensor) -> Cochain {
        let mut c = Cochain::zero(t.dim);
        c.add_part(sector, t, Z12::ONE);
        c
    }

    pub fn add_part(&mut self, sector: usize, t: Tensor, s: Z12) {
        if s.is_zero() || t.is_zero() {
            return;
        }
        let key = (t.arity, sector);
        match self.parts.get_mut(&key) {
            Some(old) => {
                old.add_scaled(&t, s);
                if old.is_zero() {
                    self.parts.remove(&key);
                }
            }
            None => {
                let mut t = t;
                if s != Z12::ONE {
                    t.data.iter_mut().for_each(|x| *x = *x * s);
                }
                self.parts.insert(key, t);
            }
        }
    }

    /// Iterates `(arity, sector, φ°)` over nonzero parts.
    pub fn parts(&self) -> impl Iterator<Item = (usize, usize, &Tensor)> {
        self.parts.iter().filter(|(_, t)| !t.is_zero()).map(|(&(p, g), t)| (p, g, t))
    }

    pub fn part(&self, arity: usize, sector: usize) -> Option<&Tensor> {
        self.parts.get(&(arity, sector))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.values().all(Tensor::is_zero)
    }

    pub fn add(&self, o: &Cochain) -> Cochain {
        self.add_scaled(o, Z12::ONE)
    }

    pub fn sub(&self, o: &Cochain) -> Cochain {
        self.add_scaled(o, Z12::int(-1))
    }

    pub fn add_scaled(&self, o: &Cochain, s: Z12) -> Cochain {
        let mut out = self.clone();
        for (&(_, g), t) in &o.parts {
            out.add_part(g, t.clone(), s);
        }
        out
    }

    pub fn scale(&self, s: Z12) -> Cochain {
        Cochain::zero(self.dim).add_scaled(self, s)
    }

    pub fn neg(&self) -> Cochain {
        self.scale(Z12::int(-1))
    }

    /// The part of arity `p`.
    pub fn arity_part(&self, p: usize) -> Cochain {
        let mut out = Cochain::zero(self.dim);
        for (&(q, g), t) in &self.parts {
            if q == p {
                out.add_part(g, t.clone(), Z12::ONE);
            }
        }
        out
    }

    /// Whether every nonzero part has arity `p`.
    pub fn is_homogeneous(&self, p: usize) -> bool {
        self.parts().all(|(q, _, _)| q == p)
    }

    /// Number of nonzero coefficients.
    pub fn support(&self) -> usize {
        self.parts().map(|(_, _, t)| t.data.iter().filter(|x| !x.is_zero()).count()).sum()
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, g, t) in self.parts() {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            write!(f, "[arity {p}, sector {g}]")?;
            for (k, x) in t.data.iter().enumerate() {
                if !x.is_zero() {
                    write!(f, " {k}:{x}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
