//! Graded Jacobian rings `C[x_i : i ∈ vars]/(∂_i W)` by degreewise exact
//! row reduction: monomial bases, normal forms, the Hessian and the residue
//! pairing.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::cyclo::{fmt_rational, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Monomial, Polynomial};

/// A class in a Jacobian ring: coefficients over the ring's monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacClass {
    pub coeffs: Vec<Cyclotomic>,
    /// `Z/2` degree; 0 unless set by the caller.
    pub parity: u8,
}

impl JacClass {
    pub fn zero(dim: usize) -> JacClass {
        JacClass { coeffs: vec![Cyclotomic::zero(); dim], parity: 0 }
    }

    pub fn basis(dim: usize, k: usize) -> JacClass {
        let mut c = JacClass::zero(dim);
        c.coeffs[k] = Cyclotomic::one();
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    pub fn add(&self, o: &JacClass) -> JacClass {
        JacClass { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(), parity: self.parity }
    }

    pub fn sub(&self, o: &JacClass) -> JacClass {
        JacClass { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(), parity: self.parity }
    }

    pub fn scale(&self, c: &Cyclotomic) -> JacClass {
        JacClass { coeffs: self.coeffs.iter().map(|a| a * c).collect(), parity: self.parity }
    }
}

/// Reduction data for one monomial: its normal form as `(basis index, coefficient)` pairs.
type NormalForm = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
pub struct JacobianRing {
    n: usize,
    vars: Vec<usize>,
    w: Polynomial,
    q: Vec<Rational>,
    /// Common denominator turning weighted degrees into integers.
    scale: i64,
    /// Integer weights `scale · q_i`.
    iw: Vec<i64>,
    socle: i64,
    basis: Vec<Monomial>,
    table: HashMap<Monomial, NormalForm>,
    hess: Polynomial,
    hess_class: JacClass,
    socle_index: usize,
}

impl JacobianRing {
    /// Builds `Jac(W)` in the variables `vars` of an `N`-variable polynomial
    /// `w` with weights `q` (indexed globally). Monomials of `w` involving
    /// other variables must already be absent.
    pub fn new(w: &Polynomial, q: &[Rational], vars: &[usize]) -> Result<JacobianRing> {
        let n = w.nvars();
        let mut vars = vars.to_vec();
        vars.sort_unstable();
        if let Some((m, _)) = w.terms().find(|(m, _)| !m.supported_on(&vars)) {
            return Err(Error::InvalidArgument(format!("monomial {m} involves variables outside the ring")));
        }
        let scale = vars.iter().fold(BigInt::one(), |acc, &i| acc.lcm(q[i].denom()));
        let scale = scale.to_i64().ok_or_else(|| Error::InvalidArgument("weights too large".into()))?;
        let mut iw = vec![0i64; n];
        for &i in &vars {
            iw[i] = (&q[i] * BigInt::from(scale)).to_integer().to_i64().expect("small weight");
        }
        let socle_q: Rational = vars.iter().map(|&i| Rational::one() - &q[i] * BigInt::from(2)).sum();
        let socle = (socle_q * BigInt::from(scale)).to_integer().to_i64().expect("small degree");
        let partials: Vec<(usize, Polynomial)> = vars.iter().map(|&i| (i, w.derivative(i))).collect();
        let ring_base = RingShape { n, vars: vars.clone(), iw: iw.clone(), q: q.to_vec() };

        let max_w = vars.iter().map(|&i| iw[i]).max().unwrap_or(0);
        let degrees: Vec<i64> = (0..=socle + max_w).collect();
        let pieces = crate::par::map(degrees, |d| ring_base.reduce_degree(d, scale, &partials));

        let mut basis = Vec::new();
        let mut local: Vec<(Vec<Monomial>, Vec<(Monomial, Vec<(usize, Rational)>)>)> = Vec::new();
        for (d, piece) in pieces.into_iter().enumerate() {
            let d = d as i64;
            if d > socle {
                if !piece.basis.is_empty() {
                    return Err(Error::NonIsolated(format!(
                        "Jacobian ring of {w} is nonzero in degree {} above the socle degree",
                        fmt_rational(&Rational::new(d.into(), scale.into()))
                    )));
                }
                continue;
            }
            local.push((piece.basis, piece.reduced));
        }
        let mut table = HashMap::new();
        for (b, reduced) in local {
            let offset = basis.len();
            for (k, m) in b.iter().enumerate() {
                table.insert(m.clone(), vec![(offset + k, Rational::one())]);
            }
            for (m, nf) in reduced {
                table.insert(m, nf.into_iter().map(|(k, c)| (offset + k, c)).collect());
            }
            basis.extend(b);
        }
        let hess = classical_hessian(w, &vars);
        let mut ring = JacobianRing {
            n,
            vars,
            w: w.clone(),
            q: q.to_vec(),
            scale,
            iw,
            socle,
            basis,
            table,
            hess,
            hess_class: JacClass::zero(0),
            socle_index: 0,
        };
        let top: Vec<usize> = (0..ring.basis.len()).filter(|&k| ring.degree_scaled(&ring.basis[k]) == socle).collect();
        if top.len() != 1 {
            return Err(Error::NonIsolated(format!("socle of Jac({w}) has dimension {}", top.len())));
        }
        ring.socle_index = top[0];
        ring.hess_class = ring.normal_form(&ring.hess);
        if ring.hess_class.coeffs[ring.socle_index].is_zero() {
            return Err(Error::SocleDegenerate(format!("Jac({w})")));
        }
        Ok(ring)
    }

    /// `Jac(W)` of a polynomial in all its variables.
    pub fn full(w: &Polynomial, q: &[Rational]) -> Result<JacobianRing> {
        let vars: Vec<usize> = (0..w.nvars()).collect();
        JacobianRing::new(w, q, &vars)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.w
    }

    pub fn weights(&self) -> &[Rational] {
        &self.q
    }

    pub fn mu(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn socle_degree(&self) -> Rational {
        Rational::new(self.socle.into(), self.scale.into())
    }

    pub fn socle_index(&self) -> usize {
        self.socle_index
    }

    pub fn hessian(&self) -> &Polynomial {
        &self.hess
    }

    pub fn hessian_class(&self) -> &JacClass {
        &self.hess_class
    }

    fn degree_scaled(&self, m: &Monomial) -> i64 {
        m.0.iter().zip(&self.iw).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn degree(&self, m: &Monomial) -> Rational {
        Rational::new(self.degree_scaled(m).into(), self.scale.into())
    }

    /// Normal form of `f`. Monomials in variables outside the ring map to 0,
    /// so this is also the restriction to the ring's variables.
    pub fn normal_form(&self, f: &Polynomial) -> JacClass {
        let mut out = JacClass::zero(self.basis.len());
        for (m, c) in f.terms() {
            if !m.supported_on(&self.vars) {
                continue;
            }
            if let Some(nf) = self.table.get(m) {
                for (k, r) in nf {
                    out.coeffs[*k] += &(c * &Cyclotomic::from_rational(r.clone()));
                }
            }
        }
        out
    }

    /// Restriction `Π_g`: drops monomials involving variables outside the ring, then reduces.
    pub fn restrict(&self, f: &Polynomial) -> JacClass {
        self.normal_form(f)
    }

    /// Canonical lift: the class as a combination of basis monomials.
    pub fn lift(&self, c: &JacClass) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (k, x) in c.coeffs.iter().enumerate() {
            p.add_term(self.basis[k].clone(), x);
        }
        p
    }

    pub fn mul(&self, a: &JacClass, b: &JacClass) -> JacClass {
        self.normal_form(&(&self.lift(a) * &self.lift(b)))
    }

    /// Residue `Res(f) = μ · c_top(f) / c_top(hess)`.
    pub fn residue(&self, f: &JacClass) -> Cyclotomic {
        let top = &f.coeffs[self.socle_index];
        let h = &self.hess_class.coeffs[self.socle_index];
        &(top * &Cyclotomic::from_int(self.mu() as i64)) / h
    }

    pub fn residue_pairing(&self, a: &JacClass, b: &JacClass) -> Cyclotomic {
        self.residue(&self.mul(a, b))
    }

    /// Basis grouped by weighted degree.
    pub fn basis_by_degree(&self) -> Vec<BasisDegree> {
        let mut out: Vec<BasisDegree> = Vec::new();
        for m in &self.basis {
            let d = fmt_rational(&self.degree(m));
            match out.last_mut() {
                Some(last) if last.degree == d => last.monomials.push(m.0.clone()),
                _ => out.push(BasisDegree { degree: d, monomials: vec![m.0.clone()] }),
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisDegree {
    pub degree: String,
    pub monomials: Vec<Vec<u32>>,
}

struct RingShape {
    n: usize,
    vars: Vec<usize>,
    iw: Vec<i64>,
    q: Vec<Rational>,
}

struct DegreePiece {
    /// Basis monomials, ascending in the monomial order.
    basis: Vec<Monomial>,
    /// Normal forms of the non-basis monomials, indexed into `basis`.
    reduced: Vec<(Monomial, Vec<(usize, Rational)>)>,
}

impl RingShape {
    fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut e = vec![0u32; self.n];
        self.enumerate(0, d, &mut e, &mut out);
        out
    }

    fn enumerate(&self, k: usize, rest: i64, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k == self.vars.len() {
            if rest == 0 {
                out.push(Monomial(e.clone()));
            }
            return;
        }
        let v = self.vars[k];
        let w = self.iw[v];
        let mut x = 0;
        while x * w <= rest {
            e[v] = x as u32;
            self.enumerate(k + 1, rest - x * w, e, out);
            x += 1;
        }
        e[v] = 0;
    }

    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp_weighted(b, &self.q)
    }

    fn reduce_degree(&self, d: i64, scale: i64, partials: &[(usize, Polynomial)]) -> DegreePiece {
        let mut cols = self.monomials_of_degree(d);
        cols.sort_by(|a, b| self.cmp(b, a));
        let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (i, p) in partials {
            let shift = d - (scale - self.iw[*i]);
            if shift < 0 || p.is_zero() {
                continue;
            }
            for m in self.monomials_of_degree(shift) {
                let mut row = vec![Rational::zero(); cols.len()];
                for (t, c) in p.terms() {
                    let k = index[&t.mul(&m)];
                    row[k] += c.as_rational().expect("rational Jacobian relations");
                }
                rows.push(row);
            }
        }
        let pivots = linalg::rref(&mut rows);
        let free: Vec<usize> = (0..cols.len()).filter(|c| !pivots.contains(c)).collect();
        let pos_in_basis: HashMap<usize, usize> = {
            let mut ascending: Vec<usize> = free.clone();
            ascending.reverse();
            ascending.into_iter().enumerate().map(|(k, c)| (c, k)).collect()
        };
        let basis: Vec<Monomial> = free.iter().rev().map(|&c| cols[c].clone()).collect();
        let reduced = rows
            .iter()
            .zip(pivots.iter())
            .map(|(row, &p)| {
                let nf = free
                    .iter()
                    .filter(|&&c| !row[c].is_zero())
                    .map(|&c| (pos_in_basis[&c], -row[c].clone()))
                    .collect();
                (cols[p].clone(), nf)
            })
            .collect();
        DegreePiece { basis, reduced }
    }
}

/// `det(∂²W/∂x_i∂x_j)` over the listed variables; 1 for no variables.
pub fn classical_hessian(w: &Polynomial, vars: &[usize]) -> Polynomial {
    let n = w.nvars();
    let m: Vec<Vec<Polynomial>> =
        vars.iter().map(|&i| vars.iter().map(|&j| w.derivative(i).derivative(j)).collect()).collect();
    poly_determinant(&m, n)
}

/// Determinant of a square polynomial matrix by Laplace expansion along the first row.
pub fn poly_determinant(m: &[Vec<Polynomial>], n: usize) -> Polynomial {
    let k = m.len();
    if k == 0 {
        return Polynomial::one(n);
    }
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(n);
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * &poly_determinant(&minor, n);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::poly::parse_polynomial;

    fn ring(w: &str, q: &[Rational]) -> JacobianRing {
        JacobianRing::full(&parse_polynomial(w).unwrap(), q).unwrap()
    }

    #[test]
    fn fermat_cubic() {
        let j = ring("x1^3", &[rat(1, 3)]);
        assert_eq!(j.mu(), 2);
        assert_eq!(j.basis()[0], Monomial(vec![0]));
        assert_eq!(j.basis()[1], Monomial(vec![1]));
        assert!(j.normal_form(&parse_polynomial("x1^3").unwrap()).is_zero());
        assert!(j.normal_form(&parse_polynomial("x1^2").unwrap()).is_zero());
        let one = j.normal_form(&Polynomial::one(1));
        let x = j.normal_form(&parse_polynomial("x1").unwrap());
        assert_eq!(j.residue_pairing(&one, &x), Cyclotomic::from_rational(rat(1, 3)));
        assert!(j.residue_pairing(&one, &one).is_zero());
        assert_eq!(j.hessian(), &parse_polynomial("6*x1").unwrap());
        assert_eq!(j.residue(j.hessian_class()), Cyclotomic::from_int(2));
    }

    #[test]
    fn two_cubics() {
        let j = ring("x1^3 + x2^3", &[rat(1, 3), rat(1, 3)]);
        assert_eq!(j.mu(), 4);
    }

    #[test]
    fn empty_ring() {
        let j = JacobianRing::new(&Polynomial::zero(2), &[rat(1, 3), rat(1, 3)], &[]).unwrap();
        assert_eq!(j.mu(), 1);
        assert_eq!(j.hessian(), &Polynomial::one(2));
        assert_eq!(j.residue(&JacClass::basis(1, 0)), Cyclotomic::one());
    }

    #[test]
    fn loop_hessian() {
        let w = parse_polynomial("x1^2*x2 + x2^2*x1").unwrap();
        let h = classical_hessian(&w, &[0, 1]);
        let a = parse_polynomial("2*x2").unwrap();
        let b = crate::poly::parse_polynomial_in("2*x1", 2).unwrap();
        let c = parse_polynomial("2*x1 + 2*x2").unwrap();
        assert_eq!(h, &(&a * &b) - &(&c * &c));
    }
}
