//! Exact arithmetic: rationals, phases modulo 1 and cyclotomic fields.
//!
//! An element of `Q(ζ_m)` is stored as a coefficient vector in the power basis
//! `1, ζ_m, …, ζ_m^{φ(m)-1}`, reduced modulo the cyclotomic polynomial `Φ_m`.
//! Binary operations promote both operands to the lcm of their moduli.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

/// Builds the rational `n/d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Formats a rational as `a` or `a/b`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational number modulo 1, kept in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(Rational);

impl Phase {
    pub fn new(value: Rational) -> Phase {
        let floor = value.floor();
        Phase(value - floor)
    }

    pub fn from_frac(k: i64, m: i64) -> Phase {
        Phase::new(rat(k, m))
    }

    pub fn zero() -> Phase {
        Phase(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Order of `e^{2πi p}` in the circle group.
    pub fn order(&self) -> u64 {
        self.0.denom().to_u64().expect("phase denominator fits in u64")
    }

    pub fn add(&self, other: &Phase) -> Phase {
        Phase::new(&self.0 + &other.0)
    }

    pub fn neg(&self) -> Phase {
        Phase::new(-&self.0)
    }

    pub fn scale(&self, k: i64) -> Phase {
        Phase::new(&self.0 * BigInt::from(k))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.0))
    }
}

struct FieldData {
    phi: usize,
    /// `powers[k]` is `t^k mod Φ_m` for `0 <= k < m`.
    powers: Vec<Vec<BigInt>>,
    cyclo_poly: Vec<BigInt>,
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = &den[dl - 1];
    let mut quo = vec![BigInt::zero(); num.len() + 1 - dl];
    for i in (0..quo.len()).rev() {
        let c = &rem[i + dl - 1] / lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quo
}

fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); m as usize + 1];
    p[0] = BigInt::from(-1);
    p[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            p = poly_div_exact(&p, &field(d).cyclo_poly);
        }
    }
    p
}

fn build_field(m: u32) -> FieldData {
    let cyclo_poly = cyclotomic_polynomial(m);
    let phi = cyclo_poly.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..m {
        powers.push(cur.clone());
        let mut next = vec![BigInt::zero(); phi + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        let top = next[phi].clone();
        if !top.is_zero() {
            for (i, c) in cyclo_poly.iter().enumerate() {
                next[i] -= &top * c;
            }
        }
        next.truncate(phi);
        cur = next;
    }
    FieldData { phi, powers, cyclo_poly }
}

fn field(m: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().expect("field cache poisoned").get(&m) {
        return f.clone();
    }
    let built = Arc::new(build_field(m));
    cache
        .write()
        .expect("field cache poisoned")
        .entry(m)
        .or_insert(built)
        .clone()
}

/// Euler's totient, the degree of `Φ_m`.
pub fn totient(m: u32) -> usize {
    field(m).phi
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An element of the cyclotomic field `Q(ζ_m)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    m: u32,
    c: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds `Σ coeffs[k] ζ_m^k`; `coeffs` may have any length.
    pub fn new(m: u32, coeffs: &[Rational]) -> Cyclotomic {
        assert!(m >= 1, "modulus must be positive");
        let f = field(m);
        let mut c = vec![Rational::zero(); f.phi];
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &f.powers[k % m as usize];
            for (j, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    c[j] += a * Rational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic { m, c }
    }

    pub fn zero() -> Cyclotomic {
        Cyclotomic { m: 1, c: vec![Rational::zero()] }
    }

    pub fn one() -> Cyclotomic {
        Cyclotomic::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Cyclotomic {
        Cyclotomic { m: 1, c: vec![r] }
    }

    pub fn from_int(n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `ζ_m^k`.
    pub fn zeta_pow(m: u32, k: i64) -> Cyclotomic {
        let f = field(m);
        let k = k.rem_euclid(m as i64) as usize;
        let c = f.powers[k].iter().map(|x| Rational::from_integer(x.clone())).collect();
        Cyclotomic { m, c }
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_one())
    }

    /// Returns the value when it is a rational number.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn is_scalar(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    /// Rewrites the element in `Q(ζ_target)`; `target` must be a multiple of the modulus.
    pub fn promote(&self, target: u32) -> Cyclotomic {
        if target == self.m {
            return self.clone();
        }
        assert!(target % self.m == 0, "cannot promote Q(ζ_{}) into Q(ζ_{target})", self.m);
        let f = field(target);
        let step = (target / self.m) as usize;
        let mut c = vec![Rational::zero(); f.phi];
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &f.powers[(k * step) % target as usize];
            for (j, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    c[j] += a * Rational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic { m: target, c }
    }

    fn scalar_times(&self, s: &Rational) -> Cyclotomic {
        Cyclotomic { m: self.m, c: self.c.iter().map(|x| x * s).collect() }
    }

    fn aligned<'a>(a: &'a Cyclotomic, b: &'a Cyclotomic) -> (std::borrow::Cow<'a, Cyclotomic>, std::borrow::Cow<'a, Cyclotomic>) {
        use std::borrow::Cow;
        if a.m == b.m {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let m = lcm(a.m, b.m);
        let pa = if a.m == m { Cow::Borrowed(a) } else { Cow::Owned(a.promote(m)) };
        let pb = if b.m == m { Cow::Borrowed(b) } else { Cow::Owned(b.promote(m)) };
        (pa, pb)
    }

    fn add_ref(&self, other: &Cyclotomic) -> Cyclotomic {
        if other.is_scalar() {
            let mut out = self.clone();
            out.c[0] += &other.c[0];
            return out;
        }
        if self.is_scalar() {
            let mut out = other.clone();
            out.c[0] += &self.c[0];
            return out;
        }
        let (a, b) = Self::aligned(self, other);
        let c = a.c.iter().zip(b.c.iter()).map(|(x, y)| x + y).collect();
        Cyclotomic { m: a.m, c }
    }

    fn mul_ref(&self, other: &Cyclotomic) -> Cyclotomic {
        if other.is_scalar() {
            return self.scalar_times(&other.c[0]);
        }
        if self.is_scalar() {
            return other.scalar_times(&self.c[0]);
        }
        let (a, b) = Self::aligned(self, other);
        let m = a.m;
        let f = field(m);
        let mut conv = vec![Rational::zero(); 2 * f.phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let mut c = vec![Rational::zero(); f.phi];
        for (k, x) in conv.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if k < f.phi {
                c[k] += x;
                continue;
            }
            for (j, r) in f.powers[k % m as usize].iter().enumerate() {
                if !r.is_zero() {
                    c[j] += x * Rational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic { m, c }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Φ_m`.
    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyclotomic::from_rational(r.recip()));
        }
        let f = field(self.m);
        let modulus: Vec<Rational> = f.cyclo_poly.iter().map(|x| Rational::from_integer(x.clone())).collect();
        let s = rpoly::inverse_mod(&self.c, &modulus);
        Ok(Cyclotomic::new(self.m, &s))
    }

    pub fn checked_div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Cyclotomic {
        let base = if e < 0 { self.inv().expect("power of zero with negative exponent") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Smallest modulus `d` with the value in `Q(ζ_d)`, together with its coefficients there.
    pub fn minimal_form(&self) -> (u32, Vec<Rational>) {
        if let Some(r) = self.as_rational() {
            return (1, vec![r]);
        }
        let mut divisors: Vec<u32> = (1..=self.m).filter(|d| self.m % d == 0).collect();
        divisors.sort_unstable();
        for d in divisors {
            if d == self.m {
                break;
            }
            if let Some(c) = self.express_in(d) {
                return (d, c);
            }
        }
        (self.m, self.c.clone())
    }

    fn express_in(&self, d: u32) -> Option<Vec<Rational>> {
        let phi_d = totient(d);
        let cols: Vec<Vec<Rational>> = (0..phi_d)
            .map(|j| Cyclotomic::zeta_pow(d, j as i64).promote(self.m).c)
            .collect();
        crate::linalg::solve_columns(&cols, &self.c)
    }

    fn pretty(&self) -> String {
        let (d, c) = self.minimal_form();
        let mut parts: Vec<String> = Vec::new();
        for (k, a) in c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let coeff = fmt_rational(&a.abs());
            let neg = a.is_negative();
            let body = match k {
                0 => coeff,
                _ => {
                    let z = if k == 1 { format!("z{d}") } else { format!("z{d}^{k}") };
                    if a.abs().is_one() {
                        z
                    } else {
                        format!("{coeff}*{z}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{body}") } else { body });
            } else {
                parts.push(if neg { format!("- {body}") } else { format!("+ {body}") });
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Cyclotomic) -> bool {
        if self.m == other.m {
            return self.c == other.c;
        }
        let (a, b) = Self::aligned(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { m: self.m, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_ref(b));
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_ref(b));
forward_binop!(Div, div, |a: &Cyclotomic, b: &Cyclotomic| a
    .checked_div(b)
    .expect("cyclotomic division by zero"));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.m == rhs.m {
            for (x, y) in self.c.iter_mut().zip(rhs.c.iter()) {
                *x += y;
            }
        } else {
            *self = self.add_ref(rhs);
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.m == rhs.m {
            for (x, y) in self.c.iter_mut().zip(rhs.c.iter()) {
                *x -= y;
            }
        } else {
            *self = self.add_ref(&-rhs);
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_ref(rhs);
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (m, c) = self.minimal_form();
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("m", &m)?;
        st.serialize_field("c", &c.iter().map(fmt_rational).collect::<Vec<_>>())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            m: u32,
            c: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.m == 0 {
            return Err(serde::de::Error::custom("modulus must be positive"));
        }
        let c = raw
            .c
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Cyclotomic::new(raw.m, &c))
    }
}

/// Which field operation [`cyc_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Div,
}

/// Field arithmetic after promotion to the lcm modulus.
pub fn cyc_arith(a: &Cyclotomic, b: &Cyclotomic, op: ArithOp) -> Result<Cyclotomic> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// `e^{2πi p}` as `ζ_m^k` where `p = k/m` in lowest terms.
pub fn root_of_unity(p: &Phase) -> Cyclotomic {
    let m = p.order() as u32;
    let k = p.value().numer().to_i64().expect("phase numerator fits in i64");
    Cyclotomic::zeta_pow(m, k)
}

/// The quantum integer `[γ]_λ = 1 + λ + … + λ^{γ-1}`.
pub fn quantum_bracket(gamma: u32, lambda: &Cyclotomic) -> Result<Cyclotomic> {
    if gamma == 0 {
        return Err(Error::InvalidArgument("quantum bracket needs γ ≥ 1".into()));
    }
    let mut acc = Cyclotomic::zero();
    let mut p = Cyclotomic::one();
    for _ in 0..gamma {
        acc += &p;
        p = &p * lambda;
    }
    Ok(acc)
}

/// Dense univariate polynomials over `Q`, just enough for inversion modulo `Φ_m`.
mod rpoly {
    use super::Rational;
    use num_traits::Zero;

    fn trim(p: &mut Vec<Rational>) {
        while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
            p.pop();
        }
    }

    fn deg(p: &[Rational]) -> Option<usize> {
        p.iter().rposition(|x| !x.is_zero())
    }

    fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let db = deg(b).expect("division by zero polynomial");
        let mut r = a.to_vec();
        let mut q = vec![Rational::zero(); a.len().max(1)];
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let c = &r[dr] / &b[db];
            let shift = dr - db;
            for (i, bi) in b.iter().enumerate().take(db + 1) {
                let t = &c * bi;
                r[shift + i] -= t;
            }
            q[shift] += c;
        }
        trim(&mut r);
        trim(&mut q);
        (q, r)
    }

    fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let mut out = vec![Rational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(&mut out);
        out
    }

    /// `s` with `s·a ≡ 1 (mod modulus)`; `modulus` irreducible and `a` nonzero.
    pub fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Vec<Rational> {
        let (mut r0, mut r1) = (modulus.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::from_integer(1.into())]);
        while deg(&r1).map_or(false, |d| d > 0) {
            let (q, r) = divmod(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r1[0].clone();
        s1.iter().map(|x| x / &c).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(m, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let p12: Vec<i64> = cyclotomic_polynomial(12).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(p12, vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(1), 1);
        assert_eq!(totient(9), 6);
        assert_eq!(totient(24), 8);
    }

    #[test]
    fn basic_identities() {
        assert_eq!(z(3, 1) + z(3, 2), Cyclotomic::from_int(-1));
        assert_eq!(z(4, 1) * z(4, 1), Cyclotomic::from_int(-1));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn inverse_of_one_minus_zeta3() {
        let x = (Cyclotomic::one() - z(3, 1)).inv().unwrap();
        let expected = Cyclotomic::new(3, &[rat(2, 3), rat(1, 3)]);
        assert_eq!(x, expected);
        assert!((x * (Cyclotomic::one() - z(3, 1))).is_one());
    }

    #[test]
    fn division_by_zero() {
        assert!(matches!(Cyclotomic::zero().inv(), Err(Error::DivisionByZero)));
        assert!(cyc_arith(&z(5, 1), &Cyclotomic::zero(), ArithOp::Div).is_err());
    }

    #[test]
    fn pretty_uses_smallest_modulus() {
        let x = z(6, 2).promote(12);
        assert_eq!(x.to_string(), "z3");
        let y = Cyclotomic::new(3, &[rat(1, 3), rat(2, 3)]);
        assert_eq!(y.to_string(), "1/3 + 2/3*z3");
        assert_eq!(Cyclotomic::from_int(-2).to_string(), "-2");
        assert_eq!(z(4, 1).to_string(), "z4");
    }

    #[test]
    fn json_round_trip() {
        let x = Cyclotomic::new(3, &[rat(1, 3), rat(2, 3)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"m":3,"c":["1/3","2/3"]}"#);
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn roots_and_brackets() {
        assert!(root_of_unity(&Phase::zero()).is_one());
        assert_eq!(root_of_unity(&Phase::from_frac(1, 2)), Cyclotomic::from_int(-1));
        assert_eq!(root_of_unity(&Phase::from_frac(1, 3)), z(3, 1));
        assert!(quantum_bracket(3, &z(3, 1)).unwrap().is_zero());
        assert_eq!(quantum_bracket(3, &Cyclotomic::one()).unwrap(), Cyclotomic::from_int(3));
        assert!(quantum_bracket(0, &Cyclotomic::one()).is_err());
    }
}
