//! Exact elements of `Z[ζ_12]`, the coefficient ring of the lab.
//!
//! Elements are stored in the basis `1, ζ, ζ², ζ³` of `Z[ζ_12]` (with
//! `ζ⁴ = ζ² − 1`), so equality is coefficientwise. Every root of unity of
//! order dividing 12 lives here, which covers actions of groups of exponent
//! 2, 3, 4, 6 and 12. Arithmetic panics on `i64` overflow instead of wrapping.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::Zero;

use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z12(pub [i64; 4]);

fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Z[ζ12] coefficient overflow")
}

fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Z[ζ12] coefficient overflow")
}

impl Z12 {
    pub const ZERO: Z12 = Z12([0; 4]);
    pub const ONE: Z12 = Z12([1, 0, 0, 0]);

    pub fn int(n: i64) -> Z12 {
        Z12([n, 0, 0, 0])
    }

    /// `ζ_12^k`.
    pub fn zeta12(k: i64) -> Z12 {
        let mut out = Z12::ONE;
        let z = Z12([0, 1, 0, 0]);
        for _ in 0..k.rem_euclid(12) {
            out = out * z;
        }
        out
    }

    /// `ζ_m^k` for `m` dividing 12.
    pub fn root_of_unity(m: i64, k: i64) -> Result<Z12> {
        if m <= 0 || 12 % m != 0 {
            return Err(Error::InvalidArgument(format!("ζ_{m} is not in Q(ζ_12)")));
        }
        Ok(Z12::zeta12(k * (12 / m)))
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn to_cyclotomic(self) -> Cyclotomic {
        let c: Vec<Rational> = self.0.iter().map(|&x| Rational::from_integer(x.into())).collect();
        Cyclotomic::new(12, &c)
    }

    /// Exact conversion; fails for non-integral elements or other moduli.
    pub fn from_cyclotomic(c: &Cyclotomic) -> Result<Z12> {
        if 12 % c.modulus() != 0 {
            return Err(Error::InvalidArgument(format!("{c} is not in Q(ζ_12)")));
        }
        let p = c.promote(12);
        let mut out = [0i64; 4];
        for (k, r) in p.coeffs().iter().enumerate() {
            if !r.is_integer() {
                return Err(Error::InvalidArgument(format!("{c} is not integral")));
            }
            out[k] = i64::try_from(r.to_integer()).map_err(|_| Error::InvalidArgument(format!("{c} is too large")))?;
        }
        Ok(Z12(out))
    }
}

impl Add for Z12 {
    type Output = Z12;
    fn add(self, o: Z12) -> Z12 {
        Z12([add(self.0[0], o.0[0]), add(self.0[1], o.0[1]), add(self.0[2], o.0[2]), add(self.0[3], o.0[3])])
    }
}

impl AddAssign for Z12 {
    fn add_assign(&mut self, o: Z12) {
        *self = *self + o;
    }
}

impl Neg for Z12 {
    type Output = Z12;
    fn neg(self) -> Z12 {
        Z12(self.0.map(|x| x.checked_neg().expect("Z[ζ12] coefficient overflow")))
    }
}

impl Sub for Z12 {
    type Output = Z12;
    fn sub(self, o: Z12) -> Z12 {
        self + (-o)
    }
}

impl Mul for Z12 {
    type Output = Z12;
    fn mul(self, o: Z12) -> Z12 {
        if self.is_zero() || o.is_zero() {
            return Z12::ZERO;
        }
        let mut p = [0i64; 7];
        for i in 0..4 {
            if self.0[i] == 0 {
                continue;
            }
            for j in 0..4 {
                p[i + j] = add(p[i + j], mul(self.0[i], o.0[j]));
            }
        }
        for k in (4..7).rev() {
            let c = p[k];
            p[k - 2] = add(p[k - 2], c);
            p[k - 4] = add(p[k - 4], -c);
        }
        Z12([p[0], p[1], p[2], p[3]])
    }
}

impl Zero for Z12 {
    fn zero() -> Z12 {
        Z12::ZERO
    }
    fn is_zero(&self) -> bool {
        Z12::is_zero(self)
    }
}

impl fmt::Display for Z12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cyclotomic())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        assert_eq!(Z12::zeta12(12), Z12::ONE);
        assert_eq!(Z12::zeta12(6), Z12::int(-1));
        let w = Z12::root_of_unity(3, 1).unwrap();
        assert_eq!(w * w * w, Z12::ONE);
        assert_eq!(Z12::ONE + w + w * w, Z12::ZERO);
        let i = Z12::root_of_unity(4, 1).unwrap();
        assert_eq!(i * i, Z12::int(-1));
        assert!(Z12::root_of_unity(5, 1).is_err());
    }

    #[test]
    fn matches_cyclotomic_arithmetic() {
        for a in 0..12 {
            for b in 0..12 {
                let x = Z12::zeta12(a) + Z12::int(2);
                let y = Z12::zeta12(b) - Z12::zeta12(a + 1);
                let want = &x.to_cyclotomic() * &y.to_cyclotomic();
                assert_eq!((x * y).to_cyclotomic(), want);
                assert_eq!(Z12::from_cyclotomic(&want).unwrap(), x * y);
            }
        }
    }
}
