use std::fmt;

use num_traits::{One, Signed};

use super::{Exp, Poly, Scalar, ScalarError, MAX_PARAMS, NVARS};

/// A signed Laurent monomial `+-u^a d_1^{b_1} ... d_p^{b_p}`.
///
/// These are the values a torus character takes on a weight vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ToralScalar {
    pub sign: i8,
    pub u: i32,
    pub d: [i32; MAX_PARAMS],
}

impl Default for ToralScalar {
    fn default() -> Self {
        Self::one()
    }
}

impl ToralScalar {
    pub fn one() -> Self {
        ToralScalar { sign: 1, u: 0, d: [0; MAX_PARAMS] }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        ToralScalar { sign: 1, u: 2 * k, d: [0; MAX_PARAMS] }
    }

    /// `c_j`.
    pub fn c(j: usize) -> Self {
        let mut d = [0; MAX_PARAMS];
        d[j - 1] = 2;
        ToralScalar { sign: 1, u: 0, d }
    }

    pub fn neg(self) -> Self {
        ToralScalar { sign: -self.sign, ..self }
    }

    pub fn mul(self, o: Self) -> Self {
        let mut d = self.d;
        for i in 0..MAX_PARAMS {
            d[i] += o.d[i];
        }
        ToralScalar { sign: self.sign * o.sign, u: self.u + o.u, d }
    }

    pub fn inv(self) -> Self {
        let mut d = self.d;
        for x in d.iter_mut() {
            *x = -*x;
        }
        ToralScalar { sign: self.sign, u: -self.u, d }
    }

    pub fn pow(self, k: i32) -> Self {
        let mut d = self.d;
        for x in d.iter_mut() {
            *x *= k;
        }
        let sign = if k % 2 == 0 { 1 } else { self.sign };
        ToralScalar { sign, u: self.u * k, d }
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(self, k: i32) -> Self {
        ToralScalar { u: self.u + 2 * k, ..self }
    }

    /// `true` when the value is `+-q^k` for some integer `k`.
    pub fn is_pm_q_power(&self) -> bool {
        self.d.iter().all(|&x| x == 0) && self.u % 2 == 0
    }

    /// The integer `k` when the value is `+-q^k`.
    pub fn q_exponent(&self) -> Option<i32> {
        if self.is_pm_q_power() {
            Some(self.u / 2)
        } else {
            None
        }
    }

    pub fn is_pm_one(&self) -> bool {
        self.u == 0 && self.d.iter().all(|&x| x == 0)
    }

    /// Square root with positive sign; fails unless the value is a toral square.
    pub fn sqrt(&self) -> Result<Self, ScalarError> {
        if self.sign < 0 || self.u % 2 != 0 || self.d.iter().any(|x| x % 2 != 0) {
            return Err(ScalarError::NotToralSquare(self.to_string()));
        }
        let mut d = self.d;
        for x in d.iter_mut() {
            *x /= 2;
        }
        Ok(ToralScalar { sign: 1, u: self.u / 2, d })
    }

    pub fn to_scalar(&self) -> Scalar {
        let mut num: Exp = [0; NVARS];
        let mut den: Exp = [0; NVARS];
        let all = std::iter::once(self.u).chain(self.d.iter().copied());
        for (i, x) in all.enumerate() {
            if x >= 0 {
                num[i] = x as u16;
            } else {
                den[i] = (-x) as u16;
            }
        }
        Scalar::from_polys(
            Poly::monomial(num, (self.sign as i64).into()),
            Poly::monomial(den, 1.into()),
        )
    }

    pub fn from_scalar(s: &Scalar) -> Option<Self> {
        let (n, d) = (s.numer(), s.denom());
        if !n.is_monomial() || !d.is_monomial() {
            return None;
        }
        let (ne, nc) = &n.terms()[0];
        let (de, dc) = &d.terms()[0];
        if !dc.is_one() || !nc.abs().is_one() {
            return None;
        }
        let sign = if nc.is_negative() { -1 } else { 1 };
        let mut out = ToralScalar { sign, u: ne[0] as i32 - de[0] as i32, d: [0; MAX_PARAMS] };
        for j in 0..MAX_PARAMS {
            out.d[j] = ne[j + 1] as i32 - de[j + 1] as i32;
        }
        Some(out)
    }
}

impl fmt::Display for ToralScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_scalar().to_literal())
    }
}

impl serde::Serialize for ToralScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_rules() {
        let x = ToralScalar::q_pow(2).mul(ToralScalar::c(1));
        let r = x.sqrt().unwrap();
        assert_eq!(r.mul(r), x);
        assert!(ToralScalar::q_pow(1).neg().sqrt().is_err());
        let odd = ToralScalar { sign: 1, u: 1, d: [0; MAX_PARAMS] };
        assert!(odd.sqrt().is_err());
    }

    #[test]
    fn scalar_round_trip() {
        let x = ToralScalar { sign: -1, u: -3, d: [1, 0, -2, 0, 0] };
        assert_eq!(ToralScalar::from_scalar(&x.to_scalar()), Some(x));
    }
}
