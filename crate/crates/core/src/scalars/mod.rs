//! Exact scalars in `Q(q^{1/2}, c_1^{1/2}, ..., c_p^{1/2})`.
//!
//! A [`Scalar`] is a reduced fraction of integer polynomials in `u = q^{1/2}`
//! and `d_j = c_j^{1/2}`. Reduction makes equal scalars structurally equal, so
//! `Eq` and `Hash` are exact.

mod parse;
pub mod poly;
mod toral;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use parse::{parse_scalar, Params};
pub use poly::{gcd, Exp, Poly, NVARS};
pub use toral::ToralScalar;

/// Maximum number of free parameters `c_1..c_p`.
pub const MAX_PARAMS: usize = NVARS - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a perfect toral square: {0}")]
    NotToralSquare(String),
    #[error("not a toral scalar: {0}")]
    NotToral(String),
    #[error("bracket of zero")]
    BracketOfZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

fn exp_of(var: usize, k: u16) -> Exp {
    let mut e = [0u16; NVARS];
    e[var] = k;
    e
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { num: Poly::constant(BigInt::from(n)), den: Poly::one() }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar { num: Poly::constant(n), den: Poly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_int(n).div(&Scalar::from_int(d))
    }

    /// Builds and reduces `num / den`. Panics on a zero denominator.
    pub fn from_polys(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        if den.grlex_leading_coeff().map(|c| c.is_negative()).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    /// `q^{k/2}`, that is `u^k`.
    pub fn u_pow(k: i64) -> Self {
        Self::var_pow(0, k)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::u_pow(2 * k)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `c_j^{k/2}` for `1 <= j <= MAX_PARAMS`.
    pub fn d_pow(j: usize, k: i64) -> Self {
        assert!((1..=MAX_PARAMS).contains(&j), "parameter index out of range");
        Self::var_pow(j, k)
    }

    /// The parameter `c_j`.
    pub fn c(j: usize) -> Self {
        Self::d_pow(j, 2)
    }

    fn var_pow(var: usize, k: i64) -> Self {
        let m = Poly::monomial(exp_of(var, k.unsigned_abs() as u16), BigInt::one());
        if k >= 0 {
            Scalar { num: m, den: Poly::one() }
        } else {
            Scalar { num: Poly::one(), den: m }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational value when no variables occur.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        Some((self.num.constant_value()?, self.den.constant_value()?))
    }

    /// Bit mask of the variables occurring (bit 0 is `u`, bit j is `d_j`).
    pub fn var_mask(&self) -> u32 {
        self.num.var_mask() | self.den.var_mask()
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Scalar::from_polys(self.num.add(&o.num), self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        Scalar::from_polys(num, b1.mul(&o.den))
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = a.mul(&c);
        let mut den = b.mul(&d);
        if den.grlex_leading_coeff().map(|x| x.is_negative()).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.grlex_leading_coeff().map(|x| x.is_negative()).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar { num, den })
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    /// Division; panics on a zero divisor.
    pub fn div(&self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero")
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs() as u32;
        Ok(Scalar { num: base.num.pow(e), den: base.den.pow(e) }.renormalize())
    }

    fn renormalize(self) -> Scalar {
        if self.den.grlex_leading_coeff().map(|x| x.is_negative()).unwrap_or(false) {
            Scalar { num: self.num.neg(), den: self.den.neg() }
        } else {
            self
        }
    }

    /// The toral form `+-u^a d^b` when this scalar is a signed monomial ratio.
    pub fn as_toral(&self) -> Option<ToralScalar> {
        ToralScalar::from_scalar(self)
    }

    /// Round-trippable literal in the scalar grammar.
    pub fn to_literal(&self) -> String {
        if self.den.is_one() {
            return poly_literal(&self.num, &[0; NVARS]);
        }
        if self.den.is_monomial() && self.den.terms()[0].1.is_one() {
            return poly_literal(&self.num, &self.den.terms()[0].0);
        }
        let dl = if self.den.is_monomial() || self.den.is_constant() {
            poly_literal(&self.den, &[0; NVARS])
        } else {
            format!("({})", poly_literal(&self.den, &[0; NVARS]))
        };
        let nl = if self.num.terms().len() > 1 {
            format!("({})", poly_literal(&self.num, &[0; NVARS]))
        } else {
            poly_literal(&self.num, &[0; NVARS])
        };
        if self.den.is_monomial() {
            format!("{nl}/({dl})")
        } else {
            format!("{nl}/{dl}")
        }
    }
}

fn power_literal(name: &str, e: i64) -> String {
    match e {
        2 => name.to_string(),
        _ if e % 2 == 0 && e > 0 => format!("{name}^{}", e / 2),
        _ if e % 2 == 0 => format!("{name}^-{}", -e / 2),
        _ => format!("{name}^({e}/2)"),
    }
}

fn var_name(i: usize) -> String {
    if i == 0 {
        "q".to_string()
    } else {
        format!("c{i}")
    }
}

/// Prints `p / x^shift` term by term.
fn poly_literal(p: &Poly, shift: &Exp) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().iter().enumerate() {
        let mut factors = Vec::new();
        for i in 0..NVARS {
            let k = e[i] as i64 - shift[i] as i64;
            if k != 0 {
                factors.push(power_literal(&var_name(i), k));
            }
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if factors.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_literal())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                Scalar::$m(self, o)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

/// `q - q^{-1}`.
pub fn q_diff() -> Scalar {
    Scalar::q().sub(&Scalar::q_pow(-1))
}

/// The quantum integer `[k] = (q^k - q^{-k}) / (q - q^{-1})`.
pub fn qint(k: i64) -> Scalar {
    Scalar::q_pow(k).sub(&Scalar::q_pow(-k)).div(&q_diff())
}

/// `[K; j] = (K q^j - K^{-1} q^{-j}) / (q - q^{-1})`.
pub fn bracket(k: &Scalar, j: i64) -> Result<Scalar, ScalarError> {
    if k.is_zero() {
        return Err(ScalarError::BracketOfZero);
    }
    let a = k.mul(&Scalar::q_pow(j));
    let b = k.inv()?.mul(&Scalar::q_pow(-j));
    Ok(a.sub(&b).div(&q_diff()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_small() {
        assert_eq!(qint(0), Scalar::zero());
        assert_eq!(qint(1), Scalar::one());
        assert_eq!(qint(2), Scalar::q().add(&Scalar::q_pow(-1)));
        assert_eq!(qint(-3), qint(3).neg());
    }

    #[test]
    fn bracket_matches_qint() {
        for k in -4..5 {
            assert_eq!(bracket(&Scalar::one(), k).unwrap(), qint(k));
        }
        assert!(bracket(&Scalar::zero(), 1).is_err());
    }

    #[test]
    fn literal_round_trip() {
        let p = Params::new(2).unwrap();
        for s in [
            "0",
            "1",
            "-3",
            "q",
            "q^-1",
            "q^(1/2)",
            "q^(-3/2)",
            "c1",
            "c1^(1/2)*c2^(-1/2)",
            "(q^2 + 1)/(q - 1)",
            "(q + c1)/(2*q*c2)",
            "1/2",
            "-q^(1/2) + 3*c1",
        ] {
            let x = parse_scalar(s, &p).unwrap();
            let lit = x.to_literal();
            let y = parse_scalar(&lit, &p).unwrap();
            assert_eq!(x, y, "{s} -> {lit}");
        }
    }

    #[test]
    fn canonical_equality() {
        let a = Scalar::q().add(&Scalar::one()).mul(&Scalar::q().sub(&Scalar::one()));
        let b = Scalar::q_pow(2).sub(&Scalar::one());
        assert_eq!(a, b);
        let c = b.div(&Scalar::q().sub(&Scalar::one()));
        assert_eq!(c, Scalar::q().add(&Scalar::one()));
    }
}
