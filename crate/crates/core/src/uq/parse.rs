use super::{Element, UqError};
use crate::grammar::{parse_expr, split_index, ExprRing};
use crate::scalars::{Params, Scalar};

struct UqRing {
    n: usize,
}

impl ExprRing for UqRing {
    type Elem = Element;

    fn scalar(&self, s: Scalar) -> Element {
        Element::scalar(self.n, s)
    }

    fn takes_args(&self, name: &str) -> bool {
        name == "Ep" || name == "Em"
    }

    fn generator(&self, name: &str, args: &[usize], exp: i64) -> Result<Element, String> {
        let n = self.n;
        if self.takes_args(name) {
            let [a, b] = args else {
                return Err(format!("{name} takes two indices"));
            };
            if !(a < b && *b <= n + 1) {
                return Err(format!("{name}({a},{b}) is not a positive root for n={n}"));
            }
            if exp < 0 {
                return Err(format!("{name} is not invertible"));
            }
            let g = if name == "Ep" { Element::ep(n, *a, *b) } else { Element::em(n, *a, *b) };
            return Ok(g.pow(exp as u32));
        }
        let (head, i) = split_index(name).ok_or_else(|| format!("unknown generator '{name}'"))?;
        match head {
            "E" | "F" => {
                if i == 0 || i > n {
                    return Err(format!("{name} out of range for n={n}"));
                }
                if exp < 0 {
                    return Err(format!("{name} is not invertible"));
                }
                let g = if head == "E" { Element::e(n, i) } else { Element::f(n, i) };
                Ok(g.pow(exp as u32))
            }
            "Kb" if (1..=n + 1).contains(&i) => Ok(Element::kbar(n, i, exp as i32)),
            "K" if (1..=n).contains(&i) => Ok(Element::k(n, i, exp as i32)),
            "Kb" | "K" => Err(format!("{name} out of range for n={n}")),
            _ => Err(format!("unknown generator '{name}'")),
        }
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        a.add(b)
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        if let Some(s) = self.as_scalar(a) {
            return b.scale(&s);
        }
        if let Some(s) = self.as_scalar(b) {
            return a.scale(&s);
        }
        a.mul(b)
    }

    fn as_scalar(&self, a: &Element) -> Option<Scalar> {
        if a.is_zero() {
            return Some(Scalar::zero());
        }
        if a.len() == 1 {
            let (m, c) = a.terms().next()?;
            if m == &super::Monomial::one(self.n) {
                return Some(c.clone());
            }
        }
        None
    }
}

/// Parses an element of `U_q(gl_{n+1})`, e.g. `q^-1 Ep(1,3) F1 - Kb2^-1`.
pub fn parse_element(n: usize, s: &str, params: &Params) -> Result<Element, UqError> {
    parse_expr(&UqRing { n }, s, params).map_err(|e| UqError::Parse { pos: e.pos, msg: e.msg })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_display() {
        let p = Params::new(1).unwrap();
        let a = parse_element(2, "q^-1 Ep(1,3) F1 - Kb2^-1 + (c1 + 1) E2 F2", &p).unwrap();
        let b = parse_element(2, &a.to_string(), &p).unwrap();
        assert_eq!(a, b);
        assert!(parse_element(2, "E3", &p).is_err());
        assert!(parse_element(2, "E1/F1", &p).is_err());
    }
}
