use super::{GwaElement, GwaMonomial, WeylError};
use crate::grammar::{parse_expr, split_index, ExprRing};
use crate::scalars::{Params, Scalar};

struct GwaRing {
    n: usize,
}

impl ExprRing for GwaRing {
    type Elem = GwaElement;

    fn scalar(&self, s: Scalar) -> GwaElement {
        GwaElement::scalar(self.n, s)
    }

    fn takes_args(&self, _name: &str) -> bool {
        false
    }

    fn generator(&self, name: &str, _args: &[usize], exp: i64) -> Result<GwaElement, String> {
        let n = self.n;
        if name == "Eq" {
            return Ok(GwaElement::euler(n, exp as i32));
        }
        let (head, i) = split_index(name).ok_or_else(|| format!("unknown generator '{name}'"))?;
        if i == 0 || i > n + 1 {
            return Err(format!("{name} out of range for n={n}"));
        }
        match head {
            "w" => Ok(GwaElement::omega(n, i, exp as i32)),
            "x" | "y" => {
                if exp < 0 {
                    return Err(format!("{name} is not invertible"));
                }
                let g = if head == "x" { GwaElement::x(n, i) } else { GwaElement::y(n, i) };
                Ok(g.pow(exp as u32))
            }
            _ => Err(format!("unknown generator '{name}'")),
        }
    }

    fn add(&self, a: &GwaElement, b: &GwaElement) -> GwaElement {
        a.add(b)
    }

    fn mul(&self, a: &GwaElement, b: &GwaElement) -> GwaElement {
        a.mul(b)
    }

    fn as_scalar(&self, a: &GwaElement) -> Option<Scalar> {
        if a.is_zero() {
            return Some(Scalar::zero());
        }
        let mut it = a.terms();
        let (m, c) = it.next()?;
        if it.next().is_none() && m == &GwaMonomial::one(self.n) {
            Some(c.clone())
        } else {
            None
        }
    }
}

/// Parses an element of `A^q_{n+1}`, e.g. `x1 y2 - q w3^-1 + Eq`.
pub fn parse_gwa(n: usize, s: &str, params: &Params) -> Result<GwaElement, WeylError> {
    parse_expr(&GwaRing { n }, s, params).map_err(|e| WeylError::Parse { pos: e.pos, msg: e.msg })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Params::new(0).unwrap();
        let a = parse_gwa(2, "x1 y2 - q w3^-1 + Eq", &p).unwrap();
        assert_eq!(parse_gwa(2, &a.to_string(), &p).unwrap(), a);
        assert!(parse_gwa(2, "x4", &p).is_err());
    }
}
