//! Parser for scalar literals such as `q^(1/2)*c1 - 3/(q + 1)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Scalar, ScalarError, MAX_PARAMS};

/// The declared parameter set `c1..cp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Params {
    count: usize,
}

impl Params {
    pub fn new(count: usize) -> Result<Self, ScalarError> {
        if count > MAX_PARAMS {
            return Err(ScalarError::Parse {
                pos: 0,
                msg: format!("at most {MAX_PARAMS} parameters are supported"),
            });
        }
        Ok(Params { count })
    }

    /// Accepts a list of names which must be exactly `c1, c2, ..., cp`.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self, ScalarError> {
        for (i, n) in names.iter().enumerate() {
            if n.as_ref() != format!("c{}", i + 1) {
                return Err(ScalarError::Parse {
                    pos: 0,
                    msg: format!("parameter {} must be named c{}", n.as_ref(), i + 1),
                });
            }
        }
        Self::new(names.len())
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    C(usize),
    Op(char),
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ScalarError> {
    Err(ScalarError::Parse { pos, msg: msg.into() })
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let ch = b[i] as char;
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Int(s[st..i].parse().expect("digits"))));
        } else if ch == 'q' {
            out.push((i, Tok::Q));
            i += 1;
        } else if ch == 'c' {
            let st = i;
            i += 1;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            if i == st + 1 {
                return err(st, "expected parameter index after 'c'");
            }
            let j: usize = s[st + 1..i].parse().map_err(|_| ScalarError::Parse {
                pos: st,
                msg: "bad parameter index".into(),
            })?;
            out.push((st, Tok::C(j)));
        } else if "+-*/^()".contains(ch) {
            out.push((i, Tok::Op(ch)));
            i += 1;
        } else {
            return err(i, format!("unexpected character '{ch}'"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    params: &'a Params,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ScalarError> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.here(), format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let p = self.here();
                let d = self.unary()?;
                acc = acc.checked_div(&d).or_else(|_| err(p, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn small_int(&mut self) -> Result<i64, ScalarError> {
        let p = self.here();
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let v = n.to_i64().filter(|v| *v <= 4096).ok_or(ScalarError::Parse {
                    pos: p,
                    msg: "exponent too large".into(),
                })?;
                Ok(if neg { -v } else { v })
            }
            _ => err(p, "expected integer exponent"),
        }
    }

    /// Exponent as a fraction `(num, den)` with `den` in `{1, 2}`.
    fn exponent(&mut self) -> Result<(i64, i64), ScalarError> {
        let p = self.here();
        if self.eat('(') {
            let a = self.small_int()?;
            let b = if self.eat('/') { self.small_int()? } else { 1 };
            self.expect(')')?;
            if b == 0 {
                return err(p, "zero denominator in exponent");
            }
            let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
            let g = num_integer::gcd(a, b);
            let (a, b) = (a / g, b / g);
            if b > 2 {
                return err(p, "exponent denominator must be 1 or 2");
            }
            Ok((a, b))
        } else {
            Ok((self.small_int()?, 1))
        }
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let p = self.here();
        let (base, var) = match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                (Scalar::from_bigint(n), None)
            }
            Some(Tok::Q) => {
                self.pos += 1;
                (Scalar::q(), Some(0usize))
            }
            Some(Tok::C(j)) => {
                self.pos += 1;
                if j == 0 || j > self.params.count {
                    return err(p, format!("undeclared parameter c{j}"));
                }
                (Scalar::c(j), Some(j))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                (e, None)
            }
            _ => return err(p, "expected a number, q, a parameter or '('"),
        };
        if !self.eat('^') {
            return Ok(base);
        }
        let ep = self.here();
        let (a, b) = self.exponent()?;
        match var {
            Some(v) => {
                let half = if b == 1 { 2 * a } else { a };
                Ok(if v == 0 { Scalar::u_pow(half) } else { Scalar::d_pow(v, half) })
            }
            None => {
                if b != 1 {
                    return err(ep, "fractional exponents are only allowed on q and parameters");
                }
                base.pow(a).or_else(|_| err(ep, "zero to a negative power"))
            }
        }
    }
}

/// Parses a scalar literal against the declared parameters.
pub fn parse_scalar(s: &str, params: &Params) -> Result<Scalar, ScalarError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return err(0, "empty scalar");
    }
    let mut p = Parser { toks, pos: 0, end: s.len(), params };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return err(p.here(), "trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_undeclared() {
        let p = Params::new(1).unwrap();
        assert!(parse_scalar("c2", &p).is_err());
        assert!(parse_scalar("c1 + q", &p).is_ok());
        assert!(parse_scalar("(q+1)^(1/2)", &p).is_err());
        assert!(parse_scalar("q^(1/3)", &p).is_err());
        assert!(parse_scalar("1/(q-q)", &p).is_err());
    }

    #[test]
    fn half_powers() {
        let p = Params::new(1).unwrap();
        let a = parse_scalar("q^(1/2)*q^(1/2)", &p).unwrap();
        assert_eq!(a, Scalar::q());
        let b = parse_scalar("c1^(1/2)^2", &p);
        assert!(b.is_err() || b.unwrap() == Scalar::c(1));
        assert_eq!(parse_scalar("q^-1", &p).unwrap(), Scalar::q_pow(-1));
    }
}
