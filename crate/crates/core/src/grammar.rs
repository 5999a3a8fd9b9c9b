//! Textual element grammar shared by the algebra types.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | juxtaposition) unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' exponent)?
//! atom   := integer | 'q' | 'c'k | generator | generator '(' int ',' int ')' | '(' expr ')'
//! ```
//!
//! Only `q` and `c`k take half-integer exponents; division is by scalars only.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::scalars::{Params, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct GrammarError {
    pub pos: usize,
    pub msg: String,
}

/// A ring whose elements can be written in the grammar.
pub trait ExprRing {
    type Elem: Clone;
    fn scalar(&self, s: Scalar) -> Self::Elem;
    /// Whether `name` is followed by a parenthesized index pair.
    fn takes_args(&self, name: &str) -> bool;
    fn generator(&self, name: &str, args: &[usize], exp: i64) -> Result<Self::Elem, String>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn as_scalar(&self, a: &Self::Elem) -> Option<Scalar>;
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, GrammarError> {
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
        } else if ch.is_ascii_alphabetic() {
            let st = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if "+-*/^(),".contains(ch) {
            out.push((i, Tok::Op(ch)));
            i += 1;
        } else {
            return Err(GrammarError { pos: i, msg: format!("unexpected character '{ch}'") });
        }
    }
    Ok(out)
}

struct P<'a, R: ExprRing> {
    ring: &'a R,
    params: &'a Params,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<R: ExprRing> P<'_, R> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, GrammarError> {
        Err(GrammarError { pos, msg: msg.into() })
    }

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

    fn expect(&mut self, c: char) -> Result<(), GrammarError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(self.here(), format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<R::Elem, GrammarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.ring.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                let t = self.ring.mul(&self.ring.scalar(Scalar::from_int(-1)), &t);
                acc = self.ring.add(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<R::Elem, GrammarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let f = self.unary()?;
                acc = self.ring.mul(&acc, &f);
            } else if self.eat('/') {
                let p = self.here();
                let d = self.unary()?;
                let s = match self.ring.as_scalar(&d) {
                    Some(s) => s,
                    None => return self.err(p, "division by a non-scalar"),
                };
                let inv = match s.inv() {
                    Ok(v) => v,
                    Err(_) => return self.err(p, "division by zero"),
                };
                acc = self.ring.mul(&acc, &self.ring.scalar(inv));
            } else if self.starts_factor() {
                let f = self.unary()?;
                acc = self.ring.mul(&acc, &f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<R::Elem, GrammarError> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(self.ring.mul(&self.ring.scalar(Scalar::from_int(-1)), &v));
        }
        self.factor()
    }

    fn small_int(&mut self) -> Result<i64, GrammarError> {
        let p = self.here();
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                match n.to_i64().filter(|v| *v <= 4096) {
                    Some(v) => Ok(if neg { -v } else { v }),
                    None => self.err(p, "exponent too large"),
                }
            }
            _ => self.err(p, "expected integer"),
        }
    }

    fn exponent(&mut self) -> Result<(i64, i64), GrammarError> {
        let p = self.here();
        if self.eat('(') {
            let a = self.small_int()?;
            let b = if self.eat('/') { self.small_int()? } else { 1 };
            self.expect(')')?;
            if b == 0 {
                return self.err(p, "zero denominator in exponent");
            }
            let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
            let g = num_integer::gcd(a, b);
            let (a, b) = (a / g, b / g);
            if b > 2 {
                return self.err(p, "exponent denominator must be 1 or 2");
            }
            Ok((a, b))
        } else {
            Ok((self.small_int()?, 1))
        }
    }

    fn opt_exponent(&mut self) -> Result<Option<(usize, (i64, i64))>, GrammarError> {
        if self.eat('^') {
            let p = self.here();
            Ok(Some((p, self.exponent()?)))
        } else {
            Ok(None)
        }
    }

    fn param_index(name: &str) -> Option<usize> {
        let rest = name.strip_prefix('c')?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        rest.parse().ok()
    }

    fn factor(&mut self) -> Result<R::Elem, GrammarError> {
        let p = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let base = Scalar::from_bigint(n);
                self.scalar_power(base, None)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "q" {
                    return self.scalar_power(Scalar::q(), Some(0));
                }
                if let Some(j) = Self::param_index(&name) {
                    if j == 0 || j > self.params.count() {
                        return self.err(p, format!("undeclared parameter c{j}"));
                    }
                    return self.scalar_power(Scalar::c(j), Some(j));
                }
                let mut args = Vec::new();
                if self.ring.takes_args(&name) {
                    self.expect('(')?;
                    loop {
                        let v = self.small_int()?;
                        if v < 1 {
                            return self.err(p, "indices are 1-based");
                        }
                        args.push(v as usize);
                        if !self.eat(',') {
                            break;
                        }
                    }
                    self.expect(')')?;
                }
                let exp = match self.opt_exponent()? {
                    None => 1,
                    Some((ep, (a, 1))) => {
                        let _ = ep;
                        a
                    }
                    Some((ep, _)) => return self.err(ep, "fractional exponent on a generator"),
                };
                match self.ring.generator(&name, &args, exp) {
                    Ok(v) => Ok(v),
                    Err(m) => self.err(p, m),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                match self.opt_exponent()? {
                    None => Ok(e),
                    Some((ep, (a, b))) => {
                        if b != 1 {
                            return self.err(ep, "fractional exponents are only allowed on q and parameters");
                        }
                        if a < 0 {
                            let s = match self.ring.as_scalar(&e) {
                                Some(s) => s,
                                None => return self.err(ep, "negative power of a non-scalar"),
                            };
                            return match s.pow(a) {
                                Ok(v) => Ok(self.ring.scalar(v)),
                                Err(_) => self.err(ep, "zero to a negative power"),
                            };
                        }
                        let mut acc = self.ring.scalar(Scalar::one());
                        for _ in 0..a {
                            acc = self.ring.mul(&acc, &e);
                        }
                        Ok(acc)
                    }
                }
            }
            _ => self.err(p, "expected a factor"),
        }
    }

    fn scalar_power(&mut self, base: Scalar, var: Option<usize>) -> Result<R::Elem, GrammarError> {
        let v = match self.opt_exponent()? {
            None => base,
            Some((ep, (a, b))) => match var {
                Some(v) => {
                    let half = if b == 1 { 2 * a } else { a };
                    if v == 0 {
                        Scalar::u_pow(half)
                    } else {
                        Scalar::d_pow(v, half)
                    }
                }
                None => {
                    if b != 1 {
                        return self.err(ep, "fractional exponents are only allowed on q and parameters");
                    }
                    match base.pow(a) {
                        Ok(v) => v,
                        Err(_) => return self.err(ep, "zero to a negative power"),
                    }
                }
            },
        };
        Ok(self.ring.scalar(v))
    }
}

/// Parses `s` into an element of `ring`.
pub fn parse_expr<R: ExprRing>(ring: &R, s: &str, params: &Params) -> Result<R::Elem, GrammarError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(GrammarError { pos: 0, msg: "empty expression".into() });
    }
    let mut p = P { ring, params, toks, pos: 0, end: s.len() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(GrammarError { pos: p.here(), msg: "trailing input".into() });
    }
    Ok(v)
}

/// Splits `E12` into `("E", 12)`.
pub fn split_index(name: &str) -> Option<(&str, usize)> {
    let cut = name.find(|c: char| c.is_ascii_digit())?;
    let (head, tail) = name.split_at(cut);
    if head.is_empty() || !tail.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((head, tail.parse().ok()?))
}
