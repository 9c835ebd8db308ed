//! Element expressions: integers, named generators, `+ - * / ^` and parentheses.
//!
//! A number directly followed by a name or `(` is an implicit product, so
//! `2a`, `3i` and `2(1+g)` are accepted.

use super::{InvolutiveRing, RingError};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Name(String),
    Op(char),
}

fn tokenize(input: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Int(s.parse().map_err(|_| format!("integer `{s}` out of range"))?));
            if i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '(') {
                out.push(Token::Op('*'));
            }
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_alphanumeric() {
                i += 1;
            }
            out.push(Token::Name(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser<'a, R: InvolutiveRing> {
    ring: &'a R,
    tokens: Vec<Token>,
    pos: usize,
}

impl<R: InvolutiveRing> Parser<'_, R> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<R::Elem, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = self.ring.add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = self.ring.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<R::Elem, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = self.ring.mul(&acc, &self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = self.ring.div(&acc, &d).map_err(|e| e.to_string())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<R::Elem, String> {
        if self.eat('-') {
            Ok(self.ring.neg(&self.unary()?))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<R::Elem, String> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.peek().cloned() {
                Some(Token::Int(e)) => {
                    self.pos += 1;
                    self.ring.pow_signed(&base, if neg { -e } else { e }).map_err(|e| e.to_string())
                }
                _ => Err("exponent must be an integer".into()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<R::Elem, String> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(self.ring.from_int(n))
            }
            Some(Token::Name(name)) => {
                self.pos += 1;
                self.ring
                    .generator(&name)
                    .ok_or_else(|| format!("unknown generator `{name}` in {}", self.ring.name()))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err("missing `)`".into());
                }
                Ok(v)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

pub(crate) fn parse_element<R: InvolutiveRing>(ring: &R, input: &str) -> Result<R::Elem, RingError> {
    let err = |reason: String| RingError::Parse { input: input.to_string(), reason };
    let tokens = tokenize(input).map_err(err)?;
    let mut p = Parser { ring, tokens, pos: 0 };
    let v = p.expr().map_err(err)?;
    if p.pos != p.tokens.len() {
        return Err(err(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use crate::rings::*;

    #[test]
    fn gaussian_expressions() {
        let r = GaussianRationals;
        assert_eq!(r.parse_elem("3+2i").unwrap(), GaussianRational::from_ints(3, 2));
        assert_eq!(r.parse_elem("(1+i)^2").unwrap(), GaussianRational::from_ints(0, 2));
        assert_eq!(r.parse_elem("1/(1+i)").unwrap(), r.parse_elem("1/2-1/2*i").unwrap());
        assert_eq!(r.parse_elem("i^-1").unwrap(), GaussianRational::from_ints(0, -1));
    }

    #[test]
    fn errors_name_the_problem() {
        let r = GaussianRationals;
        assert!(matches!(r.parse_elem("2*q"), Err(RingError::Parse { .. })));
        assert!(matches!(r.parse_elem("1/0"), Err(RingError::Parse { .. })));
        assert!(matches!(r.parse_elem("(1+i"), Err(RingError::Parse { .. })));
        assert!(matches!(r.parse_elem("1 2"), Err(RingError::Parse { .. })));
    }

    #[test]
    fn finite_field_generator() {
        let f = FiniteFieldSq::new(3, 1).unwrap();
        let g = f.parse_elem("g").unwrap();
        assert_eq!(f.parse_elem("g^3").unwrap(), f.theta(&g));
        assert_eq!(f.parse_elem("4").unwrap(), f.one());
    }
}
