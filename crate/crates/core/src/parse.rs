//! Text grammar for polynomials and tensor elements.
//!
//! ```text
//! expr    := [+|-] term {(+|-) term}
//! term    := factor {[*] factor}
//! factor  := atom [^ integer]
//! atom    := integer [/ integer] | generator | ( expr )
//! tensor  := [+|-] tterm {(+|-) tterm}
//! tterm   := term (#) term
//! ```
//!
//! `1` is the empty word; juxtaposition and `*` both denote the product.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::{is_identifier_continue, FreePoly, Signature, TensorPoly, Word};
use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Tensor,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Tensor => "`(#)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            ')' => Tok::RParen,
            '(' => {
                if chars[i..].starts_with(&['(', '#', ')']) {
                    i += 2;
                    Tok::Tensor
                } else {
                    Tok::LParen
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Tok::Num(digits.parse().expect("ascii digits"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i + 1 < chars.len() && is_identifier_continue(chars[i + 1]) {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => {
                return Err(ParseError::new(1, col, format!("unexpected character `{other}`"))
                    .expecting(&["number", "generator", "+", "-", "*", "(", ")", "(#)"]))
            }
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    sig: &'a Arc<Signature>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(sig: &'a Arc<Signature>, text: &str) -> Result<Self, ParseError> {
        Ok(Parser { sig, toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::new(1, self.col(), format!("unexpected {}", self.peek().describe()))
            .expecting(expected)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Num(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn expr(&mut self) -> Result<FreePoly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FreePoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
                acc = &acc * &self.factor()?;
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<FreePoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        let n = match self.bump() {
            Tok::Num(n) => n,
            _ => return Err(ParseError::new(1, col, "exponent must be an integer").expecting(&["integer"])),
        };
        let n: u32 = n
            .try_into()
            .ok()
            .filter(|&n: &u32| n <= 64)
            .ok_or_else(|| ParseError::new(1, col, "exponent out of range (0..=64)"))?;
        let mut acc = FreePoly::one(self.sig);
        for _ in 0..n {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<FreePoly, ParseError> {
        let col = self.col();
        match self.bump() {
            Tok::Num(n) => {
                let mut den = BigInt::from(1);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dcol = self.col();
                    den = match self.bump() {
                        Tok::Num(d) => d,
                        _ => return Err(ParseError::new(1, dcol, "expected denominator").expecting(&["integer"])),
                    };
                }
                let c = self
                    .sig
                    .field()
                    .from_fraction(&n, &den)
                    .map_err(|e| ParseError::new(1, col, e.to_string()))?;
                Ok(FreePoly::constant(self.sig, c))
            }
            Tok::Ident(name) => match self.sig.index_of(&name) {
                Some(g) => Ok(FreePoly::word(self.sig, Word::letter(g))),
                None => {
                    let names: Vec<&str> = self.sig.names().iter().map(String::as_str).collect();
                    Err(ParseError::new(1, col, format!("unknown generator `{name}`")).expecting(&names))
                }
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&[")", "+", "-", "*"]));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(ParseError::new(1, col, format!("unexpected {}", other.describe()))
                .expecting(&["number", "generator", "("])),
        }
    }

    fn tensor_term(&mut self) -> Result<TensorPoly, ParseError> {
        let left = self.term()?;
        if *self.peek() != Tok::Tensor {
            return Err(self.error(&["(#)", "*", "generator"]));
        }
        self.bump();
        let right = self.term()?;
        Ok(TensorPoly::product(&left, &right).expect("both legs parsed over one signature"))
    }

    fn tensor(&mut self) -> Result<TensorPoly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let first = self.tensor_term()?;
        let mut acc = if negate { first.scale(&self.sig.one().neg()) } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.try_add(&self.tensor_term()?).expect("same signature");
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.try_sub(&self.tensor_term()?).expect("same signature");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error(&["+", "-", "end of input"]))
        }
    }
}

/// Parses a polynomial over `sig`. Positions are reported on line 1.
pub fn parse_poly(sig: &Arc<Signature>, text: &str) -> Result<FreePoly, ParseError> {
    let mut p = Parser::new(sig, text)?;
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

/// Parses an element of `T(V) ⊗ T(V)` written with `(#)` as the separator.
pub fn parse_tensor(sig: &Arc<Signature>, text: &str) -> Result<TensorPoly, ParseError> {
    let mut p = Parser::new(sig, text)?;
    let out = p.tensor()?;
    p.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn sig() -> Arc<Signature> {
        Signature::new(["g", "x", "y"], Field::Rational).unwrap()
    }

    #[test]
    fn prints_and_reparses() {
        let s = sig();
        for text in ["x*x - x*y + y*x - y*y", "-3/2*g*x + 1", "0", "1", "-1 + 2*g"] {
            let p = parse_poly(&s, text).unwrap();
            let printed = p.to_string();
            assert_eq!(parse_poly(&s, &printed).unwrap(), p, "{text} -> {printed}");
        }
        assert_eq!(parse_poly(&s, "(x+y)*(x-y)").unwrap().to_string(), "x*x - x*y + y*x - y*y");
        assert_eq!(parse_poly(&s, "g x^2").unwrap().to_string(), "g*x*x");
    }

    #[test]
    fn tensor_grammar() {
        let s = sig();
        let t = parse_tensor(&s, "x (#) 1 + g (#) x").unwrap();
        assert_eq!(t.to_string(), "g (#) x + x (#) 1");
        let u = parse_tensor(&s, "-2 (#) x - 1/2*g*x (#) g").unwrap();
        assert_eq!(parse_tensor(&s, &u.to_string()).unwrap(), u);
        assert_eq!(u.to_string(), "-2 (#) x - 1/2*g*x (#) g");
    }

    #[test]
    fn reports_positions() {
        let s = sig();
        let e = parse_poly(&s, "x + z").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(e.message.contains("unknown generator `z`"));
        assert!(e.expected.contains(&"g".to_string()));
        let e = parse_poly(&s, "x +").unwrap_err();
        assert_eq!(e.column, 4);
        let e = parse_tensor(&s, "x (#)").unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_poly(&s, "1/0").unwrap_err();
        assert!(e.message.contains("division by zero"));
    }

    #[test]
    fn prime_field_coefficients() {
        let s = Signature::new(["g"], Field::prime(3).unwrap()).unwrap();
        let p = parse_poly(&s, "-g + 1/2").unwrap();
        assert_eq!(p.to_string(), "2 + 2*g");
    }
}
