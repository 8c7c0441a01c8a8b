//! Recursive-descent parser for the polynomial text grammar.
//!
//! Coefficients are integers or rationals (`3`, `-1/2`), variables are
//! identifiers from a declared list, operators are `+ - * ^` with explicit
//! multiplication only, and parentheses group. `Display` on `Polynomial`
//! emits this grammar, so `parse(print(p)) == p`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VarSet};
use crate::scalar::Rat;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.pos];
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn next_token(&mut self) -> Result<(Tok, usize, usize)> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        if self.pos >= self.src.len() {
            return Ok((Tok::End, line, col));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.bump();
                Tok::Plus
            }
            b'-' => {
                self.bump();
                Tok::Minus
            }
            b'*' => {
                self.bump();
                Tok::Star
            }
            b'^' => {
                self.bump();
                Tok::Caret
            }
            b'/' => {
                self.bump();
                Tok::Slash
            }
            b'(' => {
                self.bump();
                Tok::LParen
            }
            b')' => {
                self.bump();
                Tok::RParen
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.bump();
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(text.parse::<BigInt>().unwrap())
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.bump();
                }
                Tok::Ident(String::from_utf8(self.src[start..self.pos].to_vec()).unwrap())
            }
            other => {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("unexpected character '{}'", other as char),
                })
            }
        };
        Ok((tok, line, col))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    line: usize,
    col: usize,
    vars: &'a VarSet,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a VarSet) -> Result<Parser<'a>> {
        let mut lexer = Lexer::new(src);
        let (tok, line, col) = lexer.next_token()?;
        Ok(Parser { lexer, tok, line, col, vars })
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn advance(&mut self) -> Result<()> {
        let (tok, line, col) = self.lexer.next_token()?;
        self.tok = tok;
        self.line = line;
        self.col = col;
        Ok(())
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.tok {
            Tok::Minus => {
                self.advance()?;
                -&self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.advance()?;
            acc = &acc * &self.factor()?;
        }
        // adjacent factors without '*' are a grammar error, not implicit
        // multiplication
        match self.tok {
            Tok::Ident(_) | Tok::Int(_) | Tok::LParen => {
                Err(self.err("implicit multiplication is not allowed; insert '*'"))
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.tok == Tok::Minus {
            self.advance()?;
            return Ok(-&self.factor()?);
        }
        let base = self.primary()?;
        if self.tok == Tok::Caret {
            self.advance()?;
            let e = match &self.tok {
                Tok::Int(n) => {
                    use num_traits::ToPrimitive;
                    n.to_u32().ok_or_else(|| self.err("exponent too large"))?
                }
                _ => return Err(self.err("expected a nonnegative integer exponent")),
            };
            self.advance()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.tok.clone() {
            Tok::Int(num) => {
                self.advance()?;
                let mut den = BigInt::one();
                if self.tok == Tok::Slash {
                    self.advance()?;
                    match self.tok.clone() {
                        Tok::Int(d) => {
                            use num_traits::Zero;
                            if d.is_zero() {
                                return Err(self.err("zero denominator"));
                            }
                            den = d;
                            self.advance()?;
                        }
                        _ => {
                            return Err(self
                                .err("'/' is only allowed between integer literals"))
                        }
                    }
                }
                Ok(Polynomial::constant(self.vars, Rat::new(num, den)))
            }
            Tok::Ident(name) => {
                let i = self
                    .vars
                    .index_of(&name)
                    .ok_or_else(|| self.err(format!("unknown variable '{}'", name)))?;
                self.advance()?;
                Ok(Polynomial::var(self.vars, i))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.err("expected ')'"));
                }
                self.advance()?;
                Ok(inner)
            }
            Tok::Slash => Err(self.err("'/' is only allowed between integer literals")),
            _ => Err(self.err("expected a coefficient, variable or '('")),
        }
    }
}

/// Parse one polynomial over the given variables.
pub fn parse_polynomial(src: &str, vars: &VarSet) -> Result<Polynomial> {
    let mut p = Parser::new(src, vars)?;
    let poly = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.err("trailing input after polynomial"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{mono_basis, Monomial};
    use crate::scalar::{rat, rat2};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn abc() -> VarSet {
        VarSet::new(&["a", "b", "c"])
    }

    #[test]
    fn parses_the_fixture_forms() {
        let v = abc();
        let p = parse_polynomial("a*c^2", &v).unwrap();
        assert_eq!(p.to_string(), "a*c^2");
        let q = parse_polynomial("b^2*(a+c)", &v).unwrap();
        assert_eq!(q.to_string(), "a*b^2 + b^2*c");
        assert_eq!(q.homogeneous_degree(), Some(3));
    }

    #[test]
    fn coefficients_and_signs() {
        let v = abc();
        let p = parse_polynomial("-3/2*a^2*b + c - 1/4", &v).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![2, 1, 0])), rat2(-3, 2));
        assert_eq!(p.coeff(&Monomial::new(vec![0, 0, 1])), rat(1));
        assert_eq!(p.coeff(&Monomial::new(vec![0, 0, 0])), rat2(-1, 4));
        // unary minus binds a factor
        let q = parse_polynomial("-(a+b)*c", &v).unwrap();
        assert_eq!(q, -&(&(&Polynomial::var(&v, 0) + &Polynomial::var(&v, 1)) * &Polynomial::var(&v, 2)));
    }

    #[test]
    fn rejects_bad_syntax() {
        let v = abc();
        assert!(matches!(
            parse_polynomial("a b", &v),
            Err(Error::Parse { line: 1, col: 3, .. })
        ));
        assert!(parse_polynomial("2(a)", &v).is_err());
        assert!(parse_polynomial("a^-2", &v).is_err());
        assert!(parse_polynomial("a + ", &v).is_err());
        assert!(parse_polynomial("(a+b", &v).is_err());
        assert!(parse_polynomial("a/b", &v).is_err());
        assert!(parse_polynomial("d + a", &v).is_err());
        assert!(parse_polynomial("1/0", &v).is_err());
    }

    #[test]
    fn error_positions_are_line_aware() {
        let v = abc();
        let err = parse_polynomial("a +\n q", &v).unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 2);
            }
            other => panic!("unexpected error {:?}", other),
        }
    }

    #[test]
    fn print_parse_roundtrip_on_random_polynomials() {
        let v = VarSet::new(&["x", "y", "z", "t"]);
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        for _ in 0..150 {
            let mut p = Polynomial::zero(&v);
            for _ in 0..rng.gen_range(0..6) {
                let basis = mono_basis(&v, rng.gen_range(0..4));
                let m = basis.monomial(rng.gen_range(0..basis.len())).clone();
                let c = rat2(rng.gen_range(-12..=12), rng.gen_range(1..=7));
                p = &p + &Polynomial::term(&v, m, c);
            }
            let printed = p.to_string();
            let reparsed = parse_polynomial(&printed, &v).unwrap();
            assert_eq!(reparsed, p, "round-trip failed for {}", printed);
        }
    }
}
