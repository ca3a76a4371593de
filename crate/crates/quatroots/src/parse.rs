//! Expression parser for quaternion polynomials in the variable t.
//!
//! Grammar (whitespace-insensitive):
//!   expr   := term (('+' | '-') term)*
//!   term   := sign? factor (('*'? factor))*       juxtaposition multiplies
//!   factor := atom ('^' nonneg-integer)?
//!   atom   := number | 'i' | 'j' | 'k' | 't' | '(' expr ')'
//!   number := integer | integer '/' integer       a rational is one token
//!
//! Products expand left to right with non-commutative multiplication, so
//! "(t-i)*(t-j)" and "(t-j)*(t-i)" are different polynomials. Both ASCII
//! '-' and Unicode minus are accepted.

use num::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Poly, QuatPoly};
use crate::scalar::{Quaternion, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Unit(u8), // 1 = i, 2 = j, 3 = k
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            src: text.as_bytes(),
            text,
            pos: 0,
        }
    }

    fn integer(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.text[start..self.pos].parse().unwrap()
    }

    fn next(&mut self) -> Result<Option<(usize, Token)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let at = self.pos;
        // Unicode minus sign U+2212
        if self.text[at..].starts_with('\u{2212}') {
            self.pos += '\u{2212}'.len_utf8();
            return Ok(Some((at, Token::Minus)));
        }
        let c = self.src[at];
        let tok = match c {
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'i' => Token::Unit(1),
            b'j' => Token::Unit(2),
            b'k' => Token::Unit(3),
            b't' => Token::Var,
            b'0'..=b'9' => {
                let num = self.integer();
                // lookahead for "/digits": a rational literal
                let save = self.pos;
                if self.pos < self.src.len() && self.src[self.pos] == b'/' {
                    self.pos += 1;
                    if self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        let den = self.integer();
                        return Ok(Some((at, Token::Number(Rational::new(num, den)))));
                    }
                    self.pos = save;
                }
                return Ok(Some((at, Token::Number(Rational::from(num)))));
            }
            _ => {
                return Err(Error::Syntax {
                    pos: at,
                    msg: format!("unexpected character {:?}", self.text[at..].chars().next().unwrap()),
                })
            }
        };
        self.pos += 1;
        Ok(Some((at, tok)))
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).map(|(_, t)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<()> {
        if self.peek() == Some(want) {
            self.idx += 1;
            Ok(())
        } else {
            Err(Error::Syntax {
                pos: self.pos(),
                msg: format!("expected {}", what),
            })
        }
    }

    fn expr(&mut self) -> Result<QuatPoly> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Token::Plus => {
                    self.idx += 1;
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.idx += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QuatPoly> {
        let mut negate = false;
        while let Some(t) = self.peek() {
            match t {
                Token::Minus => {
                    negate = !negate;
                    self.idx += 1;
                }
                Token::Plus => {
                    self.idx += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.idx += 1;
                    acc = acc.mul(&self.factor()?);
                }
                // juxtaposition: "2i", "3t", "(t+1)(t-k)", "2 t"
                Some(Token::Number(_))
                | Some(Token::Unit(_))
                | Some(Token::Var)
                | Some(Token::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => break,
            }
        }
        if negate {
            acc = acc.neg();
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QuatPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.idx += 1;
            let at = self.pos();
            match self.bump() {
                Some(Token::Number(r)) => {
                    if !r.is_integer() || r < Rational::from(BigInt::from(0)) {
                        return Err(Error::NonPolynomial(format!(
                            "exponent {} is not a nonnegative integer",
                            r
                        )));
                    }
                    let e: u32 = r.to_integer().try_into().map_err(|_| {
                        Error::NonPolynomial(format!("exponent {} too large", r))
                    })?;
                    let mut acc = Poly::one();
                    for _ in 0..e {
                        acc = acc.mul(&base);
                    }
                    Ok(acc)
                }
                Some(Token::Minus) => Err(Error::NonPolynomial(
                    "negative exponent".to_string(),
                )),
                _ => Err(Error::Syntax {
                    pos: at,
                    msg: "expected exponent".to_string(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<QuatPoly> {
        let at = self.pos();
        match self.bump() {
            Some(Token::Number(r)) => {
                let z = Rational::from(BigInt::from(0));
                Ok(Poly::constant(Quaternion::new(r, z.clone(), z.clone(), z)))
            },
            Some(Token::Unit(1)) => Ok(Poly::constant(Quaternion::from_ints(0, 1, 0, 0))),
            Some(Token::Unit(2)) => Ok(Poly::constant(Quaternion::from_ints(0, 0, 1, 0))),
            Some(Token::Unit(_)) => Ok(Poly::constant(Quaternion::from_ints(0, 0, 0, 1))),
            Some(Token::Var) => Ok(Poly::var()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(_) => Err(Error::Syntax {
                pos: at,
                msg: "expected a number, unit, t, or '('".to_string(),
            }),
            None => Err(Error::Syntax {
                pos: at,
                msg: "unexpected end of input".to_string(),
            }),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<QuatPoly> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    while let Some(t) = lexer.next()? {
        tokens.push(t);
    }
    if tokens.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty input".to_string(),
        });
    }
    let mut parser = Parser {
        tokens,
        idx: 0,
        end: text.len(),
    };
    let p = parser.expr()?;
    if parser.idx < parser.tokens.len() {
        return Err(Error::Syntax {
            pos: parser.pos(),
            msg: "trailing input".to_string(),
        });
    }
    Ok(p)
}
