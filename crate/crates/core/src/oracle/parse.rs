//! Text format for generator sets.
//!
//! ```text
//! # comment
//! n = 4
//! (x1-x2)*(x3-x4)
//! e1^3
//! vdm
//! ```
//!
//! The header `n = N` comes first. Each following line is one polynomial
//! built from integers, variables `x1..xN`, elementary symmetric polynomials
//! `e1..eN`, the Vandermonde product `vdm`, `+ - * ^` and parentheses.
//! Multiplication is always explicit.

use num_rational::BigRational;

use super::poly::{elementary_symmetric, vandermonde, MultiPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(u64),
    Var(usize),
    Elem(usize),
    Vdm,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str, line: usize) -> Result<Vec<Token>> {
    let err = |m: String| Error::Parse { line, message: m };
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Option<u64> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>().parse().ok()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            '0'..='9' => {
                let v = read_int(&mut i).ok_or_else(|| err("integer too large".into()))?;
                out.push(Token::Int(v));
            }
            'x' | 'e' => {
                i += 1;
                let k = read_int(&mut i).ok_or_else(|| err(format!("expected an index after '{c}'")))? as usize;
                out.push(if c == 'x' { Token::Var(k) } else { Token::Elem(k) });
            }
            'v' if chars[i..].starts_with(&['v', 'd', 'm']) => {
                out.push(Token::Vdm);
                i += 3;
            }
            other => return Err(err(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    n: usize,
    line: usize,
}

impl Parser<'_> {
    fn err(&self, message: String) -> Error {
        Error::Parse {
            line: self.line,
            message,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                Token::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    /// Negation binds looser than `^`, so `-x1^2` is `-(x1^2)`.
    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.primary()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(k)) if k <= 64 => return Ok(base.pow(k as u32)),
                _ => return Err(self.err("expected a small exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MultiPoly> {
        let n = self.n;
        match self.next() {
            Some(Token::Int(v)) => Ok(MultiPoly::constant(n, BigRational::from_integer(v.into()))),
            Some(Token::Var(k)) if (1..=n).contains(&k) => Ok(MultiPoly::var(n, k)),
            Some(Token::Elem(k)) if (1..=n).contains(&k) => Ok(elementary_symmetric(k, n)),
            Some(Token::Var(k)) => Err(self.err(format!("x{k} is not one of x1..x{n}"))),
            Some(Token::Elem(k)) => Err(self.err(format!("e{k} is not one of e1..e{n}"))),
            Some(Token::Vdm) => Ok(vandermonde(n)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(self.err("missing ')'".into())),
                }
            }
            Some(t) => Err(self.err(format!("unexpected {t:?}"))),
            None => Err(self.err("unexpected end of line".into())),
        }
    }
}

/// Parses one polynomial in `n` variables. `line` is used in error messages.
pub fn parse_polynomial(s: &str, n: usize, line: usize) -> Result<MultiPoly> {
    let tokens = tokenize(s, line)?;
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        n,
        line,
    };
    let out = p.expr()?;
    if p.pos != tokens.len() {
        return Err(p.err(format!("trailing input after position {}", p.pos)));
    }
    Ok(out)
}

/// Parses a generator file into `(n, polynomials)`.
pub fn parse_generator_file(text: &str) -> Result<(usize, Vec<MultiPoly>)> {
    let mut n = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match n {
            None => {
                let value = content
                    .strip_prefix('n')
                    .and_then(|r| r.trim_start().strip_prefix('='))
                    .map(str::trim)
                    .ok_or_else(|| Error::Parse {
                        line,
                        message: "expected header 'n = N'".into(),
                    })?;
                let v: usize = value.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad variable count {value:?}"),
                })?;
                if v == 0 {
                    return Err(Error::Parse {
                        line,
                        message: "n must be at least 1".into(),
                    });
                }
                n = Some(v);
            }
            Some(n) => gens.push(parse_polynomial(content, n, line)?),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing header 'n = N'".into(),
    })?;
    Ok((n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::poly::rational;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(4, i)
    }

    #[test]
    fn precedence() {
        let p = parse_polynomial("x1 + 2*x2^2 - -x3", 4, 1).unwrap();
        let expected = x(1).add(&x(2).pow(2).scale(&rational(2))).add(&x(3));
        assert_eq!(p, expected);
        let p = parse_polynomial("(x1-x2)*(x3-x4)", 4, 1).unwrap();
        assert_eq!(p, x(1).sub(&x(2)).mul(&x(3).sub(&x(4))));
        let p = parse_polynomial("-x1^2", 4, 1).unwrap();
        assert_eq!(p, x(1).pow(2).neg());
    }

    #[test]
    fn shortcuts() {
        assert_eq!(parse_polynomial("e4", 4, 1).unwrap(), x(1).mul(&x(2)).mul(&x(3)).mul(&x(4)));
        assert_eq!(parse_polynomial("vdm", 4, 1).unwrap(), vandermonde(4));
        let p = parse_polynomial("e1^2 - e2", 4, 1).unwrap();
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn files() {
        let text = "# squares\nn = 4\nx1^2\nx2^2  # second\n\nx3^2\nx4^2\n";
        let (n, gens) = parse_generator_file(text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(gens.len(), 4);
        assert_eq!(gens[1], x(2).pow(2));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_generator_file("n = 3\nx1\nx4\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        assert!(parse_generator_file("x1\n").is_err());
        assert!(parse_polynomial("x1 x2", 4, 1).is_err());
        assert!(parse_polynomial("(x1", 4, 1).is_err());
        assert!(parse_polynomial("x1 ? 2", 4, 1).is_err());
        assert!(parse_polynomial("", 4, 1).is_err());
    }
}
