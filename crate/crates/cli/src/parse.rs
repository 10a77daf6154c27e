//! Polynomial input: expressions like `x^5 - 5x + 12` or `3/2 y^2 - 1`, and
//! coefficient lists like `[1, 0, 0, 0, -5, 12]` written highest degree
//! first.

use std::fmt;

use galois_core::RatPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Largest degree accepted from the user.
pub const MAX_DEGREE: usize = 5;
/// Exponents above this are rejected before any expansion happens.
const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.column, self.message)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' | '\u{00b7}' | '\u{00d7}' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((Tok::Num(decimal(&text, col)?), col));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(ParseError {
                column: col,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

fn decimal(text: &str, column: usize) -> Result<BigRational, ParseError> {
    let bad = || ParseError {
        column,
        message: format!("malformed number '{text}'"),
    };
    let (int, frac) = match text.split_once('.') {
        Some((a, b)) => (a, b),
        None => (text, ""),
    };
    if frac.contains('.') || (int.is_empty() && frac.is_empty()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    Ok(BigRational::new(num, den))
}

/// Dense rational polynomial under construction, lowest degree first.
type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn constant(c: BigRational) -> Poly {
    trim(vec![c])
}

fn add(a: &Poly, b: &Poly, sign: i32) -> Poly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).unwrap_or(&zero);
                let y = b.get(i).unwrap_or(&zero);
                if sign < 0 {
                    x - y
                } else {
                    x + y
                }
            })
            .collect(),
    )
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn degree(p: &Poly) -> usize {
    p.len().saturating_sub(1)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    var: Option<(String, usize)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            let sign = match self.peek() {
                Tok::Plus => 1,
                Tok::Minus => -1,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.term()?;
            acc = add(&acc, &rhs, sign);
        }
    }

    /// Implicit multiplication: `5x`, `2(x + 1)`, `(x - 1)(x + 1)`. A bare
    /// number on the right is not accepted, so `1 2` is an error.
    fn starts_implicit_factor(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = mul(&acc, &rhs);
                }
                Tok::Slash => {
                    self.bump();
                    let col = self.column();
                    let rhs = self.unary()?;
                    if rhs.len() != 1 {
                        return Err(ParseError {
                            column: col,
                            message: if rhs.is_empty() {
                                "division by zero".into()
                            } else {
                                "division by a non-constant".into()
                            },
                        });
                    }
                    let inv = rhs[0].recip();
                    acc = acc.iter().map(|c| c * &inv).collect();
                }
                _ if self.starts_implicit_factor() => {
                    let rhs = self.power()?;
                    acc = mul(&acc, &rhs);
                }
                _ => return Ok(acc),
            }
            self.check_growth(&acc)?;
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.iter().map(|c| -c).collect())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.column();
        let e = match self.bump() {
            Tok::Num(n) if n.is_integer() => n.to_integer(),
            _ => {
                return Err(ParseError {
                    column: col,
                    message: "exponent must be a non-negative integer".into(),
                })
            }
        };
        let e: u32 = match u32::try_from(e) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => {
                return Err(ParseError {
                    column: col,
                    message: format!("exponent too large (at most {MAX_EXPONENT})"),
                })
            }
        };
        let mut out = constant(BigRational::one());
        for _ in 0..e {
            out = mul(&out, &base);
            self.check_growth(&out)?;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let col = self.column();
        match self.bump() {
            Tok::Num(n) => Ok(constant(n)),
            Tok::Ident(name) => {
                match &self.var {
                    None => self.var = Some((name, col)),
                    Some((v, _)) if *v == name => {}
                    Some((v, _)) => {
                        return Err(ParseError {
                            column: col,
                            message: format!(
                                "polynomial must be in one variable, found '{v}' and '{name}'"
                            ),
                        })
                    }
                }
                Ok(vec![BigRational::zero(), BigRational::one()])
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::End => Err(ParseError {
                column: col,
                message: "unexpected end of input".into(),
            }),
            t => Err(ParseError {
                column: col,
                message: format!("unexpected {}", describe(&t)),
            }),
        }
    }

    /// Caps intermediate degree so something like `(x^64)^64` fails fast.
    fn check_growth(&self, p: &Poly) -> Result<(), ParseError> {
        if degree(p) > MAX_EXPONENT as usize {
            return self.error(format!("degree exceeds {MAX_EXPONENT} while expanding"));
        }
        Ok(())
    }

    fn list(&mut self) -> Result<Poly, ParseError> {
        self.expect(Tok::LBracket, "'['")?;
        let mut desc = Vec::new();
        loop {
            let col = self.column();
            let c = self.expr()?;
            if c.len() > 1 || self.var.is_some() {
                return Err(ParseError {
                    column: col,
                    message: "list entries must be numbers".into(),
                });
            }
            desc.push(c.into_iter().next().unwrap_or_else(BigRational::zero));
            match self.bump() {
                Tok::Comma => continue,
                Tok::RBracket => break,
                _ => {
                    return Err(ParseError {
                        column: self.toks[self.pos.saturating_sub(1)].1,
                        message: "expected ',' or ']'".into(),
                    })
                }
            }
        }
        desc.reverse();
        Ok(trim(desc))
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Num(_) => "number",
        Tok::Ident(_) => "variable",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::LBracket => "'['",
        Tok::RBracket => "']'",
        Tok::Comma => "','",
        Tok::End => "end of input",
    }
}

/// Parses one polynomial of degree at most 5.
pub fn parse_poly(text: &str) -> Result<RatPoly, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        var: None,
    };
    let poly = if *p.peek() == Tok::LBracket {
        p.list()?
    } else {
        p.expr()?
    };
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    if degree(&poly) > MAX_DEGREE {
        return Err(ParseError {
            column: 1,
            message: format!(
                "degree {} is too large; only degrees up to {MAX_DEGREE} are supported",
                degree(&poly)
            ),
        });
    }
    Ok(RatPoly::new(poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use galois_core::IntPoly;

    fn desc(c: &[i64]) -> RatPoly {
        RatPoly::from(IntPoly::from_desc(c))
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_poly("x^5 - 5x + 12").unwrap(), desc(&[1, 0, 0, 0, -5, 12]));
        assert_eq!(parse_poly("x^3 + 3x^2 - 3").unwrap(), desc(&[1, 3, 0, -3]));
        assert_eq!(parse_poly("  x^4+5*x+5 ").unwrap(), desc(&[1, 0, 0, 5, 5]));
        assert_eq!(parse_poly("y^2 \u{2212} 1").unwrap(), desc(&[1, 0, -1]));
        assert_eq!(parse_poly("-x + 7").unwrap(), desc(&[-1, 7]));
        assert_eq!(parse_poly("(x - 1)(x + 1)").unwrap(), desc(&[1, 0, -1]));
        assert_eq!(parse_poly("2(x^2 + 1) - x^2").unwrap(), desc(&[1, 0, 2]));
        assert_eq!(parse_poly("x^2*x^3 - 1").unwrap(), desc(&[1, 0, 0, 0, 0, -1]));
    }

    #[test]
    fn rational_coefficients() {
        assert_eq!(
            parse_poly("y^2 - 1/2").unwrap(),
            RatPoly::new(vec![r(-1, 2), r(0, 1), r(1, 1)])
        );
        assert_eq!(
            parse_poly("3/2x^2 + 0.25").unwrap(),
            RatPoly::new(vec![r(1, 4), r(0, 1), r(3, 2)])
        );
        assert_eq!(
            parse_poly("x^2/4 - x").unwrap(),
            RatPoly::new(vec![r(0, 1), r(-1, 1), r(1, 4)])
        );
    }

    #[test]
    fn lists() {
        assert_eq!(parse_poly("[1,0,1,1]").unwrap(), desc(&[1, 0, 1, 1]));
        assert_eq!(parse_poly("[ 1, 0, 0, 0, -5, 12 ]").unwrap(), desc(&[1, 0, 0, 0, -5, 12]));
        assert_eq!(
            parse_poly("[2, -1/2]").unwrap(),
            RatPoly::new(vec![r(-1, 2), r(2, 1)])
        );
        assert_eq!(parse_poly("[0, 1, 2]").unwrap(), desc(&[1, 2]));
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_poly("x^6 + 1").unwrap_err();
        assert!(e.message.contains("degree 6"), "{e}");
        let e = parse_poly("x^2 + y").unwrap_err();
        assert_eq!(e.column, 7);
        assert!(e.message.contains("one variable"));
        let e = parse_poly("x^2 + $").unwrap_err();
        assert_eq!(e.column, 7);
        let e = parse_poly("x^2 +").unwrap_err();
        assert_eq!(e.column, 6);
        assert!(e.message.contains("end of input"));
        let e = parse_poly("(x + 1").unwrap_err();
        assert_eq!(e.column, 7);
        assert!(parse_poly("x^1.5").is_err());
        assert!(parse_poly("x^100000").is_err());
        assert!(parse_poly("1/(x+1)").is_err());
        assert!(parse_poly("x/0").is_err());
        assert!(parse_poly("[1, x]").is_err());
        assert!(parse_poly("[1, 2").is_err());
        assert!(parse_poly("1..2").is_err());
        assert!(parse_poly("").is_err());
        assert_eq!(parse_poly("x - 1 2").unwrap_err().column, 7);
    }

    #[test]
    fn cancellation_is_fine() {
        assert_eq!(parse_poly("x^7 - x^7 + x").unwrap(), desc(&[1, 0]));
    }
}
