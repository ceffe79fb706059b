//! Parser for polynomial expressions in `x` and `y` and for arcs in `y`.
//!
//! Grammar: sums and differences of products; `*` or juxtaposition for
//! products, `/` by nonzero constants, `^` with a non-negative integer or a
//! parenthesized fraction `(p/q)`. Fractional powers are accepted only on
//! monomials, and only when parsing arcs.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::polyring::{BiPoly, Monomial};
use crate::puiseux::TruncatedPuiseux;

const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn parse_err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Num(s.parse().unwrap())));
                continue;
            }
            _ if c.is_alphabetic() => {
                while i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, if s == "x" || s == "y" { Tok::Var(c) } else { Tok::Ident(s) }));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return parse_err(start, format!("unexpected character '{c}'")),
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    fractional: bool,
    allow_x: bool,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            parse_err(self.pos(), format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary()?;
                    let c = d.constant_term();
                    if d.num_terms() != 1 || c.is_zero() {
                        return parse_err(pos, "division only by nonzero constants");
                    }
                    acc = acc.scale(&(Rat::one() / c));
                }
                Tok::Num(_) | Tok::Var(_) | Tok::LParen | Tok::Ident(_) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let e = self.exponent()?;
        if e.is_integer() {
            let k = e.to_integer().to_u32().filter(|k| *k <= MAX_EXPONENT);
            let Some(k) = k else {
                return parse_err(pos, format!("exponent {e} is too large"));
            };
            return Ok(base.pow(k));
        }
        if !self.fractional {
            return parse_err(pos, "polynomial exponents must be integers");
        }
        let mut terms = base.terms();
        match (terms.next(), terms.next()) {
            (Some((m, c)), None) if c.is_one() && m.x == 0 => {
                Ok(BiPoly::monomial(Rat::one(), 0, &m.y * &e))
            }
            _ => parse_err(pos, "fractional powers apply only to y"),
        }
    }

    fn exponent(&mut self) -> Result<Rat> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => Ok(Rat::from_integer(n)),
            Tok::LParen => {
                let pos = self.pos();
                let Tok::Num(p) = self.bump() else {
                    return parse_err(pos, "exponent must be a non-negative constant");
                };
                let mut e = Rat::from_integer(p);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let pos = self.pos();
                    match self.bump() {
                        Tok::Num(q) if !q.is_zero() => e /= Rat::from_integer(q),
                        _ => return parse_err(pos, "expected a nonzero denominator"),
                    }
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => parse_err(pos, "exponent must be a non-negative constant"),
        }
    }

    fn primary(&mut self) -> Result<BiPoly> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => Ok(BiPoly::constant(Rat::from_integer(n))),
            Tok::Var('x') if self.allow_x => Ok(BiPoly::x()),
            Tok::Var('y') => Ok(BiPoly::y()),
            Tok::Var(v) => parse_err(pos, format!("variable {v} is not allowed here")),
            Tok::Ident(s) => parse_err(pos, format!("unknown variable '{s}'")),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::End => parse_err(pos, "unexpected end of input"),
            _ => parse_err(pos, "expected a number, a variable or '('"),
        }
    }
}

fn run(text: &str, fractional: bool, allow_x: bool) -> Result<BiPoly> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        fractional,
        allow_x,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return parse_err(p.pos(), "unexpected input after the expression");
    }
    Ok(e)
}

/// Expands a polynomial expression in `x` and `y` with rational coefficients.
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    run(text, false, true)
}

/// Parses an arc `x = phi(y)` given as a sum of terms `c*y^e` with
/// positive rational exponents, for example `y^(5/3) - 2*y^2`.
pub fn parse_arc(text: &str) -> Result<TruncatedPuiseux> {
    let p = run(text, true, false)?;
    if !p.constant_term().is_zero() {
        return Err(Error::InvalidArc("an arc through the origin has no constant term".into()));
    }
    let terms: Vec<(Rat, Rat)> = p
        .terms()
        .map(|(m, c): (&Monomial, &Rat)| (m.y.clone(), c.clone()))
        .collect();
    TruncatedPuiseux::from_rational(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};
    use proptest::prelude::*;

    fn p(t: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_poly("x^3 - y^5 + y^6").unwrap(), p(&[(1, 3, 0), (-1, 0, 5), (1, 0, 6)]));
        let q = p(&[(1, 1, 0), (-1, 0, 2)]).pow(3).mul(&p(&[(1, 1, 0), (1, 0, 1)]));
        assert_eq!(parse_poly("(x - y^2)^3 * (x + y)").unwrap(), q);
        assert_eq!(parse_poly("2x y - x/2").unwrap(), p(&[(2, 1, 1)]).sub(&BiPoly::x().scale(&ratio(1, 2))));
        assert_eq!(parse_poly("-(x)^2").unwrap(), p(&[(-1, 2, 0)]));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly("x^y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x + z"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("x^(1/2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(x + y"), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(parse_poly("x / y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("x $ y"), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn arcs() {
        let a = parse_arc("y^(5/3)").unwrap();
        assert_eq!(a.terms().len(), 1);
        assert_eq!(a.terms()[0].0, ratio(5, 3));
        let a = parse_arc("y^2 - 3*y^(7/2)").unwrap();
        assert_eq!(a.to_string(), "y^2 - 3*y^(7/2)");
        assert!(parse_arc("0").unwrap().is_empty());
        assert!(parse_arc("1 + y").is_err());
        assert!(parse_arc("x").is_err());
        assert!(parse_arc("(y + y^2)^(1/2)").is_err());
        assert_eq!(parse_arc("(y^(1/2))^3").unwrap().terms()[0].0, ratio(3, 2));
        assert_eq!(parse_arc("y").unwrap().terms()[0].0, rat(1));
    }

    fn arb_poly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((-9i64..=9, 0u32..5, 0u32..5), 0..7).prop_map(|t| BiPoly::from_int_terms(&t))
    }

    proptest! {
        #[test]
        fn print_then_parse(f in arb_poly(), d in 1i64..5) {
            let f = f.scale(&ratio(1, d));
            prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }
    }
}
