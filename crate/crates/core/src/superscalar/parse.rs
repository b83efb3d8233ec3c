//! Text grammar for ring elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'|'/'] power)*       (juxtaposition also multiplies)
//! power  := atom ['^' ['-'] integer]
//! atom   := integer | name | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero rational constants and negative
//! powers only on invertible (Laurent monomial) atoms. The canonical
//! rendering `-1/2*a^2*E^-1*xi*eta` is a sentence of this grammar.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Rational, Ring, ScalarError, SuperScalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
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
            out.push((start + 1, Tok::Num(s.parse().unwrap())));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start + 1, Tok::Name(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i + 1, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ScalarError::Parse { col: i + 1, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(c, _)| *c).unwrap_or(self.len + 1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ScalarError> {
        Err(ScalarError::Parse { col: self.col(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SuperScalar, ScalarError> {
        let mut acc = self.ring.zero();
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SuperScalar, ScalarError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let p = self.power()?;
                acc = &acc * &p;
            } else if self.eat('/') {
                let col = self.col();
                let p = self.power()?;
                match p.as_constant() {
                    Some(q) if !q.is_zero() => acc = acc.scale(&q.recip()),
                    _ => {
                        return Err(ScalarError::Parse {
                            col,
                            msg: "division only by nonzero rational constants".into(),
                        })
                    }
                }
            } else if matches!(self.peek(), Some(Tok::Name(_)) | Some(Tok::Num(_)) | Some(Tok::Sym('('))) {
                let p = self.power()?;
                acc = &acc * &p;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<SuperScalar, ScalarError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let col = self.col();
        let k = match self.peek() {
            Some(Tok::Num(n)) => {
                let n: i32 = n.try_into().map_err(|_| ScalarError::Parse { col, msg: "exponent too large".into() })?;
                self.pos += 1;
                n
            }
            _ => return self.err("expected integer exponent"),
        };
        let k = if neg { -k } else { k };
        base.powi(k).map_err(|e| ScalarError::Parse { col, msg: e.to_string() })
    }

    fn atom(&mut self) -> Result<SuperScalar, ScalarError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(Rational::from_integer(n)))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                self.ring.var(&name).map_err(|e| ScalarError::Parse { col, msg: e.to_string() })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(super) fn parse_expr(ring: &Ring, text: &str) -> Result<SuperScalar, ScalarError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ScalarError::Parse { col: 1, msg: "empty expression".into() });
    }
    let mut p = Parser { ring, toks, pos: 0, len: text.chars().count() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::super::*;

    fn ring() -> Ring {
        Ring::with_names(&["a", "b", "c", "d", "s"], &["E"], &["xi", "eta"]).unwrap()
    }

    #[test]
    fn parses_products_and_parentheses() {
        let r = ring();
        assert_eq!(r.p("c(a-d)"), r.p("c*a - c*d"));
        assert_eq!(r.p("-(b+c)(a+d)"), r.p("-a*b - b*d - a*c - c*d"));
        assert_eq!(r.p("xi/2"), r.p("1/2*xi"));
        assert_eq!(r.p("(a+b)^2"), r.p("a^2 + 2*a*b + b^2"));
    }

    #[test]
    fn negative_exponent_requires_laurent() {
        let r = ring();
        assert_eq!(r.p("E^-2*E^2"), r.one());
        assert!(matches!(r.parse("a^-1"), Err(ScalarError::Parse { .. })));
    }

    #[test]
    fn errors_carry_columns() {
        let r = ring();
        match r.parse("a + q") {
            Err(ScalarError::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("{other:?}"),
        }
        assert!(r.parse("a +").is_err());
        assert!(r.parse("a/b").is_err());
        assert!(r.parse("a $ b").is_err());
    }

    #[test]
    fn render_parse_round_trip() {
        let r = ring();
        for text in ["-1/2*a^2*E^-1*xi*eta", "a^2 - 1", "3/4*s*E^3 + xi*eta - 7"] {
            let x = r.p(text);
            assert_eq!(r.p(&x.to_string()), x);
            assert_eq!(r.p(&x.compact()), x);
        }
    }
}
