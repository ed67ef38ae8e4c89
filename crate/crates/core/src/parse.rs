//! Reader for the presentation file format:
//!
//! ```text
//! field Q            # or: field GF(5)
//! vars X, Y
//! relations:
//!   X^2 + Y^2 - 1
//!   X*Y
//! ```
//!
//! `#` starts a comment. Relations are one per line and may use `+ - * / ^`,
//! parentheses, integer literals and juxtaposition (`2X`). Division is only
//! by nonzero constants. Positions in errors are 1-based.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::kaehler::AlgebraPresentation;
use crate::multipoly::{MultiPoly, PolyRing};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

/// Tokens of one line paired with their 1-based columns.
fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(line, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(err(self.line, self.col(), message))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = if self.eat('-') {
            -&self.product()?
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Sym('(')))
    }

    fn product(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let col = self.col();
                let d = self.power()?;
                let c = match d.constant_value() {
                    Some(c) if d.num_terms() <= 1 => c,
                    _ => return Err(err(self.line, col, "division is only by constants")),
                };
                let inv = c
                    .inv()
                    .map_err(|_| err(self.line, col, "division by zero in this field"))?;
                acc = acc.scale(&inv);
            } else if self.starts_factor() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err(self.line, self.col(), "exponent too large"))?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => self.fail("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.ring, self.ring.field().from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(MultiPoly::var(self.ring, i))
                }
                None => self.fail(format!("unknown variable '{name}'")),
            },
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.fail("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            Some(Tok::Sym(c)) => self.fail(format!("unexpected '{c}'")),
            None => self.fail("unexpected end of expression"),
        }
    }
}

/// Parses one polynomial over `ring`; `line`/`col0` position the text for errors.
pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str, line: usize, col0: usize) -> Result<MultiPoly> {
    let toks = lex(text, line, col0)?;
    let end_col = col0 + text.chars().count();
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        line,
        end_col,
    };
    if p.peek().is_none() {
        return p.fail("empty expression");
    }
    let f = p.expr()?;
    if p.pos < p.toks.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(f)
}

/// Strips a `#` comment; returns the remaining text and the column of its first
/// non-blank character.
fn content(raw: &str) -> (&str, usize) {
    let code = raw.split('#').next().unwrap_or("");
    let trimmed = code.trim_start();
    let col = code.chars().count() - trimmed.chars().count() + 1;
    (trimmed.trim_end(), col)
}

fn parse_field(rest: &str, line: usize, col: usize) -> Result<Field> {
    let spec: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
    if spec == "Q" {
        return Ok(Field::rationals());
    }
    let inner = spec
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err(line, col, format!("expected 'Q' or 'GF(p)', found '{rest}'")))?;
    let p = u64::from_str(inner).map_err(|_| err(line, col, format!("invalid modulus '{inner}'")))?;
    Field::prime(p).map_err(|_| err(line, col, format!("GF({p}): {p} is not prime")))
}

fn parse_vars(rest: &str, line: usize, col: usize) -> Result<Vec<String>> {
    let mut vars: Vec<String> = Vec::new();
    let mut offset = 0;
    for piece in rest.split(',') {
        let name = piece.trim();
        let at = col + offset + piece.chars().take_while(|c| c.is_whitespace()).count();
        offset += piece.chars().count() + 1;
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_alphanumeric() || c == '_');
        if name.is_empty() {
            return Err(err(line, at, "empty variable name"));
        }
        if !valid {
            return Err(err(line, at, format!("invalid variable name '{name}'")));
        }
        if vars.iter().any(|v| v == name) {
            return Err(err(line, at, format!("variable '{name}' declared twice")));
        }
        vars.push(name.to_string());
    }
    Ok(vars)
}

/// Parses a complete presentation file.
pub fn parse_input(text: &str) -> Result<AlgebraPresentation> {
    let mut field = None;
    let mut ring: Option<Arc<PolyRing>> = None;
    let mut in_relations = false;
    let mut relations = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let (body, col) = content(raw);
        if body.is_empty() {
            continue;
        }
        if in_relations {
            let ring = ring.as_ref().expect("vars precede relations");
            relations.push(parse_polynomial(ring, body, line, col)?);
            continue;
        }
        let keyword: String = body.chars().take_while(|c| c.is_alphanumeric() || *c == ':').collect();
        let rest = &body[keyword.len()..];
        let rest_col = col + keyword.chars().count() + rest.chars().take_while(|c| c.is_whitespace()).count();
        match keyword.as_str() {
            "field" if field.is_none() => field = Some(parse_field(rest.trim(), line, rest_col)?),
            "field" => return Err(err(line, col, "field declared twice")),
            "vars" => {
                let Some(k) = field else {
                    return Err(err(line, col, "'field' must come before 'vars'"));
                };
                if ring.is_some() {
                    return Err(err(line, col, "vars declared twice"));
                }
                if rest.trim().is_empty() {
                    return Err(err(line, rest_col, "empty variable list"));
                }
                ring = Some(PolyRing::new(k, parse_vars(rest.trim(), line, rest_col)?));
            }
            "relations:" | "relations" => {
                if ring.is_none() {
                    return Err(err(line, col, "'vars' must come before 'relations:'"));
                }
                let tail = rest.trim_start().strip_prefix(':').unwrap_or(rest).trim();
                if keyword == "relations" && !rest.trim_start().starts_with(':') {
                    return Err(err(line, rest_col, "expected ':' after 'relations'"));
                }
                in_relations = true;
                if !tail.is_empty() {
                    let tcol = col + body.chars().count() - tail.chars().count();
                    relations.push(parse_polynomial(ring.as_ref().expect("checked"), tail, line, tcol)?);
                }
            }
            _ => return Err(err(line, col, format!("expected 'field', 'vars' or 'relations:', found '{body}'"))),
        }
    }
    let Some(ring) = ring else {
        return Err(err(last_line.max(1), 1, if field.is_none() { "missing 'field' line" } else { "missing 'vars' line" }));
    };
    AlgebraPresentation::new(ring, relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::Monomial;

    const SAMPLE: &str = "field Q            # or: field GF(5)\nvars X, Y\nrelations:\n  X^2 + Y^2 - 1\n  X*Y\n";

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_input(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_the_sample() {
        let p = parse_input(SAMPLE).unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.nrelations(), 2);
        assert_eq!(p.field(), Field::rationals());
        assert_eq!(p.relations()[0].to_string(), "X^2 + Y^2 - 1");
        assert_eq!(p.relations()[1].to_string(), "X*Y");
    }

    #[test]
    fn rejects_non_prime_modulus() {
        let (line, col, msg) = parse_err("field GF(4)\nvars X\n");
        assert_eq!((line, col), (1, 7));
        assert!(msg.contains("not prime"), "{msg}");
    }

    #[test]
    fn rejects_unknown_variable() {
        let (line, col, msg) = parse_err("field Q\nvars X, Y\nrelations:\n  X + Z\n");
        assert_eq!((line, col), (4, 7));
        assert!(msg.contains("'Z'"), "{msg}");
    }

    #[test]
    fn rejects_empty_vars() {
        let (line, _, msg) = parse_err("field Q\nvars\n");
        assert_eq!(line, 2);
        assert!(msg.contains("empty"), "{msg}");
        assert!(parse_err("field Q\nvars X,\n").2.contains("empty"));
        assert!(parse_err("field Q\nvars X, X\n").2.contains("twice"));
    }

    #[test]
    fn rejects_structural_errors() {
        assert!(parse_err("vars X\n").2.contains("field"));
        assert!(parse_err("field Q\nrelations:\nX\n").2.contains("vars"));
        assert!(parse_err("").2.contains("field"));
        assert!(parse_err("field Q\nvars X\nrelations:\n X^\n").2.contains("exponent"));
        assert!(parse_err("field Q\nvars X\nrelations:\n (X + 1\n").2.contains("')'"));
        assert!(parse_err("field Q\nvars X\nrelations:\n X / X\n").2.contains("constants"));
        assert!(parse_err("field GF(3)\nvars X\nrelations:\n X / 3\n").2.contains("zero"));
        assert!(parse_err("field Q\nvars X\nrelations:\n X $ 1\n").2.contains("'$'"));
        assert!(parse_err("field Q\nvars X\nrelations:\n X +\n").2.contains("end"));
    }

    #[test]
    fn arithmetic_forms() {
        let p = parse_input("field GF(5)\nvars X, Y\nrelations:\n 2X(Y - 1)^2 / 2 - -3\n 7*X^0 + 8\n").unwrap();
        let r = p.ring().clone();
        let k = r.field();
        let expected = MultiPoly::from_terms(
            &r,
            [
                (Monomial::new(vec![1, 2]), k.one()),
                (Monomial::new(vec![1, 1]), k.from_i64(-2)),
                (Monomial::new(vec![1, 0]), k.one()),
                (Monomial::new(vec![0, 0]), k.from_i64(3)),
            ],
        );
        assert_eq!(p.relations()[0], expected);
        assert!(p.relations()[1].is_zero());
        let q = parse_input("field Q\nvars X\nrelations: X^2 - 1/4 # inline\n").unwrap();
        assert_eq!(q.relations()[0].to_string(), "X^2 - 1/4");
    }

    #[test]
    fn no_relations_is_a_polynomial_ring() {
        let p = parse_input("field Q\nvars X, Y\n").unwrap();
        assert_eq!(p.nrelations(), 0);
    }
}
