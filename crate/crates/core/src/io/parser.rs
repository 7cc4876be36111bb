//! Polynomial expressions: integer literals, variable names, `+ - * ^ ( )`.
//! Multiplication must be written out; exponents are integer literals.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kernel::{Field, PolyRing, Polynomial};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1000;
/// Largest number of terms an intermediate result may reach.
pub const MAX_TERMS: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

/// Position of the first character of the text within a larger document.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Origin {
    pub line: usize,
    pub column: usize,
}

impl Default for Origin {
    fn default() -> Self {
        Self { line: 1, column: 1 }
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("integer {n}"),
        Tok::Ident(s) => format!("name {s}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str, origin: Origin) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = origin.line;
    let mut col = origin.column;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                col += 1;
            }
            let n: BigInt = s.parse().expect("digits");
            out.push(Token {
                tok: Tok::Int(n),
                line: tl,
                col: tc,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: tl,
                col: tc,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(tl, tc, format!("unexpected character {other:?}"))),
        };
        chars.next();
        col += 1;
        out.push(Token { tok, line: tl, col: tc });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn guard(&self, p: Polynomial<F::Elem>, at: &Token) -> Result<Polynomial<F::Elem>> {
        if p.len() > MAX_TERMS {
            return Err(err(at.line, at.col, "expression too large"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial<F::Elem>> {
        let mut acc = self.term()?;
        loop {
            let t = self.peek().clone();
            match t.tok {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.ring.add(&acc, &rhs);
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.ring.sub(&acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F::Elem>> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            let at = self.bump();
            let rhs = self.unary()?;
            let deg = acc.total_degree().unwrap_or(0) as u64 + rhs.total_degree().unwrap_or(0) as u64;
            if deg > u16::MAX as u64 {
                return Err(err(at.line, at.col, "product overflows the degree range"));
            }
            acc = self.guard(self.ring.mul(&acc, &rhs), &at)?;
        }
        let t = self.peek();
        match t.tok {
            Tok::Int(_) | Tok::Ident(_) | Tok::LParen => Err(err(
                t.line,
                t.col,
                format!("expected an operator before {} (write '*' explicitly)", describe(&t.tok)),
            )),
            _ => Ok(acc),
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F::Elem>> {
        match self.peek().tok {
            Tok::Minus | Tok::Plus => {
                let t = self.bump();
                self.depth += 1;
                if self.depth > 256 {
                    return Err(err(t.line, t.col, "too many nested signs"));
                }
                let p = self.unary()?;
                self.depth -= 1;
                Ok(if t.tok == Tok::Minus { self.ring.neg(&p) } else { p })
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<F::Elem>> {
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let t = self.bump();
        let e = match &t.tok {
            Tok::Int(n) => n,
            other => {
                return Err(err(
                    t.line,
                    t.col,
                    format!("exponent must be a nonnegative integer literal, found {}", describe(other)),
                ))
            }
        };
        let e: u32 = match u32::try_from(e.clone()) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return Err(err(t.line, t.col, format!("exponent {e} exceeds {MAX_EXPONENT}"))),
        };
        let deg = base.total_degree().unwrap_or(0) as u64;
        if deg * e as u64 > u16::MAX as u64 {
            return Err(err(t.line, t.col, "exponent overflows the degree range"));
        }
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = self.guard(self.ring.mul(&acc, &base), &caret)?;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Polynomial<F::Elem>> {
        let t = self.bump();
        match t.tok {
            Tok::Int(n) => Ok(self.ring.constant(self.ring.field().from_bigint(&n))),
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(self.ring.var(i)),
                None => Err(err(t.line, t.col, format!("unknown variable {name}"))),
            },
            Tok::LParen => {
                self.depth += 1;
                if self.depth > 256 {
                    return Err(err(t.line, t.col, "parentheses nested too deeply"));
                }
                let inner = self.expr()?;
                self.depth -= 1;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(err(close.line, close.col, format!("expected ')', found {}", describe(&close.tok))));
                }
                Ok(inner)
            }
            other => Err(err(t.line, t.col, format!("expected a number, variable or '(', found {}", describe(&other)))),
        }
    }
}

/// Parses `text` as a polynomial of `ring`, reporting positions as if the
/// text started at `origin`.
pub fn parse_polynomial_at<F: Field>(text: &str, ring: &PolyRing<F>, origin: Origin) -> Result<Polynomial<F::Elem>> {
    let toks = lex(text, origin)?;
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        depth: 0,
    };
    let f = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(err(t.line, t.col, format!("unexpected {}", describe(&t.tok))));
    }
    Ok(f)
}

pub fn parse_polynomial<F: Field>(text: &str, ring: &PolyRing<F>) -> Result<Polynomial<F::Elem>> {
    parse_polynomial_at(text, ring, Origin::default())
}

/// Splits at commas outside parentheses, keeping each piece's starting column
/// offset (in characters).
pub fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i64;
    let mut start_byte = 0;
    let mut start_col = 0;
    for (col, (i, c)) in text.char_indices().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start_col, &text[start_byte..i]));
                start_byte = i + 1;
                start_col = col + 1;
            }
            _ => {}
        }
    }
    out.push((start_col, &text[start_byte..]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PrimeField;

    fn ring(p: u64) -> std::sync::Arc<PolyRing<PrimeField>> {
        PolyRing::new(PrimeField::new(p).unwrap(), vec!["x".into(), "y".into(), "z".into()])
    }

    #[test]
    fn grammar() {
        let r = ring(7);
        let f = parse_polynomial("x^2*y - 3*z", &r).unwrap();
        assert_eq!(r.format(&f), "x^2*y + 4*z");
        let g = parse_polynomial("(x+y)^2", &r).unwrap();
        assert_eq!(r.format(&g), "x^2 + 2*x*y + y^2");
        assert_eq!(parse_polynomial("-(x) * -y", &r).unwrap(), r.mul(&r.var(0), &r.var(1)));
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
    }

    #[test]
    fn positioned_errors() {
        let r = ring(32003);
        let e = parse_polynomial("x^2 + w", &r).unwrap_err();
        assert_eq!(e.to_string(), "unknown variable w at 1:7");
        let e = parse_polynomial("2x", &r).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 2, .. }));
        let e = parse_polynomial("x^y", &r).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 3, .. }));
        let e = parse_polynomial("x +\n  $", &r).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 3, .. }));
        assert!(parse_polynomial("(x", &r).is_err());
        assert!(parse_polynomial("x)", &r).is_err());
        assert!(parse_polynomial("", &r).is_err());
        assert!(parse_polynomial("x^99999999999999999999", &r).is_err());
    }

    #[test]
    fn splitting() {
        let parts = split_top_level("x^2, (x+y)*(y, z)");
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[1], (4, " (x+y)*(y, z)"));
    }
}
