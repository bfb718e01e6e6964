//! Expression grammar shared by coefficients and algebra elements.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' INT)?
//! atom  := INT | 'h' INT | NAME '[' INT (',' INT)* ']' | '(' expr ')'
//! ```
//!
//! `hK` is the Cartan variable `h~_K`; bracketed names are generators whose
//! meaning is supplied by the caller.

use num_bigint::BigInt;

use crate::coeffs::Coeff;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Int(BigInt),
    Var { index: usize, pos: usize },
    Gen { name: String, indices: Vec<usize>, pos: usize },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>, usize),
    Pow(Box<Ast>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn perr<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = text[start..i].parse().expect("digits");
            out.push((Tok::Int(v), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()[],".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return perr(i, format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            perr(self.pos(), format!("expected '{c}'"))
        }
    }

    fn small_int(&mut self) -> Result<usize> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                usize::try_from(&v).or_else(|_| perr(pos, "integer too large"))
            }
            _ => perr(pos, "expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let pos = self.pos();
                self.at += 1;
                lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.eat('-') {
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            let e = self.small_int()?;
            let e = u32::try_from(e).or_else(|_| perr(pos, "exponent too large"))?;
            return Ok(Ast::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                Ok(Ast::Int(v))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if self.eat('[') {
                    let mut indices = vec![self.small_int()?];
                    while self.eat(',') {
                        indices.push(self.small_int()?);
                    }
                    self.expect(']')?;
                    return Ok(Ast::Gen { name, indices, pos });
                }
                if let Some(digits) = name.strip_prefix('h') {
                    if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                        let index: usize = digits.parse().or_else(|_| perr(pos, "bad variable"))?;
                        return Ok(Ast::Var { index, pos });
                    }
                }
                perr(pos, format!("unknown symbol '{name}'"))
            }
            Some(Tok::Sym(c)) => perr(pos, format!("unexpected '{c}'")),
            None => perr(pos, "unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Ast> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let ast = p.expr()?;
    if p.at != p.toks.len() {
        return perr(p.pos(), "trailing input");
    }
    Ok(ast)
}

/// Values an expression can evaluate to.
pub trait ExprValue: Sized {
    fn from_coeff(c: Coeff) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division; implementations may only support scalar divisors.
    fn div(&self, o: &Self) -> std::result::Result<Self, String>;
}

impl ExprValue for Coeff {
    fn from_coeff(c: Coeff) -> Self {
        c
    }
    fn add(&self, o: &Self) -> Self {
        Coeff::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Coeff::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Coeff::mul(self, o)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> std::result::Result<Self, String> {
        self.checked_div(o).map_err(|e| e.to_string())
    }
}

/// Evaluates `ast` at rank `n`; `gen` resolves bracketed generator names.
pub fn eval<V, F>(ast: &Ast, n: usize, gen: &F) -> Result<V>
where
    V: ExprValue,
    F: Fn(&str, &[usize]) -> std::result::Result<V, String>,
{
    Ok(match ast {
        Ast::Int(v) => V::from_coeff(Coeff::integer(n, v.clone())),
        Ast::Var { index, pos } => {
            if *index == 0 || *index > n {
                return perr(*pos, format!("variable h{index} outside rank {n}"));
            }
            V::from_coeff(Coeff::h(n, *index))
        }
        Ast::Gen { name, indices, pos } => gen(name, indices).or_else(|m| perr(*pos, m))?,
        Ast::Neg(a) => eval::<V, F>(a, n, gen)?.neg(),
        Ast::Add(a, b) => eval::<V, F>(a, n, gen)?.add(&eval(b, n, gen)?),
        Ast::Sub(a, b) => eval::<V, F>(a, n, gen)?.sub(&eval(b, n, gen)?),
        Ast::Mul(a, b) => eval::<V, F>(a, n, gen)?.mul(&eval(b, n, gen)?),
        Ast::Div(a, b, pos) => {
            let num = eval::<V, F>(a, n, gen)?;
            let den = eval::<V, F>(b, n, gen)?;
            num.div(&den).or_else(|m| perr(*pos, m))?
        }
        Ast::Pow(a, e) => {
            let base = eval::<V, F>(a, n, gen)?;
            let mut acc = V::from_coeff(Coeff::one(n));
            for _ in 0..*e {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}

/// Parses a coefficient at rank `n`; generators are rejected.
pub fn parse_coeff(text: &str, n: usize) -> Result<Coeff> {
    let ast = parse(text)?;
    eval::<Coeff, _>(&ast, n, &|name: &str, _: &[usize]| {
        Err(format!("generator '{name}' not allowed in a coefficient"))
    })
}

/// Highest `hK` index mentioned, used when the rank is not given.
pub fn max_variable(ast: &Ast) -> usize {
    match ast {
        Ast::Var { index, .. } => *index,
        Ast::Int(_) | Ast::Gen { .. } => 0,
        Ast::Neg(a) | Ast::Pow(a, _) => max_variable(a),
        Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) | Ast::Div(a, b, _) => {
            max_variable(a).max(max_variable(b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_examples() {
        for s in ["(h1-h2+1)/(h1-h2)", "h1", "1/(h1-h2)^2", "-1/2", "(h1^2-2*h1*h2+h2^2-1)/(h1-h2)^2"] {
            let c = parse_coeff(s, 2).unwrap();
            assert_eq!(c.to_string(), s);
        }
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_coeff("h1 + * 2", 2),
            Err(Error::Parse {
                pos: 5,
                msg: "unexpected '*'".into()
            })
        );
        assert!(matches!(parse_coeff("h3", 2), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_coeff("1/(h1-h1)", 2), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_coeff("x[1,1]", 2), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_coeff("(h1", 2), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn precedence() {
        let a = parse_coeff("-h1^2", 1).unwrap();
        let b = parse_coeff("0-(h1*h1)", 1).unwrap();
        assert_eq!(a, b);
        let c = parse_coeff("1/2*h1", 1).unwrap();
        assert_eq!(c.to_string(), "(h1)/2".replace("(h1)", "h1"));
    }
}
