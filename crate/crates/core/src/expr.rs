//! Expression grammar shared by polynomials and enveloping-algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | INT '/' INT | 'x'INT | 'X'INT | '(' expr ')'
//! ```
//!
//! Lowercase `x1..xk` are base-algebra coordinates, uppercase `X1..Xr` are Lie generators.
//! Whitespace is insignificant. Products are kept in source order, which matters once
//! generators are involved.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::AlgebraError;
use crate::poly::{Poly, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(Rational),
    Var { index: usize, position: usize },
    Gen { index: usize, position: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational),
    Var(usize),
    Gen(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(position: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Syntax { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, AlgebraError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        let start = j;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        (start, j)
    };
    let skip_ws = |mut j: usize| {
        while j < chars.len() && chars[j].is_whitespace() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            'x' | 'X' => {
                let (s, e) = digits(i + 1);
                if s == e {
                    let mut j = i + 1;
                    while j < chars.len() && chars[j].is_alphanumeric() {
                        j += 1;
                    }
                    let name: String = chars[i..j].iter().collect();
                    return Err(AlgebraError::UnknownVariable { name, position: start });
                }
                let idx: usize = chars[s..e]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| syntax(start, "index too large"))?;
                if idx == 0 {
                    let name: String = chars[i..e].iter().collect();
                    return Err(AlgebraError::UnknownVariable { name, position: start });
                }
                i = e;
                tokens.push((if c == 'x' { Token::Var(idx - 1) } else { Token::Gen(idx - 1) }, start));
                continue;
            }
            d if d.is_ascii_digit() => {
                let (s, e) = digits(i);
                let num: BigInt = chars[s..e].iter().collect::<String>().parse().expect("digits");
                let j = skip_ws(e);
                if j < chars.len() && chars[j] == '/' {
                    let k = skip_ws(j + 1);
                    let (ds, de) = digits(k);
                    if ds == de {
                        return Err(syntax(k, "expected integer denominator after '/'"));
                    }
                    let den: BigInt =
                        chars[ds..de].iter().collect::<String>().parse().expect("digits");
                    if den.is_zero() {
                        return Err(syntax(ds, "zero denominator"));
                    }
                    tokens.push((Token::Number(Rational::new(num, den)), start));
                    i = de;
                } else {
                    tokens.push((Token::Number(Rational::from_integer(num)), start));
                    i = e;
                }
                continue;
            }
            c if c.is_alphabetic() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_alphanumeric() {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                return Err(AlgebraError::UnknownVariable { name, position: start });
            }
            other => return Err(syntax(start, format!("unexpected character '{other}'"))),
        };
        tokens.push((tok, start));
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Expr, AlgebraError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, AlgebraError> {
        let mut lhs = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, AlgebraError> {
        if let Some(Token::Minus) = self.peek() {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, AlgebraError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let at = self.position();
            match self.tokens.get(self.pos) {
                Some((Token::Number(n), _)) if n.is_integer() => {
                    let e: u32 = n
                        .numer()
                        .try_into()
                        .map_err(|_| syntax(at, "exponent out of range"))?;
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(syntax(at, "exponent must be a nonnegative integer literal")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, AlgebraError> {
        let at = self.position();
        let Some((tok, position)) = self.tokens.get(self.pos).cloned() else {
            return Err(syntax(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Token::Number(n) => Ok(Expr::Number(n)),
            Token::Var(index) => Ok(Expr::Var { index, position }),
            Token::Gen(index) => Ok(Expr::Gen { index, position }),
            Token::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(syntax(self.position(), "expected ')'")),
                }
            }
            other => Err(syntax(position, format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, AlgebraError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0, end: text.chars().count() };
    let e = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(syntax(parser.position(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Evaluation context for an [`Expr`]: knows how to build constants, variables and
/// generators in some ring and how to combine them.
pub trait ExprContext {
    type Value;
    fn number(&self, c: &Rational) -> Self::Value;
    fn variable(&self, index: usize, position: usize) -> Result<Self::Value, AlgebraError>;
    fn generator(&self, index: usize, position: usize) -> Result<Self::Value, AlgebraError>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
}

pub fn evaluate<C: ExprContext>(expr: &Expr, ctx: &C) -> Result<C::Value, AlgebraError> {
    Ok(match expr {
        Expr::Number(c) => ctx.number(c),
        Expr::Var { index, position } => ctx.variable(*index, *position)?,
        Expr::Gen { index, position } => ctx.generator(*index, *position)?,
        Expr::Add(a, b) => ctx.add(&evaluate(a, ctx)?, &evaluate(b, ctx)?),
        Expr::Sub(a, b) => ctx.sub(&evaluate(a, ctx)?, &evaluate(b, ctx)?),
        Expr::Mul(a, b) => ctx.mul(&evaluate(a, ctx)?, &evaluate(b, ctx)?),
        Expr::Neg(a) => ctx.neg(&evaluate(a, ctx)?),
        Expr::Pow(a, e) => {
            let base = evaluate(a, ctx)?;
            let mut acc = ctx.number(&Rational::from_integer(1.into()));
            for _ in 0..*e {
                acc = ctx.mul(&acc, &base);
            }
            acc
        }
    })
}

/// Evaluates into `Q[x1..xk]`; generator tokens are rejected.
pub struct PolyContext {
    pub nvars: usize,
}

impl ExprContext for PolyContext {
    type Value = Poly;

    fn number(&self, c: &Rational) -> Poly {
        Poly::constant(self.nvars, c.clone())
    }

    fn variable(&self, index: usize, position: usize) -> Result<Poly, AlgebraError> {
        if index < self.nvars {
            Ok(Poly::var(self.nvars, index))
        } else {
            Err(AlgebraError::UnknownVariable { name: format!("x{}", index + 1), position })
        }
    }

    fn generator(&self, index: usize, position: usize) -> Result<Poly, AlgebraError> {
        Err(AlgebraError::UnknownVariable { name: format!("X{}", index + 1), position })
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }

    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a - b
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a * b
    }

    fn neg(&self, a: &Poly) -> Poly {
        -a
    }
}

/// Parses a polynomial in `x1..x{nvars}`.
pub fn parse_poly(text: &str, nvars: usize) -> Result<Poly, AlgebraError> {
    evaluate(&parse_expr(text)?, &PolyContext { nvars })
}

pub fn render_poly(p: &Poly) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, MultiIndex};

    #[test]
    fn literal_reading() {
        let p = parse_poly("3*x1^2 - 1/2", 1).unwrap();
        let expected = Poly::from_terms(
            1,
            [(MultiIndex::new(vec![2]), rat(3, 1)), (MultiIndex::new(vec![0]), rat(-1, 2))],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn canonicalization() {
        assert_eq!(parse_poly("x1*x1", 1).unwrap(), parse_poly("x1^2", 1).unwrap());
        assert_eq!(render_poly(&parse_poly("0*x1", 1).unwrap()), "0");
        assert_eq!(parse_poly(" ( x1 + 2 ) ^ 2 ", 1).unwrap().to_string(), "x1^2 + 4*x1 + 4");
        assert_eq!(parse_poly("2 / 4", 1).unwrap().to_string(), "1/2");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x1 + * 2", 1) {
            Err(AlgebraError::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_poly("x3 + 1", 2),
            Err(AlgebraError::UnknownVariable { position: 0, .. })
        ));
        assert!(matches!(parse_poly("y + 1", 2), Err(AlgebraError::UnknownVariable { .. })));
        assert!(matches!(parse_poly("X1", 2), Err(AlgebraError::UnknownVariable { .. })));
        assert!(parse_poly("x1^x1", 1).is_err());
        assert!(parse_poly("x1^-1", 1).is_err());
        assert!(parse_poly("1/0", 1).is_err());
        assert!(parse_poly("(x1", 1).is_err());
        assert!(parse_poly("x1 x1", 1).is_err());
    }
}
