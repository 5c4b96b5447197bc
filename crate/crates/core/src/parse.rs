//! Text grammar for monomials and polynomials.
//!
//! ```text
//! polynomial := sign? term (sign term)*
//! term       := factor ('*' factor)*
//! factor     := integer ('/' integer)? | identifier ('^' integer)?
//! ```
//!
//! Whitespace is free. Errors carry 1-based line and column.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::monomial::{Monomial, MonomialOrder, VariableContext};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl ParseError {
    fn at(column: usize, message: impl Into<String>) -> Self {
        Self {
            line: 1,
            column,
            message: message.into(),
        }
    }

    fn on_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

/// Tokens paired with their 1-based column.
fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => tokens.push((Token::Plus, column)),
            '-' => tokens.push((Token::Minus, column)),
            '*' => tokens.push((Token::Star, column)),
            '^' => tokens.push((Token::Caret, column)),
            '/' => tokens.push((Token::Slash, column)),
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits.parse::<BigInt>().expect("ascii digits");
                tokens.push((Token::Number(n), column));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((Token::Ident(chars[start..i].iter().collect()), column));
                continue;
            }
            other => {
                return Err(ParseError::at(
                    column,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
        i += 1;
    }
    Ok(tokens)
}

/// A term before variable names are resolved.
#[derive(Debug)]
struct RawTerm {
    coeff: BigRational,
    powers: Vec<(String, u32, usize)>,
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Self {
            tokens: tokenize(text)?,
            pos: 0,
            end_column: text.chars().count() + 1,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |&(_, c)| c)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::at(self.column(), message)
    }

    fn polynomial(&mut self) -> Result<Vec<RawTerm>, ParseError> {
        if self.tokens.is_empty() {
            return Err(self.error("empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut term = self.term()?;
            if negative {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            match self.next() {
                None => break,
                Some(Token::Plus) => negative = false,
                Some(Token::Minus) => negative = true,
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.error("expected `+`, `-` or end of input"));
                }
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let mut term = RawTerm {
            coeff: BigRational::one(),
            powers: Vec::new(),
        };
        self.factor(&mut term)?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            self.factor(&mut term)?;
        }
        Ok(term)
    }

    fn factor(&mut self, term: &mut RawTerm) -> Result<(), ParseError> {
        let column = self.column();
        match self.next() {
            Some(Token::Number(num)) => {
                let mut value = BigRational::from_integer(num);
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Number(den)) if !den.is_zero() => {
                            value /= BigRational::from_integer(den);
                        }
                        Some(Token::Number(_)) => {
                            self.pos -= 1;
                            return Err(self.error("zero denominator"));
                        }
                        _ => {
                            self.pos -= 1;
                            return Err(self.error("expected denominator"));
                        }
                    }
                }
                term.coeff *= value;
                Ok(())
            }
            Some(Token::Ident(name)) => {
                let mut exp = 1u32;
                if let Some(Token::Caret) = self.peek() {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Number(n)) => {
                            exp = u32::try_from(n).map_err(|_| {
                                ParseError::at(self.tokens[self.pos - 1].1, "exponent too large")
                            })?;
                        }
                        _ => {
                            self.pos -= 1;
                            return Err(self.error("expected a non-negative integer exponent"));
                        }
                    }
                }
                term.powers.push((name, exp, column));
                Ok(())
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a number or a variable"))
            }
        }
    }
}

fn resolve(
    terms: Vec<RawTerm>,
    ctx: &VariableContext,
    order: MonomialOrder,
) -> Result<Polynomial, ParseError> {
    let n = ctx.len();
    let mut out = Vec::with_capacity(terms.len());
    for term in terms {
        let mut exps = vec![0u32; n];
        for (name, e, column) in term.powers {
            let index = ctx
                .index_of(&name)
                .ok_or_else(|| ParseError::at(column, format!("unknown variable `{name}`")))?;
            exps[index] = exps[index]
                .checked_add(e)
                .ok_or_else(|| ParseError::at(column, "exponent too large"))?;
        }
        out.push((term.coeff, Monomial::new(exps)));
    }
    Ok(Polynomial::from_terms(n, order, out))
}

pub(crate) fn parse_monomial(text: &str, ctx: &VariableContext) -> Result<Monomial, ParseError> {
    let mut parser = Parser::new(text)?;
    let term = parser.term()?;
    if parser.peek().is_some() {
        return Err(parser.error("unexpected trailing input in monomial"));
    }
    if !term.coeff.is_one() {
        return Err(ParseError::at(
            1,
            "monomials carry no coefficient other than 1",
        ));
    }
    let poly = resolve(vec![term], ctx, MonomialOrder::default())?;
    Ok(poly.leading_monomial().cloned().expect("nonzero term"))
}

pub(crate) fn parse_polynomial(
    text: &str,
    ctx: &VariableContext,
    order: MonomialOrder,
) -> Result<Polynomial, ParseError> {
    let mut parser = Parser::new(text)?;
    let terms = parser.polynomial()?;
    resolve(terms, ctx, order)
}

/// Result of parsing a multi-line polynomial listing.
#[derive(Debug, Clone)]
pub struct PolynomialList {
    pub polynomials: Vec<Polynomial>,
    pub context: VariableContext,
    /// Variables were inferred from first appearance instead of declared.
    pub inferred_variables: bool,
}

/// Parses one polynomial per line. Blank lines and lines starting with `#`
/// are skipped. Without a declared context the variables are taken in order
/// of first appearance.
pub fn parse_polynomial_list(
    text: &str,
    declared: Option<&VariableContext>,
    order: MonomialOrder,
) -> Result<PolynomialList, ParseError> {
    let mut raw = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parser = Parser::new(line).map_err(|e| e.on_line(k + 1))?;
        let terms = parser.polynomial().map_err(|e| e.on_line(k + 1))?;
        raw.push((k + 1, terms));
    }
    if raw.is_empty() {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: "input contains no polynomials".into(),
        });
    }
    let (context, inferred_variables) = match declared {
        Some(ctx) => (ctx.clone(), false),
        None => {
            let mut names: Vec<String> = Vec::new();
            for (_, terms) in &raw {
                for term in terms {
                    for (name, _, _) in &term.powers {
                        if !names.contains(name) {
                            names.push(name.clone());
                        }
                    }
                }
            }
            if names.is_empty() {
                // Constants only: still need one variable to live over.
                names.push("x".into());
            }
            let ctx = VariableContext::new(names).map_err(|e| ParseError {
                line: 1,
                column: 1,
                message: e.to_string(),
            })?;
            (ctx, true)
        }
    };
    let polynomials = raw
        .into_iter()
        .map(|(line, terms)| resolve(terms, &context, order).map_err(|e| e.on_line(line)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolynomialList {
        polynomials,
        context,
        inferred_variables,
    })
}

/// Parses one monomial per line, skipping blanks and `#` comments.
pub fn parse_monomial_list(text: &str, ctx: &VariableContext) -> Result<Vec<Monomial>, ParseError> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(parse_monomial(trimmed, ctx).map_err(|e| e.on_line(k + 1))?);
    }
    if out.is_empty() {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: "input contains no monomials".into(),
        });
    }
    Ok(out)
}
