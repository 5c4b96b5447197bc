//! Sparse multivariate polynomials with exact rational coefficients.

mod groebner;
mod reduce;

pub use groebner::{buchberger, is_groebner_basis, same_ideal};
pub use reduce::{autoreduce, normal_form, s_polynomial};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::monomial::{Monomial, MonomialOrder, VariableContext};

pub type Coefficient = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different variable counts ({0} vs {1})")]
    ContextMismatch(usize, usize),
    #[error("polynomials are sorted by different orderings ({0} vs {1})")]
    OrderingMismatch(MonomialOrder, MonomialOrder),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
}

/// `coeff * mono` with a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coefficient,
    pub mono: Monomial,
}

/// Terms are kept strictly descending in `order`, without zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Self {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: Coefficient) -> Self {
        Self::from_terms(nvars, order, [(c, Monomial::one(nvars))])
    }

    pub fn from_monomial(mono: Monomial, order: MonomialOrder) -> Self {
        let nvars = mono.nvars();
        Self {
            nvars,
            order,
            terms: vec![Term {
                coeff: Coefficient::one(),
                mono,
            }],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    ///
    /// # Panics
    /// If a monomial has the wrong number of variables.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Coefficient, Monomial)>,
    {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, mono)| {
                assert_eq!(mono.nvars(), nvars, "term over the wrong variable count");
                Term { coeff, mono }
            })
            .collect();
        raw.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Self {
            nvars,
            order,
            terms,
        }
    }

    /// Parses the text grammar of [`crate::parse`].
    pub fn parse(
        text: &str,
        ctx: &VariableContext,
        order: MonomialOrder,
    ) -> Result<Self, crate::ParseError> {
        crate::parse::parse_polynomial(text, ctx, order)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Leading monomial of a polynomial known to be nonzero.
    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    /// Total degree of the highest-degree term; `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.total_degree()).max()
    }

    pub fn coefficient_of(&self, mono: &Monomial) -> Option<&Coefficient> {
        self.terms
            .binary_search_by(|t| self.order.cmp(mono, &t.mono))
            .ok()
            .map(|i| &self.terms[i].coeff)
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ContextMismatch(self.nvars, other.nvars));
        }
        if self.order != other.order {
            return Err(PolyError::OrderingMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.add_scaled(&Coefficient::one(), None, other))
    }

    pub fn subtract(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.add_scaled(&-Coefficient::one(), None, other))
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        Self {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiplies every term by `coeff * mono`. Admissibility keeps the term
    /// order intact.
    pub fn mul_term(&self, coeff: &Coefficient, mono: &Monomial) -> Polynomial {
        assert_eq!(
            mono.nvars(),
            self.nvars,
            "term over the wrong variable count"
        );
        if coeff.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        Self {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * coeff,
                    mono: t.mono.mul_unchecked(mono),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        self.mul_term(&Coefficient::one(), mono)
    }

    /// Multiplies by the single variable `x_index`.
    pub fn mul_var(&self, index: usize) -> Polynomial {
        Self {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.mul_var(index),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let mut acc = Self::zero(self.nvars, self.order);
        for t in &other.terms {
            acc = acc.add_scaled(&t.coeff, Some(&t.mono), self);
        }
        Ok(acc)
    }

    /// `self + c * m * other` by a single merge pass.
    pub(crate) fn add_scaled(
        &self,
        c: &Coefficient,
        m: Option<&Monomial>,
        other: &Polynomial,
    ) -> Polynomial {
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = other.terms.iter().map(|t| Term {
            coeff: &t.coeff * c,
            mono: match m {
                Some(m) => t.mono.mul_unchecked(m),
                None => t.mono.clone(),
            },
        });
        let mut pending = rhs.next();
        loop {
            match (lhs.peek(), pending.take()) {
                (None, None) => break,
                (Some(_), None) => out.push(lhs.next().unwrap().clone()),
                (None, Some(r)) => {
                    out.push(r);
                    pending = rhs.next();
                }
                (Some(l), Some(r)) => match order.cmp(&l.mono, &r.mono) {
                    Ordering::Greater => {
                        out.push(lhs.next().unwrap().clone());
                        pending = Some(r);
                    }
                    Ordering::Less => {
                        out.push(r);
                        pending = rhs.next();
                    }
                    Ordering::Equal => {
                        let coeff = &l.coeff + r.coeff;
                        if !coeff.is_zero() {
                            out.push(Term {
                                coeff,
                                mono: r.mono,
                            });
                        }
                        lhs.next();
                        pending = rhs.next();
                    }
                },
            }
        }
        Self {
            nvars: self.nvars,
            order,
            terms: out,
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// The same polynomial re-sorted under another ordering.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        Self::from_terms(
            self.nvars,
            order,
            self.terms.iter().map(|t| (t.coeff.clone(), t.mono.clone())),
        )
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Polynomial {
        Self {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub(crate) fn push_lowest(&mut self, term: Term) {
        debug_assert!(self
            .terms
            .last()
            .is_none_or(|t| self.order.cmp(&t.mono, &term.mono) == Ordering::Greater));
        self.terms.push(term);
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, ctx }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let ctx = VariableContext::new(names).map_err(|_| fmt::Error)?;
        write!(f, "{}", self.display(&ctx))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs).expect("polynomial sum")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.subtract(rhs).expect("polynomial difference")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Coefficient::one())
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, t) in self.poly.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono.display(self.ctx))?;
            } else {
                write!(f, "{abs}*{}", t.mono.display(self.ctx))?;
            }
        }
        Ok(())
    }
}

/// Sorts ascending by leading monomial; zero polynomials first.
pub fn sort_by_leading_monomial(polys: &mut [Polynomial], order: MonomialOrder) {
    polys.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => order.cmp(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    });
}
