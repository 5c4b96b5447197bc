//! Monomials over a fixed, ordered list of variables and the admissible
//! orderings used to compare them.
//!
//! Variable precedence is positional: the variable at index 0 is the highest
//! (`x1 > x2 > ... > xn`). Reordering variables means permuting the name
//! list and the exponent vectors together.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

/// Upper bound on the number of variables; variable sets are 64-bit masks.
pub const MAX_VARIABLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("monomials live over different variable counts ({0} vs {1})")]
    ContextMismatch(usize, usize),
    #[error("monomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("invalid variable list: {0}")]
    InvalidContext(String),
}

/// The ordered variable names a computation runs over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<I, S>(names: I) -> Result<Self, MonomialError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(MonomialError::InvalidContext("no variables".into()));
        }
        if names.len() > MAX_VARIABLES {
            return Err(MonomialError::InvalidContext(format!(
                "{} variables exceeds the limit of {MAX_VARIABLES}",
                names.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(MonomialError::InvalidContext(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if names[..i].contains(name) {
                return Err(MonomialError::InvalidContext(format!(
                    "duplicate variable `{name}`"
                )));
            }
        }
        Ok(Self { names })
    }

    /// Parses a comma separated list such as `x,y,z`.
    pub fn parse_list(list: &str) -> Result<Self, MonomialError> {
        Self::new(list.split(',').map(|s| s.trim().to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Context whose position `i` holds the variable at `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len(), "permutation length");
        Self {
            names: perm.iter().map(|&i| self.names[i].clone()).collect(),
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A set of variable indices, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VarSet(u64);

impl VarSet {
    pub const fn empty() -> Self {
        VarSet(0)
    }

    /// All of the first `n` variables.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARIABLES);
        if n == MAX_VARIABLES {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut set = Self::empty();
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARIABLES && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    /// Complement relative to the first `n` variables.
    pub fn complement(self, n: usize) -> VarSet {
        VarSet(!self.0 & Self::full(n).0)
    }

    /// Indices in increasing order, i.e. from the highest variable down.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Renders the set with variable names, e.g. `{x, z}`.
    pub fn display<'a>(&self, ctx: &'a VariableContext) -> VarSetDisplay<'a> {
        VarSetDisplay { set: *self, ctx }
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VarSetDisplay<'a> {
    set: VarSet,
    ctx: &'a VariableContext,
}

impl fmt::Display for VarSetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(self.ctx.name(i))?;
        }
        f.write_str("}")
    }
}

/// A power product `x1^d1 * ... * xn^dn` as a dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    /// The monomial `1` over `n` variables.
    pub fn one(n: usize) -> Self {
        Self {
            exps: vec![0; n].into_boxed_slice(),
        }
    }

    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Self { exps: exps.into() }
    }

    /// The single variable `x_index` over `n` variables.
    pub fn variable(n: usize, index: usize) -> Self {
        let mut exps = vec![0; n];
        exps[index] = 1;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Exponent of variable `index` (0-based).
    pub fn degree_of(&self, index: usize) -> Result<u32, MonomialError> {
        self.exps
            .get(index)
            .copied()
            .ok_or(MonomialError::IndexOutOfRange {
                index,
                nvars: self.nvars(),
            })
    }

    pub(crate) fn deg(&self, index: usize) -> u32 {
        self.exps[index]
    }

    /// Largest single exponent.
    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i),
        )
    }

    fn check_context(&self, other: &Monomial) -> Result<(), MonomialError> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(MonomialError::ContextMismatch(self.nvars(), other.nvars()))
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_context(other)?;
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(MonomialError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial::new(exps))
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool, MonomialError> {
        self.check_context(other)?;
        Ok(self.divides_unchecked(other))
    }

    /// `self / divisor`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_context(divisor)?;
        if !divisor.divides_unchecked(self) {
            return Err(MonomialError::NotDivisible);
        }
        Ok(self.quotient_unchecked(divisor))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_context(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_context(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| f(a, b))
                .collect::<Vec<_>>(),
        )
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.zip_with(other, |a, b| a.checked_add(b).expect("exponent overflow"))
    }

    /// Multiplies by a single variable.
    pub fn mul_var(&self, index: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[index] = exps[index].checked_add(1).expect("exponent overflow");
        Monomial { exps }
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub(crate) fn quotient_unchecked(&self, divisor: &Monomial) -> Monomial {
        self.zip_with(divisor, |a, b| a - b)
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.zip_with(other, u32::max)
    }

    /// Text form such as `x^2*y*z`; the empty product prints as `1`.
    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ctx }
    }

    /// Parses the text form produced by [`Monomial::display`].
    pub fn parse(text: &str, ctx: &VariableContext) -> Result<Monomial, crate::ParseError> {
        crate::parse::parse_monomial(text, ctx)
    }

    /// Reorders the exponent vector: position `i` of the result holds
    /// position `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial::new(perm.iter().map(|&i| self.exps[i]).collect::<Vec<_>>())
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    /// # Panics
    /// On mismatched variable counts or exponent overflow.
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial::mul(self, rhs).expect("monomial product")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// An admissible monomial ordering. All three kinds break ties between
/// variables by position, so `x1` is the largest variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegLex,
    DegRevLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [Self::Lex, Self::DegLex, Self::DegRevLex];

    pub fn is_degree_compatible(self) -> bool {
        !matches!(self, Self::Lex)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Lex => "lex",
            Self::DegLex => "deglex",
            Self::DegRevLex => "degrevlex",
        }
    }

    /// Compares two monomials over the same variables.
    ///
    /// # Panics
    /// If the variable counts differ; see [`MonomialOrder::compare`].
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(
            a.nvars(),
            b.nvars(),
            "comparing monomials of different contexts"
        );
        match self {
            Self::Lex => lex(a, b),
            Self::DegLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| lex(a, b)),
            Self::DegRevLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| revlex(a, b)),
        }
    }

    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering, MonomialError> {
        a.check_context(b)?;
        Ok(self.cmp(a, b))
    }

    /// `a < b` in this ordering.
    pub fn less(self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Less
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps.iter().cmp(b.exps.iter())
}

// Equal degree assumed: the monomial with the smaller exponent in the last
// differing variable is the larger one.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(Self::Lex),
            "deglex" | "grlex" => Ok(Self::DegLex),
            "degrevlex" | "grevlex" => Ok(Self::DegRevLex),
            other => Err(format!("unknown monomial ordering `{other}`")),
        }
    }
}

/// Enumerates all monomials in `n` variables of total degree at most `bound`,
/// in increasing total degree.
pub fn monomials_up_to_degree(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    for degree in 0..=bound {
        fill_degree(&mut current, 0, degree, &mut out);
    }
    out
}

fn fill_degree(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial::new(current.to_vec()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_degree(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}
