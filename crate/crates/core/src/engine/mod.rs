//! Involutive reduction and the polynomial completion algorithms.

mod basis;
mod index;
mod minimal;
mod reduce;
mod triples;
mod verify;

use std::fmt;

use thiserror::Error;

use crate::division::DivisionKind;
use crate::monomial::{Monomial, MonomialOrder, VarSet};
use crate::poly::Polynomial;

pub use basis::involutive_basis;
pub use minimal::minimal_involutive_basis;
pub use reduce::{
    autoreduce_involutive, involutive_normal_form, involutive_normal_form_with, ReductionStep,
};
pub use verify::{
    is_involutively_autoreduced, nf_equality_check, verify_groebner, verify_involutive,
    Verification, VerifyMode,
};

use index::LeadSet;

pub const DEFAULT_CAP: usize = 20_000;

/// A basis element with its ancestor monomial and the set of
/// non-multiplicative variables already prolonged.
#[derive(Debug, Clone, PartialEq)]
pub struct Triple {
    pub poly: Polynomial,
    pub ancestor: Monomial,
    pub processed: VarSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisStatus {
    Complete,
    CapExceeded,
}

impl BasisStatus {
    pub fn name(self) -> &'static str {
        match self {
            Self::Complete => "complete",
            Self::CapExceeded => "cap_exceeded",
        }
    }
}

impl fmt::Display for BasisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    /// Prolongations selected, whether skipped by the criterion or reduced.
    pub prolongations: usize,
    pub criterion_hits: usize,
    pub zero_reductions: usize,
    pub nonzero_reductions: usize,
    /// Normal forms of prolongations computed; this is what the cap bounds.
    pub prolongation_reductions: usize,
    /// Elements moved back from the basis to the pending queue.
    pub demotions: usize,
    /// Criterion skips re-reduced in checking mode.
    pub criterion_checks: usize,
    /// Re-reduced criterion skips whose normal form was not zero.
    pub criterion_failures: usize,
}

/// What happened to a prolongation or a queued polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    CriterionSkip,
    Zero,
    /// Nonzero normal form with this leading monomial.
    Added(Monomial),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Prolongation {
        parent: Monomial,
        var: usize,
        product: Monomial,
        outcome: Outcome,
    },
    /// A pending polynomial of the minimal algorithm was reduced.
    Queued { lm: Monomial, outcome: Outcome },
    /// A basis element was moved back to the pending queue.
    Demoted { lm: Monomial },
    /// Start of a pass of the prolongation loop.
    Pass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub division: DivisionKind,
    /// Maximal number of prolongation normal forms.
    pub cap: usize,
    pub use_criterion: bool,
    /// Re-reduce every prolongation the criterion skips and count the ones
    /// whose normal form is not zero.
    pub check_criterion: bool,
    /// Clear the processed variables of elements moved back to the queue by
    /// the minimal algorithm.
    pub reset_processed_on_demotion: bool,
    pub trace: bool,
}

impl EngineConfig {
    pub fn new(division: DivisionKind) -> Self {
        Self {
            division,
            cap: DEFAULT_CAP,
            use_criterion: true,
            check_criterion: false,
            reset_processed_on_demotion: false,
            trace: false,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self::new(DivisionKind::Janet)
    }
}

#[derive(Debug, Clone)]
pub struct BasisResult {
    /// Monic, sorted ascending by leading monomial.
    pub basis: Vec<Polynomial>,
    pub status: BasisStatus,
    pub division: DivisionKind,
    pub order: MonomialOrder,
    pub stats: Stats,
    /// Filled only when [`EngineConfig::trace`] is set.
    pub trace: Vec<TraceEvent>,
}

impl BasisResult {
    pub fn is_complete(&self) -> bool {
        self.status == BasisStatus::Complete
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|f| f.lm().clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("input contains no nonzero polynomial")]
    EmptyInput,
    #[error("input polynomials disagree on {0}")]
    Mismatch(&'static str),
    #[error("set is not involutively autoreduced: {0}")]
    NotAutoreduced(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// True when some triple `(f, v, D)` has `lm(f)` involutively dividing
/// `lm(g)` (partitions taken over the leading monomials of `triples`) and
/// `lcm(u, v)` strictly below `lm(g)`. The prolongation `g` then reduces to
/// zero and need not be reduced.
pub fn criterion(
    g: &Polynomial,
    ancestor: &Monomial,
    triples: &[Triple],
    kind: DivisionKind,
) -> bool {
    let Some(lm) = g.leading_monomial() else {
        return false;
    };
    let Some(first) = triples.first() else {
        return false;
    };
    let lead = LeadSet::new(
        kind,
        first.poly.order(),
        triples.iter().map(|t| t.poly.lm().clone()).collect(),
    );
    let ancestors: Vec<&Monomial> = triples.iter().map(|t| &t.ancestor).collect();
    criterion_holds(lm, ancestor, &lead, &ancestors, g.order())
}

pub(crate) fn criterion_holds(
    lm: &Monomial,
    ancestor: &Monomial,
    lead: &LeadSet,
    ancestors: &[&Monomial],
    order: MonomialOrder,
) -> bool {
    (0..lead.len())
        .any(|i| lead.covers(i, lm) && order.less(&ancestor.lcm_unchecked(ancestors[i]), lm))
}

/// Nonzero inputs, checked for a common variable count and ordering.
fn prepare_input(input: &[Polynomial]) -> Result<Vec<Polynomial>, EngineError> {
    let nonzero: Vec<Polynomial> = input.iter().filter(|f| !f.is_zero()).cloned().collect();
    let first = nonzero.first().ok_or(EngineError::EmptyInput)?;
    if nonzero.iter().any(|f| f.nvars() != first.nvars()) {
        return Err(EngineError::Mismatch("the number of variables"));
    }
    if nonzero.iter().any(|f| f.order() != first.order()) {
        return Err(EngineError::Mismatch("the monomial ordering"));
    }
    Ok(nonzero)
}

fn unit_result(
    nvars: usize,
    config: &EngineConfig,
    order: MonomialOrder,
    stats: Stats,
    trace: Vec<TraceEvent>,
) -> BasisResult {
    BasisResult {
        basis: vec![Polynomial::from_monomial(Monomial::one(nvars), order)],
        status: BasisStatus::Complete,
        division: config.division,
        order,
        stats,
        trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::VariableContext;

    fn p(s: &str) -> Polynomial {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        Polynomial::parse(s, &ctx, MonomialOrder::DegLex).unwrap()
    }

    fn triple(s: &str, ancestor: &str) -> Triple {
        Triple {
            poly: p(s),
            ancestor: p(ancestor).lm().clone(),
            processed: VarSet::empty(),
        }
    }

    #[test]
    fn criterion_instances() {
        let janet = DivisionKind::Janet;
        assert!(!criterion(&p("x*y*z"), p("x*y").lm(), &[], janet));
        // z |_J x*z? x is non-multiplicative for z in {x^2, x*y, z}.
        let t = vec![triple("x^2", "x^2"), triple("x*y", "x*y"), triple("z", "z")];
        // y*z is in the cone of z; lcm(y, z) = y*z is not below y*z.
        assert!(!criterion(&p("y*z"), p("y").lm(), &t, janet));
        // y*z^2: lcm(y, z) = y*z is below y*z^2.
        assert!(criterion(&p("y*z^2"), p("y").lm(), &t, janet));
        // x*z^2 has no Janet divisor here.
        assert!(!criterion(&p("x*z^2"), p("x").lm(), &t, janet));
    }
}
