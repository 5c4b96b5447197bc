//! Involutive bases of polynomial ideals over the rationals.
//!
//! The crate is layered bottom-up:
//!
//! * [`monomial`]: exponent vectors, variable contexts and admissible orderings;
//! * [`division`]: the Thomas, Janet, Pommaret, I and II involutive divisions;
//! * [`completion`]: involutive completion of monomial sets;
//! * [`poly`]: rational polynomials, conventional reduction and a Buchberger
//!   oracle;
//! * [`engine`]: involutive reduction and the two polynomial completion
//!   algorithms, plus verification predicates.

pub mod completion;
pub mod division;
pub mod engine;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use completion::{
    autoreduce_monomials, is_involutive_up_to, is_locally_involutive, minimal_monomial_completion,
    CompletionResult, CompletionStatus, LocalInvolutivity,
};
pub use division::{DivisionError, DivisionKind, Partition, PartitionRule};
pub use engine::{
    autoreduce_involutive, criterion, involutive_basis, involutive_normal_form,
    involutive_normal_form_with, is_involutively_autoreduced, minimal_involutive_basis,
    nf_equality_check, verify_groebner, verify_involutive, BasisResult, BasisStatus, EngineConfig,
    EngineError, Outcome, ReductionStep, Stats, TraceEvent, Triple, Verification, VerifyMode,
};
pub use monomial::{Monomial, MonomialError, MonomialOrder, VarSet, VariableContext};
pub use parse::{parse_monomial_list, parse_polynomial_list, ParseError, PolynomialList};
pub use poly::{
    autoreduce, buchberger, normal_form, s_polynomial, same_ideal, Coefficient, PolyError,
    Polynomial, Term,
};
