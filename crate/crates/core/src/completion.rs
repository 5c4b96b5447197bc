//! Involutive completion of monomial sets.

use std::cmp::Ordering;

use crate::division::{DivisionKind, Partition, PartitionRule};
use crate::monomial::{monomials_up_to_degree, Monomial, MonomialOrder};

pub const DEFAULT_MONOMIAL_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    CapExceeded,
}

impl CompletionStatus {
    pub fn name(self) -> &'static str {
        match self {
            Self::Complete => "complete",
            Self::CapExceeded => "cap_exceeded",
        }
    }
}

/// One prolongation `parent * x_var` appended during completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionStep {
    pub parent: Monomial,
    pub var: usize,
    pub added: Monomial,
}

#[derive(Debug, Clone)]
pub struct CompletionResult {
    /// Autoreduced input followed by the added prolongations, in insertion
    /// order.
    pub basis: Vec<Monomial>,
    pub status: CompletionStatus,
    pub steps: usize,
    pub cap: usize,
    pub log: Vec<CompletionStep>,
}

impl CompletionResult {
    /// The basis sorted ascending in `order`.
    pub fn sorted_basis(&self, order: MonomialOrder) -> Vec<Monomial> {
        let mut out = self.basis.clone();
        out.sort_by(|a, b| order.cmp(a, b));
        out
    }
}

/// Drops every element that has a proper divisor in the set, and duplicates.
/// Survivors keep their input order.
pub fn autoreduce_monomials(set: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (i, u) in set.iter().enumerate() {
        let redundant = set
            .iter()
            .enumerate()
            .any(|(j, v)| j != i && v.divides_unchecked(u) && (v != u || j < i));
        if !redundant {
            out.push(u.clone());
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalInvolutivity {
    Involutive,
    /// The lowest prolongation `element * x_var` without involutive divisor.
    Fails {
        element: Monomial,
        var: usize,
        prolongation: Monomial,
    },
}

impl LocalInvolutivity {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Involutive)
    }
}

fn has_involutive_divisor(w: &Monomial, set: &[Monomial], parts: &[Partition]) -> bool {
    set.iter().zip(parts).any(|(u, p)| p.covers(u, w))
}

/// Lowest irreducible non-multiplicative prolongation, ties broken by the
/// lower parent.
fn lowest_irreducible_prolongation(
    kind: DivisionKind,
    set: &[Monomial],
    order: MonomialOrder,
) -> Option<(usize, usize, Monomial)> {
    let parts = kind.partitions(set);
    let mut best: Option<(usize, usize, Monomial)> = None;
    for (i, (u, p)) in set.iter().zip(&parts).enumerate() {
        for x in p.nonmultiplicative.iter() {
            let w = u.mul_var(x);
            if has_involutive_divisor(&w, set, &parts) {
                continue;
            }
            let better = match &best {
                None => true,
                Some((bi, _, bw)) => match order.cmp(&w, bw) {
                    Ordering::Less => true,
                    Ordering::Equal => order.cmp(u, &set[*bi]) == Ordering::Less,
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some((i, x, w));
            }
        }
    }
    best
}

/// Every non-multiplicative prolongation has an involutive divisor in `set`.
pub fn is_locally_involutive(
    kind: DivisionKind,
    set: &[Monomial],
    order: MonomialOrder,
) -> LocalInvolutivity {
    match lowest_irreducible_prolongation(kind, set, order) {
        None => LocalInvolutivity::Involutive,
        Some((i, var, prolongation)) => LocalInvolutivity::Fails {
            element: set[i].clone(),
            var,
            prolongation,
        },
    }
}

/// Brute force: every monomial of degree at most `degree_bound` that is a
/// multiple of some member also has an involutive divisor in `set`.
pub fn is_involutive_up_to(kind: DivisionKind, set: &[Monomial], degree_bound: u32) -> bool {
    let Some(first) = set.first() else {
        return true;
    };
    let parts = kind.partitions(set);
    monomials_up_to_degree(first.nvars(), degree_bound)
        .iter()
        .filter(|w| set.iter().any(|u| u.divides_unchecked(w)))
        .all(|w| has_involutive_divisor(w, set, &parts))
}

/// Minimal involutive basis of the monomial ideal generated by `set`.
///
/// Starts from the conventional autoreduction of `set` and repeatedly adds the
/// lowest (in `order`) non-multiplicative prolongation that has no involutive
/// divisor. Stops with [`CompletionStatus::CapExceeded`] rather than adding
/// prolongation number `cap + 1`.
pub fn minimal_monomial_completion(
    kind: DivisionKind,
    set: &[Monomial],
    order: MonomialOrder,
    cap: usize,
) -> CompletionResult {
    let mut basis = autoreduce_monomials(set);
    let mut log = Vec::new();
    let status = loop {
        let Some((i, var, w)) = lowest_irreducible_prolongation(kind, &basis, order) else {
            break CompletionStatus::Complete;
        };
        if log.len() == cap {
            break CompletionStatus::CapExceeded;
        }
        log.push(CompletionStep {
            parent: basis[i].clone(),
            var,
            added: w.clone(),
        });
        basis.push(w);
    };
    CompletionResult {
        basis,
        status,
        steps: log.len(),
        cap,
        log,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::VariableContext;

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y", "z"]).unwrap()
    }

    fn set(items: &[&str]) -> Vec<Monomial> {
        items
            .iter()
            .map(|s| Monomial::parse(s, &ctx()).unwrap())
            .collect()
    }

    fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
        v.sort_by(|a, b| MonomialOrder::DegLex.cmp(a, b));
        v
    }

    #[test]
    fn autoreduction_of_monomials() {
        assert_eq!(
            autoreduce_monomials(&set(&["x^2", "x^2*y", "z"])),
            set(&["x^2", "z"])
        );
        let u = set(&["x^2", "x*y", "z"]);
        assert_eq!(autoreduce_monomials(&u), u);
        assert_eq!(autoreduce_monomials(&set(&["1", "x"])), set(&["1"]));
        assert_eq!(autoreduce_monomials(&set(&["x", "x"])), set(&["x"]));
    }

    #[test]
    fn local_involutivity() {
        let deglex = MonomialOrder::DegLex;
        let janet = DivisionKind::Janet;
        assert!(is_locally_involutive(janet, &set(&["x^2", "x*y", "z", "x*z"]), deglex).holds());
        assert_eq!(
            is_locally_involutive(janet, &set(&["x^2", "x*y", "z"]), deglex),
            LocalInvolutivity::Fails {
                element: set(&["z"])[0].clone(),
                var: 0,
                prolongation: set(&["x*z"])[0].clone(),
            }
        );
        for kind in DivisionKind::ALL {
            assert!(
                is_locally_involutive(kind, &set(&["1"]), deglex).holds(),
                "{kind}"
            );
        }
    }

    #[test]
    fn bounded_involutivity() {
        let thomas = set(&[
            "x^2", "x*y", "z", "x*z", "y*z", "x^2*y", "x*y*z", "x^2*z", "x^2*y*z",
        ]);
        assert!(is_involutive_up_to(DivisionKind::Thomas, &thomas, 8));
        let pommaret = set(&["x^2", "x*y", "z", "x*z", "y*z"]);
        assert!(!is_involutive_up_to(DivisionKind::Pommaret, &pommaret, 5));
        assert!(is_involutive_up_to(
            DivisionKind::Janet,
            &set(&["x", "y", "z"]),
            1
        ));
    }

    #[test]
    fn completions_of_the_three_element_set() {
        let u = set(&["x^2", "x*y", "z"]);
        let deglex = MonomialOrder::DegLex;
        let cases = [
            (DivisionKind::Janet, vec!["x^2", "x*y", "z", "x*z"]),
            (
                DivisionKind::DivisionII,
                vec!["x^2", "x*y", "z", "x*z", "y*z", "x*y*z"],
            ),
            (
                DivisionKind::Thomas,
                vec![
                    "x^2", "x*y", "z", "x*z", "y*z", "x^2*y", "x*y*z", "x^2*z", "x^2*y*z",
                ],
            ),
            (
                DivisionKind::DivisionI,
                vec![
                    "x^2", "x*y", "z", "x*z", "x^2*y", "x*y*z", "x^2*z", "x^2*y*z",
                ],
            ),
        ];
        for (kind, expected) in cases {
            let result = minimal_monomial_completion(kind, &u, deglex, DEFAULT_MONOMIAL_CAP);
            assert_eq!(result.status, CompletionStatus::Complete, "{kind}");
            assert_eq!(sorted(result.basis), sorted(set(&expected)), "{kind}");
        }
        let pommaret = minimal_monomial_completion(DivisionKind::Pommaret, &u, deglex, 50);
        assert_eq!(pommaret.status, CompletionStatus::CapExceeded);
        assert_eq!(pommaret.steps, 50);
    }

    #[test]
    fn pommaret_needs_the_lowest_prolongation_first() {
        let u = set(&["x^2", "x*z", "y"]);
        for order in MonomialOrder::ALL {
            let result = minimal_monomial_completion(DivisionKind::Pommaret, &u, order, 50);
            assert_eq!(result.status, CompletionStatus::Complete);
            assert_eq!(
                sorted(result.basis),
                sorted(set(&["x^2", "x*y", "x*z", "y"]))
            );
            assert_eq!(result.log[0].parent, set(&["y"])[0]);
            assert_eq!(result.log[0].var, 0);
        }
    }

    #[test]
    fn zero_cap_reports_immediately() {
        let r = minimal_monomial_completion(
            DivisionKind::Janet,
            &set(&["x*y", "z"]),
            MonomialOrder::Lex,
            0,
        );
        assert_eq!(r.status, CompletionStatus::CapExceeded);
        assert_eq!(r.basis, set(&["x*y", "z"]));
    }
}
