//! Brute-force checks of the involutive-division axioms and of continuity on
//! concrete finite sets.
//!
//! For a division given by variable partitions the axioms read:
//!
//! * (a) `L(u,U)` is closed under taking divisors;
//! * (b) overlapping cones are nested: if `uL(u,U)` and `vL(v,U)` meet then
//!   `u ∈ vL(v,U)` or `v ∈ uL(u,U)`;
//! * (c) if `v ∈ uL(u,U)` then `L(v,U) ⊆ L(u,U)`;
//! * (d) shrinking the set only enlarges `L(u,·)`.

use std::collections::HashSet;

use super::PartitionRule;
use crate::monomial::{monomials_up_to_degree, Monomial, VarSet};

/// Full power set of the set is used for axiom (d) up to this size; beyond
/// it only subsets missing one or two members are tried.
pub const FULL_SUBSET_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Multiplicative and non-multiplicative sets overlap or miss a variable.
    BadPartition { u: Monomial },
    /// (a): `w ∈ L(u,U)`, `v | w` but `v ∉ L(u,U)`.
    NotDivisorClosed {
        u: Monomial,
        w: Monomial,
        v: Monomial,
    },
    /// (b): `w` is in both cones but neither generator is in the other's cone.
    OverlappingCones {
        u: Monomial,
        v: Monomial,
        w: Monomial,
    },
    /// (c): `v ∈ uL(u,U)` yet `L(v,U)` is not contained in `L(u,U)`.
    NotNested { u: Monomial, v: Monomial },
    /// (d): `u ∈ V ⊆ U` with `L(u,U) ⊄ L(u,V)`.
    NotAntitone { u: Monomial, subset: Vec<Monomial> },
}

#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
    /// Number of probe monomials enumerated for (a) and (b).
    pub probes: usize,
    /// Number of subsets examined for (d).
    pub subsets: usize,
    /// Whether (d) saw every subset or only the near-complete ones.
    pub exhaustive_subsets: bool,
}

impl AxiomReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn dedup(set: &[Monomial]) -> Vec<Monomial> {
    let mut seen = HashSet::new();
    set.iter()
        .filter(|m| seen.insert((*m).clone()))
        .cloned()
        .collect()
}

/// Checks axioms (a)-(d) for `rule` on `set`, probing every monomial of
/// total degree at most `probe_degree_bound`.
pub fn check_division_axioms<R: PartitionRule + ?Sized>(
    rule: &R,
    set: &[Monomial],
    probe_degree_bound: u32,
) -> AxiomReport {
    let set = dedup(set);
    let mut report = AxiomReport::default();
    let Some(first) = set.first() else {
        report.exhaustive_subsets = true;
        return report;
    };
    let n = first.nvars();
    let parts = rule.partitions(&set);

    for (u, p) in set.iter().zip(&parts) {
        let disjoint = p
            .multiplicative
            .intersection(p.nonmultiplicative)
            .is_empty();
        if !disjoint || p.multiplicative.union(p.nonmultiplicative) != VarSet::full(n) {
            report
                .violations
                .push(AxiomViolation::BadPartition { u: u.clone() });
        }
    }

    let probes = monomials_up_to_degree(n, probe_degree_bound);
    report.probes = probes.len();

    // (a): multipliers inside L(u,U) are the probes supported on M(u).
    for (u, p) in set.iter().zip(&parts) {
        for w in probes
            .iter()
            .filter(|w| w.support().is_subset(p.multiplicative))
        {
            for i in w.support().iter() {
                let v = w.quotient_unchecked(&Monomial::variable(n, i));
                if !v.support().is_subset(p.multiplicative) {
                    report.violations.push(AxiomViolation::NotDivisorClosed {
                        u: u.clone(),
                        w: w.clone(),
                        v,
                    });
                }
            }
        }
    }

    // (b)
    let mut reported = HashSet::new();
    for w in &probes {
        let divisors: Vec<usize> = (0..set.len())
            .filter(|&k| parts[k].covers(&set[k], w))
            .collect();
        for (a, &i) in divisors.iter().enumerate() {
            for &j in &divisors[a + 1..] {
                let nested = parts[j].covers(&set[j], &set[i]) || parts[i].covers(&set[i], &set[j]);
                if !nested && reported.insert((i, j)) {
                    report.violations.push(AxiomViolation::OverlappingCones {
                        u: set[i].clone(),
                        v: set[j].clone(),
                        w: w.clone(),
                    });
                }
            }
        }
    }

    // (c)
    for (i, u) in set.iter().enumerate() {
        for (j, v) in set.iter().enumerate() {
            if i != j
                && parts[i].covers(u, v)
                && !parts[j].multiplicative.is_subset(parts[i].multiplicative)
            {
                report.violations.push(AxiomViolation::NotNested {
                    u: u.clone(),
                    v: v.clone(),
                });
            }
        }
    }

    // (d)
    let subsets = proper_subsets(set.len());
    report.exhaustive_subsets = set.len() <= FULL_SUBSET_LIMIT;
    report.subsets = subsets.len();
    for mask in subsets {
        let members: Vec<usize> = (0..set.len()).filter(|&k| mask & (1 << k) != 0).collect();
        let subset: Vec<Monomial> = members.iter().map(|&k| set[k].clone()).collect();
        let sub_parts = rule.partitions(&subset);
        for (&k, sub) in members.iter().zip(&sub_parts) {
            if !parts[k].multiplicative.is_subset(sub.multiplicative) {
                report.violations.push(AxiomViolation::NotAntitone {
                    u: set[k].clone(),
                    subset: subset.clone(),
                });
            }
        }
    }
    report
}

/// Non-empty proper subsets as bit masks, per [`FULL_SUBSET_LIMIT`].
fn proper_subsets(len: usize) -> Vec<u64> {
    if len == 0 {
        return Vec::new();
    }
    let all: u64 = if len == 64 { u64::MAX } else { (1 << len) - 1 };
    if len <= FULL_SUBSET_LIMIT {
        return (1..all).collect();
    }
    let mut out = Vec::new();
    for a in 0..len {
        out.push(all & !(1 << a));
        for b in a + 1..len {
            out.push(all & !(1 << a) & !(1 << b));
        }
    }
    out
}

/// Searches every chain `u_1, u_2, ...` of members of `set` with
/// `u_{i+1} |_L u_i * x` for some non-multiplicative `x` of `u_i`, up to
/// `max_len` elements, and returns the first chain that repeats an element.
/// A continuous division never yields one.
pub fn find_continuity_violation<R: PartitionRule + ?Sized>(
    rule: &R,
    set: &[Monomial],
    max_len: usize,
) -> Option<Vec<Monomial>> {
    let set = dedup(set);
    let parts = rule.partitions(&set);
    // successors[i] = all j reachable in one step from i.
    let successors: Vec<Vec<usize>> = (0..set.len())
        .map(|i| {
            let mut next = Vec::new();
            for x in parts[i].nonmultiplicative.iter() {
                let w = set[i].mul_var(x);
                for (j, (v, p)) in set.iter().zip(&parts).enumerate() {
                    if p.covers(v, &w) && !next.contains(&j) {
                        next.push(j);
                    }
                }
            }
            next
        })
        .collect();
    let mut path = Vec::new();
    for start in 0..set.len() {
        path.push(start);
        if let Some(chain) = extend(&successors, &mut path, max_len) {
            return Some(chain.into_iter().map(|k| set[k].clone()).collect());
        }
        path.pop();
    }
    None
}

fn extend(successors: &[Vec<usize>], path: &mut Vec<usize>, max_len: usize) -> Option<Vec<usize>> {
    if path.len() >= max_len {
        return None;
    }
    let last = *path.last().expect("non-empty path");
    for &next in &successors[last] {
        if path.contains(&next) {
            let mut chain = path.clone();
            chain.push(next);
            return Some(chain);
        }
        path.push(next);
        let found = extend(successors, path, max_len);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
