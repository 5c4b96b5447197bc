use std::collections::HashMap;

use crate::monomial::{Monomial, VarSet};
use crate::poly::{autoreduce, sort_by_leading_monomial, Polynomial};

use super::index::LeadSet;
use super::reduce::autoreduce_in_place;
use super::triples::{Entry, Triples};
use super::{
    prepare_input, unit_result, BasisResult, BasisStatus, EngineConfig, EngineError, Outcome,
    Stats, TraceEvent,
};

/// Completes `input` to an involutive basis of the ideal it generates.
///
/// Starts from the conventional autoreduction, repeatedly treats the lowest
/// unprocessed non-multiplicative prolongation and, when its involutive
/// normal form is nonzero, inserts it and involutively autoreduces the basis.
/// Equal prolongations are taken from the element that entered the basis
/// first. Stops with [`BasisStatus::CapExceeded`] instead of computing
/// normal form number `cap + 1`.
pub fn involutive_basis(
    input: &[Polynomial],
    config: &EngineConfig,
) -> Result<BasisResult, EngineError> {
    let input = prepare_input(input)?;
    let order = input[0].order();
    let nvars = input[0].nvars();
    let kind = config.division;
    let mut stats = Stats::default();
    let mut trace = Vec::new();

    let start = autoreduce(&input);
    if start.iter().any(|f| f.lm().is_one()) {
        return Ok(unit_result(nvars, config, order, stats, trace));
    }
    let mut serial = 0u64;
    let mut triples = Triples::new(kind, order, true);
    triples.replace(
        start
            .into_iter()
            .map(|poly| {
                serial += 1;
                Entry {
                    ancestor: poly.lm().clone(),
                    poly,
                    processed: VarSet::empty(),
                    serial,
                }
            })
            .collect(),
    );

    let status = loop {
        let Some((i, var, product)) = triples.select(None) else {
            break BasisStatus::Complete;
        };
        let entry = triples.entry_mut(i);
        entry.processed.insert(var);
        stats.prolongations += 1;
        let ancestor = entry.ancestor.clone();
        let parent = entry.poly.lm().clone();
        let prolongation = entry.poly.mul_var(var);

        if config.use_criterion && triples.criterion(&product, &ancestor) {
            stats.criterion_hits += 1;
            if config.check_criterion {
                stats.criterion_checks += 1;
                if !triples.normal_form(&prolongation).is_zero() {
                    stats.criterion_failures += 1;
                }
            }
            if config.trace {
                trace.push(TraceEvent::Prolongation {
                    parent,
                    var,
                    product,
                    outcome: Outcome::CriterionSkip,
                });
            }
            continue;
        }
        if stats.prolongation_reductions == config.cap {
            triples.entry_mut(i).processed.remove(var);
            stats.prolongations -= 1;
            break BasisStatus::CapExceeded;
        }
        stats.prolongation_reductions += 1;
        let h = triples.normal_form(&prolongation);
        if h.is_zero() {
            stats.zero_reductions += 1;
            if config.trace {
                trace.push(TraceEvent::Prolongation {
                    parent,
                    var,
                    product,
                    outcome: Outcome::Zero,
                });
            }
            continue;
        }
        stats.nonzero_reductions += 1;
        if config.trace {
            trace.push(TraceEvent::Prolongation {
                parent,
                var,
                product: product.clone(),
                outcome: Outcome::Added(h.lm().clone()),
            });
        }
        if h.lm().is_one() {
            return Ok(unit_result(nvars, config, order, stats, trace));
        }
        let h_ancestor = if *h.lm() == product {
            ancestor
        } else {
            h.lm().clone()
        };
        serial += 1;
        let overlap = triples.push(Entry {
            poly: h.monic(),
            ancestor: h_ancestor,
            processed: VarSet::empty(),
            serial,
        });
        if !overlap {
            continue;
        }
        let previous = triples.take();
        let mut polys: Vec<Polynomial> = previous.iter().map(|e| e.poly.clone()).collect();
        autoreduce_in_place(&mut polys, kind);
        if polys.iter().any(|f| f.lm().is_one()) {
            return Ok(unit_result(nvars, config, order, stats, trace));
        }
        let lead = LeadSet::new(kind, order, polys.iter().map(|f| f.lm().clone()).collect());
        triples.replace(rebuild(previous, polys, &lead, &mut serial)?);
    };

    let mut basis: Vec<Polynomial> = triples.take().into_iter().map(|e| e.poly).collect();
    sort_by_leading_monomial(&mut basis, order);
    Ok(BasisResult {
        basis,
        status,
        division: kind,
        order,
        stats,
        trace,
    })
}

/// Rebuilds the triples after the basis changed: an element whose leading
/// monomial was already present inherits that triple's processed set and
/// serial, with its ancestor replaced by the leading monomial of the unique
/// involutive divisor of the old ancestor, if any. Other elements start
/// afresh.
fn rebuild(
    previous: Vec<Entry>,
    polys: Vec<Polynomial>,
    lead: &LeadSet,
    serial: &mut u64,
) -> Result<Vec<Entry>, EngineError> {
    let mut by_lm: HashMap<Monomial, Entry> = HashMap::with_capacity(previous.len());
    for e in previous {
        by_lm.insert(e.poly.lm().clone(), e);
    }
    let mut out = Vec::with_capacity(polys.len());
    for poly in polys {
        let entry = match by_lm.remove(poly.lm()) {
            Some(old) => {
                let mut divisors = Vec::new();
                lead.for_each_divisor(&old.ancestor, |j| divisors.push(j));
                // With no involutive divisor left the element has no
                // ancestor in the basis and becomes its own.
                let ancestor = match *divisors.as_slice() {
                    [] => poly.lm().clone(),
                    [g1] => lead.lm(g1).clone(),
                    _ => {
                        return Err(EngineError::Invariant(format!(
                            "ancestor {:?} has {} involutive divisors in the basis",
                            old.ancestor,
                            divisors.len()
                        )))
                    }
                };
                Entry {
                    poly,
                    ancestor,
                    processed: old.processed,
                    serial: old.serial,
                }
            }
            None => {
                *serial += 1;
                Entry {
                    ancestor: poly.lm().clone(),
                    poly,
                    processed: VarSet::empty(),
                    serial: *serial,
                }
            }
        };
        out.push(entry);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{DivisionKind, MonomialOrder, VariableContext};

    fn ps(names: &[&str], order: MonomialOrder, items: &[&str]) -> Vec<Polynomial> {
        let ctx = VariableContext::new(names.iter().copied()).unwrap();
        items
            .iter()
            .map(|s| Polynomial::parse(s, &ctx, order).unwrap())
            .collect()
    }

    #[test]
    fn lexicographic_janet_basis_of_three_binomials() {
        let lex = MonomialOrder::Lex;
        let f = ps(&["x", "y"], lex, &["x^2*y - 1", "x*y^2 - 1", "y^4 - 1"]);
        let result = involutive_basis(&f, &EngineConfig::new(DivisionKind::Janet)).unwrap();
        assert!(result.is_complete());
        let mut expected: Vec<Monomial> = ps(
            &["x", "y"],
            lex,
            &[
                "x^2*y", "x^2", "x*y^2", "x*y", "x", "y^4", "y^3", "y^2", "y",
            ],
        )
        .iter()
        .map(|f| f.lm().clone())
        .collect();
        expected.sort_by(|a, b| lex.cmp(a, b));
        assert_eq!(result.leading_monomials(), expected);
        assert!(crate::same_ideal(&result.basis, &f));
    }

    #[test]
    fn degenerate_inputs() {
        let o = MonomialOrder::DegLex;
        let config = EngineConfig::new(DivisionKind::Pommaret);
        let principal = ps(&["x", "y"], o, &["x - 1"]);
        assert_eq!(
            involutive_basis(&principal, &config).unwrap().basis,
            principal
        );
        let unit = involutive_basis(&ps(&["x", "y"], o, &["x*y - 1", "x", "0"]), &config).unwrap();
        assert_eq!(unit.basis, ps(&["x", "y"], o, &["1"]));
        assert_eq!(
            involutive_basis(&ps(&["x"], o, &["0"]), &config).unwrap_err(),
            EngineError::EmptyInput
        );
    }

    #[test]
    fn monomial_input_matches_monomial_completion() {
        let o = MonomialOrder::DegLex;
        let f = ps(&["x", "y", "z"], o, &["x^2", "x*y", "z"]);
        let result = involutive_basis(&f, &EngineConfig::new(DivisionKind::Janet)).unwrap();
        assert_eq!(
            result.basis,
            ps(&["x", "y", "z"], o, &["z", "x*z", "x*y", "x^2"])
        );
        let capped =
            involutive_basis(&f, &EngineConfig::new(DivisionKind::Pommaret).with_cap(30)).unwrap();
        assert_eq!(capped.status, BasisStatus::CapExceeded);
        assert_eq!(capped.stats.prolongation_reductions, 30);
    }
}
