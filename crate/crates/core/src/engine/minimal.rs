use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::monomial::{Monomial, MonomialOrder, VarSet};
use crate::poly::{autoreduce, sort_by_leading_monomial, Polynomial};

use super::reduce::autoreduce_in_place;
use super::triples::{Entry, Triples};
use super::{
    prepare_input, unit_result, BasisResult, BasisStatus, EngineConfig, EngineError, Outcome,
    Stats, TraceEvent,
};

/// A queued polynomial; the heap pops the lowest leading monomial first and,
/// among equal ones, the oldest entry.
struct Pending {
    order: MonomialOrder,
    entry: Entry,
    // Was a basis element before.
    demoted: bool,
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(other.entry.poly.lm(), self.entry.poly.lm())
            .then(other.entry.serial.cmp(&self.entry.serial))
    }
}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pending {}

struct State {
    config: EngineConfig,
    order: MonomialOrder,
    // Basis triples, all below every pending one.
    done: Triples,
    pending: BinaryHeap<Pending>,
    serial: u64,
    // A demoted element left for good, so processed marks may be stale.
    stale: bool,
    stats: Stats,
    trace: Vec<TraceEvent>,
}

/// Computes the monic minimal involutive basis of the ideal generated by
/// `input`.
///
/// The basis is grown from its lowest element. Polynomials not yet known to
/// belong to it wait in a pending queue and are reduced lowest first; only
/// prolongations below every pending element are treated, and a new element
/// pushes all higher basis elements back into the queue. When a demoted
/// element is discarded or comes back with a lower leading monomial, the
/// prolongations it answered may be uncovered again, so once the queue is
/// empty all prolongations are treated once more. Finally the tails are
/// involutively reduced, so the output is the unique monic minimal
/// involutive basis when the run completes.
pub fn minimal_involutive_basis(
    input: &[Polynomial],
    config: &EngineConfig,
) -> Result<BasisResult, EngineError> {
    let input = prepare_input(input)?;
    let order = input[0].order();
    let nvars = input[0].nvars();
    let start = autoreduce(&input);
    if start.iter().any(|f| f.lm().is_one()) {
        return Ok(unit_result(
            nvars,
            config,
            order,
            Stats::default(),
            Vec::new(),
        ));
    }
    let mut state = State {
        config: *config,
        order,
        done: Triples::new(config.division, order, false),
        pending: BinaryHeap::new(),
        serial: 0,
        stale: false,
        stats: Stats::default(),
        trace: Vec::new(),
    };
    // `start` is sorted ascending: its first element is the lowest.
    let mut start = start.into_iter();
    let lowest = start.next().expect("nonempty");
    state.push_done(lowest.clone(), lowest.lm().clone(), VarSet::empty());
    for f in start {
        state.push_pending(
            Entry {
                ancestor: f.lm().clone(),
                poly: f,
                processed: VarSet::empty(),
                serial: 0,
            },
            false,
        );
    }

    let status = loop {
        let mut found: Option<(Polynomial, Entry)> = None;
        while found.is_none() {
            let Some(Pending {
                entry: g, demoted, ..
            }) = state.pending.pop()
            else {
                break;
            };
            let lm = g.poly.lm().clone();
            if state.criterion(&lm, &g.ancestor, &g.poly) {
                state.stale |= demoted;
                state.record(TraceEvent::Queued {
                    lm,
                    outcome: Outcome::CriterionSkip,
                });
                continue;
            }
            let h = state.done.normal_form(&g.poly);
            if h.is_zero() {
                state.stale |= demoted;
                state.stats.zero_reductions += 1;
                state.record(TraceEvent::Queued {
                    lm,
                    outcome: Outcome::Zero,
                });
            } else {
                state.stale |= demoted && h.lm() != g.poly.lm();
                state.stats.nonzero_reductions += 1;
                state.record(TraceEvent::Queued {
                    lm,
                    outcome: Outcome::Added(h.lm().clone()),
                });
                found = Some((h, g));
            }
        }
        if let Some((h, g)) = found {
            if h.lm().is_one() {
                return Ok(state.into_unit(nvars));
            }
            if h.lm() == g.poly.lm() {
                state.push_done(h, g.ancestor, g.processed);
            } else {
                let lm = h.lm().clone();
                state.push_done(h, lm.clone(), VarSet::empty());
                state.demote_above(&lm);
            }
        }

        state.record(TraceEvent::Pass);
        loop {
            let bound = state.pending.peek().map(|p| p.entry.poly.lm().clone());
            let Some((i, var, product)) = state.done.select(bound.as_ref()) else {
                break;
            };
            let entry = state.done.entry_mut(i);
            entry.processed.insert(var);
            let ancestor = entry.ancestor.clone();
            let parent = entry.poly.lm().clone();
            let prolongation = entry.poly.mul_var(var);
            state.stats.prolongations += 1;
            if state.criterion(&product, &ancestor, &prolongation) {
                state.record(TraceEvent::Prolongation {
                    parent,
                    var,
                    product,
                    outcome: Outcome::CriterionSkip,
                });
                continue;
            }
            if state.stats.prolongation_reductions == state.config.cap {
                state.done.entry_mut(i).processed.remove(var);
                state.stats.prolongations -= 1;
                return Ok(state.finish(BasisStatus::CapExceeded));
            }
            state.stats.prolongation_reductions += 1;
            let h = state.done.normal_form(&prolongation);
            if h.is_zero() {
                state.stats.zero_reductions += 1;
                state.record(TraceEvent::Prolongation {
                    parent,
                    var,
                    product,
                    outcome: Outcome::Zero,
                });
                continue;
            }
            state.stats.nonzero_reductions += 1;
            let lm = h.lm().clone();
            state.record(TraceEvent::Prolongation {
                parent,
                var,
                product: product.clone(),
                outcome: Outcome::Added(lm.clone()),
            });
            if lm.is_one() {
                return Ok(state.into_unit(nvars));
            }
            if lm == product {
                state.push_done(h, ancestor, VarSet::empty());
            } else {
                state.push_done(h, lm.clone(), VarSet::empty());
                state.demote_above(&lm);
            }
        }
        if state.pending.is_empty() {
            if !state.stale {
                break BasisStatus::Complete;
            }
            state.stale = false;
            state.done.reopen();
        }
    };
    Ok(state.finish(status))
}

impl State {
    fn record(&mut self, event: TraceEvent) {
        if self.config.trace {
            self.trace.push(event);
        }
    }

    fn push_done(&mut self, poly: Polynomial, ancestor: Monomial, processed: VarSet) {
        self.serial += 1;
        self.done.push(Entry {
            poly: poly.monic(),
            ancestor,
            processed,
            serial: self.serial,
        });
    }

    fn push_pending(&mut self, mut entry: Entry, demoted: bool) {
        self.serial += 1;
        entry.serial = self.serial;
        self.pending.push(Pending {
            order: self.order,
            entry,
            demoted,
        });
    }

    /// Moves every basis element with leading monomial above `lm` to the
    /// pending queue.
    fn demote_above(&mut self, lm: &Monomial) {
        let order = self.order;
        let (keep, moved): (Vec<Entry>, Vec<Entry>) = self
            .done
            .take()
            .into_iter()
            .partition(|e| order.cmp(e.poly.lm(), lm) != Ordering::Greater);
        self.done.replace(keep);
        for mut e in moved {
            self.stats.demotions += 1;
            self.record(TraceEvent::Demoted {
                lm: e.poly.lm().clone(),
            });
            if self.config.reset_processed_on_demotion {
                e.processed = VarSet::empty();
            }
            self.push_pending(e, true);
        }
    }

    /// Applies the criterion to `g` (leading monomial `lm`) and, in checking
    /// mode, confirms every skip by reducing `g` anyway.
    fn criterion(&mut self, lm: &Monomial, ancestor: &Monomial, g: &Polynomial) -> bool {
        if !self.config.use_criterion || !self.done.criterion(lm, ancestor) {
            return false;
        }
        self.stats.criterion_hits += 1;
        if self.config.check_criterion {
            self.stats.criterion_checks += 1;
            if !self.done.normal_form(g).is_zero() {
                self.stats.criterion_failures += 1;
            }
        }
        true
    }

    fn into_unit(self, nvars: usize) -> BasisResult {
        unit_result(nvars, &self.config, self.order, self.stats, self.trace)
    }

    fn finish(mut self, status: BasisStatus) -> BasisResult {
        let mut basis: Vec<Polynomial> = self.done.take().into_iter().map(|e| e.poly).collect();
        autoreduce_in_place(&mut basis, self.config.division);
        sort_by_leading_monomial(&mut basis, self.order);
        BasisResult {
            basis,
            status,
            division: self.config.division,
            order: self.order,
            stats: self.stats,
            trace: self.trace,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{DivisionKind, VariableContext};

    fn ps(names: &[&str], order: MonomialOrder, items: &[&str]) -> Vec<Polynomial> {
        let ctx = VariableContext::new(names.iter().copied()).unwrap();
        items
            .iter()
            .map(|s| Polynomial::parse(s, &ctx, order).unwrap())
            .collect()
    }

    #[test]
    fn three_binomials_collapse_to_two_linear_forms() {
        let lex = MonomialOrder::Lex;
        let f = ps(&["x", "y"], lex, &["x^2*y - 1", "x*y^2 - 1", "y^4 - 1"]);
        for kind in DivisionKind::ALL {
            let result = minimal_involutive_basis(&f, &EngineConfig::new(kind)).unwrap();
            assert!(result.is_complete(), "{kind}");
            // Thomas and the two order-free divisions leave x*y uncovered by
            // the cones of x and y.
            let expected: &[&str] = match kind {
                DivisionKind::Janet | DivisionKind::Pommaret => &["y - 1", "x - 1"],
                _ => &["y - 1", "x - 1", "x*y - 1"],
            };
            assert_eq!(result.basis, ps(&["x", "y"], lex, expected), "{kind}");
        }
    }

    #[test]
    fn monomial_input_gives_the_monomial_completion() {
        let o = MonomialOrder::DegLex;
        let names = ["x", "y", "z"];
        let f = ps(&names, o, &["x^2", "x*y", "z"]);
        let janet = minimal_involutive_basis(&f, &EngineConfig::new(DivisionKind::Janet)).unwrap();
        assert_eq!(janet.basis, ps(&names, o, &["z", "x*z", "x*y", "x^2"]));
        let pommaret = minimal_involutive_basis(
            &ps(&names, o, &["x^2", "x*z", "y"]),
            &EngineConfig::new(DivisionKind::Pommaret),
        )
        .unwrap();
        assert_eq!(pommaret.basis, ps(&names, o, &["y", "x*z", "x*y", "x^2"]));
        let capped =
            minimal_involutive_basis(&f, &EngineConfig::new(DivisionKind::Pommaret).with_cap(40))
                .unwrap();
        assert_eq!(capped.status, BasisStatus::CapExceeded);
    }

    #[test]
    fn discarded_demoted_element_does_not_leave_a_gap() {
        // x2*x3 is demoted and then reduces to zero while x2 is multiplicative
        // for x3; adding x2^3 later takes that away again.
        let o = MonomialOrder::DegLex;
        let names = ["x1", "x2", "x3"];
        let f = ps(
            &names,
            o,
            &[
                "-2*x1^2*x3 - 4*x2*x3^2 + 2*x1*x2",
                "-x1^2*x3 - 3*x2*x3",
                "-3*x1^2*x2 - 4*x3",
                "-5*x2^3 - 2",
            ],
        );
        let result = minimal_involutive_basis(&f, &EngineConfig::new(DivisionKind::Janet)).unwrap();
        assert_eq!(
            result.basis,
            ps(&names, o, &["x3", "x1", "x2*x3", "x2^2*x3", "x2^3 + 2/5"])
        );
        for kind in DivisionKind::ALL {
            let result = minimal_involutive_basis(&f, &EngineConfig::new(kind)).unwrap();
            let check =
                crate::verify_involutive(&result.basis, kind, crate::VerifyMode::Local).unwrap();
            assert!(check.holds(), "{kind}: {check:?}");
        }
    }

    #[test]
    fn unit_ideal() {
        let o = MonomialOrder::DegRevLex;
        let f = ps(&["x", "y"], o, &["x*y - 1", "x^2", "0"]);
        let result = minimal_involutive_basis(&f, &EngineConfig::new(DivisionKind::Janet)).unwrap();
        assert_eq!(result.basis, ps(&["x", "y"], o, &["1"]));
        assert!(result.is_complete());
    }
}
