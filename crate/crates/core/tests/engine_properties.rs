mod common;

use common::*;
use involutive::division::find_continuity_violation;
use involutive::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn inputs() -> impl Strategy<Value = (Vec<Polynomial>, u64)> {
    (any::<u64>(), 1usize..=3, 0usize..3).prop_map(|(seed, nvars, k)| {
        let mut rng = rng(seed);
        let order = MonomialOrder::ALL[k];
        (random_generators(&mut rng, nvars, order, 3, 3, 4), seed)
    })
}

fn lms(set: &[Polynomial]) -> Vec<Monomial> {
    set.iter()
        .filter_map(|p| p.leading_monomial().cloned())
        .collect()
}

fn config(kind: DivisionKind) -> EngineConfig {
    let cap = if kind == DivisionKind::Pommaret {
        300
    } else {
        5000
    };
    EngineConfig::new(kind).with_cap(cap)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn noetherian_divisions_are_continuous_on_random_sets(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let nvars = 1 + (seed % 3) as usize;
        let set: Vec<Monomial> = (0..5).map(|_| random_monomial(&mut rng, nvars, 4)).collect();
        for kind in DivisionKind::ALL {
            prop_assert!(find_continuity_violation(&kind, &set, 8).is_none(), "{kind} {set:?}");
        }
    }

    #[test]
    fn minimal_basis_ignores_input_order((input, seed) in inputs()) {
        let mut shuffled = input.clone();
        shuffled.shuffle(&mut rng(seed ^ 0x5eed));
        for kind in DivisionKind::NOETHERIAN {
            let a = minimal_involutive_basis(&input, &config(kind)).unwrap();
            let b = minimal_involutive_basis(&shuffled, &config(kind)).unwrap();
            if a.is_complete() && b.is_complete() {
                prop_assert_eq!(&a.basis, &b.basis, "{}", kind);
            }
        }
    }

    #[test]
    fn janet_minimal_leads_complete_the_groebner_leads((input, _seed) in inputs()) {
        let order = input[0].order();
        let result = minimal_involutive_basis(&input, &config(DivisionKind::Janet)).unwrap();
        prop_assume!(result.is_complete());
        let gb = buchberger(&input);
        let expected = minimal_monomial_completion(DivisionKind::Janet, &lms(&gb), order, 5000);
        prop_assert!(expected.status == CompletionStatus::Complete);
        prop_assert_eq!(result.leading_monomials(), expected.sorted_basis(order));
    }

    #[test]
    fn trace_accounts_for_every_prolongation((input, _seed) in inputs()) {
        let order = input[0].order();
        for kind in DivisionKind::ALL {
            for run in [involutive_basis, minimal_involutive_basis] {
                let mut c = config(kind);
                c.trace = true;
                let r = run(&input, &c).unwrap();
                let mut prolongations = 0;
                let mut skips = 0;
                for event in &r.trace {
                    match event {
                        TraceEvent::Prolongation { parent, var, product, outcome } => {
                            prolongations += 1;
                            prop_assert_eq!(&parent.mul_var(*var), product);
                            match outcome {
                                Outcome::CriterionSkip => skips += 1,
                                Outcome::Added(lm) => prop_assert!(order.cmp(lm, product).is_le()),
                                Outcome::Zero => {}
                            }
                        }
                        TraceEvent::Queued { outcome: Outcome::CriterionSkip, .. } => skips += 1,
                        _ => {}
                    }
                }
                prop_assert_eq!(prolongations, r.stats.prolongations);
                prop_assert_eq!(skips, r.stats.criterion_hits);
                prop_assert!(r.stats.prolongation_reductions <= c.cap);
            }
        }
    }

    #[test]
    fn trace_does_not_change_the_result((input, _seed) in inputs()) {
        for kind in DivisionKind::ALL {
            let plain = minimal_involutive_basis(&input, &config(kind)).unwrap();
            let mut c = config(kind);
            c.trace = true;
            let traced = minimal_involutive_basis(&input, &c).unwrap();
            prop_assert_eq!(plain.basis, traced.basis);
            prop_assert_eq!(plain.stats, traced.stats);
            prop_assert!(plain.trace.is_empty());
        }
    }
}

#[test]
fn lowest_prolongation_is_treated_first() {
    let ctx = VariableContext::parse_list("x,y").unwrap();
    let order = MonomialOrder::DegLex;
    let input: Vec<Polynomial> = ["x^2 - 1", "y^2 - x", "x*y^2 + y"]
        .iter()
        .map(|s| Polynomial::parse(s, &ctx, order).unwrap())
        .collect();
    let mut c = EngineConfig::new(DivisionKind::Janet);
    c.trace = true;
    let r = involutive_basis(&input, &c).unwrap();
    assert!(r.is_complete());
    // Each pass starts from the lowest open prolongation.
    let mut passes: Vec<Vec<Monomial>> = vec![Vec::new()];
    for e in &r.trace {
        match e {
            TraceEvent::Pass => passes.push(Vec::new()),
            TraceEvent::Prolongation { product, .. } => {
                passes.last_mut().unwrap().push(product.clone())
            }
            _ => {}
        }
    }
    assert!(passes.iter().any(|p| !p.is_empty()));
    for pass in passes.iter().filter(|p| p.len() > 1) {
        let first = &pass[0];
        assert!(
            pass.iter()
                .all(|m| order.cmp(first, m) != std::cmp::Ordering::Greater),
            "{pass:?}"
        );
    }
}
