use std::borrow::Cow;

use crate::division::DivisionKind;
use crate::monomial::Monomial;
use crate::poly::{sort_by_leading_monomial, Coefficient, Polynomial};

use super::index::LeadSet;

/// One elimination `p -= coeff * multiplier * set[reducer]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionStep {
    pub reducer: usize,
    pub multiplier: Monomial,
    pub coeff: Coefficient,
}

/// Nonzero members of a set with their lead index.
pub(crate) struct Reducers<'a> {
    polys: Vec<&'a Polynomial>,
    // Position of each entry in the caller's slice.
    origin: Vec<usize>,
    pub(crate) lead: Cow<'a, LeadSet>,
}

impl<'a> Reducers<'a> {
    pub(crate) fn new(set: &'a [Polynomial], kind: DivisionKind) -> Option<Self> {
        let mut polys = Vec::new();
        let mut origin = Vec::new();
        for (i, f) in set.iter().enumerate() {
            if !f.is_zero() {
                polys.push(f);
                origin.push(i);
            }
        }
        let order = polys.first()?.order();
        let lead = LeadSet::new(kind, order, polys.iter().map(|f| f.lm().clone()).collect());
        Some(Self {
            polys,
            origin,
            lead: Cow::Owned(lead),
        })
    }

    pub(crate) fn from_refs(polys: Vec<&'a Polynomial>, lead: Cow<'a, LeadSet>) -> Self {
        let origin = (0..polys.len()).collect();
        Self {
            polys,
            origin,
            lead,
        }
    }

    /// Full involutive normal form, highest reducible term first.
    pub(crate) fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form_by(p, &self.lead, |i| self.polys[i])
    }

    /// Normal form with the reducible term chosen by `pick` among the
    /// currently reducible terms (listed highest first); the eliminations are
    /// appended to `trace`.
    pub(crate) fn normal_form_with(
        &self,
        p: &Polynomial,
        pick: &mut dyn FnMut(usize) -> usize,
        trace: &mut Vec<ReductionStep>,
    ) -> Polynomial {
        let mut work = p.clone();
        loop {
            let reducible: Vec<(usize, usize)> = work
                .terms()
                .iter()
                .enumerate()
                .filter_map(|(t, term)| self.lead.find_divisor(&term.mono).map(|i| (t, i)))
                .collect();
            if reducible.is_empty() {
                return work;
            }
            let choice = pick(reducible.len()).min(reducible.len() - 1);
            let (t, i) = reducible[choice];
            let term = &work.terms()[t];
            let f = self.polys[i];
            let coeff = &term.coeff / &f.terms()[0].coeff;
            let multiplier = term.mono.quotient_unchecked(f.lm());
            work = work.add_scaled(&-coeff.clone(), Some(&multiplier), f);
            trace.push(ReductionStep {
                reducer: self.origin[i],
                multiplier,
                coeff,
            });
        }
    }
}

/// Full involutive normal form of `p` modulo the polynomials `poly(i)` whose
/// leading monomials make up `lead`, highest reducible term first.
pub(crate) fn normal_form_by<'a>(
    p: &Polynomial,
    lead: &LeadSet,
    poly: impl Fn(usize) -> &'a Polynomial,
) -> Polynomial {
    let mut work = p.clone();
    let mut rest = Polynomial::zero(p.nvars(), p.order());
    while let Some(lt) = work.leading_term() {
        match lead.find_divisor(&lt.mono) {
            Some(i) => {
                let f = poly(i);
                let factor = -(&lt.coeff / &f.terms()[0].coeff);
                let shift = lt.mono.quotient_unchecked(f.lm());
                work = work.add_scaled(&factor, Some(&shift), f);
            }
            None => rest.push_lowest(work.pop_leading().expect("nonzero")),
        }
    }
    rest
}

/// Involutive normal form of `p` modulo the nonzero members of `set`:
/// no term of the result has an involutive divisor in the leading monomials
/// of `set`. The highest reducible term is always eliminated first, with
/// reducer the involutive divisor of lowest leading monomial.
///
/// # Panics
/// If `p` and `set` disagree on variable count or ordering.
pub fn involutive_normal_form(
    p: &Polynomial,
    set: &[Polynomial],
    kind: DivisionKind,
) -> Polynomial {
    match Reducers::new(set, kind) {
        Some(r) => {
            check_compatible(p, r.polys[0]);
            r.normal_form(p)
        }
        None => p.clone(),
    }
}

/// Involutive normal form under a caller-chosen strategy. `pick(k)` selects
/// one of the `k` currently reducible terms, index 0 being the highest. Every
/// elimination is recorded so that
/// `p = NF + sum coeff * multiplier * set[reducer]`.
pub fn involutive_normal_form_with(
    p: &Polynomial,
    set: &[Polynomial],
    kind: DivisionKind,
    pick: &mut dyn FnMut(usize) -> usize,
) -> (Polynomial, Vec<ReductionStep>) {
    let mut trace = Vec::new();
    match Reducers::new(set, kind) {
        Some(r) => {
            check_compatible(p, r.polys[0]);
            let nf = r.normal_form_with(p, pick, &mut trace);
            (nf, trace)
        }
        None => (p.clone(), trace),
    }
}

fn check_compatible(p: &Polynomial, f: &Polynomial) {
    assert_eq!(p.nvars(), f.nvars(), "variable count mismatch");
    assert_eq!(p.order(), f.order(), "ordering mismatch");
}

/// Index of a member with a term (its leading term included) involutively
/// divisible by the leading monomial of another member; the highest such
/// member is reported.
pub(crate) fn autoreduction_violation(set: &[Polynomial], lead: &LeadSet) -> Option<usize> {
    let order = set.first()?.order();
    let mut best: Option<usize> = None;
    for (j, f) in set.iter().enumerate() {
        let hit = f
            .terms()
            .iter()
            .any(|t| lead.find_divisor_except(&t.mono, j).is_some());
        if hit && best.is_none_or(|b| order.less(set[b].lm(), f.lm())) {
            best = Some(j);
        }
    }
    best
}

/// Involutive autoreduction: while some member has a term involutively
/// divisible by another member's leading monomial, that member is replaced by
/// its involutive normal form modulo the rest (and dropped if it becomes
/// zero). The result is monic and sorted ascending by leading monomial.
pub fn autoreduce_involutive(set: &[Polynomial], kind: DivisionKind) -> Vec<Polynomial> {
    let mut work: Vec<Polynomial> = set
        .iter()
        .filter(|f| !f.is_zero())
        .map(Polynomial::monic)
        .collect();
    autoreduce_in_place(&mut work, kind);
    if let Some(order) = work.first().map(Polynomial::order) {
        sort_by_leading_monomial(&mut work, order);
    }
    work
}

pub(crate) fn autoreduce_in_place(work: &mut Vec<Polynomial>, kind: DivisionKind) {
    let Some(order) = work.first().map(Polynomial::order) else {
        return;
    };
    loop {
        let lead = LeadSet::new(kind, order, work.iter().map(|f| f.lm().clone()).collect());
        let Some(j) = autoreduction_violation(work, &lead) else {
            return;
        };
        let f = work.swap_remove(j);
        let rest: Vec<&Polynomial> = work.iter().collect();
        let lead = LeadSet::new(kind, order, rest.iter().map(|g| g.lm().clone()).collect());
        let h = Reducers::from_refs(rest, Cow::Owned(lead)).normal_form(&f);
        if !h.is_zero() {
            work.push(h.monic());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{MonomialOrder, VariableContext};

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y", "z"]).unwrap()
    }

    fn ps(order: MonomialOrder, items: &[&str]) -> Vec<Polynomial> {
        items
            .iter()
            .map(|s| Polynomial::parse(s, &ctx(), order).unwrap())
            .collect()
    }

    #[test]
    fn janet_normal_form_differs_from_conventional() {
        let o = MonomialOrder::DegLex;
        let g = ps(o, &["x^2", "x*y", "z"]);
        // x*z is a multiple of z but x is non-multiplicative for z.
        let p = &ps(o, &["x*z + y"])[0];
        let nf = involutive_normal_form(p, &g, DivisionKind::Janet);
        assert_eq!(nf, *p);
        assert_eq!(crate::normal_form(p, &g), ps(o, &["y"])[0]);
        let q = &ps(o, &["y*z^2 - x^2*y"])[0];
        assert!(involutive_normal_form(q, &g, DivisionKind::Janet).is_zero());
    }

    #[test]
    fn traced_reduction_reconstructs_the_input() {
        let o = MonomialOrder::DegRevLex;
        let g = ps(o, &["x^2 - y", "x*y - z", "z^2 - 1"]);
        let p = &ps(o, &["x^3*y^2 + x*z^3 - 7"])[0];
        for kind in DivisionKind::ALL {
            let mut k = 0usize;
            let (nf, trace) = involutive_normal_form_with(p, &g, kind, &mut |n| {
                k += 1;
                k % n
            });
            let mut sum = nf.clone();
            for step in &trace {
                sum = &sum + &g[step.reducer].mul_term(&step.coeff, &step.multiplier);
            }
            assert_eq!(&sum, p, "{kind}");
        }
    }

    #[test]
    fn involutive_autoreduction() {
        let o = MonomialOrder::DegLex;
        let out =
            autoreduce_involutive(&ps(o, &["2*x^2", "x^2*z + y", "z"]), DivisionKind::Pommaret);
        // x^2*z is in the Pommaret cone of x^2, leaving y.
        assert_eq!(out, ps(o, &["z", "y", "x^2"]));
        // Under Janet x^2*z has no involutive divisor among x^2 and z.
        let janet = autoreduce_involutive(&ps(o, &["x^2", "x^2*z + y", "z"]), DivisionKind::Janet);
        assert_eq!(janet, ps(o, &["z", "x^2", "x^2*z + y"]));
        let kept = ps(o, &["z", "x*y", "x^2"]);
        assert_eq!(autoreduce_involutive(&kept, DivisionKind::Janet), kept);
        assert!(autoreduce_involutive(&ps(o, &["0"]), DivisionKind::Janet).is_empty());
    }
}
