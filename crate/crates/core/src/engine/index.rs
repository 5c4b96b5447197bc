use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::division::{DivisionKind, Partition, PartitionRule};
use crate::monomial::{Monomial, MonomialOrder};

/// Every monomial that could involutively divide `w` under a globally
/// defined division: `u |_L w` holds exactly for the `u` passed to `visit`.
pub(crate) fn global_candidates(kind: DivisionKind, w: &Monomial, mut visit: impl FnMut(Monomial)) {
    let exps = w.exponents();
    let n = exps.len();
    visit(Monomial::one(n));
    match kind {
        DivisionKind::Pommaret => {
            // A divisor of class k agrees with w before x_k, has a positive
            // x_k exponent not above w's and nothing after.
            let mut prefix = vec![0u32; n];
            for k in 0..n {
                for e in 1..=exps[k] {
                    prefix[k] = e;
                    visit(Monomial::new(prefix.clone()));
                }
                prefix[k] = exps[k];
            }
        }
        DivisionKind::DivisionII => {
            // A divisor with top exponent d is min(w_i, d) coordinatewise.
            for d in 1..=w.max_exponent() {
                visit(Monomial::new(
                    exps.iter().map(|&e| e.min(d)).collect::<Vec<_>>(),
                ));
            }
        }
        _ => unreachable!("{kind} is not globally defined"),
    }
}

/// Class of a monomial and its exponents before the class variable.
type ClassKey = (usize, Box<[u32]>);

/// Pommaret key of a monomial `u != 1`: its class `k` (last variable with
/// a nonzero exponent) with the exponents before it, and the exponent of
/// `x_k`. `u` involutively divides `w` exactly when `w` has the same
/// exponents before `x_k` and at least `u_k` in `x_k`.
fn pommaret_key(u: &Monomial) -> Option<(ClassKey, u32)> {
    let exps = u.exponents();
    let k = exps.iter().rposition(|&e| e > 0)?;
    Some(((k, exps[..k].into()), exps[k]))
}

/// Members of a globally defined division, indexed by monomial for
/// involutive divisor queries. Keeps the first index of repeated monomials.
#[derive(Debug, Clone)]
enum DivisorIndex {
    Pommaret {
        unit: Option<usize>,
        classes: HashMap<ClassKey, BTreeMap<u32, usize>>,
    },
    Candidates(HashMap<Monomial, usize>),
}

impl DivisorIndex {
    fn new(kind: DivisionKind) -> Self {
        match kind {
            DivisionKind::Pommaret => Self::Pommaret {
                unit: None,
                classes: HashMap::new(),
            },
            _ => Self::Candidates(HashMap::new()),
        }
    }

    /// False if `u` was already present.
    fn insert(&mut self, u: &Monomial, i: usize) -> bool {
        match self {
            Self::Pommaret { unit, classes } => match pommaret_key(u) {
                None => unit.replace(unit.unwrap_or(i)).is_none(),
                Some((key, e)) => {
                    let slot = classes.entry(key).or_default();
                    if slot.contains_key(&e) {
                        return false;
                    }
                    slot.insert(e, i);
                    true
                }
            },
            Self::Candidates(map) => match map.entry(u.clone()) {
                std::collections::hash_map::Entry::Occupied(_) => false,
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(i);
                    true
                }
            },
        }
    }

    fn for_each_divisor(&self, kind: DivisionKind, w: &Monomial, mut visit: impl FnMut(usize)) {
        match self {
            Self::Pommaret { unit, classes } => {
                if let Some(i) = unit {
                    visit(*i);
                }
                let exps = w.exponents();
                for (k, &e) in exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if let Some(slot) = classes.get(&(k, exps[..k].into())) {
                        for (_, &i) in slot.range(..=e) {
                            visit(i);
                        }
                    }
                }
            }
            Self::Candidates(map) => global_candidates(kind, w, |u| {
                if let Some(&i) = map.get(&u) {
                    visit(i);
                }
            }),
        }
    }
}

/// Terms of a polynomial set under a globally defined division, counted so
/// that "does `u` involutively divide some term" is cheap.
#[derive(Debug, Clone)]
pub(crate) enum TermIndex {
    Pommaret {
        terms: usize,
        classes: HashMap<ClassKey, BTreeMap<u32, u32>>,
    },
    Candidates(HashMap<Monomial, u32>),
}

impl TermIndex {
    pub(crate) fn new(kind: DivisionKind) -> Self {
        match kind {
            DivisionKind::Pommaret => Self::Pommaret {
                terms: 0,
                classes: HashMap::new(),
            },
            _ => Self::Candidates(HashMap::new()),
        }
    }

    pub(crate) fn clear(&mut self) {
        match self {
            Self::Pommaret { terms, classes } => {
                *terms = 0;
                classes.clear();
            }
            Self::Candidates(map) => map.clear(),
        }
    }

    pub(crate) fn add(&mut self, kind: DivisionKind, t: &Monomial) {
        match self {
            Self::Pommaret { terms, classes } => {
                *terms += 1;
                let exps = t.exponents();
                for (k, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        *classes
                            .entry((k, exps[..k].into()))
                            .or_default()
                            .entry(e)
                            .or_insert(0) += 1;
                    }
                }
            }
            Self::Candidates(map) => {
                global_candidates(kind, t, |u| *map.entry(u).or_insert(0) += 1)
            }
        }
    }

    /// Whether `u` involutively divides at least one counted term.
    pub(crate) fn divides_some(&self, u: &Monomial) -> bool {
        match self {
            Self::Pommaret { terms, classes } => match pommaret_key(u) {
                None => *terms > 0,
                Some((key, e)) => classes
                    .get(&key)
                    .is_some_and(|slot| slot.range(e..).next().is_some()),
            },
            Self::Candidates(map) => map.get(u).is_some_and(|&c| c > 0),
        }
    }
}

/// Leading monomials of a polynomial set together with their partitions.
///
/// Answers "which member involutively divides `w`", picking the member with
/// the lowest leading monomial (then the lowest index) when several do.
#[derive(Debug, Clone)]
pub(crate) struct LeadSet {
    kind: DivisionKind,
    order: MonomialOrder,
    lms: Vec<Monomial>,
    parts: Vec<Partition>,
    // Globally defined divisions only.
    lookup: Option<DivisorIndex>,
    duplicates: bool,
}

impl LeadSet {
    pub(crate) fn new(kind: DivisionKind, order: MonomialOrder, lms: Vec<Monomial>) -> Self {
        let mut lead = Self {
            kind,
            order,
            lms: Vec::with_capacity(lms.len()),
            parts: Vec::with_capacity(lms.len()),
            lookup: kind.is_globally_defined().then(|| DivisorIndex::new(kind)),
            duplicates: false,
        };
        if lead.lookup.is_some() {
            for m in lms {
                lead.push(m);
            }
        } else {
            lead.parts = kind.partitions(&lms);
            lead.lms = lms;
        }
        lead
    }

    /// Appends a member. Set-dependent partitions are all recomputed.
    pub(crate) fn push(&mut self, lm: Monomial) {
        let i = self.lms.len();
        match &mut self.lookup {
            Some(index) => {
                self.parts
                    .push(self.kind.global_partition(&lm).expect("global"));
                if !index.insert(&lm, i) {
                    self.duplicates = true;
                }
                self.lms.push(lm);
            }
            None => {
                self.lms.push(lm);
                self.parts = self.kind.partitions(&self.lms);
            }
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.lms.len()
    }

    pub(crate) fn lm(&self, i: usize) -> &Monomial {
        &self.lms[i]
    }

    pub(crate) fn partition(&self, i: usize) -> &Partition {
        &self.parts[i]
    }

    pub(crate) fn covers(&self, i: usize, w: &Monomial) -> bool {
        self.parts[i].covers(&self.lms[i], w)
    }

    /// The involutive divisor of `w` with the lowest leading monomial.
    pub(crate) fn find_divisor(&self, w: &Monomial) -> Option<usize> {
        let mut best: Option<usize> = None;
        self.for_each_divisor(w, |i| {
            if self.better(i, best) {
                best = Some(i);
            }
        });
        best
    }

    /// Calls `visit` with every member that involutively divides `w`.
    pub(crate) fn for_each_divisor(&self, w: &Monomial, mut visit: impl FnMut(usize)) {
        match &self.lookup {
            Some(index) if !self.duplicates => index.for_each_divisor(self.kind, w, visit),
            _ => {
                for i in 0..self.lms.len() {
                    if self.covers(i, w) {
                        visit(i);
                    }
                }
            }
        }
    }

    /// Like [`LeadSet::find_divisor`] but ignoring member `skip`.
    pub(crate) fn find_divisor_except(&self, w: &Monomial, skip: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        self.for_each_divisor(w, |i| {
            if i != skip && self.better(i, best) {
                best = Some(i);
            }
        });
        best
    }

    fn better(&self, i: usize, best: Option<usize>) -> bool {
        match best {
            None => true,
            Some(b) => match self.order.cmp(&self.lms[i], &self.lms[b]) {
                Ordering::Less => true,
                Ordering::Equal => i < b,
                Ordering::Greater => false,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_up_to_degree;
    use proptest::prelude::*;

    fn scan(lead: &LeadSet, w: &Monomial) -> Vec<usize> {
        (0..lead.len()).filter(|&i| lead.covers(i, w)).collect()
    }

    proptest! {
        #[test]
        fn global_lookup_agrees_with_scan(
            raw in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 1..7)
        ) {
            let lms: Vec<Monomial> = raw.into_iter().map(Monomial::new).collect();
            for kind in [DivisionKind::Pommaret, DivisionKind::DivisionII] {
                let lead = LeadSet::new(kind, MonomialOrder::DegRevLex, lms.clone());
                let mut grown = LeadSet::new(kind, MonomialOrder::DegRevLex, Vec::new());
                for m in &lms {
                    grown.push(m.clone());
                }
                for w in monomials_up_to_degree(3, 6) {
                    let mut seen = Vec::new();
                    lead.for_each_divisor(&w, |i| seen.push(i));
                    seen.sort_unstable();
                    let all = scan(&lead, &w);
                    if !lead.duplicates {
                        prop_assert_eq!(&seen, &all);
                    }
                    let lowest = all.iter().copied().fold(None, |b, i| if lead.better(i, b) { Some(i) } else { b });
                    prop_assert_eq!(lead.find_divisor(&w), lowest);
                    prop_assert_eq!(grown.find_divisor(&w), lowest);
                }
            }
        }

        #[test]
        fn term_index_agrees_with_scan(
            raw in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 0..7)
        ) {
            let terms: Vec<Monomial> = raw.into_iter().map(Monomial::new).collect();
            for kind in [DivisionKind::Pommaret, DivisionKind::DivisionII] {
                let mut index = TermIndex::new(kind);
                for t in &terms {
                    index.add(kind, t);
                }
                for u in monomials_up_to_degree(3, 5) {
                    let part = kind.global_partition(&u).unwrap();
                    let expected = terms.iter().any(|t| part.covers(&u, t));
                    prop_assert_eq!(index.divides_some(&u), expected);
                }
            }
        }
    }
}
