//! The set of basis triples shared by both completion algorithms, with the
//! indexes that keep a completion step cheap for globally defined divisions.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

use crate::division::DivisionKind;
use crate::monomial::{Monomial, MonomialOrder, VarSet};
use crate::poly::Polynomial;

use super::index::{LeadSet, TermIndex};
use super::reduce::normal_form_by;

pub(super) struct Entry {
    pub(super) poly: Polynomial,
    pub(super) ancestor: Monomial,
    pub(super) processed: VarSet,
    /// Order of entry; breaks ties between equal prolongations.
    pub(super) serial: u64,
}

/// A pending prolongation, ordered so that the heap pops the lowest product
/// first and, among equal products, the oldest element.
#[derive(PartialEq, Eq)]
struct Candidate {
    order: MonomialOrder,
    product: Monomial,
    serial: u64,
    var: usize,
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.product, &self.product)
            .then(other.serial.cmp(&self.serial))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(super) struct Triples {
    kind: DivisionKind,
    order: MonomialOrder,
    entries: Vec<Entry>,
    positions: HashMap<u64, usize>,
    lead: LeadSet,
    // Globally defined divisions only: partitions never change, so every
    // prolongation can be queued once when its element arrives.
    heap: Option<BinaryHeap<Candidate>>,
    // Globally defined divisions only, on request: the terms of all members.
    terms: Option<TermIndex>,
    track_overlap: bool,
}

impl Triples {
    pub(super) fn new(kind: DivisionKind, order: MonomialOrder, track_overlap: bool) -> Self {
        let global = kind.is_globally_defined();
        Self {
            kind,
            order,
            entries: Vec::new(),
            positions: HashMap::new(),
            lead: LeadSet::new(kind, order, Vec::new()),
            heap: global.then(BinaryHeap::new),
            terms: (global && track_overlap).then(|| TermIndex::new(kind)),
            track_overlap,
        }
    }

    pub(super) fn entry_mut(&mut self, i: usize) -> &mut Entry {
        &mut self.entries[i]
    }

    fn queue_prolongations(&mut self, i: usize) {
        let Some(heap) = &mut self.heap else {
            return;
        };
        let e = &self.entries[i];
        let open = self
            .lead
            .partition(i)
            .nonmultiplicative
            .difference(e.processed);
        for var in open.iter() {
            heap.push(Candidate {
                order: self.order,
                product: e.poly.lm().mul_var(var),
                serial: e.serial,
                var,
            });
        }
    }

    /// Appends `entry` and, when overlap tracking is on, reports whether its
    /// leading monomial involutively divides a term of another member.
    pub(super) fn push(&mut self, entry: Entry) -> bool {
        let lm = entry.poly.lm().clone();
        let overlap = self.terms.as_ref().is_some_and(|t| t.divides_some(&lm));
        let i = self.entries.len();
        self.positions.insert(entry.serial, i);
        self.lead.push(lm);
        self.entries.push(entry);
        self.queue_prolongations(i);
        if !self.track_overlap {
            return false;
        }
        match &mut self.terms {
            Some(terms) => {
                for t in self.entries[i].poly.terms() {
                    terms.add(self.kind, &t.mono);
                }
                overlap
            }
            // Set-dependent partitions may change for every member.
            None => true,
        }
    }

    /// Replaces all members. Prolongations already queued for surviving
    /// serials stay valid.
    pub(super) fn replace(&mut self, entries: Vec<Entry>) {
        let old = std::mem::take(&mut self.positions);
        self.lead = LeadSet::new(
            self.kind,
            self.order,
            entries.iter().map(|e| e.poly.lm().clone()).collect(),
        );
        self.entries = entries;
        self.positions = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.serial, i))
            .collect();
        for i in 0..self.entries.len() {
            if !old.contains_key(&self.entries[i].serial) {
                self.queue_prolongations(i);
            }
        }
        if let Some(terms) = &mut self.terms {
            terms.clear();
            for t in self.entries.iter().flat_map(|e| e.poly.terms()) {
                terms.add(self.kind, &t.mono);
            }
        }
    }

    /// Forgets which prolongations were treated.
    pub(super) fn reopen(&mut self) {
        for e in &mut self.entries {
            e.processed = VarSet::empty();
        }
        if let Some(heap) = &mut self.heap {
            heap.clear();
        }
        for i in 0..self.entries.len() {
            self.queue_prolongations(i);
        }
    }

    /// Removes all members; must be followed by [`Triples::replace`], which
    /// keeps the queued prolongations of the serials passed back.
    pub(super) fn take(&mut self) -> Vec<Entry> {
        std::mem::take(&mut self.entries)
    }

    /// Lowest unprocessed non-multiplicative prolongation `(index, var,
    /// product)`, strictly below `below` if given. Equal products go to the
    /// member with the smallest serial.
    pub(super) fn select(&mut self, below: Option<&Monomial>) -> Option<(usize, usize, Monomial)> {
        let order = self.order;
        if let Some(heap) = &mut self.heap {
            while let Some(top) = heap.peek() {
                let live = self
                    .positions
                    .get(&top.serial)
                    .filter(|&&i| !self.entries[i].processed.contains(top.var));
                let Some(&i) = live else {
                    heap.pop();
                    continue;
                };
                if below.is_some_and(|b| !order.less(&top.product, b)) {
                    return None;
                }
                let top = heap.pop().expect("peeked");
                return Some((i, top.var, top.product));
            }
            return None;
        }
        let mut best: Option<(usize, usize, Monomial)> = None;
        for (i, e) in self.entries.iter().enumerate() {
            let open = self
                .lead
                .partition(i)
                .nonmultiplicative
                .difference(e.processed);
            for var in open.iter() {
                let w = e.poly.lm().mul_var(var);
                if below.is_some_and(|b| !order.less(&w, b)) {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some((bi, _, bw)) => match order.cmp(&w, bw) {
                        Ordering::Less => true,
                        Ordering::Equal => e.serial < self.entries[*bi].serial,
                        Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((i, var, w));
                }
            }
        }
        best
    }

    /// Some member's leading monomial involutively divides `lm` and its
    /// ancestor's lcm with `ancestor` lies strictly below `lm`.
    pub(super) fn criterion(&self, lm: &Monomial, ancestor: &Monomial) -> bool {
        let mut hit = false;
        self.lead.for_each_divisor(lm, |i| {
            hit = hit
                || self
                    .order
                    .less(&ancestor.lcm_unchecked(&self.entries[i].ancestor), lm);
        });
        hit
    }

    pub(super) fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form_by(p, &self.lead, |i| &self.entries[i].poly)
    }
}
