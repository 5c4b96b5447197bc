//! Classical Buchberger completion. Serves as the independent oracle the
//! involutive algorithms are checked against.

use std::collections::BTreeSet;

use super::reduce::{normal_form_refs, s_polynomial};
use super::{autoreduce, sort_by_leading_monomial, Polynomial};
use crate::MonomialOrder;

/// The monic reduced Gröbner basis of the ideal generated by `polys`,
/// sorted ascending by leading monomial. Empty for the zero ideal.
///
/// Pairs are treated lowest-lcm first. Pairs with coprime leading monomials
/// and pairs covered by the chain criterion are skipped.
///
/// # Panics
/// If the inputs disagree on variable count or ordering.
pub fn buchberger(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = autoreduce(polys);
    let Some(order) = basis.first().map(Polynomial::order) else {
        return basis;
    };
    for f in polys {
        assert_eq!(f.order(), order, "mixed orderings");
        assert_eq!(f.nvars(), basis[0].nvars(), "mixed variable counts");
    }
    // Pairs (i, j) with i < j still to be treated.
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while let Some(pair) = lowest_pair(&pending, &basis, order) {
        pending.remove(&pair);
        let (i, j) = pair;
        let (fi, fj) = (basis[i].lm(), basis[j].lm());
        let lcm = fi.lcm_unchecked(fj);
        if lcm == fi.mul_unchecked(fj) {
            continue;
        }
        if chain_criterion(i, j, &lcm, &basis, &pending) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]).expect("nonzero basis elements");
        let refs: Vec<&Polynomial> = basis.iter().collect();
        let h = normal_form_refs(&s, &refs);
        if !h.is_zero() {
            let k = basis.len();
            basis.push(h.monic());
            for i in 0..k {
                pending.insert((i, k));
            }
        }
    }
    reduce_basis(basis, order)
}

fn lowest_pair(
    pending: &BTreeSet<(usize, usize)>,
    basis: &[Polynomial],
    order: MonomialOrder,
) -> Option<(usize, usize)> {
    pending.iter().copied().min_by(|&(a, b), &(c, d)| {
        let l1 = basis[a].lm().lcm_unchecked(basis[b].lm());
        let l2 = basis[c].lm().lcm_unchecked(basis[d].lm());
        order.cmp(&l1, &l2).then_with(|| (a, b).cmp(&(c, d)))
    })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

// Some third element whose leading monomial divides the lcm and whose pairs
// with both i and j have already been treated.
fn chain_criterion(
    i: usize,
    j: usize,
    lcm: &crate::Monomial,
    basis: &[Polynomial],
    pending: &BTreeSet<(usize, usize)>,
) -> bool {
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].lm().divides_unchecked(lcm)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

/// Minimalizes then interreduces a Gröbner basis.
fn reduce_basis(basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            j != i && g.lm().divides_unchecked(f.lm()) && (g.lm() != f.lm() || j < i)
        });
        if !redundant {
            minimal.push(f.clone());
        }
    }
    let mut out: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for (i, f) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g)
            .collect();
        let lead = Polynomial::from_monomial(f.lm().clone(), order);
        let tail = normal_form_refs(&f.tail(), &others);
        out.push((&lead + &tail).monic());
    }
    sort_by_leading_monomial(&mut out, order);
    out
}

/// Every S-polynomial reduces to zero modulo the set.
pub fn is_groebner_basis(polys: &[Polynomial]) -> bool {
    let refs: Vec<&Polynomial> = polys.iter().filter(|f| !f.is_zero()).collect();
    for j in 0..refs.len() {
        for i in 0..j {
            let s = s_polynomial(refs[i], refs[j]).expect("nonzero");
            if !normal_form_refs(&s, &refs).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Both sets generate the same ideal, decided by comparing reduced Gröbner
/// bases.
pub fn same_ideal(a: &[Polynomial], b: &[Polynomial]) -> bool {
    buchberger(a) == buchberger(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::VariableContext;

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
    fn reduced_basis_of_the_three_binomials() {
        let lex = MonomialOrder::Lex;
        let gb = buchberger(&ps(lex, &["x^2*y - 1", "x*y^2 - 1", "y^4 - 1"]));
        assert_eq!(gb, ps(lex, &["y - 1", "x - 1"]));
        assert!(is_groebner_basis(&gb));
    }

    #[test]
    fn trivial_cases() {
        let o = MonomialOrder::DegRevLex;
        assert_eq!(buchberger(&ps(o, &["2*x*y - 4"])), ps(o, &["x*y - 2"]));
        assert_eq!(
            buchberger(&ps(o, &["y - 1", "x - 1"])),
            ps(o, &["y - 1", "x - 1"])
        );
        assert!(buchberger(&ps(o, &["0"])).is_empty());
        assert_eq!(buchberger(&ps(o, &["x", "x - 1"])), ps(o, &["1"]));
    }

    #[test]
    fn two_quadrics_need_one_cubic() {
        // Two quadrics whose S-polynomial adds one cubic.
        let o = MonomialOrder::DegRevLex;
        let gb = buchberger(&ps(o, &["x^2 - y*z", "x*y - z^2"]));
        assert!(is_groebner_basis(&gb));
        // y^2*z - x*z^2 joins the two generators (x > y > z).
        assert_eq!(gb.len(), 3);
        assert!(gb.contains(&Polynomial::parse("y^2*z - x*z^2", &ctx(), o).unwrap()));
    }

    #[test]
    fn ideal_comparison() {
        let lex = MonomialOrder::Lex;
        assert!(same_ideal(
            &ps(lex, &["x^2*y - 1", "x*y^2 - 1", "y^4 - 1"]),
            &ps(lex, &["x - 1", "y - 1"])
        ));
        assert!(!same_ideal(&ps(lex, &["x"]), &ps(lex, &["y"])));
        let f = ps(lex, &["x^2 - y", "x*y - z"]);
        let mut g = f.clone();
        g.push(&f[0].mul_var(2) + &f[1].scale(&crate::Coefficient::from_integer((-3).into())));
        assert!(same_ideal(&f, &g));
        assert!(!is_groebner_basis(&ps(lex, &["x^2*y - 1", "x*y^2 - 1"])));
    }
}
