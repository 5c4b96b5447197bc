use std::cmp::Ordering;

use super::{sort_by_leading_monomial, Coefficient, PolyError, Polynomial};

/// Index of the reducer for `mono`: the divisor with the lowest leading
/// monomial, earliest on ties.
fn pick_reducer(mono: &crate::Monomial, reducers: &[&Polynomial]) -> Option<usize> {
    let order = reducers.first()?.order();
    let mut best: Option<usize> = None;
    for (i, f) in reducers.iter().enumerate() {
        let lm = f.lm();
        if !lm.divides_unchecked(mono) {
            continue;
        }
        match best {
            Some(b) if order.cmp(lm, reducers[b].lm()) != Ordering::Less => {}
            _ => best = Some(i),
        }
    }
    best
}

/// Full conventional normal form of `p` modulo `reducers`.
///
/// The highest reducible term is eliminated first. For a non-Gröbner set the
/// result depends on this strategy.
pub fn normal_form(p: &Polynomial, reducers: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = reducers.iter().filter(|f| !f.is_zero()).collect();
    normal_form_refs(p, &refs)
}

pub(crate) fn normal_form_refs(p: &Polynomial, reducers: &[&Polynomial]) -> Polynomial {
    let mut work = p.clone();
    let mut rest = Polynomial::zero(p.nvars(), p.order());
    while let Some(lt) = work.leading_term() {
        match pick_reducer(&lt.mono, reducers) {
            Some(i) => {
                let f = reducers[i];
                let factor = -(&lt.coeff / &f.terms()[0].coeff);
                let shift = lt.mono.quotient_unchecked(f.lm());
                work = work.add_scaled(&factor, Some(&shift), f);
            }
            None => {
                let lt = work.pop_leading().expect("nonzero");
                rest.push_lowest(lt);
            }
        }
    }
    rest
}

/// Conventional autoreduction: every member is replaced by its normal form
/// modulo the others until nothing changes. Output is monic and sorted
/// ascending by leading monomial; zero members vanish.
pub fn autoreduce(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut set: Vec<Polynomial> = polys
        .iter()
        .filter(|f| !f.is_zero())
        .map(Polynomial::monic)
        .collect();
    let Some(order) = set.first().map(Polynomial::order) else {
        return set;
    };
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < set.len() {
            let others: Vec<&Polynomial> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, f)| f)
                .collect();
            let reduced = normal_form_refs(&set[i], &others).monic();
            if reduced != set[i] {
                changed = true;
                if reduced.is_zero() {
                    set.remove(i);
                    continue;
                }
                set[i] = reduced;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    sort_by_leading_monomial(&mut set, order);
    set
}

/// `lcm/lm(f) * f/lc(f) - lcm/lm(g) * g/lc(g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    f.check(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let lcm = f.lm().lcm_unchecked(g.lm());
    let left = f.mul_term(&f.terms()[0].coeff.recip(), &lcm.quotient_unchecked(f.lm()));
    let right_coeff: Coefficient = -g.terms()[0].coeff.recip();
    Ok(left.add_scaled(&right_coeff, Some(&lcm.quotient_unchecked(g.lm())), g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{MonomialOrder, VariableContext};

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, &ctx(), MonomialOrder::Lex).unwrap()
    }

    #[test]
    fn normal_forms() {
        assert_eq!(normal_form(&p("x^2*y"), &[p("x - 1"), p("y - 1")]), p("1"));
        assert_eq!(normal_form(&p("x^2 + y"), &[]), p("x^2 + y"));
        let f = p("x*y^2 - 1");
        assert!(normal_form(&f, std::slice::from_ref(&f)).is_zero());
        // Lower terms get reduced too.
        assert_eq!(normal_form(&p("y^3 + y^2"), &[p("y^2 - 2")]), p("2*y + 2"));
    }

    #[test]
    fn autoreduction() {
        assert_eq!(autoreduce(&[p("x - 1"), p("x")]), vec![p("1")]);
        let input = [p("x^2*y - 1"), p("x*y^2 - 1"), p("y^4 - 1")];
        let mut expected = input.to_vec();
        sort_by_leading_monomial(&mut expected, MonomialOrder::Lex);
        assert_eq!(autoreduce(&input), expected);
        assert_eq!(autoreduce(&[p("2*x - 4")]), vec![p("x - 2")]);
        assert_eq!(autoreduce(&[p("x + y"), p("x + y")]), vec![p("x + y")]);
        assert!(autoreduce(&[p("0")]).is_empty());
    }

    #[test]
    fn s_polynomials() {
        assert_eq!(s_polynomial(&p("x - 1"), &p("y - 1")).unwrap(), p("x - y"));
        let f = p("x^2*y - 1");
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert_eq!(
            s_polynomial(&p("x^2*y - 1"), &p("x*y^2 - 1")).unwrap(),
            p("x - y")
        );
        assert_eq!(
            s_polynomial(&p("x"), &p("0")),
            Err(PolyError::ZeroPolynomial)
        );
    }
}
