use crate::division::DivisionKind;
use crate::monomial::{monomials_up_to_degree, Monomial};
use crate::poly::{is_groebner_basis, normal_form, Polynomial};

use super::reduce::{autoreduction_violation, involutive_normal_form, Reducers};
use super::EngineError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every non-multiplicative prolongation reduces to zero.
    Local,
    /// Every multiple `f * u` with `deg(u) <= degree` reduces to zero.
    BoundedGlobal { degree: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verification {
    Involutive,
    /// `set[element] * multiplier` has a nonzero involutive normal form.
    Fails {
        element: usize,
        multiplier: Monomial,
        normal_form: Polynomial,
    },
}

impl Verification {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Involutive)
    }
}

/// No member has a term involutively divisible by the leading monomial of
/// another member.
pub fn is_involutively_autoreduced(set: &[Polynomial], kind: DivisionKind) -> bool {
    match Reducers::new(set, kind) {
        None => true,
        Some(r) => {
            let nonzero: Vec<Polynomial> = set.iter().filter(|f| !f.is_zero()).cloned().collect();
            autoreduction_violation(&nonzero, &r.lead).is_none()
        }
    }
}

/// Checks involutivity of the nonzero members of `set`, which must be
/// involutively autoreduced. Members are examined in the given order and
/// multipliers in increasing degree; the first failure is returned.
pub fn verify_involutive(
    set: &[Polynomial],
    kind: DivisionKind,
    mode: VerifyMode,
) -> Result<Verification, EngineError> {
    let Some(reducers) = Reducers::new(set, kind) else {
        return Ok(Verification::Involutive);
    };
    let members: Vec<(usize, &Polynomial)> = set
        .iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .collect();
    let nonzero: Vec<Polynomial> = members.iter().map(|(_, f)| (*f).clone()).collect();
    if let Some(j) = autoreduction_violation(&nonzero, &reducers.lead) {
        return Err(EngineError::NotAutoreduced(format!(
            "member {} is reducible",
            members[j].0
        )));
    }
    let nvars = nonzero[0].nvars();
    let multipliers: Vec<Monomial> = match mode {
        VerifyMode::Local => Vec::new(),
        VerifyMode::BoundedGlobal { degree } => monomials_up_to_degree(nvars, degree),
    };
    for (k, &(index, f)) in members.iter().enumerate() {
        let candidates: Vec<Monomial> = match mode {
            VerifyMode::Local => reducers
                .lead
                .partition(k)
                .nonmultiplicative
                .iter()
                .map(|x| Monomial::variable(nvars, x))
                .collect(),
            VerifyMode::BoundedGlobal { .. } => multipliers.clone(),
        };
        for u in candidates {
            let nf = reducers.normal_form(&f.mul_monomial(&u));
            if !nf.is_zero() {
                return Ok(Verification::Fails {
                    element: index,
                    multiplier: u,
                    normal_form: nf,
                });
            }
        }
    }
    Ok(Verification::Involutive)
}

/// Every S-polynomial of `set` reduces to zero.
pub fn verify_groebner(set: &[Polynomial]) -> bool {
    is_groebner_basis(set)
}

/// The involutive and the conventional normal forms of `p` modulo `set`
/// coincide.
pub fn nf_equality_check(p: &Polynomial, set: &[Polynomial], kind: DivisionKind) -> bool {
    involutive_normal_form(p, set, kind) == normal_form(p, set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{MonomialOrder, VariableContext};

    fn ps(order: MonomialOrder, items: &[&str]) -> Vec<Polynomial> {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        items
            .iter()
            .map(|s| Polynomial::parse(s, &ctx, order).unwrap())
            .collect()
    }

    #[test]
    fn janet_fails_on_the_three_element_set() {
        let o = MonomialOrder::DegLex;
        let g = ps(o, &["x^2", "x*y", "z"]);
        // x*y*x = x^2*y lies in the cone of x^2; z*x has no Janet divisor.
        let v = verify_involutive(&g, DivisionKind::Janet, VerifyMode::Local).unwrap();
        assert_eq!(
            v,
            Verification::Fails {
                element: 2,
                multiplier: Monomial::variable(3, 0),
                normal_form: ps(o, &["x*z"])[0].clone(),
            }
        );
        let completed = ps(o, &["x^2", "x*y", "z", "x*z"]);
        for mode in [VerifyMode::Local, VerifyMode::BoundedGlobal { degree: 4 }] {
            assert!(verify_involutive(&completed, DivisionKind::Janet, mode)
                .unwrap()
                .holds());
        }
    }

    #[test]
    fn single_power_of_the_highest_variable_is_pommaret_involutive() {
        let o = MonomialOrder::DegRevLex;
        // Only z is multiplicative for z^3, so x*z^3 stays irreducible.
        let low = ps(o, &["z^3 + x - 2"]);
        assert!(
            !verify_involutive(&low, DivisionKind::Pommaret, VerifyMode::Local)
                .unwrap()
                .holds()
        );
        let g = ps(o, &["x^3 + z - 2"]);
        assert!(
            verify_involutive(&g, DivisionKind::Pommaret, VerifyMode::Local)
                .unwrap()
                .holds()
        );
        assert!(verify_involutive(
            &g,
            DivisionKind::Pommaret,
            VerifyMode::BoundedGlobal { degree: 3 }
        )
        .unwrap()
        .holds());
    }

    #[test]
    fn reducible_sets_are_rejected() {
        let o = MonomialOrder::DegLex;
        let g = ps(o, &["x", "x*y"]);
        // Every variable is multiplicative for x under Pommaret, not under Janet.
        assert!(is_involutively_autoreduced(&g, DivisionKind::Janet));
        assert!(!is_involutively_autoreduced(&g, DivisionKind::Pommaret));
        assert!(matches!(
            verify_involutive(&g, DivisionKind::Pommaret, VerifyMode::Local),
            Err(EngineError::NotAutoreduced(_))
        ));
    }

    #[test]
    fn groebner_and_normal_form_checks() {
        let lex = MonomialOrder::Lex;
        assert!(!verify_groebner(&ps(lex, &["x^2*y - 1", "x*y^2 - 1"])));
        assert!(verify_groebner(&ps(lex, &["x^2*y - 1"])));
        let g = ps(lex, &["y - 1", "x - 1"]);
        assert!(nf_equality_check(
            &ps(lex, &["0"])[0],
            &g,
            DivisionKind::Janet
        ));
        assert!(nf_equality_check(
            &ps(lex, &["x^3*y - 4*x + y^2"])[0],
            &g,
            DivisionKind::Janet
        ));
    }
}
