//! Involutive divisions: rules splitting the variables into multiplicative
//! and non-multiplicative ones for each member of a finite monomial set.

mod axioms;

pub use axioms::{check_division_axioms, find_continuity_violation, AxiomReport, AxiomViolation};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::monomial::{Monomial, VarSet, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("monomial {0:?} is not a member of the set")]
    NotMember(Monomial),
    #[error("unknown division `{0}` (expected thomas, janet, pommaret, division1 or division2)")]
    Unknown(String),
}

/// Split of the variables for one member `u` of a set `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Partition {
    pub multiplicative: VarSet,
    pub nonmultiplicative: VarSet,
}

impl Partition {
    pub fn from_multiplicative(multiplicative: VarSet, nvars: usize) -> Self {
        Self {
            multiplicative,
            nonmultiplicative: multiplicative.complement(nvars),
        }
    }

    /// `true` iff `w` lies in the involutive cone of `u` under this partition.
    pub fn covers(&self, u: &Monomial, w: &Monomial) -> bool {
        debug_assert_eq!(u.nvars(), w.nvars());
        u.exponents()
            .iter()
            .zip(w.exponents())
            .enumerate()
            .all(|(i, (&a, &b))| a == b || (a < b && self.multiplicative.contains(i)))
    }

    pub fn display<'a>(&self, ctx: &'a VariableContext) -> PartitionDisplay<'a> {
        PartitionDisplay { part: *self, ctx }
    }
}

pub struct PartitionDisplay<'a> {
    part: Partition,
    ctx: &'a VariableContext,
}

impl fmt::Display for PartitionDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "M={} NM={}",
            self.part.multiplicative.display(self.ctx),
            self.part.nonmultiplicative.display(self.ctx)
        )
    }
}

/// Anything that assigns partitions to the members of a finite set. The five
/// built-in divisions implement it; the axiom checker accepts any rule.
pub trait PartitionRule {
    /// Partition of every element of `set`, in the same order. Repeated
    /// elements get identical partitions.
    fn partitions(&self, set: &[Monomial]) -> Vec<Partition>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivisionKind {
    Thomas,
    Janet,
    Pommaret,
    DivisionI,
    DivisionII,
}

impl DivisionKind {
    pub const ALL: [DivisionKind; 5] = [
        Self::Thomas,
        Self::Janet,
        Self::Pommaret,
        Self::DivisionI,
        Self::DivisionII,
    ];

    /// Divisions for which every finite set has a finite completion.
    pub const NOETHERIAN: [DivisionKind; 4] =
        [Self::Thomas, Self::Janet, Self::DivisionI, Self::DivisionII];

    pub fn name(self) -> &'static str {
        match self {
            Self::Thomas => "thomas",
            Self::Janet => "janet",
            Self::Pommaret => "pommaret",
            Self::DivisionI => "division1",
            Self::DivisionII => "division2",
        }
    }

    /// The partition of `u` does not depend on the surrounding set.
    ///
    /// Division I is reported as set-dependent: its rule inspects the other
    /// members `v` of `U` even though it is sometimes listed among the global
    /// divisions.
    pub fn is_globally_defined(self) -> bool {
        matches!(self, Self::Pommaret | Self::DivisionII)
    }

    pub fn is_noetherian(self) -> bool {
        !matches!(self, Self::Pommaret)
    }

    /// Janet and Pommaret read the variable precedence; the other three are
    /// symmetric in the variables.
    pub fn uses_variable_order(self) -> bool {
        matches!(self, Self::Janet | Self::Pommaret)
    }

    /// Partition of a single member `u` of `set`.
    pub fn partition(self, u: &Monomial, set: &[Monomial]) -> Result<Partition, DivisionError> {
        if !set.contains(u) {
            return Err(DivisionError::NotMember(u.clone()));
        }
        let n = u.nvars();
        Ok(match self {
            Self::Pommaret => pommaret(u),
            Self::DivisionII => division_ii(u),
            Self::Thomas => {
                let maxima = column_maxima(set, n);
                thomas(u, &maxima)
            }
            Self::Janet => janet(u, set),
            Self::DivisionI => division_i(u, set),
        })
    }

    /// Partition for the globally defined kinds, which need no set.
    pub fn global_partition(self, u: &Monomial) -> Option<Partition> {
        match self {
            Self::Pommaret => Some(pommaret(u)),
            Self::DivisionII => Some(division_ii(u)),
            _ => None,
        }
    }

    /// `u |_L w` relative to `set`.
    pub fn is_involutive_divisor(
        self,
        u: &Monomial,
        set: &[Monomial],
        w: &Monomial,
    ) -> Result<bool, DivisionError> {
        let part = self.partition(u, set)?;
        Ok(part.covers(u, w))
    }

    /// Indices of all members of `set` that involutively divide `w`.
    pub fn involutive_divisors(self, set: &[Monomial], w: &Monomial) -> Vec<usize> {
        let parts = self.partitions(set);
        set.iter()
            .zip(&parts)
            .enumerate()
            .filter(|(_, (u, p))| p.covers(u, w))
            .map(|(i, _)| i)
            .collect()
    }
}

impl PartitionRule for DivisionKind {
    fn partitions(&self, set: &[Monomial]) -> Vec<Partition> {
        let Some(first) = set.first() else {
            return Vec::new();
        };
        let n = first.nvars();
        match self {
            Self::Pommaret => set.iter().map(pommaret).collect(),
            Self::DivisionII => set.iter().map(division_ii).collect(),
            Self::Thomas => {
                let maxima = column_maxima(set, n);
                set.iter().map(|u| thomas(u, &maxima)).collect()
            }
            Self::Janet => set.iter().map(|u| janet(u, set)).collect(),
            Self::DivisionI => set.iter().map(|u| division_i(u, set)).collect(),
        }
    }
}

impl fmt::Display for DivisionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DivisionKind {
    type Err = DivisionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "thomas" => Ok(Self::Thomas),
            "janet" => Ok(Self::Janet),
            "pommaret" => Ok(Self::Pommaret),
            "division1" | "divisioni" | "i" => Ok(Self::DivisionI),
            "division2" | "divisionii" | "ii" => Ok(Self::DivisionII),
            _ => Err(DivisionError::Unknown(s.to_string())),
        }
    }
}

fn column_maxima(set: &[Monomial], n: usize) -> Vec<u32> {
    let mut maxima = vec![0; n];
    for v in set {
        for (m, &e) in maxima.iter_mut().zip(v.exponents()) {
            *m = (*m).max(e);
        }
    }
    maxima
}

// x_i is multiplicative iff deg_i(u) is the largest in the set.
fn thomas(u: &Monomial, maxima: &[u32]) -> Partition {
    let mult = VarSet::from_indices((0..u.nvars()).filter(|&i| u.deg(i) == maxima[i]));
    Partition::from_multiplicative(mult, u.nvars())
}

// x_i is multiplicative iff deg_i(u) is maximal within the group of members
// agreeing with u in x_1..x_{i-1}.
fn janet(u: &Monomial, set: &[Monomial]) -> Partition {
    let n = u.nvars();
    let mut group: Vec<&Monomial> = set.iter().collect();
    let mut mult = VarSet::empty();
    for i in 0..n {
        let top = group.iter().map(|v| v.deg(i)).max().unwrap_or(0);
        if u.deg(i) == top {
            mult.insert(i);
        }
        group.retain(|v| v.deg(i) == u.deg(i));
    }
    Partition::from_multiplicative(mult, n)
}

// With k the last variable occurring in u, x_k..x_n are multiplicative.
fn pommaret(u: &Monomial) -> Partition {
    let n = u.nvars();
    let class = u.exponents().iter().rposition(|&e| e > 0).unwrap_or(0);
    Partition::from_multiplicative(VarSet::from_indices(class..n), n)
}

// x_i is non-multiplicative iff for some v the cofactor lcm(u,v)/u involves
// between 1 and floor(n/2) variables, x_i among them.
fn division_i(u: &Monomial, set: &[Monomial]) -> Partition {
    let n = u.nvars();
    let limit = n / 2;
    let mut nonmult = VarSet::empty();
    for v in set {
        let cofactor = VarSet::from_indices((0..n).filter(|&i| v.deg(i) > u.deg(i)));
        let m = cofactor.len();
        if m >= 1 && m <= limit {
            nonmult = nonmult.union(cofactor);
        }
    }
    Partition {
        multiplicative: nonmult.complement(n),
        nonmultiplicative: nonmult,
    }
}

// x_i is multiplicative iff deg_i(u) equals the largest exponent of u.
fn division_ii(u: &Monomial) -> Partition {
    let top = u.max_exponent();
    let mult = VarSet::from_indices((0..u.nvars()).filter(|&i| u.deg(i) == top));
    Partition::from_multiplicative(mult, u.nvars())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y", "z"]).unwrap()
    }

    fn mono(s: &str) -> Monomial {
        Monomial::parse(s, &ctx()).unwrap()
    }

    fn set(items: &[&str]) -> Vec<Monomial> {
        items.iter().map(|s| mono(s)).collect()
    }

    fn vars(names: &str) -> VarSet {
        let ctx = ctx();
        VarSet::from_indices(
            names
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| ctx.index_of(s).unwrap()),
        )
    }

    #[test]
    fn spot_checks_on_the_three_element_set() {
        let u = set(&["x^2", "x*y", "z"]);
        let p = DivisionKind::Thomas.partition(&mono("x*y"), &u).unwrap();
        assert_eq!(
            (p.multiplicative, p.nonmultiplicative),
            (vars("y"), vars("x,z"))
        );
        let p = DivisionKind::Janet.partition(&mono("z"), &u).unwrap();
        assert_eq!(
            (p.multiplicative, p.nonmultiplicative),
            (vars("y,z"), vars("x"))
        );
        let p = DivisionKind::DivisionII
            .partition(&mono("x*y"), &u)
            .unwrap();
        assert_eq!(
            (p.multiplicative, p.nonmultiplicative),
            (vars("x,y"), vars("z"))
        );
        let p = DivisionKind::DivisionI.partition(&mono("z"), &u).unwrap();
        assert_eq!(
            (p.multiplicative, p.nonmultiplicative),
            (vars("y,z"), vars("x"))
        );
        let ones = set(&["1", "x"]);
        let p = DivisionKind::Pommaret.partition(&mono("1"), &ones).unwrap();
        assert_eq!(p.multiplicative, VarSet::full(3));
        assert_eq!(
            DivisionKind::Janet.partition(&mono("y"), &u),
            Err(DivisionError::NotMember(mono("y")))
        );
    }

    #[test]
    fn involutive_divisibility() {
        let u = set(&["x^2", "x*y", "z"]);
        let janet = DivisionKind::Janet;
        assert!(janet
            .is_involutive_divisor(&mono("x^2"), &u, &mono("x^2*y^2*z"))
            .unwrap());
        assert!(!DivisionKind::Thomas
            .is_involutive_divisor(&mono("x^2"), &u, &mono("x^2*y"))
            .unwrap());
        for kind in DivisionKind::ALL {
            for m in &u {
                assert!(kind.is_involutive_divisor(m, &u, m).unwrap());
            }
        }
        assert!(DivisionKind::DivisionII
            .involutive_divisors(&u, &mono("x*y*z"))
            .is_empty());
        assert!(janet.involutive_divisors(&u, &mono("y^3")).is_empty());
    }

    #[test]
    fn janet_divisor_of_x2z_in_the_completed_set() {
        // Janet partitions of {x^2, xy, z, xz} worked by hand:
        //   x^2: {x,y,z}; xy: {y,z}; xz: {z}; z: {y,z}.
        // x^2*z = x^2 * z with z multiplicative for x^2; x*z would need x.
        let u = set(&["x^2", "x*y", "z", "x*z"]);
        let parts = DivisionKind::Janet.partitions(&u);
        let expected = ["x,y,z", "y,z", "y,z", "z"];
        for (p, e) in parts.iter().zip(expected) {
            assert_eq!(p.multiplicative, vars(e));
        }
        assert_eq!(
            DivisionKind::Janet.involutive_divisors(&u, &mono("x^2*z")),
            vec![0]
        );
    }

    #[test]
    fn division_i_in_one_variable_is_conventional() {
        let u = vec![Monomial::new(vec![1]), Monomial::new(vec![3])];
        for p in DivisionKind::DivisionI.partitions(&u) {
            assert_eq!(p.multiplicative, VarSet::full(1));
        }
    }

    #[test]
    fn parses_names() {
        assert_eq!(
            "Janet".parse::<DivisionKind>().unwrap(),
            DivisionKind::Janet
        );
        assert_eq!(
            "DIVISION2".parse::<DivisionKind>().unwrap(),
            DivisionKind::DivisionII
        );
        assert!("gauss".parse::<DivisionKind>().is_err());
        for kind in DivisionKind::ALL {
            assert_eq!(kind.name().parse::<DivisionKind>().unwrap(), kind);
        }
    }
}
