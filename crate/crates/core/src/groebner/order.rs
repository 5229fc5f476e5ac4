use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;

/// Monomial order used to drive Buchberger's algorithm. Storage order of
/// [`crate::poly::MPoly`] is always grevlex; this only affects algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Grevlex on the variables in `elim_mask` first, ties broken by grevlex
    /// on the remaining variables.
    Block { elim_mask: u32 },
}

impl MonomialOrder {
    /// Block order eliminating the listed variables.
    pub fn eliminating(vars: &[usize]) -> Self {
        MonomialOrder::Block { elim_mask: vars.iter().fold(0, |m, &v| m | (1 << v)) }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Block { elim_mask } => a
                .cmp_grevlex_masked(b, *elim_mask)
                .then_with(|| a.cmp_grevlex_masked(b, !*elim_mask)),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { elim_mask } => {
                let vars: Vec<String> =
                    (0..32).filter(|i| elim_mask & (1 << i) != 0).map(|i| format!("{}", i + 1)).collect();
                write!(f, "block[{}]", vars.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn block_prefers_eliminated_variables() {
        let o = MonomialOrder::eliminating(&[2]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_vs_grevlex() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u16..4, 3).prop_map(|v| m(&v))
    }

    fn order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            (0u32..8).prop_map(|elim_mask| MonomialOrder::Block { elim_mask }),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_and_well_founded(o in order(), a in mono(), b in mono(), c in mono()) {
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert_ne!(o.cmp(&a, &Monomial::one()), Ordering::Less);
            if a != b {
                prop_assert_ne!(o.cmp(&a, &b), Ordering::Equal);
            }
        }
    }
}
