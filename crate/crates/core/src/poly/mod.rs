//! Sparse multivariate and dense univariate polynomials, substitution maps,
//! and the text format shared by every input and report.

mod hom;
mod monomial;
mod mpoly;
mod parse;
mod upoly;

pub use hom::{apply_hom, RingHom};
pub use monomial::{Monomial, MAX_VARS};
pub use mpoly::{MPoly, WeightedDegree};
pub use parse::{parse_poly, parse_poly_list, parse_poly_named, parse_upoly};
pub use upoly::{upoly_gcd, UPoly};

/// `prefix1, ..., prefixN`
pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Names for `x1..x_{n}` followed by `T`.
pub fn var_names_with_t(n: usize) -> Vec<String> {
    let mut v = var_names("x", n);
    v.push("T".to_string());
    v
}

/// Common weighted degree of `p`; see [`MPoly::weighted_degree`].
pub fn weighted_degree<K: crate::field::Field>(p: &MPoly<K>, weights: &[u32]) -> WeightedDegree {
    p.weighted_degree(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn weighted_degree_examples() {
        let names = var_names("y", 2);
        let p = parse_poly_named::<Rational>("4*y2 - y1^2", &names, &()).unwrap();
        assert_eq!(weighted_degree(&p, &[1, 2]), WeightedDegree::Homogeneous(2));
        let p = parse_poly::<Rational>("x1 + x2^2", 2, &()).unwrap();
        assert_eq!(weighted_degree(&p, &[1, 1]), WeightedDegree::Inhomogeneous);
        let p = parse_poly::<Rational>("x1*x2", 2, &()).unwrap();
        assert_eq!(weighted_degree(&p, &[1, 1]), WeightedDegree::Homogeneous(2));
        let z = MPoly::<Rational>::zero(2, &());
        assert_eq!(weighted_degree(&z, &[1, 1]), WeightedDegree::Zero);
    }
}
