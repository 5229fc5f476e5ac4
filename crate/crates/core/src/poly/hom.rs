use crate::error::{Error, Result};
use crate::field::Field;

use super::mpoly::MPoly;

/// Algebra homomorphism `K[x_1..x_s] -> K[y_1..y_t]` given by the images of
/// the source variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom<K: Field> {
    source_nvars: usize,
    target_nvars: usize,
    images: Vec<MPoly<K>>,
}

impl<K: Field> RingHom<K> {
    pub fn new(target_nvars: usize, images: Vec<MPoly<K>>) -> Result<Self> {
        for img in &images {
            if img.nvars() != target_nvars {
                return Err(Error::Arity { expected: target_nvars, got: img.nvars() });
            }
        }
        Ok(RingHom { source_nvars: images.len(), target_nvars, images })
    }

    pub fn identity(nvars: usize, ctx: &K::Ctx) -> Self {
        Self::inclusion(nvars, nvars, ctx)
    }

    /// `x_i -> x_i` into a ring with extra trailing variables.
    pub fn inclusion(source_nvars: usize, target_nvars: usize, ctx: &K::Ctx) -> Self {
        assert!(target_nvars >= source_nvars);
        let images = (0..source_nvars).map(|i| MPoly::var(target_nvars, ctx, i)).collect();
        RingHom { source_nvars, target_nvars, images }
    }

    /// Variable permutation: `x_i -> x_{perm[i]}`.
    pub fn permutation(perm: &[usize], ctx: &K::Ctx) -> Self {
        let n = perm.len();
        let images = perm.iter().map(|&j| MPoly::var(n, ctx, j)).collect();
        RingHom { source_nvars: n, target_nvars: n, images }
    }

    /// Swap variables `a` and `b`.
    pub fn transposition(nvars: usize, a: usize, b: usize, ctx: &K::Ctx) -> Self {
        let mut perm: Vec<usize> = (0..nvars).collect();
        perm.swap(a, b);
        Self::permutation(&perm, ctx)
    }

    pub fn source_nvars(&self) -> usize {
        self.source_nvars
    }

    pub fn target_nvars(&self) -> usize {
        self.target_nvars
    }

    pub fn images(&self) -> &[MPoly<K>] {
        &self.images
    }

    pub fn apply(&self, p: &MPoly<K>) -> Result<MPoly<K>> {
        if p.nvars() != self.source_nvars {
            return Err(Error::Arity { expected: self.source_nvars, got: p.nvars() });
        }
        let ctx = p.ctx();
        // powers[i][e] = images[i]^e, filled on demand
        let mut powers: Vec<Vec<MPoly<K>>> =
            vec![vec![MPoly::one(self.target_nvars, ctx)]; self.source_nvars];
        let mut acc = MPoly::zero(self.target_nvars, ctx);
        for (m, c) in p.terms() {
            let mut t = MPoly::constant(self.target_nvars, ctx, c.clone());
            for i in m.support() {
                let e = m.exp(i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &self.images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `self ∘ inner`: first apply `inner`, then `self`.
    pub fn compose(&self, inner: &RingHom<K>) -> Result<RingHom<K>> {
        if inner.target_nvars != self.source_nvars {
            return Err(Error::Arity { expected: self.source_nvars, got: inner.target_nvars });
        }
        let images = inner.images.iter().map(|img| self.apply(img)).collect::<Result<Vec<_>>>()?;
        Ok(RingHom { source_nvars: inner.source_nvars, target_nvars: self.target_nvars, images })
    }
}

/// Image of `p` under `h`.
pub fn apply_hom<K: Field>(h: &RingHom<K>, p: &MPoly<K>) -> Result<MPoly<K>> {
    h.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::{parse_poly, parse_poly_named};
    use proptest::prelude::*;

    fn q(s: &str, n: usize) -> MPoly<Rational> {
        parse_poly(s, n, &()).unwrap()
    }

    #[test]
    fn identity_fixes_everything() {
        let p = q("3*x1^2*x2 - x2 + 7", 2);
        assert_eq!(RingHom::identity(2, &()).apply(&p).unwrap(), p);
    }

    #[test]
    fn reflection_example() {
        let h = RingHom::new(2, vec![q("-x1", 2), q("x2 - x1", 2)]).unwrap();
        assert_eq!(h.apply(&q("x1*x2", 2)).unwrap(), q("x1^2 - x1*x2", 2));
    }

    #[test]
    fn deformation_image_of_variable() {
        let names: Vec<String> = ["x1", "x2", "T"].iter().map(|s| s.to_string()).collect();
        let p = |s: &str| parse_poly_named::<Rational>(s, &names, &()).unwrap();
        let h = RingHom::new(3, vec![p("x1 - T*x2"), p("(1 - 2*T)*x2")]).unwrap();
        assert_eq!(h.apply(&q("x1", 2)).unwrap(), p("x1 - T*x2"));
    }

    #[test]
    fn arity_mismatch() {
        let h = RingHom::<Rational>::identity(2, &());
        assert!(matches!(h.apply(&q("x1", 3)), Err(Error::Arity { expected: 2, got: 3 })));
    }

    fn poly3() -> impl Strategy<Value = MPoly<Rational>> {
        prop::collection::vec(((0u16..3, 0u16..3, 0u16..3), -4i64..5), 0..5).prop_map(|ts| {
            let terms = ts
                .into_iter()
                .map(|((a, b, c), k)| (crate::poly::Monomial::from_exponents(&[a, b, c]), Rational::from_integer(k.into())))
                .collect();
            MPoly::from_terms(3, &(), terms)
        })
    }

    proptest! {
        #[test]
        fn hom_is_additive_and_multiplicative(p in poly3(), r in poly3(), a in poly3(), b in poly3(), c in poly3()) {
            let h = RingHom::new(3, vec![a, b, c]).unwrap();
            let hp = h.apply(&p).unwrap();
            let hr = h.apply(&r).unwrap();
            prop_assert_eq!(h.apply(&(&p + &r)).unwrap(), &hp + &hr);
            prop_assert_eq!(h.apply(&(&p * &r)).unwrap(), &hp * &hr);
        }

        #[test]
        fn ring_axioms(p in poly3(), r in poly3(), s in poly3()) {
            prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
            prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
            prop_assert_eq!(&p + &r, &r + &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn print_parse_roundtrip(p in poly3()) {
            let text = p.to_string();
            prop_assert_eq!(parse_poly::<Rational>(&text, 3, &()).unwrap(), p);
        }
    }
}
