use std::fmt;

use crate::field::Field;

use super::monomial::Monomial;
use super::mpoly::MPoly;

/// Dense univariate polynomial, coefficients from the constant term upwards.
/// The last stored coefficient is nonzero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly<K: Field> {
    ctx: K::Ctx,
    coeffs: Vec<K>,
}

impl<K: Field> UPoly<K> {
    pub fn new(ctx: &K::Ctx, mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { ctx: ctx.clone(), coeffs }
    }

    pub fn from_i64(ctx: &K::Ctx, coeffs: &[i64]) -> Self {
        Self::new(ctx, coeffs.iter().map(|&c| K::from_i64(ctx, c)).collect())
    }

    pub fn zero(ctx: &K::Ctx) -> Self {
        UPoly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &K::Ctx) -> Self {
        UPoly { ctx: ctx.clone(), coeffs: vec![K::one(ctx)] }
    }

    /// `X - a`
    pub fn linear_root(ctx: &K::Ctx, a: &K) -> Self {
        Self::new(ctx, vec![a.neg(), K::one(ctx)])
    }

    /// `X^n`
    pub fn monomial(ctx: &K::Ctx, n: usize) -> Self {
        let mut c = vec![K::zero(ctx); n + 1];
        c[n] = K::one(ctx);
        UPoly { ctx: ctx.clone(), coeffs: c }
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    /// Coefficients from degree 0 upwards.
    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| K::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Divide through by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                UPoly { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| c.mul(&inv)).collect() }
            }
        }
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs.iter().rev().fold(K::zero(&self.ctx), |acc, c| acc.mul(x).add(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.ctx, (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.ctx, (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = vec![K::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(&self.ctx, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ctx), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlc = divisor.leading().expect("division by zero polynomial");
        let dinv = dlc.inv().expect("nonzero leading coefficient");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(&self.ctx), self.clone());
        }
        let mut quot = vec![K::zero(&self.ctx); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&dinv);
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(d));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(&self.ctx, quot), Self::new(&self.ctx, rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Coefficient slice usable as the univariate ring `K[X]` embedded in one variable.
    pub fn to_mpoly(&self) -> MPoly<K> {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::from_exponents(&[i as u16]), c.clone()))
            .collect();
        MPoly::from_terms(1, &self.ctx, terms)
    }

    /// Read a polynomial in one variable (`nvars` must be 1).
    pub fn from_mpoly(p: &MPoly<K>) -> Self {
        assert_eq!(p.nvars(), 1, "univariate conversion needs one variable");
        let deg = p.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![K::zero(p.ctx()); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(0) as usize] = c.clone();
        }
        Self::new(p.ctx(), coeffs)
    }
}

impl<K: Field> fmt::Display for UPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly().to_string_with(&["X".to_string()]))
    }
}

impl<K: Field> fmt::Debug for UPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

/// Monic gcd of two univariate polynomials.
pub fn upoly_gcd<K: Field>(f: &UPoly<K>, g: &UPoly<K>) -> UPoly<K> {
    f.gcd(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, Rational};
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> UPoly<Rational> {
        UPoly::from_i64(&(), c)
    }

    #[test]
    fn gcd_shared_factor() {
        // (X-1)^3 and 3(X-1)^2
        let f = qp(&[-1, 3, -3, 1]);
        let g = qp(&[3, -6, 3]);
        assert_eq!(upoly_gcd(&f, &g), qp(&[1, -2, 1]));
    }

    #[test]
    fn gcd_coprime() {
        assert_eq!(upoly_gcd(&qp(&[1, 0, 1]), &qp(&[1, 1])), qp(&[1]));
    }

    #[test]
    fn gcd_over_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let f = UPoly::<Fp>::from_i64(&f5, &[-1, 0, 1]);
        let g = UPoly::<Fp>::from_i64(&f5, &[0, 1, 1]);
        assert_eq!(upoly_gcd(&f, &g), UPoly::from_i64(&f5, &[1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let f = qp(&[2, 4]);
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(upoly_gcd(&f, &UPoly::zero(&())), UPoly::new(&(), vec![half, Rational::from_integer(1.into())]));
    }

    #[test]
    fn monic_is_idempotent() {
        let f = qp(&[3, 0, 6]);
        assert_eq!(f.monic(), f.monic().monic());
        assert!(f.monic().is_monic());
    }

    #[test]
    fn display_uses_x() {
        assert_eq!(qp(&[0, 3]).to_string(), "3*X");
        assert_eq!(qp(&[2, -3, 1]).to_string(), "X^2 - 3*X + 2");
    }

    fn small_poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-5i64..6, 0..6)
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
            let common = qp(&c);
            let f = qp(&a).mul(&common);
            let g = qp(&b).mul(&common);
            let d = upoly_gcd(&f, &g);
            if f.is_zero() && g.is_zero() {
                prop_assert!(d.is_zero());
            } else {
                prop_assert!(d.is_monic());
                if !f.is_zero() { prop_assert!(f.div_rem(&d).1.is_zero()); }
                if !g.is_zero() { prop_assert!(g.div_rem(&d).1.is_zero()); }
                if !common.is_zero() { prop_assert!(d.div_rem(&common.monic()).1.is_zero()); }
            }
        }
    }
}
