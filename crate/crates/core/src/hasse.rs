//! Hasse–Schmidt derivatives and the total derivation `D_k = Σ ∂/∂x_t`.

use serde::{Deserialize, Serialize};

use crate::field::{binomial, Field};
use crate::poly::{MPoly, Monomial, UPoly};

/// Which derivation family an order refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivationKind {
    MultivariateHs,
    DPower,
    UnivariateHs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DerivationSpec {
    pub nvars: usize,
    pub order: u32,
    pub kind: DerivationKind,
}

impl DerivationSpec {
    /// Apply a multivariate derivation. Univariate specs act on one-variable polynomials.
    pub fn apply<K: Field>(&self, p: &MPoly<K>) -> MPoly<K> {
        match self.kind {
            DerivationKind::MultivariateHs => hs_multi(p, self.order),
            DerivationKind::DPower => d_power(p, self.order),
            DerivationKind::UnivariateHs => hs_uni(&UPoly::from_mpoly(p), self.order).to_mpoly(),
        }
    }
}

/// `f_i`: the coefficient of `X^m` moves to `X^{m-i}` scaled by `C(m, i)`.
pub fn hs_uni<K: Field>(f: &UPoly<K>, i: u32) -> UPoly<K> {
    let i = i as usize;
    let ctx = f.ctx();
    let coeffs: Vec<K> = f
        .coeffs()
        .iter()
        .enumerate()
        .skip(i)
        .map(|(m, c)| c.mul(&K::from_bigint(ctx, &binomial(m as u64, i as u64))))
        .collect();
    UPoly::new(ctx, coeffs)
}

/// `HD^i_k`: for each term, sum over compositions `j` of `i` supported on the
/// term's variables of `Π C(α_t, j_t) x^{α-j}`.
pub fn hs_multi<K: Field>(p: &MPoly<K>, i: u32) -> MPoly<K> {
    if i == 0 {
        return p.clone();
    }
    let ctx = p.ctx();
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        let vars: Vec<usize> = m.support().collect();
        let mut js = vec![0u16; vars.len()];
        compositions(m, &vars, 0, i as u16, &mut js, &mut |js| {
            let mut coef = num_bigint::BigInt::from(1);
            let mut q = *m;
            for (t, &v) in vars.iter().enumerate() {
                coef *= binomial(m.exp(v) as u64, js[t] as u64);
                q.set_exp(v, m.exp(v) - js[t]);
            }
            let k = c.mul(&K::from_bigint(ctx, &coef));
            if !k.is_zero() {
                out.push((q, k));
            }
        });
    }
    MPoly::from_terms(p.nvars(), ctx, out)
}

fn compositions(
    m: &Monomial,
    vars: &[usize],
    pos: usize,
    left: u16,
    js: &mut [u16],
    emit: &mut impl FnMut(&[u16]),
) {
    if pos == vars.len() {
        if left == 0 {
            emit(js);
        }
        return;
    }
    let cap = m.exp(vars[pos]).min(left);
    // the remaining variables must be able to absorb what is left
    let rest: u32 = vars[pos + 1..].iter().map(|&v| m.exp(v) as u32).sum();
    for j in 0..=cap {
        if (left - j) as u32 > rest {
            continue;
        }
        js[pos] = j;
        compositions(m, vars, pos + 1, left - j, js, emit);
    }
    js[pos] = 0;
}

/// `D_k p = Σ_t ∂p/∂x_t`.
pub fn d_total<K: Field>(p: &MPoly<K>) -> MPoly<K> {
    (0..p.nvars()).fold(MPoly::zero(p.nvars(), p.ctx()), |acc, t| &acc + &p.partial(t))
}

/// `D^i_k`, the `i`-fold composite of `D_k`.
pub fn d_power<K: Field>(p: &MPoly<K>, i: u32) -> MPoly<K> {
    (0..i).fold(p.clone(), |acc, _| d_total(&acc))
}

/// `e_d(x_1, ..., x_n)`; zero when `d > n`.
pub fn elementary_symmetric<K: Field>(n: usize, d: usize, ctx: &K::Ctx) -> MPoly<K> {
    if d > n {
        return MPoly::zero(n, ctx);
    }
    let mut terms = Vec::new();
    subsets(n, d, 0, &mut Vec::new(), &mut |s| {
        let mut m = Monomial::one();
        for &v in s {
            m.set_exp(v, 1);
        }
        terms.push((m, K::one(ctx)));
    });
    MPoly::from_terms(n, ctx, terms)
}

fn subsets(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if cur.len() == d {
        emit(cur);
        return;
    }
    for v in start..n {
        if n - v < d - cur.len() {
            break;
        }
        cur.push(v);
        subsets(n, d, v + 1, cur, emit);
        cur.pop();
    }
}

/// `x_1 x_2 ... x_n`.
pub fn product_of_vars<K: Field>(n: usize, ctx: &K::Ctx) -> MPoly<K> {
    elementary_symmetric(n, n, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, Rational};
    use crate::poly::{parse_poly, parse_upoly};
    use proptest::prelude::*;

    fn q(s: &str, n: usize) -> MPoly<Rational> {
        parse_poly(s, n, &()).unwrap()
    }

    #[test]
    fn univariate_examples() {
        let f = parse_upoly::<Rational>("X^3", &()).unwrap();
        assert_eq!(hs_uni(&f, 2).to_string(), "3*X");
        let f = parse_upoly::<Rational>("X^3 + 2*X", &()).unwrap();
        assert_eq!(hs_uni(&f, 1).to_string(), "3*X^2 + 2");
        assert_eq!(hs_uni(&f, 0), f);
        assert!(hs_uni(&f, 4).is_zero());
    }

    #[test]
    fn univariate_positive_characteristic() {
        for p in [2u32, 3, 5, 7] {
            let ctx = PrimeField::new(p).unwrap();
            let f = UPoly::<Fp>::monomial(&ctx, p as usize);
            assert!(hs_uni(&f, 1).is_zero());
            assert_eq!(hs_uni(&f, p), UPoly::one(&ctx));
        }
    }

    #[test]
    fn multivariate_examples() {
        assert_eq!(hs_multi(&q("x1*x2", 2), 1), q("x1 + x2", 2));
        assert_eq!(hs_multi(&q("x1^2*x2", 2), 2), q("x2 + 2*x1", 2));
        assert_eq!(hs_multi(&q("x1*x2*x3", 3), 2), q("x1 + x2 + x3", 3));
    }

    #[test]
    fn d_power_examples() {
        let p = q("x1^2*x2", 2);
        assert_eq!(d_power(&p, 1), q("2*x1*x2 + x1^2", 2));
        assert_eq!(d_power(&p, 0), p);
        assert_eq!(d_power(&p, 2), q("2*x2 + 4*x1", 2));
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_symmetric::<Rational>(3, 2, &()), q("x1*x2 + x1*x3 + x2*x3", 3));
        assert_eq!(elementary_symmetric::<Rational>(2, 0, &()), q("1", 2));
        assert_eq!(elementary_symmetric::<Rational>(4, 4, &()), q("x1*x2*x3*x4", 4));
        assert!(elementary_symmetric::<Rational>(2, 3, &()).is_zero());
    }

    #[test]
    fn hs_of_product_is_elementary() {
        let f5 = PrimeField::new(5).unwrap();
        for n in 1..=7 {
            for i in 0..=n {
                let x = product_of_vars::<Rational>(n, &());
                assert_eq!(hs_multi(&x, i as u32), elementary_symmetric(n, n - i, &()));
                let x = product_of_vars::<Fp>(n, &f5);
                assert_eq!(hs_multi(&x, i as u32), elementary_symmetric(n, n - i, &f5));
            }
        }
    }

    fn poly3() -> impl Strategy<Value = MPoly<Rational>> {
        prop::collection::vec(((0u16..4, 0u16..3, 0u16..3), -5i64..6), 0..5).prop_map(|ts| {
            let terms = ts
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), Rational::from_integer(k.into())))
                .collect();
            MPoly::from_terms(3, &(), terms)
        })
    }

    fn leibniz_holds<K: Field>(p: &MPoly<K>, r: &MPoly<K>, i: u32) -> bool {
        let lhs = hs_multi(&(p * r), i);
        let rhs = (0..=i).fold(MPoly::zero(p.nvars(), p.ctx()), |acc, a| {
            &acc + &(&hs_multi(p, a) * &hs_multi(r, i - a))
        });
        lhs == rhs
    }

    proptest! {
        #[test]
        fn leibniz_rule(p in poly3(), r in poly3(), i in 0u32..5) {
            prop_assert!(leibniz_holds(&p, &r, i));
            let f5 = PrimeField::new(5).unwrap();
            let p5 = p.convert::<Fp>(&f5).unwrap();
            let r5 = r.convert::<Fp>(&f5).unwrap();
            prop_assert!(leibniz_holds(&p5, &r5, i));
        }

        #[test]
        fn characteristic_zero_bridge(p in poly3(), i in 0u32..5) {
            let fact: u64 = (1..=i as u64).product();
            let lhs = hs_multi(&p, i).scale(&Rational::from_integer(fact.into()));
            prop_assert_eq!(lhs, d_power(&p, i));
        }
    }
}
