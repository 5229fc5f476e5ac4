//! Characteristic maps, root and coefficient maps, shift projections, the
//! involutions `Φ_j` with their `T`-deformations, and Vieta's map.
//!
//! Indices in this module are 1-based, as in the usual notation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hasse::{hs_multi, product_of_vars};
use crate::poly::{MPoly, RingHom, UPoly, MAX_VARS};

fn check_index(j: usize, n: usize, what: &str) -> Result<()> {
    if j == 0 || j > n {
        return Err(Error::Invalid(format!("{what} {j} out of range 1..={n}")));
    }
    Ok(())
}

/// `x_j - x_base + (α_j - α_base)` for every `j != base`.
pub fn characteristic_kernel<K: Field>(alphas: &[K], base: usize, ctx: &K::Ctx) -> Result<Vec<MPoly<K>>> {
    let n = alphas.len();
    check_index(base, n, "base")?;
    let b = base - 1;
    Ok((0..n)
        .filter(|&j| j != b)
        .map(|j| {
            let lin = &MPoly::var(n, ctx, j) - &MPoly::var(n, ctx, b);
            &lin + &MPoly::constant(n, ctx, alphas[j].sub(&alphas[b]))
        })
        .collect())
}

/// The algebra map `x_i ↦ X - α_i` into one variable.
pub fn characteristic_map<K: Field>(alphas: &[K], ctx: &K::Ctx) -> Result<RingHom<K>> {
    let images = alphas.iter().map(|a| UPoly::linear_root(ctx, a).to_mpoly()).collect();
    RingHom::new(1, images)
}

pub fn characteristic_apply<K: Field>(p: &MPoly<K>, alphas: &[K]) -> Result<UPoly<K>> {
    if p.nvars() != alphas.len() {
        return Err(Error::Arity { expected: alphas.len(), got: p.nvars() });
    }
    let h = characteristic_map(alphas, p.ctx())?;
    Ok(UPoly::from_mpoly(&h.apply(p)?))
}

/// `Π (X + α_i)`.
pub fn root_map<K: Field>(alphas: &[K], ctx: &K::Ctx) -> UPoly<K> {
    alphas
        .iter()
        .fold(UPoly::one(ctx), |acc, a| acc.mul(&UPoly::linear_root(ctx, &a.neg())))
}

/// `X^n + y_1 X^{n-1} + ... + y_n`.
pub fn coefficient_map<K: Field>(y: &[K], ctx: &K::Ctx) -> UPoly<K> {
    let mut coeffs: Vec<K> = y.iter().rev().cloned().collect();
    coeffs.push(K::one(ctx));
    UPoly::new(ctx, coeffs)
}

/// Subtract the `j`-th coordinate from every coordinate.
pub fn shift_projection<K: Field>(point: &[K], j: usize) -> Result<Vec<K>> {
    check_index(j, point.len(), "shift index")?;
    let s = point[j - 1].clone();
    Ok(point.iter().map(|x| x.sub(&s)).collect())
}

/// `Φ#_j` on `K[x_1..x_m]`: `x_l ↦ x_l - x_j`, `x_j ↦ -x_j`; the identity for `j = m + 1`.
pub fn phi_endo<K: Field>(j: usize, nvars: usize, ctx: &K::Ctx) -> Result<RingHom<K>> {
    check_index(j, nvars + 1, "involution index")?;
    if j == nvars + 1 {
        return Ok(RingHom::identity(nvars, ctx));
    }
    let xj = MPoly::var(nvars, ctx, j - 1);
    let images = (0..nvars)
        .map(|l| if l == j - 1 { -&xj } else { &MPoly::var(nvars, ctx, l) - &xj })
        .collect();
    RingHom::new(nvars, images)
}

/// `Φ#[T]_j : K[x_1..x_m] → K[x_1..x_m, T]`: `x_l ↦ x_l - T x_j`,
/// `x_j ↦ (1 - 2T) x_j`; the plain inclusion for `j = m + 1`.
pub fn phi_t_endo<K: Field>(j: usize, nvars: usize, ctx: &K::Ctx) -> Result<RingHom<K>> {
    check_index(j, nvars + 1, "involution index")?;
    if nvars + 1 > MAX_VARS {
        return Err(Error::TooManyVariables(nvars + 1));
    }
    let target = nvars + 1;
    if j == nvars + 1 {
        return Ok(RingHom::inclusion(nvars, target, ctx));
    }
    let t = MPoly::var(target, ctx, nvars);
    let xj = MPoly::var(target, ctx, j - 1);
    let txj = &t * &xj;
    let images = (0..nvars)
        .map(|l| {
            if l == j - 1 {
                &xj - &(&txj + &txj)
            } else {
                &MPoly::var(target, ctx, l) - &txj
            }
        })
        .collect();
    RingHom::new(target, images)
}

/// Point-level `Φ_{ij}` on the hyperplane `x_i = 0` of `A^n`.
pub fn phi_point<K: Field>(i: usize, j: usize, point: &[K]) -> Result<Vec<K>> {
    let n = point.len();
    check_index(i, n, "hyperplane index")?;
    check_index(j, n, "involution index")?;
    if i == j {
        return Err(Error::Invalid("involution needs j != i".into()));
    }
    let xj = point[j - 1].clone();
    Ok(point
        .iter()
        .enumerate()
        .map(|(l, x)| {
            if l == i - 1 {
                x.clone()
            } else if l == j - 1 {
                x.neg()
            } else {
                x.sub(&xj)
            }
        })
        .collect())
}

/// Choice `(j_1, ..., j_l)` of involution indices for degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexTuple {
    pub n: usize,
    pub entries: Vec<usize>,
}

impl IndexTuple {
    /// Entries in `1..=bound`; `bound` is `n`, or `n + 1` for the intermediate
    /// schemes.
    pub fn with_bound(n: usize, entries: Vec<usize>, bound: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("degree must be at least 2".into()));
        }
        if entries.len() > n - 1 {
            return Err(Error::Invalid(format!("tuple length {} exceeds n - 1 = {}", entries.len(), n - 1)));
        }
        for &j in &entries {
            check_index(j, bound, "tuple entry")?;
        }
        Ok(IndexTuple { n, entries })
    }

    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        Self::with_bound(n, entries, n)
    }

    /// All tuples of length `len` with entries in `1..=n`, lexicographically.
    pub fn all(n: usize, len: usize) -> Vec<IndexTuple> {
        let mut out = Vec::new();
        let mut cur = vec![1usize; len];
        loop {
            out.push(IndexTuple { n, entries: cur.clone() });
            let mut k = len;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < n {
                    cur[k] += 1;
                    for c in cur.iter_mut().skip(k + 1) {
                        *c = 1;
                    }
                    break;
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl std::fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v: Vec<String> = self.entries.iter().map(|j| j.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Entry `i` is `Φ#_{j_i}(HD^{i-1} x_1...x_{n-1})`, or its `T`-deformation
/// (then every entry lives in `n` variables with `T` last).
pub fn tuple_ideal_generators<K: Field>(tuple: &IndexTuple, deformed: bool, ctx: &K::Ctx) -> Result<Vec<MPoly<K>>> {
    let m = tuple.n - 1;
    if m > MAX_VARS {
        return Err(Error::TooManyVariables(m));
    }
    let x = product_of_vars::<K>(m, ctx);
    tuple
        .entries
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            // every index at or above n acts as the identity
            let j = j.min(tuple.n);
            let h = if deformed { phi_t_endo(j, m, ctx)? } else { phi_endo(j, m, ctx)? };
            h.apply(&hs_multi(&x, i as u32))
        })
        .collect()
}

/// `(e_0, e_1, ..., e_n)` evaluated at `point`.
pub fn elementary_symmetric_values<K: Field>(point: &[K], ctx: &K::Ctx) -> Vec<K> {
    let mut e = vec![K::zero(ctx); point.len() + 1];
    e[0] = K::one(ctx);
    for (k, a) in point.iter().enumerate() {
        for d in (1..=k + 1).rev() {
            e[d] = e[d].add(&e[d - 1].mul(a));
        }
    }
    e
}

/// `a ↦ (-e_1(a), e_2(a), ..., (-1)^n e_n(a))`.
pub fn vieta_map<K: Field>(point: &[K], ctx: &K::Ctx) -> Vec<K> {
    let e = elementary_symmetric_values(point, ctx);
    e.into_iter()
        .enumerate()
        .skip(1)
        .map(|(i, v)| if i % 2 == 1 { v.neg() } else { v })
        .collect()
}

/// Whether `point` lies on the `i`-th discriminant hypersurface `X^i_n`:
/// some shift projection lands in `V(HD^{i-1} x_1...x_{n-1})`.
pub fn in_discriminant_locus<K: Field>(point: &[K], i: usize, ctx: &K::Ctx) -> bool {
    let n = point.len();
    (0..n).any(|j| {
        let rest: Vec<K> = (0..n).filter(|&l| l != j).map(|l| point[l].sub(&point[j])).collect();
        elementary_symmetric_values(&rest, ctx)[n - i].is_zero()
    })
}

/// Membership in `X^1_n ∩ ... ∩ X^{n-1}_n`.
pub fn in_ca_locus<K: Field>(point: &[K], ctx: &K::Ctx) -> bool {
    (1..point.len()).all(|i| in_discriminant_locus(point, i, ctx))
}
