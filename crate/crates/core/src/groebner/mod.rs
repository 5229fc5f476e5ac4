//! Reduced Gröbner bases and the ideal-theoretic predicates built on them:
//! Krull dimension, elimination, saturation, radical membership and the
//! homogeneous regular-sequence test.

mod buchberger;
mod order;

use serde::{Deserialize, Serialize};

pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{MPoly, Monomial, MAX_VARS};

use buchberger::{groebner, reduce, sorted_terms, Terms};

/// Default cap on S-pair reductions per basis computation.
pub const DEFAULT_SPAIR_BUDGET: u64 = 200_000;

/// Reduced Gröbner basis of an ideal in `K[x_1..x_nvars]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<K: Field> {
    nvars: usize,
    ctx: K::Ctx,
    order: MonomialOrder,
    elems: Vec<Terms<K>>,
    basis: Vec<MPoly<K>>,
    spairs: u64,
}

impl<K: Field> GroebnerBasis<K> {
    /// Compute the reduced basis of the ideal generated by `gens`.
    pub fn compute(nvars: usize, ctx: &K::Ctx, gens: &[MPoly<K>], order: MonomialOrder, budget: u64) -> Result<Self> {
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::Arity { expected: nvars, got: g.nvars() });
            }
        }
        let mut input: Vec<&MPoly<K>> = gens.iter().filter(|g| !g.is_zero()).collect();
        // input order must not influence the result
        input.sort_by_cached_key(|g| g.to_string());
        input.dedup();
        let terms = input.into_iter().map(|g| sorted_terms(g, order)).collect();
        let (elems, spairs) = groebner(ctx, order, terms, budget)?;
        let basis = elems.iter().map(|t| MPoly::from_terms(nvars, ctx, t.clone())).collect();
        Ok(GroebnerBasis { nvars, ctx: ctx.clone(), order, elems, basis, spairs })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Basis elements, monic, by increasing leading monomial.
    pub fn basis(&self) -> &[MPoly<K>] {
        &self.basis
    }

    /// Number of S-pairs that were reduced.
    pub fn spairs_reduced(&self) -> u64 {
        self.spairs
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|t| t[0].0).collect()
    }

    /// Leading term of each element written as a polynomial.
    pub fn leading_terms(&self) -> Vec<MPoly<K>> {
        self.elems.iter().map(|t| MPoly::from_terms(self.nvars, &self.ctx, vec![t[0].clone()])).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0][0].0.is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elems.is_empty()
    }

    /// Remainder of `p` on division by the basis.
    pub fn normal_form(&self, p: &MPoly<K>) -> MPoly<K> {
        assert_eq!(p.nvars(), self.nvars, "ring mismatch");
        let basis: Vec<&[(Monomial, K)]> = self.elems.iter().map(|t| t.as_slice()).collect();
        let r = reduce(&self.ctx, self.order, sorted_terms(p, self.order), &basis, true, false);
        MPoly::from_terms(self.nvars, &self.ctx, r)
    }

    pub fn contains(&self, p: &MPoly<K>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let masks: Vec<u32> = self.elems.iter().map(|t| t[0].0.support_mask()).collect();
        let mut best = 0i64;
        for s in 0u32..(1u32 << self.nvars) {
            let size = s.count_ones() as i64;
            if size > best && masks.iter().all(|m| m & !s != 0) {
                best = size;
            }
        }
        best
    }

    /// Each element rendered in the polynomial grammar.
    pub fn to_strings(&self, names: &[String]) -> Vec<String> {
        self.basis.iter().map(|p| p.to_string_with(names)).collect()
    }
}

/// Ideal given by generators in a fixed ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation<K: Field> {
    pub nvars: usize,
    pub ctx: K::Ctx,
    pub gens: Vec<MPoly<K>>,
}

impl<K: Field> IdealPresentation<K> {
    pub fn new(nvars: usize, ctx: &K::Ctx, gens: Vec<MPoly<K>>) -> Self {
        IdealPresentation { nvars, ctx: ctx.clone(), gens }
    }

    pub fn groebner(&self, order: MonomialOrder, budget: u64) -> Result<GroebnerBasis<K>> {
        GroebnerBasis::compute(self.nvars, &self.ctx, &self.gens, order, budget)
    }
}

fn ring_of<K: Field>(gens: &[MPoly<K>]) -> Result<(usize, K::Ctx)> {
    let first = gens.first().ok_or_else(|| Error::Invalid("empty generator list".into()))?;
    Ok((first.nvars(), first.ctx().clone()))
}

/// Reduced Gröbner basis with the default budget.
pub fn buchberger<K: Field>(gens: &[MPoly<K>], order: MonomialOrder) -> Result<GroebnerBasis<K>> {
    buchberger_with_budget(gens, order, DEFAULT_SPAIR_BUDGET)
}

pub fn buchberger_with_budget<K: Field>(gens: &[MPoly<K>], order: MonomialOrder, budget: u64) -> Result<GroebnerBasis<K>> {
    let (n, ctx) = ring_of(gens)?;
    GroebnerBasis::compute(n, &ctx, gens, order, budget)
}

pub fn ideal_dimension<K: Field>(gb: &GroebnerBasis<K>) -> i64 {
    gb.dimension()
}

/// Generators of `I ∩ K[other variables]`, still written in the full ring.
pub fn eliminate<K: Field>(gens: &[MPoly<K>], vars: &[usize], budget: u64) -> Result<Vec<MPoly<K>>> {
    let (n, ctx) = ring_of(gens)?;
    let mask: u32 = vars.iter().fold(0, |m, &v| m | (1 << v));
    let gb = GroebnerBasis::compute(n, &ctx, gens, MonomialOrder::Block { elim_mask: mask }, budget)?;
    Ok(gb.basis().iter().filter(|p| p.support_mask() & mask == 0).cloned().collect())
}

fn with_extra_var<K: Field>(gens: &[MPoly<K>], extra: &MPoly<K>) -> Result<Vec<MPoly<K>>> {
    let n = extra.nvars();
    if n + 1 > MAX_VARS {
        return Err(Error::TooManyVariables(n + 1));
    }
    let ctx = extra.ctx();
    let z = MPoly::var(n + 1, ctx, n);
    let mut out: Vec<MPoly<K>> = gens.iter().map(|g| g.extend_vars(n + 1)).collect();
    // 1 - z*extra
    out.push(&MPoly::one(n + 1, ctx) - &(&z * &extra.extend_vars(n + 1)));
    Ok(out)
}

/// `(I : f^∞)` via `I + (1 - z f)` and elimination of `z`. The result is the
/// reduced grevlex basis of the saturation.
pub fn saturate<K: Field>(gens: &[MPoly<K>], f: &MPoly<K>, budget: u64) -> Result<Vec<MPoly<K>>> {
    if f.is_zero() {
        return Err(Error::Invalid("saturation at the zero polynomial".into()));
    }
    for g in gens {
        if g.nvars() != f.nvars() {
            return Err(Error::Arity { expected: f.nvars(), got: g.nvars() });
        }
    }
    let n = f.nvars();
    let ext = with_extra_var(gens, f)?;
    let elim = eliminate(&ext, &[n], budget)?;
    Ok(elim.iter().map(|p| p.remove_unused_var(n).expect("z eliminated")).collect())
}

/// Whether `p` lies in the radical of the ideal generated by `gens`.
pub fn radical_membership<K: Field>(p: &MPoly<K>, gens: &[MPoly<K>], budget: u64) -> Result<bool> {
    for g in gens {
        if g.nvars() != p.nvars() {
            return Err(Error::Arity { expected: p.nvars(), got: g.nvars() });
        }
    }
    let ext = with_extra_var(gens, p)?;
    let gb = GroebnerBasis::compute(p.nvars() + 1, p.ctx(), &ext, MonomialOrder::Grevlex, budget)?;
    Ok(gb.is_unit())
}

/// Outcome of the homogeneous regular-sequence test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityCertificate {
    pub regular: bool,
    pub dimension: i64,
    pub expected_dimension: i64,
    pub spairs: u64,
}

/// A sequence of `l` nonzero homogeneous polynomials in `nvars` variables is
/// regular iff the ideal they generate has dimension `nvars - l`.
pub fn is_regular_sequence_homogeneous<K: Field>(
    polys: &[MPoly<K>],
    nvars: usize,
    budget: u64,
) -> Result<RegularityCertificate> {
    if polys.len() > nvars {
        return Err(Error::Invalid(format!("{} polynomials in {} variables", polys.len(), nvars)));
    }
    for p in polys {
        if p.nvars() != nvars {
            return Err(Error::Arity { expected: nvars, got: p.nvars() });
        }
        if p.is_zero() || !p.is_homogeneous() {
            return Err(Error::Invalid(format!("not a nonzero homogeneous polynomial: {p}")));
        }
    }
    let expected = (nvars - polys.len()) as i64;
    if polys.is_empty() {
        return Ok(RegularityCertificate { regular: true, dimension: expected, expected_dimension: expected, spairs: 0 });
    }
    let gb = buchberger_with_budget(polys, MonomialOrder::Grevlex, budget)?;
    let dimension = gb.dimension();
    Ok(RegularityCertificate { regular: dimension == expected, dimension, expected_dimension: expected, spairs: gb.spairs_reduced() })
}
