//! D-ideals of principal monomial schemes, the coordinate-subspace
//! description of their points, and complete linear reduction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Rational};
use crate::groebner::radical_membership;
use crate::hasse::{d_power, d_total, hs_multi};
use crate::poly::{var_names, MPoly, Monomial, RingHom, MAX_VARS};

/// `x1, ..., xk` paired with the ordered partition `r` of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialShape {
    r: Vec<u32>,
}

impl MonomialShape {
    pub fn new(r: Vec<u32>) -> Result<Self> {
        if r.is_empty() || r.contains(&0) {
            return Err(Error::Invalid("shape entries must be positive".into()));
        }
        if r.len() > MAX_VARS {
            return Err(Error::TooManyVariables(r.len()));
        }
        if r.iter().sum::<u32>() < 2 {
            return Err(Error::Invalid("shape total degree must be at least 2".into()));
        }
        Ok(MonomialShape { r })
    }

    pub fn parts(&self) -> &[u32] {
        &self.r
    }

    pub fn k(&self) -> usize {
        self.r.len()
    }

    pub fn n(&self) -> u32 {
        self.r.iter().sum()
    }

    pub fn monomial<K: Field>(&self, ctx: &K::Ctx) -> MPoly<K> {
        let exps: Vec<u16> = self.r.iter().map(|&x| x as u16).collect();
        MPoly::from_terms(self.k(), ctx, vec![(Monomial::from_exponents(&exps), K::one(ctx))])
    }

    /// Every ordered partition with at most `kmax` parts of every `2 <= n <= nmax`.
    pub fn all(kmax: usize, nmax: u32) -> Vec<MonomialShape> {
        let mut out = Vec::new();
        for n in 2..=nmax {
            for k in 1..=kmax.min(n as usize) {
                let mut cur = Vec::new();
                compositions(n, k, &mut cur, &mut out);
            }
        }
        out
    }
}

fn compositions(left: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<MonomialShape>) {
    if parts == 1 {
        cur.push(left);
        out.push(MonomialShape { r: cur.clone() });
        cur.pop();
        return;
    }
    for first in 1..=left - (parts as u32 - 1) {
        cur.push(first);
        compositions(left - first, parts - 1, cur, out);
        cur.pop();
    }
}

impl fmt::Display for MonomialShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.r.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The generators followed by their nonzero `D_k` images.
pub fn d_ideal_generators<K: Field>(gens: &[MPoly<K>]) -> Vec<MPoly<K>> {
    let mut out = gens.to_vec();
    out.extend(gens.iter().map(d_total).filter(|g| !g.is_zero()));
    out
}

/// `(x^r, D x^r, ..., D^j x^r)`.
pub fn monomial_d_ideal<K: Field>(shape: &MonomialShape, j: u32, ctx: &K::Ctx) -> Result<Vec<MPoly<K>>> {
    level_in_range(shape, j)?;
    let m = shape.monomial::<K>(ctx);
    Ok((0..=j).map(|i| d_power(&m, i)).collect())
}

/// `(x^r, HD^1 x^r, ..., HD^j x^r)`, the naive Hasse–Schmidt variant.
pub fn monomial_hd_ideal<K: Field>(shape: &MonomialShape, j: u32, ctx: &K::Ctx) -> Result<Vec<MPoly<K>>> {
    level_in_range(shape, j)?;
    let m = shape.monomial::<K>(ctx);
    Ok((0..=j).map(|i| hs_multi(&m, i)).collect())
}

fn level_in_range(shape: &MonomialShape, j: u32) -> Result<()> {
    if j >= shape.n() {
        return Err(Error::Invalid(format!("level {j} out of range 0..={}", shape.n() - 1)));
    }
    Ok(())
}

/// Coordinate subspace `V(x_{i_1}, ..., x_{i_l})`, indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    pub indices: Vec<usize>,
    pub multiplicity: u32,
}

/// Minimal index sets whose multiplicities sum to at least `j`; their
/// coordinate subspaces are the irreducible components of `V(D^{j-1} I(r))`.
pub fn component_description(shape: &MonomialShape, j: u32) -> Result<Vec<Component>> {
    if j == 0 || j > shape.n() {
        return Err(Error::Invalid(format!("level {j} out of range 1..={}", shape.n())));
    }
    let k = shape.k();
    let mut qualifying: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << k) {
        let size = mask.count_ones();
        let sum: u32 = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| shape.r[i]).sum();
        if size <= j && sum >= j {
            qualifying.push(mask);
        }
    }
    let minimal: Vec<u32> = qualifying
        .iter()
        .copied()
        .filter(|&m| !qualifying.iter().any(|&o| o != m && o & m == o))
        .collect();
    let mut out: Vec<Component> = minimal
        .into_iter()
        .map(|mask| {
            let indices: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
            let multiplicity = indices.iter().map(|&i| shape.r[i - 1]).sum();
            Component { indices, multiplicity }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// One membership fact used by [`verify_prop2`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// `generator_in_component` or `product_in_radical`.
    pub kind: String,
    pub subject: String,
    pub target: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop2Report {
    pub shape: Vec<u32>,
    pub level: u32,
    pub generators: Vec<String>,
    pub components: Vec<Component>,
    pub verified: bool,
    pub certificates: Vec<Certificate>,
}

/// Check `V(x^r, ..., D^{j-1} x^r) = ∪ V(x_S)` over the rationals.
///
/// `⊇`: every generator lies in every `(x_i : i ∈ S)` (each term contains
/// one of those variables). `⊆`: every product `Π_S x_{c(S)}` with one
/// variable chosen per component lies in the radical of the D-ideal.
pub fn verify_prop2(shape: &MonomialShape, j: u32, budget: u64, exec: Exec) -> Result<Prop2Report> {
    if shape.k() > 4 || shape.n() > 6 {
        return Err(Error::Invalid(format!("shape {shape} exceeds the k <= 4, n <= 6 guard")));
    }
    let components = component_description(shape, j)?;
    let gens = monomial_d_ideal::<Rational>(shape, j - 1, &())?;
    let k = shape.k();
    let names = var_names("x", k);
    let mut certificates = Vec::new();
    for g in &gens {
        for c in &components {
            let holds = g.terms().iter().all(|(m, _)| c.indices.iter().any(|&i| m.exp(i - 1) > 0));
            certificates.push(Certificate {
                kind: "generator_in_component".into(),
                subject: g.to_string_with(&names),
                target: ideal_string(&c.indices),
                holds,
            });
        }
    }
    let products = choice_products(&components);
    let checks = exec.map(&products, |choice| {
        let mut m = Monomial::one();
        for &i in choice {
            m.set_exp(i - 1, m.exp(i - 1) + 1);
        }
        let p = MPoly::<Rational>::from_terms(k, &(), vec![(m, Rational::from_integer(1.into()))]);
        radical_membership(&p, &gens, budget).map(|holds| (p, holds))
    });
    for r in checks {
        let (p, holds) = r?;
        certificates.push(Certificate {
            kind: "product_in_radical".into(),
            subject: p.to_string_with(&names),
            target: "radical of the D-ideal".into(),
            holds,
        });
    }
    let verified = certificates.iter().all(|c| c.holds);
    Ok(Prop2Report {
        shape: shape.parts().to_vec(),
        level: j,
        generators: gens.iter().map(|g| g.to_string_with(&names)).collect(),
        components,
        verified,
        certificates,
    })
}

fn ideal_string(indices: &[usize]) -> String {
    let v: Vec<String> = indices.iter().map(|i| format!("x{i}")).collect();
    format!("({})", v.join(", "))
}

/// All ways of picking one index from each component, deduplicated as
/// sorted multisets.
fn choice_products(components: &[Component]) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for c in components {
        let mut next = Vec::new();
        for prefix in &acc {
            for &i in &c.indices {
                let mut v = prefix.clone();
                v.push(i);
                v.sort_unstable();
                next.push(v);
            }
        }
        next.sort();
        next.dedup();
        acc = next;
    }
    acc
}

/// `(D^m x^r vanishes on x_j = 0, r_j >= m + 1)` with `j` 1-based.
pub fn lemma1_check(shape: &MonomialShape, j: usize, m: u32) -> Result<(bool, bool)> {
    if j == 0 || j > shape.k() {
        return Err(Error::Invalid(format!("component index {j} out of range 1..={}", shape.k())));
    }
    level_in_range(shape, m)?;
    let d = d_power(&shape.monomial::<Rational>(&()), m);
    let vanishes = d.substitute_const(j - 1, &Rational::from_integer(0.into())).is_zero();
    Ok((vanishes, shape.r[j - 1] > m))
}

/// One step of linear reduction: `x_var := substitution`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination<K: Field> {
    pub var: usize,
    pub substitution: MPoly<K>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearReduction<K: Field> {
    /// Terminal generators (no generator is a non-constant linear form)
    /// together with the variables that survive.
    Reduced {
        gens: Vec<MPoly<K>>,
        remaining_vars: Vec<usize>,
        log: Vec<Elimination<K>>,
    },
    /// A generator reduced to a nonzero constant.
    UnitIdeal { log: Vec<Elimination<K>> },
}

impl<K: Field> LinearReduction<K> {
    pub fn log(&self) -> &[Elimination<K>] {
        match self {
            LinearReduction::Reduced { log, .. } | LinearReduction::UnitIdeal { log } => log,
        }
    }
}

/// Iterated linear reduction. Each step consumes the first generator that
/// is a non-constant linear form, solves it for its lowest-index variable
/// and substitutes into the rest. Variables keep their original indices;
/// eliminated ones simply no longer occur.
pub fn complete_linear_reduction<K: Field>(gens: &[MPoly<K>]) -> Result<LinearReduction<K>> {
    let first = gens.first().ok_or_else(|| Error::Invalid("empty generator list".into()))?;
    let (n, ctx) = (first.nvars(), first.ctx().clone());
    let mut cur: Vec<MPoly<K>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut log = Vec::new();
    let mut eliminated = 0u32;
    loop {
        if cur.iter().any(|g| g.is_constant()) {
            return Ok(LinearReduction::UnitIdeal { log });
        }
        let Some(pos) = cur.iter().position(|g| g.total_degree() == Some(1)) else {
            break;
        };
        let f = cur.remove(pos);
        let var = (0..n).find(|&v| f.degree_in(v) > 0).expect("non-constant");
        let a = f.coeff(&Monomial::var(var));
        let rest = &f - &MPoly::var(n, &ctx, var).scale(&a);
        let sub = rest.scale(&a.inv().expect("nonzero").neg());
        let mut images: Vec<MPoly<K>> = (0..n).map(|v| MPoly::var(n, &ctx, v)).collect();
        images[var] = sub.clone();
        let h = RingHom::new(n, images)?;
        cur = cur.iter().map(|g| h.apply(g)).collect::<Result<Vec<_>>>()?;
        cur.retain(|g| !g.is_zero());
        // earlier substitutions must not mention the new pivot
        for e in log.iter_mut() {
            let e: &mut Elimination<K> = e;
            e.substitution = h.apply(&e.substitution)?;
        }
        log.push(Elimination { var, substitution: sub });
        eliminated |= 1 << var;
    }
    let remaining_vars = (0..n).filter(|v| eliminated & (1 << v) == 0).collect();
    Ok(LinearReduction::Reduced { gens: cur, remaining_vars, log })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str, n: usize) -> MPoly<Rational> {
        parse_poly(s, n, &()).unwrap()
    }

    fn shape(r: &[u32]) -> MonomialShape {
        MonomialShape::new(r.to_vec()).unwrap()
    }

    #[test]
    fn d_ideal_examples() {
        assert_eq!(d_ideal_generators(&[q("x1*x2", 2)]), vec![q("x1*x2", 2), q("x1 + x2", 2)]);
        assert_eq!(d_ideal_generators(&[q("x1^2", 2)]), vec![q("x1^2", 2), q("2*x1", 2)]);
        assert_eq!(d_ideal_generators(&[q("x1 - x2", 2)]), vec![q("x1 - x2", 2)]);
    }

    #[test]
    fn monomial_d_ideal_examples() {
        assert_eq!(monomial_d_ideal::<Rational>(&shape(&[2, 1]), 1, &()).unwrap(), vec![q("x1^2*x2", 2), q("x1^2 + 2*x1*x2", 2)]);
        assert_eq!(monomial_d_ideal::<Rational>(&shape(&[2, 1]), 0, &()).unwrap(), vec![q("x1^2*x2", 2)]);
        let g = monomial_d_ideal::<Rational>(&shape(&[1, 1, 1]), 2, &()).unwrap();
        assert_eq!(g, vec![q("x1*x2*x3", 3), q("x1*x2 + x1*x3 + x2*x3", 3), q("2*x1 + 2*x2 + 2*x3", 3)]);
        assert!(monomial_d_ideal::<Rational>(&shape(&[2, 1]), 3, &()).is_err());
        let h = monomial_hd_ideal::<Rational>(&shape(&[1, 1, 1]), 2, &()).unwrap();
        assert_eq!(h[2], q("x1 + x2 + x3", 3));
    }

    #[test]
    fn derivatives_of_monomials_are_homogeneous() {
        for s in MonomialShape::all(4, 6) {
            for j in 0..s.n() {
                let d = d_power(&s.monomial::<Rational>(&()), j);
                assert!(!d.is_zero());
                assert!(d.is_homogeneous());
                assert_eq!(d.total_degree(), Some(s.n() - j));
            }
        }
    }

    #[test]
    fn shapes_enumerate_compositions() {
        // n has n - 1 compositions into two parts
        assert_eq!(MonomialShape::all(2, 4).len(), 2 + 3 + 4);
        assert!(MonomialShape::new(vec![1]).is_err());
        assert!(MonomialShape::new(vec![2, 0]).is_err());
    }

    fn comps(v: &[&[usize]]) -> Vec<Vec<usize>> {
        v.iter().map(|c| c.to_vec()).collect()
    }

    fn indices(c: &[Component]) -> Vec<Vec<usize>> {
        c.iter().map(|c| c.indices.clone()).collect()
    }

    #[test]
    fn component_examples() {
        assert_eq!(indices(&component_description(&shape(&[2, 1]), 2).unwrap()), comps(&[&[1]]));
        assert_eq!(indices(&component_description(&shape(&[1, 1]), 1).unwrap()), comps(&[&[1], &[2]]));
        assert_eq!(indices(&component_description(&shape(&[1, 1]), 2).unwrap()), comps(&[&[1, 2]]));
        let c = component_description(&shape(&[2, 1, 1]), 3).unwrap();
        assert_eq!(indices(&c), comps(&[&[1, 2], &[1, 3]]));
        assert!(c.iter().all(|c| c.multiplicity >= 2));
    }

    #[test]
    fn prop2_examples() {
        let r = verify_prop2(&shape(&[2, 1]), 2, 10_000, Exec::Sequential).unwrap();
        assert!(r.verified);
        let r = verify_prop2(&shape(&[1, 1]), 2, 10_000, Exec::Sequential).unwrap();
        assert!(r.verified);
        for n in 2..=6 {
            for j in 1..n {
                let r = verify_prop2(&shape(&[n]), j, 10_000, Exec::Sequential).unwrap();
                assert!(r.verified);
                assert_eq!(indices(&r.components), comps(&[&[1]]));
            }
        }
        assert!(verify_prop2(&shape(&[1, 1, 1, 1, 1]), 1, 10_000, Exec::Sequential).is_err());
    }

    #[test]
    fn wrong_components_are_rejected() {
        // V(x1^2 x2, D(x1^2 x2)) is V(x1), not V(x1) ∪ V(x2)
        let gens = monomial_d_ideal::<Rational>(&shape(&[2, 1]), 1, &()).unwrap();
        assert!(!radical_membership(&q("x1", 2), &[gens[0].clone()], 10_000).unwrap());
        assert!(radical_membership(&q("x1", 2), &gens, 10_000).unwrap());
    }

    #[test]
    fn lemma1_examples() {
        assert_eq!(lemma1_check(&shape(&[2, 1]), 1, 1).unwrap(), (true, true));
        assert_eq!(lemma1_check(&shape(&[2, 1]), 2, 1).unwrap(), (false, false));
        for s in MonomialShape::all(3, 5) {
            for j in 1..=s.k() {
                assert_eq!(lemma1_check(&s, j, 0).unwrap(), (true, true));
            }
        }
    }

    #[test]
    fn linear_reduction_examples() {
        match complete_linear_reduction(&[q("x1 - x2", 2), q("x1*x2", 2)]).unwrap() {
            LinearReduction::Reduced { gens, remaining_vars, log } => {
                assert_eq!(gens, vec![q("x2^2", 2)]);
                assert_eq!(remaining_vars, vec![1]);
                assert_eq!(log, vec![Elimination { var: 0, substitution: q("x2", 2) }]);
            }
            other => panic!("unexpected {other:?}"),
        }
        match complete_linear_reduction(&[q("x1 + 1", 1)]).unwrap() {
            LinearReduction::Reduced { gens, remaining_vars, log } => {
                assert!(gens.is_empty());
                assert!(remaining_vars.is_empty());
                assert_eq!(log[0].substitution, q("-1", 1));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            complete_linear_reduction(&[q("x1 - x2", 2), q("x2 - x1 + 1", 2)]).unwrap(),
            LinearReduction::UnitIdeal { .. }
        ));
    }

    #[test]
    fn linear_reduction_is_order_independent() {
        let gens = vec![
            q("x1 - x2 + x3", 4),
            q("x2 + x4", 4),
            q("x1*x3 - x4^2", 4),
            q("x3^2 + x1*x2*x4", 4),
            q("2*x1 + x3 - x4", 4),
        ];
        let base = complete_linear_reduction(&gens).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut g = gens.clone();
            g.shuffle(&mut rng);
            let r = complete_linear_reduction(&g).unwrap();
            match (&base, &r) {
                (
                    LinearReduction::Reduced { gens: a, remaining_vars: va, .. },
                    LinearReduction::Reduced { gens: b, remaining_vars: vb, .. },
                ) => {
                    assert_eq!(a.len(), b.len());
                    assert_eq!(va, vb);
                    let mut a = a.clone();
                    let mut b = b.clone();
                    a.sort_by_key(|p| p.to_string());
                    b.sort_by_key(|p| p.to_string());
                    assert_eq!(a, b);
                }
                _ => panic!("outcome changed with generator order"),
            }
        }
    }
}
