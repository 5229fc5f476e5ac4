use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{format_ratio, is_prime, Field};
use crate::geometry::{tuple_ideal_generators, IndexTuple};
use crate::groebner::{is_regular_sequence_homogeneous, saturate, GroebnerBasis, MonomialOrder};
use crate::poly::{MPoly, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TupleOutcome {
    Regular,
    NonRegular,
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleResult {
    pub tuple: Vec<usize>,
    pub outcome: TupleOutcome,
    pub dimension: Option<i64>,
    pub expected_dimension: i64,
    pub spairs: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVerdict {
    AllRegular,
    NotAllRegular,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    /// `regularity` or `mainprop`.
    pub kind: String,
    pub n: usize,
    pub length: usize,
    pub field: String,
    pub regular: usize,
    pub total: usize,
    pub verdict: SweepVerdict,
    pub tuples: Vec<TupleResult>,
}

impl SweepReport {
    fn assemble(kind: &str, n: usize, length: usize, field: String, tuples: Vec<TupleResult>) -> Self {
        let regular = tuples.iter().filter(|t| t.outcome == TupleOutcome::Regular).count();
        let verdict = if tuples.iter().any(|t| t.outcome == TupleOutcome::NonRegular) {
            SweepVerdict::NotAllRegular
        } else if tuples.iter().any(|t| t.outcome == TupleOutcome::Budget) {
            SweepVerdict::Inconclusive
        } else {
            SweepVerdict::AllRegular
        };
        SweepReport { kind: kind.into(), n, length, field, regular, total: tuples.len(), verdict, tuples }
    }
}

fn check_degree(n: usize, extra_vars: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Invalid("degree must be at least 2".into()));
    }
    if n - 1 + extra_vars > MAX_VARS {
        return Err(Error::TooManyVariables(n - 1 + extra_vars));
    }
    Ok(())
}

/// Regularity of `Φ#_{j_1}(HD^0 x), ..., Φ#_{j_l}(HD^{l-1} x)` in
/// `K[x_1..x_{n-1}]` for every tuple of length `l`.
pub fn tuple_regularity_sweep<K: Field>(n: usize, l: usize, ctx: &K::Ctx, budget: u64, exec: Exec) -> Result<SweepReport> {
    check_degree(n, 0)?;
    if l == 0 || l > n - 1 {
        return Err(Error::Invalid(format!("sequence length {l} out of range 1..={}", n - 1)));
    }
    let tuples = IndexTuple::all(n, l);
    let results = exec.map(&tuples, |t| -> Result<TupleResult> {
        let gens = tuple_ideal_generators::<K>(t, false, ctx)?;
        let expected = (n - 1 - l) as i64;
        Ok(match is_regular_sequence_homogeneous(&gens, n - 1, budget) {
            Ok(c) => TupleResult {
                tuple: t.entries.clone(),
                outcome: if c.regular { TupleOutcome::Regular } else { TupleOutcome::NonRegular },
                dimension: Some(c.dimension),
                expected_dimension: expected,
                spairs: Some(c.spairs),
            },
            Err(Error::Budget { .. }) => budget_result(t, expected),
            Err(e) => return Err(e),
        })
    });
    let tuples = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::assemble("regularity", n, l, K::descriptor(ctx).to_string(), tuples))
}

fn budget_result(t: &IndexTuple, expected: i64) -> TupleResult {
    TupleResult { tuple: t.entries.clone(), outcome: TupleOutcome::Budget, dimension: None, expected_dimension: expected, spairs: None }
}

/// For every tuple of length `n - 1`: saturate the deformed generators at
/// `1 - 2T` and check that the result has dimension exactly 1 in
/// `K[x_1..x_{n-1}, T]`.
pub fn mainprop_verify<K: Field>(n: usize, ctx: &K::Ctx, budget: u64, exec: Exec) -> Result<SweepReport> {
    // the saturation adds one more variable on top of T
    check_degree(n, 2)?;
    let tuples = IndexTuple::all(n, n - 1);
    let t_var = n - 1;
    let one_minus_2t = &MPoly::one(n, ctx) - &MPoly::var(n, ctx, t_var).scale(&K::from_i64(ctx, 2));
    let results = exec.map(&tuples, |t| -> Result<TupleResult> {
        let gens = tuple_ideal_generators::<K>(t, true, ctx)?;
        let run = || -> Result<(i64, u64)> {
            let sat = saturate(&gens, &one_minus_2t, budget)?;
            let gb = GroebnerBasis::compute(n, ctx, &sat, MonomialOrder::Grevlex, budget)?;
            Ok((gb.dimension(), gb.spairs_reduced()))
        };
        Ok(match run() {
            Ok((dimension, spairs)) => TupleResult {
                tuple: t.entries.clone(),
                outcome: if dimension == 1 { TupleOutcome::Regular } else { TupleOutcome::NonRegular },
                dimension: Some(dimension),
                expected_dimension: 1,
                spairs: Some(spairs),
            },
            Err(Error::Budget { .. }) => budget_result(t, 1),
            Err(e) => return Err(e),
        })
    });
    let tuples = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::assemble("mainprop", n, n - 1, K::descriptor(ctx).to_string(), tuples))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub alpha: String,
    /// Dimension of the fiber in `A^{n-1}`; 0 means the origin alone.
    pub dimension: i64,
    pub singular: bool,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub n: usize,
    pub tuple: Vec<usize>,
    pub field: String,
    pub entries: Vec<FiberEntry>,
}

/// Specialize `T := α` in the deformed generators of `tuple` and compute the
/// dimension of each fiber.
pub fn fiber_scan<K: Field>(tuple: &IndexTuple, alphas: &[K], ctx: &K::Ctx, budget: u64, exec: Exec) -> Result<FiberReport> {
    let n = tuple.n;
    check_degree(n, 1)?;
    let deformed = tuple_ideal_generators::<K>(tuple, true, ctx)?;
    let names = crate::poly::var_names("x", n - 1);
    let entries = exec.map(alphas, |alpha| -> Result<FiberEntry> {
        let gens: Vec<MPoly<K>> = deformed
            .iter()
            .map(|g| g.substitute_const(n - 1, alpha).remove_unused_var(n - 1).expect("T eliminated"))
            .collect();
        let nonzero: Vec<MPoly<K>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let gb = GroebnerBasis::compute(n - 1, ctx, &nonzero, MonomialOrder::Grevlex, budget)?;
        let dimension = gb.dimension();
        Ok(FiberEntry {
            alpha: { let (a, b) = alpha.to_ratio(); format_ratio(&a, &b) },
            dimension,
            singular: dimension >= 1,
            generators: gens.iter().map(|g| g.to_string_with(&names)).collect(),
        })
    });
    Ok(FiberReport {
        n,
        tuple: tuple.entries.clone(),
        field: K::descriptor(ctx).to_string(),
        entries: entries.into_iter().collect::<Result<Vec<_>>>()?,
    })
}

fn is_prime_power(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let p = (2..=m).find(|d| m.is_multiple_of(*d)).expect("m >= 2");
    let mut r = m;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1 && is_prime(p as u32)
}

/// Largest `m <= n` of the form `p^k` or `2 p^k`.
pub fn q_of_n(n: u64) -> Option<u64> {
    (2..=n).rev().find(|&m| is_prime_power(m) || (m % 2 == 0 && is_prime_power(m / 2)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JcLevel {
    pub length: usize,
    pub regular: usize,
    pub total: usize,
    pub verdict: SweepVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JcReport {
    pub n: usize,
    pub field: String,
    pub lmax: usize,
    pub q: Option<u64>,
    /// Largest `l <= lmax` at which every tuple was verified regular.
    pub verified: usize,
    /// `lmax`, `non_regular` or `budget`.
    pub stopped_by: String,
    pub expected_at_least: Option<u64>,
    pub meets_expectation: bool,
    pub levels: Vec<JcLevel>,
}

/// Sweep lengths `1, 2, ...` until a sweep fails or `lmax` is reached.
pub fn jc_lower_bound<K: Field>(n: usize, lmax: usize, ctx: &K::Ctx, budget: u64, exec: Exec) -> Result<JcReport> {
    check_degree(n, 0)?;
    let lmax = lmax.min(n - 1);
    let mut levels = Vec::new();
    let mut verified = 0;
    let mut stopped_by = "lmax".to_string();
    for l in 1..=lmax {
        let s = tuple_regularity_sweep::<K>(n, l, ctx, budget, exec)?;
        levels.push(JcLevel { length: l, regular: s.regular, total: s.total, verdict: s.verdict });
        match s.verdict {
            SweepVerdict::AllRegular => verified = l,
            SweepVerdict::NotAllRegular => {
                stopped_by = "non_regular".into();
                break;
            }
            SweepVerdict::Inconclusive => {
                stopped_by = "budget".into();
                break;
            }
        }
    }
    let q = q_of_n(n as u64);
    let expected_at_least = q.map(|q| (q - 1).min(lmax as u64));
    Ok(JcReport {
        n,
        field: K::descriptor(ctx).to_string(),
        lmax,
        q,
        verified,
        stopped_by,
        expected_at_least,
        meets_expectation: expected_at_least.is_none_or(|e| verified as u64 >= e),
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{parse_rational, Fp, PrimeField, Rational};

    const B: u64 = 100_000;

    #[test]
    fn q_examples() {
        assert_eq!(q_of_n(7), Some(7));
        assert_eq!(q_of_n(12), Some(11));
        assert_eq!(q_of_n(6), Some(6));
        assert_eq!(q_of_n(15), Some(14));
        assert_eq!(q_of_n(2), Some(2));
        assert_eq!(q_of_n(1), None);
    }

    #[test]
    fn cubic_sweeps() {
        let s = tuple_regularity_sweep::<Rational>(3, 2, &(), B, Exec::Sequential).unwrap();
        assert_eq!((s.regular, s.total, s.verdict), (9, 9, SweepVerdict::AllRegular));
        let s = tuple_regularity_sweep::<Rational>(3, 1, &(), B, Exec::Sequential).unwrap();
        assert_eq!(s.verdict, SweepVerdict::AllRegular);
        assert!(tuple_regularity_sweep::<Rational>(3, 3, &(), B, Exec::Sequential).is_err());
    }

    #[test]
    fn characteristic_two_cubic_is_not_regular() {
        let f2 = PrimeField::new(2).unwrap();
        let s = tuple_regularity_sweep::<Fp>(3, 2, &f2, B, Exec::Sequential).unwrap();
        assert_eq!(s.verdict, SweepVerdict::NotAllRegular);
        let f3 = PrimeField::new(3).unwrap();
        let s = tuple_regularity_sweep::<Fp>(3, 2, &f3, B, Exec::Sequential).unwrap();
        assert_eq!(s.verdict, SweepVerdict::AllRegular);
    }

    #[test]
    fn mainprop_small() {
        let s = mainprop_verify::<Rational>(3, &(), B, Exec::Sequential).unwrap();
        assert_eq!(s.verdict, SweepVerdict::AllRegular);
        assert!(s.tuples.iter().all(|t| t.dimension == Some(1)));
        let s = mainprop_verify::<Rational>(2, &(), B, Exec::Sequential).unwrap();
        assert_eq!(s.total, 2);
        assert_eq!(s.verdict, SweepVerdict::AllRegular);
    }

    fn alphas(s: &[&str]) -> Vec<Rational> {
        s.iter().map(|a| parse_rational(a).unwrap()).collect()
    }

    #[test]
    fn fiber_examples() {
        for t in IndexTuple::all(3, 2) {
            let r = fiber_scan(&t, &alphas(&["0", "2/3"]), &(), B, Exec::Sequential).unwrap();
            assert!(r.entries.iter().all(|e| e.dimension == 0), "{t}");
            let half = fiber_scan(&t, &alphas(&["1/2"]), &(), B, Exec::Sequential).unwrap();
            if t.entries[0] != 3 {
                assert!(half.entries[0].singular, "{t}");
            }
        }
    }

    #[test]
    fn specialization_matches_regularity() {
        for n in 3..=4 {
            for t in IndexTuple::all(n, n - 1) {
                let r = fiber_scan(&t, &alphas(&["0", "1"]), &(), B, Exec::Sequential).unwrap();
                let plain = tuple_ideal_generators::<Rational>(&t, false, &()).unwrap();
                let regular = is_regular_sequence_homogeneous(&plain, n - 1, B).unwrap().regular;
                assert_eq!(r.entries[1].dimension == 0, regular);
                assert_eq!(r.entries[0].dimension, 0);
            }
        }
    }

    #[test]
    fn jc_small() {
        let r = jc_lower_bound::<Rational>(3, 2, &(), B, Exec::Sequential).unwrap();
        assert_eq!(r.verified, 2);
        assert!(r.meets_expectation);
    }
}
