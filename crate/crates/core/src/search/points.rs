use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{ca_check, chunks, decode, enumeration_size, split_roots, CAReport};
use crate::discriminant::{xn_defining_system, DiscriminantTable};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{primes_up_to, Field, Fp, PrimeField};
use crate::geometry::{tuple_ideal_generators, IndexTuple};
use crate::groebner::is_regular_sequence_homogeneous;
use crate::poly::{MPoly, UPoly};

const CHUNK: u64 = 4096;

/// Nonzero `(y_1, ..., y_{n-1})` over `F_p` up to `λ·y = (λ y_1, λ^2 y_2, ...)`,
/// stored as the lexicographically least member of its orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedPoint {
    pub coords: Vec<u32>,
}

impl WeightedPoint {
    pub fn canonical(coords: &[u32], p: u32) -> Self {
        let p64 = p as u64;
        let mut best = coords.to_vec();
        for lambda in 2..p64 {
            let mut pw = 1u64;
            let img: Vec<u32> = coords
                .iter()
                .map(|&c| {
                    pw = pw * lambda % p64;
                    (c as u64 * pw % p64) as u32
                })
                .collect();
            if img < best {
                best = img;
            }
        }
        WeightedPoint { coords: best }
    }

    pub fn is_canonical(coords: &[u32], p: u32) -> bool {
        Self::canonical(coords, p).coords == coords
    }

    /// Size of the orbit of `coords`.
    pub fn orbit_size(coords: &[u32], p: u32) -> usize {
        let p64 = p as u64;
        let mut seen = BTreeSet::new();
        for lambda in 1..p64 {
            let mut pw = 1u64;
            let img: Vec<u32> = coords
                .iter()
                .map(|&c| {
                    pw = pw * lambda % p64;
                    (c as u64 * pw % p64) as u32
                })
                .collect();
            seen.insert(img);
        }
        seen.len()
    }
}

/// `X_n[j](F_p)`: weighted classes of nonzero `y` on which the reduced
/// discriminants `disc^1..disc^j` vanish. `j = 0` lists every class.
pub fn enumerate_xn_points(table: &DiscriminantTable, p: u32, j: usize, budget: u64, exec: Exec) -> Result<Vec<WeightedPoint>> {
    let ctx = PrimeField::new(p)?;
    let k = table.n - 1;
    let system: Vec<MPoly<Fp>> = xn_defining_system(table, j)?
        .iter()
        .map(|d| d.convert(&ctx).ok_or_else(|| Error::Unrepresentable(format!("{} over GF({p})", d))))
        .collect::<Result<_>>()?;
    let total = enumeration_size(p, k, budget, "weighted point enumeration")?;
    let found = exec.map(&chunks(total, CHUNK), |&(start, end)| {
        let mut out = Vec::new();
        for code in start.max(1)..end {
            let y = decode(code, p, k);
            if !WeightedPoint::is_canonical(&y, p) {
                continue;
            }
            let point: Vec<Fp> = y.iter().map(|&v| ctx.elem(v as u64)).collect();
            if system.iter().all(|d| d.eval(&point).is_zero()) {
                out.push(WeightedPoint { coords: y });
            }
        }
        out
    });
    let mut all: Vec<WeightedPoint> = found.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// `X^n + y_1 X^{n-1} + ... + y_{n-1} X`.
fn normalized_poly(y: &[u32], ctx: &PrimeField) -> UPoly<Fp> {
    let mut coeffs = vec![ctx.elem(0)];
    coeffs.extend(y.iter().rev().map(|&v| ctx.elem(v as u64)));
    coeffs.push(ctx.elem(1));
    UPoly::new(ctx, coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub p: u32,
    pub scanned: u64,
    /// Counterexamples with `f(0) = 0`, in scan order.
    pub counterexamples: Vec<CAReport>,
    /// Weighted classes of the counterexamples' coefficient vectors.
    pub classes: Vec<WeightedPoint>,
    pub xn_points: Vec<WeightedPoint>,
    pub classes_in_points: bool,
    pub points_in_classes: bool,
}

impl SearchReport {
    pub fn coherent(&self) -> bool {
        self.classes_in_points && self.points_in_classes
    }
}

/// Scan every `f = X^n + y_1 X^{n-1} + ... + y_{n-1} X` over `F_p`, keep the
/// counterexamples and cross-check their weighted classes against
/// `X_n(F_p)` enumerated from the discriminants.
pub fn search_counterexamples(table: &DiscriminantTable, p: u32, budget: u64, exec: Exec) -> Result<SearchReport> {
    let ctx = PrimeField::new(p)?;
    let n = table.n;
    let k = n - 1;
    let total = enumeration_size(p, k, budget, "counterexample scan")?;
    let found = exec.map(&chunks(total, CHUNK), |&(start, end)| -> Result<Vec<(Vec<u32>, CAReport)>> {
        let mut out = Vec::new();
        for code in start..end {
            let y = decode(code, p, k);
            let r = ca_check(&normalized_poly(&y, &ctx))?;
            if r.is_counterexample {
                out.push((y, r));
            }
        }
        Ok(out)
    });
    let mut counterexamples = Vec::new();
    let mut classes = BTreeSet::new();
    for chunk in found {
        for (y, r) in chunk? {
            classes.insert(WeightedPoint::canonical(&y, p));
            counterexamples.push(r);
        }
    }
    let xn_points = enumerate_xn_points(table, p, k, budget, exec)?;
    let classes: Vec<WeightedPoint> = classes.into_iter().collect();
    let point_set: BTreeSet<&WeightedPoint> = xn_points.iter().collect();
    let class_set: BTreeSet<&WeightedPoint> = classes.iter().collect();
    Ok(SearchReport {
        n,
        p,
        scanned: total,
        classes_in_points: class_set.is_subset(&point_set),
        points_in_classes: point_set.is_subset(&class_set),
        counterexamples,
        classes,
        xn_points,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadPrimeEntry {
    pub p: u32,
    pub counterexamples: Option<usize>,
    pub classes: Option<usize>,
    pub skipped: bool,
}

/// Counterexample counts for every prime `p <= pmax`; a prime whose scan
/// exceeds the budget is marked skipped.
pub fn bad_prime_scan(table: &DiscriminantTable, pmax: u32, budget: u64, exec: Exec) -> Result<Vec<BadPrimeEntry>> {
    let primes = if pmax < 2 { Vec::new() } else { primes_up_to(pmax) };
    let results = exec.map(&primes, |&p| (p, search_counterexamples(table, p, budget, Exec::Sequential)));
    results
        .into_iter()
        .map(|(p, r)| match r {
            Ok(r) => Ok(BadPrimeEntry { p, counterexamples: Some(r.counterexamples.len()), classes: Some(r.classes.len()), skipped: false }),
            Err(Error::Budget { .. }) => Ok(BadPrimeEntry { p, counterexamples: None, classes: None, skipped: true }),
            Err(e) => Err(e),
        })
        .collect()
}

/// Three views of degree-`n` counterexamples over `F_p` side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleReport {
    pub n: usize,
    pub p: u32,
    pub scan_counterexamples: usize,
    pub scan_classes: usize,
    /// Counterexamples that split over `F_p`.
    pub split_counterexamples: usize,
    pub xn_points: usize,
    pub scan_matches_points: bool,
    /// Tuples whose generators share a nonzero `F_p`-rational zero.
    pub tuples_with_rational_points: Vec<IndexTuple>,
    pub nonregular_tuples: Vec<IndexTuple>,
    pub coherent: bool,
}

/// Direct scan vs. weighted points vs. tuple regularity over `F_p`.
///
/// Coherence requires: the scan classes and `X_n(F_p)` agree; a split
/// counterexample exists iff some tuple variety has a nonzero rational
/// point; and any counterexample forces a non-regular tuple.
pub fn consistency_triangle(table: &DiscriminantTable, p: u32, budget: u64, exec: Exec) -> Result<TriangleReport> {
    let ctx = PrimeField::new(p)?;
    let n = table.n;
    let scan = search_counterexamples(table, p, budget, exec)?;
    let total = enumeration_size(p, n - 1, budget, "counterexample scan")?;
    let split_counterexamples = (0..total)
        .map(|code| decode(code, p, n - 1))
        .filter(|y| {
            let f = normalized_poly(y, &ctx);
            split_roots(&f).is_some() && ca_check(&f).map(|r| r.is_counterexample).unwrap_or(false)
        })
        .count();
    let tuples = IndexTuple::all(n, n - 1);
    let per_tuple = exec.map(&tuples, |t| -> Result<(bool, bool)> {
        let gens = tuple_ideal_generators::<Fp>(t, false, &ctx)?;
        let rational = (1..total).any(|code| {
            let y: Vec<Fp> = decode(code, p, n - 1).iter().map(|&v| ctx.elem(v as u64)).collect();
            gens.iter().all(|g| g.eval(&y).is_zero())
        });
        let regular = is_regular_sequence_homogeneous(&gens, n - 1, budget)?.regular;
        Ok((rational, regular))
    });
    let mut tuples_with_rational_points = Vec::new();
    let mut nonregular_tuples = Vec::new();
    for (t, r) in tuples.into_iter().zip(per_tuple) {
        let (rational, regular) = r?;
        if rational {
            tuples_with_rational_points.push(t.clone());
        }
        if !regular {
            nonregular_tuples.push(t);
        }
    }
    let scan_matches_points = scan.coherent();
    let coherent = scan_matches_points
        && ((split_counterexamples > 0) == !tuples_with_rational_points.is_empty())
        && (scan.counterexamples.is_empty() || !nonregular_tuples.is_empty())
        && (tuples_with_rational_points.is_empty() || !nonregular_tuples.is_empty());
    Ok(TriangleReport {
        n,
        p,
        scan_counterexamples: scan.counterexamples.len(),
        scan_classes: scan.classes.len(),
        split_counterexamples,
        xn_points: scan.xn_points.len(),
        scan_matches_points,
        tuples_with_rational_points,
        nonregular_tuples,
        coherent,
    })
}
