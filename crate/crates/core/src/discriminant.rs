//! Sylvester resultants and the higher discriminants `disc^i_n = Res(f, f_i)`
//! of the generic monic polynomial.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{binomial, Field, Rational};
use crate::poly::{parse_poly_named, var_names, MPoly, UPoly, WeightedDegree};

/// Sylvester matrix of `f` and `g`, coefficients given from degree 0 upwards.
/// The first `deg g` rows hold shifts of `f`, the remaining `deg f` rows shifts of `g`.
pub fn sylvester_matrix<K: Field>(f: &[MPoly<K>], g: &[MPoly<K>]) -> Result<Vec<Vec<MPoly<K>>>> {
    let (Some(fl), Some(gl)) = (f.last(), g.last()) else {
        return Err(Error::Invalid("resultant of an empty coefficient list".into()));
    };
    if fl.is_zero() || gl.is_zero() {
        return Err(Error::Invalid("declared leading coefficient is zero".into()));
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    if m == 0 && n == 0 {
        return Err(Error::Invalid("resultant of two constants is undefined".into()));
    }
    let size = m + n;
    let zero = MPoly::zero(fl.nvars(), fl.ctx());
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Fraction-free determinant (Bareiss). Zero pivots are handled by row swaps.
pub fn bareiss_determinant<K: Field>(mut a: Vec<Vec<MPoly<K>>>) -> MPoly<K> {
    let n = a.len();
    assert!(n > 0 && a.iter().all(|r| r.len() == n), "square matrix");
    let (nv, ctx) = (a[0][0].nvars(), a[0][0].ctx().clone());
    let mut negate = false;
    let mut prev = MPoly::one(nv, &ctx);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return MPoly::zero(nv, &ctx),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MPoly::zero(nv, &ctx);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `Res(f, g)` for polynomials whose coefficients are ring elements, listed
/// from degree 0 upwards; the declared degree is the list length minus one.
pub fn sylvester_resultant<K: Field>(f: &[MPoly<K>], g: &[MPoly<K>]) -> Result<MPoly<K>> {
    let m = sylvester_matrix(f, g)?;
    Ok(bareiss_determinant(m))
}

/// Resultant of two univariate polynomials over a field.
pub fn resultant_upoly<K: Field>(f: &UPoly<K>, g: &UPoly<K>) -> Result<K> {
    let ctx = f.ctx();
    let lift = |p: &UPoly<K>| p.coeffs().iter().map(|c| MPoly::constant(0, ctx, c.clone())).collect::<Vec<_>>();
    let r = sylvester_resultant(&lift(f), &lift(g))?;
    Ok(r.constant_term())
}

/// Smallest and largest degree handled by [`disc_table`].
pub const DISC_MIN_N: usize = 2;
pub const DISC_MAX_N: usize = 8;

fn check_n(n: usize) -> Result<()> {
    if !(DISC_MIN_N..=DISC_MAX_N).contains(&n) {
        return Err(Error::Invalid(format!("discriminant tables are available for {DISC_MIN_N} <= n <= {DISC_MAX_N}, got n = {n}")));
    }
    Ok(())
}

/// Coefficients of `X^n + y_1 X^{n-1} + ... + y_n` from degree 0 upwards.
pub fn generic_monic(n: usize) -> Vec<MPoly<Rational>> {
    (0..=n)
        .map(|m| if m == n { MPoly::one(n, &()) } else { MPoly::var(n, &(), n - m - 1) })
        .collect()
}

/// Coefficients of the `i`-th Hasse–Schmidt derivative of the generic monic polynomial.
pub fn generic_hs(n: usize, i: usize) -> Vec<MPoly<Rational>> {
    let f = generic_monic(n);
    (i..=n)
        .map(|m| f[m].scale(&Rational::from_integer(binomial(m as u64, i as u64))))
        .collect()
}

/// `disc^i_n` together with its reduction at `y_n = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscEntry {
    pub n: usize,
    pub i: usize,
    /// Polynomial in `y_1..y_n`.
    pub poly: MPoly<Rational>,
    /// Polynomial in `y_1..y_{n-1}`.
    pub reduced: MPoly<Rational>,
}

impl DiscEntry {
    pub fn weights(&self) -> Vec<u32> {
        (1..self.n as u32).collect()
    }

    pub fn weighted_degree(&self) -> u64 {
        (self.n * (self.n - self.i)) as u64
    }
}

/// All higher discriminants of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantTable {
    pub n: usize,
    pub entries: Vec<DiscEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscRecord {
    pub n: usize,
    pub i: usize,
    pub weights: Vec<u32>,
    pub weighted_degree: u64,
    pub poly: String,
    pub reduced_poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct CacheFile {
    n: usize,
    sha256: String,
    entries: Vec<DiscRecord>,
}

impl DiscriminantTable {
    /// Compute `Res(f, f_i)` for every `1 <= i <= n-1`.
    pub fn build(n: usize) -> Result<Self> {
        check_n(n)?;
        let f = generic_monic(n);
        let mut entries = Vec::with_capacity(n - 1);
        for i in 1..n {
            let poly = sylvester_resultant(&f, &generic_hs(n, i))?;
            let reduced = poly.substitute_const(n - 1, &Rational::from_integer(0.into()));
            let reduced = reduced.remove_unused_var(n - 1).expect("y_n substituted");
            entries.push(DiscEntry { n, i, poly, reduced });
        }
        let t = DiscriminantTable { n, entries };
        t.check()?;
        Ok(t)
    }

    /// Integer coefficients and weighted homogeneity of every entry.
    pub fn check(&self) -> Result<()> {
        let full_w: Vec<u32> = (1..=self.n as u32).collect();
        for e in &self.entries {
            if e.poly.terms().iter().any(|(_, c)| !c.is_integer()) {
                return Err(Error::Invalid(format!("disc^{}_{} has a non-integer coefficient", e.i, e.n)));
            }
            let want = WeightedDegree::Homogeneous(e.weighted_degree());
            if e.poly.weighted_degree(&full_w) != want {
                return Err(Error::Invalid(format!("disc^{}_{} is not weighted-homogeneous", e.i, e.n)));
            }
            let red = e.reduced.weighted_degree(&e.weights());
            if red != want && red != WeightedDegree::Zero {
                return Err(Error::Invalid(format!("reduced disc^{}_{} is not weighted-homogeneous", e.i, e.n)));
            }
        }
        Ok(())
    }

    pub fn entry(&self, i: usize) -> &DiscEntry {
        &self.entries[i - 1]
    }

    pub fn records(&self) -> Vec<DiscRecord> {
        let full = var_names("y", self.n);
        let red = var_names("y", self.n - 1);
        self.entries
            .iter()
            .map(|e| DiscRecord {
                n: e.n,
                i: e.i,
                weights: e.weights(),
                weighted_degree: e.weighted_degree(),
                poly: e.poly.to_string_with(&full),
                reduced_poly: e.reduced.to_string_with(&red),
            })
            .collect()
    }

    fn from_records(n: usize, records: &[DiscRecord]) -> Result<Self> {
        check_n(n)?;
        if records.len() != n - 1 {
            return Err(Error::Cache(format!("expected {} entries, found {}", n - 1, records.len())));
        }
        let full = var_names("y", n);
        let red = var_names("y", n - 1);
        let mut entries = Vec::with_capacity(n - 1);
        for (k, r) in records.iter().enumerate() {
            if r.n != n || r.i != k + 1 {
                return Err(Error::Cache(format!("entry {k} has wrong indices")));
            }
            let poly = parse_poly_named(&r.poly, &full, &()).map_err(|e| Error::Cache(e.to_string()))?;
            let reduced = parse_poly_named(&r.reduced_poly, &red, &()).map_err(|e| Error::Cache(e.to_string()))?;
            entries.push(DiscEntry { n, i: r.i, poly, reduced });
        }
        let t = DiscriminantTable { n, entries };
        t.check().map_err(|e| Error::Cache(e.to_string()))?;
        Ok(t)
    }

    /// SHA-256 of the canonical JSON encoding of the records.
    pub fn digest(&self) -> String {
        digest_records(&self.records())
    }

    pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
        dir.join(format!("disc_n{n}.json"))
    }

    /// Load from `dir` if a valid cache file exists, otherwise build and store it.
    pub fn load_or_build(n: usize, dir: Option<&Path>) -> Result<Self> {
        check_n(n)?;
        let Some(dir) = dir else {
            return Self::build(n);
        };
        let path = Self::cache_path(dir, n);
        if path.exists() {
            return Self::load(&path);
        }
        let t = Self::build(n)?;
        t.store(dir)?;
        Ok(t)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if digest_records(&file.entries) != file.sha256 {
            return Err(Error::Cache(format!("{}: hash mismatch", path.display())));
        }
        Self::from_records(file.n, &file.entries)
    }

    pub fn store(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        let entries = self.records();
        let file = CacheFile { n: self.n, sha256: digest_records(&entries), entries };
        let path = Self::cache_path(dir, self.n);
        let text = serde_json::to_string_pretty(&file).expect("serializable");
        fs::write(&path, text + "\n").map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Ok(path)
    }

    /// Rebuild from scratch and compare with a cached copy.
    pub fn verify_cache(dir: &Path, n: usize) -> Result<bool> {
        let cached = Self::load(&Self::cache_path(dir, n))?;
        Ok(cached.digest() == Self::build(n)?.digest())
    }
}

fn digest_records(records: &[DiscRecord]) -> String {
    let bytes = serde_json::to_vec(records).expect("serializable");
    hex::encode(Sha256::digest(&bytes))
}

/// `disc_table(n)` without caching.
pub fn disc_table(n: usize) -> Result<DiscriminantTable> {
    DiscriminantTable::build(n)
}

/// The reduced discriminants `disc^i_n(y_1..y_{n-1}, 0)` for `1 <= i <= j`.
pub fn xn_defining_system(table: &DiscriminantTable, j: usize) -> Result<Vec<MPoly<Rational>>> {
    if j > table.n - 1 {
        return Err(Error::Invalid(format!("truncation {j} exceeds n - 1 = {}", table.n - 1)));
    }
    Ok(table.entries[..j].iter().map(|e| e.reduced.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField};
    use crate::hasse::hs_uni;
    use crate::poly::upoly_gcd;
    use proptest::prelude::*;

    fn y(s: &str, n: usize) -> MPoly<Rational> {
        parse_poly_named(s, &var_names("y", n), &()).unwrap()
    }

    #[test]
    fn quadratic_resultant() {
        let f = vec![y("y2", 2), y("y1", 2), y("1", 2)];
        let g = vec![y("y1", 2), y("2", 2)];
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), y("4*y2 - y1^2", 2));
    }

    #[test]
    fn resultant_with_unit_and_shared_root() {
        let f = UPoly::<Rational>::from_i64(&(), &[2, -3, 1]);
        assert_eq!(resultant_upoly(&f, &UPoly::one(&())).unwrap(), Rational::from_integer(1.into()));
        let g = UPoly::<Rational>::from_i64(&(), &[-1, 1]);
        assert_eq!(resultant_upoly(&f, &g).unwrap(), Rational::from_integer(0.into()));
        let c = UPoly::<Rational>::one(&());
        assert!(resultant_upoly(&c, &c).is_err());
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(f, g) = prod over roots a of f of g(a) for monic f
        let f = UPoly::<Rational>::from_i64(&(), &[6, -5, 1]); // roots 2, 3
        let g = UPoly::<Rational>::from_i64(&(), &[1, 1, 1]);
        let want = g.eval(&Rational::from_integer(2.into())) * g.eval(&Rational::from_integer(3.into()));
        assert_eq!(resultant_upoly(&f, &g).unwrap(), want);
    }

    #[test]
    fn small_tables() {
        let t2 = disc_table(2).unwrap();
        assert_eq!(t2.entry(1).poly, y("4*y2 - y1^2", 2));
        assert_eq!(xn_defining_system(&t2, 1).unwrap(), vec![y("-y1^2", 1)]);
        let t3 = disc_table(3).unwrap();
        assert_eq!(t3.entry(2).poly, y("-2*y1^3 + 9*y1*y2 - 27*y3", 3));
        assert_eq!(t3.entry(2).reduced, y("-2*y1^3 + 9*y1*y2", 2));
        assert_eq!(t3.entry(2).reduced.weighted_degree(&[1, 2]), WeightedDegree::Homogeneous(3));
        assert_eq!(xn_defining_system(&t3, 2).unwrap().len(), 2);
        assert_eq!(xn_defining_system(&t3, 1).unwrap().len(), 1);
        assert!(disc_table(1).is_err());
        assert!(disc_table(9).is_err());
    }

    #[test]
    fn weighted_homogeneity_up_to_six() {
        for n in 2..=6 {
            let t = disc_table(n).unwrap();
            for e in &t.entries {
                assert_eq!(e.reduced.weighted_degree(&e.weights()), WeightedDegree::Homogeneous((n * (n - e.i)) as u64));
            }
        }
    }

    #[test]
    fn cache_round_trip_and_tamper_detection() {
        let dir = tempfile::tempdir().unwrap();
        let t = DiscriminantTable::load_or_build(4, Some(dir.path())).unwrap();
        let again = DiscriminantTable::load_or_build(4, Some(dir.path())).unwrap();
        assert_eq!(t, again);
        assert!(DiscriminantTable::verify_cache(dir.path(), 4).unwrap());
        let path = DiscriminantTable::cache_path(dir.path(), 4);
        let text = fs::read_to_string(&path).unwrap().replacen("y1", "y2", 1);
        fs::write(&path, text).unwrap();
        assert!(matches!(DiscriminantTable::load(&path), Err(Error::Cache(_))));
    }

    #[test]
    fn pure_powers_vanish() {
        for n in 2..=5 {
            let t = disc_table(n).unwrap();
            for a in [-3i64, -1, 0, 2, 5] {
                let alpha = Rational::new(a.into(), 7.into());
                let f = UPoly::new(&(), vec![alpha.clone() * Rational::from_integer((-1).into()), Rational::from_integer(1.into())]).pow(n as u32);
                let pt: Vec<Rational> = (1..=n).map(|k| f.coeff(n - k)).collect();
                for e in &t.entries {
                    assert!(e.poly.eval(&pt).is_zero());
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn vanishing_iff_common_root(n in 2usize..=5, p in prop::sample::select(vec![5u32, 101]), ys in prop::collection::vec(0u64..101, 5)) {
            let ctx = PrimeField::new(p).unwrap();
            let t = disc_table(n).unwrap();
            let mut coeffs: Vec<Fp> = (0..n).map(|k| ctx.elem(ys[n - 1 - k])).collect();
            coeffs.push(ctx.elem(1));
            let f = UPoly::new(&ctx, coeffs);
            let pt: Vec<Fp> = (1..=n).map(|k| f.coeff(n - k)).collect();
            for e in &t.entries {
                let d = e.poly.convert::<Fp>(&ctx).unwrap().eval(&pt);
                let g = upoly_gcd(&f, &hs_uni(&f, e.i as u32));
                prop_assert_eq!(d.is_zero(), g.degree().unwrap_or(0) >= 1);
            }
        }
    }
}
