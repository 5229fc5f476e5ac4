use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hasse::hs_uni;
use crate::poly::UPoly;

/// Outcome of checking the Casas-Alvero hypothesis on one polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CAReport {
    pub field: String,
    pub degree: usize,
    pub f: String,
    /// `deg gcd(f, f_i)` for `i = 1..n-1`.
    pub gcd_degrees: Vec<usize>,
    pub satisfies_hypothesis: bool,
    pub is_pure_power: bool,
    pub is_counterexample: bool,
}

pub fn ca_check<K: Field>(f: &UPoly<K>) -> Result<CAReport> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::Invalid(format!("degree must be at least 2, got {n}")));
    }
    if !f.is_monic() {
        return Err(Error::Invalid(format!("polynomial is not monic: {f}")));
    }
    let gcd_degrees: Vec<usize> = (1..n).map(|i| f.gcd(&hs_uni(f, i as u32)).degree().unwrap_or(0)).collect();
    let satisfies_hypothesis = gcd_degrees.iter().all(|&d| d >= 1);
    let is_pure_power = is_pure_power(f);
    Ok(CAReport {
        field: K::descriptor(f.ctx()).to_string(),
        degree: n,
        f: f.to_string(),
        gcd_degrees,
        satisfies_hypothesis,
        is_pure_power,
        is_counterexample: satisfies_hypothesis && !is_pure_power,
    })
}

/// Whether a monic `f` equals `(X - α)^n`. Compares with `(X + y_1/n)^n`
/// when the characteristic does not divide `n`, otherwise searches the
/// prime field for `α`.
pub fn is_pure_power<K: Field>(f: &UPoly<K>) -> bool {
    let Some(n) = f.degree() else { return false };
    let ctx = f.ctx();
    let c = K::descriptor(ctx).characteristic();
    if c == 0 || !(n as u64).is_multiple_of(c as u64) {
        let nk = K::from_i64(ctx, n as i64);
        let alpha = f.coeff(n - 1).div(&nk).expect("n invertible").neg();
        return UPoly::linear_root(ctx, &alpha).pow(n as u32) == *f;
    }
    (0..c as i64).any(|v| {
        let a = K::from_i64(ctx, v);
        f.eval(&a).is_zero() && UPoly::linear_root(ctx, &a).pow(n as u32) == *f
    })
}

/// All roots with multiplicity when `f` splits over the prime field `F_c`;
/// `None` otherwise or in characteristic zero.
pub fn split_roots<K: Field>(f: &UPoly<K>) -> Option<Vec<K>> {
    let ctx = f.ctx();
    let c = K::descriptor(ctx).characteristic();
    let n = f.degree()?;
    if c == 0 {
        return None;
    }
    let mut rest = f.clone();
    let mut roots = Vec::new();
    for v in 0..c as i64 {
        let a = K::from_i64(ctx, v);
        let lin = UPoly::linear_root(ctx, &a);
        loop {
            let (q, r) = rest.div_rem(&lin);
            if !r.is_zero() || rest.degree() == Some(0) {
                break;
            }
            roots.push(a.clone());
            rest = q;
        }
    }
    (roots.len() == n).then_some(roots)
}
