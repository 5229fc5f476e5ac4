use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{format_ratio, Field};

use super::monomial::{Monomial, MAX_VARS};

/// Sparse multivariate polynomial. Terms are kept sorted in descending
/// graded-reverse-lexicographic order with no zero coefficients, so equal
/// polynomials have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<K: Field> {
    nvars: usize,
    ctx: K::Ctx,
    terms: Vec<(Monomial, K)>,
}

/// Result of [`MPoly::weighted_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    /// The zero polynomial has no degree.
    Zero,
    Homogeneous(u64),
    Inhomogeneous,
}

impl<K: Field> MPoly<K> {
    pub fn zero(nvars: usize, ctx: &K::Ctx) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        MPoly { nvars, ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn constant(nvars: usize, ctx: &K::Ctx, c: K) -> Self {
        Self::from_terms(nvars, ctx, vec![(Monomial::one(), c)])
    }

    pub fn one(nvars: usize, ctx: &K::Ctx) -> Self {
        Self::constant(nvars, ctx, K::one(ctx))
    }

    pub fn from_i64(nvars: usize, ctx: &K::Ctx, v: i64) -> Self {
        Self::constant(nvars, ctx, K::from_i64(ctx, v))
    }

    pub fn var(nvars: usize, ctx: &K::Ctx, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        MPoly { nvars, ctx: ctx.clone(), terms: vec![(Monomial::var(i), K::one(ctx))] }
    }

    /// Build from arbitrary terms: like monomials are merged and zeros dropped.
    pub fn from_terms(nvars: usize, ctx: &K::Ctx, terms: Vec<(Monomial, K)>) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut acc: HashMap<Monomial, K> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert!(m.support().all(|i| i < nvars), "monomial uses a variable beyond nvars");
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_grevlex(&a.0));
        MPoly { nvars, ctx: ctx.clone(), terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Leading term in grevlex.
    pub fn leading(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| K::zero(&self.ctx))
    }

    pub fn constant_term(&self) -> K {
        self.coeff(&Monomial::one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneity with respect to the subset of variables in `mask`.
    pub fn is_homogeneous_in(&self, mask: u32) -> bool {
        let deg = |m: &Monomial| -> u32 {
            (0..self.nvars).filter(|i| mask & (1 << i) != 0).map(|i| m.exp(i) as u32).sum()
        };
        let mut degs = self.terms.iter().map(|(m, _)| deg(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Common weighted degree of all terms.
    pub fn weighted_degree(&self, weights: &[u32]) -> WeightedDegree {
        assert_eq!(weights.len(), self.nvars, "one weight per variable");
        let mut it = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        match it.next() {
            None => WeightedDegree::Zero,
            Some(d) => {
                if it.all(|e| e == d) {
                    WeightedDegree::Homogeneous(d)
                } else {
                    WeightedDegree::Inhomogeneous
                }
            }
        }
    }

    /// Variables that occur in some term, as a bitmask.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |m, (t, _)| m | t.support_mask())
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, &self.ctx);
        }
        let terms = self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect();
        MPoly { nvars: self.nvars, ctx: self.ctx.clone(), terms }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, &self.ctx);
        }
        // multiplication by a monomial preserves the order
        let terms = self.terms.iter().map(|(m, x)| (m.mul(mono), x.mul(c))).collect();
        MPoly { nvars: self.nvars, ctx: self.ctx.clone(), terms }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars, &self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.nvars, "point arity");
        let mut acc = K::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in m.support() {
                t = t.mul(&point[i].pow(m.exp(i) as u64));
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|(m, c)| {
                let e = m.exp(var);
                let mut m2 = *m;
                m2.set_exp(var, e - 1);
                (m2, c.mul(&K::from_i64(&self.ctx, e as i64)))
            })
            .collect();
        Self::from_terms(self.nvars, &self.ctx, terms)
    }

    /// Same polynomial viewed in a ring with more variables appended.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars && nvars <= MAX_VARS);
        MPoly { nvars, ctx: self.ctx.clone(), terms: self.terms.clone() }
    }

    /// Drop variable `var`, which must not occur; later variables shift down.
    pub fn remove_unused_var(&self, var: usize) -> Option<Self> {
        if self.terms.iter().any(|(m, _)| m.exp(var) > 0) {
            return None;
        }
        let terms = self.terms.iter().map(|(m, c)| (m.remove_var(var), c.clone())).collect();
        Some(Self::from_terms(self.nvars - 1, &self.ctx, terms))
    }

    /// Substitute a field constant for one variable (the variable stays in the ring).
    pub fn substitute_const(&self, var: usize, value: &K) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exp(var);
                let mut m2 = *m;
                m2.set_exp(var, 0);
                (m2, c.mul(&value.pow(e as u64)))
            })
            .collect();
        Self::from_terms(self.nvars, &self.ctx, terms)
    }

    pub fn map_coeffs<L: Field>(&self, ctx: &L::Ctx, f: impl Fn(&K) -> L) -> MPoly<L> {
        let terms = self.terms.iter().map(|(m, c)| (*m, f(c))).collect();
        MPoly::from_terms(self.nvars, ctx, terms)
    }

    /// Reinterpret coefficients in another field through their ratio
    /// representative. `None` when a denominator vanishes there.
    pub fn convert<L: Field>(&self, ctx: &L::Ctx) -> Option<MPoly<L>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (n, d) = c.to_ratio();
            terms.push((*m, L::from_ratio(ctx, &n, &d)?));
        }
        Some(MPoly::from_terms(self.nvars, ctx, terms))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_grevlex(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, if negate_other { c.neg() } else { c.clone() })));
        MPoly { nvars: self.nvars, ctx: self.ctx.clone(), terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars, &self.ctx);
        }
        let mut acc: HashMap<Monomial, K> = HashMap::with_capacity(self.num_terms() * other.num_terms());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_grevlex(&a.0));
        MPoly { nvars: self.nvars, ctx: self.ctx.clone(), terms }
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.nvars, divisor.nvars, "ring mismatch");
        let (dm, dc) = divisor.leading()?.clone();
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            let q = dm.quotient_of(&m)?;
            let qc = c.mul(&dinv);
            rem = &rem - &divisor.mul_monomial(&q, &qc);
            quot.push((q, qc));
        }
        Some(Self::from_terms(self.nvars, &self.ctx, quot))
    }

    /// Render with the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        assert!(names.len() >= self.nvars, "not enough variable names");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (num, den) = c.to_ratio();
            let negative = num < 0.into();
            let abs = if negative { -num } else { num };
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let unit = abs == 1.into() && den == 1.into();
            let mut parts: Vec<String> = Vec::new();
            if !unit || m.is_one() {
                parts.push(format_ratio(&abs, &den));
            }
            for i in m.support() {
                let e = m.exp(i);
                if e == 1 {
                    parts.push(names[i].clone());
                } else {
                    parts.push(format!("{}^{}", names[i], e));
                }
            }
            s.push_str(&parts.join("*"));
        }
        s
    }
}

impl<K: Field> fmt::Display for MPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&super::var_names("x", self.nvars)))
    }
}

impl<K: Field> fmt::Debug for MPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.nvars, self)
    }
}

impl<K: Field> Add for &MPoly<K> {
    type Output = MPoly<K>;
    fn add(self, rhs: Self) -> MPoly<K> {
        self.merge(rhs, false)
    }
}

impl<K: Field> Sub for &MPoly<K> {
    type Output = MPoly<K>;
    fn sub(self, rhs: Self) -> MPoly<K> {
        self.merge(rhs, true)
    }
}

impl<K: Field> Mul for &MPoly<K> {
    type Output = MPoly<K>;
    fn mul(self, rhs: Self) -> MPoly<K> {
        self.product(rhs)
    }
}

impl<K: Field> Neg for &MPoly<K> {
    type Output = MPoly<K>;
    fn neg(self) -> MPoly<K> {
        let terms = self.terms.iter().map(|(m, c)| (*m, c.neg())).collect();
        MPoly { nvars: self.nvars, ctx: self.ctx.clone(), terms }
    }
}

impl<K: Field> Add for MPoly<K> {
    type Output = MPoly<K>;
    fn add(self, rhs: Self) -> MPoly<K> {
        &self + &rhs
    }
}

impl<K: Field> Sub for MPoly<K> {
    type Output = MPoly<K>;
    fn sub(self, rhs: Self) -> MPoly<K> {
        &self - &rhs
    }
}

impl<K: Field> Mul for MPoly<K> {
    type Output = MPoly<K>;
    fn mul(self, rhs: Self) -> MPoly<K> {
        &self * &rhs
    }
}

impl<K: Field> Neg for MPoly<K> {
    type Output = MPoly<K>;
    fn neg(self) -> MPoly<K> {
        -&self
    }
}
