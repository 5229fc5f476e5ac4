//! Exact coefficient fields: arbitrary-precision rationals and prime fields.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoeffField {
    Rationals,
    PrimeField { p: u32 },
}

impl CoeffField {
    /// Validated prime field. The modulus must be a prime below 2^31.
    pub fn prime(p: u32) -> Result<Self> {
        PrimeField::new(p).map(|f| CoeffField::PrimeField { p: f.p })
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            CoeffField::Rationals => 0,
            CoeffField::PrimeField { p } => *p,
        }
    }
}

impl Display for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffField::Rationals => write!(f, "QQ"),
            CoeffField::PrimeField { p } => write!(f, "GF({p})"),
        }
    }
}

/// Deterministic primality test for `u32` (trial division is plenty here).
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in `[2, bound]`, ascending.
pub fn primes_up_to(bound: u32) -> Vec<u32> {
    (2..=bound).filter(|&p| is_prime(p)).collect()
}

/// A field element type. Elements are values; the context carries whatever is
/// needed to build constants (the modulus for prime fields).
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    type Ctx: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_bigint(ctx: &Self::Ctx, v: &BigInt) -> Self;
    /// `num / den`, or `None` when `den` is zero in the field.
    fn from_ratio(ctx: &Self::Ctx, num: &BigInt, den: &BigInt) -> Option<Self>;
    fn descriptor(ctx: &Self::Ctx) -> CoeffField;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    /// Representative used for printing: a reduced fraction, with prime
    /// field elements shown in the symmetric range.
    fn to_ratio(&self) -> (BigInt, BigInt);

    /// Scale a coefficient list (leading entry first) into the canonical
    /// associate used during Groebner reductions. Over prime fields this is
    /// the monic scaling; over the rationals the primitive integer vector
    /// with positive leading entry.
    fn normalize_content(coeffs: &mut [Self]) {
        if let Some(lc) = coeffs.first() {
            if lc.is_one() || lc.is_zero() {
                return;
            }
            let inv = lc.inv().expect("nonzero element of a field is invertible");
            for c in coeffs.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }

    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self {
        Self::from_bigint(ctx, &BigInt::from(v))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap_or_else(|| self.one_like())
    }

    /// The multiplicative identity of the field `self` lives in.
    fn one_like(&self) -> Self;
}

// ---------------------------------------------------------------------------
// Rationals

/// Rationals; `BigRational` keeps values reduced with a positive denominator.
pub type Rational = BigRational;

impl Field for BigRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }
    fn from_bigint(_: &(), v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn from_ratio(_: &(), num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
    fn descriptor(_: &()) -> CoeffField {
        CoeffField::Rationals
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        std::ops::Add::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        std::ops::Sub::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_integer() && o.is_integer() {
            BigRational::from_integer(self.numer() * o.numer())
        } else {
            std::ops::Mul::mul(self, o)
        }
    }
    fn neg(&self) -> Self {
        std::ops::Neg::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_ratio(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
    fn one_like(&self) -> Self {
        <BigRational as One>::one()
    }

    fn normalize_content(coeffs: &mut [Self]) {
        if coeffs.is_empty() {
            return;
        }
        let mut den_lcm = BigInt::one();
        for c in coeffs.iter() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in coeffs.iter() {
            let v = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&v);
        }
        if num_gcd.is_zero() {
            return;
        }
        if coeffs[0].is_negative() {
            num_gcd = -num_gcd;
        }
        for c in coeffs.iter_mut() {
            let v = c.numer() * (&den_lcm / c.denom()) / &num_gcd;
            *c = BigRational::from_integer(v);
        }
    }
}

// ---------------------------------------------------------------------------
// Prime fields

/// Validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, v: u64) -> Fp {
        Fp { v: (v % self.p as u64) as u32, p: self.p }
    }

    /// All field elements in the order 0, 1, ..., p-1.
    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.p).map(move |v| Fp { v, p: self.p })
    }
}

/// Element of a prime field; carries its modulus so arithmetic needs no context.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    v: u32,
    p: u32,
}

impl Fp {
    pub fn value(&self) -> u32 {
        self.v
    }
    pub fn modulus(&self) -> u32 {
        self.p
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    type Ctx = PrimeField;

    fn zero(ctx: &PrimeField) -> Self {
        Fp { v: 0, p: ctx.p }
    }
    fn one(ctx: &PrimeField) -> Self {
        Fp { v: 1, p: ctx.p }
    }
    fn from_bigint(ctx: &PrimeField, v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(ctx.p));
        Fp { v: r.to_u32().expect("residue fits u32"), p: ctx.p }
    }
    fn from_ratio(ctx: &PrimeField, num: &BigInt, den: &BigInt) -> Option<Self> {
        let n = Self::from_bigint(ctx, num);
        let d = Self::from_bigint(ctx, den);
        n.div(&d)
    }
    fn descriptor(ctx: &PrimeField) -> CoeffField {
        CoeffField::PrimeField { p: ctx.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u64 + o.v as u64;
        Fp { v: (s % self.p as u64) as u32, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u64 + (self.p - o.v) as u64;
        Fp { v: (s % self.p as u64) as u32, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u64 * o.v as u64;
        Fp { v: (s % self.p as u64) as u32, p: self.p }
    }
    fn neg(&self) -> Self {
        if self.v == 0 {
            *self
        } else {
            Fp { v: self.p - self.v, p: self.p }
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = self.v as u64;
        let m = self.p as u64;
        let mut e = m - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Some(Fp { v: acc as u32, p: self.p })
    }
    fn to_ratio(&self) -> (BigInt, BigInt) {
        let v = if self.v as u64 * 2 > self.p as u64 {
            self.v as i64 - self.p as i64
        } else {
            self.v as i64
        };
        (BigInt::from(v), BigInt::one())
    }
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.p, p: self.p }
    }
}

/// Binomial coefficient over the integers.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// Binomial coefficient computed in the integers and mapped into the field.
pub fn binomial_in<K: Field>(ctx: &K::Ctx, n: u64, k: u64) -> K {
    K::from_bigint(ctx, &binomial(n, k))
}

/// Parse a rational literal such as `-3/4` or `5`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse { pos: 0, msg: format!("bad rational literal {t:?}") })?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse { pos: 0, msg: format!("bad rational literal {t:?}") })?;
    if den.is_zero() {
        return Err(Error::Parse { pos: 0, msg: format!("zero denominator in {t:?}") });
    }
    Ok(BigRational::new(num, den))
}

/// Format a ratio as `a` or `a/b`.
pub fn format_ratio(num: &BigInt, den: &BigInt) -> String {
    if den.is_one() {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> Rational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn prime_validation() {
        assert!(PrimeField::new(5).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(PrimeField::new(4_294_967_291).is_err());
    }

    #[test]
    fn symmetric_representative() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.elem(4).to_ratio().0, BigInt::from(-1));
        assert_eq!(f.elem(2).to_ratio().0, BigInt::from(2));
        assert_eq!(f.elem(3).to_ratio().0, BigInt::from(-2));
    }

    #[test]
    fn ratio_into_prime_field() {
        let f = PrimeField::new(7).unwrap();
        let half = Fp::from_ratio(&f, &1.into(), &2.into()).unwrap();
        assert_eq!(half.value(), 4);
        assert!(Fp::from_ratio(&f, &1.into(), &7.into()).is_none());
    }

    #[test]
    fn binomials_reduce_mod_p() {
        let f = PrimeField::new(5).unwrap();
        assert!(binomial_in::<Fp>(&f, 5, 1).is_zero());
        assert!(binomial_in::<Fp>(&f, 5, 5).is_one());
        assert_eq!(binomial(64, 32).to_string(), "1832624140942590534");
    }

    #[test]
    fn rational_content() {
        let mut v = vec![q(-2, 3), q(4, 9), q(2, 1)];
        Rational::normalize_content(&mut v);
        assert_eq!(v, vec![q(3, 1), q(-2, 1), q(-9, 1)]);
    }

    fn fp_strategy(p: u32) -> impl Strategy<Value = Fp> {
        (0..p).prop_map(move |v| Fp { v, p })
    }

    fn q_strategy() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(a, b)| q(a, b))
    }

    fn check_axioms<K: Field>(a: &K, b: &K, c: &K) {
        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
        assert_eq!(a.add(b), b.add(a));
        assert_eq!(a.sub(b).add(b), *a);
        assert!(a.add(&a.neg()).is_zero());
        if let Some(i) = a.inv() {
            assert!(a.mul(&i).is_one());
        } else {
            assert!(a.is_zero());
        }
    }

    proptest! {
        #[test]
        fn fp_field_axioms(a in fp_strategy(101), b in fp_strategy(101), c in fp_strategy(101)) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn f5_field_axioms(a in fp_strategy(5), b in fp_strategy(5), c in fp_strategy(5)) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn q_field_axioms(a in q_strategy(), b in q_strategy(), c in q_strategy()) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn pow_matches_repeated_mul(a in fp_strategy(13), e in 0u64..20) {
            let mut acc = a.one_like();
            for _ in 0..e { acc = acc.mul(&a); }
            prop_assert_eq!(a.pow(e), acc);
        }
    }
}
