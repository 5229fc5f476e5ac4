use std::cmp::Ordering;

/// Upper bound on the number of variables of any ring in this crate.
pub const MAX_VARS: usize = 12;

/// Exponent vector with 16-bit exponents. Unused slots are zero, so the
/// comparison and divisibility routines never need the ring's arity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    e: [u16; MAX_VARS],
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.e.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.e[..last])
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut e = [0u16; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial { e }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u16; MAX_VARS];
        e[i] = 1;
        Monomial { e }
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.e[i]
    }

    #[inline]
    pub fn set_exp(&mut self, i: usize, v: u16) {
        self.e[i] = v;
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.e[..nvars]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.e.iter().map(|&x| x as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    /// Weighted degree; `weights[i]` applies to variable `i`.
    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        weights.iter().zip(self.e.iter()).map(|(&w, &x)| w as u64 * x as u64).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(other.e.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial { e }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.e.iter().zip(other.e.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0u16; MAX_VARS];
        for (slot, (a, b)) in e.iter_mut().zip(other.e.iter().zip(&self.e)) {
            *slot = a.checked_sub(*b)?;
        }
        Some(Monomial { e })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(other.e.iter()) {
            *a = (*a).max(*b);
        }
        Monomial { e }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.e.iter().zip(other.e.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i)
    }

    pub fn support_mask(&self) -> u32 {
        self.e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .fold(0u32, |m, (i, _)| m | (1 << i))
    }

    /// Graded reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            if self.e[i] != other.e[i] {
                // smaller exponent in the last differing variable wins
                return other.e[i].cmp(&self.e[i]);
            }
        }
        Ordering::Equal
    }

    /// Pure lexicographic comparison with x1 > x2 > ...
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.e.cmp(&other.e)
    }

    /// Grevlex restricted to the variables selected by `mask`.
    pub fn cmp_grevlex_masked(&self, other: &Monomial, mask: u32) -> Ordering {
        let deg = |m: &Monomial| -> u32 {
            (0..MAX_VARS).filter(|i| mask & (1 << i) != 0).map(|i| m.e[i] as u32).sum()
        };
        match deg(self).cmp(&deg(other)) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            if mask & (1 << i) != 0 && self.e[i] != other.e[i] {
                return other.e[i].cmp(&self.e[i]);
            }
        }
        Ordering::Equal
    }

    /// Drop variable `i`, shifting later variables down.
    pub fn remove_var(&self, i: usize) -> Monomial {
        let mut e = [0u16; MAX_VARS];
        let mut k = 0;
        for j in 0..MAX_VARS {
            if j != i {
                e[k] = self.e[j];
                k += 1;
            }
        }
        Monomial { e }
    }
}
