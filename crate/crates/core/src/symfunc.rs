//! Symmetric functions in the Schur and power-sum bases.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions, Abacus, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Schur,
    PowerSum,
}

/// A finite linear combination of `s_λ` or `p_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::monomial(Basis::Schur, lambda)
    }

    pub fn power_sum(mu: Partition) -> Self {
        Self::monomial(Basis::PowerSum, mu)
    }

    fn monomial(basis: Basis, key: Partition) -> Self {
        let mut f = SymFunc::zero(basis);
        f.terms.insert(key, BigRational::one());
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut f = SymFunc::zero(basis);
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, key: &Partition) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees occurring in the support, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn add_term(&mut self, key: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Same function expressed in `basis`.
    pub fn in_basis(&self, basis: Basis) -> Self {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (Basis::Schur, Basis::PowerSum) => to_powersum(self),
            _ => from_powersum(self),
        }
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    /// The result is in the basis of the left operand.
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (k, v) in rhs.in_basis(self.basis).terms {
            out.add_term(k, v);
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &rhs.scaled(&-BigRational::one())
    }
}

/// Partitions obtained by adding an `r`-border strip to `lambda`, with the
/// sign `(−1)^{height}`.
pub fn add_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, i32)> {
    let r = r as i64;
    let ab = Abacus::new(lambda, 0);
    let mut out = Vec::new();
    for x in ab.beads_above(ab.floor() - r) {
        if !ab.contains(x + r) {
            let sign = if ab.beads_between(x, x + r).is_multiple_of(2) { 1 } else { -1 };
            out.push((ab.moved(x, x + r).to_partition().0, sign));
        }
    }
    out
}

/// Partitions obtained by removing an `r`-border strip from `lambda`, with
/// the sign `(−1)^{height}`.
pub fn remove_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, i32)> {
    let r = r as i64;
    let ab = Abacus::new(lambda, 0);
    let mut out = Vec::new();
    for x in ab.beads_above(ab.floor()) {
        if !ab.contains(x - r) {
            let sign = if ab.beads_between(x, x - r).is_multiple_of(2) { 1 } else { -1 };
            out.push((ab.moved(x, x - r).to_partition().0, sign));
        }
    }
    out
}

fn sign_rat(s: i32) -> BigRational {
    BigRational::from_integer(BigInt::from(s))
}

/// Multiplication by `p_r`.
pub fn mult_p(r: usize, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.basis);
    for (key, c) in &f.terms {
        match f.basis {
            Basis::Schur => {
                for (lam, s) in add_border_strips(key, r) {
                    out.add_term(lam, c * sign_rat(s));
                }
            }
            Basis::PowerSum => {
                let mut parts = key.parts().to_vec();
                parts.push(r as u32);
                parts.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(Partition::new(parts).expect("sorted"), c.clone());
            }
        }
    }
    out
}

/// The adjoint of [`mult_p`] for the Hall inner product.
pub fn skew_p(r: usize, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.basis);
    for (key, c) in &f.terms {
        match f.basis {
            Basis::Schur => {
                for (lam, s) in remove_border_strips(key, r) {
                    out.add_term(lam, c * sign_rat(s));
                }
            }
            Basis::PowerSum => {
                let mult = key.parts().iter().filter(|&&p| p as usize == r).count();
                if mult == 0 {
                    continue;
                }
                let mut parts = key.parts().to_vec();
                let pos = parts.iter().position(|&p| p as usize == r).expect("present");
                parts.remove(pos);
                let factor = BigRational::from_integer(BigInt::from(r * mult));
                out.add_term(Partition::new(parts).expect("sorted"), c * factor);
            }
        }
    }
    out
}

/// `χ^ν(μ)` by the Murnaghan–Nakayama recursion over the parts of `μ`.
pub fn character(nu: &Partition, mu: &Partition) -> Result<i64> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch { left: nu.size(), right: mu.size() });
    }
    fn rec(nu: &Partition, parts: &[u32]) -> i64 {
        match parts.split_first() {
            None => 1,
            Some((&r, rest)) => remove_border_strips(nu, r as usize)
                .iter()
                .map(|(lam, s)| *s as i64 * rec(lam, rest))
                .sum(),
        }
    }
    Ok(rec(nu, mu.parts()))
}

/// `z_μ = Π i^{m_i} m_i!`.
pub fn z(mu: &Partition) -> BigInt {
    let mut out = BigInt::one();
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        for k in 1..=(j - i) {
            out *= BigInt::from(parts[i]) * BigInt::from(k);
        }
        i = j;
    }
    out
}

/// `s_λ = Σ_μ χ^λ(μ) z_μ⁻¹ p_μ`.
pub fn to_powersum(f: &SymFunc) -> SymFunc {
    assert_eq!(f.basis, Basis::Schur);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (lam, c) in &f.terms {
        for mu in partitions(lam.size()) {
            let chi = character(lam, &mu).expect("same size");
            if chi != 0 {
                let coeff = c * BigRational::new(BigInt::from(chi), z(&mu));
                out.add_term(mu, coeff);
            }
        }
    }
    out
}

/// `p_μ = Σ_λ χ^λ(μ) s_λ`.
pub fn from_powersum(f: &SymFunc) -> SymFunc {
    assert_eq!(f.basis, Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::Schur);
    for (mu, c) in &f.terms {
        for lam in partitions(mu.size()) {
            let chi = character(&lam, mu).expect("same size");
            if chi != 0 {
                out.add_term(lam, c * BigRational::from_integer(chi.into()));
            }
        }
    }
    out
}

/// `s_ν[p_e]` in the Schur basis.
pub fn plethysm_pe(e: usize, nu: &Partition) -> SymFunc {
    let p = to_powersum(&SymFunc::schur(nu.clone()));
    let stretched = SymFunc::from_terms(
        Basis::PowerSum,
        p.terms.into_iter().map(|(mu, c)| {
            let parts = mu.parts().iter().map(|&x| x * e as u32).collect();
            (Partition::new(parts).expect("scaled partition"), c)
        }),
    );
    from_powersum(&stretched)
}
