//! Quivers on powers of `−q`, affine weight lattices and the Weyl group.
//!
//! Vertex `(−q)^j` is stored as the integer `j`, reduced modulo `e` when the
//! order is finite. Arrows multiply by `q²` (square flavor, `j ↦ j+2`) or by
//! `−q` (circ flavor, `j ↦ j+1`).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;

/// Order of `−q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(e) => Some(e),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(e) => write!(f, "{e}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    /// Arrows multiply by `q²`.
    Square,
    /// Arrows multiply by `−q`.
    Circ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quiver {
    pub order: Order,
    pub flavor: Flavor,
}

impl Quiver {
    pub fn square(order: Order) -> Self {
        Quiver { order, flavor: Flavor::Square }
    }

    pub fn circ(order: Order) -> Self {
        Quiver { order, flavor: Flavor::Circ }
    }

    /// Exponent shift along an arrow.
    pub fn step(&self) -> i64 {
        match self.flavor {
            Flavor::Square => 2,
            Flavor::Circ => 1,
        }
    }

    /// Canonical label of vertex `(−q)^j`.
    pub fn reduce(&self, j: i64) -> i64 {
        match self.order {
            Order::Finite(e) => j.rem_euclid(e as i64),
            Order::Infinite => j,
        }
    }

    /// `0..e` for finite order.
    pub fn vertices(&self) -> Result<Vec<i64>> {
        let e = self.order.finite().ok_or(Error::InfiniteOrder)?;
        Ok((0..e as i64).collect())
    }

    /// Connected components of a finite quiver; two for the square flavor
    /// with `e` even.
    pub fn components(&self) -> Result<Vec<Vec<i64>>> {
        let verts = self.vertices()?;
        let e = verts.len() as i64;
        if self.flavor == Flavor::Square && e % 2 == 0 {
            Ok((0..2).map(|r| verts.iter().copied().filter(|v| v % 2 == r).collect()).collect())
        } else {
            Ok(alloc::vec![verts])
        }
    }

    /// `δ`-coefficient of `α_i`: 1 at the vertices `1` and (square only)
    /// `−q⁻¹`, 0 elsewhere and always 0 for infinite order.
    pub fn affine_coefficient(&self, i: i64) -> i64 {
        let Order::Finite(e) = self.order else { return 0 };
        let i = self.reduce(i);
        let hit = i == 0 || (self.flavor == Flavor::Square && i == e as i64 - 1);
        hit as i64
    }

    /// `δ = m · Σ α_i`.
    fn delta_share(&self) -> BigRational {
        match self.flavor {
            Flavor::Square => BigRational::new(1.into(), 2.into()),
            Flavor::Circ => BigRational::one(),
        }
    }

    fn check(&self, other: &Quiver) -> Result<()> {
        if self == other { Ok(()) } else { Err(Error::QuiverMismatch) }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `Σ λ_i Λ_i + d δ` with integral `λ` and rational `d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec {
    quiver: Quiver,
    lambda: BTreeMap<i64, i64>,
    delta: BigRational,
}

impl WeightVec {
    pub fn zero(quiver: Quiver) -> Self {
        WeightVec { quiver, lambda: BTreeMap::new(), delta: BigRational::zero() }
    }

    pub fn from_parts(quiver: Quiver, lambda: impl IntoIterator<Item = (i64, i64)>, delta: BigRational) -> Self {
        let mut w = WeightVec { quiver, lambda: BTreeMap::new(), delta };
        for (i, c) in lambda {
            w.add_lambda(i, c);
        }
        w
    }

    /// `Λ_i`.
    pub fn fundamental(quiver: Quiver, i: i64) -> Self {
        Self::from_parts(quiver, [(i, 1)], BigRational::zero())
    }

    /// `δ`.
    pub fn null_root(quiver: Quiver) -> Self {
        WeightVec { quiver, lambda: BTreeMap::new(), delta: BigRational::one() }
    }

    /// `α_i = 2Λ_i − Λ_{i+step} − Λ_{i−step} + c_i δ`.
    pub fn simple_root(quiver: Quiver, i: i64) -> Self {
        let s = quiver.step();
        Self::from_parts(
            quiver,
            [(i, 2), (i + s, -1), (i - s, -1)],
            rat(quiver.affine_coefficient(i)),
        )
    }

    fn add_lambda(&mut self, i: i64, c: i64) {
        let i = self.quiver.reduce(i);
        let slot = self.lambda.entry(i).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.lambda.remove(&i);
        }
    }

    pub fn quiver(&self) -> Quiver {
        self.quiver
    }

    /// Nonzero `Λ`-coordinates.
    pub fn lambda(&self) -> &BTreeMap<i64, i64> {
        &self.lambda
    }

    pub fn coord(&self, i: i64) -> i64 {
        self.lambda.get(&self.quiver.reduce(i)).copied().unwrap_or(0)
    }

    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    /// The weight with its `δ`-part dropped.
    pub fn classical(&self) -> Self {
        WeightVec { delta: BigRational::zero(), ..self.clone() }
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return WeightVec::zero(self.quiver);
        }
        WeightVec {
            quiver: self.quiver,
            lambda: self.lambda.iter().map(|(&i, &c)| (i, c * k)).collect(),
            delta: &self.delta * rat(k),
        }
    }

    /// Shifts the `δ`-coordinate.
    pub fn plus_delta(mut self, d: &BigRational) -> Self {
        self.delta += d;
        self
    }

    /// `⟨Σ α_i^∨, x⟩`.
    pub fn level(&self) -> i64 {
        self.lambda.values().sum()
    }

    fn try_add(&self, other: &WeightVec, sign: i64) -> Result<WeightVec> {
        self.quiver.check(&other.quiver)?;
        let mut out = self.clone();
        for (&i, &c) in &other.lambda {
            out.add_lambda(i, sign * c);
        }
        out.delta += &other.delta * rat(sign);
        Ok(out)
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;

    /// Panics when the quivers differ.
    fn add(self, rhs: &WeightVec) -> WeightVec {
        self.try_add(rhs, 1).expect("quiver mismatch")
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;

    /// Panics when the quivers differ.
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        self.try_add(rhs, -1).expect("quiver mismatch")
    }
}

impl Add for WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: WeightVec) -> WeightVec {
        &self + &rhs
    }
}

impl Sub for WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: WeightVec) -> WeightVec {
        &self - &rhs
    }
}

impl Neg for WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        self.scaled(-1)
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in &self.lambda {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c:+}L{i}")?;
            first = false;
        }
        if !self.delta.is_zero() || first {
            if !first {
                f.write_str(" ")?;
            }
            let sign = if self.delta.is_negative() { "-" } else { "+" };
            write!(f, "{sign}{}d", self.delta.abs())?;
        }
        Ok(())
    }
}

/// `Σ h_i α_i^∨ + k ∂`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoweightVec {
    quiver: Quiver,
    alpha_check: BTreeMap<i64, i64>,
    d_part: i64,
}

impl CoweightVec {
    pub fn from_parts(quiver: Quiver, alpha_check: impl IntoIterator<Item = (i64, i64)>, d_part: i64) -> Self {
        let mut map = BTreeMap::new();
        for (i, c) in alpha_check {
            *map.entry(quiver.reduce(i)).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        CoweightVec { quiver, alpha_check: map, d_part }
    }

    pub fn simple_coroot(quiver: Quiver, i: i64) -> Self {
        Self::from_parts(quiver, [(i, 1)], 0)
    }

    /// The derivation `∂`.
    pub fn derivation(quiver: Quiver) -> Self {
        Self::from_parts(quiver, [], 1)
    }

    pub fn quiver(&self) -> Quiver {
        self.quiver
    }

    pub fn alpha_check(&self) -> &BTreeMap<i64, i64> {
        &self.alpha_check
    }

    pub fn d_part(&self) -> i64 {
        self.d_part
    }
}

/// `⟨h, x⟩`, with `⟨α_i^∨, Λ_j⟩ = δ_ij`, `⟨∂, δ⟩ = 1` and the other
/// generator pairings zero.
pub fn pair(h: &CoweightVec, x: &WeightVec) -> Result<BigRational> {
    h.quiver.check(&x.quiver)?;
    let classical: i64 = h.alpha_check.iter().map(|(&i, &c)| c * x.coord(i)).sum();
    Ok(rat(classical) + &x.delta * rat(h.d_part))
}

/// `x − ⟨α_i^∨, x⟩ α_i`.
pub fn reflect(i: i64, x: &WeightVec) -> WeightVec {
    let k = x.coord(i);
    if k == 0 {
        return x.clone();
    }
    x - &WeightVec::simple_root(x.quiver, i).scaled(k)
}

/// Level of `x` on each connected component of the quiver.
pub fn component_levels(x: &WeightVec) -> Result<Vec<i64>> {
    Ok(x.quiver
        .components()?
        .iter()
        .map(|c| c.iter().map(|&i| x.coord(i)).sum())
        .collect())
}

/// The dominant weight in the Weyl orbit of `x`.
pub fn canonical_dominant(x: &WeightVec) -> Result<WeightVec> {
    if component_levels(x)?.iter().any(|&l| l <= 0) {
        return Err(Error::NonPositiveLevel);
    }
    let mut cur = x.clone();
    while let Some((&i, _)) = cur.lambda.iter().find(|(_, &c)| c < 0) {
        cur = reflect(i, &cur);
    }
    Ok(cur)
}

pub fn weyl_conjugate(x: &WeightVec, y: &WeightVec) -> Result<bool> {
    x.quiver.check(&y.quiver)?;
    Ok(canonical_dominant(x)? == canonical_dominant(y)?)
}

/// Coefficients of `γ` on the non-affine simple roots.
pub fn classical_root_coefficients(gamma: &WeightVec) -> Result<BTreeMap<i64, i64>> {
    let q = gamma.quiver;
    let verts = q.vertices()?;
    if !gamma.delta.is_zero() {
        return Err(Error::NotInRootLattice);
    }
    let classical: Vec<i64> = verts.iter().copied().filter(|&i| q.affine_coefficient(i) == 0).collect();
    let roots: Vec<WeightVec> = classical.iter().map(|&i| WeightVec::simple_root(q, i)).collect();
    let a: Vec<Vec<BigRational>> = verts
        .iter()
        .map(|&k| roots.iter().map(|r| rat(r.coord(k))).collect())
        .collect();
    let b: Vec<BigRational> = verts.iter().map(|&k| rat(gamma.coord(k))).collect();
    let sol = linalg::solve(&a, &b).ok_or(Error::NotInRootLattice)?;
    let mut out = BTreeMap::new();
    for (&i, c) in classical.iter().zip(sol) {
        if !c.is_integer() {
            return Err(Error::NotInRootLattice);
        }
        let c = c.to_integer().to_i64().ok_or(Error::NotInRootLattice)?;
        if c != 0 {
            out.insert(i, c);
        }
    }
    Ok(out)
}

/// `(x : δ)`.
fn pair_with_delta(x: &WeightVec) -> BigRational {
    rat(x.level()) * x.quiver.delta_share()
}

/// `t_γ(x) = x + (x:δ)γ − (x:γ)δ − ½(x:δ)(γ:γ)δ` for `γ` in the classical
/// root lattice.
pub fn translate(gamma: &WeightVec, x: &WeightVec) -> Result<WeightVec> {
    gamma.quiver.check(&x.quiver)?;
    let coeffs = classical_root_coefficients(gamma)?;
    let x_delta = pair_with_delta(x);
    if !x_delta.is_integer() {
        return Err(Error::NotInRootLattice);
    }
    let k = x_delta.to_integer().to_i64().ok_or(Error::NotInRootLattice)?;
    let x_gamma: i64 = coeffs.iter().map(|(&i, &c)| c * x.coord(i)).sum();
    let gamma_gamma: i64 = coeffs.iter().map(|(&i, &c)| c * gamma.coord(i)).sum();
    let shift = rat(-x_gamma) - rat(k * gamma_gamma) / rat(2);
    Ok((x + &gamma.scaled(k)).plus_delta(&shift))
}

/// `κ*`: circ weights to square weights, `Λ_{i,∘} ↦ Λ_i + Λ_{i−1}`,
/// `δ_∘ ↦ δ`.
pub fn kappa_star(x: &WeightVec) -> Result<WeightVec> {
    if x.quiver.flavor != Flavor::Circ {
        return Err(Error::QuiverMismatch);
    }
    let target = Quiver::square(x.quiver.order);
    let lambda = x.lambda.iter().flat_map(|(&i, &c)| [(i, c), (i - 1, c)]);
    Ok(WeightVec::from_parts(target, lambda, x.delta.clone()))
}

/// `κ`: square coweights to circ coweights, `α_i^∨ ↦ α_{i,∘}^∨ + α_{i+1,∘}^∨`,
/// `∂ ↦ ∂_∘`.
pub fn kappa(h: &CoweightVec) -> Result<CoweightVec> {
    if h.quiver.flavor != Flavor::Square {
        return Err(Error::QuiverMismatch);
    }
    let target = Quiver::circ(h.quiver.order);
    let alpha = h.alpha_check.iter().flat_map(|(&i, &c)| [(i, c), (i + 1, c)]);
    Ok(CoweightVec::from_parts(target, alpha, h.d_part))
}
