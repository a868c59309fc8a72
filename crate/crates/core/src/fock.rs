//! Charged Fock spaces of level `l`.
//!
//! A configuration fixes the quiver, the charge `s` and a per-component
//! exponent offset; the node `(x, y)` of component `p` has residue
//! `(−q)^{step·(s_p + y − x) + offset_p}`. Basis vectors are multipartitions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cartan::{kappa_star, translate, Flavor, Order, Quiver, WeightVec};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{
    a_value, addable_nodes, core_quotient, multipartitions, partitions, removable_nodes, sigma,
    two_quotient_data, varpi, Multipartition, Node, Partition,
};
use crate::symfunc::{character, mult_p, skew_p, z, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockConfig {
    quiver: Quiver,
    charge: Vec<i64>,
    offset: Vec<i64>,
    gu: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// Chevalley generator: `E` removes a node, `F` adds one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dir {
    E,
    F,
}

impl FockConfig {
    pub fn new(quiver: Quiver, charge: Vec<i64>) -> Self {
        let offset = vec![0; charge.len()];
        FockConfig { quiver, charge, offset, gu: None }
    }

    pub fn with_offset(quiver: Quiver, charge: Vec<i64>, offset: Vec<i64>) -> Result<Self> {
        if offset.len() != charge.len() {
            return Err(Error::LevelMismatch { expected: charge.len(), found: offset.len() });
        }
        Ok(FockConfig { quiver, charge, offset, gu: None })
    }

    /// Level 1 over the circ quiver with charge `d`.
    pub fn circ_level1(order: Order, d: i64) -> Self {
        FockConfig::new(Quiver::circ(order), vec![d])
    }

    /// The level-2 configuration attached to the staircase `Δ_t`, over the
    /// square quiver. Its parameters are `((−q)^{−1−t}, (−q)^t)` for `t` even
    /// and `((−q)^t, (−q)^{−1−t})` for `t` odd. For odd `e` the charge is
    /// `σ_t − ((e+1)/2, 0)`; otherwise it is `σ_t` with offsets `(−1, 0)`.
    pub fn gu(order: Order, t: u32) -> Self {
        let [a, b] = sigma(t);
        let (charge, offset) = match order {
            Order::Finite(e) if e % 2 == 1 => (vec![a - (e as i64 + 1) / 2, b], vec![0, 0]),
            _ => (vec![a, b], vec![-1, 0]),
        };
        FockConfig { quiver: Quiver::square(order), charge, offset, gu: Some(t) }
    }

    pub fn quiver(&self) -> Quiver {
        self.quiver
    }

    pub fn charge(&self) -> &[i64] {
        &self.charge
    }

    pub fn offset(&self) -> &[i64] {
        &self.offset
    }

    pub fn level(&self) -> usize {
        self.charge.len()
    }

    /// `t` when built by [`FockConfig::gu`].
    pub fn gu_parameter(&self) -> Option<u32> {
        self.gu
    }

    /// Unreduced `(−q)`-exponents of the parameters `Q_p`.
    pub fn q_exponents(&self) -> Vec<i64> {
        let step = self.quiver.step();
        self.charge.iter().zip(&self.offset).map(|(s, o)| step * s + o).collect()
    }

    pub fn residue(&self, node: &Node) -> i64 {
        self.quiver.reduce(self.quiver.step() * node.content + self.offset[node.component])
    }

    /// Addable or removable nodes of residue `i`, in canonical order.
    pub fn nodes(&self, mu: &Multipartition, i: i64, kind: NodeKind) -> Vec<Node> {
        let i = self.quiver.reduce(i);
        let mut out = match kind {
            NodeKind::Addable => addable_nodes(mu, &self.charge),
            NodeKind::Removable => removable_nodes(mu, &self.charge),
        };
        out.retain(|n| self.residue(n) == i);
        out.sort_by(Node::canonical_cmp);
        out
    }

    /// Vertices a Chevalley operator can act at on the given vector.
    pub fn vertices(&self) -> Result<Vec<i64>> {
        self.quiver.vertices()
    }

    fn check(&self, mu: &Multipartition) -> Result<()> {
        if mu.level() == self.level() {
            Ok(())
        } else {
            Err(Error::LevelMismatch { expected: self.level(), found: mu.level() })
        }
    }
}

/// A finite rational combination of multipartitions in a fixed configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    config: FockConfig,
    terms: BTreeMap<Multipartition, BigRational>,
}

impl FockVector {
    pub fn zero(config: FockConfig) -> Self {
        FockVector { config, terms: BTreeMap::new() }
    }

    pub fn basis(config: FockConfig, mu: Multipartition) -> Result<Self> {
        config.check(&mu)?;
        let mut v = FockVector::zero(config);
        v.terms.insert(mu, BigRational::one());
        Ok(v)
    }

    pub fn from_terms(
        config: FockConfig,
        terms: impl IntoIterator<Item = (Multipartition, BigRational)>,
    ) -> Result<Self> {
        let mut v = FockVector::zero(config);
        for (mu, c) in terms {
            v.config.check(&mu)?;
            v.add_term(mu, c);
        }
        Ok(v)
    }

    pub fn config(&self) -> &FockConfig {
        &self.config
    }

    pub fn terms(&self) -> &BTreeMap<Multipartition, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, mu: &Multipartition) -> BigRational {
        self.terms.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Multipartition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mu.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        let mut out = FockVector::zero(self.config.clone());
        for (mu, v) in &self.terms {
            out.add_term(mu.clone(), v * c);
        }
        out
    }

    /// `self + c·other`; panics on a configuration mismatch.
    pub fn axpy(&self, c: &BigRational, other: &FockVector) -> Self {
        assert_eq!(self.config, other.config, "configuration mismatch");
        let mut out = self.clone();
        for (mu, v) in &other.terms {
            out.add_term(mu.clone(), v * c);
        }
        out
    }

    fn map_basis(&self, mut f: impl FnMut(&Multipartition, &BigRational, &mut FockVector)) -> Self {
        let mut out = FockVector::zero(self.config.clone());
        for (mu, c) in &self.terms {
            f(mu, c, &mut out);
        }
        out
    }
}

/// `f_i` adds and `e_i` removes one node of residue `i` in every possible way.
pub fn chevalley(dir: Dir, i: i64, x: &FockVector) -> FockVector {
    let cfg = x.config.clone();
    x.map_basis(|mu, c, out| match dir {
        Dir::F => {
            for n in cfg.nodes(mu, i, NodeKind::Addable) {
                out.add_term(mu.with_box(n.component, n.row, 1), c.clone());
            }
        }
        Dir::E => {
            for n in cfg.nodes(mu, i, NodeKind::Removable) {
                out.add_term(mu.with_box(n.component, n.row, -1), c.clone());
            }
        }
    })
}

/// `Δ(s, e) = ½ Σ_j ( s̄_j (1 − s̄_j/e) + s_j (s_j/e − 1) )`, `s̄_j = s_j mod e`.
pub fn delta_charge(s: &[i64], e: u32) -> BigRational {
    let r = |n: i64| BigRational::from_integer(n.into());
    let er = r(e as i64);
    let mut sum = BigRational::zero();
    for &sj in s {
        let bar = r(sj.rem_euclid(e as i64));
        let sj = r(sj);
        sum += &bar * (BigRational::one() - &bar / &er) + &sj * (&sj / &er - BigRational::one());
    }
    sum / r(2)
}

/// Number of nodes of each residue in `mu`.
pub fn residue_counts(mu: &Multipartition, config: &FockConfig) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for (p, lam) in mu.components().iter().enumerate() {
        for (row, col) in lam.boxes() {
            let node = Node { row, col, component: p, content: config.charge[p] + col as i64 - row as i64 };
            *out.entry(config.residue(&node)).or_insert(0) += 1;
        }
    }
    out
}

/// `Λ_Q − Σ_i n_i α_i` with the `δ`-parts dropped.
pub fn weight_classical(mu: &Multipartition, config: &FockConfig) -> WeightVec {
    let q = config.quiver;
    let top = WeightVec::from_parts(q, config.q_exponents().into_iter().map(|j| (j, 1)), BigRational::zero());
    residue_counts(mu, config).into_iter().fold(top, |acc, (i, n)| {
        &acc - &WeightVec::simple_root(q, i).classical().scaled(n)
    })
}

/// The `δ`-normalized weight. Defined at level 1 over the circ quiver, and
/// at level 2 for configurations built by [`FockConfig::gu`] (through `κ*`).
pub fn weight_of(mu: &Multipartition, config: &FockConfig) -> Result<WeightVec> {
    config.check(mu)?;
    let q = config.quiver;
    match (config.level(), q.flavor, config.gu) {
        (1, Flavor::Circ, _) if config.offset[0] == 0 => {
            let counts = residue_counts(mu, config);
            let top = WeightVec::fundamental(q, config.charge[0]);
            let w = counts
                .into_iter()
                .fold(top, |acc, (i, n)| &acc - &WeightVec::simple_root(q, i).scaled(n));
            Ok(match q.order {
                Order::Finite(e) => w.plus_delta(&-delta_charge(&config.charge, e)),
                Order::Infinite => w,
            })
        }
        (2, Flavor::Square, Some(t)) => {
            let lam = varpi(t, mu);
            let inner = weight_of(&lam.into(), &FockConfig::circ_level1(q.order, 0))?;
            kappa_star(&inner)
        }
        _ => Err(Error::NoDeltaNormalization),
    }
}

/// `t_{π_s − Λ_Q^cl}(Λ_Q − Δ(d, e)δ) − w_e(λ) δ`, computed from the `e`-abacus
/// of `(λ, d)`.
pub fn prop_delta_weight(lambda: &Partition, d: i64, e: u32) -> Result<WeightVec> {
    if e == 0 {
        return Err(Error::BadOrder(e));
    }
    let q = Quiver::circ(Order::Finite(e));
    let cq = core_quotient(lambda, d, e as usize);
    // runner p sits at vertex p mod e
    let mut s = vec![0i64; e as usize];
    for (idx, &sp) in cq.charge.iter().enumerate() {
        s[(idx + 1) % e as usize] = sp;
    }
    let ei = e as usize;
    let pi_s = WeightVec::from_parts(
        q,
        (0..ei).map(|c| (c as i64, s[c] - s[(c + 1) % ei])),
        BigRational::zero(),
    );
    let top = WeightVec::fundamental(q, d);
    let gamma = &(&pi_s - &top) + &WeightVec::fundamental(q, 0);
    let w = BigRational::from_integer(BigInt::from(cq.weight()));
    // Λ_Q is taken with its vacuum normalization −Δ(d, e)δ
    Ok(translate(&gamma, &top)?.plus_delta(&-(w + delta_charge(&[d], e))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnnolaDir {
    Level2ToLevel1,
    Level1ToLevel2,
}

/// `|μ⟩ ↦ (−1)^{a(ϖ_t μ)} |ϖ_t μ⟩` from the level-2 configuration at `t` to
/// level 1 with charge 0 over the circ quiver, or its inverse.
pub fn ennola(x: &FockVector, dir: EnnolaDir, t: u32) -> Result<FockVector> {
    let order = x.config.quiver.order;
    match dir {
        EnnolaDir::Level2ToLevel1 => {
            if x.config.gu != Some(t) {
                return Err(Error::NoDeltaNormalization);
            }
            let mut out = FockVector::zero(FockConfig::circ_level1(order, 0));
            for (mu, c) in &x.terms {
                let lam = varpi(t, mu);
                let sign = sign_of(&lam);
                out.add_term(lam.into(), c * sign);
            }
            Ok(out)
        }
        EnnolaDir::Level1ToLevel2 => {
            if x.config != FockConfig::circ_level1(order, 0) {
                return Err(Error::QuiverMismatch);
            }
            let mut out = FockVector::zero(FockConfig::gu(order, t));
            for (lam, c) in &x.terms {
                let lam = &lam.components()[0];
                let (t2, mu) = two_quotient_data(lam);
                if t2 != t {
                    return Err(Error::CoreMismatch { expected: t });
                }
                out.add_term(mu, c * sign_of(lam));
            }
            Ok(out)
        }
    }
}

fn sign_of(lam: &Partition) -> BigRational {
    let s = if a_value(lam).is_multiple_of(2) { 1 } else { -1 };
    BigRational::from_integer(s.into())
}

/// A Heisenberg generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeisenbergOp {
    B(usize),
    BStar(usize),
    A(Partition),
    AStar(Partition),
}

fn order_of(x: &FockVector) -> Result<usize> {
    x.config.quiver.order.finite().map(|e| e as usize).ok_or(Error::InfiniteOrder)
}

/// Applies `f` to component `p` of every term, reading components as Schur
/// functions.
fn componentwise(x: &FockVector, f: impl Fn(&SymFunc) -> SymFunc) -> FockVector {
    x.map_basis(|mu, c, out| {
        for p in 0..mu.level() {
            let image = f(&SymFunc::schur(mu.component(p).clone()));
            for (lam, coeff) in image.terms() {
                let mut comps = mu.components().to_vec();
                comps[p] = lam.clone();
                out.add_term(Multipartition::new(comps), c * coeff);
            }
        }
    })
}

pub fn heisenberg(op: &HeisenbergOp, x: &FockVector) -> Result<FockVector> {
    let e = order_of(x)?;
    Ok(match op {
        HeisenbergOp::B(n) => componentwise(x, |f| mult_p(e * n, f)),
        HeisenbergOp::BStar(n) => componentwise(x, |f| skew_p(e * n, f)),
        HeisenbergOp::A(nu) | HeisenbergOp::AStar(nu) => {
            let star = matches!(op, HeisenbergOp::AStar(_));
            let mut out = FockVector::zero(x.config.clone());
            for mu in partitions(nu.size()) {
                let chi = character(nu, &mu)?;
                if chi == 0 {
                    continue;
                }
                let mut v = x.clone();
                for &part in mu.parts() {
                    let step = if star {
                        HeisenbergOp::BStar(part as usize)
                    } else {
                        HeisenbergOp::B(part as usize)
                    };
                    v = heisenberg(&step, &v)?;
                }
                out = out.axpy(&BigRational::new(chi.into(), z(&mu)), &v);
            }
            out
        }
    })
}

/// `b_n*` computed as the transpose of the matrix of `b_n` between the
/// relevant degree slices; agrees with `HeisenbergOp::BStar`.
pub fn b_star_by_transpose(n: usize, x: &FockVector) -> Result<FockVector> {
    let e = order_of(x)?;
    let l = x.config.level();
    let mut out = FockVector::zero(x.config.clone());
    let mut degrees: Vec<usize> = x.terms.keys().map(Multipartition::size).collect();
    degrees.dedup();
    degrees.sort_unstable();
    degrees.dedup();
    for m in degrees {
        if m < e * n {
            continue;
        }
        for gamma in multipartitions(m - e * n, l) {
            let image = heisenberg(&HeisenbergOp::B(n), &FockVector::basis(x.config.clone(), gamma.clone())?)?;
            let mut c = BigRational::zero();
            for (mu, v) in &image.terms {
                c += v * x.coefficient(mu);
            }
            out.add_term(gamma, c);
        }
    }
    Ok(out)
}

/// Highest-weight kernel dimensions on one degree slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HwDims {
    pub total: usize,
    /// Keyed by `δ`-normalized weight when available, classical weight
    /// otherwise.
    pub per_weight: BTreeMap<WeightVec, usize>,
}

/// Weight used to split a degree slice; `e_i` and `b_m*` respect it.
pub fn grading_weight(mu: &Multipartition, config: &FockConfig) -> WeightVec {
    weight_of(mu, config).unwrap_or_else(|_| weight_classical(mu, config))
}

/// Dimension of `∩_i ker e_i` on the degree-`n` slice, further intersected
/// with `∩_{m ≤ n/e} ker b_m*` when `with_heisenberg` is set.
pub fn hw_dims(config: &FockConfig, n: usize, with_heisenberg: bool) -> Result<HwDims> {
    let e = config.quiver.order.finite().ok_or(Error::InfiniteOrder)? as usize;
    let verts = config.vertices()?;
    let mut groups: BTreeMap<WeightVec, Vec<Multipartition>> = BTreeMap::new();
    for mu in multipartitions(n, config.level()) {
        groups.entry(grading_weight(&mu, config)).or_default().push(mu);
    }
    let mut per_weight = BTreeMap::new();
    let mut total = 0;
    for (w, basis) in groups {
        let mut rows: BTreeMap<(usize, Multipartition), usize> = BTreeMap::new();
        let mut columns: Vec<Vec<(usize, BigInt)>> = Vec::with_capacity(basis.len());
        for mu in &basis {
            let v = FockVector::basis(config.clone(), mu.clone())?;
            let mut images: Vec<FockVector> = verts.iter().map(|&i| chevalley(Dir::E, i, &v)).collect();
            if with_heisenberg {
                for m in 1..=n / e {
                    images.push(heisenberg(&HeisenbergOp::BStar(m), &v)?);
                }
            }
            let mut col = Vec::new();
            for (op, img) in images.iter().enumerate() {
                for (target, c) in &img.terms {
                    let next = rows.len();
                    let r = *rows.entry((op, target.clone())).or_insert(next);
                    col.push((r, c.to_integer()));
                }
            }
            columns.push(col);
        }
        let mut dense = vec![vec![BigInt::zero(); basis.len()]; rows.len()];
        for (j, col) in columns.into_iter().enumerate() {
            for (r, c) in col {
                dense[r][j] = c;
            }
        }
        let dim = basis.len() - linalg::rank(dense, basis.len());
        total += dim;
        if dim > 0 {
            per_weight.insert(w, dim);
        }
    }
    Ok(HwDims { total, per_weight })
}
