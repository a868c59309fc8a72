//! Unipotent characters, series and blocks of finite unitary groups.
//!
//! Characters are labelled by partitions. `e` is the order of `−q` modulo
//! the characteristic; blocks are pairs (core tuple, weight) read off the
//! `e`-abacus with runner `p` placed at vertex `p mod e`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::cartan::{canonical_dominant, kappa_star, Order, WeightVec};
use crate::crystal::{full_graph, is_highest_weight, root_of};
use crate::error::{Error, Result};
use crate::fock::{weight_of, FockConfig};
use crate::partition::{
    core_quotient, strip_hooks, tau_inv, two_quotient_data, varpi, Abacus, Multipartition,
    Partition,
};
use crate::crystal::hw_vertices;

/// A formal integer combination of character labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharCombo {
    terms: BTreeMap<Partition, i64>,
}

impl CharCombo {
    pub fn single(lambda: Partition) -> Self {
        let mut c = CharCombo::default();
        c.add(lambda, 1);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut c = CharCombo::default();
        for (k, v) in terms {
            c.add(k, v);
        }
        c
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, lambda: Partition, c: i64) {
        let slot = self.terms.entry(lambda.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&lambda);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcDir {
    /// Remove a 2-hook.
    E,
    /// Add a 2-hook.
    F,
}

/// Partitions reachable by adding (`F`) or removing (`E`) one 2-hook.
pub fn domino_moves(lambda: &Partition, dir: HcDir) -> Vec<Partition> {
    let ab = Abacus::new(lambda, 0);
    let shift = if dir == HcDir::F { 2 } else { -2 };
    ab.beads_above(ab.floor() - 2)
        .into_iter()
        .filter(|&x| !ab.contains(x + shift))
        .map(|x| ab.moved(x, x + shift).to_partition().0)
        .collect()
}

/// Harish-Chandra induction (`F`) or restriction (`E`) on characters.
pub fn hc_map(dir: HcDir, x: &CharCombo) -> CharCombo {
    let mut out = CharCombo::default();
    for (lam, &c) in &x.terms {
        for mu in domino_moves(lam, dir) {
            out.add(mu, c);
        }
    }
    out
}

fn triangular_root(n: usize) -> Option<u32> {
    let mut t = 0u32;
    while (t * (t + 1) / 2) < n as u32 {
        t += 1;
    }
    (t * (t + 1) / 2 == n as u32).then_some(t)
}

/// Cuspidal unipotent characters of rank `n`.
pub fn cuspidal_chars(n: usize) -> Vec<Partition> {
    triangular_root(n).map(Partition::staircase).into_iter().collect()
}

/// The ordinary series of `E_λ`: the staircase length `t` of its 2-core and
/// its 2-quotient.
pub fn series_of_char(lambda: &Partition) -> (u32, Multipartition) {
    two_quotient_data(lambda)
}

/// A unipotent block: a core tuple `(s_0, …, s_{e−1})` with sum 0 and a weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    e: u32,
    core: Vec<i64>,
    w: usize,
}

impl Block {
    pub fn new(e: u32, core: Vec<i64>, w: usize) -> Result<Self> {
        check_order(e)?;
        if core.len() != e as usize || core.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidBlock);
        }
        Ok(Block { e, core, w })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `s_c` at vertex `c`, for `c = 0..e`.
    pub fn core(&self) -> &[i64] {
        &self.core
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// The `e`-core as a partition.
    pub fn core_partition(&self) -> Partition {
        let e = self.e as usize;
        let runners: Vec<i64> = (1..=e).map(|p| self.core[p % e]).collect();
        tau_inv(&Multipartition::empty(e), &runners).expect("e runners").0
    }

    /// Rank of the groups the block lives in.
    pub fn rank(&self) -> usize {
        self.core_partition().size() + self.e as usize * self.w
    }
}

fn check_order(e: u32) -> Result<()> {
    if e >= 3 { Ok(()) } else { Err(Error::BadOrder(e)) }
}

pub fn block_of(lambda: &Partition, e: u32) -> Result<Block> {
    check_order(e)?;
    let eu = e as usize;
    let cq = core_quotient(lambda, 0, eu);
    let mut core = vec![0; eu];
    for (idx, &s) in cq.charge.iter().enumerate() {
        core[(idx + 1) % eu] = s;
    }
    Ok(Block { e, core, w: cq.weight() })
}

/// `κ*` of the level-1 weight of `λ` at charge 0.
pub fn char_weight(lambda: &Partition, e: u32) -> Result<WeightVec> {
    check_order(e)?;
    let w = weight_of(&lambda.clone().into(), &FockConfig::circ_level1(Order::Finite(e), 0))?;
    kappa_star(&w)
}

/// The weight `κ*(ω_core) − w δ` attached to a block.
pub fn block_degree(b: &Block) -> Result<WeightVec> {
    let core = char_weight(&b.core_partition(), b.e)?;
    let shift = BigRational::from_integer((b.w as i64).into());
    Ok(core.plus_delta(&-shift))
}

fn same_e(b1: &Block, b2: &Block) -> Result<()> {
    if b1.e == b2.e { Ok(()) } else { Err(Error::MixedOrder) }
}

/// 2-core of the characters in the block.
pub fn two_core(b: &Block) -> Partition {
    strip_hooks(&b.core_partition(), 2).0
}

/// Whether the block degrees lie in one affine Weyl orbit. For even `e` the
/// comparison happens inside one ordinary series, so the 2-cores must agree.
pub fn weyl_equivalent(b1: &Block, b2: &Block) -> Result<bool> {
    same_e(b1, b2)?;
    if b1.e.is_multiple_of(2) && two_core(b1) != two_core(b2) {
        return Ok(false);
    }
    Ok(canonical_dominant(&block_degree(b1)?)? == canonical_dominant(&block_degree(b2)?)?)
}

/// Same 2-core and same weight.
pub fn orbit_even(b1: &Block, b2: &Block) -> Result<bool> {
    same_e(b1, b2)?;
    Ok(b1.w == b2.w && two_core(b1) == two_core(b2))
}

/// `ρ_c = −((c − 1) mod e)`: the sum of the classical fundamental weights
/// with vertex 0 affine, read on core tuples.
fn rho(e: usize) -> Vec<i64> {
    let e = e as i64;
    (0..e).map(|c| -(c - 1).rem_euclid(e)).collect()
}

/// Same weight, and `s − σ•u ∈ 2Z^e` for some permutation `σ`, where
/// `σ•u = σ(u + ρ) − ρ`.
pub fn orbit_odd(b1: &Block, b2: &Block) -> Result<bool> {
    same_e(b1, b2)?;
    if b1.w != b2.w {
        return Ok(false);
    }
    let r = rho(b1.e as usize);
    let odd_count = |s: &[i64]| s.iter().zip(&r).filter(|(a, b)| (*a + *b).rem_euclid(2) == 1).count();
    Ok(odd_count(&b1.core) == odd_count(&b2.core))
}

/// Brute force over all permutations; the reference for [`orbit_odd`].
pub fn orbit_odd_by_permutations(b1: &Block, b2: &Block) -> Result<bool> {
    same_e(b1, b2)?;
    if b1.w != b2.w {
        return Ok(false);
    }
    let e = b1.e as usize;
    let r = rho(e);
    let shifted: Vec<i64> = b2.core.iter().zip(&r).map(|(u, p)| u + p).collect();
    let mut perm: Vec<usize> = (0..e).collect();
    loop {
        let ok = (0..e).all(|c| (b1.core[c] - (shifted[perm[c]] - r[c])).rem_euclid(2) == 0);
        if ok {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Pairs `(a, b)` of vertices that the goodness inequality `s_a ≤ s_b + w − 1`
/// constrains. For even `e` these are `(i, i+2)` with `i + 2 < e`; for odd
/// `e` they are consecutive steps `q^{2k} → q^{2k+2}` for `k = 0..e−2`.
pub fn good_pairs(e: u32) -> Vec<(usize, usize)> {
    let e = e as usize;
    if e.is_multiple_of(2) {
        (0..e.saturating_sub(2)).map(|i| (i, i + 2)).collect()
    } else {
        (0..e - 1).map(|k| ((2 * k) % e, (2 * k + 2) % e)).collect()
    }
}

pub fn is_good(b: &Block) -> bool {
    let w = b.w as i64;
    good_pairs(b.e).into_iter().all(|(a, c)| b.core[a] < b.core[c] + w)
}

/// A good block in the Weyl orbit of `b`.
///
/// Even `e`: each parity class gets a strictly increasing sequence with the
/// same class sum, which keeps the 2-core. Odd `e`: the tuple is shifted by
/// even amounts until it strictly increases along the `q²`-chain, keeping
/// the total at 0.
pub fn good_representative(b: &Block) -> Block {
    let e = b.e as usize;
    let mut t = vec![0i64; e];
    if e.is_multiple_of(2) {
        let m = (e / 2) as i64;
        for parity in 0..2 {
            let sum: i64 = (0..m).map(|k| b.core[(2 * k + parity) as usize]).sum();
            let base = m * (m - 1) / 2;
            let (q, r) = ((sum - base).div_euclid(m), (sum - base).rem_euclid(m));
            for k in 0..m {
                t[(2 * k + parity) as usize] = k + q + (k >= m - r) as i64;
            }
        }
    } else {
        let spread = b.core.iter().max().expect("e ≥ 3") - b.core.iter().min().expect("e ≥ 3");
        let step = spread + 1;
        let mid = (e as i64 - 1) / 2;
        for k in 0..e {
            let c = (2 * k) % e;
            t[c] = b.core[c] + 2 * step * (k as i64 - mid);
        }
    }
    Block { e: b.e, core: t, w: b.w }
}

fn check_odd(e: u32) -> Result<()> {
    check_order(e)?;
    if e % 2 == 1 { Ok(()) } else { Err(Error::EvenOrder) }
}

/// Staircase lengths `t` whose series can reach rank `n`, with the matching
/// bipartition size.
fn series_slots(n: usize) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    let mut t = 0u32;
    loop {
        let tri = (t * (t + 1) / 2) as usize;
        if tri > n {
            return out;
        }
        if (n - tri).is_multiple_of(2) {
            out.push((t, (n - tri) / 2));
        }
        t += 1;
    }
}

/// Labels of the weakly cuspidal simple unipotent modules of rank `n`.
pub fn weakly_cuspidal(n: usize, e: u32) -> Result<Vec<Partition>> {
    check_odd(e)?;
    let mut out = Vec::new();
    for (t, m) in series_slots(n) {
        let cfg = FockConfig::gu(Order::Finite(e), t);
        out.extend(hw_vertices(&cfg, m)?.iter().map(|mu| varpi(t, mu)));
    }
    out.sort();
    Ok(out)
}

/// Is `λ` the label of a weakly cuspidal module?
pub fn is_weakly_cuspidal(lambda: &Partition, e: u32) -> Result<bool> {
    check_odd(e)?;
    let (t, mu) = two_quotient_data(lambda);
    is_highest_weight(&FockConfig::gu(Order::Finite(e), t), &mu)
}

/// The weak series of `λ`: its weakly cuspidal root and the vertices
/// `i_1, …, i_k` of the `ẽ` path from `λ` up to it.
pub fn weak_series_of(lambda: &Partition, e: u32) -> Result<(Partition, Vec<i64>)> {
    check_odd(e)?;
    let (t, mu) = two_quotient_data(lambda);
    let (root, path) = root_of(&FockConfig::gu(Order::Finite(e), t), &mu)?;
    Ok((varpi(t, &root), path))
}

/// The weak Harish-Chandra branching graph on partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingGraph {
    pub e: u32,
    pub vertices: BTreeSet<Partition>,
    pub edges: BTreeSet<(Partition, i64, Partition)>,
}

impl BranchingGraph {
    pub fn roots(&self) -> Vec<Partition> {
        let targets: BTreeSet<&Partition> = self.edges.iter().map(|(_, _, t)| t).collect();
        self.vertices.iter().filter(|v| !targets.contains(v)).cloned().collect()
    }
}

/// All simple unipotent modules of rank at most `max_n`, with the crystal
/// edges transported through `ϖ_t`.
pub fn branching_graph(max_n: usize, e: u32) -> Result<BranchingGraph> {
    check_odd(e)?;
    let mut g = BranchingGraph { e, vertices: BTreeSet::new(), edges: BTreeSet::new() };
    let mut t = 0u32;
    while (t * (t + 1) / 2) as usize <= max_n {
        let cfg = FockConfig::gu(Order::Finite(e), t);
        let sub = full_graph(&cfg, (max_n - (t * (t + 1) / 2) as usize) / 2)?;
        g.vertices.extend(sub.vertices.iter().map(|mu| varpi(t, mu)));
        g.edges.extend(sub.edges.iter().map(|(a, i, b)| (varpi(t, a), *i, varpi(t, b))));
        t += 1;
    }
    Ok(g)
}

/// Parameters of the endomorphism algebra of the induced weakly cuspidal
/// module: `Q = ((−q)^a, (−q)^b)` and quadratic parameter `q²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeParams {
    pub t: u32,
    pub q_exponents: [i64; 2],
    /// Exponent of `q` in the quadratic parameter.
    pub quadratic_exponent: u32,
    pub m: usize,
}

pub fn hecke_params(lambda: &Partition, e: u32, m: usize) -> Result<HeckeParams> {
    if !is_weakly_cuspidal(lambda, e)? {
        return Err(Error::NotWeaklyCuspidal);
    }
    let core = core_quotient(lambda, 0, e as usize).core;
    let t = core.staircase_length().ok_or(Error::NotWeaklyCuspidal)?;
    let ti = t as i64;
    let q_exponents = if t % 2 == 0 { [-1 - ti, ti] } else { [ti, -1 - ti] };
    Ok(HeckeParams { t, q_exponents, quadratic_exponent: 2, m })
}

type BoxKey = (i64, usize);

fn charged_boxes(mu: &Multipartition, charge: &[i64]) -> Vec<BoxKey> {
    mu.components()
        .iter()
        .enumerate()
        .flat_map(|(p, lam)| lam.boxes().map(move |(r, c)| (charge[p] + c as i64 - r as i64, p)))
        .collect()
}

/// Is there a bijection `Y(μ) → Y(γ)` with every box `≥` its image?
fn box_pairing(
    mu: &Multipartition,
    gamma: &Multipartition,
    charge: &[i64],
    geq: impl Fn(&BoxKey, &BoxKey) -> bool,
) -> Result<bool> {
    if mu.size() != gamma.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: gamma.size() });
    }
    for m in [mu, gamma] {
        if m.level() != charge.len() {
            return Err(Error::LevelMismatch { expected: charge.len(), found: m.level() });
        }
    }
    let (a, b) = (charged_boxes(mu, charge), charged_boxes(gamma, charge));
    let adj: Vec<Vec<usize>> = a.iter().map(|x| (0..b.len()).filter(|&j| geq(x, &b[j])).collect()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; b.len()];
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    Ok((0..a.len()).all(|u| augment(u, &adj, &mut vec![false; b.len()], &mut owner)))
}

/// Whether `μ ≥ γ`: the boxes can be paired so that each box of `μ` is `≥`
/// its partner in `γ`, where `A ≥ B` iff `ct(A) < ct(B)`, or equal contents
/// and `p(A) ≥ p(B)`.
pub fn dg_less(mu: &Multipartition, gamma: &Multipartition, charge: &[i64]) -> Result<bool> {
    box_pairing(mu, gamma, charge, |x, y| x.0 < y.0 || (x.0 == y.0 && x.1 >= y.1))
}

/// As [`dg_less`] but comparing shifted contents `ct(A) − e·p(A)/l`
/// (components numbered from 1): `A ≥ B` iff the shifted content of `A` is
/// at most that of `B`.
pub fn dg_less_shifted(mu: &Multipartition, gamma: &Multipartition, charge: &[i64], e: u32) -> Result<bool> {
    let (l, e) = (charge.len() as i64, e as i64);
    let key = |x: &BoxKey| l * x.0 - e * (x.1 as i64 + 1);
    box_pairing(mu, gamma, charge, |x, y| key(x) <= key(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{dominance, multipartitions, partitions, Dominance};

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn hc_examples() {
        let f = hc_map(HcDir::F, &CharCombo::single(p(&[])));
        assert_eq!(f, CharCombo::from_terms([(p(&[2]), 1), (p(&[1, 1]), 1)]));
        assert!(hc_map(HcDir::E, &CharCombo::single(p(&[2, 1]))).is_zero());
        assert_eq!(hc_map(HcDir::E, &CharCombo::single(p(&[2]))), CharCombo::single(p(&[])));
    }

    #[test]
    fn cuspidal_examples() {
        assert_eq!(cuspidal_chars(3), vec![p(&[2, 1])]);
        assert!(cuspidal_chars(4).is_empty());
        assert_eq!(cuspidal_chars(0), vec![p(&[])]);
        let (t, mu) = series_of_char(&p(&[2]));
        assert_eq!((t, mu), (0, Multipartition::new(vec![p(&[]), p(&[1])])));
    }

    #[test]
    fn block_examples() {
        let b = block_of(&p(&[]), 3).unwrap();
        assert_eq!((b.core_partition(), b.w()), (p(&[]), 0));
        let b = block_of(&p(&[4, 1]), 3).unwrap();
        assert_eq!((b.core_partition(), b.w()), (p(&[1, 1]), 1));
        let b = block_of(&p(&[2, 1]), 3).unwrap();
        assert_eq!((b.core_partition(), b.w()), (p(&[]), 1));
        assert_eq!(block_of(&p(&[1]), 2), Err(Error::BadOrder(2)));
    }

    #[test]
    fn degree_matches_char_weight() {
        for e in 3..=5 {
            for n in 0..=8 {
                for lam in partitions(n) {
                    let b = block_of(&lam, e).unwrap();
                    assert_eq!(block_degree(&b).unwrap(), char_weight(&lam, e).unwrap(), "{lam} e={e}");
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let b = block_of(&p(&[3]), 3).unwrap();
        assert!(weyl_equivalent(&b, &b).unwrap());
        let b1 = block_of(&p(&[1]), 3).unwrap();
        let b2 = block_of(&p(&[2, 1]), 3).unwrap();
        assert!(!weyl_equivalent(&b1, &b2).unwrap());
        let b4 = block_of(&p(&[1]), 4).unwrap();
        assert_eq!(weyl_equivalent(&b1, &b4), Err(Error::MixedOrder));
    }

    #[test]
    fn orbit_odd_counting_matches_brute_force() {
        for e in [3u32, 5] {
            let blocks: BTreeSet<Block> = (0..=8).flat_map(partitions).map(|l| block_of(&l, e).unwrap()).collect();
            for a in &blocks {
                for b in &blocks {
                    assert_eq!(orbit_odd(a, b).unwrap(), orbit_odd_by_permutations(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn good_examples() {
        assert!(is_good(&Block::new(4, vec![0; 4], 1).unwrap()));
        assert!(!is_good(&Block::new(4, vec![1, 0, 0, -1], 1).unwrap()));
        for e in 3..=6 {
            for n in 0..=8 {
                for lam in partitions(n) {
                    let b = block_of(&lam, e).unwrap();
                    let g = good_representative(&b);
                    assert!(is_good(&g), "{lam} e={e}");
                    assert!(weyl_equivalent(&b, &g).unwrap(), "{lam} e={e}");
                }
            }
        }
    }

    #[test]
    fn weak_cuspidal_examples() {
        assert_eq!(weakly_cuspidal(0, 3).unwrap(), vec![p(&[])]);
        assert_eq!(weakly_cuspidal(1, 3).unwrap(), vec![p(&[1])]);
        assert!(weakly_cuspidal(3, 3).unwrap().contains(&p(&[2, 1])));
        assert_eq!(weakly_cuspidal(3, 4), Err(Error::EvenOrder));
        for n in 2..=8 {
            assert!(!weakly_cuspidal(n, 3).unwrap().contains(&p(&[n as u32])));
        }
    }

    #[test]
    fn hecke_examples() {
        let h = hecke_params(&p(&[]), 3, 0).unwrap();
        assert_eq!((h.t, h.q_exponents, h.quadratic_exponent), (0, [-1, 0], 2));
        let h = hecke_params(&p(&[1]), 3, 0).unwrap();
        assert_eq!((h.t, h.q_exponents), (1, [1, -2]));
        assert_eq!(hecke_params(&p(&[2]), 3, 0), Err(Error::NotWeaklyCuspidal));
    }

    #[test]
    fn branching_examples() {
        let g = branching_graph(1, 3).unwrap();
        assert_eq!(g.vertices, [p(&[]), p(&[1])].into_iter().collect());
        assert!(g.edges.is_empty());
        let g = branching_graph(6, 3).unwrap();
        for (a, _, b) in &g.edges {
            assert!(domino_moves(a, HcDir::F).contains(b));
        }
    }

    #[test]
    fn dg_examples() {
        let s = [0, 0];
        for mu in multipartitions(3, 2) {
            assert!(dg_less(&mu, &mu, &s).unwrap());
        }
        let a = Multipartition::new(vec![p(&[1]), p(&[])]);
        let b = Multipartition::new(vec![p(&[]), p(&[1])]);
        assert!(dg_less(&b, &a, &s).unwrap());
        assert!(!dg_less(&a, &b, &s).unwrap());
        let a = Multipartition::new(vec![p(&[1]), p(&[1])]);
        let b = Multipartition::new(vec![p(&[2]), p(&[])]);
        assert!(!dg_less(&b, &a, &s).unwrap());
        assert!(dg_less(&a, &b, &s).unwrap());
        assert_eq!(dg_less(&Multipartition::empty(2), &a, &s), Err(Error::SizeMismatch { left: 0, right: 2 }));
    }

    #[test]
    fn shifted_order_reverses_dominance() {
        for e in [3u32, 5, 7] {
            for t in 0..=3 {
                let cfg = FockConfig::gu(Order::Finite(e), t);
                for n in 0..=4 {
                    let all = multipartitions(n, 2);
                    for mu in &all {
                        for g in &all {
                            if mu != g && dg_less_shifted(mu, g, cfg.charge(), e).unwrap() {
                                let d = dominance(&varpi(t, g), &varpi(t, mu)).unwrap();
                                assert_eq!(d, Dominance::Greater, "{mu} {g} t={t} e={e}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unshifted_order_does_not_reverse_dominance() {
        let cfg = FockConfig::gu(Order::Finite(3), 0);
        let mu = Multipartition::new(vec![p(&[2]), p(&[])]);
        let g = Multipartition::new(vec![p(&[1]), p(&[1])]);
        assert!(dg_less(&mu, &g, cfg.charge()).unwrap());
        assert_ne!(dominance(&varpi(0, &g), &varpi(0, &mu)).unwrap(), Dominance::Greater);
    }
}
