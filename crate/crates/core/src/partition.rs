//! Partitions, β-numbers and the abacus.
//!
//! A charged partition `(λ, d)` is stored through its β-set
//! `{λ_u + d + 1 − u : u ≥ 1}`. Cores, quotients, hooks and border strips are
//! all bead moves on that set.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates `parts`; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The staircase `(t, t−1, …, 1)`.
    pub fn staircase(t: u32) -> Self {
        Partition((1..=t).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `i` counted from 0, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        let mut out = vec![0u32; width];
        for &p in &self.0 {
            for slot in out.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Partition(out)
    }

    /// Boxes `(row, col)`, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r as u32 + 1, c)))
    }

    /// No part repeated `e` or more times.
    pub fn is_regular(&self, e: u32) -> bool {
        let e = e as usize;
        e >= 1 && self.0.windows(e).all(|w| w[0] != w[e - 1])
    }

    pub fn is_core(&self, e: u32) -> bool {
        hook_lengths(self).into_iter().all(|h| h % e != 0)
    }

    /// Is this `(t, t−1, …, 1)` for some `t`?
    pub fn staircase_length(&self) -> Option<u32> {
        let t = self.len() as u32;
        (*self == Partition::staircase(t)).then_some(t)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, `-` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::InvalidPartition))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    /// Panics on invalid input; meant for literals.
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }
}

fn hook_lengths(p: &Partition) -> Vec<u32> {
    let conj = p.conjugate();
    p.boxes()
        .map(|(r, c)| p.part(r as usize - 1) - c + conj.part(c as usize - 1) - r + 1)
        .collect()
}

/// An ordered tuple of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition(components)
    }

    /// `l` empty components.
    pub fn empty(level: usize) -> Self {
        Multipartition(vec![Partition::empty(); level])
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, p: usize) -> &Partition {
        &self.0[p]
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }

    /// Adds (`delta = 1`) or removes (`delta = -1`) the box at the end of row
    /// `row` (1-based) of component `p`. The caller guarantees the result is
    /// a partition.
    pub(crate) fn with_box(&self, p: usize, row: u32, delta: i32) -> Self {
        let mut comps = self.0.clone();
        let mut parts = comps[p].0.clone();
        let r = row as usize - 1;
        if r == parts.len() {
            parts.push(0);
        }
        parts[r] = (parts[r] as i64 + delta as i64) as u32;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        comps[p] = Partition(parts);
        Multipartition(comps)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl From<Partition> for Multipartition {
    fn from(p: Partition) -> Self {
        Multipartition(vec![p])
    }
}

/// Box of a multipartition, or an addable slot next to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Node {
    pub row: u32,
    pub col: u32,
    /// Component index, starting at 0.
    pub component: usize,
    /// Charged content `s_p + col − row`.
    pub content: i64,
}

impl Node {
    /// The canonical order: larger content first, then smaller component.
    pub fn canonical_cmp(&self, other: &Node) -> Ordering {
        other
            .content
            .cmp(&self.content)
            .then(self.component.cmp(&other.component))
    }
}

/// Addable nodes of every component, unsorted.
pub fn addable_nodes(mu: &Multipartition, charge: &[i64]) -> Vec<Node> {
    let mut out = Vec::new();
    for (p, lam) in mu.components().iter().enumerate() {
        for r in 0..=lam.len() {
            if r == 0 || lam.part(r - 1) > lam.part(r) {
                let row = r as u32 + 1;
                let col = lam.part(r) + 1;
                out.push(Node { row, col, component: p, content: charge[p] + col as i64 - row as i64 });
            }
        }
    }
    out
}

/// Removable nodes of every component, unsorted.
pub fn removable_nodes(mu: &Multipartition, charge: &[i64]) -> Vec<Node> {
    let mut out = Vec::new();
    for (p, lam) in mu.components().iter().enumerate() {
        for r in 0..lam.len() {
            if lam.part(r) > lam.part(r + 1) {
                let row = r as u32 + 1;
                let col = lam.part(r);
                out.push(Node { row, col, component: p, content: charge[p] + col as i64 - row as i64 });
            }
        }
    }
    out
}

/// The first `k` β-numbers of a charged partition. Below the window every
/// integer up to `charge − k` is a bead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargedBetaWindow {
    pub charge: i64,
    pub beads: Vec<i64>,
}

pub fn beta_window(lambda: &Partition, d: i64, k: usize) -> Result<ChargedBetaWindow> {
    if k < lambda.len() {
        return Err(Error::WindowTooSmall { len: k, needed: lambda.len() });
    }
    let beads = (1..=k)
        .map(|u| lambda.part(u - 1) as i64 + d + 1 - u as i64)
        .collect();
    Ok(ChargedBetaWindow { charge: d, beads })
}

pub fn partition_of_window(w: &ChargedBetaWindow) -> Result<(Partition, i64)> {
    if w.beads.windows(2).any(|p| p[0] <= p[1]) {
        return Err(Error::InvalidWindow);
    }
    let d = w.charge;
    let mut parts = Vec::with_capacity(w.beads.len());
    for (i, &b) in w.beads.iter().enumerate() {
        let part = b - d - 1 + (i as i64 + 1);
        if part < 0 {
            return Err(Error::InvalidWindow);
        }
        parts.push(part as u32);
    }
    Ok((Partition::new(parts)?, d))
}

/// A β-set: the beads in `top` (strictly decreasing, all above `floor`)
/// together with every integer `≤ floor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Abacus {
    top: Vec<i64>,
    floor: i64,
}

impl Abacus {
    pub(crate) fn new(lambda: &Partition, d: i64) -> Self {
        let k = lambda.len();
        let top = (1..=k)
            .map(|u| lambda.part(u - 1) as i64 + d + 1 - u as i64)
            .collect();
        Abacus { top, floor: d - k as i64 }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.top.last() == Some(&(self.floor + 1)) {
            self.top.pop();
            self.floor += 1;
        }
        self
    }

    pub(crate) fn contains(&self, x: i64) -> bool {
        x <= self.floor || self.top.binary_search_by(|b| x.cmp(b)).is_ok()
    }

    /// Beads above `bound`, in decreasing order; `bound` may lie below the floor.
    pub(crate) fn beads_above(&self, bound: i64) -> Vec<i64> {
        let mut out: Vec<i64> = self.top.iter().copied().filter(|&b| b > bound).collect();
        out.extend((bound + 1..=self.floor).rev());
        out
    }

    pub(crate) fn floor(&self) -> i64 {
        self.floor
    }

    fn from_parts(mut beads: Vec<i64>, floor: i64) -> Self {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        Abacus { top: beads, floor }.normalized()
    }

    pub(crate) fn to_partition(&self) -> (Partition, i64) {
        let k = self.top.len() as i64;
        let d = self.floor + k;
        let parts = self
            .top
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - d + i as i64) as u32)
            .collect();
        (Partition(parts), d)
    }

    /// Moves the bead at `from` to the empty position `to`.
    pub(crate) fn moved(&self, from: i64, to: i64) -> Self {
        debug_assert!(self.contains(from) && !self.contains(to));
        let bound = from.min(to).min(self.floor + 1) - 1;
        let mut beads = self.beads_above(bound);
        beads.retain(|&b| b != from);
        beads.push(to);
        Abacus::from_parts(beads, bound)
    }

    /// Beads strictly between `a` and `b`.
    pub(crate) fn beads_between(&self, a: i64, b: i64) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        (lo + 1..hi).filter(|&x| self.contains(x)).count()
    }
}

/// Result of splitting a charged partition along `l` runners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Multipartition,
    /// `s_1, …, s_l` with `Σ s_p = d`.
    pub charge: Vec<i64>,
}

impl CoreQuotient {
    /// Number of `l`-hooks removed to reach the core.
    pub fn weight(&self) -> usize {
        self.quotient.size()
    }
}

/// `τ_l`: runner `p` (1-based) collects the beads congruent to `p` modulo `l`,
/// rescaled by `x ↦ (x − p)/l + 1`.
pub fn core_quotient(lambda: &Partition, d: i64, l: usize) -> CoreQuotient {
    assert!(l >= 1, "need at least one runner");
    let ab = Abacus::new(lambda, d);
    let li = l as i64;
    let mut quotient = Vec::with_capacity(l);
    let mut charge = Vec::with_capacity(l);
    for p in 1..=li {
        let tail = ab.floor - (ab.floor - p).rem_euclid(li);
        let scale = |x: i64| (x - p) / li + 1;
        let beads = ab
            .top
            .iter()
            .filter(|&&x| (x - p).rem_euclid(li) == 0)
            .map(|&x| scale(x))
            .collect();
        let (mu, s) = Abacus::from_parts(beads, scale(tail)).to_partition();
        quotient.push(mu);
        charge.push(s);
    }
    let (core, _) = tau_inv(&Multipartition::empty(l), &charge).expect("charge length matches");
    CoreQuotient { core, quotient: Multipartition(quotient), charge }
}

/// Inverse of [`core_quotient`]: rebuilds `(λ, d)` from quotient and charge.
pub fn tau_inv(quotient: &Multipartition, charge: &[i64]) -> Result<(Partition, i64)> {
    let l = quotient.level();
    if charge.len() != l || l == 0 {
        return Err(Error::LevelMismatch { expected: l, found: charge.len() });
    }
    let li = l as i64;
    let runners: Vec<Abacus> = quotient
        .components()
        .iter()
        .zip(charge)
        .map(|(mu, &s)| Abacus::new(mu, s))
        .collect();
    let lift = |p: i64, y: i64| p - li + li * y;
    let floor = runners
        .iter()
        .enumerate()
        .map(|(i, r)| lift(i as i64 + 1, r.floor))
        .min()
        .expect("nonempty");
    let mut beads = Vec::new();
    for (i, r) in runners.iter().enumerate() {
        let p = i as i64 + 1;
        // smallest y with lift(p, y) > floor
        let y_min = (floor - p + li).div_euclid(li) + 1;
        beads.extend(r.beads_above(y_min - 1).into_iter().map(|y| lift(p, y)));
    }
    Ok(Abacus::from_parts(beads, floor).to_partition())
}

/// The `e`-core by repeatedly sliding beads down `e` places, with the number
/// of hooks removed.
pub fn strip_hooks(lambda: &Partition, e: u32) -> (Partition, usize) {
    let e = e as i64;
    let mut ab = Abacus::new(lambda, 0);
    let mut count = 0;
    loop {
        let mv = ab.top.iter().copied().find(|&x| !ab.contains(x - e));
        match mv {
            Some(x) => {
                ab = ab.moved(x, x - e);
                count += 1;
            }
            None => return (ab.to_partition().0, count),
        }
    }
}

/// `σ_t`, the 2-runner charge of the staircase `Δ_t`.
pub fn sigma(t: u32) -> [i64; 2] {
    let t = t as i64;
    if t % 2 == 0 {
        [-t / 2, t / 2]
    } else {
        [(1 + t) / 2, -(1 + t) / 2]
    }
}

/// The partition with 2-core `Δ_t` and 2-quotient `mu`.
pub fn varpi(t: u32, mu: &Multipartition) -> Partition {
    assert_eq!(mu.level(), 2, "varpi takes a bipartition");
    tau_inv(mu, &sigma(t)).expect("level 2").0
}

/// Recovers `t` and the 2-quotient, inverting [`varpi`].
pub fn two_quotient_data(lambda: &Partition) -> (u32, Multipartition) {
    let cq = core_quotient(lambda, 0, 2);
    let t = cq.core.staircase_length().expect("2-cores are staircases");
    debug_assert_eq!(cq.charge, sigma(t).to_vec());
    (t, cq.quotient)
}

/// `n(λ) = Σ (i−1) λ_i`.
pub fn a_value(lambda: &Partition) -> u64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as u64 * p as u64)
        .sum()
}

/// `(−1)^{a(λ)}` as `±1`.
pub fn ennola_sign(lambda: &Partition) -> i32 {
    if a_value(lambda).is_multiple_of(2) { 1 } else { -1 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Dominance {
    pub fn reverse(self) -> Self {
        match self {
            Dominance::Less => Dominance::Greater,
            Dominance::Greater => Dominance::Less,
            other => other,
        }
    }
}

/// Compares prefix sums.
pub fn dominance(lambda: &Partition, mu: &Partition) -> Result<Dominance> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let (mut ge, mut le) = (true, true);
    let (mut a, mut b) = (0u64, 0u64);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.part(i) as u64;
        b += mu.part(i) as u64;
        ge &= a >= b;
        le &= a <= b;
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All `l`-multipartitions of `n`.
pub fn multipartitions(n: usize, l: usize) -> Vec<Multipartition> {
    if l == 0 {
        return if n == 0 { vec![Multipartition(Vec::new())] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        let heads = partitions(first);
        let tails = multipartitions(n - first, l - 1);
        for h in &heads {
            for t in &tails {
                let mut comps = Vec::with_capacity(l);
                comps.push(h.clone());
                comps.extend(t.0.iter().cloned());
                out.push(Multipartition(comps));
            }
        }
    }
    out
}
