//! Crystal operators on charged multipartitions.
//!
//! The `i`-signature lists addable (`+`) and removable (`−`) nodes of
//! residue `i` in the canonical node order: larger charged content first,
//! ties broken by smaller component. Adjacent pairs `+ −` cancel until the
//! word reads `−…− +…+`. `f̃_i` adds the node under the leftmost surviving
//! `+`; `ẽ_i` removes the node under the rightmost surviving `−`.
//!
//! At level 1 with charge 0 this produces the `e`-regular partitions as the
//! component of the empty partition.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::cartan::Order;
use crate::error::{Error, Result};
use crate::fock::{FockConfig, NodeKind};
use crate::partition::{multipartitions, Multipartition, Node};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrystalDir {
    ETilde,
    FTilde,
}

/// Which adjacent pair cancels. Only the default is exposed; the other one
/// is kept so tests can show it fails the oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Cancel {
    PlusMinus,
    #[allow(dead_code)]
    MinusPlus,
}

/// The reduced signature: surviving removable and addable nodes, each in
/// canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub minus: Vec<Node>,
    pub plus: Vec<Node>,
}

pub(crate) fn reduced_signature(config: &FockConfig, mu: &Multipartition, i: i64, rule: Cancel) -> Signature {
    let mut word: Vec<(Node, bool)> = config
        .nodes(mu, i, NodeKind::Addable)
        .into_iter()
        .map(|n| (n, true))
        .chain(config.nodes(mu, i, NodeKind::Removable).into_iter().map(|n| (n, false)))
        .collect();
    word.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let mut stack: Vec<(Node, bool)> = Vec::with_capacity(word.len());
    for (node, plus) in word {
        let cancels = match (stack.last(), rule) {
            (Some(&(_, true)), Cancel::PlusMinus) => !plus,
            (Some(&(_, false)), Cancel::MinusPlus) => plus,
            _ => false,
        };
        if cancels {
            stack.pop();
        } else {
            stack.push((node, plus));
        }
    }
    let mut sig = Signature::default();
    for (node, plus) in stack {
        if plus {
            sig.plus.push(node);
        } else {
            sig.minus.push(node);
        }
    }
    sig
}

pub fn signature(config: &FockConfig, mu: &Multipartition, i: i64) -> Signature {
    reduced_signature(config, mu, i, Cancel::PlusMinus)
}

pub(crate) fn apply(
    config: &FockConfig,
    dir: CrystalDir,
    i: i64,
    mu: &Multipartition,
    rule: Cancel,
) -> Option<Multipartition> {
    let sig = reduced_signature(config, mu, i, rule);
    let pick = match (dir, rule) {
        (CrystalDir::FTilde, Cancel::PlusMinus) => sig.plus.first(),
        (CrystalDir::FTilde, Cancel::MinusPlus) => sig.plus.last(),
        (CrystalDir::ETilde, Cancel::PlusMinus) => sig.minus.last(),
        (CrystalDir::ETilde, Cancel::MinusPlus) => sig.minus.first(),
    }?;
    let delta = if dir == CrystalDir::FTilde { 1 } else { -1 };
    Some(mu.with_box(pick.component, pick.row, delta))
}

/// `ẽ_i` or `f̃_i`; `None` when the operator kills the vertex.
pub fn crystal_op(config: &FockConfig, dir: CrystalDir, i: i64, mu: &Multipartition) -> Option<Multipartition> {
    apply(config, dir, i, mu, Cancel::PlusMinus)
}

pub fn f_tilde(config: &FockConfig, i: i64, mu: &Multipartition) -> Option<Multipartition> {
    crystal_op(config, CrystalDir::FTilde, i, mu)
}

pub fn e_tilde(config: &FockConfig, i: i64, mu: &Multipartition) -> Option<Multipartition> {
    crystal_op(config, CrystalDir::ETilde, i, mu)
}

/// Number of surviving `−`.
pub fn eps(config: &FockConfig, i: i64, mu: &Multipartition) -> usize {
    signature(config, mu, i).minus.len()
}

/// Number of surviving `+`.
pub fn phi(config: &FockConfig, i: i64, mu: &Multipartition) -> usize {
    signature(config, mu, i).plus.len()
}

pub fn is_highest_weight(config: &FockConfig, mu: &Multipartition) -> Result<bool> {
    Ok(config.vertices()?.into_iter().all(|i| eps(config, i, mu) == 0))
}

/// Follows `ẽ` operators to the highest-weight vertex above `mu`, returning
/// it together with the path of vertices.
pub fn root_of(config: &FockConfig, mu: &Multipartition) -> Result<(Multipartition, Vec<i64>)> {
    let verts = config.vertices()?;
    let mut cur = mu.clone();
    let mut path = Vec::new();
    'outer: loop {
        for &i in &verts {
            if let Some(up) = e_tilde(config, i, &cur) {
                cur = up;
                path.push(i);
                continue 'outer;
            }
        }
        return Ok((cur, path));
    }
}

/// Vertices and `i`-coloured `f̃` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub config: FockConfig,
    pub vertices: BTreeSet<Multipartition>,
    /// `(source, i, target)` with `f̃_i(source) = target`.
    pub edges: BTreeSet<(Multipartition, i64, Multipartition)>,
}

impl CrystalGraph {
    /// Vertices with no incoming edge.
    pub fn roots(&self) -> Vec<Multipartition> {
        let targets: BTreeSet<&Multipartition> = self.edges.iter().map(|(_, _, t)| t).collect();
        self.vertices.iter().filter(|v| !targets.contains(v)).cloned().collect()
    }

    /// Connected components, each sorted, listed by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<Multipartition>> {
        let verts: Vec<&Multipartition> = self.vertices.iter().collect();
        let index = |m: &Multipartition| verts.binary_search(&m).expect("vertex");
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (s, _, t) in &self.edges {
            let (a, b) = (find(&mut parent, index(s)), find(&mut parent, index(t)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<Multipartition>> = Vec::new();
        let mut slot = alloc::vec![usize::MAX; verts.len()];
        for (k, v) in verts.iter().enumerate() {
            let r = find(&mut parent, k);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push((*v).clone());
        }
        groups
    }
}

/// Closure of `start` under all `f̃_i`, up to total size `max_n`.
pub fn component(config: &FockConfig, start: &Multipartition, max_n: usize) -> Result<CrystalGraph> {
    let verts = config.vertices()?;
    let mut graph = CrystalGraph { config: config.clone(), vertices: BTreeSet::new(), edges: BTreeSet::new() };
    let mut queue = VecDeque::new();
    graph.vertices.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(mu) = queue.pop_front() {
        if mu.size() >= max_n {
            continue;
        }
        for &i in &verts {
            if let Some(next) = f_tilde(config, i, &mu) {
                graph.edges.insert((mu.clone(), i, next.clone()));
                if graph.vertices.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(graph)
}

/// Every multipartition of size at most `max_n` with all `f̃` edges between
/// them.
pub fn full_graph(config: &FockConfig, max_n: usize) -> Result<CrystalGraph> {
    let verts = config.vertices()?;
    let mut graph = CrystalGraph { config: config.clone(), vertices: BTreeSet::new(), edges: BTreeSet::new() };
    for n in 0..=max_n {
        for mu in multipartitions(n, config.level()) {
            if n < max_n {
                for &i in &verts {
                    if let Some(next) = f_tilde(config, i, &mu) {
                        graph.edges.insert((mu.clone(), i, next));
                    }
                }
            }
            graph.vertices.insert(mu);
        }
    }
    Ok(graph)
}

/// Size-`n` multipartitions killed by every `ẽ_i`.
pub fn hw_vertices(config: &FockConfig, n: usize) -> Result<Vec<Multipartition>> {
    if config.quiver().order == Order::Infinite {
        return Err(Error::InfiniteOrder);
    }
    let mut out = Vec::new();
    for mu in multipartitions(n, config.level()) {
        if is_highest_weight(config, &mu)? {
            out.push(mu);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::WeightVec;
    use crate::fock::weight_classical;
    use crate::partition::{partitions, Partition};
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    fn lvl1(e: u32) -> FockConfig {
        FockConfig::circ_level1(Order::Finite(e), 0)
    }

    #[test]
    fn operator_examples() {
        let cfg = lvl1(3);
        let empty = Multipartition::empty(1);
        let one: Multipartition = p(&[1]).into();
        assert_eq!(f_tilde(&cfg, 0, &empty), Some(one.clone()));
        assert_eq!(e_tilde(&cfg, 0, &one), Some(empty));
    }

    #[test]
    fn component_examples() {
        let g = component(&lvl1(2), &Multipartition::empty(1), 3).unwrap();
        let want: BTreeSet<Multipartition> =
            [p(&[]), p(&[1]), p(&[2]), p(&[2, 1]), p(&[3])].into_iter().map(Multipartition::from).collect();
        assert_eq!(g.vertices, want);
        let g = component(&lvl1(3), &Multipartition::empty(1), 2).unwrap();
        let want: BTreeSet<Multipartition> =
            [p(&[]), p(&[1]), p(&[2]), p(&[1, 1])].into_iter().map(Multipartition::from).collect();
        assert_eq!(g.vertices, want);
        let g = component(&lvl1(3), &p(&[2, 1]).into(), 0).unwrap();
        assert_eq!(g.vertices.len(), 1);
    }

    #[test]
    fn hw_examples() {
        let cfg = lvl1(3);
        assert_eq!(hw_vertices(&cfg, 0).unwrap(), vec![Multipartition::empty(1)]);
        assert!(hw_vertices(&cfg, 1).unwrap().is_empty());
    }

    fn regular_component(rule: Cancel, e: u32, n: usize) -> BTreeSet<Multipartition> {
        let cfg = lvl1(e);
        let mut seen = BTreeSet::new();
        let mut frontier = vec![Multipartition::empty(1)];
        seen.insert(Multipartition::empty(1));
        while let Some(mu) = frontier.pop() {
            if mu.size() == n {
                continue;
            }
            for i in 0..e as i64 {
                if let Some(next) = apply(&cfg, CrystalDir::FTilde, i, &mu, rule) {
                    if seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn empty_component_is_regular_partitions() {
        for e in 2..=4u32 {
            let got = regular_component(Cancel::PlusMinus, e, 6);
            let want: BTreeSet<Multipartition> = (0..=6)
                .flat_map(partitions)
                .filter(|l| l.is_regular(e))
                .map(Multipartition::from)
                .collect();
            assert_eq!(got, want);
            let other = regular_component(Cancel::MinusPlus, e, 6);
            assert_ne!(other, want);
        }
    }

    #[test]
    fn axioms_on_small_graph() {
        let cfg = FockConfig::gu(Order::Finite(3), 1);
        let g = full_graph(&cfg, 5).unwrap();
        for (s, i, t) in &g.edges {
            assert_eq!(e_tilde(&cfg, *i, t).as_ref(), Some(s));
            assert_eq!(eps(&cfg, *i, t), eps(&cfg, *i, s) + 1);
            assert_eq!(phi(&cfg, *i, t) + 1, phi(&cfg, *i, s));
            let shift = &weight_classical(s, &cfg) - &weight_classical(t, &cfg);
            assert_eq!(shift, WeightVec::simple_root(cfg.quiver(), *i).classical());
        }
        for v in &g.vertices {
            for i in 0..3 {
                let wt = weight_classical(v, &cfg).coord(i);
                assert_eq!(phi(&cfg, i, v) as i64 - eps(&cfg, i, v) as i64, wt);
                let mut k = 0;
                let mut cur = v.clone();
                while let Some(up) = e_tilde(&cfg, i, &cur) {
                    cur = up;
                    k += 1;
                }
                assert_eq!(k, eps(&cfg, i, v));
            }
        }
    }
}
