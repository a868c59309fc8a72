//! Independent reference computations shared by the integration suites.
#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use unifock::fock::{FockConfig, FockVector};
use unifock::partition::{Multipartition, Partition};
use unifock::BigRational;

pub fn p(parts: &[u32]) -> Partition {
    Partition::from(parts)
}

pub fn mp(parts: &[&[u32]]) -> Multipartition {
    Multipartition::new(parts.iter().map(|x| p(x)).collect())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn basis(cfg: &FockConfig, mu: &Multipartition) -> FockVector {
    FockVector::basis(cfg.clone(), mu.clone()).expect("level matches")
}

pub fn minus(a: &FockVector, b: &FockVector) -> FockVector {
    a.axpy(&int(-1), b)
}

/// `p(n)` by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut table = vec![0i64; n + 1];
    table[0] = 1;
    for m in 1..=n as i64 {
        let mut acc = 0i64;
        for k in 1.. {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > m {
                break;
            }
            acc += sign * table[(m - g1) as usize];
            if g2 <= m {
                acc += sign * table[(m - g2) as usize];
            }
        }
        table[m as usize] = acc;
    }
    table[n] as u64
}

/// Partitions of `n` with every multiplicity below `e`, counted by a
/// knapsack over part sizes.
pub fn regular_count(n: usize, e: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        let mut next = vec![0u64; n + 1];
        for (total, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for mult in 0..e {
                let t = total + mult * part;
                if t > n {
                    break;
                }
                next[t] += w;
            }
        }
        ways = next;
    }
    ways[n]
}

/// `Σ_j C(λ'_j, 2)`, computed from columns.
pub fn n_by_columns(lambda: &Partition) -> u64 {
    let first = lambda.parts().first().copied().unwrap_or(0);
    (1..=first)
        .map(|c| {
            let h = lambda.parts().iter().filter(|&&x| x >= c).count() as u64;
            h * h.saturating_sub(1) / 2
        })
        .sum()
}

/// Decides `μ ≥ γ` by trying every bijection between the box lists.
pub fn pairing_by_permutations(mu: &Multipartition, gamma: &Multipartition, charge: &[i64]) -> bool {
    let boxes = |m: &Multipartition| -> Vec<(i64, usize)> {
        let mut out = Vec::new();
        for (k, lam) in m.components().iter().enumerate() {
            for (r, c) in lam.boxes() {
                out.push((charge[k] + c as i64 - r as i64, k));
            }
        }
        out
    };
    let (a, b) = (boxes(mu), boxes(gamma));
    let geq = |x: &(i64, usize), y: &(i64, usize)| x.0 < y.0 || (x.0 == y.0 && x.1 >= y.1);
    let mut idx: Vec<usize> = (0..b.len()).collect();
    fn rec(k: usize, idx: &mut Vec<usize>, check: &dyn Fn(&[usize]) -> bool) -> bool {
        if k == idx.len() {
            return check(idx);
        }
        for j in k..idx.len() {
            idx.swap(k, j);
            if rec(k + 1, idx, check) {
                return true;
            }
            idx.swap(k, j);
        }
        false
    }
    let check = |perm: &[usize]| perm.iter().enumerate().all(|(n, &j)| geq(&a[n], &b[j]));
    rec(0, &mut idx, &check)
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(name)
}

/// Compares `content` with the frozen file, or rewrites the file when
/// `UNIFOCK_BLESS` is set.
pub fn check_golden(name: &str, content: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("UNIFOCK_BLESS").is_some() {
        fs::create_dir_all(path.parent().expect("parent")).map_err(|e| e.to_string())?;
        return fs::write(&path, content).map_err(|e| e.to_string());
    }
    let frozen = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if frozen == content {
        return Ok(());
    }
    let line = frozen
        .lines()
        .zip(content.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| frozen.lines().count().min(content.lines().count()));
    Err(format!("{name} differs from golden at line {}", line + 1))
}
