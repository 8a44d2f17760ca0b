//! Irreducible characters of the symmetric groups via the
//! Murnaghan-Nakayama border-strip recursion.
//!
//! Values are memoized in a process-global table keyed by `(lambda, mu)`;
//! the table can be persisted between runs (see [`crate::cache`]). Bulk
//! Schur-basis conversions use dense per-degree tables built once and shared.
//!
//! Border strips are manipulated through beta-sets (first-column hook
//! lengths): removing a strip of size `r` replaces a beta number `b` by
//! `b - r`, with sign `(-1)^(number of beta numbers jumped over)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use crate::partition::{partitions_of, Partition};
use crate::{Error, Result};

/// Degrees up to which dense tables are merged into the persistent
/// sparse memo; larger tables stay in memory only.
const MEMO_MERGE_MAX: u32 = 16;

fn global_memo() -> &'static RwLock<HashMap<(Partition, Partition), i64>> {
    static MEMO: OnceLock<RwLock<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn table_cache() -> &'static RwLock<HashMap<u32, Arc<CharTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CharTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The character value `chi^lambda(mu)` of the symmetric group on
/// `|lambda| = |mu|` letters. Errors on a weight mismatch.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.to_string(), mu.to_string()));
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = global_memo().read().unwrap().get(&key) {
        return Ok(v);
    }
    let mut local = HashMap::new();
    let v = mn_rec(lambda, mu.parts(), &mut local);
    global_memo().write().unwrap().insert(key, v);
    Ok(v)
}

/// One full character row: `chi^lambda(mu)` for each class in `classes`,
/// sharing a single local memo. Useful when only a few rows of a large
/// degree are needed.
pub fn char_values_for(lambda: &Partition, classes: &[Partition]) -> Vec<i64> {
    let mut local = HashMap::new();
    classes
        .iter()
        .map(|mu| {
            debug_assert_eq!(lambda.weight(), mu.weight());
            mn_rec(lambda, mu.parts(), &mut local)
        })
        .collect()
}

fn mn_rec(
    shape: &Partition,
    class: &[u32],
    memo: &mut HashMap<(Partition, Vec<u32>), i64>,
) -> i64 {
    if class.is_empty() {
        debug_assert!(shape.is_empty());
        return 1;
    }
    let key = (shape.clone(), class.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = class[0] as u64;
    let rest = &class[1..];
    let betas = to_betas(shape);
    let mut total = 0i64;
    for (i, &b) in betas.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        // Position where target would sit; occupied means no strip here.
        let pos = match betas.binary_search(&target) {
            Ok(_) => continue,
            Err(p) => p,
        };
        let mut next = betas.clone();
        next.remove(i);
        next.insert(pos, target);
        let crossings = i - pos;
        let sub = from_betas(&next);
        let term = mn_rec(&sub, rest, memo);
        if crossings % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    memo.insert(key, total);
    total
}

/// Beta-set of a partition: `lambda_i + (m - i)` for `i = 1..=m` with
/// `m = len(lambda)`, sorted ascending (all values distinct).
fn to_betas(shape: &Partition) -> Vec<u64> {
    let m = shape.len();
    let mut betas: Vec<u64> = (0..m)
        .map(|i| shape.part(i) as u64 + (m - 1 - i) as u64)
        .collect();
    betas.reverse();
    betas
}

fn from_betas(betas: &[u64]) -> Partition {
    let mut parts: Vec<u32> = betas
        .iter()
        .enumerate()
        .filter_map(|(j, &b)| {
            let p = b - j as u64;
            (p > 0).then_some(p as u32)
        })
        .collect();
    parts.reverse();
    Partition::new(parts)
}

/// Dense character table of one symmetric group degree.
pub struct CharTable {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row-major: `values[l * k + m] = chi^{parts[l]}(parts[m])`.
    values: Vec<i64>,
}

impl CharTable {
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lambda_idx: usize, mu_idx: usize) -> i64 {
        self.values[lambda_idx * self.parts.len() + mu_idx]
    }
}

/// The full character table at degree `n`, built once per process and
/// shared. Columns are computed in parallel, each with its own local memo;
/// the global sparse memo is consulted first and, for small degrees,
/// updated with the finished table.
pub fn char_table(n: u32) -> Arc<CharTable> {
    if let Some(t) = table_cache().read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let parts = partitions_of(n);
    let k = parts.len();
    let index: HashMap<Partition, usize> =
        parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    let known: Vec<Option<i64>> = {
        let memo = global_memo().read().unwrap();
        if memo.is_empty() {
            vec![None; k * k]
        } else {
            let mut known = vec![None; k * k];
            for (l, lambda) in parts.iter().enumerate() {
                for (m, mu) in parts.iter().enumerate() {
                    known[l * k + m] = memo.get(&(lambda.clone(), mu.clone())).copied();
                }
            }
            known
        }
    };

    let columns: Vec<Vec<i64>> = (0..k)
        .into_par_iter()
        .map(|m| {
            let mu = &parts[m];
            let mut local = HashMap::new();
            (0..k)
                .map(|l| {
                    known[l * k + m].unwrap_or_else(|| mn_rec(&parts[l], mu.parts(), &mut local))
                })
                .collect()
        })
        .collect();

    let mut values = vec![0i64; k * k];
    for (m, col) in columns.iter().enumerate() {
        for (l, &v) in col.iter().enumerate() {
            values[l * k + m] = v;
        }
    }

    if n <= MEMO_MERGE_MAX {
        let mut memo = global_memo().write().unwrap();
        for (l, lambda) in parts.iter().enumerate() {
            for (m, mu) in parts.iter().enumerate() {
                memo.entry((lambda.clone(), mu.clone()))
                    .or_insert(values[l * k + m]);
            }
        }
    }

    let table = Arc::new(CharTable { parts, index, values });
    let mut cache = table_cache().write().unwrap();
    Arc::clone(cache.entry(n).or_insert(table))
}

/// Snapshot of the persistent memo, sorted for deterministic output.
pub(crate) fn memo_snapshot() -> Vec<(Partition, Partition, i64)> {
    let memo = global_memo().read().unwrap();
    let mut out: Vec<_> = memo
        .iter()
        .map(|((l, m), &v)| (l.clone(), m.clone(), v))
        .collect();
    out.sort();
    out
}

/// Seeds the memo from persisted records (idempotent).
pub(crate) fn memo_seed(records: impl IntoIterator<Item = (Partition, Partition, i64)>) {
    let mut memo = global_memo().write().unwrap();
    for (l, m, v) in records {
        memo.entry((l, m)).or_insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;

    #[test]
    fn trivial_character_is_one() {
        for n in 1..=8 {
            for mu in partitions_of(n) {
                assert_eq!(character(&ptn(&[n]), &mu).unwrap(), 1, "mu={mu}");
            }
        }
    }

    #[test]
    fn sign_character() {
        assert_eq!(character(&ptn(&[1, 1, 1]), &ptn(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(character(&ptn(&[1, 1, 1]), &ptn(&[2, 1])).unwrap(), -1);
        for n in 1..=8 {
            let col = ptn(&vec![1; n as usize]);
            for mu in partitions_of(n) {
                let sign = if (mu.weight() - mu.len() as u32) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&col, &mu).unwrap(), sign, "mu={mu}");
            }
        }
    }

    #[test]
    fn standard_representation_dimension() {
        assert_eq!(character(&ptn(&[2, 1]), &ptn(&[1, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        assert!(character(&ptn(&[2, 1]), &ptn(&[2])).is_err());
    }

    #[test]
    fn dense_table_agrees_with_direct_values() {
        let t = char_table(5);
        for (l, lambda) in t.partitions().iter().enumerate() {
            for (m, mu) in t.partitions().iter().enumerate() {
                assert_eq!(t.value(l, m), character(lambda, mu).unwrap());
            }
        }
    }

    /// Column orthogonality: sum_lambda chi^lambda(mu)^2 = z_mu.
    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let t = char_table(n);
            for (m, mu) in t.partitions().iter().enumerate() {
                let sum: i64 = (0..t.partitions().len())
                    .map(|l| t.value(l, m) * t.value(l, m))
                    .sum();
                assert_eq!(num::BigInt::from(sum), mu.z(), "mu={mu}");
            }
        }
    }

    #[test]
    fn row_values_match() {
        let classes = partitions_of(6);
        let row = char_values_for(&ptn(&[3, 2, 1]), &classes);
        for (mu, v) in classes.iter().zip(&row) {
            assert_eq!(*v, character(&ptn(&[3, 2, 1]), mu).unwrap());
        }
    }
}
