//! Integer partitions: construction, conjugation, dominance order, hook
//! lengths, classical statistics and enumeration.
//!
//! Partitions are immutable values with a total order (by weight, then
//! reverse-lexicographic on parts) so they can key sparse maps
//! deterministically. Cells of the Ferrers diagram are indexed 1-based as
//! `(row, column)`, English convention.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::BigInt;

use crate::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
/// The empty sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// Creates a partition, panicking unless parts are weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "partition parts must be weakly decreasing and positive: {parts:?}"
        );
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    /// Builds a partition from arbitrary nonnegative entries by dropping
    /// zeros and sorting decreasingly.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), weight: 0 }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i` (0-based), with zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut conj = Vec::with_capacity(cols);
        for j in 1..=cols as u32 {
            conj.push(self.parts.iter().filter(|&&p| p >= j).count() as u32);
        }
        Partition::new(conj)
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The centralizer order `z = prod j^{d_j} d_j!` where `d_j` is the
    /// multiplicity of the part `j`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1u32);
        for (part, mult) in self.multiplicities() {
            z *= BigInt::from(part).pow(mult);
            for i in 1..=mult {
                z *= BigInt::from(i);
            }
        }
        z
    }

    /// Hook length of every cell, keyed by 1-based `(row, column)`.
    pub fn hook_lengths(&self) -> std::collections::BTreeMap<(u32, u32), u32> {
        let conj = self.conjugate();
        let mut hooks = std::collections::BTreeMap::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - 1 - j as u32;
                let leg = conj.part(j) - 1 - i as u32;
                hooks.insert((i as u32 + 1, j as u32 + 1), arm + leg + 1);
            }
        }
        hooks
    }

    /// The statistic `n(mu) = sum_i (i-1) mu_i` over 1-based rows.
    pub fn n_stat(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u32 * p)
            .sum()
    }

    /// Dominance order: `self <= other` iff all prefix sums compare.
    /// Errors when the weights differ.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(self.to_string(), other.to_string()));
        }
        let rows = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..rows {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Part-wise sum, the shorter partition padded with zeros.
    pub fn add_parts(&self, other: &Partition) -> Partition {
        let rows = self.parts.len().max(other.parts.len());
        let parts = (0..rows).map(|i| self.part(i) + other.part(i)).collect();
        Partition::new(parts)
    }

    /// Drops the largest part; the empty partition maps to itself.
    pub fn remove_largest_part(&self) -> Partition {
        if self.parts.is_empty() {
            Partition::empty()
        } else {
            Partition::new(self.parts[1..].to_vec())
        }
    }
}

impl Ord for Partition {
    /// Total order: weight first, then reverse-lexicographic on parts, so
    /// partitions of `n` sort as `[n], [n-1,1], ..., [1^n]`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracketed text form, e.g. `[3,2,1]` or `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] partition, got {s:?}")))?;
        let trimmed = inner.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in trimmed.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {tok:?} in {s:?}")))?;
            if p == 0 {
                return Err(Error::Parse(format!("zero part in {s:?}")));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing in {s:?}")));
        }
        Ok(Partition::new(parts))
    }
}

/// Convenience constructor for literals in tests and examples.
pub fn ptn(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

/// All partitions of `n` in reverse-lexicographic order:
/// `[n], [n-1,1], ..., [1^n]`. `partitions_of(0)` is `[ [] ]`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// All partitions of `n` with parts at most `max_part`, reverse-lexicographic.
pub fn partitions_bounded(n: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, max_part.min(n), &mut stack, &mut out);
    out
}

fn descend(rest: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        stack.push(p);
        descend(rest - p, p, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(ptn(&[3, 2]).conjugate(), ptn(&[2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(ptn(&[5]).conjugate(), ptn(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn conjugate_is_involutive() {
        for n in 0..=12 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn partitions_of_examples() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let got: Vec<_> = partitions_of(4);
        let want = vec![
            ptn(&[4]),
            ptn(&[3, 1]),
            ptn(&[2, 2]),
            ptn(&[2, 1, 1]),
            ptn(&[1, 1, 1, 1]),
        ];
        assert_eq!(got, want);
        assert_eq!(partitions_of(6).len(), 11);
    }

    /// Enumeration counts against the independent pentagonal-number
    /// recurrence, up to n = 40.
    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        let n_max = 40usize;
        let mut p = vec![0i64; n_max + 1];
        p[0] = 1;
        for n in 1..=n_max {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 as usize > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[n - g1 as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 as usize <= n {
                    acc += sign * p[n - g2 as usize];
                }
                k += 1;
            }
            p[n] = acc;
        }
        for n in 0..=n_max {
            assert_eq!(partitions_of(n as u32).len() as i64, p[n], "p({n})");
        }
    }

    #[test]
    fn z_examples() {
        assert_eq!(ptn(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(ptn(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(ptn(&[3]).z(), BigInt::from(3));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
    }

    #[test]
    fn hook_lengths_examples() {
        let col: Vec<_> = ptn(&[1, 1, 1]).hook_lengths().into_iter().collect();
        assert_eq!(col, vec![((1, 1), 3), ((2, 1), 2), ((3, 1), 1)]);
        let hooked: Vec<_> = ptn(&[2, 1]).hook_lengths().into_iter().collect();
        assert_eq!(hooked, vec![((1, 1), 3), ((1, 2), 1), ((2, 1), 1)]);
        let row: Vec<_> = ptn(&[3]).hook_lengths().into_iter().collect();
        assert_eq!(row, vec![((1, 1), 3), ((1, 2), 2), ((1, 3), 1)]);
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(ptn(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(ptn(&[3]).n_stat(), 0);
        assert_eq!(ptn(&[2, 2, 1]).n_stat(), 4);
    }

    /// n(conjugate(lambda)) = sum_i C(lambda_i, 2).
    #[test]
    fn n_stat_conjugate_identity() {
        for n in 0..=14 {
            for p in partitions_of(n) {
                let lhs = p.conjugate().n_stat();
                let rhs: u32 = p.parts().iter().map(|&x| x * (x - 1) / 2).sum();
                assert_eq!(lhs, rhs, "{p}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(ptn(&[2, 2, 1]).dominance_leq(&ptn(&[3, 2])).unwrap());
        assert!(ptn(&[3, 2]).dominance_leq(&ptn(&[3, 2])).unwrap());
        assert!(!ptn(&[3, 2]).dominance_leq(&ptn(&[2, 2, 1])).unwrap());
        assert!(ptn(&[2, 1]).dominance_leq(&ptn(&[2])).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=10 {
            let ps = partitions_of(n);
            for a in &ps {
                assert!(a.dominance_leq(a).unwrap());
                for b in &ps {
                    let ab = a.dominance_leq(b).unwrap();
                    let ba = b.dominance_leq(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    for c in &ps {
                        if ab && b.dominance_leq(c).unwrap() {
                            assert!(a.dominance_leq(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn add_parts_examples() {
        assert_eq!(ptn(&[2, 1]).add_parts(&ptn(&[3])), ptn(&[5, 1]));
        assert_eq!(Partition::empty().add_parts(&ptn(&[2])), ptn(&[2]));
        assert_eq!(ptn(&[3, 2, 1]).add_parts(&ptn(&[1, 1, 1])), ptn(&[4, 3, 2]));
    }

    #[test]
    fn remove_largest_part_examples() {
        assert_eq!(ptn(&[4, 2, 2]).remove_largest_part(), ptn(&[2, 2]));
        assert_eq!(ptn(&[6, 2, 2]).remove_largest_part(), ptn(&[2, 2]));
        assert_eq!(Partition::empty().remove_largest_part(), Partition::empty());
    }

    #[test]
    fn ordering_matches_enumeration() {
        for n in 0..=9 {
            let ps = partitions_of(n);
            let mut sorted = ps.clone();
            sorted.sort();
            assert_eq!(ps, sorted);
        }
        assert!(ptn(&[2]) < ptn(&[3])); // weight first
    }

    #[test]
    fn text_round_trip() {
        for s in ["[]", "[5]", "[3,2,1]"] {
            let p: Partition = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,2".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn invalid_construction_panics() {
        Partition::new(vec![1, 2]);
    }
}
