//! Integer partitions, hook lengths and β-sets.
//!
//! A partition is stored in canonical form: weakly decreasing positive parts,
//! no trailing zeros, with `∅` the only zero-part partition. Its β-set is the
//! set of first-column hook lengths `{λ_i + m - i}`.
//!
//! Core and distinct-parts tests come in two independent flavours, one
//! scanning the hook grid and one using the β-set, so the two can be
//! cross-checked.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{self, check_coprime};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct Partition {
    parts: Vec<u64>,
}

#[derive(Deserialize)]
struct RawPartition {
    parts: Vec<u64>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::new(raw.parts)
    }
}

impl Partition {
    /// Validates weak decrease and strips trailing zeros.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> Result<u64> {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &p| numbers::add(acc, p, "partition size"))
    }

    /// Length of column `j` (1-based): the number of parts `>= j`.
    fn column_len(&self, j: u64) -> u64 {
        self.parts.iter().take_while(|&&p| p >= j).count() as u64
    }

    /// Hook length of every box; row `i` has `λ_i` entries.
    pub fn hook_lengths(&self) -> Vec<Vec<u64>> {
        let conjugate: Vec<u64> = (1..=self.parts.first().copied().unwrap_or(0))
            .map(|j| self.column_len(j))
            .collect();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                let i = i as u64 + 1;
                (1..=row)
                    .map(|j| row - j + conjugate[(j - 1) as usize] - i + 1)
                    .collect()
            })
            .collect()
    }

    pub fn beta_set(&self) -> BetaSet {
        let m = self.parts.len() as u64;
        let hooks = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + m - (i as u64 + 1))
            .collect();
        BetaSet { hooks }
    }

    /// `t`-core test by scanning the hook grid.
    pub fn is_core(&self, t: u64) -> bool {
        assert!(t >= 1, "core order must be positive");
        self.hook_lengths().iter().flatten().all(|&h| h % t != 0)
    }

    pub fn is_simultaneous_core(&self, s: u64, t: u64) -> bool {
        self.is_core(s) && self.is_core(t)
    }

    /// True iff all parts are distinct.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A finite set of distinct positive integers, kept sorted descending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBetaSet")]
pub struct BetaSet {
    hooks: Vec<u64>,
}

#[derive(Deserialize)]
struct RawBetaSet {
    hooks: Vec<u64>,
}

impl TryFrom<RawBetaSet> for BetaSet {
    type Error = Error;

    fn try_from(raw: RawBetaSet) -> Result<Self> {
        BetaSet::new(raw.hooks)
    }
}

impl BetaSet {
    pub fn new(hooks: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut hooks: Vec<u64> = hooks.into_iter().collect();
        if hooks.contains(&0) {
            return Err(Error::InvalidBetaSet("elements must be positive".into()));
        }
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = hooks.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidBetaSet(format!("{} appears twice", w[0])));
        }
        Ok(BetaSet { hooks })
    }

    /// Elements in descending order.
    pub fn hooks(&self) -> &[u64] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn contains(&self, h: u64) -> bool {
        self.hooks.binary_search_by(|x| h.cmp(x)).is_ok()
    }

    /// The unique partition with this β-set: `(h_1 - (m-1), ..., h_{m-1} - 1, h_m)`.
    pub fn to_partition(&self) -> Partition {
        let m = self.hooks.len() as u64;
        let mut parts: Vec<u64> = self
            .hooks
            .iter()
            .enumerate()
            .map(|(i, &h)| h - (m - 1 - i as u64))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// `Σ h - C(m, 2)`, the size of the corresponding partition.
    pub fn size(&self) -> Result<u64> {
        let sum = self
            .hooks
            .iter()
            .try_fold(0u64, |acc, &h| numbers::add(acc, h, "β-set sum"))?;
        numbers::sub(sum, numbers::choose2(self.hooks.len() as u64)?, "β-set size")
    }

    /// β-set core criterion: `h >= t` in the set implies `h - t` in the set.
    pub fn is_core(&self, t: u64) -> bool {
        assert!(t >= 1, "core order must be positive");
        self.hooks
            .iter()
            .filter(|&&h| h >= t)
            .all(|&h| h > t && self.contains(h - t))
    }

    /// No two elements differ by exactly one.
    pub fn has_no_consecutive(&self) -> bool {
        self.hooks.windows(2).all(|w| w[0] - w[1] != 1)
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, h) in self.hooks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str("}")
    }
}

/// Every `(s, t)`-core with distinct parts and size at most `size_cap`,
/// sorted lexicographically by parts.
///
/// This is a partition-level oracle that never touches β-sets or posets.
/// Partitions are grown by stacking a strictly longer row on top of the
/// current diagram. A new top row leaves every existing hook unchanged, so a
/// row containing a hook divisible by `s` or `t` kills the whole subtree.
/// Parts never exceed the Frobenius number `st - s - t`.
pub fn brute_force_distinct_cores(s: u64, t: u64, size_cap: u64) -> Result<Vec<Partition>> {
    check_coprime(s, t)?;
    let max_part = numbers::frobenius_number(s, t)?.unwrap_or(0);
    let mut found = Vec::new();
    // Rows listed bottom (shortest) first.
    let mut rows: Vec<u64> = Vec::new();
    grow(s, t, max_part, size_cap, 0, &mut rows, &mut found);
    found.sort();
    Ok(found)
}

fn grow(s: u64, t: u64, max_part: u64, remaining: u64, top: u64, rows: &mut Vec<u64>, found: &mut Vec<Partition>) {
    found.push(Partition {
        parts: rows.iter().rev().copied().collect(),
    });
    for row in (top + 1)..=max_part.min(remaining) {
        // Hook of box j in the new top row: arm (row - j) + leg + 1 where the
        // leg counts existing rows of length >= j.
        let ok = (1..=row).all(|j| {
            let leg = rows.iter().filter(|&&r| r >= j).count() as u64;
            let h = row - j + leg + 1;
            !h.is_multiple_of(s) && !h.is_multiple_of(t)
        });
        if ok {
            rows.push(row);
            grow(s, t, max_part, remaining - row, row, rows, found);
            rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(p(&[5, 3, 3, 1]).beta_set().hooks(), &[8, 5, 4, 1]);
        assert!(Partition::empty().beta_set().is_empty());
        assert_eq!(p(&[9, 5, 4, 2, 1]).beta_set().hooks(), &[13, 8, 6, 3, 1]);
    }

    #[test]
    fn partition_of_beta_examples() {
        let b = BetaSet::new([8, 5, 4, 1]).unwrap();
        assert_eq!(b.to_partition(), p(&[5, 3, 3, 1]));
        assert_eq!(BetaSet::default().to_partition(), Partition::empty());
        assert_eq!(BetaSet::new([1, 4]).unwrap().to_partition(), p(&[3, 1]));
    }

    #[test]
    fn trailing_zero_parts_are_stripped() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(BetaSet::new([3, 1]).unwrap().to_partition(), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn sizes_from_beta() {
        assert_eq!(BetaSet::new([8, 5, 4, 1]).unwrap().size().unwrap(), 12);
        assert_eq!(BetaSet::default().size().unwrap(), 0);
        assert_eq!(BetaSet::new([1, 3, 6, 8, 13]).unwrap().size().unwrap(), 21);
    }

    #[test]
    fn hook_grids() {
        assert_eq!(
            p(&[5, 3, 3, 1]).hook_lengths(),
            vec![vec![8, 6, 5, 2, 1], vec![5, 3, 2], vec![4, 2, 1], vec![1]]
        );
        assert_eq!(p(&[1]).hook_lengths(), vec![vec![1]]);
        assert_eq!(p(&[2, 1]).hook_lengths(), vec![vec![3, 1], vec![1]]);
        assert_eq!(p(&[3, 1]).hook_lengths(), vec![vec![4, 2, 1], vec![1]]);
    }

    #[test]
    fn core_examples() {
        assert!(!p(&[2, 1]).is_core(3));
        assert!(!p(&[2, 1]).beta_set().is_core(3));
        assert!(Partition::empty().is_core(7));
        assert!(p(&[3, 1]).is_core(3) && p(&[3, 1]).is_core(5));
        assert!(p(&[3, 1]).beta_set().is_core(3) && p(&[3, 1]).beta_set().is_core(5));
        assert!(p(&[3, 1]).is_simultaneous_core(3, 5));
        assert!(!p(&[2, 1]).is_simultaneous_core(3, 5));
        assert!(Partition::empty().is_simultaneous_core(13, 15));
    }

    #[test]
    fn distinct_parts_examples() {
        assert!(!p(&[5, 3, 3, 1]).has_distinct_parts());
        assert!(!p(&[5, 3, 3, 1]).beta_set().has_no_consecutive());
        assert!(Partition::empty().has_distinct_parts());
        assert!(p(&[9, 5, 4, 2, 1]).has_distinct_parts());
        assert!(p(&[9, 5, 4, 2, 1]).beta_set().has_no_consecutive());
    }

    #[test]
    fn brute_force_small_cases() {
        let got = brute_force_distinct_cores(3, 5, 10).unwrap();
        assert_eq!(got, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[3, 1])]);
        assert_eq!(brute_force_distinct_cores(3, 5, 0).unwrap(), vec![Partition::empty()]);
        let got = brute_force_distinct_cores(5, 7, 21).unwrap();
        assert_eq!(got.len(), 16);
        assert_eq!(got.iter().map(|x| x.size().unwrap()).max(), Some(21));
        assert!(brute_force_distinct_cores(4, 6, 10).is_err());
    }

    #[test]
    fn brute_force_matches_plain_filter() {
        // Plain filter over all distinct-part partitions of bounded size.
        fn all_distinct(max_part: u64, cap: u64) -> Vec<Partition> {
            fn rec(prev: u64, rem: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
                out.push(Partition { parts: cur.clone() });
                for a in 1..prev.min(rem + 1) {
                    cur.push(a);
                    rec(a, rem - a, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            rec(max_part + 1, cap, &mut Vec::new(), &mut out);
            out
        }
        for &(s, t, cap) in &[(3, 5, 20), (5, 7, 30), (3, 7, 25), (4, 7, 40)] {
            let f = numbers::frobenius_number(s, t).unwrap().unwrap();
            let mut want: Vec<Partition> = all_distinct(f, cap)
                .into_iter()
                .filter(|x| x.is_simultaneous_core(s, t))
                .collect();
            want.sort();
            assert_eq!(brute_force_distinct_cores(s, t, cap).unwrap(), want, "({s},{t})");
        }
    }

    #[test]
    fn json_encodings() {
        let part = p(&[5, 3, 3, 1]);
        let text = serde_json::to_string(&part).unwrap();
        assert_eq!(text, r#"{"parts":[5,3,3,1]}"#);
        assert_eq!(serde_json::from_str::<Partition>(&text).unwrap(), part);
        let beta = part.beta_set();
        let text = serde_json::to_string(&beta).unwrap();
        assert_eq!(text, r#"{"hooks":[8,5,4,1]}"#);
        let back: BetaSet = serde_json::from_str(r#"{"hooks":[1,4,5,8]}"#).unwrap();
        assert_eq!(back, beta);
        assert!(serde_json::from_str::<Partition>(r#"{"parts":[1,3]}"#).is_err());
        assert!(serde_json::from_str::<BetaSet>(r#"{"hooks":[2,2]}"#).is_err());
    }
}
