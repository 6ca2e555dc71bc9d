//! The gap posets `P_{s,t}` and the truncated posets `M_{2k+1,2k+3}`.
//!
//! `P_{s,t}` lives on the gaps of the numerical semigroup `⟨s, t⟩`; `x`
//! covers `y` exactly when `x - y ∈ {s, t}`. `M_{2k+1,2k+3}` is obtained from
//! `P_{2k+1,2k+3}` by deleting every element above (or equal to) `2k + 2`.
//!
//! Elements are indexed in increasing numeric order. Since every cover goes
//! from a larger to a smaller integer, index order is a linear extension,
//! which both rank computation and ideal enumeration rely on.

mod classify;
mod export;
mod ideal;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers;

pub(crate) use classify::classify_with;
pub use classify::{classify_ideal, IdealClass};
pub use export::PosetJson;
pub use ideal::{IdealMembers, Ideals, OrderIdeal, MAX_ENUM_ELEMENTS};

/// Identifies which poset an ideal belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PosetId {
    pub s: u64,
    pub t: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncate_k: Option<u64>,
}

impl PosetId {
    pub fn full(s: u64, t: u64) -> Self {
        PosetId { s, t, truncate_k: None }
    }

    pub fn truncated(k: u64) -> Self {
        PosetId {
            s: 2 * k + 1,
            t: 2 * k + 3,
            truncate_k: Some(k),
        }
    }
}

impl fmt::Display for PosetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = if self.truncate_k.is_some() { 'M' } else { 'P' };
        write!(f, "{letter}_{{{},{}}}", self.s, self.t)
    }
}

type Bits = Vec<u64>;

fn bit_set(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn bit_get(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

/// A finite poset on positive integers with the `{s, t}`-difference cover rule.
#[derive(Clone, Debug)]
pub struct GapPoset {
    id: PosetId,
    elements: Vec<u64>,
    // value -> index + 1, 0 when absent
    slot: Vec<u32>,
    covers: Vec<Vec<usize>>,
    ranks: Vec<u32>,
    // down[i] holds every j with elements[j] ⪯ elements[i]
    down: Vec<Bits>,
}

impl PartialEq for GapPoset {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.elements == other.elements && self.covers == other.covers
    }
}

impl Eq for GapPoset {}

impl GapPoset {
    /// Builds `P_{s,t}` for coprime, distinct, positive `s` and `t`.
    pub fn new(s: u64, t: u64) -> Result<Self> {
        let gaps = numbers::semigroup_gaps(s, t)?;
        Ok(Self::from_elements(PosetId::full(s, t), gaps))
    }

    /// Builds `M_{2k+1,2k+3}`.
    ///
    /// The element set is computed twice, once by deleting the up-set of
    /// `2k + 2` from `P_{2k+1,2k+3}` and once from the closed-form
    /// description `T_k ∪ T'_k`; a disagreement is an internal error.
    pub fn truncated(k: u64) -> Result<Self> {
        let s = numbers::add(numbers::mul(2, k, "truncated poset")?, 1, "truncated poset")?;
        let full = GapPoset::new(s, s + 2)?;
        let survivors: Vec<u64> = match full.index_of(s + 1) {
            Some(root) => full
                .elements
                .iter()
                .enumerate()
                .filter(|&(i, _)| !bit_get(&full.down[i], root))
                .map(|(_, &v)| v)
                .collect(),
            None => full.elements.clone(),
        };
        let (odd, even) = t_decomposition(k);
        let mut closed_form: Vec<u64> = odd.into_iter().chain(even).collect();
        closed_form.sort_unstable();
        if closed_form != survivors {
            return Err(Error::Internal(format!(
                "M_{{{},{}}}: up-set removal gives {:?}, T_k ∪ T'_k gives {:?}",
                s,
                s + 2,
                survivors,
                closed_form
            )));
        }
        Ok(Self::from_elements(PosetId::truncated(k), survivors))
    }

    fn from_elements(id: PosetId, elements: Vec<u64>) -> Self {
        let n = elements.len();
        let max = elements.last().copied().unwrap_or(0) as usize;
        let mut slot = vec![0u32; max + 1];
        for (i, &v) in elements.iter().enumerate() {
            slot[v as usize] = i as u32 + 1;
        }
        let lookup = |v: u64| -> Option<usize> { slot.get(v as usize).and_then(|&x| (x > 0).then(|| x as usize - 1)) };
        let mut covers = Vec::with_capacity(n);
        for &x in &elements {
            let mut below: Vec<usize> = [id.t, id.s]
                .iter()
                .filter_map(|&d| x.checked_sub(d).and_then(lookup))
                .collect();
            below.sort_unstable();
            covers.push(below);
        }
        let words = n.div_ceil(64).max(1);
        let mut ranks = vec![0u32; n];
        let mut down: Vec<Bits> = Vec::with_capacity(n);
        for i in 0..n {
            let mut bits = vec![0u64; words];
            bit_set(&mut bits, i);
            for &c in &covers[i] {
                ranks[i] = ranks[i].max(ranks[c] + 1);
                for (w, &cw) in bits.iter_mut().zip(&down[c]) {
                    *w |= cw;
                }
            }
            down.push(bits);
        }
        GapPoset {
            id,
            elements,
            slot,
            covers,
            ranks,
            down,
        }
    }

    pub fn id(&self) -> PosetId {
        self.id
    }

    pub fn s(&self) -> u64 {
        self.id.s
    }

    pub fn t(&self) -> u64 {
        self.id.t
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.index_of(v).is_some()
    }

    pub(crate) fn index_of(&self, v: u64) -> Option<usize> {
        let x = *self.slot.get(usize::try_from(v).ok()?)?;
        (x > 0).then(|| x as usize - 1)
    }

    /// Elements covered by `v`, ascending. Empty when `v` is absent.
    pub fn covered_by(&self, v: u64) -> Vec<u64> {
        self.index_of(v)
            .map(|i| self.covers[i].iter().map(|&j| self.elements[j]).collect())
            .unwrap_or_default()
    }

    /// Length of a longest chain from a minimal element up to `v`.
    pub fn rank(&self, v: u64) -> Option<u32> {
        self.index_of(v).map(|i| self.ranks[i])
    }

    pub fn max_rank(&self) -> u32 {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    pub fn minimal_elements(&self) -> Vec<u64> {
        self.elements
            .iter()
            .zip(&self.covers)
            .filter(|(_, c)| c.is_empty())
            .map(|(&v, _)| v)
            .collect()
    }

    /// `x ⪯ y`. False when either is absent.
    pub fn leq(&self, x: u64, y: u64) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => bit_get(&self.down[j], i),
            _ => false,
        }
    }

    /// True when every cover relation drops the rank by exactly one, i.e.
    /// all saturated chains from a minimal element to `x` have equal length.
    pub fn is_graded(&self) -> bool {
        self.covers
            .iter()
            .enumerate()
            .all(|(i, c)| c.iter().all(|&j| self.ranks[j] + 1 == self.ranks[i]))
    }

    /// Checks down-closure using the cover relation.
    pub fn is_ideal(&self, members: &[u64]) -> bool {
        self.validate_members(members).is_ok()
    }

    fn validate_members(&self, members: &[u64]) -> Result<Vec<usize>> {
        let mut present = vec![false; self.len()];
        let mut idx = Vec::with_capacity(members.len());
        for &v in members {
            let i = self.index_of(v).ok_or_else(|| Error::NotAnIdeal {
                poset: self.id.to_string(),
                reason: format!("{v} is not an element"),
            })?;
            present[i] = true;
            idx.push(i);
        }
        for &i in &idx {
            if let Some(&j) = self.covers[i].iter().find(|&&j| !present[j]) {
                return Err(Error::NotAnIdeal {
                    poset: self.id.to_string(),
                    reason: format!(
                        "{} is present but the element {} below it is missing",
                        self.elements[i], self.elements[j]
                    ),
                });
            }
        }
        Ok(idx)
    }

    /// Validates and wraps a set of elements as an order ideal of this poset.
    pub fn ideal(&self, members: impl IntoIterator<Item = u64>) -> Result<OrderIdeal> {
        let mut members: Vec<u64> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        self.validate_members(&members)?;
        Ok(OrderIdeal::from_sorted(self.id, members))
    }

    /// Re-validates an ideal against this poset, rejecting foreign ideals.
    pub fn check_ideal(&self, ideal: &OrderIdeal) -> Result<()> {
        if ideal.poset() != self.id {
            return Err(Error::ForeignPoset {
                expected: self.id.to_string(),
                found: ideal.poset().to_string(),
            });
        }
        self.validate_members(ideal.members()).map(|_| ())
    }

    /// The ideal containing every element.
    pub fn full_ideal(&self) -> OrderIdeal {
        OrderIdeal::from_sorted(self.id, self.elements.clone())
    }
}

/// `(Q_k, Q'_k)`: the odd elements `2i - 1` (`1 <= i <= k`) and the blocks
/// `2i + (s - 1)(2k + 3)` (`1 <= s <= 2k`, `1 <= i <= 2k + 1 - s`).
/// Their disjoint union is the element set of `P_{2k+1,2k+3}`.
pub fn q_decomposition(k: u64) -> (Vec<u64>, Vec<u64>) {
    let d = 2 * k + 3;
    let q = (1..=k).map(|i| 2 * i - 1).collect();
    let q_prime = (1..=2 * k)
        .flat_map(|s| (1..=2 * k + 1 - s).map(move |i| 2 * i + (s - 1) * d))
        .collect();
    (q, q_prime)
}

/// `(T_k, T'_k)`: `2i - 1 + (s - 1)(2k + 3)` and `2i + (s - 1)(2k + 3)` for
/// `1 <= s <= k`, `1 <= i <= k + 1 - s`. Their union is `M_{2k+1,2k+3}`.
pub fn t_decomposition(k: u64) -> (Vec<u64>, Vec<u64>) {
    let d = 2 * k + 3;
    let cells = move || (1..=k).flat_map(move |s| (1..=k + 1 - s).map(move |i| (s, i)));
    let odd = cells().map(|(s, i)| 2 * i - 1 + (s - 1) * d).collect();
    let even = cells().map(|(s, i)| 2 * i + (s - 1) * d).collect();
    (odd, even)
}
