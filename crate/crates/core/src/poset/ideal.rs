//! Order ideals and their exhaustive enumeration.
//!
//! Enumeration walks the elements in increasing order and decides include /
//! exclude for each one; an element may only be included once everything it
//! covers is present. Every root-to-leaf path is then a distinct ideal, so no
//! deduplication is needed and memory stays at one stack frame per element.
//! For nice ideals an element is also refused when its predecessor `x - 1`
//! is already in.

use std::fmt;

use serde::Serialize;

use super::{GapPoset, PosetId};
use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::partition::{BetaSet, Partition};

/// Largest poset that may be enumerated (ideals are held as 128-bit masks).
pub const MAX_ENUM_ELEMENTS: usize = 120;

/// Frontier size at which parallel enumeration stops splitting.
const SPLIT_TARGET: usize = 1024;

/// A down-closed subset of a specific poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrderIdeal {
    poset: PosetId,
    members: Vec<u64>,
}

impl OrderIdeal {
    pub(crate) fn from_sorted(poset: PosetId, members: Vec<u64>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        OrderIdeal { poset, members }
    }

    pub fn poset(&self) -> PosetId {
        self.poset
    }

    /// Members in increasing order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// First pair `(x, x + 1)` of members, if any.
    pub fn consecutive_pair(&self) -> Option<(u64, u64)> {
        self.members.windows(2).find(|w| w[1] - w[0] == 1).map(|w| (w[0], w[1]))
    }

    /// No two members differ by one.
    pub fn is_nice(&self) -> bool {
        self.consecutive_pair().is_none()
    }

    pub fn beta_set(&self) -> BetaSet {
        BetaSet::new(self.members.iter().copied()).expect("ideal members are distinct and positive")
    }

    /// The partition whose β-set is this ideal.
    pub fn partition(&self) -> Partition {
        self.beta_set().to_partition()
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Borrowed view of an ideal produced during enumeration.
#[derive(Clone, Copy)]
pub struct IdealMembers<'a> {
    poset: &'a GapPoset,
    mask: u128,
}

impl<'a> IdealMembers<'a> {
    pub fn contains(&self, v: u64) -> bool {
        self.poset.index_of(v).is_some_and(|i| self.mask >> i & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + 'a {
        let (poset, mask) = (self.poset, self.mask);
        (0..poset.len())
            .filter(move |&i| mask >> i & 1 == 1)
            .map(move |i| poset.elements[i])
    }

    /// `Σ members - C(|members|, 2)`: size of the partition with this β-set.
    pub fn partition_size(&self) -> u64 {
        let m = self.len() as u64;
        self.iter().sum::<u64>() - m * m.saturating_sub(1) / 2
    }

    pub fn to_ideal(&self) -> OrderIdeal {
        OrderIdeal::from_sorted(self.poset.id, self.iter().collect())
    }
}

struct Engine<'a> {
    poset: &'a GapPoset,
    nice: bool,
    cover_mask: Vec<u128>,
    pred_mask: Vec<u128>,
}

impl<'a> Engine<'a> {
    fn new(poset: &'a GapPoset, nice: bool) -> Result<Self> {
        if poset.len() > MAX_ENUM_ELEMENTS {
            return Err(Error::guard("poset size", poset.len() as u64, MAX_ENUM_ELEMENTS as u64));
        }
        let cover_mask = poset
            .covers
            .iter()
            .map(|c| c.iter().fold(0u128, |m, &j| m | 1 << j))
            .collect();
        let pred_mask = poset
            .elements
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .and_then(|u| poset.index_of(u))
                    .map_or(0, |j| 1u128 << j)
            })
            .collect();
        Ok(Engine {
            poset,
            nice,
            cover_mask,
            pred_mask,
        })
    }

    #[inline]
    fn can_add(&self, i: usize, mask: u128) -> bool {
        self.cover_mask[i] & !mask == 0 && !(self.nice && self.pred_mask[i] & mask != 0)
    }

    fn walk<F: FnMut(u128)>(&self, i: usize, mask: u128, visit: &mut F) {
        if i == self.poset.len() {
            visit(mask);
            return;
        }
        self.walk(i + 1, mask, visit);
        if self.can_add(i, mask) {
            self.walk(i + 1, mask | 1 << i, visit);
        }
    }

    /// Partial assignments of the first `depth` elements, expanded until the
    /// frontier is wide enough to share out.
    fn frontier(&self) -> Vec<(usize, u128)> {
        let mut level = vec![(0usize, 0u128)];
        let n = self.poset.len();
        let mut depth = 0;
        while depth < n && level.len() < SPLIT_TARGET {
            let mut next = Vec::with_capacity(level.len() * 2);
            for &(i, mask) in &level {
                next.push((i + 1, mask));
                if self.can_add(i, mask) {
                    next.push((i + 1, mask | 1 << i));
                }
            }
            level = next;
            depth += 1;
        }
        level
    }
}

impl GapPoset {
    /// Stream of every order ideal, guarded by [`MAX_ENUM_ELEMENTS`].
    pub fn ideals(&self) -> Result<Ideals<'_>> {
        Ideals::new(self, false)
    }

    /// Stream of every nice order ideal (no two members differ by one).
    pub fn nice_ideals(&self) -> Result<Ideals<'_>> {
        Ideals::new(self, true)
    }

    /// Folds `visit` over every (nice) ideal.
    ///
    /// In parallel mode the search tree is split near the root and each
    /// subtree is folded from a fresh `identity`; partial results are then
    /// merged with `merge` in a fixed order.
    pub fn fold_ideals<T, V, M>(&self, nice: bool, mode: ExecMode, identity: T, visit: V, merge: M) -> Result<T>
    where
        T: Clone + Send + Sync,
        V: Fn(&mut T, IdealMembers<'_>) + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        let engine = Engine::new(self, nice)?;
        let run = |(i, mask): (usize, u128)| {
            let mut acc = identity.clone();
            engine.walk(i, mask, &mut |m| visit(&mut acc, IdealMembers { poset: self, mask: m }));
            acc
        };
        if !mode.is_parallel() {
            return Ok(run((0, 0)));
        }
        let frontier = engine.frontier();
        Ok(mode.map_reduce(frontier, identity.clone(), run, merge))
    }

    pub fn count_ideals(&self, nice: bool, mode: ExecMode) -> Result<u64> {
        self.fold_ideals(nice, mode, 0u64, |n, _| *n += 1, |a, b| a + b)
    }
}

/// Iterator over the ideals of a poset in depth-first order (∅ first).
pub struct Ideals<'a> {
    engine: Engine<'a>,
    stack: Vec<(usize, u128)>,
}

impl<'a> Ideals<'a> {
    fn new(poset: &'a GapPoset, nice: bool) -> Result<Self> {
        Ok(Ideals {
            engine: Engine::new(poset, nice)?,
            stack: vec![(0, 0)],
        })
    }
}

impl Iterator for Ideals<'_> {
    type Item = OrderIdeal;

    fn next(&mut self) -> Option<OrderIdeal> {
        let n = self.engine.poset.len();
        while let Some((i, mask)) = self.stack.pop() {
            if i == n {
                return Some(
                    IdealMembers {
                        poset: self.engine.poset,
                        mask,
                    }
                    .to_ideal(),
                );
            }
            if self.engine.can_add(i, mask) {
                self.stack.push((i + 1, mask | 1 << i));
            }
            self.stack.push((i + 1, mask));
        }
        None
    }
}
