//! Lattice paths over up (`U`) and down (`D`) steps.
//!
//! Paths are packed into a `u64` (bit `i` is step `i`, `U = 1`) with an
//! explicit length, so a path holds at most [`MAX_PATH_LEN`] steps.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_PATH_LEN: usize = 64;

/// Largest order accepted by the exhaustive generators.
pub const MAX_ENUM_ORDER: u64 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    bits: u64,
    len: u8,
}

impl LatticePath {
    pub fn empty() -> Self {
        LatticePath::default()
    }

    pub fn from_steps(steps: impl IntoIterator<Item = Step>) -> Result<Self> {
        let mut p = LatticePath::empty();
        for s in steps {
            p.push(s)?;
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Half the length.
    pub fn order(&self) -> u64 {
        self.len as u64 / 2
    }

    pub fn push(&mut self, step: Step) -> Result<()> {
        if self.len() >= MAX_PATH_LEN {
            return Err(Error::InvalidPath(format!("longer than {MAX_PATH_LEN} steps")));
        }
        if step == Step::Up {
            self.bits |= 1 << self.len;
        }
        self.len += 1;
        Ok(())
    }

    pub fn step(&self, i: usize) -> Step {
        assert!(i < self.len(), "step index out of range");
        if self.bits >> i & 1 == 1 {
            Step::Up
        } else {
            Step::Down
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(|i| self.step(i))
    }

    pub fn last(&self) -> Option<Step> {
        (!self.is_empty()).then(|| self.step(self.len() - 1))
    }

    pub fn up_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Heights after each prefix, starting with 0.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.len() + 1);
        h.push(0);
        let mut cur = 0;
        for s in self.steps() {
            cur += s.delta();
            h.push(cur);
        }
        h
    }

    pub fn concat(&self, other: &LatticePath) -> Result<Self> {
        if self.len() + other.len() > MAX_PATH_LEN {
            return Err(Error::InvalidPath(format!("longer than {MAX_PATH_LEN} steps")));
        }
        Ok(LatticePath {
            bits: self.bits | other.bits.checked_shl(self.len as u32).unwrap_or(0),
            len: self.len + other.len,
        })
    }

    /// Steps in reverse order, symbols unchanged.
    pub fn reverse(&self) -> Self {
        let bits = if self.len == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (64 - self.len as u32)
        };
        LatticePath { bits, len: self.len }
    }

    /// Sub-path of steps `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len());
        let width = end - start;
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        LatticePath {
            bits: self.bits.checked_shr(start as u32).unwrap_or(0) & mask,
            len: width as u8,
        }
    }

    /// Equal numbers of up and down steps.
    pub fn is_free_dyck(&self) -> bool {
        self.len.is_multiple_of(2) && self.up_count() * 2 == self.len()
    }

    /// Balanced and never below the x-axis.
    pub fn is_dyck(&self) -> bool {
        self.is_free_dyck() && self.heights().iter().all(|&h| h >= 0)
    }

    /// Some prefix ends strictly below the x-axis.
    pub fn dips_below_axis(&self) -> bool {
        self.heights().iter().any(|&h| h < 0)
    }

    /// `self = U · first · D · rest` at the first return to height 0.
    pub fn first_return_split(&self) -> Result<(LatticePath, LatticePath)> {
        if self.is_empty() || !self.is_dyck() {
            return Err(Error::InvalidPath(format!(
                "first-return decomposition needs a nonempty Dyck path, got {self:?}"
            )));
        }
        let ret = self
            .heights()
            .iter()
            .skip(1)
            .position(|&h| h == 0)
            .expect("a Dyck path returns to the axis")
            + 1;
        Ok((self.slice(1, ret - 1), self.slice(ret, self.len())))
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    /// Parses `U`/`D` text; `""` and `"ε"` give the empty path.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" {
            return Ok(LatticePath::empty());
        }
        LatticePath::from_steps(
            s.chars()
                .map(|c| match c.to_ascii_uppercase() {
                    'U' => Ok(Step::Up),
                    'D' => Ok(Step::Down),
                    other => Err(Error::InvalidPath(format!("unexpected character {other:?}"))),
                })
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

fn check_order(n: u64) -> Result<()> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::guard("path order", n, MAX_ENUM_ORDER));
    }
    Ok(())
}

/// All free Dyck paths of order `n`, i.e. every placement of `n` up steps
/// among `2n` positions, in increasing bit order.
pub fn free_dyck_paths(n: u64) -> Result<FreeDyckPaths> {
    check_order(n)?;
    Ok(FreeDyckPaths {
        next: Some((1u64 << n) - 1),
        len: 2 * n as u8,
    })
}

/// All Dyck paths of order `n`.
pub fn dyck_paths(n: u64) -> Result<impl Iterator<Item = LatticePath>> {
    Ok(free_dyck_paths(n)?.filter(LatticePath::is_dyck))
}

pub struct FreeDyckPaths {
    next: Option<u64>,
    len: u8,
}

impl Iterator for FreeDyckPaths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let cur = self.next?;
        let limit = 1u64 << self.len;
        // Gosper's hack: next larger integer with the same popcount.
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(LatticePath {
            bits: cur,
            len: self.len,
        })
    }
}
