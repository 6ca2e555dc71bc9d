//! The extremal ideals `β_{i,j}` and `γ_{k,j}`, closed forms for the sizes of
//! their partitions `λ_{i,j}` and `μ_{k,j}`, and an exhaustive search for the
//! largest `(2k+1, 2k+3)`-core partition with distinct parts.
//!
//! Write `d = 2k + 3` and `m = k - ⌊(i+1)/2⌋`.
//!
//! * `β_{i,0} = {i + 2c + rd : c >= 1, r >= 0, c + r <= m}`, a staircase
//!   isomorphic to the full ideal of `P_{m+1,m+2}` (empty when `m = 0`).
//! * `β_{i,j} = β_{i,0} ∪ {i + pd : 0 <= p < j}` for `j <= m + 1`.
//! * `γ_{k,j} = β_{1,k} ∪ {2k + 2 + pd : 0 <= p < j}` for `1 <= j <= k`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::numbers::{add, binomial, choose2, div_exact, mul, sub};
use crate::partition::Partition;
use crate::poset::{GapPoset, OrderIdeal};

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("extremal ideals need k >= 1".into()));
    }
    Ok(())
}

/// `m = k - ⌊(i+1)/2⌋`, after checking `1 <= i <= 2k`.
fn staircase_height(k: u64, i: u64) -> Result<u64> {
    check_k(k)?;
    if i == 0 || i > 2 * k {
        return Err(Error::OutOfBounds(format!("i = {i} outside 1..={}", 2 * k)));
    }
    Ok(k - i.div_ceil(2))
}

/// Largest admissible `j` for `β_{i,j}`: `k - ⌊(i+1)/2⌋ + 1`.
pub fn beta_max_j(k: u64, i: u64) -> Result<u64> {
    Ok(staircase_height(k, i)? + 1)
}

fn check_beta(k: u64, i: u64, j: u64) -> Result<u64> {
    let m = staircase_height(k, i)?;
    if j > m + 1 {
        return Err(Error::OutOfBounds(format!("j = {j} outside 0..={}", m + 1)));
    }
    Ok(m)
}

fn check_gamma(k: u64, j: u64) -> Result<()> {
    check_k(k)?;
    if j == 0 || j > k {
        return Err(Error::OutOfBounds(format!("j = {j} outside 1..={k}")));
    }
    Ok(())
}

fn beta_members(k: u64, i: u64, j: u64) -> Vec<u64> {
    let d = 2 * k + 3;
    let m = k - i.div_ceil(2);
    let mut members: Vec<u64> = (1..=m)
        .flat_map(|c| (0..=m - c).map(move |r| i + 2 * c + r * d))
        .chain((0..j).map(|p| i + p * d))
        .collect();
    members.sort_unstable();
    members
}

fn validated(poset: &GapPoset, members: Vec<u64>, what: &str) -> Result<OrderIdeal> {
    let ideal = poset
        .ideal(members)
        .map_err(|e| Error::Internal(format!("{what} is not an ideal: {e}")))?;
    if let Some((a, b)) = ideal.consecutive_pair() {
        return Err(Error::Internal(format!("{what} contains {a} and {b}")));
    }
    Ok(ideal)
}

/// `β_{i,j}` as a nice ideal of `M_{2k+1,2k+3}`, for `0 <= j <= k - ⌊(i+1)/2⌋ + 1`.
pub fn beta_ideal(k: u64, i: u64, j: u64) -> Result<OrderIdeal> {
    check_beta(k, i, j)?;
    validated(&GapPoset::truncated(k)?, beta_members(k, i, j), "β")
}

/// `γ_{k,j}` as a nice ideal of `P_{2k+1,2k+3}` containing `2k + 2`.
pub fn gamma_ideal(k: u64, j: u64) -> Result<OrderIdeal> {
    check_gamma(k, j)?;
    let d = 2 * k + 3;
    let mut members = beta_members(k, 1, k);
    members.extend((0..j).map(|p| 2 * k + 2 + p * d));
    validated(&GapPoset::new(2 * k + 1, 2 * k + 3)?, members, "γ")
}

const WHAT: &str = "extremal size";

/// `|λ_{i,j}|` in closed form.
///
/// With `N = C(m+1, 2)`, `|λ_{i,0}| = iN + 2C(m+2,3) + dC(m+1,3) - C(N,2)` and
/// `|λ_{i,j}| = |λ_{i,0}| + ij + (2k+2)C(j,2) - jN`.
pub fn lambda_size(k: u64, i: u64, j: u64) -> Result<u64> {
    let m = check_beta(k, i, j)?;
    let d = 2 * k + 3;
    let n = choose2(m + 1)?;
    let sum = add(
        add(mul(i, n, WHAT)?, mul(2, binomial(m + 2, 3)?, WHAT)?, WHAT)?,
        mul(d, binomial(m + 1, 3)?, WHAT)?,
        WHAT,
    )?;
    let base = sub(sum, choose2(n)?, WHAT)?;
    let grown = add(
        add(base, mul(i, j, WHAT)?, WHAT)?,
        mul(2 * k + 2, choose2(j)?, WHAT)?,
        WHAT,
    )?;
    sub(grown, mul(j, n, WHAT)?, WHAT)
}

/// `|μ_{k,i}| = |λ_{1,k}| + (2k+2)C(i+1,2) - iC(k+1,2)`.
pub fn mu_size(k: u64, i: u64) -> Result<u64> {
    check_gamma(k, i)?;
    let grown = add(lambda_size(k, 1, k)?, mul(2 * k + 2, choose2(i + 1)?, WHAT)?, WHAT)?;
    sub(grown, mul(i, choose2(k + 1)?, WHAT)?, WHAT)
}

/// `k(k+1)(k+2)(5k+11)/24`.
pub fn largest_size(k: u64) -> Result<u64> {
    let num = [k + 1, k + 2, 5 * k + 11]
        .into_iter()
        .try_fold(k, |acc, f| mul(acc, f, WHAT))?;
    div_exact(num, 24, WHAT)
}

/// `(s²-1)(s+3)(5s+17)/384` for odd `s`.
pub fn largest_size_s(s: u64) -> Result<u64> {
    if s.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("s = {s} must be odd")));
    }
    let num = [s + 3, 5 * s + 17]
        .into_iter()
        .try_fold(sub(mul(s, s, WHAT)?, 1, WHAT)?, |acc, f| mul(acc, f, WHAT))?;
    div_exact(num, 384, WHAT)
}

/// `μ_{k,k}`, the partition with β-set `γ_{k,k}`; `∅` for `k = 0`.
pub fn max_partition(k: u64) -> Result<Partition> {
    if k == 0 {
        return Ok(Partition::empty());
    }
    Ok(gamma_ideal(k, k)?.partition())
}

/// Result of an exhaustive search over the nice ideals of `P_{2k+1,2k+3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Maximum {
    pub k: u64,
    pub size: u64,
    /// Number of nice ideals attaining `size`.
    pub maximizers: u64,
    /// The lexicographically least maximizer.
    pub ideal: OrderIdeal,
}

#[derive(Clone)]
struct Best {
    size: u64,
    count: u64,
    members: Vec<u64>,
}

fn better(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(match a.size.cmp(&b.size) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => Best {
                size: a.size,
                count: a.count + b.count,
                members: a.members.min(b.members),
            },
        }),
    }
}

/// Largest partition size over all nice ideals of `P_{2k+1,2k+3}`, subject
/// to the poset enumeration guard.
pub fn exhaustive_maximum(k: u64, mode: ExecMode) -> Result<Maximum> {
    let poset = GapPoset::new(2 * k + 1, 2 * k + 3)?;
    let best = poset.fold_ideals(
        true,
        mode,
        None,
        |acc: &mut Option<Best>, members| {
            let here = Best {
                size: members.partition_size(),
                count: 1,
                members: members.iter().collect(),
            };
            *acc = better(acc.take(), Some(here));
        },
        better,
    )?;
    let best = best.ok_or_else(|| Error::Internal("no nice ideals enumerated".into()))?;
    Ok(Maximum {
        k,
        size: best.size,
        maximizers: best.count,
        ideal: poset.ideal(best.members)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_examples() {
        assert_eq!(beta_ideal(1, 1, 1).unwrap().members(), &[1]);
        assert!(beta_ideal(1, 1, 0).unwrap().is_empty());
        assert_eq!(beta_ideal(2, 1, 2).unwrap().members(), &[1, 3, 8]);
        assert_eq!(
            beta_ideal(6, 4, 3).unwrap().members(),
            &[4, 6, 8, 10, 12, 19, 21, 23, 25, 34, 36, 38, 51]
        );
        assert!(beta_ideal(2, 5, 0).is_err());
        assert!(beta_ideal(2, 1, 3).is_err());
        assert!(beta_ideal(0, 1, 0).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_ideal(1, 1).unwrap().members(), &[1, 4]);
        assert_eq!(gamma_ideal(2, 2).unwrap().members(), &[1, 3, 6, 8, 13]);
        assert_eq!(gamma_ideal(2, 1).unwrap().members(), &[1, 3, 6, 8]);
        assert!(gamma_ideal(2, 3).is_err());
        assert!(gamma_ideal(2, 0).is_err());
    }

    #[test]
    fn size_examples() {
        assert_eq!(lambda_size(1, 1, 1).unwrap(), 1);
        assert_eq!(lambda_size(1, 2, 1).unwrap(), 2);
        assert_eq!(lambda_size(2, 1, 2).unwrap(), 9);
        assert_eq!(lambda_size(2, 2, 2).unwrap() - lambda_size(2, 1, 2).unwrap(), 3);
        assert_eq!(mu_size(1, 1).unwrap(), 4);
        assert_eq!(mu_size(2, 2).unwrap(), 21);
        assert_eq!(mu_size(2, 1).unwrap(), 12);
        for (k, want) in [(0, 0), (1, 4), (2, 21), (3, 65), (4, 155)] {
            assert_eq!(largest_size(k).unwrap(), want);
            assert_eq!(largest_size_s(2 * k + 1).unwrap(), want);
        }
        assert!(largest_size_s(4).is_err());
    }

    #[test]
    fn max_partition_examples() {
        assert_eq!(max_partition(0).unwrap(), Partition::empty());
        assert_eq!(max_partition(1).unwrap().parts(), &[3, 1]);
        assert_eq!(max_partition(2).unwrap().parts(), &[9, 5, 4, 2, 1]);
    }

    #[test]
    fn exhaustive_small() {
        let m = exhaustive_maximum(2, ExecMode::Sequential).unwrap();
        assert_eq!((m.size, m.maximizers), (21, 1));
        assert_eq!(m.ideal.members(), &[1, 3, 6, 8, 13]);
        assert_eq!(exhaustive_maximum(0, ExecMode::Sequential).unwrap().size, 0);
        assert!(exhaustive_maximum(8, ExecMode::Sequential).unwrap_err().is_guard());
    }
}
