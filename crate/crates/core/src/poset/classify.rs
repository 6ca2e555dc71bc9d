//! Classification of nice ideals of `P_{2k+1,2k+3}` / `M_{2k+1,2k+3}`.
//!
//! * `L(M)`: nice ideals avoiding `2k + 2` (equivalently, nice ideals of M);
//!   refined into `L_i` where `2i + 1` is the smallest missing odd number.
//! * `L̂(M)`: those in `L(M)` without `1`; `L̃(M)`: without `1` and `2k`.
//! * `S(P)`: nice ideals containing `2k + 2`; refined into `S_{m,ℓ}` where
//!   `2m + 1` is the smallest missing odd element and `2m + 2ℓ` the largest
//!   missing even element of rank 0 (the rank-0 evens are `2, 4, ..., 2k`).

use serde::Serialize;

use super::{OrderIdeal, PosetId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealClass {
    pub k: u64,
    pub in_truncated: bool,
    pub avoids_one: bool,
    pub avoids_one_and_2k: bool,
    pub contains_2k_plus_2: bool,
    /// `i` with the ideal in `L_i`, when it lies in `L(M)`.
    pub odd_index: Option<u64>,
    /// `(m, ℓ)` with the ideal in `S_{m,ℓ}`, when it lies in `S(P)`.
    pub s_indices: Option<(u64, u64)>,
}

/// Classifies a nice ideal of `P_{2k+1,2k+3}` or `M_{2k+1,2k+3}`.
pub fn classify_ideal(ideal: &OrderIdeal, k: u64) -> Result<IdealClass> {
    if k == 0 {
        return Err(Error::InvalidParameter("classification needs k >= 1".into()));
    }
    let home = ideal.poset();
    if home != PosetId::full(2 * k + 1, 2 * k + 3) && home != PosetId::truncated(k) {
        return Err(Error::ForeignPoset {
            expected: format!("{} or {}", PosetId::full(2 * k + 1, 2 * k + 3), PosetId::truncated(k)),
            found: home.to_string(),
        });
    }
    if let Some((a, b)) = ideal.consecutive_pair() {
        return Err(Error::NotNice(a, b));
    }
    classify_with(k, |v| ideal.contains(v))
}

/// Classification from a membership predicate; the caller guarantees the
/// set is a nice ideal of the right poset.
pub(crate) fn classify_with(k: u64, contains: impl Fn(u64) -> bool) -> Result<IdealClass> {
    let has_top = contains(2 * k + 2);
    let in_truncated = !has_top;
    let avoids_one = in_truncated && !contains(1);
    let odd = (0..=k).find(|&i| !contains(2 * i + 1)).unwrap_or(k);
    let s_indices = if has_top {
        let largest_missing_even = (1..=k)
            .rev()
            .map(|j| 2 * j)
            .find(|&e| !contains(e))
            .ok_or_else(|| Error::Internal("S ideal contains every rank-0 even element".into()))?;
        let ell = (largest_missing_even / 2).checked_sub(odd).ok_or_else(|| {
            Error::Internal(format!(
                "largest missing even {largest_missing_even} below 2m = {}",
                2 * odd
            ))
        })?;
        Some((odd, ell))
    } else {
        None
    };
    Ok(IdealClass {
        k,
        in_truncated,
        avoids_one,
        avoids_one_and_2k: avoids_one && !contains(2 * k),
        contains_2k_plus_2: has_top,
        odd_index: in_truncated.then_some(odd),
        s_indices,
    })
}
