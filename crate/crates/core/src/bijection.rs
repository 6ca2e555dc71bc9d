//! The bijections `φ: J(P_{t,t+1}) → Dyck paths of order t` and
//! `ψ: L̂(M_{2k+1,2k+3}) → free Dyck paths of order k`, their inverses, and
//! marked ideals.
//!
//! Both maps recurse on sub-ideals that are isomorphic to ideals of smaller
//! posets. The isomorphisms are explicit relabelings of coordinates:
//!
//! * `P_{t,t+1}`: the element `q + r(t+1)` has rank `r` and position `q`,
//!   `1 <= q <= t-1-r`; `(r, q)` covers `(r-1, q)` and `(r-1, q+1)`.
//! * `M_{2k+1,2k+3}`: the element `(s-1)(2k+3) + p` has level `s` and position
//!   `p`, `1 <= s <= k`, `1 <= p <= 2(k+1-s)`; `(s, p)` covers `(s-1, p)` and
//!   `(s-1, p+2)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice_path::{LatticePath, Step};
use crate::numbers::{add, catalan_table, mul};
use crate::poset::{GapPoset, OrderIdeal, PosetId};

/// Largest `t` for which marked ideals of `P_{t+1,t+2}` are enumerated.
pub const MAX_MARKED_ORDER: u64 = 7;

type Cells = BTreeSet<(u64, u64)>;

fn up() -> LatticePath {
    LatticePath::from_steps([Step::Up]).expect("one step fits")
}

fn down() -> LatticePath {
    LatticePath::from_steps([Step::Down]).expect("one step fits")
}

fn join(parts: &[LatticePath]) -> LatticePath {
    parts
        .iter()
        .try_fold(LatticePath::empty(), |acc, p| acc.concat(p))
        .expect("path orders are bounded by the input order")
}

// ---- φ on (rank, position) cells of P_{t,t+1} ----

fn type_a_value(t: u64, (r, q): (u64, u64)) -> u64 {
    q + r * (t + 1)
}

fn type_a_cell(t: u64, v: u64) -> (u64, u64) {
    let r = (v - 1) / (t + 1);
    (r, v - r * (t + 1))
}

/// Smallest missing rank-0 position, `t` when all of `1..t` are present.
fn first_missing_bottom(t: u64, cells: &Cells) -> u64 {
    (1..t).find(|&q| !cells.contains(&(0, q))).unwrap_or(t)
}

/// Splits an ideal of `P_{t,t+1}` with smallest missing rank-0 position `i`
/// into `I1 ⊆ P_{i-1,i}` (cells above the present bottom block, moved one
/// rank down) and `I2 ⊆ P_{t-i,t-i+1}` (cells right of `i`, shifted left by `i`).
fn phi_split(cells: &Cells, i: u64) -> (Cells, Cells) {
    let lower = cells
        .iter()
        .filter(|&&(r, q)| r >= 1 && q + r < i)
        .map(|&(r, q)| (r - 1, q))
        .collect();
    let right = cells
        .iter()
        .filter(|&&(_, q)| q > i)
        .map(|&(r, q)| (r, q - i))
        .collect();
    (lower, right)
}

fn phi_assemble(i: u64, lower: &Cells, right: &Cells) -> Cells {
    (1..i)
        .map(|q| (0, q))
        .chain(lower.iter().map(|&(r, q)| (r + 1, q)))
        .chain(right.iter().map(|&(r, q)| (r, q + i)))
        .collect()
}

fn phi_cells(t: u64, cells: &Cells) -> LatticePath {
    if t == 0 {
        return LatticePath::empty();
    }
    let i = first_missing_bottom(t, cells);
    let (lower, right) = phi_split(cells, i);
    debug_assert_eq!(&phi_assemble(i, &lower, &right), cells, "φ split lost cells");
    join(&[up(), phi_cells(i - 1, &lower), down(), phi_cells(t - i, &right)])
}

fn phi_inverse_cells(path: &LatticePath) -> Result<Cells> {
    if path.is_empty() {
        return Ok(Cells::new());
    }
    let (first, rest) = path.first_return_split()?;
    let i = first.order() + 1;
    Ok(phi_assemble(i, &phi_inverse_cells(&first)?, &phi_inverse_cells(&rest)?))
}

/// `t` for an ideal of `P_{t,t+1}`.
fn type_a_order(id: PosetId) -> Result<u64> {
    if id.truncate_k.is_some() || id.t != id.s + 1 {
        return Err(Error::ForeignPoset {
            expected: "P_{t,t+1}".into(),
            found: id.to_string(),
        });
    }
    Ok(id.s)
}

/// `φ(I)`, a Dyck path of order `t` for an ideal `I` of `P_{t,t+1}`.
pub fn phi(ideal: &OrderIdeal) -> Result<LatticePath> {
    let t = type_a_order(ideal.poset())?;
    let cells = ideal.members().iter().map(|&v| type_a_cell(t, v)).collect();
    Ok(phi_cells(t, &cells))
}

/// The ideal of `P_{t,t+1}` mapped to a Dyck path of order `t >= 1`.
pub fn phi_inverse(path: &LatticePath) -> Result<OrderIdeal> {
    if !path.is_dyck() {
        return Err(Error::InvalidPath(format!("{path:?} is not a Dyck path")));
    }
    let t = path.order();
    if t == 0 {
        return Err(Error::InvalidParameter("φ⁻¹ needs a path of order >= 1".into()));
    }
    let mut members: Vec<u64> = phi_inverse_cells(path)?
        .into_iter()
        .map(|c| type_a_value(t, c))
        .collect();
    members.sort_unstable();
    Ok(OrderIdeal::from_sorted(PosetId::full(t, t + 1), members))
}

// ---- ψ on (level, position) cells of M_{2k+1,2k+3} ----

fn type_m_value(k: u64, (s, p): (u64, u64)) -> u64 {
    (s - 1) * (2 * k + 3) + p
}

fn type_m_cell(k: u64, v: u64) -> (u64, u64) {
    let s = (v - 1) / (2 * k + 3) + 1;
    (s, v - (s - 1) * (2 * k + 3))
}

/// The corner of `M_k` isomorphic to `M_ℓ`: `p <= 2(ℓ+1-s)`, same coordinates.
fn corner(cells: &Cells, ell: u64) -> Cells {
    cells
        .iter()
        .filter(|&&(s, p)| s <= ell && p <= 2 * (ell + 1 - s))
        .copied()
        .collect()
}

/// Even cells `(s, 2q)` with `s >= 2`, `q >= ℓ+1`, relabeled to
/// `(s-2, q-ℓ)` in `P_{k-ℓ,k-ℓ+1}`.
fn even_block(cells: &Cells, ell: u64) -> Cells {
    cells
        .iter()
        .filter(|&&(s, p)| s >= 2 && p % 2 == 0 && p / 2 > ell)
        .map(|&(s, p)| (s - 2, p / 2 - ell))
        .collect()
}

/// Odd cells `(s, 2q-1)` with `q >= ℓ+2`, relabeled to `(s-1, q-ℓ-1)` in
/// `P_{k-ℓ,k-ℓ+1}`.
fn odd_block(cells: &Cells, ell: u64) -> Cells {
    cells
        .iter()
        .filter(|&&(_, p)| p % 2 == 1 && p >= 2 * ell + 3)
        .map(|&(s, p)| (s - 1, p.div_ceil(2) - ell - 1))
        .collect()
}

fn assemble_ends_down(k: u64, ell: u64, corner: &Cells, block: &Cells) -> Cells {
    corner
        .iter()
        .copied()
        .chain((ell + 1..=k).map(|q| (1, 2 * q)))
        .chain(block.iter().map(|&(r, q)| (r + 2, 2 * (q + ell))))
        .collect()
}

fn assemble_ends_up(ell: u64, corner: &Cells, block: &Cells) -> Cells {
    corner
        .iter()
        .copied()
        .chain(block.iter().map(|&(r, q)| (r + 1, 2 * (q + ell + 1) - 1)))
        .collect()
}

fn psi_cells(k: u64, cells: &Cells) -> LatticePath {
    if k == 0 {
        return LatticePath::empty();
    }
    if cells.contains(&(1, 2 * k)) {
        // Largest missing bottom even, 0 when 2, 4, ..., 2k are all present.
        let ell = (1..k).rev().find(|&j| !cells.contains(&(1, 2 * j))).unwrap_or(0);
        let (c, b) = (corner(cells, ell), even_block(cells, ell));
        debug_assert_eq!(&assemble_ends_down(k, ell, &c, &b), cells, "ψ split lost cells");
        join(&[psi_cells(ell, &c), phi_cells(k - ell, &b)])
    } else {
        // Largest present bottom even, 0 when there is none.
        let ell = (1..k).rev().find(|&j| cells.contains(&(1, 2 * j))).unwrap_or(0);
        let (c, b) = (corner(cells, ell), odd_block(cells, ell));
        debug_assert_eq!(&assemble_ends_up(ell, &c, &b), cells, "ψ split lost cells");
        join(&[psi_cells(ell, &c), phi_cells(k - ell, &b).reverse()])
    }
}

fn psi_inverse_cells(path: &LatticePath) -> Result<Cells> {
    let k = path.order();
    let Some(last) = path.last() else {
        return Ok(Cells::new());
    };
    // The suffix starts at the last return to the axis from the side the
    // path finishes on, so it stays on that side.
    let arriving = match last {
        Step::Down => Step::Up,
        Step::Up => Step::Down,
    };
    let heights = path.heights();
    let j = (1..=path.len())
        .rev()
        .find(|&j| heights[j] == 0 && path.step(j - 1) == arriving)
        .unwrap_or(0);
    let ell = j as u64 / 2;
    let corner = psi_inverse_cells(&path.slice(0, j))?;
    let tail = path.slice(j, path.len());
    Ok(match last {
        Step::Down => assemble_ends_down(k, ell, &corner, &phi_inverse_cells(&tail)?),
        Step::Up => assemble_ends_up(ell, &corner, &phi_inverse_cells(&tail.reverse())?),
    })
}

/// `ψ(I)`, a free Dyck path of order `k` for a nice ideal `I` of
/// `M_{2k+1,2k+3}` that avoids 1. The path ends with `D` exactly when
/// `2k ∈ I`.
pub fn psi(ideal: &OrderIdeal) -> Result<LatticePath> {
    let id = ideal.poset();
    let k = id.truncate_k.ok_or_else(|| Error::ForeignPoset {
        expected: "M_{2k+1,2k+3}".into(),
        found: id.to_string(),
    })?;
    if ideal.contains(1) {
        return Err(Error::InvalidParameter("ψ is defined on ideals avoiding 1".into()));
    }
    if let Some((a, b)) = ideal.consecutive_pair() {
        return Err(Error::NotNice(a, b));
    }
    let cells = ideal.members().iter().map(|&v| type_m_cell(k, v)).collect();
    Ok(psi_cells(k, &cells))
}

/// The nice ideal of `M_{2k+1,2k+3}` avoiding 1 mapped to a free Dyck path
/// of order `k`.
pub fn psi_inverse(path: &LatticePath) -> Result<OrderIdeal> {
    if !path.is_free_dyck() {
        return Err(Error::InvalidPath(format!("{path:?} is unbalanced")));
    }
    let k = path.order();
    let mut members: Vec<u64> = psi_inverse_cells(path)?
        .into_iter()
        .map(|c| type_m_value(k, c))
        .collect();
    members.sort_unstable();
    Ok(OrderIdeal::from_sorted(PosetId::truncated(k), members))
}

// ---- marked ideals ----

/// An ideal of `P_{t,t+1}` whose smallest missing rank-0 element is
/// `i >= 2`, with one of the elements `1, ..., i-1` marked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedIdeal {
    pub ideal: OrderIdeal,
    pub mark: u64,
}

/// All marked ideals of `P_{t+1,t+2}`.
pub fn marked_ideals(t: u64) -> Result<Vec<MarkedIdeal>> {
    if t > MAX_MARKED_ORDER {
        return Err(Error::guard("marked ideal order", t, MAX_MARKED_ORDER));
    }
    let u = t + 1;
    let poset = GapPoset::new(u, u + 1)?;
    let mut out = Vec::new();
    for ideal in poset.ideals()? {
        let i = (1..u).find(|&q| !ideal.contains(q)).unwrap_or(u);
        out.extend((1..i).map(|mark| MarkedIdeal {
            ideal: ideal.clone(),
            mark,
        }));
    }
    Ok(out)
}

/// `Σ_{i=1}^{t} i·c_i·c_{t-i}`.
pub fn marked_ideal_formula(t: u64) -> Result<u64> {
    let c = catalan_table(t as usize)?;
    (1..=t).try_fold(0u64, |acc, i| {
        let term = mul(
            mul(i, c[i as usize], "marked ideal count")?,
            c[(t - i) as usize],
            "marked ideal count",
        )?;
        add(acc, term, "marked ideal count")
    })
}
