//! Formula-versus-enumeration reports.
//!
//! Every row pairs a closed-form value with an independently computed one.
//! In the exhaustive reports the second value comes from enumeration; in the
//! formula-only reports it comes from a different closed-form route, or is
//! absent when no second route exists.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::bijection::{marked_ideal_formula, marked_ideals};
use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::extremal::{exhaustive_maximum, largest_size, largest_size_s, max_partition, mu_size};
use crate::lattice_path::free_dyck_paths;
use crate::numbers::{
    add, binomial, catalan, catalan_table, central_binomial, div_exact, fibonacci, mul, power_of_four,
    rational_catalan, sub,
};
use crate::partition::{brute_force_distinct_cores, Partition};
use crate::poset::classify_with;
use crate::poset::GapPoset;

/// Largest `k` accepted by the formula-only reports.
pub const FORMULA_K_MAX: u64 = 30;

/// Largest order for which the dipping-path census enumerates paths.
const DIP_PATHS_MAX: u64 = 7;

/// Enumeration limits applied before any work starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub counts_k: u64,
    pub largest_k: u64,
    pub oracle_k: u64,
    pub identities_k: u64,
    pub marked_t: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            counts_k: 6,
            largest_k: 4,
            oracle_k: 3,
            identities_k: 20,
            marked_t: 7,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    pub mode: ExecMode,
    /// Record wall time per row; when off every `millis` is 0 and the output
    /// is byte-for-byte reproducible.
    pub timing: bool,
    pub guards: Guards,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub quantity: String,
    pub param: String,
    pub formula: u64,
    pub enumerated: Option<u64>,
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    pub millis: u64,
}

impl CensusRow {
    fn new(quantity: &str, param: String, formula: u64, enumerated: Option<u64>, millis: u64) -> Self {
        CensusRow {
            quantity: quantity.to_string(),
            param,
            formula,
            enumerated,
            matched: enumerated.map(|e| e == formula),
            millis,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub title: String,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    /// No row has a formula/enumeration disagreement.
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matched != Some(false))
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CensusRow> {
        self.rows.iter().filter(|r| r.matched == Some(false))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            w.serialize(r).expect("rows serialize to CSV");
        }
        let bytes = w.into_inner().expect("in-memory writer flushes");
        String::from_utf8(bytes).expect("CSV output is UTF-8")
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.quantity.clone(),
                    r.param.clone(),
                    r.formula.to_string(),
                    r.enumerated.map(|e| e.to_string()).unwrap_or_else(|| "-".into()),
                    match r.matched {
                        Some(true) => "ok".into(),
                        Some(false) => "MISMATCH".into(),
                        None => "-".into(),
                    },
                    r.millis.to_string(),
                ]
            })
            .collect();
        let header = ["quantity", "param", "formula", "enumerated", "match", "millis"];
        let mut widths = header.map(str::len);
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |fields: &[&str]| {
            let mut s = String::new();
            for (i, (f, w)) in fields.iter().zip(widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                if i >= 2 {
                    let _ = write!(s, "{f:>w$}");
                } else {
                    let _ = write!(s, "{f:<w$}");
                }
            }
            s.trim_end().to_string()
        };
        let mut out = format!("{}\n", self.title);
        out.push_str(&line(&header));
        out.push('\n');
        for row in &cells {
            out.push_str(&line(&row.each_ref().map(String::as_str)));
            out.push('\n');
        }
        out
    }
}

fn check(what: &'static str, value: u64, limit: u64) -> Result<()> {
    if value > limit {
        return Err(Error::guard(what, value, limit));
    }
    Ok(())
}

struct Clock {
    start: Instant,
    on: bool,
}

impl Clock {
    fn start(opts: &CensusOptions) -> Self {
        Clock {
            start: Instant::now(),
            on: opts.timing,
        }
    }

    fn millis(&self) -> u64 {
        if self.on {
            self.start.elapsed().as_millis() as u64
        } else {
            0
        }
    }
}

type Task<'a> = Box<dyn Fn() -> Result<CensusRow> + Send + Sync + 'a>;

fn run_tasks(opts: &CensusOptions, tasks: Vec<Task<'_>>) -> Result<Vec<CensusRow>> {
    opts.mode.map(tasks, |task| task()).into_iter().collect()
}

/// Closed forms for the classes of nice ideals of `P_{2k+1,2k+3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    /// `Σ c_i C(2k-2i, k-i)`
    pub l: u64,
    /// `C(2k, k)`
    pub l_hat: u64,
    /// `C(2k-1, k)`, undefined at `k = 0`.
    pub l_tilde: Option<u64>,
    /// `Σ (C(2j,j) - c_j) C(2k-2j, k-j)`, i.e. `Σ (j/(j+1)) C(2j,j) C(2k-2j,k-j)`.
    pub s: u64,
    /// `4^k`
    pub total: u64,
}

const FORMULA: &str = "class formula";

pub fn class_formulas(k: u64) -> Result<ClassCounts> {
    let c = catalan_table(k as usize)?;
    let mut l = 0u64;
    let mut s = 0u64;
    for i in 0..=k {
        let tail = central_binomial(k - i)?;
        l = add(l, mul(c[i as usize], tail, FORMULA)?, FORMULA)?;
        let head = sub(central_binomial(i)?, c[i as usize], FORMULA)?;
        s = add(s, mul(head, tail, FORMULA)?, FORMULA)?;
    }
    Ok(ClassCounts {
        l,
        l_hat: central_binomial(k)?,
        l_tilde: if k == 0 { None } else { Some(binomial(2 * k - 1, k)?) },
        s,
        total: power_of_four(k)?,
    })
}

#[derive(Clone, Copy, Default)]
struct Tally {
    l: u64,
    l_hat: u64,
    l_tilde: u64,
    s: u64,
    total: u64,
}

fn enumerate_classes(k: u64, mode: ExecMode) -> Result<Tally> {
    let poset = GapPoset::new(2 * k + 1, 2 * k + 3)?;
    let merge = |a: Tally, b: Tally| Tally {
        l: a.l + b.l,
        l_hat: a.l_hat + b.l_hat,
        l_tilde: a.l_tilde + b.l_tilde,
        s: a.s + b.s,
        total: a.total + b.total,
    };

    poset.fold_ideals(
        true,
        mode,
        Ok(Tally::default()),
        |acc: &mut Result<Tally>, members| {
            let Ok(t) = acc else { return };
            match classify_with(k, |v| members.contains(v)) {
                Ok(c) => {
                    t.total += 1;
                    t.l += u64::from(c.in_truncated);
                    t.l_hat += u64::from(c.avoids_one);
                    t.l_tilde += u64::from(c.avoids_one_and_2k);
                    t.s += u64::from(c.contains_2k_plus_2);
                }
                Err(e) => *acc = Err(e),
            }
        },
        |a, b| Ok(merge(a?, b?)),
    )?
}

fn k_param(k: u64) -> String {
    format!("k={k}")
}

/// Class sizes of the nice ideals of `P_{2k+1,2k+3}` by enumeration.
pub fn verify_counts(k: u64, opts: &CensusOptions) -> Result<CensusReport> {
    check("counts k", k, opts.guards.counts_k)?;
    let f = class_formulas(k)?;
    let clock = Clock::start(opts);
    let t = enumerate_classes(k, opts.mode)?;
    let ms = clock.millis();
    let p = k_param(k);
    let mut rows = vec![
        CensusRow::new("L", p.clone(), f.l, Some(t.l), ms),
        CensusRow::new("L_hat", p.clone(), f.l_hat, Some(t.l_hat), ms),
    ];
    if let Some(l_tilde) = f.l_tilde {
        rows.push(CensusRow::new("L_tilde", p.clone(), l_tilde, Some(t.l_tilde), ms));
    }
    rows.push(CensusRow::new("S", p.clone(), f.s, Some(t.s), ms));
    rows.push(CensusRow::new("total", p, f.total, Some(t.total), ms));
    Ok(CensusReport {
        title: format!("nice ideal classes of P_{{{},{}}}", 2 * k + 1, 2 * k + 3),
        rows,
    })
}

/// Class formulas for `k <= 30`. `L_tilde` is checked against `C(2k,k)/2`
/// and `total` against `L + S`.
pub fn verify_counts_formula(k: u64, opts: &CensusOptions) -> Result<CensusReport> {
    check("formula k", k, FORMULA_K_MAX)?;
    let clock = Clock::start(opts);
    let f = class_formulas(k)?;
    let half = if k == 0 {
        None
    } else {
        Some(div_exact(f.l_hat, 2, FORMULA)?)
    };
    let sum = add(f.l, f.s, FORMULA)?;
    let ms = clock.millis();
    let p = k_param(k);
    let mut rows = vec![
        CensusRow::new("L", p.clone(), f.l, None, ms),
        CensusRow::new("L_hat", p.clone(), f.l_hat, None, ms),
    ];
    if let Some(l_tilde) = f.l_tilde {
        rows.push(CensusRow::new("L_tilde", p.clone(), l_tilde, half, ms));
    }
    rows.push(CensusRow::new("S", p.clone(), f.s, None, ms));
    rows.push(CensusRow::new("total", p, f.total, Some(sum), ms));
    Ok(CensusReport {
        title: format!("class formulas for k={k}"),
        rows,
    })
}

/// `(s²-1)(t²-1)/24`, an upper bound on the size of any `(s,t)`-core.
fn core_size_bound(s: u64, t: u64) -> Result<u64> {
    const W: &str = "core size bound";
    let num = mul(sub(mul(s, s, W)?, 1, W)?, sub(mul(t, t, W)?, 1, W)?, W)?;
    div_exact(num, 24, W)
}

/// The largest size by exhaustive search, and for small `k` the
/// partition-level oracle.
pub fn verify_largest(k: u64, opts: &CensusOptions) -> Result<CensusReport> {
    check("largest k", k, opts.guards.largest_k)?;
    let (s, t) = (2 * k + 1, 2 * k + 3);
    let p = k_param(k);
    let formula = largest_size(k)?;
    let clock = Clock::start(opts);
    let best = exhaustive_maximum(k, opts.mode)?;
    let ms = clock.millis();
    let is_mu = u64::from(best.ideal.partition() == max_partition(k)?);
    let mut rows = vec![
        CensusRow::new("largest", p.clone(), formula, Some(best.size), ms),
        CensusRow::new("largest_s", format!("s={s}"), largest_size_s(s)?, Some(best.size), ms),
        CensusRow::new("maximizers", p.clone(), 1, Some(best.maximizers), ms),
        CensusRow::new("argmax_is_mu", p.clone(), 1, Some(is_mu), ms),
    ];
    if k <= opts.guards.oracle_k {
        let clock = Clock::start(opts);
        let oracle = brute_force_distinct_cores(s, t, core_size_bound(s, t)?)?;
        let poset = GapPoset::new(s, t)?;
        let mut from_ideals: Vec<Partition> = poset.nice_ideals()?.map(|i| i.partition()).collect();
        from_ideals.sort();
        let common = from_ideals.iter().filter(|p| oracle.binary_search(p).is_ok()).count() as u64;
        let oracle_max = oracle
            .iter()
            .map(Partition::size)
            .try_fold(0u64, |m, s| s.map(|s| m.max(s)))?;
        let ms = clock.millis();
        let total = power_of_four(k)?;
        rows.push(CensusRow::new(
            "oracle_count",
            p.clone(),
            total,
            Some(oracle.len() as u64),
            ms,
        ));
        rows.push(CensusRow::new("oracle_common", p.clone(), total, Some(common), ms));
        rows.push(CensusRow::new("oracle_largest", p, formula, Some(oracle_max), ms));
    }
    Ok(CensusReport {
        title: format!("largest ({s},{t})-core with distinct parts"),
        rows,
    })
}

/// The largest-size closed forms for `k <= 30`, checked against the size of
/// `μ_{k,k}` and against the form in `s = 2k + 1`.
pub fn verify_largest_formula(k: u64, opts: &CensusOptions) -> Result<CensusReport> {
    check("formula k", k, FORMULA_K_MAX)?;
    let clock = Clock::start(opts);
    let formula = largest_size(k)?;
    let mu = if k == 0 { 0 } else { mu_size(k, k)? };
    let by_s = largest_size_s(2 * k + 1)?;
    let ms = clock.millis();
    Ok(CensusReport {
        title: format!("largest size formulas for k={k}"),
        rows: vec![
            CensusRow::new("largest", k_param(k), formula, Some(mu), ms),
            CensusRow::new("largest_s", format!("s={}", 2 * k + 1), by_s, Some(formula), ms),
        ],
    })
}

/// Ideal counts of `P_{s,t}` against the rational Catalan number for
/// `s + t <= 15`, and nice ideal counts of `P_{s,s+1}` against `F_{s+1}` for
/// `s <= 9`.
pub fn verify_regressions(opts: &CensusOptions) -> Result<CensusReport> {
    let mut tasks: Vec<Task<'_>> = Vec::new();
    for s in 1..15u64 {
        for t in s + 1..=15 - s {
            if num_integer::gcd(s, t) != 1 {
                continue;
            }
            tasks.push(Box::new(move || {
                let clock = Clock::start(opts);
                let formula = rational_catalan(s, t)?;
                let n = GapPoset::new(s, t)?.count_ideals(false, ExecMode::Sequential)?;
                Ok(CensusRow::new(
                    "anderson",
                    format!("s={s} t={t}"),
                    formula,
                    Some(n),
                    clock.millis(),
                ))
            }));
        }
    }
    for s in 1..=9u64 {
        tasks.push(Box::new(move || {
            let clock = Clock::start(opts);
            let formula = fibonacci(s + 1)?;
            let n = GapPoset::new(s, s + 1)?.count_ideals(true, ExecMode::Sequential)?;
            Ok(CensusRow::new(
                "fibonacci",
                format!("s={s}"),
                formula,
                Some(n),
                clock.millis(),
            ))
        }));
    }
    Ok(CensusReport {
        title: "regressions".into(),
        rows: run_tasks(opts, tasks)?,
    })
}

const IDENTITY: &str = "identity";

/// `Σ_{i<k} c_i C(2k-2i-1, k-i)`.
fn dip_sum(k: u64) -> Result<u64> {
    (0..k).try_fold(0u64, |acc, i| {
        let term = mul(catalan(i)?, binomial(2 * k - 2 * i - 1, k - i)?, IDENTITY)?;
        add(acc, term, IDENTITY)
    })
}

/// `Σ_{i<=k} C(2i,i) C(2k-2i,k-i)`.
fn convolution(k: u64) -> Result<u64> {
    (0..=k).try_fold(0u64, |acc, i| {
        let term = mul(central_binomial(i)?, central_binomial(k - i)?, IDENTITY)?;
        add(acc, term, IDENTITY)
    })
}

fn dip_target(k: u64) -> Result<u64> {
    sub(central_binomial(k)?, catalan(k)?, IDENTITY)
}

/// Binomial identities for `k <= k_max`, the dipping-path census for
/// `k <= min(k_max, 7)` and the marked ideal count for `t <= min(k_max, 7)`.
pub fn verify_identities(k_max: u64, opts: &CensusOptions) -> Result<CensusReport> {
    check("identities k", k_max, opts.guards.identities_k)?;
    let mut tasks: Vec<Task<'_>> = Vec::new();
    for k in 1..=k_max {
        tasks.push(Box::new(move || {
            let clock = Clock::start(opts);
            let (f, e) = (dip_target(k)?, dip_sum(k)?);
            Ok(CensusRow::new("dip_sum", k_param(k), f, Some(e), clock.millis()))
        }));
    }
    for k in 0..=k_max {
        tasks.push(Box::new(move || {
            let clock = Clock::start(opts);
            let (f, e) = (power_of_four(k)?, convolution(k)?);
            Ok(CensusRow::new("convolution", k_param(k), f, Some(e), clock.millis()))
        }));
    }
    for k in 1..=k_max.min(DIP_PATHS_MAX) {
        tasks.push(Box::new(move || {
            let clock = Clock::start(opts);
            let f = dip_target(k)?;
            let e = free_dyck_paths(k)?.filter(|p| p.dips_below_axis()).count() as u64;
            Ok(CensusRow::new("dip_paths", k_param(k), f, Some(e), clock.millis()))
        }));
    }
    for t in 1..=k_max.min(opts.guards.marked_t) {
        tasks.push(Box::new(move || {
            let clock = Clock::start(opts);
            let (f, e) = (marked_ideal_formula(t)?, marked_ideals(t)?.len() as u64);
            Ok(CensusRow::new("marked", format!("t={t}"), f, Some(e), clock.millis()))
        }));
    }
    Ok(CensusReport {
        title: format!("identities up to k={k_max}"),
        rows: run_tasks(opts, tasks)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet() -> CensusOptions {
        CensusOptions {
            mode: ExecMode::Sequential,
            timing: false,
            guards: Guards::default(),
        }
    }

    fn pairs(r: &CensusReport) -> Vec<(&str, u64, Option<u64>)> {
        r.rows
            .iter()
            .map(|x| (x.quantity.as_str(), x.formula, x.enumerated))
            .collect()
    }

    #[test]
    fn counts_examples() {
        let r = verify_counts(1, &quiet()).unwrap();
        assert_eq!(
            pairs(&r),
            vec![
                ("L", 3, Some(3)),
                ("L_hat", 2, Some(2)),
                ("L_tilde", 1, Some(1)),
                ("S", 1, Some(1)),
                ("total", 4, Some(4)),
            ]
        );
        let r = verify_counts(2, &quiet()).unwrap();
        let formulas: Vec<u64> = r.rows.iter().map(|x| x.formula).collect();
        assert_eq!(formulas, vec![10, 6, 3, 6, 16]);
        assert!(r.all_match());
        let r = verify_counts(0, &quiet()).unwrap();
        assert_eq!(r.rows.len(), 4);
        assert!(r.all_match());
        assert!(verify_counts(7, &quiet()).unwrap_err().is_guard());
    }

    #[test]
    fn formula_only_counts() {
        for k in 0..=FORMULA_K_MAX {
            assert!(verify_counts_formula(k, &quiet()).unwrap().all_match(), "k={k}");
            assert!(verify_largest_formula(k, &quiet()).unwrap().all_match(), "k={k}");
        }
        assert!(verify_counts_formula(31, &quiet()).unwrap_err().is_guard());
    }

    #[test]
    fn largest_examples() {
        for (k, want) in [(1, 4), (2, 21)] {
            let r = verify_largest(k, &quiet()).unwrap();
            assert!(r.all_match(), "{}", r.to_table());
            assert_eq!(r.rows[0].formula, want);
            assert_eq!(r.rows.len(), 7);
        }
    }

    #[test]
    fn regressions_examples() {
        let r = verify_regressions(&quiet()).unwrap();
        assert!(r.all_match());
        let find = |q: &str, p: &str| {
            r.rows
                .iter()
                .find(|x| x.quantity == q && x.param == p)
                .unwrap()
                .enumerated
        };
        assert_eq!(find("anderson", "s=7 t=8"), Some(429));
        assert_eq!(find("fibonacci", "s=2"), Some(2));
        assert_eq!(find("fibonacci", "s=3"), Some(3));
    }

    #[test]
    fn identity_examples() {
        assert_eq!(dip_sum(2).unwrap(), 4);
        assert_eq!(dip_target(2).unwrap(), 4);
        assert_eq!(convolution(3).unwrap(), 64);
        let r = verify_identities(3, &quiet()).unwrap();
        assert!(r.all_match());
        assert!(r
            .rows
            .iter()
            .any(|x| x.quantity == "marked" && x.param == "t=3" && x.formula == 21));
        assert!(verify_identities(21, &quiet()).unwrap_err().is_guard());
    }

    #[test]
    fn output_is_deterministic() {
        let a = verify_counts(3, &quiet()).unwrap().to_csv();
        let par = CensusOptions {
            mode: ExecMode::Parallel,
            ..quiet()
        };
        let b = verify_counts(3, &par).unwrap().to_csv();
        assert_eq!(a, b);
        assert!(a.starts_with("quantity,param,formula,enumerated,match,millis\nL,k=3,"));
        let r1 = verify_regressions(&par).unwrap().to_csv();
        assert_eq!(r1, verify_regressions(&quiet()).unwrap().to_csv());
    }

    #[test]
    fn mismatch_is_reported() {
        let mut r = verify_counts(1, &quiet()).unwrap();
        r.rows[0].enumerated = Some(99);
        r.rows[0].matched = Some(false);
        assert!(!r.all_match());
        assert!(r.to_table().contains("MISMATCH"));
        assert!(r.to_csv().contains("L,k=1,3,99,false,0"));
    }
}
