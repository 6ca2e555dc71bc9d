use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use distinct_cores::census::{self, CensusOptions, CensusReport, Guards};
use distinct_cores::lattice_path::{dyck_paths, free_dyck_paths, LatticePath};
use distinct_cores::{bijection, extremal, Error, ExecMode, GapPoset, OrderIdeal};

#[derive(Parser)]
#[command(
    name = "distinct-cores",
    version,
    about = "Simultaneous core partitions with distinct parts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Map {
    Psi,
    Phi,
}

#[derive(Subcommand)]
enum Command {
    /// Print the poset P_{s,t}, or M_{2k+1,2k+3} with --truncate-k.
    Poset {
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        truncate_k: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// List the order ideals of P_{s,t} with their partitions.
    Ideals {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
        /// Only ideals without two consecutive integers.
        #[arg(long)]
        nice: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Apply ψ (ideals of M_{2k+1,2k+3} avoiding 1) or φ (ideals of
    /// P_{k,k+1}) to an ideal, or invert it on a path.
    #[command(group(ArgGroup::new("input").required(true).args(["ideal", "path"])))]
    Bijection {
        #[arg(long)]
        k: u64,
        /// Comma-separated elements, e.g. 2,4,9; empty for ∅.
        #[arg(long, allow_hyphen_values = true)]
        ideal: Option<String>,
        /// Path over U and D, e.g. UDDU.
        #[arg(long)]
        path: Option<String>,
        #[arg(long, value_enum, default_value = "psi")]
        map: Map,
    },
    /// The largest (2k+1,2k+3)-core with distinct parts.
    Largest {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Compare closed forms against enumeration.
    #[command(group(ArgGroup::new("report").required(true).args(["counts", "largest", "regressions", "identities"])))]
    Verify {
        /// Class counts of nice ideals for one k.
        #[arg(long)]
        counts: bool,
        /// Largest size, its maximizers and the brute-force oracle for one k.
        #[arg(long)]
        largest: bool,
        /// Ideal counts against rational Catalan and Fibonacci numbers.
        #[arg(long)]
        regressions: bool,
        /// Path and marked-ideal identities for every k up to kmax.
        #[arg(long)]
        identities: bool,
        #[arg(long, required_if_eq_any([("counts", "true"), ("largest", "true")]))]
        k: Option<u64>,
        #[arg(long, required_if_eq("identities", "true"))]
        kmax: Option<u64>,
        /// Evaluate formulas only (k <= 30), without enumeration.
        #[arg(long)]
        formula_only: bool,
        /// Override the enumeration guard for the selected report.
        #[arg(long)]
        guard: Option<u64>,
        /// Write 0 in the millis column so output is reproducible.
        #[arg(long)]
        no_timing: bool,
        /// Run the report rows one after another.
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// List Dyck paths (or free Dyck paths) of a given order.
    Paths {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        free: bool,
    },
}

enum Failure {
    Usage(String),
    Guard(String),
    Mismatch,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// Writes to stdout, exiting quietly when the reader has gone away.
fn emit(text: std::fmt::Arguments<'_>) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().lock().write_fmt(text) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

macro_rules! out {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(format_args!("{}\n", format_args!($($arg)*))) };
}

fn reject_format(format: Format, allowed: &[Format], command: &str) -> Outcome {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let name = format
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        Err(Failure::Usage(format!("format {name} is not available for {command}")))
    }
}

fn to_json(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("values serialize to JSON")
}

fn poset(s: Option<u64>, t: Option<u64>, truncate_k: Option<u64>, format: Format) -> Outcome {
    reject_format(format, &[Format::Table, Format::Json, Format::Dot], "poset")?;
    let poset = match (truncate_k, s, t) {
        (Some(k), s, t) => {
            if s.is_some_and(|s| s != 2 * k + 1) || t.is_some_and(|t| t != 2 * k + 3) {
                return Err(Failure::Usage(format!(
                    "--truncate-k {k} requires --s {} --t {}",
                    2 * k + 1,
                    2 * k + 3
                )));
            }
            GapPoset::truncated(k)?
        }
        (None, Some(s), Some(t)) => GapPoset::new(s, t)?,
        _ => return Err(Failure::Usage("poset needs --s and --t, or --truncate-k".into())),
    };
    match format {
        Format::Json => outln!(
            "{}",
            serde_json::to_string_pretty(&poset.to_json()).expect("poset serializes")
        ),
        Format::Dot => out!("{}", poset.to_dot()),
        _ => {
            outln!("{}: {} elements", poset.id(), poset.len());
            for rank in 0..=poset.max_rank() {
                let row: Vec<String> = poset
                    .elements()
                    .iter()
                    .filter(|&&v| poset.rank(v) == Some(rank))
                    .map(u64::to_string)
                    .collect();
                if !row.is_empty() {
                    outln!("rank {rank}: {}", row.join(" "));
                }
            }
        }
    }
    Ok(())
}

fn ideal_json(ideal: &OrderIdeal) -> Result<serde_json::Value, Failure> {
    let partition = ideal.partition();
    Ok(json!({
        "members": ideal.members(),
        "partition": partition.parts(),
        "size": partition.size()?,
    }))
}

fn ideals(s: u64, t: u64, nice: bool, format: Format) -> Outcome {
    reject_format(format, &[Format::Table, Format::Json], "ideals")?;
    let poset = GapPoset::new(s, t)?;
    let list: Vec<OrderIdeal> = if nice {
        poset.nice_ideals()?.collect()
    } else {
        poset.ideals()?.collect()
    };
    if format == Format::Json {
        let values = list.iter().map(ideal_json).collect::<Result<Vec<_>, _>>()?;
        outln!("{}", to_json(json!(values)));
        return Ok(());
    }
    for ideal in &list {
        let partition = ideal.partition();
        outln!("{ideal}\t{partition}\t{}", partition.size()?);
    }
    eprintln!("{} ideals", list.len());
    Ok(())
}

fn parse_members(text: &str) -> Result<Vec<u64>, Failure> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    inner
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty() && *x != "∅")
        .map(|x| {
            x.parse()
                .map_err(|_| Failure::Usage(format!("bad element {x:?} in --ideal")))
        })
        .collect()
}

fn show_path(p: &LatticePath) -> String {
    if p.is_empty() {
        "ε".to_string()
    } else {
        p.to_string()
    }
}

fn bijection(k: u64, ideal: Option<String>, path: Option<String>, map: Map) -> Outcome {
    if let Some(text) = ideal {
        let members = parse_members(&text)?;
        let poset = match map {
            Map::Psi => GapPoset::truncated(k)?,
            Map::Phi => GapPoset::new(k, k + 1)?,
        };
        let ideal = poset.ideal(members)?;
        let image = match map {
            Map::Psi => {
                if ideal.contains(1) {
                    return Err(Failure::Usage("ψ is defined on ideals avoiding 1".into()));
                }
                if let Some((a, b)) = ideal.consecutive_pair() {
                    return Err(Failure::Usage(format!("ideal is not nice: contains {a} and {b}")));
                }
                bijection::psi(&ideal)?
            }
            Map::Phi => bijection::phi(&ideal)?,
        };
        outln!("{}", show_path(&image));
        return Ok(());
    }
    let text = path.expect("clap requires --ideal or --path");
    let p: LatticePath = text.parse()?;
    if p.len() as u64 != 2 * k {
        return Err(Failure::Usage(format!(
            "path has {} steps, expected {}",
            p.len(),
            2 * k
        )));
    }
    let ideal = match map {
        Map::Psi => bijection::psi_inverse(&p)?,
        Map::Phi => bijection::phi_inverse(&p)?,
    };
    outln!("{ideal}");
    Ok(())
}

fn largest(k: u64, format: Format) -> Outcome {
    reject_format(format, &[Format::Table, Format::Json], "largest")?;
    let size = extremal::largest_size(k)?;
    let partition = extremal::max_partition(k)?;
    let beta = partition.beta_set();
    if format == Format::Json {
        let value = json!({
            "k": k,
            "size": size,
            "partition": partition.parts(),
            "beta_set": beta.hooks(),
        });
        outln!("{}", to_json(value));
    } else {
        outln!("size {size}");
        outln!("partition {partition}");
        outln!("beta-set {beta}");
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    counts: bool,
    largest: bool,
    regressions: bool,
    identities: bool,
    k: Option<u64>,
    kmax: Option<u64>,
    formula_only: bool,
    guard: Option<u64>,
    no_timing: bool,
    sequential: bool,
    format: Format,
) -> Outcome {
    reject_format(format, &[Format::Table, Format::Csv, Format::Json], "verify")?;
    let mut guards = Guards::default();
    if let Some(g) = guard {
        if counts {
            guards.counts_k = g;
        } else if largest {
            guards.largest_k = g;
        } else if identities {
            guards.identities_k = g;
        }
    }
    let opts = CensusOptions {
        mode: if sequential {
            ExecMode::Sequential
        } else {
            ExecMode::default()
        },
        timing: !no_timing,
        guards,
    };
    if formula_only && !(counts || largest) {
        return Err(Failure::Usage(
            "--formula-only applies to --counts and --largest".into(),
        ));
    }
    let k = k.unwrap_or(0);
    let report: CensusReport = if counts && formula_only {
        census::verify_counts_formula(k, &opts)?
    } else if counts {
        census::verify_counts(k, &opts)?
    } else if largest && formula_only {
        census::verify_largest_formula(k, &opts)?
    } else if largest {
        census::verify_largest(k, &opts)?
    } else if regressions {
        census::verify_regressions(&opts)?
    } else {
        census::verify_identities(kmax.unwrap_or(0), &opts)?
    };
    match format {
        Format::Csv => out!("{}", report.to_csv()),
        Format::Json => outln!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        _ => out!("{}", report.to_table()),
    }
    if report.all_match() {
        Ok(())
    } else {
        for row in report.mismatches() {
            eprintln!(
                "mismatch: {} {} formula {} enumerated {:?}",
                row.quantity, row.param, row.formula, row.enumerated
            );
        }
        Err(Failure::Mismatch)
    }
}

fn paths(order: u64, free: bool) -> Outcome {
    let list: Vec<LatticePath> = if free {
        free_dyck_paths(order)?.collect()
    } else {
        dyck_paths(order)?.collect()
    };
    for p in &list {
        outln!("{}", show_path(p));
    }
    eprintln!("{} paths", list.len());
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Poset {
            s,
            t,
            truncate_k,
            format,
        } => poset(s, t, truncate_k, format),
        Command::Ideals { s, t, nice, format } => ideals(s, t, nice, format),
        Command::Bijection { k, ideal, path, map } => bijection(k, ideal, path, map),
        Command::Largest { k, format } => largest(k, format),
        Command::Verify {
            counts,
            largest,
            regressions,
            identities,
            k,
            kmax,
            formula_only,
            guard,
            no_timing,
            sequential,
            format,
        } => verify(
            counts,
            largest,
            regressions,
            identities,
            k,
            kmax,
            formula_only,
            guard,
            no_timing,
            sequential,
            format,
        ),
        Command::Paths { order, free } => paths(order, free),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
