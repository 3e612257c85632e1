//! `qmock`: expand catalog series, verify registered identities, and print
//! partition rank tables.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qmock_core::algebra::parse_rational;
use qmock_core::oracles::{rank_distribution, PARTITION_CAP};
use qmock_core::special::standard_catalog;
use qmock_core::verify::{find, registry, verify_list, verify_list_parallel, Identity};
use qmock_core::{expand_term, HypergeometricTerm, QSeries, Report, Status, WValue};

#[derive(Parser)]
#[command(name = "qmock", version, about = "Exact q-series expansion and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Truncation order
    #[arg(long, env = "QMOCK_ORDER", default_value_t = 16)]
    order: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a catalog entry or a serialized term
    Expand {
        #[arg(long, required_unless_present = "term_file")]
        name: Option<String>,
        /// JSON file holding one summand family
        #[arg(long, conflicts_with = "name")]
        term_file: Option<String>,
        /// Expand at q -> 1/q
        #[arg(long)]
        inverted: bool,
        /// `symbolic` or a rational value for w
        #[arg(long, default_value = "symbolic")]
        w: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify registered identities
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Evaluate identities concurrently; output order is unchanged
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Dyson rank counts R(m, n) by enumeration
    RankTable {
        /// Largest n
        #[arg(long, default_value_t = 10)]
        max_n: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Inspect the function catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Usage and configuration errors exit with 2.
struct UsageError(String);

type CmdResult = Result<ExitCode, UsageError>;

fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand { name, term_file, inverted, w, common } => {
            cmd_expand(name, term_file, inverted, &w, &common)
        }
        Command::Verify { id, all, samples, seed, parallel, common } => {
            cmd_verify(id, all, samples, seed, parallel, &common)
        }
        Command::RankTable { max_n, format } => cmd_rank_table(max_n, format),
        Command::Catalog { action: CatalogAction::List { format } } => cmd_catalog_list(format),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("qmock: {msg}");
            ExitCode::from(2)
        }
    }
}

fn check_order(n: i64) -> Result<(), UsageError> {
    if n < 1 {
        return Err(UsageError(format!("order must be at least 1, got {n}")));
    }
    Ok(())
}

fn parse_w(s: &str) -> Result<WValue, UsageError> {
    if s == "symbolic" {
        return Ok(WValue::Symbolic);
    }
    parse_rational(s).map(WValue::At).map_err(|e| UsageError(format!("bad --w value `{s}`: {e}")))
}

fn cmd_expand(name: Option<String>, term_file: Option<String>, inverted: bool, w: &str, c: &Common) -> CmdResult {
    check_order(c.order)?;
    let wv = parse_w(w)?;
    let regime = if inverted { "inverted" } else { "direct" };
    let (label, anchor, series) = if let Some(path) = term_file {
        let text = fs::read_to_string(&path).map_err(|e| usage(format!("{path}: {e}")))?;
        let mut t: HypergeometricTerm = serde_json::from_str(&text).map_err(|e| usage(format!("{path}: {e}")))?;
        if inverted {
            t = qmock_core::hyperterm::term_invert_q(&t).map_err(usage)?;
        }
        let s = expand_term(&t, c.order, &wv).map_err(|e| usage(format!("{path}: {e}")))?;
        (path, "term file".to_string(), s)
    } else {
        let name = name.expect("clap enforces --name");
        let cat = standard_catalog();
        let entry = cat.get(&name).map_err(usage)?;
        let s = if inverted {
            cat.series_inverted(&name, &wv, c.order)
        } else {
            cat.series(&name, &wv, c.order)
        };
        let s = s.map_err(|e| usage(format!("{name}: {e}")))?;
        (name, entry.anchor.clone(), s)
    };
    match c.format {
        Format::Text => {
            println!("# name: {label}");
            println!("# anchor: {anchor}");
            println!("# regime: {regime}");
            println!("# order: {}", c.order);
            println!("# w: {wv}");
            println!("{}", render_series(&series));
        }
        Format::Json => {
            let mut v = series.to_json();
            let obj = v.as_object_mut().expect("series JSON is an object");
            obj.insert("name".into(), json!(label));
            obj.insert("anchor".into(), json!(anchor));
            obj.insert("regime".into(), json!(regime));
            obj.insert("w".into(), json!(wv.to_string()));
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// The series followed by its truncation marker.
fn render_series(s: &QSeries) -> String {
    let body = s.to_string();
    if s.is_exact() {
        body
    } else {
        format!("{body} + O(q^{})", s.order() + 1)
    }
}

fn cmd_verify(id: Option<String>, all: bool, samples: usize, seed: u64, parallel: bool, c: &Common) -> CmdResult {
    check_order(c.order)?;
    let idents: Vec<Identity> = if all {
        registry()
    } else {
        let id = id.expect("clap enforces --id");
        vec![find(&id).map_err(usage)?]
    };
    let cat = standard_catalog();
    let reports = if parallel {
        verify_list_parallel(cat, &idents, c.order, samples, seed)
    } else {
        verify_list(cat, &idents, c.order, samples, seed)
    };
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (p, f, e) = (count(Status::Pass), count(Status::Fail), count(Status::Error));
    let summary = format!("{p} passed / {f} failed / {e} errored");
    match c.format {
        Format::Text => {
            for r in &reports {
                println!("{}", r.line());
            }
            println!("{summary}");
        }
        Format::Json => {
            let v: Vec<Value> = reports.iter().map(Report::to_json).collect();
            println!("{}", serde_json::to_string_pretty(&Value::Array(v)).expect("serializable"));
            eprintln!("{summary}");
        }
    }
    Ok(if f + e == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_rank_table(max_n: i64, format: Format) -> CmdResult {
    if max_n < 0 || max_n > PARTITION_CAP {
        return Err(UsageError(format!("--max-n must lie in 0..={PARTITION_CAP}, got {max_n}")));
    }
    let rows = (0..=max_n)
        .map(|n| rank_distribution(n).map(|d| (n, d)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    match format {
        Format::Text => {
            for (n, d) in &rows {
                let cells: Vec<String> = d.iter().map(|(m, k)| format!("{m}:{k}")).collect();
                let total: u64 = d.values().sum();
                println!("n={n:<3} p={total:<6} {}", cells.join(" "));
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .flat_map(|(n, d)| d.iter().map(move |(m, k)| json!({"n": n, "m": m, "count": k})))
                .collect();
            println!("{}", serde_json::to_string_pretty(&Value::Array(v)).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalog_list(format: Format) -> CmdResult {
    let cat = standard_catalog();
    let mut rows = Vec::new();
    for e in cat.entries() {
        let regimes = cat.regimes(&e.name).map_err(usage)?;
        rows.push((e, regimes));
    }
    match format {
        Format::Text => {
            for (e, regimes) in &rows {
                let mode = serde_json::to_value(e.w_mode).expect("serializable");
                println!(
                    "{:<7} {:<10} {:<16} {}",
                    e.name,
                    mode.as_str().unwrap_or_default(),
                    regimes.join(","),
                    e.anchor
                );
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(e, regimes)| json!({"name": e.name, "anchor": e.anchor, "w_mode": e.w_mode, "regimes": regimes}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&Value::Array(v)).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}
