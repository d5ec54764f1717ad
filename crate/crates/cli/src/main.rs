use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use g2_tokuyama::paramsum::format::{to_csv, to_latex, to_text};
use g2_tokuyama::paramsum::{adj_symbolic, collect, compare_tables, counts, std_symbolic, Counts, ErrataReport};
use g2_tokuyama::patterns::{enumerate, weyl_dimension};
use g2_tokuyama::verify::{lhs_adj, lhs_std, lhs_sum, require_positive, rhs_formula, spot_check, verify, weyl_table};
use g2_tokuyama::{Error, LaurentPoly, MultiDegreeTable, VerificationReport, WeightParams};

const GRID_CAP: i64 = 12;

#[derive(Parser, Debug)]
#[command(name = "g2tok", version, about = "Exact verification of the G2 Tokuyama-type identity")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Part {
    Std,
    Adj,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare both sides exactly, for one cell or a grid of cells.
    Verify {
        #[arg(long, requires = "l2", conflicts_with = "grid")]
        l1: Option<i64>,
        #[arg(long, requires = "l1")]
        l2: Option<i64>,
        /// Every cell with 1 <= l1, l2 <= N.
        #[arg(long)]
        grid: Option<i64>,
        /// Also compare both sides at t = 1/q for this rational q.
        #[arg(long, allow_hyphen_values = true)]
        q_value: Option<String>,
    },
    /// List the patterns of highest weight theta + rho.
    Patterns {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
        /// Mark circled and boxed entries.
        #[arg(long)]
        verbose: bool,
        /// Print only the number of patterns.
        #[arg(long)]
        count: bool,
    },
    /// Generating function of the pattern weights.
    Lhs {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
        #[arg(long, value_enum, default_value_t = Part::All)]
        part: Part,
    },
    /// Deformed Weyl character.
    Rhs {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
    },
    /// Multi-degree tables: 1 Weyl side, 2 standard weights, 3 adjusted weights.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        /// Parity class of (l1, l2), as `e1,e2`.
        #[arg(long, default_value = "0,0", value_parser = parse_parity)]
        parity: (i64, i64),
    },
    /// Computed tables against the printed ones, with term counts.
    Errata,
}

fn parse_parity(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or("expected e1,e2")?;
    let bit = |x: &str| match x.trim() {
        "0" => Ok(0),
        "1" => Ok(1),
        other => Err(format!("parity must be 0 or 1, got {other:?}")),
    };
    Ok((bit(a)?, bit(b)?))
}

enum Failure {
    Usage(String),
    Check(String),
    Internal(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidWeight { .. } => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e)
    }
}

type Outcome = Result<String, Failure>;

fn weight(l1: i64, l2: i64) -> Result<WeightParams, Failure> {
    Ok(require_positive(l1, l2)?)
}

fn json<T: Serialize>(v: &T) -> Outcome {
    let mut s = serde_json::to_string_pretty(v).context("serializing report")?;
    s.push('\n');
    Ok(s)
}

fn unsupported(what: &str, f: Format) -> Failure {
    Failure::Usage(format!("{what} has no {f:?} output"))
}

fn parse_q(s: &str) -> Result<BigRational, Failure> {
    let q: BigRational = s.trim().parse().map_err(|_| Failure::Usage(format!("not a rational number: {s:?}")))?;
    if q == BigRational::from_integer(0.into()) {
        return Err(Failure::Usage("q-value must be nonzero".into()));
    }
    Ok(q)
}

#[derive(Serialize)]
struct Spot {
    x: String,
    y: String,
    t: String,
    agrees: bool,
}

/// Both sides at `x = 2/3`, `y = -5/7`, `t = 1/q`.
fn spot(lhs: &LaurentPoly, rhs: &LaurentPoly, q: &BigRational) -> Result<Spot, Failure> {
    let x = BigRational::new(2.into(), 3.into());
    let y = BigRational::new((-5).into(), 7.into());
    let t = q.recip();
    let agrees = spot_check(lhs, rhs, &x, &y, &t)?;
    Ok(Spot { x: x.to_string(), y: y.to_string(), t: t.to_string(), agrees })
}

#[derive(Serialize)]
struct CellReport {
    #[serde(flatten)]
    report: VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    spot: Option<Spot>,
}

#[derive(Serialize)]
struct GridRow {
    l1: i64,
    l2: i64,
    equal: bool,
    pattern_count: u64,
    lhs_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    spot: Option<bool>,
}

fn verify_cell(w: WeightParams, q: Option<&BigRational>) -> Result<CellReport, Failure> {
    let report = verify(w)?;
    let spot = q.map(|q| spot(&report.lhs, &report.rhs, q)).transpose()?;
    Ok(CellReport { report, spot })
}

fn cmd_verify(fmt: Format, l1: Option<i64>, l2: Option<i64>, grid: Option<i64>, q: Option<String>) -> Outcome {
    let q = q.as_deref().map(parse_q).transpose()?;
    if let Some(n) = grid {
        if !(1..=GRID_CAP).contains(&n) {
            return Err(Failure::Usage(format!("grid bound must be in 1..={GRID_CAP}, got {n}")));
        }
        return verify_grid(fmt, n, q.as_ref());
    }
    let (Some(l1), Some(l2)) = (l1, l2) else {
        return Err(Failure::Usage("verify needs --l1 and --l2, or --grid".into()));
    };
    let cell = verify_cell(weight(l1, l2)?, q.as_ref())?;
    let r = &cell.report;
    let ok = r.equal && cell.spot.as_ref().is_none_or(|s| s.agrees);
    let out = match fmt {
        Format::Json => json(&cell)?,
        Format::Csv => format!("l1,l2,patterns,equal\n{},{},{},{}\n", l1, l2, r.pattern_count, r.equal),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "weight    {}", r.params).unwrap();
            writeln!(s, "patterns  {}", r.pattern_count).unwrap();
            writeln!(s, "lhs       {} terms", r.lhs.len()).unwrap();
            writeln!(s, "rhs       {} terms", r.rhs.len()).unwrap();
            if r.lhs.len() <= 40 {
                writeln!(s, "lhs = {}", r.lhs).unwrap();
            }
            if !r.equal {
                writeln!(s, "diff = {}", r.diff).unwrap();
            }
            for (rule, n) in &r.adj_rule_histogram {
                writeln!(s, "  {rule}: {n}").unwrap();
            }
            if let Some(sp) = &cell.spot {
                writeln!(s, "spot      x={} y={} t={} agrees={}", sp.x, sp.y, sp.t, sp.agrees).unwrap();
            }
            writeln!(s, "{}", if r.equal { "EQUAL" } else { "MISMATCH" }).unwrap();
            s
        }
        Format::Latex => return Err(unsupported("verify", fmt)),
    };
    if ok {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check(format!("identity fails at ({l1}, {l2})")))
    }
}

fn verify_grid(fmt: Format, n: i64, q: Option<&BigRational>) -> Outcome {
    let cells: Vec<(i64, i64)> = (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).collect();
    let rows = cells
        .par_iter()
        .map(|&(l1, l2)| {
            let c = verify_cell(weight(l1, l2)?, q)?;
            Ok(GridRow {
                l1,
                l2,
                equal: c.report.equal,
                pattern_count: c.report.pattern_count,
                lhs_terms: c.report.lhs.len(),
                spot: c.spot.map(|s| s.agrees),
            })
        })
        .collect::<Result<Vec<GridRow>, Failure>>()?;
    let out = match fmt {
        Format::Json => json(&rows)?,
        Format::Csv | Format::Text => {
            let mut s = String::from(if fmt == Format::Csv { "l1,l2,patterns,equal\n" } else { "" });
            for r in &rows {
                if fmt == Format::Csv {
                    writeln!(s, "{},{},{},{}", r.l1, r.l2, r.pattern_count, r.equal).unwrap();
                } else {
                    let verdict = if r.equal { "ok" } else { "MISMATCH" };
                    writeln!(s, "({:>2},{:>2})  {:>9} patterns  {verdict}", r.l1, r.l2, r.pattern_count).unwrap();
                }
            }
            s
        }
        Format::Latex => return Err(unsupported("verify", fmt)),
    };
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.equal || r.spot == Some(false))
        .map(|r| format!("({}, {})", r.l1, r.l2))
        .collect();
    if bad.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check(format!("identity fails at {}", bad.join(" "))))
    }
}

fn cmd_patterns(fmt: Format, w: WeightParams, verbose: bool, only_count: bool) -> Outcome {
    let ps = enumerate(w);
    let dim = weyl_dimension(w);
    if only_count {
        return match fmt {
            Format::Json => json(&serde_json::json!({ "params": w, "count": ps.len(), "weyl_dimension": dim })),
            Format::Csv => Ok(format!("l1,l2,count\n{},{},{}\n", w.l1, w.l2, ps.len())),
            Format::Text => Ok(format!("{}\n", ps.len())),
            Format::Latex => Err(unsupported("patterns", fmt)),
        };
    }
    match fmt {
        Format::Json => json(&serde_json::json!({ "params": w, "count": ps.len(), "patterns": ps })),
        Format::Csv => {
            let mut s = String::from("a,b,c,d,e,f\n");
            for p in &ps {
                writeln!(s, "{},{},{},{},{},{}", p.a, p.b, p.c, p.d, p.e, p.f).unwrap();
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for p in &ps {
                let dec = verbose.then(|| p.decorations(w));
                writeln!(s, "{}", p.render(dec.as_ref())).unwrap();
            }
            writeln!(s, "# {} patterns", ps.len()).unwrap();
            Ok(s)
        }
        Format::Latex => Err(unsupported("patterns", fmt)),
    }
}

fn emit_poly(fmt: Format, what: &str, p: &LaurentPoly) -> Outcome {
    match fmt {
        Format::Json => Ok(format!("{}\n", p.to_json())),
        Format::Csv => {
            let mut s = String::from("ex,ey,coefficient\n");
            for (&(ex, ey), c) in p.terms() {
                writeln!(s, "{ex},{ey},{c}").unwrap();
            }
            Ok(s)
        }
        Format::Text => Ok(format!("{p}\n")),
        Format::Latex => Err(unsupported(what, fmt)),
    }
}

fn emit_table(fmt: Format, t: &MultiDegreeTable) -> Outcome {
    match fmt {
        Format::Json => json(t),
        Format::Csv => Ok(to_csv(t)),
        Format::Latex => Ok(to_latex(t)),
        Format::Text => Ok(to_text(t)),
    }
}

fn cmd_tables(fmt: Format, which: u8, (e1, e2): (i64, i64)) -> Outcome {
    let table = match which {
        1 => weyl_table(),
        2 => collect(&std_symbolic()?, e1, e2)?,
        _ => collect(&adj_symbolic()?, e1, e2)?,
    };
    emit_table(fmt, &table)
}

const EXPECTED_DEGREES: [(&str, usize); 5] =
    [("std_degrees", 33), ("adj_degrees", 14), ("union_degrees", 35), ("std_nonzero", 18), ("adj_nonzero", 10)];

fn degree_counts(c: &Counts) -> [usize; 5] {
    [c.std_degrees, c.adj_degrees, c.union_degrees, c.std_nonzero, c.adj_nonzero]
}

#[derive(Serialize)]
struct Errata {
    counts: Counts,
    #[serde(flatten)]
    report: ErrataReport,
}

fn hard_failures(e: &Errata) -> Vec<String> {
    let mut out = Vec::new();
    for ((name, want), got) in EXPECTED_DEGREES.iter().zip(degree_counts(&e.counts)) {
        if got != *want {
            out.push(format!("{name} = {got}, expected {want}"));
        }
    }
    for c in &e.report.cancellation {
        if !(c.support_matches && c.all_plus_minus_t && c.equals_weyl_side) {
            out.push(format!("cancellation fails for parity {:?}", c.eps));
        }
    }
    if !e.report.parity_independent {
        out.push("final tables differ between parity classes".into());
    }
    out
}

fn errata_text(e: &Errata) -> String {
    let c = &e.counts;
    let mut s = String::new();
    writeln!(s, "raw terms        std {}  adj {}", c.std_terms_raw, c.adj_terms_raw).unwrap();
    writeln!(s, "merged terms     std {}  adj {}", c.std_terms_merged, c.adj_terms_merged).unwrap();
    writeln!(s, "raw degrees      std {}  adj {}  union {}", c.std_degrees, c.adj_degrees, c.union_degrees).unwrap();
    writeln!(s, "nonzero degrees  std {}  adj {}", c.std_nonzero, c.adj_nonzero).unwrap();
    for ch in &e.report.cancellation {
        writeln!(s, "parity {:?}: {} surviving, equals Weyl side: {}", ch.eps, ch.surviving, ch.equals_weyl_side).unwrap();
    }
    writeln!(s, "parity independent: {}", e.report.parity_independent).unwrap();
    let printed: Vec<String> = e.report.printed_inconsistent.iter().map(ToString::to_string).collect();
    writeln!(s, "printed rows that do not cancel: {}", printed.join(" ")).unwrap();
    for r in e.report.flagged() {
        let kind = r.discrepancy.map(|d| format!("{d:?}")).unwrap_or_default();
        writeln!(s, "table {} {}  {kind}: printed {}, computed {}", r.table, r.degree, r.printed, r.computed).unwrap();
    }
    s
}

fn cmd_errata(fmt: Format) -> Outcome {
    let e = Errata { counts: counts()?, report: compare_tables()? };
    let out = match fmt {
        Format::Json => json(&e)?,
        Format::Text => errata_text(&e),
        Format::Csv => {
            let mut s = String::from("table,degree,agrees,discrepancy,printed,computed\n");
            for r in e.report.table1.iter().chain(&e.report.table2).chain(&e.report.table3) {
                let kind = r.discrepancy.map(|d| format!("{d:?}")).unwrap_or_default();
                writeln!(s, "{},\"{}\",{},{kind},\"{}\",\"{}\"", r.table, r.degree, r.agrees, r.printed, r.computed)
                    .unwrap();
            }
            s
        }
        Format::Latex => return Err(unsupported("errata", fmt)),
    };
    let bad = hard_failures(&e);
    if bad.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check(bad.join("; ")))
    }
}

fn run(cli: Cli) -> Outcome {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("starting thread pool")?;
    }
    let fmt = cli.format;
    match cli.command {
        Command::Verify { l1, l2, grid, q_value } => cmd_verify(fmt, l1, l2, grid, q_value),
        Command::Patterns { l1, l2, verbose, count } => cmd_patterns(fmt, weight(l1, l2)?, verbose, count),
        Command::Lhs { l1, l2, part } => {
            let w = weight(l1, l2)?;
            let p = match part {
                Part::Std => lhs_std(w),
                Part::Adj => lhs_adj(w),
                Part::All => lhs_sum(w),
            };
            emit_poly(fmt, "lhs", &p)
        }
        Command::Rhs { l1, l2 } => emit_poly(fmt, "rhs", &rhs_formula(weight(l1, l2)?)?),
        Command::Tables { which, parity } => cmd_tables(fmt, which, parity),
        Command::Errata => cmd_errata(fmt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("g2tok: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("g2tok: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("g2tok: {e:#}");
            ExitCode::from(1)
        }
    }
}
