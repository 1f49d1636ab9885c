use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use skein::diagram::{parse_pd, pretzel, LinkDiagram};
use skein::invariants::{predicted_min_degree, reduced_jones_with, unreduced_colored_jones_with, Limits};
use skein::stability::{check_family, family_table, FamilyExpr, FamilySpec, Quantity, RateRule, TableRow, TailReport};
use skein::verify::{run_suite, Suite, SuiteReport, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "skein",
    version,
    about = "Exact colored Jones polynomials of pretzel links and their stable coefficients"
)]
struct Cli {
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long, global = true, env = "SKEIN_THREADS")]
    threads: Option<usize>,
    /// Largest number of Kauffman states (2^crossings) for the classical state sum.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    max_states: u64,
    /// Largest number of colored states ((n+1)^crossings) for the colored state sum.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_networks: u64,
    /// Largest number of fusion terms ((n+1)^regions) for the fused evaluator.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_fusion_terms: u64,
    /// Directory for cached Jones-Wenzl projectors.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colored bracket of one diagram, with its minimum degree.
    Bracket(BracketArgs),
    /// Normalized lowest coefficients for every member of a family.
    Table(TableArgs),
    /// Verify a stability rate over a family and print its tail.
    Tail(TailArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// The all-negative state graph in DOT format.
    Graph(GraphArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Pretzel diagram, e.g. `2,3,2`.
    #[arg(long)]
    pretzel: Option<String>,
    /// File with planar diagram code `PD[X[..],..]`.
    #[arg(long)]
    pd: Option<PathBuf>,
    /// File with a diagram in JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct BracketArgs {
    #[command(flatten)]
    source: Source,
    /// Color N of the reduced colored Jones polynomial J_N (cable color N-1).
    #[arg(long, conflicts_with = "cable")]
    color: Option<usize>,
    /// Cable color n of the bracket <S_n(D)>.
    #[arg(long)]
    cable: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct FamilyArgs {
    /// Region sizes as expressions in k, e.g. `8,6,k` or `k+2,k+4,k+1`.
    #[arg(long)]
    pretzel_family: String,
    /// Color N of the reduced J_N, as an expression in k.
    #[arg(long, conflicts_with = "cable")]
    color: Option<String>,
    /// Cable color n (reduced J_{n+1}), as an expression in k.
    #[arg(long)]
    cable: Option<String>,
    /// Work with unreduced brackets <S_n> in A-units instead of reduced J in q-units.
    #[arg(long)]
    unreduced: bool,
    /// Inclusive range of k, e.g. `1..10`.
    #[arg(long)]
    range: String,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Number of coefficients per row, as an expression in k.
    #[arg(long)]
    window: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct TailArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Claimed agreement depth of members k and k+1, as an expression in k.
    #[arg(long, required_unless_present = "twist_rate")]
    rate: Option<String>,
    /// Use the twist-region rate 4*min(k_i) (n = 1) or 4n(min(k_i)-1)+4 instead of --rate.
    #[arg(long, conflicts_with = "rate")]
    twist_rate: bool,
    /// Added to every claimed depth; positive values probe past the rate.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    slack: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Vec<SuiteName>,
    /// Also check table rows that are expensive to compute.
    #[arg(long)]
    stretch: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    PaperTables,
    TlIdentities,
    MinDegrees,
    RateTheorems,
    OracleEquivalence,
    All,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    source: Source,
    /// Output format; only `dot` is supported.
    #[arg(long, default_value = "dot", value_parser = ["dot"])]
    emit: String,
    /// Merge parallel edges.
    #[arg(long)]
    reduced: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("--threads")?;
    }
    if let Some(dir) = &cli.cache_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("--cache-dir {}", dir.display()))?;
        skein::planar::set_cache_dir(Some(dir.clone()));
    }
    let limits = Limits {
        max_crossings: (63 - cli.max_states.max(1).leading_zeros()) as usize,
        max_networks: cli.max_networks,
        max_fusion_terms: cli.max_fusion_terms,
    };
    let mut out = String::new();
    let ok = match cli.command {
        Command::Bracket(a) => bracket(&a, &limits, &mut out)?,
        Command::Table(a) => table(&a, &limits, &mut out)?,
        Command::Tail(a) => tail(&a, &limits, &mut out)?,
        Command::Verify(a) => verify(&a, &limits, &mut out)?,
        Command::Graph(a) => graph(&a, &mut out)?,
    };
    std::io::stdout().write_all(out.as_bytes())?;
    Ok(ok)
}

fn load(source: &Source) -> Result<LinkDiagram> {
    if let Some(text) = &source.pretzel {
        return Ok(pretzel(&parse_shape(text).context("--pretzel")?));
    }
    let (path, flag) = match (&source.pd, &source.json) {
        (Some(p), _) => (p, "--pd"),
        (_, Some(p)) => (p, "--json"),
        _ => bail!("one of --pretzel, --pd or --json is required"),
    };
    let text = std::fs::read_to_string(path).with_context(|| format!("{flag} {}", path.display()))?;
    let parsed = if flag == "--pd" { parse_pd(&text) } else { LinkDiagram::from_json(&text) };
    let mut d = parsed.with_context(|| format!("{flag} {}", path.display()))?;
    if flag == "--pd" {
        d.name = path.file_stem().map_or_else(|| "pd".into(), |s| s.to_string_lossy().into_owned());
    }
    Ok(d)
}

fn parse_shape(text: &str) -> Result<Vec<usize>> {
    let mut shape = Vec::new();
    let mut pos = 0;
    for part in text.split(',') {
        let v = part.trim().parse().map_err(|_| anyhow!("position {pos}: `{}` is not a region size", part.trim()))?;
        shape.push(v);
        pos += part.len() + 1;
    }
    Ok(shape)
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let (a, b) = text.split_once("..").ok_or_else(|| anyhow!("--range: expected `start..end`, got `{text}`"))?;
    let a = a.trim().parse().with_context(|| format!("--range: bad start `{a}`"))?;
    let b = b.trim().parse().with_context(|| format!("--range: bad end `{b}`"))?;
    Ok((a, b))
}

fn expr(text: &str, flag: &str) -> Result<FamilyExpr> {
    FamilyExpr::parse(text).with_context(|| format!("{flag} `{text}`"))
}

/// `e+d` with parentheses only when `e` is compound.
fn shifted(e: &FamilyExpr, d: i64) -> Result<FamilyExpr> {
    let src = e.source();
    let base = if src.chars().all(|c| c.is_ascii_alphanumeric()) { src.to_string() } else { format!("({src})") };
    Ok(FamilyExpr::parse(&format!("{base}{d:+}"))?)
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        let (start, end) = parse_range(&self.range)?;
        let quantity = match (&self.color, &self.cable, self.unreduced) {
            (Some(c), _, false) => Quantity::Jones(expr(c, "--color")?),
            (Some(c), _, true) => Quantity::Bracket(shifted(&expr(c, "--color")?, -1)?),
            (_, Some(c), false) => Quantity::Jones(shifted(&expr(c, "--cable")?, 1)?),
            (_, Some(c), true) => Quantity::Bracket(expr(c, "--cable")?),
            _ => bail!("one of --color or --cable is required"),
        };
        let spec = FamilySpec::parse(&self.pretzel_family, quantity, start, end).context("--pretzel-family")?;
        spec.members().context("--range")?;
        Ok(spec)
    }
}

fn bracket(a: &BracketArgs, limits: &Limits, out: &mut String) -> Result<bool> {
    let d = load(&a.source)?;
    let n = match (a.color, a.cable) {
        (Some(0), _) => bail!("--color must be at least 1"),
        (Some(big_n), _) => big_n - 1,
        (_, Some(n)) => n,
        _ => 1,
    };
    let value = unreduced_colored_jones_with(&d, n, limits)?;
    let min = value.min_degree().ok();
    let predicted = predicted_min_degree(&d, n.max(1));
    let reduced = if n >= 1 { Some(reduced_jones_with(&d, n + 1, limits)?) } else { None };
    let c = d.crossing_count();
    let s = d.s_minus();
    let formula = format!("-{c}*{n}^2 - 2*{n}*{s}");
    match a.format {
        Format::Json => {
            let v = json!({
                "diagram": d.name,
                "cable": n,
                "bracket": value.value().to_string(),
                "min_degree": min,
                "reduced_jones": reduced.as_ref().map(|q| q.to_string()),
                "predicted_min_degree": predicted.as_ref().ok(),
            });
            out.push_str(&serde_json::to_string_pretty(&v)?);
            out.push('\n');
        }
        Format::Text | Format::Csv => {
            out.push_str(&format!("diagram: {}\n", d.name));
            out.push_str(&format!("<S_{n}>: {}\n", value.value()));
            if let Some(q) = &reduced {
                out.push_str(&format!("J_{}: {}\n", n + 1, q));
            }
            match min {
                Some(m) => out.push_str(&format!("min degree: {m}\n")),
                None => out.push_str("min degree: undefined (zero)\n"),
            }
            match (&predicted, n) {
                (_, 0) => {}
                (Ok(p), _) => {
                    let verdict = if Some(*p) == min { "matches" } else { "DIFFERS" };
                    out.push_str(&format!("predicted: {formula} = {p} ({verdict})\n"));
                }
                (Err(e), _) => out.push_str(&format!("predicted: not applicable ({e})\n")),
            }
        }
    }
    Ok(predicted.map_or(true, |p| n == 0 || Some(p) == min))
}

fn render_rows(rows: &[TableRow], format: Format, out: &mut String) -> Result<()> {
    match format {
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(rows)?);
            out.push('\n');
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            w.write_record(["k", "diagram", "anchor", "coefficients"])?;
            for r in rows {
                let mut rec = vec![r.k.to_string(), r.label.clone(), r.anchor.to_string()];
                rec.extend(r.coeffs.iter().map(|c| c.to_string()));
                w.write_record(&rec)?;
            }
            out.push_str(&String::from_utf8(w.into_inner()?)?);
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
            for r in rows {
                let coeffs: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!("k={:<3} {:<width$}  {}\n", r.k, r.label, coeffs.join(",")));
            }
        }
    }
    Ok(())
}

fn table(a: &TableArgs, limits: &Limits, out: &mut String) -> Result<bool> {
    let spec = a.family.spec()?;
    let window = expr(&a.window, "--window")?;
    let rows = family_table(&spec, &window, limits)?;
    render_rows(&rows, a.format, out)?;
    Ok(true)
}

fn tail(a: &TailArgs, limits: &Limits, out: &mut String) -> Result<bool> {
    let spec = a.family.spec()?;
    let rule = match (&a.rate, a.twist_rate) {
        (Some(r), false) => RateRule::Lower(expr(r, "--rate")?),
        (None, true) => match spec.quantity {
            // At cable color 1 the colored rule 4n(k-1)+4 is the bracket rule 4k.
            Quantity::Bracket(_) => RateRule::TwistColored,
            Quantity::Jones(_) => bail!("--twist-rate needs --unreduced"),
        },
        _ => bail!("exactly one of --rate or --twist-rate is required"),
    };
    let report = check_family(&spec, &rule, a.slack, limits)?;
    render_report(&report, a.format, out)?;
    Ok(report.passed)
}

fn render_report(r: &TailReport, format: Format, out: &mut String) -> Result<()> {
    match format {
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(r)?);
            out.push('\n');
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["left", "right", "claimed", "agreed", "pass", "position", "left_coeff", "right_coeff"])?;
            for s in &r.steps {
                let (p, l, rr) = match &s.witness {
                    Some(wt) => (wt.position.to_string(), wt.left.to_string(), wt.right.to_string()),
                    None => Default::default(),
                };
                w.write_record([
                    &s.left,
                    &s.right,
                    &s.claimed.to_string(),
                    &s.agreed.to_string(),
                    &s.pass.to_string(),
                    &p,
                    &l,
                    &rr,
                ])?;
            }
            out.push_str(&String::from_utf8(w.into_inner()?)?);
        }
        Format::Text => {
            out.push_str(&r.to_string());
            out.push('\n');
        }
    }
    Ok(())
}

fn verify(a: &VerifyArgs, limits: &Limits, out: &mut String) -> Result<bool> {
    if a.suite.is_empty() {
        bail!("--suite is required");
    }
    let mut suites = Vec::new();
    for s in &a.suite {
        match s {
            SuiteName::All => suites.extend(Suite::ALL),
            SuiteName::PaperTables => suites.push(Suite::PaperTables),
            SuiteName::TlIdentities => suites.push(Suite::TlIdentities),
            SuiteName::MinDegrees => suites.push(Suite::MinDegrees),
            SuiteName::RateTheorems => suites.push(Suite::RateTheorems),
            SuiteName::OracleEquivalence => suites.push(Suite::OracleEquivalence),
        }
    }
    let opts = VerifyOptions { limits: *limits, stretch: a.stretch };
    let reports: Vec<SuiteReport> = suites.into_iter().map(|s| run_suite(s, &opts)).collect();
    match a.format {
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&reports)?);
            out.push('\n');
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "check", "pass", "detail"])?;
            for r in &reports {
                for c in &r.checks {
                    w.write_record([r.suite.name(), &c.name, &c.pass.to_string(), &c.detail])?;
                }
            }
            out.push_str(&String::from_utf8(w.into_inner()?)?);
        }
        Format::Text => {
            for r in &reports {
                out.push_str(&r.to_string());
                out.push('\n');
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed))
}

fn graph(a: &GraphArgs, out: &mut String) -> Result<bool> {
    let d = load(&a.source)?;
    let g = if a.reduced { d.reduced_minus_graph() } else { d.minus_graph() };
    out.push_str(&g.to_dot());
    Ok(true)
}
