//! The `braidfill` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::dynamics::{code_string, perron_root, sweep, symbol_code, t_of_q, transition_matrix, write_csv, OrbitPattern};
use crate::error::{Error, Result};
use crate::export::{manifold_link, snappy_script, Manifold, ManifoldParams};
use crate::families::{family_by_name, parse_fraction};
use crate::surgery::ExtendedRational;
use crate::verifier::{hdst_check, verify_magic, verify_thm42, verify_thm53, VerificationReport, THM42_GRID};

#[derive(Parser, Debug)]
#[command(name = "braidfill", version, about = "Braid families, surgery twist chains and horseshoe dynamics")]
pub struct Cli {
    /// Worker threads for parameter sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a braid from one of the families
    Family(FamilyArgs),
    /// Replay a proof chain
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Codes, slopes and dilatations
    #[command(subcommand)]
    Dynamics(DynamicsCommand),
    /// Write a link for the geometry side
    #[command(subcommand)]
    Export(ExportCommand),
    /// Combine volume tables
    #[command(subcommand, name = "plot-data")]
    PlotData(PlotCommand),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    Beta,
    BetaPrime,
    Gamma,
    Delta,
    Zeta,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    name: FamilyName,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReportOpts {
    /// Print the report as JSON
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Fill the fixed string of γ_ν; without --nu and --k runs the standard grid
    Thm42 {
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// The ζ chain; without --kappa runs κ = 1, 2, 3
    Thm53 {
        #[arg(long)]
        kappa: Option<u32>,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// From γ_0/1 to the magic manifold
    Magic {
        /// Also write the final link as JSON
        #[arg(long)]
        link: Option<PathBuf>,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Check a filling sequence: distinct, with a² + b² increasing
    Hdst {
        /// Coefficients such as 1/1 1/2 -7/2
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum DynamicsCommand {
    /// Horseshoe code of π_q
    Code {
        #[arg(long)]
        q: String,
        /// Orbit point to start from (default: the rightmost)
        #[arg(long)]
        start: Option<usize>,
    },
    /// Tent slope with kneading sequence the code of q
    Tq {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
    },
    /// Perron root of the transition matrix of π_q
    Dilatation {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
    },
    /// CSV of q, t(q), Perron root and their difference
    Sweep {
        /// Largest denominator
        #[arg(long, default_value_t = 20)]
        max_n: u32,
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct ManifoldArgs {
    #[arg(long, value_enum)]
    manifold: Manifold,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    /// Fill the fixed string of M̂ with 1/k
    #[arg(long)]
    k: Option<u32>,
    /// Fill black in M with −4 + 1/κ
    #[arg(long)]
    kappa: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ManifoldArgs {
    fn params(&self) -> ManifoldParams {
        ManifoldParams { q: self.q.clone(), nu: self.nu.clone(), k: self.k, kappa: self.kappa }
    }

    fn title(&self) -> String {
        let mut t = format!("{:?}", self.manifold);
        for (flag, v) in [("q", &self.q), ("nu", &self.nu)] {
            if let Some(v) = v {
                t.push_str(&format!(" {flag}={v}"));
            }
        }
        for (flag, v) in [("k", self.k), ("kappa", self.kappa)] {
            if let Some(v) = v {
                t.push_str(&format!(" {flag}={v}"));
            }
        }
        t
    }
}

#[derive(Subcommand, Debug)]
enum ExportCommand {
    /// Link JSON
    Link(ManifoldArgs),
    /// Python script that builds and fills the exterior in SnapPy
    SnappyScript(ManifoldArgs),
}

#[derive(Subcommand, Debug)]
enum PlotCommand {
    /// Merge `param,value` CSVs into one `series,param,value` table
    Merge {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// How a command ended, before it becomes an exit code.
enum Outcome {
    Done,
    Failed,
}

fn emit(out: &mut (dyn Write + Send), path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string())),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn reports(out: &mut (dyn Write + Send), reps: &[VerificationReport], opts: &ReportOpts) -> Result<Outcome> {
    let text = if opts.json {
        if reps.len() == 1 {
            json(&reps[0])
        } else {
            json(&reps)
        }
    } else {
        reps.iter().map(|r| r.text()).collect::<Vec<_>>().join("\n")
    };
    emit(out, opts.out.as_deref(), &text)?;
    Ok(if reps.iter().all(|r| r.passed) { Outcome::Done } else { Outcome::Failed })
}

fn family(out: &mut (dyn Write + Send), a: &FamilyArgs) -> Result<Outcome> {
    let (name, param) = match a.name {
        FamilyName::Beta => ("beta", a.q.as_deref()),
        FamilyName::BetaPrime => ("beta-prime", a.q.as_deref()),
        FamilyName::Gamma => ("gamma", a.nu.as_deref()),
        FamilyName::Delta => ("delta", None),
        FamilyName::Zeta => ("zeta", None),
    };
    let f = family_by_name(name, param)?;
    let text = match a.format {
        Format::Text => format!("{}\n", f.word),
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                braid: &'a BraidWord,
                roles: &'a std::collections::BTreeMap<String, Vec<usize>>,
            }
            json(&Out { braid: &f.word, roles: &f.roles })
        }
    };
    emit(out, a.out.as_deref(), &text)?;
    Ok(Outcome::Done)
}

fn verify(out: &mut (dyn Write + Send), cmd: &VerifyCommand) -> Result<Outcome> {
    match cmd {
        VerifyCommand::Thm42 { nu, k, opts } => {
            let nus: Vec<(u32, u32)> = match nu {
                Some(s) => vec![parse_fraction(s)?],
                None => THM42_GRID.to_vec(),
            };
            let ks: Vec<u32> = match k {
                Some(k) => vec![*k],
                None => vec![1, 2, 3],
            };
            let jobs: Vec<(u32, u32, u32)> = nus.iter().flat_map(|&(l, m)| ks.iter().map(move |&k| (l, m, k))).collect();
            let reps = jobs.par_iter().map(|&(l, m, k)| verify_thm42(l, m, k)).collect::<Result<Vec<_>>>()?;
            reports(out, &reps, opts)
        }
        VerifyCommand::Thm53 { kappa, opts } => {
            let kappas: Vec<u32> = kappa.map_or(vec![1, 2, 3], |k| vec![k]);
            let reps = kappas.par_iter().map(|&k| verify_thm53(k)).collect::<Result<Vec<_>>>()?;
            reports(out, &reps, opts)
        }
        VerifyCommand::Magic { link, opts } => {
            let rep = verify_magic()?;
            if let (Some(path), Some(l)) = (link, rep.link.as_ref()) {
                let mut l = l.clone();
                l.ledger.clear();
                emit(out, Some(path), &format!("{}\n", l.to_json()))?;
            }
            reports(out, &[rep], opts)
        }
        VerifyCommand::Hdst { coeffs } => {
            let cs = coeffs.iter().map(|c| c.parse::<ExtendedRational>()).collect::<Result<Vec<_>>>()?;
            let ok = hdst_check(&cs);
            emit(out, None, if ok { "pass\n" } else { "fail\n" })?;
            Ok(if ok { Outcome::Done } else { Outcome::Failed })
        }
    }
}

fn dynamics(out: &mut (dyn Write + Send), cmd: &DynamicsCommand) -> Result<Outcome> {
    let text = match cmd {
        DynamicsCommand::Code { q, start } => {
            let (m, n) = parse_fraction(q)?;
            format!("{}\n", code_string(&symbol_code(&OrbitPattern::of_q(m, n)?, *start)?))
        }
        DynamicsCommand::Tq { q, eps } => {
            let (m, n) = parse_fraction(q)?;
            let t = t_of_q(m, n, *eps)?;
            format!("{:.12}\n", t.t)
        }
        DynamicsCommand::Dilatation { q, eps } => {
            let (m, n) = parse_fraction(q)?;
            let r = perron_root(&transition_matrix(&OrbitPattern::of_q(m, n)?), *eps)?;
            format!("{r:.12}\n")
        }
        DynamicsCommand::Sweep { max_n, eps, out: path } => {
            let rows = if *max_n < 3 { Vec::new() } else { sweep(*max_n, *eps)? };
            let mut buf = Vec::new();
            if rows.is_empty() {
                buf.extend_from_slice(b"q,t,perron,diff\n");
            } else {
                write_csv(&rows, &mut buf)?;
            }
            let text = String::from_utf8(buf).expect("csv is utf-8");
            emit(out, path.as_deref(), &text)?;
            return Ok(Outcome::Done);
        }
    };
    emit(out, None, &text)?;
    Ok(Outcome::Done)
}

fn export(out: &mut (dyn Write + Send), cmd: &ExportCommand) -> Result<Outcome> {
    let (a, script) = match cmd {
        ExportCommand::Link(a) => (a, false),
        ExportCommand::SnappyScript(a) => (a, true),
    };
    let link = manifold_link(a.manifold, &a.params())?;
    let text = if script { snappy_script(&link, &a.title())? } else { format!("{}\n", link.to_json()) };
    emit(out, a.out.as_deref(), &text)?;
    Ok(Outcome::Done)
}

/// Sort key for a `param` cell: fractions and decimals by value.
fn param_value(s: &str) -> f64 {
    match s.split_once('/') {
        Some((a, b)) => match (a.trim().parse::<f64>(), b.trim().parse::<f64>()) {
            (Ok(a), Ok(b)) if b != 0.0 => a / b,
            _ => f64::NAN,
        },
        None => s.trim().parse().unwrap_or(f64::NAN),
    }
}

fn plot(out: &mut (dyn Write + Send), cmd: &PlotCommand) -> Result<Outcome> {
    let PlotCommand::Merge { inputs, out: path } = cmd;
    let io = |p: &Path, e: csv::Error| Error::Io(format!("{}: {e}", p.display()));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["series", "param", "value"]).map_err(|e| Error::Io(e.to_string()))?;
    for p in inputs {
        let series = p.file_stem().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned());
        let mut r = csv::Reader::from_path(p).map_err(|e| io(p, e))?;
        let headers = r.headers().map_err(|e| io(p, e))?.clone();
        let col = |name: &str| headers.iter().position(|h| h.trim() == name);
        let (Some(pc), Some(vc)) = (col("param"), col("value")) else {
            return Err(Error::Parse(format!("{}: expected a param,value header", p.display())));
        };
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec.map_err(|e| io(p, e))?;
            rows.push((rec[pc].trim().to_string(), rec[vc].trim().to_string()));
        }
        rows.sort_by(|a, b| param_value(&a.0).total_cmp(&param_value(&b.0)).then_with(|| a.0.cmp(&b.0)));
        for (param, value) in rows {
            w.write_record([series.as_str(), &param, &value]).map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    emit(out, path.as_deref(), &String::from_utf8(bytes).expect("csv is utf-8"))?;
    Ok(Outcome::Done)
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send)) -> Result<Outcome> {
    match &cli.command {
        Command::Family(a) => family(out, a),
        Command::Verify(c) => verify(out, c),
        Command::Dynamics(c) => dynamics(out, c),
        Command::Export(c) => export(out, c),
        Command::PlotData(c) => plot(out, c),
    }
}

/// Runs one command line. Exit code 0 on success, 1 when a verification
/// fails or a run-time step breaks, 2 for bad usage or parameters.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, out)),
            Err(e) => Err(Error::InvalidParameter(e.to_string())),
        },
        None => dispatch(&cli, out),
    };
    match result {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Io(_) | Error::NoConvergence(_) | Error::TemplateMismatch(_) => 1,
                _ => 2,
            }
        }
    }
}
