//! Command-line front end.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! status with the rendered output, so the binary is a thin wrapper and
//! tests can drive the tool in-process.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::asymptotics::{bound_table, render_bound_table};
use crate::chartable::{
    cyclic_table, dihedral_table, load_table, parse_table, render_table, symmetric_table, validate,
    AnyTable, CharacterTable,
};
use crate::crack::{cracking_point, is_gelfand, with_workers, SearchOptions, Verdict};
use crate::error::{Error, Result};
use crate::oracle::{self, CharCheck, OracleReport, SmallGroup};
use crate::scalar::{to_multiplicity, ClassScalar, DEFAULT_MULTIPLICITY_TOL};
use crate::wreath::{decompose_m_pi, kron_multiplicity, m_pi_function, m_pi_identity, PiMultiset};
use crate::Exact;

/// Seed used when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 20_240_601;

const BUNDLED: &[(&str, &str)] = &[
    ("gl23.json", include_str!("../data/gl23.json")),
    ("c2.json", include_str!("../data/c2.json")),
];

/// A group argument: `symmetric:k`, `cyclic:m`, `dihedral:m` or `file:path`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Cyclic(u64),
    Dihedral(u64),
    File(String),
}

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("expected KIND:ARG, got {s:?}"))?;
        let number = |what: &str| -> std::result::Result<u64, String> {
            arg.parse::<u64>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| format!("{what} needs a positive integer, got {arg:?}"))
        };
        match kind {
            "symmetric" => Ok(GroupSpec::Symmetric(number("symmetric")? as usize)),
            "cyclic" => Ok(GroupSpec::Cyclic(number("cyclic")?)),
            "dihedral" => Ok(GroupSpec::Dihedral(number("dihedral")?)),
            "file" if !arg.is_empty() => Ok(GroupSpec::File(arg.to_string())),
            _ => Err(format!(
                "unknown group {s:?}; use symmetric:k, cyclic:m, dihedral:m or file:path"
            )),
        }
    }
}

impl GroupSpec {
    pub fn resolve(&self) -> Result<AnyTable> {
        Ok(match self {
            GroupSpec::Symmetric(k) => symmetric_table::<Exact>(*k)?.into(),
            GroupSpec::Cyclic(m) => cyclic_table::<f64>(*m).into(),
            GroupSpec::Dihedral(m) => dihedral_table::<f64>(*m)?.into(),
            GroupSpec::File(path) => load_table(&read_document(path)?)?,
        })
    }

    fn small_group(&self) -> Result<SmallGroup> {
        match self {
            GroupSpec::Symmetric(k) => SmallGroup::new_symmetric(*k),
            GroupSpec::Cyclic(m) => SmallGroup::new_cyclic(*m as usize),
            _ => Err(Error::Invalid(
                "the oracle handles symmetric:k (k <= 3) and cyclic:m (m <= 4)".into(),
            )),
        }
    }
}

/// Reads a table document, falling back to the bundled copies of
/// `gl23.json` and `c2.json` when the path does not exist.
pub fn read_document(path: &str) -> Result<String> {
    match std::fs::read_to_string(path) {
        Ok(s) => Ok(s),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            let name = Path::new(path).file_name().and_then(|n| n.to_str());
            BUNDLED
                .iter()
                .find(|(file, _)| Some(*file) == name)
                .map(|(_, doc)| doc.to_string())
                .ok_or_else(|| io_error(path, e))
        }
        Err(e) => Err(io_error(path, e)),
    }
}

fn io_error(path: &str, e: std::io::Error) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{path}: {e}")))
}

#[derive(Parser, Debug)]
#[command(
    name = "wreath-gelfand",
    version,
    about = "Gelfand-pair verdicts and cracking points for wreath products"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Integer-rounding tolerance for the approximate backend.
    #[arg(long, global = true, default_value_t = DEFAULT_MULTIPLICITY_TOL)]
    tol: f64,
    /// Worker threads (0 = all cores). Does not change output.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Seed for the oracle's random trials.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a character table.
    Chartable { group: GroupSpec },
    /// Validate a character-table file.
    ValidateTable { file: String },
    /// Multiplicity of the target irrep in a tensor product.
    Kron {
        group: GroupSpec,
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<String>,
        #[arg(long)]
        target: String,
    },
    /// M_π on the classes of its stabilizer, and its decomposition.
    Mpi {
        group: GroupSpec,
        #[arg(short)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<String>,
    },
    /// Decide one level.
    Gelfand {
        group: GroupSpec,
        #[arg(short)]
        n: usize,
        /// Examine every π instead of stopping at the first witness.
        #[arg(long)]
        exhaustive: bool,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        cross_check: bool,
    },
    /// Find the first level that is not a Gelfand pair.
    Crack {
        group: GroupSpec,
        #[arg(long)]
        n_max: usize,
    },
    /// Largest degree of S_k against 2p(k) + 2.
    Bound {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Brute-force verdict on the explicit wreath product.
    Oracle {
        group: GroupSpec,
        #[arg(short)]
        n: usize,
        /// Random diagonal elements per permutation in the character check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_validation() {
        3
    } else {
        2
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let workers = cli.global.workers;
    with_workers(workers, || match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    })
}

macro_rules! with_table {
    ($table:expr, $t:ident => $body:expr) => {
        match $table {
            AnyTable::Exact($t) => $body,
            AnyTable::Approx($t) => $body,
        }
    };
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Error::Invalid(e.to_string()))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let opts = SearchOptions {
        tol: g.tol,
        exhaustive: false,
        workers: 0,
    };
    match &cli.command {
        Command::Chartable { group } => {
            let table = group.resolve()?;
            with_table!(&table, t => {
                let out = if g.json { render_table(t)? } else { table_text(t) };
                Ok(Outcome::ok(out))
            })
        }
        Command::ValidateTable { file } => {
            let table = parse_table(&read_document(file)?)?;
            let report = with_table!(&table, t => validate(t));
            let out = if g.json {
                to_json(&report)?
            } else {
                let mut s = String::new();
                let _ = writeln!(s, "table           {}", report.table);
                let _ = writeln!(s, "tolerance       {:e}", report.tolerance);
                let _ = writeln!(s, "row residual    {:e}", report.row_residual);
                let _ = writeln!(s, "column residual {:e}", report.column_residual);
                let _ = writeln!(s, "class sizes     {}", pass(report.size_sum_ok));
                let _ = writeln!(s, "degrees         {}", pass(report.dimension_sum_ok));
                let _ = writeln!(s, "power maps      {}", pass(report.power_maps_ok));
                for f in &report.failures {
                    let _ = writeln!(s, "failure: {f}");
                }
                let _ = writeln!(s, "{}", if report.passed { "valid" } else { "invalid" });
                s
            };
            Ok(Outcome {
                code: if report.passed { 0 } else { 3 },
                stdout: out,
                stderr: String::new(),
            })
        }
        Command::Kron {
            group,
            sources,
            target,
        } => {
            let table = group.resolve()?;
            let a = with_table!(&table, t => {
                let src = irrep_indices(t, sources)?;
                let tgt = irrep_indices(t, std::slice::from_ref(target))?[0];
                kron_multiplicity(t, &src, tgt, g.tol)?
            });
            let out = if g.json {
                to_json(&json!({
                    "group": table.name(),
                    "sources": sources,
                    "target": target,
                    "multiplicity": a,
                }))?
            } else {
                format!("{a}\n")
            };
            Ok(Outcome::ok(out))
        }
        Command::Mpi { group, n, labels } => {
            if labels.len() != *n {
                return Err(Error::Invalid(format!(
                    "{} labels given for n = {n}",
                    labels.len()
                )));
            }
            let table = group.resolve()?;
            let report = with_table!(&table, t => mpi_report(t, labels, g.tol)?);
            let out = if g.json {
                to_json(&report)?
            } else {
                report.to_text()
            };
            Ok(Outcome::ok(out))
        }
        Command::Gelfand {
            group,
            n,
            exhaustive,
            cross_check,
        } => {
            let table = group.resolve()?;
            let opts = SearchOptions {
                exhaustive: *exhaustive,
                ..opts
            };
            let report = with_table!(&table, t => is_gelfand(t, *n, &opts)?);
            let oracle = if *cross_check {
                Some(oracle::cross_check(group.small_group()?, *n, &opts)?)
            } else {
                None
            };
            let disagree = oracle
                .as_ref()
                .is_some_and(|o| !o.agree || (o.commutes != (report.verdict == Verdict::Gelfand)));
            let out = if g.json {
                to_json(&json!({ "report": report, "oracle": oracle }))?
            } else {
                let mut s = report.to_text();
                if let Some(o) = &oracle {
                    s.push_str(&o.to_text());
                }
                s
            };
            Ok(Outcome {
                code: if disagree { 1 } else { 0 },
                stdout: out,
                stderr: String::new(),
            })
        }
        Command::Crack { group, n_max } => {
            let table = group.resolve()?;
            let report = with_table!(&table, t => cracking_point(t, *n_max, &opts)?);
            let out = if g.json {
                to_json(&report)?
            } else {
                report.to_text()
            };
            Ok(Outcome::ok(out))
        }
        Command::Bound { from, to } => {
            let rows = bound_table(*from, *to)?;
            let out = if g.json {
                to_json(&rows)?
            } else {
                render_bound_table(&rows)
            };
            Ok(Outcome::ok(out))
        }
        Command::Oracle { group, n, trials } => {
            let small = group.small_group()?;
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            let (explicit, _) = oracle::build_wreath(small, *n)?;
            explicit.check_axioms(&mut rng, 1000)?;
            let report = oracle::cross_check(small, *n, &opts)?;
            let chars = oracle::wreath_char_check(*n, *trials, &mut rng)?;
            let ok = report.agree && chars.passed();
            let out = if g.json {
                to_json(&json!({ "report": report, "char_check": chars }))?
            } else {
                oracle_text(&report, &chars)
            };
            Ok(Outcome {
                code: if ok { 0 } else { 1 },
                stdout: out,
                stderr: String::new(),
            })
        }
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn oracle_text(report: &OracleReport, chars: &CharCheck) -> String {
    let mut s = report.to_text();
    match &chars.mismatch {
        None => {
            let _ = writeln!(
                s,
                "char check     {} comparisons, all equal",
                chars.comparisons
            );
        }
        Some(m) => {
            let _ = writeln!(
                s,
                "char check     sigma {:?} gamma {:?}: trace {} vs cycle product {}",
                m.sigma, m.gamma, m.trace, m.cycle_product
            );
        }
    }
    s
}

fn cell<S: ClassScalar>(v: &S) -> String {
    match v.nearest_integer() {
        Some((n, res)) if res < 1e-9 => n.to_string(),
        _ if v.re().abs() < 1e-12 => format!("{:.6}i", v.im()),
        _ => v.display(),
    }
}

/// Aligned text rendering of a character table.
pub fn table_text<S: ClassScalar>(t: &CharacterTable<S>) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["".to_string()];
    header.extend(t.classes().iter().map(|c| c.label.clone()));
    rows.push(header);
    let mut sizes = vec!["size".to_string()];
    sizes.extend(t.classes().iter().map(|c| c.size.to_string()));
    rows.push(sizes);
    for r in t.irreps() {
        let mut row = vec![r.label.clone()];
        row.extend(r.values.iter().map(cell));
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = format!(
        "{}  order {}  {}\n",
        t.name(),
        t.order(),
        t.backend().as_str()
    );
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (s, w))| {
                let pad = w - s.chars().count();
                if i == 0 {
                    format!("{s}{}", " ".repeat(pad))
                } else {
                    format!("{}{s}", " ".repeat(pad))
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Output of the `mpi` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MpiReport {
    pub group: String,
    pub pi: Vec<String>,
    pub stabilizer: Vec<usize>,
    /// `(class, M_π(class))` in class order.
    pub values: Vec<(String, i64)>,
    /// `(ρ, a_ρ)` in irrep order.
    pub decomposition: Vec<(String, u64)>,
    pub identity_value: i64,
    pub weighted_dimension: String,
}

impl MpiReport {
    pub fn to_text(&self) -> String {
        let blocks: Vec<String> = self.stabilizer.iter().map(|m| format!("S{m}")).collect();
        let mut s = String::new();
        let _ = writeln!(s, "group       {}", self.group);
        let _ = writeln!(s, "pi          ({})", self.pi.join(", "));
        let _ = writeln!(s, "stabilizer  {}", blocks.join(" x "));
        let _ = writeln!(s, "M_pi(e)     {}", self.identity_value);
        let _ = writeln!(s, "values");
        for (cls, v) in &self.values {
            let _ = writeln!(s, "  {cls:<24} {v}");
        }
        let _ = writeln!(s, "decomposition");
        for (rho, a) in &self.decomposition {
            let _ = writeln!(s, "  {rho:<24} {a}");
        }
        let _ = writeln!(s, "sum a dim rho = {}", self.weighted_dimension);
        s
    }
}

fn irrep_indices<S: ClassScalar>(t: &CharacterTable<S>, labels: &[String]) -> Result<Vec<usize>> {
    labels
        .iter()
        .map(|l| {
            t.irrep_index(l)
                .ok_or_else(|| Error::Invalid(format!("no irrep {l:?} in {}", t.name())))
        })
        .collect()
}

fn mpi_report<S: ClassScalar>(
    t: &CharacterTable<S>,
    labels: &[String],
    tol: f64,
) -> Result<MpiReport> {
    let pi = PiMultiset::new(t, irrep_indices(t, labels)?)?;
    let f = m_pi_function(&pi)?;
    let values = f
        .classes
        .iter()
        .zip(&f.values)
        .map(|(cls, v)| {
            let v = to_multiplicity(v, tol, &format!("M_π at {cls} for π = {pi}"))?;
            Ok((cls.to_string(), v))
        })
        .collect::<Result<Vec<_>>>()?;
    let identity_value =
        to_multiplicity(&m_pi_identity(&pi), tol, &format!("M_π(e) for π = {pi}"))?;
    let d = decompose_m_pi(&pi, tol)?;
    Ok(MpiReport {
        group: t.name().to_string(),
        pi: pi.label_names(),
        stabilizer: d.young.block_sizes().to_vec(),
        values,
        decomposition: d
            .coefficients
            .iter()
            .map(|(rho, a)| (rho.to_string(), *a))
            .collect(),
        identity_value,
        weighted_dimension: d.weighted_dimension().to_string(),
    })
}
