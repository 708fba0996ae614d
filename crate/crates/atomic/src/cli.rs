//! Command-line front end. [`run`] parses arguments and returns the exit
//! code with the rendered output, so it can be driven from tests.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;

use atomic_core::affine::{
    affine_atomic_length, affine_from_word, shi_vector, AffineElement, AffineSystem, AffineWeight,
    DEFAULT_RADIUS_CAP,
};
use atomic_core::atomiclen::{atomic_length_w0, two_rho_height};
use atomic_core::cores::{orbit_cores, DEFAULT_SIZE_CAP};
use atomic_core::orbit::{OrbitConfig, DEFAULT_STATE_CAP};
use atomic_core::perms::invsum_total;
use atomic_core::susanfe::{special_reflection, susanfe_reflections};
use atomic_core::weyl::{evaluate, longest_element};
use atomic_core::{Error, RootSystem, TypeLabel, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::fixtures;
use crate::parallel::{affine_probe_parallel, default_threads, image_set_parallel, perm_stats_parallel};
use crate::report::{
    AffineJson, CapErrorJson, CoresJson, ImageJson, RootEntry, ShiJson, SpecialJson, StatsRow, SusanfeJson,
    VerifyJson, W0Json,
};

/// Exit code for a computation that hit a cap.
pub const EXIT_CAP: i32 = 3;
/// Exit code for usage errors and invalid input.
pub const EXIT_USAGE: i32 = 2;
/// Exit code when `verify` finds a mismatch.
pub const EXIT_MISMATCH: i32 = 1;

const STRESS_STATE_CAP: usize = 1 << 31;
const STRESS_RADIUS_CAP: u64 = 10_000_000;
const STRESS_SIZE_CAP: usize = 100_000;
const MAX_ENTROPY_N: usize = 10;
const STRESS_ENTROPY_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "atomic", version, about = "Atomic length on finite and affine Weyl groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    /// Raise the enumeration caps (needed for the E8 image).
    #[arg(long, global = true)]
    pub stress: bool,
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Type label such as A5, E8 or A2~.
    #[arg(long = "type", value_name = "TYPE")]
    pub type_label: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Image of the λ-atomic length on a finite Weyl group.
    Image {
        #[command(flatten)]
        ty: TypeArg,
        /// Fundamental-weight coordinates of λ (default ρ).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weight: Option<Vec<i64>>,
        /// Override the orbit state cap.
        #[arg(long)]
        max_states: Option<usize>,
    },
    /// Atomic length of the longest element.
    W0 {
        #[command(flatten)]
        ty: TypeArg,
    },
    /// Susanfe reflections of a classical type.
    Susanfe {
        #[command(flatten)]
        ty: TypeArg,
        /// List every Susanfe reflection with L(t, I).
        #[arg(long)]
        list: bool,
    },
    /// Shi vector of an element, printed by root height.
    Shi {
        #[command(flatten)]
        ty: TypeArg,
        /// Word in s_0..s_n (s_1..s_n for a finite type); defaults to the
        /// special reflection of a classical finite type.
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
    },
    /// Values of the λ-atomic length on an affine Weyl group up to a radius.
    Affine {
        #[command(flatten)]
        ty: TypeArg,
        /// Affine fundamental coordinates m_0..m_n (default Λ0).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weight: Option<Vec<i64>>,
        #[arg(long, default_value_t = 12)]
        radius: u64,
        /// Evaluate a single element instead of probing the image.
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
    },
    /// Sizes of (n+1)-core partitions.
    Cores {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: usize,
        /// Only report counts, not the partitions.
        #[arg(long)]
        count_only: bool,
    },
    /// Permutation statistics of S_n.
    Entropy {
        #[arg(long)]
        n: usize,
        /// Emit one row per permutation.
        #[arg(long)]
        stats: bool,
    },
    /// Run the fixture suite.
    Verify,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub format: Format,
    pub threads: usize,
    pub stress: bool,
    pub max_states: usize,
    pub radius_cap: u64,
    pub size_cap: usize,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let format = if cli.json { Format::Json } else { cli.format };
        let threads = cli.threads.map_or_else(default_threads, |t| t as usize);
        let stress = cli.stress;
        RunConfig {
            format,
            threads,
            stress,
            max_states: if stress { STRESS_STATE_CAP } else { DEFAULT_STATE_CAP },
            radius_cap: if stress { STRESS_RADIUS_CAP } else { DEFAULT_RADIUS_CAP },
            size_cap: if stress { STRESS_SIZE_CAP } else { DEFAULT_SIZE_CAP },
        }
    }

    fn orbit(&self) -> OrbitConfig {
        OrbitConfig { max_states: self.max_states, max_depth: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Out = Result<Outcome, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if e.use_stderr() => return Outcome::fail(EXIT_USAGE, e.render().to_string()),
        Err(e) => return Outcome::ok(e.render().to_string()),
    };
    let cfg = RunConfig::from_cli(&cli);
    match dispatch(&cli.command, &cfg) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Outcome::fail(EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Core(e)) => match CapErrorJson::from_error(&e) {
            Some(cap) => Outcome::fail(EXIT_CAP, to_json(&cap) + "\n"),
            None => Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
        },
    }
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Out {
    match cmd {
        Command::Image { ty, weight, max_states } => image(ty, weight.as_deref(), *max_states, cfg),
        Command::W0 { ty } => w0(ty, cfg),
        Command::Susanfe { ty, list } => susanfe(ty, *list, cfg),
        Command::Shi { ty, word } => shi(ty, word.as_deref(), cfg),
        Command::Affine { ty, weight, radius, word } => {
            affine(ty, weight.as_deref(), *radius, word.as_deref(), cfg)
        }
        Command::Cores { n, max, count_only } => cores(*n, *max, *count_only, cfg),
        Command::Entropy { n, stats } => entropy(*n, *stats, cfg),
        Command::Verify => verify(cfg),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn csv_rows<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("report rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 output")
}

fn parse_label(ty: &TypeArg) -> Result<TypeLabel, Failure> {
    Ok(ty.type_label.parse()?)
}

fn finite_system(ty: &TypeArg) -> Result<RootSystem, Failure> {
    let label = parse_label(ty)?;
    if label.affine {
        return Err(Failure::Usage(format!("{label} is affine; use the `affine` subcommand")));
    }
    Ok(RootSystem::new(label)?)
}

fn affine_system(ty: &TypeArg) -> Result<AffineSystem, Failure> {
    let label = parse_label(ty)?;
    if !label.affine {
        return Err(Failure::Usage(format!("{label} is finite; write {label}~ for its affinization")));
    }
    Ok(AffineSystem::new(label)?)
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn image(ty: &TypeArg, weight: Option<&[i64]>, max_states: Option<usize>, cfg: &RunConfig) -> Out {
    let s = finite_system(ty)?;
    let m = weight.map_or_else(|| vec![1; s.rank()], <[i64]>::to_vec);
    if m.len() != s.rank() {
        return Err(Failure::Usage(format!("{} needs {} weight coordinates, got {}", s.name(), s.rank(), m.len())));
    }
    let orbit = OrbitConfig { max_states: max_states.unwrap_or(cfg.max_states), max_depth: None };
    let report = image_set_parallel(&s, &s.weight_from_fund(&m), orbit, cfg.threads)?;
    let json = ImageJson::new(s.name(), m, &report);
    let text = match cfg.format {
        Format::Json => to_json(&json) + "\n",
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                value: u64,
                orbit_points: u64,
            }
            let rows: Vec<Row> =
                report.histogram.iter().map(|(&value, &orbit_points)| Row { value, orbit_points }).collect();
            csv_rows(&rows)
        }
        Format::Text => format!(
            "type {}\nweight {}\nmax {}\norbit size {}\nvalues {}\nmissing {}\n",
            json.type_label,
            join(&json.weight, ","),
            json.max,
            json.orbit_size,
            join(&json.values, " "),
            if json.missing.is_empty() { "none".into() } else { join(&json.missing, " ") },
        ),
    };
    Ok(Outcome::ok(text))
}

fn w0(ty: &TypeArg, cfg: &RunConfig) -> Out {
    let s = finite_system(ty)?;
    let json = W0Json {
        type_label: s.name(),
        value: two_rho_height(&s),
        via_w0: atomic_length_w0(&s, &s.rho_weight())?,
        length: longest_element(&s).length(&s),
    };
    let text = match cfg.format {
        Format::Json => to_json(&json) + "\n",
        Format::Csv => csv_rows(&[&json]),
        Format::Text => format!("{}\n", json.value),
    };
    Ok(Outcome::ok(text))
}

fn root_entries(v: Vec<(atomic_core::RootVec, i64)>) -> Vec<RootEntry> {
    v.into_iter().map(|(r, k)| RootEntry { root: r.0, value: k }).collect()
}

fn susanfe(ty: &TypeArg, list: bool, cfg: &RunConfig) -> Out {
    let s = finite_system(ty)?;
    let special = special_reflection(&s).ok().map(|sp| SpecialJson { root: sp.root.0, word: sp.word.0, k: sp.k });
    let reflections = list.then(|| susanfe_reflections(&s)).transpose()?.map(root_entries);
    if special.is_none() && reflections.is_none() {
        return Err(Failure::Usage(format!("{} has no special reflection; pass --list", s.name())));
    }
    let json = SusanfeJson { type_label: s.name(), parabolic: (2..=s.rank()).collect(), special, reflections };
    let text = match cfg.format {
        Format::Json => to_json(&json) + "\n",
        Format::Csv => {
            let rows: Vec<(String, i64)> = json
                .reflections
                .iter()
                .flatten()
                .map(|e| (join(&e.root, " "), e.value))
                .collect();
            let mut out = String::from("root,k\n");
            for (r, k) in rows {
                let _ = writeln!(out, "{r},{k}");
            }
            out
        }
        Format::Text => {
            let mut out = format!("type {}\nI = {{{}}}\n", json.type_label, join(&json.parabolic, ","));
            if let Some(sp) = &json.special {
                let _ = writeln!(out, "special reflection {} root {:?} K = {}", Word(sp.word.clone()), sp.root, sp.k);
            }
            for e in json.reflections.iter().flatten() {
                let _ = writeln!(out, "{:?} L(t,I) = {}", e.root, e.value);
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn shi(ty: &TypeArg, word: Option<&[usize]>, cfg: &RunConfig) -> Out {
    let label = parse_label(ty)?;
    let asys = AffineSystem::new(label.affinized())?;
    let (letters, x) = match (label.affine, word) {
        (true, Some(w)) => (w.to_vec(), affine_from_word(&asys, &Word(w.to_vec()))?),
        (false, Some(w)) => {
            let fin = evaluate(asys.finite(), &Word(w.to_vec()))?;
            (w.to_vec(), AffineElement::from_finite(fin))
        }
        (false, None) => {
            let sp = special_reflection(asys.finite())?;
            (sp.word.0, AffineElement::from_finite(sp.t))
        }
        (true, None) => return Err(Failure::Usage("an affine type needs --word".into())),
    };
    let json = ShiJson::new(label.to_string(), letters, asys.finite(), &shi_vector(&asys, &x));
    Ok(Outcome::ok(shi_text(&json, cfg)))
}

fn shi_text(json: &ShiJson, cfg: &RunConfig) -> String {
    match cfg.format {
        Format::Json => to_json(json) + "\n",
        Format::Csv => {
            let mut out = String::from("height,root,k\n");
            for (h, row) in json.rows.iter().enumerate() {
                for e in row {
                    let _ = writeln!(out, "{},{},{}", h + 1, join(&e.root, " "), e.value);
                }
            }
            out
        }
        Format::Text => format!("{} {}\n{}", json.type_label, Word(json.word.clone()), json.pyramid()),
    }
}

fn affine(ty: &TypeArg, weight: Option<&[i64]>, radius: u64, word: Option<&[usize]>, cfg: &RunConfig) -> Out {
    let asys = affine_system(ty)?;
    let n = asys.rank();
    let m = weight.map_or_else(
        || {
            let mut v = vec![0; n + 1];
            v[0] = 1;
            v
        },
        <[i64]>::to_vec,
    );
    let lambda = AffineWeight::from_affine_fund(&asys, &m)?;
    if let Some(w) = word {
        return affine_element(&asys, &lambda, &m, w, cfg);
    }
    let report = affine_probe_parallel(&asys, &lambda, radius, cfg.radius_cap, cfg.orbit(), cfg.threads)?;
    let json = AffineJson::new(asys.label().to_string(), m, radius, &report);
    let text = match cfg.format {
        Format::Json => to_json(&json) + "\n",
        Format::Csv => {
            let mut out = String::from("value,attained\n");
            for v in 0..=radius {
                let _ = writeln!(out, "{v},{}", json.values.binary_search(&v).is_ok());
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "type {}\nweight {}\nradius {}\nvalues {}\nmissing {}\norbit points {}\n",
                json.type_label,
                join(&json.weight, ","),
                radius,
                join(&json.values, " "),
                if json.missing.is_empty() { "none".into() } else { join(&json.missing, " ") },
                json.orbit_size,
            );
            if let Some(ok) = json.lattice_agrees {
                let _ = writeln!(out, "lattice cross-check {}", if ok { "agrees" } else { "DISAGREES" });
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

/// Decomposition, value and Shi vector of one affine element.
fn affine_element(asys: &AffineSystem, lambda: &AffineWeight, m: &[i64], w: &[usize], cfg: &RunConfig) -> Out {
    #[derive(Serialize)]
    struct ElementJson {
        #[serde(rename = "type")]
        type_label: String,
        weight: Vec<i64>,
        word: Vec<usize>,
        beta: Vec<i64>,
        gamma: Vec<i64>,
        finite_word: Vec<usize>,
        value: i64,
        shi: ShiJson,
    }
    let word = Word(w.to_vec());
    let x = affine_from_word(asys, &word)?;
    let fin = asys.finite();
    let json = ElementJson {
        type_label: asys.label().to_string(),
        weight: m.to_vec(),
        word: w.to_vec(),
        beta: x.beta.0.clone(),
        gamma: x.gamma(asys).0,
        finite_word: x.finite.reduced_word(fin).0,
        value: affine_atomic_length(asys, &x, lambda)?,
        shi: ShiJson::new(asys.label().to_string(), w.to_vec(), fin, &shi_vector(asys, &x)),
    };
    let text = match cfg.format {
        Format::Json => to_json(&json) + "\n",
        Format::Csv => shi_text(&json.shi, cfg),
        Format::Text => format!(
            "{} = τ_β w̄ with β = {:?}, w̄ = {}, γ = {:?}\nL = {}\n{}",
            word,
            json.beta,
            Word(json.finite_word.clone()),
            json.gamma,
            json.value,
            json.shi.pyramid()
        ),
    };
    Ok(Outcome::ok(text))
}

fn cores(n: usize, max: usize, count_only: bool, cfg: &RunConfig) -> Out {
    let by_size = orbit_cores(n, max, cfg.size_cap)?;
    let sizes: BTreeMap<usize, u64> = by_size.iter().map(|(&s, v)| (s, v.len() as u64)).collect();
    let listed = (!count_only).then(|| {
        by_size.iter().map(|(&s, v)| (s, v.iter().map(ToString::to_string).collect())).collect()
    });
    let json = CoresJson { n, max, sizes, missing: Vec::new(), cores: listed }.recomputed();
    let text = match cfg.format {
        Format::Json => to_json(&json) + "\n",
        Format::Csv => {
            let mut out = String::from("size,count\n");
            for (s, c) in &json.sizes {
                let _ = writeln!(out, "{s},{c}");
            }
            out
        }
        Format::Text => {
            let mut out = format!("{}-cores of size at most {max}\n", n + 1);
            for (s, c) in &json.sizes {
                match json.cores.as_ref().and_then(|m| m.get(s)) {
                    Some(list) => {
                        let _ = writeln!(out, "{s}: {c}  {}", list.join(" "));
                    }
                    None => {
                        let _ = writeln!(out, "{s}: {c}");
                    }
                }
            }
            let _ = writeln!(out, "missing {}", if json.missing.is_empty() { "none".into() } else { join(&json.missing, " ") });
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn entropy(n: usize, stats: bool, cfg: &RunConfig) -> Out {
    let cap = if cfg.stress { STRESS_ENTROPY_N } else { MAX_ENTROPY_N };
    if n > cap {
        return Err(Error::SizeTooLarge { max: n, cap }.into());
    }
    let rows: Vec<StatsRow> = perm_stats_parallel(n, cfg.threads).into_iter().map(StatsRow::from).collect();
    if stats {
        let text = match cfg.format {
            Format::Json => to_json(&rows) + "\n",
            Format::Text | Format::Csv => csv_rows(&rows),
        };
        return Ok(Outcome::ok(text));
    }
    #[derive(Serialize)]
    struct Summary {
        n: usize,
        permutations: usize,
        max_entropy: u64,
        invsum_plus_ninvsum: u64,
        /// Number of distinct entropy values.
        distinct_entropies: usize,
        /// `E(w) = 2·invsum(w)` and `invsum + ninvsum = C(n+1,3)` on all of `S_n`.
        identities_hold: bool,
    }
    let total = invsum_total(n);
    let summary = Summary {
        n,
        permutations: rows.len(),
        max_entropy: rows.iter().map(|r| r.entropy).max().unwrap_or(0),
        invsum_plus_ninvsum: total,
        distinct_entropies: rows.iter().map(|r| r.entropy).collect::<std::collections::BTreeSet<_>>().len(),
        identities_hold: rows.iter().all(|r| r.entropy == 2 * r.invsum && r.invsum + r.ninvsum == total),
    };
    let text = match cfg.format {
        Format::Json => to_json(&summary) + "\n",
        Format::Csv => csv_rows(&[summary]),
        Format::Text => format!(
            "S_{n}: {} permutations\nmax entropy {}\ninvsum + ninvsum = {}\nidentities hold: {}\n",
            summary.permutations, summary.max_entropy, summary.invsum_plus_ninvsum, summary.identities_hold
        ),
    };
    Ok(Outcome::ok(text))
}

fn verify(cfg: &RunConfig) -> Out {
    let checks = fixtures::run_all();
    let failed = checks.iter().filter(|c| !c.ok).count();
    let json = VerifyJson { passed: checks.len() - failed, failed, checks };
    let text = match cfg.format {
        Format::Json => to_json(&json) + "\n",
        Format::Csv => csv_rows(&json.checks),
        Format::Text => {
            let mut out = String::new();
            for c in &json.checks {
                let _ = writeln!(out, "{} {}: {}", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail);
            }
            let _ = writeln!(out, "{} passed, {} failed", json.passed, json.failed);
            out
        }
    };
    let code = if failed == 0 { 0 } else { EXIT_MISMATCH };
    Ok(Outcome { code, stdout: text, stderr: String::new() })
}
