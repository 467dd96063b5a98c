//! `fsheaf`: command-line access to the framed-sheaf toolkit.
//!
//! Every command writes a JSON report to stdout (`--output json`, the
//! default) with a one-line human summary on stderr, or only the summary
//! (`--output text`). Exit codes: 0 success, 1 usage or input error, 2 a
//! mathematical check failed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use fsheaf::acceptance;
use fsheaf::adhm::{self, AdhmDatum, AdhmError};
use fsheaf::cohomology::{self, CohomologyError, LineBundleComplex, MonomialWindow, Space};
use fsheaf::heart::{self, HeartError};
use fsheaf::quiver::{self, BoundQuiver, QuiverError, Representation, RepresentationJson};
use fsheaf::sample::DEFAULT_SEED;
use fsheaf::surface::{CurveModel, ExceptionalCollection, NumericalClass, SurfaceKind};
use fsheaf::{parse_scalar, Scalar};

#[derive(Parser, Debug)]
#[command(
    name = "fsheaf",
    version,
    about = "Exact linear data for framed sheaves on P2 and P1xP1"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    output: Format,
    /// Seed for every random choice.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Monomial window override for cohomology; must be at least the required bound.
    #[arg(long, global = true)]
    window: Option<usize>,
    /// Sample count for commands that draw random inputs.
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension vector d^v_i = -chi(E_i, v) of a class (rank, c1, chi).
    Dimvec {
        #[arg(long)]
        surface: SurfaceKind,
        /// Comma-separated coordinates (rank, c1..., chi).
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Bound-quiver representations.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// ADHM data on (P2, l_inf).
    #[command(subcommand)]
    Adhm(AdhmCmd),
    /// Cohomology of complexes of line bundles.
    #[command(subcommand)]
    Cohomology(CohomologyCmd),
    /// Heart membership and framability.
    #[command(subcommand)]
    Heart(HeartCmd),
    /// End-to-end demos.
    #[command(subcommand)]
    Demo(DemoCmd),
    /// Test batteries.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Args, Debug)]
struct SurfaceArg {
    #[arg(long, default_value = "P2")]
    surface: SurfaceKind,
}

#[derive(Subcommand, Debug)]
enum QuiverCmd {
    /// Whether a representation satisfies the relations.
    CheckRelations {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long)]
        input: PathBuf,
    },
    /// Dimension of Hom between two representations.
    Hom {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long, num_args = 2, required = true)]
        input: Vec<PathBuf>,
    },
    /// Whether two representations are isomorphic.
    Iso {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long, num_args = 2, required = true)]
        input: Vec<PathBuf>,
    },
    /// Euler form of two dimension vectors.
    Euler {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
    },
    /// Dimension of the path space e_j (KQ/J) e_i, or the paths of one length.
    Paths {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        length: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum AdhmCmd {
    /// Whether [B1, B2] + ij = 0.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Stability and costability.
    Stable {
        #[arg(long)]
        input: PathBuf,
    },
    /// The monad O(-1)^k -> O^(2k+r) -> O(1)^k.
    Monad {
        #[arg(long)]
        input: PathBuf,
    },
    /// Torus-fixed data, one per partition of k.
    FixedPoints {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// The datum of a configuration of points of C2.
    FromPoints {
        #[arg(long, alias = "input")]
        points: PathBuf,
    },
    /// Rank of the linearized equation, stabilizer and tangent dimension.
    Tangent {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum CohomologyCmd {
    /// Hypercohomology of a complex.
    Hyper {
        #[arg(long)]
        input: PathBuf,
    },
    /// Cohomology of a single line bundle.
    LineBundle {
        #[arg(long)]
        space: Space,
        /// Comma-separated twist.
        #[arg(long, allow_hyphen_values = true)]
        twist: String,
    },
    /// Restriction of a complex to a curve.
    Restrict {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "linf")]
        curve: String,
    },
    /// Splitting type of the bundle presented by a complex on P1, or by its
    /// restriction to a curve.
    Splitting {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        curve: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum HeartCmd {
    /// Vanishing battery against the collection of the surface.
    Battery {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        surface: Option<SurfaceKind>,
    },
    /// Triviality on a curve, with a framing when trivial.
    Trivial {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "linf")]
        curve: String,
    },
    /// Representation of a monad in normal form.
    Rep {
        #[arg(long)]
        input: PathBuf,
    },
    /// Monad of a representation satisfying the relations.
    Monad {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum DemoCmd {
    /// Ideal sheaves of points through the full pipeline.
    Hilbert {
        #[arg(long, alias = "input")]
        points: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum SuiteCmd {
    /// All acceptance criteria.
    Acceptance {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

/// Failure modes mapped to exit codes 1 and 2.
enum Failure {
    Input(anyhow::Error),
    Math(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

struct Outcome {
    report: Value,
    summary: String,
    pass: bool,
}

impl Outcome {
    fn ok(report: Value, summary: impl Into<String>) -> Self {
        Outcome {
            report,
            summary: summary.into(),
            pass: true,
        }
    }

    fn check(report: Value, summary: impl Into<String>, pass: bool) -> Self {
        Outcome {
            report,
            summary: summary.into(),
            pass,
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn read_json<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))
}

fn parse_ints(s: &str) -> anyhow::Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .with_context(|| format!("invalid integer {t:?}"))
        })
        .collect()
}

fn fmt_tuple<T: std::fmt::Display>(xs: &[T]) -> String {
    format!(
        "({})",
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn curve(name: &str) -> anyhow::Result<CurveModel> {
    CurveModel::by_name(name)
        .ok_or_else(|| anyhow!("unknown curve {name:?} (expected linf or diag)"))
}

fn scalar_of(v: &Value) -> anyhow::Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s).map_err(|e| anyhow!(e)),
        Value::Number(n) => n
            .as_i64()
            .map(fsheaf::int)
            .ok_or_else(|| anyhow!("coordinate {n} is not an integer; write fractions as strings")),
        other => bail!("invalid coordinate {other}"),
    }
}

/// `[[x, y], ...]` with integers or `"p/q"` strings.
fn read_points(path: &Path) -> anyhow::Result<Vec<(Scalar, Scalar)>> {
    let raw: Vec<Vec<Value>> = read_json(path)?;
    raw.iter()
        .map(|p| match p.as_slice() {
            [x, y] => Ok((scalar_of(x)?, scalar_of(y)?)),
            _ => bail!("each point needs two coordinates"),
        })
        .collect()
}

fn read_rep(q: &BoundQuiver, path: &Path) -> anyhow::Result<Representation> {
    let js: RepresentationJson = read_json(path)?;
    Ok(Representation::from_json(q, &js)?)
}

fn window(cli: &Cli, c: &LineBundleComplex) -> anyhow::Result<Option<MonomialWindow>> {
    match cli.window {
        None => Ok(None),
        Some(bound) => {
            let required = MonomialWindow::required(c).bound;
            if bound < required {
                bail!("window {bound} is below the required bound {required} for this complex");
            }
            Ok(Some(MonomialWindow { bound }))
        }
    }
}

/// Domain errors that are verdicts about the input rather than malformed input.
fn adhm_failure(e: AdhmError) -> Failure {
    match e {
        AdhmError::EquationFails { .. } | AdhmError::Unstable | AdhmError::FramingFailed { .. } => {
            Failure::Math(e.to_string())
        }
        other => Failure::Input(other.into()),
    }
}

fn cohomology_failure(e: CohomologyError) -> Failure {
    match e {
        CohomologyError::NotLocallyFree(_) | CohomologyError::EulerMismatch { .. } => {
            Failure::Math(e.to_string())
        }
        other => Failure::Input(other.into()),
    }
}

fn heart_failure(e: HeartError) -> Failure {
    match e {
        HeartError::RelationsFail { .. } => Failure::Math(e.to_string()),
        HeartError::Adhm(inner) => adhm_failure(inner),
        HeartError::Cohomology(inner) => cohomology_failure(inner),
        other => Failure::Input(other.into()),
    }
}

fn quiver_failure(e: QuiverError) -> Failure {
    match e {
        QuiverError::NegativeEntry { .. } | QuiverError::NonIntegral { .. } => {
            Failure::Math(e.to_string())
        }
        other => Failure::Input(other.into()),
    }
}

fn dimvec(surface: SurfaceKind, class: &str) -> CmdResult {
    let coords = parse_ints(class)?;
    let v = NumericalClass::from_coordinates(surface, &coords).map_err(anyhow::Error::from)?;
    let d = quiver::dimension_vector(&v).map_err(quiver_failure)?;
    Ok(Outcome::ok(
        json!({ "surface": surface.to_string(), "class": coords, "dimension_vector": d }),
        fmt_tuple(&d),
    ))
}

fn run_quiver(cmd: &QuiverCmd) -> CmdResult {
    match cmd {
        QuiverCmd::CheckRelations { surface, input } => {
            let q = quiver::preset(surface.surface);
            let rep = read_rep(&q, input)?;
            let c = quiver::check_relations(&q, &rep).map_err(quiver_failure)?;
            let violated: Vec<usize> = c.violations.iter().map(|(k, _)| *k).collect();
            Ok(Outcome::check(
                json!({ "holds": c.holds, "violated_relations": violated }),
                if c.holds {
                    "relations hold".to_string()
                } else {
                    format!("relations {violated:?} fail")
                },
                c.holds,
            ))
        }
        QuiverCmd::Hom { surface, input } => {
            let q = quiver::preset(surface.surface);
            let (a, b) = (read_rep(&q, &input[0])?, read_rep(&q, &input[1])?);
            let h = quiver::hom_space(&q, &a, &b).map_err(quiver_failure)?;
            Ok(Outcome::ok(
                json!({ "dim": h.dim }),
                format!("dim Hom = {}", h.dim),
            ))
        }
        QuiverCmd::Iso { surface, input } => {
            let q = quiver::preset(surface.surface);
            let (a, b) = (read_rep(&q, &input[0])?, read_rep(&q, &input[1])?);
            let iso = quiver::is_isomorphic(&q, &a, &b).map_err(quiver_failure)?;
            Ok(Outcome::check(
                json!({ "isomorphic": iso }),
                if iso { "isomorphic" } else { "not isomorphic" },
                iso,
            ))
        }
        QuiverCmd::Euler { surface, d, e } => {
            let q = quiver::preset(surface.surface);
            let (d, e) = (parse_ints(d)?, parse_ints(e)?);
            if d.len() != q.vertices || e.len() != q.vertices {
                return Err(anyhow!("dimension vectors need {} entries", q.vertices).into());
            }
            let v = quiver::euler_form(&q, &d, &e);
            Ok(Outcome::ok(
                json!({ "euler_form": v }),
                format!("<d, e> = {v}"),
            ))
        }
        QuiverCmd::Paths {
            surface,
            from,
            to,
            length,
        } => {
            let q = quiver::preset(surface.surface);
            if *from >= q.vertices || *to >= q.vertices {
                return Err(anyhow!("vertices are 0..{}", q.vertices - 1).into());
            }
            match length {
                Some(len) => {
                    let paths: Vec<Vec<String>> = q
                        .paths(*from, *to, *len)
                        .iter()
                        .map(|p| p.iter().map(|&a| q.arrows[a].id.clone()).collect())
                        .collect();
                    let n = paths.len();
                    Ok(Outcome::ok(
                        json!({ "paths": paths }),
                        format!("{n} paths of length {len}"),
                    ))
                }
                None => {
                    let dim = quiver::path_space_dim(&q, *from, *to);
                    Ok(Outcome::ok(
                        json!({ "dim": dim }),
                        format!("dim e_{to} (KQ/J) e_{from} = {dim}"),
                    ))
                }
            }
        }
    }
}

fn run_adhm(cmd: &AdhmCmd) -> CmdResult {
    match cmd {
        AdhmCmd::Check { input } => {
            let d: AdhmDatum = read_json(input)?;
            d.check_shapes().map_err(adhm_failure)?;
            let holds = adhm::check_equation(&d);
            Ok(Outcome::check(
                json!({ "holds": holds, "residual": d.residual() }),
                if holds {
                    "[B1,B2] + ij = 0"
                } else {
                    "[B1,B2] + ij != 0"
                },
                holds,
            ))
        }
        AdhmCmd::Stable { input } => {
            let d: AdhmDatum = read_json(input)?;
            d.check_shapes().map_err(adhm_failure)?;
            let (s, c) = (adhm::is_stable(&d), adhm::is_costable(&d));
            Ok(Outcome::check(
                json!({ "stable": s, "costable": c }),
                format!("stable: {s}, costable: {c}"),
                s,
            ))
        }
        AdhmCmd::Monad { input } => {
            let d: AdhmDatum = read_json(input)?;
            let m = adhm::monad_from_adhm(&d).map_err(adhm_failure)?;
            Ok(Outcome::ok(
                to_value(&m),
                format!("O(-1)^{} -> O^{} -> O(1)^{}", d.k, 2 * d.k + d.r, d.k),
            ))
        }
        AdhmCmd::FixedPoints { k, r } => {
            let fps = adhm::torus_fixed_points(*k, *r).map_err(|e| Failure::Input(e.into()))?;
            let n = fps.len();
            Ok(Outcome::ok(
                to_value(&fps),
                format!("{n} fixed points for k = {k}"),
            ))
        }
        AdhmCmd::FromPoints { points } => {
            let pts = read_points(points)?;
            let d = adhm::adhm_from_points(&pts);
            let stable = adhm::is_stable(&d);
            Ok(Outcome::ok(
                json!({ "datum": to_value(&d), "stable": stable }),
                format!("k = {}, stable: {stable}", d.k),
            ))
        }
        AdhmCmd::Tangent { input } => {
            let d: AdhmDatum = read_json(input)?;
            let t = adhm::tangent_report(&d).map_err(adhm_failure)?;
            Ok(Outcome::ok(
                to_value(&t),
                format!(
                    "rank {}, stabilizer {}, tangent {}",
                    t.rank_dmu, t.stabilizer_dim, t.tangent_dim
                ),
            ))
        }
    }
}

fn run_cohomology(cli: &Cli, cmd: &CohomologyCmd) -> CmdResult {
    match cmd {
        CohomologyCmd::Hyper { input } => {
            let c: LineBundleComplex = read_json(input)?;
            let w = window(cli, &c)?;
            let h = cohomology::hypercohomology(&c, w).map_err(cohomology_failure)?;
            let summary =
                h.h.iter()
                    .map(|(n, d)| format!("h^{n} = {d}"))
                    .collect::<Vec<_>>()
                    .join(", ");
            Ok(Outcome::check(to_value(&h), summary, h.window_stable))
        }
        CohomologyCmd::LineBundle { space, twist } => {
            let t = parse_ints(twist)?;
            if t.len() != space.twist_len() {
                return Err(anyhow!("{space} twists have {} entries", space.twist_len()).into());
            }
            let h = cohomology::line_bundle_cohomology(*space, &t);
            Ok(Outcome::ok(
                json!({ "space": space.to_string(), "twist": t, "h": h }),
                format!("h = {}", fmt_tuple(&h)),
            ))
        }
        CohomologyCmd::Restrict { input, curve: name } => {
            let c: LineBundleComplex = read_json(input)?;
            let r = cohomology::restrict_to_curve(&c, &curve(name)?).map_err(cohomology_failure)?;
            Ok(Outcome::ok(to_value(&r), format!("restricted to {name}")))
        }
        CohomologyCmd::Splitting { input, curve: name } => {
            let mut c: LineBundleComplex = read_json(input)?;
            if let Some(name) = name {
                c = cohomology::restrict_to_curve(&c, &curve(name)?).map_err(cohomology_failure)?;
            }
            let s = cohomology::splitting_type(&c).map_err(cohomology_failure)?;
            Ok(Outcome::ok(
                json!({ "splitting_type": s }),
                format!("splitting type {}", fmt_tuple(&s)),
            ))
        }
    }
}

fn run_heart(cmd: &HeartCmd) -> CmdResult {
    match cmd {
        HeartCmd::Battery { input, surface } => {
            let c: LineBundleComplex = read_json(input)?;
            let surface = match surface {
                Some(s) => *s,
                None => c
                    .space()
                    .surface()
                    .ok_or_else(|| anyhow!("complexes on P1 have no collection"))?,
            };
            let r = heart::vanishing_battery(&c, &ExceptionalCollection::preset(surface))
                .map_err(heart_failure)?;
            let summary = r
                .entries
                .iter()
                .map(|e| format!("{}: h0 = {}, h2 = {}", e.member, e.h0, e.h2))
                .collect::<Vec<_>>()
                .join("; ");
            Ok(Outcome::check(to_value(&r), summary, r.pass))
        }
        HeartCmd::Trivial { input, curve: name } => {
            let c: LineBundleComplex = read_json(input)?;
            let t = heart::triviality_on_curve(&c, &curve(name)?).map_err(heart_failure)?;
            Ok(Outcome::check(
                to_value(&t),
                format!(
                    "degree {}, h0(E|C0(-1)) = {}, splitting {}: {}",
                    t.degree,
                    t.h0_minus_one,
                    fmt_tuple(&t.splitting),
                    if t.trivial { "trivial" } else { "not trivial" }
                ),
                t.trivial,
            ))
        }
        HeartCmd::Rep { input } => {
            let m: LineBundleComplex = read_json(input)?;
            let rep = heart::rep_from_monad(&m).map_err(heart_failure)?;
            let q = quiver::preset_p2();
            let holds = quiver::check_relations(&q, &rep)
                .map_err(quiver_failure)?
                .holds;
            Ok(Outcome::check(
                to_value(&rep.to_json(&q)),
                format!(
                    "dimension vector {}, relations hold: {holds}",
                    fmt_tuple(&rep.dims)
                ),
                holds,
            ))
        }
        HeartCmd::Monad { input } => {
            let q = quiver::preset_p2();
            let rep = read_rep(&q, input)?;
            let m = heart::monad_from_rep(&rep).map_err(heart_failure)?;
            Ok(Outcome::ok(
                to_value(&m),
                format!(
                    "O(-1)^{} -> O^{} -> O(1)^{}",
                    rep.dims[0], rep.dims[1], rep.dims[2]
                ),
            ))
        }
    }
}

fn run_demo(cli: &Cli, cmd: &DemoCmd) -> CmdResult {
    match cmd {
        DemoCmd::Hilbert { points } => {
            let pts = read_points(points)?;
            let samples = cli.samples.unwrap_or(heart::HILBERT_RANDOM_POINTS);
            let r =
                heart::hilbert_demo_with_samples(&pts, cli.seed, samples).map_err(heart_failure)?;
            let summary = r
                .checks
                .iter()
                .map(|c| c.line())
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::check(to_value(&r), summary, r.pass))
        }
    }
}

fn run_suite(cli: &Cli, cmd: &SuiteCmd) -> CmdResult {
    match cmd {
        SuiteCmd::Acceptance { only } => {
            let criteria: Vec<&acceptance::Criterion> = if only.is_empty() {
                acceptance::CRITERIA.iter().collect()
            } else {
                only.iter()
                    .map(|&id| {
                        acceptance::criterion(id).ok_or_else(|| anyhow!("no criterion {id}"))
                    })
                    .collect::<anyhow::Result<_>>()?
            };
            let results: Vec<_> = criteria
                .iter()
                .map(|c| acceptance::run_criterion(c, cli.seed))
                .collect();
            let pass = results.iter().all(|r| r.pass);
            let summary = results
                .iter()
                .map(|r| r.line())
                .collect::<Vec<_>>()
                .join("\n");
            let report = acceptance::AcceptanceReport {
                seed: cli.seed,
                results,
                pass,
            };
            Ok(Outcome::check(to_value(&report), summary, pass))
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Dimvec { surface, class } => dimvec(*surface, class),
        Command::Quiver(cmd) => run_quiver(cmd),
        Command::Adhm(cmd) => run_adhm(cmd),
        Command::Cohomology(cmd) => run_cohomology(cli, cmd),
        Command::Heart(cmd) => run_heart(cmd),
        Command::Demo(cmd) => run_demo(cli, cmd),
        Command::Suite(cmd) => run_suite(cli, cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            match cli.output {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&out.report).expect("JSON values print")
                    );
                    eprintln!("{}", out.summary);
                }
                Format::Text => println!("{}", out.summary),
            }
            ExitCode::from(if out.pass { 0 } else { 2 })
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Math(msg)) => {
            if cli.output == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "pass": false, "reason": msg }))
                        .expect("JSON")
                );
            }
            eprintln!("check failed: {msg}");
            ExitCode::from(2)
        }
    }
}
