//! `nonsep` — construct and verify covers and inscribed homothets for
//! non-separable families of homothets of a convex body.
//!
//! Subcommands: `gen` (write an instance), `cover`, `inscribe`, `check`,
//! `sigma` (emit verification reports), and `render` (write an SVG).
//!
//! Exit codes: `0` success, `1` usage or construction error, `2` the
//! checked hypothesis is violated, `3` a constructed object failed
//! verification (this wins over `2` when both fail), `4` I/O or instance
//! parse failure.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use nonsep_core::asymmetry::minkowski_sigma;
use nonsep_core::covering::{
    cover_balls, cover_corollary, cover_general, cover_simplex_facet_parallel, cover_symmetric,
    minimal_cover, verify_cover_with, CoverResult,
};
use nonsep_core::generators::{
    gen_depth_k_grid, gen_sharp_simplex, gen_touching_chain, random_polygon,
    random_symmetric_polygon,
};
use nonsep_core::geometry::{vec2, ConvexBody, Family};
use nonsep_core::inscribing::{inscribe_dual, verify_inscribed_with, InscribeMode};
use nonsep_core::separability::{
    check_depth_at_most_k, check_nonseparable, CheckMode, DirectionSet, VerdictStatus,
};

use nonsep_cli::instance::{self, parse_instance, serialize_instance, ParsedInstance};
use nonsep_cli::render;
use nonsep_cli::report::{
    coords, emit, hypothesis_from_verdict, theorem_name, ConstructionReport, InstanceSummary,
    RatioReport, Report, SigmaReport,
};

#[derive(Parser)]
#[command(
    name = "nonsep",
    version,
    about = "Covers and inscribed homothets for non-separable families"
)]
struct Cli {
    /// Verification tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    /// Seed for randomized generation and sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Direction count for sampled checks and support-function verification.
    #[arg(long, global = true, default_value_t = 4096)]
    directions: usize,
    /// Warn on unknown instance fields instead of rejecting them.
    #[arg(long, global = true)]
    lax: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance document to stdout.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Dimension (sharp-simplex).
        #[arg(long)]
        d: Option<usize>,
        /// Refinement parameter (sharp-simplex); the family gets d*N+1 members.
        #[arg(long = "N", alias = "n")]
        n: Option<usize>,
        /// Body shape for chain and depth-grid instances.
        #[arg(long, value_enum, default_value_t = BodyKind::Disk)]
        body: BodyKind,
        /// Member count (chain).
        #[arg(long)]
        count: Option<usize>,
        /// Comma-separated member scales (chain); defaults to all ones.
        #[arg(long, value_delimiter = ',')]
        scales: Option<Vec<f64>>,
        /// Depth bound = row count (depth-grid).
        #[arg(long)]
        k: Option<usize>,
        /// Members per row (depth-grid).
        #[arg(long)]
        per_row: Option<usize>,
        /// Vertical distance between rows (depth-grid).
        #[arg(long)]
        row_gap: Option<f64>,
    },
    /// Construct a covering homothet and verify it.
    Cover {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        /// Also compute the tightness ratio T*/(sum of scales) via the
        /// minimal-cover solver.
        #[arg(long)]
        ratio: bool,
        /// Instance path; defaults to stdin.
        instance: Option<PathBuf>,
    },
    /// Construct an inscribed homothet for a depth-k family and verify it.
    Inscribe {
        /// Depth bound the family is claimed to satisfy.
        #[arg(long)]
        k: usize,
        instance: Option<PathBuf>,
    },
    /// Check non-separability, or depth when --k is given.
    Check {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Check depth at most k instead of non-separability.
        #[arg(long)]
        k: Option<usize>,
        instance: Option<PathBuf>,
    },
    /// Compute the Minkowski asymmetry of the instance's body.
    Sigma { instance: Option<PathBuf> },
    /// Write an SVG drawing of a 2-D instance.
    Render {
        /// Overlay the cover from this construction.
        #[arg(long, value_enum)]
        cover_theorem: Option<TheoremArg>,
        /// Overlay the inscribed homothet for this depth bound.
        #[arg(long)]
        inscribe_k: Option<usize>,
        /// Output path; defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        instance: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    SharpSimplex,
    Chain,
    DepthGrid,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum BodyKind {
    Disk,
    Square,
    Triangle,
    RandomPolygon,
    RandomSymmetricPolygon,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Balls,
    Symmetric,
    General,
    Dimension,
    Simplex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact2d,
    Restricted,
    Sampled,
}

enum CliError {
    Usage(String),
    Io(String),
    Parse(String),
}

impl From<nonsep_core::Error> for CliError {
    fn from(e: nonsep_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) | Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match &cli.command {
        Command::Gen { .. } => run_gen(&cli),
        Command::Cover { .. } => run_cover(&cli),
        Command::Inscribe { .. } => run_inscribe(&cli),
        Command::Check { .. } => run_check(&cli),
        Command::Sigma { .. } => run_sigma(&cli),
        Command::Render { .. } => run_render(&cli),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing

fn read_instance(path: &Option<PathBuf>, lax: bool) -> CliResult<ParsedInstance> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let parsed = parse_instance(&text, lax).map_err(|e| CliError::Parse(e.to_string()))?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok(parsed)
}

fn instance_summary(family: &Family) -> InstanceSummary {
    InstanceSummary {
        dimension: family.dim(),
        members: family.members().len(),
        total_scale: family.total_scale(),
    }
}

/// The default hypothesis mode: exact sweep in the plane, sampled
/// directions elsewhere.
fn default_mode(family: &Family, cli: &Cli) -> CheckMode {
    if family.dim() == 2 {
        CheckMode::Exact2d
    } else {
        CheckMode::Sampled {
            count: cli.directions,
            seed: cli.seed,
        }
    }
}

fn make_body(kind: BodyKind, seed: u64) -> CliResult<ConvexBody> {
    Ok(match kind {
        BodyKind::Disk => ConvexBody::ball(vec2(0.0, 0.0), 1.0)?,
        BodyKind::Square => ConvexBody::polytope(vec![
            vec2(1.0, 1.0),
            vec2(-1.0, 1.0),
            vec2(-1.0, -1.0),
            vec2(1.0, -1.0),
        ])?,
        BodyKind::Triangle => {
            ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(2.0, 0.0), vec2(0.0, 2.0)])?
        }
        BodyKind::RandomPolygon => random_polygon(seed, 8)?,
        BodyKind::RandomSymmetricPolygon => random_symmetric_polygon(seed, 6)?,
    })
}

fn body_kind_name(kind: BodyKind) -> &'static str {
    match kind {
        BodyKind::Disk => "disk",
        BodyKind::Square => "square",
        BodyKind::Triangle => "triangle",
        BodyKind::RandomPolygon => "random-polygon",
        BodyKind::RandomSymmetricPolygon => "random-symmetric-polygon",
    }
}

fn ms(t0: Instant) -> f64 {
    t0.elapsed().as_secs_f64() * 1e3
}

// ---------------------------------------------------------------------------
// gen

fn run_gen(cli: &Cli) -> CliResult<u8> {
    let Command::Gen {
        kind,
        d,
        n,
        body,
        count,
        scales,
        k,
        per_row,
        row_gap,
    } = &cli.command
    else {
        unreachable!()
    };
    let mut metadata = BTreeMap::new();
    let family = match kind {
        GenKind::SharpSimplex => {
            let d = d.ok_or_else(|| {
                CliError::Usage("gen --kind sharp-simplex requires --d".into())
            })?;
            let n = n.ok_or_else(|| {
                CliError::Usage("gen --kind sharp-simplex requires --N".into())
            })?;
            let inst = gen_sharp_simplex(d, n)?;
            metadata.insert("generator".into(), "sharp-simplex".into());
            metadata.insert("d".into(), d.to_string());
            metadata.insert("N".into(), n.to_string());
            metadata.insert("exact_ratio".into(), inst.exact_ratio.to_string());
            metadata.insert("theorem".into(), "simplex".into());
            inst.family
        }
        GenKind::Chain => {
            let scales: Vec<f64> = match (scales, count) {
                (Some(s), _) => s.clone(),
                (None, Some(c)) => vec![1.0; *c],
                (None, None) => {
                    return Err(CliError::Usage(
                        "gen --kind chain requires --count or --scales".into(),
                    ))
                }
            };
            let body_shape = make_body(*body, cli.seed)?;
            let family = gen_touching_chain(&body_shape, scales.len(), &scales, cli.seed)?;
            metadata.insert("generator".into(), "chain".into());
            metadata.insert("body".into(), body_kind_name(*body).into());
            metadata.insert("seed".into(), cli.seed.to_string());
            let hint = if body_shape.is_ball() {
                "balls"
            } else if body_shape.symmetry_center().is_some() {
                "symmetric"
            } else {
                "general"
            };
            metadata.insert("theorem".into(), hint.into());
            family
        }
        GenKind::DepthGrid => {
            let k = k.ok_or_else(|| CliError::Usage("gen --kind depth-grid requires --k".into()))?;
            let per_row = per_row.ok_or_else(|| {
                CliError::Usage("gen --kind depth-grid requires --per-row".into())
            })?;
            let row_gap = row_gap.ok_or_else(|| {
                CliError::Usage("gen --kind depth-grid requires --row-gap".into())
            })?;
            let body_shape = make_body(*body, cli.seed)?;
            let family = gen_depth_k_grid(&body_shape, k, per_row, row_gap)?;
            metadata.insert("generator".into(), "depth-grid".into());
            metadata.insert("body".into(), body_kind_name(*body).into());
            metadata.insert("k".into(), k.to_string());
            metadata.insert("per_row".into(), per_row.to_string());
            metadata.insert("row_gap".into(), instance::format_number(row_gap));
            family
        }
    };
    print!("{}", serialize_instance(&family, &metadata));
    Ok(0)
}

// ---------------------------------------------------------------------------
// cover

fn build_cover(family: &Family, theorem: TheoremArg) -> CliResult<CoverResult> {
    Ok(match theorem {
        TheoremArg::Balls => cover_balls(family)?,
        TheoremArg::Symmetric => {
            let center = family.body().symmetry_center().ok_or_else(|| {
                nonsep_core::Error::WrongTheorem(
                    "the symmetric covering factor requires a centrally symmetric body".into(),
                )
            })?;
            cover_symmetric(family, &center)?
        }
        TheoremArg::General => cover_general(family)?,
        TheoremArg::Dimension => cover_corollary(family)?,
        TheoremArg::Simplex => cover_simplex_facet_parallel(family)?,
    })
}

fn run_cover(cli: &Cli) -> CliResult<u8> {
    let Command::Cover {
        theorem,
        ratio,
        instance,
    } = &cli.command
    else {
        unreachable!()
    };
    let t0 = Instant::now();
    let parsed = read_instance(instance, cli.lax)?;
    let family = &parsed.family;

    let result = build_cover(family, *theorem)?;

    // The hypothesis the factor depends on: facet-normal non-separability
    // for the simplex construction, full non-separability otherwise.
    let verdict = match theorem {
        TheoremArg::Simplex => check_nonseparable(
            family,
            &CheckMode::Restricted(DirectionSet::facet_normals(family.body())?),
        )?,
        _ => check_nonseparable(family, &default_mode(family, cli))?,
    };

    let verified = verify_cover_with(family, &result.cover, cli.tolerance)?;
    let ratio_report = if *ratio {
        let (t_star, _) = minimal_cover(family)?;
        Some(RatioReport {
            computed: t_star / family.total_scale(),
            exact: parsed.metadata.get("exact_ratio").cloned(),
        })
    } else {
        None
    };

    let report = Report {
        command: "cover".into(),
        instance: instance_summary(family),
        theorem: Some(theorem_name(result.theorem).into()),
        hypothesis: Some(hypothesis_from_verdict(&verdict, "nonseparable", None)),
        construction: Some(ConstructionReport {
            translation: coords(result.cover.translation()),
            scale: result.cover.scale(),
            normalization: Some(coords(&result.normalization)),
            verification: None,
        }),
        verified: Some(verified),
        ratio: ratio_report,
        sigma: None,
        warning: result.warning.clone(),
        timing_ms: ms(t0),
    };
    print!("{}", emit(&report));

    Ok(if !verified {
        3
    } else if verdict.status == VerdictStatus::Violated {
        2
    } else {
        0
    })
}

// ---------------------------------------------------------------------------
// inscribe

fn run_inscribe(cli: &Cli) -> CliResult<u8> {
    let Command::Inscribe { k, instance } = &cli.command else {
        unreachable!()
    };
    let t0 = Instant::now();
    let parsed = read_instance(instance, cli.lax)?;
    let family = &parsed.family;

    let result = inscribe_dual(family, *k)?;
    let verdict = check_depth_at_most_k(family, *k, &default_mode(family, cli))?;
    let (verified, mode) = verify_inscribed_with(&result.inscribed, family, cli.directions)?;

    let report = Report {
        command: "inscribe".into(),
        instance: instance_summary(family),
        theorem: None,
        hypothesis: Some(hypothesis_from_verdict(&verdict, "depth_at_most_k", Some(*k))),
        construction: Some(ConstructionReport {
            translation: coords(result.inscribed.translation()),
            scale: result.inscribed.scale(),
            normalization: None,
            verification: Some(
                match mode {
                    InscribeMode::ExactVertex => "exact_vertex",
                    InscribeMode::SampledSupport { .. } => "sampled_support",
                }
                .into(),
            ),
        }),
        verified: Some(verified),
        ratio: None,
        sigma: None,
        warning: None,
        timing_ms: ms(t0),
    };
    print!("{}", emit(&report));

    Ok(if !verified {
        3
    } else if verdict.status == VerdictStatus::Violated {
        2
    } else {
        0
    })
}

// ---------------------------------------------------------------------------
// check

fn run_check(cli: &Cli) -> CliResult<u8> {
    let Command::Check { mode, k, instance } = &cli.command else {
        unreachable!()
    };
    let t0 = Instant::now();
    let parsed = read_instance(instance, cli.lax)?;
    let family = &parsed.family;

    let check_mode = match mode {
        ModeArg::Exact2d => CheckMode::Exact2d,
        ModeArg::Restricted => {
            CheckMode::Restricted(DirectionSet::facet_normals(family.body())?)
        }
        ModeArg::Sampled => CheckMode::Sampled {
            count: cli.directions,
            seed: cli.seed,
        },
    };
    let (verdict, check_name) = match k {
        Some(k) => (
            check_depth_at_most_k(family, *k, &check_mode)?,
            "depth_at_most_k",
        ),
        None => (check_nonseparable(family, &check_mode)?, "nonseparable"),
    };
    let satisfied = verdict.status != VerdictStatus::Violated;

    let report = Report {
        command: "check".into(),
        instance: instance_summary(family),
        theorem: None,
        hypothesis: Some(hypothesis_from_verdict(&verdict, check_name, *k)),
        construction: None,
        verified: Some(satisfied),
        ratio: None,
        sigma: None,
        warning: None,
        timing_ms: ms(t0),
    };
    print!("{}", emit(&report));
    Ok(if satisfied { 0 } else { 2 })
}

// ---------------------------------------------------------------------------
// sigma

fn run_sigma(cli: &Cli) -> CliResult<u8> {
    let Command::Sigma { instance } = &cli.command else {
        unreachable!()
    };
    let t0 = Instant::now();
    let parsed = read_instance(instance, cli.lax)?;
    let family = &parsed.family;
    let asym = minkowski_sigma(family.body())?;

    let report = Report {
        command: "sigma".into(),
        instance: instance_summary(family),
        theorem: None,
        hypothesis: None,
        construction: None,
        verified: None,
        ratio: None,
        sigma: Some(SigmaReport {
            sigma: asym.sigma,
            center: coords(&asym.center),
            iterations: asym.iterations,
            certified_gap: asym.certified_gap,
        }),
        warning: None,
        timing_ms: ms(t0),
    };
    print!("{}", emit(&report));
    Ok(0)
}

// ---------------------------------------------------------------------------
// render

fn run_render(cli: &Cli) -> CliResult<u8> {
    let Command::Render {
        cover_theorem,
        inscribe_k,
        out,
        instance,
    } = &cli.command
    else {
        unreachable!()
    };
    let parsed = read_instance(instance, cli.lax)?;
    let family = &parsed.family;
    if family.dim() != 2 {
        return Err(CliError::Usage(format!(
            "render requires a 2-D instance (got dimension {})",
            family.dim()
        )));
    }
    let cover = match cover_theorem {
        Some(t) => Some(build_cover(family, *t)?.cover),
        None => None,
    };
    let inscribed = match inscribe_k {
        Some(k) => Some(inscribe_dual(family, *k)?.inscribed),
        None => None,
    };
    let svg = render::render_svg(family, cover.as_ref(), inscribed.as_ref());
    match out {
        Some(p) => std::fs::write(p, svg)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display())))?,
        None => print!("{svg}"),
    }
    Ok(0)
}
