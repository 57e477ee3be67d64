//! `tautilt` — counts and enumerates tau-tilting and support tau-tilting
//! modules over Nakayama algebras.
//!
//! Exit codes: 0 success, 1 verification or internal failure, 2 usage
//! error, 3 size guard triggered.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use tautilt::{cache, table, verify};
use tautilt_core::{algebra::Shape, oracle, spectral, AlgebraSpec, CountEngine, Error, Family};

#[derive(Parser)]
#[command(name = "tautilt", version, about)]
struct Cli {
    /// Cache file for computed counts; falls back to $TAUTILT_CACHE.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print one exact count.
    Count {
        family: FamilyArg,
        #[arg(long)]
        r: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Render a count table (rows r, columns n).
    Table {
        family: FamilyArg,
        #[arg(long = "r-max")]
        r_max: i64,
        #[arg(long = "n-max")]
        n_max: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Markdown)]
        format: FormatArg,
    },
    /// List the modules of a desk-scale algebra, one per line.
    Enumerate {
        shape: ShapeArg,
        /// Kupisch series for a linear algebra, e.g. 2,3,2,1.
        #[arg(long, value_delimiter = ',')]
        kupisch: Option<Vec<i64>>,
        /// Vertex count for a uniform algebra.
        #[arg(long)]
        n: Option<i64>,
        /// Radical exponent for a uniform algebra.
        #[arg(long)]
        r: Option<i64>,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Run even past the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Run the verification harness; prints PASS/FAIL per group.
    Verify {
        #[arg(long = "n-max-lin", default_value_t = 8)]
        n_max_lin: usize,
        #[arg(long = "r-max-lin", default_value_t = 6)]
        r_max_lin: u32,
        #[arg(long = "n-max-cyc", default_value_t = 8)]
        n_max_cyc: usize,
        #[arg(long = "r-max-cyc", default_value_t = 5)]
        r_max_cyc: u32,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Roots of the degree-r characteristic polynomial of the recurrence.
    Roots {
        #[arg(long)]
        r: i64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "t_lin")]
    TLin,
    #[value(name = "s_lin")]
    SLin,
    #[value(name = "ps_lin")]
    PsLin,
    #[value(name = "t_cyc")]
    TCyc,
    #[value(name = "s_cyc")]
    SCyc,
    #[value(name = "ps_cyc")]
    PsCyc,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Family {
        match arg {
            FamilyArg::TLin => Family::TLin,
            FamilyArg::SLin => Family::SLin,
            FamilyArg::PsLin => Family::PsLin,
            FamilyArg::TCyc => Family::TCyc,
            FamilyArg::SCyc => Family::SCyc,
            FamilyArg::PsCyc => Family::PsCyc,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Markdown,
    Csv,
    Json,
}

impl From<FormatArg> for table::TableFormat {
    fn from(arg: FormatArg) -> table::TableFormat {
        match arg {
            FormatArg::Markdown => table::TableFormat::Markdown,
            FormatArg::Csv => table::TableFormat::Csv,
            FormatArg::Json => table::TableFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Linear,
    Cyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Tau,
    Support,
    Proper,
    #[value(name = "proper_np", alias = "proper-np")]
    ProperNp,
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SIZE_GUARD: u8 = 3;
const SIZE_GUARD: u32 = 80;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache_path = cli
        .cache
        .clone()
        .or_else(|| std::env::var_os("TAUTILT_CACHE").map(PathBuf::from));
    match run(cli, cache_path.as_deref()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::InvalidInput(_) | Error::InvalidKupisch { .. } => EXIT_USAGE,
                _ => EXIT_FAILURE,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli, cache_path: Option<&std::path::Path>) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Count { family, r, n } => {
            let engine = engine_with_cache(cache_path);
            let value = engine.count(family.into(), r, n)?;
            println!("{value}");
            store_cache(cache_path, &engine);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Table { family, r_max, n_max, format } => {
            if r_max < 1 || n_max < 1 {
                return Err(Error::InvalidInput(format!(
                    "table ranges must be nonempty: r_max={r_max}, n_max={n_max}"
                )));
            }
            let engine = engine_with_cache(cache_path);
            let req = table::TableRequest {
                family: family.into(),
                r_max: r_max as u32,
                n_max,
                format: format.into(),
            };
            print!("{}", table::render(&engine, &req)?);
            store_cache(cache_path, &engine);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate { shape, kupisch, n, r, kind, force } => {
            let algebra = build_algebra(shape, kupisch, n, r)?;
            let size: u32 = algebra.kupisch().iter().sum();
            if size > SIZE_GUARD {
                eprintln!(
                    "warning: {size} indecomposables exceeds the desk-scale guard ({SIZE_GUARD})"
                );
                if !force {
                    eprintln!("pass --force to enumerate anyway");
                    return Ok(ExitCode::from(EXIT_SIZE_GUARD));
                }
            }
            enumerate(&algebra, kind);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { n_max_lin, r_max_lin, n_max_cyc, r_max_cyc, tol } => {
            let cfg = verify::VerifyConfig { n_max_lin, r_max_lin, n_max_cyc, r_max_cyc, tol };
            let engine = CountEngine::new();
            let mut failed = false;
            for group in verify::run(&engine, &cfg) {
                let status = if group.passed { "PASS" } else { "FAIL" };
                println!("{status} {} — {}", group.name, group.detail);
                failed |= !group.passed;
            }
            Ok(if failed { ExitCode::from(EXIT_FAILURE) } else { ExitCode::SUCCESS })
        }
        Cmd::Roots { r, tol } => {
            if r < 1 {
                return Err(Error::InvalidInput(format!("roots requires r >= 1, got {r}")));
            }
            let engine = CountEngine::new();
            let poly = spectral::char_poly(&engine, r as u32)?;
            let roots = spectral::find_roots(&poly, tol)?;
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            println!("coefficients: [{}]", coeffs.join(", "));
            for (root, residual) in roots.roots.iter().zip(&roots.residuals) {
                println!("{:+.12} {:+.12}i    residual {residual:.2e}", root.re, root.im);
            }
            println!("min gap: {:.12}", roots.min_gap);
            println!("dominant growth: {:.12}", spectral::dominant_growth(&engine, r as u32)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn engine_with_cache(path: Option<&std::path::Path>) -> CountEngine {
    let engine = CountEngine::new();
    if let Some(path) = path {
        match cache::load_into(path, &engine) {
            cache::LoadOutcome::Missing | cache::LoadOutcome::Loaded { .. } => {}
            cache::LoadOutcome::IgnoredCorrupt { reason } => {
                eprintln!("warning: ignoring corrupt cache {}: {reason}", path.display());
            }
            cache::LoadOutcome::IgnoredVersion { found } => {
                eprintln!(
                    "warning: ignoring cache {} with version {found:?} (expected {:?})",
                    path.display(),
                    cache::CACHE_VERSION
                );
            }
        }
    }
    engine
}

fn store_cache(path: Option<&std::path::Path>, engine: &CountEngine) {
    if let Some(path) = path {
        if let Err(err) = cache::store_from(path, engine) {
            eprintln!("warning: could not write cache {}: {err}", path.display());
        }
    }
}

fn build_algebra(
    shape: ShapeArg,
    kupisch: Option<Vec<i64>>,
    n: Option<i64>,
    r: Option<i64>,
) -> Result<AlgebraSpec, Error> {
    let uniform = |shape: Shape| -> Result<AlgebraSpec, Error> {
        let (n, r) = match (n, r) {
            (Some(n), Some(r)) => (n, r),
            _ => return Err(Error::InvalidInput("uniform algebras need --n and --r".into())),
        };
        if n < 0 || r < 1 {
            return Err(Error::InvalidInput(format!("need n >= 0 and r >= 1, got n={n}, r={r}")));
        }
        AlgebraSpec::uniform(shape, n as usize, r as u32)
    };
    match shape {
        ShapeArg::Cyclic => {
            if kupisch.is_some() {
                return Err(Error::InvalidInput(
                    "cyclic algebras are uniform; use --n and --r".into(),
                ));
            }
            uniform(Shape::Cyclic)
        }
        ShapeArg::Linear => match kupisch {
            None => uniform(Shape::Linear),
            Some(values) => {
                if n.is_some() || r.is_some() {
                    return Err(Error::InvalidInput(
                        "give either --kupisch or --n/--r, not both".into(),
                    ));
                }
                let mut series = Vec::with_capacity(values.len());
                for (j, &c) in values.iter().enumerate() {
                    let c = u32::try_from(c).map_err(|_| Error::InvalidKupisch {
                        index: j + 1,
                        message: "entries must be positive".into(),
                    })?;
                    series.push(c);
                }
                AlgebraSpec::linear(series)
            }
        },
    }
}

fn enumerate(algebra: &AlgebraSpec, kind: KindArg) {
    match kind {
        KindArg::Tau => {
            let modules = oracle::enumerate_tau_tilting(algebra);
            for module in &modules {
                println!("{module}");
            }
            println!("count {}", modules.len());
        }
        KindArg::Support | KindArg::Proper | KindArg::ProperNp => {
            let pairs = oracle::enumerate_support_tau_tilting(algebra);
            let selected: Vec<_> = match kind {
                KindArg::Support => pairs,
                KindArg::Proper => oracle::filter_proper_np(algebra, &pairs).0,
                _ => oracle::filter_proper_np(algebra, &pairs).1,
            };
            for pair in &selected {
                println!("{}", pair.module);
            }
            println!("count {}", selected.len());
        }
    }
}
