use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lipschitz_horo::cli::{
    cmd_converge, cmd_detour, cmd_detour_along, cmd_dist, cmd_graph_demo, cmd_horo, cmd_maxset,
    cmd_mcg, cmd_mcg_suite, parse_point, read_json_arg, Format, Report, RunConfig, SequenceSpec,
    DEMO_GRAPH,
};
use lipschitz_horo::horo::DigraphSpace;
use lipschitz_horo::lamination::{FormalLamination, TestCurveModel};
use lipschitz_horo::torus::{Gl2Z, MeasuredLam};
use lipschitz_horo::{Error, Result};

/// Lipschitz metric, horofunctions and detour costs on the once-punctured torus.
///
/// Points are `x,y,z` trace triples, `x,y,plus|minus` chart coordinates, or
/// JSON `{"x":…,"y":…,"z":…}` (inline or `@file`).
#[derive(Parser)]
#[command(version)]
struct Cli {
    /// `key = value` file with base, depth, tol, format, seed.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Farey depth Q.
    #[arg(long, global = true)]
    depth: Option<u32>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Base point.
    #[arg(long, global = true)]
    base: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// L(x,y) and L(y,x) with witness slopes.
    Dist { x: String, y: String },
    /// Horofunction of a lamination `{"slope":[a,b],"weight":w}` at x.
    Horo {
        #[arg(long)]
        mu: String,
        x: String,
    },
    /// Residual table of ψ along a twist or pseudo-Anosov orbit.
    Converge {
        #[arg(long, default_value = "twist")]
        kind: String,
        /// Slope `[p,q]` for twist, matrix `[[a,b],[c,d]]` for pa.
        #[arg(long, default_value = "[0,1]")]
        param: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 5)]
        probes: usize,
    },
    /// Closed-form detour costs, or the running cost along a sequence.
    Detour {
        /// Formal lamination file, or a torus lamination with --along.
        #[arg(long)]
        sigma: String,
        #[arg(long, required_unless_present = "along")]
        beta: Option<String>,
        #[arg(long)]
        model: Option<String>,
        /// `twist` or `pa`.
        #[arg(long)]
        along: Option<String>,
        #[arg(long, default_value = "[0,1]")]
        param: String,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Isometry residual |L(gx,gy) − L(x,y)|, for one case or a seeded suite.
    Mcg {
        #[arg(long, required_unless_present = "suite")]
        g: Option<String>,
        #[arg(requires = "g")]
        x: Option<String>,
        #[arg(requires = "g")]
        y: Option<String>,
        #[arg(long, conflicts_with = "g")]
        suite: Option<usize>,
    },
    /// Slopes within tolerance of the maximal length ratio.
    Maxset {
        x: String,
        y: String,
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// ψ and detour tables of a digraph against a brute-force oracle.
    GraphDemo { file: Option<PathBuf> },
}

fn config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.apply_file(path)?;
    }
    if let Some(d) = cli.depth {
        cfg.depth = d;
    }
    if let Some(t) = cli.tol {
        cfg.tol = t;
    }
    if let Some(f) = cli.format {
        cfg.format = Some(match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        });
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(b) = &cli.base {
        cfg.base = parse_point(b)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<String> {
    let cfg = config(&cli)?;
    let json = cfg.format_or(Format::Json);
    match cli.command {
        Command::Dist { x, y } => {
            cmd_dist(&parse_point(&x)?, &parse_point(&y)?, &cfg)?.render(json)
        }
        Command::Horo { mu, x } => {
            let mu: MeasuredLam = serde_json::from_str(&read_json_arg(&mu)?)?;
            cmd_horo(&mu, &parse_point(&x)?, &cfg)?.render(json)
        }
        Command::Converge {
            kind,
            param,
            n_max,
            probes,
        } => {
            let seq = SequenceSpec::parse(&kind, &param)?;
            let n_max = n_max.unwrap_or(if kind == "pa" { 5 } else { 30 });
            cmd_converge(&seq, n_max, probes, &cfg)?.render(cfg.format_or(Format::Csv))
        }
        Command::Detour {
            sigma,
            beta,
            model,
            along,
            param,
            n_max,
        } => match along {
            Some(kind) => {
                let seq = SequenceSpec::parse(&kind, &param)?;
                let sigma: MeasuredLam = serde_json::from_str(&read_json_arg(&sigma)?)?;
                cmd_detour_along(&seq, n_max, &sigma, &cfg)?.render(json)
            }
            None => {
                let sigma = FormalLamination::from_json(&read_json_arg(&sigma)?)?;
                let beta = beta.ok_or_else(|| Error::Parse("--beta is required".into()))?;
                let beta = FormalLamination::from_json(&read_json_arg(&beta)?)?;
                let model = model
                    .map(|m| TestCurveModel::from_json(&read_json_arg(&m)?))
                    .transpose()?;
                cmd_detour(&sigma, &beta, model.as_ref(), &cfg)?.render(json)
            }
        },
        Command::Mcg { g, x, y, suite } => match (g, suite) {
            (_, Some(n)) => cmd_mcg_suite(n, &cfg)?.render(json),
            (Some(g), None) => {
                let g: Gl2Z = serde_json::from_str(&g)?;
                let x = x.map_or(Ok(cfg.base), |s| parse_point(&s))?;
                let y = y.map_or(Ok(cfg.base), |s| parse_point(&s))?;
                cmd_mcg(&g, &x, &y, &cfg)?.render(json)
            }
            (None, None) => Err(Error::Parse("need --g or --suite".into())),
        },
        Command::Maxset { x, y, limit } => {
            cmd_maxset(&parse_point(&x)?, &parse_point(&y)?, limit, &cfg)?.render(json)
        }
        Command::GraphDemo { file } => {
            let text = match file {
                Some(p) => std::fs::read_to_string(p)?,
                None => DEMO_GRAPH.to_owned(),
            };
            cmd_graph_demo(&DigraphSpace::parse(&text)?)?.render(json)
        }
    }
}

fn fail(kind: &str, message: &str, code: u8) -> ExitCode {
    let line = serde_json::json!({ "error": kind, "message": message });
    eprintln!("{line}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            return fail("usage", e.to_string().lines().next().unwrap_or(""), 2);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e.kind(), &e.to_string(), e.exit_code() as u8),
    }
}
