//! `weno5` command-line interface.
//!
//! Exit codes: 0 = success, 1 = an acceptance-style check failed (golden
//! deviation over tolerance, `--check` violations), 2 = error.

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use weno5_cli::config::{resolve_output_root, Resolution, RunConfig};
use weno5_cli::emit::fmt_g17;
use weno5_cli::norms::STUDY_RESOLUTIONS;
use weno5_cli::{golden, probe, registry, runner, tables};

#[derive(Parser)]
#[command(
    name = "weno5",
    version,
    about = "Fifth-order WENO benchmark harness",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a single experiment and write its artifact directory
    Run(RunArgs),
    /// Compute the advection convergence tables (L1, L2, Linf)
    Table(TableArgs),
    /// Record first-step weights on the step-data probe
    Probe(ProbeArgs),
    /// Run the experiment suite (all registered problems)
    Suite(SuiteArgs),
    /// Compare a run artifact against a golden file
    Golden(GoldenArgs),
}

#[derive(Args)]
struct RunArgs {
    /// key=value config file; explicit flags take precedence over it
    #[arg(long)]
    config: Option<PathBuf>,
    /// registered problem name (see error message for the list)
    #[arg(long)]
    problem: Option<String>,
    /// scheme family: linear, js, m, z or zr
    #[arg(long)]
    scheme: Option<String>,
    /// indicator power p (defaults to the family's own)
    #[arg(long)]
    p: Option<f64>,
    /// epsilon guard (defaults to the family's own)
    #[arg(long)]
    epsilon: Option<f64>,
    /// resolution: N for 1D problems, NXxNY for 2D
    #[arg(short = 'N', long = "N", value_name = "RES")]
    n: Option<String>,
    /// final time override
    #[arg(long)]
    t_override: Option<f64>,
    /// time-step coefficient override
    #[arg(long)]
    dt_coefficient_override: Option<f64>,
    /// output root (default: $WENO5_OUTPUT_ROOT, then ./runs)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// compare against the published tables; exit 1 on any violation
    #[arg(long)]
    check: bool,
    /// output root (default: $WENO5_OUTPUT_ROOT, then ./runs)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ProbeArgs {
    /// ZR powers to tabulate
    #[arg(long, value_delimiter = ',', default_values_t = vec![1.0, 3.0, 6.0])]
    p: Vec<f64>,
    /// read the weights after one completed RK step instead of at stage 1
    #[arg(long)]
    post_step: bool,
    /// compare against the published weight tables; exit 1 on violation
    #[arg(long, conflicts_with = "post_step")]
    check: bool,
    /// output root (default: $WENO5_OUTPUT_ROOT, then ./runs)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// comma-separated problem names (default: all)
    #[arg(long, value_delimiter = ',')]
    problems: Option<Vec<String>>,
    /// comma-separated scheme names (default: js,m,z,zr in 1D; zr in 2D)
    #[arg(long, value_delimiter = ',')]
    schemes: Option<Vec<String>>,
    /// output root (default: $WENO5_OUTPUT_ROOT, then ./runs)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GoldenArgs {
    /// run artifact CSV to check
    #[arg(long)]
    run: PathBuf,
    /// golden CSV to check against
    #[arg(long)]
    golden: PathBuf,
    /// absolute per-value tolerance
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// (re)create the golden file from the run artifact instead of comparing
    #[arg(long)]
    update: bool,
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Table(args) => cmd_table(args),
        Command::Probe(args) => cmd_probe(args),
        Command::Suite(args) => cmd_suite(args),
        Command::Golden(args) => cmd_golden(args),
    }
}

fn report_violations(what: &str, violations: &[String]) -> ExitCode {
    if violations.is_empty() {
        println!("{what}: all values reproduced");
        ExitCode::SUCCESS
    } else {
        for v in violations {
            println!("FAIL {v}");
        }
        println!("{what}: {} violation(s)", violations.len());
        ExitCode::from(1)
    }
}

fn cmd_run(args: RunArgs) -> Result<ExitCode> {
    let flag_cfg = RunConfig {
        problem: args.problem,
        scheme: args.scheme,
        p: args.p,
        epsilon: args.epsilon,
        n: args.n.as_deref().map(Resolution::parse).transpose()?,
        t_override: args.t_override,
        dt_coefficient_override: args.dt_coefficient_override,
        output: args.output,
    };
    let cfg = match &args.config {
        Some(path) => flag_cfg.or(RunConfig::load(path)?),
        None => flag_cfg,
    };
    let problem_name = cfg.problem.as_deref().ok_or_else(|| {
        anyhow!("no problem selected: pass --problem or a config file with problem=...")
    })?;
    let problem = registry::find_problem(problem_name)?;
    let scheme = runner::parse_scheme(cfg.scheme.as_deref().unwrap_or("zr"), cfg.p, cfg.epsilon)?;
    let resolution = cfg.n.unwrap_or(problem.default_resolution);
    let out_root = resolve_output_root(cfg.output.as_deref());
    let run = runner::run_experiment(
        problem,
        &scheme,
        resolution,
        cfg.t_override,
        cfg.dt_coefficient_override,
        &out_root,
    )?;
    println!(
        "wrote {} ({} steps, {:.3}s)",
        run.dir.display(),
        run.steps,
        run.wall_seconds
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: TableArgs) -> Result<ExitCode> {
    let out_dir = resolve_output_root(args.output.as_deref()).join("tables");
    std::fs::create_dir_all(&out_dir)
        .with_context(|| format!("creating {}", out_dir.display()))?;
    let study = tables::compute_study()?;

    let mut header: Vec<String> = vec!["N".to_string()];
    for (scheme, _) in &study {
        header.push(format!("{scheme}_error"));
        header.push(format!("{scheme}_order"));
    }
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();

    type Pick = fn(&weno5_cli::norms::ConvergenceRow) -> (f64, Option<f64>);
    let norms: [(&str, Pick); 3] = [
        ("table_l1.csv", |r| (r.norms.l1, r.order_l1)),
        ("table_l2.csv", |r| (r.norms.l2, r.order_l2)),
        ("table_linf.csv", |r| (r.norms.linf, r.order_linf)),
    ];
    for (file, pick) in norms {
        let rows: Vec<Vec<String>> = STUDY_RESOLUTIONS
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let mut row = vec![n.to_string()];
                for (_, scheme_rows) in &study {
                    let (err, order) = pick(&scheme_rows[i]);
                    row.push(fmt_g17(err));
                    row.push(order.map(fmt_g17).unwrap_or_default());
                }
                row
            })
            .collect();
        let path = out_dir.join(file);
        weno5_cli::emit::write_csv(&path, &header_refs, &rows)?;
        println!("wrote {}", path.display());
    }

    if args.check {
        let violations = tables::check_study(&study);
        return Ok(report_violations("convergence tables", &violations));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_probe(args: ProbeArgs) -> Result<ExitCode> {
    let out_dir = resolve_output_root(args.output.as_deref()).join("probe");
    let written = probe::emit_probe_artifacts(&out_dir, &args.p, args.post_step)?;
    for path in &written {
        println!("wrote {}", path.display());
    }
    if args.check {
        let violations = tables::check_weight_tables()?;
        return Ok(report_violations("weight tables", &violations));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_suite(args: SuiteArgs) -> Result<ExitCode> {
    let out_root = resolve_output_root(args.output.as_deref());
    let selection = runner::SuiteSelection {
        problems: args.problems,
        schemes: args.schemes,
    };
    let runs = runner::run_suite(&selection, &out_root)?;
    for run in &runs {
        println!(
            "wrote {} ({} steps, {:.3}s)",
            run.dir.display(),
            run.steps,
            run.wall_seconds
        );
    }
    println!("suite complete: {} run(s) under {}", runs.len(), out_root.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_golden(args: GoldenArgs) -> Result<ExitCode> {
    if args.update {
        if let Some(parent) = args.golden.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)
                    .with_context(|| format!("creating {}", parent.display()))?;
            }
        }
        // validate the artifact before pinning it
        weno5_cli::emit::read_csv(&args.run)?;
        std::fs::copy(&args.run, &args.golden).with_context(|| {
            format!(
                "copying {} to {}",
                args.run.display(),
                args.golden.display()
            )
        })?;
        println!("pinned {} from {}", args.golden.display(), args.run.display());
        return Ok(ExitCode::SUCCESS);
    }
    if !args.golden.exists() {
        return Err(anyhow!(
            "golden file {} does not exist (use --update to create it)",
            args.golden.display()
        ));
    }
    let report = golden::compare_golden(&args.run, &args.golden, args.tol)?;
    for col in &report.columns {
        println!(
            "column {}: max deviation {:e} [{}]",
            col.name,
            col.max_deviation,
            if col.pass { "pass" } else { "FAIL" }
        );
    }
    if report.pass() {
        println!("golden match within {:e}", args.tol);
        Ok(ExitCode::SUCCESS)
    } else {
        println!("golden mismatch: failing column(s): {}", report.failures().join(", "));
        Ok(ExitCode::from(1))
    }
}
