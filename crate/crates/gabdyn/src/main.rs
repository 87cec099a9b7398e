use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use gabdyn::report::{
    analyze, checks, formats, run_checks, selftest, stages, JobConfig, VerificationReport,
    DEFAULT_ORDER_BOUND,
};
use gabdyn::symmetry::enumerate_symmetry_groups;
use gabdyn::{Case, Error};

#[derive(Parser)]
#[command(
    name = "gabdyn",
    version,
    about = "Gabrielov numbers and Coxeter-Dynkin diagrams of cusp singularities with abelian symmetry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group statistics, Gabrielov numbers, and homology dimensions.
    Analyze {
        config: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a Coxeter-Dynkin diagram.
    Diagram {
        config: PathBuf,
        /// milnor | milnor-quotient | orbit | resolution
        #[arg(long)]
        stage: String,
        /// dot | json
        #[arg(long)]
        format: String,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run every check on the configured case (and on all subgroups up to
    /// `order_bound` when the config sets one).
    Verify {
        config: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every check on the built-in catalog.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
        order_bound: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Exit 2 for bad input, 1 for a failed verification.
enum Failure {
    Input(anyhow::Error),
    Verification(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::Verification { .. } => Failure::Verification(e.into()),
            _ => Failure::Input(e.into()),
        }
    }
}

fn load(path: &Path) -> Result<JobConfig, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))
        .map_err(Failure::Input)?;
    let config = JobConfig::parse(&text)?;
    // Surface triple and generator errors before any heavy work.
    config.group()?;
    Ok(config)
}

fn print_report(report: &VerificationReport) {
    println!("case {}", report.case);
    for o in &report.outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("  [{status}] {}: {}", o.check, o.detail);
    }
}

fn cmd_analyze(config: &Path, json: bool) -> Result<(), Failure> {
    let group = load(config)?.group()?;
    let report = analyze(&group)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", report.render_text());
    }
    Ok(())
}

fn cmd_diagram(
    config: &Path,
    stage: &str,
    format: &str,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let stage_registry = stages();
    let format_registry = formats();
    let stage = stage_registry.get(stage).ok_or_else(|| {
        Failure::Input(anyhow::anyhow!(
            "unknown stage {stage:?}; expected one of {:?}",
            stage_registry.names()
        ))
    })?;
    let format = format_registry.get(format).ok_or_else(|| {
        Failure::Input(anyhow::anyhow!(
            "unknown format {format:?}; expected one of {:?}",
            format_registry.names()
        ))
    })?;
    let case = load(config)?.build_case()?;
    let text = format.render(&stage.graph(&case)?);
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(Failure::Input)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_verify(config: &Path, json: bool) -> Result<(), Failure> {
    let cfg = load(config)?;
    let registry = checks();
    let main = cfg.build_case()?;
    let mut reports = vec![run_checks(&main, &registry)];
    if let Some(bound) = cfg.order_bound {
        for group in enumerate_symmetry_groups(main.group.triple(), bound) {
            if group != main.group {
                reports.push(run_checks(&Case::new(group)?, &registry));
            }
        }
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("report serializes")
        );
    } else {
        reports.iter().for_each(print_report);
    }
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.failures()
                .map(move |f| format!("{}: {}", r.case, f.detail))
        })
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(anyhow::anyhow!(
            "{} check(s) failed:\n  {}",
            failed.len(),
            failed.join("\n  ")
        )))
    }
}

fn cmd_selftest(order_bound: usize, json: bool) -> Result<(), Failure> {
    let report = selftest(order_bound)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        println!(
            "lambda lemma for n in {:?}: {}",
            report.lambda_ranks,
            if report.lambda_failures.is_empty() {
                "PASS"
            } else {
                "FAIL"
            }
        );
        report.cases.iter().for_each(print_report);
        println!(
            "{} cases, order bound {}",
            report.cases.len(),
            report.order_bound
        );
    }
    if report.passed() {
        Ok(())
    } else {
        let mut failed: Vec<String> = report.lambda_failures.clone();
        for r in &report.cases {
            failed.extend(r.failures().map(|f| format!("{}: {}", r.case, f.detail)));
        }
        Err(Failure::Verification(anyhow::anyhow!(
            "{} check(s) failed:\n  {}",
            failed.len(),
            failed.join("\n  ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { config, json } => cmd_analyze(config, *json),
        Command::Diagram {
            config,
            stage,
            format,
            out,
        } => cmd_diagram(config, stage, format, out.as_deref()),
        Command::Verify { config, json } => cmd_verify(config, *json),
        Command::Selftest { order_bound, json } => cmd_selftest(*order_bound, *json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
