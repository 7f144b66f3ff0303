//! `majmeter`: batch computations over the exact and asymptotic layers.

mod args;
mod commands;
mod config;
mod error;
mod table;
mod validate;

use std::io::Write;

use clap::Parser;

use args::{Cli, Command};
use commands::{LdArgs, Output};
use config::{Format, Overrides, RunConfig, CONFIG_ENV};
use error::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    let config_path = std::env::var_os(CONFIG_ENV).map(std::path::PathBuf::from);
    let cfg = RunConfig::resolve(
        config_path.as_deref(),
        Overrides {
            quad_nodes: cli.quad_nodes,
            quad_tol: cli.quad_tol,
            seed: cli.seed,
            exact_cap: cli.exact_cap,
            format: cli.format,
            output: cli.output.clone(),
        },
    )?;
    let mut failures = 0;
    let (out, default_format) = match &cli.command {
        Command::Dist { input } => (commands::dist(&commands::read_partition(input)?, &cfg)?, Format::Csv),
        Command::Cumulants { input, max_order } => {
            (commands::cumulants(&commands::read_partition(input)?, *max_order, &cfg)?, Format::Csv)
        }
        Command::Sample { input, trials } => {
            (commands::sample(&commands::read_partition(input)?, *trials, &cfg)?, Format::Csv)
        }
        Command::Ld { family, limit, y, n, side, all_at_n } => {
            let a = LdArgs {
                family: family.clone(),
                limit: commands::read_omega(limit)?,
                y: *y,
                ns: n.0.clone(),
                side: (*side).into(),
                all_at_n: *all_at_n,
            };
            (commands::ld(&a, &cfg)?, Format::Csv)
        }
        Command::Bkol { family, n } => (commands::bkol(family, &n.0, &cfg)?, Format::Csv),
        Command::Bochner { omega, xi } => {
            let w = commands::read_omega(omega)?
                .ok_or_else(|| CliError::Usage("bochner needs --omega or --omega-file".into()))?;
            (commands::bochner(&w, xi, &cfg)?, Format::Json)
        }
        Command::Validate { max_n, inject_fault } => {
            let (table, failed) = validate::run(*max_n as usize, *inject_fault);
            failures = failed;
            (Output::from(table), Format::Csv)
        }
    };
    emit(&out, cfg.format.unwrap_or(default_format), &cfg)?;
    if failures > 0 {
        return Err(CliError::Failed(failures));
    }
    Ok(())
}

fn emit(out: &Output, format: Format, cfg: &RunConfig) -> Result<(), CliError> {
    let mut buf = Vec::new();
    match format {
        Format::Csv => out.table.write_csv(&mut buf)?,
        Format::Json => {
            let v = out.json.clone().unwrap_or_else(|| out.table.to_json());
            serde_json::to_writer_pretty(&mut buf, &v).map_err(std::io::Error::from)?;
            buf.push(b'\n');
        }
    }
    match &cfg.output {
        Some(path) => std::fs::write(path, &buf)?,
        None => std::io::stdout().lock().write_all(&buf)?,
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("majmeter: {e}");
        std::process::exit(e.exit_code());
    }
}
