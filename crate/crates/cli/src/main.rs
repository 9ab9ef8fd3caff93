use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use glmix_cli::{emit, run, CliError, JobConfig, OutputFormat, Verdict};

fn init_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("GLMIX_THREADS") else { return Ok(()) };
    let n: usize = v.parse().map_err(|_| format!("GLMIX_THREADS must be a positive integer, got '{v}'"))?;
    if n == 0 {
        return Err("GLMIX_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cfg = JobConfig::parse();
    if let Err(e) = init_threads() {
        eprintln!("glmix: {e}");
        return ExitCode::from(2);
    }
    let manifest = match run(&cfg) {
        Ok(m) => m,
        Err(CliError::Usage(msg)) => {
            eprintln!("glmix: {msg}");
            return ExitCode::from(2);
        }
    };
    let body = match cfg.output {
        OutputFormat::Json => manifest.to_json(),
        OutputFormat::Text => emit::text(&manifest),
        OutputFormat::Latex => emit::latex(&manifest),
    };
    let written = match &cfg.out_path {
        Some(p) => std::fs::write(p, body.as_bytes()),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("glmix: cannot write output: {e}");
        return ExitCode::from(2);
    }
    match manifest.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(1),
    }
}
