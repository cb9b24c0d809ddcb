use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use toeplitz_cli::report::render_text;
use toeplitz_cli::{execute, Cli};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("TK_LOG")).init();
    let cli = Cli::parse();
    log::debug!("running {}", cli.command.name());
    match execute(&cli) {
        Ok(run) => {
            let doc = serde_json::to_string_pretty(&run.report).expect("serializable report");
            if let Some(path) = &cli.report {
                if let Err(e) = std::fs::write(path, format!("{doc}\n")) {
                    log::error!("cannot write report to {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            let text = if cli.text { render_text(&run.report) } else { format!("{doc}\n") };
            emit(&text);
            ExitCode::from(run.exit_code as u8)
        }
        Err(err) => {
            log::info!("{}: {}", err.code, err.message);
            let doc = serde_json::to_string_pretty(&err.to_json()).expect("serializable error");
            emit(&format!("{doc}\n"));
            ExitCode::from(2)
        }
    }
}

/// Write to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            log::error!("cannot write to stdout: {e}");
        }
    }
}
