mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::Cli;
use run::{execute, prepare, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let prep = match prepare(&cli) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {}", e.message());
            eprintln!("run `ca-forge --help` for usage");
            return ExitCode::from(e.exit_code());
        }
    };
    let cfg = &prep.config;
    let (body, code) = match execute(&cli, &prep) {
        Ok(o) => {
            let body = if cli.common.json {
                let doc = json!({
                    "tool": "ca-forge",
                    "version": env!("CARGO_PKG_VERSION"),
                    "config": cfg,
                    "status": o.status.label(),
                    "report": o.report,
                });
                serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
            } else {
                let mut s = cfg.header();
                s.push_str(&o.text);
                if o.status != Status::Ok {
                    s.push_str(&format!("status: {}\n", o.status.label()));
                }
                s
            };
            (body, o.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            let body = if cli.common.json {
                let doc = json!({
                    "tool": "ca-forge",
                    "version": env!("CARGO_PKG_VERSION"),
                    "config": cfg,
                    "status": e.status(),
                    "error": e.message(),
                });
                serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
            } else {
                format!("{}status: {}\n", cfg.header(), e.status())
            };
            (body, e.exit_code())
        }
    };
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: cannot write output: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
