use std::io::Write;
use std::process::ExitCode;

use artin_epi::args::{Cli, Format};
use artin_epi::report::Status;
use artin_epi::{exit, run, CliError};
use clap::Parser;

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => {
            let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(std::path::Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.persist(path).map_err(|e| e.error)?;
        }
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(exit::ERROR as u8);
        }
    }
    let result = run(&cli).and_then(|report| {
        let text = match cli.format {
            Format::Json => report.to_json(),
            Format::Text => report.to_text(),
        };
        write_output(&cli, &text)?;
        Ok(report.status)
    });
    match result {
        Ok(Status::Match) => ExitCode::from(exit::MATCH as u8),
        Ok(Status::Mismatch) => ExitCode::from(exit::MISMATCH as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::ERROR as u8)
        }
    }
}
