use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cosetforge::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cosetforge::run(cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            ExitCode::from(u8::try_from(code).unwrap_or(1))
        }
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
