use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;

use schurtau::commands::{dispatch, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match dispatch(cli, &mut out) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            drop(out);
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
