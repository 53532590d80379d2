use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use epikit_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Into::into));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("epikit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
