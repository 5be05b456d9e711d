use std::process::ExitCode;

use clap::Parser;
use mrpca_cli::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return exit::to_exit_code(if e.use_stderr() { exit::USAGE } else { exit::SUCCESS });
        }
    };
    exit::to_exit_code(run(cli))
}
