mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(feature = "parallel")]
fn execute(cli: &Cli) -> Result<String, commands::CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build()
        .expect("thread pool");
    pool.install(|| commands::run(&cli.command, cli.format, cli.cap))
}

#[cfg(not(feature = "parallel"))]
fn execute(cli: &Cli) -> Result<String, commands::CliError> {
    commands::run(&cli.command, cli.format, cli.cap)
}
