use clap::Parser;
use sextic_cli::args::Cli;
use sextic_cli::{configure_threads, run, EXIT_INPUT};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        std::process::exit(EXIT_INPUT);
    }
    std::process::exit(run(&cli));
}
