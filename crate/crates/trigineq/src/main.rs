use clap::Parser;
use trigineq::cli::{emit, run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((envelope, exit)) => {
            if let Err(e) = emit(&cli, &envelope) {
                eprintln!("error: {e}");
                std::process::exit(2);
            }
            std::process::exit(exit);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
