use clap::Parser;

use symci::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (code, out) = run(&cli.command);
    if code == symci::cli::EXIT_INVALID {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
