use clap::Parser;
use metricsolve::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
