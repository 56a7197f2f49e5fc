use clap::Parser;
use powideal_cli::{args, commands};

/// Exit codes: 0 success, 1 verification disagreement, 2 invalid
/// parameters, 3 resource-guard refusal, 4 closed form unavailable.
fn main() {
    let cli = args::Cli::parse();
    let code = commands::run(cli);
    std::process::exit(code);
}
