use std::process::exit;

fn main() {
    let outcome = ultrareal_cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    exit(outcome.code);
}
