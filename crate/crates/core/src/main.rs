use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = vndim::cli::run(std::env::args_os());
    if !outcome.stdout.is_empty() {
        print!("{}", outcome.stdout);
        let _ = std::io::stdout().flush();
    }
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    ExitCode::from(outcome.code)
}
