use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = leflab::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.status.clamp(0, 255) as u8)
}
