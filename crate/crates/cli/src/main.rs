use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let run = lfk_cli::run(std::env::args());
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(run.code as u8)
}
