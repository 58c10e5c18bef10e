use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = sagnac_cli::run(std::env::args_os());
    if !outcome.stdout.is_empty() {
        let mut out = std::io::stdout().lock();
        if out
            .write_all(&outcome.stdout)
            .and_then(|_| out.flush())
            .is_err()
        {
            return ExitCode::from(1);
        }
    }
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
