use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = hodgebott_cli::run(&args, &mut stdout(), &mut stderr());
    ExitCode::from(code as u8)
}
