use std::io::{self, IsTerminal};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let color = stdout.is_terminal() && std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty());
    let code = sslocus::run(
        std::env::args_os(),
        &mut stdout.lock(),
        &mut io::stderr().lock(),
        color,
    );
    ExitCode::from(code)
}
