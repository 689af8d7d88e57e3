use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use toricmult_cli::report::{finding_line, Payload};
use toricmult_cli::{run, Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli, &|f| eprintln!("found {}", finding_line(f)));
    let out = match (cli.format, &report.result) {
        (Format::Json, _) => report.to_json(),
        (Format::Text, Payload::Error { message }) => {
            eprintln!("error: {message}");
            String::new()
        }
        (Format::Text, _) => report.to_text(),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(u8::try_from(report.exit_code).unwrap_or(2))
}
