use std::process::ExitCode;

fn main() -> ExitCode {
    let report = vdmuml::cli::run(std::env::args_os(), |k| std::env::var(k).ok());
    for line in &report.output {
        println!("{line}");
    }
    for line in &report.diagnostics {
        eprintln!("{line}");
    }
    ExitCode::from(report.exit_code as u8)
}
