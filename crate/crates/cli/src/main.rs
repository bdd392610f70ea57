use std::process::ExitCode;

fn main() -> ExitCode {
    let spec = match ductwave_cli::parse_args(std::env::args_os()) {
        Ok(spec) => spec,
        // usage errors exit with 2, --help and --version with 0
        Err(e) => e.exit(),
    };
    let result = ductwave_cli::execute(&spec).and_then(|report| {
        ductwave_cli::emit(
            &report,
            spec.output_path.as_deref(),
            &mut std::io::stdout().lock(),
            &mut std::io::stderr().lock(),
        )
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
