use std::process::ExitCode;

fn main() -> ExitCode {
    let cfg = match cmlab::cli::parse_args(std::env::args_os()) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(cmlab::cli::run(&cfg) as u8)
}
