use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(cyclic_chroma::cli::main_with_args(std::env::args_os()))
}
