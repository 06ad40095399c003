fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(sans_cli::commands::main_with_args(std::env::args_os()))
}
