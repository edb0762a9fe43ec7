use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("FORMWIDTH_LOG", "info"))
        .format_timestamp_secs()
        .init();
    let code = formwidth_cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    ExitCode::from(code as u8)
}
