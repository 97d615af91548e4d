use std::process::ExitCode;

fn main() -> ExitCode {
    let result = tiltbg::cli::run(std::env::args_os());
    match serde_json::to_string_pretty(&result) {
        Ok(text) => println!("{text}"),
        Err(e) => {
            eprintln!("serialization error: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(result.exit_code() as u8)
}
