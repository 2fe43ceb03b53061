use std::io::Write;
use std::process::ExitCode;

use albanese_cli::{run, Cli, Format, Status};
use clap::error::ErrorKind;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Status::Ok.into(),
                _ => Status::Invalid.into(),
            };
        }
    };
    match run(&cli) {
        Ok((env, status)) => {
            let text = match cli.format {
                Format::Json => env.to_json() + "\n",
                Format::Tsv => env.to_tsv(),
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if status == Status::Failed {
                if let Some(fails) = env.result.get("failures").and_then(|f| f.as_array()) {
                    for f in fails.iter().take(10) {
                        eprintln!("FAIL {}", f.as_str().unwrap_or_default());
                    }
                } else {
                    eprintln!("verification failed");
                }
            }
            status.into()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.status().into()
        }
    }
}
