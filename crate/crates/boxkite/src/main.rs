use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let run = boxkite::run(std::env::args_os());
    if let Some(msg) = &run.diagnostic {
        eprint!("{msg}");
    }
    if let Some(doc) = &run.document {
        let written = match &run.out {
            Some(path) => std::fs::write(path, &doc.payload).map_err(|e| format!("{}: {e}", path.display())),
            None => std::io::stdout().lock().write_all(&doc.payload).map_err(|e| e.to_string()),
        };
        if let Err(e) = written {
            eprintln!("error: {e}");
            return ExitCode::from(boxkite::EXIT_USAGE);
        }
    }
    ExitCode::from(run.code)
}
