use std::io::Write;
use std::sync::mpsc;
use std::time::Duration;

use clap::Parser;

use topodeg_cli::app::{execute, Cli, EXIT_TIMEOUT};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let (kind, args) = cli.command.parts();
    let args = args.clone();
    let result = match args.time_budget {
        None => execute(kind, &args),
        Some(sec) if !(sec.is_finite() && sec > 0.0) => {
            eprintln!("error: --time-budget must be a positive number of seconds");
            std::process::exit(4);
        }
        Some(sec) => {
            let (tx, rx) = mpsc::channel();
            let worker_args = args.clone();
            std::thread::spawn(move || {
                let _ = tx.send(execute(kind, &worker_args));
            });
            match rx.recv_timeout(Duration::from_secs_f64(sec)) {
                Ok(r) => r,
                Err(_) => {
                    eprintln!("error: time budget of {sec} s exhausted");
                    std::process::exit(EXIT_TIMEOUT);
                }
            }
        }
    };
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(result.code);
}
