//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;

use strpoly::verify::{criteria, Level};

fn main() -> ExitCode {
    let only: Vec<String> = std::env::args().skip(1).filter(|a| a.starts_with('A')).collect();
    let mut failed = 0;
    for c in criteria(Level::Full) {
        if !only.is_empty() && !only.iter().any(|o| o == c.id) {
            continue;
        }
        let report = c.run();
        println!("{report}");
        if !report.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
