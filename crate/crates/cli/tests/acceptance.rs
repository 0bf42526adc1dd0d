//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use fintop_cli::verify;

fn main() -> ExitCode {
    let mut failed = 0;
    for c in verify::criteria() {
        let outcome = verify::run(&c, verify::DEFAULT_SEED);
        println!("{}", outcome.line());
        failed += usize::from(!outcome.passed);
    }

    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_fintop")).arg("verify-paper").output();
    let (passed, detail) = match status {
        Ok(out) => {
            let lines = String::from_utf8_lossy(&out.stdout).lines().filter(|l| l.starts_with("[PASS]")).count();
            (out.status.code() == Some(0) && lines == 12, format!("exit {:?}, {lines} of 12 checks passed", out.status.code()))
        }
        Err(e) => (false, format!("could not run the binary: {e}")),
    };
    println!(
        "[{}] 13. verify-paper aggregates 1-12 ({:.2?}): {detail}",
        if passed { "PASS" } else { "FAIL" },
        start.elapsed()
    );
    failed += usize::from(!passed);

    println!("{} of 13 criteria passed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
