//! Runs a verification suite and prints its JSON report.
//!
//! `cargo run --example verify_suite -- exchange 42`

use vertexkit::verify::{run_suite, Suite, VerifyOptions};

fn main() -> vertexkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let suite = Suite::parse(&args.next().unwrap_or_else(|| "inverse".into()))?;
    let seed = args.next().map_or(Ok(7), |s| s.parse()).expect("seed must be an integer");
    let report = run_suite(suite, &VerifyOptions { seed, ..Default::default() })?;
    for case in &report.cases {
        println!("{} {} ({} checks)", if case.pass { "ok  " } else { "FAIL" }, case.name, case.checks);
    }
    println!("{}", vertexkit::cli::to_json_line(&report.to_json()));
    Ok(())
}
