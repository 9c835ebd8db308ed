//! Run with: cargo run --example verification_report
//!
//! Drive the command-line layer in-process and print the JSON report of a
//! suite, exactly as `twchev verify --json` would write it.

use twisted_chevalley::cli::{parse_args, run};

fn main() {
    let argv = ["twchev", "--seed", "3", "verify", "--suite", "recovery", "--type", "A3", "--ring", "gf(3,1)"];
    let out = run(&parse_args(argv).unwrap()).unwrap();
    println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
    println!("exit code {}", out.exit_code());
}
