//! Driving the command-line front end in-process.
//!
//!     cargo run --example cli

use stieltjes::cli::run_cli;

fn main() {
    for args in [
        "solve --entry p1 --param alpha=0.5 --b 1 --c 0",
        "classify --entry Ei1 --param alpha=1 --b 0 --c -1",
        "solve --entry p1 --b -1 --c 0",
        "solve --entry W1 --defaults --b 0 --c 0.5 --format text",
    ] {
        let out = run_cli(std::iter::once("stieltjes").chain(args.split_whitespace()));
        println!("$ stieltjes {args}\n{}{}exit {}\n", out.stdout, out.stderr, out.code);
    }
}
