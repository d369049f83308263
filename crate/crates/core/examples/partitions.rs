//! Partitions of n with the statistics used elsewhere in the crate.
//!
//! cargo run --example partitions -- 6

use symci::partitions::partitions_of;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    println!("{:<16} {:>6} {:>5} {:>6} {:>4}  conjugate", "λ", "class", "n(λ)", "sign", "hook");
    for lambda in partitions_of(n) {
        println!(
            "{:<16} {:>6} {:>5} {:>6} {:>4}  {}",
            lambda.to_string(),
            lambda.class_size(),
            lambda.n_stat(),
            lambda.sign(),
            if lambda.is_hook() { "yes" } else { "no" },
            lambda.conjugate()
        );
    }
}
