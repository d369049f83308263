//! Character table of S_n by Murnaghan-Nakayama, with a tensor product
//! decomposed back into irreducibles.
//!
//! cargo run --example character_table -- 5

use symci::characters::{character_table, display_class_order, irreducible_character};
use symci::cli::class_function_row;
use symci::partitions::Partition;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let classes: Vec<String> = display_class_order(n).iter().map(|c| c.to_string()).collect();
    println!("classes: {}", classes.join(" "));
    for (lambda, chi) in character_table(n) {
        println!("χ{lambda}: {}", class_function_row(&chi));
    }

    if n >= 2 {
        let standard = irreducible_character(&Partition::hook(n - 1, 1));
        let square = &standard * &standard;
        println!("\nχ[{}]² = {}", Partition::hook(n - 1, 1).to_plain_string(), square.to_chi_string());
        println!("⟨χ², χ²⟩ = {}", square.inner_product(&square).expect("same n"));
    }
}
