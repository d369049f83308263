//! Charge of semistandard tableaux and the Kostka-Foulkes polynomials they
//! produce, ordinary and modified.
//!
//! cargo run --example kostka_foulkes -- 4

use symci::partitions::{partitions_of, Partition};
use symci::tableaux::{charge, kostka_foulkes, kostka_foulkes_tilde, semistandard_tableaux, standard_tableaux};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);

    let shape = Partition::hook(n.max(2) - 1, 1);
    println!("standard tableaux of shape {shape} and their charge");
    for t in standard_tableaux(&shape) {
        let rows: Vec<String> = t.rows().iter().map(|r| format!("{r:?}")).collect();
        println!("  {}  charge {}", rows.join(" / "), charge(&t).expect("standard"));
    }

    let column = Partition::column(n);
    println!("\nK[λ,μ](t) for λ, μ ⊢ {n}");
    for lambda in partitions_of(n) {
        for mu in partitions_of(n) {
            let k = kostka_foulkes(&lambda, &mu);
            if !k.is_zero() {
                let count = semistandard_tableaux(&lambda, &mu).len();
                println!("  K[{lambda},{mu}] = {k}   ({count} tableaux)");
            }
        }
    }

    println!("\nK̃[λ,{}](t), the graded multiplicities in the coinvariant algebra", column.to_exponent_string());
    for lambda in partitions_of(n) {
        println!("  {lambda}: {}", kostka_foulkes_tilde(&lambda, &column));
    }
}
