//! Exterior powers of generator spans, the ingredient of the Koszul factor.
//! For the standard representation they are hooks; for (2,2) the top power
//! is the sign.
//!
//! cargo run --example exterior_powers

use symci::oracle::{exterior_power_character, specht_square_generators, standard_rep_lift};

fn main() {
    for n in 3..=5 {
        let lift = standard_rep_lift(1, n);
        let span = lift.differences.gens();
        for u in 0..=span.len() {
            let chi = exterior_power_character(span, u).expect("stable span");
            println!("n={n} ⋀^{u} (n-1,1) = {}", chi.to_chi_string());
        }
    }
    let sq = specht_square_generators();
    for u in 0..=2 {
        println!("⋀^{u} (2,2) = {}", exterior_power_character(sq.gens(), u).unwrap().to_chi_string());
    }
}
