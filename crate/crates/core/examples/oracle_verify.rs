//! Brute-force graded character of R/I from explicit generators, compared
//! with the closed formula degree by degree.
//!
//! cargo run --release --example oracle_verify

use symci::graded::{quotient_character, RepresentationType};
use symci::oracle::{quotient_graded_character, GeneratorSet};

const CASES: [(&str, &str); 4] = [
    (include_str!("ex2.gens"), "case I c=2,3,3,4"),
    (include_str!("ex3.gens"), "case II d=6 c=2,2,3"),
    (include_str!("ex4.gens"), "case III d=2 c=2"),
    (include_str!("ex5.gens"), "case IV d=2 c=2,3"),
];

fn main() {
    for (text, spec) in CASES {
        let gs = GeneratorSet::parse(text).expect("well-formed generator file");
        let rt: RepresentationType = spec.parse().expect("valid type");
        let formula = quotient_character(&rt, gs.n(), None).expect("admissible");
        let top = formula.top_degree().expect("artinian");
        let start = std::time::Instant::now();
        let oracle = quotient_graded_character(&gs, top + 1).expect("stable generators");
        println!("{rt}: generator degrees {:?}", gs.degrees());
        for d in 0..=top {
            let (f, o) = (formula.coefficient(d).unwrap(), oracle.coefficient(d).unwrap());
            println!("  t^{d}: {} {}", if f == o { "MATCH" } else { "MISMATCH" }, o.to_chi_string());
        }
        println!("  equal: {} ({:.2?})", formula == oracle, start.elapsed());
    }
}
