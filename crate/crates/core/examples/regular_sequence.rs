//! Hilbert-function test for regular sequences, including a set that fails
//! because two generators share a linear factor.
//!
//! cargo run --example regular_sequence

use symci::oracle::{is_regular_sequence, shared_factor_counterexample, GeneratorSet};

fn report(label: &str, gs: &GeneratorSet) {
    let r = is_regular_sequence(gs, None).expect("valid generators");
    println!("{label}: degrees {:?}", gs.degrees());
    println!("  expected {:?}", r.expected);
    println!("  observed {:?}", r.observed);
    println!("  {}", r.note);
}

fn main() {
    for (label, text) in [
        ("(e1^3, e1^2 - e2, e3, e4)", include_str!("ex2.gens")),
        ("(e1^2, e2, e3, vdm)", include_str!("ex3.gens")),
        ("(x1^2, x2^2, x3^2, x4^2)", include_str!("ex4.gens")),
        ("(g1, g2, e2, e1^3)", include_str!("ex5.gens")),
    ] {
        report(label, &GeneratorSet::parse(text).expect("well-formed"));
    }
    let bad = shared_factor_counterexample();
    let gens: Vec<String> = bad.gens().iter().map(|g| g.to_string()).collect();
    report(&format!("({})", gens.join(", ")), &bad);
}
