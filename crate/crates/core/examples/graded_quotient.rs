//! Graded character of R/I from a representation type.
//!
//! cargo run --example graded_quotient -- 4 "case IV d=2 c=2,3"
//! cargo run --example graded_quotient -- 5 "case III d=3 c="

use symci::graded::{hilbert_series, quotient_character, socle_analysis, RepresentationType};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let spec = args.next().unwrap_or_else(|| "case II d=6 c=2,2,3".into());
    let rt: RepresentationType = match spec.parse() {
        Ok(rt) => rt,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let g = match quotient_character(&rt, n, None) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("{rt}, n = {n}");
    for (d, c) in g.coeffs().iter().enumerate() {
        println!("  t^{d}: {}", c.to_chi_string());
    }
    if !g.is_exact() {
        println!("  (truncated after degree {})", g.bound());
    }
    let h: Vec<String> = hilbert_series(&g).iter().map(|x| x.to_string()).collect();
    println!("hilbert: {}", h.join(" "));
    if let Ok(s) = socle_analysis(&g) {
        println!(
            "top degree {}: trivial {}, alternating {}",
            s.top_degree, s.top_is_trivial, s.top_is_alternating
        );
    }
}
