//! Classifying candidate decompositions of the generator span.
//!
//! cargo run --example classify

use symci::classify::{admissible_irreducibles, classify, IrredMultiset, Summand, Verdict};
use symci::partitions::Partition;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn main() {
    println!("admissible irreducibles for n = 4: {:?}", admissible_irreducibles(4).iter().map(|l| l.to_string()).collect::<Vec<_>>());
    let candidates = [
        (4, vec![(p(&[2, 2]), 2), (p(&[4]), 2), (p(&[4]), 3)]),
        (5, vec![(p(&[4, 1]), 2), (p(&[5]), 3)]),
        (5, vec![(p(&[3, 2]), 4)]),
        (5, vec![(p(&[3, 1, 1]), 3)]),
        (4, vec![(p(&[3, 1]), 2), (p(&[1, 1, 1, 1]), 6)]),
        (4, vec![(p(&[3, 1]), 2), (p(&[4]), 1), (p(&[4]), 2)]),
        (3, vec![(p(&[1, 1, 1]), 3), (p(&[3]), 1), (p(&[3]), 2)]),
    ];
    for (n, items) in candidates {
        let ms = IrredMultiset::new(n, items.into_iter().map(|(l, d)| Summand::new(l, d)).collect());
        let shown: Vec<String> = ms.summands.iter().map(|s| s.to_string()).collect();
        match classify(&ms).expect("well-formed") {
            Verdict::Accepted(c) => println!(
                "n={n} [{}] -> {}{}",
                shown.join(", "),
                c.representation_type,
                if c.degenerate_small_n { " (small n)" } else { "" }
            ),
            Verdict::Rejected(r) => println!("n={n} [{}] -> rejected by {}: {}", shown.join(", "), r.rule, r.reason),
        }
    }
}
