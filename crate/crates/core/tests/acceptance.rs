//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line; all
//! comparisons are exact.
//!
//! cargo test --release --test acceptance -- --nocapture

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::strategy::{Just, Strategy};
use proptest::test_runner::{Config, TestRunner};

use symci::characters::{character_table, display_class_order, irreducible_character, ClassFunction};
use symci::classify::{classify, IrredMultiset, Summand, Verdict};
use symci::graded::{
    coinvariant_character, hilbert_series, polynomial_ring_character, quotient_character, socle_analysis, Case,
    GradedCharacter, RepresentationType,
};
use symci::linalg::determinant;
use symci::oracle::{
    ideal_degree_slice, is_regular_sequence, quotient_graded_character, shared_factor_counterexample,
    GeneratorSet,
};
use symci::partitions::{factorial, partitions_of, Partition};
use symci::perm::Permutation;
use symci::tableaux::{
    apply_transposition, kostka_foulkes, standard_tableaux, transposition_matrix, Tableau, TableauCombination,
    UnivariatePoly,
};

const EX2: &str = include_str!("../examples/ex2.gens");
const EX3: &str = include_str!("../examples/ex3.gens");
const EX4: &str = include_str!("../examples/ex4.gens");
const EX5: &str = include_str!("../examples/ex5.gens");

fn report(id: u32, name: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("PASS criterion {id}: {name}"),
        Err(why) => println!("FAIL criterion {id}: {name}: {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {id} failed: {why}");
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn chi(parts: &[usize]) -> ClassFunction {
    irreducible_character(&p(parts))
}

/// `Σ m χ^λ` over `(m, λ)` pairs, all of size 4.
fn s4(terms: &[(i64, &[usize])]) -> ClassFunction {
    terms
        .iter()
        .fold(ClassFunction::zero(4), |acc, (m, l)| &acc + &chi(l).scale(&BigInt::from(*m)))
}

fn rt(s: &str) -> RepresentationType {
    s.parse().unwrap()
}

const A: &[usize] = &[4];
const B: &[usize] = &[3, 1];
const C: &[usize] = &[2, 2];
const D: &[usize] = &[2, 1, 1];
const E: &[usize] = &[1, 1, 1, 1];

fn compare_series(got: &GradedCharacter, expected: &[ClassFunction]) -> Result<(), String> {
    check(got.is_exact(), || "expected a polynomial".into())?;
    check(got.coeffs().len() == expected.len(), || {
        format!("length {} vs {}", got.coeffs().len(), expected.len())
    })?;
    for (d, (g, e)) in got.coeffs().iter().zip(expected).enumerate() {
        check(g == e, || format!("t^{d}: got {} expected {}", g.to_chi_string(), e.to_chi_string()))?;
    }
    Ok(())
}

#[test]
fn criterion_01_coinvariant_algebra() {
    let start = Instant::now();
    let g = coinvariant_character(4);
    let elapsed = start.elapsed();
    let expected = [
        s4(&[(1, A)]),
        s4(&[(1, B)]),
        s4(&[(1, B), (1, C)]),
        s4(&[(1, B), (1, D)]),
        s4(&[(1, C), (1, D)]),
        s4(&[(1, D)]),
        s4(&[(1, E)]),
    ];
    let outcome = compare_series(&g, &expected)
        .and_then(|_| check(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}")));
    report(1, "coinvariant character of S_4", outcome);
}

#[test]
fn criterion_02_modified_kostka_foulkes() {
    let column = Partition::column(4);
    let expected: [(&[usize], &[(usize, i64)]); 5] = [
        (A, &[(0, 1)]),
        (B, &[(1, 1), (2, 1), (3, 1)]),
        (C, &[(2, 1), (4, 1)]),
        (D, &[(3, 1), (4, 1), (5, 1)]),
        (E, &[(6, 1)]),
    ];
    let outcome = expected.iter().try_for_each(|(l, terms)| {
        let got = symci::tableaux::kostka_foulkes_tilde(&p(l), &column);
        let want = UnivariatePoly::from_terms(terms.iter().copied());
        check(got == want, || format!("λ = {}: got {got}, expected {want}", p(l)))
    });
    report(2, "modified Kostka-Foulkes polynomials for n = 4", outcome);
}

#[test]
fn criterion_03_polynomial_ring() {
    let g = polynomial_ring_character(4, 4);
    let expected = [
        s4(&[(1, A)]),
        s4(&[(1, A), (1, B)]),
        s4(&[(2, A), (2, B), (1, C)]),
        s4(&[(3, A), (4, B), (1, C), (1, D)]),
        s4(&[(5, A), (6, B), (3, C), (2, D)]),
    ];
    let outcome = expected.iter().enumerate().try_for_each(|(d, e)| {
        let got = g.coefficient(d).map_err(|e| e.to_string())?;
        check(&got == e, || format!("t^{d}: got {}", got.to_chi_string()))
    });
    report(3, "polynomial ring character through degree 4", outcome);
}

fn worked_expansions() -> Vec<(&'static str, Vec<ClassFunction>)> {
    vec![
        (
            "case I c=2,3,3,4",
            vec![
                s4(&[(1, A)]),
                s4(&[(1, A), (1, B)]),
                s4(&[(1, A), (2, B), (1, C)]),
                s4(&[(3, B), (1, C), (1, D)]),
                s4(&[(2, B), (2, C), (2, D)]),
                s4(&[(1, B), (1, C), (3, D)]),
                s4(&[(1, C), (2, D), (1, E)]),
                s4(&[(1, D), (1, E)]),
                s4(&[(1, E)]),
            ],
        ),
        (
            "case II d=6 c=2,2,3",
            vec![
                s4(&[(1, A)]),
                s4(&[(1, A), (1, B)]),
                s4(&[(2, B), (1, C)]),
                s4(&[(2, B), (1, C), (1, D)]),
                s4(&[(1, A), (1, B), (1, C), (2, D)]),
                s4(&[(1, A), (1, B), (1, C), (2, D)]),
                s4(&[(2, B), (1, C), (1, D)]),
                s4(&[(2, B), (1, C)]),
                s4(&[(1, A), (1, B)]),
                s4(&[(1, A)]),
            ],
        ),
        (
            "case III d=2 c=2",
            vec![
                s4(&[(1, A)]),
                s4(&[(1, A), (1, B)]),
                s4(&[(1, A), (1, B), (1, C)]),
                s4(&[(1, A), (1, B)]),
                s4(&[(1, A)]),
            ],
        ),
        (
            "case IV d=2 c=2,3",
            vec![
                s4(&[(1, A)]),
                s4(&[(1, A), (1, B)]),
                s4(&[(1, A), (2, B)]),
                s4(&[(1, A), (2, B)]),
                s4(&[(1, A), (1, B)]),
                s4(&[(1, A)]),
            ],
        ),
    ]
}

#[test]
fn criterion_04_worked_quotients() {
    let outcome = worked_expansions().iter().try_for_each(|(spec, expected)| {
        let g = quotient_character(&rt(spec), 4, None).map_err(|e| e.to_string())?;
        compare_series(&g, expected).map_err(|e| format!("{spec}: {e}"))
    });
    report(4, "closed-form quotients for the four worked ideals", outcome);
}

fn worked_generators() -> [(&'static str, &'static str); 4] {
    [
        (EX2, "case I c=2,3,3,4"),
        (EX3, "case II d=6 c=2,2,3"),
        (EX4, "case III d=2 c=2"),
        (EX5, "case IV d=2 c=2,3"),
    ]
}

#[test]
fn criterion_05_oracle_equivalence() {
    let start = Instant::now();
    let outcome = worked_generators().iter().try_for_each(|(text, spec)| {
        let gs = GeneratorSet::parse(text).map_err(|e| e.to_string())?;
        let formula = quotient_character(&rt(spec), 4, None).map_err(|e| e.to_string())?;
        let top = formula.top_degree().ok_or("formula is zero")?;
        let oracle = quotient_graded_character(&gs, top + 1).map_err(|e| e.to_string())?;
        check(oracle.is_exact(), || format!("{spec}: oracle did not terminate"))?;
        for d in 0..=top + 1 {
            let f = formula.coefficient(d).map_err(|e| e.to_string())?;
            let o = oracle.coefficient(d).map_err(|e| e.to_string())?;
            check(f == o, || {
                format!("{spec} t^{d}: formula {} oracle {}", f.to_chi_string(), o.to_chi_string())
            })?;
        }
        Ok(())
    });
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|_| check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}")));
    report(5, "brute-force traces equal the closed form", outcome);
}

#[test]
fn criterion_06_regular_sequences() {
    let outcome = worked_generators()
        .iter()
        .try_for_each(|(text, spec)| {
            let gs = GeneratorSet::parse(text).map_err(|e| e.to_string())?;
            let r = is_regular_sequence(&gs, None).map_err(|e| e.to_string())?;
            check(r.regular && r.conclusive, || format!("{spec}: {}", r.note))
        })
        .and_then(|_| {
            let bad = shared_factor_counterexample();
            let x12 = symci::oracle::poly::MultiPoly::var(4, 1).sub(&symci::oracle::poly::MultiPoly::var(4, 2));
            let shared = bad.gens()[..2]
                .iter()
                .all(|g| g.divide_by_difference(1, 2).is_some());
            check(shared, || format!("first two generators are not both divisible by {x12}"))?;
            let r = is_regular_sequence(&bad, None).map_err(|e| e.to_string())?;
            check(!r.regular && r.conclusive, || format!("counterexample accepted: {}", r.note))
        });
    report(6, "regular-sequence test on worked ideals and a shared-factor set", outcome);
}

#[test]
fn criterion_07_character_table() {
    let classes = display_class_order(4);
    let expected_classes = [p(&[1, 1, 1, 1]), p(&[2, 1, 1]), p(&[3, 1]), p(&[4]), p(&[2, 2])];
    let sizes: Vec<BigInt> = classes.iter().map(|c| BigInt::from(c.class_size())).collect();
    let table: [(&[usize], [i64; 5]); 5] = [
        (A, [1, 1, 1, 1, 1]),
        (B, [3, 1, 0, -1, -1]),
        (C, [2, 0, -1, 0, 2]),
        (D, [3, -1, 0, 1, -1]),
        (E, [1, -1, 1, -1, 1]),
    ];
    let outcome = check(classes == expected_classes, || format!("class order {classes:?}"))
        .and_then(|_| {
            let want: Vec<BigInt> = [1, 6, 8, 6, 3].into_iter().map(BigInt::from).collect();
            check(sizes == want, || format!("class sizes {sizes:?}"))
        })
        .and_then(|_| {
            table.iter().try_for_each(|(l, row)| {
                let c = chi(l);
                let got: Vec<BigInt> = classes.iter().map(|mu| c.value(mu)).collect();
                let want: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
                check(got == want, || format!("χ{}: {got:?}", p(l)))
            })
        });
    report(7, "character table of S_4", outcome);
}

fn orthonormality() -> Result<(), String> {
    for n in 1..=6 {
        let table = character_table(n);
        for (i, (l, a)) in table.iter().enumerate() {
            for (m, b) in &table[i..] {
                let ip = a.inner_product(b).map_err(|e| e.to_string())?;
                let want = if l == m { BigRational::one() } else { BigRational::zero() };
                check(ip == want, || format!("⟨χ{l}, χ{m}⟩ = {ip}"))?;
            }
        }
    }
    Ok(())
}

fn sum_of_squares() -> Result<(), String> {
    for n in 1..=6 {
        let total: BigInt = partitions_of(n)
            .iter()
            .map(|l| {
                let f = BigInt::from(standard_tableaux(l).len());
                &f * &f
            })
            .sum();
        check(total == BigInt::from(factorial(n)), || format!("n = {n}: Σ(f^λ)² = {total}"))?;
    }
    Ok(())
}

fn kostka_support() -> Result<(), String> {
    for n in 1..=6 {
        for l in partitions_of(n) {
            for m in partitions_of(n) {
                let k = kostka_foulkes(&l, &m);
                check(k.is_zero() != l.dominates(&m), || format!("K[{l},{m}] = {k}"))?;
                if l == m {
                    check(k == UnivariatePoly::one(), || format!("K[{l},{l}] = {k}"))?;
                }
            }
        }
    }
    Ok(())
}

fn hooks() -> Result<(), String> {
    let two_two = p(&[2, 2]);
    for n in 1..=6 {
        for l in partitions_of(n) {
            check(l.is_hook() != l.contains(&two_two), || format!("{l}"))?;
        }
    }
    Ok(())
}

/// The four accepted families, written as a direct pattern match.
fn expected_family(n: usize, items: &[(Partition, usize)]) -> Option<(Case, Option<usize>, Vec<usize>)> {
    let mut trivial: Vec<usize> = items.iter().filter(|(l, _)| l.len() == 1).map(|(_, d)| *d).collect();
    trivial.sort_unstable();
    let rest: Vec<&(Partition, usize)> = items.iter().filter(|(l, _)| l.len() != 1).collect();
    let m = trivial.len();
    match rest.as_slice() {
        [] if (1..=n).contains(&m) => Some((Case::I, None, trivial)),
        [(l, d)] if l.len() == n && m < n => Some((Case::II, Some(*d), trivial)),
        [(l, d)] if l.parts() == [n - 1, 1] && m <= 1 => Some((Case::III, Some(*d), trivial)),
        [(l, d)] if n == 4 && l.parts() == [2, 2] && m <= 2 => Some((Case::IV, Some(*d), trivial)),
        _ => None,
    }
}

fn randomized_classification() -> Result<(), String> {
    let strategy = (1usize..=7).prop_flat_map(|n| {
        let pick = proptest::prop_oneof![
            3 => Just(Partition::row(n)),
            1 => Just(Partition::column(n)),
            2 => proptest::sample::select(partitions_of(n)),
        ];
        (Just(n), proptest::collection::vec((pick, 1usize..6), 1..6))
    });
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 3000,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    runner
        .run(&strategy, |(n, items)| {
            let ms = IrredMultiset::new(n, items.iter().map(|(l, d)| Summand::new(l.clone(), *d)).collect());
            let verdict = classify(&ms).expect("well-formed");
            let ok = match (expected_family(n, &items), verdict) {
                (None, Verdict::Rejected(_)) => true,
                (Some((case, d, c)), Verdict::Accepted(cl)) => {
                    let r = cl.representation_type;
                    r.case == case && r.d == d && r.c == c
                }
                _ => false,
            };
            proptest::prop_assert!(ok, "n = {} items = {:?}", n, items);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn case_one_hilbert_series() -> Result<(), String> {
    let bound = 20;
    for n in 1..=5 {
        for c in [vec![1], vec![2, 3], vec![1, 1, 2], vec![2, 2, 2, 2], vec![3, 1, 4, 1, 5]] {
            if c.len() > n {
                continue;
            }
            let g = quotient_character(&RepresentationType::new(Case::I, None, c.clone()), n, Some(bound))
                .map_err(|e| e.to_string())?;
            // Π(1 − t^{c_i}) / (1 − t)^n by direct series arithmetic.
            let mut s = vec![BigInt::zero(); bound + 1];
            s[0] = BigInt::one();
            for &ci in &c {
                for d in (ci..=bound).rev() {
                    let sub = s[d - ci].clone();
                    s[d] -= sub;
                }
            }
            for _ in 0..n {
                for d in 1..=bound {
                    let add = s[d - 1].clone();
                    s[d] += add;
                }
            }
            let mut h = hilbert_series(&g);
            h.resize(bound + 1, BigInt::zero());
            check(h == s, || format!("n = {n}, c = {c:?}: {h:?} vs {s:?}"))?;
        }
    }
    Ok(())
}

fn representative_independence() -> Result<(), String> {
    let gs = GeneratorSet::parse(EX5).map_err(|e| e.to_string())?;
    for d in 0..=4 {
        let slice = ideal_degree_slice(&gs, d);
        for mu in partitions_of(4) {
            let base = Permutation::from_cycle_type(&mu);
            let expected = slice.trace(&base);
            // Conjugate by every element of S_4.
            for images in permutations(4) {
                let tau = Permutation::from_images(images).expect("bijection");
                let conj = tau.compose(&base).compose(&tau.inverse());
                let t = slice.trace(&conj);
                check(t == expected, || format!("degree {d}, class {mu}: {t} vs {expected}"))?;
            }
        }
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut v: Vec<usize> = rest.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

#[test]
fn criterion_08_property_suites() {
    let parts: [(&str, fn() -> Result<(), String>); 7] = [
        ("orthonormality", orthonormality),
        ("sum of squared dimensions", sum_of_squares),
        ("Kostka-Foulkes support", kostka_support),
        ("hooks", hooks),
        ("randomized classification", randomized_classification),
        ("case I Hilbert series", case_one_hilbert_series),
        ("representative independence", representative_independence),
    ];
    let outcome = parts
        .iter()
        .try_for_each(|(name, f)| f().map_err(|e| format!("{name}: {e}")));
    report(8, "property suites", outcome);
}

#[test]
fn criterion_09_transposition_on_two_two() {
    let t1 = Tableau::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
    let t2 = Tableau::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
    let one = BigRational::one();
    let mut first = TableauCombination::single(t1.clone(), one.clone());
    first.add(t2.clone(), -one.clone());
    let second = TableauCombination::single(t2.clone(), -one.clone());
    let outcome = apply_transposition(1, 2, &t1)
        .map_err(|e| e.to_string())
        .and_then(|got| check(got == first, || format!("(1 2)T1 = {got}")))
        .and_then(|_| apply_transposition(1, 2, &t2).map_err(|e| e.to_string()))
        .and_then(|got| check(got == second, || format!("(1 2)T2 = {got}")))
        .and_then(|_| transposition_matrix(&p(&[2, 2]), 1, 2).map_err(|e| e.to_string()))
        .and_then(|m| {
            let det = determinant(m);
            check(det == -one.clone(), || format!("action on T1∧T2 is {det}"))
        });
    report(9, "transposition (1 2) on the standard basis of S^(2,2)", outcome);
}

#[test]
fn criterion_10_socle() {
    let expectations = [
        ("case I c=2,3,3,4", true),
        ("case II d=6 c=2,2,3", false),
        ("case III d=2 c=2", false),
        ("case IV d=2 c=2,3", false),
    ];
    let outcome = expectations.iter().try_for_each(|(spec, alternating)| {
        let g = quotient_character(&rt(spec), 4, None).map_err(|e| e.to_string())?;
        let s = socle_analysis(&g).map_err(|e| e.to_string())?;
        let ok = if *alternating {
            s.top_is_alternating && !s.top_is_trivial
        } else {
            s.top_is_trivial && !s.top_is_alternating
        };
        check(ok, || format!("{spec}: {s:?}"))
    });
    report(10, "socle of the worked quotients", outcome);
}
