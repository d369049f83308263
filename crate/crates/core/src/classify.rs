//! Which decompositions of `I/mI` can come from an `S_n`-stable complete
//! intersection.
//!
//! A stable complete intersection is generated by a regular sequence whose
//! span decomposes into irreducibles. Only four families survive:
//!
//! * I: trivial summands only, `1 ≤ m ≤ n` of them;
//! * II: one copy of the sign representation `(1^n)` plus `m ≤ n − 1` trivials;
//! * III: one copy of the standard representation `(n−1,1)` plus `m ≤ 1`;
//! * IV: (`n = 4` only) one copy of `(2,2)` plus `m ≤ 2`.
//!
//! Everything else is rejected by the first of these rules that fails:
//!
//! 1. no summand may contain `(2,2)` (the 2-dimensional `(2,2)` at `n = 4` is
//!    the one exception);
//! 2. no summand may be a hook containing `(2,1,1)`;
//! 3. at most one summand may be non-trivial;
//! 4. the total dimension is at most `n`, since regular sequences in `n`
//!    variables have length at most `n`.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graded::{Case, RepresentationType};
use crate::partitions::Partition;

/// One irreducible summand `S^λ` sitting in degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub partition: Partition,
    pub degree: usize,
}

impl Summand {
    pub fn new(partition: Partition, degree: usize) -> Self {
        Summand { partition, degree }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}@{}", self.partition, self.degree)
    }
}

/// The decomposition of `I/mI` into irreducibles with their degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrredMultiset {
    pub n: usize,
    pub summands: Vec<Summand>,
}

impl IrredMultiset {
    pub fn new(n: usize, summands: Vec<Summand>) -> Self {
        IrredMultiset { n, summands }
    }

    /// Checks that every partition has size `n` and every degree is positive.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidMultiset("n must be at least 1".into()));
        }
        if self.summands.is_empty() {
            return Err(Error::InvalidMultiset("no summands".into()));
        }
        for s in &self.summands {
            if s.partition.n() != self.n {
                return Err(Error::InvalidPartition(format!(
                    "{} is not a partition of {}",
                    s.partition, self.n
                )));
            }
            if s.degree == 0 {
                return Err(Error::InvalidMultiset(format!("{s} has degree 0")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// A summand contains `(2,2)`.
    ContainsTwoTwo,
    /// A summand is a hook containing `(2,1,1)`.
    HookContainsTwoOneOne,
    /// Two or more non-trivial summands.
    SeveralNontrivial,
    /// More generators than variables.
    LengthBound,
}

impl Rule {
    pub fn label(&self) -> &'static str {
        match self {
            Rule::ContainsTwoTwo => "Corollary 1",
            Rule::HookContainsTwoOneOne => "Corollary 2",
            Rule::SeveralNontrivial => "Corollary 3",
            Rule::LengthBound => "length bound",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub rule: Rule,
    pub witness: Vec<Summand>,
    pub reason: String,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|s| s.to_string()).collect();
        write!(f, "{}: {} [{}]", self.rule, self.reason, w.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub representation_type: RepresentationType,
    /// `n ≤ 3`, where several of the admissible labels coincide.
    pub degenerate_small_n: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Accepted(Classification),
    Rejected(Rejection),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted(_))
    }
}

/// Irreducibles that can appear in `I/mI` at all: `(n)`, `(1^n)`, `(n−1,1)`,
/// plus `(2,2)` when `n = 4`. Coinciding labels for small `n` appear once.
pub fn admissible_irreducibles(n: usize) -> Vec<Partition> {
    let mut out = vec![Partition::row(n), Partition::column(n)];
    if n >= 2 {
        out.push(Partition::hook(n - 1, 1));
    }
    if n == 4 {
        out.push(Partition::new(vec![2, 2]).expect("valid"));
    }
    let mut seen = Vec::new();
    out.retain(|p| {
        if seen.contains(p) {
            false
        } else {
            seen.push(p.clone());
            true
        }
    });
    out
}

fn dimension(lambda: &Partition) -> usize {
    crate::tableaux::standard_tableaux(lambda).len()
}

/// Runs the rule chain. Malformed input is an error; a multiset that cannot
/// come from a complete intersection is a [`Verdict::Rejected`].
pub fn classify(ms: &IrredMultiset) -> Result<Verdict> {
    ms.validate()?;
    let n = ms.n;
    let two_two = Partition::new(vec![2, 2]).expect("valid");
    let two_one_one = Partition::new(vec![2, 1, 1]).expect("valid");
    let trivial = Partition::row(n);

    let reject = |rule, witness: Vec<Summand>, reason: String| {
        Ok(Verdict::Rejected(Rejection {
            rule,
            witness,
            reason,
        }))
    };

    if let Some(s) = ms
        .summands
        .iter()
        .find(|s| s.partition.contains(&two_two) && !(n == 4 && s.partition == two_two))
    {
        return reject(
            Rule::ContainsTwoTwo,
            vec![s.clone()],
            format!("{} contains (2,2)", s.partition),
        );
    }
    if let Some(s) = ms
        .summands
        .iter()
        .find(|s| s.partition.is_hook() && s.partition.contains(&two_one_one))
    {
        return reject(
            Rule::HookContainsTwoOneOne,
            vec![s.clone()],
            format!("{} is a hook containing (2,1,1)", s.partition),
        );
    }
    let nontrivial: Vec<Summand> = ms
        .summands
        .iter()
        .filter(|s| s.partition != trivial)
        .cloned()
        .collect();
    if nontrivial.len() >= 2 {
        return reject(
            Rule::SeveralNontrivial,
            nontrivial,
            "at least two non-trivial summands".into(),
        );
    }
    let total: usize = ms.summands.iter().map(|s| dimension(&s.partition)).sum();
    if total > n {
        return reject(
            Rule::LengthBound,
            ms.summands.clone(),
            format!("{total} generators in {n} variables"),
        );
    }

    let mut c: Vec<usize> = ms
        .summands
        .iter()
        .filter(|s| s.partition == trivial)
        .map(|s| s.degree)
        .collect();
    c.sort_unstable();
    let rt = match nontrivial.first() {
        None => RepresentationType::new(Case::I, None, c),
        Some(s) if s.partition == Partition::column(n) => {
            RepresentationType::new(Case::II, Some(s.degree), c)
        }
        Some(s) if s.partition == Partition::hook(n - 1, 1) => {
            RepresentationType::new(Case::III, Some(s.degree), c)
        }
        Some(s) => {
            debug_assert!(n == 4 && s.partition == two_two);
            RepresentationType::new(Case::IV, Some(s.degree), c)
        }
    };
    Ok(Verdict::Accepted(Classification {
        representation_type: rt,
        degenerate_small_n: n <= 3,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ms(n: usize, items: &[(&[usize], usize)]) -> IrredMultiset {
        IrredMultiset::new(n, items.iter().map(|(l, d)| Summand::new(p(l), *d)).collect())
    }

    fn rejected_by(v: Verdict) -> Rule {
        match v {
            Verdict::Rejected(r) => r.rule,
            Verdict::Accepted(c) => panic!("accepted as {:?}", c.representation_type),
        }
    }

    fn accepted(v: Verdict) -> RepresentationType {
        match v {
            Verdict::Accepted(c) => c.representation_type,
            Verdict::Rejected(r) => panic!("rejected: {r}"),
        }
    }

    #[test]
    fn admissible_lists() {
        assert_eq!(admissible_irreducibles(4), vec![p(&[4]), p(&[1, 1, 1, 1]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(admissible_irreducibles(5), vec![p(&[5]), p(&[1, 1, 1, 1, 1]), p(&[4, 1])]);
        assert_eq!(admissible_irreducibles(2), vec![p(&[2]), p(&[1, 1])]);
    }

    #[test]
    fn four_trivials() {
        let rt = accepted(classify(&ms(4, &[(&[4], 2), (&[4], 3), (&[4], 3), (&[4], 4)])).unwrap());
        assert_eq!(rt, RepresentationType::new(Case::I, None, vec![2, 3, 3, 4]));
    }

    #[test]
    fn each_rule_fires() {
        assert_eq!(rejected_by(classify(&ms(5, &[(&[4, 1], 1), (&[4, 1], 2)])).unwrap()), Rule::SeveralNontrivial);
        assert_eq!(rejected_by(classify(&ms(5, &[(&[3, 2], 3)])).unwrap()), Rule::ContainsTwoTwo);
        assert_eq!(rejected_by(classify(&ms(6, &[(&[4, 1, 1], 3)])).unwrap()), Rule::HookContainsTwoOneOne);
        assert_eq!(
            rejected_by(classify(&ms(4, &[(&[3, 1], 1), (&[4], 1), (&[4], 2)])).unwrap()),
            Rule::LengthBound
        );
        assert_eq!(
            rejected_by(classify(&ms(3, &[(&[3], 1), (&[3], 1), (&[3], 1), (&[3], 1)])).unwrap()),
            Rule::LengthBound
        );
    }

    #[test]
    fn rule_order_reports_first_violation() {
        // Both (3,2) and a pair of non-trivial summands; rule 1 wins.
        let v = classify(&ms(5, &[(&[3, 2], 2), (&[4, 1], 1)])).unwrap();
        match v {
            Verdict::Rejected(r) => {
                assert_eq!(r.rule, Rule::ContainsTwoTwo);
                assert_eq!(r.witness, vec![Summand::new(p(&[3, 2]), 2)]);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn cases_two_three_four() {
        let rt = accepted(classify(&ms(4, &[(&[1, 1, 1, 1], 6), (&[4], 3), (&[4], 2), (&[4], 2)])).unwrap());
        assert_eq!(rt, RepresentationType::new(Case::II, Some(6), vec![2, 2, 3]));
        let rt = accepted(classify(&ms(4, &[(&[3, 1], 2), (&[4], 2)])).unwrap());
        assert_eq!(rt, RepresentationType::new(Case::III, Some(2), vec![2]));
        let rt = accepted(classify(&ms(4, &[(&[2, 2], 2), (&[4], 2), (&[4], 3)])).unwrap());
        assert_eq!(rt, RepresentationType::new(Case::IV, Some(2), vec![2, 3]));
        assert_eq!(rejected_by(classify(&ms(4, &[(&[2, 2], 2), (&[4], 1), (&[4], 1), (&[4], 1)])).unwrap()), Rule::LengthBound);
    }

    #[test]
    fn small_n_is_flagged() {
        match classify(&ms(2, &[(&[1, 1], 1), (&[2], 2)])).unwrap() {
            Verdict::Accepted(c) => {
                assert!(c.degenerate_small_n);
                assert_eq!(c.representation_type.case, Case::II);
            }
            _ => panic!(),
        }
        match classify(&ms(3, &[(&[2, 1], 1), (&[3], 3)])).unwrap() {
            Verdict::Accepted(c) => assert_eq!(c.representation_type.case, Case::III),
            _ => panic!(),
        }
        match classify(&ms(5, &[(&[5], 1)])).unwrap() {
            Verdict::Accepted(c) => assert!(!c.degenerate_small_n),
            _ => panic!(),
        }
    }

    #[test]
    fn malformed_input_is_an_error() {
        assert!(classify(&ms(4, &[])).is_err());
        assert!(classify(&ms(4, &[(&[3, 1], 0)])).is_err());
        assert!(classify(&ms(4, &[(&[3], 1)])).is_err());
    }

    #[test]
    fn json_shapes() {
        let input = r#"{"n":4,"summands":[{"partition":[2,2],"degree":2},{"partition":[4],"degree":3}]}"#;
        let m: IrredMultiset = serde_json::from_str(input).unwrap();
        let v = classify(&m).unwrap();
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["verdict"], "accepted");
        assert_eq!(j["representation_type"]["case"], "IV");
        let m = ms(5, &[(&[4, 1], 1), (&[1, 1, 1, 1, 1], 2)]);
        let j = serde_json::to_value(classify(&m).unwrap()).unwrap();
        assert_eq!(j["verdict"], "rejected");
        assert_eq!(j["rule"], "Corollary 3");
        assert_eq!(j["witness"].as_array().unwrap().len(), 2);
    }

    mod props {
        use super::*;
        use crate::partitions::partitions_of;
        use proptest::prelude::*;

        /// Direct pattern match against the four accepted families, written
        /// without the rule chain.
        fn expected(n: usize, items: &[(Partition, usize)]) -> Option<(Case, Option<usize>, Vec<usize>)> {
            let mut trivials: Vec<usize> = items.iter().filter(|(l, _)| l.len() == 1).map(|(_, d)| *d).collect();
            trivials.sort_unstable();
            let others: Vec<&(Partition, usize)> = items.iter().filter(|(l, _)| l.len() != 1).collect();
            let m = trivials.len();
            match others.as_slice() {
                [] if (1..=n).contains(&m) => Some((Case::I, None, trivials)),
                [(l, d)] if l.parts().iter().all(|&x| x == 1) && m < n => Some((Case::II, Some(*d), trivials)),
                [(l, d)] if l.parts() == [n - 1, 1] && m <= 1 => Some((Case::III, Some(*d), trivials)),
                [(l, d)] if n == 4 && l.parts() == [2, 2] && m <= 2 => Some((Case::IV, Some(*d), trivials)),
                _ => None,
            }
        }

        fn multiset() -> impl Strategy<Value = (usize, Vec<(Partition, usize)>)> {
            (1usize..=7).prop_flat_map(|n| {
                let parts = partitions_of(n);
                // Bias towards the admissible shapes so acceptances are common.
                let pick = prop_oneof![
                    3 => Just(Partition::row(n)),
                    1 => Just(Partition::column(n)),
                    1 => Just(if n >= 2 { Partition::hook(n - 1, 1) } else { Partition::row(1) }),
                    2 => proptest::sample::select(parts),
                ];
                (Just(n), proptest::collection::vec((pick, 1usize..6), 1..6))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(2000))]
            #[test]
            fn accepts_exactly_the_four_families((n, items) in multiset()) {
                let m = IrredMultiset::new(n, items.iter().map(|(l, d)| Summand::new(l.clone(), *d)).collect());
                let got = classify(&m).unwrap();
                match (expected(n, &items), got) {
                    (None, Verdict::Rejected(_)) => {}
                    (Some((case, d, c)), Verdict::Accepted(cl)) => {
                        let rt = cl.representation_type;
                        prop_assert_eq!(rt.case, case);
                        prop_assert_eq!(rt.d, d);
                        prop_assert_eq!(rt.c, c);
                    }
                    (e, g) => prop_assert!(false, "n={} items={:?}: expected {:?}, got {:?}", n, items, e, g),
                }
            }

            #[test]
            fn accepted_types_fit_in_n_variables((n, items) in multiset()) {
                let m = IrredMultiset::new(n, items.iter().map(|(l, d)| Summand::new(l.clone(), *d)).collect());
                if classify(&m).unwrap().is_accepted() {
                    let total: usize = items.iter().map(|(l, _)| dimension(l)).sum();
                    prop_assert!(total <= n);
                }
            }
        }
    }
}
