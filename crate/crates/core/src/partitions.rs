//! Integer partitions.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. The
//! same type labels irreducible representations of `S_n` and cycle types of
//! its conjugacy classes. Partitions compare lexicographically on their parts,
//! so for a fixed `n` the descending order is the reverse-lexicographic order
//! used by [`partitions_of`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing steps.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "part {} of {:?} is zero",
                pos + 1,
                parts
            )));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{:?} is not weakly decreasing ({} < {})",
                parts, w[0], w[1]
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`, labelling the trivial representation.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![n], n }
    }

    /// The one-column partition `(1^n)`, labelling the sign representation.
    pub fn column(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
            n,
        }
    }

    /// The hook `(a, 1^b)`. Panics if `a == 0`.
    pub fn hook(a: usize, b: usize) -> Self {
        assert!(a >= 1, "hook arm must be positive");
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b));
        Partition { parts, n: a + b }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The size `|λ|`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `λ` contains `μ` when it has at least as many parts and `λ_i ≥ μ_i`
    /// for every index of `μ`.
    pub fn contains(&self, mu: &Partition) -> bool {
        self.len() >= mu.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| l >= m)
    }

    /// True for partitions of the form `(a, 1^b)`.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Dominance order: every partial sum of `self` is at least that of `mu`.
    pub fn dominates(&self, mu: &Partition) -> bool {
        if self.n != mu.n {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(mu.len()) {
            a += self.part(i);
            b += mu.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `n(μ) = Σ (i-1) μ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts: Vec<usize> = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts, n: self.n }
    }

    /// Pairs `(k, m_k)` of distinct parts and their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation with this cycle type,
    /// `z_λ = Π k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (k, m) in self.multiplicities() {
            for i in 1..=m {
                z *= BigUint::from(k) * BigUint::from(i);
            }
        }
        z
    }

    /// Size of the conjugacy class of `S_n` with this cycle type, `n!/z_λ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n) / self.centralizer_order()
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.n - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Comma-separated parts without brackets, e.g. `3,1`.
    pub fn to_plain_string(&self) -> String {
        join(&self.parts)
    }

    /// Exponent shorthand, e.g. `(2^2,1^3)`.
    pub fn to_exponent_string(&self) -> String {
        let body: Vec<String> = self
            .multiplicities()
            .into_iter()
            .map(|(k, m)| if m == 1 { k.to_string() } else { format!("{k}^{m}") })
            .collect();
        format!("({})", body.join(","))
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All partitions of `n` in reverse-lexicographic order, starting from `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut cur = vec![n];
    loop {
        out.push(Partition {
            parts: cur.clone(),
            n,
        });
        // Rightmost part larger than one.
        let Some(pos) = cur.iter().rposition(|&p| p > 1) else {
            break;
        };
        let mut rest: usize = cur[pos + 1..].iter().sum();
        let top = cur[pos] - 1;
        cur.truncate(pos);
        cur.push(top);
        rest += 1;
        while rest > 0 {
            let take = rest.min(top);
            cur.push(take);
            rest -= take;
        }
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `[3,1]`, `3,1`, `3 1`, `()` and exponent shorthand
    /// such as `(2^2,1^3)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPartition(format!("{s:?}: {msg}"));
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let mut parts = Vec::new();
        for tok in body.split([',', ' ']).filter(|t| !t.trim().is_empty()) {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e),
                None => (tok, "1"),
            };
            let base: usize = base.trim().parse().map_err(|_| bad("expected integer part"))?;
            let exp: usize = exp.trim().parse().map_err(|_| bad("expected integer exponent"))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}
