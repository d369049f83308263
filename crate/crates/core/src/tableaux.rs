//! Young tableaux, the charge statistic and Kostka–Foulkes polynomials.
//!
//! Reading words are taken row by row starting from the bottom row, left to
//! right within each row. With this convention the one-row standard tableau
//! has word `12…n` and charge `n(n-1)/2`, while the one-column tableau has
//! word `n…21` and charge 0.
//!
//! The permutation action on Specht modules is computed with polytabloids:
//! a tableau `T` stands for `e_T = Σ_{σ ∈ C_T} sgn(σ) {σT}` where `C_T` is its
//! column group, and any `e_T` is expanded in the standard basis by solving a
//! linear system in the space of tabloids.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::solve_in_span;
use crate::partitions::Partition;

/// Polynomial in one variable `t` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UnivariatePoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: usize, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: usize, coeff: BigInt) {
        let slot = self.coeffs.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `t^d · p(1/t)`. Panics if `d` is below the degree.
    pub fn reversed(&self, d: usize) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.coeffs {
            assert!(e <= d, "reversal degree {d} below term t^{e}");
            out.add_term(d - e, c.clone());
        }
        out
    }
}

impl fmt::Display for UnivariatePoly {
    /// Ascending powers, e.g. `t+t^2+t^3`, `2-t^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}")?,
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for UnivariatePoly {
    /// Sparse `{"exponent": coefficient}` object.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            map.serialize_entry(&e.to_string(), &crate::characters::JsonInt(c.clone()))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for UnivariatePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, crate::characters::JsonInt>::deserialize(deserializer)?;
        let mut p = UnivariatePoly::zero();
        for (k, v) in raw {
            let e: usize = k.parse().map_err(serde::de::Error::custom)?;
            p.add_term(e, v.0);
        }
        Ok(p)
    }
}

/// A filling of a Young diagram by positive integers.
///
/// Tableaux order lexicographically on their rows, which for a fixed shape is
/// the lexicographic order of the top-to-bottom row reading.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
    shape: Partition,
}

impl Tableau {
    /// Accepts any filling whose row lengths form a partition.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { rows, shape })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.n()
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row][col]
    }

    /// `(row, column)` of the first cell holding `value`.
    pub fn position(&self, value: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&x| x == value).map(|c| (r, c))
        })
    }

    pub fn column(&self, col: usize) -> Vec<usize> {
        self.rows.iter().filter_map(|row| row.get(col).copied()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.part(0)).map(|c| self.column(c)).collect()
    }

    fn rows_weakly_increase(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    fn rows_strictly_increase(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    fn columns_strictly_increase(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below))
    }

    /// Bijective filling by `1..=n`, increasing along rows and columns.
    pub fn is_standard(&self) -> bool {
        let mut seen = vec![false; self.size() + 1];
        for &x in self.rows.iter().flatten() {
            if x > self.size() || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        self.rows_strictly_increase() && self.columns_strictly_increase()
    }

    pub fn is_semistandard(&self) -> bool {
        self.rows_weakly_increase() && self.columns_strictly_increase()
    }

    /// `content[i]` counts the entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        c
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Exchanges the values `i` and `j` wherever they occur.
    pub fn swap_values(&self, i: usize, j: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| if x == i { j } else if x == j { i } else { x })
                    .collect()
            })
            .collect();
        Tableau {
            rows,
            shape: self.shape.clone(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Tableau::new(rows).map_err(serde::de::Error::custom)
    }
}

/// All standard tableaux of shape `shape`, in lexicographic order of their rows.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn fill(shape: &Partition, rows: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<Tableau>) {
        if next > shape.n() {
            out.push(Tableau {
                rows: rows.clone(),
                shape: shape.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape.part(r) && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                fill(shape, rows, next + 1, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    fill(shape, &mut rows, 1, &mut out);
    out.sort();
    out
}

/// All semistandard tableaux of shape `shape` in which the value `i` occurs
/// `weight[i-1]` times, in lexicographic order of their rows.
pub fn semistandard_tableaux(shape: &Partition, weight: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.n() != weight.n() {
        return out;
    }
    // Value v fills a horizontal strip between the current shape and the next.
    fn strips(
        shape: &Partition,
        weight: &Partition,
        value: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if value > weight.len() {
            out.push(Tableau {
                rows: rows.clone(),
                shape: shape.clone(),
            });
            return;
        }
        let before: Vec<usize> = rows.iter().map(Vec::len).collect();
        place(shape, weight, value, 0, weight.part(value - 1), &before, rows, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn place(
        shape: &Partition,
        weight: &Partition,
        value: usize,
        row: usize,
        remaining: usize,
        before: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if remaining == 0 {
            strips(shape, weight, value + 1, rows, out);
            return;
        }
        if row >= shape.len() {
            return;
        }
        let cap = if row == 0 {
            shape.part(0)
        } else {
            shape.part(row).min(before[row - 1])
        };
        let room = cap.saturating_sub(before[row]);
        for k in (0..=room.min(remaining)).rev() {
            rows[row].extend(std::iter::repeat_n(value, k));
            place(shape, weight, value, row + 1, remaining - k, before, rows, out);
            let keep = rows[row].len() - k;
            rows[row].truncate(keep);
        }
    }

    let mut rows = vec![Vec::new(); shape.len()];
    strips(shape, weight, 1, &mut rows, &mut out);
    out.sort();
    out
}

/// Charge of a word whose content is a partition (as many 1s as 2s as …).
///
/// The word is split into standard subwords: starting from the rightmost
/// unused 1, scan leftwards (wrapping around cyclically) for the next unused
/// 2, then 3, and so on. Within a subword the index of 1 is 0 and the index of
/// `r+1` exceeds that of `r` by one exactly when the scan wrapped. The charge
/// is the total of all indices.
pub fn charge_word(word: &[usize]) -> Result<usize> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max];
    for &x in word {
        if x == 0 {
            return Err(Error::InvalidTableau("word letters must be positive".into()));
        }
        counts[x - 1] += 1;
    }
    if counts.windows(2).any(|w| w[0] < w[1]) || counts.contains(&0) {
        return Err(Error::InvalidTableau(format!(
            "charge needs partition content, got {counts:?}"
        )));
    }
    let len = word.len();
    let mut used = vec![false; len];
    let mut left = len;
    let mut total = 0;
    while left > 0 {
        let top = (1..=max)
            .filter(|&v| (0..len).any(|p| !used[p] && word[p] == v))
            .max()
            .unwrap_or(0);
        let mut pos = (0..len)
            .rev()
            .find(|&p| !used[p] && word[p] == 1)
            .expect("partition content has a 1 while letters remain");
        used[pos] = true;
        left -= 1;
        let mut index = 0;
        for letter in 2..=top {
            let leftwards = (0..pos).rev().find(|&p| !used[p] && word[p] == letter);
            pos = match leftwards {
                Some(p) => p,
                None => {
                    index += 1;
                    (pos + 1..len)
                        .rev()
                        .find(|&p| !used[p] && word[p] == letter)
                        .expect("partition content has every letter up to the top")
                }
            };
            used[pos] = true;
            left -= 1;
            total += index;
        }
    }
    Ok(total)
}

/// Charge of a semistandard tableau with partition content.
pub fn charge(t: &Tableau) -> Result<usize> {
    if !t.is_semistandard() {
        return Err(Error::InvalidTableau(format!("{t} is not semistandard")));
    }
    charge_word(&t.reading_word())
}

/// `K_{λ,μ}(t) = Σ t^{charge(T)}` over semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> UnivariatePoly {
    let mut p = UnivariatePoly::zero();
    for t in semistandard_tableaux(lambda, mu) {
        let c = charge(&t).expect("semistandard tableau with partition content");
        p.add_term(c, BigInt::one());
    }
    p
}

/// `K̃_{λ,μ}(t) = t^{n(μ)} K_{λ,μ}(1/t)`.
pub fn kostka_foulkes_tilde(lambda: &Partition, mu: &Partition) -> UnivariatePoly {
    kostka_foulkes(lambda, mu).reversed(mu.n_stat())
}

/// A rational combination of standard tableaux of one shape.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TableauCombination {
    terms: BTreeMap<Tableau, BigRational>,
}

impl TableauCombination {
    pub fn single(t: Tableau, coeff: BigRational) -> Self {
        let mut c = Self::default();
        c.add(t, coeff);
        c
    }

    pub fn add(&mut self, t: Tableau, coeff: BigRational) {
        let slot = self.terms.entry(t.clone()).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn coeff(&self, t: &Tableau) -> BigRational {
        self.terms.get(t).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for TableauCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TableauCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Tabloids of one shape, indexed for use as coordinates.
struct TabloidSpace {
    index: HashMap<Vec<usize>, usize>,
}

impl TabloidSpace {
    fn new() -> Self {
        TabloidSpace {
            index: HashMap::new(),
        }
    }

    fn coord(&mut self, tabloid: Vec<usize>) -> usize {
        let next = self.index.len();
        *self.index.entry(tabloid).or_insert(next)
    }

    /// The polytabloid of `t` as sparse coordinates. A tabloid is recorded as
    /// the row index of each value.
    fn polytabloid(&mut self, t: &Tableau) -> Vec<(usize, i64)> {
        let n = t.size();
        let columns = t.columns();
        let mut row_of = vec![0usize; n];
        let mut acc: HashMap<usize, i64> = HashMap::new();
        fn walk(
            space: &mut TabloidSpace,
            columns: &[Vec<usize>],
            col: usize,
            sign: i64,
            row_of: &mut Vec<usize>,
            acc: &mut HashMap<usize, i64>,
        ) {
            if col == columns.len() {
                let key = space.coord(row_of.clone());
                *acc.entry(key).or_default() += sign;
                return;
            }
            let entries = &columns[col];
            for (perm, s) in permutations_with_sign(entries.len()) {
                for (i, &value) in entries.iter().enumerate() {
                    row_of[value - 1] = perm[i];
                }
                walk(space, columns, col + 1, sign * s, row_of, acc);
            }
        }
        walk(self, &columns, 0, 1, &mut row_of, &mut acc);
        acc.into_iter().filter(|(_, v)| *v != 0).collect()
    }
}

/// All permutations of `0..k` with their signs.
fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (smaller, s) in permutations_with_sign(k - 1) {
        // Insert k-1 at each position; moving it left past j entries costs (-1)^j.
        for pos in 0..=smaller.len() {
            let mut p = smaller.clone();
            p.insert(pos, k - 1);
            let shift = (smaller.len() - pos) as i64;
            out.push((p, if shift % 2 == 0 { s } else { -s }));
        }
    }
    out
}

/// Expands the Specht module element of an arbitrary bijective filling `t`
/// in the standard basis of its shape.
pub fn straighten(t: &Tableau) -> Result<TableauCombination> {
    let n = t.size();
    let mut values: Vec<usize> = t.rows().iter().flatten().copied().collect();
    values.sort_unstable();
    if values != (1..=n).collect::<Vec<_>>() {
        return Err(Error::InvalidTableau(format!("{t} is not a bijective filling")));
    }
    let basis = standard_tableaux(t.shape());
    let mut space = TabloidSpace::new();
    let basis_vecs: Vec<Vec<(usize, i64)>> = basis.iter().map(|b| space.polytabloid(b)).collect();
    let target = space.polytabloid(t);
    let dim = space.index.len();
    let densify = |v: &[(usize, i64)]| {
        let mut d = vec![BigRational::zero(); dim];
        for &(i, x) in v {
            d[i] = BigRational::from_integer(x.into());
        }
        d
    };
    let columns: Vec<Vec<BigRational>> = basis_vecs.iter().map(|v| densify(v)).collect();
    let coords = solve_in_span(&columns, &densify(&target))
        .expect("standard polytabloids span the Specht module");
    let mut out = TableauCombination::default();
    for (b, x) in basis.into_iter().zip(coords) {
        out.add(b, x);
    }
    Ok(out)
}

/// The action of the transposition `(i j)` on the standard tableau `t`,
/// expanded in the standard basis.
///
/// Only adjacent transpositions and transpositions of two entries in one
/// column are accepted; the latter act by `-1`.
pub fn apply_transposition(i: usize, j: usize, t: &Tableau) -> Result<TableauCombination> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    let n = t.size();
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::UnsupportedTransposition { i, j });
    }
    let (pi, pj) = (t.position(i).unwrap(), t.position(j).unwrap());
    if pi.1 == pj.1 {
        return Ok(TableauCombination::single(t.clone(), -BigRational::one()));
    }
    if i.abs_diff(j) != 1 {
        return Err(Error::UnsupportedTransposition { i, j });
    }
    straighten(&t.swap_values(i, j))
}

/// Matrix of `(i j)` on the standard basis of `S^shape`; column `k` holds the
/// expansion of `(i j)` applied to the `k`-th standard tableau.
pub fn transposition_matrix(shape: &Partition, i: usize, j: usize) -> Result<Vec<Vec<BigRational>>> {
    let basis = standard_tableaux(shape);
    let mut m = vec![vec![BigRational::zero(); basis.len()]; basis.len()];
    for (k, t) in basis.iter().enumerate() {
        let image = apply_transposition(i, j, t)?;
        for (r, b) in basis.iter().enumerate() {
            m[r][k] = image.coeff(b);
        }
    }
    Ok(m)
}

/// Small helper for tests and examples: `K` as `(exponent, coefficient)` pairs.
pub fn poly_terms(p: &UnivariatePoly) -> Vec<(usize, i64)> {
    p.terms()
        .map(|(e, c)| (e, c.to_i64().expect("small coefficient")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::determinant;
    use crate::partitions::{factorial, partitions_of};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn standard_tableaux_of_square() {
        let sq = standard_tableaux(&p(&[2, 2]));
        assert_eq!(sq, vec![tab(&[&[1, 2], &[3, 4]]), tab(&[&[1, 3], &[2, 4]])]);
        assert_eq!(standard_tableaux(&Partition::row(5)), vec![tab(&[&[1, 2, 3, 4, 5]])]);
        assert_eq!(standard_tableaux(&p(&[3, 1])).len(), 3);
        assert!(sq.iter().all(Tableau::is_standard));
    }

    #[test]
    fn semistandard_examples() {
        let sq = p(&[2, 2]);
        assert_eq!(semistandard_tableaux(&sq, &Partition::column(4)), standard_tableaux(&sq));
        assert_eq!(semistandard_tableaux(&p(&[2]), &p(&[2])), vec![tab(&[&[1, 1]])]);
        assert!(semistandard_tableaux(&p(&[1, 1]), &p(&[2])).is_empty());
    }

    #[test]
    fn semistandard_matches_filtered_brute_force() {
        // Every filling of the shape with the right content, filtered.
        fn fillings(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
            let mut letters: Vec<usize> = Vec::new();
            for (i, &c) in content.iter().enumerate() {
                letters.extend(std::iter::repeat_n(i + 1, c));
            }
            let mut out = Vec::new();
            fn perms(pool: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if pool.is_empty() {
                    out.push(cur.clone());
                    return;
                }
                let mut tried = std::collections::BTreeSet::new();
                for k in 0..pool.len() {
                    if !tried.insert(pool[k]) {
                        continue;
                    }
                    let x = pool.remove(k);
                    cur.push(x);
                    perms(pool, cur, out);
                    cur.pop();
                    pool.insert(k, x);
                }
            }
            let mut words = Vec::new();
            perms(&mut letters, &mut Vec::new(), &mut words);
            for w in words {
                let mut rows = Vec::new();
                let mut it = w.into_iter();
                for &len in shape.parts() {
                    rows.push(it.by_ref().take(len).collect());
                }
                let t = Tableau::new(rows).unwrap();
                if t.is_semistandard() {
                    out.push(t);
                }
            }
            out.sort();
            out
        }
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(
                        semistandard_tableaux(&lam, &mu),
                        fillings(&lam, mu.parts()),
                        "{lam} {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn charge_of_extreme_tableaux() {
        assert_eq!(charge(&tab(&[&[1], &[2], &[3], &[4]])).unwrap(), 0);
        assert_eq!(charge(&tab(&[&[1, 2, 3, 4]])).unwrap(), 6);
        assert_eq!(charge_word(&[4, 3, 2, 1]).unwrap(), 0);
        assert_eq!(charge_word(&[1, 2, 3, 4]).unwrap(), 6);
    }

    #[test]
    fn charges_of_hook_three_one() {
        // Worked from the rule: words 4123, 3124, 2134.
        let charges: Vec<usize> = standard_tableaux(&p(&[3, 1]))
            .iter()
            .map(|t| charge(t).unwrap())
            .collect();
        assert_eq!(charges, vec![5, 4, 3]);
        let mut set = charges.clone();
        set.sort();
        assert_eq!(set, vec![3, 4, 5]);
    }

    #[test]
    fn charge_rejects_bad_content() {
        assert!(charge_word(&[2, 2, 1]).is_err());
        assert!(charge_word(&[1, 3]).is_err());
        assert!(charge(&tab(&[&[2, 1]])).is_err());
    }

    #[test]
    fn charge_general_content() {
        // 112 → 1; 211 → 0.
        assert_eq!(charge_word(&[1, 1, 2]).unwrap(), 1);
        assert_eq!(charge_word(&[2, 1, 1]).unwrap(), 0);
    }

    #[test]
    fn kostka_foulkes_examples() {
        let col = Partition::column(4);
        assert_eq!(kostka_foulkes(&Partition::row(4), &col), UnivariatePoly::from_terms([(6, 1)]));
        assert_eq!(kostka_foulkes(&p(&[2, 2]), &col), UnivariatePoly::from_terms([(2, 1), (4, 1)]));
        for n in 1..=6 {
            for lam in partitions_of(n) {
                assert_eq!(kostka_foulkes(&lam, &lam), UnivariatePoly::one(), "{lam}");
            }
        }
    }

    #[test]
    fn modified_kostka_foulkes_for_n_four() {
        let col = Partition::column(4);
        let table: Vec<(Partition, UnivariatePoly)> = vec![
            (p(&[4]), UnivariatePoly::one()),
            (p(&[3, 1]), UnivariatePoly::from_terms([(1, 1), (2, 1), (3, 1)])),
            (p(&[2, 2]), UnivariatePoly::from_terms([(2, 1), (4, 1)])),
            (p(&[2, 1, 1]), UnivariatePoly::from_terms([(3, 1), (4, 1), (5, 1)])),
            (p(&[1, 1, 1, 1]), UnivariatePoly::from_terms([(6, 1)])),
        ];
        for (lam, expected) in table {
            assert_eq!(kostka_foulkes_tilde(&lam, &col), expected, "{lam}");
        }
    }

    #[test]
    fn kostka_foulkes_n_four_general_weights() {
        // Independently tabulated values of K_{λ,μ}(t) for n = 4.
        let cases: &[(&[usize], &[usize], &[(usize, i64)])] = &[
            (&[4], &[2, 2], &[(2, 1)]),
            (&[3, 1], &[2, 2], &[(1, 1)]),
            (&[4], &[2, 1, 1], &[(3, 1)]),
            (&[3, 1], &[2, 1, 1], &[(1, 1), (2, 1)]),
            (&[2, 2], &[2, 1, 1], &[(1, 1)]),
            (&[4], &[3, 1], &[(1, 1)]),
            (&[2, 1, 1], &[2, 2], &[]),
        ];
        for (lam, mu, terms) in cases {
            assert_eq!(
                kostka_foulkes(&p(lam), &p(mu)),
                UnivariatePoly::from_terms(terms.iter().copied()),
                "{lam:?} {mu:?}"
            );
        }
    }

    #[test]
    fn kostka_foulkes_structure() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let k = kostka_foulkes(&lam, &mu);
                    let count = semistandard_tableaux(&lam, &mu).len();
                    assert_eq!(k.eval_at_one(), BigInt::from(count));
                    if !lam.dominates(&mu) {
                        assert!(k.is_zero(), "{lam} {mu}");
                        continue;
                    }
                    // Monic of degree n(μ) - n(λ).
                    assert_eq!(k.degree(), Some(mu.n_stat() - lam.n_stat()), "{lam} {mu}");
                    assert_eq!(k.coeff(k.degree().unwrap()), BigInt::one());
                    let kt = kostka_foulkes_tilde(&lam, &mu);
                    assert!(kt.has_nonnegative_coefficients());
                    assert!(kt.degree().unwrap() <= mu.n_stat());
                }
            }
        }
    }

    #[test]
    fn modified_kostka_foulkes_counts_standard_tableaux() {
        for n in 1..=6 {
            let col = Partition::column(n);
            for lam in partitions_of(n) {
                let f = standard_tableaux(&lam).len();
                assert_eq!(kostka_foulkes_tilde(&lam, &col).eval_at_one(), BigInt::from(f));
            }
        }
    }

    #[test]
    fn sum_of_squared_dimensions() {
        for n in 1..=7 {
            let total: usize = partitions_of(n)
                .iter()
                .map(|l| standard_tableaux(l).len().pow(2))
                .sum();
            assert_eq!(num_bigint::BigUint::from(total), factorial(n));
        }
    }

    #[test]
    fn transposition_on_square_basis() {
        let t1 = tab(&[&[1, 2], &[3, 4]]);
        let t2 = tab(&[&[1, 3], &[2, 4]]);
        let mut expected = TableauCombination::single(t1.clone(), q(1));
        expected.add(t2.clone(), q(-1));
        assert_eq!(apply_transposition(1, 2, &t1).unwrap(), expected);
        assert_eq!(
            apply_transposition(1, 2, &t2).unwrap(),
            TableauCombination::single(t2.clone(), q(-1))
        );
        let m = transposition_matrix(&p(&[2, 2]), 1, 2).unwrap();
        assert_eq!(determinant(m), q(-1));
    }

    #[test]
    fn column_pairs_act_by_minus_one_and_agree_with_straightening() {
        for n in 2..=5 {
            for lam in partitions_of(n) {
                for t in standard_tableaux(&lam) {
                    for col in t.columns() {
                        for a in 0..col.len() {
                            for b in a + 1..col.len() {
                                let (i, j) = (col[a], col[b]);
                                let once = apply_transposition(i, j, &t).unwrap();
                                assert_eq!(once, TableauCombination::single(t.clone(), q(-1)));
                                assert_eq!(straighten(&t.swap_values(i, j)).unwrap(), once);
                                // Applying it twice gives +t.
                                let mut twice = TableauCombination::default();
                                for (s, c) in once.terms() {
                                    for (u, d) in apply_transposition(i, j, s).unwrap().terms() {
                                        twice.add(u.clone(), c * d);
                                    }
                                }
                                assert_eq!(twice, TableauCombination::single(t.clone(), q(1)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn adjacent_transposition_traces_match_characters() {
        // Trace of (1 2) on S^λ equals χ^λ at cycle type (2,1^{n-2}).
        for n in 2..=5 {
            let mut cyc = vec![2];
            cyc.extend(std::iter::repeat_n(1, n - 2));
            let cyc = Partition::new(cyc).unwrap();
            for lam in partitions_of(n) {
                let m = transposition_matrix(&lam, 1, 2).unwrap();
                let trace: BigRational = (0..m.len()).map(|k| m[k][k].clone()).sum();
                let chi = crate::characters::irreducible_character(&lam);
                assert_eq!(trace, BigRational::from_integer(chi.value(&cyc)), "{lam}");
            }
        }
    }

    #[test]
    fn rejects_out_of_scope_transpositions() {
        let t = tab(&[&[1, 2, 4], &[3]]);
        assert!(matches!(
            apply_transposition(2, 4, &t),
            Err(Error::UnsupportedTransposition { .. })
        ));
        assert!(apply_transposition(1, 2, &tab(&[&[2, 1]])).is_err());
    }

    #[test]
    fn poly_display_and_json() {
        let k = UnivariatePoly::from_terms([(1, 1), (2, 1), (3, 1)]);
        assert_eq!(k.to_string(), "t+t^2+t^3");
        assert_eq!(UnivariatePoly::from_terms([(0, 2), (4, -1)]).to_string(), "2-t^4");
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(s, r#"{"1":1,"2":1,"3":1}"#);
        assert_eq!(serde_json::from_str::<UnivariatePoly>(&s).unwrap(), k);
        let t = tab(&[&[1, 3], &[2, 4]]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,3],[2,4]]");
    }
}
