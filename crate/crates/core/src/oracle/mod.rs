//! Brute-force ground truth for graded characters.
//!
//! Everything here works with explicit polynomials. The degree-`d` piece of
//! an ideal is spanned by the products `m·g` of monomials with generators;
//! row reduction over the grevlex monomial basis gives a basis of `I_d`, and
//! the monomials without a pivot (the standard monomials) give a basis of
//! `R_d/I_d`. Permutations act on monomials by permuting them, so the trace
//! of `σ` on the quotient can be read directly from the reduced rows.

pub mod parse;
pub mod poly;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::graded::GradedCharacter;
use crate::linalg::{determinant, EchelonBasis, SparseRow};
use crate::partitions::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::tableaux::Tableau;

pub use parse::{parse_generator_file, parse_polynomial};
pub use poly::{
    elementary_symmetric, monomials_of_degree, permute_monomial, specht_polynomial, vandermonde, Monomial,
    MultiPoly,
};

/// Grevlex monomial basis of `R_d`, with reverse lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, degree: usize) -> Self {
        let monomials = monomials_of_degree(n, degree);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &[usize]) -> usize {
        self.index[m]
    }

    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn coordinates(&self, f: &MultiPoly) -> SparseRow<BigRational> {
        let mut row: SparseRow<BigRational> = f
            .terms()
            .iter()
            .map(|(e, c)| (self.index_of(e), c.clone()))
            .collect();
        row.sort_by_key(|(i, _)| *i);
        row
    }

    pub fn polynomial(&self, n: usize, row: &[(usize, BigInt)]) -> MultiPoly {
        let mut p = MultiPoly::zero(n);
        for (i, c) in row {
            p.add_term(self.monomials[*i].clone(), BigRational::from_integer(c.clone()));
        }
        p
    }
}

/// Homogeneous nonzero generators in `n` variables.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    n: usize,
    gens: Vec<MultiPoly>,
    degrees: Vec<usize>,
    stable: bool,
}

impl GeneratorSet {
    /// Validates the generators and records whether their span is stable
    /// under `S_n`.
    pub fn new(n: usize, gens: Vec<MultiPoly>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(gens.len());
        for (index, g) in gens.iter().enumerate() {
            if g.n() != n {
                return Err(Error::VariableCount {
                    expected: n,
                    found: g.n(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator { index });
            }
            degrees.push(g.homogeneous_degree().ok_or(Error::NonHomogeneous { index })?);
        }
        let mut gs = GeneratorSet {
            n,
            gens,
            degrees,
            stable: false,
        };
        gs.stable = gs.check_stability();
        Ok(gs)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (n, gens) = parse_generator_file(text)?;
        Self::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn is_stable(&self) -> bool {
        self.stable
    }

    /// Closure of each homogeneous piece of the span under adjacent
    /// transpositions, which generate `S_n`.
    fn check_stability(&self) -> bool {
        let mut by_degree: HashMap<usize, Vec<&MultiPoly>> = HashMap::new();
        for (g, &d) in self.gens.iter().zip(&self.degrees) {
            by_degree.entry(d).or_default().push(g);
        }
        by_degree.into_iter().all(|(d, gens)| {
            let basis = MonomialBasis::new(self.n, d);
            let mut span = EchelonBasis::new(basis.len());
            for g in &gens {
                span.insert(&basis.coordinates(g));
            }
            (1..self.n).all(|i| {
                let s = Permutation::transposition(self.n, i, i + 1);
                gens.iter().all(|g| span.contains(&basis.coordinates(&g.permute(&s))))
            })
        })
    }

    fn require_stable(&self) -> Result<()> {
        if self.stable {
            Ok(())
        } else {
            Err(Error::NotStable)
        }
    }
}

/// `g_1 = (x_1−x_2)(x_3−x_4)` and `g_2 = (x_1−x_3)(x_2−x_4)`, the Specht
/// polynomials of the two standard tableaux of shape `(2,2)`.
pub fn specht_square_generators() -> GeneratorSet {
    let shape = Partition::new(vec![2, 2]).expect("valid");
    let mut gens: Vec<MultiPoly> = crate::tableaux::standard_tableaux(&shape)
        .iter()
        .map(specht_polynomial)
        .collect();
    // g_1 comes from [1 3 / 2 4], the second tableau in reading order.
    gens.reverse();
    GeneratorSet::new(4, gens).expect("homogeneous")
}

/// `⟨x_1^d, …, x_n^d⟩` and its subspace `⟨x_i^d − x_{i+1}^d⟩`.
#[derive(Clone, Debug)]
pub struct StandardLift {
    pub full: GeneratorSet,
    pub differences: GeneratorSet,
}

pub fn standard_rep_lift(d: usize, n: usize) -> StandardLift {
    let power = |i: usize| MultiPoly::var(n, i).pow(d as u32);
    let full = (1..=n).map(power).collect();
    let differences = (1..n).map(|i| power(i).sub(&power(i + 1))).collect();
    StandardLift {
        full: GeneratorSet::new(n, full).expect("homogeneous"),
        differences: GeneratorSet::new(n, differences).expect("homogeneous"),
    }
}

/// Reduced echelon basis of `I_d` over the grevlex monomial basis of `R_d`.
#[derive(Clone, Debug)]
pub struct IdealSlice {
    pub basis: MonomialBasis,
    pub echelon: EchelonBasis,
}

impl IdealSlice {
    pub fn dim(&self) -> usize {
        self.echelon.dim()
    }

    /// `dim R_d − dim I_d`.
    pub fn quotient_dim(&self) -> usize {
        self.basis.len() - self.echelon.dim()
    }

    /// Monomials that carry no pivot; their classes form a basis of `R_d/I_d`.
    pub fn standard_monomials(&self) -> Vec<usize> {
        self.echelon.free_columns()
    }

    /// Trace of `σ` on `R_d/I_d`.
    ///
    /// For a standard monomial `m`, `σm` is again a monomial. If it is standard
    /// it contributes `[σm = m]`; otherwise it is a leading monomial and
    /// reduces to `−Σ_c row[c]/a · c` over standard `c`, contributing
    /// `−row[m]/a`.
    pub fn trace(&self, sigma: &Permutation) -> BigRational {
        let mut tr = BigRational::zero();
        for m in self.standard_monomials() {
            let image = self.basis.index_of(&permute_monomial(&self.basis.monomials[m], sigma));
            match self.echelon.pivot_row(image) {
                None => {
                    if image == m {
                        tr += BigRational::one();
                    }
                }
                Some(row) => {
                    if let Ok(k) = row.binary_search_by_key(&m, |(c, _)| *c) {
                        tr -= BigRational::new(row[k].1.clone(), row[0].1.clone());
                    }
                }
            }
        }
        tr
    }
}

pub fn ideal_degree_slice(gs: &GeneratorSet, d: usize) -> IdealSlice {
    let n = gs.n;
    let basis = MonomialBasis::new(n, d);
    let mut echelon = EchelonBasis::new(basis.len());
    for (g, &c) in gs.gens.iter().zip(&gs.degrees) {
        if c > d {
            continue;
        }
        for m in monomials_of_degree(n, d - c) {
            let prod = g.mul(&MultiPoly::monomial(m, BigRational::one()));
            echelon.insert(&basis.coordinates(&prod));
        }
    }
    IdealSlice { basis, echelon }
}

fn integral_trace(tr: BigRational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if tr.is_integer() {
        Ok(tr.to_integer())
    } else {
        Err(Error::NonIntegralTrace(format!("{} = {tr}", what())))
    }
}

/// The character of `S_n` on `R_d/I_d`.
pub fn trace_on_quotient(slice: &IdealSlice, n: usize) -> Result<ClassFunction> {
    let mut values = HashMap::new();
    for mu in partitions_of(n) {
        let tr = slice.trace(&Permutation::from_cycle_type(&mu));
        let v = integral_trace(tr, || format!("trace of {mu} in degree {}", slice.basis.degree))?;
        values.insert(mu, v);
    }
    Ok(ClassFunction::from_fn(n, |mu| values.remove(mu).unwrap_or_default()))
}

/// Graded character of `R/(gs)` through degree `bound`. The result is exact
/// when some graded piece in range vanishes, since every later piece then
/// vanishes too.
pub fn quotient_graded_character(gs: &GeneratorSet, bound: usize) -> Result<GradedCharacter> {
    gs.require_stable()?;
    let mut coeffs = Vec::with_capacity(bound + 1);
    for d in 0..=bound {
        let slice = ideal_degree_slice(gs, d);
        if slice.quotient_dim() == 0 {
            return Ok(GradedCharacter::exact(gs.n, coeffs));
        }
        coeffs.push(trace_on_quotient(&slice, gs.n)?);
    }
    Ok(GradedCharacter::truncated(gs.n, coeffs, bound))
}

/// Echelon basis of the span of homogeneous polynomials of one degree.
pub struct Span {
    pub n: usize,
    pub basis: MonomialBasis,
    pub echelon: EchelonBasis,
}

impl Span {
    pub fn new(polys: &[MultiPoly]) -> Result<Self> {
        let first = polys.first().ok_or(Error::ZeroGenerator { index: 0 })?;
        let n = first.n();
        let d = first.homogeneous_degree().ok_or(Error::NonHomogeneous { index: 0 })?;
        let basis = MonomialBasis::new(n, d);
        let mut echelon = EchelonBasis::new(basis.len());
        for (index, p) in polys.iter().enumerate() {
            if p.homogeneous_degree() != Some(d) {
                return Err(Error::NonHomogeneous { index });
            }
            echelon.insert(&basis.coordinates(p));
        }
        let span = Span { n, basis, echelon };
        let stable = (1..n).all(|i| {
            let s = Permutation::transposition(n, i, i + 1);
            span.basis_polynomials()
                .iter()
                .all(|f| span.echelon.contains(&span.basis.coordinates(&f.permute(&s))))
        });
        if !stable {
            return Err(Error::NotStable);
        }
        Ok(span)
    }

    pub fn dim(&self) -> usize {
        self.echelon.dim()
    }

    /// The echelon rows as polynomials.
    pub fn basis_polynomials(&self) -> Vec<MultiPoly> {
        self.echelon
            .rows()
            .iter()
            .map(|r| self.basis.polynomial(self.n, r))
            .collect()
    }

    /// Matrix of `σ` in the echelon basis: column `i` holds the coordinates
    /// of `σ r_i`.
    pub fn matrix(&self, sigma: &Permutation) -> Vec<Vec<BigRational>> {
        let k = self.dim();
        let mut m = vec![vec![BigRational::zero(); k]; k];
        for (i, f) in self.basis_polynomials().iter().enumerate() {
            let coords = self.echelon.coordinates(&self.basis.coordinates(&f.permute(sigma)));
            for (j, c) in coords.into_iter().enumerate() {
                m[j][i] = c;
            }
        }
        m
    }

    pub fn character(&self) -> Result<ClassFunction> {
        self.exterior_power_character(1)
    }

    /// Character of `⋀^u` of the span: sums of principal `u×u` minors.
    pub fn exterior_power_character(&self, u: usize) -> Result<ClassFunction> {
        let k = self.dim();
        let subsets = subsets_of_size(k, u);
        let mut values = HashMap::new();
        for mu in partitions_of(self.n) {
            let m = self.matrix(&Permutation::from_cycle_type(&mu));
            let mut tr = BigRational::zero();
            for s in &subsets {
                let minor: Vec<Vec<BigRational>> = s.iter().map(|&r| s.iter().map(|&c| m[r][c].clone()).collect()).collect();
                tr += determinant(minor);
            }
            let v = integral_trace(tr, || format!("exterior power {u} at {mu}"))?;
            values.insert(mu, v);
        }
        Ok(ClassFunction::from_fn(self.n, |mu| values[mu].clone()))
    }
}

fn subsets_of_size(k: usize, u: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, u: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == u {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, u, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, u, &mut Vec::new(), &mut out);
    out
}

/// Character of the span of some homogeneous polynomials of one degree.
pub fn span_character(polys: &[MultiPoly]) -> Result<ClassFunction> {
    Span::new(polys)?.character()
}

pub fn exterior_power_character(polys: &[MultiPoly], u: usize) -> Result<ClassFunction> {
    Span::new(polys)?.exterior_power_character(u)
}

/// Outcome of the Hilbert-function test for a regular sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub regular: bool,
    /// `true` when the answer is a proof: either a deficit was found, or the
    /// sequence has `n` elements and matched through the artinian horizon.
    pub conclusive: bool,
    pub horizon: usize,
    /// Coefficients of `Π(1 − t^{c_i}) / (1 − t)^n` for degrees `0..=horizon`.
    pub expected: Vec<i64>,
    pub observed: Vec<i64>,
    pub first_mismatch: Option<usize>,
    pub total_dimension: Option<u64>,
    pub note: String,
}

fn expected_hilbert(n: usize, degrees: &[usize], horizon: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); horizon + 1];
    s[0] = BigInt::one();
    for &c in degrees {
        for d in (c..=horizon).rev() {
            let sub = s[d - c].clone();
            s[d] -= sub;
        }
    }
    for _ in 0..n {
        for d in 1..=horizon {
            let add = s[d - 1].clone();
            s[d] += add;
        }
    }
    s
}

/// Compares the Hilbert function of `R/(gs)` with `Π(1 − t^{c_i})/(1 − t)^n`.
/// A homogeneous sequence is regular exactly when the two agree in every
/// degree; the quotient is never smaller than the expected value.
///
/// With `n` generators the check runs through `Σc − n + 1` and is conclusive.
/// Otherwise it runs through `horizon` (default `Σc`) and a match only means
/// "verified up to that degree".
pub fn is_regular_sequence(gs: &GeneratorSet, horizon: Option<usize>) -> Result<RegularityReport> {
    let n = gs.n;
    let r = gs.gens.len();
    let sum: usize = gs.degrees.iter().sum();
    let to_i64 = |v: &BigInt| i64::try_from(v).unwrap_or(i64::MAX);
    if r > n {
        return Ok(RegularityReport {
            regular: false,
            conclusive: true,
            horizon: 0,
            expected: vec![],
            observed: vec![],
            first_mismatch: None,
            total_dimension: None,
            note: format!("{r} elements cannot form a regular sequence in {n} variables"),
        });
    }
    let artinian = r == n;
    let horizon = if artinian {
        (sum + 1).saturating_sub(n)
    } else {
        horizon.unwrap_or(sum)
    };
    let expected = expected_hilbert(n, &gs.degrees, horizon);
    let mut observed = Vec::with_capacity(horizon + 1);
    let mut first_mismatch = None;
    for (d, exp) in expected.iter().enumerate() {
        let dim = BigInt::from(ideal_degree_slice(gs, d).quotient_dim());
        if first_mismatch.is_none() && dim != *exp {
            first_mismatch = Some(d);
        }
        observed.push(dim);
        if first_mismatch.is_some() {
            break;
        }
    }
    let regular = first_mismatch.is_none();
    let total_dimension = if artinian && regular {
        let total: BigInt = observed.iter().sum();
        let product: BigInt = gs.degrees.iter().map(|&c| BigInt::from(c)).product();
        debug_assert_eq!(total, product);
        u64::try_from(&total).ok()
    } else {
        None
    };
    let note = match (regular, artinian) {
        (false, _) => format!(
            "quotient too large in degree {}: not a regular sequence",
            first_mismatch.expect("mismatch")
        ),
        (true, true) => format!("regular: Hilbert function matches through degree {horizon}"),
        (true, false) => format!("verified up to degree {horizon}"),
    };
    Ok(RegularityReport {
        regular,
        conclusive: !regular || artinian,
        horizon,
        expected: expected.iter().map(to_i64).collect(),
        observed: observed.iter().map(to_i64).collect(),
        first_mismatch,
        total_dimension,
        note,
    })
}

/// Two elements sharing the factor `x_1 − x_2`, the Specht polynomials of
/// `[1 3 / 2 4]` and `[1 4 / 2 / 3]`, completed by `e_1` and `e_2`. A common
/// factor makes the second a zero divisor modulo the first.
pub fn shared_factor_counterexample() -> GeneratorSet {
    let t = |rows: Vec<Vec<usize>>| specht_polynomial(&Tableau::new(rows).expect("valid tableau"));
    let gens = vec![
        t(vec![vec![1, 3], vec![2, 4]]),
        t(vec![vec![1, 4], vec![2], vec![3]]),
        elementary_symmetric(1, 4),
        elementary_symmetric(2, 4),
    ];
    GeneratorSet::new(4, gens).expect("homogeneous")
}
