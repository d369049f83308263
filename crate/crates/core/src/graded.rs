//! Graded characters `Σ_d χ_{V_d} t^d` and the closed formulas for quotients
//! by stable complete intersections.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{irreducible_character, ClassFunction};
use crate::classify::{classify, IrredMultiset, Summand, Verdict};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::tableaux::kostka_foulkes_tilde;

/// Truncation degree used when a quotient is not artinian and no bound is given.
pub const DEFAULT_BOUND: usize = 10;

/// A power series in `t` with class-function coefficients.
///
/// Exact series are polynomials and are stored trimmed, with `bound` equal to
/// the top degree (0 for the zero series). Truncated series know their
/// coefficients in degrees `0..=bound` and nothing beyond.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedCharacter {
    n: usize,
    coeffs: Vec<ClassFunction>,
    bound: usize,
    exact: bool,
}

impl GradedCharacter {
    /// A polynomial. Trailing zero coefficients are dropped.
    pub fn exact(n: usize, mut coeffs: Vec<ClassFunction>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let bound = coeffs.len().saturating_sub(1);
        GradedCharacter {
            n,
            coeffs,
            bound,
            exact: true,
        }
    }

    /// A series known through degree `bound`; extra coefficients are dropped
    /// and missing ones read as zero.
    pub fn truncated(n: usize, mut coeffs: Vec<ClassFunction>, bound: usize) -> Self {
        coeffs.resize(bound + 1, ClassFunction::zero(n));
        GradedCharacter {
            n,
            coeffs,
            bound,
            exact: false,
        }
    }

    /// `χ t^degree`.
    pub fn monomial(chi: ClassFunction, degree: usize) -> Self {
        let n = chi.n();
        let mut coeffs = vec![ClassFunction::zero(n); degree];
        coeffs.push(chi);
        Self::exact(n, coeffs)
    }

    /// A scalar polynomial `Σ a_d t^d` times the trivial character.
    pub fn scalar(n: usize, poly: &[BigInt]) -> Self {
        let triv = irreducible_character(&Partition::row(n));
        Self::exact(n, poly.iter().map(|a| triv.scale(a)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Stored coefficients, degree 0 first.
    pub fn coeffs(&self) -> &[ClassFunction] {
        &self.coeffs
    }

    /// Top degree of a nonzero polynomial.
    pub fn top_degree(&self) -> Option<usize> {
        if self.exact && !self.coeffs.is_empty() {
            Some(self.coeffs.len() - 1)
        } else {
            None
        }
    }

    pub fn coefficient(&self, degree: usize) -> Result<ClassFunction> {
        if let Some(c) = self.coeffs.get(degree) {
            Ok(c.clone())
        } else if self.exact {
            Ok(ClassFunction::zero(self.n))
        } else {
            Err(Error::BeyondBound {
                degree,
                bound: self.bound,
            })
        }
    }

    /// Forgets everything above `bound`. A polynomial that already fits stays
    /// exact.
    pub fn truncate(&self, bound: usize) -> Self {
        if self.exact && self.coeffs.len() <= bound + 1 {
            return self.clone();
        }
        let keep = self.coeffs.iter().take(bound + 1).cloned().collect();
        let bound = if self.exact { bound } else { bound.min(self.bound) };
        Self::truncated(self.n, keep, bound)
    }

    fn check_same_group(&self, other: &GradedCharacter) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedGroup {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Bound of a combination: exact only if both inputs are, otherwise the
    /// smallest truncation among the non-exact inputs.
    fn combined_bound(&self, other: &GradedCharacter) -> Option<usize> {
        match (self.exact, other.exact) {
            (true, true) => None,
            (true, false) => Some(other.bound),
            (false, true) => Some(self.bound),
            (false, false) => Some(self.bound.min(other.bound)),
        }
    }

    fn build(&self, coeffs: Vec<ClassFunction>, bound: Option<usize>) -> Self {
        match bound {
            None => Self::exact(self.n, coeffs),
            Some(b) => Self::truncated(self.n, coeffs, b),
        }
    }

    pub fn add(&self, other: &GradedCharacter) -> Result<Self> {
        self.check_same_group(other)?;
        let bound = self.combined_bound(other);
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = ClassFunction::zero(self.n);
        let coeffs = (0..len)
            .map(|d| {
                let a = self.coeffs.get(d).unwrap_or(&zero);
                let b = other.coeffs.get(d).unwrap_or(&zero);
                a + b
            })
            .collect();
        Ok(self.build(coeffs, bound))
    }

    pub fn neg(&self) -> Self {
        GradedCharacter {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &GradedCharacter) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product of series: convolution in `t`, pointwise product of class
    /// functions.
    pub fn multiply(&self, other: &GradedCharacter) -> Result<Self> {
        self.check_same_group(other)?;
        let bound = self.combined_bound(other);
        let top = self.coeffs.len() + other.coeffs.len();
        let len = match bound {
            None => top.saturating_sub(1),
            Some(b) => (b + 1).min(top.saturating_sub(1)),
        };
        let mut coeffs = vec![ClassFunction::zero(self.n); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(self.build(coeffs, bound))
    }

    /// Multiplies by a scalar polynomial `Σ p_k t^k`, keeping the bound.
    pub fn mul_scalar_poly(&self, p: &[BigInt]) -> Self {
        let len = if self.exact {
            (self.coeffs.len() + p.len()).saturating_sub(1)
        } else {
            self.bound + 1
        };
        let mut coeffs = vec![ClassFunction::zero(self.n); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (k, pk) in p.iter().enumerate() {
                if i + k < len && !pk.is_zero() {
                    coeffs[i + k] = &coeffs[i + k] + &a.scale(pk);
                }
            }
        }
        self.build(coeffs, (!self.exact).then_some(self.bound))
    }

    /// Multiplies by the power series `1/Σ p_k t^k` (needs `p_0 = 1`) and
    /// truncates at `bound`.
    pub fn div_scalar_series(&self, p: &[BigInt], bound: usize) -> Self {
        assert!(p.first().is_some_and(|c| c.is_one()), "constant term must be 1");
        let bound = if self.exact { bound } else { bound.min(self.bound) };
        let zero = ClassFunction::zero(self.n);
        let mut q: Vec<ClassFunction> = Vec::with_capacity(bound + 1);
        for d in 0..=bound {
            let mut c = self.coeffs.get(d).unwrap_or(&zero).clone();
            for (k, pk) in p.iter().enumerate().skip(1).take(d) {
                if !pk.is_zero() {
                    c = &c - &q[d - k].scale(pk);
                }
            }
            q.push(c);
        }
        Self::truncated(self.n, q, bound)
    }

    /// Exact division of a polynomial by a scalar polynomial with constant
    /// term 1. Returns `None` when the quotient is not a polynomial.
    pub fn exact_div_scalar_poly(&self, p: &[BigInt]) -> Option<Self> {
        if !self.exact {
            return None;
        }
        if self.coeffs.is_empty() {
            return Some(self.clone());
        }
        let deg_p = p.len() - 1;
        let deg_self = self.coeffs.len() - 1;
        if deg_self < deg_p {
            return None;
        }
        let q = self.div_scalar_series(p, deg_self - deg_p);
        let q = GradedCharacter::exact(self.n, q.coeffs);
        (q.mul_scalar_poly(p) == *self).then_some(q)
    }

    /// Multiplies by `1 − t^c`.
    pub fn scale_by_cyclotomic(&self, c: usize) -> Self {
        self.mul_scalar_poly(&one_minus_t_pow(c))
    }

    /// Renders in the `χ[4] + (χ[4]+χ[3,1])·t + …` notation.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut body = c.to_chi_string();
            let negative = body.starts_with('-');
            let several = body.chars().skip(1).any(|ch| ch == '+' || ch == '-');
            if several {
                body = format!("({body})");
            } else if negative && !out.is_empty() {
                body = body[1..].to_string();
            }
            if !out.is_empty() {
                out.push_str(if negative && !several { " - " } else { " + " });
            }
            out.push_str(&body);
            match d {
                0 => {}
                1 => out.push_str("·t"),
                _ => out.push_str(&format!("·t^{d}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        if !self.exact {
            out.push_str(&format!(" + O(t^{})", self.bound + 1));
        }
        out
    }
}

impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[derive(Serialize, Deserialize)]
struct GradedCharacterJson {
    n: usize,
    bound: usize,
    exact: bool,
    coeffs: Vec<ClassFunction>,
}

impl Serialize for GradedCharacter {
    /// `{n, bound, exact, coeffs: [{cycle_type: value}, …]}` with one entry per
    /// degree `0..=bound`.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(ClassFunction::zero(self.n));
        }
        GradedCharacterJson {
            n: self.n,
            bound: self.bound,
            exact: self.exact,
            coeffs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = GradedCharacterJson::deserialize(deserializer)?;
        if raw.coeffs.iter().any(|c| c.n() != raw.n) {
            return Err(D::Error::custom("coefficient on the wrong group"));
        }
        Ok(if raw.exact {
            GradedCharacter::exact(raw.n, raw.coeffs)
        } else {
            GradedCharacter::truncated(raw.n, raw.coeffs, raw.bound)
        })
    }
}

fn one_minus_t_pow(c: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); c + 1];
    p[0] = BigInt::one();
    p[c] -= 1;
    p
}

fn scalar_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `Π_{j=1}^n (1 − t^j)`.
fn invariant_denominator(n: usize) -> Vec<BigInt> {
    (1..=n).fold(vec![BigInt::one()], |acc, j| scalar_poly_mul(&acc, &one_minus_t_pow(j)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Case {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
            Case::IV => "IV",
        })
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" => Ok(Case::I),
            "II" => Ok(Case::II),
            "III" => Ok(Case::III),
            "IV" => Ok(Case::IV),
            other => Err(Error::InvalidRepresentationType(format!("unknown case {other:?}"))),
        }
    }
}

/// Isomorphism type of `I/mI`: the case, the degree `d` of the non-trivial
/// summand (absent in case I) and the degrees `c` of the trivial summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationType {
    pub case: Case,
    pub d: Option<usize>,
    pub c: Vec<usize>,
}

impl RepresentationType {
    /// `c` is stored sorted.
    pub fn new(case: Case, d: Option<usize>, mut c: Vec<usize>) -> Self {
        c.sort_unstable();
        RepresentationType { case, d, c }
    }

    /// The non-trivial irreducible for this case in `S_n`.
    fn special_partition(&self, n: usize) -> Result<Option<Partition>> {
        Ok(match self.case {
            Case::I => None,
            Case::II => Some(Partition::column(n)),
            Case::III if n >= 2 => Some(Partition::hook(n - 1, 1)),
            Case::IV if n == 4 => Some(Partition::new(vec![2, 2])?),
            Case::III => {
                return Err(Error::InvalidRepresentationType("case III needs n ≥ 2".into()));
            }
            Case::IV => {
                return Err(Error::InvalidRepresentationType(format!("case IV needs n = 4, got n = {n}")));
            }
        })
    }

    /// The summands of `I/mI` in `S_n`.
    pub fn to_multiset(&self, n: usize) -> Result<IrredMultiset> {
        if n == 0 {
            return Err(Error::InvalidRepresentationType("n must be at least 1".into()));
        }
        let mut summands = Vec::new();
        match (self.special_partition(n)?, self.d) {
            (None, None) => {}
            (None, Some(_)) => {
                return Err(Error::InvalidRepresentationType("case I takes no d".into()));
            }
            (Some(_), None) => {
                return Err(Error::InvalidRepresentationType(format!("case {} needs d", self.case)));
            }
            (Some(lambda), Some(d)) => summands.push(Summand::new(lambda, d)),
        }
        summands.extend(self.c.iter().map(|&c| Summand::new(Partition::row(n), c)));
        Ok(IrredMultiset::new(n, summands))
    }

    /// Runs the classifier and checks that it lands on this same type.
    pub fn validate(&self, n: usize) -> Result<()> {
        let ms = self.to_multiset(n)?;
        match classify(&ms)? {
            Verdict::Rejected(r) => Err(Error::Rejected(r)),
            Verdict::Accepted(c) if c.representation_type == *self => Ok(()),
            Verdict::Accepted(c) => Err(Error::InvalidRepresentationType(format!(
                "{self} classifies as {} for n = {n}",
                c.representation_type
            ))),
        }
    }

    /// Number of generators, i.e. the dimension of `I/mI`.
    pub fn generator_count(&self, n: usize) -> usize {
        let special = match self.case {
            Case::I => 0,
            Case::II => 1,
            Case::III => n.saturating_sub(1),
            Case::IV => 2,
        };
        special + self.c.len()
    }
}

impl fmt::Display for RepresentationType {
    /// `case IV d=2 c=2,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.case)?;
        if let Some(d) = self.d {
            write!(f, " d={d}")?;
        }
        let c: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        write!(f, " c={}", c.join(","))
    }
}

impl FromStr for RepresentationType {
    type Err = Error;

    /// Accepts `case IV d=2 c=2,3`, with `case` optional and fields in any
    /// order. `c=` may be empty or omitted.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidRepresentationType(m);
        let mut tokens = s.split_whitespace().peekable();
        if tokens.peek() == Some(&"case") {
            tokens.next();
        }
        let case: Case = tokens.next().ok_or_else(|| bad("empty".into()))?.parse()?;
        let mut d = None;
        let mut c = Vec::new();
        for tok in tokens {
            let (key, value) = tok.split_once('=').ok_or_else(|| bad(format!("expected key=value, got {tok:?}")))?;
            let num = |v: &str| v.trim().parse::<usize>().map_err(|_| bad(format!("not a degree: {v:?}")));
            match key {
                "d" => d = Some(num(value)?),
                "c" => {
                    c = value
                        .split(',')
                        .filter(|v| !v.is_empty())
                        .map(num)
                        .collect::<Result<Vec<_>>>()?
                }
                other => return Err(bad(format!("unknown field {other:?}"))),
            }
        }
        if d == Some(0) || c.contains(&0) {
            return Err(bad("degrees must be positive".into()));
        }
        Ok(RepresentationType::new(case, d, c))
    }
}

/// `χ_{R_{S_n}} = Σ_λ χ^λ K̃_{λ,(1^n)}(t)`, a polynomial of degree `n(n−1)/2`.
pub fn coinvariant_character(n: usize) -> GradedCharacter {
    let column = Partition::column(n);
    let top = n * n.saturating_sub(1) / 2;
    let mut coeffs = vec![ClassFunction::zero(n); top + 1];
    for lambda in partitions_of(n) {
        let chi = irreducible_character(&lambda);
        for (d, a) in kostka_foulkes_tilde(&lambda, &column).terms() {
            coeffs[d] = &coeffs[d] + &chi.scale(a);
        }
    }
    GradedCharacter::exact(n, coeffs)
}

/// `χ_R = χ_{R_{S_n}} / Π_{j=1}^n (1 − t^j)` through degree `bound`.
pub fn polynomial_ring_character(n: usize, bound: usize) -> GradedCharacter {
    coinvariant_character(n).div_scalar_series(&invariant_denominator(n), bound)
}

/// The alternating sum of exterior powers of `I/mI`'s non-trivial part:
/// `1` (I), `χ^{(n)} − χ^{(1^n)} t^d` (II),
/// `Σ_{u=0}^{n−1} (−1)^u χ^{(n−u,1^u)} t^{du}` (III),
/// `χ^{(4)} − χ^{(2,2)} t^d + χ^{(1^4)} t^{2d}` (IV).
pub fn koszul_factor(rt: &RepresentationType, n: usize) -> Result<GradedCharacter> {
    let d = || rt.d.ok_or_else(|| Error::InvalidRepresentationType(format!("case {} needs d", rt.case)));
    let chi = |parts: Vec<usize>| -> Result<ClassFunction> { Ok(irreducible_character(&Partition::new(parts)?)) };
    let mono = |c: ClassFunction, deg: usize| GradedCharacter::monomial(c, deg);
    let triv = irreducible_character(&Partition::row(n));
    let mut terms: Vec<GradedCharacter> = Vec::new();
    match rt.case {
        Case::I => terms.push(mono(triv, 0)),
        Case::II => {
            let d = d()?;
            terms.push(mono(triv, 0));
            terms.push(mono(-&irreducible_character(&Partition::column(n)), d));
        }
        Case::III => {
            let d = d()?;
            for u in 0..n {
                let c = irreducible_character(&Partition::hook(n - u, u));
                let c = if u % 2 == 0 { c } else { -&c };
                terms.push(mono(c, d * u));
            }
        }
        Case::IV => {
            if n != 4 {
                return Err(Error::InvalidRepresentationType(format!("case IV needs n = 4, got n = {n}")));
            }
            let d = d()?;
            terms.push(mono(triv, 0));
            terms.push(mono(-&chi(vec![2, 2])?, d));
            terms.push(mono(chi(vec![1, 1, 1, 1])?, 2 * d));
        }
    }
    terms
        .into_iter()
        .try_fold(GradedCharacter::exact(n, vec![]), |acc, t| acc.add(&t))
}

/// Graded character of `R/I` for a complete intersection `I` with `I/mI` of
/// type `rt`:
/// `χ_R · koszul_factor(rt) · Π_i (1 − t^{c_i})`.
///
/// The numerator `χ_{R_{S_n}} · koszul_factor · Π(1 − t^{c_i})` is a
/// polynomial; if `Π_{j=1}^n (1 − t^j)` divides it exactly the quotient is
/// artinian and the result is exact with its full top degree. Otherwise the
/// series is returned through `bound` (default [`DEFAULT_BOUND`]).
pub fn quotient_character(rt: &RepresentationType, n: usize, bound: Option<usize>) -> Result<GradedCharacter> {
    rt.validate(n)?;
    let mut numerator = coinvariant_character(n).multiply(&koszul_factor(rt, n)?)?;
    for &c in &rt.c {
        numerator = numerator.scale_by_cyclotomic(c);
    }
    let denominator = invariant_denominator(n);
    if let Some(q) = numerator.exact_div_scalar_poly(&denominator) {
        return Ok(q);
    }
    Ok(numerator.div_scalar_series(&denominator, bound.unwrap_or(DEFAULT_BOUND)))
}

/// Dimensions of the graded pieces through the bound (or top degree).
pub fn hilbert_series(g: &GradedCharacter) -> Vec<BigInt> {
    let len = if g.is_exact() { g.coeffs().len() } else { g.bound() + 1 };
    (0..len)
        .map(|d| g.coefficient(d).map(|c| c.dimension()).unwrap_or_default())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub top_degree: usize,
    pub top_is_trivial: bool,
    pub top_is_alternating: bool,
}

/// Looks at the top graded piece of an artinian quotient, which for a
/// complete intersection is the one-dimensional socle.
pub fn socle_analysis(g: &GradedCharacter) -> Result<SocleReport> {
    let top_degree = g.top_degree().ok_or(Error::NotExact)?;
    let top = g.coefficient(top_degree)?;
    let dim = top.dimension();
    if !dim.is_one() {
        return Err(Error::SocleNotOneDimensional(dim.to_string()));
    }
    let n = g.n();
    Ok(SocleReport {
        top_degree,
        top_is_trivial: top == irreducible_character(&Partition::row(n)),
        top_is_alternating: top == irreducible_character(&Partition::column(n)),
    })
}
