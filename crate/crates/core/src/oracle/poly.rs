//! Sparse multivariate polynomials over `Q`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::perm::Permutation;
use crate::tableaux::Tableau;

/// Exponent vector of a monomial in `x_1..x_n`.
pub type Monomial = Vec<usize>;

/// Graded reverse lexicographic comparison: higher total degree first, then
/// the monomial with the smaller exponent in the last differing variable.
pub fn grevlex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let da: usize = a.iter().sum();
    let db: usize = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// All monomials of degree `d` in `n` variables, largest first in grevlex.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(n: usize, d: usize, prefix: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=d {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out.sort_by(|a, b| grevlex_cmp(b, a));
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigRational::one())
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "x{i} is not a variable of a ring in {n} variables");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn monomial(exponents: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    pub fn add_term(&mut self, exponents: Monomial, c: BigRational) {
        debug_assert_eq!(exponents.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[usize]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<usize>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Largest variable index that occurs, 1-based (0 for constants).
    pub fn max_variable(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|e| e.iter().rposition(|&x| x > 0))
            .max()
            .map_or(0, |i| i + 1)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, other.n, "polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, other.n, "polynomials in different rings");
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// `σ·f`, where `σ` sends `x_i` to `x_{σ(i)}`.
    pub fn permute(&self, sigma: &Permutation) -> MultiPoly {
        assert_eq!(sigma.degree(), self.n, "permutation of the wrong degree");
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (permute_monomial(e, sigma), c.clone()))
                .collect(),
        }
    }

    /// `f / (x_i − x_j)` when the division is exact, 1-based indices.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Option<MultiPoly> {
        assert!(i != j && (1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        let (i, j) = (i - 1, j - 1);
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.n);
        // Peel off the term with the largest power of x_i until nothing is left.
        while let Some((e, c)) = rest
            .terms
            .iter()
            .max_by(|a, b| a.0[i].cmp(&b.0[i]).then_with(|| a.0.cmp(b.0)))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if e[i] == 0 {
                return None;
            }
            let mut q = e.clone();
            q[i] -= 1;
            let mut shifted = q.clone();
            shifted[j] += 1;
            quotient.add_term(q, c.clone());
            rest.add_term(e, -c.clone());
            rest.add_term(shifted, c);
        }
        Some(quotient)
    }

    /// Terms as `(monomial, coefficient)` sorted largest first in grevlex.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grevlex_cmp(b.0, a.0));
        v
    }
}

pub fn permute_monomial(e: &[usize], sigma: &Permutation) -> Monomial {
    let mut out = vec![0; e.len()];
    for (i, &k) in e.iter().enumerate() {
        out[sigma.image(i)] = k;
    }
    out
}

fn format_monomial(e: &[usize]) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
        .collect();
    factors.join("*")
}

impl fmt::Display for MultiPoly {
    /// `x1^2*x2 - 3/2*x3 + 1`, terms largest first in grevlex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mono = format_monomial(e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `e_k(x_1..x_n)`.
pub fn elementary_symmetric(k: usize, n: usize) -> MultiPoly {
    assert!(k <= n, "e_{k} in {n} variables");
    let mut p = MultiPoly::zero(n);
    for e in monomials_of_degree(n, k) {
        if e.iter().all(|&x| x <= 1) {
            p.add_term(e, BigRational::one());
        }
    }
    p
}

/// `Π_{i<j} (x_i − x_j)` over the given 1-based variables.
pub fn difference_product(n: usize, vars: &[usize]) -> MultiPoly {
    let mut p = MultiPoly::one(n);
    for (a, &i) in vars.iter().enumerate() {
        for &j in &vars[a + 1..] {
            p = p.mul(&MultiPoly::var(n, i).sub(&MultiPoly::var(n, j)));
        }
    }
    p
}

/// The Vandermonde product `Π_{1≤i<j≤n} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    let vars: Vec<usize> = (1..=n).collect();
    difference_product(n, &vars)
}

/// The Specht polynomial of a standard tableau: the product over columns of
/// the difference products of the column entries, read top to bottom.
pub fn specht_polynomial(t: &Tableau) -> MultiPoly {
    let n = t.size();
    t.columns()
        .iter()
        .fold(MultiPoly::one(n), |acc, col| acc.mul(&difference_product(n, col)))
}

pub fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
