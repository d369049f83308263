//! Exact linear algebra over `Q`.
//!
//! [`EchelonBasis`] keeps a subspace of `Q^N` as primitive integer rows in
//! reduced echelon shape: each row has a positive pivot entry and every other
//! row is zero in that pivot column. Rows are reduced fraction-free (cross
//! multiplication followed by content removal), so rational numbers only appear
//! when coordinates are read back out.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse vector as `(column, value)` pairs with strictly increasing columns and
/// no zero values.
pub type SparseRow<T> = Vec<(usize, T)>;

/// Clears denominators of a rational sparse row, returning a primitive integer
/// row (content 1) that spans the same line.
pub fn primitive_from_rational(row: &[(usize, BigRational)]) -> SparseRow<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: SparseRow<BigInt> = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut row: SparseRow<BigInt>) -> SparseRow<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    row
}

fn lookup<T>(row: &[(usize, T)], col: usize) -> Option<&T> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// `a·x − b·y` on sparse integer rows.
fn combine(a: &BigInt, x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)]) -> SparseRow<BigInt> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cy = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (col, val) = if cx < cy {
            i += 1;
            (cx, a * &x[i - 1].1)
        } else if cy < cx {
            j += 1;
            (cy, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (cx, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient: usize,
    rows: Vec<SparseRow<BigInt>>,
    pivots: Vec<usize>,
    row_of_pivot: HashMap<usize, usize>,
}

impl EchelonBasis {
    pub fn new(ambient: usize) -> Self {
        EchelonBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of_pivot: HashMap::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot.contains_key(&col)
    }

    /// The row whose pivot sits in `col`.
    pub fn pivot_row(&self, col: usize) -> Option<&SparseRow<BigInt>> {
        self.row_of_pivot.get(&col).map(|&r| &self.rows[r])
    }

    /// Columns that carry no pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.is_pivot(*c)).collect()
    }

    /// Eliminates every pivot column from `v`. The result is a nonzero scalar
    /// multiple of the true remainder, made primitive.
    fn reduce_scaled(&self, mut v: SparseRow<BigInt>) -> SparseRow<BigInt> {
        let hits: Vec<usize> = v
            .iter()
            .filter_map(|(c, _)| self.row_of_pivot.get(c).copied())
            .collect();
        for r in hits {
            let row = &self.rows[r];
            let p = self.pivots[r];
            let Some(b) = lookup(&v, p).cloned() else {
                continue;
            };
            let a = &row[0].1;
            let g = a.gcd(&b);
            v = combine(&(a / &g), &v, &(&b / &g), row);
            v = make_primitive(v);
        }
        v
    }

    /// Adds a rational vector to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, BigRational)]) -> bool {
        self.insert_int(primitive_from_rational(v))
    }

    pub fn insert_int(&mut self, v: SparseRow<BigInt>) -> bool {
        let mut w = self.reduce_scaled(make_primitive(v));
        let Some((q, negative)) = w.first().map(|(c, x)| (*c, x.is_negative())) else {
            return false;
        };
        if negative {
            for (_, x) in w.iter_mut() {
                *x = -x.clone();
            }
        }
        let a = w[0].1.clone();
        for row in self.rows.iter_mut() {
            if let Some(b) = lookup(row, q).cloned() {
                let g = a.gcd(&b);
                *row = make_primitive(combine(&(&a / &g), row, &(&b / &g), &w));
            }
        }
        self.row_of_pivot.insert(q, self.rows.len());
        self.pivots.push(q);
        self.rows.push(w);
        true
    }

    pub fn contains(&self, v: &[(usize, BigRational)]) -> bool {
        self.reduce_scaled(primitive_from_rational(v)).is_empty()
    }

    /// Coordinates of `v` against the stored rows, assuming `v` lies in the span.
    pub fn coordinates(&self, v: &[(usize, BigRational)]) -> Vec<BigRational> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &p)| match lookup(v, p) {
                Some(x) => x / BigRational::from_integer(row[0].1.clone()),
                None => BigRational::zero(),
            })
            .collect()
    }

    /// The stored rows rescaled to have pivot entry 1.
    pub fn normalized_rows(&self) -> Vec<SparseRow<BigRational>> {
        self.rows
            .iter()
            .map(|row| {
                let a = BigRational::from_integer(row[0].1.clone());
                row.iter()
                    .map(|(c, x)| (*c, BigRational::from_integer(x.clone()) / &a))
                    .collect()
            })
            .collect()
    }
}

/// Determinant of a square dense rational matrix by Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Solves `Σ x_j columns[j] = target` for linearly independent `columns`.
/// Returns `None` when `target` is outside their span.
pub fn solve_in_span(columns: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = columns.len();
    let rows = target.len();
    // Augmented matrix, one row per coordinate.
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(piv, rank);
        let p = m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x /= &p;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=k {
                    let sub = &f * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[r][k].clone();
    }
    Some(x)
}
