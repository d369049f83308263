//! Class functions on `S_n` with exact integer values.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions_of, Partition};

/// A function on the conjugacy classes of `S_n`, keyed by cycle type.
/// Classes without an entry have value 0.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigInt>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn from_fn<F: FnMut(&Partition) -> BigInt>(n: usize, mut f: F) -> Self {
        let mut cf = Self::zero(n);
        for mu in partitions_of(n) {
            let v = f(&mu);
            cf.set(mu, v);
        }
        cf
    }

    /// Values listed in the reverse-lexicographic order of `partitions_of(n)`.
    pub fn from_values(n: usize, values: &[i64]) -> Result<Self> {
        let classes = partitions_of(n);
        if classes.len() != values.len() {
            return Err(Error::InvalidPartition(format!(
                "S_{n} has {} classes, got {} values",
                classes.len(),
                values.len()
            )));
        }
        let mut cf = Self::zero(n);
        for (mu, v) in classes.into_iter().zip(values) {
            cf.set(mu, BigInt::from(*v));
        }
        Ok(cf)
    }

    fn set(&mut self, mu: Partition, v: BigInt) {
        debug_assert_eq!(mu.n(), self.n);
        if v.is_zero() {
            self.values.remove(&mu);
        } else {
            self.values.insert(mu, v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &Partition) -> BigInt {
        self.values.get(cycle_type).cloned().unwrap_or_default()
    }

    /// Value at the identity, the dimension of a represented module.
    pub fn dimension(&self) -> BigInt {
        self.value(&Partition::column(self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `(cycle type, value)` for every class, in reverse-lexicographic order.
    pub fn entries(&self) -> Vec<(Partition, BigInt)> {
        partitions_of(self.n)
            .into_iter()
            .map(|mu| {
                let v = self.value(&mu);
                (mu, v)
            })
            .collect()
    }

    fn check_same_group(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedGroup {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    fn zip_with<F: Fn(&BigInt, &BigInt) -> BigInt>(&self, other: &ClassFunction, f: F) -> ClassFunction {
        ClassFunction::from_fn(self.n, |mu| f(&self.value(mu), &other.value(mu)))
    }

    pub fn checked_add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same_group(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same_group(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Pointwise product, the character of the tensor product.
    pub fn multiply(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same_group(other)?;
        Ok(self.zip_with(other, |a, b| a * b))
    }

    pub fn scale(&self, k: &BigInt) -> ClassFunction {
        let mut out = ClassFunction::zero(self.n);
        if !k.is_zero() {
            for (mu, v) in &self.values {
                out.values.insert(mu.clone(), v * k);
            }
        }
        out
    }

    /// `(1/n!) Σ_μ |C_μ| a(μ) b(μ)`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<BigRational> {
        self.check_same_group(other)?;
        let mut sum = BigInt::zero();
        for (mu, a) in &self.values {
            let b = other.value(mu);
            if !b.is_zero() {
                sum += BigInt::from(mu.class_size()) * a * b;
            }
        }
        Ok(BigRational::new(sum, BigInt::from(factorial(self.n))))
    }

    /// Multiplicities of the irreducible characters, allowing negative ones.
    /// Fails if some inner product is not an integer.
    pub fn decompose_virtual(&self) -> Result<BTreeMap<Partition, BigInt>> {
        let mut out = BTreeMap::new();
        for (lambda, chi) in character_table(self.n) {
            let m = self.inner_product(&chi)?;
            if !m.is_integer() {
                return Err(Error::NotVirtualCharacter {
                    partition: lambda.to_string(),
                    value: m.to_string(),
                });
            }
            let m = m.to_integer();
            if !m.is_zero() {
                out.insert(lambda, m);
            }
        }
        Ok(out)
    }

    /// Multiplicities of the irreducible characters of a genuine character.
    pub fn decompose(&self) -> Result<BTreeMap<Partition, BigInt>> {
        let m = self.decompose_virtual()?;
        if let Some((lambda, v)) = m.iter().find(|(_, v)| v.is_negative()) {
            return Err(Error::NegativeMultiplicity {
                partition: lambda.to_string(),
                value: v.to_string(),
            });
        }
        Ok(m)
    }

    /// `Σ m_λ χ^λ`.
    pub fn from_decomposition(n: usize, multiplicities: &BTreeMap<Partition, BigInt>) -> ClassFunction {
        let mut out = ClassFunction::zero(n);
        for (lambda, m) in multiplicities {
            out = &out + &irreducible_character(lambda).scale(m);
        }
        out
    }

    /// Renders as an integer combination of irreducibles, e.g.
    /// `χ[4]+2χ[3,1]-χ[1,1,1,1]`. Falls back to raw values for class
    /// functions that are not virtual characters.
    pub fn to_chi_string(&self) -> String {
        let Ok(m) = self.decompose_virtual() else {
            return format!("{self}");
        };
        if m.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        // Reverse-lexicographic, matching the character table rows.
        for (k, (lambda, c)) in m.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                s.push(if neg { '-' } else { '+' });
            } else if neg {
                s.push('-');
            }
            let mag = c.abs();
            if !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(&format!("χ[{}]", lambda.to_plain_string()));
        }
        s
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .entries()
            .into_iter()
            .map(|(mu, v)| format!("{mu}: {v}"))
            .collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}{}", self.n, self)
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    /// Panics on mismatched groups; see [`ClassFunction::checked_add`].
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        self.checked_add(rhs).expect("class functions on the same group")
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        self.checked_sub(rhs).expect("class functions on the same group")
    }
}

impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        self.multiply(rhs).expect("class functions on the same group")
    }
}

impl Neg for &ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        self.scale(&BigInt::from(-1))
    }
}

/// Integer that serializes as a JSON number when it fits in `i64` and as a
/// decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(JsonInt(v.into())),
            Raw::Str(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

impl Serialize for ClassFunction {
    /// `{"(3,1)": value, …}` over every class, reverse-lexicographic.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let entries = self.entries();
        let mut map = serializer.serialize_map(Some(entries.len()))?;
        for (mu, v) in entries {
            map.serialize_entry(&mu.to_string(), &JsonInt(v))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, JsonInt>::deserialize(deserializer)?;
        let mut n = None;
        let mut values = BTreeMap::new();
        for (k, v) in raw {
            let mu: Partition = k.parse().map_err(D::Error::custom)?;
            if *n.get_or_insert(mu.n()) != mu.n() {
                return Err(D::Error::custom("cycle types of different sizes"));
            }
            if !v.0.is_zero() {
                values.insert(mu, v.0);
            }
        }
        let n = n.ok_or_else(|| D::Error::custom("empty class function"))?;
        Ok(ClassFunction { n, values })
    }
}

/// Beta-set (first-column hook lengths) of `lambda` padded to `len` entries,
/// in decreasing order.
fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let parts: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(i, b)| b - (len - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beta-set decodes to a partition")
}

/// Murnaghan–Nakayama: `χ^λ` at the class whose cycle lengths are `cycles`.
fn murnaghan_nakayama(
    lambda: &Partition,
    cycles: &[usize],
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    if cycles.is_empty() {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let key = (lambda.clone(), cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let k = cycles[0];
    let beta = beta_set(lambda, lambda.len());
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        // Removing a rim hook of length k moves a bead from b to b - k.
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - k;
        let rest = murnaghan_nakayama(&from_beta_set(next), &cycles[1..], memo);
        if height % 2 == 0 {
            total += rest;
        } else {
            total -= rest;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// The irreducible character `χ^λ` of `S_n`, `n = |λ|`.
pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    let n = lambda.n();
    ClassFunction::from_fn(n, |mu| {
        // The memo is keyed on the number of remaining cycles, so it is only
        // valid for one cycle type at a time.
        let mut memo = HashMap::new();
        murnaghan_nakayama(lambda, mu.parts(), &mut memo)
    })
}

/// `(λ, χ^λ)` for every `λ ⊢ n`, in reverse-lexicographic order.
pub fn character_table(n: usize) -> Vec<(Partition, ClassFunction)> {
    partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let chi = irreducible_character(&lambda);
            (lambda, chi)
        })
        .collect()
}

pub fn trivial_character(n: usize) -> ClassFunction {
    irreducible_character(&Partition::row(n))
}

pub fn sign_character(n: usize) -> ClassFunction {
    ClassFunction::from_fn(n, |mu| BigInt::from(mu.sign()))
}

/// Column order for printed character tables: by number of moved points,
/// ties broken reverse-lexicographically. For `n = 4` this is
/// `1, (1 2), (1 2 3), (1 2 3 4), (1 2)(3 4)`.
pub fn display_class_order(n: usize) -> Vec<Partition> {
    let mut classes = partitions_of(n);
    let moved = |mu: &Partition| mu.parts().iter().filter(|&&p| p > 1).sum::<usize>();
    classes.sort_by(|a, b| moved(a).cmp(&moved(b)).then(b.cmp(a)));
    classes
}
