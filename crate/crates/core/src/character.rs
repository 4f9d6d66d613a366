//! Exact character theory of the symmetric groups `S_m`.
//!
//! Irreducible characters come from the Murnaghan–Nakayama rule; class
//! functions carry exact rational values indexed by cycle type in the order of
//! [`partitions_of`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::{Lazy, OnceCell};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::partition::{class_size, factorial, partitions_of, Partition};

/// Largest `m` for which character tables are built unless a caller passes
/// its own ceiling. `S_9` is needed for the extended action at eight points.
pub const DEFAULT_MAX_DEGREE: usize = 9;

/// Hard limit on the group degree supported by the cached class indices.
const CACHE_SLOTS: usize = 16;

/// Partitions of `m` and their positions.
#[derive(Debug)]
pub struct ClassIndex {
    m: usize,
    partitions: Vec<Partition>,
    position: HashMap<Partition, usize>,
    sizes: Vec<BigInt>,
}

impl ClassIndex {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.position.get(lambda).copied()
    }

    pub fn class_sizes(&self) -> &[BigInt] {
        &self.sizes
    }
}

static CLASS_INDICES: Lazy<Vec<OnceCell<Arc<ClassIndex>>>> =
    Lazy::new(|| (0..CACHE_SLOTS).map(|_| OnceCell::new()).collect());

/// Shared, lazily built index of the conjugacy classes of `S_m`.
pub fn classes(m: usize) -> Result<Arc<ClassIndex>> {
    if m == 0 {
        return domain("S_0 has no class index");
    }
    if m >= CACHE_SLOTS {
        return Err(Error::ResourceGuard {
            what: "m",
            value: m,
            max: CACHE_SLOTS - 1,
        });
    }
    CLASS_INDICES[m]
        .get_or_try_init(|| {
            let partitions = partitions_of(m)?;
            let position = partitions
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect();
            let sizes = partitions.iter().map(class_size).collect();
            Ok(Arc::new(ClassIndex {
                m,
                partitions,
                position,
                sizes,
            }))
        })
        .cloned()
}

/// The irreducible characters of `S_m`; rows and columns both follow the
/// order of [`partitions_of`].
#[derive(Debug)]
pub struct CharacterTable {
    classes: Arc<ClassIndex>,
    rows: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn m(&self) -> usize {
        self.classes.m
    }

    pub fn classes(&self) -> &Arc<ClassIndex> {
        &self.classes
    }

    /// `χ^λ(μ)`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        let r = self.classes.position(lambda)?;
        let c = self.classes.position(mu)?;
        Some(&self.rows[r][c])
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[BigInt]> {
        self.classes
            .position(lambda)
            .map(|r| self.rows[r].as_slice())
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `χ^λ` as a class function.
    pub fn irreducible(&self, lambda: &Partition) -> Result<ClassFunction> {
        let row = self
            .row(lambda)
            .ok_or_else(|| Error::Domain(format!("{lambda} is not a partition of {}", self.m())))?;
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: row
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        })
    }
}

static TABLES: Lazy<Vec<OnceCell<Arc<CharacterTable>>>> =
    Lazy::new(|| (0..CACHE_SLOTS).map(|_| OnceCell::new()).collect());

/// Character table of `S_m` with the default ceiling [`DEFAULT_MAX_DEGREE`].
pub fn character_table(m: usize) -> Result<Arc<CharacterTable>> {
    character_table_with_max(m, DEFAULT_MAX_DEGREE)
}

pub fn character_table_with_max(m: usize, max: usize) -> Result<Arc<CharacterTable>> {
    if m == 0 {
        return domain("character_table requires m >= 1");
    }
    if m > max || m >= CACHE_SLOTS {
        return Err(Error::ResourceGuard {
            what: "m",
            value: m,
            max: max.min(CACHE_SLOTS - 1),
        });
    }
    TABLES[m]
        .get_or_try_init(|| {
            let classes = classes(m)?;
            let mut memo = HashMap::new();
            let rows = classes
                .partitions()
                .iter()
                .map(|lambda| {
                    classes
                        .partitions()
                        .iter()
                        .map(|mu| murnaghan_nakayama(lambda.parts(), mu.parts(), &mut memo))
                        .collect()
                })
                .collect();
            Ok(Arc::new(CharacterTable { classes, rows }))
        })
        .cloned()
}

/// Installs a table computed elsewhere (for example loaded from a cache
/// file). Returns false if a table for `m` was already published.
pub fn install_character_table(m: usize, rows: Vec<Vec<BigInt>>) -> Result<bool> {
    let classes = classes(m)?;
    if rows.len() != classes.len() || rows.iter().any(|r| r.len() != classes.len()) {
        return domain(format!("table for S_{m} has the wrong shape"));
    }
    Ok(TABLES[m]
        .set(Arc::new(CharacterTable { classes, rows }))
        .is_ok())
}

type MnKey = (Vec<usize>, Vec<usize>);

/// `χ^λ(μ)` by removing border strips of length `μ[0]` from `λ`.
///
/// Border strips are handled on the beta-set of `λ`: removing a strip of
/// length `r` moves one bead from `b` to the free position `b - r`, with sign
/// `(-1)^{beads strictly between}`.
fn murnaghan_nakayama(lambda: &[usize], mu: &[usize], memo: &mut HashMap<MnKey, BigInt>) -> BigInt {
    if mu.is_empty() {
        return if lambda.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = mu[0];
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let l = nb.len();
        let mut parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (l - 1 - j))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let sub = murnaghan_nakayama(&parts, &mu[1..], memo);
        if between % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// An exact rational class function on `S_m`.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    classes: Arc<ClassIndex>,
    values: Vec<BigRational>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.classes.m == other.classes.m && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    pub fn zero(m: usize) -> Result<Self> {
        let classes = classes(m)?;
        let values = vec![BigRational::zero(); classes.len()];
        Ok(ClassFunction { classes, values })
    }

    /// Values listed in the order of [`partitions_of`].
    pub fn from_values(m: usize, values: Vec<BigRational>) -> Result<Self> {
        let classes = classes(m)?;
        if values.len() != classes.len() {
            return domain(format!(
                "S_{m} has {} classes but {} values were given",
                classes.len(),
                values.len()
            ));
        }
        Ok(ClassFunction { classes, values })
    }

    pub fn from_integers<I: Into<BigInt>>(m: usize, values: Vec<I>) -> Result<Self> {
        Self::from_values(
            m,
            values
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn from_fn(m: usize, mut f: impl FnMut(&Partition) -> BigRational) -> Result<Self> {
        let classes = classes(m)?;
        let values = classes.partitions().iter().map(&mut f).collect();
        Ok(ClassFunction { classes, values })
    }

    pub fn m(&self) -> usize {
        self.classes.m
    }

    pub fn class_index(&self) -> &Arc<ClassIndex> {
        &self.classes
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, mu: &Partition) -> Option<&BigRational> {
        self.classes.position(mu).map(|i| &self.values[i])
    }

    /// Value at the identity class, i.e. the degree of a character.
    pub fn dimension(&self) -> &BigRational {
        self.values.last().expect("S_m has at least one class")
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.m() != other.m() {
            return domain(format!(
                "class functions on S_{} and S_{} cannot be combined",
                self.m(),
                other.m()
            ));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product: the character of the tensor product.
    pub fn tensor(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// `(1/m!) Σ_μ |C_μ| f(μ) g(μ)`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<BigRational> {
        self.check_same(other)?;
        let mut sum = BigRational::zero();
        for ((a, b), size) in self
            .values
            .iter()
            .zip(&other.values)
            .zip(self.classes.class_sizes())
        {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            sum += a * b * BigRational::from_integer(size.clone());
        }
        Ok(sum / BigRational::from_integer(factorial(self.m())))
    }

    /// `⟨f, χ^λ⟩` for every `λ`, including zeros.
    pub fn multiplicities(&self) -> Result<Vec<(Partition, BigRational)>> {
        let table = character_table_with_max(self.m(), CACHE_SLOTS - 1)?;
        table
            .classes
            .partitions()
            .iter()
            .map(|lambda| {
                let chi = table.irreducible(lambda)?;
                Ok((lambda.clone(), self.inner_product(&chi)?))
            })
            .collect()
    }

    /// Decomposes a genuine character into irreducibles. Fails with
    /// [`Error::NotGenuine`] on the first non-integral or negative multiplicity.
    pub fn decompose(&self) -> Result<Decomposition> {
        let mut terms = Vec::new();
        for (lambda, mult) in self.multiplicities()? {
            if !mult.is_integer() || mult.is_negative() {
                return Err(Error::NotGenuine {
                    partition: lambda,
                    multiplicity: mult.to_string(),
                });
            }
            if !mult.is_zero() {
                terms.push((lambda, mult.to_integer()));
            }
        }
        Ok(Decomposition { m: self.m(), terms })
    }

    /// Restriction to the stabilizer `S_{m-1}` of one point.
    pub fn restrict(&self) -> Result<ClassFunction> {
        let m = self.m();
        if m < 2 {
            return domain("cannot restrict a class function on S_1");
        }
        ClassFunction::from_fn(m - 1, |mu| {
            self.value(&mu.with_fixed_point())
                .expect("appending a fixed point gives a partition of m")
                .clone()
        })
    }

    /// Induction from the stabilizer `S_m` of one point to `S_{m+1}`:
    /// `Ind f(μ) = m_1(μ) · f(μ minus one fixed point)`.
    pub fn induce(&self) -> Result<ClassFunction> {
        let m = self.m();
        ClassFunction::from_fn(m + 1, |mu| {
            let fixed = mu.multiplicity(1);
            if fixed == 0 {
                return BigRational::zero();
            }
            let mut parts = mu.parts().to_vec();
            parts.pop();
            let smaller = Partition::new(parts).expect("dropping a trailing 1 keeps a partition");
            self.value(&smaller).expect("partition of m").clone()
                * BigRational::from_integer(BigInt::from(fixed))
        })
    }

    /// Value at the identity as an integer, if integral.
    pub fn dimension_integer(&self) -> Option<BigInt> {
        let d = self.dimension();
        d.is_integer().then(|| d.to_integer())
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;

    fn add(self, rhs: Self) -> ClassFunction {
        self.try_add(rhs)
            .expect("class functions on the same group")
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;

    fn sub(self, rhs: Self) -> ClassFunction {
        self.try_sub(rhs)
            .expect("class functions on the same group")
    }
}

impl Mul for &ClassFunction {
    type Output = ClassFunction;

    fn mul(self, rhs: Self) -> ClassFunction {
        self.tensor(rhs).expect("class functions on the same group")
    }
}

impl Neg for &ClassFunction {
    type Output = ClassFunction;

    fn neg(self) -> ClassFunction {
        self.scale(&-BigRational::one())
    }
}

/// A genuine character written as `Σ m_λ V_λ`; zero multiplicities omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub m: usize,
    pub terms: Vec<(Partition, BigInt)>,
}

impl Decomposition {
    pub fn from_terms<I>(m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let idx = classes(m)?;
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (lambda, mult) in terms {
            let pos = idx
                .position(&lambda)
                .ok_or_else(|| Error::Domain(format!("{lambda} is not a partition of {m}")))?;
            *acc.entry(pos).or_default() += mult;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(pos, v)| (idx.partitions()[pos].clone(), v))
            .collect();
        Ok(Decomposition { m, terms })
    }

    /// Parses `"(4) + 2(3,1) + (2,2)"`; `"0"` is the zero character.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Self::from_terms(m, std::iter::empty());
        }
        let mut terms = Vec::new();
        for raw in s.split('+') {
            let raw = raw.trim();
            let open = raw
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected a partition in {raw:?}")))?;
            let mult: i64 = match raw[..open].trim() {
                "" => 1,
                c => c
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad multiplicity in {raw:?}")))?,
            };
            let lambda: Partition = raw[open..].parse()?;
            terms.push((lambda, mult));
        }
        Self::from_terms(m, terms)
    }

    pub fn multiplicity(&self, lambda: &Partition) -> BigInt {
        self.terms
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ m_λ χ^λ`.
    pub fn character(&self) -> Result<ClassFunction> {
        let table = character_table_with_max(self.m, CACHE_SLOTS - 1)?;
        let mut f = ClassFunction::zero(self.m)?;
        for (lambda, mult) in &self.terms {
            let chi = table.irreducible(lambda)?;
            f = &f + &chi.scale(&BigRational::from_integer(mult.clone()));
        }
        Ok(f)
    }

    pub fn dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(l, v)| crate::partition::irreducible_dimension(l) * v)
            .sum()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, mult)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if mult.is_one() {
                write!(f, "{lambda}")?;
            } else {
                write!(f, "{mult}{lambda}")?;
            }
        }
        Ok(())
    }
}

/// `Ind_{S_2}^{S_m} 1` for `S_2` generated by one transposition.
pub fn induce_trivial_from_transposition(m: usize) -> Result<ClassFunction> {
    if m < 2 {
        return domain("Ind_{S_2}^{S_m} needs m >= 2");
    }
    // Ind_H^G φ(μ) = z_μ / |H| · Σ_{h ∈ H of type μ} φ(h)
    let identity = Partition::column(m);
    let mut transposition = vec![2];
    transposition.extend(std::iter::repeat_n(1, m - 2));
    let transposition = Partition::new(transposition)?;
    ClassFunction::from_fn(m, |mu| {
        if *mu == identity || *mu == transposition {
            BigRational::new(mu.centralizer_order(), BigInt::from(2))
        } else {
            BigRational::zero()
        }
    })
}

/// Named characters used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedCharacter {
    Trivial,
    Sign,
    Standard,
    Regular,
}

impl std::str::FromStr for NamedCharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Self::Trivial),
            "sign" => Ok(Self::Sign),
            "standard" => Ok(Self::Standard),
            "regular" => Ok(Self::Regular),
            other => domain(format!("unknown named character {other:?}")),
        }
    }
}

pub fn named_character(m: usize, name: NamedCharacter) -> Result<ClassFunction> {
    match name {
        NamedCharacter::Trivial => ClassFunction::from_fn(m, |_| BigRational::one()),
        NamedCharacter::Sign => ClassFunction::from_fn(m, |mu| {
            if (m - mu.len()).is_multiple_of(2) {
                BigRational::one()
            } else {
                -BigRational::one()
            }
        }),
        NamedCharacter::Standard => {
            if m < 2 {
                return domain("the standard representation needs m >= 2");
            }
            ClassFunction::from_fn(m, |mu| {
                BigRational::from_integer(BigInt::from(mu.multiplicity(1) as i64 - 1))
            })
        }
        NamedCharacter::Regular => {
            let identity = Partition::column(m);
            ClassFunction::from_fn(m, |mu| {
                if *mu == identity {
                    BigRational::from_integer(factorial(m))
                } else {
                    BigRational::zero()
                }
            })
        }
    }
}

pub fn trivial(m: usize) -> Result<ClassFunction> {
    named_character(m, NamedCharacter::Trivial)
}

pub fn sign(m: usize) -> Result<ClassFunction> {
    named_character(m, NamedCharacter::Sign)
}

pub fn standard(m: usize) -> Result<ClassFunction> {
    named_character(m, NamedCharacter::Standard)
}

pub fn regular(m: usize) -> Result<ClassFunction> {
    named_character(m, NamedCharacter::Regular)
}

/// `χ^λ` for the partition `λ`, using its size as `m`.
pub fn irreducible(lambda: &Partition) -> Result<ClassFunction> {
    character_table_with_max(lambda.size(), CACHE_SLOTS - 1)?.irreducible(lambda)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxDirection {
    Add,
    Remove,
}

/// Partitions obtained from `λ` by adding or removing one box.
pub fn branching_boxes(lambda: &Partition, direction: BoxDirection) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    match direction {
        BoxDirection::Add => {
            for i in 0..=parts.len() {
                let row = parts.get(i).copied().unwrap_or(0);
                if i == 0 || parts[i - 1] > row {
                    let mut np = parts.to_vec();
                    if i == parts.len() {
                        np.push(1);
                    } else {
                        np[i] += 1;
                    }
                    out.push(Partition::new_unchecked(np));
                }
            }
        }
        BoxDirection::Remove => {
            for i in 0..parts.len() {
                let next = parts.get(i + 1).copied().unwrap_or(0);
                if parts[i] > next {
                    let mut np = parts.to_vec();
                    np[i] -= 1;
                    if np[i] == 0 {
                        np.pop();
                    }
                    out.push(Partition::new_unchecked(np));
                }
            }
        }
    }
    out
}

/// Serialized form: `{"m":4,"values":{"[1,1,1,1]":3,...}}`. Integral values
/// are JSON numbers, other rationals strings such as `"1/2"`.
#[derive(Serialize, Deserialize)]
struct ClassFunctionJson {
    m: usize,
    values: BTreeMap<String, serde_json::Value>,
}

impl ClassFunction {
    pub fn to_json(&self) -> serde_json::Value {
        let values = self
            .classes
            .partitions()
            .iter()
            .zip(&self.values)
            .map(|(mu, v)| (partition_key(mu), rational_to_json(v)))
            .collect();
        serde_json::to_value(ClassFunctionJson {
            m: self.m(),
            values,
        })
        .expect("class function serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: ClassFunctionJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("class function: {e}")))?;
        let idx = classes(raw.m)?;
        let mut values = vec![None; idx.len()];
        for (key, v) in &raw.values {
            let mu: Partition = key.parse()?;
            let pos = idx
                .position(&mu)
                .ok_or_else(|| Error::Parse(format!("{key} is not a class of S_{}", raw.m)))?;
            values[pos] = Some(rational_from_json(v)?);
        }
        let values = values
            .into_iter()
            .zip(idx.partitions())
            .map(|(v, mu)| v.ok_or_else(|| Error::Parse(format!("missing value for class {mu}"))))
            .collect::<Result<Vec<_>>>()?;
        ClassFunction::from_values(raw.m, values)
    }
}

fn partition_key(p: &Partition) -> String {
    serde_json::to_string(p).expect("partition serializes")
}

pub(crate) fn rational_to_json(v: &BigRational) -> serde_json::Value {
    if v.is_integer() {
        let i = v.to_integer();
        match i.to_i64() {
            Some(x) => serde_json::Value::from(x),
            None => serde_json::Value::String(i.to_string()),
        }
    } else {
        serde_json::Value::String(v.to_string())
    }
}

pub(crate) fn rational_from_json(v: &serde_json::Value) -> Result<BigRational> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .ok_or_else(|| Error::Parse(format!("non-integer number {n}"))),
        serde_json::Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a, b),
                None => (s.as_str(), "1"),
            };
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(Error::Parse(format!("expected a number, got {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn ints(f: &ClassFunction) -> Vec<i64> {
        f.values()
            .iter()
            .map(|v| v.to_integer().to_i64().unwrap())
            .collect()
    }

    fn dec(m: usize, terms: &[(&[usize], i64)]) -> Decomposition {
        Decomposition::from_terms(m, terms.iter().map(|(l, k)| (p(l), *k))).unwrap()
    }

    /// Permutation character of S_3 on three points minus the trivial.
    #[test]
    fn small_tables() {
        let t3 = character_table(3).unwrap();
        let at = |l: &[usize], m: &[usize]| t3.value(&p(l), &p(m)).unwrap().to_i64().unwrap();
        for mu in [&[1, 1, 1][..], &[2, 1], &[3]] {
            assert_eq!(at(&[3], mu), 1);
        }
        assert_eq!(
            [
                at(&[1, 1, 1], &[1, 1, 1]),
                at(&[1, 1, 1], &[2, 1]),
                at(&[1, 1, 1], &[3])
            ],
            [1, -1, 1]
        );
        let fixed_minus_one: Vec<i64> = [&[1, 1, 1][..], &[2, 1], &[3]]
            .iter()
            .map(|mu| p(mu).multiplicity(1) as i64 - 1)
            .collect();
        assert_eq!(
            vec![
                at(&[2, 1], &[1, 1, 1]),
                at(&[2, 1], &[2, 1]),
                at(&[2, 1], &[3])
            ],
            fixed_minus_one
        );
    }

    #[test]
    fn first_column_is_dimension_and_rows_orthonormal() {
        for m in 1..=8 {
            let t = character_table(m).unwrap();
            for lambda in t.classes().partitions() {
                let chi = t.irreducible(lambda).unwrap();
                assert_eq!(
                    chi.dimension().to_integer(),
                    crate::partition::irreducible_dimension(lambda)
                );
                for mu in t.classes().partitions() {
                    let other = t.irreducible(mu).unwrap();
                    let ip = chi.inner_product(&other).unwrap();
                    assert_eq!(
                        ip,
                        if lambda == mu { q(1) } else { q(0) },
                        "m={m} {lambda} {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for m in 1..=6 {
            let t = character_table(m).unwrap();
            let idx = t.classes().clone();
            for (a, mu) in idx.partitions().iter().enumerate() {
                for (b, _) in idx.partitions().iter().enumerate() {
                    let s: BigInt = t.rows().iter().map(|r| &r[a] * &r[b]).sum();
                    if a == b {
                        assert_eq!(s * &idx.class_sizes()[a], factorial(m), "{mu}");
                    } else {
                        assert!(s.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn resource_guard() {
        assert!(matches!(
            character_table(10),
            Err(Error::ResourceGuard { .. })
        ));
        assert!(character_table(0).is_err());
    }

    #[test]
    fn inner_products() {
        let reg = regular(4).unwrap();
        assert_eq!(reg.inner_product(&trivial(4).unwrap()).unwrap(), q(1));
        let ind = induce_trivial_from_transposition(4).unwrap();
        let std31 = irreducible(&p(&[3, 1])).unwrap();
        assert_eq!(ind.inner_product(&std31).unwrap(), q(2));
        assert!(ind.inner_product(&trivial(3).unwrap()).is_err());
    }

    #[test]
    fn decompositions() {
        let chi = irreducible(&p(&[2, 1])).unwrap();
        assert_eq!(chi.decompose().unwrap(), dec(3, &[(&[2, 1], 1)]));
        let ind = induce_trivial_from_transposition(4).unwrap();
        assert_eq!(
            ind.decompose().unwrap(),
            dec(4, &[(&[4], 1), (&[3, 1], 2), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        assert_eq!(
            ind.decompose().unwrap().to_string(),
            "(4) + 2(3,1) + (2,2) + (2,1,1)"
        );
        let neg = -&chi;
        match neg.decompose() {
            Err(Error::NotGenuine { partition, .. }) => assert_eq!(partition, p(&[2, 1])),
            other => panic!("expected NotGenuine, got {other:?}"),
        }
        let half = chi.scale(&BigRational::new(1.into(), 2.into()));
        assert!(matches!(half.decompose(), Err(Error::NotGenuine { .. })));
    }

    #[test]
    fn reciprocity_formula_for_transposition_induction() {
        for m in 2..=8 {
            let ind = induce_trivial_from_transposition(m).unwrap();
            assert_eq!(ind.dimension().to_integer(), factorial(m) / 2);
            let t = character_table(m).unwrap();
            let mut tau = vec![2];
            tau.extend(std::iter::repeat_n(1, m - 2));
            let tau = p(&tau);
            for lambda in t.classes().partitions() {
                let chi = t.irreducible(lambda).unwrap();
                let expected = (chi.dimension() + chi.value(&tau).unwrap()) / q(2);
                assert_eq!(ind.inner_product(&chi).unwrap(), expected);
            }
        }
        assert_eq!(
            induce_trivial_from_transposition(2).unwrap(),
            trivial(2).unwrap()
        );
        assert_eq!(
            induce_trivial_from_transposition(3)
                .unwrap()
                .decompose()
                .unwrap(),
            dec(3, &[(&[3], 1), (&[2, 1], 1)])
        );
        assert!(induce_trivial_from_transposition(1).is_err());
    }

    #[test]
    fn restriction_and_induction_examples() {
        let r = irreducible(&p(&[2, 2])).unwrap().restrict().unwrap();
        assert_eq!(r, irreducible(&p(&[2, 1])).unwrap());
        assert_eq!(trivial(5).unwrap().restrict().unwrap(), trivial(4).unwrap());
        for n in 2..=7 {
            let r = irreducible(&p(&[n, 1])).unwrap().restrict().unwrap();
            let expected = &trivial(n).unwrap() + &standard(n).unwrap();
            assert_eq!(r, expected);
        }
        assert!(trivial(1).unwrap().restrict().is_err());

        for m in 2..=7 {
            let ind = trivial(m - 1).unwrap().induce().unwrap();
            assert_eq!(ind, &trivial(m).unwrap() + &standard(m).unwrap());
            assert_eq!(
                regular(m - 1).unwrap().induce().unwrap(),
                regular(m).unwrap()
            );
        }
        assert_eq!(
            trivial(3).unwrap().induce().unwrap().decompose().unwrap(),
            dec(4, &[(&[4], 1), (&[3, 1], 1)])
        );
    }

    #[test]
    fn tensor_examples() {
        let s = irreducible(&p(&[3, 1])).unwrap();
        assert_eq!(s.tensor(&trivial(4).unwrap()).unwrap(), s);
        let sq = s.tensor(&s).unwrap();
        assert_eq!(sq.dimension(), &q(9));
        assert_eq!(
            sq.decompose().unwrap(),
            dec(4, &[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        let n = 7;
        let prod = irreducible(&p(&[n - 2, 2]))
            .unwrap()
            .tensor(&irreducible(&p(&[n - 1, 1])).unwrap())
            .unwrap()
            .decompose()
            .unwrap();
        assert_eq!(prod.multiplicity(&p(&[n - 3, 2, 1])), BigInt::from(1));
        assert_eq!(
            prod,
            dec(
                7,
                &[
                    (&[4, 2, 1], 1),
                    (&[4, 3], 1),
                    (&[5, 1, 1], 1),
                    (&[5, 2], 1),
                    (&[6, 1], 1)
                ]
            )
        );
        assert!(s.tensor(&trivial(3).unwrap()).is_err());
    }

    #[test]
    fn branching() {
        let mut add = branching_boxes(&p(&[2, 1]), BoxDirection::Add);
        add.sort();
        let mut exp = vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])];
        exp.sort();
        assert_eq!(add, exp);
        assert_eq!(
            branching_boxes(&p(&[2, 2]), BoxDirection::Remove),
            vec![p(&[2, 1])]
        );
        for n in 2..=6 {
            let mut r = branching_boxes(&p(&[n, 1]), BoxDirection::Remove);
            r.sort();
            let mut e = vec![p(&[n]), p(&[n - 1, 1])];
            e.sort();
            assert_eq!(r, e, "n={n}");
        }
        assert_eq!(
            branching_boxes(&p(&[1, 1]), BoxDirection::Remove),
            vec![p(&[1])]
        );
    }

    #[test]
    fn branching_matches_restrict_and_induce() {
        for m in 1..=7 {
            for lambda in partitions_of(m).unwrap() {
                let chi = irreducible(&lambda).unwrap();
                if m >= 2 {
                    let by_boxes = Decomposition::from_terms(
                        m - 1,
                        branching_boxes(&lambda, BoxDirection::Remove)
                            .into_iter()
                            .map(|l| (l, 1)),
                    )
                    .unwrap();
                    assert_eq!(chi.restrict().unwrap().decompose().unwrap(), by_boxes);
                }
                let by_boxes = Decomposition::from_terms(
                    m + 1,
                    branching_boxes(&lambda, BoxDirection::Add)
                        .into_iter()
                        .map(|l| (l, 1)),
                )
                .unwrap();
                assert_eq!(chi.induce().unwrap().decompose().unwrap(), by_boxes);
            }
        }
    }

    #[test]
    fn named_characters() {
        assert_eq!(ints(&standard(4).unwrap()), vec![-1, 0, -1, 1, 3]);
        let s = sign(4).unwrap();
        assert_eq!(s.value(&p(&[1, 1, 1, 1])), Some(&q(1)));
        assert_eq!(ints(&regular(4).unwrap()), vec![0, 0, 0, 0, 24]);
        assert!(standard(1).is_err());
        assert!("bogus".parse::<NamedCharacter>().is_err());
        for m in 2..=7 {
            assert_eq!(
                standard(m).unwrap(),
                &trivial(m - 1).unwrap().induce().unwrap() - &trivial(m).unwrap()
            );
            assert_eq!(
                sign(m).unwrap(),
                irreducible(&Partition::column(m)).unwrap()
            );
            assert_eq!(standard(m).unwrap(), irreducible(&p(&[m - 1, 1])).unwrap());
        }
    }

    #[test]
    fn json_round_trip() {
        let f = standard(4)
            .unwrap()
            .scale(&BigRational::new(1.into(), 2.into()));
        let j = f.to_json();
        assert_eq!(j["m"], 4);
        assert_eq!(j["values"]["[1,1,1,1]"], "3/2");
        assert_eq!(ClassFunction::from_json(&j).unwrap(), f);
        let g = standard(4).unwrap().to_json();
        assert_eq!(g["values"]["[2,1,1]"], 1);
        assert!(ClassFunction::from_json(&serde_json::json!({"m": 3, "values": {}})).is_err());
    }
}
