//! The graded algebra `H*(C_n(d))` presented by generators `A_{i,j}` and
//! rewritten onto the basis of admissible monomials.
//!
//! The relations only see the parity of `d`: for `d` even the generators are
//! symmetric (`A_{j,i} = A_{i,j}`) and anticommute, for `d` odd they are
//! antisymmetric and commute. Degrees are counted by the number `k` of
//! factors; the topological degree is `k(d-1)`.
//!
//! Every rewrite uses the single rule
//!
//! ```text
//! A_{a,c} A_{b,c}  ->  A_{a,b} A_{b,c} - A_{a,b} A_{a,c}      (a < b < c)
//! ```
//!
//! which holds verbatim in both parities once factors are canonical.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use std::sync::Mutex;

use crate::error::{domain, Error, Result};

/// Largest number of points a packed monomial can hold.
pub const MAX_POINTS: usize = 15;

/// Parity of the dimension `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_dimension(d: usize) -> Result<Parity> {
        match d {
            0 | 1 => domain(format!("configuration spaces need d >= 2, got {d}")),
            d if d % 2 == 0 => Ok(Parity::Even),
            _ => Ok(Parity::Odd),
        }
    }

    /// Sign picked up when two degree-one generators are swapped.
    fn swap_sign(self) -> i64 {
        match self {
            Parity::Even => -1,
            Parity::Odd => 1,
        }
    }

    /// Sign in `A_{j,i} = ± A_{i,j}`.
    fn transpose_sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(Error::Parse(format!(
                "parity must be even or odd, got {other:?}"
            ))),
        }
    }
}

/// A canonical generator `A_{i,j}` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{},{}]", self.i, self.j)
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return domain(format!("index {i} outside 1..={n}"));
    }
    Ok(())
}

/// Rewrites `A_{i,j}` as `sign · A_{min,max}`, or `None` when `i = j`.
pub fn canonical_generator(
    i: usize,
    j: usize,
    n: usize,
    parity: Parity,
) -> Result<Option<(Generator, i64)>> {
    check_index(i, n)?;
    check_index(j, n)?;
    Ok(match i.cmp(&j) {
        Ordering::Equal => None,
        Ordering::Less => Some((Generator { i, j }, 1)),
        Ordering::Greater => Some((Generator { i: j, j: i }, parity.transpose_sign())),
    })
}

/// An admissible monomial `A_{i_1,j_1} ⋯ A_{i_k,j_k}` with `i_h < j_h` and
/// `j_1 < ⋯ < j_k`.
///
/// Since top indices are distinct, the monomial is stored as one slot per
/// top index `c` holding the lower index (0 when absent), four bits each.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AdmissibleMonomial(u64);

impl AdmissibleMonomial {
    pub const ONE: AdmissibleMonomial = AdmissibleMonomial(0);

    #[inline]
    pub(crate) fn lower(self, top: usize) -> usize {
        ((self.0 >> (4 * top)) & 0xF) as usize
    }

    #[inline]
    fn with(self, top: usize, lower: usize) -> Self {
        AdmissibleMonomial((self.0 & !(0xF << (4 * top))) | ((lower as u64) << (4 * top)))
    }

    /// Factors with top index strictly below `top`.
    #[inline]
    fn below(self, top: usize) -> Self {
        AdmissibleMonomial(self.0 & ((1u64 << (4 * top)) - 1))
    }

    /// Factors with top index strictly above `top`.
    #[inline]
    fn above(self, top: usize) -> Self {
        match 1u64.checked_shl(4 * (top as u32 + 1)) {
            Some(bit) => AdmissibleMonomial(self.0 & !(bit - 1)),
            None => AdmissibleMonomial(0),
        }
    }

    #[inline]
    fn count_above(self, top: usize) -> u32 {
        let mut bits = self.above(top).0;
        let mut count = 0;
        while bits != 0 {
            count += 1;
            bits &= !(0xF << (4 * (bits.trailing_zeros() / 4)));
        }
        count
    }

    /// Builds a monomial from factors; they must already be admissible.
    pub fn from_factors(factors: &[Generator]) -> Result<Self> {
        let mut m = AdmissibleMonomial::ONE;
        let mut last_top = 0;
        for g in factors {
            if g.i == 0 || g.i >= g.j || g.j > MAX_POINTS {
                return domain(format!("{g} is not a canonical generator"));
            }
            if g.j <= last_top {
                return domain("top indices of an admissible monomial must increase");
            }
            last_top = g.j;
            m = m.with(g.j, g.i);
        }
        Ok(m)
    }

    pub fn factors(self) -> Vec<Generator> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = Generator> {
        (2..=MAX_POINTS).filter_map(move |j| {
            let i = self.lower(j);
            (i != 0).then_some(Generator { i, j })
        })
    }

    pub fn degree(self) -> usize {
        self.iter().count()
    }

    /// Largest index appearing in the monomial.
    pub fn max_index(self) -> usize {
        self.iter().last().map(|g| g.j).unwrap_or(0)
    }
}

impl Ord for AdmissibleMonomial {
    /// Lexicographic on the list of `(i, j)` pairs.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .map(|g| (g.i, g.j))
            .cmp(other.iter().map(|g| (g.i, g.j)))
    }
}

impl PartialOrd for AdmissibleMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AdmissibleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for g in self.iter() {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AdmissibleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse combination with machine-integer coefficients used inside the
/// rewriting engine. Rewrites only ever produce ±1 coefficients, so these
/// stay tiny compared to `i64`.
pub(crate) type SparseTerms = HashMap<AdmissibleMonomial, i64>;

fn accumulate(out: &mut SparseTerms, m: AdmissibleMonomial, c: i64) {
    if c == 0 {
        return;
    }
    let e = out.entry(m).or_insert(0);
    *e += c;
    if *e == 0 {
        out.remove(&m);
    }
}

/// Accumulates `coef · m · A_{a,c}` into `out`, for a canonical generator
/// `a < c` placed to the right of `m`.
pub(crate) fn mul_generator(
    m: AdmissibleMonomial,
    a: usize,
    c: usize,
    parity: Parity,
    coef: i64,
    out: &mut SparseTerms,
) {
    let mut coef = coef;
    if parity == Parity::Even && m.count_above(c) % 2 == 1 {
        coef = -coef;
    }
    let b = m.lower(c);
    if b == 0 {
        accumulate(out, m.with(c, a), coef);
        return;
    }
    if b == a {
        return;
    }
    // m = prefix · A_{b,c} · suffix; the new factor sits right after A_{b,c}.
    let (x, y) = if a < b { (a, b) } else { (b, a) };
    if a < b {
        coef *= parity.swap_sign();
    }
    let prefix = m.below(c);
    let suffix = m.above(c);
    let mut inner = SparseTerms::new();
    mul_generator(prefix, x, y, parity, 1, &mut inner);
    for (t, k) in inner {
        let base = AdmissibleMonomial(t.0 | suffix.0);
        accumulate(out, base.with(c, y), coef * k);
        accumulate(out, base.with(c, x), -coef * k);
    }
}

/// Multiplies a sparse combination on the right by `Σ coef · A_{i,j}`
/// (canonical generators).
pub(crate) fn mul_linear(
    lhs: &SparseTerms,
    rhs: &[(Generator, i64)],
    parity: Parity,
) -> SparseTerms {
    let mut out = SparseTerms::new();
    for (&m, &c) in lhs {
        for &(g, k) in rhs {
            mul_generator(m, g.i, g.j, parity, c * k, &mut out);
        }
    }
    out
}

/// Normal form of a word of raw index pairs through successive right
/// multiplication; agrees with [`normal_form`].
pub(crate) fn word_terms(word: &[(usize, usize)], n: usize, parity: Parity) -> Result<SparseTerms> {
    let mut acc = SparseTerms::new();
    acc.insert(AdmissibleMonomial::ONE, 1);
    for &(i, j) in word {
        match canonical_generator(i, j, n, parity)? {
            None => return Ok(SparseTerms::new()),
            Some((g, s)) => acc = mul_linear(&acc, &[(g, s)], parity),
        }
        if acc.is_empty() {
            break;
        }
    }
    Ok(acc)
}

/// An element of `H*(C_n(d))` in the admissible basis. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    parity: Parity,
    terms: BTreeMap<AdmissibleMonomial, BigInt>,
}

impl AlgebraElement {
    pub fn zero(n: usize, parity: Parity) -> Result<Self> {
        if n == 0 || n > MAX_POINTS {
            return domain(format!(
                "number of points must be in 1..={MAX_POINTS}, got {n}"
            ));
        }
        Ok(AlgebraElement {
            n,
            parity,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(n: usize, parity: Parity) -> Result<Self> {
        Self::monomial(n, parity, AdmissibleMonomial::ONE, BigInt::one())
    }

    pub fn monomial(
        n: usize,
        parity: Parity,
        m: AdmissibleMonomial,
        coefficient: BigInt,
    ) -> Result<Self> {
        let mut e = Self::zero(n, parity)?;
        if m.max_index() > n {
            return domain(format!("{m} does not live on {n} points"));
        }
        if !coefficient.is_zero() {
            e.terms.insert(m, coefficient);
        }
        Ok(e)
    }

    /// The class of `A_{i,j}`, with `A_{j,i}` and `A_{i,i}` interpreted by
    /// the relations.
    pub fn generator(i: usize, j: usize, n: usize, parity: Parity) -> Result<Self> {
        normal_form(&[(i, j)], n, parity)
    }

    pub(crate) fn from_sparse(n: usize, parity: Parity, terms: SparseTerms) -> Self {
        AlgebraElement {
            n,
            parity,
            terms: terms
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| (m, BigInt::from(c)))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn terms(&self) -> &BTreeMap<AdmissibleMonomial, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, m: &AdmissibleMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, if the element is homogeneous and
    /// nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.parity != other.parity {
            return domain(format!(
                "elements live in different algebras: (n={}, {}) vs (n={}, {})",
                self.n, self.parity, other.n, other.parity
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = AlgebraElement {
            n: self.n,
            parity: self.parity,
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, v)| (*m, v * c)).collect();
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: AdmissibleMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Bilinear product, normal-forming every product of basis monomials.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.n, self.parity)?;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut acc = SparseTerms::new();
                acc.insert(*ma, 1);
                for g in mb.iter() {
                    acc = mul_linear(&acc, &[(g, 1)], self.parity);
                    if acc.is_empty() {
                        break;
                    }
                }
                let c = ca * cb;
                for (m, k) in acc {
                    out.add_term(m, &c * k);
                }
            }
        }
        Ok(out)
    }

    /// Coordinates in `basis`; fails if the element has a term outside it.
    pub fn coordinates(&self, basis: &Basis) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); basis.len()];
        for (m, c) in &self.terms {
            let pos = basis
                .position(m)
                .ok_or_else(|| Error::Domain(format!("{m} is not in the requested basis")))?;
            v[pos] = c.clone();
        }
        Ok(v)
    }
}

impl fmt::Display for AlgebraElement {
    /// `8*A[1,2]A[3,4] - 8*A[1,3]A[2,4] + 8*A[1,4]A[2,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *m == AdmissibleMonomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coefficient: serde_json::Value,
    factors: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    parity: Parity,
    terms: Vec<TermJson>,
}

impl AlgebraElement {
    /// `{"n":4,"parity":"odd","terms":[{"coefficient":8,"factors":[[1,2],[3,4]]},...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                coefficient: match c.to_i64() {
                    Some(x) => x.into(),
                    None => c.to_string().into(),
                },
                factors: m.iter().map(|g| [g.i, g.j]).collect(),
            })
            .collect();
        serde_json::to_value(ElementJson {
            n: self.n,
            parity: self.parity,
            terms,
        })
        .expect("element serializes")
    }

    /// Reads the JSON mirror; factor lists need not be admissible and are
    /// normal-formed.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: ElementJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("algebra element: {e}")))?;
        let mut out = Self::zero(raw.n, raw.parity)?;
        for t in raw.terms {
            let c: BigInt = match &t.coefficient {
                serde_json::Value::Number(x) => x
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {x}")))?,
                serde_json::Value::String(s) => s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?,
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            let word: Vec<(usize, usize)> = t.factors.iter().map(|f| (f[0], f[1])).collect();
            out = out.add(&normal_form(&word, raw.n, raw.parity)?.scale(&c))?;
        }
        Ok(out)
    }
}

/// Rewrites a word of index pairs into the admissible basis.
///
/// Factors are canonicalized, sorted by top index (with the Koszul sign in
/// even parity), and the leftmost pair of adjacent factors sharing a top
/// index is rewritten; the process repeats on every resulting word. Each
/// rewrite strictly lowers the descending-sorted list of top indices, so it
/// terminates.
pub fn normal_form(word: &[(usize, usize)], n: usize, parity: Parity) -> Result<AlgebraElement> {
    if n == 0 || n > MAX_POINTS {
        return domain(format!(
            "number of points must be in 1..={MAX_POINTS}, got {n}"
        ));
    }
    let mut start = Vec::with_capacity(word.len());
    let mut sign = 1i64;
    for &(i, j) in word {
        match canonical_generator(i, j, n, parity)? {
            None => return AlgebraElement::zero(n, parity),
            Some((g, s)) => {
                sign *= s;
                start.push(g);
            }
        }
    }
    let mut out = SparseTerms::new();
    let mut work = vec![(start, sign)];
    while let Some((mut factors, mut coef)) = work.pop() {
        // Sort by (top, lower), counting inversions for the Koszul sign.
        let len = factors.len();
        for pass in 0..len {
            for h in 0..len.saturating_sub(pass + 1) {
                let (x, y) = (factors[h], factors[h + 1]);
                if (x.j, x.i) > (y.j, y.i) {
                    factors.swap(h, h + 1);
                    coef *= parity.swap_sign();
                }
            }
        }
        if factors.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        match factors.windows(2).position(|w| w[0].j == w[1].j) {
            None => {
                let m = AdmissibleMonomial::from_factors(&factors)
                    .expect("sorted factors with distinct tops are admissible");
                accumulate(&mut out, m, coef);
            }
            Some(h) => {
                let (a, b, c) = (factors[h].i, factors[h + 1].i, factors[h].j);
                let ab = Generator { i: a, j: b };
                let mut first = factors.clone();
                first[h] = ab;
                first[h + 1] = Generator { i: b, j: c };
                let mut second = factors;
                second[h] = ab;
                second[h + 1] = Generator { i: a, j: c };
                work.push((first, coef));
                work.push((second, -coef));
            }
        }
    }
    Ok(AlgebraElement::from_sparse(n, parity, out))
}

/// Ordered basis of one graded piece, with a reverse lookup.
#[derive(Debug)]
pub struct Basis {
    n: usize,
    k: usize,
    monomials: Vec<AdmissibleMonomial>,
    position: HashMap<AdmissibleMonomial, usize>,
}

impl Basis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn monomials(&self) -> &[AdmissibleMonomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &AdmissibleMonomial) -> Option<usize> {
        self.position.get(m).copied()
    }
}

type BasisCache = HashMap<(usize, usize), Arc<Basis>>;

static BASES: Lazy<Mutex<BasisCache>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Admissible monomials of degree `k` on `n` points in lexicographic order,
/// cached per `(n, k)`. Empty when `k > n - 1`.
pub fn admissible_basis(n: usize, k: usize) -> Result<Arc<Basis>> {
    if n == 0 || n > MAX_POINTS {
        return domain(format!(
            "number of points must be in 1..={MAX_POINTS}, got {n}"
        ));
    }
    if let Some(b) = BASES.lock().expect("basis cache").get(&(n, k)) {
        return Ok(b.clone());
    }
    let mut monomials = Vec::new();
    if k < n {
        let mut current = Vec::with_capacity(k);
        enumerate_admissible(n, k, 2, &mut current, &mut monomials);
    }
    monomials.sort();
    let position = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let basis = Arc::new(Basis {
        n,
        k,
        monomials,
        position,
    });
    Ok(BASES
        .lock()
        .expect("basis cache")
        .entry((n, k))
        .or_insert(basis)
        .clone())
}

fn enumerate_admissible(
    n: usize,
    k: usize,
    min_top: usize,
    current: &mut Vec<Generator>,
    out: &mut Vec<AdmissibleMonomial>,
) {
    if current.len() == k {
        out.push(AdmissibleMonomial::from_factors(current).expect("admissible by construction"));
        return;
    }
    let remaining = k - current.len();
    for top in min_top..=n {
        if n - top + 1 < remaining {
            break;
        }
        for lower in 1..top {
            current.push(Generator { i: lower, j: top });
            enumerate_admissible(n, k, top + 1, current, out);
            current.pop();
        }
    }
}

/// Coefficient of `t^k` in `∏_{i=1}^{n-1} (1 + i t)`.
pub fn graded_dimension(n: usize, k: usize) -> BigInt {
    elementary_symmetric(1..n, k)
}

/// `e_k` of the given integers, by polynomial expansion.
pub fn elementary_symmetric(values: impl IntoIterator<Item = usize>, k: usize) -> BigInt {
    let mut poly = vec![BigInt::one()];
    for v in values {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + 1] += c * v;
        }
        poly = next;
    }
    poly.get(k).cloned().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn g(i: usize, j: usize) -> Generator {
        Generator { i, j }
    }

    fn mono(fs: &[(usize, usize)]) -> AdmissibleMonomial {
        AdmissibleMonomial::from_factors(&fs.iter().map(|&(i, j)| g(i, j)).collect_vec()).unwrap()
    }

    fn elem(n: usize, parity: Parity, terms: &[(i64, &[(usize, usize)])]) -> AlgebraElement {
        let mut e = AlgebraElement::zero(n, parity).unwrap();
        for (c, fs) in terms {
            e.add_term(mono(fs), BigInt::from(*c));
        }
        e
    }

    #[test]
    fn canonical_generators() {
        assert_eq!(
            canonical_generator(2, 1, 3, Parity::Odd).unwrap(),
            Some((g(1, 2), -1))
        );
        assert_eq!(
            canonical_generator(2, 1, 3, Parity::Even).unwrap(),
            Some((g(1, 2), 1))
        );
        assert_eq!(canonical_generator(3, 3, 3, Parity::Odd).unwrap(), None);
        assert_eq!(canonical_generator(3, 3, 3, Parity::Even).unwrap(), None);
        assert!(canonical_generator(4, 1, 3, Parity::Odd).is_err());
        assert!(canonical_generator(0, 1, 3, Parity::Odd).is_err());
    }

    #[test]
    fn normal_form_examples() {
        for parity in [Parity::Even, Parity::Odd] {
            let nf = normal_form(&[(1, 3), (2, 3)], 3, parity).unwrap();
            assert_eq!(
                nf,
                elem(
                    3,
                    parity,
                    &[(1, &[(1, 2), (2, 3)]), (-1, &[(1, 2), (1, 3)])]
                )
            );
            assert!(normal_form(&[(1, 2), (1, 2)], 3, parity).unwrap().is_zero());
        }
        let nf = normal_form(&[(2, 3), (1, 2)], 3, Parity::Odd).unwrap();
        assert_eq!(nf, elem(3, Parity::Odd, &[(1, &[(1, 2), (2, 3)])]));
        let nf = normal_form(&[(2, 3), (1, 2)], 3, Parity::Even).unwrap();
        assert_eq!(nf, elem(3, Parity::Even, &[(-1, &[(1, 2), (2, 3)])]));
        assert!(normal_form(&[(1, 5)], 3, Parity::Odd).is_err());
        assert!(normal_form(&[(2, 2), (1, 3)], 3, Parity::Odd)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn element_rendering() {
        let nf = normal_form(&[(1, 3), (2, 3)], 3, Parity::Odd).unwrap();
        assert_eq!(nf.to_string(), "-A[1,2]A[1,3] + A[1,2]A[2,3]");
        let e = elem(
            4,
            Parity::Odd,
            &[(8, &[(1, 2), (3, 4)]), (-8, &[(1, 3), (2, 4)])],
        );
        assert_eq!(e.to_string(), "8*A[1,2]A[3,4] - 8*A[1,3]A[2,4]");
        assert_eq!(
            AlgebraElement::one(3, Parity::Odd).unwrap().to_string(),
            "1"
        );
        assert_eq!(
            AlgebraElement::zero(3, Parity::Odd).unwrap().to_string(),
            "0"
        );
        let j = e.to_json();
        assert_eq!(AlgebraElement::from_json(&j).unwrap(), e);
    }

    #[test]
    fn multiplication_basics() {
        for parity in [Parity::Even, Parity::Odd] {
            let one = AlgebraElement::one(4, parity).unwrap();
            let a = normal_form(&[(1, 3), (2, 4)], 4, parity).unwrap();
            assert_eq!(a.multiply(&one).unwrap(), a);
            assert_eq!(one.multiply(&a).unwrap(), a);
            let a12 = AlgebraElement::generator(1, 2, 4, parity).unwrap();
            assert!(a12.multiply(&a12).unwrap().is_zero());
            let a13 = AlgebraElement::generator(1, 3, 4, parity).unwrap();
            let a23 = AlgebraElement::generator(2, 3, 4, parity).unwrap();
            assert_eq!(
                a13.multiply(&a23).unwrap(),
                normal_form(&[(1, 3), (2, 3)], 4, parity).unwrap()
            );
            let zero = AlgebraElement::zero(4, parity).unwrap();
            assert!(a.multiply(&zero).unwrap().is_zero());
        }
        let a = AlgebraElement::one(4, Parity::Odd).unwrap();
        let b = AlgebraElement::one(4, Parity::Even).unwrap();
        assert!(a.multiply(&b).is_err());
        let c = AlgebraElement::one(5, Parity::Odd).unwrap();
        assert!(a.add(&c).is_err());
    }

    #[test]
    fn basis_examples() {
        let b = admissible_basis(3, 1).unwrap();
        assert_eq!(
            b.monomials(),
            &[mono(&[(1, 2)]), mono(&[(1, 3)]), mono(&[(2, 3)])]
        );
        assert_eq!(admissible_basis(4, 2).unwrap().len(), 11);
        assert_eq!(admissible_basis(4, 3).unwrap().len(), 6);
        assert!(admissible_basis(4, 4).unwrap().is_empty());
        assert_eq!(admissible_basis(1, 0).unwrap().len(), 1);
    }

    #[test]
    fn graded_dimensions() {
        let dims: Vec<BigInt> = (0..4).map(|k| graded_dimension(4, k)).collect();
        assert_eq!(dims, [1, 6, 11, 6].map(BigInt::from));
        assert_eq!(graded_dimension(5, 2), BigInt::from(35));
        for n in 1..=8 {
            assert!(graded_dimension(n, n).is_zero());
            let total: BigInt = (0..n).map(|k| graded_dimension(n, k)).sum();
            assert_eq!(total, crate::partition::factorial(n));
            for k in 0..=n {
                assert_eq!(
                    BigInt::from(admissible_basis(n, k).unwrap().len()),
                    graded_dimension(n, k)
                );
            }
        }
    }

    /// Brute-force e_k over subsets, independent of the polynomial expansion.
    #[test]
    fn elementary_symmetric_matches_subsets() {
        for n in 1..=7 {
            for k in 0..n {
                let brute: usize = (1..n)
                    .combinations(k)
                    .map(|c| c.iter().product::<usize>())
                    .sum();
                assert_eq!(graded_dimension(n, k), BigInt::from(brute));
            }
        }
    }

    #[test]
    fn fast_path_agrees_with_normal_form_on_short_words() {
        for parity in [Parity::Even, Parity::Odd] {
            for n in 2..=5 {
                let pairs: Vec<(usize, usize)> = (1..=n).cartesian_product(1..=n).collect();
                for len in 0..=3 {
                    for word in
                        std::iter::repeat_n(pairs.iter().copied(), len).multi_cartesian_product()
                    {
                        let slow = normal_form(&word, n, parity).unwrap();
                        let fast = AlgebraElement::from_sparse(
                            n,
                            parity,
                            word_terms(&word, n, parity).unwrap(),
                        );
                        assert_eq!(slow, fast, "{word:?} {parity}");
                        for m in slow.terms().keys() {
                            assert!(m.max_index() <= n);
                            assert_eq!(m.degree(), word.len());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anticommutativity_and_commutativity() {
        let n = 5;
        let gens: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        for &x in &gens {
            for &y in &gens {
                if x == y {
                    continue;
                }
                let xy = normal_form(&[x, y], n, Parity::Even).unwrap();
                let yx = normal_form(&[y, x], n, Parity::Even).unwrap();
                assert_eq!(xy, yx.scale(&BigInt::from(-1)));
                let xy = normal_form(&[x, y], n, Parity::Odd).unwrap();
                let yx = normal_form(&[y, x], n, Parity::Odd).unwrap();
                assert_eq!(xy, yx);
            }
        }
    }

    /// `A_{i,j}A_{i,k} = A_{k,j}(A_{i,k} - A_{i,j})` for every `i` and `j ≤ k`.
    #[test]
    fn third_relation_holds_in_normal_form() {
        for parity in [Parity::Even, Parity::Odd] {
            for n in 1..=6 {
                for i in 1..=n {
                    for j in 1..=n {
                        for k in j..=n {
                            let lhs = normal_form(&[(i, j), (i, k)], n, parity).unwrap();
                            let rhs = normal_form(&[(k, j), (i, k)], n, parity)
                                .unwrap()
                                .sub(&normal_form(&[(k, j), (i, j)], n, parity).unwrap())
                                .unwrap();
                            assert_eq!(lhs, rhs, "i={i} j={j} k={k} {parity}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_is_associative_on_basis_samples() {
        for parity in [Parity::Even, Parity::Odd] {
            let n = 5;
            let b1 = admissible_basis(n, 1).unwrap();
            let b2 = admissible_basis(n, 2).unwrap();
            let el = |m: &AdmissibleMonomial| {
                AlgebraElement::monomial(n, parity, *m, BigInt::one()).unwrap()
            };
            for x in b1.monomials().iter().step_by(3) {
                for y in b2.monomials().iter().step_by(7) {
                    for z in b1.monomials().iter().step_by(2) {
                        let (x, y, z) = (el(x), el(y), el(z));
                        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
                        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn parity_parsing() {
        assert_eq!("odd".parse::<Parity>().unwrap(), Parity::Odd);
        assert!("weird".parse::<Parity>().is_err());
        assert_eq!(Parity::of_dimension(2).unwrap(), Parity::Even);
        assert_eq!(Parity::of_dimension(3).unwrap(), Parity::Odd);
        assert!(Parity::of_dimension(1).is_err());
    }
}
