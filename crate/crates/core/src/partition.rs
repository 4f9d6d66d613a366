//! Partitions, permutations and conjugacy-class combinatorics of symmetric groups.
//!
//! A [`Partition`] labels both an irreducible representation `V_λ` and a
//! conjugacy class (by cycle type). Permutations act on an explicit integer
//! interval `{base, .., base + len - 1}`, so the canonical ground set `{1..n}`
//! and the extended ground set `{0..n}` are both first-class.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("partition parts must be positive: {parts:?}"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return domain(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            ));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub(crate) fn new_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Self::new(parts.clone()).is_ok());
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// The partition with one extra part equal to 1 (a new fixed point).
    pub fn with_fixed_point(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition { parts }
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the order of the centralizer of an element of
    /// cycle type `λ`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut mult = 0;
            while i < self.parts.len() && self.parts[i] == p {
                mult += 1;
                i += 1;
                z *= p;
                z *= mult;
            }
        }
        z
    }

    /// Hook lengths of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (r, &row) in self.parts.iter().enumerate() {
            for c in 0..row {
                hooks.push(row - c - 1 + conj.parts[c] - r - 1 + 1);
            }
        }
        hooks
    }

    /// Partition `(m)`.
    pub fn row(m: usize) -> Partition {
        Partition { parts: vec![m] }
    }

    /// Partition `(1^m)`.
    pub fn column(m: usize) -> Partition {
        Partition { parts: vec![1; m] }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1,1)`, `[3,1,1]` or `3,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let parts = inner
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `m` in reverse lexicographic order, starting with `(m)`
/// and ending with `(1^m)`.
pub fn partitions_of(m: usize) -> Result<Vec<Partition>> {
    if m == 0 {
        return domain("partitions_of requires m >= 1");
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill_partitions(m, m, &mut prefix, &mut out);
    Ok(out)
}

fn fill_partitions(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        prefix.push(p);
        fill_partitions(rest - p, p, prefix, out);
        prefix.pop();
    }
}

/// Number of permutations of cycle type `λ`, i.e. `m! / z_λ`.
pub fn class_size(lambda: &Partition) -> BigInt {
    factorial(lambda.size()) / lambda.centralizer_order()
}

/// Dimension of `V_λ` by the hook length formula.
pub fn irreducible_dimension(lambda: &Partition) -> BigInt {
    let hooks: BigInt = lambda
        .hook_lengths()
        .into_iter()
        .map(BigInt::from)
        .product();
    factorial(lambda.size()) / hooks
}

pub fn factorial(m: usize) -> BigInt {
    (1..=m).map(BigInt::from).product()
}

/// A bijection of the interval `{base, .., base + len - 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    base: usize,
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i]` is the image of the point `base + i`.
    pub fn new(base: usize, images: Vec<usize>) -> Result<Self> {
        let len = images.len();
        let mut seen = vec![false; len];
        for &x in &images {
            if x < base || x >= base + len || seen[x - base] {
                return domain(format!(
                    "images {images:?} are not a bijection of {{{base}..{}}}",
                    base + len - 1
                ));
            }
            seen[x - base] = true;
        }
        Ok(Permutation { base, images })
    }

    pub fn identity(base: usize, len: usize) -> Self {
        Permutation {
            base,
            images: (base..base + len).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles written with point labels.
    pub fn from_cycles(base: usize, len: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (base..base + len).collect();
        let mut touched = vec![false; len];
        for cycle in cycles {
            for (h, &x) in cycle.iter().enumerate() {
                if x < base || x >= base + len {
                    return domain(format!("cycle point {x} outside ground set"));
                }
                if touched[x - base] {
                    return domain(format!("point {x} appears in two cycles"));
                }
                touched[x - base] = true;
                images[x - base] = cycle[(h + 1) % cycle.len()];
            }
        }
        Ok(Permutation { base, images })
    }

    /// The adjacent transposition `(j, j+1)`.
    pub fn adjacent(base: usize, len: usize, j: usize) -> Result<Self> {
        if j < base || j + 1 >= base + len {
            return domain(format!("s_{j} is not defined on this ground set"));
        }
        let mut p = Self::identity(base, len);
        p.images.swap(j - base, j + 1 - base);
        Ok(p)
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        self.base..self.base + self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - self.base]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x == self.base + i)
    }

    fn check_same_ground(&self, other: &Permutation) -> Result<()> {
        if self.base != other.base || self.len() != other.len() {
            return domain("permutations act on different ground sets");
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_same_ground(other)?;
        Ok(Permutation {
            base: self.base,
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - self.base] = self.base + i;
        }
        Permutation {
            base: self.base,
            images,
        }
    }

    /// Disjoint cycles including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in self.points() {
            if seen[start - self.base] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - self.base] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - self.base] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn sign(&self) -> i32 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2;
        if odd == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths, fixed points included as parts equal to 1.
    pub fn cycle_type(&self) -> Partition {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new_unchecked(parts)
    }

    /// A word `w` in adjacent transpositions `s_j = (j, j+1)` (indexed by point
    /// labels) with `s_{w[0]} ∘ s_{w[1]} ∘ ⋯ = self`.
    pub fn coxeter_word(&self) -> Vec<usize> {
        // Bubble-sort the one-line notation: p ∘ s_{j1} ∘ ⋯ ∘ s_{jr} = id.
        let mut line = self.images.clone();
        let mut swaps = Vec::new();
        let len = line.len();
        for pass in 0..len {
            for i in 0..len.saturating_sub(1 + pass) {
                if line[i] > line[i + 1] {
                    line.swap(i, i + 1);
                    swaps.push(self.base + i);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Composes adjacent transpositions `s_{w[0]} ∘ s_{w[1]} ∘ ⋯`.
    pub fn from_coxeter_word(base: usize, len: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(base, len);
        for &j in word {
            p = p.compose(&Self::adjacent(base, len, j)?)?;
        }
        Ok(p)
    }

    /// The canonical representative of the class `λ`: cycles on consecutive
    /// points, largest cycle first, starting at `base`.
    pub fn class_representative(base: usize, lambda: &Partition) -> Permutation {
        let len = lambda.size();
        let mut images = Vec::with_capacity(len);
        let mut start = base;
        for &p in lambda.parts() {
            for h in 0..p {
                images.push(start + (h + 1) % p);
            }
            start += p;
        }
        Permutation { base, images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}
