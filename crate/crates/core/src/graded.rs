//! Graded characters: one class function per cohomological degree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::Parity;
use crate::character::{ClassFunction, Decomposition};
use crate::error::{domain, Error, Result};
use crate::partition::Partition;

/// Which module a graded character describes.
///
/// `Canonical` and `Deconed` are `S_n`-characters; `Extended` and
/// `DeconedExtended` are characters of the extended `S_{n+1}` action on the
/// same spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum View {
    Canonical,
    Extended,
    Deconed,
    DeconedExtended,
}

impl View {
    pub fn is_extended(self) -> bool {
        matches!(self, View::Extended | View::DeconedExtended)
    }

    pub fn is_deconed(self) -> bool {
        matches!(self, View::Deconed | View::DeconedExtended)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            View::Canonical => "canonical",
            View::Extended => "extended",
            View::Deconed => "deconed",
            View::DeconedExtended => "deconed-extended",
        }
    }
}

impl fmt::Display for View {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for View {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(View::Canonical),
            "extended" => Ok(View::Extended),
            "deconed" => Ok(View::Deconed),
            "deconed-extended" => Ok(View::DeconedExtended),
            other => Err(Error::Parse(format!("unknown view {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    n: usize,
    parity: Parity,
    view: View,
    degrees: Vec<ClassFunction>,
}

impl GradedCharacter {
    /// `degrees[k]` is the character in degree `k`. Trailing degrees beyond
    /// the top of the view must not be supplied.
    pub fn new(n: usize, parity: Parity, view: View, degrees: Vec<ClassFunction>) -> Result<Self> {
        let gc = GradedCharacter {
            n,
            parity,
            view,
            degrees,
        };
        let m = gc.group_degree();
        if gc.degrees.len() > gc.degree_count() {
            return domain(format!(
                "{view} character on {n} points has at most {} degrees, got {}",
                gc.degree_count(),
                gc.degrees.len()
            ));
        }
        if let Some(bad) = gc.degrees.iter().find(|f| f.m() != m) {
            return domain(format!(
                "expected class functions on S_{m}, got S_{}",
                bad.m()
            ));
        }
        Ok(gc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn view(&self) -> View {
        self.view
    }

    /// `m` such that the characters live on `S_m`.
    pub fn group_degree(&self) -> usize {
        if self.view.is_extended() {
            self.n + 1
        } else {
            self.n
        }
    }

    /// Number of possibly nonzero degrees: `n` (degrees `0..n-1`) or `n-1`
    /// for the deconed views.
    pub fn degree_count(&self) -> usize {
        if self.view.is_deconed() {
            self.n.saturating_sub(1)
        } else {
            self.n
        }
    }

    /// The stored degrees; may be shorter than [`Self::degree_count`] when
    /// only low degrees were computed.
    pub fn degrees(&self) -> &[ClassFunction] {
        &self.degrees
    }

    pub fn is_complete(&self) -> bool {
        self.degrees.len() == self.degree_count()
    }

    /// Degree `k`; the zero function for degrees outside the range.
    pub fn degree(&self, k: isize) -> Result<ClassFunction> {
        if k < 0 || k as usize >= self.degree_count() {
            return ClassFunction::zero(self.group_degree());
        }
        match self.degrees.get(k as usize) {
            Some(f) => Ok(f.clone()),
            None => domain(format!("degree {k} was not computed")),
        }
    }

    /// Sum over all stored degrees.
    pub fn total(&self) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(self.group_degree())?;
        for f in &self.degrees {
            acc = acc.try_add(f)?;
        }
        Ok(acc)
    }

    pub fn decompose(&self) -> Result<Vec<Decomposition>> {
        self.degrees.iter().map(ClassFunction::decompose).collect()
    }

    /// Multiplicity of `V_λ` in each stored degree.
    pub fn multiplicities_of(&self, lambda: &Partition) -> Result<Vec<BigInt>> {
        if lambda.size() != self.group_degree() {
            return domain(format!(
                "{lambda} is not a partition of {}",
                self.group_degree()
            ));
        }
        let chi = crate::character::irreducible(lambda)?;
        self.degrees
            .iter()
            .map(|f| {
                let ip = f.inner_product(&chi)?;
                if !ip.is_integer() {
                    return Err(Error::NotGenuine {
                        partition: lambda.clone(),
                        multiplicity: ip.to_string(),
                    });
                }
                Ok(ip.to_integer())
            })
            .collect()
    }

    /// Restriction of an extended view to `S_n` (the stabilizer of the
    /// point 0).
    pub fn restrict(&self) -> Result<GradedCharacter> {
        let view = match self.view {
            View::Extended => View::Canonical,
            View::DeconedExtended => View::Deconed,
            other => return domain(format!("cannot restrict a {other} character")),
        };
        let degrees = self
            .degrees
            .iter()
            .map(ClassFunction::restrict)
            .collect::<Result<_>>()?;
        GradedCharacter::new(self.n, self.parity, view, degrees)
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
struct IrreducibleJson {
    partition: Partition,
    multiplicity: i64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
struct DegreeJson {
    k: usize,
    irreducibles: Vec<IrreducibleJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
struct GradedJson {
    n: usize,
    parity: Parity,
    view: View,
    degrees: Vec<DegreeJson>,
}

impl GradedCharacter {
    /// `{"n":5,"parity":"odd","view":"canonical","degrees":[{"k":0,"irreducibles":[...]},...]}`.
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let degrees = self
            .decompose()?
            .into_iter()
            .enumerate()
            .map(|(k, d)| {
                let irreducibles = d
                    .terms
                    .into_iter()
                    .map(|(partition, mult)| IrreducibleJson {
                        partition,
                        multiplicity: mult.to_i64().expect("multiplicity fits in i64"),
                    })
                    .collect();
                DegreeJson { k, irreducibles }
            })
            .collect();
        Ok(serde_json::to_value(GradedJson {
            n: self.n,
            parity: self.parity,
            view: self.view,
            degrees,
        })
        .expect("graded character serializes"))
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: GradedJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("graded character: {e}")))?;
        let mut gc = GradedCharacter {
            n: raw.n,
            parity: raw.parity,
            view: raw.view,
            degrees: Vec::new(),
        };
        let m = gc.group_degree();
        let mut degrees = vec![None; gc.degree_count()];
        for d in raw.degrees {
            let slot = degrees
                .get_mut(d.k)
                .ok_or_else(|| Error::Parse(format!("degree {} out of range", d.k)))?;
            let dec = Decomposition::from_terms(
                m,
                d.irreducibles
                    .into_iter()
                    .map(|i| (i.partition, i.multiplicity)),
            )?;
            *slot = Some(dec.character()?);
        }
        let stored: Vec<ClassFunction> = degrees.into_iter().map_while(|d| d).collect();
        gc.degrees = stored;
        Ok(gc)
    }
}
