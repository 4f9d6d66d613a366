//! Rendering, verification suites and the character-table cache behind the
//! command-line tool.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{
    act_permutation, antisymmetrizer, canonical_graded_character, verify_extended_relations,
};
use crate::algebra::{admissible_basis, graded_dimension, normal_form, AlgebraElement, Parity};
use crate::character::{
    branching_boxes, character_table, classes, install_character_table, irreducible, BoxDirection,
    ClassFunction, Decomposition,
};
use crate::check::Report;
use crate::error::{domain, Error, Result};
use crate::graded::{GradedCharacter, View};
use crate::partition::{factorial, irreducible_dimension, partitions_of, Partition, Permutation};
use crate::recursion::{
    deconed_extended_character, deconed_graded_character, extended_character_by_inversion,
    invariant_dimensions, locate_multiplicities, standard_partition, standard_sign_partition,
    verify_global_identities, verify_locations, verify_lowdegree_theorems, verify_quotients,
    verify_recursion,
};

/// Largest `n` accepted anywhere (traces on `S_8`, tables of `S_9`).
pub const HARD_MAX_N: usize = 8;
/// Default `--max-n` for the verification suites.
pub const DEFAULT_SUITE_MAX_N: usize = 7;

macro_rules! keyword_enum {
    ($name:ident, $what:literal, { $($variant:ident => $text:literal),+ $(,)? }) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($text => Ok($name::$variant),)+
                    other => Err(Error::Parse(format!(concat!("unknown ", $what, " {:?}"), other))),
                }
            }
        }
    };
}

keyword_enum!(Space, "space", { Conf => "conf", Deconed => "deconed" });
keyword_enum!(Format, "format", { Text => "text", Json => "json", Latex => "latex" });
keyword_enum!(Rep, "representation", {
    Standard => "standard",
    Sign => "sign",
    StandardSign => "standard-sign",
});
keyword_enum!(Suite, "suite", {
    Tables => "tables",
    Global => "global",
    Extended => "extended",
    Rewriting => "rewriting",
    Location => "location",
    Lowdegree => "lowdegree",
    Characters => "characters",
    All => "all",
});

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Characters,
        Suite::Rewriting,
        Suite::Tables,
        Suite::Global,
        Suite::Extended,
        Suite::Location,
        Suite::Lowdegree,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub max_n: usize,
    pub parity: Parity,
    pub space: Space,
    pub view: View,
    pub format: Format,
    pub quotient: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 4,
            max_n: DEFAULT_SUITE_MAX_N,
            parity: Parity::Odd,
            space: Space::Conf,
            view: View::Canonical,
            format: Format::Text,
            quotient: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return domain(format!("--n must be at least 2, got {}", self.n));
        }
        if self.n > HARD_MAX_N {
            return Err(Error::ResourceGuard {
                what: "n",
                value: self.n,
                max: HARD_MAX_N,
            });
        }
        if self.max_n > HARD_MAX_N {
            return Err(Error::ResourceGuard {
                what: "max-n",
                value: self.max_n,
                max: HARD_MAX_N,
            });
        }
        if !matches!(self.view, View::Canonical | View::Extended) {
            return domain("--view is canonical or extended; pick the arrangement with --space");
        }
        Ok(())
    }
}

/// The graded character selected by space, parity and view.
///
/// The deconed arrangement only exists as the `d` even picture, so its
/// parity is ignored.
pub fn graded_character(
    space: Space,
    n: usize,
    parity: Parity,
    view: View,
) -> Result<GradedCharacter> {
    match (space, view) {
        (Space::Conf, View::Canonical) => canonical_graded_character(n, parity),
        (Space::Conf, View::Extended) => extended_character_by_inversion(n, parity),
        (Space::Deconed, View::Canonical) => deconed_graded_character(n),
        (Space::Deconed, View::Extended) => deconed_extended_character(n),
        (_, other) => domain(format!("unsupported view {other}")),
    }
}

fn title(gc: &GradedCharacter) -> String {
    let n = gc.n();
    let space = if gc.view().is_deconed() {
        format!("H^*(M(dA_{})), n={n}", n - 1)
    } else {
        format!("H^*(C_{n}(d)), d {}", gc.parity())
    };
    let group = if gc.view().is_extended() {
        format!("extended S_{} action", n + 1)
    } else {
        format!("canonical S_{n} action")
    };
    format!("{space}, {group}")
}

fn degree_label(gc: &GradedCharacter, k: usize) -> String {
    if gc.view().is_deconed() {
        return k.to_string();
    }
    match k {
        0 => "0".into(),
        1 => "d-1".into(),
        k => format!("{k}(d-1)"),
    }
}

fn latex_decomposition(d: &Decomposition) -> String {
    if d.is_zero() {
        return "0".into();
    }
    d.terms
        .iter()
        .map(|(lambda, mult)| {
            let parts = lambda.parts().iter().join(",");
            if mult.is_one() {
                format!("V_{{({parts})}}")
            } else {
                format!("{mult}\\,V_{{({parts})}}")
            }
        })
        .join(" \\oplus ")
}

/// Degree-by-degree decomposition in the requested format.
pub fn render_graded(gc: &GradedCharacter, format: Format) -> Result<String> {
    let decs = gc.decompose()?;
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&gc.to_json()?).expect("json");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("# {}\n", title(gc));
            for (k, d) in decs.iter().enumerate() {
                s.push_str(&format!("k={k}\t{d}\n"));
            }
            s
        }
        Format::Latex => {
            let mut s = format!(
                "% {}\n\\begin{{tabular}}{{ll}}\ndegree & decomposition \\\\\n\\hline\n",
                title(gc)
            );
            for (k, d) in decs.iter().enumerate() {
                s.push_str(&format!(
                    "${}$ & ${}$ \\\\\n",
                    degree_label(gc, k),
                    latex_decomposition(d)
                ));
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    })
}

pub fn cmd_table(cfg: &RunConfig) -> Result<String> {
    cfg.validate()?;
    let gc = graded_character(cfg.space, cfg.n, cfg.parity, cfg.view)?;
    render_graded(&gc, cfg.format)
}

pub fn rep_partition(rep: Rep, m: usize) -> Result<Partition> {
    match rep {
        Rep::Standard => standard_partition(m),
        Rep::Sign => Ok(Partition::column(m)),
        Rep::StandardSign => standard_sign_partition(m),
    }
}

pub fn cmd_locate(cfg: &RunConfig, rep: Rep) -> Result<String> {
    cfg.validate()?;
    let gc = graded_character(cfg.space, cfg.n, cfg.parity, cfg.view)?;
    let lambda = rep_partition(rep, gc.group_degree())?;
    let mults = locate_multiplicities(&lambda, &gc)?;
    let note = (rep == Rep::Sign && mults.values().all(Zero::is_zero)).then(|| {
        if gc.view().is_deconed() || gc.parity() == Parity::Even {
            "no copy of the sign representation occurs for d even".to_string()
        } else {
            "no copy of the sign representation occurs".to_string()
        }
    });
    Ok(match cfg.format {
        Format::Json => {
            let value = serde_json::json!({
                "n": gc.n(),
                "parity": gc.parity(),
                "view": gc.view(),
                "partition": lambda,
                "multiplicities": mults
                    .iter()
                    .map(|(k, v)| serde_json::json!({"k": k, "multiplicity": v.to_i64()}))
                    .collect::<Vec<_>>(),
                "note": note,
            });
            let mut s = serde_json::to_string_pretty(&value).expect("json");
            s.push('\n');
            s
        }
        Format::Text | Format::Latex => {
            let mut s = format!("# multiplicity of V{lambda} in {}\n", title(&gc));
            for (k, v) in &mults {
                s.push_str(&format!("k={k}\t{v}\n"));
            }
            if let Some(note) = note {
                s.push_str(&format!("# {note}\n"));
            }
            s
        }
    })
}

/// Summary facts about the antisymmetrizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntisymSummary {
    pub n: usize,
    pub degree: usize,
    pub monomials: usize,
    pub expected_coefficient: String,
    pub nonzero: bool,
    pub coefficients_match: bool,
    pub sign_equivariant: bool,
}

impl AntisymSummary {
    pub fn passed(&self) -> bool {
        self.nonzero && self.coefficients_match && self.sign_equivariant
    }
}

pub fn antisym_summary(n: usize, x: &AlgebraElement) -> Result<AntisymSummary> {
    let k = n / 2;
    let m = factorial(k) * (BigInt::one() << k);
    let coefficients_match = x.terms().values().all(|c| c.magnitude() == m.magnitude());
    let mut sign_equivariant = true;
    for j in 1..n {
        let s = Permutation::adjacent(1, n, j)?;
        if act_permutation(&s, x)? != x.scale(&BigInt::from(-1)) {
            sign_equivariant = false;
        }
    }
    Ok(AntisymSummary {
        n,
        degree: k,
        monomials: x.len(),
        expected_coefficient: format!("±{m}"),
        nonzero: !x.is_zero(),
        coefficients_match,
        sign_equivariant,
    })
}

pub fn cmd_antisym(cfg: &RunConfig) -> Result<String> {
    cfg.validate()?;
    let x = antisymmetrizer(cfg.n, cfg.parity)?;
    let summary = antisym_summary(cfg.n, &x)?;
    Ok(match cfg.format {
        Format::Json => {
            let value = serde_json::json!({"element": x.to_json(), "summary": summary});
            let mut s = serde_json::to_string_pretty(&value).expect("json");
            s.push('\n');
            s
        }
        Format::Text | Format::Latex => format!(
            "{x}\n# degree {}, {} monomials, nonzero: {}, coefficients {}: {}, sign-equivariant: {}\n",
            summary.degree,
            summary.monomials,
            summary.nonzero,
            summary.expected_coefficient,
            summary.coefficients_match,
            summary.sign_equivariant
        ),
    })
}

pub fn cmd_dims(cfg: &RunConfig) -> Result<String> {
    cfg.validate()?;
    let n = cfg.n;
    let dims: Vec<BigInt> = (0..n).map(|k| graded_dimension(n, k)).collect();
    let quotient = if cfg.quotient {
        Some(invariant_dimensions(n, cfg.parity)?)
    } else {
        None
    };
    Ok(match cfg.format {
        Format::Json => {
            let to_vec = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
            let mut value = serde_json::json!({"n": n, "dimensions": to_vec(&dims)});
            if let Some(q) = &quotient {
                value["parity"] = serde_json::json!(cfg.parity);
                value["quotient"] = serde_json::json!(to_vec(q));
            }
            let mut s = serde_json::to_string_pretty(&value).expect("json");
            s.push('\n');
            s
        }
        Format::Text | Format::Latex => {
            let mut s = format!("dimensions\t{}\n", dims.iter().join(", "));
            if let Some(q) = &quotient {
                s.push_str(&format!(
                    "S_{} invariants (d {})\t{}\n",
                    n - 1,
                    cfg.parity,
                    q.iter().join(", ")
                ));
            }
            s
        }
    })
}

/// A named character (`trivial`, `sign`, `standard`, `regular`) or an
/// irreducible given by its partition; without a name, the whole table.
pub fn cmd_character(m: usize, name: Option<&str>, format: Format) -> Result<String> {
    if m == 0 || m > HARD_MAX_N + 1 {
        return domain(format!("--n must lie in 1..={}", HARD_MAX_N + 1));
    }
    let idx = classes(m)?;
    let header = idx.partitions().iter().map(|p| p.to_string()).join("\t");
    let Some(name) = name else {
        let table = character_table(m)?;
        return Ok(match format {
            Format::Json => {
                let rows: BTreeMap<String, Vec<String>> = idx
                    .partitions()
                    .iter()
                    .zip(table.rows())
                    .map(|(l, r)| (l.to_string(), r.iter().map(|v| v.to_string()).collect()))
                    .collect();
                let value = serde_json::json!({"m": m, "classes": idx.partitions(), "rows": rows});
                let mut s = serde_json::to_string_pretty(&value).expect("json");
                s.push('\n');
                s
            }
            _ => {
                let mut s = format!("λ \\ μ\t{header}\n");
                for (l, r) in idx.partitions().iter().zip(table.rows()) {
                    s.push_str(&format!("{l}\t{}\n", r.iter().join("\t")));
                }
                s
            }
        });
    };
    let f: ClassFunction = match name.parse::<crate::character::NamedCharacter>() {
        Ok(named) => crate::character::named_character(m, named)?,
        Err(_) => {
            let lambda: Partition = name.parse()?;
            if lambda.size() != m {
                return domain(format!("{lambda} is not a partition of {m}"));
            }
            irreducible(&lambda)?
        }
    };
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&f.to_json()).expect("json");
            s.push('\n');
            s
        }
        _ => format!(
            "{header}\n{}\n# {}\n",
            f.values().iter().join("\t"),
            f.decompose()
                .map(|d| d.to_string())
                .unwrap_or_else(|e| e.to_string())
        ),
    })
}

// ---------------------------------------------------------------------------
// Golden tables

const GOLDEN: [(&str, &str); 3] = [
    ("table 1", include_str!("../golden/table1.json")),
    ("table 2", include_str!("../golden/table2.json")),
    ("table 3", include_str!("../golden/table3.json")),
];

#[derive(Deserialize)]
struct GoldenFile {
    title: String,
    characters: Vec<serde_json::Value>,
}

/// The published decompositions, as `(table, title, character)`.
pub fn golden_tables() -> Result<Vec<(String, String, GradedCharacter)>> {
    let mut out = Vec::new();
    for (name, text) in GOLDEN {
        let file: GoldenFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
        for value in &file.characters {
            out.push((
                name.to_string(),
                file.title.clone(),
                GradedCharacter::from_json(value)?,
            ));
        }
    }
    Ok(out)
}

fn computed_like(golden: &GradedCharacter) -> Result<GradedCharacter> {
    let n = golden.n();
    match golden.view() {
        View::Canonical => canonical_graded_character(n, golden.parity()),
        View::Extended => extended_character_by_inversion(n, golden.parity()),
        View::Deconed => deconed_graded_character(n),
        View::DeconedExtended => deconed_extended_character(n),
    }
}

pub fn verify_tables(max_n: usize) -> Result<Report> {
    let mut report = Report::new();
    for (name, _, golden) in golden_tables()? {
        if golden.n() > max_n {
            continue;
        }
        let got = computed_like(&golden)?;
        let want = golden.decompose()?;
        let have = got.decompose()?;
        let ok = want == have && golden.is_complete() && got.is_complete();
        let detail = if ok {
            want.iter().join("; ")
        } else {
            format!(
                "got {}; expected {}",
                have.iter().join("; "),
                want.iter().join("; ")
            )
        };
        report.push(
            format!(
                "{name}: n={} {} {}",
                golden.n(),
                golden.parity(),
                golden.view()
            ),
            ok,
            detail,
        );
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Rewriting and characters

fn all_words(n: usize, len: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (1..=n).cartesian_product(1..=n).collect();
    (0..len)
        .map(|_| pairs.iter().copied())
        .multi_cartesian_product()
        .collect()
}

/// Normal forms against products of generators, the third relation, and
/// basis counts.
pub fn verify_rewriting(n: usize) -> Result<Report> {
    let mut report = Report::new();
    let total: BigInt = (0..n)
        .map(|k| {
            let basis = admissible_basis(n, k)?;
            let want = graded_dimension(n, k);
            report.push(
                format!("n={n} k={k}: |admissible basis| = e_k(1..n-1)"),
                BigInt::from(basis.len()) == want,
                format!("{}", basis.len()),
            );
            Ok(want)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    report.push(
        format!("n={n}: total dimension = n!"),
        total == factorial(n),
        total.to_string(),
    );

    for parity in [Parity::Even, Parity::Odd] {
        if n <= 5 {
            let words: Vec<Vec<(usize, usize)>> = (0..=3).flat_map(|l| all_words(n, l)).collect();
            let bad = words
                .par_iter()
                .filter(|w| {
                    let nf = normal_form(w, n, parity).expect("indices in range");
                    let mut prod = AlgebraElement::one(n, parity).expect("n >= 1");
                    for &(i, j) in w.iter() {
                        let g =
                            AlgebraElement::generator(i, j, n, parity).expect("indices in range");
                        prod = prod.multiply(&g).expect("same algebra");
                    }
                    let homogeneous = nf.is_zero() || nf.homogeneous_degree() == Some(w.len());
                    nf != prod || !homogeneous
                })
                .count();
            report.push(
                format!("n={n} {parity}: words of length <= 3 reduce consistently"),
                bad == 0,
                format!("{} words, {bad} mismatches", words.len()),
            );
        }
        if n <= 6 {
            let mut count = 0;
            let mut bad = 0;
            for i in 1..=n {
                for j in 1..=n {
                    for k in j..=n {
                        let lhs = normal_form(&[(i, j), (i, k)], n, parity)?;
                        let rhs = normal_form(&[(k, j), (i, k)], n, parity)?.sub(&normal_form(
                            &[(k, j), (i, j)],
                            n,
                            parity,
                        )?)?;
                        count += 1;
                        if !lhs.sub(&rhs)?.is_zero() {
                            bad += 1;
                        }
                    }
                }
            }
            report.push(
                format!("n={n} {parity}: A_ij A_ik = A_kj (A_ik - A_ij) in normal form"),
                bad == 0,
                format!("{count} instances, {bad} failures"),
            );
        }
        let mut ok = true;
        for (a, b) in (1..=n)
            .tuple_combinations::<(usize, usize)>()
            .tuple_combinations()
        {
            let x = AlgebraElement::generator(a.0, a.1, n, parity)?;
            let y = AlgebraElement::generator(b.0, b.1, n, parity)?;
            let xy = x.multiply(&y)?;
            let yx = y.multiply(&x)?;
            let want = match parity {
                Parity::Even => yx.scale(&BigInt::from(-1)),
                Parity::Odd => yx,
            };
            ok &= xy == want;
        }
        let what = if parity == Parity::Even {
            "anticommute"
        } else {
            "commute"
        };
        report.push(
            format!("n={n} {parity}: degree-one generators {what}"),
            ok,
            "",
        );
    }
    Ok(report)
}

/// Orthonormality, Frobenius reciprocity and one-box branching on `S_m`.
pub fn verify_character_engine(m: usize) -> Result<Report> {
    let mut report = Report::new();
    let parts = partitions_of(m)?;
    let chars: Vec<ClassFunction> = parts.iter().map(irreducible).collect::<Result<_>>()?;
    let mut ortho = true;
    for (a, fa) in chars.iter().enumerate() {
        for (b, fb) in chars.iter().enumerate().skip(a) {
            let ip = fa.inner_product(fb)?;
            ortho &= ip == num_rational::BigRational::from_integer(BigInt::from((a == b) as i64));
        }
    }
    let dims_ok = parts
        .iter()
        .zip(&chars)
        .all(|(l, f)| f.dimension().to_integer() == irreducible_dimension(l));
    report.push(
        format!("S_{m}: irreducible characters are orthonormal"),
        ortho,
        format!("{} irreducibles", parts.len()),
    );
    report.push(
        format!("S_{m}: identity values = hook-length dimensions"),
        dims_ok,
        "",
    );
    if m >= 2 {
        let smaller = partitions_of(m - 1)?;
        let small_chars: Vec<ClassFunction> =
            smaller.iter().map(irreducible).collect::<Result<_>>()?;
        let mut frob = true;
        let mut branch = true;
        for (lambda, f) in parts.iter().zip(&chars) {
            let res = f.restrict()?;
            for (mu, g) in smaller.iter().zip(&small_chars) {
                frob &= g.induce()?.inner_product(f)? == g.inner_product(&res)?;
                let _ = mu;
            }
            let want: Vec<Partition> = branching_boxes(lambda, BoxDirection::Remove);
            let got = res.decompose()?;
            branch &= got.terms.iter().all(|(_, v)| v.is_one())
                && got
                    .terms
                    .iter()
                    .map(|(p, _)| p)
                    .sorted()
                    .eq(want.iter().sorted());
        }
        for (mu, g) in smaller.iter().zip(&small_chars) {
            let want: Vec<Partition> = branching_boxes(mu, BoxDirection::Add);
            let got = g.induce()?.decompose()?;
            branch &= got.terms.iter().all(|(_, v)| v.is_one())
                && got
                    .terms
                    .iter()
                    .map(|(p, _)| p)
                    .sorted()
                    .eq(want.iter().sorted());
        }
        report.push(
            format!("S_{m}: Frobenius reciprocity for Ind/Res from S_{}", m - 1),
            frob,
            "",
        );
        report.push(
            format!("S_{m}: restriction and induction follow one-box branching"),
            branch,
            "",
        );
    }
    Ok(report)
}

pub fn verify_antisymmetrizers(n: usize) -> Result<Report> {
    let mut report = Report::new();
    let x = antisymmetrizer(n, Parity::Odd)?;
    let s = antisym_summary(n, &x)?;
    report.push(
        format!(
            "n={n} odd: antisymmetrizer is nonzero with coefficients {} and spans the sign",
            s.expected_coefficient
        ),
        s.passed(),
        format!("{} monomials in degree {}", s.monomials, s.degree),
    );
    Ok(report)
}

/// Runs one suite (or all of them) for every applicable `n ≤ max_n`.
pub fn run_suite(suite: Suite, max_n: usize) -> Result<Report> {
    if max_n > HARD_MAX_N {
        return Err(Error::ResourceGuard {
            what: "max-n",
            value: max_n,
            max: HARD_MAX_N,
        });
    }
    let mut report = Report::new();
    let both = [Parity::Even, Parity::Odd];
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                report.extend(run_suite(s, max_n)?);
            }
        }
        Suite::Characters => {
            for m in 1..=max_n.max(1) + 1 {
                report.extend(verify_character_engine(m)?);
            }
        }
        Suite::Rewriting => {
            for n in 1..=max_n.max(1) {
                report.extend(verify_rewriting(n)?);
            }
        }
        Suite::Tables => report.extend(verify_tables(max_n)?),
        Suite::Global => {
            for n in 2..=max_n {
                for parity in both {
                    report.extend(verify_global_identities(n, parity)?);
                    if n >= 3 {
                        report.extend(verify_recursion(n, parity)?);
                    }
                }
            }
        }
        Suite::Extended => {
            for n in 1..=max_n.min(HARD_MAX_N - 1) {
                report.extend(verify_extended_relations(n, Parity::Odd)?);
            }
        }
        Suite::Location => {
            for n in 2..=max_n {
                report.extend(verify_locations(n)?);
                report.extend(verify_antisymmetrizers(n)?);
                if n >= 3 {
                    report.extend(verify_quotients(n)?);
                }
            }
        }
        Suite::Lowdegree => {
            for n in 2..=max_n.min(HARD_MAX_N - 1) {
                report.extend(verify_lowdegree_theorems(n)?);
            }
        }
    }
    Ok(report)
}

pub fn render_report(report: &Report, format: Format) -> String {
    let failed = report.failures().count();
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "passed": failed == 0,
                "total": report.len(),
                "failed": failed,
                "checks": report.checks,
            });
            let mut s = serde_json::to_string_pretty(&value).expect("json");
            s.push('\n');
            s
        }
        Format::Text | Format::Latex => {
            format!("{report}{} checks, {failed} failed\n", report.len())
        }
    }
}

// ---------------------------------------------------------------------------
// Character-table cache

pub const CACHE_VERSION: u64 = 1;

#[derive(Serialize, Deserialize)]
struct CachedTable {
    partitions: Vec<Partition>,
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u64,
    tables: BTreeMap<String, CachedTable>,
}

/// Checks a loaded table before trusting it: shape, class order,
/// dimensions and orthonormality.
fn plausible(m: usize, t: &CachedTable) -> Result<bool> {
    let idx = classes(m)?;
    if t.partitions != idx.partitions() || t.rows.len() != idx.len() {
        return Ok(false);
    }
    let rows: Vec<ClassFunction> = t
        .rows
        .iter()
        .map(|r| ClassFunction::from_integers(m, r.clone()))
        .collect::<Result<_>>()?;
    for (a, (lambda, fa)) in idx.partitions().iter().zip(&rows).enumerate() {
        if fa.dimension().to_integer() != irreducible_dimension(lambda) {
            return Ok(false);
        }
        for (b, fb) in rows.iter().enumerate() {
            let want = num_rational::BigRational::from_integer(BigInt::from((a == b) as i64));
            if fa.inner_product(fb)? != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Loads tables from `path`, returning the degrees installed. Missing
/// files, other versions and implausible tables are ignored.
pub fn load_cache(path: &Path) -> Result<Vec<usize>> {
    let Ok(text) = std::fs::read_to_string(path) else {
        return Ok(Vec::new());
    };
    let Ok(file) = serde_json::from_str::<CacheFile>(&text) else {
        return Ok(Vec::new());
    };
    if file.version != CACHE_VERSION {
        return Ok(Vec::new());
    }
    let mut installed = Vec::new();
    for (key, table) in file.tables {
        let Ok(m) = key.parse::<usize>() else {
            continue;
        };
        if m == 0 || m > HARD_MAX_N + 1 || !plausible(m, &table)? {
            continue;
        }
        let rows = table
            .rows
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        if install_character_table(m, rows)? {
            installed.push(m);
        }
    }
    Ok(installed)
}

/// Writes the tables of `S_1, …, S_max` to `path`.
pub fn save_cache(path: &Path, max: usize) -> Result<()> {
    let mut tables = BTreeMap::new();
    for m in 1..=max.min(HARD_MAX_N + 1) {
        let t = character_table(m)?;
        let rows = t
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        v.to_i64()
                            .ok_or_else(|| Error::Domain("character value exceeds 64 bits".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        tables.insert(
            m.to_string(),
            CachedTable {
                partitions: t.classes().partitions().to_vec(),
                rows,
            },
        );
    }
    let file = CacheFile {
        version: CACHE_VERSION,
        tables,
    };
    let text = serde_json::to_string(&file).expect("json");
    std::fs::write(path, text)
        .map_err(|e| Error::Domain(format!("writing {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, parity: Parity, space: Space, view: View) -> RunConfig {
        RunConfig {
            n,
            parity,
            space,
            view,
            ..RunConfig::default()
        }
    }

    #[test]
    fn table_examples() {
        let out = cmd_table(&cfg(3, Parity::Odd, Space::Conf, View::Canonical)).unwrap();
        assert!(
            out.contains("k=0\t(3)\nk=1\t(2,1) + (1,1,1)\nk=2\t(2,1)\n"),
            "{out}"
        );
        let out = cmd_table(&cfg(4, Parity::Even, Space::Deconed, View::Canonical)).unwrap();
        assert!(
            out.contains("k=0\t(4)\nk=1\t(3,1) + (2,2)\nk=2\t(3,1) + (2,1,1)\n"),
            "{out}"
        );
        let out = cmd_table(&cfg(2, Parity::Even, Space::Conf, View::Extended)).unwrap();
        assert!(out.contains("k=0\t(3)\nk=1\t(3)\n"), "{out}");
    }

    #[test]
    fn latex_uses_tuples() {
        let mut c = cfg(4, Parity::Even, Space::Conf, View::Canonical);
        c.format = Format::Latex;
        let out = cmd_table(&c).unwrap();
        assert!(
            out.contains("$2(d-1)$ & $2\\,V_{(3,1)} \\oplus V_{(2,2)} \\oplus V_{(2,1,1)}$"),
            "{out}"
        );
        assert!(!out.contains("yng"));
    }

    #[test]
    fn json_round_trips() {
        let mut c = cfg(4, Parity::Odd, Space::Conf, View::Extended);
        c.format = Format::Json;
        let out = cmd_table(&c).unwrap();
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        let gc = GradedCharacter::from_json(&value).unwrap();
        assert_eq!(render_graded(&gc, Format::Json).unwrap(), out);
    }

    #[test]
    fn goldens_parse() {
        let all = golden_tables().unwrap();
        assert_eq!(all.len(), 7 + 7 + 7);
        assert!(all.iter().all(|(_, _, g)| g.is_complete()));
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::EACH {
            let r = run_suite(suite, 4).unwrap();
            assert!(r.all_passed(), "{suite}: {r}");
            assert!(!r.is_empty());
        }
        assert!(run_suite(Suite::All, 2).unwrap().all_passed());
        assert!(run_suite(Suite::All, 9).is_err());
    }

    #[test]
    fn dims_examples() {
        let out = cmd_dims(&cfg(4, Parity::Odd, Space::Conf, View::Canonical)).unwrap();
        assert_eq!(out, "dimensions\t1, 6, 11, 6\n");
        let mut c = cfg(5, Parity::Odd, Space::Conf, View::Canonical);
        c.quotient = true;
        assert!(cmd_dims(&c).unwrap().ends_with("\t1, 1, 1, 1, 1\n"));
        c.parity = Parity::Even;
        assert!(cmd_dims(&c).unwrap().ends_with("\t1, 2, 2, 2, 1\n"));
    }

    #[test]
    fn locate_examples() {
        let out = cmd_locate(
            &cfg(6, Parity::Odd, Space::Conf, View::Canonical),
            Rep::Sign,
        )
        .unwrap();
        assert!(out.contains("k=2\t0\nk=3\t1\nk=4\t0\n"), "{out}");
        let out = cmd_locate(
            &cfg(5, Parity::Odd, Space::Conf, View::Canonical),
            Rep::Standard,
        )
        .unwrap();
        assert!(
            out.contains("k=0\t0\nk=1\t1\nk=2\t1\nk=3\t1\nk=4\t1\n"),
            "{out}"
        );
        let out = cmd_locate(
            &cfg(5, Parity::Odd, Space::Conf, View::Canonical),
            Rep::StandardSign,
        )
        .unwrap();
        assert!(out.contains("k=2\t1\nk=3\t2\nk=4\t1\n"), "{out}");
        let out = cmd_locate(
            &cfg(5, Parity::Even, Space::Conf, View::Canonical),
            Rep::Sign,
        )
        .unwrap();
        assert!(out.contains("no copy of the sign"), "{out}");
    }

    #[test]
    fn antisym_examples() {
        let out = cmd_antisym(&cfg(2, Parity::Odd, Space::Conf, View::Canonical)).unwrap();
        assert!(out.starts_with("2*A[1,2]\n"));
        let out = cmd_antisym(&cfg(4, Parity::Odd, Space::Conf, View::Canonical)).unwrap();
        assert!(out.contains("coefficients ±8: true"));
        assert!(cmd_antisym(&cfg(4, Parity::Even, Space::Conf, View::Canonical)).is_err());
    }

    #[test]
    fn character_command() {
        let out = cmd_character(3, Some("(2,1)"), Format::Text).unwrap();
        assert_eq!(out, "(3)\t(2,1)\t(1,1,1)\n-1\t0\t2\n# (2,1)\n");
        assert!(cmd_character(4, Some("(2,1)"), Format::Text).is_err());
        assert!(cmd_character(3, None, Format::Text)
            .unwrap()
            .starts_with("λ \\ μ"));
    }

    #[test]
    fn cache_round_trip_and_rejection() {
        let dir = std::env::temp_dir().join(format!("cohomlab-cache-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("tables.json");
        save_cache(&path, 5).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["version"], 1);
        assert!(value["tables"]["5"]["rows"].is_array());
        // Tables are already published in this process, so nothing new lands.
        assert!(load_cache(&path).unwrap().is_empty());
        std::fs::write(&path, text.replace("\"version\":1", "\"version\":0")).unwrap();
        assert!(load_cache(&path).unwrap().is_empty());
        let bad = CachedTable {
            partitions: partitions_of(3).unwrap(),
            rows: vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 2]],
        };
        assert!(!plausible(3, &bad).unwrap());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn config_validation() {
        assert!(cfg(1, Parity::Odd, Space::Conf, View::Canonical)
            .validate()
            .is_err());
        assert!(cfg(9, Parity::Odd, Space::Conf, View::Canonical)
            .validate()
            .is_err());
        assert!(cfg(4, Parity::Odd, Space::Conf, View::Deconed)
            .validate()
            .is_err());
        assert_eq!("standard-sign".parse::<Rep>().unwrap(), Rep::StandardSign);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
