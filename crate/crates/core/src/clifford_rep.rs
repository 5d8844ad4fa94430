//! Integer generator matrices for `Cl_{r,s}` on a minimal admissible module,
//! and the classification table of real Clifford algebras.
//!
//! The module is realized as a left ideal `Cl · E` of the algebra itself,
//! where `E = Π_j (1 + σ_j P_j) / 2` for commuting, independent involutions
//! `P_j` that preserve the norm of every monomial. The ideal has a basis of
//! coset sums `b_C = m_C · E`, one per coset of the subgroup of monomials
//! generated by the `P_j`, with `m_C` the shortlex-least monomial of the
//! coset. Left multiplication by `J_i` permutes these up to sign, so every
//! generator is a signed permutation matrix, and the form
//! `⟨b_C, b_C⟩ = Π_{i∈m_C} ε_i` makes each `J_i` skew.
//!
//! The identity coset is always coordinate 1, so when the `P_j` are the
//! involutions that pin the initial vector, `v = e_1`.

use std::fmt;

use serde::Serialize;

use crate::exactlin::{is_signed_permutation, metric_adjoint, DiagonalForm, IntMatrix};
use crate::report::{finding, CheckKind, Location, Report};
use crate::words::{
    is_isometric_involution, word_mul, words_commute, CliffordWord, Involution, Signature,
    StabilizerGroup,
};
use crate::{Error, Result};

/// The division algebra of a matrix-algebra cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Field {
    Real,
    Complex,
    Quaternion,
}

impl Field {
    fn real_dim(self) -> usize {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
            Field::Quaternion => 4,
        }
    }

    fn symbol(self) -> char {
        match self {
            Field::Real => 'ℝ',
            Field::Complex => 'ℂ',
            Field::Quaternion => 'ℍ',
        }
    }
}

/// A cell of the classification table: `F(m)` or `F²(m) = F(m) ⊕ F(m)`,
/// plus the flag for "minimal admissible module is a double of the
/// irreducible".
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CliffordType {
    pub field: Field,
    pub twofold: bool,
    pub size: usize,
    pub doubled: bool,
    /// Set when the printed cell disagrees with the standard classification.
    pub suspected_typo: Option<&'static str>,
}

impl CliffordType {
    /// Label such as `ℝ(16)`, `ℂ`, `ℍ²(2)`.
    pub fn descriptor(&self) -> String {
        self.to_string()
    }

    /// Real dimension of an irreducible module.
    pub fn irreducible_dim(&self) -> usize {
        self.field.real_dim() * self.size
    }
}

impl fmt::Display for CliffordType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.symbol())?;
        if self.twofold {
            f.write_str("²")?;
        }
        if self.size > 1 {
            write!(f, "({})", self.size)?;
        }
        Ok(())
    }
}

/// Rows are `s = 0..=8`, columns `r = 0..=8`. Codes: field letter, `2x` for a
/// twofold sum, the matrix size, and `*` for a doubled cell.
const CLASSIFICATION: [[&str; 9]; 9] = [
    ["R1", "C1", "H1", "H2x1", "H2", "C4", "R8", "R2x8", "R16"],
    [
        "R2x1*", "R2*", "C2*", "H2", "H2x2*", "H4", "C8", "R16", "R2x16*",
    ],
    [
        "R2*", "R2x2*", "R4*", "C4", "H4", "H2x4", "H8", "C16", "R32*",
    ],
    [
        "C2*", "R4*", "R2x4*", "R8", "C8", "H8", "H2x8*", "H16", "C32*",
    ],
    [
        "H2", "C4", "R8", "R2x8", "R16", "C16", "H16", "H2x16", "H32",
    ],
    [
        "H2x2*", "H4", "C8", "R16", "R2x16*", "R32*", "C32*", "H32", "H2x32*",
    ],
    [
        "H4", "H2x4", "H8", "C16", "R32*", "R2x32*", "R64*", "C64", "H64",
    ],
    [
        "C8", "H8", "H2x8*", "H16", "C32*", "R64*", "R2x64*", "R128", "C128",
    ],
    [
        "R16", "C16", "H16", "H2x16", "H32", "C64", "R128", "R2x128", "R256",
    ],
];

const SEVEN_ZERO_NOTE: &str =
    "printed as ℝ(8); the standard classification of Cl(7,0) is ℝ²(8), stored here";

fn parse_cell(code: &str) -> (Field, bool, usize, bool) {
    let doubled = code.ends_with('*');
    let code = code.trim_end_matches('*');
    let field = match &code[..1] {
        "R" => Field::Real,
        "C" => Field::Complex,
        _ => Field::Quaternion,
    };
    let rest = &code[1..];
    let (twofold, size) = match rest.strip_prefix("2x") {
        Some(size) => (true, size),
        None => (false, rest),
    };
    (
        field,
        twofold,
        size.parse().expect("malformed classification cell"),
        doubled,
    )
}

/// The classification cell for `Cl_{r,s}`, `0 ≤ r, s ≤ 8`.
pub fn clifford_type(r: usize, s: usize) -> Result<CliffordType> {
    if r > 8 || s > 8 {
        return Err(Error::SignatureRange { r, s });
    }
    let (field, twofold, size, doubled) = parse_cell(CLASSIFICATION[s][r]);
    Ok(CliffordType {
        field,
        twofold,
        size,
        doubled,
        suspected_typo: (r == 7 && s == 0).then_some(SEVEN_ZERO_NOTE),
    })
}

/// Dimensions stated explicitly for the tabulated signatures.
const STATED_DIMENSIONS: &[((usize, usize), usize)] = &[
    ((1, 0), 2),
    ((0, 1), 2),
    ((2, 0), 4),
    ((1, 1), 4),
    ((0, 2), 4),
    ((3, 0), 4),
    ((1, 2), 4),
    ((2, 1), 8),
    ((0, 3), 8),
    ((4, 0), 8),
    ((3, 1), 8),
    ((2, 2), 8),
    ((1, 3), 8),
    ((0, 4), 8),
    ((5, 0), 8),
    ((3, 2), 8),
    ((2, 3), 8),
    ((1, 4), 8),
    ((4, 1), 16),
    ((0, 5), 16),
    ((6, 0), 8),
    ((3, 3), 8),
    ((2, 4), 8),
    ((5, 1), 16),
    ((4, 2), 16),
    ((1, 5), 16),
    ((0, 6), 16),
    ((7, 0), 8),
    ((3, 4), 8),
    ((0, 7), 16),
    ((8, 0), 16),
    ((7, 1), 16),
    ((4, 4), 16),
    ((3, 5), 16),
    ((0, 8), 16),
];

/// Dimension of the minimal admissible module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleDimension {
    pub dim: usize,
    /// True when the value comes from the classification table alone and no
    /// explicit statement exists for this signature.
    pub derived: bool,
}

/// Irreducible dimension from the classification, doubled for flagged cells.
pub fn classified_dimension(sig: Signature) -> usize {
    let t = clifford_type(sig.r(), sig.s()).expect("signature within table");
    let dim = t.irreducible_dim();
    if t.doubled {
        2 * dim
    } else {
        dim
    }
}

pub fn minimal_admissible_dimension(sig: Signature) -> ModuleDimension {
    let stated = STATED_DIMENSIONS
        .iter()
        .find(|((r, s), _)| (*r, *s) == (sig.r(), sig.s()))
        .map(|&(_, d)| d);
    match stated {
        Some(dim) => ModuleDimension {
            dim,
            derived: false,
        },
        None => ModuleDimension {
            dim: classified_dimension(sig),
            derived: true,
        },
    }
}

/// Integer generators `J_1..J_{r+s}` on a minimal admissible module.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorSet {
    pub sig: Signature,
    pub dim_v: usize,
    pub gens: Vec<IntMatrix>,
    pub form_v: DiagonalForm,
    pub form_z: DiagonalForm,
    /// Involutions cutting the module out of the regular representation.
    pub involutions: Vec<Involution>,
    /// `m_C` for each basis vector `b_C = m_C · E`.
    pub coset_words: Vec<CliffordWord>,
}

/// Builds generators using involutions found by search alone.
pub fn build_generators(sig: Signature) -> Result<GeneratorSet> {
    GeneratorSet::with_involutions(sig, &[])
}

impl GeneratorSet {
    /// Builds generators on the ideal cut by `seeds` (with their eigensigns),
    /// extended by further involutions until the dimension is minimal.
    pub fn with_involutions(sig: Signature, seeds: &[Involution]) -> Result<GeneratorSet> {
        let target = minimal_admissible_dimension(sig).dim;
        let n = sig.n();
        let k = (1usize << n) / target;
        if k == 0 || !(1usize << n).is_multiple_of(target) || !k.is_power_of_two() {
            return Err(Error::Construction(format!(
                "module dimension {target} does not divide 2^{n}"
            )));
        }
        let needed = k.trailing_zeros() as usize;
        for seed in seeds {
            if !is_isometric_involution(seed.word, sig) {
                return Err(Error::Config(format!(
                    "{} is not a norm-preserving involution in {sig}",
                    seed.word
                )));
            }
        }
        if seeds.len() > needed {
            return Err(Error::Config(format!(
                "{} involutions given but a {target}-dimensional module in {sig} admits {needed}",
                seeds.len()
            )));
        }
        let involutions = extend_involutions(sig, seeds, needed).ok_or_else(|| {
            Error::Construction(format!(
                "no {needed} commuting involutions extend the seeds in {sig}"
            ))
        })?;
        let gs = Self::from_ideal(sig, involutions)?;
        let report = verify_generators(&gs);
        if !report.all_passed() {
            let first = report
                .findings
                .first()
                .map(ToString::to_string)
                .unwrap_or_default();
            return Err(Error::Construction(format!(
                "generators for {sig} fail: {first}"
            )));
        }
        Ok(gs)
    }

    fn from_ideal(sig: Signature, involutions: Vec<Involution>) -> Result<GeneratorSet> {
        let n = sig.n();
        let group = StabilizerGroup::new(&involutions, sig)?;
        if !group.is_consistent() {
            return Err(Error::Config("involutions force the zero ideal".into()));
        }
        let masks: Vec<u16> = group.elements().iter().map(|(w, _)| w.mask()).collect();

        // Shortlex order over monomials: length, then letter sequence.
        let mut order: Vec<u16> = (0..(1u16 << n)).collect();
        order.sort_by_key(|&m| (m.count_ones(), CliffordWord::from_mask(1, m).letters()));
        let mut coset_of = vec![usize::MAX; 1 << n];
        let mut reps = Vec::new();
        for m in order {
            if coset_of[m as usize] != usize::MAX {
                continue;
            }
            for &h in &masks {
                coset_of[(m ^ h) as usize] = reps.len();
            }
            reps.push(CliffordWord::from_mask(1, m));
        }
        let dim = reps.len();

        let mut gens = Vec::with_capacity(n);
        for i in 1..=n {
            let mut m = IntMatrix::zeros(dim, dim);
            for (c, &rep) in reps.iter().enumerate() {
                // J_i m_C = c1 · e_M, and e_M = c2 · m_{C'} · g with g·E = λ E.
                let image = word_mul(CliffordWord::generator(i), rep, sig)?;
                let target = coset_of[image.mask() as usize];
                let h = image.mask() ^ reps[target].mask();
                let &(g, lambda) = group
                    .elements()
                    .iter()
                    .find(|(g, _)| g.mask() == h)
                    .expect("coset difference lies in the subgroup");
                let split = word_mul(reps[target], g, sig)?;
                let sign = image.sign() * split.sign() * lambda;
                m.set(target, c, sign.into());
            }
            gens.push(m);
        }
        let form_v = DiagonalForm::new(reps.iter().map(|w| w.norm(sig)).collect())?;
        Ok(GeneratorSet {
            sig,
            dim_v: dim,
            gens,
            form_v,
            form_z: DiagonalForm::with_signature(sig.r(), sig.s())?,
            involutions,
            coset_words: reps,
        })
    }

    /// `J_i`, 1-based.
    pub fn gen(&self, i: usize) -> &IntMatrix {
        &self.gens[i - 1]
    }

    /// Matrix of a word, as the ordered product of generator matrices.
    pub fn word_matrix(&self, w: CliffordWord) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.dim_v);
        for l in w.letters() {
            acc = &acc * self.gen(l);
        }
        if w.sign() < 0 {
            -&acc
        } else {
            acc
        }
    }

    /// Pretty JSON for debugging.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("generator set serializes")
    }
}

/// Adds involutions to `seeds` until there are `needed`, preferring the
/// shortlex-first candidate at each step and backtracking if stuck.
fn extend_involutions(
    sig: Signature,
    seeds: &[Involution],
    needed: usize,
) -> Option<Vec<Involution>> {
    let n = sig.n();
    let mut candidates: Vec<CliffordWord> = (1u16..(1 << n))
        .map(|m| CliffordWord::from_mask(1, m))
        .filter(|&w| is_isometric_involution(w, sig))
        .collect();
    candidates.sort_by_key(|w| (w.len(), w.letters()));

    let mut chosen: Vec<Involution> = Vec::new();
    for seed in seeds {
        if !admissible(&chosen, seed.word) {
            return None;
        }
        chosen.push(*seed);
    }
    if dfs(&candidates, 0, &mut chosen, needed) {
        Some(chosen)
    } else {
        None
    }
}

fn dfs(
    candidates: &[CliffordWord],
    from: usize,
    chosen: &mut Vec<Involution>,
    needed: usize,
) -> bool {
    if chosen.len() == needed {
        return true;
    }
    for (idx, &w) in candidates.iter().enumerate().skip(from) {
        if admissible(chosen, w) {
            chosen.push(Involution::new(w, 1));
            if dfs(candidates, idx + 1, chosen, needed) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Commutes with every chosen word and lies outside their span.
fn admissible(chosen: &[Involution], w: CliffordWord) -> bool {
    chosen.iter().all(|c| words_commute(c.word, w)) && !in_span(chosen, w.mask())
}

fn in_span(chosen: &[Involution], mask: u16) -> bool {
    let k = chosen.len();
    (0..(1u32 << k)).any(|subset| {
        let m = chosen
            .iter()
            .enumerate()
            .filter(|(j, _)| subset & (1 << j) != 0)
            .fold(0u16, |acc, (_, inv)| acc ^ inv.word.mask());
        m == mask
    })
}

/// Checks the Clifford relations, skewness, signed-permutation shape and the
/// form signature of a generator set.
pub fn verify_generators(gs: &GeneratorSet) -> Report {
    let mut report = Report::default();
    let n = gs.gens.len();
    let dim = gs.form_v.len();

    let mut shape = Vec::new();
    if n != gs.sig.n() {
        shape.push(finding(
            CheckKind::CliffordRelations,
            Location::Whole,
            format!("{n} generators for signature {}", gs.sig),
        ));
    }
    for (idx, m) in gs.gens.iter().enumerate() {
        if m.rows() != dim || m.cols() != dim {
            shape.push(finding(
                CheckKind::CliffordRelations,
                Location::Operator {
                    i: idx + 1,
                    j: idx + 1,
                    row: 0,
                    col: 0,
                },
                format!(
                    "J{} is {}x{}, module has dimension {dim}",
                    idx + 1,
                    m.rows(),
                    m.cols()
                ),
            ));
        }
    }
    if !shape.is_empty() {
        report.record(CheckKind::CliffordRelations, shape);
        return report;
    }

    report.record(
        CheckKind::CliffordRelations,
        clifford_findings(&gs.gens, gs.sig),
    );

    let mut skew = Vec::new();
    for (idx, m) in gs.gens.iter().enumerate() {
        let adj = metric_adjoint(m, &gs.form_v).expect("square, matching form");
        let sum = adj.checked_add(m).expect("same shape");
        if let Some((row, col)) = first_nonzero(&sum) {
            skew.push(finding(
                CheckKind::Skewness,
                Location::Operator {
                    i: idx + 1,
                    j: idx + 1,
                    row,
                    col,
                },
                format!("J{} is not skew for the module form", idx + 1),
            ));
        }
    }
    report.record(CheckKind::Skewness, skew);

    let perm = gs
        .gens
        .iter()
        .enumerate()
        .filter(|(_, m)| !is_signed_permutation(m))
        .map(|(idx, _)| {
            finding(
                CheckKind::SignedPermutation,
                Location::Operator {
                    i: idx + 1,
                    j: idx + 1,
                    row: 0,
                    col: 0,
                },
                format!("J{} is not a signed permutation", idx + 1),
            )
        })
        .collect();
    report.record(CheckKind::SignedPermutation, perm);

    let (p, q) = gs.form_v.signature();
    let expected = if gs.sig.s() == 0 {
        (dim, 0)
    } else {
        (dim / 2, dim / 2)
    };
    let sig_findings = if (p, q) == expected && (gs.sig.s() == 0 || dim.is_multiple_of(2)) {
        Vec::new()
    } else {
        vec![finding(
            CheckKind::FormSignature,
            Location::Whole,
            format!("module form has signature ({p},{q}), expected {expected:?}"),
        )]
    };
    report.record(CheckKind::FormSignature, sig_findings);
    report
}

/// `J_i J_j + J_j J_i = −2 ε_i δ_ij Id`, reporting the first bad entry per pair.
pub(crate) fn clifford_findings(gens: &[IntMatrix], sig: Signature) -> Vec<crate::report::Finding> {
    let mut out = Vec::new();
    let dim = gens.first().map_or(0, IntMatrix::rows);
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let ij = &gens[i] * &gens[j];
            let ji = &gens[j] * &gens[i];
            let mut anti = ij.checked_add(&ji).expect("same shape");
            if i == j {
                let target = 2 * i64::from(sig.epsilon(i + 1));
                for d in 0..dim {
                    let v = anti.get(d, d) + target;
                    anti.set(d, d, v);
                }
            }
            if let Some((row, col)) = first_nonzero(&anti) {
                let what = if i == j {
                    format!(
                        "J{}² is not {}Id",
                        i + 1,
                        if sig.epsilon(i + 1) > 0 { "-" } else { "+" }
                    )
                } else {
                    format!("J{} and J{} do not anticommute", i + 1, j + 1)
                };
                out.push(finding(
                    CheckKind::CliffordRelations,
                    Location::Operator {
                        i: i + 1,
                        j: j + 1,
                        row,
                        col,
                    },
                    what,
                ));
            }
        }
    }
    out
}

/// First nonzero entry, 1-based.
pub(crate) fn first_nonzero(m: &IntMatrix) -> Option<(usize, usize)> {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !num_traits::Zero::is_zero(m.get(r, c)) {
                return Some((r + 1, c + 1));
            }
        }
    }
    None
}
