//! Per-signature configurations, initial-vector search and the integral basis
//! `v_a = W_a · v` of the module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::clifford_rep::{minimal_admissible_dimension, GeneratorSet};
use crate::config_data::{RawConfig, CONFIGS};
use crate::exactlin::{column_space_basis, form_pair, DiagonalForm, IntMatrix, IntVector};
use crate::words::{
    is_isometric_involution, word_inverse, word_mul, word_square, words_commute, CliffordWord,
    Involution, Signature, StabilizerGroup,
};
use crate::{Error, Result};

/// Involutions with eigensigns pinning `v`, plus words `U` with `⟨v, U v⟩ = 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvolutionSpec {
    pub involutions: Vec<Involution>,
    pub zero_pairings: Vec<CliffordWord>,
}

impl InvolutionSpec {
    /// Checks that every word is an involution and that they commute.
    pub fn validate(&self, sig: Signature) -> Result<()> {
        StabilizerGroup::new(&self.involutions, sig).map(|_| ())
    }

    pub fn group(&self, sig: Signature) -> Result<StabilizerGroup> {
        StabilizerGroup::new(&self.involutions, sig)
    }
}

/// Ordered basis words; `v_a = W_a · v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisSpec {
    pub words: Vec<CliffordWord>,
}

impl BasisSpec {
    pub fn new(words: Vec<CliffordWord>, sig: Signature) -> Result<Self> {
        let want = minimal_admissible_dimension(sig).dim;
        if words.len() != want {
            return Err(Error::Config(format!(
                "{} basis words for a {want}-dimensional module",
                words.len()
            )));
        }
        if words.first() != Some(&CliffordWord::IDENTITY) {
            return Err(Error::Config(
                "first basis word must be the identity".into(),
            ));
        }
        Ok(BasisSpec { words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `η_a = Π_{i∈W_a} ε_i`.
    pub fn norms(&self, sig: Signature) -> Vec<i8> {
        self.words.iter().map(|w| w.norm(sig)).collect()
    }
}

/// A stated identity `lhs · v = rhs · v`, optionally claimed to equal a
/// product of the named involutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    /// 1-based indices into the involution list.
    pub via: Option<Vec<usize>>,
    /// How the involution product is printed, when it differs from `via`.
    pub printed_via: Option<String>,
    pub lhs: CliffordWord,
    pub rhs: CliffordWord,
}

/// Outcome of checking one relation against the word calculus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    /// `σ` with `rhs⁻¹·lhs · v = σ v`, or `None` if the involutions do not
    /// force it. The relation holds iff this is `Some(1)`.
    pub resolved: Option<i8>,
    /// Whether the named involution product equals `lhs` as a word.
    pub via_matches: Option<bool>,
}

impl RelationCheck {
    pub fn confirmed(&self) -> bool {
        self.resolved == Some(1) && self.via_matches != Some(false)
    }
}

impl Relation {
    /// `rhs⁻¹ · lhs`, the word that must fix `v`.
    pub fn fixing_word(&self, sig: Signature) -> Result<CliffordWord> {
        word_mul(word_inverse(self.rhs, sig)?, self.lhs, sig)
    }

    pub fn check(&self, spec: &InvolutionSpec, sig: Signature) -> Result<RelationCheck> {
        let resolved = spec.group(sig)?.resolve(self.fixing_word(sig)?)?;
        let via_matches = match &self.via {
            None => None,
            Some(idx) => {
                let mut acc = CliffordWord::IDENTITY;
                for &i in idx {
                    let inv = spec.involutions.get(i - 1).ok_or_else(|| {
                        Error::Config(format!("relation names P{i}, which is not defined"))
                    })?;
                    acc = word_mul(acc, inv.word, sig)?;
                }
                Some(acc == self.lhs)
            }
        };
        Ok(RelationCheck {
            resolved,
            via_matches,
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(idx) = &self.via {
            let names: String = idx.iter().map(|i| format!("P{i}")).collect();
            write!(f, "{names}v = ")?;
        }
        write!(f, "{}v = ", self.lhs)?;
        if self.rhs.is_identity() {
            f.write_str("v")
        } else {
            write!(f, "{}v", self.rhs)
        }
    }
}

/// Where a configuration came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConfigOrigin {
    /// Written out for this signature, with its table number.
    Tabulated { table: u32 },
    /// Inferred from an isomorphic partner sharing the given table.
    Inferred { table: u32 },
    /// Found by search.
    Auto,
}

/// Everything needed to realize a basis for one signature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureConfig {
    pub sig: Signature,
    pub involutions: InvolutionSpec,
    pub basis: BasisSpec,
    pub relations: Vec<Relation>,
    pub origin: ConfigOrigin,
}

impl SignatureConfig {
    pub fn table_number(&self) -> Option<u32> {
        match self.origin {
            ConfigOrigin::Tabulated { table } | ConfigOrigin::Inferred { table } => Some(table),
            ConfigOrigin::Auto => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

fn parse_via(text: &str) -> Result<Vec<usize>> {
    text.split('P')
        .skip(1)
        .map(|p| {
            p.parse()
                .map_err(|_| Error::Parse(format!("involution product {text:?}")))
        })
        .collect()
}

fn load(raw: &RawConfig) -> Result<SignatureConfig> {
    let sig = Signature::new(raw.r, raw.s)?;
    let involutions = raw
        .involutions
        .iter()
        .map(|t| Ok(Involution::new(t.parse()?, 1)))
        .collect::<Result<Vec<_>>>()?;
    let zero_pairings = raw
        .zero_pairings
        .iter()
        .map(|t| t.parse())
        .collect::<Result<Vec<_>>>()?;
    let spec = InvolutionSpec {
        involutions,
        zero_pairings,
    };
    spec.validate(sig)?;
    let words = raw
        .basis
        .iter()
        .map(|letters| CliffordWord::from_letters(1, letters, sig))
        .collect::<Result<Vec<_>>>()?;
    let relations = raw
        .relations
        .iter()
        .map(|r| {
            Ok(Relation {
                via: r.via.map(parse_via).transpose()?,
                printed_via: r.printed_via.map(str::to_string),
                lhs: r.lhs.parse()?,
                rhs: r.rhs.parse()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SignatureConfig {
        sig,
        involutions: spec,
        basis: BasisSpec::new(words, sig)?,
        relations,
        origin: if raw.derived {
            ConfigOrigin::Inferred { table: raw.table }
        } else {
            ConfigOrigin::Tabulated { table: raw.table }
        },
    })
}

/// The written-out configuration for a tabulated signature.
pub fn paper_config(sig: Signature) -> Result<SignatureConfig> {
    let raw = CONFIGS
        .iter()
        .find(|c| (c.r, c.s) == (sig.r(), sig.s()))
        .ok_or(Error::NotTabulated(sig))?;
    load(raw)
}

/// Signatures with a written-out configuration, in table order.
pub fn tabulated_signatures() -> Vec<Signature> {
    CONFIGS
        .iter()
        .map(|c| Signature::new(c.r, c.s).expect("embedded signature in range"))
        .collect()
}

/// Greedy search over canonical words of length 3 and 4 squaring to `+1`:
/// each is added if it commutes with every chosen word and is not a product
/// of them. Stops when no candidate remains or the module dimension would
/// drop below the minimal admissible one.
pub fn auto_involutions(sig: Signature) -> InvolutionSpec {
    let n = sig.n();
    let room = n - minimal_admissible_dimension(sig).dim.trailing_zeros() as usize;
    let mut candidates: Vec<CliffordWord> = (1u16..(1 << n))
        .map(|m| CliffordWord::from_mask(1, m))
        .filter(|w| matches!(w.len(), 3 | 4))
        .filter(|&w| word_square(w, sig).ok() == Some(1))
        .collect();
    candidates.sort_by_key(|w| (w.len(), w.letters()));

    let mut chosen: Vec<Involution> = Vec::new();
    let mut span: Vec<u16> = vec![0];
    for w in candidates {
        if chosen.len() == room {
            break;
        }
        if span.contains(&w.mask()) || !chosen.iter().all(|c| words_commute(c.word, w)) {
            continue;
        }
        debug_assert!(is_isometric_involution(w, sig));
        span = span.iter().flat_map(|&m| [m, m ^ w.mask()]).collect();
        chosen.push(Involution::new(w, 1));
    }
    InvolutionSpec {
        involutions: chosen,
        zero_pairings: Vec::new(),
    }
}

/// Automatic configuration: searched involutions and, as basis words, the
/// shortlex-least representative of each coset of the involution group.
pub fn auto_config(sig: Signature) -> Result<SignatureConfig> {
    let spec = auto_involutions(sig);
    let group = spec.group(sig)?;
    let masks: Vec<u16> = group.elements().iter().map(|(w, _)| w.mask()).collect();
    let mut order: Vec<u16> = (0..(1u16 << sig.n())).collect();
    order.sort_by_key(|&m| (m.count_ones(), CliffordWord::from_mask(1, m).letters()));
    let mut seen = vec![false; 1 << sig.n()];
    let mut words = Vec::new();
    for m in order {
        if seen[m as usize] {
            continue;
        }
        for &h in &masks {
            seen[(m ^ h) as usize] = true;
        }
        words.push(CliffordWord::from_mask(1, m));
    }
    Ok(SignatureConfig {
        sig,
        basis: BasisSpec::new(words, sig)?,
        involutions: spec,
        relations: Vec::new(),
        origin: ConfigOrigin::Auto,
    })
}

/// A named strategy producing a configuration for a signature.
pub trait ConfigSource: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn config(&self, sig: Signature) -> Result<SignatureConfig>;
}

/// Written-out configurations only.
pub struct PaperConfigSource;

impl ConfigSource for PaperConfigSource {
    fn name(&self) -> &'static str {
        "paper"
    }

    fn description(&self) -> &'static str {
        "compiled-in involutions and basis words for tabulated signatures"
    }

    fn config(&self, sig: Signature) -> Result<SignatureConfig> {
        paper_config(sig)
    }
}

/// Searched configurations for any signature.
pub struct AutoConfigSource;

impl ConfigSource for AutoConfigSource {
    fn name(&self) -> &'static str {
        "auto"
    }

    fn description(&self) -> &'static str {
        "greedy length-3/4 involutions with shortlex coset basis words"
    }

    fn config(&self, sig: Signature) -> Result<SignatureConfig> {
        auto_config(sig)
    }
}

/// Config sources by name.
pub struct ConfigRegistry {
    sources: BTreeMap<&'static str, Box<dyn ConfigSource>>,
}

impl Default for ConfigRegistry {
    fn default() -> Self {
        let mut registry = ConfigRegistry::empty();
        registry.register(Box::new(PaperConfigSource));
        registry.register(Box::new(AutoConfigSource));
        registry
    }
}

impl ConfigRegistry {
    pub fn empty() -> Self {
        ConfigRegistry {
            sources: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, source: Box<dyn ConfigSource>) {
        self.sources.insert(source.name(), source);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ConfigSource> {
        self.sources.get(name).map(Box::as_ref).ok_or_else(|| {
            Error::Config(format!(
                "unknown config source {name:?}; available: {}",
                self.names().join(", ")
            ))
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.sources.keys().copied().collect()
    }
}

/// Generators whose defining ideal is cut by the configuration's own
/// involutions, so that `e_1` is fixed by them.
pub fn generators_for(config: &SignatureConfig) -> Result<GeneratorSet> {
    GeneratorSet::with_involutions(config.sig, &config.involutions.involutions)
}

fn projector(gs: &GeneratorSet, spec: &InvolutionSpec) -> IntMatrix {
    let id = IntMatrix::identity(gs.dim_v);
    spec.involutions.iter().fold(id.clone(), |acc, inv| {
        let p = gs.word_matrix(inv.word).scale(inv.eigensign.into());
        &acc * &id.checked_add(&p).expect("same shape")
    })
}

/// Integer basis of `∩_i ker(M(P_i) − σ_i Id)`.
pub fn fixed_subspace(gs: &GeneratorSet, spec: &InvolutionSpec) -> Result<Vec<IntVector>> {
    spec.validate(gs.sig)?;
    let basis = column_space_basis(&projector(gs, spec));
    if basis.is_empty() {
        return Err(Error::ZeroSubspace(format!(
            "involutions {} have no common eigenvector in this module for {}",
            spec.involutions
                .iter()
                .map(|i| format!("{}={:+}", i.word, i.eigensign))
                .collect::<Vec<_>>()
                .join(", "),
            gs.sig
        )));
    }
    Ok(basis)
}

/// Most orbit vectors combined into one candidate.
pub const MAX_CANDIDATE_TERMS: usize = 3;

fn primitive(mut v: IntVector) -> Option<IntVector> {
    let g = v
        .iter()
        .fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
    if g.is_zero() {
        return None;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
    if v.iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative)
    {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    Some(v)
}

/// Candidate initial vectors in a fixed deterministic order.
///
/// The columns of the projector `Π_i (Id + σ_i M(P_i))`, made primitive and
/// deduplicated, are the orbit vectors. Candidates are signed sums of at
/// most [`MAX_CANDIDATE_TERMS`] distinct orbit vectors with all coordinates
/// in `{−1, 0, 1}`, ordered by number of terms, then by the orbit indices,
/// then with `+` before `−` per term. A candidate is kept if `⟨v, v⟩ = 1` and
/// `⟨v, U v⟩ = 0` for every zero-pairing word `U`.
pub fn find_initial_vector(gs: &GeneratorSet, spec: &InvolutionSpec) -> Result<Vec<IntVector>> {
    fixed_subspace(gs, spec)?;
    let proj = projector(gs, spec);
    let mut orbits: Vec<IntVector> = Vec::new();
    for j in 0..proj.cols() {
        if let Some(v) = primitive(proj.column(j)) {
            if !orbits.contains(&v) {
                orbits.push(v);
            }
        }
    }
    let pairing_mats: Vec<IntMatrix> = spec
        .zero_pairings
        .iter()
        .map(|&u| gs.word_matrix(u))
        .collect();
    let one = BigInt::one();
    let admissible = |v: &IntVector| -> bool {
        if v.iter().any(|x| x.abs() > one) {
            return false;
        }
        if form_pair(v, v, &gs.form_v).expect("lengths match") != one {
            return false;
        }
        pairing_mats.iter().all(|u| {
            let uv = u.apply(v).expect("lengths match");
            form_pair(v, &uv, &gs.form_v)
                .expect("lengths match")
                .is_zero()
        })
    };

    let mut out = Vec::new();
    for terms in 1..=MAX_CANDIDATE_TERMS.min(orbits.len()) {
        for idx in combinations(orbits.len(), terms) {
            for signs in 0u32..(1 << terms) {
                let mut v = vec![BigInt::zero(); gs.dim_v];
                for (t, &o) in idx.iter().enumerate() {
                    let negative = signs & (1 << (terms - 1 - t)) != 0;
                    for (x, y) in v.iter_mut().zip(&orbits[o]) {
                        if negative {
                            *x -= y;
                        } else {
                            *x += y;
                        }
                    }
                }
                if admissible(&v) {
                    out.push(v);
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoAdmissibleVector(format!(
            "no unit vector among sums of at most {MAX_CANDIDATE_TERMS} of {} orbit vectors for {}",
            orbits.len(),
            gs.sig
        )));
    }
    Ok(out)
}

/// Index sets of size `k` from `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The module basis `v_a = M(W_a) v` with its diagonal Gram form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizedBasis {
    pub words: Vec<CliffordWord>,
    #[serde(serialize_with = "serialize_vectors")]
    pub vectors: Vec<IntVector>,
    pub gram: DiagonalForm,
    #[serde(serialize_with = "serialize_vector")]
    pub initial_vector: IntVector,
}

fn to_i64(v: &IntVector) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x).expect("entry fits in i64"))
        .collect()
}

fn serialize_vector<S: serde::Serializer>(
    v: &IntVector,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    to_i64(v).serialize(s)
}

fn serialize_vectors<S: serde::Serializer>(
    vs: &[IntVector],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    vs.iter().map(to_i64).collect::<Vec<_>>().serialize(s)
}

/// Realizes the basis and checks that its Gram matrix is diagonal, `±1`, and
/// follows the norm product rule `η_a = Π_{i∈W_a} ε_i`.
pub fn build_basis(gs: &GeneratorSet, bspec: &BasisSpec, v: &[BigInt]) -> Result<RealizedBasis> {
    if v.len() != gs.dim_v {
        return Err(Error::Dimension(format!(
            "initial vector of length {} in a {}-dimensional module",
            v.len(),
            gs.dim_v
        )));
    }
    if bspec.len() != gs.dim_v {
        return Err(Error::Dimension(format!(
            "{} basis words for a {}-dimensional module",
            bspec.len(),
            gs.dim_v
        )));
    }
    let vectors: Vec<IntVector> = bspec
        .words
        .iter()
        .map(|&w| gs.word_matrix(w).apply(v))
        .collect::<Result<_>>()?;
    let mut gram = Vec::with_capacity(vectors.len());
    for (a, va) in vectors.iter().enumerate() {
        for (b, vb) in vectors.iter().enumerate() {
            let p = form_pair(va, vb, &gs.form_v)?;
            if a == b {
                let expected = bspec.words[a].norm(gs.sig);
                if p != BigInt::from(expected) {
                    return Err(Error::BasisDegeneracy(format!(
                        "⟨v{0}, v{0}⟩ = {p}, expected {expected} for {1}",
                        a + 1,
                        bspec.words[a]
                    )));
                }
                gram.push(expected);
            } else if !p.is_zero() {
                return Err(Error::BasisDegeneracy(format!(
                    "⟨v{}, v{}⟩ = {p}, expected 0",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    Ok(RealizedBasis {
        words: bspec.words.clone(),
        vectors,
        gram: DiagonalForm::new(gram)?,
        initial_vector: v.to_vec(),
    })
}
