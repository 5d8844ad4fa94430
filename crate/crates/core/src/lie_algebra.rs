//! Structure constants `[v_a, v_b] = Σ_k c^k_{ab} z_k` and their checks.
//!
//! Both directions go through the defining relation
//! `⟨z, [x, y]⟩_{r,s} = ⟨J_z x, y⟩`:
//!
//! * extraction: `ε_k c^k_{ab} = ⟨J_k v_a, v_b⟩`, so `c^k_{ab} = ε_k ⟨J_k v_a, v_b⟩`;
//! * reconstruction: `⟨J_k v_a, v_b⟩ = (J_k)_{ba} η_b`, so
//!   `(J_k)_{ba} = ε_k c^k_{ab} η_b`.
//!
//! `ε` enters both; dropping it in either place flips every negative
//! generator's column and still passes antisymmetry, so both are pinned here.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::basis_builder::RealizedBasis;
use crate::clifford_rep::{clifford_findings, first_nonzero, GeneratorSet};
use crate::exactlin::{form_pair, metric_adjoint, DiagonalForm, IntMatrix};
use crate::report::{finding, CheckKind, Finding, Location, Report};
use crate::words::{CliffordWord, Signature};
use crate::{Error, Result};

/// The tensor `c^k_{ab}` with its basis data. Indices are 1-based in the API.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    pub sig: Signature,
    pub dim_v: usize,
    coeffs: Vec<i64>,
    pub basis_words: Vec<CliffordWord>,
    pub gram_v: DiagonalForm,
    /// Row/column labels, `v1..vN` unless the construction names them.
    pub labels: Vec<String>,
    /// Set when the table realizes a different signature than `sig`, as for
    /// the doubled construction of `n_{0,7}` from `(7,0)` blocks.
    pub realizes: Option<Signature>,
}

/// The contents of one cell: its nonzero `(k, c^k)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellValue(pub Vec<(usize, i64)>);

impl CellValue {
    pub fn zero() -> Self {
        CellValue(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `(k, ±1)` when the cell holds exactly one `±z_k`.
    pub fn single(&self) -> Option<(usize, i64)> {
        match self.0.as_slice() {
            [(k, c)] if c.abs() == 1 => Some((*k, *c)),
            _ => None,
        }
    }
}

impl fmt::Display for CellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (idx, &(k, c)) in self.0.iter().enumerate() {
            match (idx, c) {
                (_, 1) if idx > 0 => write!(f, "+z{k}")?,
                (_, 1) => write!(f, "z{k}")?,
                (_, -1) => write!(f, "-z{k}")?,
                (_, c) if c > 0 && idx > 0 => write!(f, "+{c}z{k}")?,
                (_, c) => write!(f, "{c}z{k}")?,
            }
        }
        Ok(())
    }
}

impl StructureTable {
    /// All-zero table over the given basis.
    pub fn zeros(
        sig: Signature,
        basis_words: Vec<CliffordWord>,
        gram_v: DiagonalForm,
    ) -> Result<Self> {
        let dim_v = basis_words.len();
        if gram_v.len() != dim_v {
            return Err(Error::Dimension(format!(
                "{dim_v} basis words with a Gram form of length {}",
                gram_v.len()
            )));
        }
        Ok(StructureTable {
            sig,
            dim_v,
            coeffs: vec![0; dim_v * dim_v * sig.n()],
            basis_words,
            gram_v,
            labels: (1..=dim_v).map(|a| format!("v{a}")).collect(),
            realizes: None,
        })
    }

    /// Zero table whose Gram form follows the norm product rule.
    pub fn zeros_for_words(sig: Signature, basis_words: Vec<CliffordWord>) -> Result<Self> {
        let gram = DiagonalForm::new(basis_words.iter().map(|w| w.norm(sig)).collect())?;
        Self::zeros(sig, basis_words, gram)
    }

    /// Number of `z` generators.
    pub fn n_z(&self) -> usize {
        self.sig.n()
    }

    fn index(&self, a: usize, b: usize, k: usize) -> usize {
        assert!(
            (1..=self.dim_v).contains(&a)
                && (1..=self.dim_v).contains(&b)
                && (1..=self.n_z()).contains(&k),
            "index ({a},{b},{k}) out of range"
        );
        ((a - 1) * self.dim_v + (b - 1)) * self.n_z() + (k - 1)
    }

    /// `c^k_{ab}`.
    pub fn get(&self, a: usize, b: usize, k: usize) -> i64 {
        self.coeffs[self.index(a, b, k)]
    }

    pub fn set(&mut self, a: usize, b: usize, k: usize, value: i64) {
        let i = self.index(a, b, k);
        self.coeffs[i] = value;
    }

    /// Replaces cell `(a, b)` with the given value.
    pub fn set_cell(&mut self, a: usize, b: usize, value: &CellValue) {
        for k in 1..=self.n_z() {
            self.set(a, b, k, 0);
        }
        for &(k, c) in &value.0 {
            self.set(a, b, k, c);
        }
    }

    pub fn cell(&self, a: usize, b: usize) -> CellValue {
        CellValue(
            (1..=self.n_z())
                .map(|k| (k, self.get(a, b, k)))
                .filter(|&(_, c)| c != 0)
                .collect(),
        )
    }

    /// Nonzero entries as `(a, b, k, c)`, row-major.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, i64)> {
        let mut out = Vec::new();
        for a in 1..=self.dim_v {
            for b in 1..=self.dim_v {
                for k in 1..=self.n_z() {
                    let c = self.get(a, b, k);
                    if c != 0 {
                        out.push((a, b, k, c));
                    }
                }
            }
        }
        out
    }

    /// The table after `v_a ↦ σ_a v_a`: `c ↦ σ_a σ_b c`.
    pub fn with_basis_signs(&self, signs: &[i8]) -> StructureTable {
        assert_eq!(signs.len(), self.dim_v);
        let mut out = self.clone();
        for a in 1..=self.dim_v {
            for b in 1..=self.dim_v {
                let s = i64::from(signs[a - 1] * signs[b - 1]);
                for k in 1..=self.n_z() {
                    let c = self.get(a, b, k);
                    out.set(a, b, k, s * c);
                }
            }
        }
        out
    }

    /// Square sub-table on the 1-based index range `from..=to`.
    pub fn block(&self, from: usize, to: usize) -> Result<StructureTable> {
        if from < 1 || to > self.dim_v || from > to {
            return Err(Error::Dimension(format!(
                "block {from}..={to} of a {}-dimensional table",
                self.dim_v
            )));
        }
        let words = self.basis_words[from - 1..to].to_vec();
        let gram = DiagonalForm::new(self.gram_v.signs()[from - 1..to].to_vec())?;
        let mut out = StructureTable::zeros(self.sig, words, gram)?;
        for a in from..=to {
            for b in from..=to {
                for k in 1..=self.n_z() {
                    out.set(a - from + 1, b - from + 1, k, self.get(a, b, k));
                }
            }
        }
        Ok(out)
    }
}

/// `c^k_{ab} = ε_k ⟨J_k v_a, v_b⟩`.
pub fn compute_table(gs: &GeneratorSet, basis: &RealizedBasis) -> Result<StructureTable> {
    let mut table = StructureTable::zeros(gs.sig, basis.words.clone(), basis.gram.clone())?;
    for k in 1..=gs.sig.n() {
        let eps = i64::from(gs.sig.epsilon(k));
        let images: Vec<_> = basis
            .vectors
            .iter()
            .map(|v| gs.gen(k).apply(v))
            .collect::<Result<_>>()?;
        for (a, jv) in images.iter().enumerate() {
            for (b, vb) in basis.vectors.iter().enumerate() {
                let p = form_pair(jv, vb, &gs.form_v)?;
                let c = i64::try_from(&p).map_err(|_| {
                    Error::Construction(format!("structure constant {p} does not fit in i64"))
                })?;
                table.set(a + 1, b + 1, k, eps * c);
            }
        }
    }
    Ok(table)
}

/// `(J_k)_{ba} = ε_k c^k_{ab} η_b`, expressed in the table's own basis.
pub fn reconstruct_j(table: &StructureTable) -> Vec<IntMatrix> {
    let n = table.dim_v;
    (1..=table.n_z())
        .map(|k| {
            let eps = i64::from(table.sig.epsilon(k));
            let mut m = IntMatrix::zeros(n, n);
            for a in 1..=n {
                for b in 1..=n {
                    let c = table.get(a, b, k);
                    if c != 0 {
                        let eta = i64::from(table.gram_v.signs()[b - 1]);
                        m.set(b - 1, a - 1, (eps * c * eta).into());
                    }
                }
            }
            m
        })
        .collect()
}

/// Pseudo H-type checks on a table, independent of any representation.
pub fn verify_htype(table: &StructureTable) -> Report {
    let mut report = Report::default();
    let n = table.dim_v;
    let nz = table.n_z();

    let mut anti = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            let bad: Vec<usize> = (1..=nz)
                .filter(|&k| table.get(a, b, k) + table.get(b, a, k) != 0)
                .collect();
            if bad.is_empty() {
                continue;
            }
            let message = if a == b {
                format!("[v{a}, v{a}] = {} is not 0", table.cell(a, a))
            } else {
                format!(
                    "[v{a}, v{b}] = {} but [v{b}, v{a}] = {}",
                    table.cell(a, b),
                    table.cell(b, a)
                )
            };
            anti.push(finding(
                CheckKind::Antisymmetry,
                Location::Cell { row: a, col: b },
                message,
            ));
        }
    }
    report.record(CheckKind::Antisymmetry, anti);

    let mut single = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            let cell = table.cell(a, b);
            if !cell.is_zero() && cell.single().is_none() {
                single.push(finding(
                    CheckKind::SingleGenerator,
                    Location::Cell { row: a, col: b },
                    format!("cell holds {cell}"),
                ));
            }
        }
    }
    report.record(CheckKind::SingleGenerator, single);

    let mut gram = Vec::new();
    if table.basis_words.len() != n {
        gram.push(finding(
            CheckKind::GramConsistency,
            Location::Whole,
            format!("{} basis words for {n} rows", table.basis_words.len()),
        ));
    } else {
        for (a, w) in table.basis_words.iter().enumerate() {
            let eta = table.gram_v.signs()[a];
            if eta != w.norm(table.sig) {
                gram.push(finding(
                    CheckKind::GramConsistency,
                    Location::Basis { a: a + 1 },
                    format!("η = {eta} but {w} has norm {}", w.norm(table.sig)),
                ));
            }
        }
    }
    report.record(CheckKind::GramConsistency, gram);

    let js = reconstruct_j(table);
    report.record(
        CheckKind::CliffordRelations,
        clifford_findings(&js, table.sig),
    );

    let mut skew = Vec::new();
    for (idx, m) in js.iter().enumerate() {
        let adj = metric_adjoint(m, &table.gram_v).expect("square, matching form");
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
                format!("reconstructed J{} is not skew", idx + 1),
            ));
        }
    }
    report.record(CheckKind::Skewness, skew);

    report.record(CheckKind::SignedPermutation, permutation_findings(table));

    report.notes.push(
        "jacobi: trivially satisfied, the algebra is 2-step nilpotent with central derived algebra"
            .to_string(),
    );
    report
}

/// Each `J_k` is a signed permutation iff every row and every column of the
/// table carries `z_k` exactly once with coefficient `±1`.
fn permutation_findings(table: &StructureTable) -> Vec<Finding> {
    let n = table.dim_v;
    let mut out = Vec::new();
    for k in 1..=table.n_z() {
        for a in 1..=n {
            let hits: Vec<i64> = (1..=n)
                .map(|b| table.get(a, b, k))
                .filter(|&c| c != 0)
                .collect();
            if hits.len() != 1 || hits[0].abs() != 1 {
                out.push(finding(
                    CheckKind::SignedPermutation,
                    Location::TableRow { row: a, k },
                    format!("row v{a} has {} entries in z{k}", hits.len()),
                ));
            }
        }
        for b in 1..=n {
            let hits: Vec<i64> = (1..=n)
                .map(|a| table.get(a, b, k))
                .filter(|&c| c != 0)
                .collect();
            if hits.len() != 1 || hits[0].abs() != 1 {
                out.push(finding(
                    CheckKind::SignedPermutation,
                    Location::TableColumn { col: b, k },
                    format!("column v{b} has {} entries in z{k}", hits.len()),
                ));
            }
        }
    }
    out
}

/// One differing cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub row: usize,
    pub col: usize,
    pub left: CellValue,
    pub right: CellValue,
}

impl fmt::Display for CellDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[v{}, v{}]: {} vs {}",
            self.row, self.col, self.left, self.right
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Comparison {
    Equal,
    /// `c'^k_{ab} = σ_a σ_b c^k_{ab}` for these signs.
    DiagonalSignEquivalent {
        signs: Vec<i8>,
    },
    Different {
        cells: Vec<CellDiff>,
    },
}

impl Comparison {
    pub fn is_equivalent(&self) -> bool {
        !matches!(self, Comparison::Different { .. })
    }
}

/// Equality, then equivalence under `v_a ↦ σ_a v_a`.
pub fn compare_tables(t1: &StructureTable, t2: &StructureTable) -> Result<Comparison> {
    if t1.dim_v != t2.dim_v || t1.n_z() != t2.n_z() {
        return Err(Error::Dimension(format!(
            "cannot compare a {}x{} table in {} generators with a {}x{} table in {}",
            t1.dim_v,
            t1.dim_v,
            t1.n_z(),
            t2.dim_v,
            t2.dim_v,
            t2.n_z()
        )));
    }
    let cells = diff_cells(t1, t2);
    if cells.is_empty() {
        return Ok(Comparison::Equal);
    }
    match sign_equivalence(t1, t2) {
        Some(signs) => Ok(Comparison::DiagonalSignEquivalent { signs }),
        None => Ok(Comparison::Different { cells }),
    }
}

/// Cells where two equally shaped tables differ, row-major.
pub fn diff_cells(t1: &StructureTable, t2: &StructureTable) -> Vec<CellDiff> {
    let mut out = Vec::new();
    for a in 1..=t1.dim_v {
        for b in 1..=t1.dim_v {
            let (l, r) = (t1.cell(a, b), t2.cell(a, b));
            if l != r {
                out.push(CellDiff {
                    row: a,
                    col: b,
                    left: l,
                    right: r,
                });
            }
        }
    }
    out
}

/// Fixes `σ = +1` at the least index of each connected component of the
/// support graph, propagates along nonzero cells, then verifies every cell.
fn sign_equivalence(t1: &StructureTable, t2: &StructureTable) -> Option<Vec<i8>> {
    let n = t1.dim_v;
    let nz = t1.n_z();
    for a in 1..=n {
        for b in 1..=n {
            for k in 1..=nz {
                if (t1.get(a, b, k) == 0) != (t2.get(a, b, k) == 0) {
                    return None;
                }
            }
        }
    }
    let mut sigma = vec![0i8; n];
    for root in 0..n {
        if sigma[root] != 0 {
            continue;
        }
        sigma[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for b in 0..n {
                if sigma[b] != 0 {
                    continue;
                }
                if let Some(k) = (1..=nz).find(|&k| t1.get(a + 1, b + 1, k) != 0) {
                    let ratio = t2.get(a + 1, b + 1, k) / t1.get(a + 1, b + 1, k);
                    if ratio.abs() != 1 {
                        return None;
                    }
                    sigma[b] = sigma[a] * ratio as i8;
                    queue.push_back(b);
                }
            }
        }
    }
    (t1.with_basis_signs(&sigma) == *t2).then_some(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis_builder::{build_basis, find_initial_vector, generators_for, paper_config};
    use crate::exactlin::IntVector;
    use proptest::prelude::*;

    fn sig(r: usize, s: usize) -> Signature {
        Signature::new(r, s).unwrap()
    }

    fn generated(r: usize, s: usize) -> StructureTable {
        let c = paper_config(sig(r, s)).unwrap();
        let gs = generators_for(&c).unwrap();
        let v = find_initial_vector(&gs, &c.involutions).unwrap().remove(0);
        compute_table(&gs, &build_basis(&gs, &c.basis, &v).unwrap()).unwrap()
    }

    fn one_zero() -> StructureTable {
        let words = vec![CliffordWord::IDENTITY, CliffordWord::generator(1)];
        let mut t = StructureTable::zeros_for_words(sig(1, 0), words).unwrap();
        t.set(1, 2, 1, 1);
        t.set(2, 1, 1, -1);
        t
    }

    #[test]
    fn one_zero_bracket() {
        let t = generated(1, 0);
        assert_eq!(t, one_zero());
        assert_eq!(t.cell(1, 2).single(), Some((1, 1)));
        assert_eq!(t.cell(2, 1).single(), Some((1, -1)));
    }

    #[test]
    fn diagonal_is_zero_everywhere() {
        for (r, s) in [(1, 1), (3, 0), (2, 1), (4, 1), (7, 0)] {
            let t = generated(r, s);
            for a in 1..=t.dim_v {
                assert!(t.cell(a, a).is_zero());
            }
        }
    }

    #[test]
    fn reconstruction_from_one_zero() {
        let js = reconstruct_j(&one_zero());
        assert_eq!(
            js[0],
            IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap()
        );
        let sq = &js[0] * &js[0];
        assert_eq!(sq, IntMatrix::identity(2).scale(-1));
    }

    #[test]
    fn reconstructed_negative_generator_squares_to_identity() {
        let js = reconstruct_j(&generated(2, 1));
        assert_eq!(&js[2] * &js[2], IntMatrix::identity(8));
    }

    #[test]
    fn zero_table_fails_clifford() {
        let t = StructureTable::zeros_for_words(
            sig(1, 0),
            vec![CliffordWord::IDENTITY, CliffordWord::generator(1)],
        )
        .unwrap();
        assert!(reconstruct_j(&t).iter().all(IntMatrix::is_zero));
        assert_eq!(
            verify_htype(&t).passed(CheckKind::CliffordRelations),
            Some(false)
        );
    }

    #[test]
    fn one_zero_passes_all_checks() {
        let report = verify_htype(&one_zero());
        assert!(report.all_passed(), "{report:?}");
        assert!(report.notes.iter().any(|n| n.starts_with("jacobi")));
    }

    #[test]
    fn three_zero_reconstructs_quaternion_multiplication() {
        let t = generated(3, 0);
        assert!(verify_htype(&t).all_passed());
        let js = reconstruct_j(&t);
        // The volume word J1J2J3 fixes v and is central, so it is the
        // identity and J1J2 = -J3: a quaternion triple.
        assert_eq!(&js[0] * &js[1], js[2].scale(-1));
        for j in &js {
            assert_eq!(j * j, IntMatrix::identity(4).scale(-1));
        }
    }

    #[test]
    fn zeroed_cell_pair_fails_only_the_operator_checks() {
        let mut t = one_zero();
        t.set(1, 2, 1, 0);
        t.set(2, 1, 1, 0);
        let report = verify_htype(&t);
        assert_eq!(report.passed(CheckKind::Antisymmetry), Some(true));
        assert_eq!(report.passed(CheckKind::CliffordRelations), Some(false));
    }

    #[test]
    fn one_sided_corruption_is_an_antisymmetry_finding() {
        let mut t = generated(3, 0);
        t.set(2, 3, 3, -t.get(2, 3, 3));
        let report = verify_htype(&t);
        let cells: Vec<_> = report
            .findings_for(CheckKind::Antisymmetry)
            .map(|f| f.location.clone())
            .collect();
        assert_eq!(cells, vec![Location::Cell { row: 2, col: 3 }]);
    }

    #[test]
    fn compare_examples() {
        let t = one_zero();
        assert_eq!(compare_tables(&t, &t).unwrap(), Comparison::Equal);
        let flipped = t.with_basis_signs(&[1, -1]);
        assert_eq!(
            compare_tables(&t, &flipped).unwrap(),
            Comparison::DiagonalSignEquivalent { signs: vec![1, -1] }
        );
        let a = generated(2, 0);
        let b = generated(1, 1);
        assert!(matches!(
            compare_tables(&a, &b).unwrap(),
            Comparison::Different { .. }
        ));
        assert!(matches!(compare_tables(&a, &t), Err(Error::Dimension(_))));
    }

    #[test]
    fn every_tabulated_table_verifies() {
        for sg in crate::basis_builder::tabulated_signatures() {
            let t = generated(sg.r(), sg.s());
            let report = verify_htype(&t);
            assert!(report.all_passed(), "{sg}: {:?}", report.findings);
        }
    }

    fn arb_signs(n: usize) -> impl Strategy<Value = Vec<i8>> {
        proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn sign_equivalence_is_found_and_symmetric(signs in arb_signs(8)) {
            let t = generated(4, 0);
            let u = t.with_basis_signs(&signs);
            let forward = compare_tables(&t, &u).unwrap();
            let backward = compare_tables(&u, &t).unwrap();
            prop_assert!(forward.is_equivalent());
            prop_assert!(backward.is_equivalent());
            if let Comparison::DiagonalSignEquivalent { signs: s } = forward {
                prop_assert_eq!(t.with_basis_signs(&s), u);
            }
        }

        #[test]
        fn negating_v_leaves_the_table_unchanged(pick in 0usize..8) {
            let c = paper_config(sig(3, 2)).unwrap();
            let gs = generators_for(&c).unwrap();
            let cands = find_initial_vector(&gs, &c.involutions).unwrap();
            let v = &cands[pick % cands.len()];
            let neg: IntVector = v.iter().map(|x| -x).collect();
            let t1 = compute_table(&gs, &build_basis(&gs, &c.basis, v).unwrap()).unwrap();
            let t2 = compute_table(&gs, &build_basis(&gs, &c.basis, &neg).unwrap()).unwrap();
            prop_assert_eq!(t1, t2);
        }
    }
}
