use htype_core::basis_builder::{tabulated_signatures, AutoConfigSource, PaperConfigSource};
use htype_core::clifford_rep::minimal_admissible_dimension;
use htype_core::golden::{golden_table, match_generated};
use htype_core::lie_algebra::{compare_tables, Comparison, StructureTable};
use htype_core::pipeline::generate;
use htype_core::words::Signature;

fn sig(r: usize, s: usize) -> Signature {
    Signature::new(r, s).unwrap()
}

/// Hamilton product on (1, i, j, k) coordinates.
fn qmul(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn dot(a: [i64; 4], b: [i64; 4]) -> i64 {
    a.iter().zip(&b).map(|(x, y)| x * y).sum()
}

/// n_{3,0} from quaternion left multiplication with `J3 = L_{-k}`, so that
/// `J1J2J3 = 1`, and basis `1, J1·1, J2·1, J3·1`.
#[test]
fn quaternion_oracle_for_three_zero() {
    let units = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]];
    let one = [1, 0, 0, 0];
    let basis: Vec<[i64; 4]> = std::iter::once(one)
        .chain(units.iter().map(|&u| qmul(u, one)))
        .collect();
    let g = golden_table(sig(3, 0)).unwrap();
    let mut oracle =
        StructureTable::zeros_for_words(sig(3, 0), g.table.basis_words.clone()).unwrap();
    for a in 1..=4 {
        for b in 1..=4 {
            for (k, &u) in units.iter().enumerate() {
                oracle.set(a, b, k + 1, dot(qmul(u, basis[a - 1]), basis[b - 1]));
            }
        }
    }
    assert_eq!(
        compare_tables(&oracle, &g.table).unwrap(),
        Comparison::Equal
    );
    let generated = generate(sig(3, 0), &PaperConfigSource).unwrap().table;
    assert_eq!(
        compare_tables(&oracle, &generated).unwrap(),
        Comparison::Equal
    );
}

#[test]
fn every_signature_generates_a_valid_table() {
    for s in Signature::all() {
        if (s.r(), s.s()) == (0, 7) {
            continue;
        }
        let run = generate(s, &PaperConfigSource)
            .or_else(|_| generate(s, &AutoConfigSource))
            .unwrap();
        assert!(
            run.report.all_passed(),
            "{s}: {:?}",
            run.report.failed_checks()
        );
        assert_eq!(run.table.dim_v, minimal_admissible_dimension(s).dim, "{s}");
    }
}

#[test]
fn auto_source_agrees_with_dimensions_on_tabulated_signatures() {
    for s in tabulated_signatures() {
        let run = generate(s, &AutoConfigSource).unwrap();
        assert!(run.report.all_passed(), "{s}");
        assert_eq!(run.table.dim_v, minimal_admissible_dimension(s).dim);
    }
}

/// Number of admissible initial vectors and how many reproduce the table.
#[test]
fn frozen_candidate_counts() {
    let expected = [
        ((2, 1), 104, 104),
        ((0, 3), 104, 104),
        ((4, 1), 200, 8),
        ((0, 5), 200, 8),
        ((5, 1), 20, 4),
        ((7, 0), 2, 2),
        ((8, 0), 2, 2),
    ];
    for ((r, s), tried, reproducing) in expected {
        let m = match_generated(sig(r, s)).unwrap();
        assert_eq!(
            (m.candidates_tried, m.reproducing),
            (tried, reproducing),
            "({r},{s})"
        );
    }
}

#[test]
fn every_reference_table_is_reproduced() {
    for s in tabulated_signatures() {
        let m = match_generated(s).unwrap();
        assert!(m.outcome.accepted(), "{s}: {:?}", m.outcome);
        assert!(m.against_repaired.is_equivalent(), "{s}");
    }
}
