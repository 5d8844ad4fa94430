//! Compiled-in per-signature configurations: involutions pinning the initial
//! vector, orthogonality conditions, ordered basis words and the listed
//! relations.
//!
//! Basis words are given as letter sequences in the order they are written
//! (so `[2, 1]` is `J2J1 = −J1J2`); canonicalization happens on load.

pub(crate) struct RawRelation {
    /// Product of named involutions such as `"P2P4"`, if the relation is
    /// stated through one.
    pub via: Option<&'static str>,
    pub lhs: &'static str,
    pub rhs: &'static str,
    /// Printed form differs from `via`; kept for the report.
    pub printed_via: Option<&'static str>,
}

pub(crate) struct RawConfig {
    pub r: usize,
    pub s: usize,
    pub involutions: &'static [&'static str],
    pub zero_pairings: &'static [&'static str],
    pub basis: &'static [&'static [usize]],
    pub table: u32,
    pub relations: &'static [RawRelation],
    /// No configuration is written out for this signature; it is inferred
    /// from its isomorphic partner.
    pub derived: bool,
}

const fn rel(lhs: &'static str) -> RawRelation {
    RawRelation {
        via: None,
        lhs,
        rhs: "1",
        printed_via: None,
    }
}

const fn via(p: &'static str, lhs: &'static str) -> RawRelation {
    RawRelation {
        via: Some(p),
        lhs,
        rhs: "1",
        printed_via: None,
    }
}

const B2_20: &[&[usize]] = &[&[], &[2, 1], &[1], &[2]];
const B2_02: &[&[usize]] = &[&[], &[1, 2], &[1], &[2]];
const B3_Q: &[&[usize]] = &[&[], &[1], &[2], &[3]];
const B3_21: &[&[usize]] = &[&[], &[2, 1], &[1, 3], &[2, 3], &[1], &[2], &[3], &[1, 2, 3]];
const B3_03: &[&[usize]] = &[&[], &[1, 2], &[1, 3], &[2, 3], &[1], &[2], &[3], &[1, 2, 3]];
const B4_40: &[&[usize]] = &[&[], &[1, 2], &[1, 3], &[1, 4], &[1], &[2], &[3], &[4]];
const B4_31: &[&[usize]] = &[&[], &[1], &[2], &[3], &[4], &[4, 1], &[4, 2], &[4, 3]];
const B4_04: &[&[usize]] = &[&[], &[2, 1], &[3, 1], &[4, 1], &[1], &[2], &[3], &[4]];
const B5_50: &[&[usize]] = &[&[], &[5], &[1, 3], &[1, 4], &[1], &[2], &[3], &[4]];
const B5_41: &[&[usize]] = &[
    &[],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[5, 1, 2],
    &[5, 1, 3],
    &[5, 1, 4],
    &[5, 1],
    &[5, 2],
    &[5, 3],
    &[5, 4],
];
const B5_32: &[&[usize]] = &[&[], &[1], &[2], &[3], &[4], &[5], &[4, 2], &[4, 3]];
const B5_05: &[&[usize]] = &[
    &[],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[1, 5],
    &[2, 5],
    &[3, 5],
    &[4, 5],
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[1, 2, 5],
    &[1, 3, 5],
    &[1, 4, 5],
];
const B6_60: &[&[usize]] = &[&[], &[1], &[2], &[3], &[4], &[5], &[6], &[1, 2]];
const B6_51: &[&[usize]] = &[
    &[],
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[1, 3],
    &[1, 4],
    &[6],
    &[1, 6],
    &[2, 6],
    &[3, 6],
    &[4, 6],
    &[5, 6],
    &[1, 3, 6],
    &[1, 4, 6],
];
const B6_42: &[&[usize]] = &[
    &[],
    &[1],
    &[2],
    &[3],
    &[4],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[5],
    &[6],
    &[1, 5],
    &[1, 6],
    &[3, 5],
    &[3, 6],
    &[1, 3, 5],
    &[2, 3, 5],
];
const B6_33: &[&[usize]] = &[&[], &[1], &[2], &[3], &[4], &[5], &[6], &[1, 4]];
const B6_24: &[&[usize]] = &[&[], &[1], &[2], &[1, 2], &[3], &[4], &[5], &[6]];
const B6_15: &[&[usize]] = &[
    &[],
    &[1],
    &[2, 6],
    &[3, 6],
    &[4, 6],
    &[5, 6],
    &[2, 4],
    &[2, 5],
    &[6],
    &[1, 6],
    &[2],
    &[3],
    &[4],
    &[5],
    &[2, 4, 6],
    &[2, 5, 6],
];
const B6_06: &[&[usize]] = &[
    &[],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[1, 5],
    &[1, 6],
    &[3, 5],
    &[3, 6],
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[1, 3, 5],
    &[1, 3, 6],
];
const B7: &[&[usize]] = &[&[], &[1], &[2], &[3], &[4], &[5], &[6], &[7]];
const B8_80: &[&[usize]] = &[
    &[],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[1, 5],
    &[1, 6],
    &[1, 7],
    &[1, 8],
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[7],
    &[8],
];
const B8_08: &[&[usize]] = &[
    &[],
    &[2, 1],
    &[3, 1],
    &[4, 1],
    &[5, 1],
    &[6, 1],
    &[7, 1],
    &[8, 1],
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[7],
    &[8],
];
const B8_71: &[&[usize]] = &[
    &[],
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[7],
    &[8],
    &[8, 1],
    &[8, 2],
    &[8, 3],
    &[8, 4],
    &[8, 5],
    &[8, 6],
    &[8, 7],
];

const P70: &[&str] = &["J1J2J3J4", "J1J2J5J6", "J1J3J5J7", "J5J6J7"];
const P34: &[&str] = &["J1J2J4J5", "J1J2J6J7", "J1J3J5J7", "J1J2J3"];
const P80: &[&str] = &["J1J2J3J4", "J1J2J5J6", "J2J3J5J7", "J1J2J7J8"];

const R70: &[RawRelation] = &[
    via("P2P4", "-J1J2J7"),
    via("P3P4", "J1J3J6"),
    via("P1P2P3P4", "J1J4J5"),
    via("P2P3P4", "-J2J3J5"),
    via("P1P3P4", "J2J4J6"),
    via("P1P2P4", "J3J4J7"),
];
const R34: &[RawRelation] = &[
    via("P1P3P4", "-J1J4J7"),
    via("P2P3P4", "-J1J5J6"),
    via("P1P2P3P4", "-J2J4J6"),
    via("P3P4", "J2J5J7"),
    via("P1P4", "-J3J4J5"),
    via("P2P4", "-J3J6J7"),
];
const R80: &[RawRelation] = &[
    via("P3P4", "-J1J3J5J8"),
    via("P2P3", "-J1J3J6J7"),
    via("P1P3", "-J1J4J5J7"),
    via("P1P2P3P4", "J1J4J6J8"),
];
const R44: &[RawRelation] = &[
    via("P3P4", "J1J3J5J8"),
    via("P2P3", "J1J3J6J7"),
    via("P1P3", "-J1J4J5J7"),
    RawRelation {
        via: Some("P1P2P3P4"),
        lhs: "J1J4J6J8",
        rhs: "1",
        printed_via: Some("P1P3P3P4"),
    },
];

const fn cfg(
    r: usize,
    s: usize,
    involutions: &'static [&'static str],
    basis: &'static [&'static [usize]],
    table: u32,
) -> RawConfig {
    RawConfig {
        r,
        s,
        involutions,
        zero_pairings: &[],
        basis,
        table,
        relations: &[],
        derived: false,
    }
}

pub(crate) const CONFIGS: &[RawConfig] = &[
    cfg(1, 0, &[], &[&[], &[1]], 1),
    RawConfig {
        derived: true,
        ..cfg(0, 1, &[], &[&[], &[1]], 1)
    },
    cfg(2, 0, &[], B2_20, 2),
    RawConfig {
        derived: true,
        ..cfg(0, 2, &[], B2_02, 2)
    },
    cfg(1, 1, &[], B2_02, 3),
    cfg(3, 0, &["J1J2J3"], B3_Q, 4),
    RawConfig {
        zero_pairings: &["J1J2J3"],
        ..cfg(2, 1, &[], B3_21, 5)
    },
    cfg(1, 2, &["J1J2J3"], B3_Q, 6),
    RawConfig {
        zero_pairings: &["J1J2J3"],
        ..cfg(0, 3, &[], B3_03, 7)
    },
    cfg(4, 0, &["J1J2J3J4"], B4_40, 8),
    cfg(3, 1, &["J1J2J3"], B4_31, 9),
    cfg(2, 2, &["J1J2J3J4"], B4_40, 10),
    cfg(1, 3, &["J1J2J3"], B4_31, 11),
    cfg(0, 4, &["J1J2J3J4"], B4_04, 12),
    cfg(5, 0, &["J1J2J3J4", "J1J2J5"], B5_50, 13),
    cfg(4, 1, &["J1J2J3J4"], B5_41, 14),
    cfg(3, 2, &["J2J3J4J5", "J1J2J3"], B5_32, 15),
    cfg(2, 3, &["J1J2J3J4", "J1J4J5"], B5_32, 16),
    cfg(1, 4, &["J2J3J4J5", "J1J2J3"], B5_32, 17),
    cfg(0, 5, &["J2J3J4J5"], B5_05, 18),
    RawConfig {
        relations: &[rel("J1J3J6"), rel("-J2J3J5"), rel("J2J4J6")],
        ..cfg(6, 0, &["J1J2J3J4", "J1J2J5J6", "J1J4J5"], B6_60, 19)
    },
    RawConfig {
        relations: &[RawRelation {
            via: None,
            lhs: "-J1J2",
            rhs: "J5",
            printed_via: None,
        }],
        ..cfg(5, 1, &["J1J2J3J4", "J1J2J5"], B6_51, 20)
    },
    RawConfig {
        relations: &[rel("-J3J4J5J6")],
        ..cfg(4, 2, &["J1J2J3J4", "J1J2J5J6"], B6_42, 21)
    },
    RawConfig {
        relations: &[
            rel("-J1J5J6"),
            rel("-J3J4J5"),
            rel("-J2J4J6"),
            rel("-J1J3J4J6"),
        ],
        ..cfg(3, 3, &["J1J2J4J5", "J2J3J5J6", "J1J2J3"], B6_33, 22)
    },
    RawConfig {
        relations: &[rel("-J2J4J5"), rel("-J1J4J6"), rel("-J2J3J6")],
        ..cfg(2, 4, &["J1J2J3J4", "J1J2J5J6", "J1J3J5"], B6_24, 23)
    },
    RawConfig {
        relations: &[rel("-J1J4J5")],
        ..cfg(1, 5, &["J2J3J4J5", "J1J2J3"], B6_15, 24)
    },
    RawConfig {
        relations: &[rel("-J3J4J5J6")],
        ..cfg(0, 6, &["J1J2J3J4", "J1J2J5J6"], B6_06, 25)
    },
    RawConfig {
        relations: R70,
        ..cfg(7, 0, P70, B7, 26)
    },
    RawConfig {
        relations: R34,
        ..cfg(3, 4, P34, B7, 27)
    },
    RawConfig {
        relations: R80,
        ..cfg(8, 0, P80, B8_80, 28)
    },
    RawConfig {
        derived: true,
        ..cfg(0, 8, P80, B8_08, 28)
    },
    RawConfig {
        relations: R70,
        ..cfg(7, 1, P70, B8_71, 29)
    },
    RawConfig {
        relations: R44,
        ..cfg(4, 4, P80, B8_80, 30)
    },
    RawConfig {
        relations: R34,
        ..cfg(3, 5, P34, B8_71, 31)
    },
];
