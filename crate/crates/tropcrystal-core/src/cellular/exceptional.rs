//! Tabulated lowest-term monomials of the exceptional types and their
//! factorizations `c(t, j) · (∏ A_{s,i})^{-1}`, in block coordinates
//! `(s, i, exponent)` where `(s, i)` is the `s`-th occurrence of letter `i`.

use crate::rootdata::Family;

pub(crate) type Mono = &'static [(i64, usize, i64)];

/// One stated factorization: `lhs = base · (∏ A)^{-1}`.
pub(crate) struct Identity {
    pub lhs: Mono,
    pub base: (i64, usize),
    pub a_factors: Mono,
}

pub(crate) struct Table {
    pub family: Family,
    pub rank: usize,
    /// lowest-term monomial of `Δ_{w_0Λ_i, s_iΛ_i}` for `i = 1..=rank`
    pub lowest: &'static [Mono],
    pub identities: &'static [Identity],
}

pub(crate) const TABLES: &[Table] = &[
    Table {
        family: Family::E,
        rank: 6,
        lowest: &[
            &[(8, 1, 1)],
            &[(7, 2, 1), (8, 1, -1)],
            &[(6, 3, 1), (6, 6, -1), (7, 2, -1)],
            &[(5, 4, 1), (6, 3, -1)],
            &[(4, 5, 1), (5, 4, -1)],
            &[(6, 6, 1)],
        ],
        identities: &[
            Identity {
                lhs: &[(7, 2, 1), (8, 1, -1)],
                base: (7, 1),
                a_factors: &[(7, 1, 1)],
            },
            Identity {
                lhs: &[(6, 3, 1), (6, 6, -1), (7, 2, -1)],
                base: (3, 1),
                a_factors: &[(6, 2, 1), (5, 6, 1), (6, 1, 1), (5, 3, 1), (4, 4, 1), (3, 5, 1), (5, 2, 1), (4, 3, 1), (3, 4, 1), (3, 6, 1), (3, 3, 1), (3, 2, 1), (3, 1, 1)],
            },
            Identity {
                lhs: &[(5, 4, 1), (6, 3, -1)],
                base: (2, 1),
                a_factors: &[(5, 3, 1), (5, 2, 1), (4, 6, 1), (5, 1, 1), (4, 3, 1), (3, 4, 1), (2, 5, 1), (4, 2, 1), (3, 3, 1), (2, 4, 1), (2, 6, 1), (2, 3, 1), (2, 2, 1), (2, 1, 1)],
            },
            Identity {
                lhs: &[(4, 5, 1), (5, 4, -1)],
                base: (1, 1),
                a_factors: &[(4, 4, 1), (4, 3, 1), (4, 2, 1), (3, 6, 1), (4, 1, 1), (3, 3, 1), (2, 4, 1), (1, 5, 1), (3, 2, 1), (2, 3, 1), (1, 4, 1), (1, 6, 1), (1, 3, 1), (1, 2, 1), (1, 1, 1)],
            },
        ],
    },
    Table {
        family: Family::E,
        rank: 7,
        lowest: &[
            &[(9, 1, 1), (9, 2, -1)],
            &[(9, 2, 1), (9, 3, -1)],
            &[(9, 3, 1), (9, 4, -1)],
            &[(9, 4, 1), (9, 5, -1), (9, 7, -1)],
            &[(9, 5, 1), (9, 6, -1)],
            &[(9, 6, 1)],
            &[(9, 7, 1)],
        ],
        identities: &[
            Identity {
                lhs: &[(9, 1, 1), (9, 2, -1)],
                base: (1, 1),
                a_factors: &[(8, 2, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (5, 7, 1), (5, 4, 1), (4, 5, 1), (5, 3, 1), (4, 4, 1), (3, 7, 1), (5, 2, 1), (4, 3, 1), (3, 4, 1), (2, 5, 1), (1, 6, 1), (5, 1, 1), (4, 2, 1), (3, 3, 1), (2, 4, 1), (1, 5, 1), (1, 7, 1), (1, 4, 1), (1, 3, 1), (1, 2, 1), (1, 1, 1)],
            },
            Identity {
                lhs: &[(9, 2, 1), (9, 3, -1)],
                base: (2, 1),
                a_factors: &[(8, 3, 1), (7, 4, 1), (6, 5, 1), (5, 6, 1), (6, 7, 1), (6, 4, 1), (5, 5, 1), (6, 3, 1), (5, 4, 1), (4, 7, 1), (6, 2, 1), (5, 3, 1), (4, 4, 1), (3, 5, 1), (2, 6, 1), (6, 1, 1), (5, 2, 1), (4, 3, 1), (3, 4, 1), (2, 5, 1), (2, 7, 1), (2, 4, 1), (2, 3, 1), (2, 2, 1), (2, 1, 1)],
            },
            Identity {
                lhs: &[(9, 3, 1), (9, 4, -1)],
                base: (3, 1),
                a_factors: &[(8, 4, 1), (7, 5, 1), (6, 6, 1), (7, 7, 1), (7, 4, 1), (6, 5, 1), (7, 3, 1), (6, 4, 1), (5, 7, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1), (4, 5, 1), (3, 6, 1), (7, 1, 1), (6, 2, 1), (5, 3, 1), (4, 4, 1), (3, 5, 1), (3, 7, 1), (3, 4, 1), (3, 3, 1), (3, 2, 1), (3, 1, 1)],
            },
            Identity {
                lhs: &[(9, 4, 1), (9, 5, -1), (9, 7, -1)],
                base: (4, 1),
                a_factors: &[(8, 5, 1), (7, 6, 1), (8, 7, 1), (8, 4, 1), (7, 5, 1), (8, 3, 1), (7, 4, 1), (6, 7, 1), (8, 2, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (8, 1, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1), (4, 5, 1), (4, 7, 1), (4, 4, 1), (4, 3, 1), (4, 2, 1), (4, 1, 1)],
            },
            Identity {
                lhs: &[(9, 5, 1), (9, 6, -1)],
                base: (8, 6),
                a_factors: &[(8, 6, 1)],
            },
        ],
    },
    Table {
        family: Family::E,
        rank: 8,
        lowest: &[
            &[(15, 1, 1), (15, 2, -1)],
            &[(15, 2, 1), (15, 3, -1)],
            &[(15, 3, 1), (15, 4, -1)],
            &[(15, 4, 1), (15, 5, -1)],
            &[(15, 5, 1), (15, 6, -1), (15, 8, -1)],
            &[(15, 6, 1), (15, 7, -1)],
            &[(15, 7, 1)],
            &[(15, 8, 1)],
        ],
        identities: &[
            Identity {
                lhs: &[(15, 1, 1), (15, 2, -1)],
                base: (1, 1),
                a_factors: &[(14, 2, 1), (13, 3, 1), (12, 4, 1), (11, 5, 1), (10, 6, 1), (9, 7, 1), (10, 8, 1), (10, 5, 1), (9, 6, 1), (10, 4, 1), (9, 5, 1), (8, 8, 1), (10, 3, 1), (9, 4, 1), (8, 5, 1), (7, 6, 1), (6, 7, 1), (10, 2, 1), (9, 3, 1), (8, 4, 1), (7, 5, 1), (6, 6, 1), (6, 8, 1), (10, 1, 1), (9, 2, 1), (8, 3, 1), (7, 4, 1), (6, 5, 2), (5, 6, 1), (4, 7, 1), (5, 8, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (6, 3, 1), (5, 4, 1), (4, 5, 1), (3, 8, 1), (6, 2, 1), (5, 3, 1), (4, 4, 1), (3, 5, 1), (2, 6, 1), (1, 7, 1), (6, 1, 1), (5, 2, 1), (4, 3, 1), (3, 4, 1), (2, 5, 1), (1, 6, 1), (1, 8, 1), (1, 5, 1), (1, 4, 1), (1, 3, 1), (1, 2, 1), (1, 1, 1)],
            },
            Identity {
                lhs: &[(15, 2, 1), (15, 3, -1)],
                base: (2, 1),
                a_factors: &[(14, 3, 1), (13, 4, 1), (12, 5, 1), (11, 6, 1), (10, 7, 1), (11, 8, 1), (11, 5, 1), (10, 6, 1), (11, 4, 1), (10, 5, 1), (9, 8, 1), (11, 3, 1), (10, 4, 1), (9, 5, 1), (8, 6, 1), (7, 7, 1), (11, 2, 1), (10, 3, 1), (9, 4, 1), (8, 5, 1), (7, 6, 1), (7, 8, 1), (11, 1, 1), (10, 2, 1), (9, 3, 1), (8, 4, 1), (7, 5, 2), (6, 6, 1), (5, 7, 1), (6, 8, 1), (7, 4, 1), (6, 5, 1), (5, 6, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1), (4, 8, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1), (4, 5, 1), (3, 6, 1), (2, 7, 1), (7, 1, 1), (6, 2, 1), (5, 3, 1), (4, 4, 1), (3, 5, 1), (2, 6, 1), (2, 8, 1), (2, 5, 1), (2, 4, 1), (2, 3, 1), (2, 2, 1), (2, 1, 1)],
            },
            Identity {
                lhs: &[(15, 3, 1), (15, 4, -1)],
                base: (3, 1),
                a_factors: &[(14, 4, 1), (13, 5, 1), (12, 6, 1), (11, 7, 1), (12, 8, 1), (12, 5, 1), (11, 6, 1), (12, 4, 1), (11, 5, 1), (10, 8, 1), (12, 3, 1), (11, 4, 1), (10, 5, 1), (9, 6, 1), (8, 7, 1), (12, 2, 1), (11, 3, 1), (10, 4, 1), (9, 5, 1), (8, 6, 1), (8, 8, 1), (12, 1, 1), (11, 2, 1), (10, 3, 1), (9, 4, 1), (8, 5, 2), (7, 6, 1), (6, 7, 1), (7, 8, 1), (8, 4, 1), (7, 5, 1), (6, 6, 1), (8, 3, 1), (7, 4, 1), (6, 5, 1), (5, 8, 1), (8, 2, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (3, 7, 1), (8, 1, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1), (4, 5, 1), (3, 6, 1), (3, 8, 1), (3, 5, 1), (3, 4, 1), (3, 3, 1), (3, 2, 1), (3, 1, 1)],
            },
            Identity {
                lhs: &[(15, 4, 1), (15, 5, -1)],
                base: (4, 1),
                a_factors: &[(14, 5, 1), (13, 6, 1), (12, 7, 1), (13, 8, 1), (13, 5, 1), (12, 6, 1), (13, 4, 1), (12, 5, 1), (11, 8, 1), (13, 3, 1), (12, 4, 1), (11, 5, 1), (10, 6, 1), (9, 7, 1), (13, 2, 1), (12, 3, 1), (11, 4, 1), (10, 5, 1), (9, 6, 1), (9, 8, 1), (13, 1, 1), (12, 2, 1), (11, 3, 1), (10, 4, 1), (9, 5, 2), (8, 6, 1), (7, 7, 1), (8, 8, 1), (9, 4, 1), (8, 5, 1), (7, 6, 1), (9, 3, 1), (8, 4, 1), (7, 5, 1), (6, 8, 1), (9, 2, 1), (8, 3, 1), (7, 4, 1), (6, 5, 1), (5, 6, 1), (4, 7, 1), (9, 1, 1), (8, 2, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (4, 8, 1), (4, 5, 1), (4, 4, 1), (4, 3, 1), (4, 2, 1), (4, 1, 1)],
            },
            Identity {
                lhs: &[(15, 5, 1), (15, 6, -1), (15, 8, -1)],
                base: (5, 1),
                a_factors: &[(14, 6, 1), (13, 7, 1), (14, 8, 1), (14, 5, 1), (13, 6, 1), (14, 4, 1), (13, 5, 1), (12, 8, 1), (14, 3, 1), (13, 4, 1), (12, 5, 1), (11, 6, 1), (10, 7, 1), (14, 2, 1), (13, 3, 1), (12, 4, 1), (11, 5, 1), (10, 6, 1), (10, 8, 1), (14, 1, 1), (13, 2, 1), (12, 3, 1), (11, 4, 1), (10, 5, 2), (9, 6, 1), (8, 7, 1), (9, 8, 1), (10, 4, 1), (9, 5, 1), (8, 6, 1), (10, 3, 1), (9, 4, 1), (8, 5, 1), (7, 8, 1), (10, 2, 1), (9, 3, 1), (8, 4, 1), (7, 5, 1), (6, 6, 1), (5, 7, 1), (10, 1, 1), (9, 2, 1), (8, 3, 1), (7, 4, 1), (6, 5, 1), (5, 6, 1), (5, 8, 1), (5, 5, 1), (5, 4, 1), (5, 3, 1), (5, 2, 1), (5, 1, 1)],
            },
            Identity {
                lhs: &[(15, 6, 1), (15, 7, -1)],
                base: (14, 7),
                a_factors: &[(14, 7, 1)],
            },
        ],
    },
    Table {
        family: Family::F,
        rank: 4,
        lowest: &[
            &[(6, 1, 1), (6, 2, -1)],
            &[(6, 2, 1), (6, 3, -2)],
            &[(6, 3, 1), (6, 4, -1)],
            &[(6, 4, 1)],
        ],
        identities: &[
            Identity {
                lhs: &[(6, 1, 1), (6, 2, -1)],
                base: (1, 1),
                a_factors: &[(5, 2, 1), (4, 3, 2), (3, 4, 2), (4, 2, 1), (3, 3, 2), (4, 1, 1), (3, 2, 2), (2, 3, 2), (1, 4, 2), (3, 1, 1), (2, 2, 1), (1, 3, 2), (1, 2, 1), (1, 1, 1)],
            },
            Identity {
                lhs: &[(6, 2, 1), (6, 3, -2)],
                base: (2, 1),
                a_factors: &[(5, 3, 2), (4, 4, 2), (5, 2, 1), (4, 3, 2), (5, 1, 1), (4, 2, 2), (3, 3, 2), (2, 4, 2), (4, 1, 1), (3, 2, 1), (2, 3, 2), (2, 2, 1), (2, 1, 1)],
            },
            Identity {
                lhs: &[(6, 3, 1), (6, 4, -1)],
                base: (5, 4),
                a_factors: &[(5, 4, 1)],
            },
        ],
    },
];
