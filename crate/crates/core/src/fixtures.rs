//! Published reference data and the self-test that replays it.
//!
//! Roots are written as coefficient vectors over the simple roots, weights as
//! coefficient vectors over the fundamental weights. Polynomials are lists of
//! `(weight, q exponent, coefficient)`.
//!
//! Three of the printed rank-one characters disagree with the two-term
//! module recursion (the `x -> x^{-1}` symmetry at `q = 1` of `ch W_{-4 omega}`
//! fails outright, and `ch W_{3 omega}` inherits the `ch W_{2 omega}` slip
//! through `ch W_{3 omega} = x ch W_{2 omega}`). One printed beta-sequence has two adjacent entries in the
//! opposite order to the sort rule it was produced by. The self-test reports
//! these as known mismatches and checks the computed value against the
//! correction instead.

use crate::affine::{beta_sequence, AffineRoot};
use crate::charpoly::CharPoly;
use crate::error::Result;
use crate::model::Model;
use crate::oschar::{a2n2_dim_formula, a2n2_dim_weight, c_poly, dim_weyl};
use crate::rootsys::{AffineType, Root, Weight};

/// `(weight, q, coeff)` triples for rank one.
pub type RankOneTerms = &'static [(i64, i64, i64)];

/// Printed characters `ch W_{m omega}` in type `A2~2`, keyed by `m`.
pub const A2_PRINTED: &[(i64, RankOneTerms)] = &[
    (0, &[(0, 0, 1)]),
    (1, &[(1, 0, 1)]),
    (-1, &[(-1, 0, 1), (1, 0, 1)]),
    (2, &[(2, 0, 1), (0, 1, 1), (2, 1, 1)]),
    (-2, &[(-2, 0, 1), (0, 0, 1), (2, 0, 1)]),
    (3, &[(3, 0, 1), (1, 1, 1), (3, 1, 1)]),
    (-3, &[(-3, 0, 1), (-1, 0, 1), (-1, 1, 1), (1, 0, 1), (1, 1, 1), (3, 0, 1)]),
    (
        4,
        &[
            (4, 0, 1),
            (2, 1, 1),
            (2, 2, 1),
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, 1),
            (-2, 2, 1),
            (-2, 3, 1),
            (-4, 2, 1),
        ],
    ),
    (
        -4,
        &[
            (-4, 0, 1),
            (-2, 0, 1),
            (-2, 1, 2),
            (0, 0, 1),
            (0, 1, 1),
            (2, 0, 1),
            (2, 1, 1),
            (4, 0, 1),
        ],
    ),
    (
        5,
        &[
            (5, 0, 1),
            (3, 1, 1),
            (3, 2, 1),
            (1, 1, 1),
            (1, 2, 1),
            (1, 3, 1),
            (-1, 2, 1),
            (-1, 3, 1),
            (-3, 2, 1),
        ],
    ),
];

/// Corrections of the printed entries that fail the module recursion.
pub const A2_CORRECTED: &[(i64, RankOneTerms)] = &[
    (2, &[(2, 0, 1), (0, 1, 1), (-2, 1, 1)]),
    (3, &[(3, 0, 1), (1, 1, 1), (-1, 1, 1)]),
    (
        -4,
        &[
            (-4, 0, 1),
            (-2, 0, 1),
            (-2, 1, 1),
            (0, 0, 1),
            (0, 1, 2),
            (2, 0, 1),
            (2, 1, 1),
            (4, 0, 1),
        ],
    ),
];

pub fn rank_one_poly(terms: RankOneTerms) -> CharPoly {
    CharPoly::from_terms(terms.iter().map(|&(x, q, c)| (vec![x], q, c)))
}

/// Printed `A2~2` dimension formula, verbatim.
pub fn a2_dim_printed(m: i64) -> i64 {
    let pow = |e: i64| if e < 0 { 0 } else { 3i64.pow(e as u32) };
    match (m >= 0, m.rem_euclid(2) == 0) {
        (true, true) => pow(m / 2),
        (false, true) => pow(-m / 2),
        (true, false) => pow((m - 1) / 2),
        (false, false) => 2 * pow((-m + 1) / 2),
    }
}

/// `A2~2` with `m` mapped to `(sigma, lambda)`: `W_{m omega}` is
/// `W_{s(-m omega)}` for `m > 0`.
pub fn a2_sigma_lambda(m: i64) -> (usize, Weight) {
    if m > 0 {
        (1, Weight(vec![-m]))
    } else {
        (0, Weight(vec![m]))
    }
}

type RootList = &'static [(&'static [i64], i64)];

/// Printed `D3~2` sequences (B2, `alpha_1` short).
pub const D32_BETAS: &[(usize, RootList)] = &[
    (1, &[(&[-1, 0], 1), (&[-2, -1], 2), (&[-1, -1], 1)]),
    (2, &[(&[0, -1], 2), (&[-1, -1], 2), (&[-2, -1], 2), (&[-1, -1], 1)]),
];

/// Printed `D4~3` sequences (G2, `alpha_1` short).
pub const G2_BETAS: &[(usize, RootList)] = &[
    (
        1,
        &[
            (&[-1, 0], 1),
            (&[-3, -1], 3),
            (&[-2, -1], 2),
            (&[-3, -2], 3),
            (&[-1, -1], 1),
            (&[-2, -1], 1),
        ],
    ),
    (
        2,
        &[
            (&[0, -1], 3),
            (&[-1, -1], 3),
            (&[-3, -2], 6),
            (&[-2, -1], 3),
            (&[-1, -1], 2),
            (&[-3, -1], 3),
            (&[-2, -1], 2),
            (&[-3, -2], 3),
            (&[-1, -1], 1),
            (&[-2, -1], 1),
        ],
    ),
];

/// `(type, i, position)`: the printed sequence has entries `position` and
/// `position + 1` (0-based) swapped relative to the sort key.
pub const BETA_SWAPS: &[(AffineType, usize, usize)] = &[(AffineType::D4_3, 2, 4)];

pub fn root_list(list: RootList) -> Vec<AffineRoot> {
    list.iter()
        .map(|(re, d)| AffineRoot::new(Root(re.to_vec()), *d))
        .collect()
}

/// Arrows of the drawn `D3~2` graph as `(from, to)` reduced words.
pub const D32_DRAWN_EDGES: &[(&str, &str)] = &[
    ("id", "s1"),
    ("s1", "id"),
    ("id", "s2"),
    ("s2", "id"),
    ("s1", "s1 s2"),
    ("s1 s2", "s1"),
    ("s2", "s2 s1"),
    ("s2 s1", "s2"),
    ("s1 s2", "s1 s2 s1"),
    ("s1 s2 s1", "s1 s2"),
    ("s2 s1", "s2 s1 s2"),
    ("s2 s1 s2", "s2 s1"),
    ("s1 s2 s1", "s1 s2 s1 s2"),
    ("s1 s2 s1 s2", "s1 s2 s1"),
    ("s2 s1 s2", "s1 s2 s1 s2"),
    ("s1 s2 s1 s2", "s2 s1 s2"),
    ("s1", "s2 s1"),
    ("s2", "s1 s2"),
    ("s1 s2", "s2 s1 s2"),
    ("s2 s1", "s1 s2 s1"),
    ("s2 s1 s2", "id"),
    ("s1 s2 s1 s2", "s1"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// Printed value differs; the computed value matches the documented correction.
    KnownMismatch,
    Fail,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

/// Replays every published fixture against the engine.
pub fn selftest() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let a2 = Model::get(AffineType::A2_2)?;
    for &(m, terms) in A2_PRINTED {
        let (sigma, lam) = a2_sigma_lambda(m);
        let got = c_poly(&a2, sigma, &lam)?;
        let printed = rank_one_poly(terms);
        let name = format!("A2~2 ch W_{{{m}w}}");
        if got == printed {
            out.push(check(name, true, got.to_string()));
            continue;
        }
        let corrected = A2_CORRECTED.iter().find(|(k, _)| *k == m).map(|(_, t)| rank_one_poly(t));
        out.push(match corrected {
            Some(c) if c == got => Check {
                name,
                status: Status::KnownMismatch,
                detail: format!("printed {printed}; computed {got} (matches the recursion)"),
            },
            _ => check(name, false, format!("printed {printed}; computed {got}")),
        });
    }

    let b2 = Model::get(AffineType::D3_2)?;
    let roots: Vec<Vec<i64>> = b2.rs.positive_roots().iter().map(|r| r.0.clone()).collect();
    let mut sorted = roots.clone();
    sorted.sort();
    out.push(check(
        "D3~2 positive roots",
        sorted == vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1]],
        format!("{roots:?}"),
    ));
    let co = b2.rs.coroot(&Root(vec![2, 1]))?;
    out.push(check("D3~2 coroot of 2a1+a2", co.0 == vec![1, 1], format!("{:?}", co.0)));

    for (tag, table) in [(AffineType::D3_2, D32_BETAS), (AffineType::D4_3, G2_BETAS)] {
        let m = Model::get(tag)?;
        for &(i, list) in table {
            let got = beta_sequence(&m.rs, i - 1)?;
            let printed = root_list(list);
            let name = format!("{tag} beta sequence i={i}");
            if got.roots() == printed {
                out.push(check(name, true, got.to_string()));
                continue;
            }
            let mut corrected = printed.clone();
            let swap = BETA_SWAPS.iter().find(|(t, k, _)| *t == tag && *k == i);
            if let Some(&(_, _, pos)) = swap {
                corrected.swap(pos, pos + 1);
            }
            out.push(if swap.is_some() && got.roots() == corrected {
                Check {
                    name,
                    status: Status::KnownMismatch,
                    detail: format!("computed {got}; printed order swaps two adjacent entries"),
                }
            } else {
                check(name, false, got.to_string())
            });
        }
    }

    let g = &b2.group;
    let mut drawn = Vec::new();
    for (a, b) in D32_DRAWN_EDGES {
        drawn.push((g.parse(&b2.rs, a)?, g.parse(&b2.rs, b)?));
    }
    drawn.sort();
    let mut built: Vec<(usize, usize)> = b2.graph.edges(g).iter().map(|e| (e.from, e.to)).collect();
    built.sort();
    out.push(check(
        "D3~2 graph matches drawn edges",
        drawn == built,
        format!("{} drawn, {} built", drawn.len(), built.len()),
    ));

    let a4 = Model::get(AffineType::A2n_2(2))?;
    for m in [[1u32, 0], [0, 1]] {
        let lam = a2n2_dim_weight(&m);
        let d = dim_weyl(&a4, 0, &lam)?;
        let f = a2n2_dim_formula(2, &m)?;
        out.push(check(format!("A2n~2:2 dim at m={m:?}"), d as u128 == f, format!("{d} vs {f}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_has_no_unexpected_failures() {
        let checks = selftest().unwrap();
        for c in &checks {
            assert_ne!(c.status, Status::Fail, "{}: {}", c.name, c.detail);
        }
        let known: Vec<&str> = checks
            .iter()
            .filter(|c| c.status == Status::KnownMismatch)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(
            known,
            ["A2~2 ch W_{2w}", "A2~2 ch W_{3w}", "A2~2 ch W_{-4w}", "D4~3 beta sequence i=2"]
        );
    }

    #[test]
    fn corrections_keep_dimension() {
        for &(m, terms) in A2_CORRECTED {
            let printed = A2_PRINTED.iter().find(|(k, _)| *k == m).unwrap().1;
            assert_eq!(rank_one_poly(terms).eval_one(), rank_one_poly(printed).eval_one());
        }
        let neg4 = rank_one_poly(A2_CORRECTED[2].1).at_q_one();
        for (w, c) in &neg4 {
            assert_eq!(neg4.get(&w.neg()), Some(c));
        }
    }

    #[test]
    fn printed_dimension_formula() {
        assert_eq!(a2_dim_printed(4), 9);
        assert_eq!(a2_dim_printed(-3), 18);
    }
}
