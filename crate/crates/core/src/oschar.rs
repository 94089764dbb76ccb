//! Alcove paths over beta-sequences and the character polynomials they sum to.
//!
//! A path scans the shifted sequence `beta_1, ..., beta_l` of `t_lambda`. Its
//! state is the current direction `d` in `W` and the current end in `W^e`,
//! starting at `u t_lambda`. Selecting entry `j` requires an edge
//! `d -> d s_{Re beta_j}` in the graph (of an allowed kind at that degree)
//! and multiplies the end on the right by the affine reflection of
//! `beta_j`. Quantum steps contribute the degree of `beta_j` to the
//! `q`-exponent, halved in mixed type.
//!
//! Since the change of the end translation depends only on `d`, sums over
//! paths are computed by dynamic programming over `(position, direction)`.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{
    beta_sequence, beta_sequence_translation, check_antidominant, default_peel_order,
    shift_betas, AffineWeylElement, BetaSequence,
};
use crate::charpoly::CharPoly;
use crate::error::{Error, Result};
use crate::model::Model;
use crate::rootsys::{AffineType, Weight};
use crate::tqbg::{step_allowed, EdgeKind};

/// One selectable entry of a shifted sequence, preprocessed.
#[derive(Debug, Clone)]
struct Step {
    /// Positive root index of `-Re beta`.
    label: usize,
    deg: i64,
    /// Translation part of the affine reflection, in weight coordinates.
    trans: Weight,
    /// `q`-exponent of a quantum step at this entry.
    qexp: i64,
}

fn quantum_exponent(tag: AffineType, deg: i64) -> i64 {
    match tag {
        // Only even degrees pass `step_allowed` here.
        AffineType::A2_2 | AffineType::A2n_2(_) => deg.div_euclid(2),
        _ => deg,
    }
}

fn prepare(model: &Model, seq: &BetaSequence) -> Result<Vec<Step>> {
    if !seq.is_shifted() {
        return Err(Error::Usage(format!(
            "sequence {} carries no shifted degrees",
            seq.label
        )));
    }
    let rs = &model.rs;
    seq.entries
        .iter()
        .map(|e| {
            let re = &e.root.re;
            let label = rs.positive_index(&re.neg()).ok_or_else(|| {
                Error::Domain(format!("entry {} does not have a negative real part", e.root))
            })?;
            let deg = e.degree();
            let len = rs.positive_len(label);
            if deg % len != 0 {
                return Err(Error::Domain(format!(
                    "entry {} has degree {deg} not divisible by len {len}",
                    e.root
                )));
            }
            Ok(Step {
                label,
                deg,
                trans: rs.root_to_weight(re).scale(-(deg / len)),
                qexp: quantum_exponent(rs.tag(), deg),
            })
        })
        .collect()
}

/// Outcome of trying to take step `s` from direction `d`.
#[inline]
fn try_step(model: &Model, reversed: bool, d: usize, s: &Step) -> Option<(usize, EdgeKind)> {
    let g = &model.group;
    let kind = if reversed {
        model.graph.reverse_kind(g, d, s.label)
    } else {
        model.graph.forward_kind(d, s.label)
    }?;
    if !step_allowed(kind, s.deg, model.tag()) {
        return None;
    }
    Some((g.mul_reflection(d, s.label), kind))
}

/// A valid choice of steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlcovePath {
    /// Selected positions, 0-based and increasing.
    pub j: Vec<usize>,
    /// Positions of quantum steps.
    pub j_minus: Vec<usize>,
    #[serde(skip)]
    pub end: AffineWeylElement,
    pub qwt_deg: i64,
    /// Directions visited, starting with `u`.
    pub dir_chain: Vec<usize>,
}

impl AlcovePath {
    pub fn weight(&self) -> &Weight {
        &self.end.trans
    }

    pub fn dir(&self) -> usize {
        self.end.dir
    }
}

fn dfs(
    model: &Model,
    steps: &[Step],
    reversed: bool,
    from: usize,
    cur: &mut AlcovePath,
    out: &mut Vec<AlcovePath>,
) {
    out.push(cur.clone());
    let g = &model.group;
    for j in from..steps.len() {
        let d = cur.end.dir;
        if let Some((next, kind)) = try_step(model, reversed, d, &steps[j]) {
            let saved_trans = cur.end.trans.clone();
            let saved_q = cur.qwt_deg;
            cur.end.trans = cur.end.trans.add(&g.element(d).act_weight(&steps[j].trans));
            cur.end.dir = next;
            cur.j.push(j);
            if kind == EdgeKind::Quantum {
                cur.j_minus.push(j);
                cur.qwt_deg += steps[j].qexp;
            }
            cur.dir_chain.push(next);
            dfs(model, steps, reversed, j + 1, cur, out);
            cur.dir_chain.pop();
            if kind == EdgeKind::Quantum {
                cur.j_minus.pop();
            }
            cur.j.pop();
            cur.end.dir = d;
            cur.end.trans = saved_trans;
            cur.qwt_deg = saved_q;
        }
    }
}

/// Every admissible path from `u` over the shifted sequence of `t_lambda`,
/// sorted by `j`. The empty path ends at `u t_lambda`.
pub fn enumerate_paths(
    model: &Model,
    u: usize,
    lambda: &Weight,
    seq: &BetaSequence,
    reversed: bool,
) -> Result<Vec<AlcovePath>> {
    let steps = prepare(model, seq)?;
    let start = start_state(model, u, lambda)?;
    // Split on the first selected position.
    let mut branches: Vec<Vec<AlcovePath>> = (0..steps.len())
        .into_par_iter()
        .map(|j0| {
            let mut out = Vec::new();
            let mut cur = start.clone();
            let g = &model.group;
            if let Some((next, kind)) = try_step(model, reversed, u, &steps[j0]) {
                cur.end.trans = cur.end.trans.add(&g.element(u).act_weight(&steps[j0].trans));
                cur.end.dir = next;
                cur.j.push(j0);
                if kind == EdgeKind::Quantum {
                    cur.j_minus.push(j0);
                    cur.qwt_deg += steps[j0].qexp;
                }
                cur.dir_chain.push(next);
                dfs(model, &steps, reversed, j0 + 1, &mut cur, &mut out);
            }
            out
        })
        .collect();
    let mut all = vec![start];
    for b in branches.iter_mut() {
        all.append(b);
    }
    all.sort_by(|a, b| a.j.cmp(&b.j));
    Ok(all)
}

fn start_state(model: &Model, u: usize, lambda: &Weight) -> Result<AlcovePath> {
    let g = &model.group;
    if u >= g.order() {
        return Err(Error::Usage(format!("Weyl element index {u} out of range")));
    }
    if lambda.dim() != model.rs.rank() {
        return Err(Error::Usage(format!(
            "weight has {} coordinates, expected {}",
            lambda.dim(),
            model.rs.rank()
        )));
    }
    Ok(AlcovePath {
        j: Vec::new(),
        j_minus: Vec::new(),
        end: AffineWeylElement { trans: g.element(u).act_weight(lambda), dir: u },
        qwt_deg: 0,
        dir_chain: vec![u],
    })
}

/// Every subset of positions checked one by one: no pruning, no sharing.
/// Exponential; meant as a cross-check on short sequences.
pub fn enumerate_paths_naive(
    model: &Model,
    u: usize,
    lambda: &Weight,
    seq: &BetaSequence,
    reversed: bool,
) -> Result<Vec<AlcovePath>> {
    let steps = prepare(model, seq)?;
    let start = start_state(model, u, lambda)?;
    if steps.len() > 24 {
        return Err(Error::Usage("naive enumeration limited to 24 steps".into()));
    }
    let g = &model.group;
    let mut out = Vec::new();
    'subsets: for mask in 0u32..(1u32 << steps.len()) {
        let mut cur = start.clone();
        for (j, s) in steps.iter().enumerate() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let d = cur.end.dir;
            match try_step(model, reversed, d, s) {
                Some((next, kind)) => {
                    cur.end.trans = cur.end.trans.add(&g.element(d).act_weight(&s.trans));
                    cur.end.dir = next;
                    cur.j.push(j);
                    if kind == EdgeKind::Quantum {
                        cur.j_minus.push(j);
                        cur.qwt_deg += s.qexp;
                    }
                    cur.dir_chain.push(next);
                }
                None => continue 'subsets,
            }
        }
        out.push(cur);
    }
    out.sort_by(|a, b| a.j.cmp(&b.j));
    Ok(out)
}

/// Sum of `x^{wt(end)} q^{qwt}` over a list of paths.
pub fn sum_paths(rank: usize, paths: &[AlcovePath]) -> CharPoly {
    let mut p = CharPoly::zero();
    for path in paths {
        p.add_term(path.end.trans.clone(), path.qwt_deg, 1);
    }
    debug_assert!(rank == 0 || paths.iter().all(|x| x.end.trans.dim() == rank));
    p
}

/// Path generating function by dynamic programming over
/// `(position, direction)`: `x^{u lambda}` times the sum of the increments.
pub fn path_polynomial(
    model: &Model,
    u: usize,
    lambda: &Weight,
    seq: &BetaSequence,
    reversed: bool,
) -> Result<CharPoly> {
    let steps = prepare(model, seq)?;
    let start = start_state(model, u, lambda)?;
    let g = &model.group;
    let n = model.rs.rank();

    // Forward: directions reachable before each position.
    let mut reach: Vec<BTreeSet<usize>> = Vec::with_capacity(steps.len() + 1);
    reach.push(BTreeSet::from([u]));
    for s in &steps {
        let mut next = reach.last().expect("nonempty").clone();
        for &d in reach.last().expect("nonempty") {
            if let Some((e, _)) = try_step(model, reversed, d, s) {
                next.insert(e);
            }
        }
        reach.push(next);
    }

    // Backward: suffix sums for each reachable direction.
    let mut suffix: HashMap<usize, CharPoly> = reach[steps.len()]
        .iter()
        .map(|&d| (d, CharPoly::one(n)))
        .collect();
    for j in (0..steps.len()).rev() {
        let s = &steps[j];
        let dirs: Vec<usize> = reach[j].iter().copied().collect();
        let computed: Vec<(usize, CharPoly)> = dirs
            .par_iter()
            .map(|&d| {
                let mut p = suffix[&d].clone();
                if let Some((e, kind)) = try_step(model, reversed, d, s) {
                    let q = if kind == EdgeKind::Quantum { s.qexp } else { 0 };
                    p.add_shifted(&suffix[&e], &g.element(d).act_weight(&s.trans), q);
                }
                (d, p)
            })
            .collect();
        suffix = computed.into_iter().collect();
    }
    Ok(suffix[&u].shifted(&start.end.trans, 0))
}

/// Shifted sequence of `t_lambda` for the default peel order.
pub fn translation_sequence(model: &Model, lambda: &Weight) -> Result<BetaSequence> {
    check_antidominant(lambda, model.rs.rank())?;
    beta_sequence_translation(&model.rs, lambda, &default_peel_order(lambda))
}

/// `C_u^{t_lambda}`, the character of the generalized Weyl module
/// `W_{u(lambda)}`.
pub fn c_poly(model: &Model, u: usize, lambda: &Weight) -> Result<CharPoly> {
    let seq = translation_sequence(model, lambda)?;
    path_polynomial(model, u, lambda, &seq, false)
}

/// As [`c_poly`] with an explicit peel order for the sequence.
pub fn c_poly_with_peel(model: &Model, u: usize, lambda: &Weight, peel: &[usize]) -> Result<CharPoly> {
    let seq = beta_sequence_translation(&model.rs, lambda, peel)?;
    path_polynomial(model, u, lambda, &seq, false)
}

/// `C_{t_mu u}^{t_lambda} = x^mu C_u^{t_lambda}`.
pub fn c_poly_translated(model: &Model, mu: &Weight, u: usize, lambda: &Weight) -> Result<CharPoly> {
    if mu.dim() != model.rs.rank() {
        return Err(Error::Usage("translation weight has the wrong dimension".into()));
    }
    Ok(c_poly(model, u, lambda)?.shifted(mu, 0))
}

/// `E_lambda(x; q, 0) = C_id^{t_lambda}`.
pub fn macdonald_t0(model: &Model, lambda: &Weight) -> Result<CharPoly> {
    c_poly(model, model.group.identity(), lambda)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TinfMethod {
    /// Paths in the reversed graph starting at the identity.
    ReversedGraph,
    /// `w0 C_{w0}^{t_lambda}`.
    W0Twist,
}

/// `E_lambda(x; q^{-1}, infinity)`, with `q` stored as the grading variable.
pub fn macdonald_tinf(model: &Model, lambda: &Weight, method: TinfMethod) -> Result<CharPoly> {
    match method {
        TinfMethod::ReversedGraph => {
            let seq = translation_sequence(model, lambda)?;
            path_polynomial(model, model.group.identity(), lambda, &seq, true)
        }
        TinfMethod::W0Twist => Ok(apply_w0(model, &c_poly(model, model.group.longest(), lambda)?)),
    }
}

/// `x^mu -> x^{w0 mu}`.
pub fn apply_w0(model: &Model, p: &CharPoly) -> CharPoly {
    let w0 = model.group.element(model.group.longest());
    p.map_weights(|mu| w0.act_weight(mu))
}

/// `dim W_{sigma(lambda)}`.
pub fn dim_weyl(model: &Model, sigma: usize, lambda: &Weight) -> Result<i64> {
    Ok(c_poly(model, sigma, lambda)?.eval_one())
}

/// One subquotient in the decomposition of `W_{sigma(lambda - omega_i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionPiece {
    pub kappa: usize,
    pub x_shift: Weight,
    pub q_shift: i64,
}

/// Splits `C_sigma^{t_{lambda - omega_i}}` along the first block of its
/// sequence (the `i`-th fundamental sequence shifted by `lambda`): each path
/// `p` through the block gives `q^{qwt(p)} x^{wt(end p) - kappa(lambda)}
/// C_kappa^{t_lambda}` with `kappa = dir(end p)`.
pub fn decompose(model: &Model, sigma: usize, lambda: &Weight, i: usize) -> Result<Vec<DecompositionPiece>> {
    let rs = &model.rs;
    check_antidominant(lambda, rs.rank())?;
    let block = shift_betas(rs, &beta_sequence(rs, i)?, lambda)?;
    let mut target = lambda.clone();
    target.0[i] -= 1;
    let paths = enumerate_paths(model, sigma, &target, &block, false)?;
    let g = &model.group;
    Ok(paths
        .into_iter()
        .map(|p| {
            let kappa = p.end.dir;
            DecompositionPiece {
                kappa,
                x_shift: p.end.trans.sub(&g.element(kappa).act_weight(lambda)),
                q_shift: p.qwt_deg,
            }
        })
        .collect())
}

/// `sum q^{q_shift} x^{x_shift} C_kappa^{t_lambda}` over the pieces.
pub fn reassemble(model: &Model, pieces: &[DecompositionPiece], lambda: &Weight) -> Result<CharPoly> {
    let mut cache: HashMap<usize, CharPoly> = HashMap::new();
    let mut out = CharPoly::zero();
    for p in pieces {
        let base = match cache.entry(p.kappa) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(c_poly(model, p.kappa, lambda)?),
        };
        out.add_shifted(base, &p.x_shift, p.q_shift);
    }
    Ok(out)
}

fn binomial(n: u64, k: u64) -> u128 {
    let mut r: u128 = 1;
    for t in 0..k {
        r = r * (n - t) as u128 / (t + 1) as u128;
    }
    r
}

/// `prod_i binom(2n+1, i)^{m_i}`, the dimension of `W(lambda)` in type
/// `A2n~2` for `lambda = sum_{i<n} m_i omega_i + 2 m_n omega_n`.
pub fn a2n2_dim_formula(n: usize, m: &[u32]) -> Result<u128> {
    if m.len() != n {
        return Err(Error::Usage(format!("expected {n} multiplicities, got {}", m.len())));
    }
    let mut out: u128 = 1;
    for (i, &mi) in m.iter().enumerate() {
        let b = binomial(2 * n as u64 + 1, i as u64 + 1);
        for _ in 0..mi {
            out = out
                .checked_mul(b)
                .ok_or_else(|| Error::Usage("dimension overflows u128".into()))?;
        }
    }
    Ok(out)
}

/// Antidominant weight matching [`a2n2_dim_formula`]: the last slot doubled.
pub fn a2n2_dim_weight(m: &[u32]) -> Weight {
    let n = m.len();
    Weight(
        m.iter()
            .enumerate()
            .map(|(i, &mi)| -(mi as i64) * if i + 1 == n { 2 } else { 1 })
            .collect(),
    )
}

/// `dim W_{m omega}` in type `A2~2`, read off the character table:
/// `3^{m/2}` (m even, m >= 0), `3^{-m/2}` (m even, m < 0),
/// `3^{(m-1)/2}` (m odd, m > 0), `2 * 3^{(-m-1)/2}` (m odd, m < 0).
pub fn a2_dim_piecewise(m: i64) -> i64 {
    let k = m.unsigned_abs() as u32;
    match (m >= 0, m % 2 == 0) {
        (true, true) => 3i64.pow(k / 2),
        (false, true) => 3i64.pow(k / 2),
        (true, false) => 3i64.pow((k - 1) / 2),
        (false, false) => 2 * 3i64.pow((k - 1) / 2),
    }
}
