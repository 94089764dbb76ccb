//! The twisted quantum Bruhat graph on the finite Weyl group.
//!
//! An edge `w -> w s_gamma` (gamma positive) is Bruhat when the length goes up
//! by one and quantum when it drops by `<2 rho^vee, gamma> - 1`. The graph is
//! stored as a dense table over (element, positive root) so that path
//! enumeration only does lookups.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::affine::AffineRoot;
use crate::error::{Error, Result};
use crate::rootsys::{AffineType, Root, RootSystem};
use crate::weyl::{hat_sigma, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

/// `from -> to = from s_label`, with group elements given by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QbgEdge {
    pub from: usize,
    pub to: usize,
    /// Index of the positive root labelling the edge.
    pub label: usize,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone)]
pub struct Tqbg {
    tag: AffineType,
    /// `table[w][k]`: kind of the edge `w -> w s_k`, if any.
    table: Vec<Vec<Option<EdgeKind>>>,
    reversed: bool,
}

impl Tqbg {
    pub fn build(rs: &RootSystem, g: &WeylGroup) -> Self {
        let table = (0..g.order())
            .map(|w| {
                (0..rs.positive_roots().len())
                    .map(|k| classify(rs, g, w, k))
                    .collect()
            })
            .collect();
        Self { tag: rs.tag(), table, reversed: false }
    }

    pub fn tag(&self) -> AffineType {
        self.tag
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn vertex_count(&self) -> usize {
        self.table.len()
    }

    /// Kind of the edge out of `w` labelled by the `k`-th positive root.
    ///
    /// In the reversed graph this is the kind of the original edge
    /// `w s_k -> w`.
    pub fn edge_kind(&self, g: &WeylGroup, w: usize, k: usize) -> Option<EdgeKind> {
        if self.reversed {
            self.table[g.mul_reflection(w, k)][k]
        } else {
            self.table[w][k]
        }
    }

    /// Kind of the stored edge `w -> w s_k`, ignoring the reversal flag.
    #[inline]
    pub fn forward_kind(&self, w: usize, k: usize) -> Option<EdgeKind> {
        self.table[w][k]
    }

    /// Kind of the stored edge `w s_k -> w`, ignoring the reversal flag.
    #[inline]
    pub fn reverse_kind(&self, g: &WeylGroup, w: usize, k: usize) -> Option<EdgeKind> {
        self.table[g.mul_reflection(w, k)][k]
    }

    pub fn edges(&self, g: &WeylGroup) -> Vec<QbgEdge> {
        let mut out = Vec::new();
        for w in 0..self.table.len() {
            for k in 0..self.table[w].len() {
                if let Some(kind) = self.edge_kind(g, w, k) {
                    out.push(QbgEdge { from: w, to: g.mul_reflection(w, k), label: k, kind });
                }
            }
        }
        out
    }

    /// The graph with every arrow flipped.
    pub fn reverse(&self) -> Self {
        Self { reversed: !self.reversed, ..self.clone() }
    }

    /// Edge `sigma -> sigma s_gamma` for a positive root `gamma`.
    pub fn edge_exists(
        &self,
        rs: &RootSystem,
        g: &WeylGroup,
        sigma: usize,
        gamma: &Root,
    ) -> Result<Option<QbgEdge>> {
        let k = positive_label(rs, gamma)?;
        Ok(self.edge_kind(g, sigma, k).map(|kind| QbgEdge {
            from: sigma,
            to: g.mul_reflection(sigma, k),
            label: k,
            kind,
        }))
    }

    pub fn to_dot(&self, rs: &RootSystem, g: &WeylGroup) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph tqbg {{");
        let _ = writeln!(s, "  label=\"{}\";", self.tag);
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.sort_by_key(|&w| (g.length(w), g.element(w).word().to_vec()));
        for &w in &order {
            let _ = writeln!(s, "  \"{}\";", g.element(w));
        }
        for e in sorted_edges(self.edges(g), g) {
            let style = match e.kind {
                EdgeKind::Bruhat => "solid",
                EdgeKind::Quantum => "dashed",
            };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\", style={style}];",
                g.element(e.from),
                g.element(e.to),
                AffineRoot::new(rs.positive_roots()[e.label].clone(), 0)
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, rs: &RootSystem, g: &WeylGroup) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row {
            from: String,
            to: String,
            label: Vec<i64>,
            kind: EdgeKind,
        }
        let rows: Vec<Row> = sorted_edges(self.edges(g), g)
            .into_iter()
            .map(|e| Row {
                from: g.element(e.from).to_string(),
                to: g.element(e.to).to_string(),
                label: rs.positive_roots()[e.label].0.clone(),
                kind: e.kind,
            })
            .collect();
        serde_json::to_value(rows).expect("edges serialize")
    }
}

fn sorted_edges(mut edges: Vec<QbgEdge>, g: &WeylGroup) -> Vec<QbgEdge> {
    edges.sort_by_key(|e| {
        (
            g.length(e.from),
            g.element(e.from).word().to_vec(),
            e.label,
            g.element(e.to).word().to_vec(),
        )
    });
    edges
}

fn positive_label(rs: &RootSystem, gamma: &Root) -> Result<usize> {
    if gamma.dim() != rs.rank() {
        return Err(Error::Usage("root dimension mismatch".into()));
    }
    rs.positive_index(gamma).ok_or_else(|| {
        Error::Domain(format!("edge labels must be positive roots, got {:?}", gamma.0))
    })
}

fn classify(rs: &RootSystem, g: &WeylGroup, w: usize, k: usize) -> Option<EdgeKind> {
    let lw = g.length(w) as i64;
    let lv = g.length(g.mul_reflection(w, k)) as i64;
    if lv == lw + 1 {
        Some(EdgeKind::Bruhat)
    } else if lv == lw - rs.two_rho_pairing(&rs.positive_roots()[k]) + 1 {
        Some(EdgeKind::Quantum)
    } else {
        None
    }
}

/// Whether a step of the given kind may use an entry of the given shifted
/// degree. `A2n~2` forbids quantum steps at odd degree, the dagger variant
/// forbids Bruhat steps at odd degree.
pub fn step_allowed(kind: EdgeKind, shifted_deg: i64, tag: AffineType) -> bool {
    let odd = shifted_deg.rem_euclid(2) == 1;
    match tag {
        AffineType::A2_2 | AffineType::A2n_2(_) => !(odd && kind == EdgeKind::Quantum),
        AffineType::A2n_2Dagger(_) => !(odd && kind == EdgeKind::Bruhat),
        _ => true,
    }
}

/// Maps each edge `u -> u s_gamma` to `w0 u -> w0 u s_gamma`, keeping label
/// and kind. In every type handled here `w0 = -1` is central, so literal
/// conjugation `u -> w0 u w0` is the identity map; left multiplication is
/// the action that turns the graph into its reverse.
pub fn conjugate_by_w0(g: &WeylGroup, edges: &[QbgEdge]) -> BTreeSet<QbgEdge> {
    let w0 = g.longest();
    edges
        .iter()
        .map(|e| QbgEdge {
            from: g.multiply(w0, e.from),
            to: g.multiply(w0, e.to),
            label: e.label,
            kind: e.kind,
        })
        .collect()
}

/// Does the `k`-th positive root lie in a rank-two subsystem spanned by two
/// positive roots, as a long nonsimple root of that subsystem?
///
/// The subsystem generated by `a, b` is `Delta` intersected with
/// `Z a + Z b`; it must be non-simply-laced for "long" to mean anything.
fn long_nonsimple_in_rank_two(rs: &RootSystem, k: usize) -> bool {
    let gamma = &rs.positive_roots()[k];
    if rs.positive_len(k) == 1 {
        return false;
    }
    let pos = rs.positive_roots();
    for (ia, a) in pos.iter().enumerate() {
        for b in &pos[ia + 1..] {
            // The rank-two subsystem is the set of roots in the plane of a, b.
            let sub: Vec<usize> = (0..pos.len())
                .filter(|&m| in_span(&pos[m], a, b))
                .collect();
            if !sub.contains(&k) {
                continue;
            }
            let lens: BTreeSet<i64> = sub.iter().map(|&m| rs.positive_len(m)).collect();
            if lens.len() < 2 {
                continue;
            }
            // Simple roots of the subsystem: positive members that are not
            // sums of two positive members.
            let is_sum = sub.iter().any(|&x| {
                sub.iter().any(|&y| pos[x].add(&pos[y]) == *gamma)
            });
            if is_sum {
                return true;
            }
        }
    }
    false
}

/// `r` in the rational plane spanned by `a` and `b` (which are independent).
fn in_span(r: &Root, a: &Root, b: &Root) -> bool {
    let n = r.dim();
    // All 3x3 minors of [a b r] vanish.
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let m = |v: &Root, idx: usize| v.0[idx] as i128;
                let det = m(a, i) * (m(b, j) * m(r, l) - m(b, l) * m(r, j))
                    - m(a, j) * (m(b, i) * m(r, l) - m(b, l) * m(r, i))
                    + m(a, l) * (m(b, i) * m(r, j) - m(b, j) * m(r, i));
                if det != 0 {
                    return false;
                }
            }
        }
    }
    // Rank two needs a and b independent.
    (0..n).any(|i| (i + 1..n).any(|j| a.0[i] * b.0[j] != a.0[j] * b.0[i]))
}

/// Which parts of the hat-root edge test rule out an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CriterionParts {
    /// Some positive `a, b != gamma` satisfy the relation before and after `sigma-hat`.
    pub relation: bool,
    /// `sigma gamma < 0` and `gamma` is a long nonsimple root of a rank-two subsystem.
    pub rank_two: bool,
}

impl CriterionParts {
    pub fn edge(self) -> bool {
        !self.relation && !self.rank_two
    }
}

/// Evaluates both obstructions of the hat-root edge test separately.
pub fn criterion_parts(
    rs: &RootSystem,
    g: &WeylGroup,
    sigma: usize,
    gamma: &Root,
) -> Result<CriterionParts> {
    if !rs.tag().is_dual_untwisted() {
        return Err(Error::Config(format!(
            "edge criterion is stated for dual untwisted types, not {}",
            rs.tag()
        )));
    }
    let k = positive_label(rs, gamma)?;
    let s = g.element(sigma);
    let hat = |r: &Root| hat_sigma(rs, s, &AffineRoot::new(r.clone(), 0));
    let hat_gamma = hat(gamma)?;
    let co = rs.coroot(gamma)?;
    let pos = rs.positive_roots();
    let mut parts = CriterionParts::default();
    for (ia, a) in pos.iter().enumerate() {
        if ia == k {
            continue;
        }
        let c = rs.pair_root(a, &co);
        let b = gamma.scale(c).sub(a);
        let Some(ib) = rs.positive_index(&b) else { continue };
        if ib == k {
            continue;
        }
        if hat(a)?.add(&hat(&b)?) == hat_gamma.scale(c) {
            parts.relation = true;
            break;
        }
    }
    parts.rank_two = !s.act_root(gamma).is_positive() && long_nonsimple_in_rank_two(rs, k);
    Ok(parts)
}

/// Edge test through hat-root relations, dual untwisted types only: there
/// is an edge `sigma -> sigma s_gamma` iff no positive `a, b != gamma`
/// satisfy `a + b = <a, gamma^vee> gamma` together with the same relation
/// after `sigma-hat`, and, when `sigma gamma` is negative, `gamma` is not a
/// long nonsimple root of a rank-two subsystem.
pub fn edge_exists_criterion(
    rs: &RootSystem,
    g: &WeylGroup,
    sigma: usize,
    gamma: &Root,
) -> Result<bool> {
    Ok(criterion_parts(rs, g, sigma, gamma)?.edge())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(tag: AffineType) -> (RootSystem, WeylGroup, Tqbg) {
        let rs = RootSystem::build(tag).unwrap();
        let g = WeylGroup::build(&rs).unwrap();
        let t = Tqbg::build(&rs, &g);
        (rs, g, t)
    }

    #[test]
    fn rank_one_graph() {
        let (rs, g, t) = setup(AffineType::A2_2);
        let edges = t.edges(&g);
        assert_eq!(edges.len(), 2);
        let a = Root(vec![1]);
        assert_eq!(t.edge_exists(&rs, &g, 0, &a).unwrap().unwrap().kind, EdgeKind::Bruhat);
        assert_eq!(t.edge_exists(&rs, &g, 1, &a).unwrap().unwrap().kind, EdgeKind::Quantum);
        let r = t.reverse();
        assert_eq!(r.edge_exists(&rs, &g, 0, &a).unwrap().unwrap().kind, EdgeKind::Quantum);
        assert_eq!(r.reverse().edges(&g), edges);
        assert!(matches!(t.edge_exists(&rs, &g, 0, &Root(vec![-1])), Err(Error::Domain(_))));
    }

    #[test]
    fn quantum_drop_and_out_edges() {
        for tag in [AffineType::D3_2, AffineType::D4_3, AffineType::Dn1_2(3), AffineType::A2n1_2(3)] {
            let (rs, g, t) = setup(tag);
            for e in t.edges(&g) {
                let drop = g.length(e.from) as i64 - g.length(e.to) as i64;
                match e.kind {
                    EdgeKind::Bruhat => assert_eq!(drop, -1),
                    EdgeKind::Quantum => {
                        assert_eq!(drop, rs.two_rho_pairing(&rs.positive_roots()[e.label]) - 1)
                    }
                }
            }
            for w in 0..g.order() {
                let kinds: Vec<EdgeKind> = t.edges(&g).into_iter().filter(|e| e.from == w).map(|e| e.kind).collect();
                assert_eq!(kinds.contains(&EdgeKind::Bruhat), w != g.longest());
                assert_eq!(kinds.contains(&EdgeKind::Quantum), w != 0);
            }
        }
    }

    #[test]
    fn step_rules() {
        assert!(!step_allowed(EdgeKind::Quantum, 3, AffineType::A2_2));
        assert!(step_allowed(EdgeKind::Quantum, 2, AffineType::A2_2));
        assert!(step_allowed(EdgeKind::Bruhat, 3, AffineType::A2_2));
        assert!(!step_allowed(EdgeKind::Bruhat, 1, AffineType::A2n_2Dagger(2)));
        assert!(step_allowed(EdgeKind::Quantum, 1, AffineType::A2n_2Dagger(2)));
        assert!(step_allowed(EdgeKind::Quantum, 1, AffineType::D4_3));
    }

    #[test]
    fn dot_is_deterministic() {
        let (rs, g, t) = setup(AffineType::D3_2);
        let a = t.to_dot(&rs, &g);
        assert_eq!(a, t.to_dot(&rs, &g));
        assert_eq!(a.matches(" -> ").count(), 22);
        assert_eq!(a.matches("style=dashed").count(), 10);
    }
}
