//! Affine roots, the extended affine Weyl group as `X x| W`, and the
//! beta-sequences attached to translation elements.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};
use crate::weyl::WeylGroup;

/// `re + deg * delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot {
    pub re: Root,
    pub deg: i64,
}

impl AffineRoot {
    pub fn new(re: Root, deg: i64) -> Self {
        Self { re, deg }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.re.add(&other.re), self.deg + other.deg)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.re.scale(k), self.deg * k)
    }
}

/// Writes `c_1 a1 + ... + k d` in the compact form `-a1-a2+2d`.
pub fn format_root_expr(re: &[i64], deg: i64) -> String {
    let mut s = String::new();
    let mut term = |c: i64, name: &str| {
        if c == 0 {
            return;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(name);
    };
    for (i, &c) in re.iter().enumerate() {
        term(c, &format!("a{}", i + 1));
    }
    term(deg, "d");
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_root_expr(&self.re.0, self.deg))
    }
}

/// Element `t_trans * dir` of the extended affine Weyl group. `dir` is an
/// index into a [`WeylGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub trans: Weight,
    pub dir: usize,
}

impl AffineWeylElement {
    pub fn identity(n: usize) -> Self {
        Self { trans: Weight::zero(n), dir: 0 }
    }

    /// The translation `t_lambda`.
    pub fn t_lambda(lambda: Weight) -> Self {
        Self { trans: lambda, dir: 0 }
    }

    /// A finite Weyl group element viewed in `W^e`.
    pub fn finite(n: usize, w: usize) -> Self {
        Self { trans: Weight::zero(n), dir: w }
    }

    pub fn wt(&self) -> &Weight {
        &self.trans
    }

    pub fn dir(&self) -> usize {
        self.dir
    }

    /// `(mu1, w1)(mu2, w2) = (mu1 + w1 mu2, w1 w2)`.
    pub fn compose(&self, g: &WeylGroup, other: &Self) -> Self {
        let moved = g.element(self.dir).act_weight(&other.trans);
        Self {
            trans: self.trans.add(&moved),
            dir: g.multiply(self.dir, other.dir),
        }
    }

    pub fn inverse(&self, g: &WeylGroup) -> Self {
        let inv = g.inverse(self.dir);
        Self {
            trans: g.element(inv).act_weight(&self.trans).neg(),
            dir: inv,
        }
    }
}

/// Reflection in the affine hyperplane of `re + deg * delta`:
/// `t_{-(deg / len) re} s_re`, the translation written in weight coordinates.
pub fn affine_reflection(rs: &RootSystem, g: &WeylGroup, beta: &AffineRoot) -> Result<AffineWeylElement> {
    let len = rs.len(&beta.re)?;
    if beta.deg % len != 0 {
        return Err(Error::Domain(format!(
            "{beta}: degree not a multiple of len = {len}"
        )));
    }
    let k = beta.deg / len;
    Ok(AffineWeylElement {
        trans: rs.root_to_weight(&beta.re).scale(-k),
        dir: g.s_of_root(rs, &beta.re)?,
    })
}

/// Parity of a shifted degree, only meaningful for mixed types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// One entry of a [`BetaSequence`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaEntry {
    /// Root as produced by the fundamental sequence, before any shift.
    pub root: AffineRoot,
    /// Degree after the shift by a weight, if one was applied.
    pub shifted: Option<i64>,
}

impl BetaEntry {
    /// Shifted degree when present, otherwise the plain degree.
    pub fn degree(&self) -> i64 {
        self.shifted.unwrap_or(self.root.deg)
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.degree())
    }
}

/// Ordered affine roots attached to a translation element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSequence {
    /// Human-readable origin, e.g. `i=2` or `lambda=[-1,-1]`.
    pub label: String,
    pub entries: Vec<BetaEntry>,
}

#[derive(Serialize)]
struct EntryJson<'a> {
    re: &'a [i64],
    deg: i64,
    shifted: i64,
    parity: Parity,
}

impl BetaSequence {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `true` when every entry carries a shifted degree.
    pub fn is_shifted(&self) -> bool {
        self.entries.iter().all(|e| e.shifted.is_some())
    }

    pub fn roots(&self) -> Vec<AffineRoot> {
        self.entries.iter().map(|e| e.root.clone()).collect()
    }

    /// Entries with their shifted degree folded into `deg`.
    pub fn effective_roots(&self) -> Vec<AffineRoot> {
        self.entries
            .iter()
            .map(|e| AffineRoot::new(e.root.re.clone(), e.degree()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<EntryJson> = self
            .entries
            .iter()
            .map(|e| EntryJson {
                re: &e.root.re.0,
                deg: e.root.deg,
                shifted: e.degree(),
                parity: e.parity(),
            })
            .collect();
        serde_json::to_value(rows).expect("beta entries serialize")
    }
}

impl fmt::Display for BetaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| match e.shifted {
                Some(k) if k != e.root.deg => format!("{} [{}]", e.root, k),
                _ => e.root.to_string(),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_index(rs: &RootSystem, i: usize) -> Result<()> {
    if i >= rs.rank() {
        return Err(Error::Usage(format!(
            "fundamental index {} out of range 1..={}",
            i + 1,
            rs.rank()
        )));
    }
    Ok(())
}

/// The roots `gamma + len(gamma) k delta`, `k = 1..-<gamma^vee, omega_i>`,
/// over negative `gamma`; `i` is 0-based.
pub fn beta_multiset(rs: &RootSystem, i: usize) -> Result<Vec<AffineRoot>> {
    check_index(rs, i)?;
    let mut out = Vec::new();
    for (k, alpha) in rs.positive_roots().iter().enumerate() {
        let c = rs.positive_coroot(k).0[i];
        let len = rs.positive_len(k);
        for m in 1..=c {
            out.push(AffineRoot::new(alpha.neg(), len * m));
        }
    }
    Ok(out)
}

/// `r_i`, the length of the fundamental sequence.
pub fn beta_length(rs: &RootSystem, i: usize) -> Result<usize> {
    check_index(rs, i)?;
    Ok((0..rs.positive_roots().len())
        .map(|k| rs.positive_coroot(k).0[i] as usize)
        .sum())
}

/// Sort key of an entry of the `i`-th fundamental sequence: with
/// `-(re)^vee = sum a_k alpha_k^vee`, the vector
/// `(len * a_i / deg, a_j / a_i for j != i ascending)`.
fn order_key(rs: &RootSystem, i: usize, beta: &AffineRoot) -> Result<Vec<Ratio<i64>>> {
    let a = rs.coroot(&beta.re)?.neg().0;
    let len = rs.len(&beta.re)?;
    if a[i] <= 0 || beta.deg <= 0 {
        return Err(Error::Internal(format!("{beta} does not belong to sequence {}", i + 1)));
    }
    let mut key = vec![Ratio::new(len * a[i], beta.deg)];
    for (j, &aj) in a.iter().enumerate() {
        if j != i {
            key.push(Ratio::new(aj, a[i]));
        }
    }
    Ok(key)
}

/// The ordered fundamental sequence of `t_{-omega_i}` (`i` 0-based).
pub fn beta_sequence(rs: &RootSystem, i: usize) -> Result<BetaSequence> {
    let roots = beta_multiset(rs, i)?;
    let mut keyed = roots
        .into_iter()
        .map(|b| order_key(rs, i, &b).map(|k| (k, b)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    for w in keyed.windows(2) {
        if w[0].0.cmp(&w[1].0) == Ordering::Equal {
            return Err(Error::Internal(format!(
                "ordering tie between {} and {} in sequence {}",
                w[0].1,
                w[1].1,
                i + 1
            )));
        }
    }
    Ok(BetaSequence {
        label: format!("i={}", i + 1),
        entries: keyed
            .into_iter()
            .map(|(_, root)| BetaEntry { root, shifted: None })
            .collect(),
    })
}

/// Shifts entry `beta` to degree `deg + len(re) <re^vee, lambda>`.
pub fn shift_betas(rs: &RootSystem, seq: &BetaSequence, lambda: &Weight) -> Result<BetaSequence> {
    let mut entries = Vec::with_capacity(seq.len());
    for e in &seq.entries {
        let len = rs.len(&e.root.re)?;
        let pair = rs.pairing(lambda, &rs.coroot(&e.root.re)?)?;
        entries.push(BetaEntry {
            root: e.root.clone(),
            shifted: Some(e.degree() + len * pair),
        });
    }
    Ok(BetaSequence { label: seq.label.clone(), entries })
}

/// Default peel order for an antidominant weight: each index `i` repeated
/// `-<lambda, alpha_i^vee>` times, ascending.
pub fn default_peel_order(lambda: &Weight) -> Vec<usize> {
    lambda
        .0
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i, (-c).max(0) as usize))
        .collect()
}

pub fn check_antidominant(lambda: &Weight, rank: usize) -> Result<()> {
    if lambda.dim() != rank {
        return Err(Error::Usage(format!(
            "weight has {} coordinates, expected {rank}",
            lambda.dim()
        )));
    }
    if let Some((i, c)) = lambda.0.iter().enumerate().find(|(_, &c)| c > 0) {
        return Err(Error::Domain(format!(
            "weight is not antidominant: coordinate {} is {c} > 0",
            i + 1
        )));
    }
    Ok(())
}

/// Shifted sequence of `t_lambda` for antidominant `lambda`, built by peeling
/// fundamental weights in `peel` order (outermost first): for
/// `lambda = lambda' - omega_i` the sequence is the `i`-th fundamental
/// sequence shifted by `lambda'`, followed by the sequence of `t_{lambda'}`.
pub fn beta_sequence_translation(
    rs: &RootSystem,
    lambda: &Weight,
    peel: &[usize],
) -> Result<BetaSequence> {
    check_antidominant(lambda, rs.rank())?;
    let mut cur = lambda.clone();
    let mut entries = Vec::new();
    for &i in peel {
        check_index(rs, i)?;
        cur.0[i] += 1;
        if cur.0[i] > 0 {
            return Err(Error::Usage(format!(
                "peel order removes omega_{} more often than lambda contains it",
                i + 1
            )));
        }
        let base = beta_sequence(rs, i)?;
        entries.extend(shift_betas(rs, &base, &cur)?.entries);
    }
    if !cur.is_zero() {
        return Err(Error::Usage("peel order does not exhaust lambda".into()));
    }
    Ok(BetaSequence {
        label: format!("lambda={:?}", lambda.0),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::AffineType;

    fn ar(re: &[i64], deg: i64) -> AffineRoot {
        AffineRoot::new(Root(re.to_vec()), deg)
    }

    #[test]
    fn d32_sequences() {
        let rs = RootSystem::build(AffineType::D3_2).unwrap();
        assert_eq!(
            beta_sequence(&rs, 0).unwrap().roots(),
            vec![ar(&[-1, 0], 1), ar(&[-2, -1], 2), ar(&[-1, -1], 1)]
        );
        assert_eq!(
            beta_sequence(&rs, 1).unwrap().roots(),
            vec![ar(&[0, -1], 2), ar(&[-1, -1], 2), ar(&[-2, -1], 2), ar(&[-1, -1], 1)]
        );
    }

    #[test]
    fn lengths_match_multiset() {
        for tag in [AffineType::D3_2, AffineType::D4_3, AffineType::Dn1_2(3), AffineType::E6_2] {
            let rs = RootSystem::build(tag).unwrap();
            for i in 0..rs.rank() {
                let seq = beta_sequence(&rs, i).unwrap();
                assert_eq!(seq.len(), beta_length(&rs, i).unwrap());
                let len = rs.len(&rs.simple_root(i)).unwrap();
                assert_eq!(seq.entries[0].root, AffineRoot::new(rs.simple_root(i).neg(), len));
            }
        }
    }

    #[test]
    fn rank_one_translation() {
        let rs = RootSystem::build(AffineType::A2_2).unwrap();
        let lam = Weight(vec![-3]);
        let seq = beta_sequence_translation(&rs, &lam, &default_peel_order(&lam)).unwrap();
        let degs: Vec<i64> = seq.entries.iter().map(|e| e.degree()).collect();
        assert_eq!(degs, vec![3, 2, 1]);
        assert_eq!(seq.entries[1].parity(), Parity::Even);
        assert!(matches!(
            beta_sequence_translation(&rs, &Weight(vec![1]), &[]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            beta_sequence_translation(&rs, &lam, &[0, 0]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn shift_by_zero_is_identity_on_degrees() {
        let rs = RootSystem::build(AffineType::D4_3).unwrap();
        let seq = beta_sequence(&rs, 1).unwrap();
        let shifted = shift_betas(&rs, &seq, &Weight::zero(2)).unwrap();
        assert_eq!(shifted.effective_roots(), seq.roots());
    }

    #[test]
    fn affine_group_law() {
        let rs = RootSystem::build(AffineType::D3_2).unwrap();
        let g = WeylGroup::build(&rs).unwrap();
        let t = AffineWeylElement::t_lambda(Weight(vec![1, -2]));
        let w = AffineWeylElement::finite(2, g.from_word(&[0, 1]).unwrap());
        let tw = t.compose(&g, &w);
        assert_eq!(tw.wt(), &Weight(vec![1, -2]));
        assert_eq!(tw.dir(), w.dir);
        let wt = w.compose(&g, &t);
        assert_eq!(wt.trans, g.element(w.dir).act_weight(&t.trans));
        assert_eq!(tw.compose(&g, &tw.inverse(&g)), AffineWeylElement::identity(2));
        for beta in [ar(&[1, 0], 0), ar(&[-1, -1], 3), ar(&[-2, -1], 4)] {
            let r = affine_reflection(&rs, &g, &beta).unwrap();
            assert_eq!(r.compose(&g, &r), AffineWeylElement::identity(2));
        }
        let s = affine_reflection(&rs, &g, &ar(&[1, 0], 0)).unwrap();
        assert_eq!(s, AffineWeylElement::finite(2, g.generator(0).unwrap()));
        assert!(affine_reflection(&rs, &g, &ar(&[0, 1], 1)).is_err());
    }

    #[test]
    fn format_roots() {
        assert_eq!(ar(&[-1, -1], 2).to_string(), "-a1-a2+2d");
        assert_eq!(ar(&[-3, -2], 6).to_string(), "-3a1-2a2+6d");
        assert_eq!(ar(&[0, 1], 0).to_string(), "a2");
    }
}
