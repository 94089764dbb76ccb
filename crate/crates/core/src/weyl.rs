//! The finite Weyl group of the zero-level algebra.
//!
//! Elements are stored as integer matrices: the images of the fundamental
//! weights (the canonical form, used for equality and hashing) and the images
//! of the simple roots. [`WeylGroup`] enumerates the whole group once and
//! answers products and reflections through index tables, which is what the
//! graph and path code use in their inner loops.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};

/// Refuse to enumerate groups larger than this.
pub const MAX_GROUP_ORDER: usize = 500_000;

/// An element of the finite Weyl group.
#[derive(Debug, Clone)]
pub struct WeylElement {
    n: usize,
    /// Column `j` is the image of `omega_j` in the fundamental-weight basis.
    weight_mat: Vec<i64>,
    /// Column `j` is the image of `alpha_j` in the simple-root basis.
    root_mat: Vec<i64>,
    length: usize,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.weight_mat == other.weight_mat
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.weight_mat.hash(state);
    }
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Images of the fundamental weights.
    pub fn canonical(&self) -> Vec<Weight> {
        (0..self.n)
            .map(|j| Weight((0..self.n).map(|i| self.weight_mat[i * self.n + j]).collect()))
            .collect()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Reduced word as 0-based simple-reflection indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn act_weight(&self, lambda: &Weight) -> Weight {
        Weight(mat_vec(&self.weight_mat, self.n, &lambda.0))
    }

    pub fn act_root(&self, r: &Root) -> Root {
        Root(mat_vec(&self.root_mat, self.n, &r.0))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn mat_vec(m: &[i64], n: usize, v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
        .collect()
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}

fn identity_mat(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Matrices of a simple reflection on weights and on roots.
fn simple_mats(cartan: &[Vec<i64>], i: usize) -> (Vec<i64>, Vec<i64>) {
    let n = cartan.len();
    // s_i(omega_j) = omega_j - delta_ij alpha_i; alpha_i has weight coords a[k][i].
    let mut wm = identity_mat(n);
    for k in 0..n {
        wm[k * n + i] -= cartan[k][i];
    }
    // s_i(alpha_j) = alpha_j - a[i][j] alpha_i
    let mut rm = identity_mat(n);
    for j in 0..n {
        rm[i * n + j] -= cartan[i][j];
    }
    (wm, rm)
}

/// The whole finite Weyl group with multiplication tables.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    n: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    /// `right_simple[w][i]` is the index of `w s_i`.
    right_simple: Vec<Vec<usize>>,
    /// `right_refl[w][k]` is the index of `w s_gamma` for the `k`-th positive root.
    right_refl: Vec<Vec<usize>>,
    /// `left_simple[w][i]` is the index of `s_i w`.
    left_simple: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    /// Reflection in the `k`-th positive root.
    reflections: Vec<usize>,
    longest: usize,
}

impl WeylGroup {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank();
        let cartan = rs.cartan();
        let gens: Vec<(Vec<i64>, Vec<i64>)> = (0..n).map(|i| simple_mats(cartan, i)).collect();

        let mut mats: Vec<(Vec<i64>, Vec<i64>)> = vec![(identity_mat(n), identity_mat(n))];
        let mut lengths = vec![0usize];
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        index.insert(mats[0].0.clone(), 0);
        let mut right_simple: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        // Breadth-first search by right multiplication: the BFS layer is the length.
        while let Some(w) = queue.pop_front() {
            let mut row = Vec::with_capacity(n);
            for (wg, rg) in &gens {
                let wm = mat_mul(&mats[w].0, wg, n);
                let k = match index.get(&wm) {
                    Some(&k) => k,
                    None => {
                        let rm = mat_mul(&mats[w].1, rg, n);
                        let k = mats.len();
                        if k >= MAX_GROUP_ORDER {
                            return Err(Error::Config(format!(
                                "Weyl group of {} exceeds {MAX_GROUP_ORDER} elements",
                                rs.family()
                            )));
                        }
                        index.insert(wm.clone(), k);
                        mats.push((wm, rm));
                        lengths.push(lengths[w] + 1);
                        queue.push_back(k);
                        k
                    }
                };
                row.push(k);
            }
            right_simple.push(row);
        }
        let order = mats.len();

        // Greedy reduced words: strip the lowest-index right descent.
        let mut words: Vec<Option<Vec<usize>>> = vec![None; order];
        words[0] = Some(Vec::new());
        let mut by_length: Vec<usize> = (0..order).collect();
        by_length.sort_by_key(|&w| lengths[w]);
        for &w in &by_length[1..] {
            let i = (0..n)
                .find(|&i| lengths[right_simple[w][i]] < lengths[w])
                .ok_or_else(|| Error::Internal("element without a descent".into()))?;
            let mut word = words[right_simple[w][i]].clone().expect("shorter word known");
            word.push(i);
            words[w] = Some(word);
        }

        let elements: Vec<WeylElement> = mats
            .into_iter()
            .zip(lengths)
            .zip(words)
            .map(|(((weight_mat, root_mat), length), word)| WeylElement {
                n,
                weight_mat,
                root_mat,
                length,
                word: word.expect("every element reached"),
            })
            .collect();

        let lookup = |m: &Vec<i64>| -> usize { index[m] };

        let left_simple: Vec<Vec<usize>> = elements
            .iter()
            .map(|e| {
                gens.iter()
                    .map(|(wg, _)| lookup(&mat_mul(wg, &e.weight_mat, n)))
                    .collect()
            })
            .collect();

        let mut inverse = vec![0; order];
        for (w, e) in elements.iter().enumerate() {
            let mut cur = 0;
            for &i in e.word.iter().rev() {
                cur = right_simple[cur][i];
            }
            inverse[w] = cur;
        }

        // s_gamma for gamma = u(alpha_i) is u s_i u^{-1}.
        let positive = rs.positive_roots();
        let mut reflections = vec![usize::MAX; positive.len()];
        for (u, e) in elements.iter().enumerate() {
            for i in 0..n {
                let img = e.act_root(&Root::unit(n, i));
                if let Some(k) = rs.positive_index(&img) {
                    if reflections[k] == usize::MAX {
                        let us = right_simple[u][i];
                        let mut cur = us;
                        for &j in elements[inverse[u]].word.iter() {
                            cur = right_simple[cur][j];
                        }
                        reflections[k] = cur;
                    }
                }
            }
        }
        if reflections.contains(&usize::MAX) {
            return Err(Error::Internal("reflection table incomplete".into()));
        }

        let right_refl: Vec<Vec<usize>> = elements
            .iter()
            .map(|e| {
                reflections
                    .iter()
                    .map(|&r| lookup(&mat_mul(&e.weight_mat, &elements[r].weight_mat, n)))
                    .collect()
            })
            .collect();

        let longest = (0..order)
            .max_by_key(|&w| elements[w].length)
            .expect("nonempty group");

        Ok(Self {
            n,
            elements,
            index,
            right_simple,
            right_refl,
            left_simple,
            inverse,
            reflections,
            longest,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, w: usize) -> &WeylElement {
        &self.elements[w]
    }

    pub fn all_elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Index of an element given by value.
    pub fn index_of(&self, e: &WeylElement) -> Result<usize> {
        self.index
            .get(&e.weight_mat)
            .copied()
            .ok_or_else(|| Error::Usage("element does not belong to this group".into()))
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn generator(&self, i: usize) -> Result<usize> {
        if i >= self.n {
            return Err(Error::Usage(format!(
                "simple reflection index {} out of range 1..={}",
                i + 1,
                self.n
            )));
        }
        Ok(self.right_simple[0][i])
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let mut cur = a;
        for &i in &self.elements[b].word {
            cur = self.right_simple[cur][i];
        }
        cur
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn mul_simple(&self, w: usize, i: usize) -> usize {
        self.right_simple[w][i]
    }

    pub fn simple_mul(&self, i: usize, w: usize) -> usize {
        self.left_simple[w][i]
    }

    /// `w s_gamma` for the `k`-th positive root.
    pub fn mul_reflection(&self, w: usize, k: usize) -> usize {
        self.right_refl[w][k]
    }

    /// Reflection in the `k`-th positive root.
    pub fn reflection_index(&self, k: usize) -> usize {
        self.reflections[k]
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length
    }

    /// Element multiplying out a word of 0-based indices (need not be reduced).
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut cur = 0;
        for &i in word {
            if i >= self.n {
                return Err(Error::Usage(format!(
                    "simple reflection s{} out of range 1..={}",
                    i + 1,
                    self.n
                )));
            }
            cur = self.right_simple[cur][i];
        }
        Ok(cur)
    }

    /// Reflection `s_gamma` for any root `gamma`.
    pub fn s_of_root(&self, rs: &RootSystem, gamma: &Root) -> Result<usize> {
        let (k, _) = rs
            .signed_index(gamma)
            .ok_or_else(|| Error::Domain(format!("{:?} is not a root", gamma.0)))?;
        Ok(self.reflections[k])
    }

    /// The element with `w(alpha_i) = alpha_{n-i}` for `i < n` and
    /// `w(alpha_n) = -(alpha_1 + ... + alpha_n)`, `B_n` numbering.
    pub fn w_dagger(&self, rs: &RootSystem) -> Result<usize> {
        if !rs.tag().is_mixed() {
            return Err(Error::Config(format!(
                "w-dagger is only defined for A2n~2 types, not {}",
                rs.tag()
            )));
        }
        let n = self.n;
        let mut target = vec![0i64; n * n];
        for i in 0..n {
            if i + 1 < n {
                // alpha_{i+1} (1-based) goes to alpha_{n-i-1} (1-based).
                target[(n - i - 2) * n + i] = 1;
            } else {
                for k in 0..n {
                    target[k * n + i] = -1;
                }
            }
        }
        self.elements
            .iter()
            .position(|e| e.root_mat == target)
            .ok_or_else(|| Error::Internal("w-dagger not found in the group".into()))
    }

    /// Parses `id`, `w0`, `wdag` or a word such as `s1 s2 s1` / `s1s2s1`.
    pub fn parse(&self, rs: &RootSystem, text: &str) -> Result<usize> {
        let t = text.trim();
        match t {
            "" | "id" | "e" | "1" => return Ok(0),
            "w0" => return Ok(self.longest),
            "wdag" => return self.w_dagger(rs),
            _ => {}
        }
        let mut word = Vec::new();
        let cleaned: String = t
            .chars()
            .map(|c| if c == ',' || c == '*' || c == '.' { ' ' } else { c })
            .collect();
        for chunk in cleaned.split('s').map(str::trim) {
            if chunk.is_empty() {
                continue;
            }
            let digits: String = chunk.chars().filter(|c| !c.is_whitespace()).collect();
            let i: usize = digits
                .parse()
                .map_err(|_| Error::Usage(format!("cannot parse Weyl word {text:?}")))?;
            if i == 0 {
                return Err(Error::Usage(format!("simple reflections are 1-based in {text:?}")));
            }
            word.push(i - 1);
        }
        if !t.starts_with('s') {
            return Err(Error::Usage(format!("cannot parse Weyl word {text:?}")));
        }
        self.from_word(&word)
    }
}

/// Element of the `hat` root set: a root plus a multiple of `delta`, where the
/// real part may be twice a short root in mixed type.
pub use crate::affine::AffineRoot as HatRoot;

/// Splits a hat root into the underlying finite root `b` with the convention
/// that the image is `b` when positive and a `delta`-shifted form otherwise.
fn hat_base(rs: &RootSystem, r: &HatRoot) -> Result<Root> {
    let mixed = rs.tag().is_mixed();
    let bad = || Error::Domain(format!("{r} is not in the hat root set of {}", rs.tag()));
    if r.deg == 0 {
        return if rs.positive_index(&r.re).is_some() { Ok(r.re.clone()) } else { Err(bad()) };
    }
    if mixed {
        if r.deg != 1 {
            return Err(bad());
        }
        if rs.positive_index(&r.re.neg()).is_some() && rs.len(&r.re)? > 1 {
            return Ok(r.re.clone());
        }
        if r.re.0.iter().all(|c| c % 2 == 0) {
            let half = Root(r.re.0.iter().map(|c| c / 2).collect());
            if rs.positive_index(&half.neg()).is_some() && rs.len(&half)? == 1 {
                return Ok(half);
            }
        }
        Err(bad())
    } else {
        match rs.positive_index(&r.re.neg()) {
            Some(_) if rs.len(&r.re)? == r.deg => Ok(r.re.clone()),
            _ => Err(bad()),
        }
    }
}

/// The `sigma-hat` action on the hat root set.
///
/// Dual untwisted: `Delta_+ U {-alpha + len(alpha) delta}`. Mixed:
/// `Delta_+ U (Delta_-^long + delta) U (2 Delta_-^short + delta)`.
pub fn hat_sigma(rs: &RootSystem, sigma: &WeylElement, r: &HatRoot) -> Result<HatRoot> {
    let base = hat_base(rs, r)?;
    let img = sigma.act_root(&base);
    if img.is_positive() {
        return Ok(HatRoot::new(img, 0));
    }
    let len = rs.len(&img)?;
    Ok(if !rs.tag().is_mixed() {
        HatRoot::new(img, len)
    } else if len > 1 {
        HatRoot::new(img, 1)
    } else {
        HatRoot::new(img.scale(2), 1)
    })
}

/// Every element of the hat root set.
pub fn hat_roots(rs: &RootSystem) -> Vec<HatRoot> {
    let mixed = rs.tag().is_mixed();
    let mut out: Vec<HatRoot> = rs
        .positive_roots()
        .iter()
        .map(|r| HatRoot::new(r.clone(), 0))
        .collect();
    for (k, r) in rs.positive_roots().iter().enumerate() {
        let len = rs.positive_len(k);
        out.push(match (mixed, len > 1) {
            (false, _) => HatRoot::new(r.neg(), len),
            (true, true) => HatRoot::new(r.neg(), 1),
            (true, false) => HatRoot::new(r.scale(-2), 1),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::AffineType;
    use std::collections::HashSet;

    fn group(tag: AffineType) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::build(tag).unwrap();
        let g = WeylGroup::build(&rs).unwrap();
        (rs, g)
    }

    #[test]
    fn orders_and_longest() {
        for (tag, order, top) in [
            (AffineType::A2_2, 2, 1),
            (AffineType::D3_2, 8, 4),
            (AffineType::D4_3, 12, 6),
            (AffineType::Dn1_2(3), 48, 9),
            (AffineType::A2n1_2(3), 48, 9),
            (AffineType::E6_2, 1152, 24),
        ] {
            let (rs, g) = group(tag);
            assert_eq!(g.order(), order, "{tag}");
            assert_eq!(g.length(g.longest()), top);
            assert_eq!(top, rs.positive_roots().len());
        }
    }

    #[test]
    fn b2_longest_is_s1s2s1s2() {
        let (_, g) = group(AffineType::D3_2);
        assert_eq!(g.from_word(&[0, 1, 0, 1]).unwrap(), g.longest());
        assert_eq!(g.from_word(&[1, 0, 1, 0]).unwrap(), g.longest());
    }

    #[test]
    fn group_axioms() {
        let (_, g) = group(AffineType::D4_3);
        let s1 = g.generator(0).unwrap();
        let s2 = g.generator(1).unwrap();
        assert_eq!(g.multiply(s1, s1), g.identity());
        let s1s2 = g.multiply(s1, s2);
        assert_eq!(g.inverse(s1s2), g.multiply(s2, s1));
        for a in 0..g.order() {
            assert_eq!(g.multiply(a, g.inverse(a)), 0);
            for b in 0..g.order() {
                let ab = g.multiply(a, b);
                for c in [0, s1, s2, g.longest()] {
                    assert_eq!(g.multiply(ab, c), g.multiply(a, g.multiply(b, c)));
                }
            }
        }
        assert!(matches!(g.generator(2), Err(Error::Usage(_))));
    }

    #[test]
    fn lengths_count_inversions() {
        for tag in [AffineType::D3_2, AffineType::D4_3, AffineType::Dn1_2(3), AffineType::A2n1_2(3)] {
            let (rs, g) = group(tag);
            for e in g.all_elements() {
                let inv = rs
                    .positive_roots()
                    .iter()
                    .filter(|r| !e.act_root(r).is_positive())
                    .count();
                assert_eq!(inv, e.length());
                assert_eq!(e.word().len(), e.length());
                assert_eq!(g.from_word(e.word()).unwrap(), g.index_of(e).unwrap());
            }
            for w in 0..g.order() {
                for i in 0..g.rank() {
                    let d = g.length(g.mul_simple(w, i)) as i64 - g.length(w) as i64;
                    assert!(d == 1 || d == -1);
                }
            }
        }
    }

    #[test]
    fn reflections_match_rootsys() {
        let (rs, g) = group(AffineType::D3_2);
        let s = g.s_of_root(&rs, &Root(vec![2, 1])).unwrap();
        assert_eq!(s, g.from_word(&[0, 1, 0]).unwrap());
        assert_eq!(g.s_of_root(&rs, &Root(vec![-2, -1])).unwrap(), s);
        assert_eq!(g.s_of_root(&rs, &Root(vec![1, 0])).unwrap(), g.generator(0).unwrap());
        let lam = Weight(vec![3, -2]);
        for r in rs.positive_roots() {
            let s = g.element(g.s_of_root(&rs, r).unwrap());
            assert_eq!(s.act_weight(&lam), rs.reflect_weight(r, &lam).unwrap());
        }
        assert!(matches!(g.s_of_root(&rs, &Root(vec![1, 2])), Err(Error::Domain(_))));
    }

    #[test]
    fn act_root_permutes_roots() {
        let (rs, g) = group(AffineType::E6_2);
        let all: HashSet<Root> = rs
            .positive_roots()
            .iter()
            .flat_map(|r| [r.clone(), r.neg()])
            .collect();
        for e in g.all_elements().iter().step_by(7) {
            let img: HashSet<Root> = all.iter().map(|r| e.act_root(r)).collect();
            assert_eq!(img, all);
        }
    }

    #[test]
    fn w_dagger_action() {
        let (rs, g) = group(AffineType::A2_2);
        assert_eq!(g.w_dagger(&rs).unwrap(), g.generator(0).unwrap());
        for n in 2..=3 {
            let (rs, g) = group(AffineType::A2n_2(n));
            let w = g.element(g.w_dagger(&rs).unwrap());
            for i in 0..n - 1 {
                assert_eq!(w.act_root(&Root::unit(n, i)), Root::unit(n, n - 2 - i));
            }
            assert_eq!(w.act_root(&Root::unit(n, n - 1)), Root(vec![-1; n]));
        }
        let (rs, g) = group(AffineType::D3_2);
        assert!(matches!(g.w_dagger(&rs), Err(Error::Config(_))));
    }

    #[test]
    fn parse_words() {
        let (rs, g) = group(AffineType::D3_2);
        assert_eq!(g.parse(&rs, "id").unwrap(), 0);
        assert_eq!(g.parse(&rs, "w0").unwrap(), g.longest());
        assert_eq!(g.parse(&rs, "s1 s2 s1 s2").unwrap(), g.longest());
        assert_eq!(g.parse(&rs, "s1s2s1s2").unwrap(), g.longest());
        assert_eq!(g.parse(&rs, "s1 s1").unwrap(), 0);
        assert!(g.parse(&rs, "s3").is_err());
        assert!(g.parse(&rs, "x1").is_err());
        assert_eq!(g.element(g.longest()).to_string(), "s2 s1 s2 s1");
    }

    #[test]
    fn hat_sigma_rank_one_transposition() {
        let (rs, g) = group(AffineType::A2_2);
        let s = g.element(1);
        let a = HatRoot::new(Root(vec![1]), 0);
        let b = HatRoot::new(Root(vec![-2]), 1);
        assert_eq!(hat_sigma(&rs, s, &a).unwrap(), b);
        assert_eq!(hat_sigma(&rs, s, &b).unwrap(), a);
        assert_eq!(hat_sigma(&rs, g.element(0), &a).unwrap(), a);
        assert!(hat_sigma(&rs, s, &HatRoot::new(Root(vec![-1]), 1)).is_err());
    }

    #[test]
    fn hat_sigma_dual_untwisted() {
        let (rs, g) = group(AffineType::D3_2);
        let s1 = g.element(g.generator(0).unwrap());
        let a1 = HatRoot::new(Root(vec![1, 0]), 0);
        assert_eq!(hat_sigma(&rs, s1, &a1).unwrap(), HatRoot::new(Root(vec![-1, 0]), 1));
        let s2 = g.element(g.generator(1).unwrap());
        let a2 = HatRoot::new(Root(vec![0, 1]), 0);
        assert_eq!(hat_sigma(&rs, s2, &a2).unwrap(), HatRoot::new(Root(vec![0, -1]), 2));
    }

    #[test]
    fn hat_sigma_is_bijection() {
        for tag in [
            AffineType::A2_2,
            AffineType::D3_2,
            AffineType::D4_3,
            AffineType::A2n_2(2),
            AffineType::A2n_2(3),
            AffineType::Dn1_2(3),
            AffineType::A2n1_2(3),
        ] {
            let (rs, g) = group(tag);
            let set: HashSet<HatRoot> = hat_roots(&rs).into_iter().collect();
            for e in g.all_elements() {
                let img: HashSet<HatRoot> =
                    set.iter().map(|r| hat_sigma(&rs, e, r).unwrap()).collect();
                assert_eq!(img, set, "{tag} {e}");
                if tag.is_dual_untwisted() {
                    for r in &set {
                        let out = hat_sigma(&rs, e, r).unwrap();
                        assert_eq!(out.re, e.act_root(&r.re));
                    }
                }
            }
        }
    }
}
