//! Finite root systems of the zero-level algebras of twisted affine types.
//!
//! Roots are integer vectors over the simple roots, weights over the
//! fundamental weights and coroots over the simple coroots. Every pairing is
//! routed through the Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>`, so no
//! rational coordinates ever appear.
//!
//! Simple-root numbering:
//!
//! * `B_n` (types `Dn+1~2:n`, `A2n~2:n`): Bourbaki, `alpha_n` short.
//! * `D3~2`: `B_2` with `alpha_1` short and `alpha_2` long.
//! * `C_n` (types `A2n-1~2:n`, and the zero-level algebra of `A2n~2+:n`):
//!   Bourbaki, `alpha_n` long.
//! * `F_4` (`E6~2`): Bourbaki, `alpha_1, alpha_2` long, `alpha_3, alpha_4` short.
//! * `G_2` (`D4~3`): `alpha_1` short, `alpha_2` long.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank accepted by [`RootSystem::build`].
pub const MAX_RANK: usize = 8;

/// Twisted affine type.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineType {
    /// `A_2^(2)`: rank-one mixed type.
    A2_2,
    /// `D_3^(2)`: zero-level algebra `B_2` with `alpha_1` short.
    D3_2,
    /// `D_{n+1}^(2)`: zero-level algebra `B_n`.
    Dn1_2(usize),
    /// `A_{2n-1}^(2)`: zero-level algebra `C_n`.
    A2n1_2(usize),
    /// `E_6^(2)`: zero-level algebra `F_4`.
    E6_2,
    /// `D_4^(3)`: zero-level algebra `G_2`.
    D4_3,
    /// `A_{2n}^(2)`: mixed type, zero-level algebra `B_n`.
    A2n_2(usize),
    /// `A_{2n}^(2)` with the opposite special vertex.
    A2n_2Dagger(usize),
}

/// Cartan type of a finite root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A1,
    B(usize),
    C(usize),
    F4,
    G2,
}

impl Family {
    pub fn rank(self) -> usize {
        match self {
            Family::A1 => 1,
            Family::B(n) | Family::C(n) => n,
            Family::F4 => 4,
            Family::G2 => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A1 => write!(f, "A1"),
            Family::B(n) => write!(f, "B{n}"),
            Family::C(n) => write!(f, "C{n}"),
            Family::F4 => write!(f, "F4"),
            Family::G2 => write!(f, "G2"),
        }
    }
}

impl AffineType {
    /// Squared-length ratio of long to short roots.
    pub fn j(self) -> i64 {
        match self {
            AffineType::D4_3 => 3,
            _ => 2,
        }
    }

    /// Cartan type of the zero-level algebra.
    pub fn g0_family(self) -> Family {
        match self {
            AffineType::A2_2 => Family::A1,
            AffineType::D3_2 => Family::B(2),
            AffineType::Dn1_2(n) | AffineType::A2n_2(n) => b_or_a1(n),
            AffineType::A2n1_2(n) | AffineType::A2n_2Dagger(n) => c_or_a1(n),
            AffineType::E6_2 => Family::F4,
            AffineType::D4_3 => Family::G2,
        }
    }

    /// Cartan type of the root system carrying the path model.
    ///
    /// Identical to [`g0_family`](Self::g0_family) except for the dagger
    /// variant, whose paths live on the `B_n` graph of type `D_{n+1}^(2)`.
    pub fn model_family(self) -> Family {
        match self {
            AffineType::A2n_2Dagger(n) => b_or_a1(n),
            other => other.g0_family(),
        }
    }

    pub fn rank(self) -> usize {
        self.g0_family().rank()
    }

    /// Both `A_{2n}^(2)` variants.
    pub fn is_mixed(self) -> bool {
        matches!(
            self,
            AffineType::A2_2 | AffineType::A2n_2(_) | AffineType::A2n_2Dagger(_)
        )
    }

    pub fn is_dual_untwisted(self) -> bool {
        !self.is_mixed()
    }

    /// Tag with the rank-one aliases collapsed (`A2n~2:1` is `A2~2`).
    pub fn normalized(self) -> AffineType {
        match self {
            AffineType::A2n_2(1) => AffineType::A2_2,
            other => other,
        }
    }
}

fn b_or_a1(n: usize) -> Family {
    if n == 1 {
        Family::A1
    } else {
        Family::B(n)
    }
}

fn c_or_a1(n: usize) -> Family {
    if n == 1 {
        Family::A1
    } else {
        Family::C(n)
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::A2_2 => write!(f, "A2~2"),
            AffineType::D3_2 => write!(f, "D3~2"),
            AffineType::Dn1_2(n) => write!(f, "Dn+1~2:{n}"),
            AffineType::A2n1_2(n) => write!(f, "A2n-1~2:{n}"),
            AffineType::E6_2 => write!(f, "E6~2"),
            AffineType::D4_3 => write!(f, "D4~3"),
            AffineType::A2n_2(n) => write!(f, "A2n~2:{n}"),
            AffineType::A2n_2Dagger(n) => write!(f, "A2n~2+:{n}"),
        }
    }
}

impl FromStr for AffineType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, n) = match s.split_once(':') {
            Some((head, n)) => {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::Config(format!("bad rank in type tag {s:?}")))?;
                (head.trim(), Some(n))
            }
            None => (s, None),
        };
        let tag = match (head, n) {
            ("A2~2", None) => AffineType::A2_2,
            ("D3~2", None) => AffineType::D3_2,
            ("D4~3", None) => AffineType::D4_3,
            ("E6~2", None) => AffineType::E6_2,
            ("A2n~2", Some(n)) => AffineType::A2n_2(n),
            ("A2n~2+", Some(n)) => AffineType::A2n_2Dagger(n),
            ("A2n-1~2", Some(n)) => AffineType::A2n1_2(n),
            ("Dn+1~2", Some(n)) => AffineType::Dn1_2(n),
            _ => return Err(Error::Config(format!("unknown type tag {s:?}"))),
        };
        validate_tag(tag)?;
        Ok(tag)
    }
}

fn validate_tag(tag: AffineType) -> Result<()> {
    let ok = match tag {
        AffineType::A2n_2(n) | AffineType::A2n_2Dagger(n) => (1..=MAX_RANK).contains(&n),
        // D_{n+1}^(2) and A_{2n-1}^(2) need a non-simply-laced g0.
        AffineType::Dn1_2(n) | AffineType::A2n1_2(n) => (2..=MAX_RANK).contains(&n),
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Config(format!("rank out of supported range for {tag}")))
    }
}

macro_rules! int_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(n: usize) -> Self {
                Self(vec![0; n])
            }

            pub fn unit(n: usize, i: usize) -> Self {
                let mut v = vec![0; n];
                v[i] = 1;
                Self(v)
            }

            pub fn coeffs(&self) -> &[i64] {
                &self.0
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn add(&self, other: &Self) -> Self {
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }

            pub fn sub(&self, other: &Self) -> Self {
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
            }

            pub fn scale(&self, k: i64) -> Self {
                Self(self.0.iter().map(|a| a * k).collect())
            }

            pub fn neg(&self) -> Self {
                self.scale(-1)
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                Self(v)
            }
        }
    };
}

int_vector!(
    /// Element of the root lattice in the simple-root basis.
    Root
);
int_vector!(
    /// Weight in the fundamental-weight basis.
    Weight
);
int_vector!(
    /// Element of the coroot lattice in the simple-coroot basis.
    Coroot
);

impl Root {
    /// All coefficients nonnegative and not all zero.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Weight {
    /// `<lambda, alpha_i^vee> <= 0` for every `i`.
    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }
}

/// Finite root system together with length and coroot data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    tag: AffineType,
    family: Family,
    cartan: Vec<Vec<i64>>,
    /// Half squared length of each simple root, short roots normalized to 1.
    sym: Vec<i64>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    lens: Vec<i64>,
    coroots: Vec<Coroot>,
    two_rho_coroot: Coroot,
}

impl RootSystem {
    /// Builds the root system carrying the path model of `tag`.
    pub fn build(tag: AffineType) -> Result<Self> {
        validate_tag(tag)?;
        let family = tag.model_family();
        let reversed_b2 = tag == AffineType::D3_2;
        let (cartan, sym) = cartan_matrix(family, reversed_b2)?;
        let n = cartan.len();

        let mut positive = Vec::new();
        let mut index = HashMap::new();
        let mut queue: VecDeque<Root> = (0..n).map(|i| Root::unit(n, i)).collect();
        let mut seen: std::collections::HashSet<Root> = queue.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            if r.is_positive() {
                index.insert(r.clone(), positive.len());
                positive.push(r.clone());
            }
            for i in 0..n {
                let s = simple_reflect(&cartan, i, &r);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        index = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();

        let mut lens = Vec::with_capacity(positive.len());
        let mut coroots = Vec::with_capacity(positive.len());
        for r in &positive {
            let len = half_norm(&cartan, &sym, r);
            let co: Vec<i64> = r
                .0
                .iter()
                .zip(&sym)
                .map(|(&c, &d)| {
                    debug_assert_eq!((c * d) % len, 0);
                    c * d / len
                })
                .collect();
            lens.push(len);
            coroots.push(Coroot(co));
        }
        let mut two_rho = Coroot::zero(n);
        for c in &coroots {
            two_rho = two_rho.add(c);
        }

        Ok(Self {
            tag,
            family,
            cartan,
            sym,
            positive,
            index,
            lens,
            coroots,
            two_rho_coroot: two_rho,
        })
    }

    pub fn tag(&self) -> AffineType {
        self.tag
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `cartan()[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::unit(self.rank(), i)
    }

    pub fn two_rho_coroot(&self) -> &Coroot {
        &self.two_rho_coroot
    }

    /// Index of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of `+-r` together with the sign of `r`.
    pub fn signed_index(&self, r: &Root) -> Option<(usize, bool)> {
        if let Some(k) = self.index.get(r) {
            return Some((*k, true));
        }
        self.index.get(&r.neg()).map(|&k| (k, false))
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.signed_index(r).is_some()
    }

    pub fn is_simple(&self, r: &Root) -> bool {
        r.height() == 1 && r.is_positive()
    }

    fn require_root(&self, r: &Root) -> Result<(usize, bool)> {
        if r.dim() != self.rank() {
            return Err(Error::Usage(format!(
                "root {:?} has dimension {}, expected {}",
                r.0,
                r.dim(),
                self.rank()
            )));
        }
        self.signed_index(r)
            .ok_or_else(|| Error::Domain(format!("{:?} is not a root of {}", r.0, self.family)))
    }

    /// Normalized squared length: 1 for short roots, `j` for long ones.
    pub fn len(&self, r: &Root) -> Result<i64> {
        let (k, _) = self.require_root(r)?;
        Ok(self.lens[k])
    }

    pub fn is_long(&self, r: &Root) -> Result<bool> {
        Ok(self.len(r)? > 1)
    }

    pub fn coroot(&self, r: &Root) -> Result<Coroot> {
        let (k, pos) = self.require_root(r)?;
        Ok(if pos {
            self.coroots[k].clone()
        } else {
            self.coroots[k].neg()
        })
    }

    /// Coroot of the `k`-th positive root.
    pub fn positive_coroot(&self, k: usize) -> &Coroot {
        &self.coroots[k]
    }

    pub fn positive_len(&self, k: usize) -> i64 {
        self.lens[k]
    }

    /// `<lambda, c>` for a weight and a coroot.
    pub fn pairing(&self, lambda: &Weight, c: &Coroot) -> Result<i64> {
        if lambda.dim() != self.rank() || c.dim() != self.rank() {
            return Err(Error::Usage(format!(
                "pairing dimension mismatch: weight {} / coroot {} / rank {}",
                lambda.dim(),
                c.dim(),
                self.rank()
            )));
        }
        Ok(dot(&lambda.0, &c.0))
    }

    /// Weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, r: &Root) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * r.0[j]).sum())
                .collect(),
        )
    }

    /// `<r, c>` for a root-lattice element and a coroot.
    pub fn pair_root(&self, r: &Root, c: &Coroot) -> i64 {
        dot(&self.root_to_weight(r).0, &c.0)
    }

    /// `<2 rho^vee, r>`.
    pub fn two_rho_pairing(&self, r: &Root) -> i64 {
        self.pair_root(r, &self.two_rho_coroot)
    }

    /// Reflection `s_gamma` applied to a root.
    pub fn reflect_root(&self, gamma: &Root, tau: &Root) -> Result<Root> {
        let c = self.coroot(gamma)?;
        if tau.dim() != self.rank() {
            return Err(Error::Usage("root dimension mismatch".into()));
        }
        let k = self.pair_root(tau, &c);
        Ok(tau.sub(&gamma.scale(k)))
    }

    /// Reflection `s_gamma` applied to a weight.
    pub fn reflect_weight(&self, gamma: &Root, lambda: &Weight) -> Result<Weight> {
        let c = self.coroot(gamma)?;
        let k = self.pairing(lambda, &c)?;
        Ok(lambda.sub(&self.root_to_weight(gamma).scale(k)))
    }

    /// Symmetrized inner product `(a, b)` on the root lattice, short roots
    /// having `(alpha, alpha) = 2`.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a.0[i] * b.0[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn simple_reflect(cartan: &[Vec<i64>], i: usize, r: &Root) -> Root {
    // s_i(r) = r - <r, alpha_i^vee> alpha_i
    let k: i64 = (0..cartan.len()).map(|j| cartan[i][j] * r.0[j]).sum();
    let mut out = r.clone();
    out.0[i] -= k;
    out
}

fn half_norm(cartan: &[Vec<i64>], sym: &[i64], r: &Root) -> i64 {
    let mut s = 0;
    for (i, row) in cartan.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            s += r.0[i] * r.0[j] * sym[i] * a;
        }
    }
    s / 2
}

fn cartan_matrix(family: Family, reversed_b2: bool) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut a = vec![vec![0; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    let (a, sym) = match family {
        Family::A1 => (vec![vec![2]], vec![1]),
        Family::B(2) if reversed_b2 => (vec![vec![2, -2], vec![-1, 2]], vec![1, 2]),
        Family::B(n) => {
            let mut a = chain(n);
            a[n - 1][n - 2] = -2;
            let mut sym = vec![2; n];
            sym[n - 1] = 1;
            (a, sym)
        }
        Family::C(n) => {
            let mut a = chain(n);
            a[n - 2][n - 1] = -2;
            let mut sym = vec![1; n];
            sym[n - 1] = 2;
            (a, sym)
        }
        Family::F4 => {
            let mut a = chain(4);
            a[2][1] = -2;
            (a, vec![2, 2, 1, 1])
        }
        Family::G2 => (vec![vec![2, -3], vec![-1, 2]], vec![1, 3]),
    };
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            if sym[i] * a[i][j] != sym[j] * a[j][i] {
                return Err(Error::Internal(format!("{family} Cartan matrix not symmetrizable")));
            }
        }
    }
    Ok((a, sym))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Root {
        Root(v.to_vec())
    }

    #[test]
    fn d32_positive_roots_and_coroots() {
        let rs = RootSystem::build(AffineType::D3_2).unwrap();
        let mut roots = rs.positive_roots().to_vec();
        roots.sort();
        let mut expected = vec![r(&[1, 0]), r(&[0, 1]), r(&[1, 1]), r(&[2, 1])];
        expected.sort();
        assert_eq!(roots, expected);
        assert_eq!(rs.coroot(&r(&[2, 1])).unwrap(), Coroot(vec![1, 1]));
        assert_eq!(rs.coroot(&r(&[1, 1])).unwrap(), Coroot(vec![1, 2]));
        assert_eq!(rs.coroot(&r(&[1, 0])).unwrap(), Coroot(vec![1, 0]));
        assert_eq!(rs.coroot(&r(&[0, 1])).unwrap(), Coroot(vec![0, 1]));
    }

    #[test]
    fn rank_one() {
        let rs = RootSystem::build(AffineType::A2_2).unwrap();
        assert_eq!(rs.positive_roots(), &[r(&[1])]);
        assert_eq!(rs.len(&r(&[1])).unwrap(), 1);
    }

    #[test]
    fn root_counts() {
        let cases = [
            (AffineType::D3_2, 4),
            (AffineType::D4_3, 6),
            (AffineType::E6_2, 24),
            (AffineType::Dn1_2(3), 9),
            (AffineType::A2n1_2(3), 9),
            (AffineType::A2n_2(4), 16),
            (AffineType::Dn1_2(6), 36),
        ];
        for (tag, count) in cases {
            assert_eq!(RootSystem::build(tag).unwrap().positive_roots().len(), count, "{tag}");
        }
    }

    #[test]
    fn lengths() {
        let b2 = RootSystem::build(AffineType::D3_2).unwrap();
        assert_eq!(b2.len(&r(&[1, 0])).unwrap(), 1);
        assert_eq!(b2.len(&r(&[0, 1])).unwrap(), 2);
        assert_eq!(b2.len(&r(&[-2, -1])).unwrap(), 2);
        let g2 = RootSystem::build(AffineType::D4_3).unwrap();
        assert_eq!(g2.len(&r(&[3, 2])).unwrap(), 3);
        assert_eq!(g2.len(&r(&[2, 1])).unwrap(), 1);
        assert!(matches!(g2.len(&r(&[1, 2])), Err(Error::Domain(_))));
    }

    #[test]
    fn pairings() {
        let b2 = RootSystem::build(AffineType::D3_2).unwrap();
        let w1 = Weight::unit(2, 0);
        let w2 = Weight::unit(2, 1);
        assert_eq!(b2.pairing(&w1, &Coroot::unit(2, 0)).unwrap(), 1);
        assert_eq!(b2.pairing(&w2, &b2.coroot(&r(&[1, 1])).unwrap()).unwrap(), 2);
        // 2 rho^vee against alpha_1, summed coroot by coroot.
        let direct: i64 = b2
            .positive_roots()
            .iter()
            .map(|g| b2.pair_root(&r(&[1, 0]), &b2.coroot(g).unwrap()))
            .sum();
        assert_eq!(b2.two_rho_pairing(&r(&[1, 0])), direct);
        assert_eq!(direct, 2);
        assert!(matches!(
            b2.pairing(&Weight::unit(3, 0), &Coroot::unit(2, 0)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn reflections() {
        let b2 = RootSystem::build(AffineType::D3_2).unwrap();
        let a1 = r(&[1, 0]);
        assert_eq!(b2.reflect_root(&a1, &a1).unwrap(), r(&[-1, 0]));
        assert_eq!(b2.reflect_root(&a1, &r(&[0, 1])).unwrap(), r(&[2, 1]));
        let lam = Weight(vec![3, -5]);
        let once = b2.reflect_weight(&r(&[1, 1]), &lam).unwrap();
        assert_eq!(b2.reflect_weight(&r(&[1, 1]), &once).unwrap(), lam);
        assert!(matches!(b2.reflect_root(&r(&[1, 2]), &a1), Err(Error::Domain(_))));
    }

    #[test]
    fn parse_tags() {
        for s in ["A2~2", "D3~2", "D4~3", "E6~2", "A2n~2:2", "A2n~2+:3", "A2n-1~2:3", "Dn+1~2:3"] {
            let t: AffineType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!(matches!("B2".parse::<AffineType>(), Err(Error::Config(_))));
        assert!(matches!("A2n-1~2:1".parse::<AffineType>(), Err(Error::Config(_))));
        assert_eq!(AffineType::D4_3.j(), 3);
        assert_eq!(AffineType::A2n_2Dagger(3).g0_family(), Family::C(3));
        assert_eq!(AffineType::A2n_2Dagger(3).model_family(), Family::B(3));
    }
}
