use proptest::prelude::*;

use twisted_weyl::oschar::{apply_w0, c_poly, decompose, dim_weyl, reassemble};
use twisted_weyl::{AffineType, CharPoly, Model, Root, Weight};

const SMALL: [AffineType; 6] = [
    AffineType::A2_2,
    AffineType::D3_2,
    AffineType::D4_3,
    AffineType::A2n_2(2),
    AffineType::Dn1_2(3),
    AffineType::A2n1_2(3),
];

fn small_type() -> impl Strategy<Value = AffineType> {
    prop::sample::select(SMALL.to_vec())
}

/// A type together with an antidominant weight of coordinates >= -2 (-1 in rank three).
fn type_and_weight() -> impl Strategy<Value = (AffineType, Weight)> {
    small_type().prop_flat_map(|tag| {
        let n = tag.rank();
        let lo = if n > 2 { -1 } else { -2 };
        prop::collection::vec(lo..=0i64, n).prop_map(move |v| (tag, Weight(v)))
    })
}

fn charpoly(rank: usize) -> impl Strategy<Value = CharPoly> {
    prop::collection::vec((prop::collection::vec(-3..=3i64, rank), 0..4i64, -3..=3i64), 0..8)
        .prop_map(CharPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions_preserving_roots(tag in small_type(), a in 0usize..16, b in 0usize..16) {
        let m = Model::get(tag).unwrap();
        let roots = m.rs.positive_roots();
        let (g, t) = (&roots[a % roots.len()], &roots[b % roots.len()]);
        let once = m.rs.reflect_root(g, t).unwrap();
        prop_assert!(m.rs.contains(&once));
        prop_assert_eq!(m.rs.reflect_root(g, &once).unwrap(), t.clone());
        prop_assert_eq!(m.rs.reflect_root(g, g).unwrap(), g.neg());
    }

    #[test]
    fn pairing_is_weyl_invariant(tag in small_type(), w in 0usize..48, k in 0usize..16, lam in prop::collection::vec(-4..=4i64, 3)) {
        let m = Model::get(tag).unwrap();
        let n = m.rs.rank();
        let lam = Weight(lam[..n].to_vec());
        let e = m.group.element(w % m.group.order());
        let gamma: &Root = &m.rs.positive_roots()[k % m.rs.positive_roots().len()];
        let before = m.rs.pairing(&lam, &m.rs.coroot(gamma).unwrap()).unwrap();
        let after = m.rs.pairing(&e.act_weight(&lam), &m.rs.coroot(&e.act_root(gamma)).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn group_laws(tag in small_type(), a in 0usize..48, b in 0usize..48, c in 0usize..48) {
        let m = Model::get(tag).unwrap();
        let g = &m.group;
        let (a, b, c) = (a % g.order(), b % g.order(), c % g.order());
        prop_assert_eq!(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
        prop_assert_eq!(g.multiply(a, g.inverse(a)), g.identity());
        prop_assert_eq!(g.length(a), g.length(g.inverse(a)));
        prop_assert_eq!(g.from_word(g.element(a).word()).unwrap(), a);
        prop_assert_eq!(g.element(a).word().len(), g.length(a));
    }

    #[test]
    fn w0_twist_is_an_involution((tag, p) in small_type().prop_flat_map(|t| charpoly(t.rank()).prop_map(move |p| (t, p)))) {
        let m = Model::get(tag).unwrap();
        prop_assert_eq!(apply_w0(&m, &apply_w0(&m, &p)), p.clone());
        prop_assert_eq!(CharPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn leading_term_and_positivity((tag, lam) in type_and_weight(), w in 0usize..48) {
        let m = Model::get(tag).unwrap();
        let s = w % m.group.order();
        let p = c_poly(&m, s, &lam).unwrap();
        prop_assert_eq!(p.coeff(&m.group.element(s).act_weight(&lam), 0), 1);
        prop_assert!(p.min_coeff().unwrap() > 0);
    }

    #[test]
    fn recursion_holds((tag, lam) in type_and_weight(), w in 0usize..48, i in 0usize..3) {
        let m = Model::get(tag).unwrap();
        let s = w % m.group.order();
        let i = i % m.rs.rank();
        let mut lower = lam.clone();
        lower.0[i] -= 1;
        let rhs = reassemble(&m, &decompose(&m, s, &lam, i).unwrap(), &lam).unwrap();
        prop_assert_eq!(c_poly(&m, s, &lower).unwrap(), rhs);
    }

    #[test]
    fn dagger_dimensions_follow_the_mixed_model(n in 2usize..=3, w in 0usize..48, lam in prop::collection::vec(-2..=0i64, 3)) {
        let mixed = Model::get(AffineType::A2n_2(n)).unwrap();
        let dagger = Model::get(AffineType::A2n_2Dagger(n)).unwrap();
        let lam = Weight(lam[..n].iter().map(|c| if n == 3 { (*c).max(-1) } else { *c }).collect());
        let u = w % dagger.group.order();
        let wd = mixed.group.w_dagger(&mixed.rs).unwrap();
        let twisted = mixed.group.multiply(wd, u);
        prop_assert_eq!(dim_weyl(&dagger, u, &lam).unwrap(), dim_weyl(&mixed, twisted, &lam).unwrap());

        let act = mixed.group.element(wd);
        let lhs = c_poly(&dagger, u, &lam).unwrap().at_q_one();
        let rhs = c_poly(&mixed, twisted, &lam).unwrap().map_weights(|mu| act.act_weight(mu)).at_q_one();
        prop_assert_eq!(lhs, rhs);
    }
}
