use crystal_branch_core::crystal::{
    build_crystal, e_tilde, eps, f_tilde, phi, weight, CrystalGraph, CrystalVertex, DominantWeight, DEFAULT_BUDGET,
};
use crystal_branch_core::iota::{b_tilde, deg, tensor_rule_holds};
use crystal_branch_core::qlaurent::{q_binomial, Laurent, RatFunc};
use proptest::prelude::*;
use proptest::sample::Index;

fn laurent() -> impl Strategy<Value = Laurent> {
    (-4i64..4, prop::collection::vec(-6i64..=6, 0..5)).prop_map(|(low, c)| Laurent::from_i64s(low, &c))
}

fn nonzero_laurent() -> impl Strategy<Value = Laurent> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |x| !x.is_zero())
}

fn small_weight() -> impl Strategy<Value = DominantWeight> {
    (2usize..=4)
        .prop_flat_map(|n| prop::collection::vec(0u32..=2, n - 1).prop_map(move |c| (n, c)))
        .prop_map(|(n, c)| DominantWeight::new(n, c).unwrap())
}

fn graph(lambda: &DominantWeight) -> CrystalGraph {
    build_crystal(lambda, DEFAULT_BUDGET).unwrap()
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_bar_is_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn ratfunc_field_laws(x in ratfunc(), y in nonzero_ratfunc(), z in ratfunc()) {
        prop_assert!((&y * &y.inv().unwrap()).is_one());
        prop_assert_eq!(&(&x / &y) * &y, x.clone());
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
        prop_assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn ratfunc_leading_terms_multiply(x in nonzero_ratfunc(), y in nonzero_ratfunc()) {
        let xy = &x * &y;
        prop_assert_eq!(xy.lt(), &x.lt() * &y.lt());
        prop_assert_eq!(xy.degree(), Some(x.degree().unwrap() + y.degree().unwrap()));
        prop_assert_eq!(xy.lc(), x.lc() * y.lc());
    }

    #[test]
    fn ev_infinity_matches_leading_data(x in ratfunc()) {
        match x.degree() {
            Some(d) if d > 0 => prop_assert!(x.ev_infinity().is_err()),
            Some(0) => prop_assert_eq!(x.ev_infinity().unwrap(), x.lc()),
            _ => prop_assert!(num_traits::Zero::is_zero(&x.ev_infinity().unwrap())),
        }
    }

    #[test]
    fn crystal_operators_are_partial_inverses(lambda in small_weight(), v in any::<Index>()) {
        let g = graph(&lambda);
        let b = &g.vertices[v.index(g.len())];
        let n = g.n();
        for i in 1..n {
            let w = weight(n, b);
            prop_assert_eq!(phi(i, b) as i32 - eps(i, b) as i32, w[i - 1]);
            if let Some(f) = f_tilde(i, b) {
                prop_assert_eq!(e_tilde(i, &f), Some(b.clone()));
                prop_assert!(g.index_of(&f).is_some());
                // wt(F~_i b) = wt(b) - alpha_i, read through the Cartan matrix
                let wf = weight(n, &f);
                for j in 1..n {
                    let cartan = match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    };
                    prop_assert_eq!(wf[j - 1], w[j - 1] - cartan);
                }
                prop_assert_eq!(phi(i, &f) + 1, phi(i, b));
            }
            if let Some(e) = e_tilde(i, b) {
                prop_assert_eq!(f_tilde(i, &e), Some(b.clone()));
                prop_assert_eq!(eps(i, &e) + 1, eps(i, b));
            }
        }
    }

    #[test]
    fn iota_operators_pair_strings(lambda in small_weight(), v in any::<Index>()) {
        let g = graph(&lambda);
        let b = &g.vertices[v.index(g.len())];
        for i in 1..g.n() {
            let d = deg(i, b);
            match b_tilde(i, b) {
                None => prop_assert_eq!(d, 0),
                Some(c) => {
                    prop_assert!(d > 0);
                    prop_assert_eq!(deg(i, &c), d);
                    prop_assert_eq!(b_tilde(i, &c), Some(b.clone()));
                    prop_assert!(g.index_of(&c).is_some());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_one_tensor_rule(a in 0u32..=6, v in any::<Index>(), u in prop::collection::vec(1u8..=2, 0..9)) {
        let g = graph(&DominantWeight::new(2, vec![a]).unwrap());
        let b = &g.vertices[v.index(g.len())];
        prop_assert!(tensor_rule_holds(b, &CrystalVertex(u)));
    }
}

#[test]
fn gaussian_binomials_are_bar_invariant_with_nonnegative_coefficients() {
    for m in 0..=12 {
        for k in 0..=m {
            let c = q_binomial(m, k, 1);
            assert!(c.is_bar_invariant(), "m={m} k={k}");
            assert!(c.terms().all(|(_, x)| x.sign() != num_bigint::Sign::Minus), "m={m} k={k}");
        }
    }
}

#[test]
fn gaussian_pascal_identity() {
    for m in 0..=10u32 {
        for k in 1..=m {
            let lhs = q_binomial(m + 1, k, 1);
            let rhs = &q_binomial(m, k, 1).shift(k as i64) + &q_binomial(m, k - 1, 1).shift(k as i64 - m as i64 - 1);
            assert_eq!(lhs, rhs, "m={m} k={k}");
        }
    }
}
