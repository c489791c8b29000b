mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::*;
use num_rational::Rational64;
use orbistruct::iso::{fingerprint, is_isomorphic};
use orbistruct::saturation::{
    is_saturated, is_saturated_exhaustive, orbit_condition_holds, replay_witness, Saturation,
};
use orbistruct::{
    all_subgroups, parse_cycles, quotient, render, AlgebraVector, PermGroup, Permutation, SmallRationalVector,
};
use proptest::prelude::*;
use proptest::sample::Index;

const CASES: u32 = 1000;

fn vector(g: &Arc<PermGroup>, coeffs: &[i64]) -> SmallRationalVector {
    let terms = g
        .elements()
        .iter()
        .zip(coeffs.iter().cycle())
        .map(|(p, &c)| (p.clone(), Rational64::from_integer(c)));
    AlgebraVector::from_terms(Arc::clone(g), terms).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 24)
}

proptest! {
    #![proptest_config(config(CASES))]

    #[test]
    fn lagrange(g in group(1..=5), picks in prop::collection::vec(any::<Index>(), 0..=2)) {
        let h = subgroup(&g, &picks);
        prop_assert!(h.is_subgroup_of(&g));
        prop_assert_eq!(g.order() % h.order(), 0);
        let cosets: BTreeSet<BTreeSet<Permutation>> = g
            .elements()
            .iter()
            .map(|x| h.elements().iter().map(|y| mul(x, y)).collect())
            .collect();
        prop_assert_eq!(cosets.len() * h.order(), g.order());
    }

    #[test]
    fn orbit_stabilizer(g in group(1..=5), picks in prop::collection::vec(any::<Index>(), 1..=2), point in 0usize..5) {
        let point = point % g.degree();
        let orbit: BTreeSet<usize> = g.elements().iter().map(|x| x.apply(point)).collect();
        let stab = g.elements().iter().filter(|x| x.apply(point) == point).count();
        prop_assert_eq!(orbit.len() * stab, g.order());

        let h = subgroup(&g, &picks);
        let class = g.subgroup_conjugacy_class(&h).unwrap();
        let n = g.normalizer(&h).unwrap();
        prop_assert_eq!(class.len() * n.order(), g.order());
        prop_assert!(h.is_normal_in(&n));
        prop_assert!(g.centralizer(&h).unwrap().is_subgroup_of(&n));
    }

    #[test]
    fn quotient_is_well_defined(
        g in group(2..=5),
        x in any::<Index>(),
        a in any::<Index>(),
        b in any::<Index>(),
        na in any::<Index>(),
        nb in any::<Index>(),
    ) {
        let n = normal_closure(&g, pick(&g, &x));
        let q = quotient(&g, &n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        let (a, b) = (pick(&g, &a), pick(&g, &b));
        let a2 = mul(a, pick(&n, &na));
        let b2 = mul(b, pick(&n, &nb));
        let ab = q.coset_index(&mul(a, b)).unwrap();
        prop_assert_eq!(q.coset_index(&mul(&a2, &b2)).unwrap(), ab);
        prop_assert_eq!(q.multiply(q.coset_index(a).unwrap(), q.coset_index(b).unwrap()), ab);
        prop_assert_eq!(q.regular_representation().order(), q.order());
    }

    #[test]
    fn conjugation_action_axioms(
        which in 0usize..3,
        x in any::<Index>(),
        y in any::<Index>(),
        u in coeffs(),
        v in coeffs(),
        k in -5i64..=5,
    ) {
        let g = Arc::new(match which {
            0 => named("S3"),
            1 => named("A4"),
            _ => named("D4"),
        });
        let (x, y) = (pick(&g, &x), pick(&g, &y));
        let (u, v) = (vector(&g, &u), vector(&g, &v));
        prop_assert_eq!(u.conjugation_act(g.identity()).unwrap(), u.clone());
        prop_assert_eq!(u.conjugation_act(x).unwrap().support_len(), u.support_len());
        let xy = mul(x, y);
        prop_assert_eq!(
            u.conjugation_act(&xy).unwrap(),
            u.conjugation_act(y).unwrap().conjugation_act(x).unwrap()
        );
        let k = Rational64::from_integer(k);
        let lhs = u.scale(&k).add(&v).unwrap().conjugation_act(x).unwrap();
        let rhs = u.conjugation_act(x).unwrap().scale(&k).add(&v.conjugation_act(x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // Conjugation is an algebra automorphism.
        prop_assert_eq!(
            u.multiply(&v).unwrap().conjugation_act(x).unwrap(),
            u.conjugation_act(x).unwrap().multiply(&v.conjugation_act(x).unwrap()).unwrap()
        );
    }

    #[test]
    fn algebra_is_associative(a4 in any::<bool>(), u in coeffs(), v in coeffs(), w in coeffs()) {
        let g = Arc::new(if a4 { named("A4") } else { named("S3") });
        let (u, v, w) = (vector(&g, &u), vector(&g, &v), vector(&g, &w));
        prop_assert_eq!(
            u.multiply(&v).unwrap().multiply(&w).unwrap(),
            u.multiply(&v.multiply(&w).unwrap()).unwrap()
        );
        prop_assert_eq!(
            u.multiply(&v.add(&w).unwrap()).unwrap(),
            u.multiply(&v).unwrap().add(&u.multiply(&w).unwrap()).unwrap()
        );
        let one = AlgebraVector::one(Arc::clone(&g));
        prop_assert_eq!(one.multiply(&u).unwrap(), u);
    }

    #[test]
    fn parser_round_trip(
        p in (1usize..=12).prop_flat_map(perm),
        rotations in prop::collection::vec(any::<Index>(), 12),
        order in Just((0..12).collect::<Vec<usize>>()).prop_shuffle(),
        commas in any::<bool>(),
    ) {
        let degree = p.degree();
        prop_assert_eq!(&parse_cycles(&render(&p), Some(degree)).unwrap(), &p);

        // The same permutation written with rotated, reordered cycles.
        let cycles = p.cycles();
        let sep = if commas { ", " } else { "  " };
        let mut text = String::new();
        for &i in order.iter().filter(|&&i| i < cycles.len()) {
            let c = &cycles[i];
            let r = rotations[i].index(c.len());
            let rotated: Vec<String> = c[r..].iter().chain(&c[..r]).map(|x| x.to_string()).collect();
            text.push_str(&format!("({})", rotated.join(sep)));
        }
        if text.is_empty() {
            text.push_str("()");
        }
        let parsed = parse_cycles(&text, Some(degree)).unwrap();
        prop_assert_eq!(&parsed, &p);
        prop_assert_eq!(render(&parsed), render(&p));
    }

    #[test]
    fn isomorphism_is_an_equivalence(
        g in group(1..=4),
        h in group(1..=4),
        k in group(1..=4),
        s in perm(4),
    ) {
        prop_assert!(is_isomorphic(&g, &g).unwrap());
        prop_assert_eq!(is_isomorphic(&g, &h).unwrap(), is_isomorphic(&h, &g).unwrap());
        // Relabeling points gives an isomorphic group with the same invariants.
        let s = s.extend_to(g.degree().max(4)).unwrap();
        let g4 = g.extend_to(4).unwrap();
        let relabeled = g4.conjugate_by(&s);
        prop_assert!(is_isomorphic(&g4, &relabeled).unwrap());
        prop_assert_eq!(fingerprint(&g4), fingerprint(&relabeled));
        let (gh, hk) = (is_isomorphic(&g, &h).unwrap(), is_isomorphic(&h, &k).unwrap());
        if gh {
            prop_assert_eq!(fingerprint(&g), fingerprint(&h));
        }
        if gh && hk {
            prop_assert!(is_isomorphic(&g, &k).unwrap());
        }
    }
}

/// Random `(Γ, H, Λ)` with `Γ` of order ≤ 24, `|H| ≤ max_h` and `Λ ≤ N_Γ(H)`.
fn saturation_triple(max_h: usize) -> impl Strategy<Value = (PermGroup, PermGroup, PermGroup)> {
    (
        prop::sample::select(vec!["S3", "D4", "A4", "S4", "D5", "F20", "D6"]),
        any::<Index>(),
        prop::collection::vec(any::<Index>(), 0..=2),
    )
        .prop_map(move |(name, hi, lp)| {
            let g = named(name);
            let subs: Vec<PermGroup> = all_subgroups(&g)
                .unwrap()
                .into_iter()
                .filter(|h| h.order() <= max_h)
                .collect();
            let h = hi.get(&subs).clone();
            let n = g.normalizer(&h).unwrap();
            let lambda = subgroup(&n, &lp);
            (g, h, lambda)
        })
}

proptest! {
    #![proptest_config(config(CASES))]

    #[test]
    fn pruned_saturation_matches_exhaustive((g, h, lambda) in saturation_triple(12)) {
        let fast = is_saturated(&g, &h, &lambda).unwrap();
        let slow = is_saturated_exhaustive(&g, &h, &lambda).unwrap();
        prop_assert_eq!(&fast, &slow);
        if let Saturation::Violated(w) = &fast {
            prop_assert!(replay_witness(&g, &h, &lambda, w).unwrap());
        }
    }

    #[test]
    fn saturation_agrees_with_orbits_at_rational_points(
        (g, h, lambda) in saturation_triple(24),
        coeffs in prop::collection::vec(-3i64..=3, 20),
    ) {
        let g = Arc::new(g);
        let verdict = is_saturated(&g, &h, &lambda).unwrap();
        // A random point of ℝ[H], coefficients possibly repeated or zero.
        let point: SmallRationalVector = AlgebraVector::from_terms(
            Arc::clone(&g),
            h.elements().iter().zip(&coeffs).map(|(p, &c)| (p.clone(), Rational64::from_integer(c))),
        )
        .unwrap();
        match &verdict {
            Saturation::Saturated => prop_assert!(orbit_condition_holds(&h, &lambda, &point).unwrap()),
            Saturation::Violated(w) => {
                // Distinct coefficients on the witness support violate the condition.
                let generic: SmallRationalVector = AlgebraVector::from_terms(
                    Arc::clone(&g),
                    w.support.iter().zip(1i64..).map(|(p, c)| (p.clone(), Rational64::from_integer(c))),
                )
                .unwrap();
                prop_assert!(!orbit_condition_holds(&h, &lambda, &generic).unwrap());
            }
        }
    }

    #[test]
    fn saturated_lambda_fills_the_normalizer((g, h, lambda) in saturation_triple(24)) {
        // Λ·C_Γ(H) = N_Γ(H) whenever ℝ[H] is saturated with respect to Λ.
        if is_saturated(&g, &h, &lambda).unwrap().is_saturated() {
            let product: BTreeSet<Permutation> = lambda.product_set(&g.centralizer(&h).unwrap()).into_iter().collect();
            let n: BTreeSet<Permutation> = g.normalizer(&h).unwrap().elements().iter().cloned().collect();
            prop_assert_eq!(product, n);
        }
    }
}

#[test]
fn parser_round_trip_is_exhaustive_through_degree_seven() {
    for degree in 1..=7 {
        let gens = if degree == 1 {
            vec![]
        } else {
            vec![
                Permutation::from_cycles(degree, &[(1..=degree).collect()]).unwrap(),
                Permutation::from_cycles(degree, &[vec![1, 2]]).unwrap(),
            ]
        };
        let sym = PermGroup::generate(degree, &gens).unwrap();
        assert_eq!(sym.order(), (1..=degree).product::<usize>());
        for p in sym.elements() {
            assert_eq!(&parse_cycles(&render(p), Some(degree)).unwrap(), p);
        }
    }
}
