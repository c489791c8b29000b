//! Isomorphism testing for small groups: invariant fingerprints first, then a
//! backtracking search over generator images that grows the partial map one
//! generated subgroup at a time.

use crate::error::{GroupError, Result};
use crate::group::{PermGroup, DEFAULT_ISOMORPHISM_CAP};
use crate::subgroups::all_subgroups;
use crate::table::CayleyTable;

/// Above this order the subgroup-order multiset is left out of fingerprints.
const SUBGROUP_FINGERPRINT_MAX: usize = 24;

/// Isomorphism invariants. Equal fingerprints are necessary, not sufficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoFingerprint {
    pub order: usize,
    pub abelian: bool,
    /// `(element order, count)`, ascending.
    pub element_orders: Vec<(usize, usize)>,
    /// Sorted orders of all subgroups, for groups of order ≤ 24.
    pub subgroup_orders: Option<Vec<usize>>,
}

pub fn fingerprint(g: &PermGroup) -> IsoFingerprint {
    let subgroup_orders = (g.order() <= SUBGROUP_FINGERPRINT_MAX).then(|| {
        all_subgroups(g)
            .expect("order is below the subgroup cap")
            .iter()
            .map(PermGroup::order)
            .collect()
    });
    IsoFingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        element_orders: g.element_order_histogram(),
        subgroup_orders,
    }
}

pub fn is_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    is_isomorphic_capped(g, h, DEFAULT_ISOMORPHISM_CAP)
}

pub fn is_isomorphic_capped(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<bool> {
    Ok(find_isomorphism_capped(g, h, cap)?.is_some())
}

/// An explicit isomorphism `g → h` as a map between element indices
/// (positions in `elements()`), verified on every pair of elements.
pub fn find_isomorphism_capped(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.order() > cap {
            return Err(GroupError::CapExceeded {
                what: format!("isomorphism test on a group of order {}", x.order()),
                cap,
            });
        }
    }
    if g.order() != h.order() || fingerprint(g) != fingerprint(h) {
        return Ok(None);
    }
    let a = CayleyTable::new(g);
    let b = CayleyTable::new(h);
    let found = Search::new(&a, &b).run();
    if let Some(map) = &found {
        let n = a.order();
        let bijective = {
            let mut seen = vec![false; n];
            map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        };
        let homomorphic = (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
        if !(bijective && homomorphic) {
            return Err(GroupError::Inconsistent(
                "isomorphism search produced an invalid map".into(),
            ));
        }
    }
    Ok(found)
}

struct Search<'t> {
    a: &'t CayleyTable,
    b: &'t CayleyTable,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct Partial {
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    span: Vec<usize>,
}

impl<'t> Search<'t> {
    fn new(a: &'t CayleyTable, b: &'t CayleyTable) -> Self {
        let gens = a.generating_set();
        let b_orders: Vec<usize> = (0..b.order()).map(|y| b.element_order(y)).collect();
        let candidates = gens
            .iter()
            .map(|&g| {
                let ord = a.element_order(g);
                (0..b.order()).filter(|&y| b_orders[y] == ord).collect()
            })
            .collect();
        Self { a, b, gens, candidates }
    }

    fn run(&self) -> Option<Vec<usize>> {
        let n = self.a.order();
        let mut start = Partial {
            image: vec![None; n],
            used: vec![false; n],
            span: vec![0],
        };
        start.image[0] = Some(0);
        start.used[0] = true;
        self.extend(start, 0).map(|p| {
            p.image
                .into_iter()
                .map(|x| x.expect("generators span the group"))
                .collect()
        })
    }

    fn extend(&self, partial: Partial, k: usize) -> Option<Partial> {
        if k == self.gens.len() {
            return (partial.span.len() == self.a.order()).then_some(partial);
        }
        for &y in &self.candidates[k] {
            let mut next = partial.clone();
            if self.assign(&mut next, k, y) {
                if let Some(done) = self.extend(next, k + 1) {
                    return Some(done);
                }
            }
        }
        None
    }

    /// Maps generator `k` to `y` and closes the span under generators
    /// `0..=k`, checking the homomorphism rule and injectivity as it goes.
    fn assign(&self, p: &mut Partial, k: usize, y: usize) -> bool {
        let g = self.gens[k];
        match p.image[g] {
            Some(existing) if existing != y => return false,
            Some(_) => {}
            None => {
                if p.used[y] {
                    return false;
                }
                p.image[g] = Some(y);
                p.used[y] = true;
                p.span.push(g);
            }
        }
        let mut i = 0;
        while i < p.span.len() {
            let x = p.span[i];
            let fx = p.image[x].expect("span elements are mapped");
            for j in 0..=k {
                let gj = self.gens[j];
                let z = self.a.mul(x, gj);
                let w = self.b.mul(fx, p.image[gj].expect("assigned generator"));
                match p.image[z] {
                    Some(v) if v != w => return false,
                    Some(_) => {}
                    None => {
                        if p.used[w] {
                            return false;
                        }
                        p.image[z] = Some(w);
                        p.used[w] = true;
                        p.span.push(z);
                    }
                }
            }
            i += 1;
        }
        true
    }
}

/// Reference groups used for labels, smallest order first.
const REFERENCE_GROUPS: &[(&str, usize, &str)] = &[
    ("Z2", 2, "(1 2)"),
    ("Z3", 3, "(1 2 3)"),
    ("Z4", 4, "(1 2 3 4)"),
    ("V4", 4, "(1 2)(3 4);(1 3)(2 4)"),
    ("Z5", 5, "(1 2 3 4 5)"),
    ("Z6", 6, "(1 2 3 4 5 6)"),
    ("S3", 6, "(1 2 3);(1 2)"),
    ("Z7", 7, "(1 2 3 4 5 6 7)"),
    ("Z8", 8, "(1 2 3 4 5 6 7 8)"),
    ("Z4xZ2", 8, "(1 2 3 4);(5 6)"),
    ("Z2^3", 8, "(1 2);(3 4);(5 6)"),
    ("D4", 8, "(1 2 3 4);(1 3)"),
    ("Q8", 8, "(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)"),
    ("D5", 10, "(1 2 3 4 5);(2 5)(3 4)"),
    ("A4", 12, "(1 2 3);(1 2)(3 4)"),
    ("D6", 12, "(1 2 3 4 5 6);(1 6)(2 5)(3 4)"),
    ("F20", 20, "(1 2 3 4 5);(2 3 5 4)"),
    ("S4", 24, "(1 2 3 4);(1 2)"),
    ("A5", 60, "(1 2 3 4 5);(1 2 3)"),
];

/// Label of the isomorphism class of `g` among a fixed set of reference
/// groups; `"1"` for the trivial group and `order-N-unrecognized` otherwise.
pub fn named_iso_class(g: &PermGroup) -> String {
    named_iso_class_capped(g, DEFAULT_ISOMORPHISM_CAP)
}

pub fn named_iso_class_capped(g: &PermGroup, cap: usize) -> String {
    if g.is_trivial() {
        return "1".into();
    }
    for &(name, order, gens) in REFERENCE_GROUPS {
        if order != g.order() {
            continue;
        }
        let (n, gens) = crate::cycle::parse_generator_list(gens, None).expect("reference generators parse");
        let reference = PermGroup::generate(n, &gens).expect("reference groups are small");
        debug_assert_eq!(reference.order(), order, "{name}");
        if let Ok(true) = is_isomorphic_capped(g, &reference, cap) {
            return name.into();
        }
    }
    format!("order-{}-unrecognized", g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::parse_generator_list;
    use crate::quotient::quotient;

    fn grp(gens: &str, n: usize) -> PermGroup {
        let (n, gens) = parse_generator_list(gens, Some(n)).unwrap();
        PermGroup::generate(n, &gens).unwrap()
    }

    #[test]
    fn reference_groups_have_declared_orders() {
        for &(name, order, gens) in REFERENCE_GROUPS {
            let (n, gens) = parse_generator_list(gens, None).unwrap();
            assert_eq!(PermGroup::generate(n, &gens).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn quotient_of_s3_is_z2() {
        let s3 = grp("(1 2 3);(1 2)", 3);
        let z3 = grp("(1 2 3)", 3);
        let q = quotient(&s3, &z3).unwrap().regular_representation();
        assert!(is_isomorphic(&q, &grp("(1 2)", 2)).unwrap());
    }

    #[test]
    fn z6_is_not_s3() {
        let z6 = grp("(1 2 3 4 5 6)", 6);
        let s3 = grp("(1 2 3);(1 2)", 3);
        assert_ne!(fingerprint(&z6).element_orders, fingerprint(&s3).element_orders);
        assert!(!is_isomorphic(&z6, &s3).unwrap());
        // The search alone also finds nothing once the fingerprint is bypassed.
        let (a, b) = (CayleyTable::new(&z6), CayleyTable::new(&s3));
        assert!(Search::new(&a, &b).run().is_none());
    }

    #[test]
    fn reflexive_on_a5() {
        let a5 = grp("(1 2 3 4 5);(1 2 3)", 5);
        assert!(is_isomorphic(&a5, &a5).unwrap());
    }

    #[test]
    fn different_permutation_models_are_isomorphic() {
        // S3 acting on 3 points vs. on 6 points (regular action).
        let s3 = grp("(1 2 3);(1 2)", 3);
        let regular = quotient(&s3, &PermGroup::trivial(3)).unwrap().regular_representation();
        assert_eq!(regular.degree(), 6);
        assert!(is_isomorphic(&s3, &regular).unwrap());
        // D4 vs Q8 share order and abelian-ness but not structure.
        assert!(!is_isomorphic(
            &grp("(1 2 3 4);(1 3)", 4),
            &grp("(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)", 8)
        )
        .unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = grp("(1 2 3 4 5);(1 2)", 5);
        assert!(matches!(
            is_isomorphic(&s5, &s5),
            Err(GroupError::CapExceeded { cap: 60, .. })
        ));
        assert!(is_isomorphic_capped(&s5, &s5, 120).unwrap());
    }

    #[test]
    fn labels() {
        assert_eq!(named_iso_class(&PermGroup::trivial(5)), "1");
        let a5 = grp("(1 2 3 4 5);(1 2 3)", 5);
        assert_eq!(named_iso_class(&a5), "A5");
        let a3 = grp("(1 2 3)", 5);
        assert_eq!(named_iso_class(&a5.normalizer(&a3).unwrap()), "S3");
        assert_eq!(named_iso_class(&grp("(1 2)(3 4);(1 3)(2 4)", 4)), "V4");
        assert_eq!(named_iso_class(&grp("(1 2 3 4 5 6 7 8 9)", 9)), "order-9-unrecognized");
    }
}
