//! Subgroup lattice by cyclic-join saturation: seed with every cyclic
//! subgroup, then keep joining known subgroups with cyclic ones until nothing
//! new appears. Every subgroup is generated by its cyclic subgroups, so the
//! fixed point is the whole lattice.

use std::collections::{HashMap, HashSet};

use crate::error::{GroupError, Result};
use crate::group::{PermGroup, DEFAULT_SUBGROUP_CAP};
use crate::table::{CayleyTable, ElementSet};

/// The subgroups of one group, with index-level data for callers that need
/// to map subgroups around (conjugation, containment).
#[derive(Debug, Clone)]
pub(crate) struct SubgroupLattice {
    pub table: CayleyTable,
    /// Sorted by `(order, elements)`.
    pub sets: Vec<ElementSet>,
    pub groups: Vec<PermGroup>,
}

impl SubgroupLattice {
    pub fn new(g: &PermGroup, cap: usize) -> Result<Self> {
        if g.order() > cap {
            return Err(GroupError::CapExceeded {
                what: format!("subgroup enumeration of a group of order {}", g.order()),
                cap,
            });
        }
        let table = CayleyTable::new(g);
        let n = table.order();

        let mut cyclic: Vec<(ElementSet, usize)> = Vec::new();
        let mut seen_cyclic = HashSet::new();
        for x in 0..n {
            let c = table.closure(&[x]);
            if seen_cyclic.insert(c.clone()) {
                cyclic.push((c, x));
            }
        }

        let mut gens: HashMap<ElementSet, Vec<usize>> = HashMap::new();
        let mut work: Vec<ElementSet> = Vec::new();
        for (c, x) in &cyclic {
            gens.insert(c.clone(), vec![*x]);
            work.push(c.clone());
        }
        while let Some(h) = work.pop() {
            let hgens = gens[&h].clone();
            for (c, x) in &cyclic {
                if c.is_subset(&h) {
                    continue;
                }
                let mut jg = hgens.clone();
                jg.push(*x);
                let joined = table.closure(&jg);
                if !gens.contains_key(&joined) {
                    gens.insert(joined.clone(), jg);
                    work.push(joined);
                }
            }
        }

        let elements = g.elements();
        let mut sets: Vec<ElementSet> = gens.into_keys().collect();
        let mut groups: Vec<PermGroup> = sets
            .iter()
            .map(|s| PermGroup::from_closed_set(g.degree(), s.iter().map(|i| elements[i].clone()).collect()))
            .collect();
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by(|&a, &b| {
            (groups[a].order(), groups[a].elements()).cmp(&(groups[b].order(), groups[b].elements()))
        });
        sets = order.iter().map(|&i| sets[i].clone()).collect();
        groups = order.iter().map(|&i| groups[i].clone()).collect();
        Ok(Self { table, sets, groups })
    }

    /// `γ S γ⁻¹` for an element index `γ`.
    pub fn conjugate_set(&self, gamma: usize, set: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.table.order());
        for x in set.iter() {
            out.insert(self.table.conj(gamma, x));
        }
        out
    }
}

/// Every subgroup of `g` exactly once, sorted by order and then elements.
pub fn all_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    all_subgroups_capped(g, DEFAULT_SUBGROUP_CAP)
}

pub fn all_subgroups_capped(g: &PermGroup, cap: usize) -> Result<Vec<PermGroup>> {
    Ok(SubgroupLattice::new(g, cap)?.groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::parse_generator_list;

    fn grp(gens: &str) -> PermGroup {
        let (n, gens) = parse_generator_list(gens, None).unwrap();
        PermGroup::generate(n, &gens).unwrap()
    }

    /// Exhaustive oracle: every subset of the element set that contains the
    /// identity and is closed under multiplication.
    fn brute_force_subgroup_count(g: &PermGroup) -> usize {
        let t = CayleyTable::new(g);
        let n = t.order();
        assert!(n <= 16);
        (0u32..1 << n)
            .filter(|mask| mask & 1 == 1)
            .filter(|mask| {
                (0..n).filter(|a| mask >> a & 1 == 1).all(|a| {
                    (0..n)
                        .filter(|b| mask >> b & 1 == 1)
                        .all(|b| mask >> t.mul(a, b) & 1 == 1)
                })
            })
            .count()
    }

    #[test]
    fn a4_has_ten_subgroups() {
        let a4 = grp("(1 2 3);(1 2)(3 4)");
        assert_eq!(brute_force_subgroup_count(&a4), 10);
        let subs = all_subgroups(&a4).unwrap();
        assert_eq!(subs.len(), 10);
        let orders: Vec<usize> = subs.iter().map(PermGroup::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
    }

    #[test]
    fn small_groups_match_brute_force() {
        for gens in [
            "(1 2 3);(1 2)",
            "(1 2 3 4);(1 3)",
            "(1 2)(3 4);(1 3)(2 4);(5 6)",
            "(1 2 3 4 5 6)",
        ] {
            let g = grp(gens);
            assert_eq!(
                all_subgroups(&g).unwrap().len(),
                brute_force_subgroup_count(&g),
                "{gens}"
            );
        }
    }

    #[test]
    fn a5_has_fifty_nine_subgroups() {
        let a5 = grp("(1 2 3 4 5);(1 2 3)");
        let subs = all_subgroups(&a5).unwrap();
        assert_eq!(subs.len(), 59);
        // Recount through conjugacy classes: class sizes are indices of normalizers.
        let mut reps: Vec<PermGroup> = Vec::new();
        let mut total = 0;
        for h in &subs {
            if reps.iter().any(|r| a5.subgroup_conjugacy_class(r).unwrap().contains(h)) {
                continue;
            }
            total += a5.order() / a5.normalizer(h).unwrap().order();
            reps.push(h.clone());
        }
        assert_eq!(total, 59);
        assert_eq!(reps.len(), 9);
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        assert_eq!(all_subgroups(&PermGroup::trivial(3)).unwrap().len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = grp("(1 2 3 4 5);(1 2)");
        assert!(matches!(
            all_subgroups_capped(&s5, 60),
            Err(GroupError::CapExceeded { cap: 60, .. })
        ));
        assert_eq!(all_subgroups(&s5).unwrap().len(), 156);
    }

    #[test]
    fn lattice_is_closed_under_intersection_and_conjugation() {
        let s4 = grp("(1 2 3 4);(1 2)");
        let subs = all_subgroups(&s4).unwrap();
        assert_eq!(subs.len(), 30);
        let set: HashSet<&PermGroup> = subs.iter().collect();
        for a in &subs {
            for b in &subs {
                assert!(set.contains(&a.intersection(b)));
            }
            for gamma in s4.generators() {
                assert!(set.contains(&a.conjugate_by(gamma)));
            }
        }
    }
}
