#![allow(dead_code)]

use orbistruct::{parse_generator_list, Catalog, PermGroup, Permutation};
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::{Config, RngSeed};

pub const SEED: u64 = 0x005e_ed0f_0b1f;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn grp(gens: &str, degree: usize) -> PermGroup {
    let (n, gens) = parse_generator_list(gens, Some(degree)).unwrap();
    PermGroup::generate(n, &gens).unwrap()
}

pub fn named(name: &str) -> PermGroup {
    Catalog::builtin().group(name).unwrap()
}

pub fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

/// A group generated by one or two random permutations on `degrees` points.
pub fn group(degrees: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PermGroup> {
    degrees
        .prop_flat_map(|n| prop::collection::vec(perm(n), 1..=2).prop_map(move |g| PermGroup::generate(n, &g).unwrap()))
}

pub fn pick<'a>(g: &'a PermGroup, i: &Index) -> &'a Permutation {
    i.get(g.elements())
}

/// The subgroup generated by the picked elements.
pub fn subgroup(g: &PermGroup, picks: &[Index]) -> PermGroup {
    let gens: Vec<Permutation> = picks.iter().map(|i| pick(g, i).clone()).collect();
    PermGroup::generate(g.degree(), &gens).unwrap()
}

pub fn normal_closure(g: &PermGroup, x: &Permutation) -> PermGroup {
    let gens: Vec<Permutation> = g.elements().iter().map(|y| y.conjugate(x)).collect();
    PermGroup::generate(g.degree(), &gens).unwrap()
}

pub fn mul(a: &Permutation, b: &Permutation) -> Permutation {
    a.compose(b).unwrap()
}
