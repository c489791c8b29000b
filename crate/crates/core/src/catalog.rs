//! Named small groups and sweeps over all subgroup chains of a group.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::cycle::parse_generator_list;
use crate::error::{GroupError, Result};
use crate::group::{Limits, PermGroup};
use crate::subgroups::SubgroupLattice;
use crate::substructure::{analyze_chain_with, AnalysisOptions, InheritanceReport, SubgroupChain};

const BUILTIN: &str = include_str!("../data/catalog.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCatalogEntry {
    pub name: String,
    pub degree: usize,
    /// Generators as written in the manifest.
    pub generators: Vec<String>,
    pub expected_order: Option<usize>,
}

impl GroupCatalogEntry {
    pub fn group(&self) -> Result<PermGroup> {
        self.group_capped(&Limits::default())
    }

    pub fn group_capped(&self, limits: &Limits) -> Result<PermGroup> {
        let joined = self.generators.join(";");
        let (n, gens) = parse_generator_list(&joined, Some(self.degree))?;
        PermGroup::generate_capped(n, &gens, limits.closure)
    }
}

/// Groups parsed from a text manifest, one per line:
/// `name degree gen1;gen2;... [= order]`. Blank lines and lines starting
/// with `#` are ignored. Every entry is closed and checked against its
/// expected order when loaded.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<GroupCatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in catalog is valid")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<GroupCatalogEntry> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let bad = |msg: String| GroupError::Catalog { line: line_no, msg };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.splitn(3, char::is_whitespace);
            let name = parts.next().unwrap_or_default().to_string();
            let degree: usize = parts
                .next()
                .and_then(|d| d.parse().ok())
                .filter(|&d| d > 0)
                .ok_or_else(|| bad("expected a positive degree after the name".into()))?;
            let rest = parts.next().ok_or_else(|| bad("missing generators".into()))?;
            let (gens, expected_order) = match rest.rsplit_once('=') {
                Some((g, o)) => {
                    let order = o
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| bad(format!("bad expected order {:?}", o.trim())))?;
                    (g.trim(), Some(order))
                }
                None => (rest.trim(), None),
            };
            if entries.iter().any(|e| e.name == name) {
                return Err(bad(format!("duplicate name {name}")));
            }
            let generators: Vec<String> = gens
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect();
            let entry = GroupCatalogEntry {
                name,
                degree,
                generators,
                expected_order,
            };
            let group = entry.group().map_err(|e| bad(e.to_string()))?;
            if let Some(order) = expected_order {
                if group.order() != order {
                    return Err(bad(format!(
                        "{} generates a group of order {}, expected {order}",
                        entry.name,
                        group.order()
                    )));
                }
            }
            entries.push(entry);
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[GroupCatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&GroupCatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn group(&self, name: &str) -> Result<PermGroup> {
        self.get(name)
            .ok_or_else(|| GroupError::UnknownGroup(name.to_string()))?
            .group()
    }
}

/// A chain representing its class under simultaneous conjugation.
#[derive(Debug, Clone)]
pub struct ChainClass {
    pub chain: SubgroupChain,
    /// Number of chains `(γΔγ⁻¹, γBγ⁻¹)` in the class.
    pub class_size: usize,
}

/// Every chain `{e} ⊊ Δ ⊊ B ⊊ Γ` up to simultaneous conjugation by `g`.
///
/// Each class is represented by its smallest member in the canonical subgroup
/// order (order first, then elements); classes are listed by `B`, then `Δ`.
pub fn enumerate_chains(g: &PermGroup, limits: &Limits) -> Result<Vec<ChainClass>> {
    let lattice = SubgroupLattice::new(g, limits.subgroups)?;
    let count = lattice.sets.len();
    let position: HashMap<_, usize> = lattice.sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let conj: Vec<Vec<usize>> = (0..g.order())
        .map(|gamma| {
            lattice
                .sets
                .iter()
                .map(|s| position[&lattice.conjugate_set(gamma, s)])
                .collect()
        })
        .collect();

    let top = count - 1;
    let mut seen = vec![vec![false; count]; count];
    let mut classes: Vec<(usize, usize, usize)> = Vec::new();
    for b in 1..top {
        for d in 1..b {
            if seen[d][b] || !lattice.sets[d].is_subset(&lattice.sets[b]) || lattice.sets[d] == lattice.sets[b] {
                continue;
            }
            let mut orbit: Vec<(usize, usize)> = conj.iter().map(|row| (row[d], row[b])).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &(od, ob) in &orbit {
                seen[od][ob] = true;
            }
            let (rd, rb) = orbit
                .iter()
                .copied()
                .min_by_key(|&(od, ob)| (ob, od))
                .expect("orbit is nonempty");
            classes.push((rb, rd, orbit.len()));
        }
    }
    classes.sort_unstable();
    classes
        .into_iter()
        .map(|(b, d, size)| {
            Ok(ChainClass {
                chain: SubgroupChain::new(g.clone(), lattice.groups[b].clone(), lattice.groups[d].clone())?,
                class_size: size,
            })
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SweptChain {
    pub class_size: usize,
    pub report: InheritanceReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepSummary {
    pub total_chains: usize,
    pub incompatible: usize,
    pub p_not_saturated: usize,
    pub p_not_split: usize,
    pub route_mismatches: usize,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub group_name: String,
    pub group: PermGroup,
    pub warnings: Vec<String>,
    pub chains: Vec<SweptChain>,
    pub summary: SweepSummary,
}

/// Analyzes every chain class of `g`. Chains are analyzed in parallel and
/// reported in [`enumerate_chains`] order.
pub fn sweep(name: &str, g: &PermGroup, limits: &Limits) -> Result<SweepResult> {
    let mut warnings = Vec::new();
    let center = g.center();
    if !center.is_trivial() {
        warnings.push(format!(
            "{name} has a center of order {}; its conjugation action is not effective",
            center.order()
        ));
    }
    let classes = enumerate_chains(g, limits)?;
    let opts = AnalysisOptions {
        limits: *limits,
        allow_center: true,
        q_lambda: None,
    };
    let chains = classes
        .par_iter()
        .map(|c| {
            Ok(SweptChain {
                class_size: c.class_size,
                report: analyze_chain_with(&c.chain, &opts)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = SweepSummary {
        total_chains: chains.len(),
        incompatible: chains.iter().filter(|c| !c.report.canonical_compatible).count(),
        p_not_saturated: chains
            .iter()
            .filter(|c| !c.report.p_saturated_in_o.is_saturated())
            .count(),
        p_not_split: chains.iter().filter(|c| !c.report.p_sequence_in_o.is_split()).count(),
        route_mismatches: chains.iter().filter(|c| !c.report.routes_agree).count(),
    };
    Ok(SweepResult {
        group_name: name.to_string(),
        group: g.clone(),
        warnings,
        chains,
        summary,
    })
}
