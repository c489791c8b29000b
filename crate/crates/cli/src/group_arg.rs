//! Group arguments: either a catalog name or a `;`-separated generator list.

use orbistruct::{parse_generator_list, Catalog, GroupError, Limits, PermGroup, Permutation};

use crate::CliError;

#[derive(Debug, Clone)]
pub struct GroupArg {
    /// What the user typed.
    pub source: String,
    degree: usize,
    kind: SpecKind,
}

#[derive(Debug, Clone)]
enum SpecKind {
    Named(PermGroup),
    Generators(Vec<Permutation>),
}

impl GroupArg {
    pub fn parse(text: &str, catalog: &Catalog, limits: &Limits) -> Result<Self, CliError> {
        let source = text.trim().to_string();
        if let Some(entry) = catalog.get(&source) {
            let group = entry.group_capped(limits)?;
            return Ok(Self {
                degree: group.degree(),
                kind: SpecKind::Named(group),
                source,
            });
        }
        if !source.starts_with('(') {
            return Err(GroupError::UnknownGroup(source).into());
        }
        let (degree, gens) =
            parse_generator_list(&source, None).map_err(|e| CliError::validation(format!("in {source:?}: {e}")))?;
        Ok(Self {
            degree,
            kind: SpecKind::Generators(gens),
            source,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The generated group, moved onto `degree` points.
    pub fn build(&self, degree: usize, limits: &Limits) -> Result<PermGroup, CliError> {
        match &self.kind {
            SpecKind::Named(g) => Ok(g.extend_to(degree)?),
            SpecKind::Generators(gens) => {
                let gens = gens
                    .iter()
                    .map(|p| p.extend_to(degree))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(PermGroup::generate_capped(degree, &gens, limits.closure)?)
            }
        }
    }
}

/// Fails with the first generator of `inner` that lies outside `outer`.
pub fn require_inside(
    inner: &PermGroup,
    inner_name: &str,
    outer: &PermGroup,
    outer_name: &str,
) -> Result<(), CliError> {
    match inner.generators().iter().find(|x| !outer.contains(x)) {
        Some(x) => Err(CliError::validation(format!(
            "generator {x} of {inner_name} is not in {outer_name}, so {inner_name} is not a subgroup of {outer_name}"
        ))),
        None => Ok(()),
    }
}

/// Fails with the first generator of `lambda` that moves `delta` off itself.
pub fn require_normalizing(lambda: &PermGroup, delta: &PermGroup) -> Result<(), CliError> {
    match lambda.generators().iter().find(|x| delta.conjugate_by(x) != *delta) {
        Some(x) => Err(CliError::validation(format!(
            "generator {x} of Λ does not normalize Δ, so it does not stabilize ℝ[Δ]"
        ))),
        None => Ok(()),
    }
}
