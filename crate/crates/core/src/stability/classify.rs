use rayon::prelude::*;

use super::config::Configuration;
use super::kernels::{admissible_kernels, KernelSpec};
use super::report::{sym_stable, StableGroupReport};
use crate::catalog::{families, SexticFamily};
use crate::discrforms::DiscrElement;
use crate::rootsystems::{AdeType, DynkinGraph, SingularitySet};

/// Orbit types allowed for stable involutions of torus configurations of
/// weight at most seven, one list per involution.
pub const INVOLUTION_ORBIT_TYPES: [&[&str]; 5] =
    [&["2E6", "E6"], &["2E6", "A5"], &["2E6", "2A2"], &["A17"], &["2A8"]];

#[derive(Clone, Debug)]
pub struct OrbitResult {
    pub kernel_generators: Vec<DiscrElement>,
    pub orbit_size: usize,
    pub config: Configuration,
    pub report: StableGroupReport,
}

#[derive(Clone, Debug)]
pub struct FamilyResult {
    pub family: SexticFamily,
    pub orbits: Vec<OrbitResult>,
    /// Some kernel orbit yields the expected group.
    pub matches: bool,
    /// Every kernel orbit yields the expected group.
    pub unanimous: bool,
}

/// Essential sets `k_i A_{3i-1} + l E6` with `Σ i k_i + 2l = 6`.
pub fn torus_candidates() -> Vec<SingularitySet> {
    fn partitions(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            acc.push(p);
            partitions(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for l in (0..=3u32).rev() {
        let mut parts = Vec::new();
        partitions(6 - 2 * l, 6, &mut Vec::new(), &mut parts);
        for part in parts {
            let mut types: Vec<AdeType> = vec![AdeType::e(6); l as usize];
            types.extend(part.iter().map(|&i| AdeType::a(3 * i - 1)));
            out.push(SingularitySet::new(types));
        }
    }
    out
}

/// Stable symmetry groups of every admissible kernel orbit on `set`.
pub fn classify_set(set: &SingularitySet, spec: KernelSpec) -> Vec<OrbitResult> {
    classify_with_ordinary(set, spec, &[])
}

/// As [`classify_set`], with extra ordinary components appended to the graph.
pub fn classify_with_ordinary(set: &SingularitySet, spec: KernelSpec, extra: &[AdeType]) -> Vec<OrbitResult> {
    let graph = DynkinGraph::from_set(set);
    admissible_kernels(&graph, spec)
        .into_par_iter()
        .map(|orbit| {
            let base = Configuration::new(&graph, orbit.representative.clone()).expect("admissible kernel");
            let config = if extra.is_empty() { base } else { base.with_ordinary(extra).expect("rank within bounds") };
            let report = sym_stable(&config);
            let pad = config.form().rank() - orbit.generators.first().map_or(config.form().rank(), |g| g.0.len());
            let kernel_generators = orbit
                .generators
                .iter()
                .map(|g| {
                    let mut c = g.0.clone();
                    c.extend(std::iter::repeat_n(0, pad));
                    DiscrElement(c)
                })
                .collect();
            OrbitResult { kernel_generators, orbit_size: orbit.size, config, report }
        })
        .collect()
}

pub fn classify_family(family: &SexticFamily) -> FamilyResult {
    let orbits = classify_set(&family.essential, family.kernel);
    let matches = orbits.iter().any(|o| o.report.label == family.expected);
    let unanimous = orbits.iter().all(|o| o.report.label == family.expected);
    FamilyResult { family: family.clone(), orbits, matches, unanimous }
}

/// Classifies all shipped families, in file order.
pub fn classify_catalog() -> Vec<FamilyResult> {
    families().par_iter().map(classify_family).collect()
}
