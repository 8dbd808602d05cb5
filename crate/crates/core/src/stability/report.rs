use std::collections::HashMap;

use serde::Serialize;

use super::config::{stable_elements, Configuration};
use super::groups::{FiniteGroup, GroupLabel};
use crate::discrforms::DiscrElement;
use crate::rootsystems::{GraphSymmetry, SingularitySet};

/// Image of `Sym_st → GL(K)`, with matrices acting on column vectors of
/// coordinates in the echelon basis of the kernel.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct KappaImage {
    pub basis: Vec<DiscrElement>,
    pub matrices: Vec<Vec<Vec<i64>>>,
    pub order: usize,
    pub injective: bool,
    /// Indices of the elements acting trivially on the kernel.
    pub kernel: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StableGroupReport {
    pub elements: Vec<GraphSymmetry>,
    pub order: usize,
    pub label: GroupLabel,
    pub kappa: KappaImage,
    /// Orbits of the group on the essential components.
    pub orbit_partition: Vec<Vec<usize>>,
}

impl StableGroupReport {
    /// Orbit types, e.g. `["2E6", "E6"]`.
    pub fn orbit_types(&self, config: &Configuration) -> Vec<SingularitySet> {
        orbit_types(config, &self.orbit_partition)
    }
}

pub(crate) fn orbit_types(config: &Configuration, orbits: &[Vec<usize>]) -> Vec<SingularitySet> {
    let comps = config.graph().components();
    let mut out: Vec<SingularitySet> =
        orbits.iter().map(|o| SingularitySet::new(o.iter().map(|&c| comps[c]).collect())).collect();
    out.sort();
    out
}

/// Orbits of the given symmetries on the essential components.
pub fn essential_orbits(config: &Configuration, elements: &[GraphSymmetry]) -> Vec<Vec<usize>> {
    let graph = config.graph();
    let perms: Vec<Vec<usize>> = elements.iter().map(|s| s.component_permutation(graph)).collect();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; graph.components().len()];
    for &c in config.essential() {
        if assigned[c] {
            continue;
        }
        let mut orbit = vec![c];
        assigned[c] = true;
        let mut i = 0;
        while i < orbit.len() {
            for p in &perms {
                let d = p[orbit[i]];
                if !assigned[d] {
                    assigned[d] = true;
                    orbit.push(d);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

fn kappa(config: &Configuration, elements: &[GraphSymmetry]) -> KappaImage {
    let form = config.form();
    let kernel = config.kernel();
    let basis = kernel.generators(form);
    let mut coords: HashMap<DiscrElement, Vec<i64>> = HashMap::new();
    let orders: Vec<i64> = basis.iter().map(|b| form.order_of(b)).collect();
    let total: i64 = orders.iter().product();
    for code in 0..total {
        let mut c = code;
        let mut v = Vec::with_capacity(basis.len());
        let mut x = form.zero();
        for (b, &o) in basis.iter().zip(&orders) {
            let k = c % o;
            c /= o;
            v.push(k);
            x = form.add(&x, &form.scale(k, b));
        }
        coords.insert(x, v);
    }
    let per_element: Vec<Vec<Vec<i64>>> = elements
        .iter()
        .map(|s| {
            let a = config.discriminant().action(s).expect("element is a symmetry");
            let cols: Vec<&Vec<i64>> = basis.iter().map(|b| &coords[&a.apply(form, b)]).collect();
            (0..basis.len()).map(|i| cols.iter().map(|col| col[i]).collect()).collect()
        })
        .collect();
    let identity: Vec<Vec<i64>> =
        (0..basis.len()).map(|i| (0..basis.len()).map(|j| (i == j) as i64).collect()).collect();
    let kernel = (0..elements.len()).filter(|&i| per_element[i] == identity).collect();
    let mut matrices = per_element;
    matrices.sort();
    matrices.dedup();
    let order = matrices.len();
    KappaImage { basis, matrices, order, injective: order == elements.len(), kernel }
}

/// The stable symmetry group of a configuration.
pub fn sym_stable(config: &Configuration) -> StableGroupReport {
    let elements = stable_elements(config);
    let label = FiniteGroup::from_symmetries(&elements).label();
    let kappa = kappa(config, &elements);
    let orbit_partition = essential_orbits(config, &elements);
    StableGroupReport { order: elements.len(), elements, label, kappa, orbit_partition }
}
