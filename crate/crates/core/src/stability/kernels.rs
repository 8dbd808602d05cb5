use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::discrforms::{rref_mod, DiscrElement, DiscrSubgroup, FpSubspace, PTorsion};
use crate::rootsystems::{graph_symmetries, DynkinGraph, GraphDiscriminant};

/// Shape of the admissible kernels of a family.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KernelSpec {
    Zero,
    Elementary { p: u32, rank: usize },
}

/// One orbit of admissible kernels under the graph symmetry group.
#[derive(Clone, Debug)]
pub struct KernelOrbit {
    /// The orbit member with the smallest echelon form.
    pub representative: DiscrSubgroup,
    /// Echelon basis of the representative.
    pub generators: Vec<DiscrElement>,
    pub size: usize,
}

/// Isotropic kernels `≅ (Z/p)^rank` with nonzero projection to every
/// component, grouped into orbits under all graph symmetries.
pub fn admissible_kernels(graph: &DynkinGraph, spec: KernelSpec) -> Vec<KernelOrbit> {
    let disc = GraphDiscriminant::new(graph);
    let form = &disc.form;
    let (p, rank) = match spec {
        KernelSpec::Zero => {
            return vec![KernelOrbit { representative: DiscrSubgroup::trivial(form), generators: Vec::new(), size: 1 }]
        }
        KernelSpec::Elementary { p, rank } => (p, rank),
    };
    let tors = PTorsion::new(form, p as i64);
    let subspaces = tors.isotropic_subspaces(rank, &disc.blocks);

    // linear action of each generator on the p-torsion
    let maps: Vec<Vec<Vec<u8>>> = graph_symmetries(graph)
        .generators()
        .iter()
        .map(|s| {
            let a = disc.action(s).expect("generator is a symmetry");
            tors.basis.iter().map(|e| tors.coords(form, &a.apply(form, e)).expect("p-torsion is preserved")).collect()
        })
        .collect();
    let image = |s: &FpSubspace, m: &[Vec<u8>]| -> FpSubspace {
        let rows: Vec<Vec<u8>> = s
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![0u32; m.len()];
                for (j, &c) in r.iter().enumerate() {
                    if c != 0 {
                        for (l, &x) in m[j].iter().enumerate() {
                            out[l] += c as u32 * x as u32;
                        }
                    }
                }
                out.into_iter().map(|x| (x % p) as u8).collect()
            })
            .collect();
        rref_mod(&rows, p)
    };

    let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(subspaces.len());
    let mut orbits = Vec::new();
    for s in &subspaces {
        if seen.contains(&s.key()) {
            continue;
        }
        seen.insert(s.key());
        let mut queue = VecDeque::from([s.clone()]);
        let mut size = 0;
        while let Some(t) = queue.pop_front() {
            size += 1;
            for m in &maps {
                let u = image(&t, m);
                if seen.insert(u.key()) {
                    queue.push_back(u);
                }
            }
        }
        let generators: Vec<DiscrElement> = s.rows.iter().map(|r| tors.element(form, r)).collect();
        orbits.push(KernelOrbit { representative: tors.subgroup(form, s), generators, size });
    }
    orbits
}
