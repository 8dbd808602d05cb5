use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::discrforms::{is_isotropic, orthogonal_complement, DiscrElement, DiscrSubgroup, FiniteQuadraticForm};
use crate::error::{Error, Result};
use crate::rootsystems::{local_action, DynkinGraph, GraphDiscriminant, GraphSymmetry, SymmetryGroup};

/// Largest total Milnor number of a plane sextic.
pub const MAX_RANK: u32 = 19;

/// A Dynkin graph together with an isotropic kernel in its discriminant.
#[derive(Clone, Debug)]
pub struct Configuration {
    disc: Arc<GraphDiscriminant>,
    kernel: DiscrSubgroup,
    essential: Vec<usize>,
}

impl Configuration {
    pub fn new(graph: &DynkinGraph, kernel: DiscrSubgroup) -> Result<Self> {
        Self::with_discriminant(Arc::new(GraphDiscriminant::new(graph)), kernel)
    }

    pub fn with_discriminant(disc: Arc<GraphDiscriminant>, kernel: DiscrSubgroup) -> Result<Self> {
        let graph = disc.graph();
        let rank: u32 = graph.components().iter().map(|t| t.rank()).sum();
        if rank > MAX_RANK {
            return Err(Error::InvalidConfiguration(format!("total rank {rank} exceeds {MAX_RANK}")));
        }
        let kernel = DiscrSubgroup::from_elements(&disc.form, kernel.elements().to_vec())?;
        if !is_isotropic(&disc.form, &kernel) {
            return Err(Error::NotIsotropic);
        }
        if kernel.order() % 2 == 0 {
            return Err(Error::InvalidConfiguration("kernel has 2-torsion".into()));
        }
        let essential = (0..graph.components().len())
            .filter(|&c| !kernel.projection_is_zero(&disc.blocks[c]))
            .collect();
        Ok(Configuration { disc, kernel, essential })
    }

    /// Zero kernel.
    pub fn unextended(graph: &DynkinGraph) -> Self {
        let disc = GraphDiscriminant::new(graph);
        let kernel = DiscrSubgroup::trivial(&disc.form);
        Self::with_discriminant(Arc::new(disc), kernel).expect("zero kernel is admissible")
    }

    pub fn graph(&self) -> &DynkinGraph {
        self.disc.graph()
    }

    pub fn discriminant(&self) -> &GraphDiscriminant {
        &self.disc
    }

    pub fn form(&self) -> &FiniteQuadraticForm {
        &self.disc.form
    }

    pub fn kernel(&self) -> &DiscrSubgroup {
        &self.kernel
    }

    /// Components on which the kernel projects nontrivially.
    pub fn essential(&self) -> &[usize] {
        &self.essential
    }

    /// The same kernel on the graph with `extra` components appended.
    pub fn with_ordinary(&self, extra: &[crate::rootsystems::AdeType]) -> Result<Configuration> {
        let mut comps = self.graph().components().to_vec();
        comps.extend_from_slice(extra);
        let graph = DynkinGraph::new(comps);
        let disc = GraphDiscriminant::new(&graph);
        let pad = disc.form.rank() - self.form().rank();
        let elements = self
            .kernel
            .elements()
            .iter()
            .map(|x| {
                let mut c = x.0.clone();
                c.extend(std::iter::repeat_n(0, pad));
                DiscrElement(c)
            })
            .collect();
        let kernel = DiscrSubgroup::from_elements(&disc.form, elements)?;
        Configuration::with_discriminant(Arc::new(disc), kernel)
    }

    /// The configuration `(graph, t(K))`.
    pub fn transformed(&self, t: &GraphSymmetry) -> Result<Configuration> {
        let a = self.disc.action(t)?;
        let k = a.apply_subgroup(&self.disc.form, &self.kernel);
        Configuration::with_discriminant(self.disc.clone(), k)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mode {
    PreservesKernel,
    Stable,
}

struct ComponentData {
    block: std::ops::Range<usize>,
    orders: Vec<i64>,
    // (local permutation, images of block generators in block coordinates)
    internal: Vec<(Vec<usize>, Vec<Vec<i64>>)>,
}

struct Search<'a> {
    config: &'a Configuration,
    comps: Vec<ComponentData>,
    // vectors whose images are constrained: (source vector, subtract source?)
    tracked: Vec<(DiscrElement, bool)>,
    kernel_proj: HashMap<u64, HashSet<Vec<i64>>>,
    results: Vec<GraphSymmetry>,
}

impl<'a> Search<'a> {
    fn new(config: &'a Configuration, mode: Mode) -> Result<Self> {
        let disc = config.discriminant();
        let graph = disc.graph();
        let comps = graph
            .components()
            .iter()
            .enumerate()
            .map(|(c, t)| {
                let part = disc.part(c);
                let internal = t
                    .internal_symmetries()
                    .into_iter()
                    .map(|p| {
                        let a = local_action(part, &p);
                        let images = a.images().iter().map(|x| x.0.clone()).collect();
                        (p, images)
                    })
                    .collect();
                ComponentData { block: disc.blocks[c].clone(), orders: part.form.orders().to_vec(), internal }
            })
            .collect();
        let form = config.form();
        let mut tracked: Vec<(DiscrElement, bool)> =
            config.kernel.generators(form).into_iter().map(|g| (g, false)).collect();
        if mode == Mode::Stable {
            let perp = orthogonal_complement(form, &config.kernel)?;
            tracked.extend(perp.generators(form).into_iter().map(|g| (g, true)));
        }
        Ok(Search { config, comps, tracked, kernel_proj: HashMap::new(), results: Vec::new() })
    }

    fn projection(&mut self, mask: u64) -> &HashSet<Vec<i64>> {
        let comps = &self.comps;
        let kernel = &self.config.kernel;
        self.kernel_proj.entry(mask).or_insert_with(|| {
            kernel
                .elements()
                .iter()
                .map(|x| {
                    (0..comps.len())
                        .filter(|c| mask >> c & 1 == 1)
                        .flat_map(|c| x.0[comps[c].block.clone()].iter().copied())
                        .collect()
                })
                .collect()
        })
    }

    fn run(mut self) -> Vec<GraphSymmetry> {
        let k = self.comps.len();
        let mut target = vec![usize::MAX; k];
        let mut tau = vec![0usize; k];
        // images[t][j]: block j of the image of tracked vector t (minus source if asked)
        let mut images: Vec<Vec<Vec<i64>>> = vec![vec![Vec::new(); k]; self.tracked.len()];
        self.descend(0, 0, &mut target, &mut tau, &mut images);
        self.results.sort();
        self.results
    }

    fn descend(
        &mut self,
        i: usize,
        mask: u64,
        target: &mut Vec<usize>,
        tau: &mut Vec<usize>,
        images: &mut Vec<Vec<Vec<i64>>>,
    ) {
        let k = self.comps.len();
        if i == k {
            let graph = self.config.graph();
            let local: Vec<Vec<usize>> = (0..k).map(|c| self.comps[c].internal[tau[c]].0.clone()).collect();
            let s = graph.symmetry_from_parts(target, &local).expect("search yields symmetries");
            self.results.push(s);
            return;
        }
        let ty = self.config.graph().components()[i];
        for j in 0..k {
            if mask >> j & 1 == 1 || self.config.graph().components()[j] != ty {
                continue;
            }
            for t in 0..self.comps[i].internal.len() {
                for (v, (x, subtract)) in self.tracked.iter().enumerate() {
                    let comp = &self.comps[i];
                    let xi = &x.0[comp.block.clone()];
                    let mut y = vec![0i64; xi.len()];
                    for (g, &c) in xi.iter().enumerate() {
                        for (l, img) in comp.internal[t].1[g].iter().enumerate() {
                            y[l] += c * img;
                        }
                    }
                    if *subtract {
                        let xj = &x.0[self.comps[j].block.clone()];
                        for l in 0..y.len() {
                            y[l] -= xj[l];
                        }
                    }
                    for l in 0..y.len() {
                        y[l] = y[l].rem_euclid(comp.orders[l]);
                    }
                    images[v][j] = y;
                }
                let new_mask = mask | 1 << j;
                let ok = (0..self.tracked.len()).all(|v| {
                    let key: Vec<i64> =
                        (0..k).filter(|c| new_mask >> c & 1 == 1).flat_map(|c| images[v][c].iter().copied()).collect();
                    self.projection(new_mask).contains(&key)
                });
                if ok {
                    target[i] = j;
                    tau[i] = t;
                    self.descend(i + 1, new_mask, target, tau, images);
                }
            }
        }
    }
}

/// Graph symmetries whose discriminant action preserves the kernel.
pub fn sym_config(c: &Configuration) -> SymmetryGroup {
    let elements = Search::new(c, Mode::PreservesKernel).expect("valid configuration").run();
    group_from_elements(c.graph(), &elements)
}

/// Elements of the stable symmetry group: those preserving the kernel and
/// acting identically on `K⊥/K`.
pub fn stable_elements(c: &Configuration) -> Vec<GraphSymmetry> {
    Search::new(c, Mode::Stable).expect("valid configuration").run()
}

/// All elements of the kernel-preserving group.
pub fn config_elements(c: &Configuration) -> Vec<GraphSymmetry> {
    Search::new(c, Mode::PreservesKernel).expect("valid configuration").run()
}

/// A group presented by a generating subset of a known element list.
pub fn group_from_elements(graph: &DynkinGraph, elements: &[GraphSymmetry]) -> SymmetryGroup {
    let mut gens: Vec<GraphSymmetry> = Vec::new();
    let mut group = SymmetryGroup::new(graph, Vec::new());
    for s in elements {
        if !group.contains(s) {
            gens.push(s.clone());
            group = SymmetryGroup::new(graph, gens.clone());
        }
    }
    group
}
