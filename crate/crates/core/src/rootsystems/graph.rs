use std::ops::Range;

use serde::Serialize;

use super::ade::{AdeType, SingularitySet};
use super::perm::{self, Perm, StabilizerChain};
use crate::error::{Error, Result};
use crate::exactcore::IntMatrix;

/// A disjoint union of connected Dynkin diagrams with global vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DynkinGraph {
    components: Vec<AdeType>,
    offsets: Vec<usize>,
}

impl DynkinGraph {
    pub fn new(components: Vec<AdeType>) -> Self {
        let mut offsets = Vec::with_capacity(components.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for t in &components {
            acc += t.rank() as usize;
            offsets.push(acc);
        }
        DynkinGraph { components, offsets }
    }

    /// Components in the canonical print order of the set.
    pub fn from_set(set: &SingularitySet) -> Self {
        Self::new(set.types().to_vec())
    }

    pub fn components(&self) -> &[AdeType] {
        &self.components
    }

    pub fn singularities(&self) -> SingularitySet {
        SingularitySet::new(self.components.clone())
    }

    pub fn vertex_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn vertices(&self, component: usize) -> Range<usize> {
        self.offsets[component]..self.offsets[component + 1]
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.offsets.partition_point(|&o| o <= v) - 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (c, t) in self.components.iter().enumerate() {
            let o = self.offsets[c];
            out.extend(t.edges().into_iter().map(|(a, b)| (a + o, b + o)));
        }
        out
    }

    fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in self.edges() {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }

    /// Builds a global vertex permutation from a component permutation and
    /// local symmetries: vertex `l` of component `i` goes to vertex
    /// `local[i][l]` of component `target[i]`.
    pub fn symmetry_from_parts(&self, target: &[usize], local: &[Perm]) -> Result<GraphSymmetry> {
        let mut p = vec![0; self.vertex_count()];
        for (i, &j) in target.iter().enumerate() {
            for (l, &m) in local[i].iter().enumerate() {
                p[self.offsets[i] + l] = self.offsets[j] + m;
            }
        }
        GraphSymmetry::new(self, p)
    }
}

/// Standard-basis Gram matrix: −2 on the diagonal, 1 on edges.
pub fn gram_of(graph: &DynkinGraph) -> IntMatrix {
    let n = graph.vertex_count();
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (a, b) in graph.edges() {
        rows[a][b] = 1;
        rows[b][a] = 1;
    }
    IntMatrix::from_rows(&rows)
}

/// A type-preserving automorphism of a Dynkin graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct GraphSymmetry {
    perm: Perm,
}

impl GraphSymmetry {
    pub fn new(graph: &DynkinGraph, perm: Perm) -> Result<Self> {
        let n = graph.vertex_count();
        if perm.len() != n || !is_permutation(&perm) {
            return Err(Error::NotSymmetry);
        }
        let adj = graph.adjacency();
        for a in 0..n {
            for b in 0..n {
                if adj[a][b] != adj[perm[a]][perm[b]] {
                    return Err(Error::NotSymmetry);
                }
            }
            let (ca, cb) = (graph.component_of(a), graph.component_of(perm[a]));
            if graph.components[ca] != graph.components[cb] {
                return Err(Error::NotSymmetry);
            }
        }
        Ok(GraphSymmetry { perm })
    }

    pub fn identity(graph: &DynkinGraph) -> Self {
        GraphSymmetry { perm: perm::identity(graph.vertex_count()) }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GraphSymmetry) -> GraphSymmetry {
        GraphSymmetry { perm: perm::compose(&self.perm, &other.perm) }
    }

    pub fn inverse(&self) -> GraphSymmetry {
        GraphSymmetry { perm: perm::inverse(&self.perm) }
    }

    pub fn is_identity(&self) -> bool {
        perm::is_identity(&self.perm)
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = g.compose(self);
            k += 1;
        }
        k
    }

    /// Image of each component.
    pub fn component_permutation(&self, graph: &DynkinGraph) -> Vec<usize> {
        (0..graph.components.len())
            .map(|c| graph.component_of(self.perm[graph.offsets[c]]))
            .collect()
    }

    /// Local permutation induced on component `c` (relative to its target).
    pub fn local(&self, graph: &DynkinGraph, c: usize) -> Perm {
        let target = graph.component_of(self.perm[graph.offsets[c]]);
        graph.vertices(c).map(|v| self.perm[v] - graph.offsets[target]).collect()
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// A group of graph symmetries given by generators.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    generators: Vec<GraphSymmetry>,
    chain: StabilizerChain,
}

impl SymmetryGroup {
    pub fn new(graph: &DynkinGraph, generators: Vec<GraphSymmetry>) -> Self {
        let perms: Vec<Perm> = generators.iter().map(|g| g.perm.clone()).collect();
        let chain = StabilizerChain::new(graph.vertex_count(), &perms);
        SymmetryGroup { generators, chain }
    }

    pub fn generators(&self) -> &[GraphSymmetry] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, s: &GraphSymmetry) -> bool {
        self.chain.contains(&s.perm)
    }

    /// All elements, sorted. Only sensible for small groups.
    pub fn elements(&self) -> Vec<GraphSymmetry> {
        self.chain.elements().into_iter().map(|perm| GraphSymmetry { perm }).collect()
    }
}

/// The full group of type-preserving graph automorphisms.
pub fn graph_symmetries(graph: &DynkinGraph) -> SymmetryGroup {
    let mut gens = Vec::new();
    let k = graph.components.len();
    let ids: Vec<Perm> = graph.components.iter().map(|t| perm::identity(t.rank() as usize)).collect();
    let same: Vec<usize> = (0..k).collect();
    for (c, t) in graph.components.iter().enumerate() {
        for g in t.internal_generators() {
            let mut local = ids.clone();
            local[c] = g;
            gens.push(graph.symmetry_from_parts(&same, &local).expect("internal symmetry"));
        }
    }
    for c in 1..k {
        if let Some(prev) = (0..c).rev().find(|&d| graph.components[d] == graph.components[c]) {
            let mut target = same.clone();
            target.swap(prev, c);
            gens.push(graph.symmetry_from_parts(&target, &ids).expect("component swap"));
        }
    }
    SymmetryGroup::new(graph, gens)
}
