use std::ops::Range;

use super::ade::AdeType;
use super::graph::{gram_of, DynkinGraph, GraphSymmetry};
use crate::discrforms::{discriminant_form, DiscrAutomorphism, DiscrElement, DiscriminantForm, FiniteQuadraticForm};
use crate::error::{Error, Result};

/// Discriminant form of a single connected type.
pub fn type_discriminant(t: AdeType) -> DiscriminantForm {
    discriminant_form(&gram_of(&DynkinGraph::new(vec![t]))).expect("root lattices are even and definite")
}

/// Action of a local vertex permutation of one connected type on its
/// discriminant, in canonical coordinates.
pub fn local_action(disc: &DiscriminantForm, local: &[usize]) -> DiscrAutomorphism {
    let images = disc
        .lift
        .iter()
        .map(|lift| {
            let mut moved = vec![0; lift.len()];
            for (v, &c) in lift.iter().enumerate() {
                moved[local[v]] = c;
            }
            disc.canonical(&moved)
        })
        .collect();
    let a = DiscrAutomorphism::new_unchecked(images);
    debug_assert!(a.validate(&disc.form).is_ok());
    a
}

/// The discriminant form of a Dynkin graph as the orthogonal sum of its
/// components' forms, one coordinate block per component.
#[derive(Clone, Debug)]
pub struct GraphDiscriminant {
    pub form: FiniteQuadraticForm,
    pub blocks: Vec<Range<usize>>,
    parts: Vec<DiscriminantForm>,
    graph: DynkinGraph,
}

impl GraphDiscriminant {
    pub fn new(graph: &DynkinGraph) -> Self {
        let parts: Vec<DiscriminantForm> = graph.components().iter().map(|&t| type_discriminant(t)).collect();
        let forms: Vec<FiniteQuadraticForm> = parts.iter().map(|d| d.form.clone()).collect();
        let (form, blocks) = FiniteQuadraticForm::direct_sum(&forms);
        GraphDiscriminant { form, blocks, parts, graph: graph.clone() }
    }

    pub fn graph(&self) -> &DynkinGraph {
        &self.graph
    }

    pub fn part(&self, component: usize) -> &DiscriminantForm {
        &self.parts[component]
    }

    /// Canonical coordinates of the class of a global dual-coordinate vector.
    pub fn canonical(&self, dual: &[i64]) -> DiscrElement {
        let mut coords = Vec::with_capacity(self.form.rank());
        for (c, part) in self.parts.iter().enumerate() {
            coords.extend(part.canonical(&dual[self.graph.vertices(c)]).0);
        }
        DiscrElement(coords)
    }

    /// The automorphism of the discriminant induced by `s`.
    pub fn action(&self, s: &GraphSymmetry) -> Result<DiscrAutomorphism> {
        let s = GraphSymmetry::new(&self.graph, s.perm().to_vec())?;
        let n = self.graph.vertex_count();
        let mut images = Vec::with_capacity(self.form.rank());
        for (c, part) in self.parts.iter().enumerate() {
            let off = self.graph.vertices(c).start;
            for lift in &part.lift {
                let mut moved = vec![0; n];
                for (l, &x) in lift.iter().enumerate() {
                    moved[s.apply(off + l)] = x;
                }
                images.push(self.canonical(&moved));
            }
        }
        let a = DiscrAutomorphism::new_unchecked(images);
        debug_assert!(a.validate(&self.form).is_ok());
        Ok(a)
    }
}

/// The automorphism of `discr` of the graph induced by a graph symmetry.
pub fn discr_action(graph: &DynkinGraph, s: &GraphSymmetry) -> Result<DiscrAutomorphism> {
    if s.perm().len() != graph.vertex_count() {
        return Err(Error::NotSymmetry);
    }
    GraphDiscriminant::new(graph).action(s)
}
