use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::fibers::{FiberMultiset, FiberType};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// A bipartite map on an oriented surface, given by a rotation `sigma`
/// (counterclockwise order of darts around each vertex) and the involution
/// `alpha` exchanging the two darts of an edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Skeleton {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    color: Vec<Color>,
}

/// Serialized form: cycles of `sigma`, pairs of `alpha`, one color per cycle.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkeletonJson {
    pub darts: usize,
    pub sigma: Vec<Vec<usize>>,
    pub alpha: Vec<[usize; 2]>,
    pub color: Vec<Color>,
}

fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            c.push(d);
            d = p[d];
        }
        out.push(c);
    }
    out
}

impl Skeleton {
    /// Validates bipartiteness, valency bounds, connectedness and genus 0.
    pub fn new(sigma: Vec<usize>, alpha: Vec<usize>, color: Vec<Color>) -> Result<Self> {
        let n = sigma.len();
        let bad = |m: &str| Err(Error::InvalidSkeleton(m.to_string()));
        if n == 0 || alpha.len() != n || color.len() != n {
            return bad("dart arrays differ in length");
        }
        let is_perm = |p: &[usize]| {
            let mut seen = vec![false; n];
            p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
        };
        if !is_perm(&sigma) || !is_perm(&alpha) {
            return bad("sigma and alpha must be permutations");
        }
        if (0..n).any(|d| alpha[d] == d || alpha[alpha[d]] != d) {
            return bad("alpha must be a fixed-point-free involution");
        }
        if (0..n).any(|d| color[sigma[d]] != color[d]) {
            return bad("colors must be constant on vertices");
        }
        if (0..n).any(|d| color[alpha[d]] == color[d]) {
            return bad("edges must join black to white");
        }
        let s = Skeleton { sigma, alpha, color };
        for v in s.vertices() {
            let max = if s.color[v[0]] == Color::Black { 3 } else { 2 };
            if v.len() > max {
                return bad("valency bound exceeded");
            }
        }
        if !s.is_connected() {
            return bad("map is not connected");
        }
        if s.euler_characteristic() != 2 {
            return bad("map is not planar");
        }
        Ok(s)
    }

    pub fn darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn color(&self, dart: usize) -> Color {
        self.color[dart]
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        cycles(&self.sigma)
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        let phi: Vec<usize> = (0..self.darts()).map(|d| self.sigma[self.alpha[d]]).collect();
        cycles(&phi)
    }

    /// Black corners of each face.
    pub fn face_degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.faces().iter().map(|f| f.iter().filter(|&&d| self.color[d] == Color::Black).count()).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn edges(&self) -> usize {
        self.darts() / 2
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices().len() as i64 - self.edges() as i64 + self.faces().len() as i64
    }

    fn is_connected(&self) -> bool {
        let n = self.darts();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [self.sigma[d], self.alpha[d]] {
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == n
    }

    /// Valencies of (black, white) vertices.
    pub fn valencies(&self, color: Color) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.vertices().iter().filter(|c| self.color[c[0]] == color).map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    /// Black and white vertices with too small a valency.
    pub fn unstable_vertices(&self) -> usize {
        self.valencies(Color::Black).iter().filter(|&&v| v <= 2).count()
            + self.valencies(Color::White).iter().filter(|&&v| v == 1).count()
    }

    /// A copy with a bivalent white vertex on every black-black adjacency
    /// suppressed, as a plain graph: (black vertices, edges, faces).
    pub fn black_graph_counts(&self) -> (usize, usize, usize) {
        let blacks = self.valencies(Color::Black).len();
        let bivalent = self.valencies(Color::White).iter().filter(|&&v| v == 2).count();
        (blacks, bivalent, self.faces().len())
    }

    /// Lexicographically least breadth-first relabeling over all start darts.
    pub fn canonical_code(&self) -> Vec<usize> {
        (0..self.darts()).map(|d| self.code_from(d, &self.sigma)).min().unwrap()
    }

    fn code_from(&self, start: usize, sigma: &[usize]) -> Vec<usize> {
        let n = self.darts();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([start]);
        label[start] = 0;
        order.push(start);
        while let Some(d) = queue.pop_front() {
            for e in [sigma[d], self.alpha[d]] {
                if label[e] == usize::MAX {
                    label[e] = order.len();
                    order.push(e);
                    queue.push_back(e);
                }
            }
        }
        let mut code = Vec::with_capacity(3 * n);
        for &d in &order {
            code.push(label[sigma[d]]);
            code.push(label[self.alpha[d]]);
            code.push(self.color[d] as usize);
        }
        code
    }

    /// True when the mirror image is isomorphic to the map itself.
    pub fn is_mirror_symmetric(&self) -> bool {
        let inv = {
            let mut inv = vec![0; self.darts()];
            for (d, &e) in self.sigma.iter().enumerate() {
                inv[e] = d;
            }
            inv
        };
        let mirror = (0..self.darts()).map(|d| self.code_from(d, &inv)).min().unwrap();
        mirror == self.canonical_code()
    }

    /// One fiber per face and one per unstable vertex.
    pub fn fiber_multiset(&self) -> FiberMultiset {
        let mut fibers: Vec<FiberType> = self
            .face_degrees()
            .into_iter()
            .map(|p| if p == 1 { FiberType::A0Star } else { FiberType::A(p as u32 - 1) })
            .collect();
        for v in self.valencies(Color::Black) {
            match v {
                1 => fibers.push(FiberType::A0StarStar),
                2 => fibers.push(FiberType::A2Star),
                _ => {}
            }
        }
        for v in self.valencies(Color::White) {
            if v == 1 {
                fibers.push(FiberType::A1Star);
            }
        }
        FiberMultiset::new(fibers)
    }

    /// Number of irreducible components of the trigonal curve, from the
    /// fiber product of the `j`-map with the 3-sheeted cover branched with
    /// a 3-cycle over 0 and a transposition over 1.
    pub fn component_count(&self) -> usize {
        let edges: Vec<usize> = (0..self.darts()).filter(|&d| self.color[d] == Color::Black).collect();
        let mut index = vec![usize::MAX; self.darts()];
        for (i, &d) in edges.iter().enumerate() {
            index[d] = i;
        }
        let g_black: Vec<usize> = edges.iter().map(|&d| index[self.sigma[d]]).collect();
        let g_white: Vec<usize> = edges.iter().map(|&d| index[self.alpha[self.sigma[self.alpha[d]]]]).collect();
        let three_cycle = [1, 2, 0];
        let swap = [1, 0, 2];
        let m = edges.len();
        let mut seen = vec![false; 3 * m];
        let mut orbits = 0;
        for start in 0..3 * m {
            if seen[start] {
                continue;
            }
            orbits += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let (e, s) = (x / 3, x % 3);
                for y in [g_black[e] * 3 + three_cycle[s], g_white[e] * 3 + swap[s]] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        orbits
    }

    pub fn to_json(&self) -> SkeletonJson {
        let sigma = self.vertices();
        let alpha = (0..self.darts()).filter(|&d| d < self.alpha[d]).map(|d| [d, self.alpha[d]]).collect();
        let color = sigma.iter().map(|c| self.color[c[0]]).collect();
        SkeletonJson { darts: self.darts(), sigma, alpha, color }
    }

    pub fn from_json(j: &SkeletonJson) -> Result<Self> {
        let n = j.darts;
        let bad = |m: &str| Error::InvalidSkeleton(m.to_string());
        if j.color.len() != j.sigma.len() {
            return Err(bad("one color per sigma cycle required"));
        }
        let mut sigma = vec![usize::MAX; n];
        let mut color = vec![Color::Black; n];
        for (c, &col) in j.sigma.iter().zip(&j.color) {
            for (i, &d) in c.iter().enumerate() {
                if d >= n || sigma[d] != usize::MAX {
                    return Err(bad("sigma cycles must partition the darts"));
                }
                sigma[d] = c[(i + 1) % c.len()];
                color[d] = col;
            }
        }
        let mut alpha = vec![usize::MAX; n];
        for &[a, b] in &j.alpha {
            if a >= n || b >= n || alpha[a] != usize::MAX || alpha[b] != usize::MAX {
                return Err(bad("alpha pairs must partition the darts"));
            }
            alpha[a] = b;
            alpha[b] = a;
        }
        if sigma.contains(&usize::MAX) || alpha.contains(&usize::MAX) {
            return Err(bad("every dart needs sigma and alpha images"));
        }
        Skeleton::new(sigma, alpha, color)
    }
}

impl Serialize for Skeleton {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Skeleton {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Skeleton::from_json(&SkeletonJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
