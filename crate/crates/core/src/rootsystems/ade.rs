use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

/// A connected simply laced Dynkin diagram.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AdeType {
    family: Family,
    rank: u32,
}

impl AdeType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(AdeType { family, rank })
        } else {
            Err(Error::InvalidConfiguration(format!("no Dynkin diagram {}{rank}", family.letter())))
        }
    }

    pub fn a(p: u32) -> Self {
        Self::new(Family::A, p).unwrap()
    }

    pub fn d(q: u32) -> Self {
        Self::new(Family::D, q).unwrap()
    }

    pub fn e(n: u32) -> Self {
        Self::new(Family::E, n).unwrap()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Edges between 0-based vertex indices.
    ///
    /// `A_p` is a path; `D_q` is a path on the first `q-2` vertices with
    /// both remaining vertices attached to vertex `q-3`; `E_n` is a path on
    /// the first `n-1` vertices with the last vertex attached to vertex 2.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank as usize;
        match self.family {
            Family::A => (1..n).map(|i| (i - 1, i)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 2).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((2, n - 1));
                e
            }
        }
    }

    /// All symmetries of the diagram as local vertex permutations, identity first.
    pub fn internal_symmetries(&self) -> Vec<Vec<usize>> {
        let n = self.rank as usize;
        let id: Vec<usize> = (0..n).collect();
        match (self.family, n) {
            (Family::A, 1) | (Family::E, 7) | (Family::E, 8) => vec![id],
            (Family::A, _) => vec![id, (0..n).rev().collect()],
            (Family::D, 4) => {
                // permutations of the outer vertices 0, 2, 3 around the center 1
                let outer = [0, 2, 3];
                let mut out = Vec::new();
                for p in permutations3() {
                    let mut perm = id.clone();
                    for (i, &o) in outer.iter().enumerate() {
                        perm[o] = outer[p[i]];
                    }
                    out.push(perm);
                }
                out
            }
            (Family::D, _) => {
                let mut flip = id.clone();
                flip.swap(n - 2, n - 1);
                vec![id, flip]
            }
            (Family::E, _) => vec![id, vec![4, 3, 2, 1, 0, 5]],
        }
    }

    /// Generators of the internal symmetry group.
    pub fn internal_generators(&self) -> Vec<Vec<usize>> {
        let all = self.internal_symmetries();
        if self.family == Family::D && self.rank == 4 {
            vec![vec![2, 1, 0, 3], vec![2, 1, 3, 0]]
        } else {
            all.into_iter().skip(1).collect()
        }
    }

    pub fn symmetry_order(&self) -> u128 {
        self.internal_symmetries().len() as u128
    }

    fn sort_key(&self) -> (u8, std::cmp::Reverse<u32>) {
        let f = match self.family {
            Family::E => 0,
            Family::D => 1,
            Family::A => 2,
        };
        (f, std::cmp::Reverse(self.rank))
    }
}

fn permutations3() -> [[usize; 3]; 6] {
    [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]]
}

impl PartialOrd for AdeType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Print order: `E` before `D` before `A`, higher rank first.
impl Ord for AdeType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::parse("Dynkin type", s)),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse("Dynkin type", s));
        }
        let rank = rest.parse().map_err(|_| Error::parse("Dynkin type", s))?;
        AdeType::new(family, rank).map_err(|_| Error::parse("Dynkin type", s))
    }
}

/// A multiset of Dynkin types, written like `2E8+A3` or `A9+2A4`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SingularitySet {
    types: Vec<AdeType>,
}

impl SingularitySet {
    pub fn new(mut types: Vec<AdeType>) -> Self {
        types.sort();
        SingularitySet { types }
    }

    pub fn types(&self) -> &[AdeType] {
        &self.types
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    /// Total Milnor number.
    pub fn rank(&self) -> u32 {
        self.types.iter().map(AdeType::rank).sum()
    }

    pub fn count(&self, t: AdeType) -> usize {
        self.types.iter().filter(|&&u| u == t).count()
    }

    pub fn union(&self, other: &SingularitySet) -> SingularitySet {
        SingularitySet::new(self.types.iter().chain(&other.types).copied().collect())
    }

    /// Distinct types with multiplicities, in print order.
    pub fn grouped(&self) -> Vec<(AdeType, usize)> {
        let mut out: Vec<(AdeType, usize)> = Vec::new();
        for &t in &self.types {
            match out.last_mut() {
                Some((u, c)) if *u == t => *c += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }
}

impl fmt::Display for SingularitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.types.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.grouped().into_iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for SingularitySet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(SingularitySet::default());
        }
        let mut types = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let split = term.find(|c: char| !c.is_ascii_digit()).ok_or_else(|| Error::parse("singularity set", s))?;
            let count: usize = if split == 0 {
                1
            } else {
                term[..split].parse().map_err(|_| Error::parse("singularity set", s))?
            };
            if count == 0 {
                return Err(Error::parse("singularity set", s));
            }
            let t: AdeType = term[split..].parse().map_err(|_| Error::parse("singularity set", s))?;
            types.extend(std::iter::repeat_n(t, count));
        }
        Ok(SingularitySet::new(types))
    }
}

impl Serialize for SingularitySet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SingularitySet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let s: SingularitySet = "A3+2E8".parse().unwrap();
        assert_eq!(s.to_string(), "2E8+A3");
        assert_eq!(s.rank(), 19);
        let t: SingularitySet = "2A4+A9".parse().unwrap();
        assert_eq!(t.to_string(), "A9+2A4");
        assert_eq!("9A2".parse::<SingularitySet>().unwrap().types().len(), 9);
        assert_eq!("E6+A5+4A2".parse::<SingularitySet>().unwrap().to_string(), "E6+A5+4A2");
    }

    #[test]
    fn rejects_bad_names() {
        for bad in ["", "E9", "D3", "A0", "2", "B2", "A2+", "0A2", "A2 A3", "A-1"] {
            assert!(bad.parse::<SingularitySet>().is_err(), "{bad}");
        }
    }

    #[test]
    fn symmetry_counts() {
        assert_eq!(AdeType::d(4).symmetry_order(), 6);
        for t in [AdeType::a(1), AdeType::e(7), AdeType::e(8)] {
            assert_eq!(t.symmetry_order(), 1);
        }
        for t in [AdeType::a(2), AdeType::a(17), AdeType::d(5), AdeType::d(12), AdeType::e(6)] {
            assert_eq!(t.symmetry_order(), 2);
        }
    }

    #[test]
    fn e_branch_at_third_vertex() {
        assert!(AdeType::e(6).edges().contains(&(2, 5)));
        assert_eq!(AdeType::e(8).edges().len(), 7);
    }
}
