use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsystems::{AdeType, SingularitySet};

/// Singular fiber of a trigonal curve.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FiberType {
    /// `A~n` for `n ≥ 1`: a stable fiber over a pole of `j` of order `n+1`.
    A(u32),
    /// `A~0*`: a simple pole of `j`.
    A0Star,
    /// `A~0**`: a cusp of the fiber over a zero of `j`.
    A0StarStar,
    /// `A~1*`
    A1Star,
    /// `A~2*`
    A2Star,
    /// `D~q`, `q ≥ 4`
    D(u32),
    /// `E~6`, `E~7`, `E~8`
    E(u32),
    NonSimple,
}

impl FiberType {
    pub fn is_stable(&self) -> bool {
        !matches!(self, FiberType::A0StarStar | FiberType::A1Star | FiberType::A2Star)
    }

    /// Order of vanishing of the discriminant.
    pub fn discriminant_degree(&self) -> Option<u32> {
        Some(match *self {
            FiberType::A(n) => n + 1,
            FiberType::A0Star => 1,
            FiberType::A0StarStar => 2,
            FiberType::A1Star => 3,
            FiberType::A2Star => 4,
            FiberType::D(q) => q + 2,
            FiberType::E(6) => 8,
            FiberType::E(7) => 9,
            FiberType::E(8) => 10,
            FiberType::E(_) | FiberType::NonSimple => return None,
        })
    }

    /// Milnor number of the singular point of the curve in this fiber.
    pub fn milnor(&self) -> Option<u32> {
        Some(match *self {
            FiberType::A(n) => n,
            FiberType::A0Star | FiberType::A0StarStar => 0,
            FiberType::A1Star => 1,
            FiberType::A2Star => 2,
            FiberType::D(q) => q,
            FiberType::E(n) => n,
            FiberType::NonSimple => return None,
        })
    }

    /// Type of the singular point of the curve, if any.
    pub fn singularity(&self) -> Option<AdeType> {
        match *self {
            FiberType::A(n) => Some(AdeType::a(n)),
            FiberType::A1Star => Some(AdeType::a(1)),
            FiberType::A2Star => Some(AdeType::a(2)),
            FiberType::D(q) => Some(AdeType::d(q)),
            FiberType::E(n) => Some(AdeType::e(n)),
            _ => None,
        }
    }

    fn sort_key(&self) -> (u8, std::cmp::Reverse<u32>) {
        use std::cmp::Reverse;
        match *self {
            FiberType::E(n) => (0, Reverse(n)),
            FiberType::D(q) => (1, Reverse(q)),
            FiberType::A(n) => (2, Reverse(n)),
            FiberType::A2Star => (3, Reverse(0)),
            FiberType::A1Star => (4, Reverse(0)),
            FiberType::A0StarStar => (5, Reverse(0)),
            FiberType::A0Star => (6, Reverse(0)),
            FiberType::NonSimple => (7, Reverse(0)),
        }
    }
}

impl PartialOrd for FiberType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiberType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::A(n) => write!(f, "A{n}~"),
            FiberType::A0Star => write!(f, "A0*"),
            FiberType::A0StarStar => write!(f, "A0**"),
            FiberType::A1Star => write!(f, "A1*"),
            FiberType::A2Star => write!(f, "A2*"),
            FiberType::D(q) => write!(f, "D{q}~"),
            FiberType::E(n) => write!(f, "E{n}~"),
            FiberType::NonSimple => write!(f, "NonSimple"),
        }
    }
}

impl FromStr for FiberType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::parse("fiber type", s);
        match s {
            "A0*" => return Ok(FiberType::A0Star),
            "A0**" => return Ok(FiberType::A0StarStar),
            "A1*" => return Ok(FiberType::A1Star),
            "A2*" => return Ok(FiberType::A2Star),
            "NonSimple" => return Ok(FiberType::NonSimple),
            _ => {}
        }
        let body = s.strip_suffix('~').ok_or_else(err)?;
        let (letter, digits) = body.split_at(1);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let n: u32 = digits.parse().map_err(|_| err())?;
        match letter {
            "A" if n >= 1 => Ok(FiberType::A(n)),
            "D" if n >= 4 => Ok(FiberType::D(n)),
            "E" if (6..=8).contains(&n) => Ok(FiberType::E(n)),
            _ => Err(err()),
        }
    }
}

/// A multiset of singular fibers, written like `E8~+2A0*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FiberMultiset {
    fibers: Vec<FiberType>,
}

impl FiberMultiset {
    pub fn new(mut fibers: Vec<FiberType>) -> Self {
        fibers.sort();
        FiberMultiset { fibers }
    }

    pub fn fibers(&self) -> &[FiberType] {
        &self.fibers
    }

    pub fn count(&self, t: FiberType) -> usize {
        self.fibers.iter().filter(|&&f| f == t).count()
    }

    pub fn contains(&self, t: FiberType) -> bool {
        self.fibers.contains(&t)
    }

    pub fn is_stable(&self) -> bool {
        self.fibers.iter().all(FiberType::is_stable)
    }

    /// Total discriminant degree, `None` if some fiber has no fixed degree.
    pub fn discriminant_degree(&self) -> Option<u32> {
        self.fibers.iter().map(FiberType::discriminant_degree).sum()
    }

    pub fn milnor(&self) -> Option<u32> {
        self.fibers.iter().map(FiberType::milnor).sum()
    }

    /// Singular points of the curve.
    pub fn singularities(&self) -> SingularitySet {
        SingularitySet::new(self.fibers.iter().filter_map(FiberType::singularity).collect())
    }

    pub fn replace_one(&self, from: FiberType, to: FiberType) -> Option<FiberMultiset> {
        let i = self.fibers.iter().position(|&f| f == from)?;
        let mut fibers = self.fibers.clone();
        fibers[i] = to;
        Some(FiberMultiset::new(fibers))
    }
}

impl fmt::Display for FiberMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fibers.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.fibers.len() {
            let t = self.fibers[i];
            let c = self.fibers[i..].iter().take_while(|&&u| u == t).count();
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "{t}")?;
            i += c;
        }
        Ok(())
    }
}

impl FromStr for FiberMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(FiberMultiset::default());
        }
        let mut fibers = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let split = term.find(|c: char| !c.is_ascii_digit()).ok_or_else(|| Error::parse("fiber multiset", s))?;
            // a leading digit run is a count only when a type letter follows
            let count = if split == 0 { 1 } else { term[..split].parse().map_err(|_| Error::parse("fiber multiset", s))? };
            if count == 0 {
                return Err(Error::parse("fiber multiset", s));
            }
            let t: FiberType = term[split..].parse().map_err(|_| Error::parse("fiber multiset", s))?;
            fibers.extend(std::iter::repeat_n(t, count));
        }
        Ok(FiberMultiset::new(fibers))
    }
}

impl Serialize for FiberMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FiberMultiset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for FiberType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
