use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::rootsystems::perm::{compose, identity, inverse, Perm};
use crate::rootsystems::{GraphSymmetry, SymmetryGroup};

/// Isomorphism type of a small finite group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum GroupLabel {
    Trivial,
    Z2,
    Z3,
    Z4,
    Z6,
    Z2xZ2,
    S3,
    /// Generalized dihedral group of `Z3 × Z3`, of order 18.
    GdZ3xZ3,
    /// Anything else: order and abelian invariants (empty when nonabelian).
    Other { order: usize, invariants: Vec<u64> },
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => write!(f, "trivial"),
            GroupLabel::Z2 => write!(f, "Z2"),
            GroupLabel::Z3 => write!(f, "Z3"),
            GroupLabel::Z4 => write!(f, "Z4"),
            GroupLabel::Z6 => write!(f, "Z6"),
            GroupLabel::Z2xZ2 => write!(f, "Z2xZ2"),
            GroupLabel::S3 => write!(f, "S3"),
            GroupLabel::GdZ3xZ3 => write!(f, "GD(Z3xZ3)"),
            GroupLabel::Other { order, invariants } if invariants.is_empty() => {
                write!(f, "other({order}, nonabelian)")
            }
            GroupLabel::Other { order, invariants } => {
                let inv: Vec<String> = invariants.iter().map(u64::to_string).collect();
                write!(f, "other({order}, [{}])", inv.join(","))
            }
        }
    }
}

impl std::str::FromStr for GroupLabel {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s {
            "trivial" => GroupLabel::Trivial,
            "Z2" => GroupLabel::Z2,
            "Z3" => GroupLabel::Z3,
            "Z4" => GroupLabel::Z4,
            "Z6" => GroupLabel::Z6,
            "Z2xZ2" => GroupLabel::Z2xZ2,
            "S3" => GroupLabel::S3,
            "GD(Z3xZ3)" => GroupLabel::GdZ3xZ3,
            _ => return Err(crate::Error::parse("group label", s)),
        })
    }
}

impl Serialize for GroupLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for GroupLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite permutation group given by the full list of its elements.
pub struct FiniteGroup {
    elements: Vec<Perm>,
}

impl FiniteGroup {
    pub fn new(mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        FiniteGroup { elements }
    }

    pub fn from_symmetries(elements: &[GraphSymmetry]) -> Self {
        Self::new(elements.iter().map(|s| s.perm().to_vec()).collect())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn element_order(x: &[usize]) -> usize {
        let id = identity(x.len());
        let mut y = x.to_vec();
        let mut k = 1;
        while y != id {
            y = compose(&y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| compose(a, b) == compose(b, a)))
    }

    /// Invariant factors of an abelian group, from counts of elements
    /// killed by prime powers.
    fn abelian_invariants(&self) -> Vec<u64> {
        let orders: Vec<usize> = self.elements.iter().map(|x| Self::element_order(x)).collect();
        let mut primes: Vec<usize> = Vec::new();
        let mut n = self.order();
        let mut p = 2;
        while n > 1 {
            if n % p == 0 {
                primes.push(p);
                while n % p == 0 {
                    n /= p;
                }
            }
            p += 1;
        }
        // exponents of the cyclic factors of each primary part, descending
        let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
        for &p in &primes {
            let mut counts = Vec::new(); // log_p #{x : x^{p^k} = 1}
            let mut k = 0u32;
            loop {
                k += 1;
                let pk = p.pow(k);
                let c = orders.iter().filter(|&&o| pk % o == 0 && is_power_of(o, p)).count();
                let log = int_log(c, p);
                counts.push(log);
                if counts.len() >= 2 && counts[counts.len() - 1] == counts[counts.len() - 2] {
                    break;
                }
            }
            // number of factors with exponent >= k is counts[k-1] - counts[k-2]
            let mut exps = Vec::new();
            let mut prev = 0;
            let mut at_least: Vec<u32> = Vec::new();
            for &c in &counts {
                at_least.push(c - prev);
                prev = c;
            }
            for (k, &m) in at_least.iter().enumerate() {
                let next = at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(m - next) {
                    exps.push(k as u32 + 1);
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            primary.push((p as u64, exps));
        }
        let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut out: Vec<u64> = (0..len)
            .map(|i| primary.iter().map(|(p, e)| e.get(i).map_or(1, |&k| p.pow(k))).product())
            .collect();
        out.reverse();
        out
    }

    fn is_generalized_dihedral_z3z3(&self) -> bool {
        if self.order() != 18 || self.is_abelian() {
            return false;
        }
        let orders: HashMap<&Perm, usize> = self.elements.iter().map(|x| (x, Self::element_order(x))).collect();
        let threes: Vec<&Perm> = self.elements.iter().filter(|x| orders[x] == 3).collect();
        let invs: Vec<&Perm> = self.elements.iter().filter(|x| orders[x] == 2).collect();
        // Sylow-3 = identity + 8 elements of order 3, hence unique, normal and elementary abelian
        threes.len() == 8
            && invs.iter().all(|s| {
                let si = inverse(s);
                threes.iter().all(|t| compose(&compose(s, t), &si) == inverse(t))
            })
    }

    pub fn label(&self) -> GroupLabel {
        let n = self.order();
        if n == 1 {
            return GroupLabel::Trivial;
        }
        if self.is_abelian() {
            let inv = self.abelian_invariants();
            return match inv.as_slice() {
                [2] => GroupLabel::Z2,
                [3] => GroupLabel::Z3,
                [4] => GroupLabel::Z4,
                [6] => GroupLabel::Z6,
                [2, 2] => GroupLabel::Z2xZ2,
                _ => GroupLabel::Other { order: n, invariants: inv },
            };
        }
        if n == 6 {
            return GroupLabel::S3;
        }
        if self.is_generalized_dihedral_z3z3() {
            return GroupLabel::GdZ3xZ3;
        }
        GroupLabel::Other { order: n, invariants: Vec::new() }
    }
}

fn int_log(mut n: usize, p: usize) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        k += 1;
    }
    k
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Names a small symmetry group.
pub fn identify_group(g: &SymmetryGroup) -> GroupLabel {
    FiniteGroup::from_symmetries(&g.elements()).label()
}
