//! Sextic families with nontrivial stable symmetry candidates, and the
//! dictionary of trigonal quotients.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystems::{AdeType, Family, SingularitySet};
use crate::stability::{GroupLabel, KernelSpec};

mod quotients;

pub use quotients::{quotient_dictionary, QuotientRow};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    TorusWeight6,
    Weight8,
    Weight9,
    D10,
    D14,
    TwoE8,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SexticFamily {
    pub tag: FamilyTag,
    pub essential: SingularitySet,
    pub kernel: KernelSpec,
    pub expected: GroupLabel,
    pub source: String,
}

#[derive(Deserialize, Serialize)]
struct FamilyFile {
    version: u32,
    families: Vec<SexticFamily>,
}

pub const FAMILIES_JSON: &str = include_str!("../../data/families.json");
pub const FAMILIES_VERSION: u32 = 1;

/// The shipped family list, in file order.
pub fn families() -> &'static [SexticFamily] {
    static CELL: OnceLock<Vec<SexticFamily>> = OnceLock::new();
    CELL.get_or_init(|| parse_families(FAMILIES_JSON).expect("bundled family data parses"))
}

/// Parses a family file in the shipped format.
pub fn parse_families(text: &str) -> Result<Vec<SexticFamily>> {
    let file: FamilyFile = serde_json::from_str(text).map_err(|e| Error::parse("family file", &e.to_string()))?;
    if file.version != FAMILIES_VERSION {
        return Err(Error::parse("family file version", &file.version.to_string()));
    }
    Ok(file.families)
}

pub fn find_family(essential: &SingularitySet) -> Option<&'static SexticFamily> {
    families().iter().find(|f| &f.essential == essential)
}

/// Torus weight: `w(A_{3i-1}) = i`, `w(E6) = 2`, zero otherwise.
pub fn weight(set: &SingularitySet) -> u32 {
    set.types().iter().map(|&t| type_weight(t)).sum()
}

fn type_weight(t: AdeType) -> u32 {
    match t.family() {
        Family::A if t.rank() % 3 == 2 => (t.rank() + 1) / 3,
        Family::E if t.rank() == 6 => 2,
        _ => 0,
    }
}

/// Dumps the family list in the shipped format.
pub fn families_json() -> String {
    let file = FamilyFile { version: FAMILIES_VERSION, families: families().to_vec() };
    serde_json::to_string_pretty(&file).expect("families serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::torus_candidates;

    #[test]
    fn counts_by_tag() {
        let count = |tag| families().iter().filter(|f| f.tag == tag).count();
        assert_eq!(families().len(), 34);
        assert_eq!(count(FamilyTag::TorusWeight6), 19);
        assert_eq!(count(FamilyTag::Weight8), 5);
        assert_eq!(count(FamilyTag::Weight9), 1);
        assert_eq!(count(FamilyTag::D10), 3);
        assert_eq!(count(FamilyTag::D14), 1);
        assert_eq!(count(FamilyTag::TwoE8), 5);
    }

    #[test]
    fn torus_rows_are_the_candidates() {
        let mut rows: Vec<SingularitySet> = families()
            .iter()
            .filter(|f| f.tag == FamilyTag::TorusWeight6)
            .map(|f| f.essential.clone())
            .collect();
        rows.sort();
        let mut cands = torus_candidates();
        cands.sort();
        assert_eq!(rows, cands);
    }

    #[test]
    fn weights_and_ranks() {
        for f in families() {
            assert!(f.essential.rank() <= 19, "{}", f.essential);
            let w = weight(&f.essential);
            match f.tag {
                FamilyTag::TorusWeight6 => assert_eq!(w, 6),
                FamilyTag::Weight8 => assert_eq!(w, 8),
                FamilyTag::Weight9 => assert_eq!(w, 9),
                _ => {}
            }
        }
        // the Z2 torus rows have weight at most seven
        for s in ["2E6+A5", "2E6+2A2", "A17", "2A8"] {
            assert!(weight(&s.parse().unwrap()) <= 7);
        }
    }

    #[test]
    fn sample_rows() {
        let f = find_family(&"2E8+A3".parse().unwrap()).unwrap();
        assert_eq!((f.tag, f.kernel, &f.expected), (FamilyTag::TwoE8, KernelSpec::Zero, &GroupLabel::Z2));
        let f = find_family(&"A9+2A4".parse().unwrap()).unwrap();
        assert_eq!(f.kernel, KernelSpec::Elementary { p: 5, rank: 1 });
        assert_eq!(f.expected, GroupLabel::Z2);
        let f = find_family(&"6A2".parse().unwrap()).unwrap();
        assert_eq!(f.expected, GroupLabel::Trivial);
    }

    #[test]
    fn dump_roundtrips() {
        let back: FamilyFile = serde_json::from_str(&families_json()).unwrap();
        assert_eq!(back.families, families());
    }
}
