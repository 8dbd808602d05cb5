use serde::Serialize;

use super::{families, FamilyTag};
use crate::rootsystems::SingularitySet;

/// Singularities of the trigonal quotient of the sextics in some families.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QuotientRow {
    pub families: Vec<SingularitySet>,
    pub trigonal: SingularitySet,
}

fn sets(names: &[&str]) -> Vec<SingularitySet> {
    names.iter().map(|s| s.parse().expect("static name")).collect()
}

fn tagged(tags: &[FamilyTag]) -> Vec<SingularitySet> {
    families().iter().filter(|f| tags.contains(&f.tag)).map(|f| f.essential.clone()).collect()
}

pub fn quotient_dictionary() -> Vec<QuotientRow> {
    let row = |families: Vec<SingularitySet>, trigonal: &str| QuotientRow {
        families,
        trigonal: trigonal.parse().expect("static name"),
    };
    vec![
        row(tagged(&[FamilyTag::TwoE8]), "E8"),
        row(sets(&["3E6", "2E6+A5", "2E6+2A2"]), "E6+A2"),
        row(sets(&["A17", "2A8"]), "A8"),
        row(tagged(&[FamilyTag::D10]), "2A4"),
        row(tagged(&[FamilyTag::Weight9, FamilyTag::Weight8]), "4A2"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::find_family;
    use crate::dessins::table1;
    use crate::stability::GroupLabel;

    #[test]
    fn rows_have_milnor_eight_and_appear_in_table() {
        let irreducible: Vec<SingularitySet> =
            table1().into_iter().filter(|r| r.irreducible).map(|r| r.fibers.singularities()).collect();
        for row in quotient_dictionary() {
            assert_eq!(row.trigonal.rank(), 8, "{}", row.trigonal);
            assert!(irreducible.contains(&row.trigonal), "{}", row.trigonal);
        }
    }

    #[test]
    fn every_family_with_an_involution_has_a_row() {
        let rows = quotient_dictionary();
        for f in families() {
            let has_involution = !matches!(f.expected, GroupLabel::Trivial | GroupLabel::Z3);
            let covered = rows.iter().any(|r| r.families.contains(&f.essential));
            assert_eq!(has_involution, covered, "{}", f.essential);
        }
        assert_eq!(find_family(&"3A6".parse().unwrap()).unwrap().expected, GroupLabel::Z3);
    }
}
