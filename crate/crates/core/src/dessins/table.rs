use serde::Serialize;

use super::enumerate::enumerate_skeletons;
use super::fibers::{FiberMultiset, FiberType};
use crate::error::{Error, Result};

/// Contracts one fiber of type `target` by an elementary transformation.
pub fn elementary_transform(fibers: &FiberMultiset, target: FiberType) -> Result<FiberMultiset> {
    let to = match target {
        FiberType::A(n) => FiberType::D(n + 5),
        FiberType::A0Star => FiberType::D(5),
        FiberType::A0StarStar => FiberType::E(6),
        FiberType::A1Star => FiberType::E(7),
        FiberType::A2Star => FiberType::E(8),
        other => return Err(Error::NotContractible(other.to_string())),
    };
    fibers.replace_one(target, to).ok_or_else(|| Error::FiberAbsent(target.to_string()))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Table1Row {
    pub fibers: FiberMultiset,
    pub irreducible: bool,
    pub components: usize,
    pub isotrivial_degeneration: Option<FiberMultiset>,
}

fn degeneration(fibers: &FiberMultiset) -> Option<FiberMultiset> {
    let merge = |from: &[FiberType], to: FiberType| {
        let mut out = fibers.fibers().to_vec();
        for f in from {
            let i = out.iter().position(|g| g == f)?;
            out.remove(i);
        }
        out.push(to);
        Some(FiberMultiset::new(out))
    };
    if fibers.contains(FiberType::E(8)) {
        merge(&[FiberType::A0Star, FiberType::A0Star], FiberType::A0StarStar)
    } else if fibers.contains(FiberType::E(7)) {
        merge(&[FiberType::A(1), FiberType::A0Star], FiberType::A1Star)
    } else if fibers.contains(FiberType::E(6)) {
        merge(&[FiberType::A(2), FiberType::A0Star], FiberType::A2Star)
    } else {
        None
    }
}

/// Singular fibers of stable maximal trigonal curves in `Σ2`: the stable
/// skeletons for `k = 2`, plus one elementary transformation of each
/// skeleton for `k = 1` with at most one unstable vertex.
pub fn table1() -> Vec<Table1Row> {
    let mut rows: Vec<Table1Row> = Vec::new();
    let mut push = |fibers: FiberMultiset, components: usize| {
        if rows.iter().all(|r| r.fibers != fibers) {
            let isotrivial_degeneration = degeneration(&fibers);
            rows.push(Table1Row { fibers, irreducible: components == 1, components, isotrivial_degeneration });
        }
    };
    for s in enumerate_skeletons(2, 0).expect("k = 2 supported") {
        push(s.fiber_multiset(), s.component_count());
    }
    for s in enumerate_skeletons(1, 1).expect("k = 1 supported") {
        let fibers = s.fiber_multiset();
        let unstable: Vec<FiberType> = fibers.fibers().iter().copied().filter(|f| !f.is_stable()).collect();
        let mut targets = if unstable.is_empty() { fibers.fibers().to_vec() } else { unstable };
        targets.dedup();
        for t in targets {
            push(elementary_transform(&fibers, t).expect("target present"), s.component_count());
        }
    }
    rows.sort_by(|a, b| b.irreducible.cmp(&a.irreducible).then_with(|| a.fibers.cmp(&b.fibers)));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> FiberMultiset {
        s.parse().unwrap()
    }

    #[test]
    fn transforms() {
        assert_eq!(elementary_transform(&ms("3A1~"), FiberType::A(1)).unwrap(), ms("D6~+2A1~"));
        assert_eq!(elementary_transform(&ms("A2*+2A0*"), FiberType::A2Star).unwrap(), ms("E8~+2A0*"));
        assert_eq!(elementary_transform(&ms("A3~+2A0*"), FiberType::A0Star).unwrap(), ms("D5~+A3~+A0*"));
        assert_eq!(
            elementary_transform(&ms("A3~+2A0*"), FiberType::A2Star).unwrap_err(),
            Error::FiberAbsent("A2*".into())
        );
        assert!(elementary_transform(&ms("D5~"), FiberType::D(5)).is_err());
    }

    #[test]
    fn twelve_rows() {
        let rows = table1();
        assert_eq!(rows.len(), 12);
        let irr: Vec<String> = rows.iter().filter(|r| r.irreducible).map(|r| r.fibers.to_string()).collect();
        let red: Vec<String> = rows.iter().filter(|r| !r.irreducible).map(|r| r.fibers.to_string()).collect();
        let mut want_irr = vec!["E8~+2A0*", "E6~+A2~+A0*", "A8~+3A0*", "2A4~+2A0*", "4A2~"];
        let mut want_red = vec![
            "E7~+A1~+A0*",
            "D8~+2A0*",
            "D6~+2A1~",
            "D5~+A3~+A0*",
            "A7~+A1~+2A0*",
            "A5~+A2~+A1~+A0*",
            "2A3~+2A1~",
        ];
        let norm = |v: &mut Vec<&str>| {
            let mut out: Vec<String> = v.iter().map(|s| ms(s).to_string()).collect();
            out.sort();
            out
        };
        let mut irr_sorted = irr.clone();
        irr_sorted.sort();
        let mut red_sorted = red.clone();
        red_sorted.sort();
        assert_eq!(irr_sorted, norm(&mut want_irr));
        assert_eq!(red_sorted, norm(&mut want_red));
    }

    #[test]
    fn degenerations() {
        let rows = table1();
        let deg = |s: &str| rows.iter().find(|r| r.fibers == ms(s)).unwrap().isotrivial_degeneration.clone();
        assert_eq!(deg("E8~+2A0*"), Some(ms("E8~+A0**")));
        assert_eq!(deg("E7~+A1~+A0*"), Some(ms("E7~+A1*")));
        assert_eq!(deg("E6~+A2~+A0*"), Some(ms("E6~+A2*")));
        assert_eq!(deg("4A2~"), None);
    }
}
