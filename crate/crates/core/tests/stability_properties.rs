use proptest::prelude::*;

use sextic_core::catalog::{families, FamilyTag};
use sextic_core::rootsystems::{graph_symmetries, AdeType, Family, SingularitySet};
use sextic_core::stability::{
    admissible_kernels, classify_family, classify_set, config_elements, essential_orbits, stable_elements,
    sym_config, Configuration, GroupLabel, KernelSpec, INVOLUTION_ORBIT_TYPES,
};

fn set(s: &str) -> SingularitySet {
    s.parse().unwrap()
}

fn p3() -> KernelSpec {
    KernelSpec::Elementary { p: 3, rank: 1 }
}

#[test]
fn stable_involutions_of_torus_configurations() {
    let allowed: Vec<Vec<SingularitySet>> =
        INVOLUTION_ORBIT_TYPES.iter().map(|l| { let mut v: Vec<_> = l.iter().map(|s| set(s)).collect(); v.sort(); v }).collect();
    for f in families().iter().filter(|f| f.tag == FamilyTag::TorusWeight6) {
        for o in classify_family(f).orbits {
            for s in o.report.elements.iter().filter(|s| s.order() == 2) {
                let orbits = essential_orbits(&o.config, std::slice::from_ref(s));
                assert!(orbits.len() <= 2, "{}: {orbits:?}", f.essential);
                let comps = o.config.graph().components();
                let mut types: Vec<SingularitySet> =
                    orbits.iter().map(|orb| SingularitySet::new(orb.iter().map(|&c| comps[c]).collect())).collect();
                types.sort();
                assert!(allowed.contains(&types), "{}: {types:?}", f.essential);
            }
        }
    }
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

#[test]
fn kappa_kernel_is_a_p_group() {
    for f in families().iter().filter(|f| matches!(f.tag, FamilyTag::TorusWeight6 | FamilyTag::D10 | FamilyTag::D14)) {
        let KernelSpec::Elementary { p, .. } = f.kernel else { unreachable!() };
        for o in classify_family(f).orbits {
            let kappa = &o.report.kappa;
            for &i in &kappa.kernel {
                assert!(is_power_of(o.report.elements[i].order(), p as usize), "{}", f.essential);
            }
            // only 3E6 has stable symmetries of order p
            let has_order_p = o.report.elements.iter().any(|s| s.order() == p as usize);
            assert_eq!(kappa.injective, !has_order_p, "{}", f.essential);
        }
    }
}

fn fixes_ordinary_components(config: &Configuration, elements: &[sextic_core::rootsystems::GraphSymmetry]) -> bool {
    let graph = config.graph();
    (0..graph.components().len())
        .filter(|c| !config.essential().contains(c) && graph.components()[*c].family() != Family::E)
        .all(|c| elements.iter().all(|s| graph.vertices(c).all(|v| s.apply(v) == v)))
}

#[test]
fn ordinary_components_are_inert() {
    let cases: &[(&str, KernelSpec, &[AdeType])] = &[
        ("3E6", p3(), &[AdeType::a(1)]),
        ("A17", p3(), &[AdeType::a(2)]),
        ("2A8", p3(), &[AdeType::a(2), AdeType::a(1)]),
        ("2E6+2A2", p3(), &[AdeType::a(3)]),
        ("2E6+A5", p3(), &[AdeType::a(1), AdeType::a(1)]),
        ("3A6", KernelSpec::Elementary { p: 7, rank: 1 }, &[AdeType::a(1)]),
        ("4A4", KernelSpec::Elementary { p: 5, rank: 1 }, &[AdeType::a(3)]),
        ("2A9", KernelSpec::Elementary { p: 5, rank: 1 }, &[AdeType::a(1)]),
        ("8A2", KernelSpec::Elementary { p: 3, rank: 2 }, &[AdeType::a(3)]),
    ];
    for (name, spec, extra) in cases {
        let plain = classify_set(&set(name), *spec);
        let padded = sextic_core::stability::classify_with_ordinary(&set(name), *spec, extra);
        assert_eq!(plain.len(), padded.len());
        for (a, b) in plain.iter().zip(&padded) {
            assert_eq!(a.report.label, b.report.label, "{name}");
            assert!(fixes_ordinary_components(&b.config, &b.report.elements), "{name}");
        }
    }
    for f in families().iter().filter(|f| f.tag == FamilyTag::TwoE8) {
        for o in classify_family(f).orbits {
            assert!(fixes_ordinary_components(&o.config, &o.report.elements), "{}", f.essential);
        }
    }
}

#[test]
fn subgroup_chain() {
    for name in ["3E6", "2E6+A5", "A9+2A4", "2A8"] {
        let spec = if name == "A9+2A4" { KernelSpec::Elementary { p: 5, rank: 1 } } else { p3() };
        let graph = sextic_core::rootsystems::DynkinGraph::from_set(&set(name));
        let all = graph_symmetries(&graph);
        for orbit in admissible_kernels(&graph, spec) {
            let c = Configuration::new(&graph, orbit.representative).unwrap();
            let config = sym_config(&c);
            for s in config_elements(&c) {
                assert!(all.contains(&s));
            }
            for s in stable_elements(&c) {
                assert!(config.contains(&s));
            }
        }
    }
}

#[test]
fn group_labels_of_special_families() {
    let label = |name: &str| {
        let f = families().iter().find(|f| f.essential == set(name)).unwrap();
        classify_family(f).orbits.into_iter().map(|o| o.report.label).collect::<Vec<_>>()
    };
    assert_eq!(label("3E6"), vec![GroupLabel::S3]);
    assert_eq!(label("3A6"), vec![GroupLabel::Z3]);
    assert_eq!(label("2E6+2A2"), vec![GroupLabel::Z2]);
    assert_eq!(label("A11+A5"), vec![GroupLabel::Trivial]);
}

fn conjugation_case(name: &str, spec: KernelSpec, pick: usize) -> Result<(), TestCaseError> {
    let graph = sextic_core::rootsystems::DynkinGraph::from_set(&set(name));
    let group = graph_symmetries(&graph).elements();
    let t = &group[pick % group.len()];
    for orbit in admissible_kernels(&graph, spec) {
        let c = Configuration::new(&graph, orbit.representative).unwrap();
        let moved = c.transformed(t).unwrap();
        let mut conj: Vec<_> = stable_elements(&c).iter().map(|s| t.compose(s).compose(&t.inverse())).collect();
        conj.sort();
        prop_assert_eq!(stable_elements(&moved), conj);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conjugation_equivariance(pick in 0usize..100_000, which in 0usize..5) {
        let cases = [
            ("3E6", p3()),
            ("2E6+2A2", p3()),
            ("A9+2A4", KernelSpec::Elementary { p: 5, rank: 1 }),
            ("4A4", KernelSpec::Elementary { p: 5, rank: 1 }),
            ("E6+A5+2A2", p3()),
        ];
        let (name, spec) = cases[which];
        conjugation_case(name, spec, pick)?;
    }
}
