use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use sextic_core::catalog::{families, parse_families, FamilyTag, SexticFamily};
use sextic_core::dessins::{elementary_transform, enumerate_skeletons, table1, FiberMultiset};
use sextic_core::discrforms::{forms_isometric, FiniteQuadraticForm};
use sextic_core::exactcore::{rat, RatPoly, Rational};
use sextic_core::rootsystems::{
    gram_of, graph_symmetries, AdeType, DynkinGraph, Family, GraphDiscriminant, GraphSymmetry, SingularitySet,
};
use sextic_core::stability::{
    classify_family, classify_with_ordinary, essential_orbits, Configuration, KernelSpec, INVOLUTION_ORBIT_TYPES,
};
use sextic_core::weierstrass::samples::{sample, SAMPLES};
use sextic_core::weierstrass::WeierstrassCurve;

use crate::args::VerifyArgs;
use crate::{CliError, Output};

/// Stable maximal configurations in Σ2, irreducible rows first.
pub const STABLE_MAXIMAL_IRREDUCIBLE: [&str; 5] = ["E8~+2A0*", "E6~+A2~+A0*", "A8~+3A0*", "2A4~+2A0*", "4A2~"];
pub const STABLE_MAXIMAL_REDUCIBLE: [&str; 7] = [
    "E7~+A1~+A0*",
    "D8~+2A0*",
    "D6~+2A1~",
    "D5~+A3~+A0*",
    "A7~+A1~+2A0*",
    "A5~+A2~+A1~+A0*",
    "2A3~+2A1~",
];

pub const CHECKS: [&str; 7] =
    ["theorem", "table1", "four-cusps", "discriminant-forms", "monodromy", "involutions", "budgets"];

#[derive(Serialize, Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl Output for VerifyReport {
    fn markdown(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
        }
        out
    }

    fn success(&self) -> bool {
        self.passed
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    for name in &args.only {
        if !CHECKS.contains(&name.as_str()) {
            return Err(CliError::Input(format!("unknown check {name:?}; known: {}", CHECKS.join(", "))));
        }
    }
    let catalog: Vec<SexticFamily> = match &args.families {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            parse_families(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
        }
        None => families().to_vec(),
    };
    let selected: Vec<&str> =
        CHECKS.iter().copied().filter(|c| args.only.is_empty() || args.only.iter().any(|o| o == c)).collect();
    let checks: Vec<CheckResult> = selected
        .iter()
        .map(|&name| {
            let outcome = match name {
                "theorem" => theorem(&catalog),
                "table1" => table(),
                "four-cusps" => four_cusps(),
                "discriminant-forms" => discriminant_forms(),
                "monodromy" => monodromy(),
                "involutions" => involutions(),
                "budgets" => budgets(),
                _ => unreachable!(),
            };
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { name: name.to_string(), passed, detail }
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { checks, passed })
}

fn theorem(catalog: &[SexticFamily]) -> Outcome {
    let results: Vec<_> = catalog.par_iter().map(classify_family).collect();
    let bad: Vec<String> = results
        .iter()
        .filter(|r| !r.matches)
        .map(|r| {
            let got: Vec<String> = r.orbits.iter().map(|o| o.report.label.to_string()).collect();
            format!("{} expected {} got [{}]", r.family.essential, r.family.expected, got.join(", "))
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} families reproduce their stable symmetry groups", results.len()))
}

fn ms(s: &str) -> FiberMultiset {
    s.parse().expect("table entries parse")
}

fn table() -> Outcome {
    let rows = table1();
    let irr: BTreeSet<String> = rows.iter().filter(|r| r.irreducible).map(|r| r.fibers.to_string()).collect();
    let red: BTreeSet<String> = rows.iter().filter(|r| !r.irreducible).map(|r| r.fibers.to_string()).collect();
    let want_irr: BTreeSet<String> = STABLE_MAXIMAL_IRREDUCIBLE.iter().map(|s| ms(s).to_string()).collect();
    let want_red: BTreeSet<String> = STABLE_MAXIMAL_REDUCIBLE.iter().map(|s| ms(s).to_string()).collect();
    ensure(rows.len() == 12, || format!("{} rows", rows.len()))?;
    ensure(irr == want_irr, || format!("irreducible rows {irr:?}"))?;
    ensure(red == want_red, || format!("reducible rows {red:?}"))?;
    let count = |k, u| enumerate_skeletons(k, u).map(|v| v.len()).map_err(|e| e.to_string());
    let (stable2, unstable1) = (count(2, 0)?, count(1, 1)?);
    ensure(stable2 == 6, || format!("{stable2} stable skeletons for k = 2"))?;
    ensure(unstable1 == 5, || format!("{unstable1} skeletons for k = 1"))?;
    Ok("12 rows (5 irreducible), 6 stable skeletons for k = 2, 5 for k = 1".into())
}

fn four_cusps() -> Outcome {
    let c = WeierstrassCurve::from_json(sample("four_cusps").expect("bundled")).map_err(|e| e.to_string())?;
    let p = RatPoly::from_i64;
    let delta = &p(&[0, 0, 0, 108]) * &p(&[-1, 0, 0, 1]).pow(3);
    ensure(c.discriminant() == delta, || format!("Δ = {}", c.discriminant()))?;
    let j = c.j_invariant().map_err(|e| e.to_string())?;
    let num = p(&[1, 0, 0, 8]).pow(3).scale(&rat(-1, 64));
    let den = &p(&[0, 0, 0, 1]) * &p(&[-1, 0, 0, 1]).pow(3);
    ensure(j.num == num && j.den == den, || format!("j = {j}"))?;
    let fibers = c.fibers().map_err(|e| e.to_string())?;
    ensure(fibers == ms("4A2~"), || format!("fibers {fibers}"))?;
    ensure(c.milnor() == Ok(8), || format!("μ = {:?}", c.milnor()))?;
    ensure(c.is_stable() == Ok(true), || "not stable".into())?;
    ensure(c.is_maximal() == Ok(true), || "not maximal".into())?;
    ensure(c.is_isotrivial() == Ok(false), || "isotrivial".into())?;
    Ok("Δ = 108x³(x³−1)³, j of degree 12, 4A2~, μ = 8, stable and maximal".into())
}

fn cyclic(d: i64, q: Rational) -> FiniteQuadraticForm {
    FiniteQuadraticForm::new(vec![d], vec![vec![q.clone()]], vec![q]).expect("valid cyclic form")
}

fn two_by_two(q0: Rational, q1: Rational, b01: Rational) -> FiniteQuadraticForm {
    let b = vec![vec![q0.clone(), b01.clone()], vec![b01, q1.clone()]];
    FiniteQuadraticForm::new(vec![2, 2], b, vec![q0, q1]).expect("valid form")
}

/// Closed-form discriminants of the negative definite root lattices.
pub fn closed_form(t: AdeType) -> FiniteQuadraticForm {
    let n = t.rank() as i64;
    match t.family() {
        Family::A => cyclic(n + 1, rat(-n, n + 1)),
        Family::D if n % 2 == 1 => cyclic(4, rat(-n, 4)),
        Family::D => match n % 8 {
            0 => two_by_two(rat(0, 1), rat(0, 1), rat(1, 2)),
            4 => two_by_two(rat(1, 1), rat(1, 1), rat(1, 2)),
            2 => two_by_two(rat(-1, 2), rat(-1, 2), rat(0, 1)),
            _ => two_by_two(rat(1, 2), rat(1, 2), rat(0, 1)),
        },
        Family::E => match n {
            6 => cyclic(3, rat(2, 3)),
            7 => cyclic(2, rat(1, 2)),
            _ => FiniteQuadraticForm::trivial(),
        },
    }
}

fn all_types() -> Vec<AdeType> {
    let mut out: Vec<AdeType> = (1..=19).map(AdeType::a).collect();
    out.extend((4..=19).map(AdeType::d));
    out.extend((6..=8).map(AdeType::e));
    out
}

fn compatible(f: &FiniteQuadraticForm) -> bool {
    let elems: Vec<_> = f.elements().collect();
    elems.iter().all(|x| {
        elems.iter().all(|y| {
            let lhs = f.q(&f.add(x, y)) - f.q(x) - f.q(y) - f.b(x, y) * rat(2, 1);
            (lhs / rat(2, 1)).is_integer()
        })
    })
}

fn discriminant_forms() -> Outcome {
    for t in all_types() {
        let g = DynkinGraph::new(vec![t]);
        let d = GraphDiscriminant::new(&g);
        let det = gram_of(&g).determinant();
        ensure(det == (d.form.order() as i64).into() || -det == (d.form.order() as i64).into(), || {
            format!("{t}: |discr| differs from |det|")
        })?;
        ensure(forms_isometric(&d.form, &closed_form(t)), || format!("{t}: form differs from closed form"))?;
        ensure(compatible(&d.form), || format!("{t}: q and b incompatible"))?;
        let elems = graph_symmetries(&g).elements();
        let actions: Vec<_> = elems.iter().map(|s| d.action(s)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        if d.form.order() > 1 {
            for (i, a) in actions.iter().enumerate() {
                ensure(actions[i + 1..].iter().all(|b| a != b), || format!("{t}: action not faithful"))?;
            }
        }
        let flip_is_negation = t.family() != Family::D || t.rank() % 2 == 1;
        if elems.len() == 2 && flip_is_negation {
            let flip = elems.iter().position(|s| !s.is_identity()).expect("nontrivial symmetry");
            for x in d.form.elements() {
                ensure(actions[flip].apply(&d.form, &x) == d.form.neg(&x), || format!("{t}: flip is not −id"))?;
            }
        }
    }
    Ok(format!("{} root lattices match the closed forms; symmetries act faithfully, flips as −id", all_types().len()))
}

fn monodromy() -> Outcome {
    let irreducible: Vec<FiberMultiset> = STABLE_MAXIMAL_IRREDUCIBLE.iter().map(|s| ms(s)).collect();
    let reducible: Vec<FiberMultiset> = STABLE_MAXIMAL_REDUCIBLE.iter().map(|s| ms(s)).collect();
    let label = |m: &FiberMultiset| -> Result<bool, String> {
        if irreducible.contains(m) {
            Ok(true)
        } else if reducible.contains(m) {
            Ok(false)
        } else {
            Err(format!("{m} is not a stable maximal configuration"))
        }
    };
    let mut checked = 0;
    for s in enumerate_skeletons(2, 0).map_err(|e| e.to_string())? {
        let m = s.fiber_multiset();
        ensure(label(&m)? == (s.component_count() == 1), || format!("{m}: {} components", s.component_count()))?;
        checked += 1;
    }
    for s in enumerate_skeletons(1, 1).map_err(|e| e.to_string())? {
        let m = s.fiber_multiset();
        let unstable: Vec<_> = m.fibers().iter().copied().filter(|f| !f.is_stable()).collect();
        let mut targets = if unstable.is_empty() { m.fibers().to_vec() } else { unstable };
        targets.dedup();
        for t in targets {
            let moved = elementary_transform(&m, t).map_err(|e| e.to_string())?;
            ensure(label(&moved)? == (s.component_count() == 1), || {
                format!("{m} → {moved}: {} components", s.component_count())
            })?;
        }
        checked += 1;
    }
    Ok(format!("component counts of {checked} skeletons agree with the irreducibility labels"))
}

fn fixes_ordinary(config: &Configuration, elements: &[GraphSymmetry]) -> bool {
    let graph = config.graph();
    (0..graph.components().len())
        .filter(|c| !config.essential().contains(c) && graph.components()[*c].family() != Family::E)
        .all(|c| elements.iter().all(|s| graph.vertices(c).all(|v| s.apply(v) == v)))
}

fn involutions() -> Outcome {
    let set = |s: &str| -> SingularitySet { s.parse().expect("valid set") };
    let allowed: Vec<Vec<SingularitySet>> = INVOLUTION_ORBIT_TYPES
        .iter()
        .map(|l| {
            let mut v: Vec<_> = l.iter().map(|s| set(s)).collect();
            v.sort();
            v
        })
        .collect();
    let torus: Vec<&SexticFamily> = families().iter().filter(|f| f.tag == FamilyTag::TorusWeight6).collect();
    let mut involutions = 0;
    for f in &torus {
        for o in classify_family(f).orbits {
            for s in o.report.elements.iter().filter(|s| s.order() == 2) {
                let orbits = essential_orbits(&o.config, std::slice::from_ref(s));
                ensure(orbits.len() <= 2, || format!("{}: {} orbits", f.essential, orbits.len()))?;
                let comps = o.config.graph().components();
                let mut types: Vec<SingularitySet> =
                    orbits.iter().map(|orb| SingularitySet::new(orb.iter().map(|&c| comps[c]).collect())).collect();
                types.sort();
                ensure(allowed.contains(&types), || format!("{}: orbit types {types:?}", f.essential))?;
                involutions += 1;
            }
        }
    }
    let p3 = KernelSpec::Elementary { p: 3, rank: 1 };
    let padded: [(&str, KernelSpec, &[AdeType]); 4] = [
        ("3E6", p3, &[AdeType::a(1)]),
        ("2A8", p3, &[AdeType::a(2), AdeType::a(1)]),
        ("2E6+A5", p3, &[AdeType::a(1), AdeType::a(1)]),
        ("A9+2A4", KernelSpec::Elementary { p: 5, rank: 1 }, &[AdeType::a(1)]),
    ];
    for (name, spec, extra) in padded {
        for o in classify_with_ordinary(&set(name), spec, extra) {
            ensure(fixes_ordinary(&o.config, &o.report.elements), || format!("{name}: ordinary component moved"))?;
        }
    }
    for f in families().iter().filter(|f| f.tag == FamilyTag::TwoE8) {
        for o in classify_family(f).orbits {
            ensure(fixes_ordinary(&o.config, &o.report.elements), || format!("{}: ordinary component moved", f.essential))?;
        }
    }
    Ok(format!(
        "{involutions} stable involutions on torus configurations have allowed orbit types; ordinary non-E8 components stay fixed"
    ))
}

fn budgets() -> Outcome {
    for (k, u) in [(1, 1), (2, 0), (2, 1)] {
        for s in enumerate_skeletons(k, u).map_err(|e| e.to_string())? {
            let m = s.fiber_multiset();
            ensure(m.discriminant_degree() == Some(6 * k as u32), || format!("{m}: budget differs from {}", 6 * k))?;
        }
    }
    for r in table1() {
        ensure(r.fibers.discriminant_degree() == Some(12), || format!("{}: budget differs from 12", r.fibers))?;
        ensure(r.fibers.milnor() == Some(8), || format!("{}: μ differs from 8", r.fibers))?;
    }
    let mut corpus = 0;
    for (name, text) in SAMPLES {
        let Ok(c) = WeierstrassCurve::from_json(text) else { continue };
        if c.k() != 2 || c.discriminant().is_zero() || c.is_isotrivial() != Ok(false) {
            continue;
        }
        let lhs = c.is_stable() == Ok(true) && c.is_maximal() == Ok(true);
        let rhs = c.milnor() == Ok(8);
        ensure(lhs == rhs, || format!("{name}: stable∧maximal = {lhs}, μ = 8 is {rhs}"))?;
        corpus += 1;
    }
    Ok(format!("budgets hold for all enumerated skeletons; μ = 8 ⟺ stable ∧ maximal on {corpus} curves"))
}
