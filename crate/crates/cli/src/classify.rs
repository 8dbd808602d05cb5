use serde::Serialize;
use sextic_core::catalog::{families, find_family, FamilyTag};
use sextic_core::rootsystems::SingularitySet;
use sextic_core::stability::{classify_set, GroupLabel, KernelSpec, OrbitResult};

use crate::args::{ClassifyArgs, KernelChoice};
use crate::{CliError, Output};
use rayon::prelude::*;

#[derive(Serialize)]
pub struct ClassifyReport {
    pub families: Vec<FamilyRow>,
    pub all_match: bool,
}

#[derive(Serialize)]
pub struct FamilyRow {
    pub singularities: SingularitySet,
    pub tag: Option<FamilyTag>,
    pub kernel: KernelSpec,
    pub expected: Option<GroupLabel>,
    /// Some kernel orbit realizes the expected group.
    pub matches_theorem: Option<bool>,
    pub unanimous: Option<bool>,
    pub kernel_orbits: Vec<OrbitRow>,
}

#[derive(Serialize)]
pub struct OrbitRow {
    pub kernel_orbit: KernelOrbitRow,
    pub group_order: usize,
    pub group_label: GroupLabel,
    pub kappa: KappaRow,
    /// Orbits of the stable group on the essential components.
    pub orbits: Vec<SingularitySet>,
    pub matches_theorem: Option<bool>,
}

#[derive(Serialize)]
pub struct KernelOrbitRow {
    pub generators: Vec<Vec<i64>>,
    pub size: usize,
}

#[derive(Serialize)]
pub struct KappaRow {
    pub order: usize,
    pub injective: bool,
}

fn orbit_row(o: &OrbitResult, expected: Option<&GroupLabel>) -> OrbitRow {
    OrbitRow {
        kernel_orbit: KernelOrbitRow {
            generators: o.kernel_generators.iter().map(|g| g.0.clone()).collect(),
            size: o.orbit_size,
        },
        group_order: o.report.order,
        group_label: o.report.label.clone(),
        kappa: KappaRow { order: o.report.kappa.order, injective: o.report.kappa.injective },
        orbits: o.report.orbit_types(&o.config),
        matches_theorem: expected.map(|e| e == &o.report.label),
    }
}

fn family_row(
    set: &SingularitySet,
    tag: Option<FamilyTag>,
    kernel: KernelSpec,
    expected: Option<&GroupLabel>,
    choice: KernelChoice,
) -> FamilyRow {
    let mut orbits = classify_set(set, kernel);
    if choice == KernelChoice::First {
        orbits.truncate(1);
    }
    let kernel_orbits: Vec<OrbitRow> = orbits.iter().map(|o| orbit_row(o, expected)).collect();
    let flags: Vec<bool> = kernel_orbits.iter().filter_map(|o| o.matches_theorem).collect();
    let known = expected.is_some();
    FamilyRow {
        singularities: set.clone(),
        tag,
        kernel,
        expected: expected.cloned(),
        matches_theorem: known.then(|| flags.iter().any(|&m| m)),
        unanimous: known.then(|| flags.iter().all(|&m| m)),
        kernel_orbits,
    }
}

pub fn classify(args: &ClassifyArgs) -> Result<ClassifyReport, CliError> {
    let rows = match (&args.set, args.all) {
        (Some(set), _) => {
            let family = find_family(set);
            let kernel = match (args.kernel, family) {
                (Some(k), _) => k,
                (None, Some(f)) => f.kernel,
                (None, None) => {
                    return Err(CliError::Input(format!("{set} is not a catalog family; pass --kernel")))
                }
            };
            let catalog_kernel = family.filter(|f| f.kernel == kernel);
            vec![family_row(
                set,
                catalog_kernel.map(|f| f.tag),
                kernel,
                catalog_kernel.map(|f| &f.expected),
                args.kernels,
            )]
        }
        (None, true) => families()
            .par_iter()
            .map(|f| family_row(&f.essential, Some(f.tag), f.kernel, Some(&f.expected), args.kernels))
            .collect(),
        (None, false) => return Err(CliError::Input("pass --all or --set".into())),
    };
    let all_match = rows.iter().all(|r| r.matches_theorem != Some(false));
    Ok(ClassifyReport { families: rows, all_match })
}

impl Output for ClassifyReport {
    fn markdown(&self) -> String {
        let mut out = String::from(
            "| Singularities | Kernel | Orbit size | Essential orbits | Group | Order | Expected | Match |\n\
             |---|---|---|---|---|---|---|---|\n",
        );
        for f in &self.families {
            let kernel = match f.kernel {
                KernelSpec::Zero => "0".to_string(),
                KernelSpec::Elementary { p, rank } => format!("(Z/{p})^{rank}"),
            };
            for o in &f.kernel_orbits {
                let orbits: Vec<String> = o.orbits.iter().map(|s| s.to_string()).collect();
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    f.singularities,
                    kernel,
                    o.kernel_orbit.size,
                    orbits.join(", "),
                    o.group_label,
                    o.group_order,
                    f.expected.as_ref().map_or("-".to_string(), |e| e.to_string()),
                    match o.matches_theorem {
                        Some(true) => "yes",
                        Some(false) => "no",
                        None => "-",
                    }
                ));
            }
        }
        out
    }

    fn success(&self) -> bool {
        self.all_match
    }
}
