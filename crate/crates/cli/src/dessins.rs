use serde::Serialize;
use sextic_core::dessins::{enumerate_skeletons, table1, FiberMultiset, Skeleton, Table1Row};

use crate::args::DessinsArgs;
use crate::{CliError, Output};

#[derive(Serialize)]
#[serde(untagged)]
pub enum DessinsReport {
    Skeletons(SkeletonInventory),
    Table(Table1Report),
}

#[derive(Serialize)]
pub struct SkeletonInventory {
    pub k: u32,
    pub max_unstable: usize,
    pub count: usize,
    pub skeletons: Vec<SkeletonRow>,
}

#[derive(Serialize)]
pub struct SkeletonRow {
    pub fibers: FiberMultiset,
    pub face_degrees: Vec<usize>,
    pub unstable_vertices: usize,
    pub components: usize,
    pub skeleton: Skeleton,
}

#[derive(Serialize)]
pub struct Table1Report {
    pub irreducible: usize,
    pub reducible: usize,
    pub rows: Vec<Table1Row>,
}

pub fn dessins(args: &DessinsArgs) -> Result<DessinsReport, CliError> {
    if args.table1 {
        let rows = table1();
        let irreducible = rows.iter().filter(|r| r.irreducible).count();
        return Ok(DessinsReport::Table(Table1Report { irreducible, reducible: rows.len() - irreducible, rows }));
    }
    let max_unstable = if args.stable { 0 } else { args.max_unstable };
    let skeletons = enumerate_skeletons(args.k as usize, max_unstable).map_err(|e| CliError::Input(e.to_string()))?;
    let skeletons: Vec<SkeletonRow> = skeletons
        .into_iter()
        .map(|s| SkeletonRow {
            fibers: s.fiber_multiset(),
            face_degrees: s.face_degrees(),
            unstable_vertices: s.unstable_vertices(),
            components: s.component_count(),
            skeleton: s,
        })
        .collect();
    Ok(DessinsReport::Skeletons(SkeletonInventory { k: args.k, max_unstable, count: skeletons.len(), skeletons }))
}

impl Output for DessinsReport {
    fn markdown(&self) -> String {
        match self {
            DessinsReport::Skeletons(inv) => {
                let mut out = format!(
                    "{} skeletons for k = {} with at most {} unstable vertices\n\n\
                     | Fibers | Faces | Unstable | Components |\n|---|---|---|---|\n",
                    inv.count, inv.k, inv.max_unstable
                );
                for s in &inv.skeletons {
                    let faces: Vec<String> = s.face_degrees.iter().map(|d| d.to_string()).collect();
                    out.push_str(&format!(
                        "| {} | {} | {} | {} |\n",
                        s.fibers,
                        faces.join(","),
                        s.unstable_vertices,
                        s.components
                    ));
                }
                out
            }
            DessinsReport::Table(t) => {
                let mut out = String::from("| Singular fibers | Irreducible | Isotrivial degeneration |\n|---|---|---|\n");
                for r in &t.rows {
                    out.push_str(&format!(
                        "| {} | {} | {} |\n",
                        r.fibers,
                        if r.irreducible { "yes" } else { "no" },
                        r.isotrivial_degeneration.as_ref().map_or("-".to_string(), |m| m.to_string())
                    ));
                }
                out.push_str(&format!("\n{} irreducible, {} reducible\n", t.irreducible, t.reducible));
                out
            }
        }
    }
}
