use std::path::Path;

use serde::Serialize;
use sextic_core::dessins::FiberMultiset;
use sextic_core::exactcore::RatPoly;
use sextic_core::weierstrass::{FiberReport, JInvariant, WeierstrassCurve};

use crate::{CliError, Output};

#[derive(Serialize)]
pub struct CurveReport {
    pub k: u32,
    pub g2: RatPoly,
    pub g3: RatPoly,
    pub discriminant: RatPoly,
    pub j: JInvariant,
    pub j_degree: usize,
    pub fibers: Vec<FiberReport>,
    pub fiber_multiset: FiberMultiset,
    /// Absent when a fiber is not simple.
    pub milnor: Option<u32>,
    pub isotrivial: bool,
    pub stable: bool,
    pub maximal: bool,
}

pub fn analyse(c: &WeierstrassCurve) -> Result<CurveReport, CliError> {
    let input = |e: sextic_core::Error| CliError::Input(e.to_string());
    let j = c.j_invariant().map_err(input)?;
    Ok(CurveReport {
        k: c.k(),
        g2: c.g2().clone(),
        g3: c.g3().clone(),
        discriminant: c.discriminant(),
        j_degree: j.degree(),
        j,
        fibers: c.fiber_analysis().map_err(input)?,
        fiber_multiset: c.fibers().map_err(input)?,
        milnor: c.milnor().ok(),
        isotrivial: c.is_isotrivial().map_err(input)?,
        stable: c.is_stable().map_err(input)?,
        maximal: c.is_maximal().map_err(input)?,
    })
}

pub fn curve(path: &Path) -> Result<CurveReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let c = WeierstrassCurve::from_json(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    analyse(&c).map_err(|CliError::Input(msg)| CliError::Input(format!("{}: {msg}", path.display())))
}

impl Output for CurveReport {
    fn markdown(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!(
            "Curve in Σ{}: y³ + ({})·y + ({})\n\n\
             - Δ = {}\n- j = {} (degree {})\n- fibers: {}\n- μ = {}\n\
             - isotrivial: {}\n- stable: {}\n- maximal: {}\n\n\
             | Place | (a, b, d) | Fiber | μ per point |\n|---|---|---|---|\n",
            self.k,
            self.g2,
            self.g3,
            self.discriminant,
            self.j,
            self.j_degree,
            self.fiber_multiset,
            self.milnor.map_or("undefined".to_string(), |m| m.to_string()),
            yes(self.isotrivial),
            yes(self.stable),
            yes(self.maximal),
        );
        let ord = |o: Option<u32>| o.map_or("∞".to_string(), |v| v.to_string());
        for r in &self.fibers {
            out.push_str(&format!(
                "| {} | ({}, {}, {}) | {} | {} |\n",
                r.place,
                ord(r.orders.a),
                ord(r.orders.b),
                r.orders.d,
                r.fiber_type,
                r.milnor.map_or("-".to_string(), |m| m.to_string())
            ));
        }
        out
    }
}
