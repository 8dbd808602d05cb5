//! Trigonal curves `y³ + g2(x)·y + g3(x) = 0` in the Hirzebruch surface `Σ_k`.
//!
//! Everything is exact over `Q`. Singular fibers are located by multiplicity
//! classes of the discriminant: no roots are ever isolated, so a "place" is a
//! monic squarefree polynomial whose roots all carry the same fiber.

use std::fmt;

pub mod samples;

use serde::{Deserialize, Serialize};

use crate::dessins::{FiberMultiset, FiberType};
use crate::error::{Error, Result};
use crate::exactcore::{
    int, reduce_rational_function, squarefree_partition, RatPoly, Rational, RationalText,
};

/// A trigonal curve in `Σ_k` in monic Weierstrass form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    k: u32,
    g2: RatPoly,
    g3: RatPoly,
}

#[derive(Serialize, Deserialize)]
struct CurveFile {
    k: u32,
    #[serde(default = "unit_lead")]
    lead: RationalText,
    g2: RatPoly,
    g3: RatPoly,
}

fn unit_lead() -> RationalText {
    RationalText(int(1))
}

impl WeierstrassCurve {
    pub fn new(k: u32, g2: RatPoly, g3: RatPoly) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidCurve("k must be positive".into()));
        }
        if g2.is_zero() && g3.is_zero() {
            return Err(Error::InvalidCurve("g2 and g3 both vanish".into()));
        }
        if g2.degree().is_some_and(|d| d > 2 * k as usize) {
            return Err(Error::InvalidCurve(format!("deg g2 exceeds {}", 2 * k)));
        }
        if g3.degree().is_some_and(|d| d > 3 * k as usize) {
            return Err(Error::InvalidCurve(format!("deg g3 exceeds {}", 3 * k)));
        }
        Ok(WeierstrassCurve { k, g2, g3 })
    }

    /// The curve `lead·y³ + g2·y + g3 = 0`, divided through by `lead`.
    pub fn with_leading(k: u32, lead: &Rational, g2: RatPoly, g3: RatPoly) -> Result<Self> {
        if lead == &int(0) {
            return Err(Error::InvalidCurve("leading coefficient is zero".into()));
        }
        let inv = int(1) / lead;
        Self::new(k, g2.scale(&inv), g3.scale(&inv))
    }

    /// Parses `{k, lead, g2, g3}` with ascending coefficient lists.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CurveFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidCurve(e.to_string()))?;
        Self::with_leading(file.k, &file.lead.0, file.g2, file.g3)
    }

    pub fn to_json(&self) -> String {
        let file = CurveFile { k: self.k, lead: unit_lead(), g2: self.g2.clone(), g3: self.g3.clone() };
        serde_json::to_string(&file).expect("curve serializes")
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn g2(&self) -> &RatPoly {
        &self.g2
    }

    pub fn g3(&self) -> &RatPoly {
        &self.g3
    }

    /// The curve after the substitution `x ↦ x + c`.
    pub fn shifted(&self, c: &Rational) -> Self {
        WeierstrassCurve { k: self.k, g2: self.g2.shift(c), g3: self.g3.shift(c) }
    }

    /// `Δ = 4·g2³ + 27·g3²`.
    pub fn discriminant(&self) -> RatPoly {
        &self.g2.pow(3).scale(&int(4)) + &self.g3.pow(2).scale(&int(27))
    }

    fn nonzero_discriminant(&self) -> Result<RatPoly> {
        let delta = self.discriminant();
        if delta.is_zero() {
            Err(Error::ZeroDiscriminant)
        } else {
            Ok(delta)
        }
    }

    /// `j = 4·g2³ / Δ` in lowest terms, denominator monic.
    pub fn j_invariant(&self) -> Result<JInvariant> {
        let delta = self.nonzero_discriminant()?;
        let (num, den) = reduce_rational_function(&self.g2.pow(3).scale(&int(4)), &delta)?;
        Ok(JInvariant { num, den })
    }

    /// One report per class of points with a singular fiber.
    pub fn fiber_analysis(&self) -> Result<Vec<FiberReport>> {
        let delta = self.nonzero_discriminant()?;
        let g2_classes = classes(&self.g2)?;
        let g3_classes = classes(&self.g3)?;

        let mut reports = Vec::new();
        for (h, d) in squarefree_partition(&delta)?.factors {
            for (ha, a) in refine(h, &g2_classes) {
                for (hab, b) in refine(ha, &g3_classes) {
                    let orders = Orders { a, b, d };
                    reports.push(FiberReport::new(Place::Finite(hab), orders));
                }
            }
        }
        let k = self.k as usize;
        let deficit = |p: &RatPoly, bound: usize| p.degree().map(|e| (bound - e) as u32);
        let d_inf = (6 * k - delta.degree().expect("nonzero")) as u32;
        if d_inf > 0 {
            let orders = Orders { a: deficit(&self.g2, 2 * k), b: deficit(&self.g3, 3 * k), d: d_inf };
            reports.push(FiberReport::new(Place::Infinity, orders));
        }
        reports.sort_by(|x, y| x.place.cmp(&y.place));
        Ok(reports)
    }

    /// All singular fibers, each class expanded by its number of points.
    pub fn fibers(&self) -> Result<FiberMultiset> {
        let mut out = Vec::new();
        for r in self.fiber_analysis()? {
            out.extend(std::iter::repeat_n(r.fiber_type, r.place.points()));
        }
        Ok(FiberMultiset::new(out))
    }

    /// Total Milnor number of the singular points of the curve.
    pub fn milnor(&self) -> Result<u32> {
        let mut total = 0;
        for r in self.fiber_analysis()? {
            total += r.milnor.ok_or(Error::NonSimpleFiber)? * r.place.points() as u32;
        }
        Ok(total)
    }

    pub fn is_isotrivial(&self) -> Result<bool> {
        let j = self.j_invariant()?;
        Ok(j.num.is_constant() && j.den.is_constant())
    }

    pub fn is_stable(&self) -> Result<bool> {
        Ok(self.fiber_analysis()?.iter().all(|r| r.fiber_type.is_stable()))
    }

    pub fn is_maximal(&self) -> Result<bool> {
        if self.is_isotrivial()? {
            return Ok(false);
        }
        let bad = |t: FiberType| matches!(t, FiberType::D(4) | FiberType::NonSimple);
        if self.fiber_analysis()?.iter().any(|r| bad(r.fiber_type)) {
            return Ok(false);
        }
        let j = self.j_invariant()?;
        let over_zero = j.ramification_over_zero()?;
        let over_one = j.ramification_over_one()?;
        let over_inf = j.ramification_over_infinity()?;
        if over_zero.iter().any(|&(_, e)| e > 3) || over_one.iter().any(|&(_, e)| e > 2) {
            return Ok(false);
        }
        let total: usize = [over_zero, over_one, over_inf]
            .iter()
            .flatten()
            .map(|&(n, e)| n * (e as usize - 1))
            .sum();
        Ok(total == 2 * j.degree() - 2)
    }
}

/// Squarefree classes of `p` with their multiplicities; `None` for `p ≡ 0`.
fn classes(p: &RatPoly) -> Result<Option<Vec<(RatPoly, u32)>>> {
    if p.is_zero() {
        return Ok(None);
    }
    Ok(Some(squarefree_partition(p)?.factors))
}

/// Splits `h` into pieces on which the order of the classified polynomial is constant.
fn refine(h: RatPoly, classes: &Option<Vec<(RatPoly, u32)>>) -> Vec<(RatPoly, Option<u32>)> {
    let Some(classes) = classes else {
        return vec![(h, None)];
    };
    let mut out = Vec::new();
    let mut rest = h;
    for (u, m) in classes {
        let g = rest.gcd(u);
        if !g.is_constant() {
            rest = rest.exact_div(&g).expect("gcd divides");
            out.push((g, Some(*m)));
        }
    }
    if !rest.is_constant() {
        out.push((rest.monic(), Some(0)));
    }
    out
}

/// A reduced rational function `num/den` with monic `den`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JInvariant {
    pub num: RatPoly,
    pub den: RatPoly,
}

impl JInvariant {
    /// Degree as a map `P¹ → P¹`.
    pub fn degree(&self) -> usize {
        let d = |p: &RatPoly| p.degree().unwrap_or(0);
        d(&self.num).max(d(&self.den))
    }

    /// `(number of points, ramification index)` over `0`.
    pub fn ramification_over_zero(&self) -> Result<Vec<(usize, u32)>> {
        self.fiber_over(&self.num)
    }

    pub fn ramification_over_one(&self) -> Result<Vec<(usize, u32)>> {
        self.fiber_over(&(&self.num - &self.den))
    }

    pub fn ramification_over_infinity(&self) -> Result<Vec<(usize, u32)>> {
        self.fiber_over(&self.den)
    }

    // finite preimages are the roots of `p`; the point at infinity lies over
    // the same value exactly when `deg p` falls short of the degree of `j`
    fn fiber_over(&self, p: &RatPoly) -> Result<Vec<(usize, u32)>> {
        let mut out = Vec::new();
        let Some(deg) = p.degree() else {
            return Ok(out);
        };
        for (g, m) in squarefree_partition(p)?.factors {
            out.push((g.degree().expect("nonconstant factor"), m));
        }
        if deg < self.degree() {
            out.push((1, (self.degree() - deg) as u32));
        }
        Ok(out)
    }
}

impl fmt::Display for JInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Where a singular fiber sits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Place {
    /// All roots of a monic squarefree polynomial.
    Finite(RatPoly),
    Infinity,
}

impl Place {
    /// Number of geometric points in the class.
    pub fn points(&self) -> usize {
        match self {
            Place::Finite(h) => h.degree().expect("nonconstant place"),
            Place::Infinity => 1,
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |p: &Place| match p {
            Place::Finite(h) => (0, h.degree().unwrap_or(0), h.to_string()),
            Place::Infinity => (1, 0, String::new()),
        };
        key(self).cmp(&key(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(h) => write!(f, "{h} = 0"),
            Place::Infinity => f.write_str("infinity"),
        }
    }
}

/// Orders of `g2`, `g3` and `Δ` at a place; `None` when the polynomial vanishes identically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Orders {
    pub a: Option<u32>,
    pub b: Option<u32>,
    pub d: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub place: Place,
    pub orders: Orders,
    pub fiber_type: FiberType,
    /// Milnor number of a single point of the class.
    pub milnor: Option<u32>,
}

impl FiberReport {
    fn new(place: Place, orders: Orders) -> Self {
        let fiber_type = fiber_type(orders);
        FiberReport { place, orders, fiber_type, milnor: fiber_type.milnor() }
    }
}

/// The `(a, b, d)` typing table; `d` must be positive.
pub fn fiber_type(o: Orders) -> FiberType {
    let a = o.a.unwrap_or(u32::MAX);
    let b = o.b.unwrap_or(u32::MAX);
    let d = o.d;
    use FiberType::*;
    match (a, b, d) {
        (0, _, 1) => A0Star,
        (0, _, d) => A(d - 1),
        (a, 1, 2) if a >= 1 => A0StarStar,
        (1, b, 3) if b >= 2 => A1Star,
        (a, 2, 4) if a >= 2 => A2Star,
        (a, b, 6) if a >= 2 && b >= 3 => D(4),
        (2, 3, d) if d > 6 => D(d - 2),
        (a, 4, 8) if a >= 3 => E(6),
        (3, b, 9) if b >= 5 => E(7),
        (a, 5, 10) if a >= 4 => E(8),
        _ => NonSimple,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64(c)
    }

    fn four_cusps() -> WeierstrassCurve {
        let g2 = RatPoly::new(vec![rat(-3, 4), int(0), int(0), int(-6)]);
        let g3 = RatPoly::new(vec![rat(-1, 4), int(0), int(0), int(5), int(0), int(0), int(2)]);
        WeierstrassCurve::new(2, g2, g3).unwrap()
    }

    #[test]
    fn typing_table_rows() {
        let o = |a, b, d| Orders { a: Some(a), b: Some(b), d };
        assert_eq!(fiber_type(o(0, 0, 1)), FiberType::A0Star);
        assert_eq!(fiber_type(o(0, 0, 9)), FiberType::A(8));
        assert_eq!(fiber_type(o(1, 1, 2)), FiberType::A0StarStar);
        assert_eq!(fiber_type(o(1, 2, 3)), FiberType::A1Star);
        assert_eq!(fiber_type(o(2, 2, 4)), FiberType::A2Star);
        assert_eq!(fiber_type(o(2, 3, 6)), FiberType::D(4));
        assert_eq!(fiber_type(o(2, 3, 8)), FiberType::D(6));
        assert_eq!(fiber_type(o(3, 4, 8)), FiberType::E(6));
        assert_eq!(fiber_type(o(3, 5, 9)), FiberType::E(7));
        assert_eq!(fiber_type(o(4, 5, 10)), FiberType::E(8));
        assert_eq!(fiber_type(o(4, 6, 12)), FiberType::NonSimple);
        assert_eq!(fiber_type(Orders { a: None, b: Some(5), d: 10 }), FiberType::E(8));
    }

    #[test]
    fn leading_coefficient_is_divided_out() {
        let text = r#"{"k": 2, "lead": 4, "g2": [-3, 0, 0, -24], "g3": [-1, 0, 0, 20, 0, 0, 8]}"#;
        assert_eq!(WeierstrassCurve::from_json(text).unwrap(), four_cusps());
        let c = four_cusps();
        assert_eq!(WeierstrassCurve::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn degree_bounds_enforced() {
        assert!(WeierstrassCurve::new(1, p(&[0, 0, 1]), p(&[1])).is_ok());
        assert!(WeierstrassCurve::new(1, p(&[0, 0, 0, 1]), p(&[1])).is_err());
        assert!(WeierstrassCurve::new(1, p(&[1]), p(&[0, 0, 0, 0, 1])).is_err());
        assert!(WeierstrassCurve::new(1, RatPoly::zero(), RatPoly::zero()).is_err());
    }

    #[test]
    fn four_cusps_curve() {
        let c = four_cusps();
        let delta = &p(&[0, 0, 0, 108]) * &p(&[-1, 0, 0, 1]).pow(3);
        assert_eq!(c.discriminant(), delta);
        let j = c.j_invariant().unwrap();
        assert_eq!(j.num, p(&[1, 0, 0, 8]).pow(3).scale(&rat(-1, 64)));
        assert_eq!(j.den, &p(&[0, 0, 0, 1]) * &p(&[-1, 0, 0, 1]).pow(3));
        assert_eq!(j.degree(), 12);
        let reports = c.fiber_analysis().unwrap();
        // x and x³ − 1 share all orders, so they form a single class of four points
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].place, Place::Finite(p(&[0, -1, 0, 0, 1])));
        assert_eq!(reports[0].orders, Orders { a: Some(0), b: Some(0), d: 3 });
        assert_eq!(reports[0].fiber_type, FiberType::A(2));
        assert_eq!(c.fibers().unwrap().to_string(), "4A2~");
        assert_eq!(c.milnor().unwrap(), 8);
        assert!(!c.is_isotrivial().unwrap());
        assert!(c.is_stable().unwrap());
        assert!(c.is_maximal().unwrap());
    }

    #[test]
    fn two_d4_curve_is_isotrivial() {
        let c = WeierstrassCurve::new(2, p(&[0, 0, -3]), p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(c.discriminant(), p(&[0, 0, 0, 0, 0, 0, -81]));
        let j = c.j_invariant().unwrap();
        assert_eq!((j.num, j.den), (RatPoly::constant(rat(4, 3)), RatPoly::one()));
        let reports = c.fiber_analysis().unwrap();
        let orders: Vec<_> = reports.iter().map(|r| (r.orders, r.fiber_type)).collect();
        let o = Orders { a: Some(2), b: Some(3), d: 6 };
        assert_eq!(orders, vec![(o, FiberType::D(4)), (o, FiberType::D(4))]);
        assert_eq!(reports[1].place, Place::Infinity);
        assert_eq!(c.milnor().unwrap(), 8);
        assert!(c.is_isotrivial().unwrap());
        assert!(!c.is_maximal().unwrap());
    }

    #[test]
    fn small_cases() {
        let c = WeierstrassCurve::new(1, RatPoly::zero(), p(&[1])).unwrap();
        assert_eq!(c.discriminant(), p(&[27]));
        let c = WeierstrassCurve::new(1, RatPoly::zero(), p(&[0, 1])).unwrap();
        assert_eq!(c.j_invariant().unwrap().num, RatPoly::zero());
        assert!(c.is_isotrivial().unwrap());
        let c = WeierstrassCurve::new(1, p(&[0, 3]), p(&[0, 0, 1])).unwrap();
        // Δ = 108x³ + 27x⁴: a cusp-free fiber with a = 1, b = 2, d = 3
        assert_eq!(c.fiber_analysis().unwrap()[0].fiber_type, FiberType::A1Star);
    }

    #[test]
    fn zero_discriminant_rejected() {
        // y³ − 3y + 2 = (y − 1)²(y + 2)
        let c = WeierstrassCurve::new(1, p(&[-3]), p(&[2])).unwrap();
        assert_eq!(c.j_invariant().unwrap_err(), Error::ZeroDiscriminant);
        assert_eq!(c.fiber_analysis().unwrap_err(), Error::ZeroDiscriminant);
        assert_eq!(c.is_maximal().unwrap_err(), Error::ZeroDiscriminant);
    }

    #[test]
    fn classes_split_by_g2() {
        // Δ = x²(4x + 27): a cusp of the fiber at 0
        let c = WeierstrassCurve::new(1, p(&[0, 1]), p(&[0, 1])).unwrap();
        let reports = c.fiber_analysis().unwrap();
        assert!(reports.iter().any(|r| r.fiber_type == FiberType::A0StarStar));
    }
}
