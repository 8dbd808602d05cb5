use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactcore::Rational;

/// An element of `Z/d_1 + ... + Z/d_r`, every coordinate reduced into `0..d_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiscrElement(pub Vec<i64>);

impl DiscrElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for DiscrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite abelian group with a `Q/Z`-valued bilinear form and its
/// `Q/2Z`-valued quadratic refinement.
///
/// Values are kept twice: as reduced rationals in `[0,1)` / `[0,2)`, and as
/// integer numerators over a common denominator for fast evaluation.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    orders: Vec<i64>,
    bilinear: Vec<Vec<Rational>>,
    quadratic: Vec<Rational>,
    denom: i64,
    bil: Vec<Vec<i64>>,
    quad: Vec<i64>,
}

fn mod_rational(x: &Rational, m: i64) -> Rational {
    let m = Rational::from_integer(BigInt::from(m));
    let q = (x / &m).floor();
    x - q * m
}

impl FiniteQuadraticForm {
    /// Validates and normalizes a form given on the generators of `(Z/d_i)`.
    pub fn new(orders: Vec<i64>, bilinear: Vec<Vec<Rational>>, quadratic: Vec<Rational>) -> Result<Self> {
        let r = orders.len();
        if bilinear.len() != r || bilinear.iter().any(|row| row.len() != r) || quadratic.len() != r {
            return Err(Error::InvalidForm("dimension mismatch".into()));
        }
        if orders.iter().any(|&d| d < 2) {
            return Err(Error::InvalidForm("cyclic orders must be at least 2".into()));
        }
        let bilinear: Vec<Vec<Rational>> = bilinear
            .iter()
            .map(|row| row.iter().map(|v| mod_rational(v, 1)).collect())
            .collect();
        let quadratic: Vec<Rational> = quadratic.iter().map(|v| mod_rational(v, 2)).collect();
        for i in 0..r {
            let di = Rational::from_integer(BigInt::from(orders[i]));
            for j in 0..r {
                if bilinear[i][j] != bilinear[j][i] {
                    return Err(Error::InvalidForm("bilinear form is not symmetric".into()));
                }
                if !(&bilinear[i][j] * &di).is_integer() {
                    return Err(Error::InvalidForm(format!("b(e{i},e{j}) is not {}-torsion", orders[i])));
                }
            }
            if mod_rational(&quadratic[i], 1) != bilinear[i][i] {
                return Err(Error::InvalidForm(format!("q(e{i}) does not refine b(e{i},e{i})")));
            }
            if !mod_rational(&(&quadratic[i] * &di * &di), 2).is_zero() {
                return Err(Error::InvalidForm(format!("q is not well defined on e{i}")));
            }
        }
        let mut lcm = BigInt::from(1);
        for v in bilinear.iter().flatten().chain(quadratic.iter()) {
            lcm = lcm.lcm(v.denom());
        }
        let denom = lcm.to_i64().ok_or_else(|| Error::InvalidForm("denominator overflow".into()))?;
        let num = |v: &Rational| -> i64 { (v * Rational::from_integer(lcm.clone())).to_integer().to_i64().unwrap() };
        let bil = bilinear.iter().map(|row| row.iter().map(num).collect()).collect();
        let quad = quadratic.iter().map(num).collect();
        Ok(FiniteQuadraticForm { orders, bilinear, quadratic, denom, bil, quad })
    }

    /// The form on the trivial group.
    pub fn trivial() -> Self {
        FiniteQuadraticForm::new(Vec::new(), Vec::new(), Vec::new()).expect("trivial form")
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn bilinear_matrix(&self) -> &[Vec<Rational>] {
        &self.bilinear
    }

    pub fn quadratic_values(&self) -> &[Rational] {
        &self.quadratic
    }

    /// Group order `prod d_i`.
    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&d| d as u64).product()
    }

    pub fn zero(&self) -> DiscrElement {
        DiscrElement(vec![0; self.rank()])
    }

    pub fn generator(&self, i: usize) -> DiscrElement {
        let mut v = vec![0; self.rank()];
        v[i] = 1 % self.orders[i];
        DiscrElement(v)
    }

    /// Reduces arbitrary integer coordinates into canonical range.
    pub fn element(&self, coords: &[i64]) -> DiscrElement {
        assert_eq!(coords.len(), self.rank(), "coordinate count mismatch");
        DiscrElement(coords.iter().zip(&self.orders).map(|(c, d)| c.rem_euclid(*d)).collect())
    }

    pub fn contains(&self, x: &DiscrElement) -> bool {
        x.0.len() == self.rank() && x.0.iter().zip(&self.orders).all(|(c, d)| (0..*d).contains(c))
    }

    pub fn add(&self, x: &DiscrElement, y: &DiscrElement) -> DiscrElement {
        DiscrElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.orders)
                .map(|((a, b), d)| (a + b) % d)
                .collect(),
        )
    }

    pub fn sub(&self, x: &DiscrElement, y: &DiscrElement) -> DiscrElement {
        DiscrElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.orders)
                .map(|((a, b), d)| (a - b).rem_euclid(*d))
                .collect(),
        )
    }

    pub fn neg(&self, x: &DiscrElement) -> DiscrElement {
        DiscrElement(x.0.iter().zip(&self.orders).map(|(a, d)| (-a).rem_euclid(*d)).collect())
    }

    pub fn scale(&self, k: i64, x: &DiscrElement) -> DiscrElement {
        DiscrElement(
            x.0.iter()
                .zip(&self.orders)
                .map(|(a, d)| ((k as i128 * *a as i128).rem_euclid(*d as i128)) as i64)
                .collect(),
        )
    }

    /// Additive order of `x`.
    pub fn order_of(&self, x: &DiscrElement) -> i64 {
        x.0.iter()
            .zip(&self.orders)
            .fold(1, |acc, (a, d)| acc.lcm(&(d / a.gcd(d))))
    }

    /// Mixed-radix index of an element, `0..order()`.
    pub fn index_of(&self, x: &DiscrElement) -> usize {
        x.0.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (c, d)| acc * (*d as usize) + *c as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> DiscrElement {
        let mut v = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            let d = self.orders[i] as usize;
            v[i] = (idx % d) as i64;
            idx /= d;
        }
        DiscrElement(v)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = DiscrElement> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// Common denominator of all stored values.
    pub fn denominator(&self) -> i64 {
        self.denom
    }

    /// `b(x,y) * denominator()`, reduced into `0..denominator()`.
    pub fn bilinear_numerator(&self, x: &DiscrElement, y: &DiscrElement) -> i64 {
        let n = self.denom as i128;
        let mut acc: i128 = 0;
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                if b != 0 {
                    acc = (acc + a as i128 * b as i128 * self.bil[i][j] as i128) % n;
                }
            }
        }
        acc.rem_euclid(n) as i64
    }

    /// `q(x) * denominator()`, reduced into `0..2*denominator()`.
    pub fn quadratic_numerator(&self, x: &DiscrElement) -> i64 {
        let n2 = 2 * self.denom as i128;
        let mut acc: i128 = 0;
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            acc = (acc + a as i128 * a as i128 * self.quad[i] as i128) % n2;
            for (j, &b) in x.0.iter().enumerate().skip(i + 1) {
                if b != 0 {
                    acc = (acc + 2 * a as i128 * b as i128 * self.bil[i][j] as i128) % n2;
                }
            }
        }
        acc.rem_euclid(n2) as i64
    }

    /// `b(x, y)` in `[0, 1)`.
    pub fn b(&self, x: &DiscrElement, y: &DiscrElement) -> Rational {
        Rational::new(BigInt::from(self.bilinear_numerator(x, y)), BigInt::from(self.denom))
    }

    /// `q(x)` in `[0, 2)`.
    pub fn q(&self, x: &DiscrElement) -> Rational {
        Rational::new(BigInt::from(self.quadratic_numerator(x)), BigInt::from(self.denom))
    }

    pub fn is_nondegenerate(&self) -> bool {
        let gens: Vec<_> = (0..self.rank()).map(|i| self.generator(i)).collect();
        self.elements()
            .skip(1)
            .all(|x| gens.iter().any(|g| self.bilinear_numerator(&x, g) != 0))
    }

    /// Orthogonal direct sum; returns the coordinate range of each summand.
    pub fn direct_sum(forms: &[FiniteQuadraticForm]) -> (FiniteQuadraticForm, Vec<Range<usize>>) {
        let r: usize = forms.iter().map(|f| f.rank()).sum();
        let mut orders = Vec::with_capacity(r);
        let mut bilinear = vec![vec![Rational::zero(); r]; r];
        let mut quadratic = Vec::with_capacity(r);
        let mut ranges = Vec::with_capacity(forms.len());
        for f in forms {
            let start = orders.len();
            for i in 0..f.rank() {
                for j in 0..f.rank() {
                    bilinear[start + i][start + j] = f.bilinear[i][j].clone();
                }
            }
            orders.extend_from_slice(&f.orders);
            quadratic.extend_from_slice(&f.quadratic);
            ranges.push(start..orders.len());
        }
        let form = FiniteQuadraticForm::new(orders, bilinear, quadratic).expect("direct sum of valid forms");
        (form, ranges)
    }
}

impl fmt::Debug for FiniteQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteQuadraticForm")
            .field("orders", &self.orders)
            .field("bilinear", &self.bilinear.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
            .field("quadratic", &self.quadratic.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

impl Serialize for FiniteQuadraticForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            orders: Vec<i64>,
            bilinear: Vec<Vec<String>>,
            quadratic: Vec<String>,
        }
        Repr {
            orders: self.orders.clone(),
            bilinear: self.bilinear.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
            quadratic: self.quadratic.iter().map(|v| v.to_string()).collect(),
        }
        .serialize(s)
    }
}

/// A subgroup stored as the sorted list of all its elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct DiscrSubgroup {
    elements: Vec<DiscrElement>,
}

impl DiscrSubgroup {
    pub fn trivial(form: &FiniteQuadraticForm) -> Self {
        DiscrSubgroup { elements: vec![form.zero()] }
    }

    pub fn whole(form: &FiniteQuadraticForm) -> Self {
        DiscrSubgroup { elements: form.elements().collect() }.sorted()
    }

    /// The subgroup generated by `gens`.
    pub fn generated(form: &FiniteQuadraticForm, gens: &[DiscrElement]) -> Self {
        let mut seen: HashSet<DiscrElement> = HashSet::new();
        let mut elements = vec![form.zero()];
        seen.insert(form.zero());
        for g in gens {
            if seen.contains(g) {
                continue;
            }
            // extend by multiples of g until closed
            let mut i = 0;
            while i < elements.len() {
                let y = form.add(&elements[i], g);
                if seen.insert(y.clone()) {
                    elements.push(y);
                }
                i += 1;
            }
        }
        DiscrSubgroup { elements }.sorted()
    }

    /// Checks closure; errors when `elements` is not a subgroup.
    pub fn from_elements(form: &FiniteQuadraticForm, elements: Vec<DiscrElement>) -> Result<Self> {
        if let Some(x) = elements.iter().find(|x| !form.contains(x)) {
            return Err(Error::NotSubgroup(format!("{x:?} is not an element of the group")));
        }
        let mut set: Vec<DiscrElement> = elements;
        set.sort();
        set.dedup();
        let closure = DiscrSubgroup::generated(form, &set);
        if closure.elements != set {
            return Err(Error::NotSubgroup("set is not closed under addition".into()));
        }
        Ok(closure)
    }

    fn sorted(mut self) -> Self {
        self.elements.sort();
        self
    }

    pub fn elements(&self) -> &[DiscrElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &DiscrElement) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self, form: &FiniteQuadraticForm) -> Vec<DiscrElement> {
        let mut gens = Vec::new();
        let mut span = DiscrSubgroup::trivial(form);
        // prefer elements of large order so cyclic groups get one generator
        let mut by_order: Vec<&DiscrElement> = self.elements.iter().collect();
        by_order.sort_by_key(|x| std::cmp::Reverse(form.order_of(x)));
        for x in by_order {
            if span.order() == self.order() {
                break;
            }
            if !span.contains(x) {
                gens.push(x.clone());
                span = DiscrSubgroup::generated(form, &gens);
            }
        }
        gens
    }

    /// Projection onto a block of coordinates (other coordinates zeroed).
    pub fn projection_is_zero(&self, block: &Range<usize>) -> bool {
        self.elements.iter().all(|x| x.0[block.clone()].iter().all(|&c| c == 0))
    }
}

/// An automorphism given by the images of the canonical generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct DiscrAutomorphism {
    images: Vec<DiscrElement>,
}

impl DiscrAutomorphism {
    pub fn identity(form: &FiniteQuadraticForm) -> Self {
        DiscrAutomorphism { images: (0..form.rank()).map(|i| form.generator(i)).collect() }
    }

    pub fn negation(form: &FiniteQuadraticForm) -> Self {
        DiscrAutomorphism { images: (0..form.rank()).map(|i| form.neg(&form.generator(i))).collect() }
    }

    /// Builds and validates an automorphism from generator images.
    pub fn new(form: &FiniteQuadraticForm, images: Vec<DiscrElement>) -> Result<Self> {
        let a = DiscrAutomorphism { images };
        a.validate(form)?;
        Ok(a)
    }

    pub(crate) fn new_unchecked(images: Vec<DiscrElement>) -> Self {
        DiscrAutomorphism { images }
    }

    pub fn images(&self) -> &[DiscrElement] {
        &self.images
    }

    /// Well-definedness, preservation of `b` and `q` on generators, and bijectivity.
    pub fn validate(&self, form: &FiniteQuadraticForm) -> Result<()> {
        if self.images.len() != form.rank() || self.images.iter().any(|x| !form.contains(x)) {
            return Err(Error::InvalidForm("automorphism images do not match the group".into()));
        }
        for i in 0..form.rank() {
            if !form.scale(form.orders()[i], &self.images[i]).is_zero() {
                return Err(Error::InvalidForm(format!("image of e{i} has wrong order")));
            }
            let ei = form.generator(i);
            if form.q(&self.images[i]) != form.q(&ei) {
                return Err(Error::InvalidForm(format!("q not preserved on e{i}")));
            }
            for j in 0..form.rank() {
                if form.b(&self.images[i], &self.images[j]) != form.b(&ei, &form.generator(j)) {
                    return Err(Error::InvalidForm(format!("b not preserved on (e{i},e{j})")));
                }
            }
        }
        if DiscrSubgroup::generated(form, &self.images).order() as u64 != form.order() {
            return Err(Error::InvalidForm("map is not surjective".into()));
        }
        Ok(())
    }

    pub fn apply(&self, form: &FiniteQuadraticForm, x: &DiscrElement) -> DiscrElement {
        let mut acc = vec![0i64; form.rank()];
        for (c, img) in x.0.iter().zip(&self.images) {
            if *c == 0 {
                continue;
            }
            for (k, v) in img.0.iter().enumerate() {
                acc[k] = ((acc[k] as i128 + *c as i128 * *v as i128).rem_euclid(form.orders()[k] as i128)) as i64;
            }
        }
        DiscrElement(acc)
    }

    pub fn apply_subgroup(&self, form: &FiniteQuadraticForm, h: &DiscrSubgroup) -> DiscrSubgroup {
        let mut elements: Vec<_> = h.elements.iter().map(|x| self.apply(form, x)).collect();
        elements.sort();
        elements.dedup();
        DiscrSubgroup { elements }
    }

    /// `self ∘ other`.
    pub fn compose(&self, form: &FiniteQuadraticForm, other: &DiscrAutomorphism) -> DiscrAutomorphism {
        DiscrAutomorphism { images: other.images.iter().map(|x| self.apply(form, x)).collect() }
    }

    pub fn is_identity(&self, form: &FiniteQuadraticForm) -> bool {
        *self == DiscrAutomorphism::identity(form)
    }
}

/// Image of an element or subgroup under an automorphism.
pub trait Transformable: Sized {
    fn transform(&self, a: &DiscrAutomorphism, form: &FiniteQuadraticForm) -> Self;
}

impl Transformable for DiscrElement {
    fn transform(&self, a: &DiscrAutomorphism, form: &FiniteQuadraticForm) -> Self {
        a.apply(form, self)
    }
}

impl Transformable for DiscrSubgroup {
    fn transform(&self, a: &DiscrAutomorphism, form: &FiniteQuadraticForm) -> Self {
        a.apply_subgroup(form, self)
    }
}

pub fn apply_automorphism<T: Transformable>(a: &DiscrAutomorphism, form: &FiniteQuadraticForm, x: &T) -> T {
    x.transform(a, form)
}

/// `{x : b(x, y) = 0 for all y in h}`.
pub fn orthogonal_complement(form: &FiniteQuadraticForm, h: &DiscrSubgroup) -> Result<DiscrSubgroup> {
    let h = DiscrSubgroup::from_elements(form, h.elements.clone())?;
    let gens = h.generators(form);
    Ok(DiscrSubgroup {
        elements: form
            .elements()
            .filter(|x| gens.iter().all(|g| form.bilinear_numerator(x, g) == 0))
            .collect(),
    }
    .sorted())
}

/// True iff `q` vanishes on every element of `k`.
pub fn is_isotropic(form: &FiniteQuadraticForm, k: &DiscrSubgroup) -> bool {
    k.elements.iter().all(|x| form.quadratic_numerator(x) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    pub(crate) fn cyclic(d: i64, q: Rational) -> FiniteQuadraticForm {
        let b = vec![vec![q.clone()]];
        FiniteQuadraticForm::new(vec![d], b, vec![q]).unwrap()
    }

    fn e6_cubed() -> FiniteQuadraticForm {
        let e6 = cyclic(3, rat(2, 3));
        FiniteQuadraticForm::direct_sum(&[e6.clone(), e6.clone(), e6]).0
    }

    #[test]
    fn rejects_inconsistent_refinement() {
        let err = FiniteQuadraticForm::new(vec![3], vec![vec![rat(1, 3)]], vec![rat(2, 3)]);
        assert!(err.is_err());
        let err = FiniteQuadraticForm::new(vec![2], vec![vec![rat(1, 3)]], vec![rat(1, 3)]);
        assert!(err.is_err());
    }

    #[test]
    fn complement_in_three_e6() {
        let f = e6_cubed();
        let h = DiscrSubgroup::generated(&f, &[f.element(&[1, 1, 1])]);
        let perp = orthogonal_complement(&f, &h).unwrap();
        assert_eq!(perp.order(), 9);
        assert!(perp.elements().iter().all(|x| x.0.iter().sum::<i64>() % 3 == 0));
        assert_eq!(orthogonal_complement(&f, &DiscrSubgroup::trivial(&f)).unwrap().order(), 27);
        assert_eq!(orthogonal_complement(&f, &DiscrSubgroup::whole(&f)).unwrap().order(), 1);
    }

    #[test]
    fn complement_rejects_non_subgroup() {
        let f = e6_cubed();
        let bad = vec![f.zero(), f.element(&[1, 0, 0])];
        let h = DiscrSubgroup { elements: bad };
        assert!(matches!(orthogonal_complement(&f, &h), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn isotropy_examples() {
        let f = e6_cubed();
        let k = DiscrSubgroup::generated(&f, &[f.element(&[1, 1, 1])]);
        assert!(is_isotropic(&f, &k));
        let a2 = cyclic(3, rat(-2, 3));
        assert!(!is_isotropic(&a2, &DiscrSubgroup::whole(&a2)));
        assert!(is_isotropic(&a2, &DiscrSubgroup::trivial(&a2)));
    }

    #[test]
    fn automorphism_examples() {
        let f = e6_cubed();
        let k = DiscrSubgroup::generated(&f, &[f.element(&[1, 1, 1])]);
        let neg = DiscrAutomorphism::negation(&f);
        neg.validate(&f).unwrap();
        assert_eq!(apply_automorphism(&neg, &f, &k), k);
        let id = DiscrAutomorphism::identity(&f);
        assert_eq!(apply_automorphism(&id, &f, &f.element(&[2, 0, 1])), f.element(&[2, 0, 1]));

        let a8 = cyclic(9, rat(-8, 9));
        let (g, _) = FiniteQuadraticForm::direct_sum(&[a8.clone(), a8]);
        let swap = DiscrAutomorphism::new(&g, vec![g.element(&[0, 1]), g.element(&[1, 0])]).unwrap();
        let h = DiscrSubgroup::generated(&g, &[g.element(&[3, 6])]);
        let image = apply_automorphism(&swap, &g, &h);
        assert!(image.contains(&g.element(&[6, 3])));
        assert_eq!(image, h);
    }

    #[test]
    fn compatibility_identity() {
        let f = e6_cubed();
        for x in f.elements() {
            for y in f.elements() {
                let lhs = f.q(&f.add(&x, &y)) - f.q(&x) - f.q(&y);
                let rhs = f.b(&x, &y) * rat(2, 1);
                assert!(mod_rational(&(lhs - rhs), 2).is_zero());
            }
        }
    }
}
