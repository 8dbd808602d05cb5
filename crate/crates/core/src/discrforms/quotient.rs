use std::collections::HashMap;

use num_integer::Integer;

use super::form::{is_isotropic, orthogonal_complement, DiscrElement, DiscrSubgroup, FiniteQuadraticForm};
use crate::error::{Error, Result};

/// `K⊥/K` with its induced form, plus the projection from `K⊥`.
#[derive(Clone, Debug)]
pub struct QuotientForm {
    pub form: FiniteQuadraticForm,
    /// Elements of `K⊥` lifting the canonical generators of the quotient.
    pub lifts: Vec<DiscrElement>,
    kernel: DiscrSubgroup,
    perp: DiscrSubgroup,
    // coset representative index -> quotient coordinates
    table: HashMap<usize, DiscrElement>,
}

impl QuotientForm {
    pub fn kernel(&self) -> &DiscrSubgroup {
        &self.kernel
    }

    pub fn perp(&self) -> &DiscrSubgroup {
        &self.perp
    }

    /// Image of `x ∈ K⊥` in `K⊥/K`.
    pub fn project(&self, ambient: &FiniteQuadraticForm, x: &DiscrElement) -> Result<DiscrElement> {
        if !self.perp.contains(x) {
            return Err(Error::NotSubgroup(format!("{x:?} is not in the orthogonal complement")));
        }
        Ok(self.table[&coset_rep(ambient, &self.kernel, x)].clone())
    }
}

fn coset_rep(form: &FiniteQuadraticForm, k: &DiscrSubgroup, x: &DiscrElement) -> usize {
    k.elements().iter().map(|y| form.index_of(&form.add(x, y))).min().expect("nonempty subgroup")
}

fn prime_factors(mut n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A finite abelian group given by an explicit element list and an addition table closure.
struct AbstractGroup<'a> {
    size: usize,
    add: &'a dyn Fn(usize, usize) -> usize,
    zero: usize,
}

impl AbstractGroup<'_> {
    fn mul(&self, k: i64, x: usize) -> usize {
        let mut acc = self.zero;
        for _ in 0..k {
            acc = (self.add)(acc, x);
        }
        acc
    }

    fn order_of(&self, x: usize) -> i64 {
        let mut acc = x;
        let mut n = 1;
        while acc != self.zero {
            acc = (self.add)(acc, x);
            n += 1;
        }
        n
    }

    fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.size];
        member[self.zero] = true;
        let mut list = vec![self.zero];
        for &g in gens {
            let mut i = 0;
            while i < list.len() {
                let y = (self.add)(list[i], g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
                i += 1;
            }
        }
        member
    }

    /// Invariant-factor basis: generators with orders `d_1 | d_2 | ...`.
    fn invariant_basis(&self) -> Vec<(usize, i64)> {
        let exponent = (0..self.size).map(|x| self.order_of(x)).fold(1, |a, b| a.lcm(&b));
        let mut per_prime: Vec<Vec<(usize, i64)>> = Vec::new();
        for p in prime_factors(exponent) {
            let sylow: Vec<usize> = (0..self.size)
                .filter(|&x| {
                    let mut o = self.order_of(x);
                    while o % p == 0 {
                        o /= p;
                    }
                    o == 1
                })
                .collect();
            let mut basis: Vec<(usize, i64)> = Vec::new();
            let mut member = self.span(&[]);
            let mut span_size = 1;
            while span_size < sylow.len() {
                // element of maximal order modulo the current span
                let (y, pe) = sylow
                    .iter()
                    .map(|&y| {
                        let mut pe = 1;
                        let mut z = y;
                        while !member[z] {
                            z = self.mul(p, z);
                            pe *= p;
                        }
                        (y, pe)
                    })
                    .max_by_key(|&(y, pe)| (pe, std::cmp::Reverse(y)))
                    .unwrap();
                let target = self.mul(pe, y);
                let h = (0..self.size)
                    .filter(|&h| member[h])
                    .find(|&h| self.mul(pe, h) == target)
                    .expect("greedy basis step always admits a correction");
                let neg_h = (0..self.size).find(|&z| (self.add)(h, z) == self.zero).unwrap();
                let y2 = (self.add)(y, neg_h);
                basis.push((y2, pe));
                let gens: Vec<usize> = basis.iter().map(|b| b.0).collect();
                member = self.span(&gens);
                span_size = member.iter().filter(|&&m| m).count();
            }
            per_prime.push(basis);
        }
        // combine i-th largest primary factors into invariant factors
        let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = Vec::new();
        for i in 0..len {
            let mut g = self.zero;
            let mut d = 1;
            for basis in &per_prime {
                if let Some(&(x, o)) = basis.get(i) {
                    g = (self.add)(g, x);
                    d *= o;
                }
            }
            out.push((g, d));
        }
        out.reverse();
        out
    }
}

/// The induced form on `K⊥/K` for an isotropic `k`.
pub fn quotient_form(form: &FiniteQuadraticForm, k: &DiscrSubgroup) -> Result<QuotientForm> {
    let k = DiscrSubgroup::from_elements(form, k.elements().to_vec())?;
    if !is_isotropic(form, &k) {
        return Err(Error::NotIsotropic);
    }
    let perp = orthogonal_complement(form, &k)?;
    let mut class_of: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<DiscrElement> = Vec::new();
    for x in perp.elements() {
        let r = coset_rep(form, &k, x);
        if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(r) {
            e.insert(reps.len());
            reps.push(form.element_at(r));
        }
    }
    let add = |a: usize, b: usize| class_of[&coset_rep(form, &k, &form.add(&reps[a], &reps[b]))];
    let zero = class_of[&form.index_of(&form.zero())];
    let group = AbstractGroup { size: reps.len(), add: &add, zero };
    let basis = group.invariant_basis();

    let lifts: Vec<DiscrElement> = basis.iter().map(|&(c, _)| reps[c].clone()).collect();
    let orders: Vec<i64> = basis.iter().map(|&(_, d)| d).collect();
    let r = lifts.len();
    let bilinear = (0..r).map(|i| (0..r).map(|j| form.b(&lifts[i], &lifts[j])).collect()).collect();
    let quadratic = lifts.iter().map(|x| form.q(x)).collect();
    let qform = FiniteQuadraticForm::new(orders, bilinear, quadratic)?;

    let mut table = HashMap::new();
    for coords in qform.elements() {
        let mut x = form.zero();
        for (c, l) in coords.coords().iter().zip(&lifts) {
            x = form.add(&x, &form.scale(*c, l));
        }
        table.insert(coset_rep(form, &k, &x), coords);
    }
    debug_assert_eq!(table.len(), reps.len());
    Ok(QuotientForm { form: qform, lifts, kernel: k, perp, table })
}
