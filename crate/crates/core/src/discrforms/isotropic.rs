//! Enumeration of isotropic elementary abelian `p`-subgroups.
//!
//! Subgroups isomorphic to `(Z/p)^r` live in the `p`-torsion `V = G[p]`,
//! an `F_p`-vector space. Each such subgroup is enumerated exactly once as
//! the row space of a matrix in reduced row echelon form.

use std::ops::Range;

use super::form::{DiscrElement, DiscrSubgroup, FiniteQuadraticForm};

/// The `p`-torsion of a form, with the basis `e_j = (d_i/p) g_i` over the
/// coordinates `i` with `p | d_i`.
#[derive(Clone, Debug)]
pub struct PTorsion {
    pub p: i64,
    pub basis: Vec<DiscrElement>,
    /// Form coordinate carrying each basis vector.
    pub coordinate: Vec<usize>,
    qnum: Vec<i64>,
    bnum: Vec<Vec<i64>>,
    denom: i64,
}

/// An `F_p`-subspace of the `p`-torsion in reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FpSubspace {
    pub rows: Vec<Vec<u8>>,
}

impl FpSubspace {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn key(&self) -> Vec<u8> {
        self.rows.concat()
    }
}

impl PTorsion {
    pub fn new(form: &FiniteQuadraticForm, p: i64) -> Self {
        let coordinate: Vec<usize> = (0..form.rank()).filter(|&i| form.orders()[i] % p == 0).collect();
        let basis: Vec<DiscrElement> = coordinate
            .iter()
            .map(|&i| form.scale(form.orders()[i] / p, &form.generator(i)))
            .collect();
        let qnum = basis.iter().map(|x| form.quadratic_numerator(x)).collect();
        let bnum = basis
            .iter()
            .map(|x| basis.iter().map(|y| form.bilinear_numerator(x, y)).collect())
            .collect();
        PTorsion { p, basis, coordinate, qnum, bnum, denom: form.denominator() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element(&self, form: &FiniteQuadraticForm, v: &[u8]) -> DiscrElement {
        let mut x = form.zero();
        for (c, e) in v.iter().zip(&self.basis) {
            if *c != 0 {
                x = form.add(&x, &form.scale(*c as i64, e));
            }
        }
        x
    }

    /// Coordinates of a `p`-torsion element, `None` if `x` is not `p`-torsion.
    pub fn coords(&self, form: &FiniteQuadraticForm, x: &DiscrElement) -> Option<Vec<u8>> {
        if !form.scale(self.p, x).is_zero() {
            return None;
        }
        Some(
            self.coordinate
                .iter()
                .map(|&i| (x.0[i] / (form.orders()[i] / self.p)) as u8)
                .collect(),
        )
    }

    fn q(&self, v: &[u8]) -> i64 {
        let n2 = 2 * self.denom as i128;
        let mut acc: i128 = 0;
        for i in 0..v.len() {
            if v[i] == 0 {
                continue;
            }
            let a = v[i] as i128;
            acc += a * a * self.qnum[i] as i128;
            for j in i + 1..v.len() {
                if v[j] != 0 {
                    acc += 2 * a * v[j] as i128 * self.bnum[i][j] as i128;
                }
            }
        }
        acc.rem_euclid(n2) as i64
    }

    fn b(&self, u: &[u8], v: &[u8]) -> i64 {
        let mut acc: i128 = 0;
        for i in 0..u.len() {
            if u[i] == 0 {
                continue;
            }
            for j in 0..v.len() {
                if v[j] != 0 {
                    acc += u[i] as i128 * v[j] as i128 * self.bnum[i][j] as i128;
                }
            }
        }
        acc.rem_euclid(self.denom as i128) as i64
    }

    /// All subgroups of the span (as explicit subgroup).
    pub fn subgroup(&self, form: &FiniteQuadraticForm, s: &FpSubspace) -> DiscrSubgroup {
        let gens: Vec<DiscrElement> = s.rows.iter().map(|r| self.element(form, r)).collect();
        DiscrSubgroup::generated(form, &gens)
    }

    /// Reduced row echelon form of the span of `rows`.
    pub fn rref(&self, rows: &[Vec<u8>]) -> FpSubspace {
        rref_mod(rows, self.p as u32)
    }

    /// Totally isotropic subspaces of dimension `rank` whose projection to
    /// every block is nonzero. A block is a range of form coordinates.
    pub fn isotropic_subspaces(&self, rank: usize, blocks: &[Range<usize>]) -> Vec<FpSubspace> {
        let n = self.dim();
        let mut out = Vec::new();
        if rank > n {
            return out;
        }
        let block_of: Vec<Option<usize>> = self
            .coordinate
            .iter()
            .map(|&c| blocks.iter().position(|b| b.contains(&c)))
            .collect();
        // a block without p-torsion can never be covered
        if blocks.iter().enumerate().any(|(bi, _)| !block_of.contains(&Some(bi))) {
            return out;
        }
        let mut pivots = Vec::with_capacity(rank);
        choose_pivots(n, rank, 0, &mut pivots, &mut |piv| {
            let mut rows: Vec<Vec<u8>> = Vec::with_capacity(rank);
            self.fill_rows(piv, &mut rows, &mut |rows| {
                let covered = (0..blocks.len()).all(|bi| {
                    rows.iter().any(|r| r.iter().enumerate().any(|(j, &c)| c != 0 && block_of[j] == Some(bi)))
                });
                if covered {
                    out.push(FpSubspace { rows: rows.to_vec() });
                }
            });
        });
        out.sort();
        out
    }

    fn fill_rows(&self, pivots: &[usize], rows: &mut Vec<Vec<u8>>, emit: &mut dyn FnMut(&[Vec<u8>])) {
        let i = rows.len();
        if i == pivots.len() {
            emit(rows);
            return;
        }
        let n = self.dim();
        let piv = pivots[i];
        let free: Vec<usize> = (piv + 1..n).filter(|j| !pivots.contains(j)).collect();
        let p = self.p as u8;
        let mut row = vec![0u8; n];
        row[piv] = 1;
        let total = (p as u64).pow(free.len() as u32);
        for code in 0..total {
            let mut c = code;
            for &j in &free {
                row[j] = (c % p as u64) as u8;
                c /= p as u64;
            }
            if self.q(&row) != 0 || rows.iter().any(|r| self.b(r, &row) != 0) {
                continue;
            }
            rows.push(row.clone());
            self.fill_rows(pivots, rows, emit);
            rows.pop();
        }
    }
}

fn choose_pivots(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for j in start..n {
        if n - j < k - acc.len() {
            break;
        }
        acc.push(j);
        choose_pivots(n, k, j + 1, acc, f);
        acc.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|x| a * x % p == 1).expect("p prime and a nonzero")
}

/// Reduced row echelon form over `F_p`, zero rows dropped.
pub fn rref_mod(rows: &[Vec<u8>], p: u32) -> FpSubspace {
    let mut m: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&x| x as u32 % p).collect()).collect();
    let ncols = m.first().map(Vec::len).unwrap_or(0);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..ncols {
                    m[i][j] = (m[i][j] + p * p - f * m[r][j]) % p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    FpSubspace { rows: m.into_iter().map(|row| row.into_iter().map(|x| x as u8).collect()).collect() }
}

/// All isotropic subgroups `≅ (Z/p)^rank` with nonzero projection to every
/// block, in a deterministic order.
pub fn isotropic_subgroups(
    form: &FiniteQuadraticForm,
    p: i64,
    rank: usize,
    blocks: &[Range<usize>],
) -> Vec<DiscrSubgroup> {
    let tors = PTorsion::new(form, p);
    tors.isotropic_subspaces(rank, blocks)
        .iter()
        .map(|s| tors.subgroup(form, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrforms::form::is_isotropic;
    use crate::exactcore::rat;

    fn cyclic(d: i64, q: crate::exactcore::Rational) -> FiniteQuadraticForm {
        FiniteQuadraticForm::new(vec![d], vec![vec![q.clone()]], vec![q]).unwrap()
    }

    fn sum(parts: &[FiniteQuadraticForm]) -> (FiniteQuadraticForm, Vec<Range<usize>>) {
        FiniteQuadraticForm::direct_sum(parts)
    }

    /// Brute force: isotropic lines spanned by full-support vectors.
    fn brute_force_lines(form: &FiniteQuadraticForm, p: i64, blocks: &[Range<usize>]) -> Vec<DiscrSubgroup> {
        let mut out: Vec<DiscrSubgroup> = form
            .elements()
            .filter(|x| !x.is_zero() && form.order_of(x) == p)
            .filter(|x| blocks.iter().all(|b| x.0[b.clone()].iter().any(|&c| c != 0)))
            .map(|x| DiscrSubgroup::generated(form, &[x]))
            .filter(|h| is_isotropic(form, h))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn three_e6_lines() {
        let e6 = cyclic(3, rat(2, 3));
        let (f, blocks) = sum(&[e6.clone(), e6.clone(), e6]);
        let mut found = isotropic_subgroups(&f, 3, 1, &blocks);
        found.sort();
        assert_eq!(found.len(), 4);
        assert_eq!(found, brute_force_lines(&f, 3, &blocks));
        for h in &found {
            let g = h.elements().iter().find(|x| x.0[0] == 1).unwrap();
            assert!(g.0[1] != 0 && g.0[2] != 0);
        }
    }

    #[test]
    fn no_three_torsion() {
        let a3 = cyclic(4, rat(-3, 4));
        let (f, blocks) = sum(&[a3]);
        for r in 1..3 {
            assert!(isotropic_subgroups(&f, 3, r, &blocks).is_empty());
        }
    }

    #[test]
    fn three_a6_contains_123() {
        let a6 = cyclic(7, rat(-6, 7));
        let (f, blocks) = sum(&[a6.clone(), a6.clone(), a6]);
        let mut found = isotropic_subgroups(&f, 7, 1, &blocks);
        found.sort();
        let target = DiscrSubgroup::generated(&f, &[f.element(&[1, 2, 3])]);
        assert!(found.contains(&target));
        assert_eq!(found, brute_force_lines(&f, 7, &blocks));
        assert!(found.iter().all(|h| is_isotropic(&f, h)));
    }

    #[test]
    fn planes_match_pairwise_closure() {
        // 2-dimensional isotropic subspaces of six cusps, cross-checked by
        // closing pairs of isotropic lines.
        let a2 = cyclic(3, rat(-2, 3));
        let (f, blocks) = sum(&vec![a2; 6]);
        let mut planes = isotropic_subgroups(&f, 3, 2, &blocks);
        planes.sort();
        let lines = isotropic_subgroups(&f, 3, 1, &[]);
        let mut brute: Vec<DiscrSubgroup> = Vec::new();
        for (i, l1) in lines.iter().enumerate() {
            for l2 in &lines[i + 1..] {
                let h = DiscrSubgroup::generated(&f, &[l1.elements()[1].clone(), l2.elements()[1].clone()]);
                if h.order() == 9
                    && is_isotropic(&f, &h)
                    && blocks.iter().all(|b| !h.projection_is_zero(b))
                {
                    brute.push(h);
                }
            }
        }
        brute.sort();
        brute.dedup();
        assert_eq!(planes, brute);
        assert!(!planes.is_empty());
    }

    #[test]
    fn deterministic() {
        let a2 = cyclic(3, rat(-2, 3));
        let (f, blocks) = sum(&vec![a2; 6]);
        assert_eq!(isotropic_subgroups(&f, 3, 1, &blocks), isotropic_subgroups(&f, 3, 1, &blocks));
    }

    #[test]
    fn rref_is_canonical() {
        let a = rref_mod(&[vec![1, 1, 0], vec![0, 1, 1]], 3);
        let b = rref_mod(&[vec![1, 2, 1], vec![2, 0, 1]], 3);
        assert_eq!(a.dim(), 2);
        // (1,2,1) = (1,1,0) + (0,1,1); (2,0,1) = 2(1,1,0) + (0,1,1)
        assert_eq!(a, b);
    }
}
