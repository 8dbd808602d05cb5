use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::form::{DiscrElement, FiniteQuadraticForm};
use crate::error::{Error, Result};
use crate::exactcore::{smith_normal_form, IntMatrix, Rational};

/// The discriminant form of an even lattice together with the transition
/// data between dual-basis coordinates and canonical coordinates.
///
/// A vector `c` of integers stands for the dual vector pairing to `c_v`
/// with the basis vector `v`; its class in `S*/S` has canonical coordinates
/// `to_canonical * c` (reduced modulo the cyclic orders). `lift[i]` is a
/// dual-coordinate representative of the `i`-th canonical generator.
#[derive(Clone, Debug)]
pub struct DiscriminantForm {
    pub form: FiniteQuadraticForm,
    pub to_canonical: Vec<Vec<i64>>,
    pub lift: Vec<Vec<i64>>,
}

impl DiscriminantForm {
    /// Canonical coordinates of the class of a dual-coordinate vector.
    pub fn canonical(&self, dual: &[i64]) -> DiscrElement {
        let coords: Vec<i64> = self
            .to_canonical
            .iter()
            .zip(self.form.orders())
            .map(|(row, &d)| {
                let s: i128 = row.iter().zip(dual).map(|(a, b)| *a as i128 * *b as i128).sum();
                s.rem_euclid(d as i128) as i64
            })
            .collect();
        DiscrElement(coords)
    }

    /// Number of lattice basis vectors.
    pub fn lattice_rank(&self) -> usize {
        self.lift.first().map(Vec::len).unwrap_or_else(|| self.to_canonical.first().map(Vec::len).unwrap_or(0))
    }
}

/// Computes `discr S = S*/S` from a Gram matrix via the Smith normal form.
pub fn discriminant_form(gram: &IntMatrix) -> Result<DiscriminantForm> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = gram.rows();
    if let Some(i) = (0..n).find(|&i| gram[(i, i)].is_odd()) {
        return Err(Error::OddGram(i));
    }
    let det = gram.determinant();
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    let det = det.abs();
    let inverse = gram.rational_inverse().expect("nondegenerate");
    let snf = smith_normal_form(gram);
    let u_inv = snf.u.unimodular_inverse();

    let mut orders = Vec::new();
    let mut to_canonical = Vec::new();
    let mut lift = Vec::new();
    for i in 0..n {
        let d = snf.d[(i, i)].abs();
        if d.is_one() {
            continue;
        }
        let d64 = d.to_i64().expect("cyclic order exceeds i64");
        orders.push(d64);
        to_canonical.push(
            snf.u
                .row(i)
                .iter()
                .map(|x| x.mod_floor(&d).to_i64().unwrap())
                .collect::<Vec<i64>>(),
        );
        lift.push(
            (0..n)
                .map(|r| u_inv[(r, i)].mod_floor(&det).to_i64().expect("lift exceeds i64"))
                .collect::<Vec<i64>>(),
        );
    }

    let pairing = |a: &[i64], b: &[i64]| -> Rational {
        let mut acc = Rational::zero();
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y != 0 {
                    acc += &inverse[i][j] * Rational::from_integer(BigInt::from(x * y));
                }
            }
        }
        acc
    };
    let r = orders.len();
    let bilinear: Vec<Vec<Rational>> = (0..r).map(|i| (0..r).map(|j| pairing(&lift[i], &lift[j])).collect()).collect();
    let quadratic: Vec<Rational> = (0..r).map(|i| bilinear[i][i].clone()).collect();
    let form = FiniteQuadraticForm::new(orders, bilinear, quadratic)?;
    Ok(DiscriminantForm { form, to_canonical, lift })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    #[test]
    fn a2_is_z3_with_minus_two_thirds() {
        let d = discriminant_form(&IntMatrix::from_rows(&[[-2, 1], [1, -2]])).unwrap();
        assert_eq!(d.form.orders(), &[3]);
        assert_eq!(d.form.q(&d.form.generator(0)), rat(4, 3)); // -2/3 mod 2
    }

    #[test]
    fn d4_is_v2() {
        let g = IntMatrix::from_rows(&[[-2, 1, 0, 0], [1, -2, 1, 1], [0, 1, -2, 0], [0, 1, 0, -2]]);
        let d = discriminant_form(&g).unwrap();
        assert_eq!(d.form.orders(), &[2, 2]);
        let f = &d.form;
        let nonzero: Vec<_> = f.elements().skip(1).collect();
        assert!(nonzero.iter().all(|x| f.q(x) == rat(1, 1)));
        assert_eq!(f.b(&nonzero[0], &nonzero[1]), rat(1, 2));
    }

    #[test]
    fn rejects_bad_grams() {
        assert_eq!(discriminant_form(&IntMatrix::from_rows(&[[-1]])).unwrap_err(), Error::OddGram(0));
        assert_eq!(
            discriminant_form(&IntMatrix::from_rows(&[[2, 2], [2, 2]])).unwrap_err(),
            Error::Degenerate
        );
        assert_eq!(
            discriminant_form(&IntMatrix::from_rows(&[[2, 1], [0, 2]])).unwrap_err(),
            Error::NotSymmetric
        );
    }

    #[test]
    fn canonical_map_kills_lattice_vectors() {
        let g = IntMatrix::from_rows(&[[-2, 1, 0], [1, -2, 1], [0, 1, -2]]);
        let d = discriminant_form(&g).unwrap();
        // columns of the Gram matrix are dual coordinates of lattice vectors
        for j in 0..3 {
            let col: Vec<i64> = (0..3).map(|i| g.get_i64(i, j)).collect();
            assert!(d.canonical(&col).is_zero());
        }
        for (i, l) in d.lift.iter().enumerate() {
            assert_eq!(d.canonical(l), d.form.generator(i));
        }
    }
}
