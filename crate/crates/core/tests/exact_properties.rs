use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use sextic_core::discrforms::{discriminant_form, is_isotropic, isotropic_subgroups, quotient_form};
use sextic_core::exactcore::{
    reduce_rational_function, smith_normal_form, squarefree_partition, IntMatrix, RatPoly,
};

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=20, 1usize..=20).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r).prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| RatPoly::from_i64(&c))
}

fn even_gram() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        (prop::collection::vec(-2i64..=2, n), prop::collection::vec(-2i64..=2, n * n)).prop_map(move |(diag, off)| {
            let mut m = IntMatrix::zeros(n, n);
            for i in 0..n {
                m[(i, i)] = BigInt::from(2 * diag[i]);
                for j in i + 1..n {
                    m[(i, j)] = BigInt::from(off[i * n + j]);
                    m[(j, i)] = BigInt::from(off[i * n + j]);
                }
            }
            m
        })
    })
}

fn product(ps: &[RatPoly]) -> RatPoly {
    ps.iter().fold(RatPoly::one(), |acc, p| &acc * p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(m in matrix()) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert_eq!(s.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(s.v.determinant().abs(), BigInt::from(1));
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                prop_assert!(i == j || s.d[(i, j)].is_zero());
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        if m.is_square() {
            let det: BigInt = diag.iter().product();
            prop_assert_eq!(det, m.determinant().abs());
        }
    }

    #[test]
    fn squarefree_parts_reassemble(parts in prop::collection::vec((poly(3), 1u32..=3), 1..=3)) {
        let f = product(&parts.iter().map(|(g, m)| g.pow(*m)).collect::<Vec<_>>());
        prop_assume!(!f.is_zero());
        let sq = squarefree_partition(&f).unwrap();
        prop_assert_eq!(sq.reassemble(), f);
        for (i, (g, m)) in sq.factors.iter().enumerate() {
            prop_assert!(g.is_squarefree() && !g.is_constant());
            prop_assert_eq!(g.leading(), RatPoly::one().leading());
            for (h, n) in &sq.factors[i + 1..] {
                prop_assert!(g.gcd(h).is_constant());
                prop_assert!(m < n);
            }
        }
    }

    #[test]
    fn reduced_fractions_are_coprime(n in poly(5), d in poly(5), common in poly(3)) {
        prop_assume!(!d.is_zero() && !common.is_zero());
        let (num, den) = reduce_rational_function(&(&n * &common), &(&d * &common)).unwrap();
        prop_assert!(num.gcd(&den).is_constant());
        prop_assert_eq!(den.leading(), RatPoly::one().leading());
        prop_assert_eq!(&num * &d, &den * &n);
    }

    #[test]
    fn discriminant_and_quotient_orders(g in even_gram(), p in prop::sample::select(vec![2i64, 3, 5])) {
        let det = g.determinant().abs();
        prop_assume!(!det.is_zero() && det <= BigInt::from(4000));
        let d = discriminant_form(&g).unwrap();
        prop_assert_eq!(BigInt::from(d.form.order()), det);
        prop_assert!(d.form.is_nondegenerate());
        let blocks: Vec<_> = (d.form.rank() > 0).then(|| 0..d.form.rank()).into_iter().collect();
        for k in isotropic_subgroups(&d.form, p, 1, &blocks) {
            prop_assert!(is_isotropic(&d.form, &k));
            let q = quotient_form(&d.form, &k).unwrap();
            prop_assert_eq!(q.form.order() as usize * k.order() * k.order(), d.form.order() as usize);
            prop_assert!(q.form.is_nondegenerate());
        }
    }
}
