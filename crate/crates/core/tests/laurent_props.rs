use proptest::prelude::*;
use rho_core::{ratio, Matrix, Poly};

/// Terms with small rational coefficients; slot 0 (`t`) keeps whole powers.
fn poly_in(arity: usize, lo: i32, hi: i32, max_terms: usize) -> impl Strategy<Value = Poly> {
    let term = (
        proptest::collection::vec(lo..=hi, arity),
        -6i64..=6,
        1i64..=3,
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let mut p = Poly::zero(arity);
        for (mut e, num, den) in terms {
            e[0] = 2 * (e[0] / 2);
            p.add_term(e, ratio(num, den));
        }
        p
    })
}

/// Ordinary polynomials: whole, nonnegative exponents.
fn polynomial(arity: usize) -> impl Strategy<Value = Poly> {
    poly_in(arity, 0, 2, 4).prop_map(|p| {
        let mut out = Poly::zero(p.arity());
        for (e, c) in p.terms() {
            out.add_term(e.iter().map(|x| 2 * x).collect(), c.clone());
        }
        out
    })
}

fn laurent(arity: usize) -> impl Strategy<Value = Poly> {
    poly_in(arity, -3, 3, 4)
}

fn triple() -> impl Strategy<Value = (Poly, Poly, Poly)> {
    (1usize..=4).prop_flat_map(|a| (laurent(a), laurent(a), laurent(a)))
}

fn square(size: usize) -> impl Strategy<Value = Vec<Vec<Poly>>> {
    proptest::collection::vec(proptest::collection::vec(poly_in(2, -2, 2, 2), size), size)
}

fn det(rows: Vec<Vec<Poly>>) -> Poly {
    Matrix::from_rows(rows).unwrap().determinant().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_divide_inverts_multiply((p, d) in (1usize..=3).prop_flat_map(|a| (laurent(a), laurent(a)))) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&p * &d).exact_divide(&d).unwrap(), p);
    }

    #[test]
    fn determinant_alternates_under_row_swap(
        rows in (3usize..=4).prop_flat_map(square),
        i in 0usize..4,
        j in 0usize..4,
    ) {
        let n = rows.len();
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let mut swapped = rows.clone();
        swapped.swap(i, j);
        prop_assert_eq!(det(swapped), -det(rows));
    }

    #[test]
    fn determinant_is_multilinear_in_columns(
        rows in square(3),
        split in proptest::collection::vec(poly_in(2, -2, 2, 2), 3),
        col in 0usize..3,
    ) {
        let mut u = rows.clone();
        let mut v = rows.clone();
        let mut w = rows.clone();
        for r in 0..3 {
            u[r][col] = &rows[r][col] - &split[r];
            v[r][col] = split[r].clone();
            w[r][col] = rows[r][col].clone();
        }
        prop_assert_eq!(det(w), &det(u) + &det(v));
    }

    #[test]
    fn substitute_distributes_over_multiply(
        p in polynomial(3),
        q in polynomial(3),
        images in proptest::collection::vec(poly_in(2, -2, 2, 3), 3),
    ) {
        let lhs = (&p * &q).substitute(&images).unwrap();
        let rhs = &p.substitute(&images).unwrap() * &q.substitute(&images).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_by_monomials_handles_negative_and_half_powers(
        p in poly_in(3, -3, 3, 4),
        q in poly_in(3, -3, 3, 4),
        e in proptest::collection::vec(-2i32..=2, 4),
    ) {
        // Half powers need integer exponents in unit-coefficient images.
        let images = vec![
            Poly::var(2, 0),
            Poly::var_pow2(2, 1, 2 * e[0]),
            Poly::monomial(vec![2 * e[1], 2 * e[2]], ratio(1, 1)),
        ];
        let lhs = (&p * &q).substitute(&images).unwrap();
        let rhs = &p.substitute(&images).unwrap() * &q.substitute(&images).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
