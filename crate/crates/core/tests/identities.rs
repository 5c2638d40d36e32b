use minmat_core::*;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn charpoly_is_method_independent() {
    for method in SymMethod::ALL {
        let table = SymTable::build(10, method).unwrap();
        for n in 1..=10 {
            let p = CharPoly::from_symmetric_functions(table.row(n).unwrap()).unwrap();
            assert_eq!(p, charpoly(n).unwrap(), "{method} n={n}");
        }
    }
}

#[test]
fn charpoly_at_zero_is_signed_determinant() {
    // A_n is positive definite with det 1, so p(0) = (-1)^n.
    for n in 1..=20 {
        let p = charpoly(n).unwrap();
        let expected = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(expected));
    }
}

#[test]
fn c_matrix_via_shifted_increments_outside_one_lt_k_lt_n() {
    // Δ(k,1,...,1) = k also for k = 1 and k >= n.
    for k in 1..=12i64 {
        for len in 1..=8 {
            let inc = Increments::shifted(k, len).unwrap();
            assert_eq!(det_bareiss(&build_delta_matrix(&inc).unwrap()), BigInt::from(k));
        }
    }
}

proptest! {
    #[test]
    fn leading_minor_product_rule(values in prop::collection::vec(-6i64..=6, 1..=10)) {
        let inc = Increments::from_i64s(&values).unwrap();
        let d = build_delta_matrix(&inc).unwrap();
        for m in 1..=d.dim() {
            let idx: Vec<usize> = (1..=m).collect();
            let lead = det_bareiss(&d.principal_submatrix(&idx).unwrap());
            let prefix = Increments::new(inc.values()[..m].to_vec()).unwrap();
            prop_assert_eq!(lead, delta_det_closed(&prefix));
        }
    }

    #[test]
    fn ratio_recurrence_step(n in 2usize..=80, kk in 1usize..=80) {
        let k = 1 + kk % (n - 1);
        let lhs = symfun_closed(n, k).unwrap() * (n - k);
        let rhs = symfun_closed(n - 1, k).unwrap() * (n + k);
        prop_assert_eq!(lhs, rhs);
    }
}
