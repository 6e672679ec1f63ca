mod common;

use common::rational;
use jortho::exactnum::{char_poly, identity_test, int, real_roots, IdentityVerdict, Matrix, Poly, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn int_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-6i64..=6, n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| int(v[i * n + j])))
}

fn block_diag(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
    let (k, m) = (a.rows(), b.rows());
    Matrix::from_fn(k + m, k + m, |i, j| match (i < k, j < k) {
        (true, true) => a[(i, j)].clone(),
        (false, false) => b[(i - k, j - k)].clone(),
        _ => Rational::zero(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_vanishes_on_diagonal_entries(d in prop::collection::vec(rational(), 1..=6)) {
        let p = char_poly(&Matrix::diagonal(&d));
        for x in &d {
            prop_assert!(p.eval(x).is_zero());
        }
        prop_assert_eq!(p.degree(), Some(d.len()));
    }

    #[test]
    fn char_poly_is_multiplicative_on_blocks(a in int_matrix(2), b in int_matrix(3)) {
        prop_assert_eq!(char_poly(&block_diag(&a, &b)), &char_poly(&a) * &char_poly(&b));
    }

    #[test]
    fn root_multiplicities_account_for_the_degree(coeffs in prop::collection::vec(-9i64..=9, 1..=7), lead in 1i64..=4) {
        let mut c = coeffs;
        c.push(lead);
        let p = Poly::from_i64(&c);
        let rep = real_roots(&p).unwrap();
        let real: usize = rep.roots.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(real + 2 * rep.complex_pairs, p.degree().unwrap());
    }

    #[test]
    fn identity_test_accepts_zero_and_rejects_monomials(seed in any::<u64>(), vars in 1usize..=6, e in 1u32..=4) {
        let zero = identity_test(|_: &[Rational]| Rational::zero(), 4, vars, 5, seed).unwrap();
        prop_assert!(zero.is_zero());
        let mono = identity_test(|x: &[Rational]| x.iter().map(|v| v.pow(e as i32)).product(), e as i64 * vars as i64, vars, 5, seed).unwrap();
        let is_witness = matches!(mono, IdentityVerdict::NonzeroWitness { .. });
        prop_assert!(is_witness);
    }
}
