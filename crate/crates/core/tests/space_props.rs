mod common;

use common::{indefinite, metric, nonzero_rational, rational, signature};
use jortho::exactnum::{int, Matrix, Rational};
use jortho::sampling;
use jortho::space::{ScalarProduct, Vector};
use num_traits::Zero;
use proptest::prelude::*;

fn combo(a: &Rational, x: &[Rational], b: &Rational, y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(u, v)| a * u + b * v).collect()
}

/// `k` independent pairwise orthogonal null vectors: the images of
/// `e_i + e_{p+i}` under a random isometry.
fn isotropic_family(g: &ScalarProduct, k: usize, seed: u64) -> Vec<Vector> {
    let (p, _) = g.signature();
    let n = g.dim();
    let mut rng = sampling::rng(seed);
    let a = g.random_isometry(&mut rng, 4);
    (0..k)
        .map(|i| a.mul_vec(&(0..n).map(|j| int((j == i || j == p + i) as i64)).collect::<Vec<_>>()))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_of_orthogonal_combination(sig in signature(), seed in any::<u64>(), a in rational(), b in rational()) {
        let g = metric(sig);
        let mut rng = sampling::rng(seed);
        let x = g.random_vector(&mut rng);
        let y0 = g.random_vector(&mut rng);
        let (ex, gxy) = (g.eps(&x), g.g(&x, &y0));
        let y = combo(&ex, &y0, &-gxy, &x);
        prop_assume!(!ex.is_zero());
        prop_assert!(g.g(&x, &y).is_zero());
        prop_assert_eq!(g.eps(&combo(&a, &x, &b, &y)), &a * &a * g.eps(&x) + &b * &b * g.eps(&y));
    }

    #[test]
    fn null_decompose_postconditions(sig in indefinite(), seed in any::<u64>()) {
        let g = metric(sig);
        let mut rng = sampling::rng(seed);
        let n = g.random_null(&mut rng).unwrap();
        let (s, t) = g.null_decompose(&n).unwrap();
        prop_assert_eq!(combo(&int(1), &s, &int(1), &t), n);
        prop_assert!(g.g(&s, &t).is_zero());
        prop_assert!((g.eps(&s) + g.eps(&t)).is_zero());
        prop_assert!(!g.eps(&s).is_zero());
    }

    #[test]
    fn isotropic_supplement_postconditions(sig in indefinite(), seed in any::<u64>(), k in 1usize..=2) {
        let g = metric(sig);
        let k = k.min(sig.0.min(sig.1));
        let ns = isotropic_family(&g, k, seed);
        let ms = g.isotropic_supplement(&ns).unwrap();
        for i in 0..k {
            for j in 0..k {
                prop_assert!(g.g(&ms[i], &ms[j]).is_zero());
                prop_assert_eq!(g.g(&ns[i], &ms[j]), int((i == j) as i64));
            }
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(sig in signature(), ops in prop::collection::vec((0usize..4, 0usize..4, nonzero_rational()), 1..8)) {
        let g = metric(sig);
        let n = g.dim();
        // product of elementary shears, integer-valued after clearing the factor
        let mut a = Matrix::<Rational>::identity(n);
        for (i, j, c) in ops {
            let (i, j) = (i % n, j % n);
            if i == j {
                continue;
            }
            let c = Rational::from_integer(c.numer().clone());
            let shear = Matrix::from_fn(n, n, |r, s| if r == s { int(1) } else if (r, s) == (i, j) { c.clone() } else { int(0) });
            a = a.mul(&shear);
        }
        prop_assert_eq!(a.det(), int(1));
        let h = ScalarProduct::new(a.transpose().mul(g.gram()).mul(&a)).unwrap();
        prop_assert_eq!(h.signature(), sig);
    }
}
