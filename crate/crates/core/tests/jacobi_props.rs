mod common;

use common::{metric, signature};
use jortho::exactnum::{int, Rational};
use jortho::jacobi::{jacobi_op, reduced_op, spectrum, Raised};
use jortho::sampling;
use jortho::tensor::{catalog, constant_curvature, random_curvature, CurvatureTensor};
use num_traits::Zero;
use proptest::prelude::*;

/// A random tensor or a catalog tensor, so that diagonalizable spectra with
/// repeated eigenvalues show up.
fn tensor(sig: (usize, usize), seed: u64) -> CurvatureTensor {
    let (p, q) = sig;
    let g = metric(sig);
    if seed % 2 == 0 {
        return random_curvature(&g, seed, 4).unwrap();
    }
    let families = catalog::families_for(p, q);
    let family = families[(seed / 2) as usize % families.len()];
    let mut rng = sampling::rng(seed);
    let count = catalog::coefficient_count(family, p, q).unwrap();
    let mus: Vec<Rational> = (0..count).map(|_| sampling::small_rational(&mut rng, 5, 2)).collect();
    catalog::family_tensor(family, p, q, &mus).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn operator_identities(sig in signature(), seed in any::<u64>()) {
        let r = tensor(sig, seed);
        let g = r.metric();
        let raised = Raised::new(&r);
        let mut rng = sampling::rng(seed ^ 0x55);
        let (x, y) = (g.random_vector(&mut rng), g.random_vector(&mut rng));
        let jxy = raised.apply(&x, &y);
        prop_assert_eq!(g.g(&jxy, &y), g.g(&raised.apply(&y, &x), &x));
        prop_assert!(raised.apply(&x, &x).iter().all(Zero::is_zero));
        prop_assert!(g.g(&jxy, &x).is_zero());
        // g(J_X Y, W) = R(Y, X, X, W) for every basis vector W
        for a in 0..g.dim() {
            let w: Vec<Rational> = (0..g.dim()).map(|b| int((a == b) as i64)).collect();
            prop_assert_eq!(g.g(&jxy, &w), r.ev(&y, &x, &x, &w));
        }
    }

    #[test]
    fn diagonalizable_spectra_decompose_the_complement(sig in signature(), seed in any::<u64>()) {
        let r = tensor(sig, seed);
        let g = r.metric();
        let mut rng = sampling::rng(seed ^ 0xaa);
        let x = g.random_nonnull(&mut rng);
        let op = reduced_op(&r, &x).unwrap();
        let s = spectrum(&op).unwrap();
        prop_assume!(s.diagonalizable);
        let total: usize = s.items.iter().map(|i| i.geo_mult).sum();
        prop_assert_eq!(total, g.dim() - 1);
        let bases: Vec<&[Vec<Rational>]> = s.items.iter().filter_map(|i| i.basis.rational()).collect();
        for (i, a) in bases.iter().enumerate() {
            for b in &bases[i + 1..] {
                for u in a.iter() {
                    for v in b.iter() {
                        prop_assert!(g.g(u, v).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn unit_tensor_has_unit_reduced_spectrum(sig in signature(), seed in any::<u64>()) {
        let g = metric(sig);
        let r1 = constant_curvature(&g, &int(1));
        let mut rng = sampling::rng(seed);
        let x = g.random_nonnull(&mut rng);
        let s = spectrum(&reduced_op(&r1, &x).unwrap()).unwrap();
        prop_assert_eq!(s.items.len(), 1);
        prop_assert_eq!(s.items[0].lambda.as_rational(), Some(&int(1)));
        prop_assert_eq!(s.items[0].geo_mult, g.dim() - 1);
        let full = spectrum(&jacobi_op(&r1, &x).unwrap()).unwrap();
        prop_assert!(full.item_for(&int(0)).is_some());
    }
}
