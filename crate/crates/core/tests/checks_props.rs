mod common;

use common::{metric, rational, signature};
use jortho::checks::{
    constant_sectional, jacobi_diagonalizable, jacobi_dual, jacobi_orthogonal, k_stein, osserman_with, DualMode, Mode,
    Verdict,
};
use jortho::exactnum::Rational;
use jortho::sampling;
use jortho::tensor::{catalog, constant_curvature, diagonal_dim3, random_curvature, CurvatureTensor};
use proptest::prelude::*;

fn clifford_case() -> impl Strategy<Value = (&'static str, (usize, usize))> {
    let cases: Vec<(&'static str, (usize, usize))> = common::SIGNATURES
        .iter()
        .flat_map(|&(p, q)| {
            catalog::CLIFFORD_FAMILIES.iter().filter(move |f| catalog::available(f, p, q)).map(move |&f| (f, (p, q)))
        })
        .collect();
    prop::sample::select(cases)
}

fn catalog_tensor(family: &str, (p, q): (usize, usize), seed: u64) -> CurvatureTensor {
    let mut rng = sampling::rng(seed);
    let count = catalog::coefficient_count(family, p, q).unwrap();
    let mus: Vec<Rational> = (0..count).map(|_| sampling::small_rational(&mut rng, 6, 4)).collect();
    catalog::family_tensor(family, p, q, &mus).unwrap()
}

/// Constant, diagonal and random tensors in dimension 3 or 4.
fn mixed(sig: (usize, usize), seed: u64) -> CurvatureTensor {
    let g = metric(sig);
    let mut rng = sampling::rng(seed);
    match seed % 3 {
        0 => constant_curvature(&g, &sampling::small_rational(&mut rng, 5, 3)),
        1 if g.dim() == 3 => {
            let [a, b, c] = std::array::from_fn(|_| sampling::small_rational(&mut rng, 3, 1));
            diagonal_dim3(&g, &a, &b, &c).unwrap()
        }
        _ => random_curvature(&g, seed, 3).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn clifford_tensors_are_jacobi_orthogonal((family, sig) in clifford_case(), seed in any::<u64>()) {
        let r = catalog_tensor(family, sig, seed);
        prop_assert_eq!(jacobi_orthogonal(&r, Mode::Symbolic, 4, seed).verdict, Verdict::HoldsExact);
    }

    #[test]
    fn shifting_preserves_jacobi_orthogonality((family, sig) in clifford_case(), seed in any::<u64>(), mu in rational()) {
        let r = catalog_tensor(family, sig, seed).shift(&mu);
        prop_assert_eq!(jacobi_orthogonal(&r, Mode::Symbolic, 4, seed).verdict, Verdict::HoldsExact);
    }

    #[test]
    fn osserman_cross_check_is_consistent(sig in signature(), seed in any::<u64>()) {
        let r = if seed % 2 == 0 { random_curvature(&metric(sig), seed, 3).unwrap() } else {
            let fams = catalog::families_for(sig.0, sig.1);
            catalog_tensor(fams[(seed / 2) as usize % fams.len()], sig, seed)
        };
        prop_assert!(osserman_with(&r, Mode::Auto, 6, seed).is_ok());
    }

    #[test]
    fn symbolic_and_sampled_orthogonality_agree(sig in prop::sample::select(vec![(0, 3), (1, 2), (0, 4), (1, 3), (2, 2)]), seed in any::<u64>()) {
        let r = mixed(sig, seed);
        let sym = jacobi_orthogonal(&r, Mode::Symbolic, 4, seed);
        let smp = jacobi_orthogonal(&r, Mode::Sampled, 4, seed);
        prop_assert_eq!(sym.holds(), smp.holds());
    }

    #[test]
    fn constant_curvature_satisfies_everything(sig in signature(), mu in rational(), seed in any::<u64>()) {
        let r = constant_curvature(&metric(sig), &mu);
        prop_assert!(osserman_with(&r, Mode::Auto, 4, seed).unwrap().holds());
        prop_assert!(jacobi_dual(&r, DualMode::Full, 4, seed).holds());
        prop_assert!(jacobi_dual(&r, DualMode::Weak, 4, seed).holds());
        prop_assert!(jacobi_orthogonal(&r, Mode::Auto, 4, seed).holds());
        prop_assert!(constant_sectional(&r).holds());
        prop_assert!(jacobi_diagonalizable(&r, 4, seed).holds());
        let n = r.dim();
        let ks = k_stein(&r, n).unwrap();
        for (j, c) in ks.constants.iter().enumerate() {
            prop_assert_eq!(c, &(Rational::from_integer((n as i64 - 1).into()) * mu.pow(j as i32 + 1)));
        }
    }
}
