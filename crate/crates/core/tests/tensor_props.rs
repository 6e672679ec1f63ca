mod common;

use common::{metric, nonzero_rational, rational, signature, vector};
use jortho::exactnum::{int, Matrix, Rational};
use jortho::sampling;
use jortho::tensor::{
    catalog, constant_curvature, from_skew, io, kulkarni_nomizu, quasi_clifford, random_curvature, CurvatureTensor,
};
use num_traits::Zero;
use proptest::prelude::*;

fn symmetric(n: usize, v: &[Rational]) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |i, j| v[i.min(j) * n + i.max(j)].clone())
}

fn clifford_case() -> impl Strategy<Value = (&'static str, (usize, usize))> {
    let cases: Vec<(&'static str, (usize, usize))> = common::SIGNATURES
        .iter()
        .flat_map(|&(p, q)| catalog::FAMILIES.iter().filter(move |f| catalog::available(f, p, q)).map(move |&f| (f, (p, q))))
        .collect();
    prop::sample::select(cases)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructors_produce_valid_tensors(sig in signature(), seed in any::<u64>(), mu in rational(), h in vector(16), k in vector(16), s in vector(16)) {
        let g = metric(sig);
        let n = g.dim();
        prop_assert!(random_curvature(&g, seed, 4).unwrap().validate().is_valid());
        prop_assert!(constant_curvature(&g, &mu).validate().is_valid());
        let kn = kulkarni_nomizu(&g, &symmetric(n, &h), &symmetric(n, &k)).unwrap();
        prop_assert!(kn.validate().is_valid());
        // J = G⁻¹A with A antisymmetric is skew-adjoint
        let a = Matrix::from_fn(n, n, |i, j| if i < j { s[i * n + j].clone() } else if i > j { -s[j * n + i].clone() } else { int(0) });
        let j = g.gram_inverse().mul(&a);
        prop_assert!(from_skew(&g, &j).unwrap().validate().is_valid());
    }

    #[test]
    fn catalog_tensors_are_valid((family, (p, q)) in clifford_case(), seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let count = catalog::coefficient_count(family, p, q).unwrap();
        let mus: Vec<Rational> = (0..count).map(|_| sampling::small_rational(&mut rng, 6, 4)).collect();
        prop_assert!(catalog::family_tensor(family, p, q, &mus).unwrap().validate().is_valid());
    }

    #[test]
    fn unit_tensor_matches_closed_form(sig in signature(), seed in any::<u64>()) {
        let g = metric(sig);
        let r1 = constant_curvature(&g, &int(1));
        let mut rng = sampling::rng(seed);
        let [x, y, z, w] = std::array::from_fn(|_| g.random_vector(&mut rng));
        prop_assert_eq!(r1.ev(&x, &y, &z, &w), g.g(&y, &z) * g.g(&x, &w) - g.g(&x, &z) * g.g(&y, &w));
    }

    #[test]
    fn quasi_clifford_without_maps_is_constant((family, (p, q)) in clifford_case(), mu0 in rational()) {
        let count = catalog::coefficient_count(family, p, q).unwrap();
        let mut mus = vec![Rational::zero(); count];
        mus[0] = mu0.clone();
        let spec = catalog::family_spec(family, p, q, &mus).unwrap();
        let g = metric((p, q));
        prop_assert_eq!(quasi_clifford(&g, &spec).unwrap(), constant_curvature(&g, &mu0));
    }

    #[test]
    fn skew_tensor_is_quadratic(sig in signature(), s in vector(16), t in nonzero_rational()) {
        let g = metric(sig);
        let n = g.dim();
        let a = Matrix::from_fn(n, n, |i, j| if i < j { s[i * n + j].clone() } else if i > j { -s[j * n + i].clone() } else { int(0) });
        let j = g.gram_inverse().mul(&a);
        let lhs = from_skew(&g, &j.scale(&t)).unwrap();
        prop_assert_eq!(lhs, from_skew(&g, &j).unwrap().scale(&(&t * &t)));
    }

    #[test]
    fn serialization_round_trips(sig in signature(), seed in any::<u64>()) {
        let r: CurvatureTensor = random_curvature(&metric(sig), seed, 6).unwrap().scale(&Rational::new(1.into(), 3.into()));
        let text = io::to_json(&r);
        let back = io::from_json(&text).unwrap();
        prop_assert_eq!(io::to_json(&back), text);
        prop_assert_eq!(back, r);
    }
}
