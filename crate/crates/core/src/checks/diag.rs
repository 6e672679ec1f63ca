use super::{sample_nonnull, PropertyReport, Verdict, Witness};
use crate::jacobi::{reduced_op_with, spectrum_unchecked, Raised};
use crate::tensor::CurvatureTensor;

/// Samples nonnull `X` (basis vectors first) and reports the first one whose
/// reduced Jacobi operator is not diagonalizable over the reals.
pub fn jacobi_diagonalizable(r: &CurvatureTensor, trials: usize, seed: u64) -> PropertyReport {
    let g = r.metric();
    let raised = Raised::new(r);
    let property = "jacobi-diagonalizable";
    for x in sample_nonnull(g, trials, seed) {
        let op = reduced_op_with(&raised, g, &x).expect("sampled vectors are nonnull");
        let s = spectrum_unchecked(&op);
        if s.diagonalizable {
            continue;
        }
        let mut w = Witness::new("reduced Jacobi operator is not diagonalizable")
            .vector("X", &x)
            .text("char_poly", s.normalized_char_poly.to_string());
        if s.complex_pairs > 0 {
            w = w.text("complex_pairs", s.complex_pairs.to_string());
        }
        if let Some(item) = s.items.iter().find(|i| i.geo_mult < i.alg_mult) {
            w = w
                .text("lambda", serde_json::to_string(&item.lambda.describe()).expect("serializable"))
                .text("alg_mult", item.alg_mult.to_string())
                .text("geo_mult", item.geo_mult.to_string());
        }
        return PropertyReport::new(property, Verdict::Fails, trials, seed).with_witness(w);
    }
    PropertyReport::new(property, Verdict::HoldsProbabilistic, trials, seed).with_bound("sampled-only")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Matrix, Rational};
    use crate::space::ScalarProduct;
    use crate::tensor::{constant_curvature, kulkarni_nomizu};

    #[test]
    fn nilpotent_example_fails_at_e3() {
        let g = ScalarProduct::canonical(1, 2);
        let h: Matrix<Rational> =
            Matrix::from_rows(vec![vec![int(-1), int(-1), int(0)], vec![int(-1), int(-1), int(0)], vec![int(0); 3]])
                .unwrap();
        let r = kulkarni_nomizu(&g, &h, g.gram()).unwrap();
        let rep = jacobi_diagonalizable(&r, 5, 0);
        assert_eq!(rep.verdict, Verdict::Fails);
        let w = rep.witness.unwrap();
        assert_eq!(w.get_vector("X").unwrap(), vec![int(0), int(0), int(1)]);
        assert_eq!(w.values["geo_mult"], "1");
    }

    #[test]
    fn constant_curvature_is_diagonalizable() {
        let g = ScalarProduct::canonical(2, 2);
        let rep = jacobi_diagonalizable(&constant_curvature(&g, &int(-2)), 8, 4);
        assert_eq!(rep.verdict, Verdict::HoldsProbabilistic);
        assert_eq!(rep.error_bound.as_deref(), Some("sampled-only"));
    }
}
