use num_traits::Zero;

use super::gen::{self, add, is_zero, scale, sub};
use super::{run, Instance, Outcome, SuiteConfig, SuiteError, SuiteReport};
use crate::exactnum::{Matrix, Rational};
use crate::jacobi::{reduced_op_with, spectrum, Raised};
use crate::sampling;
use crate::space::{ScalarProduct, Vector};
use crate::tensor::catalog;

const DEFAULT_SIGNATURES: [(usize, usize); 5] = [(0, 2), (0, 4), (1, 1), (1, 3), (2, 2)];

/// For random nonnull `X` and eigenvectors `Y` of the reduced Jacobi
/// operator with normalized eigenvalue `λ`: `J_Y X` lies in
/// `Span{X} ⊕ V_λ`, `Z = J_Y X − ε_Y λ X` is null, and `Z = 0` when no
/// eigenspace is degenerate.
pub fn suite_eigenstructure(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    cfg.validate()?;
    let sigs = cfg.signatures_or(&DEFAULT_SIGNATURES);
    let specs: Vec<(usize, usize, usize)> =
        sigs.iter().flat_map(|&(p, q)| (0..cfg.trials).map(move |t| (p, q, t))).collect();
    Ok(run("eigenstructure", cfg, specs, |index, &(p, q, t)| {
        let mut rng = sampling::rng_for(cfg.seed, index as u64);
        let g = ScalarProduct::canonical(p, q);
        let families = catalog::families_for(p, q);
        let family = families[t % families.len()];
        let (r, label) = gen::catalog_instance(family, p, q, &mut rng).expect("available family");
        let raised = Raised::new(&r);
        let mut inst = Instance::new(index, label, (p, q));
        inst.tensor(&r);

        let x = g.random_nonnull(&mut rng);
        let op = reduced_op_with(&raised, &g, &x).expect("X is nonnull");
        let spec = match spectrum(&op) {
            Ok(s) => s,
            Err(e) => {
                inst.expect(false, format!("reduced operator: {e}"));
                return inst.finish();
            }
        };
        if !spec.diagonalizable || !spec.is_rational() {
            inst.note("reduced operator not diagonalizable over the rationals at X");
            return inst.finish_as(Some(Outcome::Skipped));
        }
        let degenerate = spec.has_degenerate_eigenspace();
        if degenerate {
            inst.count("degenerate_instances", 1);
        }

        // [X, V_1 basis, V_2 basis, ...] and the block each column belongs to
        let mut columns = vec![x.clone()];
        let mut block = vec![usize::MAX];
        for (i, item) in spec.items.iter().enumerate() {
            for v in item.basis.rational().expect("rational spectrum") {
                columns.push(v.clone());
                block.push(i);
            }
        }
        let frame = Matrix::from_columns(&columns, g.dim());
        inst.expect(frame.rank() == g.dim(), "X and the eigenvectors do not span the space");

        for (i, item) in spec.items.iter().enumerate() {
            let lambda = item.lambda.as_rational().expect("rational spectrum").clone();
            let vs = item.basis.rational().expect("rational spectrum");
            let mut ys: Vec<Vector> = vs.to_vec();
            if vs.len() > 1 {
                let combo = vs.iter().fold(vec![Rational::zero(); g.dim()], |acc, v| {
                    add(&acc, &scale(&sampling::nonzero_rational(&mut rng, 5, 3), v))
                });
                ys.push(combo);
            }
            for y in ys {
                inst.expect(raised.apply(&x, &y) == scale(&(g.eps(&x) * &lambda), &y), "Y is not an eigenvector of J_X");
                let jyx = raised.apply(&y, &x);
                let coords = frame.solve(&jyx).expect("frame is a basis");
                let rebuilt = columns.iter().zip(&coords).fold(vec![Rational::zero(); g.dim()], |acc, (c, k)| {
                    add(&acc, &scale(k, c))
                });
                inst.expect(rebuilt == jyx, "decomposition does not sum to J_Y X");
                let outside = coords.iter().zip(&block).any(|(k, &b)| b != usize::MAX && b != i && !k.is_zero());
                inst.expect(!outside, "J_Y X has a component outside Span{X} ⊕ V_λ");
                let z = sub(&jyx, &scale(&(g.eps(&y) * &lambda), &x));
                inst.expect(g.eps(&z).is_zero(), "ε_Z ≠ 0");
                inst.count("eigenvectors_checked", 1);
                if is_zero(&z) {
                    inst.count("z_zero", 1);
                } else {
                    inst.count("z_null_nonzero", 1);
                    inst.expect(degenerate, "Z ≠ 0 although every eigenspace is nondegenerate");
                }
            }
        }
        inst.finish()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_instances_pass() {
        let rep = suite_eigenstructure(&SuiteConfig::new(4, 3)).unwrap();
        assert!(rep.passed, "{}", rep.to_json());
        assert!(rep.metrics["eigenvectors_checked"] > 0);
    }

    #[test]
    fn riemannian_z_vanishes() {
        let rep = suite_eigenstructure(&SuiteConfig::new(6, 9).with_signatures(&[(0, 4)])).unwrap();
        assert!(rep.passed);
        assert!(!rep.metrics.contains_key("z_null_nonzero"));
        assert_eq!(rep.counts.pass, 6);
    }
}
