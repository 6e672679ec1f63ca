use num_traits::Zero;

use super::{sample_nonnull, PropertyReport, Verdict, Witness};
use crate::exactnum::quotient::QuotientRing;
use crate::exactnum::roots::isolate_square_free;
use crate::exactnum::{rat, Poly, RealRoot, Rational};
use crate::jacobi::{jacobi_op_with, reduced_op_with, spectrum_unchecked, EigenBasis, EigenItem, Raised};
use crate::space::{ScalarProduct, Vector};
use crate::tensor::CurvatureTensor;

/// Which eigenvectors the duality condition is imposed on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DualMode {
    /// Eigenvectors of the reduced operator on `X^⊥`; totally isotropic
    /// eigenspaces are skipped.
    #[default]
    Weak,
    /// Eigenvectors of `J_X` on the whole space, every eigenspace.
    Full,
}

impl DualMode {
    pub fn name(self) -> &'static str {
        match self {
            DualMode::Weak => "weak",
            DualMode::Full => "full",
        }
    }
}

/// Checks `J_X Y = ε_X λ Y ⇒ J_Y X = ε_Y λ X` at sampled nonnull `X`.
///
/// On an eigenspace with basis `Y_a` the implication for every `Y` is the
/// polarized condition `J(Y_a, Y_b)X = g(Y_a, Y_b)·λ·X` for all `a ≤ b`.
pub fn jacobi_dual(r: &CurvatureTensor, mode: DualMode, trials: usize, seed: u64) -> PropertyReport {
    let g = r.metric();
    let raised = Raised::new(r);
    for x in sample_nonnull(g, trials, seed) {
        let op = match mode {
            DualMode::Weak => reduced_op_with(&raised, g, &x).expect("sampled vectors are nonnull"),
            DualMode::Full => jacobi_op_with(&raised, g, &x),
        };
        let s = spectrum_unchecked(&op);
        let mut seen: Vec<Poly> = Vec::new();
        for item in &s.items {
            if mode == DualMode::Weak && item.totally_isotropic {
                continue;
            }
            let failure = match &item.basis {
                EigenBasis::Rational(ys) => rational_failure(&raised, g, &x, item, ys),
                EigenBasis::Algebraic { modulus, vectors } => {
                    if seen.contains(modulus) {
                        continue;
                    }
                    seen.push(modulus.clone());
                    algebraic_failure(&raised, g, &x, modulus, vectors)
                }
            };
            if let Some(w) = failure {
                return PropertyReport::new("jacobi-dual", Verdict::Fails, trials, seed)
                    .with_value("mode", mode.name())
                    .with_witness(w);
            }
        }
    }
    PropertyReport::new("jacobi-dual", Verdict::HoldsProbabilistic, trials, seed)
        .with_value("mode", mode.name())
        .with_bound("sampled-only")
}

fn residual(raised: &Raised, g: &ScalarProduct, x: &[Rational], a: &[Rational], b: &[Rational], lambda: &Rational) -> Vector {
    let gab = g.g(a, b) * lambda;
    raised.polarized_apply(a, b, x).iter().zip(x).map(|(j, xi)| j - &gab * xi).collect()
}

fn rational_failure(raised: &Raised, g: &ScalarProduct, x: &Vector, item: &EigenItem, ys: &[Vector]) -> Option<Witness> {
    let lambda = item.lambda.as_rational().expect("rational basis has a rational eigenvalue");
    for a in 0..ys.len() {
        for b in a..ys.len() {
            let res = residual(raised, g, x, &ys[a], &ys[b], lambda);
            if res.iter().all(Zero::is_zero) {
                continue;
            }
            // diagonal entries vanish when b is reached, so Y_a + Y_b fails
            let y: Vector = if a == b { ys[a].clone() } else { ys[a].iter().zip(&ys[b]).map(|(p, q)| p + q).collect() };
            let full = residual(raised, g, x, &y, &y, lambda);
            return Some(
                Witness::new("J_Y X differs from ε_Y·λ·X for an eigenvector Y of J_X")
                    .vector("X", x)
                    .vector("Y", &y)
                    .value("lambda", lambda)
                    .vector("residual", &full),
            );
        }
    }
    None
}

fn algebraic_failure(raised: &Raised, g: &ScalarProduct, x: &[Rational], modulus: &Poly, ys: &[Vec<Poly>]) -> Option<Witness> {
    let ring = QuotientRing::new(modulus);
    let theta = ring.theta();
    let half = rat(1, 2);
    let map = |z: &[Rational], p: &[Poly], q: &[Poly]| -> Vec<Poly> {
        let mut out = vec![Poly::zero(); raised.dim()];
        for (a, b, i, j, v) in raised.entries() {
            if z[*b].is_zero() || p[*i].is_zero() || q[*j].is_zero() {
                continue;
            }
            let t = ring.mul(&p[*i], &q[*j]).scale(&(v * &z[*b]));
            out[*a] = &out[*a] + &t;
        }
        out
    };
    let mut h = modulus.clone();
    let mut pair = None;
    for a in 0..ys.len() {
        for b in a..ys.len() {
            let j1 = map(x, &ys[a], &ys[b]);
            let j2 = map(x, &ys[b], &ys[a]);
            let gl = ring.mul(&ring.bilinear(g.gram(), &ys[a], &ys[b]), &theta);
            for (c, xc) in x.iter().enumerate() {
                let e = ring.reduce(&(&(&j1[c] + &j2[c]).scale(&half) - &gl.scale(xc)));
                let next = h.gcd(&e);
                if next.degree() < h.degree() && pair.is_none() {
                    pair = Some((a, b));
                }
                h = next;
            }
        }
    }
    let bad = modulus.exact_div(&h);
    let root = isolate_square_free(&bad).into_iter().next()?;
    let (a, b) = pair?;
    let lambda = match &root {
        RealRoot::Rational(q) => crate::exactnum::format_rational(q),
        RealRoot::Isolated(_) => serde_json::to_string(&root.describe()).expect("serializable"),
    };
    let text = |v: &[Poly]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    Some(
        Witness::new("J(Y_a, Y_b)X differs from g(Y_a, Y_b)·λ·X on an irrational eigenspace (coordinates are polynomials in λ)")
            .vector("X", x)
            .text_vector("Y_a", text(&ys[a]))
            .text_vector("Y_b", text(&ys[b]))
            .text("lambda", lambda),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::tensor::{catalog, constant_curvature, diagonal_dim3};

    #[test]
    fn osserman_families_are_dual() {
        let g = ScalarProduct::canonical(1, 2);
        let r = constant_curvature(&g, &int(2));
        for mode in [DualMode::Weak, DualMode::Full] {
            assert!(jacobi_dual(&r, mode, 6, 1).holds());
        }
        let r = catalog::family_tensor("quaternionic", 0, 4, &[int(1), int(2), int(2), int(2)]).unwrap();
        assert!(jacobi_dual(&r, DualMode::Weak, 6, 2).holds());
    }

    #[test]
    fn generic_diagonal_is_not_dual() {
        let g = ScalarProduct::canonical(0, 3);
        let r = diagonal_dim3(&g, &int(0), &int(2), &int(1)).unwrap();
        let rep = jacobi_dual(&r, DualMode::Weak, 10, 0);
        assert_eq!(rep.verdict, Verdict::Fails);
        let w = rep.witness.unwrap();
        if let (Some(x), Some(y), Some(l)) = (w.get_vector("X"), w.get_vector("Y"), w.get_value("lambda")) {
            let raised = Raised::new(&r);
            let ex = g.eps(&x);
            let ey = g.eps(&y);
            let jxy = raised.apply(&x, &y);
            assert!(jxy.iter().zip(&y).all(|(a, b)| a == &(&ex * &l * b)));
            let jyx = raised.apply(&y, &x);
            assert!(jyx.iter().zip(&x).any(|(a, b)| a != &(&ey * &l * b)));
        }
    }
}
