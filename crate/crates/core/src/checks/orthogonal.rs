use num_traits::Zero;

use super::{small_vectors, symbolic, Mode, PropertyReport, Verdict, Witness};
use crate::exactnum::{format_rational, identity_test, IdentityVerdict, Rational};
use crate::jacobi::Raised;
use crate::sampling;
use crate::space::{ScalarProduct, Vector};
use crate::tensor::CurvatureTensor;

/// Total degree of the polynomial `Q` behind the Jacobi-orthogonality test.
pub const JO_DEGREE: i64 = 8;

fn dot(g: &ScalarProduct, a: &[Rational], b: &[Rational]) -> Rational {
    g.g(a, b)
}

/// `g(J_X Y, J_Y X)`.
pub fn jo_value(raised: &Raised, g: &ScalarProduct, x: &[Rational], y: &[Rational]) -> Rational {
    dot(g, &raised.apply(x, y), &raised.apply(y, x))
}

/// `Q(X,Y) = ε_X·g(J_X Y, J_Y X) + g(X,Y)·g(J_X Y, J_X Y)`.
pub fn q_value(raised: &Raised, g: &ScalarProduct, x: &[Rational], y: &[Rational]) -> Rational {
    let jxy = raised.apply(x, y);
    let jyx = raised.apply(y, x);
    g.eps(x) * dot(g, &jxy, &jyx) + g.g(x, y) * dot(g, &jxy, &jxy)
}

fn weight(v: &[Rational]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

/// A pair of orthogonal nonnull vectors with `g(J_X Y, J_Y X) ≠ 0`.
///
/// Pairs from `{-1,0,1}^n` are tried first, ordered by total weight, then
/// weight of `X`, then the order of [`small_vectors`]. Random pairs
/// `(X, ε_X Y − g(X,Y)X)` follow.
pub fn search_orthogonal_witness(r: &CurvatureTensor, seed: u64) -> Option<(Vector, Vector, Rational)> {
    let g = r.metric();
    let n = g.dim();
    let raised = Raised::new(r);
    let by_weight: Vec<Vec<Vector>> = {
        let mut groups = vec![Vec::new(); n + 1];
        for v in small_vectors(n) {
            if !g.eps(&v).is_zero() {
                groups[weight(&v)].push(v);
            }
        }
        groups
    };
    for total in 2..=2 * n {
        for wx in 1..=n.min(total - 1) {
            let wy = total - wx;
            if wy > n {
                continue;
            }
            for x in &by_weight[wx] {
                for y in &by_weight[wy] {
                    if !g.g(x, y).is_zero() {
                        continue;
                    }
                    let v = jo_value(&raised, g, x, y);
                    if !v.is_zero() {
                        return Some((x.clone(), y.clone(), v));
                    }
                }
            }
        }
    }
    let mut rng = sampling::rng_for(seed, 0x10_0001);
    for _ in 0..2000 {
        let x = g.random_nonnull(&mut rng);
        let y0 = g.random_vector(&mut rng);
        let (ex, gxy) = (g.eps(&x), g.g(&x, &y0));
        let y: Vector = y0.iter().zip(&x).map(|(b, a)| &ex * b - &gxy * a).collect();
        if g.eps(&y).is_zero() {
            continue;
        }
        let v = jo_value(&raised, g, &x, &y);
        if !v.is_zero() {
            return Some((x, y, v));
        }
    }
    None
}

/// Decides whether `g(J_X Y, J_Y X) = 0` for all orthogonal nonnull `X, Y`.
pub fn jacobi_orthogonal(r: &CurvatureTensor, mode: Mode, trials: usize, seed: u64) -> PropertyReport {
    let g = r.metric();
    let n = g.dim();
    let symbolic = mode.symbolic_for(n);
    let property = "jacobi-orthogonal";
    let nonzero = if symbolic {
        let q = symbolic::jo_polynomial(r);
        if q.is_zero() {
            return PropertyReport::new(property, Verdict::HoldsExact, 0, seed);
        }
        None
    } else {
        let raised = Raised::new(r);
        let eval = |pt: &[Rational]| q_value(&raised, g, &pt[..n], &pt[n..]);
        match identity_test(eval, JO_DEGREE, 2 * n, trials.max(1), seed).expect("valid degree and trials") {
            IdentityVerdict::IdenticallyZero { error_bound } => {
                return PropertyReport::new(property, Verdict::HoldsProbabilistic, trials.max(1), seed)
                    .with_bound(format_rational(&error_bound));
            }
            IdentityVerdict::NonzeroWitness { point, value } => Some((point, value)),
        }
    };
    let trials = if symbolic { 0 } else { trials.max(1) };
    let report = PropertyReport::new(property, Verdict::Fails, trials, seed);
    match search_orthogonal_witness(r, seed) {
        Some((x, y, v)) => report.with_witness(
            Witness::new("g(J_X Y, J_Y X) is nonzero for orthogonal nonnull X, Y")
                .vector("X", &x)
                .vector("Y", &y)
                .value("value", &v),
        ),
        None => {
            let (point, value) = nonzero.unwrap_or_else(|| {
                let q = symbolic::jo_polynomial(r);
                match identity_test(|pt: &[Rational]| q.eval(pt), JO_DEGREE, 2 * n, 64, seed) {
                    Ok(IdentityVerdict::NonzeroWitness { point, value }) => (point, value),
                    _ => unreachable!("a nonzero polynomial vanishing at 64 random points"),
                }
            });
            report.with_witness(
                Witness::new("Q(X,Y) = ε_X·g(J_X Y, J_Y X) + g(X,Y)·g(J_X Y, J_X Y) is nonzero")
                    .vector("X", &point[..n])
                    .vector("Y", &point[n..])
                    .value("Q", &value),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::tensor::{catalog, constant_curvature, diagonal_dim3};

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn diagonal_example_witness() {
        let g = ScalarProduct::canonical(0, 3);
        let r = diagonal_dim3(&g, &int(0), &int(2), &int(1)).unwrap();
        let rep = jacobi_orthogonal(&r, Mode::Symbolic, 0, 0);
        assert_eq!(rep.verdict, Verdict::Fails);
        let w = rep.witness.unwrap();
        assert_eq!(w.get_vector("X").unwrap(), v(&[1, 1, 0]));
        assert_eq!(w.get_vector("Y").unwrap(), v(&[1, -1, 1]));
        assert_eq!(w.get_value("value").unwrap(), int(-3));
    }

    #[test]
    fn families_are_jacobi_orthogonal() {
        let g = ScalarProduct::canonical(1, 2);
        assert_eq!(jacobi_orthogonal(&constant_curvature(&g, &int(5)), Mode::Auto, 5, 1).verdict, Verdict::HoldsExact);
        let r = catalog::family_tensor("paracomplex", 2, 2, &[int(1), int(-1)]).unwrap();
        assert_eq!(jacobi_orthogonal(&r, Mode::Symbolic, 0, 0).verdict, Verdict::HoldsExact);
        let s = jacobi_orthogonal(&r, Mode::Sampled, 4, 9);
        assert_eq!(s.verdict, Verdict::HoldsProbabilistic);
        assert!(s.error_bound.is_some());
    }

    #[test]
    fn q_relates_to_projected_pair() {
        let g = ScalarProduct::canonical(1, 2);
        let r = crate::tensor::random_curvature(&g, 11, 5).unwrap();
        let raised = Raised::new(&r);
        let (x, y) = (v(&[1, 2, -1]), v(&[3, 0, 2]));
        let ex = g.eps(&x);
        let gxy = g.g(&x, &y);
        let yh: Vector = y.iter().zip(&x).map(|(b, a)| &ex * b - &gxy * a).collect();
        assert!(g.g(&x, &yh).is_zero());
        assert_eq!(jo_value(&raised, &g, &x, &yh), &ex * &ex * q_value(&raised, &g, &x, &y));
    }
}
