//! Jacobi-operator quantities as polynomials in the coordinates of `X`
//! (variables `offset..offset+n`) and `Y`.

use crate::exactnum::{MPoly, Matrix, Rational};
use crate::jacobi::Raised;
use crate::space::ScalarProduct;
use crate::tensor::CurvatureTensor;

fn exps(nvars: usize, vars: &[usize]) -> Vec<u8> {
    let mut e = vec![0u8; nvars];
    for &v in vars {
        e[v] += 1;
    }
    e
}

/// Entries `M[a][b]` of the matrix of `J_X`, quadratic in `X`.
pub fn jacobi_matrix(raised: &Raised, nvars: usize, xoff: usize) -> Vec<Vec<MPoly>> {
    let n = raised.dim();
    let mut m = vec![vec![MPoly::zero(nvars); n]; n];
    for (a, b, i, j, v) in raised.entries() {
        m[*a][*b].add_term(exps(nvars, &[xoff + i, xoff + j]), v.clone());
    }
    m
}

/// `J_X Y`, of degree 2 in `X` and 1 in `Y`.
pub fn jacobi_apply(raised: &Raised, nvars: usize, xoff: usize, yoff: usize) -> Vec<MPoly> {
    let mut out = vec![MPoly::zero(nvars); raised.dim()];
    for (a, b, i, j, v) in raised.entries() {
        out[*a].add_term(exps(nvars, &[yoff + b, xoff + i, xoff + j]), v.clone());
    }
    out
}

/// `g(u, v)` for vectors of polynomials.
pub fn bilinear(gram: &Matrix<Rational>, u: &[MPoly], v: &[MPoly]) -> MPoly {
    let nvars = u[0].nvars();
    let mut acc = MPoly::zero(nvars);
    for (a, ua) in u.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (c, vc) in v.iter().enumerate() {
            let gac = &gram[(a, c)];
            if !num_traits::Zero::is_zero(gac) && !vc.is_zero() {
                acc = &acc + &(ua * vc).scale(gac);
            }
        }
    }
    acc
}

/// The coordinate vector of `X` as linear polynomials.
pub fn coordinates(n: usize, nvars: usize, off: usize) -> Vec<MPoly> {
    (0..n).map(|i| MPoly::var(nvars, off + i)).collect()
}

/// `ε_X = g(X, X)`.
pub fn eps(g: &ScalarProduct, nvars: usize, off: usize) -> MPoly {
    let x = coordinates(g.dim(), nvars, off);
    bilinear(g.gram(), &x, &x)
}

/// `Q(X,Y) = ε_X·g(J_X Y, J_Y X) + g(X,Y)·g(J_X Y, J_X Y)` in `2n` variables
/// (`X` first). With `Ŷ = ε_X Y − g(X,Y)X` one has `Ŷ ⊥ X` and
/// `g(J_X Ŷ, J_Ŷ X) = ε_X²·Q(X,Y)`, so `Q ≡ 0` exactly when the tensor is
/// Jacobi-orthogonal.
pub fn jo_polynomial(r: &CurvatureTensor) -> MPoly {
    let g = r.metric();
    let n = g.dim();
    let nvars = 2 * n;
    let raised = Raised::new(r);
    let jxy = jacobi_apply(&raised, nvars, 0, n);
    let jyx = jacobi_apply(&raised, nvars, n, 0);
    let x = coordinates(n, nvars, 0);
    let y = coordinates(n, nvars, n);
    let first = &eps(g, nvars, 0) * &bilinear(g.gram(), &jxy, &jyx);
    let second = &bilinear(g.gram(), &x, &y) * &bilinear(g.gram(), &jxy, &jxy);
    &first + &second
}

/// `tr(J_X^j) − c_j·ε_X^j` for `j = 1..=cs.len()`, in `n` variables.
pub fn trace_residuals(r: &CurvatureTensor, cs: &[Rational]) -> Vec<MPoly> {
    let g = r.metric();
    let n = g.dim();
    let raised = Raised::new(r);
    let m = jacobi_matrix(&raised, n, 0);
    let e = eps(g, n, 0);
    let mut power = m.clone();
    let mut e_power = e.clone();
    let mut out = Vec::new();
    for (j, c) in cs.iter().enumerate() {
        if j > 0 {
            power = mat_mul(&power, &m);
            e_power = &e_power * &e;
        }
        let mut trace = MPoly::zero(n);
        for (a, row) in power.iter().enumerate() {
            trace = &trace + &row[a];
        }
        out.push(&trace - &e_power.scale(c));
    }
    out
}

fn mat_mul(a: &[Vec<MPoly>], b: &[Vec<MPoly>]) -> Vec<Vec<MPoly>> {
    let n = a.len();
    let nvars = a[0][0].nvars();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = MPoly::zero(nvars);
                    for k in 0..n {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&a[i][k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::tensor::{constant_curvature, random_curvature};

    #[test]
    fn symbolic_matrix_matches_numeric() {
        let g = ScalarProduct::canonical(1, 2);
        let r = random_curvature(&g, 3, 5).unwrap();
        let raised = Raised::new(&r);
        let m = jacobi_matrix(&raised, 3, 0);
        let x = vec![int(2), int(-1), int(3)];
        let numeric = raised.matrix(&x);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(m[a][b].eval(&x), numeric[(a, b)]);
            }
        }
    }

    #[test]
    fn constant_curvature_is_jacobi_orthogonal_and_stein() {
        let g = ScalarProduct::canonical(1, 3);
        let r = constant_curvature(&g, &int(2));
        assert!(jo_polynomial(&r).is_zero());
        // J_X = 2(ε_X·id − X⊗X^♭): tr J^j = 2^j (n−1) ε^j
        let res = trace_residuals(&r, &[int(6), int(12), int(24)]);
        assert!(res.iter().all(MPoly::is_zero));
    }

    #[test]
    fn jo_polynomial_degrees() {
        let g = ScalarProduct::canonical(0, 3);
        let r = random_curvature(&g, 9, 4).unwrap();
        let q = jo_polynomial(&r);
        assert!(!q.is_zero());
        assert!(q.block_degree(0..3).unwrap() <= 5);
        assert!(q.block_degree(3..6).unwrap() <= 3);
    }
}
