use num_traits::Zero;
use rand::Rng;

use super::{index_tuples, orbit_representative, CurvatureTensor, TensorError};
use crate::exactnum::{int, rat, Matrix, Rational};
use crate::sampling;
use crate::space::ScalarProduct;

/// `μ·R¹` with `R¹(X,Y,Z,W) = g(Y,Z)g(X,W) − g(X,Z)g(Y,W)`.
pub fn constant_curvature(g: &ScalarProduct, mu: &Rational) -> CurvatureTensor {
    let gm = g.gram();
    CurvatureTensor::from_fn(g, |[i, j, k, l]| {
        if mu.is_zero() {
            return Rational::zero();
        }
        let v = &gm[(j, k)] * &gm[(i, l)] - &gm[(i, k)] * &gm[(j, l)];
        v * mu
    })
}

/// `g(JX, Y) = -g(X, JY)`, i.e. `G·J` antisymmetric.
pub fn is_skew_adjoint(g: &ScalarProduct, j: &Matrix<Rational>) -> bool {
    let gj = g.gram().mul(j);
    gj.add(&gj.transpose()).is_zero()
}

/// `R^J(X,Y,Z,W) = g(JX,Z)g(JY,W) − g(JY,Z)g(JX,W) + 2g(JX,Y)g(JZ,W)`.
pub fn from_skew(g: &ScalarProduct, j: &Matrix<Rational>) -> Result<CurvatureTensor, TensorError> {
    check_square(g, j)?;
    if !is_skew_adjoint(g, j) {
        return Err(TensorError::NotSkewAdjoint(1));
    }
    Ok(skew_tensor(g, j))
}

fn skew_tensor(g: &ScalarProduct, j: &Matrix<Rational>) -> CurvatureTensor {
    // b[i][k] = g(J e_i, e_k)
    let b = j.transpose().mul(g.gram());
    CurvatureTensor::from_fn(g, |[i, jj, k, l]| {
        &b[(i, k)] * &b[(jj, l)] - &b[(jj, k)] * &b[(i, l)] + int(2) * &b[(i, jj)] * &b[(k, l)]
    })
}

fn check_square(g: &ScalarProduct, m: &Matrix<Rational>) -> Result<(), TensorError> {
    let n = g.dim();
    if m.rows() != n || m.cols() != n {
        return Err(TensorError::DimensionMismatch { expected: n, got: m.rows().max(m.cols()) });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliffordItem {
    pub mu: Rational,
    pub j: Matrix<Rational>,
    /// `J² = c·id`.
    pub c: Rational,
}

/// Coefficients and endomorphisms of `μ₀R¹ + Σ μ_i R^{J_i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiCliffordSpec {
    pub mu0: Rational,
    pub items: Vec<CliffordItem>,
}

impl QuasiCliffordSpec {
    /// Checks skew-adjointness and `J_iJ_j + J_jJ_i = 2δ_ij c_i·id`.
    /// Reported indices are 1-based.
    pub fn check(&self, g: &ScalarProduct) -> Result<(), TensorError> {
        let n = g.dim();
        for (i, it) in self.items.iter().enumerate() {
            check_square(g, &it.j)?;
            if !is_skew_adjoint(g, &it.j) {
                return Err(TensorError::NotSkewAdjoint(i + 1));
            }
        }
        for (a, x) in self.items.iter().enumerate() {
            for (b, y) in self.items.iter().enumerate().skip(a) {
                let lhs = x.j.mul(&y.j).add(&y.j.mul(&x.j));
                let rhs = if a == b {
                    Matrix::identity(n).scale(&(int(2) * &x.c))
                } else {
                    Matrix::zeros(n, n)
                };
                if lhs != rhs {
                    return Err(TensorError::HurwitzViolation(a + 1, b + 1));
                }
            }
        }
        Ok(())
    }
}

/// `μ₀R¹ + Σ μ_i R^{J_i}` after checking the family's relations.
pub fn quasi_clifford(g: &ScalarProduct, spec: &QuasiCliffordSpec) -> Result<CurvatureTensor, TensorError> {
    spec.check(g)?;
    let mut r = constant_curvature(g, &spec.mu0);
    for it in &spec.items {
        if !it.mu.is_zero() {
            r = r.add(&skew_tensor(g, &it.j).scale(&it.mu));
        }
    }
    Ok(r)
}

/// `(h∧k)(X,Y,Z,W) = h(X,W)k(Y,Z) + h(Y,Z)k(X,W) − h(X,Z)k(Y,W) − h(Y,W)k(X,Z)`.
pub fn kulkarni_nomizu(
    g: &ScalarProduct,
    h: &Matrix<Rational>,
    k: &Matrix<Rational>,
) -> Result<CurvatureTensor, TensorError> {
    check_square(g, h)?;
    check_square(g, k)?;
    if !h.is_symmetric() {
        return Err(TensorError::NotSymmetric("h"));
    }
    if !k.is_symmetric() {
        return Err(TensorError::NotSymmetric("k"));
    }
    Ok(CurvatureTensor::from_fn(g, |[x, y, z, w]| {
        &h[(x, w)] * &k[(y, z)] + &h[(y, z)] * &k[(x, w)] - &h[(x, z)] * &k[(y, w)] - &h[(y, w)] * &k[(x, z)]
    }))
}

/// `(1/3)(R_ijkl + R_jkil + R_kijl)`, the totally antisymmetric part of a
/// tensor with both pair antisymmetries and pair symmetry.
pub fn cyclic_part(r: &CurvatureTensor) -> CurvatureTensor {
    let third = rat(1, 3);
    CurvatureTensor::from_fn(r.metric(), |[i, j, k, l]| {
        (r.get([i, j, k, l]) + r.get([j, k, i, l]) + r.get([k, i, j, l])) * &third
    })
}

/// Random integer components, projected onto algebraic curvature tensors:
/// antisymmetrize both pairs, symmetrize under pair exchange, then subtract
/// the totally antisymmetric part.
pub fn random_curvature(g: &ScalarProduct, seed: u64, magnitude: i64) -> Result<CurvatureTensor, TensorError> {
    if magnitude < 1 {
        return Err(TensorError::InvalidMagnitude);
    }
    let mut rng = sampling::rng(seed);
    let raw = CurvatureTensor::from_fn(g, |_| int(rng.gen_range(-magnitude..=magnitude)));
    let r = symmetrize(&raw);
    let r = r.sub(&cyclic_part(&r));
    let report = r.validate();
    if !report.is_valid() {
        return Err(TensorError::Invalid(report));
    }
    Ok(r)
}

/// Averages over the eight pair symmetries (with their signs).
pub fn symmetrize(r: &CurvatureTensor) -> CurvatureTensor {
    let half = rat(1, 2);
    let a = CurvatureTensor::from_fn(r.metric(), |[i, j, k, l]| (r.get([i, j, k, l]) - r.get([j, i, k, l])) * &half);
    let b = CurvatureTensor::from_fn(r.metric(), |[i, j, k, l]| (a.get([i, j, k, l]) - a.get([i, j, l, k])) * &half);
    CurvatureTensor::from_fn(r.metric(), |[i, j, k, l]| (b.get([i, j, k, l]) + b.get([k, l, i, j])) * &half)
}

/// The six components determining a curvature tensor in dimension 3, as
/// 0-based tuples: `R₂₁₁₃, R₁₂₂₃, R₁₃₃₂, R₂₁₁₂, R₃₁₁₃, R₃₂₂₃`.
pub const SIX_COMPONENTS: [[usize; 4]; 6] =
    [[1, 0, 0, 2], [0, 1, 1, 2], [0, 2, 2, 1], [1, 0, 0, 1], [2, 0, 0, 2], [2, 1, 1, 2]];

/// The dimension-3 tensor with the given values of [`SIX_COMPONENTS`].
pub fn from_six_components(g: &ScalarProduct, values: &[Rational; 6]) -> Result<CurvatureTensor, TensorError> {
    if g.dim() != 3 {
        return Err(TensorError::DimensionMismatch { expected: 3, got: g.dim() });
    }
    let mut reps = Vec::new();
    for (t, v) in SIX_COMPONENTS.iter().zip(values) {
        let (rep, s) = orbit_representative(*t);
        reps.push((rep, if s > 0 { v.clone() } else { -v.clone() }));
    }
    let r = CurvatureTensor::from_orbits(g, |rep| {
        reps.iter().find(|(u, _)| *u == rep).map(|(_, v)| v.clone()).unwrap_or_else(Rational::zero)
    });
    let report = r.validate();
    if !report.is_valid() {
        return Err(TensorError::Invalid(report));
    }
    Ok(r)
}

/// Dimension-3 tensor with `R₂₁₁₂ = a`, `R₃₁₁₃ = b`, `R₃₂₂₃ = c` and the
/// mixed components zero.
pub fn diagonal_dim3(g: &ScalarProduct, a: &Rational, b: &Rational, c: &Rational) -> Result<CurvatureTensor, TensorError> {
    let z = Rational::zero();
    from_six_components(g, &[z.clone(), z.clone(), z, a.clone(), b.clone(), c.clone()])
}

/// Adds `δ` to the component `t` and to its whole symmetry orbit. Orbits
/// with at most three distinct indices carry no Bianchi constraint, so the
/// result is again a curvature tensor.
pub fn perturb_orbit(r: &CurvatureTensor, t: [usize; 4], delta: &Rational) -> Result<CurvatureTensor, TensorError> {
    let (rep, s) = orbit_representative(t);
    let d = if s >= 0 { delta.clone() } else { -delta.clone() };
    let bump = CurvatureTensor::from_orbits(r.metric(), |u| if u == rep && s != 0 { d.clone() } else { Rational::zero() });
    let out = r.add(&bump);
    let report = out.validate();
    if !report.is_valid() {
        return Err(TensorError::Invalid(report));
    }
    Ok(out)
}

/// Orbit representatives whose orbit is not forced to vanish and that
/// involve at most three distinct indices.
pub fn free_orbits(n: usize) -> Vec<[usize; 4]> {
    let mut out: Vec<[usize; 4]> = index_tuples(n)
        .filter(|t| {
            let (rep, s) = orbit_representative(*t);
            let mut idx = t.to_vec();
            idx.sort();
            idx.dedup();
            rep == *t && s != 0 && idx.len() <= 3
        })
        .collect();
    out.dedup();
    out
}
