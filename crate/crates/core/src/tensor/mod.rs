//! Algebraic curvature tensors.
//!
//! Components are stored densely as `R[i][j][k][l] = R(E_i, E_j, E_k, E_l)`
//! in the ambient basis, indices 0-based in code and 1-based in files and
//! user-facing messages.

mod build;
pub mod catalog;
pub mod io;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::exactnum::{format_rational, Matrix, Rational};
use crate::space::{ScalarProduct, SpaceError};

pub use build::{
    constant_curvature, cyclic_part, diagonal_dim3, free_orbits, from_six_components, from_skew,
    is_skew_adjoint, kulkarni_nomizu, perturb_orbit, quasi_clifford, random_curvature, symmetrize,
    CliffordItem, QuasiCliffordSpec, SIX_COMPONENTS,
};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum TensorError {
    #[error("endomorphism {0} is not skew-adjoint")]
    NotSkewAdjoint(usize),
    #[error("Hurwitz-type relation fails for the pair ({0}, {1})")]
    HurwitzViolation(usize, usize),
    #[error("{0} is not symmetric")]
    NotSymmetric(&'static str),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("magnitude must be at least 1")]
    InvalidMagnitude,
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("constructed tensor failed validation: {0}")]
    Invalid(ValidationReport),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// The identities every algebraic curvature tensor satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Identity {
    /// `R(X,Y,Z,W) = -R(Y,X,Z,W)`
    FirstPairAntisymmetry,
    /// `R(X,Y,Z,W) = -R(X,Y,W,Z)`
    SecondPairAntisymmetry,
    /// `R(X,Y,Z,W) = R(Z,W,X,Y)`
    PairSymmetry,
    /// `R(X,Y,Z,W) + R(Y,Z,X,W) + R(Z,X,Y,W) = 0`
    Bianchi,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::FirstPairAntisymmetry => "antisymmetry R(X,Y,Z,W) = -R(Y,X,Z,W)",
            Identity::SecondPairAntisymmetry => "antisymmetry R(X,Y,Z,W) = -R(X,Y,W,Z)",
            Identity::PairSymmetry => "pair symmetry R(X,Y,Z,W) = R(Z,W,X,Y)",
            Identity::Bianchi => "first Bianchi identity",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub identity: Identity,
    /// 0-based component indices.
    pub indices: [usize; 4],
    /// The defect, e.g. `R[i][j][k][l] + R[j][i][k][l]`.
    pub residual: Rational,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k, l] = self.indices.map(|x| x + 1);
        write!(
            f,
            "{} violated at (i,j,k,l)=({i},{j},{k},{l}): residual {}",
            self.identity,
            format_rational(&self.residual)
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, identity: Identity) -> usize {
        self.violations.iter().filter(|v| v.identity == identity).count()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "all identities hold");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq)]
pub struct CurvatureTensor {
    g: ScalarProduct,
    comps: Vec<Rational>,
}

impl fmt::Debug for CurvatureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        write!(f, "CurvatureTensor(dim {n}, [")?;
        let mut first = true;
        for t in index_tuples(n) {
            let v = self.get(t);
            if !v.is_zero() {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "R{}{}{}{}={}", t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1, v)?;
            }
        }
        write!(f, "])")
    }
}

/// All `(i,j,k,l)` in `0..n`, lexicographically.
pub fn index_tuples(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n * n * n * n).map(move |c| [c / (n * n * n), (c / (n * n)) % n, (c / n) % n, c % n])
}

/// The images of `t` under the eight symmetries generated by the two pair
/// antisymmetries and pair exchange, with the sign each symmetry carries.
pub fn orbit(t: [usize; 4]) -> [([usize; 4], i8); 8] {
    let [i, j, k, l] = t;
    [
        ([i, j, k, l], 1),
        ([j, i, k, l], -1),
        ([i, j, l, k], -1),
        ([j, i, l, k], 1),
        ([k, l, i, j], 1),
        ([l, k, i, j], -1),
        ([k, l, j, i], -1),
        ([l, k, j, i], 1),
    ]
}

/// Smallest tuple in the orbit of `t`, and the sign with `R[t] = sign·R[rep]`.
/// The sign is 0 when the symmetries force `R[t] = 0`.
pub fn orbit_representative(t: [usize; 4]) -> ([usize; 4], i8) {
    let orb = orbit(t);
    let rep = orb.iter().map(|(u, _)| *u).min().unwrap();
    let signs: Vec<i8> = orb.iter().filter(|(u, _)| *u == rep).map(|(_, s)| *s).collect();
    let forced_zero = orb.iter().filter(|(u, _)| *u == t).any(|(_, s)| *s < 0);
    if forced_zero {
        return (rep, 0);
    }
    // R[t] = s·R[image] for each (image, s); the rep appears with a unique sign
    (rep, signs[0])
}

impl CurvatureTensor {
    pub fn zero(g: &ScalarProduct) -> Self {
        let n = g.dim();
        CurvatureTensor { g: g.clone(), comps: vec![Rational::zero(); n * n * n * n] }
    }

    /// Builds a tensor from an arbitrary component function. The result is
    /// not validated.
    pub fn from_fn(g: &ScalarProduct, mut f: impl FnMut([usize; 4]) -> Rational) -> Self {
        let n = g.dim();
        CurvatureTensor { g: g.clone(), comps: index_tuples(n).map(&mut f).collect() }
    }

    /// Fills every component from the values given on orbit representatives.
    pub fn from_orbits(g: &ScalarProduct, mut rep_value: impl FnMut([usize; 4]) -> Rational) -> Self {
        CurvatureTensor::from_fn(g, |t| {
            let (rep, s) = orbit_representative(t);
            match s {
                0 => Rational::zero(),
                1 => rep_value(rep),
                _ => -rep_value(rep),
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn metric(&self) -> &ScalarProduct {
        &self.g
    }

    pub fn components(&self) -> &[Rational] {
        &self.comps
    }

    fn offset(&self, t: [usize; 4]) -> usize {
        let n = self.dim();
        ((t[0] * n + t[1]) * n + t[2]) * n + t[3]
    }

    pub fn get(&self, t: [usize; 4]) -> &Rational {
        &self.comps[self.offset(t)]
    }

    /// Sets a single component, leaving its symmetric images untouched.
    pub fn set_raw(&mut self, t: [usize; 4], v: Rational) {
        let o = self.offset(t);
        self.comps[o] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }

    /// Checks all four identity families at every index tuple.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for t @ [i, j, k, l] in index_tuples(n) {
            let r = self.get(t);
            let checks = [
                (Identity::FirstPairAntisymmetry, r + self.get([j, i, k, l])),
                (Identity::SecondPairAntisymmetry, r + self.get([i, j, l, k])),
                (Identity::PairSymmetry, r - self.get([k, l, i, j])),
                (Identity::Bianchi, r + self.get([j, k, i, l]) + self.get([k, i, j, l])),
            ];
            for (identity, residual) in checks {
                if !residual.is_zero() {
                    violations.push(Violation { identity, indices: t, residual });
                }
            }
        }
        violations.sort_by_key(|v| v.identity);
        ValidationReport { violations }
    }

    pub fn check_dims(&self, vs: &[&[Rational]]) -> Result<(), TensorError> {
        for v in vs {
            if v.len() != self.dim() {
                return Err(TensorError::DimensionMismatch { expected: self.dim(), got: v.len() });
            }
        }
        Ok(())
    }

    pub fn eval(
        &self,
        x: &[Rational],
        y: &[Rational],
        z: &[Rational],
        w: &[Rational],
    ) -> Result<Rational, TensorError> {
        self.check_dims(&[x, y, z, w])?;
        Ok(self.ev(x, y, z, w))
    }

    /// [`eval`](Self::eval) without dimension checks.
    pub fn ev(&self, x: &[Rational], y: &[Rational], z: &[Rational], w: &[Rational]) -> Rational {
        let n = self.dim();
        let mut acc = Rational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                let mut inner = Rational::zero();
                for k in 0..n {
                    if z[k].is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        let r = self.get([i, j, k, l]);
                        if r.is_zero() || w[l].is_zero() {
                            continue;
                        }
                        inner += r * &z[k] * &w[l];
                    }
                }
                acc += xy * inner;
            }
        }
        acc
    }

    pub fn add(&self, other: &CurvatureTensor) -> CurvatureTensor {
        assert_eq!(self.g, other.g, "tensors over different scalar products");
        CurvatureTensor {
            g: self.g.clone(),
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> CurvatureTensor {
        CurvatureTensor { g: self.g.clone(), comps: self.comps.iter().map(|a| a * s).collect() }
    }

    pub fn sub(&self, other: &CurvatureTensor) -> CurvatureTensor {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    /// `R + μ·R¹`.
    pub fn shift(&self, mu: &Rational) -> CurvatureTensor {
        self.add(&constant_curvature(&self.g, mu))
    }

    /// `R'(X,Y,Z,W) = R(AX, AY, AZ, AW)`, a tensor over the pulled-back
    /// form `AᵀGA`. For an isometry `A` the form is unchanged.
    pub fn pullback(&self, a: &Matrix<Rational>) -> Result<CurvatureTensor, TensorError> {
        let n = self.dim();
        let g = ScalarProduct::new(a.transpose().mul(self.g.gram()).mul(a))?;
        let mut cur = self.comps.clone();
        // contract one slot at a time; the transformed slot moves to the back
        for _ in 0..4 {
            let mut next = vec![Rational::zero(); n * n * n * n];
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for i in 0..n {
                            let mut acc = Rational::zero();
                            for x in 0..n {
                                let r = &cur[((x * n + b) * n + c) * n + d];
                                let ax = &a[(x, i)];
                                if !r.is_zero() && !ax.is_zero() {
                                    acc += r * ax;
                                }
                            }
                            next[((b * n + c) * n + d) * n + i] = acc;
                        }
                    }
                }
            }
            cur = next;
        }
        Ok(CurvatureTensor { g, comps: cur })
    }
}
