//! Jacobi operators and their exact spectra.
//!
//! `J_X Y = R(Y, X)X`, where `R(X,Y)Z` is defined by
//! `g(R(X,Y)Z, W) = R(X,Y,Z,W)`. Operator matrices act on columns: column
//! `b` holds the image of the `b`-th basis vector.
//!
//! Spectra are reported in normalized form: `λ` stands for the operator
//! eigenvalue `ε_X·λ`. The normalized characteristic polynomial is that of
//! `J_X / ε_X`, which is unchanged when `X` is rescaled.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactnum::quotient::{split_run, QuotientRing, Split};
use crate::exactnum::roots::{isolate_square_free, RootDescription};
use crate::exactnum::{char_poly, format_rational, rat, Matrix, Poly, RealRoot, Rational};
use crate::space::{ScalarProduct, SpaceError, Vector};
use crate::tensor::CurvatureTensor;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum JacobiError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("reduced operator undefined for null X")]
    NullBase,
    #[error("operator is not self-adjoint")]
    NotSelfAdjoint,
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// The tensor with its last index raised:
/// `(R(Z,X)Y)^a = Σ T[a][b][i][j]·z_b·x_i·y_j`, stored sparsely.
#[derive(Clone, Debug)]
pub struct Raised {
    n: usize,
    entries: Vec<(usize, usize, usize, usize, Rational)>,
}

impl Raised {
    pub fn new(r: &CurvatureTensor) -> Self {
        let n = r.dim();
        let ginv = r.metric().gram_inverse();
        let mut entries = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let mut v = Rational::zero();
                        for c in 0..n {
                            let gi = &ginv[(a, c)];
                            if gi.is_zero() {
                                continue;
                            }
                            let rc = r.get([b, i, j, c]);
                            if !rc.is_zero() {
                                v += gi * rc;
                            }
                        }
                        if !v.is_zero() {
                            entries.push((a, b, i, j, v));
                        }
                    }
                }
            }
        }
        Raised { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(usize, usize, usize, usize, Rational)] {
        &self.entries
    }

    /// `R(Z, X)Y`.
    pub fn curvature_map(&self, z: &[Rational], x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.n];
        for (a, b, i, j, v) in &self.entries {
            if z[*b].is_zero() || x[*i].is_zero() || y[*j].is_zero() {
                continue;
            }
            out[*a] += v * &z[*b] * &x[*i] * &y[*j];
        }
        out
    }

    /// `J_X Y`.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.curvature_map(y, x, x)
    }

    /// `J(X,Y)Z = ½(R(Z,X)Y + R(Z,Y)X)`.
    pub fn polarized_apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let a = self.curvature_map(z, x, y);
        let b = self.curvature_map(z, y, x);
        let half = rat(1, 2);
        a.iter().zip(&b).map(|(p, q)| (p + q) * &half).collect()
    }

    /// Matrix of `J_X`.
    pub fn matrix(&self, x: &[Rational]) -> Matrix<Rational> {
        let mut m = Matrix::zeros(self.n, self.n);
        for (a, b, i, j, v) in &self.entries {
            if x[*i].is_zero() || x[*j].is_zero() {
                continue;
            }
            m[(*a, *b)] += v * &x[*i] * &x[*j];
        }
        m
    }

    /// Matrix of `Z ↦ J(X,Y)Z`.
    pub fn polarized_matrix(&self, x: &[Rational], y: &[Rational]) -> Matrix<Rational> {
        let mut m = Matrix::zeros(self.n, self.n);
        let half = rat(1, 2);
        for (a, b, i, j, v) in &self.entries {
            let w = &x[*i] * &y[*j] + &y[*i] * &x[*j];
            if w.is_zero() {
                continue;
            }
            m[(*a, *b)] += v * w * &half;
        }
        m
    }
}

/// An operator expressed in a basis of (a subspace of) the ambient space.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorAt {
    pub base: Vector,
    pub matrix: Matrix<Rational>,
    /// Basis vectors in ambient coordinates; the standard basis for ambient
    /// operators, a basis of `X^⊥` for reduced ones.
    pub basis: Vec<Vector>,
    /// `g` restricted to `basis`.
    pub gram: Matrix<Rational>,
    /// `ε` of the base vector.
    pub eps: Rational,
    pub reduced: bool,
}

impl OperatorAt {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `[g][M]` symmetric.
    pub fn is_self_adjoint(&self) -> bool {
        self.gram.mul(&self.matrix).is_symmetric()
    }

    /// Ambient coordinates of a vector given in `basis` coordinates.
    pub fn to_ambient(&self, coords: &[Rational]) -> Vector {
        let n = self.basis[0].len();
        let mut out = vec![Rational::zero(); n];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }

    /// `w̃_X(λ) = det(λ·id − M)`.
    pub fn char_poly(&self) -> Poly {
        char_poly(&self.matrix)
    }

    /// Scale used for normalization: `ε_X`, or 1 when `X` is null.
    pub fn scale(&self) -> Rational {
        if self.eps.is_zero() {
            Rational::one()
        } else {
            self.eps.clone()
        }
    }

    /// Characteristic polynomial of `M / ε_X`.
    pub fn normalized_char_poly(&self) -> Poly {
        char_poly(&self.matrix.scale(&(Rational::one() / self.scale())))
    }
}

fn check(r: &CurvatureTensor, v: &[Rational]) -> Result<(), JacobiError> {
    if v.len() != r.dim() {
        return Err(JacobiError::DimensionMismatch { expected: r.dim(), got: v.len() });
    }
    Ok(())
}

fn standard_basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

/// `J_X` on the whole space.
pub fn jacobi_op(r: &CurvatureTensor, x: &[Rational]) -> Result<OperatorAt, JacobiError> {
    check(r, x)?;
    Ok(jacobi_op_with(&Raised::new(r), r.metric(), x))
}

pub fn jacobi_op_with(raised: &Raised, g: &ScalarProduct, x: &[Rational]) -> OperatorAt {
    OperatorAt {
        base: x.to_vec(),
        matrix: raised.matrix(x),
        basis: standard_basis(g.dim()),
        gram: g.gram().clone(),
        eps: g.eps(x),
        reduced: false,
    }
}

/// `Z ↦ ½(R(Z,X)Y + R(Z,Y)X)` on the whole space.
pub fn polarized_op(r: &CurvatureTensor, x: &[Rational], y: &[Rational]) -> Result<OperatorAt, JacobiError> {
    check(r, x)?;
    check(r, y)?;
    let g = r.metric();
    Ok(OperatorAt {
        base: x.to_vec(),
        matrix: Raised::new(r).polarized_matrix(x, y),
        basis: standard_basis(g.dim()),
        gram: g.gram().clone(),
        eps: g.eps(x),
        reduced: false,
    })
}

/// `J_X` restricted to `X^⊥`, in the basis returned by
/// [`ScalarProduct::orthogonal_complement`].
pub fn reduced_op(r: &CurvatureTensor, x: &[Rational]) -> Result<OperatorAt, JacobiError> {
    check(r, x)?;
    reduced_op_with(&Raised::new(r), r.metric(), x)
}

pub fn reduced_op_with(raised: &Raised, g: &ScalarProduct, x: &[Rational]) -> Result<OperatorAt, JacobiError> {
    let basis = g.orthogonal_complement(x).map_err(|e| match e {
        SpaceError::NullBase => JacobiError::NullBase,
        other => JacobiError::Space(other),
    })?;
    let m = raised.matrix(x);
    Ok(restrict(&m, g, x, basis))
}

fn restrict(m: &Matrix<Rational>, g: &ScalarProduct, x: &[Rational], basis: Vec<Vector>) -> OperatorAt {
    let k = basis.len();
    let n = g.dim();
    let b = Matrix::from_columns(&basis, n);
    let gb = g.gram().mul(&b);
    let gram = b.transpose().mul(&gb);
    let ginv = gram.inverse().expect("complement of a nonnull vector is nondegenerate");
    let coords = ginv.mul(&gb.transpose()).mul(&m.mul(&b));
    debug_assert_eq!(coords.rows(), k);
    OperatorAt { base: x.to_vec(), matrix: coords, basis, gram, eps: g.eps(x), reduced: true }
}

/// Eigenvectors of one eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub enum EigenBasis {
    /// Ambient coordinates.
    Rational(Vec<Vector>),
    /// Ambient coordinates with entries in `Q[θ]/(modulus)`, valid for every
    /// root `θ` of `modulus` (in particular for the reported eigenvalue).
    Algebraic { modulus: Poly, vectors: Vec<Vec<Poly>> },
}

impl EigenBasis {
    pub fn len(&self) -> usize {
        match self {
            EigenBasis::Rational(v) => v.len(),
            EigenBasis::Algebraic { vectors, .. } => vectors.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rational(&self) -> Option<&[Vector]> {
        match self {
            EigenBasis::Rational(v) => Some(v),
            EigenBasis::Algebraic { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenItem {
    /// Normalized eigenvalue.
    pub lambda: RealRoot,
    pub alg_mult: usize,
    pub geo_mult: usize,
    pub basis: EigenBasis,
    /// The Gram matrix of the eigenspace is singular, i.e. the eigenspace
    /// contains a null vector orthogonal to the whole eigenspace.
    pub gram_degenerate: bool,
    /// Every eigenvector is null.
    pub totally_isotropic: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiSpectrum {
    /// `w̃_X` of the operator itself.
    pub char_poly: Poly,
    /// Characteristic polynomial of the operator divided by [`scale`](Self::scale).
    pub normalized_char_poly: Poly,
    pub scale: Rational,
    pub items: Vec<EigenItem>,
    pub complex_pairs: usize,
    pub all_real: bool,
    pub diagonalizable: bool,
}

impl JacobiSpectrum {
    pub fn has_degenerate_eigenspace(&self) -> bool {
        self.items.iter().any(|i| i.gram_degenerate)
    }

    pub fn is_rational(&self) -> bool {
        self.items.iter().all(|i| matches!(i.lambda, RealRoot::Rational(_)))
    }

    pub fn item_for(&self, lambda: &Rational) -> Option<&EigenItem> {
        self.items.iter().find(|i| i.lambda.as_rational() == Some(lambda))
    }
}

/// Spectrum of an operator with the normalization of [`OperatorAt::scale`].
pub fn spectrum(op: &OperatorAt) -> Result<JacobiSpectrum, JacobiError> {
    if !op.is_self_adjoint() {
        return Err(JacobiError::NotSelfAdjoint);
    }
    Ok(spectrum_unchecked(op))
}

pub fn spectrum_unchecked(op: &OperatorAt) -> JacobiSpectrum {
    let scale = op.scale();
    let normalized = op.matrix.scale(&(Rational::one() / &scale));
    let cp = char_poly(&normalized);
    let mut items = Vec::new();
    let mut complex_pairs = 0;
    for (factor, mult) in cp.square_free_decomposition() {
        let found = isolate_square_free(&factor);
        let mut irrational = factor.clone();
        for root in &found {
            if let RealRoot::Rational(q) = root {
                irrational = irrational.exact_div(&Poly::linear_root(q));
                items.push(rational_item(op, &normalized, q, mult));
            }
        }
        complex_pairs += mult * (factor.degree().unwrap() - found.len()) / 2;
        if irrational.degree().unwrap_or(0) > 0 && found.iter().any(|r| matches!(r, RealRoot::Isolated(_))) {
            items.extend(algebraic_items(op, &normalized, &irrational, mult));
        }
    }
    items.sort_by(|a, b| a.lambda.approx().total_cmp(&b.lambda.approx()));
    let all_real = complex_pairs == 0;
    let diagonalizable = all_real && items.iter().all(|i| i.geo_mult == i.alg_mult);
    JacobiSpectrum {
        char_poly: op.char_poly(),
        normalized_char_poly: cp,
        scale,
        items,
        complex_pairs,
        all_real,
        diagonalizable,
    }
}

fn rational_item(op: &OperatorAt, normalized: &Matrix<Rational>, q: &Rational, mult: usize) -> EigenItem {
    let k = normalized.rows();
    let shifted = normalized.sub(&Matrix::identity(k).scale(q));
    let coords = shifted.nullspace();
    let local_gram = Matrix::from_fn(coords.len(), coords.len(), |a, b| {
        let gy = op.gram.mul_vec(&coords[b]);
        coords[a].iter().zip(&gy).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    });
    EigenItem {
        lambda: RealRoot::Rational(q.clone()),
        alg_mult: mult,
        geo_mult: coords.len(),
        gram_degenerate: local_gram.rank() < coords.len(),
        totally_isotropic: local_gram.is_zero(),
        basis: EigenBasis::Rational(coords.iter().map(|c| op.to_ambient(c)).collect()),
    }
}

struct BranchData {
    coords: Vec<Vec<Poly>>,
    degenerate: bool,
    isotropic: bool,
}

fn algebraic_items(op: &OperatorAt, normalized: &Matrix<Rational>, modulus: &Poly, mult: usize) -> Vec<EigenItem> {
    let branches = split_run(modulus, |ring: &QuotientRing| -> Result<BranchData, Split> {
        let coords = ring.nullspace(&ring.shifted(normalized))?;
        let k = coords.len();
        let gram: Vec<Vec<Poly>> =
            (0..k).map(|a| (0..k).map(|b| ring.bilinear(&op.gram, &coords[a], &coords[b])).collect()).collect();
        let rank = ring.rank(&gram)?;
        let mut isotropic = true;
        for row in &gram {
            for e in row {
                if !ring.is_zero(e)? {
                    isotropic = false;
                }
            }
        }
        Ok(BranchData { coords, degenerate: rank < k, isotropic })
    });
    let mut out = Vec::new();
    for (m, data) in branches {
        let ring = QuotientRing::new(&m);
        let vectors: Vec<Vec<Poly>> = data
            .coords
            .iter()
            .map(|c| {
                let n = op.basis[0].len();
                (0..n)
                    .map(|i| {
                        c.iter().zip(&op.basis).fold(Poly::zero(), |acc, (ci, b)| {
                            ring.add(&acc, &ci.scale(&b[i]))
                        })
                    })
                    .collect()
            })
            .collect();
        for root in isolate_square_free(&m) {
            out.push(EigenItem {
                lambda: root,
                alg_mult: mult,
                geo_mult: data.coords.len(),
                basis: EigenBasis::Algebraic { modulus: m.clone(), vectors: vectors.clone() },
                gram_degenerate: data.degenerate,
                totally_isotropic: data.isotropic,
            });
        }
    }
    out
}

/// Serializable view of a spectrum.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub base: Vec<String>,
    pub eps: String,
    pub reduced: bool,
    pub char_poly: Vec<String>,
    pub normalized_char_poly: Vec<String>,
    pub eigenvalues: Vec<EigenReport>,
    pub complex_pairs: usize,
    pub all_real: bool,
    pub diagonalizable: bool,
    pub null_eigenvectors: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub lambda: RootDescription,
    pub alg_mult: usize,
    pub geo_mult: usize,
    /// Rational eigenvectors in ambient coordinates; for irrational
    /// eigenvalues each coordinate is a polynomial in λ (coefficients,
    /// constant term first).
    pub basis: Vec<Vec<BasisEntry>>,
    pub gram_degenerate: bool,
    pub totally_isotropic: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum BasisEntry {
    Exact(String),
    InLambda(Vec<String>),
}

impl SpectrumReport {
    pub fn new(op: &OperatorAt, s: &JacobiSpectrum) -> Self {
        let strings = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
        SpectrumReport {
            base: strings(&op.base),
            eps: format_rational(&op.eps),
            reduced: op.reduced,
            char_poly: s.char_poly.coeff_strings(),
            normalized_char_poly: s.normalized_char_poly.coeff_strings(),
            eigenvalues: s
                .items
                .iter()
                .map(|i| EigenReport {
                    lambda: i.lambda.describe(),
                    alg_mult: i.alg_mult,
                    geo_mult: i.geo_mult,
                    basis: match &i.basis {
                        EigenBasis::Rational(vs) => {
                            vs.iter().map(|v| v.iter().map(|c| BasisEntry::Exact(format_rational(c))).collect()).collect()
                        }
                        EigenBasis::Algebraic { vectors, .. } => vectors
                            .iter()
                            .map(|v| v.iter().map(|c| BasisEntry::InLambda(c.coeff_strings())).collect())
                            .collect(),
                    },
                    gram_degenerate: i.gram_degenerate,
                    totally_isotropic: i.totally_isotropic,
                })
                .collect(),
            complex_pairs: s.complex_pairs,
            all_real: s.all_real,
            diagonalizable: s.diagonalizable,
            null_eigenvectors: s.items.iter().any(|i| i.gram_degenerate || i.totally_isotropic),
        }
    }
}
