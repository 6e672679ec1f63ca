//! Scalar product spaces of arbitrary signature.
//!
//! Vectors are coordinate columns in the ambient basis. The form is stored as
//! its Gram matrix `G`, so `g(X, Y) = Xᵀ G Y`.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::exactnum::{format_rational, int, parse_rational, Matrix, NumError, Rational, Scalar};
use crate::sampling;

pub type Vector = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is degenerate (det = 0)")]
    Degenerate,
    #[error("the base vector is null")]
    NullBase,
    #[error("the vector is not null")]
    NotNull,
    #[error("the input vectors do not span a totally isotropic subspace")]
    NotIsotropic,
    #[error("the input vectors are linearly dependent")]
    DependentInput,
    #[error("the subspace is degenerate")]
    DegenerateSubspace,
    #[error("no rational null vector found for this form")]
    NoRationalNull,
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CausalType {
    Spacelike,
    Timelike,
    Null,
    Zero,
}

impl CausalType {
    pub fn name(self) -> &'static str {
        match self {
            CausalType::Spacelike => "spacelike",
            CausalType::Timelike => "timelike",
            CausalType::Null => "null",
            CausalType::Zero => "zero",
        }
    }
}

/// A nondegenerate symmetric bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarProduct {
    gram: Matrix<Rational>,
    inverse: Matrix<Rational>,
}

/// Pairwise orthogonal basis produced by [`ScalarProduct::orthonormal_basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoBasis<S = Rational> {
    pub vectors: Vec<Vec<S>>,
    /// `g(E_i, E_i)` for each returned vector.
    pub norms: Vec<S>,
    /// `true` when every vector has been scaled to norm ±1.
    pub unit: bool,
}

impl ScalarProduct {
    pub fn new(gram: Matrix<Rational>) -> Result<Self, SpaceError> {
        if !gram.is_square() {
            return Err(SpaceError::NotSquare);
        }
        if !gram.is_symmetric() {
            return Err(SpaceError::NotSymmetric);
        }
        let inverse = gram.inverse().ok_or(SpaceError::Degenerate)?;
        Ok(ScalarProduct { gram, inverse })
    }

    /// `diag(-1, …, -1, +1, …, +1)` with `p` negative and `q` positive entries.
    pub fn canonical(p: usize, q: usize) -> Self {
        let d: Vec<Rational> = (0..p).map(|_| int(-1)).chain((0..q).map(|_| int(1))).collect();
        ScalarProduct::new(Matrix::diagonal(&d)).expect("canonical form is nondegenerate")
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, SpaceError> {
        ScalarProduct::new(Matrix::from_rows(rows).ok_or(SpaceError::NotSquare)?)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Matrix<Rational> {
        &self.inverse
    }

    /// `true` for a diagonal Gram matrix with entries ±1.
    pub fn is_canonical(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let v = &self.gram[(i, j)];
                if i == j {
                    v.abs().is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    pub fn check_dim(&self, x: &[Rational]) -> Result<(), SpaceError> {
        if x.len() == self.dim() {
            Ok(())
        } else {
            Err(SpaceError::DimensionMismatch { expected: self.dim(), got: x.len() })
        }
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Result<Rational, SpaceError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.g(x, y))
    }

    /// `Xᵀ G Y` without dimension checks.
    pub fn g(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let n = self.dim();
        let mut acc = Rational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..n {
                let gij = &self.gram[(i, j)];
                if !gij.is_zero() && !y[j].is_zero() {
                    row += gij * &y[j];
                }
            }
            acc += &x[i] * row;
        }
        acc
    }

    /// `ε_X = g(X, X)`.
    pub fn eps(&self, x: &[Rational]) -> Rational {
        self.g(x, x)
    }

    /// `G·X`, the covector of `X`.
    pub fn lower(&self, x: &[Rational]) -> Vector {
        self.gram.mul_vec(x)
    }

    /// `G⁻¹·ω`, the vector of a covector.
    pub fn raise(&self, w: &[Rational]) -> Vector {
        self.inverse.mul_vec(w)
    }

    pub fn classify(&self, x: &[Rational]) -> Result<CausalType, SpaceError> {
        self.check_dim(x)?;
        Ok(self.causal(x))
    }

    pub fn causal(&self, x: &[Rational]) -> CausalType {
        if x.iter().all(Zero::is_zero) {
            return CausalType::Zero;
        }
        let e = self.eps(x);
        if e.is_zero() {
            CausalType::Null
        } else if e.is_negative() {
            CausalType::Timelike
        } else {
            CausalType::Spacelike
        }
    }

    /// `(p, q)`: numbers of negative and positive squares.
    pub fn signature(&self) -> (usize, usize) {
        let (_, norms) = congruence_diagonalize(&self.gram);
        let p = norms.iter().filter(|v| v.is_negative()).count();
        (p, norms.len() - p)
    }

    /// Pairwise orthogonal basis with timelike vectors first. Each vector is
    /// scaled to norm ±1 when that is possible over the rationals; otherwise
    /// it is given in primitive integer form and `unit` is `false`.
    pub fn orthonormal_basis(&self) -> OrthoBasis {
        let (vectors, _) = congruence_diagonalize(&self.gram);
        let mut out: Vec<(Vector, Rational)> = Vec::new();
        let mut unit = true;
        for v in vectors {
            let v = primitive(&v);
            let e = self.eps(&v);
            match e.abs().sqrt_exact() {
                Some(s) => {
                    let u: Vector = v.iter().map(|c| c / &s).collect();
                    let eu = self.eps(&u);
                    out.push((u, eu));
                }
                None => {
                    unit = false;
                    out.push((v, e));
                }
            }
        }
        out.sort_by_key(|(_, e)| !e.is_negative());
        let (vectors, norms) = out.into_iter().unzip();
        OrthoBasis { vectors, norms, unit }
    }

    /// Orthonormal basis over floats, normalizing every vector.
    pub fn orthonormal_basis_float(&self, tol: f64) -> OrthoBasis<f64> {
        let gram = self.gram.map(|v| crate::exactnum::Approx::with_tol(v, tol));
        let (vectors, norms) = congruence_diagonalize(&gram);
        let mut out: Vec<(Vec<f64>, f64)> = vectors
            .into_iter()
            .zip(norms)
            .map(|(v, e)| {
                let s = e.value.abs().sqrt();
                (v.iter().map(|c| c.value / s).collect(), e.value.signum())
            })
            .collect();
        out.sort_by_key(|(_, e)| *e >= 0.0);
        let (vectors, norms) = out.into_iter().unzip();
        OrthoBasis { vectors, norms, unit: true }
    }

    /// Basis of `X^⊥` for nonnull `X`.
    pub fn orthogonal_complement(&self, x: &[Rational]) -> Result<Vec<Vector>, SpaceError> {
        self.check_dim(x)?;
        if self.eps(x).is_zero() {
            return Err(SpaceError::NullBase);
        }
        let row = Matrix::from_rows(vec![self.lower(x)]).expect("single row");
        Ok(row.nullspace())
    }

    /// Splits a null vector as `N = S + T` with `S ⊥ T` and `ε_S = -ε_T ≠ 0`.
    pub fn null_decompose(&self, n: &[Rational]) -> Result<(Vector, Vector), SpaceError> {
        self.check_dim(n)?;
        if self.causal(n) != CausalType::Null {
            return Err(SpaceError::NotNull);
        }
        let m = self.isotropic_supplement(&[n.to_vec()])?.remove(0);
        let half = Rational::new(1.into(), 2.into());
        let s = n.iter().zip(&m).map(|(a, b)| (a + b) * &half).collect();
        let t = n.iter().zip(&m).map(|(a, b)| (a - b) * &half).collect();
        Ok((s, t))
    }

    /// Null vectors `M_1..M_k`, pairwise orthogonal, with `g(N_i, M_j) = δ_ij`.
    pub fn isotropic_supplement(&self, ws: &[Vector]) -> Result<Vec<Vector>, SpaceError> {
        for w in ws {
            self.check_dim(w)?;
        }
        if ws.is_empty() {
            return Ok(Vec::new());
        }
        for (i, a) in ws.iter().enumerate() {
            for b in &ws[i..] {
                if !self.g(a, b).is_zero() {
                    return Err(SpaceError::NotIsotropic);
                }
            }
        }
        let k = ws.len();
        let span = Matrix::from_rows(ws.to_vec()).expect("equal lengths");
        if span.rank() < k {
            return Err(SpaceError::DependentInput);
        }
        let pairing = Matrix::from_rows(ws.iter().map(|w| self.lower(w)).collect()).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let mut ms: Vec<Vector> = Vec::with_capacity(k);
        for i in 0..k {
            let mut e = vec![Rational::zero(); k];
            e[i] = Rational::one();
            let v = pairing.solve(&e).ok_or(SpaceError::DependentInput)?;
            let mut m = v.clone();
            let ev = self.eps(&v);
            axpy(&mut m, &(-&ev * &half), &ws[i]);
            for (j, mj) in ms.iter().enumerate() {
                let c = self.g(&v, mj);
                axpy(&mut m, &-c, &ws[j]);
            }
            ms.push(m);
        }
        Ok(ms)
    }

    /// As [`isotropic_supplement`](Self::isotropic_supplement), with the
    /// supplement taken inside the nondegenerate subspace spanned by `basis`
    /// (which must contain every `N_i`).
    pub fn isotropic_supplement_in(
        &self,
        ws: &[Vector],
        basis: &[Vector],
    ) -> Result<Vec<Vector>, SpaceError> {
        let sub = self.restrict(basis)?;
        let b = Matrix::from_columns(basis, self.dim());
        let local: Vec<Vector> = ws
            .iter()
            .map(|w| b.solve(w).ok_or(SpaceError::DependentInput))
            .collect::<Result<_, _>>()?;
        let ms = sub.isotropic_supplement(&local)?;
        Ok(ms.iter().map(|m| b.mul_vec(m)).collect())
    }

    /// The form restricted to `span(basis)`, in the coordinates of `basis`.
    pub fn restrict(&self, basis: &[Vector]) -> Result<ScalarProduct, SpaceError> {
        let k = basis.len();
        let gram = Matrix::from_fn(k, k, |i, j| self.g(&basis[i], &basis[j]));
        ScalarProduct::new(gram).map_err(|_| SpaceError::DegenerateSubspace)
    }

    /// Some nonzero null vector, if the form represents zero over the
    /// rationals with small coefficients.
    pub fn base_null(&self) -> Result<Vector, SpaceError> {
        let n = self.dim();
        if self.is_canonical() {
            let neg = (0..n).find(|&i| self.gram[(i, i)].is_negative());
            let pos = (0..n).find(|&i| self.gram[(i, i)].is_positive());
            if let (Some(a), Some(b)) = (neg, pos) {
                let mut v = vec![Rational::zero(); n];
                v[a] = Rational::one();
                v[b] = Rational::one();
                return Ok(v);
            }
            return Err(SpaceError::NoRationalNull);
        }
        let range = 3i64;
        let total = (2 * range + 1).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let v: Vector = (0..n)
                .map(|_| {
                    let d = c % (2 * range + 1) - range;
                    c /= 2 * range + 1;
                    int(d)
                })
                .collect();
            if self.causal(&v) == CausalType::Null {
                return Ok(v);
            }
        }
        Err(SpaceError::NoRationalNull)
    }

    pub fn random_vector(&self, rng: &mut impl Rng) -> Vector {
        sampling::coords(rng, self.dim())
    }

    /// Uniform small-integer vector of the requested causal type (not null).
    pub fn random_of_type(&self, rng: &mut impl Rng, ty: CausalType) -> Vector {
        assert!(matches!(ty, CausalType::Spacelike | CausalType::Timelike));
        loop {
            let v = self.random_vector(rng);
            if self.causal(&v) == ty {
                return v;
            }
        }
    }

    pub fn random_nonnull(&self, rng: &mut impl Rng) -> Vector {
        loop {
            let v = self.random_vector(rng);
            if !self.eps(&v).is_zero() {
                return v;
            }
        }
    }

    /// The causal types of nonnull vectors that exist in this signature.
    pub fn nonnull_types(&self) -> Vec<CausalType> {
        let (p, q) = self.signature();
        let mut out = Vec::new();
        if p > 0 {
            out.push(CausalType::Timelike);
        }
        if q > 0 {
            out.push(CausalType::Spacelike);
        }
        out
    }

    /// A random null vector: the second intersection of the null cone with the
    /// line through a base null vector `N₀` in a random direction `Z`, i.e.
    /// `ε_Z·N₀ − 2g(N₀, Z)·Z`.
    pub fn random_null(&self, rng: &mut impl Rng) -> Result<Vector, SpaceError> {
        let n0 = self.base_null()?;
        loop {
            let z = self.random_vector(rng);
            let ez = self.eps(&z);
            let c = -int(2) * self.g(&n0, &z);
            let v: Vector = n0.iter().zip(&z).map(|(a, b)| &ez * a + &c * b).collect();
            if v.iter().any(|x| !x.is_zero()) {
                return Ok(primitive(&v));
            }
        }
    }

    /// Reflection `x ↦ x − 2g(x,v)/ε_v·v` as a matrix.
    pub fn reflection(&self, v: &[Rational]) -> Matrix<Rational> {
        let ev = self.eps(v);
        assert!(!ev.is_zero(), "reflection in a null vector");
        let gv = self.lower(v);
        let two = int(2);
        Matrix::from_fn(self.dim(), self.dim(), |i, j| {
            let d = if i == j { Rational::one() } else { Rational::zero() };
            d - &two * &v[i] * &gv[j] / &ev
        })
    }

    /// Product of `count` random reflections.
    pub fn random_isometry(&self, rng: &mut impl Rng, count: usize) -> Matrix<Rational> {
        let mut m = Matrix::identity(self.dim());
        for _ in 0..count {
            let v = self.random_nonnull(rng);
            m = self.reflection(&v).mul(&m);
        }
        m
    }

    /// Row-major Gram matrix as rational strings.
    pub fn gram_strings(&self) -> Vec<Vec<String>> {
        self.gram.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self, SpaceError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        ScalarProduct::from_rows(rows)
    }
}

fn axpy(y: &mut [Rational], a: &Rational, x: &[Rational]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

trait SqrtExact {
    fn sqrt_exact(&self) -> Option<Rational>;
}

impl SqrtExact for Rational {
    fn sqrt_exact(&self) -> Option<Rational> {
        Scalar::sqrt(self)
    }
}

/// Scales `v` to coprime integer coordinates whose first nonzero entry is
/// positive. The zero vector is returned unchanged.
pub fn primitive(v: &[Rational]) -> Vector {
    use num_integer::Integer;
    let Some(first) = v.iter().find(|c| !c.is_zero()) else {
        return v.to_vec();
    };
    let lcm = v.iter().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<_> = v.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if first.is_negative() { -num_bigint::BigInt::one() } else { num_bigint::BigInt::one() };
    ints.into_iter().map(|c| Rational::from_integer(c / &gcd * &sign)).collect()
}

/// Symmetric congruence diagonalization: returns pairwise `G`-orthogonal
/// vectors `b_k` (in order of elimination) and their norms `b_kᵀ G b_k`.
///
/// At each step the first remaining basis vector with nonzero norm becomes
/// the pivot. If every remaining norm vanishes, the first pair `b_i, b_j`
/// with `g(b_i, b_j) ≠ 0` is combined as `b_i + b_j`, whose norm is
/// `2g(b_i, b_j)`.
pub fn congruence_diagonalize<S: Scalar>(gram: &Matrix<S>) -> (Vec<Vec<S>>, Vec<S>) {
    let n = gram.rows();
    let form = |x: &[S], y: &[S]| -> S {
        let gy = gram.mul_vec(y);
        x.iter().zip(&gy).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    };
    let mut basis: Vec<Vec<S>> = (0..n).map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect()).collect();
    let mut norms = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = (k..n).find(|&i| !form(&basis[i], &basis[i]).is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => {
                let pair = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !form(&basis[i], &basis[j]).is_zero());
                let Some((i, j)) = pair else {
                    // degenerate remainder: keep the zero norms
                    for b in &basis[k..] {
                        norms.push(form(b, b));
                    }
                    break;
                };
                let bj = basis[j].clone();
                for (x, y) in basis[i].iter_mut().zip(bj) {
                    *x = x.clone() + y;
                }
                i
            }
        };
        basis.swap(k, pivot);
        let bk = basis[k].clone();
        let ek = form(&bk, &bk);
        for j in k + 1..n {
            let c = form(&bk, &basis[j]) / ek.clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in basis[j].iter_mut().zip(&bk) {
                *x = x.clone() - c.clone() * y.clone();
            }
        }
        norms.push(ek);
    }
    (basis, norms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn inner_and_classify() {
        let g = ScalarProduct::canonical(1, 1);
        assert_eq!(g.inner(&v(&[1, 0]), &v(&[1, 0])).unwrap(), int(-1));
        assert_eq!(g.inner(&v(&[1, 1]), &v(&[1, 1])).unwrap(), int(0));
        assert_eq!(g.inner(&v(&[1, 0]), &v(&[0, 1])).unwrap(), int(0));
        assert_eq!(g.classify(&v(&[1, 0])).unwrap(), CausalType::Timelike);
        assert_eq!(g.classify(&v(&[1, 1])).unwrap(), CausalType::Null);
        assert_eq!(g.classify(&v(&[0, 0])).unwrap(), CausalType::Zero);
        assert_eq!(
            g.inner(&v(&[1]), &v(&[1, 0])),
            Err(SpaceError::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn construction_rejects_bad_grams() {
        assert_eq!(ScalarProduct::from_rows(vec![v(&[1, 1]), v(&[1, 1])]), Err(SpaceError::Degenerate));
        assert_eq!(ScalarProduct::from_rows(vec![v(&[1, 2]), v(&[0, 1])]), Err(SpaceError::NotSymmetric));
    }

    #[test]
    fn signatures() {
        assert_eq!(ScalarProduct::canonical(1, 2).signature(), (1, 2));
        assert_eq!(ScalarProduct::canonical(0, 4).signature(), (0, 4));
        let h = ScalarProduct::from_rows(vec![v(&[0, 1]), v(&[1, 0])]).unwrap();
        assert_eq!(h.signature(), (1, 1));
    }

    #[test]
    fn orthonormal_bases() {
        let b = ScalarProduct::canonical(1, 1).orthonormal_basis();
        assert_eq!(b.vectors, vec![v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(b.norms, vec![int(-1), int(1)]);
        assert!(b.unit);

        let h = ScalarProduct::from_rows(vec![v(&[0, 1]), v(&[1, 0])]).unwrap();
        let b = h.orthonormal_basis();
        assert_eq!(b.vectors, vec![v(&[1, -1]), v(&[1, 1])]);
        assert_eq!(b.norms, vec![int(-2), int(2)]);
        assert!(!b.unit);

        let d = ScalarProduct::from_rows(vec![v(&[2, 0]), v(&[0, 2])]).unwrap();
        let f = d.orthonormal_basis_float(1e-12);
        let s = 0.5f64.sqrt();
        assert!((f.vectors[0][0] - s).abs() < 1e-12 && f.vectors[0][1] == 0.0);
        assert!((f.vectors[1][1] - s).abs() < 1e-12 && f.vectors[1][0] == 0.0);
    }

    #[test]
    fn complements() {
        let g = ScalarProduct::canonical(1, 2);
        assert_eq!(g.orthogonal_complement(&v(&[1, 0, 0])).unwrap(), vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(g.orthogonal_complement(&v(&[1, 2, 0])).unwrap(), vec![v(&[2, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(
            ScalarProduct::canonical(1, 1).orthogonal_complement(&v(&[0, 1])).unwrap(),
            vec![v(&[1, 0])]
        );
        assert_eq!(g.orthogonal_complement(&v(&[1, 1, 0])), Err(SpaceError::NullBase));
    }

    #[test]
    fn supplements_match_hand_solutions() {
        let g = ScalarProduct::canonical(1, 1);
        let m = g.isotropic_supplement(&[v(&[1, 1])]).unwrap();
        assert_eq!(m, vec![vec![rat(-1, 2), rat(1, 2)]]);
        let (s, t) = g.null_decompose(&v(&[1, 1])).unwrap();
        assert_eq!(s, vec![rat(1, 4), rat(3, 4)]);
        assert_eq!(t, vec![rat(3, 4), rat(1, 4)]);
        assert_eq!(g.eps(&s), rat(1, 2));

        let g = ScalarProduct::canonical(2, 2);
        let m = g.isotropic_supplement(&[v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1])]).unwrap();
        assert_eq!(
            m,
            vec![vec![rat(-1, 2), int(0), rat(1, 2), int(0)], vec![int(0), rat(-1, 2), int(0), rat(1, 2)]]
        );
        assert!(g.isotropic_supplement(&[]).unwrap().is_empty());
        assert_eq!(g.isotropic_supplement(&[v(&[1, 0, 0, 0])]), Err(SpaceError::NotIsotropic));
        assert_eq!(
            g.isotropic_supplement(&[v(&[1, 0, 1, 0]), v(&[2, 0, 2, 0])]),
            Err(SpaceError::DependentInput)
        );
        assert_eq!(g.null_decompose(&v(&[1, 0, 0, 0])), Err(SpaceError::NotNull));
    }

    #[test]
    fn random_nulls_are_null() {
        let g = ScalarProduct::canonical(1, 3);
        let mut rng = sampling::rng(5);
        for _ in 0..50 {
            let n = g.random_null(&mut rng).unwrap();
            assert_eq!(g.causal(&n), CausalType::Null);
        }
        assert_eq!(ScalarProduct::canonical(0, 3).random_null(&mut rng), Err(SpaceError::NoRationalNull));
    }

    #[test]
    fn reflections_are_isometries() {
        let g = ScalarProduct::canonical(2, 2);
        let mut rng = sampling::rng(11);
        let a = g.random_isometry(&mut rng, 3);
        let pulled = a.transpose().mul(g.gram()).mul(&a);
        assert_eq!(&pulled, g.gram());
    }
}
