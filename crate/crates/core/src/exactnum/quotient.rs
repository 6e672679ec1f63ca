//! Linear algebra over `Q[θ]/(m)` for a square-free modulus `m`.
//!
//! The quotient is a product of number fields, one per irreducible factor of
//! `m`, so it is not a field in general. Computations ask [`QuotientRing::is_zero`]
//! whenever they branch on an element; if the element vanishes on some
//! factors but not on others the question has no single answer and a
//! [`Split`] is raised carrying a proper factor of `m`. [`split_run`] then
//! restarts the computation on both halves ("dynamic evaluation"). Every
//! returned branch is a modulus on which all decisions were uniform, so the
//! result describes each root of that branch simultaneously.

use num_traits::Zero;

use super::matrix::Matrix;
use super::poly::Poly;
use super::scalar::Rational;

/// A proper monic factor of the current modulus discovered while deciding a
/// zero test.
#[derive(Clone, Debug, PartialEq)]
pub struct Split(pub Poly);

#[derive(Clone, Debug)]
pub struct QuotientRing {
    modulus: Poly,
}

impl QuotientRing {
    /// `modulus` must be square-free of positive degree.
    pub fn new(modulus: &Poly) -> Self {
        assert!(modulus.degree().unwrap_or(0) > 0, "quotient by a constant");
        QuotientRing { modulus: modulus.monic() }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// The class of the indeterminate.
    pub fn theta(&self) -> Poly {
        self.reduce(&Poly::x())
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        a.rem(&self.modulus)
    }

    pub fn constant(&self, c: &Rational) -> Poly {
        Poly::constant(c.clone())
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a - b
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a * b))
    }

    /// Decides `a = 0`, or splits the modulus if `a` is a zero divisor.
    pub fn is_zero(&self, a: &Poly) -> Result<bool, Split> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Ok(true);
        }
        let g = a.gcd(&self.modulus);
        if g.is_constant() {
            Ok(false)
        } else {
            Err(Split(g))
        }
    }

    /// Inverse of an element already known to be a unit.
    pub fn inverse(&self, a: &Poly) -> Poly {
        let (g, s, _) = self.reduce(a).ext_gcd(&self.modulus);
        assert!(g.is_constant() && !g.is_zero(), "inverse of a zero divisor");
        self.reduce(&s.scale(&(Rational::from_integer(1.into()) / g.leading())))
    }

    /// Reduced row echelon form of `m`, returning the pivot columns.
    pub fn echelon(&self, m: &mut Vec<Vec<Poly>>) -> Result<Vec<usize>, Split> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let mut pivot = None;
            for (i, row) in m.iter().enumerate().skip(r) {
                if !self.is_zero(&row[c])? {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            m.swap(r, p);
            let inv = self.inverse(&m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(x, &inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = m[i][c].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let t = self.mul(&f, &m[r][j]);
                    m[i][j] = self.sub(&m[i][j], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok(pivots)
    }

    pub fn rank(&self, m: &[Vec<Poly>]) -> Result<usize, Split> {
        let mut m = m.to_vec();
        Ok(self.echelon(&mut m)?.len())
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn nullspace(&self, m: &[Vec<Poly>]) -> Result<Vec<Vec<Poly>>, Split> {
        let cols = m.first().map_or(0, Vec::len);
        let mut red = m.to_vec();
        let pivots = self.echelon(&mut red)?;
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Poly::zero(); cols];
            v[free] = Poly::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&red[r][free];
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// The matrix `a - θ·id` with rational `a`.
    pub fn shifted(&self, a: &Matrix<Rational>) -> Vec<Vec<Poly>> {
        let theta = self.theta();
        (0..a.rows())
            .map(|i| {
                (0..a.cols())
                    .map(|j| {
                        let c = self.constant(&a[(i, j)]);
                        if i == j {
                            self.sub(&c, &theta)
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `aᵀ·g·b` for rational `g`.
    pub fn bilinear(&self, g: &Matrix<Rational>, a: &[Poly], b: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for i in 0..a.len() {
            for j in 0..b.len() {
                if g[(i, j)].is_zero() {
                    continue;
                }
                let t = self.mul(&a[i], &b[j]).scale(&g[(i, j)]);
                acc = self.add(&acc, &t);
            }
        }
        acc
    }
}

/// Runs `f` over `Q[θ]/(modulus)` and returns one `(branch modulus, result)`
/// pair per branch. The branch moduli are monic and multiply to the monic
/// form of `modulus`.
pub fn split_run<T>(modulus: &Poly, f: impl Fn(&QuotientRing) -> Result<T, Split>) -> Vec<(Poly, T)> {
    let mut todo = vec![modulus.monic()];
    let mut done = Vec::new();
    while let Some(m) = todo.pop() {
        let ring = QuotientRing::new(&m);
        match f(&ring) {
            Ok(t) => done.push((m, t)),
            Err(Split(g)) => {
                let other = m.exact_div(&g).monic();
                todo.push(other);
                todo.push(g.monic());
            }
        }
    }
    done
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::int;

    #[test]
    fn zero_divisor_splits() {
        // (θ^2 - 2)(θ - 3)
        let m = &Poly::from_i64(&[-2, 0, 1]) * &Poly::from_i64(&[-3, 1]);
        let ring = QuotientRing::new(&m);
        assert_eq!(ring.is_zero(&Poly::from_i64(&[1, 1])), Ok(false));
        let Err(Split(g)) = ring.is_zero(&Poly::from_i64(&[-3, 1])) else { panic!() };
        assert_eq!(g, Poly::from_i64(&[-3, 1]));
    }

    #[test]
    fn inverse_in_number_field() {
        let ring = QuotientRing::new(&Poly::from_i64(&[-2, 0, 1]));
        let a = Poly::from_i64(&[1, 1]);
        assert_eq!(ring.mul(&a, &ring.inverse(&a)), Poly::one());
    }

    #[test]
    fn kernel_rank_depends_on_branch() {
        // diag(√2-ish block, 3): the matrix [[0,2],[1,0]] ⊕ [3] has
        // eigenvalues ±√2 and 3; over Q[θ]/((θ²-2)(θ-3)) the kernel of A - θ
        // is one-dimensional on each branch.
        let a = Matrix::from_rows(vec![
            vec![int(0), int(2), int(0)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(3)],
        ])
        .unwrap();
        let m = &Poly::from_i64(&[-2, 0, 1]) * &Poly::from_i64(&[-3, 1]);
        let branches = split_run(&m, |ring| ring.nullspace(&ring.shifted(&a)));
        assert_eq!(branches.len(), 2);
        for (modulus, basis) in &branches {
            assert_eq!(basis.len(), 1, "branch {modulus}");
            let ring = QuotientRing::new(modulus);
            let shifted = ring.shifted(&a);
            for row in &shifted {
                let dot = row
                    .iter()
                    .zip(&basis[0])
                    .fold(Poly::zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)));
                assert!(ring.reduce(&dot).is_zero());
            }
        }
    }
}
