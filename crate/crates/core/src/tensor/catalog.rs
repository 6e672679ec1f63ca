//! Built-in quasi-Clifford families on canonical scalar products
//! `diag(-1 ×p, +1 ×q)`.
//!
//! | name               | signatures   | maps                   | `c_i`        |
//! |--------------------|--------------|------------------------|--------------|
//! | `constant`         | any          | none                   |              |
//! | `complex`          | `(2a, 2b)`   | rotations in the planes `(e₁,e₂), (e₃,e₄), …` | `-1` |
//! | `quaternionic`     | `(0, 4)`     | left multiplication by `i, j, k` | `-1, -1, -1` |
//! | `paracomplex`      | `(m, m)`     | `e_i ↔ e_{m+i}`        | `+1`         |
//! | `paraquaternionic` | `(2, 2)`     | `J₁, J₂ = J₁J₃, J₃`    | `+1, +1, -1` |

use num_traits::One;

use super::{quasi_clifford, CliffordItem, CurvatureTensor, QuasiCliffordSpec, TensorError};
use crate::exactnum::{int, Matrix, Rational};
use crate::space::ScalarProduct;

pub const FAMILIES: [&str; 5] = ["constant", "complex", "quaternionic", "paracomplex", "paraquaternionic"];

/// The families with at least one endomorphism.
pub const CLIFFORD_FAMILIES: [&str; 4] = ["complex", "quaternionic", "paracomplex", "paraquaternionic"];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} unavailable in signature ({p},{q})")]
    Unavailable { family: String, p: usize, q: usize },
    #[error("family {family} takes {expected} coefficients (mu0 first), got {got}")]
    CoefficientCount { family: String, expected: usize, got: usize },
}

fn from_images(n: usize, images: &[(usize, usize, i64)]) -> Matrix<Rational> {
    // (source, target, sign): J e_source = sign·e_target
    let mut m = Matrix::zeros(n, n);
    for &(s, t, sign) in images {
        m[(t, s)] = int(sign);
    }
    m
}

/// The endomorphisms `J_i` and constants `c_i` of a family.
pub fn family_maps(name: &str, p: usize, q: usize) -> Result<Vec<(Matrix<Rational>, Rational)>, CatalogError> {
    let n = p + q;
    let unavailable = || CatalogError::Unavailable { family: name.to_string(), p, q };
    match name {
        "constant" => Ok(Vec::new()),
        "complex" => {
            if p % 2 != 0 || q % 2 != 0 || n == 0 {
                return Err(unavailable());
            }
            let mut images = Vec::new();
            for a in (0..n).step_by(2) {
                images.push((a, a + 1, 1));
                images.push((a + 1, a, -1));
            }
            Ok(vec![(from_images(n, &images), int(-1))])
        }
        "quaternionic" => {
            if (p, q) != (0, 4) {
                return Err(unavailable());
            }
            // basis 1, i, j, k
            let li = from_images(4, &[(0, 1, 1), (1, 0, -1), (2, 3, 1), (3, 2, -1)]);
            let lj = from_images(4, &[(0, 2, 1), (1, 3, -1), (2, 0, -1), (3, 1, 1)]);
            let lk = from_images(4, &[(0, 3, 1), (1, 2, 1), (2, 1, -1), (3, 0, -1)]);
            Ok(vec![(li, int(-1)), (lj, int(-1)), (lk, int(-1))])
        }
        "paracomplex" => {
            if p != q || p == 0 {
                return Err(unavailable());
            }
            let images: Vec<_> = (0..p).flat_map(|i| [(i, p + i, 1), (p + i, i, 1)]).collect();
            Ok(vec![(from_images(n, &images), int(1))])
        }
        "paraquaternionic" => {
            if (p, q) != (2, 2) {
                return Err(unavailable());
            }
            let j1 = from_images(4, &[(0, 2, 1), (1, 3, 1), (2, 0, 1), (3, 1, 1)]);
            // diag(A, -A) with A = [[0,-1],[1,0]]
            let j3 = from_images(4, &[(0, 1, 1), (1, 0, -1), (2, 3, -1), (3, 2, 1)]);
            let j2 = j1.mul(&j3);
            Ok(vec![(j1, int(1)), (j2, int(1)), (j3, int(-1))])
        }
        other => Err(CatalogError::UnknownFamily(other.to_string())),
    }
}

/// Whether `name` exists in signature `(p, q)`.
pub fn available(name: &str, p: usize, q: usize) -> bool {
    family_maps(name, p, q).is_ok()
}

/// All families available in `(p, q)`.
pub fn families_for(p: usize, q: usize) -> Vec<&'static str> {
    FAMILIES.iter().copied().filter(|f| available(f, p, q)).collect()
}

/// Number of coefficients (including `μ₀`) the family takes.
pub fn coefficient_count(name: &str, p: usize, q: usize) -> Result<usize, CatalogError> {
    Ok(family_maps(name, p, q)?.len() + 1)
}

/// `μ₀R¹ + Σ μ_i R^{J_i}` for a catalog family; `mus = [μ₀, μ₁, …]`.
pub fn family_spec(name: &str, p: usize, q: usize, mus: &[Rational]) -> Result<QuasiCliffordSpec, CatalogError> {
    let maps = family_maps(name, p, q)?;
    if mus.len() != maps.len() + 1 {
        return Err(CatalogError::CoefficientCount {
            family: name.to_string(),
            expected: maps.len() + 1,
            got: mus.len(),
        });
    }
    Ok(QuasiCliffordSpec {
        mu0: mus[0].clone(),
        items: maps
            .into_iter()
            .zip(&mus[1..])
            .map(|((j, c), mu)| CliffordItem { mu: mu.clone(), j, c })
            .collect(),
    })
}

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

pub fn family_tensor(name: &str, p: usize, q: usize, mus: &[Rational]) -> Result<CurvatureTensor, BuildError> {
    let spec = family_spec(name, p, q, mus)?;
    Ok(quasi_clifford(&ScalarProduct::canonical(p, q), &spec)?)
}

/// Unit coefficient vector `(0, …, 1, …, 0)` with the 1 at `index`.
pub fn unit_mus(len: usize, index: usize) -> Vec<Rational> {
    (0..len).map(|i| if i == index { Rational::one() } else { int(0) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_satisfies_its_relations() {
        for (p, q) in [(0, 2), (0, 4), (2, 2), (1, 1), (3, 3), (2, 4), (1, 3)] {
            for name in families_for(p, q) {
                let n = coefficient_count(name, p, q).unwrap();
                let mus: Vec<Rational> = (0..n).map(|i| int(i as i64 + 1)).collect();
                let r = family_tensor(name, p, q, &mus).unwrap();
                assert!(r.validate().is_valid(), "{name} ({p},{q})");
            }
        }
    }

    #[test]
    fn availability() {
        assert_eq!(families_for(0, 4), vec!["constant", "complex", "quaternionic"]);
        assert_eq!(families_for(2, 2), vec!["constant", "complex", "paracomplex", "paraquaternionic"]);
        assert_eq!(families_for(1, 2), vec!["constant"]);
        assert_eq!(
            family_maps("quaternionic", 1, 3),
            Err(CatalogError::Unavailable { family: "quaternionic".into(), p: 1, q: 3 })
        );
        assert!(matches!(family_maps("bogus", 0, 4), Err(CatalogError::UnknownFamily(_))));
    }

    #[test]
    fn quaternion_units_multiply_correctly() {
        let maps = family_maps("quaternionic", 0, 4).unwrap();
        let (i, j, k) = (&maps[0].0, &maps[1].0, &maps[2].0);
        assert_eq!(&i.mul(j), k);
        assert_eq!(&j.mul(k), i);
        assert_eq!(&k.mul(i), j);
    }
}
