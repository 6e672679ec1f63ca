//! Instance generators shared by the suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactnum::{format_rational, rat, Rational};
use crate::sampling;
use crate::space::{ScalarProduct, Vector};
use crate::tensor::catalog::{self, BuildError};
use crate::tensor::{free_orbits, perturb_orbit, quasi_clifford, CurvatureTensor, TensorError};

/// Exact nonzero perturbation sizes.
pub const DELTAS: [(i64, i64); 4] = [(1, 7), (-1, 7), (1, 11), (-1, 11)];

pub fn random_mus(rng: &mut impl Rng, count: usize) -> Vec<Rational> {
    (0..count).map(|_| sampling::small_rational(rng, 6, 4)).collect()
}

pub fn mus_label(mus: &[Rational]) -> String {
    mus.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

/// A catalog tensor with random coefficients, and its label.
pub fn catalog_instance(
    family: &str,
    p: usize,
    q: usize,
    rng: &mut impl Rng,
) -> Result<(CurvatureTensor, String), BuildError> {
    let count = catalog::coefficient_count(family, p, q)?;
    let mus = random_mus(rng, count);
    let r = catalog::family_tensor(family, p, q, &mus)?;
    Ok((r, format!("{family} ({p},{q}) mu={}", mus_label(&mus))))
}

/// A family in `(p, q)` with the sign of its first Hurwitz constant flipped.
pub fn corrupted_instance(p: usize, q: usize) -> Option<Result<CurvatureTensor, TensorError>> {
    let family = catalog::CLIFFORD_FAMILIES.iter().find(|f| catalog::available(f, p, q))?;
    let count = catalog::coefficient_count(family, p, q).ok()?;
    let mut spec = catalog::family_spec(family, p, q, &vec![rat(1, 1); count]).ok()?;
    spec.items[0].c = -spec.items[0].c.clone();
    Some(quasi_clifford(&ScalarProduct::canonical(p, q), &spec))
}

/// `r` plus `δ` on a random free symmetry orbit.
pub fn perturbed(r: &CurvatureTensor, rng: &mut impl Rng) -> (CurvatureTensor, String) {
    let orbits = free_orbits(r.dim());
    let t = *orbits.choose(rng).expect("dimension ≥ 2 has free orbits");
    let (a, b) = *DELTAS.choose(rng).expect("nonempty");
    let delta = rat(a, b);
    let out = perturb_orbit(r, t, &delta).expect("free orbits keep the Bianchi identity");
    let label = format!("delta={} at R{}{}{}{}", format_rational(&delta), t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1);
    (out, label)
}

/// A random nonnull `X` and a nonnull `Y ⊥ X`, obtained as
/// `ε_X Y₀ − g(X,Y₀)X`.
pub fn orthogonal_pair(g: &ScalarProduct, rng: &mut impl Rng) -> (Vector, Vector) {
    loop {
        let x = g.random_nonnull(rng);
        let y0 = g.random_vector(rng);
        let (ex, gxy) = (g.eps(&x), g.g(&x, &y0));
        let y: Vector = y0.iter().zip(&x).map(|(b, a)| &ex * b - &gxy * a).collect();
        if !num_traits::Zero::is_zero(&g.eps(&y)) {
            return (x, y);
        }
    }
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(num_traits::Zero::is_zero)
}
