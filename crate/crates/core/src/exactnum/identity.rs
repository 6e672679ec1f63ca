//! Randomized polynomial identity testing (Schwartz–Zippel).

use num_bigint::BigInt;
use num_traits::{One, Pow};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::scalar::{Rational, Scalar};
use super::NumError;

/// Sample coordinates are integers in `[-SPREAD·d, SPREAD·d]`.
pub const SPREAD: i64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum IdentityVerdict<S = Rational> {
    /// All samples vanished. A nonzero polynomial of the declared degree
    /// would have passed with probability at most `error_bound`.
    IdenticallyZero { error_bound: Rational },
    NonzeroWitness { point: Vec<S>, value: S },
}

impl<S> IdentityVerdict<S> {
    pub fn is_zero(&self) -> bool {
        matches!(self, IdentityVerdict::IdenticallyZero { .. })
    }
}

/// `(d/|S|)^trials` for the sample set used by [`identity_test`].
pub fn error_bound(degree_bound: i64, trials: usize) -> Rational {
    let size = 2 * SPREAD * degree_bound + 1;
    Rational::new(BigInt::from(degree_bound), BigInt::from(size)).pow(trials as i32)
}

/// Evaluates `eval` at `trials` random points of `S^vars` and reports the
/// first point with a nonzero value. Deterministic in `seed`.
pub fn identity_test<S: Scalar>(
    eval: impl Fn(&[S]) -> S,
    degree_bound: i64,
    vars: usize,
    trials: usize,
    seed: u64,
) -> Result<IdentityVerdict<S>, NumError> {
    if degree_bound <= 0 {
        return Err(NumError::InvalidDegreeBound(degree_bound));
    }
    if trials == 0 {
        return Err(NumError::NoTrials);
    }
    let half = SPREAD * degree_bound;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let point: Vec<S> = (0..vars).map(|_| S::from_i64(rng.gen_range(-half..=half))).collect();
        let value = eval(&point);
        if !value.is_zero() {
            return Ok(IdentityVerdict::NonzeroWitness { point, value });
        }
    }
    Ok(IdentityVerdict::IdenticallyZero { error_bound: error_bound(degree_bound, trials) })
}

/// Probability bound as an `f64`, for display.
pub fn bound_to_f64(b: &Rational) -> f64 {
    if b >= &Rational::one() {
        return 1.0;
    }
    let (n, d) = (b.numer().bits() as i64, b.denom().bits() as i64);
    if d - n > 1000 {
        return 0.0;
    }
    num_traits::ToPrimitive::to_f64(b).unwrap_or(0.0)
}
