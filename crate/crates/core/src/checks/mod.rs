//! Decision procedures for the curvature properties, with witnesses.
//!
//! Every checker returns a [`PropertyReport`]. A `fails` verdict always
//! carries a [`Witness`] whose data re-evaluates exactly to a violation.

mod constant;
mod diag;
mod dual;
pub mod float;
mod kstein;
mod orthogonal;
pub mod symbolic;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::exactnum::{format_rational, parse_rational, Rational};
use crate::sampling;
use crate::space::{CausalType, ScalarProduct, Vector};

pub use constant::constant_sectional;
pub use diag::jacobi_diagonalizable;
pub use dual::{jacobi_dual, DualMode};
pub use kstein::{k_stein, k_stein_with, osserman, osserman_with, KSteinReport, ResidualStatus};
pub use orthogonal::{jacobi_orthogonal, jo_value, q_value, search_orthogonal_witness};

/// `n ≤ SYMBOLIC_MAX_DIM` uses full symbolic expansion by default.
pub const SYMBOLIC_MAX_DIM: usize = 4;

/// How a polynomial identity is decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Symbolic for `n ≤ SYMBOLIC_MAX_DIM`, sampled otherwise.
    #[default]
    Auto,
    /// Full expansion; verdicts are exact.
    Symbolic,
    /// Randomized identity testing with a stated error bound.
    Sampled,
}

impl Mode {
    pub fn symbolic_for(self, n: usize) -> bool {
        match self {
            Mode::Auto => n <= SYMBOLIC_MAX_DIM,
            Mode::Symbolic => true,
            Mode::Sampled => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum CheckError {
    #[error("k must satisfy 1 <= k <= {n}, got {k}")]
    InvalidK { k: usize, n: usize },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsExact,
    HoldsProbabilistic,
    Fails,
}

impl Verdict {
    pub fn holds(self) -> bool {
        !matches!(self, Verdict::Fails)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HoldsExact => "holds-exact",
            Verdict::HoldsProbabilistic => "holds-probabilistic",
            Verdict::Fails => "fails",
        })
    }
}

/// Data demonstrating a failure. Vectors and values are stored as exact
/// rational strings.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Witness {
    pub description: String,
    pub vectors: BTreeMap<String, Vec<String>>,
    pub values: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Witness { description: description.into(), ..Default::default() }
    }

    pub fn vector(mut self, name: &str, v: &[Rational]) -> Self {
        self.vectors.insert(name.to_string(), v.iter().map(format_rational).collect());
        self
    }

    pub fn text_vector(mut self, name: &str, v: Vec<String>) -> Self {
        self.vectors.insert(name.to_string(), v);
        self
    }

    pub fn value(mut self, name: &str, v: &Rational) -> Self {
        self.values.insert(name.to_string(), format_rational(v));
        self
    }

    pub fn text(mut self, name: &str, v: impl Into<String>) -> Self {
        self.values.insert(name.to_string(), v.into());
        self
    }

    /// Parses a stored rational vector back.
    pub fn get_vector(&self, name: &str) -> Option<Vector> {
        self.vectors.get(name)?.iter().map(|s| parse_rational(s).ok()).collect()
    }

    pub fn get_value(&self, name: &str) -> Option<Rational> {
        parse_rational(self.values.get(name)?).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub trials: usize,
    pub seed: u64,
    /// An exact rational bound for identity tests, or `"sampled-only"` when
    /// the verdict rests on sampling without a quantitative bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn new(property: &str, verdict: Verdict, trials: usize, seed: u64) -> Self {
        PropertyReport {
            property: property.to_string(),
            verdict,
            witness: None,
            trials,
            seed,
            error_bound: None,
            values: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_bound(mut self, b: impl Into<String>) -> Self {
        self.error_bound = Some(b.into());
        self
    }

    pub fn with_value(mut self, k: &str, v: impl Into<String>) -> Self {
        self.values.insert(k.to_string(), v.into());
        self
    }

    pub fn with_note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// `e_i`.
pub fn basis_vector(n: usize, i: usize) -> Vector {
    (0..n).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect()
}

/// Deterministic candidates `e_i`, then `e_i + e_j`, then `e_i − e_j`.
pub fn reference_candidates(n: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..n).map(|i| basis_vector(n, i)).collect();
    for sign in [1i64, -1] {
        for i in 0..n {
            for j in i + 1..n {
                let mut v = basis_vector(n, i);
                v[j] = Rational::from_integer(sign.into());
                out.push(v);
            }
        }
    }
    out
}

/// Nonnull vectors for sampled checks: nonnull basis vectors first, then
/// `trials` random nonnull vectors cycling through the available causal
/// types. Trial `t` draws from `rng_for(seed, t)`.
pub fn sample_nonnull(g: &ScalarProduct, trials: usize, seed: u64) -> Vec<Vector> {
    let n = g.dim();
    let mut out: Vec<Vector> = (0..n).map(|i| basis_vector(n, i)).filter(|v| !g.eps(v).is_zero()).collect();
    let types = g.nonnull_types();
    for t in 0..trials {
        let mut rng = sampling::rng_for(seed, t as u64);
        out.push(g.random_of_type(&mut rng, types[t % types.len()]));
    }
    out
}

/// `count` random nonnull vectors of type `ty`.
pub fn sample_of_type(g: &ScalarProduct, ty: CausalType, count: usize, rng: &mut impl Rng) -> Vec<Vector> {
    (0..count).map(|_| g.random_of_type(rng, ty)).collect()
}

/// The first nonnull vector satisfying `pred`, searched among `first`, the
/// reference candidates, `{-1,0,1}^n` and finally random vectors.
pub fn find_nonnull(
    g: &ScalarProduct,
    seed: u64,
    first: &[Vector],
    pred: impl Fn(&Vector) -> bool,
) -> Option<Vector> {
    let n = g.dim();
    let ok = |v: &Vector| !g.eps(v).is_zero() && pred(v);
    if let Some(v) = first.iter().chain(&reference_candidates(n)).find(|v| ok(v)) {
        return Some(v.clone());
    }
    if let Some(v) = small_vectors(n).into_iter().find(|v| ok(v)) {
        return Some(v);
    }
    let mut rng = sampling::rng_for(seed, RANDOM_SEARCH_STREAM);
    (0..RANDOM_SEARCH_LIMIT).map(|_| g.random_nonnull(&mut rng)).find(|v| pred(v))
}

const RANDOM_SEARCH_STREAM: u64 = 0x5eed_0001;
const RANDOM_SEARCH_LIMIT: usize = 2000;

/// All vectors of `{-1, 0, 1}^n` except 0, ordered by number of nonzero
/// entries, then lexicographically with `1 > 0 > -1`.
pub fn small_vectors(n: usize) -> Vec<Vector> {
    let total = 3usize.pow(n as u32);
    let mut out: Vec<Vec<i64>> = (0..total)
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let d = [1i64, 0, -1][c % 3];
                    c /= 3;
                    d
                })
                .collect::<Vec<i64>>()
        })
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    out.sort_by(|a, b| {
        let wa = a.iter().filter(|&&x| x != 0).count();
        let wb = b.iter().filter(|&&x| x != 0).count();
        wa.cmp(&wb).then_with(|| b.cmp(a))
    });
    out.into_iter().map(|v| v.into_iter().map(|x| Rational::from_integer(x.into())).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn small_vector_order() {
        let vs = small_vectors(3);
        assert_eq!(vs.len(), 26);
        assert_eq!(vs[0], vec![int(1), int(0), int(0)]);
        assert_eq!(vs[6], vec![int(1), int(1), int(0)]);
        assert!(vs.iter().position(|v| v == &vec![int(1), int(-1), int(1)]).unwrap() > 17);
    }

    #[test]
    fn reports_serialize_with_stable_keys() {
        let r = PropertyReport::new("jacobi-orthogonal", Verdict::Fails, 0, 7)
            .with_witness(Witness::new("w").vector("X", &[int(1), int(1)]).value("value", &int(-3)));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "fails");
        assert_eq!(v["witness"]["vectors"]["X"][0], "1");
        assert_eq!(r.witness.unwrap().get_value("value"), Some(int(-3)));
    }
}
