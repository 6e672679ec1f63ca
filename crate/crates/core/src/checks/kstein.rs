use num_traits::{One, Zero};
use serde::Serialize;

use super::{
    find_nonnull, reference_candidates, sample_of_type, symbolic, CheckError, Mode, PropertyReport, Verdict, Witness,
};
use crate::exactnum::{format_rational, identity_test, IdentityVerdict, Matrix, Poly, Rational};
use crate::jacobi::{reduced_op_with, Raised};
use crate::sampling;
use crate::space::{ScalarProduct, Vector};
use crate::tensor::CurvatureTensor;

/// Samples per causal type in the Osserman cross-check.
pub const CROSS_CHECK_SAMPLES: usize = 20;

/// Default number of random points per sampled identity.
pub const DEFAULT_TRIALS: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ResidualStatus {
    Zero,
    Nonzero { point: Vec<String>, value: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct KSteinReport {
    pub k: usize,
    /// `c_1, …, c_k`: normalized traces `tr(J_X^j)/ε_X^j` at [`reference`](Self::reference).
    pub constants: Vec<Rational>,
    pub reference: Vector,
    /// Status of `tr(J_X^j) − c_j·ε_X^j` for each `j`.
    pub residuals: Vec<ResidualStatus>,
    pub report: PropertyReport,
}

/// `tr(M^j)` for `j = 1..=k`.
fn traces(m: &Matrix<Rational>, k: usize) -> Vec<Rational> {
    let mut p = m.clone();
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        if j > 0 {
            p = p.mul(m);
        }
        out.push(p.trace());
    }
    out
}

fn pow(x: &Rational, j: usize) -> Rational {
    (0..j).fold(Rational::one(), |acc, _| acc * x)
}

struct Residuals<'a> {
    raised: Raised,
    g: &'a ScalarProduct,
    constants: Vec<Rational>,
}

impl Residuals<'_> {
    /// `tr(J_X^j) − c_j·ε_X^j` for all `j`.
    fn at(&self, x: &[Rational]) -> Vec<Rational> {
        let e = self.g.eps(x);
        traces(&self.raised.matrix(x), self.constants.len())
            .into_iter()
            .enumerate()
            .map(|(j, t)| t - &self.constants[j] * pow(&e, j + 1))
            .collect()
    }
}

pub fn k_stein(r: &CurvatureTensor, k: usize) -> Result<KSteinReport, CheckError> {
    k_stein_with(r, k, Mode::Auto, DEFAULT_TRIALS, 0)
}

/// Decides whether `tr(J_X^j) = c_j·ε_X^j` for `j ≤ k` and all `X`.
pub fn k_stein_with(
    r: &CurvatureTensor,
    k: usize,
    mode: Mode,
    trials: usize,
    seed: u64,
) -> Result<KSteinReport, CheckError> {
    let g = r.metric();
    let n = g.dim();
    if k == 0 || k > n {
        return Err(CheckError::InvalidK { k, n });
    }
    if trials == 0 {
        return Err(CheckError::NoTrials);
    }
    let raised = Raised::new(r);
    let reference = reference_candidates(n)
        .into_iter()
        .find(|v| !g.eps(v).is_zero())
        .expect("a nondegenerate form has a nonnull candidate");
    let e = g.eps(&reference);
    let constants: Vec<Rational> =
        traces(&raised.matrix(&reference), k).into_iter().enumerate().map(|(j, t)| t / pow(&e, j + 1)).collect();
    let res = Residuals { raised, g, constants: constants.clone() };

    let symbolic = mode.symbolic_for(n);
    // index of the first nonzero residual and a point where it is nonzero
    let mut failing: Option<(usize, Option<Vector>)> = None;
    let mut bound = None;
    if symbolic {
        let polys = symbolic::trace_residuals(r, &constants);
        if let Some(j) = polys.iter().position(|p| !p.is_zero()) {
            failing = Some((j, None));
        }
    } else {
        for j in 0..k {
            let eval = |pt: &[Rational]| res.at(pt)[j].clone();
            match identity_test(eval, 2 * (j as i64 + 1), n, trials, sampling::derive_seed(seed, j as u64))
                .expect("valid degree and trials")
            {
                IdentityVerdict::IdenticallyZero { error_bound } => bound = Some(error_bound),
                IdentityVerdict::NonzeroWitness { point, .. } => {
                    failing = Some((j, Some(point)));
                    break;
                }
            }
        }
    }

    let mut residuals = vec![ResidualStatus::Zero; k];
    let property = format!("{k}-stein");
    let mut report = match failing {
        None => {
            let verdict = if symbolic { Verdict::HoldsExact } else { Verdict::HoldsProbabilistic };
            let mut rep = PropertyReport::new(&property, verdict, if symbolic { 0 } else { trials }, seed);
            if let Some(b) = bound {
                rep = rep.with_bound(format_rational(&b));
            }
            rep
        }
        Some((j, point)) => {
            let first: Vec<Vector> = point.into_iter().collect();
            let x = find_nonnull(g, seed, &first, |x| !res.at(x)[j].is_zero())
                .ok_or_else(|| CheckError::InternalInconsistency(format!("no nonnull point with nonzero trace residual j={}", j + 1)))?;
            let values = res.at(&x);
            for (i, v) in values.iter().enumerate() {
                if !v.is_zero() {
                    residuals[i] = ResidualStatus::Nonzero {
                        point: x.iter().map(format_rational).collect(),
                        value: format_rational(v),
                    };
                }
            }
            let trace = &values[j] + &constants[j] * pow(&g.eps(&x), j + 1);
            let w = Witness::new(format!("tr(J_X^{}) differs from c_{}·ε_X^{}", j + 1, j + 1, j + 1))
                .vector("X", &x)
                .vector("reference", &reference)
                .text("j", (j + 1).to_string())
                .value("trace", &trace)
                .value("expected", &(&constants[j] * pow(&g.eps(&x), j + 1)))
                .value("residual", &values[j]);
            PropertyReport::new(&property, Verdict::Fails, if symbolic { 0 } else { trials }, seed).with_witness(w)
        }
    };
    for (j, c) in constants.iter().enumerate() {
        report = report.with_value(&format!("c{}", j + 1), format_rational(c));
    }
    Ok(KSteinReport { k, constants, reference, residuals, report })
}

pub fn osserman(r: &CurvatureTensor) -> Result<PropertyReport, CheckError> {
    osserman_with(r, Mode::Auto, DEFAULT_TRIALS, 0)
}

/// Osserman as `n`-stein, cross-checked against normalized characteristic
/// polynomials of the reduced operator at random nonnull vectors.
pub fn osserman_with(r: &CurvatureTensor, mode: Mode, trials: usize, seed: u64) -> Result<PropertyReport, CheckError> {
    let g = r.metric();
    let n = g.dim();
    let ks = k_stein_with(r, n, mode, trials, seed)?;
    let raised = Raised::new(r);
    let ncp = |x: &[Rational]| -> Poly {
        reduced_op_with(&raised, g, x).expect("nonnull base").normalized_char_poly()
    };
    let reference_cp = ncp(&ks.reference);

    let mut samples: Vec<Vector> = Vec::new();
    if let Some(w) = ks.report.witness.as_ref().and_then(|w| w.get_vector("X")) {
        samples.push(w);
    }
    let mut rng = sampling::rng_for(seed, 0xc0ffee);
    for ty in g.nonnull_types() {
        samples.extend(sample_of_type(g, ty, CROSS_CHECK_SAMPLES, &mut rng));
    }
    let differing = samples.iter().map(|x| (x, ncp(x))).find(|(_, cp)| cp != &reference_cp);

    let mut report = ks.report.clone();
    report.property = "osserman".to_string();
    match (ks.report.holds(), differing) {
        (true, None) => {}
        (true, Some((x, _))) => {
            return Err(CheckError::InternalInconsistency(format!(
                "{n}-stein holds but the normalized characteristic polynomial varies at X = {:?}",
                x.iter().map(format_rational).collect::<Vec<_>>()
            )))
        }
        (false, None) => {
            return Err(CheckError::InternalInconsistency(format!(
                "{n}-stein fails but every sampled normalized characteristic polynomial agrees"
            )))
        }
        (false, Some((x, cp))) => {
            let w = Witness::new("normalized characteristic polynomials differ")
                .vector("X", x)
                .vector("reference", &ks.reference)
                .text("char_poly_X", cp.to_string())
                .text("char_poly_reference", reference_cp.to_string());
            report.witness = Some(w);
        }
    }
    Ok(report.with_value("char_poly", reference_cp.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::tensor::{catalog, constant_curvature, diagonal_dim3};

    #[test]
    fn constant_curvature_is_stein_with_expected_constants() {
        let g = ScalarProduct::canonical(1, 2);
        let r = constant_curvature(&g, &int(3));
        let ks = k_stein(&r, 3).unwrap();
        assert_eq!(ks.report.verdict, Verdict::HoldsExact);
        assert_eq!(ks.constants, vec![int(6), int(18), int(54)]);
    }

    #[test]
    fn invalid_k() {
        let r = constant_curvature(&ScalarProduct::canonical(0, 3), &int(1));
        assert_eq!(k_stein(&r, 0).unwrap_err(), CheckError::InvalidK { k: 0, n: 3 });
        assert_eq!(k_stein(&r, 4).unwrap_err(), CheckError::InvalidK { k: 4, n: 3 });
    }

    #[test]
    fn clifford_family_is_osserman() {
        let r = catalog::family_tensor("complex", 0, 4, &[int(1), int(1)]).unwrap();
        let rep = osserman(&r).unwrap();
        assert_eq!(rep.verdict, Verdict::HoldsExact);
        let sampled = osserman_with(&r, Mode::Sampled, 10, 3).unwrap();
        assert_eq!(sampled.verdict, Verdict::HoldsProbabilistic);
        assert!(sampled.error_bound.is_some());
    }

    #[test]
    fn generic_diagonal_is_not_osserman() {
        let g = ScalarProduct::canonical(0, 3);
        let r = diagonal_dim3(&g, &int(0), &int(2), &int(1)).unwrap();
        let rep = osserman(&r).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        let w = rep.witness.unwrap();
        assert_ne!(w.values["char_poly_X"], w.values["char_poly_reference"]);
        let ks = k_stein(&r, 1).unwrap();
        let x = ks.report.witness.as_ref().unwrap().get_vector("X").unwrap();
        assert!(!g.eps(&x).is_zero());
        assert_eq!(ks.report.verdict, Verdict::Fails);
    }
}
