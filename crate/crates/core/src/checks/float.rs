//! Tolerance-based variants of the sampled checks.
//!
//! Components are converted to `f64` once. Sample vectors have unit
//! Euclidean length and every residual is compared against the absolute
//! tolerance `tol`. Verdicts are never better than `holds-probabilistic`.

use rand::Rng;

use super::{reference_candidates, CheckError, PropertyReport, Verdict, Witness};
use crate::exactnum::{Approx, Scalar};
use crate::sampling;
use crate::tensor::{constant_curvature, index_tuples, CurvatureTensor};

pub struct FloatTensor {
    n: usize,
    gram: Vec<Vec<f64>>,
    raised: Vec<(usize, usize, usize, usize, f64)>,
    comps: Vec<f64>,
}

impl FloatTensor {
    pub fn new(r: &CurvatureTensor) -> Self {
        let n = r.dim();
        let g = r.metric().gram();
        let raised = crate::jacobi::Raised::new(r)
            .entries()
            .iter()
            .map(|(a, b, i, j, v)| (*a, *b, *i, *j, Scalar::to_f64(v)))
            .collect();
        FloatTensor {
            n,
            gram: (0..n).map(|a| (0..n).map(|b| Scalar::to_f64(&g[(a, b)])).collect()).collect(),
            raised,
            comps: r.components().iter().map(Scalar::to_f64).collect(),
        }
    }

    pub fn g(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut acc = 0.0;
        for a in 0..self.n {
            for b in 0..self.n {
                acc += self.gram[a][b] * x[a] * y[b];
            }
        }
        acc
    }

    /// `J_X Y`.
    pub fn apply(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for &(a, b, i, j, v) in &self.raised {
            out[a] += v * y[b] * x[i] * x[j];
        }
        out
    }

    /// Row-major matrix of `J_X`.
    pub fn matrix(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; self.n]; self.n];
        for &(a, b, i, j, v) in &self.raised {
            m[a][b] += v * x[i] * x[j];
        }
        m
    }
}

fn unit_sample(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

fn traces(m: &[Vec<f64>], k: usize) -> Vec<f64> {
    let n = m.len();
    let mut p = m.to_vec();
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        if j > 0 {
            p = (0..n).map(|a| (0..n).map(|b| (0..n).map(|c| p[a][c] * m[c][b]).sum()).collect()).collect();
        }
        out.push((0..n).map(|a| p[a][a]).sum());
    }
    out
}

fn fmt_vec(v: &[f64]) -> Vec<String> {
    v.iter().map(|x| format!("{x:e}")).collect()
}

fn approx_zero(v: f64, tol: f64) -> bool {
    num_traits::Zero::is_zero(&Approx::new(v, tol))
}

/// `k`-stein with tolerance: `tr(J_X^j) − c_j ε_X^j` at `trials` unit samples.
pub fn k_stein(r: &CurvatureTensor, k: usize, tol: f64, trials: usize, seed: u64) -> Result<PropertyReport, CheckError> {
    let n = r.dim();
    if k == 0 || k > n {
        return Err(CheckError::InvalidK { k, n });
    }
    if trials == 0 {
        return Err(CheckError::NoTrials);
    }
    let ft = FloatTensor::new(r);
    let reference: Vec<f64> = reference_candidates(n)
        .into_iter()
        .map(|v| v.iter().map(Scalar::to_f64).collect::<Vec<f64>>())
        .find(|v| ft.g(v, v) != 0.0)
        .expect("a nondegenerate form has a nonnull candidate");
    let e = ft.g(&reference, &reference);
    let cs: Vec<f64> =
        traces(&ft.matrix(&reference), k).iter().enumerate().map(|(j, t)| t / e.powi(j as i32 + 1)).collect();
    let property = format!("{k}-stein");
    let mut rng = sampling::rng(seed);
    for _ in 0..trials {
        let x = unit_sample(&mut rng, n);
        let ex = ft.g(&x, &x);
        for (j, t) in traces(&ft.matrix(&x), k).into_iter().enumerate() {
            let res = t - cs[j] * ex.powi(j as i32 + 1);
            if !approx_zero(res, tol) {
                return Ok(PropertyReport::new(&property, Verdict::Fails, trials, seed).with_witness(
                    Witness::new(format!("tr(J_X^{}) − c_{}·ε_X^{} exceeds the tolerance", j + 1, j + 1, j + 1))
                        .text_vector("X", fmt_vec(&x))
                        .text("residual", format!("{res:e}")),
                ));
            }
        }
    }
    let mut rep = PropertyReport::new(&property, Verdict::HoldsProbabilistic, trials, seed)
        .with_bound("sampled-only")
        .with_note(format!("float backend, tolerance {tol:e}"));
    for (j, c) in cs.iter().enumerate() {
        rep = rep.with_value(&format!("c{}", j + 1), format!("{c}"));
    }
    Ok(rep)
}

pub fn osserman(r: &CurvatureTensor, tol: f64, trials: usize, seed: u64) -> Result<PropertyReport, CheckError> {
    let mut rep = k_stein(r, r.dim(), tol, trials, seed)?;
    rep.property = "osserman".to_string();
    Ok(rep)
}

/// `Q(X,Y)` at unit samples, compared against `tol`.
pub fn jacobi_orthogonal(r: &CurvatureTensor, tol: f64, trials: usize, seed: u64) -> PropertyReport {
    let n = r.dim();
    let ft = FloatTensor::new(r);
    let trials = trials.max(1);
    let mut rng = sampling::rng(seed);
    for _ in 0..trials {
        let x = unit_sample(&mut rng, n);
        let y = unit_sample(&mut rng, n);
        let jxy = ft.apply(&x, &y);
        let jyx = ft.apply(&y, &x);
        let q = ft.g(&x, &x) * ft.g(&jxy, &jyx) + ft.g(&x, &y) * ft.g(&jxy, &jxy);
        if !approx_zero(q, tol) {
            return PropertyReport::new("jacobi-orthogonal", Verdict::Fails, trials, seed).with_witness(
                Witness::new("Q(X,Y) = ε_X·g(J_X Y, J_Y X) + g(X,Y)·g(J_X Y, J_X Y) exceeds the tolerance")
                    .text_vector("X", fmt_vec(&x))
                    .text_vector("Y", fmt_vec(&y))
                    .text("Q", format!("{q:e}")),
            );
        }
    }
    PropertyReport::new("jacobi-orthogonal", Verdict::HoldsProbabilistic, trials, seed)
        .with_bound("sampled-only")
        .with_note(format!("float backend, tolerance {tol:e}"))
}

/// `R = μR¹` up to `tol` in every component.
pub fn constant_sectional(r: &CurvatureTensor, tol: f64) -> PropertyReport {
    let n = r.dim();
    let ft = FloatTensor::new(r);
    let one = constant_curvature(r.metric(), &crate::exactnum::int(1));
    let one_f: Vec<f64> = one.components().iter().map(Scalar::to_f64).collect();
    let idx = |t: [usize; 4]| ((t[0] * n + t[1]) * n + t[2]) * n + t[3];
    let property = "constant-sectional-curvature";
    let Some(t0) = index_tuples(n).find(|t| one_f[idx(*t)] != 0.0) else {
        return PropertyReport::new(property, Verdict::HoldsProbabilistic, 0, 0).with_value("mu", "0");
    };
    let mu = ft.comps[idx(t0)] / one_f[idx(t0)];
    for t in index_tuples(n) {
        let d = ft.comps[idx(t)] - mu * one_f[idx(t)];
        if !approx_zero(d, tol) {
            return PropertyReport::new(property, Verdict::Fails, 0, 0).with_witness(
                Witness::new("component differs from μ·R¹ beyond the tolerance")
                    .text("indices", t.map(|i| (i + 1).to_string()).join(","))
                    .text("difference", format!("{d:e}"))
                    .text("mu", format!("{mu}")),
            );
        }
    }
    PropertyReport::new(property, Verdict::HoldsProbabilistic, 0, 0)
        .with_value("mu", format!("{mu}"))
        .with_note(format!("float backend, tolerance {tol:e}"))
}
