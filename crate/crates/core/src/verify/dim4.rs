use num_traits::{One, Zero};
use serde::Serialize;

use super::gen::{self, add, scale};
use super::{run, Instance, Outcome, SuiteConfig, SuiteError, SuiteReport, EXPLORATORY_FROM};
use crate::checks::{constant_sectional, jacobi_diagonalizable, jacobi_orthogonal, osserman_with};
use crate::exactnum::{format_rational, int, Rational};
use crate::jacobi::{reduced_op_with, spectrum, Raised};
use crate::sampling;
use crate::space::{congruence_diagonalize, ScalarProduct, Vector};
use crate::tensor::{catalog, CurvatureTensor};

const DEFAULT_SIGNATURES: [(usize, usize); 3] = [(0, 4), (1, 3), (2, 2)];
const FRAME_ATTEMPTS: usize = 8;

/// Outcome of the eigenframe identities at one base vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenframeReport {
    /// `F1 = X`, then orthogonal eigenvectors `F2, F3, F4` of `J_X`.
    pub frame: Vec<Vec<String>>,
    /// Normalized eigenvalues `λ2, λ3, λ4` of `F2, F3, F4`.
    pub lambdas: Vec<String>,
    pub checked: usize,
    /// Names of the identities that failed.
    pub failed: Vec<String>,
}

impl EigenframeReport {
    pub fn holds(&self) -> bool {
        self.failed.is_empty()
    }
}

/// An orthogonal nonnull eigenframe of `J_X` with its normalized
/// eigenvalues, when the reduced spectrum is rational and diagonalizable and
/// every eigenspace is nondegenerate.
fn eigenframe(raised: &Raised, g: &ScalarProduct, x: &[Rational]) -> Option<(Vec<Vector>, Vec<Rational>)> {
    let op = reduced_op_with(raised, g, x).ok()?;
    let spec = spectrum(&op).ok()?;
    if !spec.diagonalizable || !spec.is_rational() || spec.has_degenerate_eigenspace() {
        return None;
    }
    let mut frame = vec![x.to_vec()];
    let mut lambdas = Vec::new();
    for item in &spec.items {
        let vs = item.basis.rational()?;
        let gram = crate::exactnum::Matrix::from_fn(vs.len(), vs.len(), |a, b| g.g(&vs[a], &vs[b]));
        let (coords, norms) = congruence_diagonalize(&gram);
        if norms.iter().any(Zero::is_zero) {
            return None;
        }
        for c in coords {
            let f = c.iter().zip(vs).fold(vec![Rational::zero(); g.dim()], |acc, (k, v)| add(&acc, &scale(k, v)));
            frame.push(f);
            lambdas.push(item.lambda.as_rational()?.clone());
        }
    }
    Some((frame, lambdas))
}

/// Checks the dimension-4 eigenframe identities of an Osserman tensor at a
/// nonnull `x`. Returns `None` when `x` admits no orthogonal nonnull
/// rational eigenframe (or the dimension is not 4).
///
/// With `F1 = x`, `R_abcd = R(F_a, F_b, F_c, F_d)` and `ε_a = ε_{F_a}`:
///
/// - `R_i11i = ε_1ε_i λ_i` and `R_2113 = R_2114 = R_3114 = 0`;
/// - `R_1223 = R_1224 = R_1332 = R_1334 = R_1442 = R_1443 = 0`;
/// - `R_3223 = ε_2ε_3 λ_4`, `R_4224 = ε_2ε_4 λ_3`, `R_4334 = ε_3ε_4 λ_2`;
/// - `R_2443 = R_2334 = R_3224 = 0`;
/// - `λ_2² + λ_3² + λ_4² = c_2`, with `c_2` taken at a reference vector;
/// - `(λ_3−λ_2)²·Πε = (R_1234+R_1324)²`, `(λ_2−λ_4)²·Πε = (R_1324−2R_1234)²`
///   and `(λ_4−λ_3)²·Πε = (R_1234−2R_1324)²`.
pub fn eigenframe_identities(r: &CurvatureTensor, x: &[Rational]) -> Option<EigenframeReport> {
    let g = r.metric();
    if g.dim() != 4 || g.eps(x).is_zero() {
        return None;
    }
    let raised = Raised::new(r);
    let (f, lambdas) = eigenframe(&raised, g, x)?;
    let e: Vec<Rational> = f.iter().map(|v| g.eps(v)).collect();
    let rr = |a: usize, b: usize, c: usize, d: usize| r.ev(&f[a - 1], &f[b - 1], &f[c - 1], &f[d - 1]);
    let lam = |i: usize| lambdas[i - 2].clone();
    let ep = |i: usize| e[i - 1].clone();
    let prod: Rational = e.iter().fold(Rational::one(), |acc, v| acc * v);

    let reference = crate::checks::reference_candidates(4).into_iter().find(|v| !g.eps(v).is_zero())?;
    let m = raised.matrix(&reference);
    let c2 = m.mul(&m).trace() / (g.eps(&reference) * g.eps(&reference));

    let mut checks: Vec<(&str, bool)> = Vec::new();
    for i in 2..=4 {
        checks.push(("R_i11i = ε_1ε_i λ_i", rr(i, 1, 1, i) == ep(1) * ep(i) * lam(i)));
    }
    checks.push(("R_2113 = R_2114 = R_3114 = 0", [rr(2, 1, 1, 3), rr(2, 1, 1, 4), rr(3, 1, 1, 4)].iter().all(Zero::is_zero)));
    checks.push((
        "R_1223 = R_1224 = R_1332 = R_1334 = R_1442 = R_1443 = 0",
        [rr(1, 2, 2, 3), rr(1, 2, 2, 4), rr(1, 3, 3, 2), rr(1, 3, 3, 4), rr(1, 4, 4, 2), rr(1, 4, 4, 3)]
            .iter()
            .all(Zero::is_zero),
    ));
    checks.push(("R_3223 = ε_2ε_3 λ_4", rr(3, 2, 2, 3) == ep(2) * ep(3) * lam(4)));
    checks.push(("R_4224 = ε_2ε_4 λ_3", rr(4, 2, 2, 4) == ep(2) * ep(4) * lam(3)));
    checks.push(("R_4334 = ε_3ε_4 λ_2", rr(4, 3, 3, 4) == ep(3) * ep(4) * lam(2)));
    checks.push(("R_2443 = R_2334 = R_3224 = 0", [rr(2, 4, 4, 3), rr(2, 3, 3, 4), rr(3, 2, 2, 4)].iter().all(Zero::is_zero)));
    checks.push(("λ_2² + λ_3² + λ_4² = c_2", lambdas.iter().map(|l| l * l).sum::<Rational>() == c2));
    let (r1234, r1324) = (rr(1, 2, 3, 4), rr(1, 3, 2, 4));
    let sq = |v: Rational| &v * &v;
    let two = int(2);
    checks.push(("(λ_3−λ_2)²·Πε = (R_1234+R_1324)²", sq(lam(3) - lam(2)) * &prod == sq(&r1234 + &r1324)));
    checks.push(("(λ_2−λ_4)²·Πε = (R_1324−2R_1234)²", sq(lam(2) - lam(4)) * &prod == sq(&r1324 - &two * &r1234)));
    checks.push(("(λ_4−λ_3)²·Πε = (R_1234−2R_1324)²", sq(lam(4) - lam(3)) * &prod == sq(&r1234 - &two * &r1324)));

    Some(EigenframeReport {
        frame: f.iter().map(|v| v.iter().map(format_rational).collect()).collect(),
        lambdas: lambdas.iter().map(format_rational).collect(),
        checked: checks.len(),
        failed: checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.to_string()).collect(),
    })
}

#[derive(Clone, Copy)]
enum Spec {
    Catalog { sig: (usize, usize), t: usize, perturb: bool },
    Exploratory { d: usize, t: usize, perturb: bool },
}

/// In dimension 4, a Jacobi-diagonalizable tensor is Osserman exactly when
/// it is Jacobi-orthogonal.
pub fn suite_dim4(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    cfg.validate()?;
    let sigs = cfg.signatures_or(&DEFAULT_SIGNATURES);
    if let Some((p, q)) = sigs.iter().find(|(p, q)| p + q != 4) {
        return Err(SuiteError::Config(format!("signature ({p},{q}) is not four-dimensional")));
    }
    let mut specs = Vec::new();
    for &sig in &sigs {
        specs.extend((0..cfg.trials).map(|t| Spec::Catalog { sig, t: t / 2, perturb: t % 2 == 1 }));
    }
    for &d in cfg.dims.iter().filter(|&&d| d >= EXPLORATORY_FROM) {
        specs.extend((0..cfg.trials).map(|t| Spec::Exploratory { d, t: t / 2, perturb: t % 2 == 1 }));
    }
    Ok(run("dim4", cfg, specs, |index, spec| {
        let seed = sampling::derive_seed(cfg.seed, index as u64);
        let mut rng = sampling::rng(seed);
        let (sig, t, perturb, exploratory) = match *spec {
            Spec::Catalog { sig, t, perturb } => (sig, t, perturb, false),
            Spec::Exploratory { d, t, perturb } => ((0, d), t, perturb, true),
        };
        let (p, q) = sig;
        let families = catalog::families_for(p, q);
        let family = families[t % families.len()];
        let (mut r, mut label) = gen::catalog_instance(family, p, q, &mut rng).expect("available family");
        if perturb {
            let (pr, pl) = gen::perturbed(&r, &mut rng);
            r = pr;
            label = format!("{label} {pl}");
        }
        let mut inst = Instance::new(index, label, sig);
        inst.tensor(&r);
        let explore = exploratory.then_some(Outcome::Exploratory);

        let diag = jacobi_diagonalizable(&r, cfg.check_trials, seed);
        inst.verdict(&diag);
        if !diag.holds() {
            inst.count("non_diagonalizable", 1);
            return inst.finish_as(Some(if exploratory { Outcome::Exploratory } else { Outcome::Skipped }));
        }
        let os = match osserman_with(&r, cfg.mode, cfg.check_trials, seed) {
            Ok(rep) => rep,
            Err(e) => {
                inst.expect(false, format!("osserman: {e}"));
                return inst.finish_as(explore);
            }
        };
        let jo = jacobi_orthogonal(&r, cfg.mode, cfg.check_trials, seed);
        inst.verdict(&os);
        inst.verdict(&jo);
        inst.count(if os.holds() { "osserman" } else { "not_osserman" }, 1);
        inst.expect(os.holds() == jo.holds(), "osserman and jacobi-orthogonal disagree");
        if exploratory {
            return inst.finish_as(explore);
        }
        if os.holds() && (p == 1 || q == 1) {
            let cs = constant_sectional(&r);
            inst.verdict(&cs);
            inst.expect(cs.holds(), "Lorentzian Osserman tensor without constant sectional curvature");
        }
        if os.holds() && p != 1 && q != 1 {
            let g = r.metric();
            let frame = (0..FRAME_ATTEMPTS).find_map(|_| eigenframe_identities(&r, &g.random_nonnull(&mut rng)));
            match frame {
                Some(ef) => {
                    inst.count("eigenframes_checked", 1);
                    inst.count("eigenframe_identities", ef.checked as u64);
                    inst.result("eigenframe-lambdas", ef.lambdas.join(","));
                    for name in &ef.failed {
                        inst.expect(false, format!("eigenframe identity fails: {name}"));
                    }
                }
                None => inst.note("no orthogonal nonnull rational eigenframe found"),
            }
        }
        inst.finish()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::constant_curvature;

    #[test]
    fn complex_example_eigenframe() {
        let r = catalog::family_tensor("complex", 0, 4, &[int(1), int(-1)]).unwrap();
        let x = vec![int(1), int(0), int(0), int(0)];
        let ef = eigenframe_identities(&r, &x).unwrap();
        assert!(ef.holds(), "{:?}", ef.failed);
        let mut l = ef.lambdas.clone();
        l.sort();
        assert_eq!(l, vec!["1", "1", "4"]);
    }

    #[test]
    fn eigenframe_detects_non_osserman_tensors() {
        let g = ScalarProduct::canonical(0, 4);
        let r = crate::tensor::perturb_orbit(&constant_curvature(&g, &int(1)), [0, 1, 1, 2], &crate::exactnum::rat(1, 7))
            .unwrap();
        let x = vec![int(0), int(0), int(0), int(1)];
        let ef = eigenframe_identities(&r, &x).unwrap();
        assert!(!ef.holds());
    }

    #[test]
    fn small_run_agrees() {
        let rep = suite_dim4(&SuiteConfig::new(4, 7)).unwrap();
        assert!(rep.passed, "{}", rep.to_json());
        assert!(rep.metrics["osserman"] >= 4);
        assert!(rep.metrics.get("not_osserman").copied().unwrap_or(0) >= 3);
    }
}
