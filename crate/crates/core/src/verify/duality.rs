use super::gen;
use super::{run, Instance, Outcome, SuiteConfig, SuiteError, SuiteReport, EXPLORATORY_FROM};
use crate::checks::{jacobi_diagonalizable, jacobi_dual, osserman_with, DualMode};
use crate::exactnum::int;
use crate::sampling;
use crate::space::ScalarProduct;
use crate::tensor::{catalog, constant_curvature, diagonal_dim3, random_curvature, CurvatureTensor};

const DEFAULT_SIGNATURES: [(usize, usize); 5] = [(0, 3), (1, 2), (0, 4), (1, 3), (2, 2)];

/// Instance kinds, cycled per signature.
const KINDS: usize = 4;
/// The stored non-Osserman instance with components `(0,2,1)`.
const FIXED: usize = usize::MAX;

fn instance(kind: usize, (p, q): (usize, usize), seed: u64) -> (CurvatureTensor, String) {
    let mut rng = sampling::rng(seed);
    let g = ScalarProduct::canonical(p, q);
    match kind {
        0 => {
            let families = catalog::families_for(p, q);
            let family = families[(seed % families.len() as u64) as usize];
            gen::catalog_instance(family, p, q, &mut rng).expect("available family")
        }
        1 => {
            let (r, _) = gen::catalog_instance("constant", p, q, &mut rng).expect("constant is always available");
            let (r, label) = gen::perturbed(&r, &mut rng);
            (r, format!("constant {label}"))
        }
        2 if p + q == 3 => {
            let abc: Vec<_> = (0..3).map(|_| sampling::small_rational(&mut rng, 6, 3)).collect();
            let r = diagonal_dim3(&g, &abc[0], &abc[1], &abc[2]).expect("valid");
            (r, format!("kn-diagonal ({},{},{})", abc[0], abc[1], abc[2]))
        }
        2 => (constant_curvature(&g, &sampling::small_rational(&mut rng, 6, 3)), "constant".to_string()),
        _ => (random_curvature(&g, seed, 3).expect("valid"), format!("random seed={seed}")),
    }
}

/// Weak and full Jacobi-duality agree, and both agree with Osserman, on
/// Jacobi-diagonalizable tensors.
pub fn suite_duality_crosscheck(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    cfg.validate()?;
    let sigs = cfg.signatures_or(&DEFAULT_SIGNATURES);
    let mut specs: Vec<((usize, usize), usize, bool)> = Vec::new();
    for &sig in &sigs {
        specs.extend((0..cfg.trials).map(|t| (sig, t % KINDS, false)));
    }
    if sigs.contains(&(0, 3)) {
        specs.push(((0, 3), FIXED, false));
    }
    for &d in cfg.dims.iter().filter(|&&d| d >= EXPLORATORY_FROM) {
        specs.extend((0..cfg.trials).map(|t| ((0, d), t % KINDS, true)));
    }
    Ok(run("duality", cfg, specs, |index, &(sig, kind, exploratory)| {
        let seed = sampling::derive_seed(cfg.seed, index as u64);
        let (r, label) = if kind == FIXED {
            let g = ScalarProduct::canonical(0, 3);
            (diagonal_dim3(&g, &int(0), &int(2), &int(1)).expect("valid"), "kn-diagonal (0,2,1)".to_string())
        } else {
            instance(kind, sig, seed)
        };
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
        let weak = jacobi_dual(&r, DualMode::Weak, cfg.check_trials, seed);
        let full = jacobi_dual(&r, DualMode::Full, cfg.check_trials, seed);
        inst.verdict(&os);
        inst.verdict(&weak);
        inst.verdict(&full);
        inst.count(if os.holds() { "osserman" } else { "not_osserman" }, 1);
        inst.expect(weak.holds() == full.holds(), "weak and full Jacobi-duality disagree");
        inst.expect(os.holds() == full.holds(), "osserman and jacobi-dual disagree");
        inst.finish_as(explore)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_agrees() {
        let rep = suite_duality_crosscheck(&SuiteConfig::new(4, 11)).unwrap();
        assert!(rep.passed, "{}", rep.to_json());
        assert!(rep.metrics["osserman"] >= 5);
        assert!(rep.metrics["not_osserman"] >= 5);
    }

    #[test]
    fn stored_dim3_instance_fails_both() {
        let rep = suite_duality_crosscheck(&SuiteConfig::new(4, 0).with_signatures(&[(0, 3)])).unwrap();
        let inst = rep.instances.iter().find(|i| i.label == "kn-diagonal (0,2,1)").unwrap();
        assert_eq!(inst.results["osserman"], "fails");
        assert_eq!(inst.results["jacobi-dual-full"], "fails");
    }
}
