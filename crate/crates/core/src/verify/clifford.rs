use super::gen::{self, orthogonal_pair};
use super::{run, Instance, Outcome, SuiteConfig, SuiteError, SuiteReport};
use crate::checks::jacobi_orthogonal;
use crate::exactnum::{int, Rational};
use crate::jacobi::Raised;
use crate::sampling;
use crate::space::{ScalarProduct, Vector};
use crate::tensor::catalog;

const DEFAULT_SIGNATURES: [(usize, usize); 4] = [(0, 2), (0, 4), (1, 1), (2, 2)];
const CLOSED_FORM_PAIRS: usize = 3;

enum Spec {
    Family { sig: (usize, usize), family: &'static str },
    Corrupted { sig: (usize, usize) },
}

/// Every catalog quasi-Clifford tensor is Jacobi-orthogonal, and for
/// `X ⊥ Y` its Jacobi operator is `μ₀ε_X Y + 3Σ μ_i g(J_i Y, X) J_i X`.
pub fn suite_clifford_jo(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    cfg.validate()?;
    let sigs = cfg.signatures_or(&DEFAULT_SIGNATURES);
    let mut specs = Vec::new();
    for &(p, q) in &sigs {
        let families: Vec<&'static str> =
            catalog::CLIFFORD_FAMILIES.iter().copied().filter(|f| catalog::available(f, p, q)).collect();
        if families.is_empty() {
            return Err(SuiteError::Config(format!("no quasi-Clifford family available in signature ({p},{q})")));
        }
        for family in families {
            specs.extend((0..cfg.trials).map(|_| Spec::Family { sig: (p, q), family }));
        }
    }
    if cfg.include_corrupted {
        specs.push(Spec::Corrupted { sig: sigs[0] });
    }
    Ok(run("clifford-jo", cfg, specs, |index, spec| {
        let seed = sampling::derive_seed(cfg.seed, index as u64);
        let mut rng = sampling::rng(seed);
        match *spec {
            Spec::Corrupted { sig: (p, q) } => {
                let mut inst = Instance::new(index, format!("corrupted family ({p},{q})"), (p, q));
                match gen::corrupted_instance(p, q) {
                    Some(Err(e)) => {
                        inst.note(e.to_string());
                        inst.finish_as(Some(Outcome::InvalidInput))
                    }
                    _ => {
                        inst.expect(false, "corrupted family was accepted by the constructor");
                        inst.finish()
                    }
                }
            }
            Spec::Family { sig: (p, q), family } => {
                let maps = catalog::family_maps(family, p, q).expect("filtered by availability");
                let mus = gen::random_mus(&mut rng, maps.len() + 1);
                let r = catalog::family_tensor(family, p, q, &mus).expect("catalog tensors are valid");
                let mut inst = Instance::new(index, format!("{family} ({p},{q}) mu={}", gen::mus_label(&mus)), (p, q));
                inst.tensor(&r);
                let rep = jacobi_orthogonal(&r, cfg.mode, cfg.check_trials, seed);
                inst.verdict(&rep);
                inst.expect(rep.holds(), "jacobi-orthogonal fails on a quasi-Clifford tensor");
                let g = r.metric();
                let raised = Raised::new(&r);
                for _ in 0..CLOSED_FORM_PAIRS {
                    let (x, y) = orthogonal_pair(g, &mut rng);
                    let expected = closed_form(g, &maps, &mus, &x, &y);
                    inst.expect(raised.apply(&x, &y) == expected, "J_X Y differs from the closed form");
                    inst.count("closed_form_pairs", 1);
                }
                inst.finish()
            }
        }
    }))
}

/// `μ₀ε_X Y + 3Σ μ_i g(J_i Y, X) J_i X` for `X ⊥ Y`.
fn closed_form(
    g: &ScalarProduct,
    maps: &[(crate::exactnum::Matrix<Rational>, Rational)],
    mus: &[Rational],
    x: &[Rational],
    y: &[Rational],
) -> Vector {
    let mut out = gen::scale(&(&mus[0] * g.eps(x)), y);
    for ((j, _), mu) in maps.iter().zip(&mus[1..]) {
        let c = int(3) * mu * g.g(&j.mul_vec(y), x);
        out = gen::add(&out, &gen::scale(&c, &j.mul_vec(x)));
    }
    out
}
