use num_traits::Zero;
use rand::Rng;

use super::gen::{orthogonal_pair, scale, sub};
use super::{run, Instance, SuiteConfig, SuiteError, SuiteReport};
use crate::checks::{constant_sectional, jacobi_orthogonal};
use crate::exactnum::{int, Rational};
use crate::sampling;
use crate::space::{ScalarProduct, Vector};
use crate::tensor::{constant_curvature, diagonal_dim3, random_curvature, CurvatureTensor};

const DEFAULT_SIGNATURES: [(usize, usize); 2] = [(0, 3), (1, 2)];
const TRIPLES: usize = 3;

enum Spec {
    Constant((usize, usize)),
    Diagonal((usize, usize)),
    Random((usize, usize)),
    Witness,
}

fn small(rng: &mut impl Rng) -> Rational {
    sampling::small_rational(rng, 6, 3)
}

/// A random orthogonal nonnull triple.
fn orthogonal_triple(g: &ScalarProduct, rng: &mut impl Rng) -> (Vector, Vector, Vector) {
    let (a, b) = orthogonal_pair(g, rng);
    let c = g
        .orthogonal_complement(&a)
        .expect("A is nonnull")
        .into_iter()
        .map(|w| sub(&scale(&g.eps(&b), &w), &scale(&g.g(&b, &w), &b)))
        .find(|c| !g.eps(c).is_zero())
        .expect("A^⊥ ∩ B^⊥ is a nondegenerate line");
    (a, b, c)
}

/// `R(B,A,A,C)·R(A,B,B,C)` and `(ε_C R(B,A,A,B) − ε_B R(C,A,A,C))·R(A,B,B,C)`.
pub(crate) fn triple_identities(r: &CurvatureTensor, a: &[Rational], b: &[Rational], c: &[Rational]) -> (Rational, Rational) {
    let g = r.metric();
    let rabbc = r.ev(a, b, b, c);
    let first = r.ev(b, a, a, c) * &rabbc;
    let second = (g.eps(c) * r.ev(b, a, a, b) - g.eps(b) * r.ev(c, a, a, c)) * &rabbc;
    (first, second)
}

/// In dimension 3, Jacobi-orthogonality is equivalent to constant
/// sectional curvature.
pub fn suite_dim3(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    cfg.validate()?;
    let sigs = cfg.signatures_or(&DEFAULT_SIGNATURES);
    if let Some((p, q)) = sigs.iter().find(|(p, q)| p + q != 3) {
        return Err(SuiteError::Config(format!("signature ({p},{q}) is not three-dimensional")));
    }
    let mut specs = Vec::new();
    for &sig in &sigs {
        for t in 0..cfg.trials {
            specs.push(match t % 3 {
                0 => Spec::Constant(sig),
                1 => Spec::Diagonal(sig),
                _ => Spec::Random(sig),
            });
        }
    }
    if sigs.contains(&(0, 3)) {
        specs.push(Spec::Witness);
    }
    Ok(run("dim3", cfg, specs, |index, spec| {
        let seed = sampling::derive_seed(cfg.seed, index as u64);
        let mut rng = sampling::rng(seed);
        let (r, label, sig) = match *spec {
            Spec::Constant(sig) => {
                let mu = small(&mut rng);
                let g = ScalarProduct::canonical(sig.0, sig.1);
                (constant_curvature(&g, &mu), format!("constant mu={mu}"), sig)
            }
            Spec::Diagonal(sig) => {
                let (a, b, c) = (small(&mut rng), small(&mut rng), small(&mut rng));
                let g = ScalarProduct::canonical(sig.0, sig.1);
                let r = diagonal_dim3(&g, &a, &b, &c).expect("diagonal tensors are valid");
                (r, format!("kn-diagonal ({a},{b},{c})"), sig)
            }
            Spec::Random(sig) => {
                let g = ScalarProduct::canonical(sig.0, sig.1);
                let r = random_curvature(&g, seed, 5).expect("random tensors are valid");
                (r, format!("random seed={seed}"), sig)
            }
            Spec::Witness => {
                let g = ScalarProduct::canonical(0, 3);
                let r = diagonal_dim3(&g, &int(0), &int(2), &int(1)).expect("valid");
                (r, "kn-diagonal (0,2,1) witness".to_string(), (0, 3))
            }
        };
        let mut inst = Instance::new(index, label, sig);
        inst.tensor(&r);
        let jo = jacobi_orthogonal(&r, cfg.mode, cfg.check_trials, seed);
        let cs = constant_sectional(&r);
        inst.verdict(&jo);
        inst.verdict(&cs);
        inst.expect(jo.holds() == cs.holds(), "jacobi-orthogonal and constant-sectional-curvature disagree");
        if let Spec::Witness = spec {
            let w = jo.witness.as_ref();
            let ok = !jo.holds()
                && w.and_then(|w| w.get_vector("X")) == Some(vec![int(1), int(1), int(0)])
                && w.and_then(|w| w.get_vector("Y")) == Some(vec![int(1), int(-1), int(1)])
                && w.and_then(|w| w.get_value("value")) == Some(int(-3));
            inst.expect(ok, "stored witness X=(1,1,0), Y=(1,-1,1), value -3 not reproduced");
        }
        if jo.holds() {
            let g = r.metric();
            for _ in 0..TRIPLES {
                let (a, b, c) = orthogonal_triple(g, &mut rng);
                let (first, second) = triple_identities(&r, &a, &b, &c);
                inst.expect(first.is_zero() && second.is_zero(), "triple identity fails on a Jacobi-orthogonal tensor");
                inst.count("triples_checked", 1);
            }
        }
        inst.count(if jo.holds() { "jacobi_orthogonal" } else { "not_jacobi_orthogonal" }, 1);
        inst.finish()
    }))
}
