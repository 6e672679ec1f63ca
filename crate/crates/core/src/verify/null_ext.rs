use num_traits::Zero;
use rand::Rng;

use super::gen::{self, add, is_zero, scale, sub};
use super::{run, Instance, SuiteConfig, SuiteError, SuiteReport};
use crate::checks::jo_value;
use crate::exactnum::{int, rat, Matrix, Rational};
use crate::jacobi::Raised;
use crate::sampling;
use crate::space::{ScalarProduct, Vector};
use crate::tensor::catalog;

const DEFAULT_SIGNATURES: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 2)];

/// Coefficients of `λ²` and `λ` in `g(J_X(S+λT), J_{S+λT}X)`:
/// `g(P,M) + g(Q,L)` and `g(Q,K) + g(P,L)` with `K = J_S X`,
/// `L = 2J(S,T)X`, `M = J_T X`, `P = J_X S`, `Q = J_X T`.
fn expansion_coefficients(raised: &Raised, g: &ScalarProduct, x: &[Rational], s: &[Rational], t: &[Rational]) -> (Rational, Rational) {
    let k = raised.apply(s, x);
    let l = scale(&int(2), &raised.polarized_apply(s, t, x));
    let m = raised.apply(t, x);
    let p = raised.apply(x, s);
    let q = raised.apply(x, t);
    (g.g(&p, &m) + g.g(&q, &l), g.g(&q, &k) + g.g(&p, &l))
}

/// Checks the splitting `N = S + T` (`S ⊥ T`, `ε_S = -ε_T ≠ 0`, both `⊥ x`)
/// and the vanishing of the expansion coefficients.
fn check_split(inst: &mut Instance, raised: &Raised, g: &ScalarProduct, x: &[Rational], n: &[Rational], s: &Vector, t: &Vector) {
    inst.expect(add(s, t) == n, "S + T differs from the null vector");
    inst.expect(g.g(s, t).is_zero(), "S and T are not orthogonal");
    let es = g.eps(s);
    inst.expect(!es.is_zero() && es == -g.eps(t), "ε_S ≠ -ε_T or S is null");
    inst.expect(g.g(x, s).is_zero() && g.g(x, t).is_zero(), "S or T not orthogonal to X");
    let (c2, c1) = expansion_coefficients(raised, g, x, s, t);
    inst.expect(c2.is_zero() && c1.is_zero(), "expansion coefficients do not vanish");
}

fn random_nonzero(rng: &mut impl Rng) -> Rational {
    sampling::nonzero_rational(rng, 9, 4)
}

/// Jacobi-orthogonality extends to orthogonal pairs with one or two null
/// vectors.
pub fn suite_null_extension(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    cfg.validate()?;
    let sigs = cfg.signatures_or(&DEFAULT_SIGNATURES);
    if let Some((p, q)) = sigs.iter().find(|(p, q)| *p == 0 || *q == 0) {
        return Err(SuiteError::Config(format!("signature ({p},{q}) is definite and has no null vectors")));
    }
    let specs: Vec<(usize, usize, usize)> =
        sigs.iter().flat_map(|&(p, q)| (0..cfg.trials).map(move |t| (p, q, t))).collect();
    Ok(run("null-extension", cfg, specs, |index, &(p, q, t)| {
        let mut rng = sampling::rng_for(cfg.seed, index as u64);
        let g = ScalarProduct::canonical(p, q);
        let families = catalog::families_for(p, q);
        let family = families[t % families.len()];
        let (r, label) = gen::catalog_instance(family, p, q, &mut rng).expect("available family");
        let raised = Raised::new(&r);
        let mut inst = Instance::new(index, label, (p, q));
        inst.tensor(&r);

        // one nonnull X, one null Y
        let y = g.random_null(&mut rng).expect("indefinite");
        let x = loop {
            let (z, w) = (g.random_vector(&mut rng), g.random_vector(&mut rng));
            let x = sub(&scale(&g.g(&w, &y), &z), &scale(&g.g(&z, &y), &w));
            if !g.eps(&x).is_zero() {
                break x;
            }
        };
        inst.expect(g.g(&x, &y).is_zero() && g.eps(&y).is_zero(), "one-null pair generator");
        inst.expect(jo_value(&raised, &g, &x, &y).is_zero(), "g(J_X Y, J_Y X) ≠ 0 for a one-null pair");
        let complement = g.orthogonal_complement(&x).expect("nonnull");
        let m = g.isotropic_supplement_in(&[y.clone()], &complement).expect("Y is null in X^⊥").remove(0);
        let half = rat(1, 2);
        let (s, t2) = (scale(&half, &add(&y, &m)), scale(&half, &sub(&y, &m)));
        check_split(&mut inst, &raised, &g, &x, &y, &s, &t2);
        inst.count("one_null_pairs", 1);

        // dependent null pair N, ξN
        let xi = random_nonzero(&mut rng);
        inst.expect(is_zero(&raised.apply(&y, &scale(&xi, &y))), "J_N(ξN) ≠ 0");
        inst.count("dependent_null_pairs", 1);

        // two independent orthogonal null vectors
        if p >= 2 && q >= 2 {
            let n = p + q;
            let base = |i: usize| -> Vector {
                (0..n).map(|k| if k == i || k == p + i { int(1) } else { int(0) }).collect()
            };
            let a = g.random_isometry(&mut rng, 4);
            let (b1, b2) = (a.mul_vec(&base(0)), a.mul_vec(&base(1)));
            let (n1, n2) = loop {
                let c: Vec<Rational> = (0..4).map(|_| int(rng.gen_range(-3..=3))).collect();
                if (&c[0] * &c[3] - &c[1] * &c[2]).is_zero() {
                    continue;
                }
                break (add(&scale(&c[0], &b1), &scale(&c[1], &b2)), add(&scale(&c[2], &b1), &scale(&c[3], &b2)));
            };
            let independent = Matrix::from_rows(vec![n1.clone(), n2.clone()]).unwrap().rank() == 2;
            inst.expect(
                independent && g.eps(&n1).is_zero() && g.eps(&n2).is_zero() && g.g(&n1, &n2).is_zero(),
                "two-null pair generator",
            );
            inst.expect(jo_value(&raised, &g, &n1, &n2).is_zero(), "g(J_X Y, J_Y X) ≠ 0 for a two-null pair");
            let ms = g.isotropic_supplement(&[n1.clone(), n2.clone()]).expect("independent isotropic pair");
            for i in 0..2 {
                inst.expect(g.eps(&ms[i]).is_zero(), "supplement vector not null");
                for (j, nj) in [&n1, &n2].iter().enumerate() {
                    let want = if i == j { int(1) } else { int(0) };
                    inst.expect(g.g(nj, &ms[i]) == want, "supplement pairing not δ_ij");
                }
            }
            inst.expect(g.g(&ms[0], &ms[1]).is_zero(), "supplement vectors not orthogonal");
            let (s, t2) = (scale(&half, &add(&n2, &ms[1])), scale(&half, &sub(&n2, &ms[1])));
            check_split(&mut inst, &raised, &g, &n1, &n2, &s, &t2);
            inst.count("two_null_pairs", 1);
        }
        inst.finish()
    }))
}
