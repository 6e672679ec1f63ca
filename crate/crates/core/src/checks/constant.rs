use num_traits::Zero;

use super::{PropertyReport, Verdict, Witness};
use crate::exactnum::format_rational;
use crate::tensor::{constant_curvature, index_tuples, CurvatureTensor};

/// Whether `R = μR¹` for some `μ`, with `μ` read off the first component
/// where `R¹` is nonzero.
pub fn constant_sectional(r: &CurvatureTensor) -> PropertyReport {
    let g = r.metric();
    let n = g.dim();
    let property = "constant-sectional-curvature";
    let one = constant_curvature(g, &crate::exactnum::int(1));
    let Some(t0) = index_tuples(n).find(|t| !one.get(*t).is_zero()) else {
        // n = 1: every tensor vanishes
        return PropertyReport::new(property, Verdict::HoldsExact, 0, 0).with_value("mu", "0");
    };
    let mu = r.get(t0) / one.get(t0);
    let model = one.scale(&mu);
    let plus_one = |t: [usize; 4]| t.map(|i| (i + 1).to_string()).join(",");
    match index_tuples(n).find(|t| r.get(*t) != model.get(*t)) {
        None => PropertyReport::new(property, Verdict::HoldsExact, 0, 0).with_value("mu", format_rational(&mu)),
        Some(t) => PropertyReport::new(property, Verdict::Fails, 0, 0).with_witness(
            Witness::new("component differs from μ·R¹ with μ fixed by the reference component")
                .text("reference", plus_one(t0))
                .value("mu", &mu)
                .text("indices", plus_one(t))
                .value("component", r.get(t))
                .value("expected", model.get(t)),
        ),
    }
}
