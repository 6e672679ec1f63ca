//! JSON tensor files.
//!
//! ```json
//! { "dim": 3, "signature": [1, 2],
//!   "components": [ {"i": 1, "j": 2, "k": 2, "l": 1, "v": "-1"} ] }
//! ```
//!
//! Indices are 1-based. `"signature": [p, q]` stands for the canonical form
//! `diag(-1 ×p, +1 ×q)`; any other form is given as `"gram"`, a row-major
//! array of rational strings. Each listed component fixes its whole symmetry
//! orbit; omitted orbits are zero. Canonical output lists only the smallest
//! tuple of each nonzero orbit, in lexicographic order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{index_tuples, orbit, orbit_representative, CurvatureTensor, Identity, ValidationReport};
use crate::exactnum::{format_rational, parse_rational, Rational};
use crate::space::{ScalarProduct, SpaceError};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signature: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gram: Option<Vec<Vec<Value>>>,
    #[serde(default)]
    components: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    v: Value,
}

/// Rationals are written as strings; integers are also accepted as numbers.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Value {
    Text(String),
    Int(i64),
}

impl Value {
    fn parse(&self) -> Option<Rational> {
        match self {
            Value::Text(s) => parse_rational(s).ok(),
            Value::Int(i) => Some(Rational::from_integer((*i).into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LoadError {
    Json { line: usize, column: usize, message: String },
    Field { field: String, message: String },
    /// Two entries of the same orbit disagree.
    Conflict { identity: String, first: [usize; 4], second: [usize; 4], values: (Rational, Rational) },
    /// An entry is nonzero although its orbit is forced to vanish.
    ForcedZero { identity: String, indices: [usize; 4], value: Rational },
    Invalid(ValidationReport),
    Space(SpaceError),
}

fn one_based(t: [usize; 4]) -> String {
    format!("({},{},{},{})", t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1)
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Json { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            LoadError::Field { field, message } => write!(f, "field {field}: {message}"),
            LoadError::Conflict { identity, first, second, values } => write!(
                f,
                "{identity} violated at (i,j,k,l)={}: value {} conflicts with {} at {}",
                one_based(*second),
                format_rational(&values.1),
                format_rational(&values.0),
                one_based(*first)
            ),
            LoadError::ForcedZero { identity, indices, value } => write!(
                f,
                "{identity} violated at (i,j,k,l)={}: component must vanish but is {}",
                one_based(*indices),
                format_rational(value)
            ),
            LoadError::Invalid(report) => write!(f, "{report}"),
            LoadError::Space(e) => write!(f, "scalar product: {e}"),
        }
    }
}

impl std::error::Error for LoadError {}

/// Describes the symmetry mapping `a` to `b` (both in one orbit).
fn relating_symmetry(a: [usize; 4], b: [usize; 4]) -> String {
    let images = orbit(a);
    let pos = [1, 2, 4, 3, 5, 6, 7, 0].into_iter().find(|&p| images[p].0 == b).unwrap_or(0);
    match pos {
        1 => Identity::FirstPairAntisymmetry.to_string(),
        2 => Identity::SecondPairAntisymmetry.to_string(),
        4 => Identity::PairSymmetry.to_string(),
        _ => "combined pair symmetries".to_string(),
    }
}

pub fn from_json(text: &str) -> Result<CurvatureTensor, LoadError> {
    let file: TensorFile = serde_json::from_str(text).map_err(|e| LoadError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let n = file.dim;
    let field = |field: String, message: &str| LoadError::Field { field, message: message.to_string() };
    if n == 0 {
        return Err(field("dim".into(), "must be at least 1"));
    }
    let g = match (&file.signature, &file.gram) {
        (Some(_), Some(_)) => return Err(field("signature".into(), "give either signature or gram, not both")),
        (None, None) => return Err(field("signature".into(), "missing (or give gram)")),
        (Some([p, q]), None) => {
            if p + q != n {
                return Err(field("signature".into(), &format!("p + q = {} but dim = {n}", p + q)));
            }
            ScalarProduct::canonical(*p, *q)
        }
        (None, Some(rows)) => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(field("gram".into(), &format!("must be a {n}×{n} array")));
            }
            let mut parsed = Vec::new();
            for (a, row) in rows.iter().enumerate() {
                let mut out = Vec::new();
                for (b, v) in row.iter().enumerate() {
                    out.push(v.parse().ok_or_else(|| field(format!("gram[{a}][{b}]"), "not a rational"))?);
                }
                parsed.push(out);
            }
            ScalarProduct::from_rows(parsed).map_err(LoadError::Space)?
        }
    };
    // orbit representative -> (first tuple seen, value of the representative)
    let mut reps: BTreeMap<[usize; 4], ([usize; 4], Rational, Rational)> = BTreeMap::new();
    for (e, entry) in file.components.iter().enumerate() {
        let idx = [entry.i, entry.j, entry.k, entry.l];
        for (name, x) in ["i", "j", "k", "l"].iter().zip(idx) {
            if x < 1 || x > n {
                return Err(field(format!("components[{e}].{name}"), &format!("index {x} outside 1..={n}")));
            }
        }
        let t = idx.map(|x| x - 1);
        let v = entry.v.parse().ok_or_else(|| field(format!("components[{e}].v"), "not a rational"))?;
        let (rep, s) = orbit_representative(t);
        if s == 0 {
            if !v.is_zero() {
                let pos = orbit(t).iter().position(|(u, s)| *u == t && *s < 0).unwrap_or(0);
                let identity = match pos {
                    1 => Identity::FirstPairAntisymmetry.to_string(),
                    2 => Identity::SecondPairAntisymmetry.to_string(),
                    _ => "combined pair symmetries".to_string(),
                };
                return Err(LoadError::ForcedZero { identity, indices: t, value: v });
            }
            continue;
        }
        let rep_value = if s > 0 { v.clone() } else { -v.clone() };
        match reps.get(&rep) {
            Some((first, first_value, existing)) => {
                if existing != &rep_value {
                    return Err(LoadError::Conflict {
                        identity: relating_symmetry(*first, t),
                        first: *first,
                        second: t,
                        values: (first_value.clone(), v),
                    });
                }
            }
            None => {
                reps.insert(rep, (t, v, rep_value));
            }
        }
    }
    let r = CurvatureTensor::from_orbits(&g, |rep| reps.get(&rep).map(|x| x.2.clone()).unwrap_or_else(Rational::zero));
    let report = r.validate();
    if !report.is_valid() {
        return Err(LoadError::Invalid(report));
    }
    Ok(r)
}

/// Canonical serialization; [`from_json`] of the output reproduces `r`.
pub fn to_json(r: &CurvatureTensor) -> String {
    let g = r.metric();
    let n = r.dim();
    let (signature, gram) = if g.is_canonical() && is_sorted_canonical(g) {
        let (p, q) = g.signature();
        (Some([p, q]), None)
    } else {
        (None, Some(g.gram_strings().into_iter().map(|row| row.into_iter().map(Value::Text).collect()).collect()))
    };
    let components = index_tuples(n)
        .filter(|t| orbit_representative(*t) == (*t, 1) && !r.get(*t).is_zero())
        .map(|t| Entry { i: t[0] + 1, j: t[1] + 1, k: t[2] + 1, l: t[3] + 1, v: Value::Text(format_rational(r.get(t))) })
        .collect();
    let file = TensorFile { dim: n, signature, gram, components };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

/// Canonical forms list their negative entries first.
fn is_sorted_canonical(g: &ScalarProduct) -> bool {
    let (p, q) = g.signature();
    g == &ScalarProduct::canonical(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::tensor::{constant_curvature, random_curvature};

    #[test]
    fn round_trip_is_byte_identical() {
        let g = ScalarProduct::canonical(1, 2);
        for r in [constant_curvature(&g, &int(3)), random_curvature(&g, 4, 6).unwrap()] {
            let text = to_json(&r);
            let back = from_json(&text).unwrap();
            assert_eq!(back, r);
            assert_eq!(to_json(&back), text);
        }
        let g = ScalarProduct::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        let r = constant_curvature(&g, &rat(-2, 3));
        let text = to_json(&r);
        assert!(text.contains("\"gram\""));
        assert_eq!(from_json(&text).unwrap(), r);
    }

    #[test]
    fn orbit_completion_and_conflicts() {
        let ok = r#"{"dim":2,"signature":[0,2],"components":[{"i":2,"j":1,"k":1,"l":2,"v":"5"}]}"#;
        let r = from_json(ok).unwrap();
        assert_eq!(r.get([0, 1, 1, 0]), &int(5));
        assert_eq!(r.get([0, 1, 0, 1]), &int(-5));

        let clash = r#"{"dim":2,"signature":[0,2],"components":[
            {"i":1,"j":2,"k":2,"l":1,"v":"1"},{"i":2,"j":1,"k":1,"l":2,"v":"2"}]}"#;
        let err = from_json(clash).unwrap_err();
        assert!(err.to_string().starts_with("pair symmetry"), "{err}");
        assert!(err.to_string().contains("(i,j,k,l)=(2,1,1,2)"), "{err}");

        let forced = r#"{"dim":2,"signature":[0,2],"components":[{"i":1,"j":1,"k":1,"l":2,"v":"1"}]}"#;
        assert!(matches!(from_json(forced), Err(LoadError::ForcedZero { .. })));
    }

    #[test]
    fn bianchi_failure_is_reported() {
        let bad = r#"{"dim":4,"signature":[0,4],"components":[{"i":1,"j":2,"k":3,"l":4,"v":"1"}]}"#;
        let err = from_json(bad).unwrap_err();
        assert!(matches!(err, LoadError::Invalid(_)));
        assert!(err.to_string().contains("Bianchi"));
    }

    #[test]
    fn diagnostics_name_fields() {
        let e = from_json(r#"{"dim":2,"signature":[0,2],"components":[{"i":3,"j":1,"k":1,"l":2,"v":"1"}]}"#);
        assert_eq!(e.unwrap_err().to_string(), "field components[0].i: index 3 outside 1..=2");
        let e = from_json("{\n \"dim\": 2,\n \"signature\": [0,2]\n \"components\": []}").unwrap_err();
        assert!(matches!(e, LoadError::Json { line: 4, .. }), "{e:?}");
        let e = from_json(r#"{"dim":3,"signature":[0,2]}"#).unwrap_err();
        assert!(e.to_string().contains("dim = 3"));
    }
}
