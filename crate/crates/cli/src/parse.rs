//! Value parsers for command-line flags.

use jortho::exactnum::{parse_rational, Matrix, Rational};

pub fn signature(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or_else(|| format!("expected p,q but got {s:?}"))?;
    let p: usize = p.trim().parse().map_err(|_| format!("invalid p in {s:?}"))?;
    let q: usize = q.trim().parse().map_err(|_| format!("invalid q in {s:?}"))?;
    if !(1..=8).contains(&(p + q)) {
        return Err(format!("dimension p+q = {} outside 1..=8", p + q));
    }
    Ok((p, q))
}

/// A comma-separated list of rationals, parsed as one flag value.
#[derive(Clone, Debug, PartialEq)]
pub struct Rationals(pub Vec<Rational>);

pub fn rationals(s: &str) -> Result<Rationals, String> {
    list(s).map(Rationals)
}

fn list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

/// Rows separated by `;`, entries by `,`.
pub fn matrix(s: &str) -> Result<Matrix<Rational>, String> {
    let rows = s.split(';').map(list).collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows).ok_or_else(|| "rows have different lengths".to_string())
}

pub fn tolerance(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|_| format!("invalid number {s:?}"))?;
    if t.is_finite() && t >= 0.0 {
        Ok(t)
    } else {
        Err("tolerance must be finite and nonnegative".to_string())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dims(pub Vec<usize>);

pub fn dims(s: &str) -> Result<Dims, String> {
    s.split(',').map(|t| t.trim().parse().map_err(|_| format!("invalid dimension {t:?}"))).collect::<Result<_, _>>().map(Dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use jortho::exactnum::{int, rat};

    #[test]
    fn parses_flags() {
        assert_eq!(signature("1,3"), Ok((1, 3)));
        assert!(signature("13").is_err());
        assert!(signature("0,0").is_err());
        assert_eq!(rationals("1,-2/3, 0"), Ok(Rationals(vec![int(1), rat(-2, 3), int(0)])));
        assert!(rationals("1,x").is_err());
        assert_eq!(matrix("0,1;-1,0").unwrap().to_rows(), vec![vec![int(0), int(1)], vec![int(-1), int(0)]]);
        assert!(matrix("0,1;1").is_err());
        assert!(tolerance("-1").is_err());
        assert_eq!(dims("5,6"), Ok(Dims(vec![5, 6])));
    }
}
