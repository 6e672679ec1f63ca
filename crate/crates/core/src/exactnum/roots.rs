//! Real roots of rational polynomials.
//!
//! The polynomial is split into square-free factors (Yun). Each factor gets a
//! Sturm sequence and its real roots are isolated by bisection. A root `a/b`
//! of an integer polynomial with leading coefficient `c` satisfies `b | c`,
//! so `c·root` is an integer: once an isolating interval is narrower than
//! `1/|c|` at most one candidate is left to test, which decides rationality
//! without factoring any coefficient.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::Poly;
use super::scalar::{format_rational, Rational};
use super::NumError;

/// A real root that is not rational, isolated in the open interval
/// `(lo, hi)`: `poly` is square-free, has exactly one root there and is
/// nonzero at both endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    pub poly: Poly,
    pub lo: Rational,
    pub hi: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RealRoot {
    Rational(Rational),
    Isolated(IsolatedRoot),
}

/// Output of [`real_roots`]: distinct real roots in increasing order with
/// their multiplicities, plus the number of complex-conjugate pairs (counted
/// with multiplicity).
#[derive(Clone, Debug, PartialEq)]
pub struct RootReport {
    pub roots: Vec<(RealRoot, usize)>,
    pub complex_pairs: usize,
}

impl IsolatedRoot {
    /// Halves the interval until its width is at most `width`.
    pub fn refine(&mut self, width: &Rational) {
        while &(&self.hi - &self.lo) > width {
            self.bisect();
        }
    }

    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        let at_mid = self.poly.eval(&mid);
        debug_assert!(!at_mid.is_zero(), "isolated root polynomial vanished at midpoint");
        if sign(&self.poly.eval(&self.lo)) == sign(&at_mid) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn approx(&self) -> f64 {
        let mut r = self.clone();
        r.refine(&Rational::new(BigInt::one(), BigInt::from(1u64 << 52)));
        num_traits::ToPrimitive::to_f64(&((&r.lo + &r.hi) / Rational::from_integer(2.into())))
            .unwrap_or(f64::NAN)
    }
}

impl RealRoot {
    /// A rational lower bound that is `<=` the root.
    fn lower(&self) -> &Rational {
        match self {
            RealRoot::Rational(r) => r,
            RealRoot::Isolated(i) => &i.lo,
        }
    }

    fn upper(&self) -> &Rational {
        match self {
            RealRoot::Rational(r) => r,
            RealRoot::Isolated(i) => &i.hi,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RealRoot::Rational(r) => num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN),
            RealRoot::Isolated(i) => i.approx(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealRoot::Rational(r) => Some(r),
            RealRoot::Isolated(_) => None,
        }
    }

    pub fn describe(&self) -> RootDescription {
        match self {
            RealRoot::Rational(r) => RootDescription::Exact(format_rational(r)),
            RealRoot::Isolated(i) => RootDescription::Algebraic {
                minpoly: i.poly.coeff_strings(),
                interval: [format_rational(&i.lo), format_rational(&i.hi)],
            },
        }
    }
}

/// Serialized form: `"p/q"` or `{"minpoly": [...], "interval": [lo, hi]}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum RootDescription {
    Exact(String),
    Algebraic {
        minpoly: Vec<String>,
        interval: [String; 2],
    },
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

/// Sturm sequence of a square-free polynomial.
pub struct Sturm {
    chain: Vec<Poly>,
}

impl Sturm {
    pub fn new(p: &Poly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            chain.push(-&r);
        }
        chain.pop();
        Sturm { chain }
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = sign(&p.eval(x));
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Cauchy bound: every root has absolute value below the returned value.
pub fn root_bound(p: &Poly) -> Rational {
    let lead = p.leading().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |acc, c| if c > acc { c } else { acc });
    max + Rational::one()
}

/// Distinct real roots of a square-free polynomial, increasing.
pub fn isolate_square_free(p: &Poly) -> Vec<RealRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sturm = Sturm::new(p);
    let b = root_bound(p);
    let mut found = Vec::new();
    isolate_in(p, &sturm, -b.clone(), b, &mut found);
    let lead = Rational::from_integer(p.primitive_integer().last().cloned().unwrap_or_default());
    found
        .into_iter()
        .map(|r| match r {
            RealRoot::Isolated(iso) => detect_rational(iso, &lead),
            other => other,
        })
        .collect()
}

fn isolate_in(p: &Poly, sturm: &Sturm, lo: Rational, hi: Rational, out: &mut Vec<RealRoot>) {
    let n = sturm.count(&lo, &hi);
    if n == 0 {
        return;
    }
    let hi_val = p.eval(&hi);
    if n == 1 && !hi_val.is_zero() && !p.eval(&lo).is_zero() {
        out.push(RealRoot::Isolated(IsolatedRoot { poly: p.clone(), lo, hi }));
        return;
    }
    if n == 1 && hi_val.is_zero() {
        out.push(RealRoot::Rational(hi));
        return;
    }
    let mid = (&lo + &hi) / Rational::from_integer(2.into());
    isolate_in(p, sturm, lo, mid.clone(), out);
    isolate_in(p, sturm, mid, hi, out);
}

/// `lead` is the leading coefficient of the primitive integer form of the
/// root's polynomial.
fn detect_rational(mut iso: IsolatedRoot, lead: &Rational) -> RealRoot {
    let width = Rational::one() / (lead.abs() * Rational::from_integer(2.into()));
    while &(&iso.hi - &iso.lo) > &width {
        let mid = (&iso.lo + &iso.hi) / Rational::from_integer(2.into());
        let at_mid = iso.poly.eval(&mid);
        if at_mid.is_zero() {
            return RealRoot::Rational(mid);
        }
        if sign(&iso.poly.eval(&iso.lo)) == sign(&at_mid) {
            iso.lo = mid;
        } else {
            iso.hi = mid;
        }
    }
    let lo = (&iso.lo * lead).ceil();
    let hi = (&iso.hi * lead).floor();
    let mut m = lo;
    while m <= hi {
        let cand = &m / lead;
        if iso.poly.eval(&cand).is_zero() {
            return RealRoot::Rational(cand);
        }
        m += Rational::one();
    }
    RealRoot::Isolated(iso)
}

/// Real roots of `p` with multiplicities, plus the number of complex pairs.
/// Irrational roots are reported with their square-free factor stripped of
/// all rational linear factors.
pub fn real_roots(p: &Poly) -> Result<RootReport, NumError> {
    if p.is_zero() {
        return Err(NumError::ZeroPolynomial);
    }
    let mut roots: Vec<(RealRoot, usize)> = Vec::new();
    let mut complex_pairs = 0;
    for (factor, mult) in p.square_free_decomposition() {
        let found = isolate_square_free(&factor);
        let mut irrational_part = factor.clone();
        for r in &found {
            if let RealRoot::Rational(q) = r {
                irrational_part = irrational_part.exact_div(&Poly::linear_root(q));
            }
        }
        let real = found.len();
        complex_pairs += mult * (factor.degree().unwrap() - real) / 2;
        for r in found {
            let r = match r {
                RealRoot::Isolated(mut iso) => {
                    iso.poly = irrational_part.clone();
                    RealRoot::Isolated(iso)
                }
                other => other,
            };
            roots.push((r, mult));
        }
    }
    separate(&mut roots);
    roots.sort_by(|a, b| compare_separated(&a.0, &b.0));
    Ok(RootReport { roots, complex_pairs })
}

/// Refines isolating intervals until no two roots' enclosures overlap.
fn separate(roots: &mut [(RealRoot, usize)]) {
    loop {
        let mut changed = false;
        for i in 0..roots.len() {
            for j in 0..roots.len() {
                if i == j {
                    continue;
                }
                let overlap = roots[i].0.lower() <= roots[j].0.upper()
                    && roots[j].0.lower() <= roots[i].0.upper();
                if !overlap {
                    continue;
                }
                if let RealRoot::Isolated(iso) = &mut roots[i].0 {
                    let w = (&iso.hi - &iso.lo) / Rational::from_integer(2.into());
                    iso.refine(&w);
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

fn compare_separated(a: &RealRoot, b: &RealRoot) -> Ordering {
    a.lower().cmp(b.lower())
}

/// Number of distinct real roots of a square-free polynomial.
pub fn count_real_roots(p: &Poly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let b = root_bound(p);
    Sturm::new(p).count(&-b.clone(), &b)
}
