//! Generalized hypergeometric series pFq.
//!
//! Inside the disk (and for p ≤ q) the series is summed directly; on the
//! unit circle partial sums are extrapolated with the Levin u-transform.
//! All term arithmetic runs in double-double.

mod levin;
mod theorems;

pub use theorems::{gauss_sum_2f1_unit, kummer_sum_2f1_neg1, sum_4f3_neg1};

use crate::dd::{Dd, DdC};
use crate::error::{Error, Result};
use crate::special::{nonpositive_integer, Complex, PoleError};
use levin::LevinU;

/// Default relative tolerance for direct summation.
pub const DEFAULT_TOL: f64 = 1e-13;
/// Successive Levin extrapolants must agree to this relative precision.
pub const LEVIN_TOL: f64 = 1e-11;
pub const MAX_TERMS: usize = 100_000;
pub const MAX_LEVIN_ORDER: usize = 30;

/// numerator / denominator parameters and the argument of a pFq.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub numerator: Vec<Complex>,
    pub denominator: Vec<Complex>,
    pub argument: Complex,
}

impl SeriesSpec {
    pub fn new(numerator: Vec<Complex>, denominator: Vec<Complex>, argument: Complex) -> Self {
        SeriesSpec { numerator, denominator, argument }
    }

    /// ₂F₁(a, b; c; z)
    pub fn f21(a: Complex, b: Complex, c: Complex, z: Complex) -> Self {
        Self::new(vec![a, b], vec![c], z)
    }

    /// Σβ − Σα.
    pub fn balance(&self) -> Complex {
        self.denominator.iter().sum::<Complex>() - self.numerator.iter().sum::<Complex>()
    }

    /// Number of terms if some numerator is a non-positive integer.
    fn terminates_after(&self) -> Option<u64> {
        self.numerator.iter().filter_map(|&a| nonpositive_integer(a)).min()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergenceKind {
    AllZ,
    UnitDisk,
    UnitCircleAbsolute,
    UnitCircleConditional,
    Divergent,
    Terminating,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceClass {
    pub kind: ConvergenceKind,
    pub balance: Complex,
}

const UNIT_CIRCLE_TOL: f64 = 1e-14;

pub fn classify(spec: &SeriesSpec) -> ConvergenceClass {
    use ConvergenceKind::*;
    let balance = spec.balance();
    let (p, q) = (spec.numerator.len(), spec.denominator.len());
    let z = spec.argument;
    let kind = if spec.terminates_after().is_some() {
        Terminating
    } else if p <= q {
        AllZ
    } else if p == q + 1 {
        let r = z.norm();
        if (r - 1.0).abs() <= UNIT_CIRCLE_TOL {
            let at_one = (z - 1.0).norm() <= UNIT_CIRCLE_TOL;
            if balance.re > 0.0 {
                UnitCircleAbsolute
            } else if balance.re > -1.0 && !at_one {
                UnitCircleConditional
            } else {
                Divergent
            }
        } else if r < 1.0 {
            UnitDisk
        } else {
            Divergent
        }
    } else {
        Divergent
    };
    ConvergenceClass { kind, balance }
}

/// Reject denominator parameters on (or near) a pole unless the series
/// stops before reaching it.
fn check_denominators(spec: &SeriesSpec) -> Result<()> {
    let stop = spec.terminates_after();
    for &b in &spec.denominator {
        if let Some(k) = nonpositive_integer(b) {
            match stop {
                Some(n) if n <= k => {}
                _ => {
                    return Err(PoleError::new(Complex::new(-(k as f64), 0.0), "pFq denominator").into());
                }
            }
        }
    }
    Ok(())
}

struct Terms<'a> {
    spec: &'a SeriesSpec,
    z: DdC,
    n: usize,
    term: DdC,
}

impl<'a> Terms<'a> {
    fn new(spec: &'a SeriesSpec) -> Self {
        Terms { spec, z: spec.argument.into(), n: 0, term: DdC::ONE }
    }

    /// Current term t_n; `advance` moves to t_{n+1}.
    fn advance(&mut self) {
        let nf = Dd::from(self.n as f64);
        let mut ratio = self.z;
        for &a in &self.spec.numerator {
            let a: DdC = a.into();
            ratio = ratio * DdC { re: a.re + nf, im: a.im };
        }
        let mut den = DdC::real(nf + Dd::ONE);
        for &b in &self.spec.denominator {
            let b: DdC = b.into();
            den = den * DdC { re: b.re + nf, im: b.im };
        }
        self.term = self.term * ratio / den;
        self.n += 1;
    }
}

fn finite(z: Complex, what: &str) -> Result<Complex> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

/// Sum a pFq series to relative tolerance `tol`.
pub fn sum_series(spec: &SeriesSpec, tol: f64) -> Result<Complex> {
    if !(tol > 0.0) {
        return Err(Error::domain("tolerance must be positive"));
    }
    for v in spec.numerator.iter().chain(&spec.denominator).chain([&spec.argument]) {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite("series parameter".into()));
        }
    }
    check_denominators(spec)?;
    if spec.argument == Complex::new(0.0, 0.0) {
        return Ok(Complex::new(1.0, 0.0));
    }
    let class = classify(spec);
    match class.kind {
        ConvergenceKind::Divergent => Err(Error::DivergentSeries(format!(
            "{}F{} at z = {} (balance {})",
            spec.numerator.len(),
            spec.denominator.len(),
            spec.argument,
            class.balance
        ))),
        ConvergenceKind::Terminating => {
            let last = spec.terminates_after().unwrap_or(0);
            let mut terms = Terms::new(spec);
            let mut s = DdC::ZERO;
            for _ in 0..=last {
                s = s + terms.term;
                terms.advance();
            }
            finite(s.to_complex(), "terminating sum")
        }
        ConvergenceKind::AllZ | ConvergenceKind::UnitDisk => direct(spec, tol),
        ConvergenceKind::UnitCircleAbsolute | ConvergenceKind::UnitCircleConditional => accelerated(spec),
    }
}

fn direct(spec: &SeriesSpec, tol: f64) -> Result<Complex> {
    let mut terms = Terms::new(spec);
    let mut s = DdC::ZERO;
    let mut quiet = 0;
    let mut last = f64::INFINITY;
    while terms.n < MAX_TERMS {
        let t = terms.term;
        s = s + t;
        // geometric tail bound once terms are shrinking
        let r = t.norm() / last;
        let tail = if r < 1.0 { t.norm() * (1.0 / (1.0 - r)).max(1.0) } else { t.norm() };
        last = t.norm();
        if tail <= tol * s.norm() {
            quiet += 1;
            if quiet == 3 {
                return finite(s.to_complex(), "series sum");
            }
        } else {
            quiet = 0;
        }
        if !t.norm().is_finite() {
            return Err(Error::NonFinite("series term overflow".into()));
        }
        terms.advance();
    }
    Err(Error::NoConvergence(format!("series not settled after {MAX_TERMS} terms")))
}

/// Levin restarts from these offsets when the early, pre-asymptotic terms
/// stall the transform.
const LEVIN_OFFSETS: [usize; 4] = [0, 10, 25, 50];

fn accelerated(spec: &SeriesSpec) -> Result<Complex> {
    for &offset in &LEVIN_OFFSETS {
        if let Some(v) = levin_from(spec, offset) {
            return finite(v, "Levin extrapolant");
        }
    }
    Err(Error::NoConvergence(format!(
        "Levin u-transform stagnated at order {MAX_LEVIN_ORDER}"
    )))
}

fn levin_from(spec: &SeriesSpec, offset: usize) -> Option<Complex> {
    let mut terms = Terms::new(spec);
    let mut s = DdC::ZERO;
    while terms.n < offset {
        s = s + terms.term;
        terms.advance();
    }
    let mut lev = LevinU::new();
    let mut prev: Option<Complex> = None;
    let mut biggest = 0.0f64;
    for order in 0..=MAX_LEVIN_ORDER {
        let t = terms.term;
        s = s + t;
        biggest = biggest.max(t.norm());
        let est = lev.push(s, t).to_complex();
        if let Some(p) = prev {
            let scale = est.norm().max(1e-15 * biggest);
            if order >= 3 && (est - p).norm() <= LEVIN_TOL * scale {
                return Some(est);
            }
        }
        prev = Some(est);
        terms.advance();
    }
    None
}

/// ₂F₁(a, b; c; z) with the default tolerance.
pub fn hyp2f1(a: Complex, b: Complex, c: Complex, z: Complex) -> Result<Complex> {
    sum_series(&SeriesSpec::f21(a, b, c, z), DEFAULT_TOL)
}
