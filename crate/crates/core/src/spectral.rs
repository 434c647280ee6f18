//! Finite sin/cos (or sinh/cosh) polynomials in normal form.
//!
//! A [`SpectralForm`] is a sum of `coefficient · kind(frequency · x)` terms
//! with non-negative frequencies, one term per (kind, frequency).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermKind {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Const,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Circular,
    Hyperbolic,
}

/// The four functions that can be raised to a power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionKind {
    Sin,
    Cos,
    Sinh,
    Cosh,
}

impl FunctionKind {
    pub fn family(self) -> Family {
        match self {
            FunctionKind::Sin | FunctionKind::Cos => Family::Circular,
            FunctionKind::Sinh | FunctionKind::Cosh => Family::Hyperbolic,
        }
    }

    pub fn term_kind(self) -> TermKind {
        match self {
            FunctionKind::Sin => TermKind::Sin,
            FunctionKind::Cos => TermKind::Cos,
            FunctionKind::Sinh => TermKind::Sinh,
            FunctionKind::Cosh => TermKind::Cosh,
        }
    }

    pub fn apply(self, x: f64) -> f64 {
        match self {
            FunctionKind::Sin => x.sin(),
            FunctionKind::Cos => x.cos(),
            FunctionKind::Sinh => x.sinh(),
            FunctionKind::Cosh => x.cosh(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FunctionKind::Sin => "sin",
            FunctionKind::Cos => "cos",
            FunctionKind::Sinh => "sinh",
            FunctionKind::Cosh => "cosh",
        }
    }
}

impl FromStr for FunctionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sin" => Ok(FunctionKind::Sin),
            "cos" => Ok(FunctionKind::Cos),
            "sinh" => Ok(FunctionKind::Sinh),
            "cosh" => Ok(FunctionKind::Cosh),
            other => Err(Error::InvalidParameter(format!(
                "unknown function `{other}` (expected sin, cos, sinh or cosh)"
            ))),
        }
    }
}

impl TermKind {
    fn family(self) -> Option<Family> {
        match self {
            TermKind::Sin | TermKind::Cos => Some(Family::Circular),
            TermKind::Sinh | TermKind::Cosh => Some(Family::Hyperbolic),
            TermKind::Const => None,
        }
    }

    fn is_odd(self) -> bool {
        matches!(self, TermKind::Sin | TermKind::Sinh)
    }

    // odd kinds print first at equal frequency
    fn rank(self) -> u8 {
        match self {
            TermKind::Sin | TermKind::Sinh => 0,
            TermKind::Cos | TermKind::Cosh => 1,
            TermKind::Const => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralTerm {
    pub kind: TermKind,
    pub coefficient: f64,
    pub frequency: f64,
}

impl SpectralTerm {
    pub fn new(kind: TermKind, coefficient: f64, frequency: f64) -> Self {
        SpectralTerm { kind, coefficient, frequency }
    }

    pub fn constant(coefficient: f64) -> Self {
        SpectralTerm { kind: TermKind::Const, coefficient, frequency: 0.0 }
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let t = self.frequency * x;
        self.coefficient
            * match self.kind {
                TermKind::Sin => t.sin(),
                TermKind::Cos => t.cos(),
                TermKind::Sinh => t.sinh(),
                TermKind::Cosh => t.cosh(),
                TermKind::Const => 1.0,
            }
    }

    /// Parity normalization: non-negative frequency, zero frequency folds
    /// into a constant (cos, cosh) or vanishes (sin, sinh).
    fn normalized(mut self) -> Option<Self> {
        if self.kind == TermKind::Const {
            self.frequency = 0.0;
            return Some(self);
        }
        if self.frequency < 0.0 {
            self.frequency = -self.frequency;
            if self.kind.is_odd() {
                self.coefficient = -self.coefficient;
            }
        }
        if self.frequency <= FREQ_TOL {
            return if self.kind.is_odd() { None } else { Some(SpectralTerm::constant(self.coefficient)) };
        }
        Some(self)
    }
}

const FREQ_TOL: f64 = 1e-12;

fn same_frequency(a: f64, b: f64) -> bool {
    (a - b).abs() <= FREQ_TOL * a.abs().max(b.abs()).max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralForm {
    family: Family,
    terms: Vec<SpectralTerm>,
}

impl SpectralForm {
    pub fn zero(family: Family) -> Self {
        SpectralForm { family, terms: Vec::new() }
    }

    pub fn constant(family: Family, value: f64) -> Self {
        let mut f = Self::zero(family);
        f.push(SpectralTerm::constant(value));
        f
    }

    pub fn from_terms(family: Family, terms: impl IntoIterator<Item = SpectralTerm>) -> Result<Self> {
        let mut f = Self::zero(family);
        for t in terms {
            if let Some(fam) = t.kind.family() {
                if fam != family {
                    return Err(Error::FamilyMismatch);
                }
            }
            if !(t.coefficient.is_finite() && t.frequency.is_finite()) {
                return Err(Error::NonFinite("spectral term".into()));
            }
            f.push(t);
        }
        Ok(f)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> &[SpectralTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, t: SpectralTerm) {
        let Some(t) = t.normalized() else { return };
        if let Some(i) = self
            .terms
            .iter()
            .position(|u| u.kind == t.kind && same_frequency(u.frequency, t.frequency))
        {
            self.terms[i].coefficient += t.coefficient;
            if self.terms[i].coefficient == 0.0 {
                self.terms.remove(i);
            }
        } else if t.coefficient != 0.0 {
            self.terms.push(t);
            self.sort();
        }
    }

    fn sort(&mut self) {
        self.terms.sort_by(|a, b| {
            b.frequency
                .partial_cmp(&a.frequency)
                .unwrap_or(Ordering::Equal)
                .then(a.kind.rank().cmp(&b.kind.rank()))
        });
    }

    pub fn scaled(&self, k: f64) -> Self {
        let mut f = Self::zero(self.family);
        for t in &self.terms {
            f.push(SpectralTerm { coefficient: t.coefficient * k, ..*t });
        }
        f
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.terms.iter().map(|t| t.evaluate(x)).sum()
    }

    /// Pointwise product, rewritten back into sums.
    pub fn product(&self, other: &SpectralForm) -> Result<SpectralForm> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        let mut out = Self::zero(self.family);
        for a in &self.terms {
            for b in &other.terms {
                for t in multiply_terms(a, b) {
                    out.push(t);
                }
            }
        }
        Ok(out)
    }

    /// Largest frequency present (0 for constants or an empty form).
    pub fn max_frequency(&self) -> f64 {
        self.terms.iter().map(|t| t.frequency).fold(0.0, f64::max)
    }
}

fn multiply_terms(a: &SpectralTerm, b: &SpectralTerm) -> Vec<SpectralTerm> {
    use TermKind::*;
    let k = a.coefficient * b.coefficient;
    let (p, q) = (a.frequency, b.frequency);
    let h = 0.5 * k;
    match (a.kind, b.kind) {
        (Const, _) => vec![SpectralTerm { coefficient: k, ..*b }],
        (_, Const) => vec![SpectralTerm { coefficient: k, ..*a }],
        // 2 sin A sin B = cos(A−B) − cos(A+B)
        (Sin, Sin) => vec![SpectralTerm::new(Cos, h, p - q), SpectralTerm::new(Cos, -h, p + q)],
        (Cos, Cos) => vec![SpectralTerm::new(Cos, h, p - q), SpectralTerm::new(Cos, h, p + q)],
        (Sin, Cos) => vec![SpectralTerm::new(Sin, h, p - q), SpectralTerm::new(Sin, h, p + q)],
        (Cos, Sin) => vec![SpectralTerm::new(Sin, h, q - p), SpectralTerm::new(Sin, h, p + q)],
        // hyperbolic: sinh A sinh B = ½[cosh(A+B) − cosh(A−B)]
        (Sinh, Sinh) => vec![SpectralTerm::new(Cosh, h, p + q), SpectralTerm::new(Cosh, -h, p - q)],
        (Cosh, Cosh) => vec![SpectralTerm::new(Cosh, h, p + q), SpectralTerm::new(Cosh, h, p - q)],
        (Sinh, Cosh) => vec![SpectralTerm::new(Sinh, h, p + q), SpectralTerm::new(Sinh, h, p - q)],
        (Cosh, Sinh) => vec![SpectralTerm::new(Sinh, h, p + q), SpectralTerm::new(Sinh, h, q - p)],
        _ => unreachable!("family checked by caller"),
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as f64
}

/// `kind(frequency·x)^exponent` as a sum of multiple-angle terms.
///
/// Coefficients come from integer binomials divided by a power of two, so
/// they are exact for moderate exponents.
pub fn expand_power(kind: FunctionKind, exponent: u32, frequency: f64) -> Result<SpectralForm> {
    if exponent == 0 {
        return Err(Error::InvalidParameter("exponent must be at least 1".into()));
    }
    if exponent > 60 {
        return Err(Error::InvalidParameter("exponent above 60 loses exact coefficients".into()));
    }
    if !frequency.is_finite() {
        return Err(Error::NonFinite("frequency".into()));
    }
    let e = exponent;
    let odd = e % 2 == 1;
    let scale = 0.5f64.powi(e as i32 - 1);
    let mut terms = Vec::new();
    for i in 0..=(e / 2) {
        let freq = (e - 2 * i) as f64 * frequency;
        let mut c = binomial(e, i) * scale;
        let is_middle = !odd && 2 * i == e;
        if is_middle {
            c *= 0.5;
        }
        let term = match kind {
            FunctionKind::Cosh => SpectralTerm::new(TermKind::Cosh, c, freq),
            FunctionKind::Sinh => {
                // (e^t − e^{−t})^e: the i-th pair carries (−1)^i
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                let kind = if odd { TermKind::Sinh } else { TermKind::Cosh };
                SpectralTerm::new(kind, sign * c, freq)
            }
            FunctionKind::Cos => SpectralTerm::new(TermKind::Cos, c, freq),
            FunctionKind::Sin => {
                // sin^e via (e^{it} − e^{−it})^e / (2i)^e
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                if odd {
                    let outer = if (e / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    SpectralTerm::new(TermKind::Sin, outer * sign * c, freq)
                } else {
                    let outer = if (e / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    SpectralTerm::new(TermKind::Cos, outer * sign * c, freq)
                }
            }
        };
        terms.push(term);
    }
    SpectralForm::from_terms(kind.family(), terms)
}

/// Free-function form of [`SpectralForm::product`].
pub fn product(a: &SpectralForm, b: &SpectralForm) -> Result<SpectralForm> {
    a.product(b)
}

/// Free-function form of [`SpectralForm::evaluate`].
pub fn evaluate(f: &SpectralForm, x: f64) -> f64 {
    f.evaluate(x)
}

fn fmt_number(v: f64) -> String {
    format!("{v}")
}

impl fmt::Display for SpectralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coefficient < 0.0;
            match (i, neg) {
                (0, true) => write!(f, "−")?,
                (0, false) => {}
                (_, true) => write!(f, " − ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coefficient.abs();
            if t.kind == TermKind::Const {
                write!(f, "{}", fmt_number(c))?;
                continue;
            }
            if c != 1.0 {
                write!(f, "{}·", fmt_number(c))?;
            }
            let name = match t.kind {
                TermKind::Sin => "sin",
                TermKind::Cos => "cos",
                TermKind::Sinh => "sinh",
                TermKind::Cosh => "cosh",
                TermKind::Const => unreachable!(),
            };
            if t.frequency == 1.0 {
                write!(f, "{name}(x)")?;
            } else {
                write!(f, "{name}({}x)", fmt_number(t.frequency))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_angle() {
        let f = expand_power(FunctionKind::Cos, 2, 1.5).unwrap();
        assert_eq!(
            f.terms(),
            &[SpectralTerm::new(TermKind::Cos, 0.5, 3.0), SpectralTerm::constant(0.5)]
        );
        let g = expand_power(FunctionKind::Sin, 2, 0.7).unwrap();
        assert_eq!(
            g.terms(),
            &[SpectralTerm::new(TermKind::Cos, -0.5, 1.4), SpectralTerm::constant(0.5)]
        );
        for x in [0.1, 0.7, 2.3] {
            assert!((g.evaluate(x) - (0.7f64 * x).sin().powi(2)).abs() < 1e-15);
        }
    }

    #[test]
    fn sinh_cubed() {
        let f = expand_power(FunctionKind::Sinh, 3, 1.0).unwrap();
        assert_eq!(
            f.terms(),
            &[SpectralTerm::new(TermKind::Sinh, 0.25, 3.0), SpectralTerm::new(TermKind::Sinh, -0.75, 1.0)]
        );
        assert_eq!(f.to_string(), "0.25·sinh(3x) − 0.75·sinh(x)");
    }

    #[test]
    fn rendering() {
        assert_eq!(expand_power(FunctionKind::Cos, 2, 1.0).unwrap().to_string(), "0.5·cos(2x) + 0.5");
        assert_eq!(SpectralForm::zero(Family::Circular).to_string(), "0");
        let s = expand_power(FunctionKind::Sin, 1, 1.0).unwrap();
        assert_eq!(s.to_string(), "sin(x)");
        assert_eq!(s.scaled(-1.0).to_string(), "−sin(x)");
    }

    #[test]
    fn term_counts() {
        for e in 1..10 {
            let f = expand_power(FunctionKind::Cosh, e, 1.0).unwrap();
            assert_eq!(f.terms().len() as u32, (e + 2) / 2);
        }
    }

    #[test]
    fn parity_normalization() {
        let f = SpectralForm::from_terms(
            Family::Circular,
            [
                SpectralTerm::new(TermKind::Sin, 2.0, -1.0),
                SpectralTerm::new(TermKind::Cos, 3.0, -2.0),
                SpectralTerm::new(TermKind::Sin, 5.0, 0.0),
                SpectralTerm::new(TermKind::Cos, 1.0, 0.0),
            ],
        )
        .unwrap();
        assert_eq!(
            f.terms(),
            &[
                SpectralTerm::new(TermKind::Cos, 3.0, 2.0),
                SpectralTerm::new(TermKind::Sin, -2.0, 1.0),
                SpectralTerm::constant(1.0)
            ]
        );
    }

    #[test]
    fn mixing_families_fails() {
        let a = expand_power(FunctionKind::Sin, 1, 1.0).unwrap();
        let b = expand_power(FunctionKind::Cosh, 1, 1.0).unwrap();
        assert_eq!(a.product(&b), Err(Error::FamilyMismatch));
        assert!(SpectralForm::from_terms(Family::Circular, [SpectralTerm::new(TermKind::Sinh, 1.0, 1.0)]).is_err());
    }

    #[test]
    fn identity_and_empty() {
        let c = expand_power(FunctionKind::Cos, 1, 0.3).unwrap();
        let one = SpectralForm::constant(Family::Circular, 1.0);
        assert_eq!(c.product(&one).unwrap(), c);
        assert_eq!(SpectralForm::zero(Family::Circular).evaluate(3.0), 0.0);
        assert_eq!(SpectralForm::constant(Family::Hyperbolic, 1.0).evaluate(5.0), 1.0);
        assert_eq!(expand_power(FunctionKind::Cosh, 4, 1.0).unwrap().evaluate(0.0), 1.0);
    }
}
