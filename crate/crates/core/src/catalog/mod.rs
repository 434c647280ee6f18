//! Named closed-form integrals with their convergence conditions and
//! reference integrands.
//!
//! Entries live in an immutable registry built on first use. Each one knows
//! its parameter schema, how to evaluate its closed form, and how to build
//! the integrand for the quadrature oracle.

pub mod formulas;
pub mod grid;
mod params;
mod registry;
pub mod verify;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_profiled, IntegralResult, Profile};
use crate::special::Complex;
use crate::spectral::{FunctionKind, SpectralForm};

pub use params::{canonical_name, format_complex, parse_complex, ParamKind, ParamSet, ParamSpec, Scaling};
pub use verify::{verify_entry, PointRecord, PointStatus, VerificationReport};

type Check = Box<dyn Fn(&ParamSet) -> bool + Send + Sync>;
type ClosedFn = Box<dyn Fn(&ParamSet) -> Result<Complex> + Send + Sync>;
type IntegrandFn = Box<dyn Fn(&ParamSet) -> Result<Integrand> + Send + Sync>;

/// One stated convergence condition.
pub struct Condition {
    pub text: String,
    /// `false` for conditions that come from how the result was derived
    /// rather than from the integral itself. Reported, not enforced.
    pub enforced: bool,
    check: Check,
}

impl Condition {
    pub fn holds(&self, p: &ParamSet) -> bool {
        (self.check)(p)
    }
}

impl fmt::Debug for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Condition({:?}, enforced={})", self.text, self.enforced)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionVerdict {
    pub text: String,
    pub enforced: bool,
    pub holds: bool,
}

/// A left-hand side ready for the oracle.
pub struct Integrand {
    f: Box<dyn Fn(f64) -> Complex + Send + Sync>,
    pub profile: Profile,
}

impl Integrand {
    pub fn new(profile: Profile, f: impl Fn(f64) -> Complex + Send + Sync + 'static) -> Self {
        Integrand { f: Box::new(f), profile }
    }

    pub fn eval(&self, x: f64) -> Complex {
        (self.f)(x)
    }

    pub fn integrate(&self, tol: f64) -> Result<IntegralResult> {
        integrate_profiled(|x| (self.f)(x), &self.profile, tol)
    }
}

pub struct CatalogEntry {
    pub id: String,
    /// Equation label, e.g. "(46)".
    pub equation: String,
    pub section: u8,
    pub description: String,
    pub params: Vec<ParamSpec>,
    pub conditions: Vec<Condition>,
    /// Whether (s, frequencies) → c·(s, frequencies) divides the value by c.
    pub scale_covariant: bool,
    closed: ClosedFn,
    integrand: IntegrandFn,
    grid: Vec<ParamSet>,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("equation", &self.equation)
            .finish_non_exhaustive()
    }
}

impl CatalogEntry {
    pub fn validate(&self, p: &ParamSet) -> Result<ParamSet> {
        p.validate(&self.params)
    }

    /// Every condition with its verdict at `p`.
    pub fn check(&self, p: &ParamSet) -> Result<Vec<ConditionVerdict>> {
        let p = self.validate(p)?;
        Ok(self
            .conditions
            .iter()
            .map(|c| ConditionVerdict { text: c.text.clone(), enforced: c.enforced, holds: c.holds(&p) })
            .collect())
    }

    /// Whether all enforced conditions hold. Invalid parameters count as no.
    pub fn admits(&self, p: &ParamSet) -> bool {
        match self.validate(p) {
            Ok(p) => self.conditions.iter().all(|c| !c.enforced || c.holds(&p)),
            Err(_) => false,
        }
    }

    /// Closed form, after checking the enforced conditions.
    pub fn evaluate(&self, p: &ParamSet) -> Result<Complex> {
        let p = self.validate(p)?;
        let failed: Vec<&str> =
            self.conditions.iter().filter(|c| c.enforced && !c.holds(&p)).map(|c| c.text.as_str()).collect();
        if !failed.is_empty() {
            return Err(Error::Domain(format!("{}: violated {}", self.id, failed.join("; "))));
        }
        self.finite((self.closed)(&p)?)
    }

    /// Closed form regardless of the stated conditions. Poles still raise.
    pub fn evaluate_relaxed(&self, p: &ParamSet) -> Result<Complex> {
        let p = self.validate(p)?;
        self.finite((self.closed)(&p)?)
    }

    fn finite(&self, v: Complex) -> Result<Complex> {
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(format!("{} closed form gave {v}", self.id)))
        }
    }

    pub fn integrand(&self, p: &ParamSet) -> Result<Integrand> {
        let p = self.validate(p)?;
        (self.integrand)(&p)
    }

    /// Quadrature value of the left-hand side.
    pub fn oracle(&self, p: &ParamSet, tol: f64) -> Result<IntegralResult> {
        self.integrand(p)?.integrate(tol)
    }

    pub fn default_grid(&self) -> &[ParamSet] {
        &self.grid
    }

    /// `p` with every [`Scaling::Linear`] parameter multiplied by `c`.
    pub fn rescale(&self, p: &ParamSet, c: f64) -> ParamSet {
        let mut out = p.clone();
        for spec in &self.params {
            if spec.scaling == Scaling::Linear {
                if let Some(v) = p.get(spec.name) {
                    out.set(spec.name, v * c);
                }
            }
        }
        out
    }
}

/// The immutable set of entries, in listing order.
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| Error::UnknownEntry(id.to_string()))
    }

    pub fn section(&self, section: u8) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.section == section)
    }
}

/// The shared registry.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog { entries: registry::build() })
}

fn eval(id: &str, p: ParamSet) -> Result<Complex> {
    catalog().get(id)?.evaluate(&p)
}

/// Termwise Laplace transform of a spectral form.
pub fn laplace_spectral(f: &SpectralForm, s: Complex) -> Result<Complex> {
    formulas::laplace_spectral(f, s)
}

pub fn entry_i(s: Complex, beta: Complex, nu: Complex, m: u32) -> Result<Complex> {
    eval("entry-I", ParamSet::new().with("s", s).with("β", beta).with("ν", nu).with("m", m as f64))
}

pub fn entry_ii(s: Complex, gamma: Complex, nu: Complex, n: u32) -> Result<Complex> {
    eval("entry-II", ParamSet::new().with("s", s).with("γ", gamma).with("ν", nu).with("n", n as f64))
}

pub fn entry_iii(s: Complex, lambda: Complex, nu: Complex, p: u32) -> Result<Complex> {
    eval("entry-III", ParamSet::new().with("s", s).with("λ", lambda).with("ν", nu).with("p", p as f64))
}

pub fn entry_iv(s: Complex, mu: Complex, nu: Complex, q: u32) -> Result<Complex> {
    eval("entry-IV", ParamSet::new().with("s", s).with("μ", mu).with("ν", nu).with("q", q as f64))
}

pub fn novel_v(alpha: Complex, beta: Complex, p: Complex) -> Result<Complex> {
    eval("novel-V", ParamSet::new().with("α", alpha).with("β", beta).with("p", p))
}

pub fn novel_vi(alpha: Complex, beta: Complex) -> Result<Complex> {
    eval("novel-VI", ParamSet::new().with("α", alpha).with("β", beta))
}

pub fn novel_vii(a: Complex, beta: Complex, nu: Complex) -> Result<Complex> {
    eval("novel-VII", ParamSet::new().with("a", a).with("β", beta).with("ν", nu))
}

/// ∫e^{−sx} kind^e(ωx) dx; ω may be complex.
pub fn integer_power_transform(kind: FunctionKind, exponent: u32, frequency: Complex, s: Complex) -> Result<Complex> {
    let bound = exponent as f64 * frequency.im.abs();
    if !(s.re > bound) {
        return Err(Error::Domain(format!("need Re(s) > {bound}, got s = {s}")));
    }
    formulas::integer_power_value(kind, exponent, frequency, s)
}

/// ∫e^{−sx} Π kindᵢ^{eᵢ}(ωᵢx) dx over real frequencies.
pub fn product_transform(factors: &[(FunctionKind, u32, f64)], s: Complex) -> Result<Complex> {
    formulas::product_value(factors, s)
}

/// Any section 5 entry by id ("eq-97" … "eq-116").
pub fn special_case(id: &str, params: &ParamSet) -> Result<Complex> {
    let entry = catalog().get(id)?;
    if entry.section != 5 {
        return Err(Error::UnknownEntry(format!("{id} is not a special case")));
    }
    entry.evaluate(params)
}
