//! Closed forms, without the convergence predicates.
//!
//! Every function here evaluates a right-hand side as written (Gamma poles
//! still raise). Condition checking lives in the registry, which wraps these.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hypergeom::hyp2f1;
use crate::spectral::{expand_power, Family, FunctionKind, SpectralForm, TermKind};
use crate::special::{beta, cpow, gamma_ratio, pochhammer, Complex};

fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

const I: Complex = Complex::new(0.0, 1.0);

fn two_pow(nu: Complex) -> Complex {
    cpow(re(2.0), nu)
}

/// Laplace transform of a single `coef·kind(ω x)` term.
fn term_transform(kind: TermKind, coef: f64, omega: Complex, s: Complex) -> Complex {
    match kind {
        TermKind::Const => coef / s,
        TermKind::Sin => coef * omega / (omega * omega + s * s),
        TermKind::Cos => coef * s / (omega * omega + s * s),
        TermKind::Sinh => coef * omega / (s * s - omega * omega),
        TermKind::Cosh => coef * s / (s * s - omega * omega),
    }
}

/// Termwise Laplace transform of a spectral form.
pub fn laplace_spectral(f: &SpectralForm, s: Complex) -> Result<Complex> {
    if f.is_empty() {
        return Ok(re(0.0));
    }
    let bound = match f.family() {
        Family::Circular => 0.0,
        Family::Hyperbolic => f.max_frequency(),
    };
    if !(s.re > bound) {
        return Err(Error::Domain(format!("Laplace transform needs Re(s) > {bound}, got s = {s}")));
    }
    Ok(f.terms().iter().map(|t| term_transform(t.kind, t.coefficient, re(t.frequency), s)).sum())
}

/// Transform of `kind(β x)^e` for possibly complex β: expand at unit
/// frequency, then scale each term's frequency by β.
pub fn integer_power_value(kind: FunctionKind, exponent: u32, freq: Complex, s: Complex) -> Result<Complex> {
    if kind.family() != Family::Circular {
        return Err(Error::FamilyMismatch);
    }
    let form = expand_power(kind, exponent, 1.0)?;
    Ok(form.terms().iter().map(|t| term_transform(t.kind, t.coefficient, freq * t.frequency, s)).sum())
}

/// Fold of power expansions, then termwise transform.
pub fn product_value(factors: &[(FunctionKind, u32, f64)], s: Complex) -> Result<Complex> {
    let mut acc = SpectralForm::constant(Family::Circular, 1.0);
    for &(kind, e, freq) in factors {
        if kind.family() != Family::Circular {
            return Err(Error::FamilyMismatch);
        }
        acc = acc.product(&expand_power(kind, e, freq)?)?;
    }
    laplace_spectral(&acc, s)
}

/// 1/(2^ν (s − Nβ')) · ₂F₁(−N, c; c+1; z), the common shape of the
/// hypergeometric entries.
fn f21_entry(s: Complex, nu: Complex, n_total: Complex, shift: Complex, c: Complex, z: f64) -> Result<Complex> {
    let f = hyp2f1(-n_total, c, c + 1.0, re(z))?;
    Ok(f / (two_pow(nu) * (s - shift)))
}

/// Entry I: cosh series, ₂F₁ at −1.
pub fn entry_i(s: Complex, b: Complex, nu: Complex, m: u32) -> Result<Complex> {
    let m = m as f64;
    let c = s / (2.0 * b) - m * nu;
    f21_entry(s, nu, 2.0 * m * nu, 2.0 * m * nu * b, c, -1.0)
}

/// Γ(c)Γ(1+N)/Γ(c+N) · 2^{−ν}/(s + N f): the Beta forms N·B(c, N) with the
/// removable ν = 0 singularity taken out.
fn beta_entry(s: Complex, nu: Complex, n_total: Complex, freq: Complex, c: Complex) -> Result<Complex> {
    let g = gamma_ratio(&[c, n_total + 1.0], &[c + n_total])?;
    Ok(g / (two_pow(nu) * (s + n_total * freq)))
}

/// Entry II, Beta form.
pub fn entry_ii(s: Complex, g: Complex, nu: Complex, n: u32) -> Result<Complex> {
    let n_total = 2.0 * n as f64 * nu;
    beta_entry(s, nu, n_total, g, s / (2.0 * g) - n_total / 2.0)
}

/// Entry II, the ₂F₁(1) form (summed as a series, not by Gauss).
pub fn entry_ii_series(s: Complex, g: Complex, nu: Complex, n: u32) -> Result<Complex> {
    let n_total = 2.0 * n as f64 * nu;
    f21_entry(s, nu, n_total, n_total * g, s / (2.0 * g) - n_total / 2.0, 1.0)
}

/// Entry III, Beta form.
pub fn entry_iii(s: Complex, l: Complex, nu: Complex, p: u32) -> Result<Complex> {
    let n_total = (2 * p + 1) as f64 * nu;
    beta_entry(s, nu, n_total, l, s / (2.0 * l) - n_total / 2.0)
}

/// Entry III, the ₂F₁(1) form.
pub fn entry_iii_series(s: Complex, l: Complex, nu: Complex, p: u32) -> Result<Complex> {
    let n_total = (2 * p + 1) as f64 * nu;
    f21_entry(s, nu, n_total, n_total * l, s / (2.0 * l) - n_total / 2.0, 1.0)
}

/// Entry IV: odd cosh series, ₂F₁ at −1.
pub fn entry_iv(s: Complex, mu: Complex, nu: Complex, q: u32) -> Result<Complex> {
    let n_total = (2 * q + 1) as f64 * nu;
    f21_entry(s, nu, n_total, n_total * mu, s / (2.0 * mu) - n_total / 2.0, -1.0)
}

/// ∫e^{−sx}[cosh γx − 1]^ν, first Beta form 2ν/(2^ν(s+νγ))·B(s/γ−ν, 2ν).
pub fn known_38(s: Complex, g: Complex, nu: Complex) -> Result<Complex> {
    let x = s / g - nu;
    let r = gamma_ratio(&[x, 2.0 * nu + 1.0], &[x + 2.0 * nu])?;
    Ok(r / (two_pow(nu) * (s + nu * g)))
}

/// Second Beta form B(s/γ−ν, 2ν+1)/(2^ν γ).
pub fn known_39(s: Complex, g: Complex, nu: Complex) -> Result<Complex> {
    Ok(beta(s / g - nu, 2.0 * nu + 1.0)? / (two_pow(nu) * g))
}

/// ∫e^{−sx} sinh^ν(λx), ν/(2^ν(s+λν))·B(s/2λ − ν/2, ν).
pub fn known_40(s: Complex, l: Complex, nu: Complex) -> Result<Complex> {
    let y = s / (2.0 * l) - nu / 2.0;
    let r = gamma_ratio(&[y, nu + 1.0], &[y + nu])?;
    Ok(r / (two_pow(nu) * (s + l * nu)))
}

/// B(s/2λ − ν/2, 1+ν)/(2^{1+ν} λ).
pub fn known_41(s: Complex, l: Complex, nu: Complex) -> Result<Complex> {
    Ok(beta(s / (2.0 * l) - nu / 2.0, nu + 1.0)? / (two_pow(nu + 1.0) * l))
}

/// ∫cosh(2αt)/cosh^{2β}(pt) dt = 4^{β−1} p⁻¹ B(β+α/p, β−α/p).
pub fn novel_v(alpha: Complex, b: Complex, p: Complex) -> Result<Complex> {
    let r = alpha / p;
    Ok(cpow(re(4.0), b - 1.0) / p * beta(b + r, b - r)?)
}

/// ∫sinh^α x / cosh^β x dx = ½ B((1+α)/2, (β−α)/2).
pub fn novel_vi(alpha: Complex, b: Complex) -> Result<Complex> {
    Ok(0.5 * beta((alpha + 1.0) / 2.0, (b - alpha) / 2.0)?)
}

/// ∫cos(ax)/cosh^ν(βx) dx = 2^{ν−2}/(βΓ(ν)) Γ(ν/2 + ia/2β) Γ(ν/2 − ia/2β).
pub fn novel_vii(a: Complex, b: Complex, nu: Complex) -> Result<Complex> {
    let w = I * a / (2.0 * b);
    let g = gamma_ratio(&[nu / 2.0 + w, nu / 2.0 - w], &[nu])?;
    Ok(two_pow(nu - 2.0) / b * g)
}

/// The bare Beta function printed as the second equality for novel VII.
/// It drops the 2^{ν−2}/β prefactor; kept only to demonstrate that.
pub fn novel_vii_beta_form(a: Complex, b: Complex, nu: Complex) -> Result<Complex> {
    let w = I * a / (2.0 * b);
    Ok(beta(nu / 2.0 + w, nu / 2.0 - w)?)
}

/// ∫x sin(ax)/cosh²x dx with the sign fixed: the closed form is
/// d/da ∫cos(ax)/cosh²x, which is −∫x sin(ax)/cosh²x.
pub fn cos_over_cosh2_derivative(a: Complex) -> Complex {
    let h = a * PI / 2.0;
    (2.0 * PI * h.sinh() - a * PI * PI * h.cosh()) / (4.0 * h.sinh() * h.sinh())
}

/// cos^{2m}(βx): the hypergeometric form with ω = i.
pub fn cos_even_f21(m: u32, b: Complex, s: Complex) -> Result<Complex> {
    let m = m as f64;
    let c = (-I * s - 2.0 * m * b) / (2.0 * b);
    let f = hyp2f1(re(-2.0 * m), c, c + 1.0, re(-1.0))?;
    Ok(f / (cpow(re(2.0), re(2.0 * m)) * (s - I * 2.0 * m * b)))
}

/// sin^{2n}(γx): the Pochhammer form.
pub fn sin_even_pochhammer(n: u32, g: Complex, s: Complex) -> Result<Complex> {
    let nn = re(n as f64);
    let fact = pochhammer(re(1.0), re(2.0 * n as f64))?;
    let w = I * s / (2.0 * g);
    let den = cpow(re(2.0), 2.0 * nn) * (s + 2.0 * I * nn * g) * pochhammer(w + 1.0, nn)? * pochhammer(-w, nn)?;
    Ok(fact / den)
}

/// sin^{2p+1}(λx): the Pochhammer form.
pub fn sin_odd_pochhammer(p: u32, l: Complex, s: Complex) -> Result<Complex> {
    let pp = re(p as f64);
    let fact = pochhammer(re(1.0), re((2 * p + 1) as f64))?;
    let a = (3.0 * l + I * s) / (2.0 * l);
    let b = (l - I * s) / (2.0 * l);
    let den = cpow(re(2.0), 2.0 * pp)
        * (s - I * l)
        * (s + I * l * (2 * p + 1) as f64)
        * pochhammer(a, pp)?
        * pochhammer(b, pp)?;
    Ok(fact * l / den)
}

/// cos^{2q+1}(μx): the hypergeometric form.
pub fn cos_odd_f21(q: u32, mu: Complex, s: Complex) -> Result<Complex> {
    let k = (2 * q + 1) as f64;
    let c = (-I * s - k * mu) / (2.0 * mu);
    let f = hyp2f1(re(-k), c, c + 1.0, re(-1.0))?;
    Ok(f / (cpow(re(2.0), re(k)) * (s - I * k * mu)))
}

fn binom(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// The finite sums for ∫e^{−sx} cos^{2m}, sin^{2n}, sin^{2p+1}, cos^{2q+1},
/// written out term by term.
pub fn cos_even_sum(m: u32, b: Complex, s: Complex) -> Complex {
    let scale = 0.5f64.powi(2 * m as i32 - 1);
    let mut acc = re(0.0);
    for i in 0..m {
        let w = (2 * m - 2 * i) as f64 * b;
        acc += binom(2 * m, i) * s / (w * w + s * s);
    }
    acc * scale + binom(2 * m, m) * 0.5f64.powi(2 * m as i32) / s
}

pub fn sin_even_sum(n: u32, g: Complex, s: Complex) -> Complex {
    let scale = 0.5f64.powi(2 * n as i32 - 1) * if n % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = re(0.0);
    for j in 0..n {
        let w = (2 * n - 2 * j) as f64 * g;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom(2 * n, j) * s / (w * w + s * s);
    }
    acc * scale + binom(2 * n, n) * 0.5f64.powi(2 * n as i32) / s
}

pub fn sin_odd_sum(p: u32, l: Complex, s: Complex) -> Complex {
    let scale = 0.5f64.powi(2 * p as i32) * if p % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = re(0.0);
    for k in 0..=p {
        let w = (2 * p + 1 - 2 * k) as f64 * l;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom(2 * p + 1, k) * w / (w * w + s * s);
    }
    acc * scale
}

pub fn cos_odd_sum(q: u32, mu: Complex, s: Complex) -> Complex {
    let scale = 0.5f64.powi(2 * q as i32);
    let mut acc = re(0.0);
    for l in 0..=q {
        let w = (2 * q + 1 - 2 * l) as f64 * mu;
        acc += binom(2 * q + 1, l) * s / (w * w + s * s);
    }
    acc * scale
}

/// Right-hand sides exactly as printed for the special cases that carry
/// elementary closed forms. Used to audit the delegation to novel V–VII.
pub mod printed {
    use super::*;

    fn sec(z: Complex) -> Complex {
        1.0 / z.cos()
    }

    pub fn eq_107(mu: Complex) -> Result<Complex> {
        Ok(cpow(re(4.0), mu - 1.0) * beta(mu, mu)?)
    }

    pub fn eq_108(a: f64, b: f64) -> Complex {
        PI / (2.0 * b) * sec(re(a * PI / (2.0 * b)))
    }

    pub fn eq_109(a: f64) -> Complex {
        0.5 * sec(re(a / 2.0))
    }

    pub fn eq_110(a: f64) -> Complex {
        PI / 2.0 * sec(re(a * PI / 2.0))
    }

    pub fn eq_111(a: f64) -> Complex {
        re(PI / (2.0 * a))
    }

    /// Printed as (π/p)·cosec(πα/p); off by the factor α/p.
    pub fn eq_112(alpha: Complex, p: Complex) -> Complex {
        PI / p / (PI * alpha / p).sin()
    }

    pub fn eq_113(mu: Complex) -> Result<Complex> {
        Ok(0.5 * beta(re(0.5), mu / 2.0)?)
    }

    pub fn eq_115(a: Complex, b: Complex) -> Complex {
        PI * a / (2.0 * b * b * (PI * a / (2.0 * b)).sinh())
    }
}
