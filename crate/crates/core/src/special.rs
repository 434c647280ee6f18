//! Complex Gamma, log-Gamma, Beta and Pochhammer.
//!
//! Gamma uses the Lanczos approximation (g = 7, nine coefficients) and the
//! reflection formula left of `Re z = 1/2`. Positive integer arguments are
//! served from an exact factorial table.

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

pub type Complex = Complex64;

/// Distance from a non-positive integer that still counts as a pole.
pub const POLE_TOL: f64 = 1e-12;

/// `z` landed on (or within [`POLE_TOL`] of) a pole of Gamma.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("pole of Gamma at {location} ({context})")]
pub struct PoleError {
    pub location: Complex,
    pub context: String,
}

impl PoleError {
    pub fn new(location: Complex, context: impl Into<String>) -> Self {
        PoleError {
            location,
            context: context.into(),
        }
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Largest n with n! representable; Γ(n+1) is read from the table up to here.
const MAX_FACTORIAL: usize = 170;

fn factorial_table() -> &'static [f64; MAX_FACTORIAL + 1] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[f64; MAX_FACTORIAL + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [1.0; MAX_FACTORIAL + 1];
        for n in 1..=MAX_FACTORIAL {
            t[n] = t[n - 1] * n as f64;
        }
        t
    })
}

/// `Some(k)` when `z` is within the pole tolerance of `-k`, k ≥ 0.
pub fn nonpositive_integer(z: Complex) -> Option<u64> {
    if z.im.abs() > POLE_TOL || z.re > POLE_TOL {
        return None;
    }
    let r = z.re.round();
    ((z.re - r).abs() <= POLE_TOL).then(|| (-r) as u64)
}

/// Exact small positive integer, if `z` is one.
fn positive_integer(z: Complex) -> Option<usize> {
    if z.im != 0.0 || z.re < 1.0 || z.re.fract() != 0.0 || z.re > (MAX_FACTORIAL + 1) as f64 {
        return None;
    }
    Some(z.re as usize)
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    if x.fract() == 0.0 {
        return 0.0;
    }
    // reduce to (-1, 1]
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r <= -1.0 {
        r += 2.0;
    }
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    let v = if r <= 0.25 {
        (PI * r).sin()
    } else if r <= 0.75 {
        (PI * (r - 0.5)).cos()
    } else {
        (PI * (1.0 - r)).sin()
    };
    sign * v
}

/// `cos(πx)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// `sin(πz)` for complex `z`.
pub fn sin_pi_c(z: Complex) -> Complex {
    let y = PI * z.im;
    Complex::new(sin_pi(z.re) * y.cosh(), cos_pi(z.re) * y.sinh())
}

/// `ln sin(πz)` modulo 2πi, stable for large |Im z| where sin overflows.
fn ln_sin_pi(z: Complex) -> Complex {
    if z.im.abs() < 30.0 {
        return sin_pi_c(z).ln();
    }
    let one = Complex::new(1.0, 0.0);
    let ipz = Complex::new(0.0, PI) * z;
    let half_pi_i = Complex::new(0.0, PI / 2.0);
    if z.im > 0.0 {
        -ipz + (one - (2.0 * ipz).exp()).ln() + half_pi_i - std::f64::consts::LN_2
    } else {
        ipz + (one - (-2.0 * ipz).exp()).ln() - half_pi_i - std::f64::consts::LN_2
    }
}

fn wrap_phase(mut z: Complex) -> Complex {
    if z.im.is_finite() && (z.im > PI || z.im <= -PI) {
        z.im -= 2.0 * PI * ((z.im + PI) / (2.0 * PI)).floor();
        if z.im <= -PI {
            z.im += 2.0 * PI;
        }
    }
    z
}

fn lanczos_sum(z: Complex) -> Complex {
    // z is already shifted by −1
    let mut x = Complex::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    x
}

/// ln Γ(z) for Re z ≥ 1/2 via Lanczos.
fn log_gamma_right(z: Complex) -> Complex {
    let z = z - 1.0;
    let t = z + (LANCZOS_G + 0.5);
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + lanczos_sum(z).ln()
}

/// Γ(z).
pub fn gamma(z: Complex) -> Result<Complex, PoleError> {
    if let Some(k) = nonpositive_integer(z) {
        return Err(PoleError::new(Complex::new(-(k as f64), 0.0), "gamma"));
    }
    if let Some(n) = positive_integer(z) {
        return Ok(Complex::new(factorial_table()[n - 1], 0.0));
    }
    if z.re < 0.5 {
        if z.im.abs() > 30.0 || z.re < -170.0 {
            return log_gamma(z).map(|l| l.exp());
        }
        let g = gamma(Complex::new(1.0, 0.0) - z)?;
        return Ok(PI / (sin_pi_c(z) * g));
    }
    let zm = z - 1.0;
    let t = zm + (LANCZOS_G + 0.5);
    let scale = ((zm + 0.5) * t.ln() - t).exp();
    Ok(scale * lanczos_sum(zm) * (2.0 * PI).sqrt())
}

/// Principal-branch ln Γ(z): imaginary part wrapped into (−π, π].
pub fn log_gamma(z: Complex) -> Result<Complex, PoleError> {
    if let Some(k) = nonpositive_integer(z) {
        return Err(PoleError::new(Complex::new(-(k as f64), 0.0), "log_gamma"));
    }
    if let Some(n) = positive_integer(z) {
        return Ok(Complex::new(if n <= 2 { 0.0 } else { factorial_table()[n - 1].ln() }, 0.0));
    }
    let v = if z.re < 0.5 {
        let one_minus = Complex::new(1.0, 0.0) - z;
        Complex::new(PI.ln(), 0.0) - ln_sin_pi(z) - log_gamma_right(one_minus)
    } else {
        log_gamma_right(z)
    };
    Ok(wrap_phase(v))
}

/// Γ(a)Γ(b)/Γ(a+b).
pub fn beta(a: Complex, b: Complex) -> Result<Complex, PoleError> {
    for (v, name) in [(a, "beta: a"), (b, "beta: b"), (a + b, "beta: a+b")] {
        if let Some(k) = nonpositive_integer(v) {
            return Err(PoleError::new(Complex::new(-(k as f64), 0.0), name));
        }
    }
    if let (Some(m), Some(n)) = (positive_integer(a), positive_integer(b)) {
        if m + n - 1 <= MAX_FACTORIAL {
            let f = factorial_table();
            return Ok(Complex::new(f[m - 1] * f[n - 1] / f[m + n - 1], 0.0));
        }
    }
    // B(a, n) = (n−1)!/(a)_n
    for (x, y) in [(a, b), (b, a)] {
        if let Some(n) = positive_integer(y) {
            if n <= 60 {
                return Ok(factorial_table()[n - 1] / rising(x, n));
            }
        }
    }
    let sum = a + b;
    if let Some(n) = positive_integer(sum) {
        // B(a, n−a) = π/sin(πa) · (1−a)_{n−1}/(n−1)!
        if n <= 60 {
            let one = Complex::new(1.0, 0.0);
            let poch = rising(one - a, n - 1);
            return Ok(poch * PI / (sin_pi_c(a) * factorial_table()[n - 1]));
        }
    }
    Ok((log_gamma(a)? + log_gamma(b)? - log_gamma(sum)?).exp())
}

fn rising(x: Complex, n: usize) -> Complex {
    let mut p = Complex::new(1.0, 0.0);
    for k in 0..n {
        p *= x + k as f64;
    }
    p
}

/// (λ)_υ = Γ(λ+υ)/Γ(λ); a finite product when υ is a non-negative integer.
pub fn pochhammer(lambda: Complex, upsilon: Complex) -> Result<Complex, PoleError> {
    if upsilon.im == 0.0 && upsilon.re >= 0.0 && upsilon.re.fract() == 0.0 && upsilon.re <= 1e6 {
        return Ok(rising(lambda, upsilon.re as usize));
    }
    if let Some(k) = nonpositive_integer(lambda + upsilon) {
        return Err(PoleError::new(Complex::new(-(k as f64), 0.0), "pochhammer: λ+υ"));
    }
    if nonpositive_integer(lambda).is_some() {
        return Ok(Complex::new(0.0, 0.0));
    }
    Ok((log_gamma(lambda + upsilon)? - log_gamma(lambda)?).exp())
}

/// Π Γ(num) / Π Γ(den) through log-Gamma. A pole upstairs is an error, a
/// pole downstairs makes the whole ratio zero.
pub fn gamma_ratio(num: &[Complex], den: &[Complex]) -> Result<Complex, PoleError> {
    for &d in den {
        if nonpositive_integer(d).is_some() {
            for &n in num {
                if let Some(k) = nonpositive_integer(n) {
                    return Err(PoleError::new(Complex::new(-(k as f64), 0.0), "gamma ratio numerator"));
                }
            }
            return Ok(Complex::new(0.0, 0.0));
        }
    }
    let mut acc_num = Complex::new(0.0, 0.0);
    for &n in num {
        acc_num += log_gamma(n)?;
    }
    let mut acc_den = Complex::new(0.0, 0.0);
    for &d in den {
        acc_den += log_gamma(d)?;
    }
    Ok((acc_num - acc_den).exp())
}

/// ln cosh(z) for Re z ≥ 0, without overflow.
pub fn ln_cosh(z: Complex) -> Complex {
    let z = if z.re < 0.0 { -z } else { z };
    z + (Complex::new(1.0, 0.0) + (-2.0 * z).exp()).ln() - std::f64::consts::LN_2
}

/// ln sinh(x) for real x > 0.
pub fn ln_sinh(x: f64) -> f64 {
    if x < 0.5 {
        x.sinh().ln()
    } else {
        x + (-(-2.0 * x).exp_m1()).ln() - std::f64::consts::LN_2
    }
}

/// ln cosh(x) for real x.
pub fn ln_cosh_real(x: f64) -> f64 {
    let x = x.abs();
    x + (-2.0 * x).exp().ln_1p() - std::f64::consts::LN_2
}

/// `base^exponent`, staying real when both are real and base positive.
pub fn cpow(base: Complex, exponent: Complex) -> Complex {
    if base.im == 0.0 && exponent.im == 0.0 && base.re > 0.0 {
        return Complex::new(base.re.powf(exponent.re), 0.0);
    }
    if exponent.im == 0.0 && exponent.re.fract() == 0.0 && exponent.re.abs() <= 64.0 {
        return base.powi(exponent.re as i32);
    }
    (exponent * base.ln()).exp()
}
