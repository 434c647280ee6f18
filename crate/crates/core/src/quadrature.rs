//! Adaptive Gauss–Kronrod quadrature on (0, ∞) for exponentially damped
//! integrands.
//!
//! The range is truncated where the supplied exponential envelope makes the
//! tail negligible, cut into panels no wider than a quarter period of the
//! fastest oscillation, and refined by global bisection of the panel with the
//! largest error. A power-law substitution on the first panel absorbs an
//! `x^σ` endpoint singularity.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::special::Complex;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

pub const MAX_EVALUATIONS: usize = 1_000_000;
const MAX_TAIL_EXTENSIONS: usize = 6;

/// Shape information about an integrand, supplied by its caller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Profile {
    /// `|f(x)| ≤ C e^{−decay_rate·x}` for large x.
    pub decay_rate: f64,
    /// Fastest oscillation frequency (radians per unit x); 0 if none.
    pub max_frequency: f64,
    /// `f(x) ~ x^σ` as x → 0⁺.
    pub endpoint_exponent: f64,
}

impl Profile {
    pub fn new(decay_rate: f64) -> Self {
        Profile { decay_rate, max_frequency: 0.0, endpoint_exponent: 0.0 }
    }

    pub fn with_frequency(mut self, f: f64) -> Self {
        self.max_frequency = f.abs();
        self
    }

    pub fn with_endpoint_exponent(mut self, sigma: f64) -> Self {
        self.endpoint_exponent = sigma;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: Complex,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    // first panel runs in u with x = h·u^r
    mapped: bool,
    value: Complex,
    err_re: f64,
    err_im: f64,
    abs_re: f64,
    abs_im: f64,
}

impl Panel {
    fn error(&self) -> f64 {
        self.err_re + self.err_im
    }
}

struct Queued(f64, usize);

impl PartialEq for Queued {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Queued {}
impl PartialOrd for Queued {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Queued {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.total_cmp(&o.0).then(o.1.cmp(&self.1))
    }
}

struct Integrator<'f, F> {
    f: &'f F,
    h: f64,
    r: f64,
    evaluations: usize,
}

/// QUADPACK-style error from Kronrod/Gauss difference, per real component.
fn component_error(resk: f64, resg: f64, resabs: f64, resasc: f64, hl: f64) -> f64 {
    let mut err = ((resk - resg) * hl).abs();
    let resasc = resasc * hl;
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let resabs = resabs * hl;
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    err
}

impl<'f, F: Fn(f64) -> Complex> Integrator<'f, F> {
    fn eval(&mut self, t: f64, mapped: bool) -> Result<Complex> {
        self.evaluations += 1;
        let v = if mapped {
            let x = self.h * t.powf(self.r);
            (self.f)(x) * (self.h * self.r * t.powf(self.r - 1.0))
        } else {
            (self.f)(t)
        };
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite(format!("integrand at t = {t}")));
        }
        Ok(v)
    }

    fn panel(&mut self, a: f64, b: f64, mapped: bool) -> Result<Panel> {
        let c = 0.5 * (a + b);
        let hl = 0.5 * (b - a);
        let mut fv = [Complex::new(0.0, 0.0); 15];
        for (i, &x) in XGK.iter().enumerate() {
            if i == 7 {
                fv[7] = self.eval(c, mapped)?;
            } else {
                fv[i] = self.eval(c - hl * x, mapped)?;
                fv[14 - i] = self.eval(c + hl * x, mapped)?;
            }
        }
        let mut resk = Complex::new(0.0, 0.0);
        let mut resg = Complex::new(0.0, 0.0);
        let (mut abs_re, mut abs_im) = (0.0, 0.0);
        for i in 0..15 {
            let j = if i < 8 { i } else { 14 - i };
            resk += fv[i] * WGK[j];
            abs_re += WGK[j] * fv[i].re.abs();
            abs_im += WGK[j] * fv[i].im.abs();
            if j % 2 == 1 && j < 7 {
                resg += fv[i] * WG[j / 2];
            }
        }
        resg += fv[7] * WG[3];
        let mean = resk * 0.5;
        let (mut asc_re, mut asc_im) = (0.0, 0.0);
        for i in 0..15 {
            let j = if i < 8 { i } else { 14 - i };
            asc_re += WGK[j] * (fv[i].re - mean.re).abs();
            asc_im += WGK[j] * (fv[i].im - mean.im).abs();
        }
        Ok(Panel {
            a,
            b,
            mapped,
            value: resk * hl,
            err_re: component_error(resk.re, resg.re, abs_re, asc_re, hl),
            err_im: component_error(resk.im, resg.im, abs_im, asc_im, hl),
            abs_re: abs_re * hl,
            abs_im: abs_im * hl,
        })
    }
}

fn substitution_power(sigma: f64) -> f64 {
    if sigma >= 0.0 && sigma.fract() == 0.0 {
        1.0
    } else {
        (2.0 / (sigma + 1.0)).ceil().max(2.0)
    }
}

/// Integrate `f` over (0, ∞) assuming `|f(x)| ≲ e^{−decay_rate·x}`.
pub fn integrate_semi_infinite<F: Fn(f64) -> Complex>(f: F, decay_rate: f64, tol: f64) -> Result<IntegralResult> {
    integrate_profiled(f, &Profile::new(decay_rate), tol)
}

/// As [`integrate_semi_infinite`] with oscillation and endpoint hints.
pub fn integrate_profiled<F: Fn(f64) -> Complex>(f: F, profile: &Profile, tol: f64) -> Result<IntegralResult> {
    let decay = profile.decay_rate;
    if !(decay > 0.0) || !decay.is_finite() {
        return Err(Error::Domain(format!("decay rate must be positive, got {decay}")));
    }
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::Domain(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    let sigma = profile.endpoint_exponent;
    if !(sigma > -1.0) {
        return Err(Error::Domain(format!("endpoint exponent {sigma} is not integrable")));
    }
    let mut width = 1.0f64;
    if profile.max_frequency > 0.0 {
        width = width.min(std::f64::consts::PI / (2.0 * profile.max_frequency));
    }
    let mut integ = Integrator { f: &f, h: width, r: substitution_power(sigma), evaluations: 0 };
    let mut end = (1.0 / tol).ln().max(0.0) / decay + 40.0 / decay;

    let mut panels: Vec<Panel> = Vec::new();
    let mut heap = BinaryHeap::new();
    let push = |panels: &mut Vec<Panel>, heap: &mut BinaryHeap<Queued>, p: Panel| {
        heap.push(Queued(p.error(), panels.len()));
        panels.push(p);
    };
    let first = integ.panel(0.0, 1.0, true)?;
    push(&mut panels, &mut heap, first);
    let mut covered = width;
    let mut extensions = 0;

    loop {
        while covered < end {
            let next = (covered + width).min(end.max(covered + width * 1e-3));
            let p = integ.panel(covered, next, false)?;
            push(&mut panels, &mut heap, p);
            covered = next;
            if integ.evaluations > MAX_EVALUATIONS {
                return Err(budget_error());
            }
        }
        refine(&mut integ, &mut panels, &mut heap, tol)?;

        // Deterministic tail check at the truncation point.
        let total = sum_panels(&panels);
        let tail = (f)(covered).norm() / decay;
        integ.evaluations += 1;
        if tail > tol * total.norm().max(f64::MIN_POSITIVE) && extensions < MAX_TAIL_EXTENSIONS {
            end = 2.0 * covered;
            extensions += 1;
            continue;
        }
        let (err_re, err_im) = panels.iter().fold((0.0, 0.0), |(r, i), p| (r + p.err_re, i + p.err_im));
        let error_estimate = err_re.hypot(err_im) + tail;
        return Ok(IntegralResult {
            value: total,
            error_estimate,
            evaluations: integ.evaluations,
            converged: error_estimate <= tol * total.norm().max(1.0),
        });
    }
}

fn budget_error() -> Error {
    Error::NoConvergence(format!("quadrature budget of {MAX_EVALUATIONS} evaluations exhausted"))
}

fn refine<F: Fn(f64) -> Complex>(
    integ: &mut Integrator<'_, F>,
    panels: &mut Vec<Panel>,
    heap: &mut BinaryHeap<Queued>,
    tol: f64,
) -> Result<()> {
    let mut value = panels.iter().map(|p| p.value).sum::<Complex>();
    let mut err_re: f64 = panels.iter().map(|p| p.err_re).sum();
    let mut err_im: f64 = panels.iter().map(|p| p.err_im).sum();
    let abs_re: f64 = panels.iter().map(|p| p.abs_re).sum();
    let abs_im: f64 = panels.iter().map(|p| p.abs_im).sum();
    // per-component budget; the floor keeps roundoff-limited cases finite
    let floor_re = 200.0 * f64::EPSILON * abs_re;
    let floor_im = 200.0 * f64::EPSILON * abs_im;
    loop {
        let target = 0.5 * tol * value.norm();
        if err_re <= target.max(floor_re) && err_im <= target.max(floor_im) {
            return Ok(());
        }
        let Some(Queued(_, idx)) = heap.pop() else {
            // every panel is at the resolution limit
            return Ok(());
        };
        let p = panels[idx];
        let mid = 0.5 * (p.a + p.b);
        if !(mid > p.a && mid < p.b) || (p.b - p.a) <= 1e-14 * p.a.abs().max(p.b.abs()) {
            continue;
        }
        let left = integ.panel(p.a, mid, p.mapped)?;
        let right = integ.panel(mid, p.b, p.mapped)?;
        value += left.value + right.value - p.value;
        err_re += left.err_re + right.err_re - p.err_re;
        err_im += left.err_im + right.err_im - p.err_im;
        panels[idx] = left;
        heap.push(Queued(left.error(), idx));
        heap.push(Queued(right.error(), panels.len()));
        panels.push(right);
        if integ.evaluations > MAX_EVALUATIONS {
            return Err(budget_error());
        }
        // refresh the running sums now and then against drift
        if panels.len() % 256 == 0 {
            value = panels.iter().map(|p| p.value).sum();
            err_re = panels.iter().map(|p| p.err_re).sum();
            err_im = panels.iter().map(|p| p.err_im).sum();
        }
    }
}

/// Compensated (Neumaier) sum in order along the x axis.
fn sum_panels(panels: &[Panel]) -> Complex {
    let mut order: Vec<usize> = (0..panels.len()).collect();
    order.sort_by(|&i, &j| {
        let key = |p: &Panel| (!p.mapped, p.a);
        key(&panels[i]).partial_cmp(&key(&panels[j])).unwrap_or(Ordering::Equal)
    });
    let mut acc = [(0.0f64, 0.0f64); 2];
    for i in order {
        let v = panels[i].value;
        for (k, x) in [v.re, v.im].into_iter().enumerate() {
            let (s, c) = &mut acc[k];
            let t = *s + x;
            if s.abs() >= x.abs() {
                *c += (*s - t) + x;
            } else {
                *c += (x - t) + *s;
            }
            *s = t;
        }
    }
    Complex::new(acc[0].0 + acc[0].1, acc[1].0 + acc[1].1)
}
