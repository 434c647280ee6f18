//! Minimal double-double arithmetic (about 32 significant digits).
//!
//! Used by the series summation, where Levin-type extrapolation of
//! logarithmically convergent sums loses most of a plain f64.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::special::Complex;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn powi(self, n: u32) -> Dd {
        let mut acc = Dd::ONE;
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, y: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, y.hi);
        let (t, f) = two_sum(self.lo, y.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, y: Dd) -> Dd {
        self + (-y)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, y: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, y.hi);
        let e = e + (self.hi * y.lo + self.lo * y.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, y: Dd) -> Dd {
        let q1 = self.hi / y.hi;
        let r = self - y * Dd::from(q1);
        let q2 = r.hi / y.hi;
        let r = r - y * Dd::from(q2);
        let q3 = r.hi / y.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from(q3)
    }
}

/// Complex number over [`Dd`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct DdC {
    pub re: Dd,
    pub im: Dd,
}

impl DdC {
    pub const ZERO: DdC = DdC { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: DdC = DdC { re: Dd::ONE, im: Dd::ZERO };

    pub fn real(x: Dd) -> DdC {
        DdC { re: x, im: Dd::ZERO }
    }

    pub fn to_complex(self) -> Complex {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Magnitude in plain f64; only used for tests and stopping rules.
    pub fn norm(self) -> f64 {
        self.to_complex().norm()
    }

    pub fn scale(self, k: Dd) -> DdC {
        DdC { re: self.re * k, im: self.im * k }
    }
}

impl From<Complex> for DdC {
    fn from(z: Complex) -> DdC {
        DdC { re: z.re.into(), im: z.im.into() }
    }
}

impl Add for DdC {
    type Output = DdC;
    fn add(self, o: DdC) -> DdC {
        DdC { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for DdC {
    type Output = DdC;
    fn sub(self, o: DdC) -> DdC {
        DdC { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for DdC {
    type Output = DdC;
    fn mul(self, o: DdC) -> DdC {
        DdC {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Div for DdC {
    type Output = DdC;
    fn div(self, o: DdC) -> DdC {
        let den = o.re * o.re + o.im * o.im;
        DdC {
            re: (self.re * o.re + self.im * o.im) / den,
            im: (self.im * o.re - self.re * o.im) / den,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_roundtrips() {
        let third = Dd::ONE / Dd::from(3.0);
        assert!(third.lo != 0.0);
        let back = third * Dd::from(3.0) - Dd::ONE;
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn sum_keeps_small_parts() {
        let big = Dd::from(1e16);
        let s = big + Dd::ONE - big;
        assert_eq!(s.to_f64(), 1.0);
    }

    #[test]
    fn complex_division() {
        let a = DdC::from(Complex::new(1.0, 2.0));
        let b = DdC::from(Complex::new(-0.5, 3.0));
        let q = (a / b * b - a).norm();
        assert!(q < 1e-30);
    }
}
