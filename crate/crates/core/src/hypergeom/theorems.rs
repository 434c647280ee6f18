//! Closed-form summation theorems for ₂F₁(1), ₂F₁(−1) and ₄F₃(−1).

use crate::error::{Error, Result};
use crate::special::{gamma_ratio, nonpositive_integer, sin_pi_c, Complex};

fn one() -> Complex {
    Complex::new(1.0, 0.0)
}

fn reject_pole(v: Complex, what: &str) -> Result<()> {
    match nonpositive_integer(v) {
        Some(_) => Err(Error::Domain(format!("{what} = {v} is a non-positive integer"))),
        None => Ok(()),
    }
}

/// Gauss: ₂F₁(a, b; d; 1) = Γ(d)Γ(d−a−b) / (Γ(d−a)Γ(d−b)).
pub fn gauss_sum_2f1_unit(a: Complex, b: Complex, d: Complex) -> Result<Complex> {
    let excess = d - a - b;
    if !(excess.re > 0.0) {
        return Err(Error::Domain(format!("Gauss sum needs Re(d−a−b) > 0, got {excess}")));
    }
    reject_pole(d, "d")?;
    Ok(gamma_ratio(&[d, excess], &[d - a, d - b])?)
}

/// Kummer: ₂F₁(a, b; 1+a−b; −1) = Γ(1+a−b)Γ(1+a/2) / (Γ(1+a/2−b)Γ(1+a)).
pub fn kummer_sum_2f1_neg1(a: Complex, b: Complex) -> Result<Complex> {
    if !(b.re < 1.0) {
        return Err(Error::Domain(format!("Kummer sum needs Re(b) < 1, got {b}")));
    }
    let c = one() + a - b;
    reject_pole(c, "1+a−b")?;
    if a.re < 0.0 {
        // Γ(1+a/2)/Γ(1+a) = 2cos(πa/2)·Γ(−a)/Γ(−a/2); finite at negative even a
        let cos_half = sin_pi_c(a / 2.0 + 0.5);
        let r = gamma_ratio(&[c, -a], &[one() + a / 2.0 - b, -a / 2.0])?;
        return Ok(2.0 * cos_half * r);
    }
    Ok(gamma_ratio(&[c, one() + a / 2.0], &[one() + a / 2.0 - b, one() + a])?)
}

/// ₄F₃(a, 1+a/2, b, c; a/2, 1+a−b, 1+a−c; −1)
///   = Γ(1+a−b)Γ(1+a−c) / (Γ(1+a)Γ(1+a−b−c)).
pub fn sum_4f3_neg1(a: Complex, b: Complex, c: Complex) -> Result<Complex> {
    let excess = a - 2.0 * b - 2.0 * c;
    if !(excess.re > -2.0) {
        return Err(Error::Domain(format!("₄F₃(−1) sum needs Re(a−2b−2c) > −2, got {excess}")));
    }
    reject_pole(a / 2.0, "a/2")?;
    reject_pole(one() + a - b, "1+a−b")?;
    reject_pole(one() + a - c, "1+a−c")?;
    Ok(gamma_ratio(&[one() + a - b, one() + a - c], &[one() + a, one() + a - b - c])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::{sum_series, SeriesSpec, DEFAULT_TOL};

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(gauss_sum_2f1_unit(c(0.0), c(2.3), c(4.1)).unwrap(), c(1.0));
        assert!((gauss_sum_2f1_unit(c(1.0), c(1.0), c(3.0)).unwrap() - c(2.0)).norm() < 1e-14);
        // terminating: 1 + (−2)(5)/9 + (−2)(−1)(5)(6)/(9·10·2)
        let brute = 1.0 - 10.0 / 9.0 + 60.0 / 180.0;
        assert!((gauss_sum_2f1_unit(c(-2.0), c(5.0), c(9.0)).unwrap() - c(brute)).norm() < 1e-14);
        assert!(gauss_sum_2f1_unit(c(1.0), c(1.0), c(2.0)).is_err());
    }

    #[test]
    fn kummer_examples() {
        assert!((kummer_sum_2f1_neg1(c(2.7), c(0.0)).unwrap() - c(1.0)).norm() < 1e-14);
        let b = 1.0 / 3.0;
        let brute = sum_series(&SeriesSpec::f21(c(-2.0), c(b), c(-1.0 - b), c(-1.0)), DEFAULT_TOL).unwrap();
        assert!((kummer_sum_2f1_neg1(c(-2.0), c(b)).unwrap() - brute).norm() < 1e-14);
        let pi4 = std::f64::consts::FRAC_PI_4;
        assert!((kummer_sum_2f1_neg1(c(1.0), c(0.5)).unwrap() - c(pi4)).norm() < 1e-15 * 4.0);
        assert!(kummer_sum_2f1_neg1(c(1.0), c(1.0)).is_err());
    }

    #[test]
    fn four_f_three_examples() {
        assert!((sum_4f3_neg1(c(1.3), c(0.2), c(0.0)).unwrap() - c(1.0)).norm() < 1e-14);
        // two terms: 1 + a(1+a/2)(−1)c / ((a/2)(2+a)(1+a−c)) · (−1)
        let (a, cc) = (3.0, 0.5);
        let brute = 1.0 + a * (1.0 + a / 2.0) * -1.0 * cc / ((a / 2.0) * (2.0 + a) * (1.0 + a - cc)) * -1.0;
        assert!((sum_4f3_neg1(c(a), c(-1.0), c(cc)).unwrap() - c(brute)).norm() < 1e-14);
        assert!(sum_4f3_neg1(c(1.0), c(2.0), c(2.0)).is_err());
    }
}
