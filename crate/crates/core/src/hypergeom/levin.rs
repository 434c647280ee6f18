//! Levin u-transform, evaluated incrementally with Weniger's recursion.

use crate::dd::{Dd, DdC};

pub(crate) struct LevinU {
    beta: f64,
    num: Vec<DdC>,
    den: Vec<DdC>,
}

impl LevinU {
    pub fn new() -> Self {
        LevinU { beta: 1.0, num: Vec::new(), den: Vec::new() }
    }

    /// Feed the next partial sum `s_n` and the term `a_n` it just added.
    /// Returns the order-n extrapolant.
    pub fn push(&mut self, partial: DdC, term: DdC) -> DdC {
        let n = self.num.len();
        let omega = term.scale(Dd::from(self.beta + n as f64));
        self.num.push(partial / omega);
        self.den.push(DdC::ONE / omega);
        for m in (0..n).rev() {
            let c = self.weight(m, n - m - 1);
            self.num[m] = self.num[m + 1] - self.num[m].scale(c);
            self.den[m] = self.den[m + 1] - self.den[m].scale(c);
        }
        self.num[0] / self.den[0]
    }

    // (β+m) · ((β+m+k)/(β+m+k+1))^(k−1) / (β+m+k+1), and 1 for k = 0
    fn weight(&self, m: usize, k: usize) -> Dd {
        if k == 0 {
            return Dd::ONE;
        }
        let b = Dd::from(self.beta + m as f64);
        let top = Dd::from(self.beta + (m + k) as f64);
        let bottom = Dd::from(self.beta + (m + k + 1) as f64);
        b * (top / bottom).powi(k as u32 - 1) / bottom
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::Complex;

    #[test]
    fn log2_from_alternating_harmonic() {
        let mut lev = LevinU::new();
        let mut s = DdC::ZERO;
        let mut est = DdC::ZERO;
        for n in 0..20 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let t = DdC::real(Dd::from(sign) / Dd::from(n as f64 + 1.0));
            s = s + t;
            est = lev.push(s, t);
        }
        assert!((est.to_complex() - Complex::new(2f64.ln(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn zeta_two_from_log_convergent_sum() {
        let mut lev = LevinU::new();
        let mut s = DdC::ZERO;
        let mut est = DdC::ZERO;
        for n in 1..=24 {
            let t = DdC::real(Dd::ONE / Dd::from((n * n) as f64));
            s = s + t;
            est = lev.push(s, t);
        }
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((est.to_complex().re - zeta2).abs() < 1e-12);
    }
}
