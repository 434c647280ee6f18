//! Parameter grids: `name=v;name=v1,v2;name=start:stop:count`.

use crate::error::{Error, Result};
use crate::special::Complex;

use super::params::{canonical_name, parse_complex};
use super::ParamSet;

/// Upper bound on the number of points a grid may expand to.
pub const MAX_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum Axis {
    Values(Vec<Complex>),
    /// `count` evenly spaced reals from `start` to `stop` inclusive.
    Range { start: f64, stop: f64, count: usize },
}

impl Axis {
    pub fn len(&self) -> usize {
        match self {
            Axis::Values(v) => v.len(),
            Axis::Range { count, .. } => *count,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn value(&self, i: usize) -> Complex {
        match self {
            Axis::Values(v) => v[i],
            Axis::Range { start, stop, count } => {
                if *count == 1 {
                    Complex::new(*start, 0.0)
                } else {
                    let t = i as f64 / (*count - 1) as f64;
                    Complex::new(start + (stop - start) * t, 0.0)
                }
            }
        }
    }
}

/// Cross product of named axes, first axis varying slowest.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GridSpec {
    pub axes: Vec<(String, Axis)>,
}

impl GridSpec {
    pub fn parse(text: &str) -> Result<GridSpec> {
        let mut axes: Vec<(String, Axis)> = Vec::new();
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, rhs) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("grid item `{part}` is not name=value")))?;
            let name = canonical_name(name.trim()).to_string();
            if name.is_empty() {
                return Err(Error::InvalidParameter(format!("grid item `{part}` has no name")));
            }
            if axes.iter().any(|(n, _)| *n == name) {
                return Err(Error::InvalidParameter(format!("parameter `{name}` given twice")));
            }
            let axis = if rhs.contains(':') {
                let bits: Vec<&str> = rhs.split(':').collect();
                if bits.len() != 3 {
                    return Err(Error::InvalidParameter(format!("range `{rhs}` should be start:stop:count")));
                }
                let num = |s: &str| {
                    s.trim()
                        .parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| Error::InvalidParameter(format!("bad range bound `{s}`")))
                };
                let count: usize = bits[2]
                    .trim()
                    .parse()
                    .ok()
                    .filter(|&c| c > 0)
                    .ok_or_else(|| Error::InvalidParameter(format!("bad range count `{}`", bits[2])))?;
                Axis::Range { start: num(bits[0])?, stop: num(bits[1])?, count }
            } else {
                Axis::Values(rhs.split(',').map(parse_complex).collect::<Result<_>>()?)
            };
            axes.push((name, axis));
        }
        let spec = GridSpec { axes };
        if spec.len() > MAX_POINTS {
            return Err(Error::InvalidParameter(format!(
                "grid expands to more than {MAX_POINTS} points"
            )));
        }
        Ok(spec)
    }

    /// Number of points; zero for a grid with no axes.
    pub fn len(&self) -> usize {
        if self.axes.is_empty() {
            return 0;
        }
        self.axes.iter().fold(1usize, |acc, (_, a)| acc.saturating_mul(a.len()))
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<ParamSet> {
        let n = self.len();
        let mut out = Vec::with_capacity(n);
        for mut idx in 0..n {
            let mut coords = vec![0; self.axes.len()];
            for (k, (_, axis)) in self.axes.iter().enumerate().rev() {
                coords[k] = idx % axis.len();
                idx /= axis.len();
            }
            let mut p = ParamSet::new();
            for ((name, axis), &i) in self.axes.iter().zip(&coords) {
                p.set(name, axis.value(i));
            }
            out.push(p);
        }
        out
    }
}
