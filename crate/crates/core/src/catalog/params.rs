use std::fmt;

use crate::error::{Error, Result};
use crate::special::Complex;

/// What values a parameter accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Complex,
    Real,
    /// Non-negative integer at least `min`.
    Integer { min: u32 },
}

/// How a parameter moves under the substitution x → x/c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scaling {
    /// Transform variable or frequency: multiplied by c.
    Linear,
    Invariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub scaling: Scaling,
}

const ALIASES: &[(&str, &str)] = &[
    ("alpha", "α"),
    ("beta", "β"),
    ("gamma", "γ"),
    ("lambda", "λ"),
    ("mu", "μ"),
    ("nu", "ν"),
];

/// Maps ASCII spellings (`nu`, `beta`, …) onto the Greek names used in schemas.
pub fn canonical_name(name: &str) -> &str {
    ALIASES.iter().find(|(a, _)| *a == name).map(|(_, g)| *g).unwrap_or(name)
}

/// Ordered name → value assignment.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParamSet(Vec<(String, Complex)>);

impl ParamSet {
    pub fn new() -> Self {
        ParamSet(Vec::new())
    }

    /// Builder-style insert; replaces an existing value of the same name.
    pub fn with(mut self, name: &str, value: impl Into<Complex>) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: impl Into<Complex>) {
        let name = canonical_name(name);
        let value = value.into();
        match self.0.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<Complex> {
        let name = canonical_name(name);
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Complex)> {
        self.0.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    // Accessors for validated sets. Panics mean a schema bug, not bad input.
    pub(crate) fn c(&self, name: &str) -> Complex {
        self.get(name).unwrap_or_else(|| panic!("parameter {name} missing after validation"))
    }

    pub(crate) fn r(&self, name: &str) -> f64 {
        self.c(name).re
    }

    pub(crate) fn n(&self, name: &str) -> u32 {
        self.c(name).re as u32
    }

    /// Checks names and kinds against `schema`; returns the set in schema order.
    pub fn validate(&self, schema: &[ParamSpec]) -> Result<ParamSet> {
        for (name, _) in self.iter() {
            if !schema.iter().any(|p| p.name == name) {
                let known: Vec<_> = schema.iter().map(|p| p.name).collect();
                return Err(Error::InvalidParameter(format!(
                    "unknown parameter `{name}` (expected {})",
                    known.join(", ")
                )));
            }
        }
        let mut out = ParamSet::new();
        for spec in schema {
            let v = self
                .get(spec.name)
                .ok_or_else(|| Error::InvalidParameter(format!("missing parameter `{}`", spec.name)))?;
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::InvalidParameter(format!("`{}` is not finite", spec.name)));
            }
            match spec.kind {
                ParamKind::Complex => {}
                ParamKind::Real if v.im != 0.0 => {
                    return Err(Error::InvalidParameter(format!("`{}` must be real", spec.name)));
                }
                ParamKind::Real => {}
                ParamKind::Integer { min } => {
                    if v.im != 0.0 || v.re.fract() != 0.0 || v.re < min as f64 || v.re > 1e6 {
                        return Err(Error::InvalidParameter(format!(
                            "`{}` must be an integer ≥ {min}",
                            spec.name
                        )));
                    }
                }
            }
            out.0.push((spec.name.to_string(), v));
        }
        Ok(out)
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{n}={}", format_complex(v))?;
        }
        Ok(())
    }
}

/// Shortest round-trip text: `1.5`, `-2.0`, `0.5+1.0i`.
pub fn format_complex(z: Complex) -> String {
    if z.im == 0.0 {
        format!("{:?}", z.re)
    } else if z.re == 0.0 {
        format!("{:?}i", z.im)
    } else {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{:?}{sign}{:?}i", z.re, z.im.abs())
    }
}

/// Parses `3`, `-1.5`, `2i`, `-i`, `0.5+2i`, `1e-3-4.5e2i`.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let t = text.trim();
    let bad = || Error::InvalidParameter(format!("cannot parse `{text}` as a number"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|x| Complex::new(x, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not the leading one or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re_part.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex::new(re, im))
}
