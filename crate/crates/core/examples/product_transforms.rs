//! Laplace transforms of products of powers, closed form against quadrature.

use hyperlaplace::catalog::{catalog, integer_power_transform, product_transform};
use hyperlaplace::quadrature::integrate_semi_infinite;
use hyperlaplace::spectral::FunctionKind::{Cos, Sin};
use hyperlaplace::Complex;

fn main() -> hyperlaplace::Result<()> {
    let s = Complex::new(2.0, 0.5);
    let factors = [(Sin, 2, 1.0), (Cos, 3, 0.5), (Sin, 1, 2.0)];
    let closed = product_transform(&factors, s)?;
    let q = integrate_semi_infinite(
        |t| {
            let f: f64 = factors.iter().map(|&(k, e, w)| k.apply(w * t).powi(e as i32)).product();
            (-s * t).exp() * f
        },
        s.re,
        1e-12,
    )?;
    println!("L{{sin²t·cos³(t/2)·sin 2t}}({s}) = {closed}\n    quadrature {}", q.value);

    println!("L{{cos⁴(3t)}}(1) = {}", integer_power_transform(Cos, 4, Complex::new(3.0, 0.0), Complex::new(1.0, 0.0))?);

    let e = catalog().get("prod-07")?;
    let p = &e.default_grid()[0];
    println!("{} {} [{}] at {p}: {}", e.id, e.equation, e.description, e.evaluate(p)?);
    Ok(())
}
