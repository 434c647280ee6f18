//! Power reduction and product-to-sum on sin/cos/sinh/cosh.

use hyperlaplace::catalog::laplace_spectral;
use hyperlaplace::spectral::{expand_power, FunctionKind};
use hyperlaplace::Complex;

fn main() -> hyperlaplace::Result<()> {
    for (kind, e) in [(FunctionKind::Sin, 5), (FunctionKind::Cos, 4), (FunctionKind::Sinh, 3), (FunctionKind::Cosh, 6)] {
        println!("{}^{e}(x) = {}", kind.name(), expand_power(kind, e, 1.0)?);
    }

    let mut f = expand_power(FunctionKind::Sin, 1, 1.0)?;
    for w in [2.0, 3.0, 4.0] {
        f = f.product(&expand_power(FunctionKind::Sin, 1, w)?)?;
    }
    println!("sin x·sin 2x·sin 3x·sin 4x = {f}");
    let x = 0.37;
    println!("  at x = {x}: {} vs {}", f.evaluate(x), x.sin() * (2.0 * x).sin() * (3.0 * x).sin() * (4.0 * x).sin());

    let g = expand_power(FunctionKind::Cos, 3, 2.0)?;
    println!("L{{cos³(2t)}}(5) = {}", laplace_spectral(&g, Complex::new(5.0, 0.0))?);
    Ok(())
}
