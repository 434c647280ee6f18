//! Closed-form ₂F₁ and ₄F₃ values next to the accelerated series.

use hyperlaplace::hypergeom::{
    classify, gauss_sum_2f1_unit, kummer_sum_2f1_neg1, sum_4f3_neg1, sum_series, SeriesSpec, DEFAULT_TOL,
};
use hyperlaplace::Complex;

fn show(label: &str, spec: &SeriesSpec, closed: Complex) -> hyperlaplace::Result<()> {
    let series = sum_series(spec, DEFAULT_TOL)?;
    println!(
        "{label:<8} {:?}\n  closed {closed}\n  series {series}\n  rel    {:.1e}",
        classify(spec).kind,
        (series - closed).norm() / closed.norm()
    );
    Ok(())
}

fn main() -> hyperlaplace::Result<()> {
    let c = |re, im| Complex::new(re, im);
    let one = c(1.0, 0.0);

    let (a, b, d) = (c(0.3, 0.5), c(-0.7, 0.2), c(2.1, -0.4));
    show("Gauss", &SeriesSpec::f21(a, b, d, one), gauss_sum_2f1_unit(a, b, d)?)?;

    let (a, b) = (c(1.5, 0.0), c(-0.25, 0.0));
    show("Kummer", &SeriesSpec::f21(a, b, one + a - b, -one), kummer_sum_2f1_neg1(a, b)?)?;

    let (a, b, cc) = (c(2.0, 0.0), c(0.5, 0.0), c(0.5, 0.0));
    let spec = SeriesSpec::new(vec![a, one + a / 2.0, b, cc], vec![a / 2.0, one + a - b, one + a - cc], -one);
    show("4F3", &spec, sum_4f3_neg1(a, b, cc)?)?;

    // a = −6 stops the series after seven terms
    let a = c(-6.0, 0.0);
    show("finite", &SeriesSpec::f21(a, c(2.5, 0.0), c(4.25, 0.0), one), gauss_sum_2f1_unit(a, c(2.5, 0.0), c(4.25, 0.0))?)?;
    Ok(())
}
