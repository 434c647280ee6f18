//! Complex Gamma, Beta and Pochhammer at a few points, plus the
//! multiplication theorem checked numerically.

use std::f64::consts::PI;

use hyperlaplace::special::{beta, cpow, gamma, log_gamma, pochhammer, Complex};

fn main() -> hyperlaplace::Result<()> {
    for z in [Complex::new(0.5, 0.0), Complex::new(3.0, 0.0), Complex::new(0.5, 1.0), Complex::new(-2.5, 0.3)] {
        println!("Γ({z}) = {}    ln Γ = {}", gamma(z)?, log_gamma(z)?);
    }

    let half = Complex::new(0.5, 0.0);
    println!("B(1/2, 1/2) = {} (π = {PI})", beta(half, half)?);
    println!("(1/2)_4 = {}", pochhammer(half, Complex::new(4.0, 0.0))?);

    // Γ(3z) against the m = 3 product
    let z = Complex::new(0.7, -1.2);
    let lhs = gamma(3.0 * z)?;
    let rhs = cpow(Complex::new(3.0, 0.0), 3.0 * z - 0.5) / (2.0 * PI)
        * gamma(z)?
        * gamma(z + 1.0 / 3.0)?
        * gamma(z + 2.0 / 3.0)?;
    println!("Γ(3z) = {lhs}\nproduct = {rhs}\nrel. diff = {:.1e}", (lhs - rhs).norm() / lhs.norm());
    Ok(())
}
