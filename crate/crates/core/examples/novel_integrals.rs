//! The series entries and the novel integrals, each against the
//! quadrature oracle.

use hyperlaplace::catalog::{catalog, format_complex, ParamSet};

fn main() -> hyperlaplace::Result<()> {
    let points = [
        ("entry-I", ParamSet::new().with("s", 4.0).with("β", 1.0).with("ν", 1.0).with("m", 1.0)),
        ("entry-II", ParamSet::new().with("s", 5.0).with("γ", 0.5).with("ν", 0.5).with("n", 2.0)),
        ("entry-III", ParamSet::new().with("s", 6.0).with("λ", 1.0).with("ν", 1.5).with("p", 1.0)),
        ("entry-IV", ParamSet::new().with("s", 6.0).with("μ", 0.5).with("ν", 2.0).with("q", 2.0)),
        ("novel-V", ParamSet::new().with("α", 0.25).with("β", 0.5).with("p", 1.0)),
        ("novel-VI", ParamSet::new().with("α", 0.3).with("β", 2.0)),
        ("novel-VII", ParamSet::new().with("a", 1.0).with("β", 1.0).with("ν", 1.0)),
    ];
    for (id, p) in points {
        let e = catalog().get(id)?;
        let closed = e.evaluate(&p)?;
        let q = e.oracle(&p, 1e-11)?;
        println!("{id:<10} {p}");
        println!("    closed {}", format_complex(closed));
        println!("    oracle {}  (±{:.1e})", format_complex(q.value), q.error_estimate);
    }
    Ok(())
}
