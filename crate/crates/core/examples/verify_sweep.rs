//! Sweep every catalog entry over its default grid and summarise.

use std::time::Instant;

use hyperlaplace::catalog::catalog;
use hyperlaplace::catalog::verify::verify_default;

fn main() {
    let t = Instant::now();
    let (mut points, mut bad) = (0, 0);
    for e in catalog().entries() {
        let r = verify_default(e, 1e-8);
        points += r.points.len();
        let worst = r.max_rel_error().unwrap_or(0.0);
        if !r.all_passed() {
            bad += 1;
            print!("{}", r.to_table());
        } else {
            println!("{:<10} {:>3} points  worst {worst:.1e}", e.id, r.pass_count());
        }
    }
    println!("{} entries, {points} integrals, {bad} failing, {:.2?}", catalog().entries().len(), t.elapsed());
}
