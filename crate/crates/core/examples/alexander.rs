//! Alexander polynomials of the built-in corpus via Fox calculus.
//!
//! Run with `cargo run --example alexander`.

use weld::corpus::corpus;
use weld::invariants::alexander;
use weld::invariants::alexander::fox_jacobian;
use weld::knotgroup::wirtinger;

fn main() {
    let trefoil = wirtinger(&corpus()[1].code);
    println!("Fox Jacobian of the trefoil:");
    for row in fox_jacobian(&trefoil) {
        let cells: Vec<String> = row.iter().map(|p| format!("{p:>12}")).collect();
        println!("  [{}]", cells.join(" "));
    }
    println!();
    for e in corpus() {
        println!("{:<16} {}", e.name, alexander(&wirtinger(&e.code)));
    }
}
