//! Tube sends the trefoil and its reversed vertical reflection to the same
//! certificate, while the f-polynomial shows the two are different knots.
//!
//! Run with `cargo run --example tube_non_injectivity`.

use weld::corpus::trefoil;
use weld::invariants::Palette;
use weld::spun::tube_non_injectivity;

fn main() {
    let ev = tube_non_injectivity(&trefoil(), &Palette::default());
    println!("K     = {}", ev.knot);
    println!("-K^   = {}", ev.partner);
    println!("Tube certificates equal: {}", ev.tube_certificates_equal);
    println!("f(K)   = {}", ev.f_knot.to_string_in("A"));
    println!("f(-K^) = {}", ev.f_partner.to_string_in("A"));
    println!("welded verdict: {:?} (witness {:?})", ev.verdict.outcome, ev.verdict.witness);
    for n in &ev.verdict.notes {
        println!("  - {n}");
    }
    println!("holds: {}", ev.holds());
}
