//! Wirtinger presentation, meridian and longitude of a diagram.
//!
//! Run with `cargo run --example knot_group [CODE]`.

use weld::codec::GaussCode;
use weld::knotgroup::{crossing_arcs, peripheral};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "O1+U2+O3+U1+O2+U3+".into());
    let code = GaussCode::parse(&text).expect("valid Gauss code");
    for c in crossing_arcs(&code) {
        println!("crossing {}: g{} -> g{} under g{} ({:?})", c.crossing, c.incoming, c.outgoing, c.over, c.sign);
    }
    let ps = peripheral(&code);
    println!("group     {}", ps.group);
    println!("meridian  {}", ps.meridian);
    println!("longitude {}   (writhe {})", ps.longitude, ps.writhe);
}
