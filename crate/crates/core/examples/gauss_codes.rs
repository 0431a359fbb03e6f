//! Parsing, validation, diagram symmetries and canonical forms.
//!
//! Run with `cargo run --example gauss_codes`.

use weld::codec::{GaussCode, Symmetry};

fn main() {
    let trefoil = GaussCode::parse("O1+U2+O3+U1+O2+U3+").unwrap();
    println!("{trefoil}: {} crossings, writhe {}", trefoil.crossing_count(), trefoil.writhe());

    for op in [Symmetry::Reverse, Symmetry::MirrorStar, Symmetry::VReflect] {
        println!("{op:>8}: {}", trefoil.apply_symmetry(op));
    }
    println!("-K^     : {}", trefoil.reverse_vreflect());

    // rotation and relabelling are representation only
    let shuffled = GaussCode::parse("U7+ O5+ U9+ O7+ U5+ O9+").unwrap();
    println!("canonical {} == {}", trefoil.canonical(), shuffled.canonical());

    for bad in ["O1+U1-", "O1+U2+", "O1+X"] {
        println!("{bad:>8}: {}", GaussCode::parse(bad).unwrap_err());
    }
}
