//! Homomorphism counts, quandle colorings and peripheral multisets.
//!
//! Run with `cargo run --example colorings`.

use weld::corpus::corpus;
use weld::invariants::{count_homs, peripheral_multiset, quandle_colorings, FiniteGroup, FiniteQuandle, PeripheralNormalization};
use weld::knotgroup::peripheral;

fn main() {
    let s3 = FiniteGroup::symmetric(3);
    let r3 = FiniteQuandle::dihedral(3);
    let conj = FiniteQuandle::conjugation(&s3);
    println!("{:<16} {:>6} {:>6} {:>9}", "knot", "S3", "R3", "Conj(S3)");
    for e in corpus() {
        let ps = peripheral(&e.code);
        println!(
            "{:<16} {:>6} {:>6} {:>9}",
            e.name,
            count_homs(&ps.group, &s3),
            quandle_colorings(&e.code, &r3),
            quandle_colorings(&e.code, &conj)
        );
    }

    let trefoil = peripheral(&corpus()[1].code);
    for mode in [PeripheralNormalization::Welded, PeripheralNormalization::Tube] {
        let ms = peripheral_multiset(&trefoil, &s3, mode);
        println!("trefoil (m, l) classes in S3, {mode:?}: {}", serde_json::to_string(&ms).unwrap());
    }
}
