//! The writhe-normalized bracket as a chirality certificate.
//!
//! Run with `cargo run --example f_polynomial`.

use weld::corpus::corpus;
use weld::invariants::f_polynomial;

fn main() {
    for e in corpus() {
        let f = f_polynomial(&e.code);
        let mirror = f_polynomial(&e.code.mirror_star());
        println!("{:<16} f = {}", e.name, f.to_string_in("A"));
        println!("{:<16} chiral by f: {}", "", f != mirror);
    }
}
