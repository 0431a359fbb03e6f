//! Tube-level comparison of every pair in the corpus.
//!
//! Run with `cargo run --example spun_classification`.

use weld::corpus::corpus;
use weld::invariants::Palette;
use weld::spun::{spun_compare, Outcome};

fn main() {
    let palette = Palette::default();
    let entries = corpus();
    print!("{:<16}", "");
    for b in &entries {
        print!("{:>5}", &b.name[..b.name.len().min(4)]);
    }
    println!();
    for a in &entries {
        print!("{:<16}", a.name);
        for b in &entries {
            let v = spun_compare(&a.code, &b.code, &palette);
            print!("{:>5}", if v.outcome == Outcome::NotDistinguished { "=" } else { "x" });
        }
        println!();
    }
    // each knot against its reversed mirror
    for e in &entries {
        let v = spun_compare(&e.code, &e.code.reverse_mirror(), &palette);
        println!("{:<16} vs -K*: {:?}", e.name, v.outcome);
    }
}
