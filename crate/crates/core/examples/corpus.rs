//! The built-in corpus and its Alexander-polynomial check.
//!
//! Run with `cargo run --example corpus`.

use weld::corpus::{corpus, verify};

fn main() {
    let entries = corpus();
    for (e, check) in entries.iter().zip(verify(&entries)) {
        println!(
            "{:<16} {:<44} classical={:<5} chiral={:<5} {} [{}]",
            e.name,
            e.code.to_string(),
            e.classical_origin,
            e.chiral_classical,
            check.computed,
            if check.ok { "ok" } else { "MISMATCH" }
        );
    }
}
