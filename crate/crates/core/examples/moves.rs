//! Enumerating and applying welded moves, and a random walk.
//!
//! Run with `cargo run --example moves`.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weld::codec::GaussCode;
use weld::invariants::{battery, Level, Palette};
use weld::moves::{apply, enumerate_moves, random_move, MoveKind};

fn main() {
    let code = GaussCode::parse("O1+O2+U1+O3+U2+U3+").unwrap();
    let mut by_kind: BTreeMap<MoveKind, usize> = BTreeMap::new();
    for mv in enumerate_moves(&code) {
        *by_kind.entry(mv.kind).or_default() += 1;
        if !mv.kind.is_insertion() {
            println!("{mv:<24} -> {}", apply(&code, &mv).unwrap());
        }
    }
    let summary: Vec<String> = by_kind.iter().map(|(k, n)| format!("{k}: {n}")).collect();
    println!("applicable moves per kind: {}", summary.join(", "));

    let palette = Palette::default();
    let start = weld::corpus::trefoil();
    let before = battery(&start, Level::Welded, &palette);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut c = start.clone();
    for _ in 0..8 {
        let mv = random_move(&c, &mut rng, &MoveKind::ALL, 9).unwrap();
        c = apply(&c, &mv).unwrap();
        println!("{mv:<28} {c}");
    }
    let same = before.first_difference(&battery(&c, Level::Welded, &palette)).is_none();
    println!("welded battery unchanged after the walk: {same}");
}
