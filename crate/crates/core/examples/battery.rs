//! Level-tagged invariant batteries and their JSON form.
//!
//! Run with `cargo run --example battery [CODE] [virtual|welded|tube]`.

use weld::codec::GaussCode;
use weld::invariants::{battery, Level, Palette};

fn main() {
    let mut args = std::env::args().skip(1);
    let code = GaussCode::parse(&args.next().unwrap_or_else(|| "O1+U2-O4-U1+O3+U4-O2-U3+".into())).expect("valid code");
    let level: Level = args.next().as_deref().unwrap_or("welded").parse().expect("level");
    let b = battery(&code, level, &Palette::default());
    println!("{}", serde_json::to_string_pretty(&b).unwrap());
}
