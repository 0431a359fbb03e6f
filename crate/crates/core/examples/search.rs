//! Bounded breadth-first search between two diagrams.
//!
//! Run with `cargo run --example search`.

use weld::codec::GaussCode;
use weld::corpus::{figure_eight, trefoil};
use weld::moves::{search, SearchBudget, SearchOutcome};

fn report(label: &str, out: &SearchOutcome) {
    let s = out.stats();
    match out {
        SearchOutcome::Found { path, .. } => {
            println!("{label}: found, {} moves", path.len());
            for step in &path.steps {
                println!("    {step}");
            }
        }
        SearchOutcome::NotFound { .. } => println!("{label}: not found"),
    }
    println!("    {} states, depth {}, state cap hit: {}", s.states_visited, s.depth_reached, s.state_cap_hit);
}

fn main() {
    let t = trefoil();
    let kinked = GaussCode::parse("O1+U2+O3+U1+O2+U3+O4-U4-").unwrap();
    report("kinked trefoil -> trefoil", &search(&kinked, &t, SearchBudget { max_depth: 1, max_states: 10_000 }));

    let two_kinks = GaussCode::parse("O5+U5+O1+U2+O3+U1+O2+U3+O4-U4-").unwrap();
    report("two kinks -> trefoil", &search(&two_kinks, &t, SearchBudget { max_depth: 2, max_states: 50_000 }));

    report("trefoil -> figure-8", &search(&t, &figure_eight(), SearchBudget { max_depth: 8, max_states: 20_000 }));
}
