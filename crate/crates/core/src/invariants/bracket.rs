//! Writhe-normalized Kauffman bracket (the f-polynomial) by state sum.
//!
//! Edge `p` runs from symbol `p` to symbol `p + 1`. At each crossing the
//! four edge ends are paired in one of two ways:
//!
//! * orientation-preserving: over-in with under-out, under-in with over-out;
//! * orientation-reversing: over-in with under-in, over-out with under-out.
//!
//! The A-smoothing is the preserving pairing at a positive crossing and the
//! reversing pairing at a negative one.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::codec::{GaussCode, Role};

use super::laurent::LaurentPoly;

/// Crossing count above which states are summed in parallel.
const PARALLEL_THRESHOLD: usize = 14;

/// Edge-end index: `2 * edge` is the start, `2 * edge + 1` the end.
#[derive(Clone, Copy)]
struct CrossingEnds {
    over_in: usize,
    over_out: usize,
    under_in: usize,
    under_out: usize,
    positive: bool,
}

fn crossing_ends(code: &GaussCode) -> Vec<CrossingEnds> {
    let symbols = code.symbols();
    let len = symbols.len();
    let mut by_id: BTreeMap<u32, [Option<(usize, usize)>; 2]> = BTreeMap::new();
    for (p, s) in symbols.iter().enumerate() {
        let incoming_end = 2 * ((p + len - 1) % len) + 1;
        let outgoing_start = 2 * p;
        let slot = if s.role == Role::Over { 0 } else { 1 };
        by_id.entry(s.id).or_insert([None, None])[slot] = Some((incoming_end, outgoing_start));
    }
    by_id
        .into_iter()
        .map(|(id, [over, under])| {
            let (over_in, over_out) = over.expect("validated code");
            let (under_in, under_out) = under.expect("validated code");
            CrossingEnds { over_in, over_out, under_in, under_out, positive: code.sign_of(id).unwrap().value() > 0 }
        })
        .collect()
}

/// `Σ_states A^(#A - #B) d^(loops - 1)` collected as counts per
/// `(#A - #B, loops)`.
fn state_histogram(code: &GaussCode) -> BTreeMap<(i32, usize), i64> {
    let ends = crossing_ends(code);
    let n = ends.len();
    let edges = code.len();
    let tally = |state: u64, hist: &mut BTreeMap<(i32, usize), i64>, partner: &mut Vec<usize>, seen: &mut Vec<bool>| {
        let loops = count_loops(&ends, edges, state, partner, seen);
        let b = state.count_ones() as i32;
        let a = n as i32 - b;
        *hist.entry((a - b, loops)).or_insert(0) += 1;
    };
    let states = 1u64 << n;
    if n >= PARALLEL_THRESHOLD {
        (0..states)
            .into_par_iter()
            .fold(
                || (BTreeMap::new(), vec![0usize; 2 * edges], vec![false; 2 * edges]),
                |(mut hist, mut partner, mut seen), s| {
                    tally(s, &mut hist, &mut partner, &mut seen);
                    (hist, partner, seen)
                },
            )
            .map(|(h, _, _)| h)
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            })
    } else {
        let mut hist = BTreeMap::new();
        let mut partner = vec![0usize; 2 * edges];
        let mut seen = vec![false; 2 * edges];
        for s in 0..states {
            tally(s, &mut hist, &mut partner, &mut seen);
        }
        hist
    }
}

/// Loop count via the end-point graph: each edge joins its two ends, each
/// smoothing joins two ends; every end-point has degree two, so components
/// are cycles.
fn count_loops(ends: &[CrossingEnds], edges: usize, state: u64, partner: &mut [usize], seen: &mut [bool]) -> usize {
    for (i, c) in ends.iter().enumerate() {
        let a_smoothing = state >> i & 1 == 0;
        let preserving = a_smoothing == c.positive;
        let (p, q, r, s) = if preserving {
            (c.over_in, c.under_out, c.under_in, c.over_out)
        } else {
            (c.over_in, c.under_in, c.over_out, c.under_out)
        };
        partner[p] = q;
        partner[q] = p;
        partner[r] = s;
        partner[s] = r;
    }
    seen.iter_mut().for_each(|x| *x = false);
    let mut loops = 0;
    for start in 0..2 * edges {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut x = start;
        // alternate: along the edge, then across the smoothing
        loop {
            seen[x] = true;
            let other_end = x ^ 1;
            seen[other_end] = true;
            x = partner[other_end];
            if seen[x] {
                break;
            }
        }
    }
    loops
}

/// Kauffman bracket `⟨K⟩` with `⟨unknot⟩ = 1`.
pub fn bracket(code: &GaussCode) -> LaurentPoly {
    if code.is_empty() {
        return LaurentPoly::one();
    }
    let d = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let hist = state_histogram(code);
    let max_loops = hist.keys().map(|&(_, l)| l).max().unwrap_or(1);
    let powers: Vec<LaurentPoly> = (0..max_loops).map(|k| d.pow(k as u32)).collect();
    let mut out = LaurentPoly::zero();
    for ((exp, loops), count) in hist {
        out += &powers[loops - 1].shift(exp).scale(count);
    }
    out
}

/// `f(K) = (-A^3)^-w ⟨K⟩`.
pub fn f_polynomial(code: &GaussCode) -> LaurentPoly {
    let w = code.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    bracket(code).shift(-3 * w as i32).scale(sign)
}
