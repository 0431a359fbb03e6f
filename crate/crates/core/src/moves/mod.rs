//! Welded Reidemeister moves as local rewrites of Gauss codes.
//!
//! Positions are cyclic: the pair at site `p` is `(p, p + 1 mod len)`.
//! Insertion sites are gaps, gap `g` being just before symbol `g`.
//!
//! * R1: a crossing whose two symbols are adjacent.
//! * R2: crossings `i`, `j` of opposite sign with `O_i O_j` adjacent and
//!   `U_j U_i` (antiparallel, variant 0) or `U_i U_j` (parallel, variant 1)
//!   adjacent.
//! * R3: the reference pattern has crossings 1, 2, 3 with pairs `O1 O2`,
//!   `U1 O3`, `U2 U3`, all positive; the move reverses each pair. Reading a
//!   strand backwards reverses its pair and negates its two crossings,
//!   giving eight variants, and the planar mirror (all signs negated) gives
//!   eight more. Variant bits: 1 = first strand reversed, 2 = second,
//!   4 = third, 8 = mirror.
//! * OC: two adjacent over-passes exchange order.

pub mod search;

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{GaussCode, GaussSymbol, Role, Sign};

pub use search::{search, SearchBudget, SearchOutcome, SearchStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("invalid move {0}: {1}")]
    InvalidMove(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
    #[serde(rename = "OC")]
    Oc,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] =
        [MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3, MoveKind::Oc];

    /// The classical Reidemeister moves, without the overcrossing commute.
    pub const CLASSICAL: [MoveKind; 5] =
        [MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3];

    pub fn is_insertion(self) -> bool {
        matches!(self, MoveKind::R1Insert | MoveKind::R2Insert)
    }

    fn added_crossings(self) -> usize {
        match self {
            MoveKind::R1Insert => 1,
            MoveKind::R2Insert => 2,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub site: Vec<usize>,
    pub variant: u8,
    pub payload: Vec<(u32, Sign)>,
}

impl Move {
    pub fn r1_insert(gap: usize, under_first: bool, id: u32, sign: Sign) -> Self {
        Self { kind: MoveKind::R1Insert, site: vec![gap], variant: under_first as u8, payload: vec![(id, sign)] }
    }

    pub fn r1_delete(p: usize, q: usize) -> Self {
        Self { kind: MoveKind::R1Delete, site: vec![p, q], variant: 0, payload: vec![] }
    }

    /// Inserts `O_i O_j` at `over_gap` and the matching under pair at
    /// `under_gap`; `i` gets `sign`, `j` the opposite.
    pub fn r2_insert(over_gap: usize, under_gap: usize, parallel: bool, under_pair_first: bool, ids: (u32, u32), sign: Sign) -> Self {
        let variant = parallel as u8 | ((under_pair_first && over_gap == under_gap) as u8) << 1;
        Self {
            kind: MoveKind::R2Insert,
            site: vec![over_gap, under_gap],
            variant,
            payload: vec![(ids.0, sign), (ids.1, sign.negate())],
        }
    }

    pub fn oc(p: usize) -> Self {
        Self { kind: MoveKind::Oc, site: vec![p], variant: 0, payload: vec![] }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            MoveKind::R1Insert => "R1Insert",
            MoveKind::R1Delete => "R1Delete",
            MoveKind::R2Insert => "R2Insert",
            MoveKind::R2Delete => "R2Delete",
            MoveKind::R3 => "R3",
            MoveKind::Oc => "OC",
        })
    }
}

/// `KIND@[sites]/vVARIANT[payload]`, e.g. `R1Insert@[3]/v0[4+]`.
impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = format!("{}@{:?}/v{}", self.kind, self.site, self.variant);
        if !self.payload.is_empty() {
            let p: Vec<String> =
                self.payload.iter().map(|(id, s)| format!("{id}{}", if *s == Sign::Plus { '+' } else { '-' })).collect();
            s.push_str(&format!("[{}]", p.join(",")));
        }
        f.pad(&s)
    }
}

fn gap_count(code: &GaussCode) -> usize {
    code.len().max(1)
}

fn next(p: usize, len: usize) -> usize {
    (p + 1) % len
}

fn prev(p: usize, len: usize) -> usize {
    (p + len - 1) % len
}

/// Every applicable move, ordered by kind then site.
pub fn enumerate_moves(code: &GaussCode) -> Vec<Move> {
    MoveKind::ALL.iter().flat_map(|&k| moves_of_kind(code, k)).collect()
}

pub fn moves_of_kind(code: &GaussCode, kind: MoveKind) -> Vec<Move> {
    match kind {
        MoveKind::R1Insert => r1_inserts(code),
        MoveKind::R1Delete => r1_deletes(code),
        MoveKind::R2Insert => r2_inserts(code),
        MoveKind::R2Delete => r2_deletes(code),
        MoveKind::R3 => r3_matches(code, None),
        MoveKind::Oc => oc_moves(code),
    }
}

fn r1_inserts(code: &GaussCode) -> Vec<Move> {
    let id = code.max_id() + 1;
    let mut out = Vec::new();
    for gap in 0..gap_count(code) {
        for under_first in [false, true] {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(Move::r1_insert(gap, under_first, id, sign));
            }
        }
    }
    out
}

fn r1_deletes(code: &GaussCode) -> Vec<Move> {
    let s = code.symbols();
    let len = s.len();
    if len < 2 {
        return Vec::new();
    }
    (0..len).filter(|&p| s[p].id == s[next(p, len)].id).map(|p| Move::r1_delete(p, next(p, len))).collect()
}

fn r2_inserts(code: &GaussCode) -> Vec<Move> {
    let ids = (code.max_id() + 1, code.max_id() + 2);
    let gaps = gap_count(code);
    let mut out = Vec::new();
    for over_gap in 0..gaps {
        for under_gap in 0..gaps {
            for parallel in [false, true] {
                let orders: &[bool] = if over_gap == under_gap { &[false, true] } else { &[false] };
                for &under_first in orders {
                    for sign in [Sign::Plus, Sign::Minus] {
                        out.push(Move::r2_insert(over_gap, under_gap, parallel, under_first, ids, sign));
                    }
                }
            }
        }
    }
    out
}

fn r2_deletes(code: &GaussCode) -> Vec<Move> {
    let s = code.symbols();
    let len = s.len();
    let mut out = Vec::new();
    if len < 4 {
        return out;
    }
    for p in 0..len {
        let q = next(p, len);
        let (a, b) = (s[p], s[q]);
        if a.role != Role::Over || b.role != Role::Over || a.sign == b.sign {
            continue;
        }
        let ui = code.position(a.id, Role::Under).expect("valid code");
        let uj = code.position(b.id, Role::Under).expect("valid code");
        if next(uj, len) == ui {
            out.push(Move { kind: MoveKind::R2Delete, site: vec![p, uj], variant: 0, payload: vec![] });
        }
        if next(ui, len) == uj {
            out.push(Move { kind: MoveKind::R2Delete, site: vec![p, ui], variant: 1, payload: vec![] });
        }
    }
    out
}

/// R3 matches, optionally restricted to those whose first pair is at `at`.
fn r3_matches(code: &GaussCode, at: Option<usize>) -> Vec<Move> {
    let s = code.symbols();
    let len = s.len();
    let mut out = Vec::new();
    if len < 6 {
        return out;
    }
    let sign = |id: u32| code.sign_of(id).expect("valid code").value();
    let starts: Vec<usize> = match at {
        Some(p) if p < len => vec![p],
        Some(_) => vec![],
        None => (0..len).collect(),
    };
    for p in starts {
        let q = next(p, len);
        if s[p].role != Role::Over || s[q].role != Role::Over {
            continue;
        }
        let (x, y) = (s[p].id, s[q].id);
        for (c1, c2, rev_a) in [(x, y, false), (y, x, true)] {
            let u1 = code.position(c1, Role::Under).expect("valid code");
            // second strand: U_c1 followed by O_c3, or read backwards
            let mut seconds = Vec::new();
            let after = s[next(u1, len)];
            if after.role == Role::Over && after.id != c1 && after.id != c2 {
                seconds.push((after.id, false, u1));
            }
            let before = s[prev(u1, len)];
            if before.role == Role::Over && before.id != c1 && before.id != c2 {
                seconds.push((before.id, true, prev(u1, len)));
            }
            for (c3, rev_b, b_start) in seconds {
                let u2 = code.position(c2, Role::Under).expect("valid code");
                let u3 = code.position(c3, Role::Under).expect("valid code");
                let (rev_c, c_start) = if next(u2, len) == u3 {
                    (false, u2)
                } else if next(u3, len) == u2 {
                    (true, u3)
                } else {
                    continue;
                };
                let flip = |r: bool| if r { -1 } else { 1 };
                let family = sign(c1) * flip(rev_a) * flip(rev_b);
                if sign(c2) != family * flip(rev_a) * flip(rev_c) || sign(c3) != family * flip(rev_b) * flip(rev_c) {
                    continue;
                }
                let variant = rev_a as u8 | (rev_b as u8) << 1 | (rev_c as u8) << 2 | ((family < 0) as u8) << 3;
                out.push(Move { kind: MoveKind::R3, site: vec![p, b_start, c_start], variant, payload: vec![] });
            }
        }
    }
    out
}

fn oc_moves(code: &GaussCode) -> Vec<Move> {
    let s = code.symbols();
    let len = s.len();
    if len < 2 {
        return Vec::new();
    }
    (0..len).filter(|&p| s[p].role == Role::Over && s[next(p, len)].role == Role::Over).map(Move::oc).collect()
}

fn invalid(mv: &Move, why: &str) -> MoveError {
    MoveError::InvalidMove(mv.to_string(), why.to_string())
}

/// Applies `mv` to `code`, checking that it matches.
pub fn apply(code: &GaussCode, mv: &Move) -> Result<GaussCode, MoveError> {
    let s = code.symbols();
    let len = s.len();
    match mv.kind {
        MoveKind::R1Delete => {
            let [p, q] = mv.site[..] else { return Err(invalid(mv, "site needs two positions")) };
            if len < 2 || p >= len || q != next(p, len) || s[p].id != s[q].id {
                return Err(invalid(mv, "no kink at site"));
            }
            Ok(remove_positions(code, &[p, q]))
        }
        MoveKind::R1Insert => {
            let [gap] = mv.site[..] else { return Err(invalid(mv, "site needs one gap")) };
            let [(id, sign)] = mv.payload[..] else { return Err(invalid(mv, "payload needs one crossing")) };
            if gap >= gap_count(code) || id == 0 || code.position(id, Role::Over).is_some() || mv.variant > 1 {
                return Err(invalid(mv, "bad gap, id or variant"));
            }
            let (first, second) = if mv.variant == 1 {
                (GaussSymbol::under(id, sign), GaussSymbol::over(id, sign))
            } else {
                (GaussSymbol::over(id, sign), GaussSymbol::under(id, sign))
            };
            Ok(insert_at_gaps(code, &[(gap, vec![first, second])]))
        }
        MoveKind::R2Delete => {
            let [p, u] = mv.site[..] else { return Err(invalid(mv, "site needs two positions")) };
            if r2_deletes(code).iter().any(|m| m == mv) {
                Ok(remove_positions(code, &[p, next(p, len), u, next(u, len)]))
            } else {
                Err(invalid(mv, "no bigon at site"))
            }
        }
        MoveKind::R2Insert => {
            let [over_gap, under_gap] = mv.site[..] else { return Err(invalid(mv, "site needs two gaps")) };
            let [(i, si), (j, sj)] = mv.payload[..] else { return Err(invalid(mv, "payload needs two crossings")) };
            let fresh = |id: u32| id != 0 && code.position(id, Role::Over).is_none();
            if over_gap >= gap_count(code)
                || under_gap >= gap_count(code)
                || i == j
                || !fresh(i)
                || !fresh(j)
                || si == sj
                || mv.variant > 3
                || (mv.variant & 2 != 0 && over_gap != under_gap)
            {
                return Err(invalid(mv, "bad gaps, ids, signs or variant"));
            }
            let over_pair = vec![GaussSymbol::over(i, si), GaussSymbol::over(j, sj)];
            let under_pair = if mv.variant & 1 == 1 {
                vec![GaussSymbol::under(i, si), GaussSymbol::under(j, sj)]
            } else {
                vec![GaussSymbol::under(j, sj), GaussSymbol::under(i, si)]
            };
            let inserts = if over_gap == under_gap {
                let mut both = if mv.variant & 2 != 0 { under_pair.clone() } else { over_pair.clone() };
                both.extend(if mv.variant & 2 != 0 { over_pair } else { under_pair });
                vec![(over_gap, both)]
            } else {
                vec![(over_gap, over_pair), (under_gap, under_pair)]
            };
            Ok(insert_at_gaps(code, &inserts))
        }
        MoveKind::R3 => {
            let Some(&p) = mv.site.first() else { return Err(invalid(mv, "empty site")) };
            if !r3_matches(code, Some(p)).iter().any(|m| m == mv) {
                return Err(invalid(mv, "no R3 triangle at site"));
            }
            let mut symbols = s.to_vec();
            for &start in &mv.site {
                symbols.swap(start, next(start, len));
            }
            Ok(GaussCode::from_trusted(symbols))
        }
        MoveKind::Oc => {
            let [p] = mv.site[..] else { return Err(invalid(mv, "site needs one position")) };
            if len < 2 || p >= len || s[p].role != Role::Over || s[next(p, len)].role != Role::Over {
                return Err(invalid(mv, "no adjacent over-passes at site"));
            }
            let mut symbols = s.to_vec();
            symbols.swap(p, next(p, len));
            Ok(GaussCode::from_trusted(symbols))
        }
    }
}

fn remove_positions(code: &GaussCode, positions: &[usize]) -> GaussCode {
    let symbols = code
        .symbols()
        .iter()
        .enumerate()
        .filter(|(i, _)| !positions.contains(i))
        .map(|(_, s)| *s)
        .collect();
    GaussCode::from_trusted(symbols)
}

fn insert_at_gaps(code: &GaussCode, inserts: &[(usize, Vec<GaussSymbol>)]) -> GaussCode {
    let mut out = Vec::with_capacity(code.len() + 4);
    let s = code.symbols();
    for gap in 0..gap_count(code) {
        for (g, syms) in inserts {
            if *g == gap {
                out.extend_from_slice(syms);
            }
        }
        if let Some(sym) = s.get(gap) {
            out.push(*sym);
        }
    }
    GaussCode::from_trusted(out)
}

/// Draws a random applicable move: first a kind uniformly among the allowed
/// kinds that apply, then a site uniformly. Insertions are skipped once they
/// would push the crossing count above `max_crossings`.
pub fn random_move<R: Rng + ?Sized>(code: &GaussCode, rng: &mut R, kinds: &[MoveKind], max_crossings: usize) -> Option<Move> {
    let mut candidates: Vec<(MoveKind, Vec<Move>)> = Vec::new();
    for &kind in kinds {
        if kind.is_insertion() {
            if code.crossing_count() + kind.added_crossings() <= max_crossings {
                candidates.push((kind, Vec::new()));
            }
        } else {
            let moves = moves_of_kind(code, kind);
            if !moves.is_empty() {
                candidates.push((kind, moves));
            }
        }
    }
    if candidates.is_empty() {
        return None;
    }
    let (kind, moves) = &candidates[rng.gen_range(0..candidates.len())];
    let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
    let gaps = gap_count(code);
    Some(match kind {
        MoveKind::R1Insert => Move::r1_insert(rng.gen_range(0..gaps), rng.gen_bool(0.5), code.max_id() + 1, sign),
        MoveKind::R2Insert => {
            let (a, b) = (rng.gen_range(0..gaps), rng.gen_range(0..gaps));
            Move::r2_insert(a, b, rng.gen_bool(0.5), rng.gen_bool(0.5), (code.max_id() + 1, code.max_id() + 2), sign)
        }
        _ => moves[rng.gen_range(0..moves.len())].clone(),
    })
}

/// A start code and a sequence of moves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovePath {
    pub start: GaussCode,
    pub steps: Vec<Move>,
}

impl MovePath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays every step, returning the final code.
    pub fn replay(&self) -> Result<GaussCode, MoveError> {
        self.steps.iter().try_fold(self.start.clone(), |c, mv| apply(&c, mv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> GaussCode {
        GaussCode::parse(s).unwrap()
    }

    const TREFOIL: &str = "O1+U2+O3+U1+O2+U3+";

    #[test]
    fn kink_deletion() {
        let c = code("O1+U1+");
        let moves = enumerate_moves(&c);
        let del = Move::r1_delete(0, 1);
        assert!(moves.contains(&del));
        assert_eq!(apply(&c, &del).unwrap(), GaussCode::unknot());
    }

    #[test]
    fn empty_code_has_only_insertions() {
        let moves = enumerate_moves(&GaussCode::unknot());
        assert!(!moves.is_empty());
        assert!(moves.iter().all(|m| m.kind.is_insertion()));
        assert!(moves.iter().any(|m| m.kind == MoveKind::R1Insert));
    }

    #[test]
    fn oc_transposes() {
        let c = code("O1+O2+U1+U2+");
        let oc = Move::oc(0);
        assert!(enumerate_moves(&c).contains(&oc));
        assert_eq!(apply(&c, &oc).unwrap().to_string(), "O2+O1+U1+U2+");
    }

    #[test]
    fn r1_round_trip() {
        let t = code(TREFOIL);
        for mv in moves_of_kind(&t, MoveKind::R1Insert) {
            let kinked = apply(&t, &mv).unwrap();
            let g = mv.site[0];
            let back = apply(&kinked, &Move::r1_delete(g, g + 1)).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn r2_round_trip() {
        let t = code(TREFOIL);
        for mv in moves_of_kind(&t, MoveKind::R2Insert) {
            let bigger = apply(&t, &mv).unwrap();
            let dels = moves_of_kind(&bigger, MoveKind::R2Delete);
            let restored = dels.iter().any(|d| apply(&bigger, d).unwrap().canonical() == t.canonical());
            assert!(restored, "{mv} on {t} gave {bigger}");
        }
    }

    #[test]
    fn r3_reference_pattern() {
        // strands read as: A = O1 O2, B = U1 O3, C = U2 U3
        let c = code("O1+O2+U1+O3+U2+U3+");
        let r3 = moves_of_kind(&c, MoveKind::R3);
        assert_eq!(r3.len(), 1);
        assert_eq!(r3[0].variant, 0);
        let after = apply(&c, &r3[0]).unwrap();
        assert_eq!(after.to_string(), "O2+O1+O3+U1+U3+U2+");
        // the move is an involution
        let back = moves_of_kind(&after, MoveKind::R3);
        assert!(back.iter().any(|m| apply(&after, m).unwrap() == c));
    }

    #[test]
    fn r3_rejects_wrong_signs() {
        let c = code("O1+O2+U1+O3-U2+U3-");
        assert!(moves_of_kind(&c, MoveKind::R3).is_empty());
    }

    #[test]
    fn apply_rejects_mismatch() {
        let t = code(TREFOIL);
        assert!(apply(&t, &Move::r1_delete(0, 1)).is_err());
        assert!(apply(&t, &Move::oc(0)).is_err());
        assert!(apply(&t, &Move::r1_insert(0, false, 1, Sign::Plus)).is_err());
        assert!(apply(&t, &Move::r1_insert(99, false, 9, Sign::Plus)).is_err());
    }

    #[test]
    fn move_json_shape() {
        let mv = Move::oc(3);
        let json = serde_json::to_string(&mv).unwrap();
        assert_eq!(json, r#"{"kind":"OC","site":[3],"variant":0,"payload":[]}"#);
        let back: Move = serde_json::from_str(&json).unwrap();
        assert_eq!(back, mv);
    }
}
