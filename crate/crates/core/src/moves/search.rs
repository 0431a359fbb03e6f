//! Bounded breadth-first search for a move sequence between two codes.
//!
//! States are deduplicated by canonical form; each stored state keeps the
//! concrete code it was reached with so the returned path replays exactly.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::codec::GaussCode;

use super::{apply, enumerate_moves, Move, MoveKind, MovePath};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_depth: usize,
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_depth: 4, max_states: 100_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub states_visited: usize,
    pub frontier_size: usize,
    pub depth_reached: usize,
    /// True when the state cap stopped the search before the depth cap.
    pub state_cap_hit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome")]
pub enum SearchOutcome {
    Found { path: MovePath, stats: SearchStats },
    NotFound { stats: SearchStats },
}

impl SearchOutcome {
    pub fn stats(&self) -> &SearchStats {
        match self {
            SearchOutcome::Found { stats, .. } | SearchOutcome::NotFound { stats } => stats,
        }
    }

    pub fn path(&self) -> Option<&MovePath> {
        match self {
            SearchOutcome::Found { path, .. } => Some(path),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

struct Node {
    code: GaussCode,
    parent: Option<(usize, Move)>,
    depth: usize,
}

/// Searches for a sequence of moves of the given kinds taking `from` to a
/// code with the same canonical form as `to`.
pub fn search_with_kinds(from: &GaussCode, to: &GaussCode, budget: SearchBudget, kinds: &[MoveKind]) -> SearchOutcome {
    let goal = to.canonical();
    let mut nodes = vec![Node { code: from.clone(), parent: None, depth: 0 }];
    let mut seen: HashMap<GaussCode, usize> = HashMap::from([(from.canonical(), 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut depth_reached = 0;
    let stats = |seen: &HashMap<GaussCode, usize>, queue: &VecDeque<usize>, depth_reached, cap| SearchStats {
        states_visited: seen.len(),
        frontier_size: queue.len(),
        depth_reached,
        state_cap_hit: cap,
    };
    if from.canonical() == goal {
        return SearchOutcome::Found {
            path: MovePath { start: from.clone(), steps: vec![] },
            stats: stats(&seen, &queue, 0, false),
        };
    }
    while let Some(i) = queue.pop_front() {
        let depth = nodes[i].depth;
        if depth >= budget.max_depth {
            queue.push_front(i);
            break;
        }
        depth_reached = depth_reached.max(depth + 1);
        let code = nodes[i].code.clone();
        for mv in enumerate_moves(&code).into_iter().filter(|m| kinds.contains(&m.kind)) {
            let child = apply(&code, &mv).expect("enumerated moves apply");
            let key = child.canonical();
            if seen.contains_key(&key) {
                continue;
            }
            if seen.len() >= budget.max_states {
                queue.push_front(i);
                return SearchOutcome::NotFound { stats: stats(&seen, &queue, depth_reached, true) };
            }
            let found = key == goal;
            nodes.push(Node { code: child, parent: Some((i, mv)), depth: depth + 1 });
            let id = nodes.len() - 1;
            seen.insert(key, id);
            if found {
                return SearchOutcome::Found {
                    path: reconstruct(&nodes, id),
                    stats: stats(&seen, &queue, depth_reached, false),
                };
            }
            queue.push_back(id);
        }
    }
    SearchOutcome::NotFound { stats: stats(&seen, &queue, depth_reached, false) }
}

/// [`search_with_kinds`] over all welded moves.
pub fn search(from: &GaussCode, to: &GaussCode, budget: SearchBudget) -> SearchOutcome {
    search_with_kinds(from, to, budget, &MoveKind::ALL)
}

fn reconstruct(nodes: &[Node], mut id: usize) -> MovePath {
    let mut steps = Vec::new();
    while let Some((parent, mv)) = &nodes[id].parent {
        steps.push(mv.clone());
        id = *parent;
    }
    steps.reverse();
    MovePath { start: nodes[id].code.clone(), steps }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> GaussCode {
        GaussCode::parse(s).unwrap()
    }

    #[test]
    fn identical_codes_need_no_moves() {
        let t = code("O1+U2+O3+U1+O2+U3+");
        let out = search(&t, &t.rotated(2), SearchBudget::default());
        assert_eq!(out.path().unwrap().len(), 0);
    }

    #[test]
    fn kink_removal_found() {
        let kinked = code("O1+U2+O3+U1+O2+U3+O4-U4-");
        let t = code("O1+U2+O3+U1+O2+U3+");
        let out = search(&kinked, &t, SearchBudget { max_depth: 2, max_states: 10_000 });
        let path = out.path().expect("path");
        assert_eq!(path.len(), 1);
        assert_eq!(path.replay().unwrap().canonical(), t.canonical());
    }

    #[test]
    fn state_cap_reported() {
        let t = code("O1+U2+O3+U1+O2+U3+");
        let out = search(&GaussCode::unknot(), &t, SearchBudget { max_depth: 5, max_states: 50 });
        assert!(matches!(out, SearchOutcome::NotFound { .. }));
        assert!(out.stats().state_cap_hit);
        assert_eq!(out.stats().states_visited, 50);
    }
}
