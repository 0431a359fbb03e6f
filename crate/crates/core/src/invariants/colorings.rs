//! Homomorphisms to finite groups, quandle colorings and peripheral
//! multisets, all by exact backtracking.
//!
//! The search assigns one generator at a time, choosing the generator with
//! the most relators that would become solvable, and then propagates: a
//! relator whose only unassigned generator occurs exactly once determines
//! that generator.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::codec::GaussCode;
use crate::knotgroup::{crossing_arcs, arc_count, PeripheralStructure, Presentation, Word};

use super::finite::{FiniteGroup, FiniteQuandle};

const UNSET: usize = usize::MAX;

struct HomSearch<'a> {
    group: &'a FiniteGroup,
    relators: &'a [Word],
    by_generator: Vec<Vec<usize>>,
    assignment: Vec<usize>,
}

impl<'a> HomSearch<'a> {
    fn new(p: &'a Presentation, group: &'a FiniteGroup) -> Self {
        let mut by_generator = vec![Vec::new(); p.generator_count];
        for (r, w) in p.relations.iter().enumerate() {
            for &(g, _) in w.letters() {
                if by_generator[g].last() != Some(&r) {
                    by_generator[g].push(r);
                }
            }
        }
        for list in &mut by_generator {
            list.dedup();
        }
        Self { group, relators: &p.relations, by_generator, assignment: vec![UNSET; p.generator_count] }
    }

    fn eval(&self, w: &Word) -> usize {
        w.letters().iter().fold(self.group.identity(), |acc, &(g, e)| {
            let x = self.assignment[g];
            self.group.mul(acc, if e > 0 { x } else { self.group.inv(x) })
        })
    }

    /// Checks relator `r`; returns a forced `(generator, value)` when exactly
    /// one generator is unknown and occurs once, `Err` on contradiction.
    fn inspect(&self, r: usize) -> Result<Option<(usize, usize)>, ()> {
        let g = self.group;
        let w = &self.relators[r];
        let mut unknown: Option<(usize, i8, usize)> = None;
        let mut unknown_count = 0;
        for (i, &(h, e)) in w.letters().iter().enumerate() {
            if self.assignment[h] == UNSET {
                match unknown {
                    Some((u, _, _)) if u == h => unknown_count += 1,
                    Some(_) => return Ok(None),
                    None => {
                        unknown = Some((h, e, i));
                        unknown_count = 1;
                    }
                }
            }
        }
        match unknown {
            None => {
                if self.eval(w) == g.identity() {
                    Ok(None)
                } else {
                    Err(())
                }
            }
            Some((h, e, i)) if unknown_count == 1 => {
                // u x^e v = 1  =>  x^e = u^-1 v^-1
                let letters = w.letters();
                let prod = |range: &[(usize, i8)]| {
                    range.iter().fold(g.identity(), |acc, &(k, f)| {
                        let x = self.assignment[k];
                        g.mul(acc, if f > 0 { x } else { g.inv(x) })
                    })
                };
                let u = prod(&letters[..i]);
                let v = prod(&letters[i + 1..]);
                let xe = g.mul(g.inv(u), g.inv(v));
                Ok(Some((h, if e > 0 { xe } else { g.inv(xe) })))
            }
            Some(_) => Ok(None),
        }
    }

    /// Assigns and propagates; returns the trail of assigned generators, or
    /// `None` (after undoing) on contradiction.
    fn assign(&mut self, gen: usize, value: usize) -> Option<Vec<usize>> {
        let mut trail = vec![gen];
        self.assignment[gen] = value;
        let mut queue: Vec<usize> = self.by_generator[gen].clone();
        while let Some(r) = queue.pop() {
            match self.inspect(r) {
                Err(()) => {
                    self.undo(&trail);
                    return None;
                }
                Ok(None) => {}
                Ok(Some((h, x))) => {
                    self.assignment[h] = x;
                    trail.push(h);
                    queue.extend(self.by_generator[h].iter().copied());
                }
            }
        }
        Some(trail)
    }

    fn undo(&mut self, trail: &[usize]) {
        for &g in trail {
            self.assignment[g] = UNSET;
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for g in 0..self.assignment.len() {
            if self.assignment[g] != UNSET {
                continue;
            }
            // relators in which g is the only unknown besides at most one other
            let score = self.by_generator[g]
                .iter()
                .filter(|&&r| {
                    let mut others = self.relators[r]
                        .letters()
                        .iter()
                        .filter(|&&(h, _)| h != g && self.assignment[h] == UNSET)
                        .map(|&(h, _)| h);
                    match others.next() {
                        None => true,
                        Some(first) => others.all(|h| h == first),
                    }
                })
                .count();
            if best.is_none_or(|(_, s)| score > s) {
                best = Some((g, score));
            }
        }
        best.map(|(g, _)| g)
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize])) {
        match self.pick() {
            None => visit(&self.assignment),
            Some(g) => {
                for value in 0..self.group.order() {
                    if let Some(trail) = self.assign(g, value) {
                        self.run(visit);
                        self.undo(&trail);
                    }
                }
            }
        }
    }
}

/// Calls `visit` with every generator assignment satisfying all relators.
pub fn for_each_hom(p: &Presentation, group: &FiniteGroup, mut visit: impl FnMut(&[usize])) {
    let mut search = HomSearch::new(p, group);
    // relators without generators (already reduced to 1) impose nothing
    search.run(&mut visit);
}

pub fn count_homs(p: &Presentation, group: &FiniteGroup) -> u64 {
    let mut count = 0u64;
    for_each_hom(p, group, |_| count += 1);
    count
}

/// Evaluates a word under an assignment.
pub fn evaluate(group: &FiniteGroup, assignment: &[usize], w: &Word) -> usize {
    w.letters().iter().fold(group.identity(), |acc, &(g, e)| {
        let x = assignment[g];
        group.mul(acc, if e > 0 { x } else { group.inv(x) })
    })
}

/// Checks one crossing: a forced `(arc, color)`, nothing, or a contradiction.
type Inspect<'a> = dyn Fn(&[usize], usize) -> Result<Option<(usize, usize)>, ()> + 'a;

/// Number of arc colorings by `q`: at each crossing the outgoing under-arc
/// is `incoming * over` (positive) or `incoming *^-1 over` (negative).
pub fn quandle_colorings(code: &GaussCode, q: &FiniteQuandle) -> u64 {
    let crossings = crossing_arcs(code);
    let arcs = arc_count(code);
    let mut touching = vec![Vec::new(); arcs];
    for (i, c) in crossings.iter().enumerate() {
        for a in [c.incoming, c.outgoing, c.over] {
            if touching[a].last() != Some(&i) {
                touching[a].push(i);
            }
        }
    }
    let mut colors = vec![UNSET; arcs];
    let mut count = 0u64;

    // returns forced (arc, color) or contradiction
    let inspect = |colors: &[usize], i: usize| -> Result<Option<(usize, usize)>, ()> {
        let c = &crossings[i];
        let positive = c.sign.value() > 0;
        let (a, b, o) = (colors[c.incoming], colors[c.outgoing], colors[c.over]);
        if o == UNSET {
            return Ok(None);
        }
        match (a == UNSET, b == UNSET) {
            (false, false) => {
                let expected = if positive { q.op(a, o) } else { q.inv_op(a, o) };
                if expected == b { Ok(None) } else { Err(()) }
            }
            (false, true) => Ok(Some((c.outgoing, if positive { q.op(a, o) } else { q.inv_op(a, o) }))),
            (true, false) => Ok(Some((c.incoming, if positive { q.inv_op(b, o) } else { q.op(b, o) }))),
            (true, true) => Ok(None),
        }
    };

    // Branch on the arc whose color unlocks the most propagation: an over-arc
    // next to a colored under-arc forces its neighbour, and under-arcs are
    // forced once the over-arcs along their chain are known.
    let pick = |colors: &[usize]| -> Option<usize> {
        let mut best: Option<(usize, (usize, usize))> = None;
        for arc in (0..arcs).filter(|&a| colors[a] == UNSET) {
            let mut unlocks = 0;
            let mut over_count = 0;
            for &i in &touching[arc] {
                let c = &crossings[i];
                if c.over == arc {
                    over_count += 1;
                    if colors[c.incoming] != UNSET || colors[c.outgoing] != UNSET {
                        unlocks += 1;
                    }
                } else if colors[c.over] != UNSET {
                    unlocks += 1;
                }
            }
            let score = (unlocks, over_count);
            if best.is_none_or(|(_, s)| score > s) {
                best = Some((arc, score));
            }
        }
        best.map(|(a, _)| a)
    };

    fn rec(
        colors: &mut Vec<usize>,
        touching: &[Vec<usize>],
        order: usize,
        pick: &dyn Fn(&[usize]) -> Option<usize>,
        inspect: &Inspect,
        count: &mut u64,
    ) {
        let Some(arc) = pick(colors) else {
            *count += 1;
            return;
        };
        'values: for value in 0..order {
            let mut trail = vec![arc];
            colors[arc] = value;
            let mut queue = touching[arc].clone();
            while let Some(i) = queue.pop() {
                match inspect(colors, i) {
                    Err(()) => {
                        for &a in &trail {
                            colors[a] = UNSET;
                        }
                        continue 'values;
                    }
                    Ok(None) => {}
                    Ok(Some((a, col))) => {
                        colors[a] = col;
                        trail.push(a);
                        queue.extend(touching[a].iter().copied());
                    }
                }
            }
            rec(colors, touching, order, pick, inspect, count);
            for &a in &trail {
                colors[a] = UNSET;
            }
        }
    }

    rec(&mut colors, &touching, q.order(), &pick, &inspect, &mut count);
    count
}

/// How peripheral pairs are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PeripheralNormalization {
    /// Simultaneous conjugation of `(m, l)`.
    Welded,
    /// Simultaneous conjugation together with `l -> l^-1`.
    Tube,
}

/// Multiset of orbit representatives `(ρ(m), ρ(l))`, with multiplicities,
/// sorted by representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PeripheralMultiset(pub Vec<((usize, usize), u64)>);

impl PeripheralMultiset {
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&(_, n)| n).sum()
    }
}

impl Serialize for PeripheralMultiset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.iter().map(|&((m, l), n)| ([m, l], n)).collect::<Vec<_>>().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PeripheralMultiset {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<([usize; 2], u64)> = Vec::deserialize(deserializer)?;
        Ok(Self(raw.into_iter().map(|([m, l], n)| ((m, l), n)).collect()))
    }
}

/// Lexicographically least pair in the orbit of `(x, y)`.
pub fn orbit_representative(group: &FiniteGroup, x: usize, y: usize, mode: PeripheralNormalization) -> (usize, usize) {
    let mut best = (usize::MAX, usize::MAX);
    let ys: &[usize] = match mode {
        PeripheralNormalization::Welded => &[y],
        PeripheralNormalization::Tube => &[y, group.inv(y)],
    };
    for &y in ys {
        for g in 0..group.order() {
            let pair = (group.conjugate(x, g), group.conjugate(y, g));
            if pair < best {
                best = pair;
            }
        }
    }
    best
}

pub fn peripheral_multiset(ps: &PeripheralStructure, group: &FiniteGroup, mode: PeripheralNormalization) -> PeripheralMultiset {
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for_each_hom(&ps.group, group, |rho| {
        let m = evaluate(group, rho, &ps.meridian);
        let l = evaluate(group, rho, &ps.longitude);
        *counts.entry(orbit_representative(group, m, l, mode)).or_insert(0) += 1;
    });
    PeripheralMultiset(counts.into_iter().collect())
}

/// Hom count together with both normalized multisets, from one enumeration.
pub(crate) fn peripheral_summary(ps: &PeripheralStructure, group: &FiniteGroup) -> (u64, PeripheralMultiset, PeripheralMultiset) {
    let mut welded: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut tube: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut count = 0u64;
    for_each_hom(&ps.group, group, |rho| {
        count += 1;
        let m = evaluate(group, rho, &ps.meridian);
        let l = evaluate(group, rho, &ps.longitude);
        let w = orbit_representative(group, m, l, PeripheralNormalization::Welded);
        let t = orbit_representative(group, m, l, PeripheralNormalization::Tube);
        *welded.entry(w).or_insert(0) += 1;
        *tube.entry(t).or_insert(0) += 1;
    });
    (count, PeripheralMultiset(welded.into_iter().collect()), PeripheralMultiset(tube.into_iter().collect()))
}
