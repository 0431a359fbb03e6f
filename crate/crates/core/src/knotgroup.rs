//! Wirtinger presentations, meridians and longitudes read off a Gauss code.
//!
//! Arcs run between consecutive under-passes. Arc `j` starts just after the
//! `j`-th `U` symbol of the code, so the arc through the basepoint is the
//! last one, arc `n - 1`. Its generator is the meridian. A diagram without
//! crossings has the single generator 0.
//!
//! At the `j`-th under-pass, with incoming arc `a`, outgoing arc `b`, over
//! arc `o` and sign `e`, the relation is `b = o^-e a o^e`, stored as the
//! relator `b^-1 o^-e a o^e`. Chaining these from the basepoint shows that
//! the product of `o^e` over all under-passes conjugates the meridian to
//! itself; dividing by `m^writhe` gives the longitude.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codec::{GaussCode, Role, Sign};

/// A freely reduced word in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(usize, i8)>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(g: usize) -> Self {
        Self { letters: vec![(g, 1)] }
    }

    /// Builds a word from `(generator, ±1)` letters, reducing as it goes.
    pub fn from_letters<I: IntoIterator<Item = (usize, i8)>>(letters: I) -> Self {
        let mut w = Self::empty();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    /// Appends `g^e` for `e = ±1`, cancelling against the last letter.
    pub fn push(&mut self, g: usize, e: i8) {
        debug_assert!(e == 1 || e == -1);
        if let Some(&(h, f)) = self.letters.last() {
            if h == g && f == -e {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((g, e));
    }

    /// Appends `g^k` for any integer `k`.
    pub fn push_power(&mut self, g: usize, k: i64) {
        let e = if k >= 0 { 1 } else { -1 };
        for _ in 0..k.unsigned_abs() {
            self.push(g, e);
        }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn exponent_sum(&self) -> i64 {
        exponent_sum(self)
    }

    /// Renames generators through `map`.
    pub fn map_generators(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::from_letters(self.letters.iter().map(|&(g, e)| (map(g), e)))
    }
}

/// Linking-number homomorphism: the sum of the exponents.
pub fn exponent_sum(w: &Word) -> i64 {
    w.letters.iter().map(|&(_, e)| e as i64).sum()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let (g, e) = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == (g, e) {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let power = run as i64 * e as i64;
            if power == 1 {
                write!(f, "g{g}")?;
            } else {
                write!(f, "g{g}^{power}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.letters.iter().map(|&(g, e)| (g, e)).collect::<Vec<_>>().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(usize, i8)> = Vec::deserialize(deserializer)?;
        if raw.iter().any(|&(_, e)| e != 1 && e != -1) {
            return Err(serde::de::Error::custom("word exponents must be 1 or -1"));
        }
        Ok(Word::from_letters(raw))
    }
}

/// A finite presentation: generators are `0..generator_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generator_count: usize,
    pub relations: Vec<Word>,
    #[serde(default)]
    pub generator_labels: Vec<String>,
}

impl Presentation {
    pub fn new(generator_count: usize, relations: Vec<Word>) -> Self {
        let generator_labels = (0..generator_count).map(|g| format!("g{g}")).collect();
        Self { generator_count, relations, generator_labels }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generator_count).map(|g| format!("g{g}")).collect();
        let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// The arcs meeting at one under-pass, in traversal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingArcs {
    pub crossing: u32,
    pub incoming: usize,
    pub outgoing: usize,
    pub over: usize,
    pub sign: Sign,
}

/// Number of Wirtinger generators (one per arc, at least one).
pub fn arc_count(code: &GaussCode) -> usize {
    code.crossing_count().max(1)
}

/// The basepoint arc, whose generator is the meridian.
pub fn basepoint_arc(code: &GaussCode) -> usize {
    arc_count(code) - 1
}

/// Under-pass data for each classical crossing in traversal order.
pub fn crossing_arcs(code: &GaussCode) -> Vec<CrossingArcs> {
    let symbols = code.symbols();
    let n = code.crossing_count();
    if n == 0 {
        return Vec::new();
    }
    // unders_before[p] = number of U symbols strictly before p
    let mut unders_before = Vec::with_capacity(symbols.len());
    let mut count = 0;
    for s in symbols {
        unders_before.push(count);
        if s.role == Role::Under {
            count += 1;
        }
    }
    let arc_at = |p: usize| (unders_before[p] + n - 1) % n;
    let mut over_arc = std::collections::HashMap::with_capacity(n);
    for (p, s) in symbols.iter().enumerate() {
        if s.role == Role::Over {
            over_arc.insert(s.id, arc_at(p));
        }
    }
    symbols
        .iter()
        .filter(|s| s.role == Role::Under)
        .enumerate()
        .map(|(j, s)| CrossingArcs {
            crossing: s.id,
            incoming: (j + n - 1) % n,
            outgoing: j,
            over: over_arc[&s.id],
            sign: s.sign,
        })
        .collect()
}

pub fn wirtinger(code: &GaussCode) -> Presentation {
    let crossings = crossing_arcs(code);
    let relations = crossings
        .iter()
        .map(|c| {
            let e = c.sign.value() as i8;
            Word::from_letters([(c.outgoing, -1), (c.over, -e), (c.incoming, 1), (c.over, e)])
        })
        .collect();
    let generator_count = arc_count(code);
    let generator_labels = if crossings.is_empty() {
        vec!["arc 0 (whole knot)".to_string()]
    } else {
        let n = crossings.len();
        (0..n)
            .map(|j| {
                let start = crossings[j].crossing;
                let end = crossings[(j + 1) % n].crossing;
                format!("arc {j} (U{start} to U{end})")
            })
            .collect()
    };
    Presentation { generator_count, relations, generator_labels }
}

/// The longitude word and the writhe `k`.
pub fn longitude(code: &GaussCode) -> (Word, i64) {
    let mut w = Word::empty();
    for c in crossing_arcs(code) {
        w.push(c.over, c.sign.value() as i8);
    }
    let k = code.writhe();
    w.push_power(basepoint_arc(code), -k);
    (w, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeripheralStructure {
    pub group: Presentation,
    pub meridian: Word,
    pub longitude: Word,
    pub writhe: i64,
}

impl PeripheralStructure {
    /// The same structure with the longitude replaced by its inverse.
    pub fn with_inverted_longitude(&self) -> Self {
        Self { longitude: self.longitude.inverse(), ..self.clone() }
    }
}

pub fn peripheral(code: &GaussCode) -> PeripheralStructure {
    let (longitude, writhe) = longitude(code);
    PeripheralStructure {
        group: wirtinger(code),
        meridian: Word::generator(basepoint_arc(code)),
        longitude,
        writhe,
    }
}
