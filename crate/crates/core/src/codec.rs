//! Signed Gauss codes for 1-component welded knot diagrams.
//!
//! A diagram is recorded as the cyclic sequence of classical crossings met
//! while walking along the knot, starting at the basepoint (index 0). Each
//! crossing appears twice, once as `O` (passing over) and once as `U`
//! (passing under), and carries a sign. Welded crossings are planar
//! artifacts and are not recorded.
//!
//! Text format: `O1+U2+O3+U1+O2+U3+`, whitespace between symbols allowed,
//! empty input is the unknot.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("structure error: {0}")]
    Structure(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flip(self) -> Self {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Self {
        if v >= 0 { Sign::Plus } else { Sign::Minus }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussSymbol {
    pub id: u32,
    pub role: Role,
    pub sign: Sign,
}

impl GaussSymbol {
    pub fn new(id: u32, role: Role, sign: Sign) -> Self {
        Self { id, role, sign }
    }

    pub fn over(id: u32, sign: Sign) -> Self {
        Self::new(id, Role::Over, sign)
    }

    pub fn under(id: u32, sign: Sign) -> Self {
        Self::new(id, Role::Under, sign)
    }

    /// Comparison key for canonical forms: role, then id, then sign.
    fn key(&self) -> (Role, u32, Sign) {
        (self.role, self.id, self.sign)
    }
}

impl fmt::Display for GaussSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role.letter(), self.id, self.sign.symbol())
    }
}

/// Diagram symmetries acting on Gauss codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    /// `-K`: reverse the orientation.
    Reverse,
    /// `K*`: switch every crossing.
    MirrorStar,
    /// `K↑`: reflect the planar diagram.
    VReflect,
}

impl FromStr for Symmetry {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "reverse" => Ok(Symmetry::Reverse),
            "mirror" | "mirrorstar" | "mirror-star" => Ok(Symmetry::MirrorStar),
            "vreflect" | "v-reflect" => Ok(Symmetry::VReflect),
            other => Err(format!("unknown symmetry '{other}' (expected reverse|mirror|vreflect)")),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Symmetry::Reverse => "reverse",
            Symmetry::MirrorStar => "mirror",
            Symmetry::VReflect => "vreflect",
        })
    }
}

/// A validated signed Gauss code. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussCode {
    symbols: Vec<GaussSymbol>,
}

impl GaussCode {
    pub fn unknot() -> Self {
        Self { symbols: Vec::new() }
    }

    /// Validates and wraps a symbol sequence.
    pub fn new(symbols: Vec<GaussSymbol>) -> Result<Self, CodecError> {
        validate(&symbols)?;
        Ok(Self { symbols })
    }

    pub(crate) fn from_trusted(symbols: Vec<GaussSymbol>) -> Self {
        debug_assert!(validate(&symbols).is_ok(), "invalid code {:?}", symbols);
        Self { symbols }
    }

    pub fn parse(text: &str) -> Result<Self, CodecError> {
        Self::new(parse_symbols(text)?)
    }

    pub fn symbols(&self) -> &[GaussSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.symbols.len() / 2
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.symbols
            .iter()
            .filter(|s| s.role == Role::Under)
            .map(|s| s.sign.value())
            .sum()
    }

    pub fn max_id(&self) -> u32 {
        self.symbols.iter().map(|s| s.id).max().unwrap_or(0)
    }

    /// Position of the `role` occurrence of crossing `id`.
    pub fn position(&self, id: u32, role: Role) -> Option<usize> {
        self.symbols.iter().position(|s| s.id == id && s.role == role)
    }

    pub fn sign_of(&self, id: u32) -> Option<Sign> {
        self.symbols.iter().find(|s| s.id == id).map(|s| s.sign)
    }

    pub fn apply_symmetry(&self, op: Symmetry) -> Self {
        let symbols = match op {
            Symmetry::Reverse => self.symbols.iter().rev().copied().collect(),
            Symmetry::MirrorStar => self
                .symbols
                .iter()
                .map(|s| GaussSymbol::new(s.id, s.role.flip(), s.sign.negate()))
                .collect(),
            Symmetry::VReflect => self
                .symbols
                .iter()
                .map(|s| GaussSymbol::new(s.id, s.role, s.sign.negate()))
                .collect(),
        };
        Self { symbols }
    }

    pub fn reverse(&self) -> Self {
        self.apply_symmetry(Symmetry::Reverse)
    }

    pub fn mirror_star(&self) -> Self {
        self.apply_symmetry(Symmetry::MirrorStar)
    }

    pub fn vreflect(&self) -> Self {
        self.apply_symmetry(Symmetry::VReflect)
    }

    /// `-K↑`, the diagram whose tube is the mirror of this diagram's tube.
    pub fn reverse_vreflect(&self) -> Self {
        self.vreflect().reverse()
    }

    /// `-K*`.
    pub fn reverse_mirror(&self) -> Self {
        self.mirror_star().reverse()
    }

    /// Rotates the basepoint forward by `k` symbols.
    pub fn rotated(&self, k: usize) -> Self {
        if self.symbols.is_empty() {
            return self.clone();
        }
        let k = k % self.symbols.len();
        let mut symbols = self.symbols.clone();
        symbols.rotate_left(k);
        Self { symbols }
    }

    /// Lexicographically least representative over basepoint rotations,
    /// with ids relabelled 1, 2, ... in order of first appearance.
    pub fn canonical(&self) -> Self {
        let n = self.symbols.len();
        if n == 0 {
            return self.clone();
        }
        let mut best: Option<Vec<GaussSymbol>> = None;
        // Over sorts before Under, so a minimal word starts with an Over symbol.
        for start in 0..n {
            if self.symbols[start].role != Role::Over {
                continue;
            }
            let candidate = relabel_from(&self.symbols, start);
            let better = match &best {
                None => true,
                Some(b) => candidate.iter().map(GaussSymbol::key).lt(b.iter().map(GaussSymbol::key)),
            };
            if better {
                best = Some(candidate);
            }
        }
        Self { symbols: best.expect("nonempty code has an over symbol") }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }
}

fn relabel_from(symbols: &[GaussSymbol], start: usize) -> Vec<GaussSymbol> {
    let n = symbols.len();
    let mut labels: HashMap<u32, u32> = HashMap::with_capacity(n / 2);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let s = symbols[(start + k) % n];
        let next = labels.len() as u32 + 1;
        let id = *labels.entry(s.id).or_insert(next);
        out.push(GaussSymbol::new(id, s.role, s.sign));
    }
    out
}

fn validate(symbols: &[GaussSymbol]) -> Result<(), CodecError> {
    let mut seen: HashMap<u32, (Option<usize>, Option<usize>, Sign)> = HashMap::new();
    for (pos, s) in symbols.iter().enumerate() {
        if s.id == 0 {
            return Err(CodecError::Structure(format!("crossing id at position {pos} must be positive")));
        }
        let entry = seen.entry(s.id).or_insert((None, None, s.sign));
        if entry.2 != s.sign {
            return Err(CodecError::Structure(format!("sign mismatch on crossing {}", s.id)));
        }
        let slot = match s.role {
            Role::Over => &mut entry.0,
            Role::Under => &mut entry.1,
        };
        if slot.is_some() {
            return Err(CodecError::Structure(format!(
                "crossing {} has two {} occurrences",
                s.id,
                if s.role == Role::Over { "over" } else { "under" }
            )));
        }
        *slot = Some(pos);
    }
    let mut ids: Vec<_> = seen.into_iter().collect();
    ids.sort_by_key(|(id, _)| *id);
    for (id, (over, under, _)) in ids {
        if over.is_none() || under.is_none() {
            return Err(CodecError::Structure(format!("crossing {id} does not appear exactly twice")));
        }
    }
    Ok(())
}

fn parse_symbols(text: &str) -> Result<Vec<GaussSymbol>, CodecError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let syntax = |position: usize, message: &str| CodecError::Syntax { position, message: message.to_string() };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let role = match c {
            b'O' => Role::Over,
            b'U' => Role::Under,
            _ => return Err(syntax(i, "expected 'O' or 'U'")),
        };
        i += 1;
        let digits_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == digits_start {
            return Err(syntax(i, "expected crossing id digits"));
        }
        let id: u32 = text[digits_start..i]
            .parse()
            .map_err(|_| syntax(digits_start, "crossing id out of range"))?;
        let sign = match bytes.get(i) {
            Some(b'+') => Sign::Plus,
            Some(b'-') => Sign::Minus,
            _ => return Err(syntax(i, "expected '+' or '-'")),
        };
        i += 1;
        out.push(GaussSymbol::new(id, role, sign));
    }
    Ok(out)
}

impl FromStr for GaussCode {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl Serialize for GaussCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        GaussCode::parse(&text).map_err(serde::de::Error::custom)
    }
}
