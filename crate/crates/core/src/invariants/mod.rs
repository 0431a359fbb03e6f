//! Comparison invariants and level-tagged batteries.
//!
//! A battery bundles the Alexander polynomial, finite hom counts, quandle
//! coloring counts and peripheral multisets over a fixed palette. The
//! `Welded` level identifies peripheral pairs by simultaneous conjugation,
//! `Tube` additionally identifies the longitude with its inverse, and
//! `Virtual` adds the f-polynomial, which is not a welded invariant.

pub mod alexander;
pub mod bracket;
pub mod colorings;
pub mod finite;
pub mod laurent;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codec::GaussCode;
use crate::knotgroup::{peripheral, PeripheralStructure};

pub use alexander::alexander;
pub use bracket::f_polynomial;
pub use colorings::{count_homs, peripheral_multiset, quandle_colorings, PeripheralMultiset, PeripheralNormalization};
pub use finite::{FiniteGroup, FiniteQuandle, TableError};
pub use laurent::LaurentPoly;

/// Bump whenever the default palette or any normalization changes.
pub const PALETTE_VERSION: &str = "1";

pub const DEFAULT_GROUPS: &[&str] = &["Z3", "S3", "D4", "D5", "D6", "A4", "S4"];
pub const DEFAULT_QUANDLES: &[&str] = &["R3", "R4", "R5", "R6", "R7", "R8", "R9"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Virtual,
    Welded,
    Tube,
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "virtual" => Ok(Level::Virtual),
            "welded" => Ok(Level::Welded),
            "tube" => Ok(Level::Tube),
            other => Err(format!("unknown level '{other}' (expected virtual|welded|tube)")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Level::Virtual => "virtual",
            Level::Welded => "welded",
            Level::Tube => "tube",
        })
    }
}

/// The coloring targets a battery is computed over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub groups: Vec<FiniteGroup>,
    pub quandles: Vec<FiniteQuandle>,
}

impl Default for Palette {
    fn default() -> Self {
        Self::from_names(DEFAULT_GROUPS, DEFAULT_QUANDLES).expect("default palette")
    }
}

impl Palette {
    pub fn from_names<S: AsRef<str>>(groups: &[S], quandles: &[S]) -> Result<Self, TableError> {
        Ok(Self {
            groups: groups.iter().map(|g| FiniteGroup::builtin(g.as_ref())).collect::<Result<_, _>>()?,
            quandles: quandles.iter().map(|q| FiniteQuandle::builtin(q.as_ref())).collect::<Result<_, _>>()?,
        })
    }

    pub fn descriptor(&self) -> PaletteDescriptor {
        PaletteDescriptor {
            version: PALETTE_VERSION.to_string(),
            groups: self.groups.iter().map(|g| g.name().to_string()).collect(),
            quandles: self.quandles.iter().map(|q| q.name().to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaletteDescriptor {
    pub version: String,
    pub groups: Vec<String>,
    pub quandles: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryEntries {
    pub alexander: LaurentPoly,
    pub hom_counts: BTreeMap<String, u64>,
    pub quandle_counts: BTreeMap<String, u64>,
    pub peripheral_multisets: BTreeMap<String, PeripheralMultiset>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f_polynomial: Option<LaurentPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBattery {
    pub level: Level,
    pub palette: PaletteDescriptor,
    pub entries: BatteryEntries,
}

impl InvariantBattery {
    /// Name of the first entry that differs, in the order alexander,
    /// hom counts, quandle counts, peripheral multisets, f-polynomial.
    ///
    /// Panics if the batteries were computed at different levels or over
    /// different palettes; such batteries are not comparable.
    pub fn first_difference(&self, other: &InvariantBattery) -> Option<String> {
        assert_eq!(self.level, other.level, "batteries compare only at equal level");
        assert_eq!(self.palette, other.palette, "batteries compare only over one palette");
        let (a, b) = (&self.entries, &other.entries);
        if a.alexander != b.alexander {
            return Some("alexander".into());
        }
        for (name, n) in &a.hom_counts {
            if b.hom_counts.get(name) != Some(n) {
                return Some(format!("hom_counts[{name}]"));
            }
        }
        for (name, n) in &a.quandle_counts {
            if b.quandle_counts.get(name) != Some(n) {
                return Some(format!("quandle_counts[{name}]"));
            }
        }
        for (name, ms) in &a.peripheral_multisets {
            if b.peripheral_multisets.get(name) != Some(ms) {
                return Some(format!("peripheral_multisets[{name}]"));
            }
        }
        if a.f_polynomial != b.f_polynomial {
            return Some("f_polynomial".into());
        }
        None
    }
}

/// Computes the battery of `code` at `level` over `palette`.
pub fn battery(code: &GaussCode, level: Level, palette: &Palette) -> InvariantBattery {
    battery_from_peripheral(code, &peripheral(code), level, palette)
}

pub(crate) fn battery_from_peripheral(
    code: &GaussCode,
    ps: &PeripheralStructure,
    level: Level,
    palette: &Palette,
) -> InvariantBattery {
    let mut hom_counts = BTreeMap::new();
    let mut peripheral_multisets = BTreeMap::new();
    for g in &palette.groups {
        let (count, welded, tube) = colorings::peripheral_summary(ps, g);
        hom_counts.insert(g.name().to_string(), count);
        let ms = if level == Level::Tube { tube } else { welded };
        peripheral_multisets.insert(g.name().to_string(), ms);
    }
    let quandle_counts = palette
        .quandles
        .iter()
        .map(|q| (q.name().to_string(), quandle_colorings(code, q)))
        .collect();
    InvariantBattery {
        level,
        palette: palette.descriptor(),
        entries: BatteryEntries {
            alexander: alexander(&ps.group),
            hom_counts,
            quandle_counts,
            peripheral_multisets,
            f_polynomial: (level == Level::Virtual).then(|| f_polynomial(code)),
        },
    }
}
