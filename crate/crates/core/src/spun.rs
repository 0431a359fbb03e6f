//! Tube-level certificates and classification verdicts.
//!
//! A Tube certificate is everything the invariants can see of the ribbon
//! torus `Tube(K)`: the knot group, the meridian, and the longitude up to
//! inverse, all read through finite colorings. Comparisons only ever refute
//! equivalence; equal batteries give `NotDistinguished`, never a claim of
//! isotopy.

use serde::{Deserialize, Serialize};

use crate::codec::GaussCode;
use crate::invariants::{battery, battery_from_peripheral, f_polynomial, InvariantBattery, LaurentPoly, Level, Palette};
use crate::knotgroup::{peripheral, PeripheralStructure};

pub const NOTE_TUBE_PRESERVES: &str =
    "Tube preserves the knot group, the meridian and the longitude up to inverse, so differing Tube batteries rule out isotopic tori";
pub const NOTE_SPUN_DICHOTOMY: &str =
    "for classical K, K': Tube(K) and Tube(K') (equivalently the oriented spun tori) are isotopic iff K = K' or K = -K'*";
pub const NOTE_CONVERSE_OPEN: &str =
    "equal batteries do not certify isotopy; the verdict stays NotDistinguished";
pub const NOTE_CLASSICAL_EMBEDS: &str =
    "classical knots that are welded equivalent are classically isotopic, so a classical invariant separating two classical diagrams separates them as welded knots";
pub const NOTE_F_NOT_WELDED: &str =
    "the f-polynomial is a virtual invariant, not a welded one; it is consulted only for diagrams flagged as classical";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TubeCertificate {
    pub source: GaussCode,
    pub peripheral: PeripheralStructure,
    pub tube_battery: InvariantBattery,
}

/// Certificates are equal exactly when their Tube batteries are.
impl PartialEq for TubeCertificate {
    fn eq(&self, other: &Self) -> bool {
        self.tube_battery == other.tube_battery
    }
}

impl Eq for TubeCertificate {}

pub fn tube_certificate(code: &GaussCode, palette: &Palette) -> TubeCertificate {
    let ps = peripheral(code);
    let tube_battery = battery_from_peripheral(code, &ps, Level::Tube, palette);
    TubeCertificate { source: code.clone(), peripheral: ps, tube_battery }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Distinguished,
    DistinguishedClassically,
    NotDistinguished,
}

impl Outcome {
    pub fn is_distinguished(self) -> bool {
        self != Outcome::NotDistinguished
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

fn comparison_note(label: &str, a: &InvariantBattery, b: &InvariantBattery) -> String {
    match a.first_difference(b) {
        Some(w) => format!("{label}: welded batteries differ at {w}"),
        None => format!("{label}: welded batteries agree"),
    }
}

/// Compares the Tube batteries of `k` and `k2`.
pub fn spun_compare(k: &GaussCode, k2: &GaussCode, palette: &Palette) -> Verdict {
    let a = tube_certificate(k, palette);
    let b = tube_certificate(k2, palette);
    if let Some(w) = a.tube_battery.first_difference(&b.tube_battery) {
        return Verdict { outcome: Outcome::Distinguished, witness: Some(w), notes: vec![NOTE_TUBE_PRESERVES.into()] };
    }
    let wk = battery(k, Level::Welded, palette);
    let direct = battery(k2, Level::Welded, palette);
    let flipped = battery(&k2.reverse_mirror(), Level::Welded, palette);
    Verdict {
        outcome: Outcome::NotDistinguished,
        witness: None,
        notes: vec![
            NOTE_SPUN_DICHOTOMY.into(),
            NOTE_CONVERSE_OPEN.into(),
            comparison_note("(K, K')", &wk, &direct),
            comparison_note("(K, -K'*)", &wk, &flipped),
        ],
    }
}

/// Compares welded batteries; when they agree and both diagrams are flagged
/// classical, falls back to the virtual battery (adding the f-polynomial).
pub fn welded_compare(k: &GaussCode, k2: &GaussCode, classical: (bool, bool), palette: &Palette) -> Verdict {
    let a = battery(k, Level::Welded, palette);
    let b = battery(k2, Level::Welded, palette);
    if let Some(w) = a.first_difference(&b) {
        return Verdict { outcome: Outcome::Distinguished, witness: Some(w), notes: vec![] };
    }
    if classical.0 && classical.1 {
        let fa = f_polynomial(k);
        let fb = f_polynomial(k2);
        if fa != fb {
            return Verdict {
                outcome: Outcome::DistinguishedClassically,
                witness: Some("f_polynomial".into()),
                notes: vec![NOTE_CLASSICAL_EMBEDS.into(), NOTE_F_NOT_WELDED.into()],
            };
        }
    }
    Verdict { outcome: Outcome::NotDistinguished, witness: None, notes: vec![NOTE_CONVERSE_OPEN.into()] }
}

/// Evidence that `Tube` identifies `K` with `-K^↑` even when the two are
/// inequivalent welded knots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubeNonInjectivity {
    pub knot: GaussCode,
    pub partner: GaussCode,
    pub tube_certificates_equal: bool,
    pub f_knot: LaurentPoly,
    pub f_partner: LaurentPoly,
    pub f_polynomials_differ: bool,
    pub f_related_by_inversion: bool,
    pub verdict: Verdict,
}

impl TubeNonInjectivity {
    pub fn holds(&self) -> bool {
        self.tube_certificates_equal
            && self.f_polynomials_differ
            && self.f_related_by_inversion
            && self.verdict.outcome == Outcome::DistinguishedClassically
    }
}

/// Runs the comparison for a classical, chiral `knot` and `-knot^↑`.
pub fn tube_non_injectivity(knot: &GaussCode, palette: &Palette) -> TubeNonInjectivity {
    let partner = knot.reverse_vreflect();
    let tube_certificates_equal = tube_certificate(knot, palette) == tube_certificate(&partner, palette);
    let f_knot = f_polynomial(knot);
    let f_partner = f_polynomial(&partner);
    let verdict = welded_compare(knot, &partner, (true, true), palette);
    TubeNonInjectivity {
        knot: knot.clone(),
        partner,
        tube_certificates_equal,
        f_polynomials_differ: f_knot != f_partner,
        f_related_by_inversion: f_knot.invert_variable() == f_partner,
        f_knot,
        f_partner,
        verdict,
    }
}
