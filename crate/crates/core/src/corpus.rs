//! Built-in knot corpus with frozen Alexander polynomials.
//!
//! Classical entries were transcribed from closed-braid words and are
//! accepted only because their computed Alexander polynomial matches the
//! table value; `verify` re-checks this.

use serde::{Deserialize, Serialize};

use crate::codec::GaussCode;
use crate::invariants::{alexander, LaurentPoly};
use crate::knotgroup::wirtinger;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub code: GaussCode,
    pub expected_alexander: LaurentPoly,
    pub classical_origin: bool,
    pub chiral_classical: bool,
}

/// (name, code, Alexander coefficients from t^0 up, classical, chiral)
const RAW: &[(&str, &str, &[i64], bool, bool)] = &[
    ("0_1", "", &[1], true, false),
    ("3_1", "O1+U2+O3+U1+O2+U3+", &[1, -1, 1], true, true),
    ("4_1", "O1+U2-O4-U1+O3+U4-O2-U3+", &[1, -3, 1], true, false),
    ("5_1", "O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+", &[1, -1, 1, -1, 1], true, true),
    ("5_2", "O1+U2+O3+O4+U6+U1+O2+U3+U5-O6+U4+O5-", &[2, -3, 2], true, true),
    ("6_1", "O1+U2+U4-O6+U7-O5-U6+U1+O2+O3+U5-O7-U3+O4-", &[2, -5, 2], true, true),
    ("6_2", "O1+U2+O3+U4-O6-U1+O2+U3+O5+U6-O4-U5+", &[1, -3, 3, -3, 1], true, true),
    ("6_3", "O1+U2+O4+U5-O6-U1+O2+U3-O5-U6-O3-U4+", &[1, -3, 5, -3, 1], true, false),
    ("7_1", "O1+U2+O3+U4+O5+U6+O7+U1+O2+U3+O4+U5+O6+U7+", &[1, -1, 1, -1, 1, -1, 1], true, true),
    ("virtual_trefoil", "O1-O2-U1-U2-", VIRTUAL_TREFOIL_ALEXANDER, false, false),
];

const VIRTUAL_TREFOIL_ALEXANDER: &[i64] = &[1];

/// The built-in corpus, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    RAW.iter()
        .map(|&(name, code, coeffs, classical_origin, chiral_classical)| CorpusEntry {
            name: name.to_string(),
            code: GaussCode::parse(code).expect("corpus codes are valid"),
            expected_alexander: LaurentPoly::from_coeffs(coeffs),
            classical_origin,
            chiral_classical,
        })
        .collect()
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// The right-handed trefoil.
pub fn trefoil() -> GaussCode {
    entry("3_1").expect("corpus has 3_1").code
}

pub fn figure_eight() -> GaussCode {
    entry("4_1").expect("corpus has 4_1").code
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCheck {
    pub name: String,
    pub expected: LaurentPoly,
    pub computed: LaurentPoly,
    pub ok: bool,
}

/// Recomputes the Alexander polynomial of every entry.
pub fn verify(entries: &[CorpusEntry]) -> Vec<CorpusCheck> {
    entries
        .iter()
        .map(|e| {
            let computed = alexander(&wirtinger(&e.code));
            CorpusCheck { name: e.name.clone(), expected: e.expected_alexander.clone(), ok: computed == e.expected_alexander, computed }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_corpus_verifies() {
        for check in verify(&corpus()) {
            assert!(check.ok, "{}: expected {} got {}", check.name, check.expected, check.computed);
        }
    }

    #[test]
    fn names_are_unique() {
        let c = corpus();
        let mut names: Vec<_> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }
}
