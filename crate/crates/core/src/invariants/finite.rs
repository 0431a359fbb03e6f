//! Finite groups and quandles used as coloring targets.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("{name}: table has wrong shape")]
    Shape { name: String },
    #[error("{name}: entry out of range")]
    Range { name: String },
    #[error("{name}: {law} fails at {witness:?}")]
    Law { name: String, law: &'static str, witness: Vec<usize> },
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
}

/// A finite group given by its multiplication table on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table, checking the
    /// group axioms.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self, TableError> {
        let name = name.into();
        if order == 0 || table.len() != order * order {
            return Err(TableError::Shape { name });
        }
        if table.iter().any(|&x| x >= order) {
            return Err(TableError::Range { name });
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(TableError::Law { name, law: "associativity", witness: vec![a, b, c] });
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| TableError::Law { name: name.clone(), law: "identity", witness: vec![] })?;
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| TableError::Law { name: name.clone(), law: "inverse", witness: vec![a] })?;
            inverse.push(inv);
        }
        Ok(Self { name, order, table, identity, inverse })
    }

    /// Group generated by permutations of `0..degree`; elements are numbered
    /// in sorted order of their images, so the identity is element 0.
    pub fn from_permutations(name: impl Into<String>, generators: &[Vec<usize>]) -> Self {
        let degree = generators.first().map_or(1, Vec::len);
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::from([(identity, ())]);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let p = compose(&elements[i], g);
                if seen.insert(p.clone(), ()).is_none() {
                    elements.push(p);
                }
            }
            i += 1;
        }
        elements.sort();
        let index: HashMap<Vec<usize>, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        Self::from_table(name, n, table).expect("permutation groups satisfy the axioms")
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::from_table(format!("Z{n}"), n, table).expect("cyclic group")
    }

    /// Dihedral group of order `2n` (symmetries of an `n`-gon), named `D{n}`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3, "dihedral groups need n >= 3");
        let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(format!("D{n}"), &[rotation, reflection])
    }

    pub fn symmetric(k: usize) -> Self {
        assert!(k >= 2);
        let swap: Vec<usize> = (0..k).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        Self::from_permutations(format!("S{k}"), &[swap, cycle])
    }

    pub fn alternating4() -> Self {
        Self::from_permutations("A4", &[vec![1, 2, 0, 3], vec![0, 2, 3, 1]])
    }

    /// Looks up a built-in group: `Z<n>`, `D<n>`, `S3`, `S4`, `A4`.
    pub fn builtin(name: &str) -> Result<Self, TableError> {
        let unknown = || TableError::Unknown { kind: "group", name: name.to_string() };
        match name {
            "S3" => return Ok(Self::symmetric(3)),
            "S4" => return Ok(Self::symmetric(4)),
            "A4" => return Ok(Self::alternating4()),
            _ => {}
        }
        let (prefix, digits) = name.split_at(1.min(name.len()));
        let n: usize = digits.parse().map_err(|_| unknown())?;
        match prefix {
            "Z" if (1..=24).contains(&n) => Ok(Self::cyclic(n)),
            "D" if (3..=6).contains(&n) => Ok(Self::dihedral(n)),
            _ => Err(unknown()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // apply p, then q
    p.iter().map(|&i| q[i]).collect()
}

/// A finite quandle given by `a * b` and `a *^-1 b` tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    name: String,
    order: usize,
    op: Vec<usize>,
    inv_op: Vec<usize>,
}

impl FiniteQuandle {
    /// Checks idempotence, right invertibility and self-distributivity.
    pub fn from_tables(name: impl Into<String>, order: usize, op: Vec<usize>, inv_op: Vec<usize>) -> Result<Self, TableError> {
        let name = name.into();
        if order == 0 || op.len() != order * order || inv_op.len() != order * order {
            return Err(TableError::Shape { name });
        }
        if op.iter().chain(inv_op.iter()).any(|&x| x >= order) {
            return Err(TableError::Range { name });
        }
        let star = |a: usize, b: usize| op[a * order + b];
        let unstar = |a: usize, b: usize| inv_op[a * order + b];
        for a in 0..order {
            if star(a, a) != a {
                return Err(TableError::Law { name, law: "idempotence", witness: vec![a] });
            }
            for b in 0..order {
                if unstar(star(a, b), b) != a || star(unstar(a, b), b) != a {
                    return Err(TableError::Law { name, law: "invertibility", witness: vec![a, b] });
                }
                for c in 0..order {
                    if star(star(a, b), c) != star(star(a, c), star(b, c)) {
                        return Err(TableError::Law { name, law: "self-distributivity", witness: vec![a, b, c] });
                    }
                }
            }
        }
        Ok(Self { name, order, op, inv_op })
    }

    /// Dihedral quandle `R_n`: `a * b = 2b - a mod n`.
    pub fn dihedral(n: usize) -> Self {
        let op: Vec<usize> = (0..n * n).map(|k| (2 * (k % n) + n - k / n) % n).collect();
        Self::from_tables(format!("R{n}"), n, op.clone(), op).expect("dihedral quandle")
    }

    /// Conjugation quandle of a group: `a * b = b^-1 a b`.
    pub fn conjugation(group: &FiniteGroup) -> Self {
        let n = group.order();
        let op = (0..n * n).map(|k| group.conjugate(k / n, k % n)).collect();
        let inv_op = (0..n * n).map(|k| group.conjugate(k / n, group.inv(k % n))).collect();
        Self::from_tables(format!("Conj({})", group.name()), n, op, inv_op).expect("conjugation quandle")
    }

    /// Looks up a built-in quandle: `R<n>` for `3 <= n <= 9`.
    pub fn builtin(name: &str) -> Result<Self, TableError> {
        let n: Option<usize> = name.strip_prefix('R').and_then(|d| d.parse().ok());
        match n {
            Some(n) if (3..=9).contains(&n) => Ok(Self::dihedral(n)),
            _ => Err(TableError::Unknown { kind: "quandle", name: name.to_string() }),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.order + b]
    }

    #[inline]
    pub fn inv_op(&self, a: usize, b: usize) -> usize {
        self.inv_op[a * self.order + b]
    }
}
