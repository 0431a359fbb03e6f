//! Alexander polynomial by Fox calculus.
//!
//! The abelianized Fox Jacobian of a Wirtinger presentation has columns
//! summing to zero, so one column is dropped. For classical diagrams every
//! remaining maximal minor agrees up to a unit. For welded diagrams the
//! relations need not have a redundant member, so the polynomial is taken
//! as the gcd of all maximal minors, i.e. the generator of the smallest
//! principal ideal containing the first elementary ideal. Entries that are
//! units are eliminated first, which leaves that ideal unchanged and keeps
//! the final determinants small.

use crate::knotgroup::{Presentation, Word};

use super::laurent::{determinant, LaurentPoly};

/// Abelianized Fox derivative `∂w/∂x_g` with every generator sent to `t`.
pub fn fox_derivative(w: &Word, g: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut prefix = 0i32;
    for &(h, e) in w.letters() {
        if e > 0 {
            if h == g {
                out.add_term(prefix, 1);
            }
            prefix += 1;
        } else {
            prefix -= 1;
            if h == g {
                out.add_term(prefix, -1);
            }
        }
    }
    out
}

/// Rows are relators, columns generators.
pub fn fox_jacobian(p: &Presentation) -> Vec<Vec<LaurentPoly>> {
    p.relations
        .iter()
        .map(|r| (0..p.generator_count).map(|g| fox_derivative(r, g)).collect())
        .collect()
}

/// Normalized Alexander polynomial. The zero polynomial is returned only
/// when every maximal minor vanishes.
pub fn alexander(p: &Presentation) -> LaurentPoly {
    if p.generator_count <= 1 {
        // the only column is the dropped one
        return LaurentPoly::one();
    }
    let mut m = fox_jacobian(p);
    // drop the last column
    for row in &mut m {
        row.pop();
    }
    let m = eliminate_unit_pivots(m, p.generator_count - 1);
    gcd_of_maximal_minors(&m.rows, m.cols)
}

struct Reduced {
    rows: Vec<Vec<LaurentPoly>>,
    cols: usize,
}

/// Repeatedly pivots on a unit entry, clearing its column and deleting its
/// row and column.
fn eliminate_unit_pivots(mut rows: Vec<Vec<LaurentPoly>>, mut cols: usize) -> Reduced {
    rows.retain(|r| r.iter().any(|e| !e.is_zero()));
    loop {
        let pivot = rows
            .iter()
            .enumerate()
            .find_map(|(i, r)| r.iter().position(LaurentPoly::is_unit).map(|j| (i, j)));
        let Some((pi, pj)) = pivot else { break };
        let pivot_row = rows.swap_remove(pi);
        let inv = pivot_row[pj].unit_inverse().expect("unit pivot");
        for row in rows.iter_mut() {
            if row[pj].is_zero() {
                continue;
            }
            let factor = &row[pj] * &inv;
            for (j, entry) in row.iter_mut().enumerate() {
                if !pivot_row[j].is_zero() {
                    *entry -= &(&factor * &pivot_row[j]);
                }
            }
        }
        for row in rows.iter_mut() {
            row.remove(pj);
        }
        cols -= 1;
        rows.retain(|r| r.iter().any(|e| !e.is_zero()));
    }
    Reduced { rows, cols }
}

fn gcd_of_maximal_minors(rows: &[Vec<LaurentPoly>], cols: usize) -> LaurentPoly {
    if cols == 0 {
        return LaurentPoly::one();
    }
    if rows.len() < cols {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::zero();
    for subset in combinations(rows.len(), cols) {
        let minor: Vec<Vec<LaurentPoly>> = subset.iter().map(|&i| rows[i].clone()).collect();
        acc = acc.gcd(&determinant(&minor));
        if acc.is_one() {
            break;
        }
    }
    acc.normalized()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
