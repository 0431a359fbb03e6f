//! Exact integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `Σ c_e x^e` with integer coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Dense coefficients starting at exponent 0.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as i32, c)))
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    /// `±x^k`, the units of `Z[x, x^-1]`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs() == 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the exponent range; `None` for zero.
    pub fn span(&self) -> Option<i32> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect() }
    }

    /// Substitutes `x -> x^-1`.
    pub fn invert_variable(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a unit `±x^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms().next()?;
        Some(Self::monomial(c, -e))
    }

    /// Gcd of the coefficients (non-negative).
    pub fn content(&self) -> i64 {
        self.terms.values().fold(0, |g, &c| gcd_i64(g, c))
    }

    /// Multiplies by the unit `±x^k` that makes the lowest exponent 0 and
    /// the lowest-degree coefficient positive.
    pub fn normalized(&self) -> Self {
        match self.terms.iter().next() {
            None => Self::zero(),
            Some((&e, &c)) => self.shift(-e).scale(if c < 0 { -1 } else { 1 }),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in `Z[x, x^-1]`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = d.min_exp()?;
        let d_hi = d.max_exp()?;
        let d_lead = d.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Dividing by the leading term; stop once the remainder's span is
        // below the divisor's.
        while let (Some(r_lo), Some(r_hi)) = (rem.min_exp(), rem.max_exp()) {
            if r_hi - r_lo < d_hi - d_lo {
                return None;
            }
            let c = rem.coeff(r_hi);
            if c % d_lead != 0 {
                return None;
            }
            let q = LaurentPoly::monomial(c / d_lead, r_hi - d_hi);
            rem -= &(&q * d);
            quot += &q;
        }
        Some(quot)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().map(|(&e, &c)| (e, c)).enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }

    /// Gcd in `Z[x, x^-1]`, normalized; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let c = gcd_i64(self.content(), other.content());
        let mut a = primitive_part(&self.normalized());
        let mut b = primitive_part(&other.normalized());
        if a.span() < b.span() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = primitive_part(&r.normalized());
        }
        a.normalized().scale(c)
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn primitive_part(p: &LaurentPoly) -> LaurentPoly {
    let c = p.content();
    if c <= 1 {
        return p.clone();
    }
    LaurentPoly { terms: p.terms.iter().map(|(&e, &v)| (e, v / c)).collect() }
}

/// Pseudo-remainder of polynomials (exponents ≥ 0 after normalization).
fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let b = b.normalized();
    let b_deg = b.max_exp().unwrap_or(0);
    let b_lead = b.coeff(b_deg);
    let mut r = a.normalized();
    while let Some(r_deg) = r.max_exp() {
        if r.is_zero() || r_deg < b_deg {
            break;
        }
        let r_lead = r.coeff(r_deg);
        r = &r.scale(b_lead) - &b.shift(r_deg - b_deg).scale(r_lead);
        // Lowest exponent may drift below 0 only if b had negative powers,
        // which normalization rules out.
    }
    r
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.terms().collect::<Vec<(i32, i64)>>().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(i32, i64)> = Vec::deserialize(deserializer)?;
        Ok(LaurentPoly::from_terms(raw))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

/// Square matrix determinant: cofactor expansion up to 6×6, fraction-free
/// Bareiss elimination above.
pub fn determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    if m.len() <= 6 {
        determinant_cofactor(m)
    } else {
        determinant_bareiss(m)
    }
}

pub fn determinant_cofactor(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    let cols: Vec<usize> = (0..n).collect();
    cofactor_rec(m, 0, &cols)
}

fn cofactor_rec(m: &[Vec<LaurentPoly>], row: usize, cols: &[usize]) -> LaurentPoly {
    if cols.is_empty() {
        return LaurentPoly::one();
    }
    let mut acc = LaurentPoly::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor_rec(m, row + 1, &rest);
        let term = entry * &minor;
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

pub fn determinant_bareiss(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(coeffs)
    }

    #[test]
    fn zero_coefficients_dropped() {
        let a = LaurentPoly::from_terms([(1, 2), (1, -2), (0, 1)]);
        assert_eq!(a, LaurentPoly::one());
        assert_eq!((&a - &a), LaurentPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]).to_string_in("A"), "A^-4 + A^-12 - A^-16");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn normalization() {
        let q = LaurentPoly::from_terms([(-3, -1), (-2, 3), (-1, -1)]);
        assert_eq!(q.normalized(), p(&[1, -3, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, -1, 1]);
        let b = p(&[2, 0, 1]);
        let prod = &a * &b.shift(-3);
        assert_eq!(prod.exact_div(&a), Some(b.shift(-3)));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[2])), None);
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])), None);
    }

    #[test]
    fn gcd_basics() {
        let a = p(&[1, -1, 1]);
        let b = p(&[1, -3, 1]);
        assert!(a.gcd(&b).is_one());
        let c = &a * &b;
        let d = &(&a * &p(&[2, 0, 1])).scale(6) * &LaurentPoly::monomial(-1, -5);
        assert_eq!(c.gcd(&d), a);
        assert_eq!(p(&[4, 8]).gcd(&p(&[6, 12])), p(&[2, 4]));
        assert_eq!(LaurentPoly::zero().gcd(&a.shift(3).scale(-1)), a);
    }

    #[test]
    fn determinants_agree() {
        let t = LaurentPoly::var();
        let m: Vec<Vec<LaurentPoly>> = (0..7)
            .map(|i| {
                (0..7)
                    .map(|j| {
                        let base = LaurentPoly::monomial(((i * 3 + j * 5) % 7) as i64 - 3, (i - j) % 3);
                        if i == j { &base + &t } else { base }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(determinant_cofactor(&m), determinant_bareiss(&m));
    }
}
