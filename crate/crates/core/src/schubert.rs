//! Schubert calculus on `Gr(2,n)`: Pieri products, the fundamental class of
//! the congruence `T(2,n)`, intersection numbers, and the index-3
//! divisibility procedure.
//!
//! The Pieri-based integration oracle is the single source of truth here;
//! the closed degree formula and the closed forms for the auxiliary numbers
//! `a_n`, `b_n` are evaluated for comparison and reported, never asserted.
//! A second oracle (a two-row skew-tableau count) cross-checks the pairing
//! for small `n`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::partitions::binomial;
use crate::{Error, Result};

/// An integer combination of Schubert classes `σ_(a,b)` on `Gr(2,n)`,
/// with `n−2 ≥ a ≥ b ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertExpr {
    n: usize,
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl SchubertExpr {
    pub fn zero(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange(format!("Gr(2,{n}) needs n ≥ 3")));
        }
        Ok(Self {
            n,
            coeffs: BTreeMap::new(),
        })
    }

    /// The fundamental class of the ambient Grassmannian, `σ_(0,0)`.
    pub fn one(n: usize) -> Result<Self> {
        Self::sigma(n, 0, 0)
    }

    /// A single Schubert class.
    pub fn sigma(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut out = Self::zero(n)?;
        out.add_term(a, b, BigInt::from(1))?;
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.coeffs.get(&(a, b)).cloned().unwrap_or(BigInt::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: BigInt) -> Result<()> {
        if a < b || a > self.n - 2 {
            return Err(Error::BoxViolation(format!(
                "σ_({a},{b}) outside the 2×{} box",
                self.n - 2
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry((a, b)).or_insert(BigInt::ZERO);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(a, b));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch("mixed ambient parameters".into()));
        }
        let mut out = self.clone();
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self {
            n: self.n,
            coeffs: BTreeMap::new(),
        };
        for (&k, v) in &self.coeffs {
            let prod = v * c;
            if !prod.is_zero() {
                out.coeffs.insert(k, prod);
            }
        }
        out
    }

    /// Pieri product with the special class `σ_j`: horizontal strips inside
    /// the `2×(n−2)` box. Products falling outside the box vanish.
    pub fn mul_special(&self, j: usize) -> Self {
        let top = self.n - 2;
        let mut out = Self {
            n: self.n,
            coeffs: BTreeMap::new(),
        };
        for (&(a, b), v) in &self.coeffs {
            // New shape (c, d) ⊇ (a, b) with c + d = a + b + j and the
            // added boxes forming a horizontal strip: b ≤ d ≤ a.
            for d in b..=a {
                let total = a + b + j;
                if total < d {
                    continue;
                }
                let c = total - d;
                if c < d || c < a || c > top {
                    continue;
                }
                let slot = out.coeffs.entry((c, d)).or_insert(BigInt::ZERO);
                *slot += v;
                if slot.is_zero() {
                    out.coeffs.remove(&(c, d));
                }
            }
        }
        out
    }

    /// Multiplication by the hyperplane class `h = σ_1`.
    pub fn mul_h(&self) -> Self {
        self.mul_special(1)
    }

    /// Multiplication by `σ_(1,1)`: adds one box to each row.
    pub fn mul_sigma11(&self) -> Self {
        let top = self.n - 2;
        let mut out = Self {
            n: self.n,
            coeffs: BTreeMap::new(),
        };
        for (&(a, b), v) in &self.coeffs {
            if a < top {
                out.coeffs.insert((a + 1, b + 1), v.clone());
            }
        }
        out
    }

    /// `h^m`.
    pub fn h_power(n: usize, m: usize) -> Result<Self> {
        let mut acc = Self::one(n)?;
        for _ in 0..m {
            acc = acc.mul_h();
        }
        Ok(acc)
    }

    /// Total codimension when homogeneous.
    pub fn codimension(&self) -> Option<usize> {
        let mut deg = None;
        for &(a, b) in self.coeffs.keys() {
            match deg {
                None => deg = Some(a + b),
                Some(d) if d != a + b => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn describe(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&(a, b), c) in &self.coeffs {
            parts.push(format!("{c}·σ_({a},{b})"));
        }
        parts.join(" + ")
    }
}

/// The fundamental class `[T(2,n)] = c_(n−2)(Q*(1))`, expanded in the
/// Schubert basis as `Σ_j (−1)^j σ_j h^(n−2−j)`; the result is effective.
pub fn fundamental_class_t2(n: usize) -> Result<SchubertExpr> {
    if n < 5 {
        return Err(Error::OutOfRange(format!(
            "T(2,{n}) needs n ≥ 5 for the class expansion"
        )));
    }
    let mut acc = SchubertExpr::zero(n)?;
    for j in 0..=(n - 2) {
        let term = SchubertExpr::h_power(n, n - 2 - j)?.mul_special(j);
        let signed = if j % 2 == 0 {
            term
        } else {
            term.scale(&BigInt::from(-1))
        };
        acc = acc.add(&signed)?;
    }
    for (key, c) in acc.iter() {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient(format!(
                "[T(2,{n})] at σ_{key:?}"
            )));
        }
    }
    if acc.is_zero() {
        return Err(Error::Inconsistency(format!("[T(2,{n})] vanished")));
    }
    Ok(acc)
}

/// The same class from the alternative expansion
/// `σ_(1,1) Σ_i h^(n−2i−3) σ_(2i−1) + δ_(n even) σ_(n−2)`, with the
/// summation restricted to `n − 2i − 3 ≥ 0`.
pub fn fundamental_class_t2_alternative(n: usize) -> Result<SchubertExpr> {
    if n < 5 {
        return Err(Error::OutOfRange(format!("needs n ≥ 5, got {n}")));
    }
    let mut inner = SchubertExpr::zero(n)?;
    let mut i = 1usize;
    while n >= 2 * i + 3 {
        let power = n - 2 * i - 3;
        inner = inner.add(&SchubertExpr::h_power(n, power)?.mul_special(2 * i - 1))?;
        i += 1;
    }
    let mut acc = inner.mul_sigma11();
    if n.is_multiple_of(2) {
        acc = acc.add(&SchubertExpr::sigma(n, n - 2, 0)?)?;
    }
    Ok(acc)
}

/// `∫_(Gr(2,n)) [T(2,n)] · expr` by the Poincaré pairing
/// `⟨σ_(a,b), σ_(n−2−b, n−2−a)⟩ = 1`. The expression must be homogeneous of
/// the complementary codimension `n − 2`.
pub fn intersection_number(n: usize, expr: &SchubertExpr) -> Result<BigInt> {
    if expr.n() != n {
        return Err(Error::DegreeMismatch(format!(
            "expression lives on Gr(2,{}), not Gr(2,{n})",
            expr.n()
        )));
    }
    match expr.codimension() {
        Some(c) if c == n - 2 => {}
        Some(c) => {
            return Err(Error::DegreeMismatch(format!(
                "expected codimension {}, got {c}",
                n - 2
            )))
        }
        None => {
            return Err(Error::DegreeMismatch(
                "expression is not homogeneous".into(),
            ))
        }
    }
    let class = fundamental_class_t2(n)?;
    let top = n - 2;
    let mut total = BigInt::ZERO;
    for (&(a, b), c) in &class.coeffs {
        total += c * expr.coeff(top - b, top - a);
    }
    Ok(total)
}

/// `deg T(2,n) = ∫ [T(2,n)] h^(n−2)`.
pub fn degree_oracle(n: usize) -> Result<BigInt> {
    intersection_number(n, &SchubertExpr::h_power(n, n - 2)?)
}

/// Number of standard Young tableaux of a two-row skew shape
/// `(outer₁, outer₂)/(inner₁, inner₂)`, by the two-by-two determinant
/// formula `C(m, o₁−i₁) − C(m, o₁−i₂+1)`. A second oracle for the pairing.
pub fn skew_syt_two_rows(outer: (usize, usize), inner: (usize, usize)) -> BigUint {
    let (o1, o2) = outer;
    let (i1, i2) = inner;
    if o1 < o2 || i1 < i2 || o1 < i1 || o2 < i2 {
        return BigUint::ZERO;
    }
    let m = (o1 + o2 - i1 - i2) as u64;
    let first = binomial(m, (o1 - i1) as u64);
    let second = if o1 + 1 >= i2 {
        binomial(m, (o1 + 1 - i2) as u64)
    } else {
        BigUint::ZERO
    };
    if second > first {
        BigUint::ZERO
    } else {
        first - second
    }
}

/// Policy for evaluating the closed degree sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangePolicy {
    /// Every term with a nonzero binomial, exactly as the sum is written.
    AsPrinted,
    /// Only terms with `n − 2i − 3 ≥ 0`.
    Restricted,
}

/// The closed degree sum
/// `Σ_{i≥1} (2i/(n−2)) C(2n−2i−5, n−2i−2) + δ_(n even)`.
/// Evaluated exactly; fails if the sum is not an integer.
pub fn degree_closed_formula(n: usize, policy: RangePolicy) -> Result<BigInt> {
    if n < 5 {
        return Err(Error::OutOfRange(format!("needs n ≥ 5, got {n}")));
    }
    let mut numerator = BigInt::ZERO;
    let mut i = 1usize;
    loop {
        if 2 * i + 2 > n {
            break;
        }
        let lower = n - 2 * i - 2;
        if policy == RangePolicy::Restricted && lower == 0 {
            break;
        }
        let upper = 2 * n - 2 * i - 5;
        numerator +=
            BigInt::from(2 * i as u64) * BigInt::from(binomial(upper as u64, lower as u64));
        i += 1;
    }
    if n.is_multiple_of(2) {
        numerator += BigInt::from((n - 2) as u64);
    }
    let den = BigInt::from((n - 2) as u64);
    if (&numerator % &den) != BigInt::ZERO {
        return Err(Error::InexactDivision(format!(
            "closed degree sum not divisible by n − 2 at n = {n}"
        )));
    }
    Ok(numerator / den)
}

/// The oracle values `a_n = ∫ h σ_(n−3) [T]` and `b_n = ∫ h² σ_(n−4) [T]`.
pub fn lemma_numbers_oracle(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 6 {
        return Err(Error::OutOfRange(format!("needs n ≥ 6, got {n}")));
    }
    let a = intersection_number(n, &SchubertExpr::sigma(n, n - 3, 0)?.mul_h())?;
    let b = intersection_number(n, &SchubertExpr::sigma(n, n - 4, 0)?.mul_h().mul_h())?;
    Ok((a, b))
}

/// The closed forms `a_n = (n+ε−4)/2`, `b_n = (n²−ε−12)/4` with
/// `ε = n mod 2`. Reported for comparison with the oracle, never asserted.
pub fn lemma_numbers_closed(n: usize) -> (BigInt, BigInt) {
    let eps = (n % 2) as i64;
    let a = (n as i64 + eps - 4) / 2;
    let b = ((n * n) as i64 - eps - 12) / 4;
    (BigInt::from(a), BigInt::from(b))
}

/// Why `m`-divisibility of the hyperplane class was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexWitness {
    /// `m^(n−2)` does not divide the degree.
    DegreeNotDivisible { modulus: u32, degree: BigInt },
    /// `∫ h σ_λ [T]` is not divisible by `m`.
    PairingNotDivisible {
        modulus: u32,
        lambda: (usize, usize),
        value: BigInt,
    },
}

/// Result of the index-3 test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub n: usize,
    pub degree: BigInt,
    pub index_is_3: bool,
    pub witnesses: Vec<IndexWitness>,
}

/// Tests that the hyperplane class on `T(2,n)` is not divisible by 2 or 3
/// (the canonical class is `O(−3)`, so the index is 3 exactly when `h` is
/// primitive). For each modulus `m`, divisibility is rejected if
/// `m^(n−2) ∤ deg` or some oracle number `∫ h σ_λ [T]` is not divisible by
/// `m`. Requires `n ≥ 7`, the Picard-rank-one regime.
pub fn index_check(n: usize) -> Result<IndexReport> {
    if n < 7 {
        return Err(Error::OutOfRange(format!(
            "index test needs Picard rank one, n ≥ 7; got {n}"
        )));
    }
    let degree = degree_oracle(n)?;
    let mut witnesses = Vec::new();
    let mut all_rejected = true;
    for m in [2u32, 3] {
        let mut power = BigInt::from(1);
        for _ in 0..(n - 2) {
            power *= BigInt::from(m);
        }
        if (&degree % &power) != BigInt::ZERO {
            witnesses.push(IndexWitness::DegreeNotDivisible {
                modulus: m,
                degree: degree.clone(),
            });
            continue;
        }
        let mut rejected = false;
        for a in 0..=(n - 3).min(n - 2) {
            let b = n - 3 - a;
            if a < b {
                continue;
            }
            let expr = SchubertExpr::sigma(n, a, b)?.mul_h();
            let value = intersection_number(n, &expr)?;
            if (&value % BigInt::from(m)) != BigInt::ZERO {
                witnesses.push(IndexWitness::PairingNotDivisible {
                    modulus: m,
                    lambda: (a, b),
                    value,
                });
                rejected = true;
                break;
            }
        }
        if !rejected {
            all_rejected = false;
        }
    }
    Ok(IndexReport {
        n,
        degree,
        index_is_3: all_rejected,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_class_small_cases() {
        let t6 = fundamental_class_t2(6).unwrap();
        assert_eq!(t6.coeff(4, 0), BigInt::from(1));
        assert_eq!(t6.coeff(3, 1), BigInt::from(1));
        assert_eq!(t6.coeff(2, 2), BigInt::from(1));
        assert_eq!(t6.iter().count(), 3);

        let t7 = fundamental_class_t2(7).unwrap();
        assert_eq!(t7.coeff(4, 1), BigInt::from(2));
        assert_eq!(t7.coeff(3, 2), BigInt::from(2));
        assert_eq!(t7.iter().count(), 2);
    }

    #[test]
    fn both_class_expansions_agree() {
        for n in 5..=14 {
            assert_eq!(
                fundamental_class_t2(n).unwrap(),
                fundamental_class_t2_alternative(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn class_is_effective_and_nonzero() {
        for n in 5..=20 {
            let class = fundamental_class_t2(n).unwrap();
            assert!(!class.is_zero());
            assert!(class.iter().all(|(_, c)| c > &BigInt::ZERO));
            assert_eq!(class.codimension(), Some(n - 2));
        }
    }

    #[test]
    fn intersection_examples() {
        let h4 = SchubertExpr::h_power(6, 4).unwrap();
        assert_eq!(intersection_number(6, &h4).unwrap(), BigInt::from(6));

        let h5 = SchubertExpr::h_power(7, 5).unwrap();
        assert_eq!(intersection_number(7, &h5).unwrap(), BigInt::from(18));

        let h_s4 = SchubertExpr::sigma(7, 4, 0).unwrap().mul_h();
        assert_eq!(intersection_number(7, &h_s4).unwrap(), BigInt::from(2));
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let h3 = SchubertExpr::h_power(6, 3).unwrap();
        assert!(matches!(
            intersection_number(6, &h3),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn segre_degree_of_t26() {
        // T(2,6) ≅ P²×P², whose Segre degree is 4!/(2!2!) = C(4,2).
        assert_eq!(degree_oracle(6).unwrap(), BigInt::from(binomial(4, 2)));
    }

    #[test]
    fn skew_tableau_second_oracle() {
        assert_eq!(skew_syt_two_rows((2, 2), (0, 0)), BigUint::from(2u32));
        assert_eq!(skew_syt_two_rows((1, 1), (0, 0)), BigUint::from(1u32));
        // deg T(2,n) = Σ [T]_(a,b) · #SYT(box/(a,b)) for small n.
        for n in 5..=8usize {
            let top = n - 2;
            let class = fundamental_class_t2(n).unwrap();
            let mut total = BigInt::ZERO;
            for ((a, b), c) in class.iter() {
                total += c * BigInt::from(skew_syt_two_rows((top, top), (a, b)));
            }
            assert_eq!(total, degree_oracle(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn closed_degree_formula_against_oracle() {
        assert_eq!(
            degree_closed_formula(6, RangePolicy::Restricted).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            degree_closed_formula(6, RangePolicy::AsPrinted).unwrap(),
            BigInt::from(7)
        );
        for policy in [RangePolicy::AsPrinted, RangePolicy::Restricted] {
            assert_eq!(degree_closed_formula(7, policy).unwrap(), BigInt::from(18));
        }
        // The restricted sum tracks the oracle; the printed sum is off by
        // one exactly at even n.
        for n in 5..=14usize {
            let oracle = degree_oracle(n).unwrap();
            let restricted = degree_closed_formula(n, RangePolicy::Restricted).unwrap();
            let printed = degree_closed_formula(n, RangePolicy::AsPrinted).unwrap();
            assert_eq!(restricted, oracle, "restricted at n = {n}");
            let delta = if n % 2 == 0 { 1 } else { 0 };
            assert_eq!(printed, oracle + BigInt::from(delta), "printed at n = {n}");
        }
    }

    #[test]
    fn degree_upper_bound() {
        for n in 7..=20usize {
            let bound = BigInt::from(binomial(2 * n as u64 - 7, n as u64 - 4));
            assert!(degree_oracle(n).unwrap() <= bound, "n = {n}");
        }
    }

    #[test]
    fn lemma_numbers_against_closed_forms() {
        // The oracle is authoritative; the closed forms disagree at small n.
        let (a6, b6) = lemma_numbers_oracle(6).unwrap();
        assert_eq!(a6, BigInt::from(2));
        assert_eq!(b6, BigInt::from(4));
        let (ca6, cb6) = lemma_numbers_closed(6);
        assert_ne!(a6, ca6);
        assert_ne!(b6, cb6);

        let (a7, b7) = lemma_numbers_oracle(7).unwrap();
        assert_eq!(a7, BigInt::from(2));
        assert_eq!(b7, BigInt::from(6));
        let (ca7, cb7) = lemma_numbers_closed(7);
        assert_eq!(a7, ca7, "a agrees at n = 7");
        assert_ne!(b7, cb7);
    }

    #[test]
    fn index_three_small_cases() {
        let report = index_check(7).unwrap();
        assert_eq!(report.degree, BigInt::from(18));
        assert!(report.index_is_3);
        assert_eq!(report.witnesses.len(), 2);
        for w in &report.witnesses {
            assert!(matches!(w, IndexWitness::DegreeNotDivisible { .. }));
        }

        for n in 8..=12 {
            assert!(index_check(n).unwrap().index_is_3, "n = {n}");
        }
        assert!(index_check(6).is_err());
    }
}
