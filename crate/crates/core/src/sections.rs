//! Hodge diamonds of smooth hyperplane sections of Grassmannians, their
//! Calabi-Yau-type classification, deformation-dimension bookkeeping, and the
//! Hochschild argument ruling out a geometric Calabi-Yau threefold for the
//! `Gr(3,11)` section.
//!
//! Below the middle the diamond is copied from the ambient Grassmannian; the
//! middle row comes from the alternating sum
//!
//! `h^{q,d−q}(Y) = Σ_{i>0} (−1)^{d−q+i} (χ(Ω^{q−i}(−i)) + χ(Ω^{q+1−i}(−i)))`
//!
//! over twisted-form Euler characteristics, exact for `q ≤ d/2`, with the
//! upper half filled in by Poincaré duality. On the middle diagonal (even
//! `d`) the sum computes the part not restricted from the ambient variety,
//! so the ambient `h^{q,q}` is added back; the same sum without that
//! correction is the vanishing middle row. Evaluating the sum on both
//! halves gives a non-trivial duality cross-check
//! (`acc(q) − acc(d−q) = (−1)^d (P_{d−q} − P_q)` against the ambient
//! diagonal `P`); a failure is a hard error, not a recoverable condition.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::hodge::HodgePolynomial;
use crate::partitions::{binomial, partitions_in_box};
use crate::twisted::euler_char_twisted;
use crate::{Error, Result};

/// A computed hyperplane section of `Gr(k,n)` with its diamond and the
/// vanishing middle row.
#[derive(Clone, Debug)]
pub struct Section {
    k: usize,
    n: usize,
    dim: usize,
    diamond: HodgePolynomial,
    vanishing: Vec<BigUint>,
}

impl Section {
    /// Computes the section of `Gr(k,n)`; assumes the section is smooth.
    pub fn compute(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::OutOfRange(format!(
                "Gr({k},{n}) requires 0 < k < n"
            )));
        }
        let l = n - k;
        let d = k * l - 1;

        let mut chi_cache: BTreeMap<(usize, i64), BigInt> = BTreeMap::new();
        let mut chi = |j: i64, i: i64| -> Result<BigInt> {
            if j < 0 || j as usize > k * l {
                return Ok(BigInt::ZERO);
            }
            let key = (j as usize, i);
            if let Some(v) = chi_cache.get(&key) {
                return Ok(v.clone());
            }
            let v = euler_char_twisted(k, n, j as usize, i)?;
            chi_cache.insert(key, v.clone());
            Ok(v)
        };

        // Alternating sum for the middle row, computed for every q. It
        // equals the vanishing part of h^{q,d−q} for q ≤ d/2; above the
        // half it differs by the gap between the ambient diagonal at q and
        // at d−q, which is exactly what the duality cross-check uses.
        let mut acc = Vec::with_capacity(d + 1);
        for q in 0..=d {
            let mut sum = BigInt::ZERO;
            for i in 1..=(q as i64 + 1) {
                let term = chi(q as i64 - i, i)? + chi(q as i64 + 1 - i, i)?;
                if (d as i64 - q as i64 + i) % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            acc.push(sum);
        }

        let box_count = |p: usize| BigUint::from(partitions_in_box(p, k, l).len());

        // Duality cross-check: acc(q) − acc(d−q) = (−1)^d (P_{d−q} − P_q).
        for q in 0..=d {
            let gap = BigInt::from(box_count(d - q)) - BigInt::from(box_count(q));
            let gap = if d.is_multiple_of(2) { gap } else { -gap };
            if &acc[q] - &acc[d - q] != gap {
                return Err(Error::Inconsistency(format!(
                    "middle row of the Gr({k},{n}) section fails duality at q = {q}"
                )));
            }
        }

        let mut vanishing = Vec::with_capacity(d + 1);
        for q in 0..=d {
            let v = &acc[q.min(d - q)];
            if v.is_negative() {
                return Err(Error::Inconsistency(format!(
                    "negative middle Hodge number h^({q},{}) of the Gr({k},{n}) section",
                    d - q
                )));
            }
            vanishing.push(v.to_biguint().expect("checked nonnegative"));
        }

        let mut diamond = HodgePolynomial::new(d);
        // Lefschetz range and its dual.
        for p in 0..=d {
            if 2 * p != d {
                diamond.set(p, p, box_count(p.min(d - p)))?;
            }
        }
        // Middle row.
        for q in 0..=d {
            let mut h = vanishing[q].clone();
            if 2 * q == d {
                h += box_count(q);
            }
            diamond.set(q, d - q, h)?;
        }
        diamond.check_symmetry()?;
        diamond.check_duality()?;

        Ok(Self {
            k,
            n,
            dim: d,
            diamond,
            vanishing,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn diamond(&self) -> &HodgePolynomial {
        &self.diamond
    }

    pub fn into_diamond(self) -> HodgePolynomial {
        self.diamond
    }

    /// `h^{q,d−q}` minus the part restricted from the ambient Grassmannian
    /// (which is present only on the diagonal).
    pub fn vanishing_middle(&self, q: usize) -> BigUint {
        self.vanishing.get(q).cloned().unwrap_or(BigUint::ZERO)
    }
}

/// The Hodge diamond of a smooth hyperplane section of `Gr(k,n)`.
///
/// ```
/// use hodgebott::sections::section_diamond;
/// use num_bigint::BigUint;
///
/// // The 20-fold section of Gr(3,10) has middle row 1, 30, 1.
/// let y = section_diamond(3, 10).unwrap();
/// assert_eq!(y.coeff(9, 11), BigUint::from(1u32));
/// assert_eq!(y.coeff(10, 10), BigUint::from(30u32));
/// ```
pub fn section_diamond(k: usize, n: usize) -> Result<HodgePolynomial> {
    Ok(Section::compute(k, n)?.into_diamond())
}

/// Is the weight-`j` cohomology encoded in `diamond` of `k`-Calabi-Yau
/// type: a one-dimensional extreme piece `h^{(j+k)/2,(j−k)/2} = 1` with
/// nothing beyond it on the same weight?
pub fn cy_type(diamond: &HodgePolynomial, j: usize, k: usize) -> Result<bool> {
    if k > j || j > 2 * diamond.dim() {
        return Err(Error::OutOfRange(format!(
            "cy_type needs k ≤ j ≤ 2·dim, got j = {j}, k = {k}"
        )));
    }
    if !(j + k).is_multiple_of(2) {
        return Err(Error::ParityMismatch(format!(
            "j + k must be even, got j = {j}, k = {k}"
        )));
    }
    let hi = (j + k) / 2;
    let lo = (j - k) / 2;
    if hi > diamond.dim() || diamond.coeff(hi, lo) != BigUint::from(1u32) {
        return Ok(false);
    }
    for p in (hi + 1)..=j.min(diamond.dim()) {
        if !diamond.coeff(p, j - p).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `h^1(T)` along the chain of section stages `Y = Y_0, Y_1, Y_2`:
/// stage 0 is `C(10,3) − 10² = 20`; each further stage `r` adds the
/// `(10 − r)`-dimensional space of contractions of the defining three-form,
/// per the exact sequences ending in `H^1(T_{Y_0})`.
pub fn tangent_h1(stage: u8) -> Result<BigUint> {
    if stage > 2 {
        return Err(Error::OutOfRange(format!(
            "deformation stages are 0, 1, 2; got {stage}"
        )));
    }
    let base = binomial(10, 3) - BigUint::from(100u32);
    if stage == 0 {
        return Ok(base);
    }
    Ok(base + BigUint::from(10 - stage as u32))
}

/// Result of the Hochschild bookkeeping for the `Gr(3,11)` section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochschildCy3 {
    /// Euler characteristic of the section.
    pub chi: BigInt,
    /// `HH_0` of the Calabi-Yau component forced by the decomposition.
    pub hh0: BigInt,
    /// Whether a geometric Calabi-Yau threefold remains possible
    /// (`HH_0 ≥ 4`).
    pub geometric_cy3_possible: bool,
}

/// The `Gr(3,11)` obstruction: the 150-object decomposition forces
/// `HH_0 = χ − 150 + 90`, and a projective Calabi-Yau threefold needs
/// `HH_0 ≥ 4`.
pub fn hochschild_cy3_check() -> Result<HochschildCy3> {
    let chi = section_diamond(3, 11)?.euler_characteristic();
    let hh0 = &chi - BigInt::from(150) + BigInt::from(90);
    let geometric_cy3_possible = hh0 >= BigInt::from(4);
    Ok(HochschildCy3 {
        chi,
        hh0,
        geometric_cy3_possible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twisted::grassmannian_diamond;

    fn u(x: u32) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn debarre_voisin_section_matches_table() {
        let s = Section::compute(3, 10).unwrap();
        assert_eq!(s.dim(), 20);
        let expect_diag = [1u32, 1, 2, 3, 4, 5, 7, 8, 9, 10];
        for (p, e) in expect_diag.iter().enumerate() {
            assert_eq!(s.diamond().coeff(p, p), u(*e), "h^({p},{p})");
        }
        assert_eq!(s.diamond().coeff(9, 11), u(1));
        assert_eq!(s.diamond().coeff(10, 10), u(30));
        assert_eq!(s.diamond().coeff(11, 9), u(1));
        assert_eq!(s.diamond().coeff(8, 12), u(0));
        assert_eq!(s.diamond().total(), u(132));
    }

    #[test]
    fn debarre_voisin_vanishing_fragment() {
        let s = Section::compute(3, 10).unwrap();
        assert_eq!(s.vanishing_middle(9), u(1));
        assert_eq!(s.vanishing_middle(10), u(20));
        assert_eq!(s.vanishing_middle(11), u(1));
        for q in 0..=20 {
            if !(9..=11).contains(&q) {
                assert_eq!(s.vanishing_middle(q), u(0), "vanishing at q = {q}");
            }
        }
    }

    #[test]
    fn gr_3_11_section_middle() {
        let s = Section::compute(3, 11).unwrap();
        assert_eq!(s.dim(), 23);
        assert_eq!(s.diamond().coeff(10, 13), u(1));
        assert_eq!(s.diamond().coeff(11, 12), u(44));
        assert_eq!(s.diamond().coeff(12, 11), u(44));
        assert_eq!(s.diamond().coeff(13, 10), u(1));
        assert_eq!(s.diamond().euler_characteristic(), BigInt::from(62));
    }

    #[test]
    fn gr_3_9_section() {
        let s = Section::compute(3, 9).unwrap();
        assert_eq!(s.dim(), 17);
        assert_eq!(s.diamond().coeff(8, 9), u(2));
        assert_eq!(s.diamond().coeff(9, 8), u(2));
        assert_eq!(s.diamond().euler_characteristic(), BigInt::from(72));
    }

    #[test]
    fn pure_sections_stay_diagonal() {
        for (k, n) in [(2, 5), (2, 7), (2, 8), (3, 6)] {
            let d = section_diamond(k, n).unwrap();
            assert!(d.is_pure_diagonal(), "section of Gr({k},{n})");
        }
    }

    #[test]
    fn cy_type_examples() {
        let y = section_diamond(3, 10).unwrap();
        assert!(cy_type(&y, 20, 2).unwrap());
        let y11 = section_diamond(3, 11).unwrap();
        assert!(cy_type(&y11, 23, 3).unwrap());
        let gr = grassmannian_diamond(3, 10).unwrap();
        assert!(!cy_type(&gr, 20, 2).unwrap());
        assert!(matches!(
            cy_type(&y, 19, 2),
            Err(Error::ParityMismatch(_))
        ));
    }

    #[test]
    fn tangent_h1_stages() {
        assert_eq!(tangent_h1(0).unwrap(), u(20));
        assert_eq!(tangent_h1(1).unwrap(), u(29));
        assert_eq!(tangent_h1(2).unwrap(), u(28));
        assert!(tangent_h1(3).is_err());
    }

    #[test]
    fn hochschild_obstruction() {
        let r = hochschild_cy3_check().unwrap();
        assert_eq!(r.chi, BigInt::from(62));
        assert_eq!(r.hh0, BigInt::from(2));
        assert!(!r.geometric_cy3_possible);
    }
}
