//! Hodge-Poincaré polynomials with exact big-integer coefficients.
//!
//! [`HodgePolynomial`] stores the diamond of a (smooth projective) variety:
//! nonnegative coefficients `h^{p,q}` at `u^p v^q`, with the declared
//! dimension bounding the support. The Lefschetz class `L` is `uv`, so a
//! Tate twist by `L^s` shifts support by `(s,s)`.
//!
//! [`BiPoly`] is the signed workhorse behind class relations: addition,
//! subtraction, multiplication, and exact division by polynomials in `L`
//! (implemented stripe-by-stripe in the off-diagonal index `p − q`, where
//! division by a polynomial in `L` is univariate). A nonzero remainder or a
//! negative coefficient on conversion back to a diamond is a hard
//! inconsistency, never a fallback.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Signed bivariate polynomial in `(u, v)`, sparse over `(p, q)` exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, BigInt::one());
        p
    }

    /// `L^s = (uv)^s`.
    pub fn l_power(s: usize) -> Self {
        let mut p = Self::default();
        p.add_term(s, s, BigInt::one());
        p
    }

    /// The class of `P^r`: `1 + L + ... + L^r`.
    pub fn projective_space(r: usize) -> Self {
        let mut p = Self::default();
        for i in 0..=r {
            p.add_term(i, i, BigInt::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: usize, q: usize) -> BigInt {
        self.coeffs.get(&(p, q)).cloned().unwrap_or(BigInt::ZERO)
    }

    pub fn add_term(&mut self, p: usize, q: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((p, q)).or_insert(BigInt::ZERO);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(p, q));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(p, q), c) in &other.coeffs {
            out.add_term(p, q, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(p, q), c) in &other.coeffs {
            out.add_term(p, q, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(p1, q1), c1) in &self.coeffs {
            for (&(p2, q2), c2) in &other.coeffs {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }

    /// Multiplication by `L^s`.
    pub fn shift_l(&self, s: usize) -> Self {
        let mut out = Self::default();
        for (&(p, q), c) in &self.coeffs {
            out.add_term(p + s, q + s, c.clone());
        }
        out
    }

    /// Value at `u = v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    /// Exact division by a polynomial in `L` given by its coefficient vector
    /// (`divisor[j]` is the coefficient of `L^j`). Fails with
    /// [`Error::InexactDivision`] on any remainder.
    ///
    /// Writing the dividend as `Σ_d u^max(d,0) v^max(−d,0) f_d(L)` over the
    /// off-diagonal index `d = p − q`, division by a polynomial in `L` acts
    /// stripe by stripe as univariate division.
    pub fn div_exact_in_l(&self, divisor: &[BigInt]) -> Result<Self> {
        let deg = match divisor.iter().rposition(|c| !c.is_zero()) {
            Some(d) => d,
            None => {
                return Err(Error::InexactDivision("division by zero polynomial".into()))
            }
        };
        let lead = &divisor[deg];

        // Group terms into stripes: d = p − q, L-degree min(p, q).
        let mut stripes: BTreeMap<i64, BTreeMap<usize, BigInt>> = BTreeMap::new();
        for (&(p, q), c) in &self.coeffs {
            let d = p as i64 - q as i64;
            stripes
                .entry(d)
                .or_default()
                .insert(p.min(q), c.clone());
        }

        let mut out = Self::default();
        for (d, stripe) in stripes {
            let top = *stripe.keys().next_back().expect("stripe is nonempty");
            let mut rem: Vec<BigInt> = vec![BigInt::ZERO; top + 1];
            for (m, c) in stripe {
                rem[m] = c;
            }
            // Long division from the top degree.
            let mut quot: Vec<BigInt> = vec![BigInt::ZERO; top + 1];
            for m in (0..=top).rev() {
                if rem[m].is_zero() {
                    continue;
                }
                if m < deg {
                    return Err(Error::InexactDivision(format!(
                        "remainder of L-degree {m} on stripe u^p v^q with p − q = {d}"
                    )));
                }
                if (&rem[m] % lead) != BigInt::ZERO {
                    return Err(Error::InexactDivision(format!(
                        "leading coefficient does not divide on stripe p − q = {d}"
                    )));
                }
                let q_coeff = &rem[m] / lead;
                for (j, g) in divisor.iter().enumerate().take(deg + 1) {
                    if !g.is_zero() {
                        let delta = q_coeff.clone() * g;
                        rem[m - deg + j] -= delta;
                    }
                }
                quot[m - deg] = q_coeff;
            }
            let (pu, pv) = (d.max(0) as usize, (-d).max(0) as usize);
            for (m, c) in quot.into_iter().enumerate() {
                out.add_term(pu + m, pv + m, c);
            }
        }
        Ok(out)
    }
}

/// Coefficient vector in `L` of the class of `P^r`.
pub fn projective_space_l_coeffs(r: usize) -> Vec<BigInt> {
    vec![BigInt::one(); r + 1]
}

/// The Hodge diamond of a `dim`-dimensional smooth projective variety:
/// nonnegative `h^{p,q}` supported in `0 ≤ p, q ≤ dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgePolynomial {
    dim: usize,
    coeffs: BTreeMap<(usize, usize), BigUint>,
}

impl HodgePolynomial {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    /// Declared dimension; the top weight is `2·dim`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, p: usize, q: usize, h: BigUint) -> Result<()> {
        if p > self.dim || q > self.dim {
            return Err(Error::OutOfRange(format!(
                "h^({p},{q}) outside the diamond of a {}-fold",
                self.dim
            )));
        }
        if h.is_zero() {
            self.coeffs.remove(&(p, q));
        } else {
            self.coeffs.insert((p, q), h);
        }
        Ok(())
    }

    pub fn coeff(&self, p: usize, q: usize) -> BigUint {
        self.coeffs.get(&(p, q)).cloned().unwrap_or(BigUint::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &BigUint)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    /// Purely diagonal diamond from `betti[p] = h^{p,p}`.
    pub fn from_diagonal(dim: usize, betti: &[BigUint]) -> Result<Self> {
        if betti.len() != dim + 1 {
            return Err(Error::OutOfRange(format!(
                "diagonal of a {dim}-fold needs {} entries, got {}",
                dim + 1,
                betti.len()
            )));
        }
        let mut out = Self::new(dim);
        for (p, h) in betti.iter().enumerate() {
            out.set(p, p, h.clone())?;
        }
        Ok(out)
    }

    /// True when every off-diagonal coefficient vanishes.
    pub fn is_pure_diagonal(&self) -> bool {
        self.coeffs.keys().all(|&(p, q)| p == q)
    }

    /// Checked conversion from signed arithmetic: coefficients must be
    /// nonnegative and supported inside the diamond.
    pub fn from_bipoly(dim: usize, poly: &BiPoly) -> Result<Self> {
        let mut out = Self::new(dim);
        for ((p, q), c) in poly.iter() {
            if c.is_negative() {
                return Err(Error::NegativeCoefficient(format!(
                    "h^({p},{q}) = {c} in a derived class"
                )));
            }
            if p > dim || q > dim {
                return Err(Error::Inconsistency(format!(
                    "support at ({p},{q}) exceeds declared dimension {dim}"
                )));
            }
            out.set(p, q, c.to_biguint().expect("checked nonnegative"))?;
        }
        Ok(out)
    }

    pub fn to_bipoly(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(p, q), c) in &self.coeffs {
            out.add_term(p, q, BigInt::from(c.clone()));
        }
        out
    }

    /// Hodge symmetry `h^{p,q} = h^{q,p}`.
    pub fn check_symmetry(&self) -> Result<()> {
        for (&(p, q), c) in &self.coeffs {
            if self.coeff(q, p) != *c {
                return Err(Error::Inconsistency(format!(
                    "Hodge symmetry fails at ({p},{q})"
                )));
            }
        }
        Ok(())
    }

    /// Poincaré duality `h^{p,q} = h^{dim−p,dim−q}`.
    pub fn check_duality(&self) -> Result<()> {
        for (&(p, q), c) in &self.coeffs {
            if self.coeff(self.dim - p, self.dim - q) != *c {
                return Err(Error::Inconsistency(format!(
                    "Poincaré duality fails at ({p},{q})"
                )));
            }
        }
        Ok(())
    }

    /// `Σ (−1)^(p+q) h^{p,q}`.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut chi = BigInt::ZERO;
        for (&(p, q), c) in &self.coeffs {
            let signed = BigInt::from(c.clone());
            if (p + q) % 2 == 0 {
                chi += signed;
            } else {
                chi -= signed;
            }
        }
        chi
    }

    /// Value at `u = v = 1`: the total dimension of cohomology.
    pub fn total(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// Betti number `b_m = Σ_{p+q=m} h^{p,q}`.
    pub fn betti(&self, m: usize) -> BigUint {
        self.coeffs
            .iter()
            .filter(|(&(p, q), _)| p + q == m)
            .map(|(_, c)| c)
            .sum()
    }

    /// Short human-readable rendering of the nonzero rows, one weight per
    /// line, e.g. `h^20: 1 30 1`.
    pub fn rows(&self) -> Vec<(usize, Vec<(usize, usize, BigUint)>)> {
        let mut rows: BTreeMap<usize, Vec<(usize, usize, BigUint)>> = BTreeMap::new();
        for (&(p, q), c) in &self.coeffs {
            rows.entry(p + q).or_default().push((p, q, c.clone()));
        }
        rows.into_iter()
            .map(|(m, mut entries)| {
                entries.sort_by(|a, b| b.0.cmp(&a.0));
                (m, entries)
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        let mut out = String::new();
        for (m, entries) in self.rows() {
            out.push_str(&format!("h^{m}:"));
            for (_, _, c) in entries {
                out.push_str(&format!(" {c}"));
            }
            out.push('\n');
        }
        out
    }
}
