//! Partition and GL-weight combinatorics.
//!
//! - [`Partition`]: weakly decreasing nonnegative sequences, conjugation,
//!   box enumeration.
//! - [`GeneralizedWeight`]: weakly decreasing integer sequences of fixed
//!   length (negative entries allowed), with the Weyl dimension formula.
//! - [`tensor_weights`] and [`exterior_power_pair`]: the small
//!   decomposition rules needed downstream — rank-2 Clebsch-Gordan, Pieri by
//!   the standard or dual-standard representation, and the Cauchy formula
//!   for exterior powers of a tensor product with a rank-2 factor.
//!
//! Full Littlewood-Richardson is deliberately not implemented; inputs outside
//! the supported rules fail with [`Error::UnsupportedTensorRule`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

/// A partition: weakly decreasing nonnegative integers, stored without
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, accepting (and stripping) trailing zeros.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidWeight(format!(
                    "partition parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part at `index`, zero beyond the stored length.
    pub fn part(&self, index: usize) -> usize {
        self.parts.get(index).copied().unwrap_or(0)
    }

    /// The conjugate (dual) partition: `conjugate(λ)[m] = #{r : λ_r ≥ m+1}`.
    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|m| self.parts.iter().filter(|&&p| p >= m).count())
            .collect();
        Self { parts }
    }

    /// True if the partition has at most `k` parts, each at most `l`.
    pub fn fits_in_box(&self, k: usize, l: usize) -> bool {
        self.parts.len() <= k && self.part(0) <= l
    }
}

/// All partitions of `size` with at most `k` parts, each part at most `l`,
/// in descending lexicographic order. The count equals the coefficient of
/// `q^size` in the Gaussian binomial `[k+l choose k]_q`.
pub fn partitions_in_box(size: usize, k: usize, l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_box(size, k, l, &mut current, &mut out);
    out
}

fn fill_box(
    remaining: usize,
    rows_left: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if rows_left == 0 || max_part == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    // A part of size p leaves at most p per remaining row.
    let lo = remaining.div_ceil(rows_left).max(1);
    for p in (lo..=hi).rev() {
        current.push(p);
        fill_box(remaining - p, rows_left - 1, p, current, out);
        current.pop();
    }
}

/// A GL(m)-weight: a weakly decreasing integer sequence of fixed length.
/// Negative entries are allowed; a nonnegative [`Partition`] padded with
/// zeros is the special case that indexes polynomial Schur functors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedWeight {
    entries: Vec<i64>,
}

impl GeneralizedWeight {
    pub fn new(entries: impl Into<Vec<i64>>) -> Result<Self> {
        let entries = entries.into();
        check_decreasing(&entries)?;
        Ok(Self { entries })
    }

    /// A partition padded with zeros to length `m`.
    pub fn from_partition(p: &Partition, m: usize) -> Result<Self> {
        if p.len() > m {
            return Err(Error::BoxViolation(format!(
                "partition {:?} has more than {m} parts",
                p.parts()
            )));
        }
        let mut entries: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
        entries.resize(m, 0);
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Dimension of the associated Schur functor of `GL(len)`.
    pub fn dimension(&self) -> BigUint {
        weyl_dimension(&self.entries).expect("weight is validated on construction")
    }
}

fn check_decreasing(entries: &[i64]) -> Result<()> {
    for w in entries.windows(2) {
        if w[0] < w[1] {
            return Err(Error::InvalidWeight(format!(
                "weight must be weakly decreasing, got {entries:?}"
            )));
        }
    }
    Ok(())
}

/// The Weyl dimension formula for `GL(m)`, `m = w.len()`:
/// `∏_{1≤i<j≤m} (w_i − w_j + j − i)/(j − i)`.
///
/// Exact big-integer arithmetic: the numerator product is divisible by the
/// denominator product, and every factor is positive for a weakly
/// decreasing weight.
pub fn weyl_dimension(w: &[i64]) -> Result<BigUint> {
    check_decreasing(w)?;
    let m = w.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..m {
        for j in (i + 1)..m {
            let gap = (j - i) as u64;
            num *= BigUint::from((w[i] - w[j]) as u64 + gap);
            den *= BigUint::from(gap);
        }
    }
    debug_assert!((&num % &den) == BigUint::ZERO);
    Ok(num / den)
}

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Clebsch-Gordan for `GL(2)`:
/// `S_(a1,a2) ⊗ S_(b1,b2) = ⊕_{c=0}^{min(a1−a2, b1−b2)} S_(a1+b1−c, a2+b2+c)`.
/// Multiplicity-free.
pub fn clebsch_gordan_rank2(a: [i64; 2], b: [i64; 2]) -> Result<Vec<[i64; 2]>> {
    check_decreasing(&a)?;
    check_decreasing(&b)?;
    let reach = (a[0] - a[1]).min(b[0] - b[1]);
    Ok((0..=reach)
        .map(|c| [a[0] + b[0] - c, a[1] + b[1] + c])
        .collect())
}

/// Which side of a Pieri product the second factor is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriFactor {
    /// The standard representation `V`: adds one box.
    Standard,
    /// Its dual `V*`: removes one box.
    DualStandard,
}

/// Pieri rule for `S_w ⊗ V` or `S_w ⊗ V*` on `GL(w.len())`: all weights
/// `w ± e_i` that remain weakly decreasing. Multiplicity-free.
pub fn pieri(w: &[i64], factor: PieriFactor) -> Result<Vec<Vec<i64>>> {
    check_decreasing(w)?;
    let delta: i64 = match factor {
        PieriFactor::Standard => 1,
        PieriFactor::DualStandard => -1,
    };
    let mut out = Vec::new();
    for i in 0..w.len() {
        let mut cand = w.to_vec();
        cand[i] += delta;
        if check_decreasing(&cand).is_ok() {
            out.push(cand);
        }
    }
    Ok(out)
}

fn is_standard(w: &[i64]) -> bool {
    w.first() == Some(&1) && w[1..].iter().all(|&x| x == 0)
}

fn is_dual_standard(w: &[i64]) -> bool {
    w.last() == Some(&-1) && w[..w.len() - 1].iter().all(|&x| x == 0)
}

/// Decomposes `S_a ⊗ S_b` on `GL(m)` (`m = a.len() = b.len()`) into
/// irreducible weights, using rank-2 Clebsch-Gordan or a Pieri rule.
/// Anything else is an unsupported rule and fails loudly.
pub fn tensor_weights(a: &[i64], b: &[i64]) -> Result<Vec<Vec<i64>>> {
    if a.len() != b.len() {
        return Err(Error::UnsupportedTensorRule(format!(
            "factors live on different groups: lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    check_decreasing(a)?;
    check_decreasing(b)?;
    if a.len() == 2 {
        return Ok(clebsch_gordan_rank2([a[0], a[1]], [b[0], b[1]])?
            .into_iter()
            .map(|w| vec![w[0], w[1]])
            .collect());
    }
    if is_standard(b) {
        return pieri(a, PieriFactor::Standard);
    }
    if is_dual_standard(b) {
        return pieri(a, PieriFactor::DualStandard);
    }
    if is_standard(a) {
        return pieri(b, PieriFactor::Standard);
    }
    if is_dual_standard(a) {
        return pieri(b, PieriFactor::DualStandard);
    }
    Err(Error::UnsupportedTensorRule(format!(
        "general Littlewood-Richardson not supported: {a:?} ⊗ {b:?}"
    )))
}

/// Cauchy formula for `Λ^q(A ⊗ B)` with `rank A = 2`:
/// `⊕_{a+b=q, a≥b≥0, a≤rank B} S_(a,b) A ⊗ S_(2^b 1^(a−b)) B`.
///
/// Returns the pairs (two-row weight on `A`, conjugate-shape partition on
/// `B`).
pub fn exterior_power_pair(q: usize, rank_b: usize) -> Vec<([i64; 2], Partition)> {
    let mut out = Vec::new();
    for b in 0..=(q / 2) {
        let a = q - b;
        if a < b || a > rank_b {
            continue;
        }
        let mut parts = vec![2usize; b];
        parts.extend(core::iter::repeat_n(1, a - b));
        let shape = Partition::new(parts).expect("2^b 1^(a-b) is a valid partition");
        out.push(([a as i64, b as i64], shape));
    }
    out
}
