//! Cohomology of irreducible homogeneous bundles on GL-flag varieties.
//!
//! The central routine is [`bbw_cohomology`], the ρ-shift algorithm: add the
//! staircase ρ to the weight, reject repeats, count inversions, and apply the
//! Weyl dimension formula to the sorted shift. Every irreducible bundle has
//! cohomology in at most one degree; acyclicity is an empty table.
//!
//! Conventions are fixed operationally, not notationally: blocks of a
//! [`FlagAmbient`] are listed from the tautological sub side to the quotient
//! side (so `Gr(k,n)` has blocks `(k, n-k)` carrying `U` then `Q`), the
//! weight entries of a block give the Schur functor of that block bundle,
//! and `O(1) = det U*` so that twisting by `O(t)` subtracts `t` from every
//! entry of the first block. Calibration tests pin this down:
//! `h⁰(Gr(k,n), O(1)) = C(n,k)` and `h^q(Ω^j_Gr) = δ_{q,j} · #{partitions of
//! j in the k×(n−k) box}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::partitions::{weyl_dimension, Partition};
use crate::{Error, Result};

/// A GL-flag variety `Fl(d_1, ..., d_r, V_n)`, described by the ranks of the
/// graded pieces of the tautological flag, sub side first.
///
/// `Gr(k,n)` is blocks `(k, n-k)`; `Fl(1,3,V_9)` is blocks `(1, 2, 6)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagAmbient {
    blocks: Vec<usize>,
}

impl FlagAmbient {
    pub fn new(blocks: impl Into<Vec<usize>>) -> Result<Self> {
        let blocks = blocks.into();
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::OutOfRange(format!(
                "flag blocks must be positive, got {blocks:?}"
            )));
        }
        Ok(Self { blocks })
    }

    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::OutOfRange(format!(
                "Gr({k},{n}) requires 0 < k < n"
            )));
        }
        Self::new([k, n - k])
    }

    /// `P^(n-1) = Gr(1, n)`, lines in `V_n`.
    pub fn projective_space(n: usize) -> Result<Self> {
        Self::grassmannian(1, n)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Dimension of the underlying vector space.
    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Dimension of the flag variety: `Σ_{i<j} b_i b_j`.
    pub fn dim(&self) -> usize {
        let mut d = 0;
        for i in 0..self.blocks.len() {
            for j in (i + 1)..self.blocks.len() {
                d += self.blocks[i] * self.blocks[j];
            }
        }
        d
    }
}

/// An irreducible homogeneous bundle: a weight of length `n`, weakly
/// decreasing within each block of the ambient flag variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousBundle {
    ambient: FlagAmbient,
    weight: Vec<i64>,
}

impl HomogeneousBundle {
    pub fn new(ambient: FlagAmbient, weight: impl Into<Vec<i64>>) -> Result<Self> {
        let weight = weight.into();
        if weight.len() != ambient.n() {
            return Err(Error::InvalidWeight(format!(
                "weight length {} does not match n = {}",
                weight.len(),
                ambient.n()
            )));
        }
        let mut offset = 0;
        for &b in &ambient.blocks {
            for i in offset..offset + b - 1 {
                if weight[i] < weight[i + 1] {
                    return Err(Error::InvalidWeight(format!(
                        "weight {weight:?} is not dominant within block at offset {offset}"
                    )));
                }
            }
            offset += b;
        }
        Ok(Self { ambient, weight })
    }

    pub fn ambient(&self) -> &FlagAmbient {
        &self.ambient
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    /// The dual bundle: entries reversed and negated within each block.
    pub fn dual(&self) -> Self {
        let mut weight = Vec::with_capacity(self.weight.len());
        let mut offset = 0;
        for &b in &self.ambient.blocks {
            weight.extend(self.weight[offset..offset + b].iter().rev().map(|x| -x));
            offset += b;
        }
        Self {
            ambient: self.ambient.clone(),
            weight,
        }
    }

    /// Tensor with the canonical bundle, as a weight shift: block `t` gains
    /// `Σ_{j>t} b_j − Σ_{i<t} b_i` on every entry.
    pub fn twist_by_canonical(&self) -> Self {
        let blocks = &self.ambient.blocks;
        let mut weight = Vec::with_capacity(self.weight.len());
        let mut offset = 0;
        for (t, &b) in blocks.iter().enumerate() {
            let after: i64 = blocks[t + 1..].iter().map(|&x| x as i64).sum();
            let before: i64 = blocks[..t].iter().map(|&x| x as i64).sum();
            let shift = after - before;
            weight.extend(self.weight[offset..offset + b].iter().map(|x| x + shift));
            offset += b;
        }
        Self {
            ambient: self.ambient.clone(),
            weight,
        }
    }

    /// The Serre-dual bundle `E* ⊗ K`, so that `h^q(E) = h^{dim − q}` of it.
    pub fn serre_dual(&self) -> Self {
        self.dual().twist_by_canonical()
    }
}

/// Map from cohomological degree to dimension; only nonzero dimensions are
/// stored, so acyclic means empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyTable {
    entries: BTreeMap<usize, BigUint>,
}

impl CohomologyTable {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(degree: usize, dim: BigUint) -> Self {
        let mut entries = BTreeMap::new();
        if !dim.is_zero() {
            entries.insert(degree, dim);
        }
        Self { entries }
    }

    pub fn is_acyclic(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dim_in_degree(&self, degree: usize) -> BigUint {
        self.entries.get(&degree).cloned().unwrap_or(BigUint::ZERO)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.entries.iter().map(|(&d, v)| (d, v))
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// Adds another table degreewise.
    pub fn absorb(&mut self, other: &CohomologyTable) {
        for (d, v) in &other.entries {
            let slot = self.entries.entry(*d).or_insert(BigUint::ZERO);
            *slot += v;
        }
    }

    /// Signed Euler characteristic `Σ_q (−1)^q dim H^q`.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut chi = BigInt::ZERO;
        for (d, v) in &self.entries {
            let signed = BigInt::from(v.clone());
            if d % 2 == 0 {
                chi += signed;
            } else {
                chi -= signed;
            }
        }
        chi
    }
}

/// The ρ-shift algorithm. Returns the (at most one-entry) cohomology table
/// of an irreducible homogeneous bundle.
///
/// Internally the weight is read with the quotient-side block first, so that
/// adding `ρ = (n−1, ..., 1, 0)` and counting inversions gives the degree,
/// and `weyl_dimension(sorted − ρ)` the dimension. Inversions only occur
/// between blocks, so the degree is bounded by `dim(ambient)`.
///
/// ```
/// use hodgebott::bbw::{bbw_cohomology, FlagAmbient, HomogeneousBundle};
/// use num_bigint::BigUint;
///
/// // O(−4) on P³: only H³, one-dimensional.
/// let p3 = FlagAmbient::projective_space(4).unwrap();
/// let serre = HomogeneousBundle::new(p3, vec![4, 0, 0, 0]).unwrap();
/// let table = bbw_cohomology(&serre);
/// assert_eq!(table.dim_in_degree(3), BigUint::from(1u32));
/// assert_eq!(table.entries().count(), 1);
/// ```
pub fn bbw_cohomology(bundle: &HomogeneousBundle) -> CohomologyTable {
    let n = bundle.ambient.n();

    // Quotient-side blocks first, order within blocks kept.
    let mut flipped = Vec::with_capacity(n);
    let mut offset = bundle.weight.len();
    for &b in bundle.ambient.blocks.iter().rev() {
        flipped.extend_from_slice(&bundle.weight[offset - b..offset]);
        offset -= b;
    }

    let mu: Vec<i64> = flipped
        .iter()
        .enumerate()
        .map(|(i, &w)| w + (n - 1 - i) as i64)
        .collect();

    let mut sorted = mu.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return CohomologyTable::empty();
    }

    let mut inversions = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if mu[i] < mu[j] {
                inversions += 1;
            }
        }
    }
    debug_assert!(inversions <= bundle.ambient.dim());

    let shifted: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (n - 1 - i) as i64)
        .collect();
    let dim = weyl_dimension(&shifted).expect("sorted strictly decreasing minus ρ is dominant");
    CohomologyTable::single(inversions, dim)
}

/// The weight of the twisted-form summand `S_(α^∨) Q* ⊗ S_α U (−i)` on
/// `Gr(k, k+l)`.
pub fn twisted_form_summand(alpha: &Partition, k: usize, l: usize, i: i64) -> Result<HomogeneousBundle> {
    if !alpha.fits_in_box(k, l) {
        return Err(Error::BoxViolation(format!(
            "partition {:?} does not fit the {k}×{l} box",
            alpha.parts()
        )));
    }
    let ambient = FlagAmbient::grassmannian(k, k + l)?;
    let dual = alpha.conjugate();
    let mut weight = Vec::with_capacity(k + l);
    // U-block: α twisted by O(−i).
    for r in 0..k {
        weight.push(alpha.part(r) as i64 + i);
    }
    // Q-block: S_(α^∨) Q* has entries −α^∨ reversed.
    for m in (0..l).rev() {
        weight.push(-(dual.part(m) as i64));
    }
    HomogeneousBundle::new(ambient, weight)
}

/// Snow's fast-path test: does the partition `α` (of size `j`, inside the
/// `k×l` box) contribute to the cohomology of `Ω^j_Gr(k,k+l)(−i)`, `i > 0`?
///
/// The test used is the interval rule: with `A(i) = (α_r − r + i)_r`, the
/// partition contributes iff `A(i) ∩ [−k, l−1] ⊆ A(0)`. The degree and
/// dimension of the contribution are then read off the ρ-shift algorithm,
/// and the two routes are cross-checked — a mismatch is a convention bug and
/// panics.
pub fn snow_contributes(
    alpha: &Partition,
    k: usize,
    l: usize,
    i: i64,
    j: usize,
) -> Result<Option<(usize, BigUint)>> {
    if !alpha.fits_in_box(k, l) {
        return Err(Error::BoxViolation(format!(
            "partition {:?} does not fit the {k}×{l} box",
            alpha.parts()
        )));
    }
    if alpha.size() != j {
        return Err(Error::BoxViolation(format!(
            "partition {:?} has size {} ≠ j = {j}",
            alpha.parts(),
            alpha.size()
        )));
    }
    if i <= 0 {
        return Err(Error::OutOfRange(format!("interval rule needs i > 0, got {i}")));
    }

    let a_of = |t: i64| -> Vec<i64> {
        (1..=k as i64)
            .map(|r| alpha.part((r - 1) as usize) as i64 - r + t)
            .collect()
    };
    let a_i = a_of(i);
    let a_0 = a_of(0);
    let contributes = a_i
        .iter()
        .filter(|&&x| -(k as i64) <= x && x < l as i64)
        .all(|x| a_0.contains(x));

    let table = bbw_cohomology(&twisted_form_summand(alpha, k, l, i)?);
    if contributes == table.is_acyclic() {
        panic!(
            "interval rule and ρ-shift disagree at α = {:?}, k = {k}, l = {l}, i = {i}",
            alpha.parts()
        );
    }
    if !contributes {
        return Ok(None);
    }
    let (degree, dim) = table
        .entries()
        .next()
        .map(|(d, v)| (d, v.clone()))
        .expect("contributing summand has one entry");
    Ok(Some((degree, dim)))
}

/// Four-condition acyclicity test for `S^p U ⊗ Λ^q Q (−i)` on `Gr(2,10)`,
/// `q < 8`: the bundle can only be non-acyclic if one of `i ≥ 10`;
/// `p+i ≤ 0`; `p+q+i = 9` and `i ≤ 1`; `q+i = 10` and `p+i ≥ 10` holds.
/// Returns `true` (acyclic) iff none holds.
///
/// The list is exhaustive for `p + i ≤ 9`, which covers every bundle the
/// collection checks reduce to; outside that regime the family
/// `i ≤ 1, p+i ≥ 10` (e.g. `S⁹U(−1)`, with `H⁸` of dimension 10) is
/// non-acyclic without tripping any condition. The ρ-shift is always the
/// authority; this is a fast path only.
pub fn lemma_bbw_g210(p: i64, q: usize, i: i64) -> Result<bool> {
    if q >= 8 {
        return Err(Error::OutOfRange(format!("q must be < 8, got {q}")));
    }
    if p < 0 {
        return Err(Error::OutOfRange(format!("p must be ≥ 0, got {p}")));
    }
    let qi = q as i64;
    let not_acyclic = i >= 10
        || p + i <= 0
        || (p + qi + i == 9 && i <= 1)
        || (qi + i == 10 && p + i >= 10);
    Ok(!not_acyclic)
}

/// The bundle `S^p U ⊗ Λ^q Q (−i)` on `Gr(2,n)`.
pub fn sym_u_wedge_q(n: usize, p: i64, q: usize, i: i64) -> Result<HomogeneousBundle> {
    let ambient = FlagAmbient::grassmannian(2, n)?;
    if q > n - 2 {
        return Err(Error::OutOfRange(format!("Λ^{q} of a rank-{} bundle", n - 2)));
    }
    let mut weight = Vec::with_capacity(n);
    weight.push(p + i);
    weight.push(i);
    weight.extend(core::iter::repeat_n(1, q));
    weight.extend(core::iter::repeat_n(0, n - 2 - q));
    HomogeneousBundle::new(ambient, weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{binomial, partitions_in_box};

    fn gr(k: usize, n: usize) -> FlagAmbient {
        FlagAmbient::grassmannian(k, n).unwrap()
    }

    /// `O(t)` on `Gr(k,n)`: `det U*` is `O(1)`, so the U-block carries `−t`.
    fn line_bundle(k: usize, n: usize, t: i64) -> HomogeneousBundle {
        let mut weight = vec![-t; k];
        weight.extend(std::iter::repeat_n(0, n - k));
        HomogeneousBundle::new(gr(k, n), weight).unwrap()
    }

    #[test]
    fn calibration_sections_of_pluecker_bundle() {
        for (k, n) in [(1, 4), (2, 5), (3, 10), (2, 10)] {
            let table = bbw_cohomology(&line_bundle(k, n, 1));
            assert_eq!(table.max_degree(), Some(0));
            assert_eq!(table.dim_in_degree(0), binomial(n as u64, k as u64));
        }
    }

    #[test]
    fn calibration_hodge_numbers_of_forms() {
        // h^q(Ω^j_Gr) = δ_{q,j} · #partitions of j in the box.
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            let l = n - k;
            for j in 0..=k * l {
                let mut table = CohomologyTable::empty();
                for alpha in partitions_in_box(j, k, l) {
                    table.absorb(&bbw_cohomology(
                        &twisted_form_summand(&alpha, k, l, 0).unwrap(),
                    ));
                }
                let expected = partitions_in_box(j, k, l).len();
                assert_eq!(table.dim_in_degree(j), BigUint::from(expected));
                assert_eq!(table.entries().count(), if expected == 0 { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn serre_twist_on_projective_space() {
        // O(−n) on P^(n−1) has exactly H^(n−1) = C.
        for n in 2..=10usize {
            let table = bbw_cohomology(&line_bundle(1, n, -(n as i64)));
            assert_eq!(table.max_degree(), Some(n - 1));
            assert_eq!(table.dim_in_degree(n - 1), BigUint::from(1u32));
        }
    }

    #[test]
    fn structure_sheaf_has_only_global_functions() {
        for blocks in [vec![1, 3], vec![2, 8], vec![1, 2, 6]] {
            let ambient = FlagAmbient::new(blocks).unwrap();
            let zero = vec![0i64; ambient.n()];
            let table = bbw_cohomology(&HomogeneousBundle::new(ambient, zero).unwrap());
            assert_eq!(table.max_degree(), Some(0));
            assert_eq!(table.dim_in_degree(0), BigUint::from(1u32));
        }
    }

    #[test]
    fn traceless_endomorphisms_of_quotient_acyclic_on_p9() {
        // End₀(Q) on P⁹, weight (0 | 1, 0, ..., 0, −1).
        let ambient = FlagAmbient::projective_space(10).unwrap();
        let mut weight = vec![0i64; 10];
        weight[1] = 1;
        weight[9] = -1;
        let table = bbw_cohomology(&HomogeneousBundle::new(ambient, weight).unwrap());
        assert!(table.is_acyclic());
    }

    #[test]
    fn snow_examples_top_degree() {
        let zero = Partition::empty();
        let got = snow_contributes(&zero, 3, 7, 10, 0).unwrap();
        assert_eq!(got, Some((21, BigUint::from(1u32))));

        let one = Partition::new(vec![1]).unwrap();
        let got = snow_contributes(&one, 3, 7, 10, 1).unwrap();
        assert_eq!(got, Some((21, BigUint::from(99u32))));
    }

    #[test]
    fn snow_no_contribution_below_n() {
        // For l > 2k every α with i + j < n contributes nothing.
        let (k, l) = (3, 7);
        let n = (k + l) as i64;
        for i in 1..n {
            for j in 0..=(n - i - 1) as usize {
                for alpha in partitions_in_box(j, k, l) {
                    assert_eq!(snow_contributes(&alpha, k, l, i, j).unwrap(), None);
                }
            }
        }
    }

    #[test]
    fn snow_rejects_box_violation() {
        let alpha = Partition::new(vec![5]).unwrap();
        assert!(snow_contributes(&alpha, 2, 3, 1, 5).is_err());
    }

    #[test]
    fn lemma_g210_examples() {
        assert!(!lemma_bbw_g210(0, 0, 0).unwrap()); // O, condition p+i ≤ 0
        assert!(lemma_bbw_g210(1, 0, 1).unwrap()); // U(−1) is acyclic
        assert!(!lemma_bbw_g210(0, 0, 10).unwrap()); // condition i ≥ 10
        assert!(lemma_bbw_g210(0, 8, 0).is_err());
        assert!(lemma_bbw_g210(-1, 0, 0).is_err());
    }

    #[test]
    fn lemma_g210_sound_against_rho_shift() {
        // In the regime p + i ≤ 9 the four conditions characterize
        // non-acyclicity exactly; the ρ-shift must agree in both
        // directions there.
        for p in 0..=12i64 {
            for q in 0..8usize {
                for i in -4..=12i64 {
                    if p + i > 9 {
                        continue;
                    }
                    let cleared = lemma_bbw_g210(p, q, i).unwrap();
                    let table = bbw_cohomology(&sym_u_wedge_q(10, p, q, i).unwrap());
                    assert_eq!(
                        cleared,
                        table.is_acyclic(),
                        "S^{p}U ⊗ Λ^{q}Q(−{i})"
                    );
                }
            }
        }
    }

    #[test]
    fn lemma_g210_gap_family_outside_regime() {
        // For i ≤ 1 and p + i ≥ 10 the condition list clears bundles that
        // are in fact non-acyclic; S⁹U(−1) carries H⁸ of dimension 10.
        assert!(lemma_bbw_g210(9, 0, 1).unwrap());
        let table = bbw_cohomology(&sym_u_wedge_q(10, 9, 0, 1).unwrap());
        assert_eq!(table.max_degree(), Some(8));
        assert_eq!(table.dim_in_degree(8), BigUint::from(10u32));
    }

    #[test]
    fn acyclicity_on_projective_space_iff_rho_hit() {
        // On P^(n−1), S_α Q(−l) is acyclic iff some α_q − q + n = l.
        for n in 3..=10usize {
            let rank = n - 1;
            for size in 0..=4usize {
                for alpha in partitions_in_box(size, rank, 3) {
                    for l in -2..=(n as i64 + 4) {
                        let mut weight = vec![l];
                        for r in 0..rank {
                            weight.push(alpha.part(r) as i64);
                        }
                        let bundle =
                            HomogeneousBundle::new(FlagAmbient::projective_space(n).unwrap(), weight)
                                .unwrap();
                        let predicted = (1..=rank)
                            .any(|q| alpha.part(q - 1) as i64 - q as i64 + n as i64 == l);
                        assert_eq!(
                            bbw_cohomology(&bundle).is_acyclic(),
                            predicted,
                            "S_{:?}Q(−{l}) on P^{}",
                            alpha.parts(),
                            n - 1
                        );
                    }
                }
            }
        }
    }
}
