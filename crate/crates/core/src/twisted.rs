//! Cohomology of twisted forms `Ω^j_Gr(−i)` and Hodge diamonds of
//! Grassmannians.
//!
//! The bundle of `j`-forms on `Gr(k, k+l)` decomposes as the sum of
//! `S_(α^∨) Q* ⊗ S_α U` over partitions `α` of `j` inside the `k×l` box;
//! its twisted cohomology is the degreewise sum of the ρ-shift tables of the
//! summands. The signed Euler characteristic is computed from the table, not
//! asserted from any closed form.

use num_bigint::BigInt;

use crate::bbw::{bbw_cohomology, twisted_form_summand, CohomologyTable};
use crate::hodge::HodgePolynomial;
use crate::partitions::partitions_in_box;
use crate::{Error, Result};

/// Cohomology table of `Ω^j_Gr(k,n)(−i)`. The twist is signed: negative `i`
/// means a positive twist `Ω^j(|i|)`.
pub fn twisted_form_cohomology(k: usize, n: usize, j: usize, i: i64) -> Result<CohomologyTable> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(alloc::format!(
            "Gr({k},{n}) requires 0 < k < n"
        )));
    }
    let l = n - k;
    if j > k * l {
        return Err(Error::OutOfRange(alloc::format!(
            "Ω^{j} vanishes on a {}-fold",
            k * l
        )));
    }
    let mut table = CohomologyTable::empty();
    for alpha in partitions_in_box(j, k, l) {
        table.absorb(&bbw_cohomology(&twisted_form_summand(&alpha, k, l, i)?));
    }
    Ok(table)
}

/// `χ(Ω^j_Gr(k,n)(−i)) = Σ_q (−1)^q h^q`.
pub fn euler_char_twisted(k: usize, n: usize, j: usize, i: i64) -> Result<BigInt> {
    Ok(twisted_form_cohomology(k, n, j, i)?.euler_characteristic())
}

/// The Hodge diamond of `Gr(k,n)`: `h^{p,p}` counts partitions of `p` in
/// the `k×(n−k)` box, all other Hodge numbers vanish.
pub fn grassmannian_diamond(k: usize, n: usize) -> Result<HodgePolynomial> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(alloc::format!(
            "Gr({k},{n}) requires 0 < k < n"
        )));
    }
    let l = n - k;
    let dim = k * l;
    let mut out = HodgePolynomial::new(dim);
    for p in 0..=dim {
        let count = partitions_in_box(p, k, l).len();
        out.set(p, p, count.into())?;
    }
    Ok(out)
}
