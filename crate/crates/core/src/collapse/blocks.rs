//! Collapsing one facet split into blocks whose cross pairs are free faces.

use super::{CollapseTrace, CollapsiblePair};
use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};

fn check_facet(k: &Complex, sigma: &Simplex) -> Result<()> {
    if k.facets().binary_search(sigma).is_err() {
        return Err(Error::Precondition(format!("{sigma} is not a facet")));
    }
    Ok(())
}

fn check_partition(sigma: &Simplex, blocks: &[&Simplex]) -> Result<()> {
    let total: usize = blocks.iter().map(|b| b.len()).sum();
    let union = blocks
        .iter()
        .fold(Simplex::default(), |acc, b| acc.union(b));
    if total != union.len() || union != *sigma {
        return Err(Error::Precondition(format!(
            "blocks do not partition {sigma}"
        )));
    }
    Ok(())
}

fn check_free_cross_pairs(k: &Complex, sigma: &Simplex, a: &Simplex, b: &Simplex) -> Result<()> {
    for &x in a.vertices() {
        for &y in b.vertices() {
            let edge = Simplex::new([x, y]);
            if k.facets_containing(&edge).any(|f| f != sigma) {
                return Err(Error::Precondition(format!(
                    "{edge} is not a free face of {sigma}"
                )));
            }
        }
    }
    Ok(())
}

/// Collapses the facet `sigma = A ⊔ B ⊔ C`, given that every `{a, b}` with
/// `a ∈ A`, `b ∈ B` is a free face of `sigma`.
///
/// With `A = {a_1 < … < a_p}` and `B = {b_1 < … < b_q}` the steps are
/// `({a_i, b_j}, σ ∖ {a_1..a_{i−1}} ∖ {b_1..b_{j−1}})`, all `i, j` when `C` is
/// nonempty and `j < q` for `i = p` when `C` is empty. The end facets are
///
/// * `C ≠ ∅`: `σ∖A` and `σ∖B`;
/// * `C = ∅`, `|A| = 1`: `B` and `{a_p, b_q}`;
/// * `C = ∅`, `|A|, |B| ≥ 2`: `A`, `B` and `{a_p, b_q}`;
/// * `C = ∅`, `|B| = 1`: `A` and `{a_p, b_q}` (the same schedule).
pub fn two_block_collapse(
    k: &Complex,
    sigma: &Simplex,
    a: &Simplex,
    b: &Simplex,
    c: &Simplex,
) -> Result<CollapseTrace> {
    check_facet(k, sigma)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::Precondition("A and B must be nonempty".into()));
    }
    check_partition(sigma, &[a, b, c])?;
    check_free_cross_pairs(k, sigma, a, b)?;

    let (av, bv) = (a.vertices(), b.vertices());
    let (p, q) = (av.len(), bv.len());
    let mut trace = CollapseTrace::identity(k.clone());
    for i in 0..p {
        let rows = if c.is_empty() && i + 1 == p { q - 1 } else { q };
        for j in 0..rows {
            let removed = Simplex::new(av[..i].iter().chain(&bv[..j]).copied());
            trace.push(CollapsiblePair {
                free: Simplex::new([av[i], bv[j]]),
                facet: sigma.minus(&removed),
            })?;
        }
    }
    Ok(trace)
}

/// Collapses the facet `sigma = A_1 ⊔ … ⊔ A_k ⊔ C`, given that every pair of
/// vertices from different parts is a free face of `sigma`.
///
/// * `C ≠ ∅`: ends at `A_1 ⊔ C, …, A_k ⊔ C`, by collapsing off `A_i` against
///   `A_{i+1} ⊔ … ⊔ A_k` with `C` as the spare block, for `i = 1..k−1`.
/// * `C = ∅`: ends at `A_1, …, A_k` and `{max A_i, max A_k}` for `i < k`. The
///   first `k−2` rounds use `A_k` as the spare block and leave `A_i ⊔ A_k`,
///   each of which is then split by [`two_block_collapse`] with empty spare.
///
/// A single part leaves the complex unchanged.
pub fn multi_block_collapse(
    k: &Complex,
    sigma: &Simplex,
    parts: &[Simplex],
    c: &Simplex,
) -> Result<CollapseTrace> {
    check_facet(k, sigma)?;
    if parts.is_empty() || parts.iter().any(Simplex::is_empty) {
        return Err(Error::Precondition("parts must be nonempty".into()));
    }
    let mut blocks: Vec<&Simplex> = parts.iter().collect();
    blocks.push(c);
    check_partition(sigma, &blocks)?;
    for (i, pi) in parts.iter().enumerate() {
        for pj in &parts[i + 1..] {
            check_free_cross_pairs(k, sigma, pi, pj)?;
        }
    }

    let n = parts.len();
    let union_of = |range: &[Simplex]| range.iter().fold(Simplex::default(), |acc, s| acc.union(s));
    let mut trace = CollapseTrace::identity(k.clone());
    if !c.is_empty() {
        for i in 0..n.saturating_sub(1) {
            let rest = union_of(&parts[i + 1..]);
            let facet = parts[i].union(&rest).union(c);
            let step = two_block_collapse(&trace.end, &facet, &parts[i], &rest, c)?;
            trace.extend(step)?;
        }
        return Ok(trace);
    }
    if n == 1 {
        return Ok(trace);
    }
    let last = &parts[n - 1];
    for i in 0..n - 2 {
        let middle = union_of(&parts[i + 1..n - 1]);
        let facet = parts[i].union(&middle).union(last);
        let step = two_block_collapse(&trace.end, &facet, &parts[i], &middle, last)?;
        trace.extend(step)?;
    }
    for part in &parts[..n - 1] {
        let facet = part.union(last);
        let step = two_block_collapse(&trace.end, &facet, part, last, &Simplex::default())?;
        trace.extend(step)?;
    }
    Ok(trace)
}
