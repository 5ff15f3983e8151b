//! Semitopological identity maps between almost trivial topologies.
//!
//! For `ζ_N` finer than `ζ_L` (`N ⊆ L`), the identity `(G, ζ_N) → (G, ζ_L)` is
//! semitopological iff `[G, L] ⊆ N`. The general criterion also asks for a
//! thinness condition on neighbourhoods; almost trivial groups are SIN, hence
//! thin, so that condition always holds here and is not checked.

use crate::error::{Error, Result};
use crate::group::Element;
use crate::subgroup::{commutator_subgroup, Subgroup};
use crate::topology::AlmostTrivialTopology;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemitopVerdict {
    pub is_semitopological: bool,
    /// First `(g, l)` in id order with `[g, l] ∉ N`, present iff the verdict is false.
    pub violating_pair: Option<(Element, Element)>,
}

/// Least number of semitopological links between two topologies.
#[derive(Clone, Debug)]
pub struct StepCount {
    pub steps: Option<usize>,
    /// Kernels of the realizing chain from the coarse end to the fine end:
    /// `L = K_0 ⊇ K_1 ⊇ ... ⊇ K_steps = N`. Empty when `steps` is absent.
    pub chain: Vec<Subgroup>,
}

/// Returns `(N, L)` after checking `N ⊆ L` in the same group.
fn kernels<'a>(
    finer: &'a AlmostTrivialTopology,
    coarser: &'a AlmostTrivialTopology,
) -> Result<(&'a Subgroup, &'a Subgroup)> {
    if !finer.group().same_group(coarser.group()) {
        return Err(Error::GroupMismatch);
    }
    let (n, l) = (finer.kernel(), coarser.kernel());
    if !n.is_subset_of(l) {
        return Err(Error::NotComparable);
    }
    Ok((n, l))
}

/// Decides `id: (G, finer) → (G, coarser)` through `[G, L] ⊆ N`.
pub fn is_semitopological(
    finer: &AlmostTrivialTopology,
    coarser: &AlmostTrivialTopology,
) -> Result<SemitopVerdict> {
    let (n, l) = kernels(finer, coarser)?;
    let group = n.group();
    let whole = Subgroup::whole(group);
    if commutator_subgroup(&whole, l).is_subset_of(n) {
        return Ok(SemitopVerdict {
            is_semitopological: true,
            violating_pair: None,
        });
    }
    let pair = group
        .elements()
        .flat_map(|g| l.members().iter().map(move |&x| (g, x)))
        .find(|&(g, x)| !n.contains(group.commutator(g, x)))
        .ok_or_else(|| Error::InternalInconsistency("[G, L] ⊄ N but no violating pair".into()))?;
    Ok(SemitopVerdict {
        is_semitopological: false,
        violating_pair: Some(pair),
    })
}

/// Elementwise check: `[g, l] ∈ N` for every `g ∈ G` and every `l` in `L`, the
/// smallest identity neighbourhood of the coarser topology.
pub fn is_semitopological_oracle(
    finer: &AlmostTrivialTopology,
    coarser: &AlmostTrivialTopology,
) -> Result<bool> {
    let (n, l) = kernels(finer, coarser)?;
    let group = n.group();
    Ok(group.elements().all(|g| {
        l.members()
            .iter()
            .all(|&x| n.contains(group.commutator(g, x)))
    }))
}

/// `[G, [G, ... [G, L]]]` with `times` brackets.
fn iterated_commutator(l: &Subgroup, times: usize) -> Subgroup {
    let whole = Subgroup::whole(l.group());
    let mut k = l.clone();
    for _ in 0..times {
        let next = commutator_subgroup(&whole, &k);
        if next == k {
            break;
        }
        k = next;
    }
    k
}

/// n-step semitopological iff the `n`-fold iterated commutator of `G` with `L` lies in `N`.
pub fn is_n_step(
    finer: &AlmostTrivialTopology,
    coarser: &AlmostTrivialTopology,
    n: usize,
) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "step count must be at least 1".into(),
        ));
    }
    let (kernel_n, l) = kernels(finer, coarser)?;
    Ok(iterated_commutator(l, n).is_subset_of(kernel_n))
}

/// Least `n ≥ 1` for which the identity is n-step semitopological.
///
/// Iterates `K_i = [G, K_{i-1}]` from `K_0 = L` until `K_i ⊆ N` or the
/// sequence stops shrinking. The chain records `K_i N`, which keeps every
/// intermediate topology between the two endpoints.
pub fn min_steps(
    finer: &AlmostTrivialTopology,
    coarser: &AlmostTrivialTopology,
) -> Result<StepCount> {
    let (n, l) = kernels(finer, coarser)?;
    let whole = Subgroup::whole(n.group());
    let mut raw = vec![l.clone()];
    loop {
        let last = raw.last().expect("nonempty");
        let next = commutator_subgroup(&whole, last);
        if next.is_subset_of(n) {
            break;
        }
        if next == *last {
            return Ok(StepCount {
                steps: None,
                chain: Vec::new(),
            });
        }
        raw.push(next);
    }
    let mut chain: Vec<Subgroup> = raw.iter().map(|k| k.join(n)).collect();
    chain.push(n.clone());
    Ok(StepCount {
        steps: Some(chain.len() - 1),
        chain,
    })
}
