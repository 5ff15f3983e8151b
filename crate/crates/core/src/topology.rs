//! Almost trivial group topologies.
//!
//! A group topology is almost trivial when the closure `N` of the identity is
//! open; it is then determined by the normal subgroup `N` and written `ζ_N`.
//! Open sets are unions of cosets of `N`. On a finite group every group
//! topology is of this form (finite groups are totally Markov), so `ζ_N` is the
//! only representation offered here. `δ_G = ζ_{e}` is discrete and
//! `ι_G = ζ_G` is indiscrete. `N ↦ ζ_N` reverses order: `ζ_L ≤ ζ_N` (coarser)
//! iff `N ⊆ L`.

use crate::error::{Error, Result};
use crate::group::{center, centralizer, direct_product, BuildOptions, Element, FiniteGroup};
use crate::subgroup::{quotient_group, Embedding, QuotientMap, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlmostTrivialTopology {
    kernel: Subgroup,
}

impl AlmostTrivialTopology {
    pub fn new(kernel: Subgroup) -> Result<Self> {
        if !kernel.is_normal() {
            return Err(Error::NotNormal);
        }
        Ok(AlmostTrivialTopology { kernel })
    }

    pub fn discrete(group: &FiniteGroup) -> Self {
        AlmostTrivialTopology {
            kernel: Subgroup::trivial(group),
        }
    }

    pub fn indiscrete(group: &FiniteGroup) -> Self {
        AlmostTrivialTopology {
            kernel: Subgroup::whole(group),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.kernel.group()
    }

    /// `N_τ`, the closure of the identity.
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn is_discrete(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.kernel.is_whole()
    }

    /// A subgroup is open iff it contains the kernel.
    pub fn is_open(&self, sub: &Subgroup) -> Result<bool> {
        self.check_group(sub.group())?;
        Ok(self.kernel.is_subset_of(sub))
    }

    /// Supremum: kernel `N ∩ L`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_group(other.group())?;
        AlmostTrivialTopology::new(self.kernel.intersection(&other.kernel))
    }

    /// Infimum: kernel `N L`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_group(other.group())?;
        AlmostTrivialTopology::new(self.kernel.join(&other.kernel))
    }

    fn check_group(&self, group: &FiniteGroup) -> Result<()> {
        if self.group().same_group(group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }
}

pub fn make_topology(group: &FiniteGroup, kernel: &Subgroup) -> Result<AlmostTrivialTopology> {
    if !kernel.group().same_group(group) {
        return Err(Error::GroupMismatch);
    }
    AlmostTrivialTopology::new(kernel.clone())
}

/// True iff `coarser ≤ finer`, i.e. `kernel(finer) ⊆ kernel(coarser)`.
pub fn leq(coarser: &AlmostTrivialTopology, finer: &AlmostTrivialTopology) -> Result<bool> {
    coarser.check_group(finer.group())?;
    Ok(finer.kernel.is_subset_of(&coarser.kernel))
}

/// A finite set `F` whose centralizer is the center.
#[derive(Clone, Debug)]
pub struct TaimanovWitness {
    pub elements: Vec<Element>,
    pub centralizer: Subgroup,
}

/// The Taimanov topology, generated by the centralizers of finite subsets. On a
/// finite group it is `ζ_{Z(G)}`.
///
/// The witness is grown greedily: each round adds the element whose centralizer
/// cuts the running intersection down the most, smallest id on ties. It is not
/// claimed to be minimal.
pub fn taimanov_topology(group: &FiniteGroup) -> (AlmostTrivialTopology, TaimanovWitness) {
    let z = center(group);
    let mut current: Vec<Element> = group.elements().collect();
    let mut chosen = Vec::new();
    while current.len() > z.order() {
        let mut best: Option<(usize, Element)> = None;
        for x in group.elements() {
            if z.contains(x) {
                continue;
            }
            let kept = current.iter().filter(|&&y| group.commutes(x, y)).count();
            if best.is_none_or(|(count, _)| kept < count) {
                best = Some((kept, x));
            }
        }
        let (_, x) = best.expect("a non-central element exists while above the center");
        chosen.push(x);
        current.retain(|&y| group.commutes(x, y));
    }
    let witness = TaimanovWitness {
        centralizer: centralizer(group, &chosen),
        elements: chosen,
    };
    debug_assert_eq!(witness.centralizer, z);
    (AlmostTrivialTopology { kernel: z }, witness)
}

/// Restriction of `ζ_N` to a subgroup `H`: `ζ_{H ∩ N}` on `H`.
pub fn induced(
    topology: &AlmostTrivialTopology,
    sub: &Subgroup,
) -> Result<(AlmostTrivialTopology, Embedding)> {
    topology.check_group(sub.group())?;
    let embedding = sub.as_group();
    let kernel = embedding.restrict(&topology.kernel);
    Ok((AlmostTrivialTopology::new(kernel)?, embedding))
}

/// Quotient of `ζ_N` by a normal `N0`: `ζ_{N0 N / N0}` on `G/N0`.
pub fn quotient_topology(
    topology: &AlmostTrivialTopology,
    n0: &Subgroup,
) -> Result<(AlmostTrivialTopology, QuotientMap)> {
    topology.check_group(n0.group())?;
    let map = quotient_group(topology.group(), n0)?;
    let kernel = map.image(&topology.kernel);
    Ok((AlmostTrivialTopology::new(kernel)?, map))
}

/// `ζ_{N1} × ζ_{N2} = ζ_{N1 × N2}` on the product group rebuilt from both specs.
pub fn product_topology(
    left: &AlmostTrivialTopology,
    right: &AlmostTrivialTopology,
    options: &BuildOptions,
) -> Result<AlmostTrivialTopology> {
    let product = direct_product(left.group(), right.group(), options)?;
    AlmostTrivialTopology::new(product.product_subgroup(&left.kernel, &right.kernel))
}
