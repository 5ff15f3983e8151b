//! Taimanov, totally Taimanov, Arnautov, perfect and A-complete classification.
//!
//! On a finite group:
//! - `G` is Taimanov iff `Z(G) = {e}` (the Taimanov topology `ζ_{Z(G)}` is discrete);
//! - totally Taimanov iff every quotient `G/N` is Taimanov;
//! - `ζ_N` is A-complete iff `G/N` is Taimanov, equivalently iff no normal
//!   `N' ⊋ N` has `[G, N'] ⊆ N`;
//! - Arnautov (every group topology A-complete) iff `[G, N] = N` for every
//!   normal `N`, which for finite groups coincides with totally Taimanov.
//!
//! The trivial group counts as Taimanov: its center `{e}` is trivial.
//! Every finite group is totally Markov, so that flag is constant.

use crate::error::{Error, Result};
use crate::group::{center, FiniteGroup};
use crate::spec::GroupSpec;
use crate::subgroup::{
    all_normal_subgroups, commutator_subgroup, derived_subgroup, quotient_group, Subgroup,
};
use crate::topology::{make_topology, AlmostTrivialTopology};

pub fn is_taimanov(group: &FiniteGroup) -> bool {
    center(group).is_trivial()
}

pub fn is_perfect(group: &FiniteGroup) -> bool {
    derived_subgroup(group).is_whole()
}

fn quotient_is_taimanov(group: &FiniteGroup, n: &Subgroup) -> Result<bool> {
    let map = quotient_group(group, n)?;
    Ok(is_taimanov(map.target()))
}

/// `(true, None)` or `(false, Some(N))` for the smallest `N` with `Z(G/N) ≠ {e}`.
pub fn is_totally_taimanov(group: &FiniteGroup) -> Result<(bool, Option<Subgroup>)> {
    let normals = all_normal_subgroups(group)?;
    totally_taimanov_among(group, &normals)
}

fn totally_taimanov_among(
    group: &FiniteGroup,
    normals: &[Subgroup],
) -> Result<(bool, Option<Subgroup>)> {
    for n in normals {
        if !quotient_is_taimanov(group, n)? {
            return Ok((false, Some(n.clone())));
        }
    }
    Ok((true, None))
}

#[derive(Clone, Debug)]
pub struct ACompleteness {
    pub is_a_complete: bool,
    /// Smallest normal `N' ⊋ N` with `[G, N'] ⊆ N`, present iff not A-complete.
    pub coarser_witness: Option<Subgroup>,
}

/// A-completeness of `ζ_N` decided by `Z(G/N) = {e}` and cross-checked against
/// the absence of a normal `N' ⊋ N` with `[G, N'] ⊆ N`.
pub fn is_a_complete(topology: &AlmostTrivialTopology) -> Result<bool> {
    let normals = all_normal_subgroups(topology.group())?;
    Ok(a_completeness(topology, &normals)?.is_a_complete)
}

/// As [`is_a_complete`], reusing a precomputed normal subgroup list.
pub fn a_completeness(
    topology: &AlmostTrivialTopology,
    normals: &[Subgroup],
) -> Result<ACompleteness> {
    let group = topology.group();
    let n = topology.kernel();
    let by_quotient = quotient_is_taimanov(group, n)?;
    let whole = Subgroup::whole(group);
    let coarser_witness = normals
        .iter()
        .find(|m| *m != n && n.is_subset_of(m) && commutator_subgroup(&whole, m).is_subset_of(n))
        .cloned();
    if by_quotient != coarser_witness.is_none() {
        return Err(Error::InternalInconsistency(format!(
            "A-completeness criteria disagree for a kernel of order {}",
            n.order()
        )));
    }
    Ok(ACompleteness {
        is_a_complete: by_quotient,
        coarser_witness,
    })
}

/// A normal `N` with `[G, N] ⊊ N`, with the semitopological but not open identity
/// `(G, ζ_{[G,N]}) → (G, ζ_N)` it produces.
#[derive(Clone, Debug)]
pub struct ArnautovWitness {
    pub normal: Subgroup,
    pub commutator: Subgroup,
    pub finer: AlmostTrivialTopology,
    pub coarser: AlmostTrivialTopology,
}

#[derive(Clone, Debug)]
pub struct ArnautovVerdict {
    pub is_arnautov: bool,
    pub witness: Option<ArnautovWitness>,
}

pub fn is_arnautov(group: &FiniteGroup) -> Result<ArnautovVerdict> {
    let normals = all_normal_subgroups(group)?;
    arnautov_among(group, &normals)
}

fn arnautov_among(group: &FiniteGroup, normals: &[Subgroup]) -> Result<ArnautovVerdict> {
    let whole = Subgroup::whole(group);
    let mut witness = None;
    for n in normals {
        let c = commutator_subgroup(&whole, n);
        if c != *n {
            witness = Some(ArnautovWitness {
                finer: make_topology(group, &c)?,
                coarser: make_topology(group, n)?,
                normal: n.clone(),
                commutator: c,
            });
            break;
        }
    }
    let verdict = ArnautovVerdict {
        is_arnautov: witness.is_none(),
        witness,
    };
    let (totally, _) = totally_taimanov_among(group, normals)?;
    if totally != verdict.is_arnautov {
        return Err(Error::InternalInconsistency(
            "Arnautov and totally Taimanov disagree on a finite group".into(),
        ));
    }
    Ok(verdict)
}

#[derive(Clone, Debug)]
pub struct NormalSubgroupEntry {
    pub index: usize,
    pub subgroup: Subgroup,
    pub a_complete: bool,
    pub commutator_with_g_order: usize,
    /// Index of the smallest `N' ⊋ N` with `[G, N'] ⊆ N` when `ζ_N` is not A-complete.
    pub a_complete_witness: Option<usize>,
}

/// Indices into the normal subgroup table of the subgroup refuting each false flag.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlagWitnesses {
    /// `G'`, a proper subgroup.
    pub perfect: Option<usize>,
    /// `Z(G)`, nontrivial.
    pub taimanov: Option<usize>,
    /// Smallest `N` with `Z(G/N)` nontrivial.
    pub totally_taimanov: Option<usize>,
    /// Smallest `N` with `[G, N] ⊊ N`.
    pub arnautov: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub spec: Option<GroupSpec>,
    pub order: usize,
    pub center_order: usize,
    pub is_perfect: bool,
    pub is_taimanov: bool,
    pub is_totally_taimanov: bool,
    pub is_arnautov: bool,
    /// Every finite group is totally Markov.
    pub is_markov: bool,
    pub normal_subgroups: Vec<NormalSubgroupEntry>,
    pub witnesses: FlagWitnesses,
}

pub fn classify(group: &FiniteGroup) -> Result<ClassificationReport> {
    let normals = all_normal_subgroups(group)?;
    let position = |sub: &Subgroup| {
        normals.iter().position(|n| n == sub).ok_or_else(|| {
            Error::InternalInconsistency("subgroup missing from the normal lattice".into())
        })
    };
    let whole = Subgroup::whole(group);
    let z = center(group);
    let derived = derived_subgroup(group);
    let is_perfect = derived.is_whole();
    let is_taimanov = z.is_trivial();
    let (is_totally_taimanov, tt_witness) = totally_taimanov_among(group, &normals)?;
    let arnautov = arnautov_among(group, &normals)?;

    let mut entries = Vec::with_capacity(normals.len());
    for (index, n) in normals.iter().enumerate() {
        let topology = make_topology(group, n)?;
        let completeness = a_completeness(&topology, &normals)?;
        entries.push(NormalSubgroupEntry {
            index,
            subgroup: n.clone(),
            a_complete: completeness.is_a_complete,
            commutator_with_g_order: commutator_subgroup(&whole, n).order(),
            a_complete_witness: completeness
                .coarser_witness
                .as_ref()
                .map(&position)
                .transpose()?,
        });
    }

    let witnesses = FlagWitnesses {
        perfect: if is_perfect {
            None
        } else {
            Some(position(&derived)?)
        },
        taimanov: if is_taimanov {
            None
        } else {
            Some(position(&z)?)
        },
        totally_taimanov: tt_witness.as_ref().map(&position).transpose()?,
        arnautov: arnautov
            .witness
            .as_ref()
            .map(|w| position(&w.normal))
            .transpose()?,
    };

    let report = ClassificationReport {
        spec: group.spec().cloned(),
        order: group.order(),
        center_order: z.order(),
        is_perfect,
        is_taimanov,
        is_totally_taimanov,
        is_arnautov: arnautov.is_arnautov,
        is_markov: true,
        normal_subgroups: entries,
        witnesses,
    };
    report.check_consistency()?;
    Ok(report)
}

impl ClassificationReport {
    /// Implications that must hold between the flags of a finite group.
    pub fn check_consistency(&self) -> Result<()> {
        let implications = [
            (
                self.is_arnautov,
                self.is_totally_taimanov,
                "Arnautov => totally Taimanov",
            ),
            (
                self.is_totally_taimanov,
                self.is_arnautov,
                "totally Taimanov => Arnautov",
            ),
            (
                self.is_totally_taimanov,
                self.is_perfect,
                "totally Taimanov => perfect",
            ),
            (
                self.is_totally_taimanov,
                self.is_taimanov,
                "totally Taimanov => Taimanov",
            ),
            (
                self.is_taimanov,
                self.center_order == 1,
                "Taimanov => trivial center",
            ),
            (self.is_arnautov, self.is_perfect, "Arnautov => perfect"),
        ];
        for (premise, conclusion, name) in implications {
            if premise && !conclusion {
                return Err(Error::InternalInconsistency(format!("violated: {name}")));
            }
        }
        Ok(())
    }

    pub fn a_complete_indices(&self) -> Vec<usize> {
        self.normal_subgroups
            .iter()
            .filter(|e| e.a_complete)
            .map(|e| e.index)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::parser::parse_group_spec;
    use crate::topology::AlmostTrivialTopology;

    fn build(text: &str) -> FiniteGroup {
        build_group(&parse_group_spec(text).unwrap()).unwrap()
    }

    #[test]
    fn taimanov_examples() {
        assert!(!is_taimanov(&build("C2")));
        assert!(is_taimanov(&build("S3")));
        assert!(is_taimanov(&build("S4")));
        assert!(is_taimanov(&build("C1")));
    }

    #[test]
    fn totally_taimanov_examples() {
        assert!(is_totally_taimanov(&build("A5")).unwrap().0);
        let (ok, witness) = is_totally_taimanov(&build("S4")).unwrap();
        assert!(!ok);
        // quotients by {e} and V4 are centerless; S4/A4 is C2
        assert_eq!(witness.unwrap().order(), 12);
        assert!(is_totally_taimanov(&build("C1")).unwrap().0);
    }

    #[test]
    fn perfect_examples() {
        assert!(is_perfect(&build("A5")));
        assert!(!is_perfect(&build("S4")));
        assert!(is_perfect(&build("C1")));
    }

    #[test]
    fn a_complete_examples() {
        let s4 = build("S4");
        assert!(is_a_complete(&AlmostTrivialTopology::indiscrete(&s4)).unwrap());
        let s3 = build("S3");
        assert!(is_a_complete(&AlmostTrivialTopology::discrete(&s3)).unwrap());
        let a4 = crate::subgroup::derived_subgroup(&s4);
        assert!(!is_a_complete(&make_topology(&s4, &a4).unwrap()).unwrap());
    }

    #[test]
    fn arnautov_examples() {
        assert!(is_arnautov(&build("A5")).unwrap().is_arnautov);
        let v = is_arnautov(&build("S4")).unwrap();
        assert!(!v.is_arnautov);
        let w = v.witness.unwrap();
        // {e}, V4 and A4 all satisfy [G, N] = N
        assert!(w.normal.is_whole());
        assert_eq!(w.commutator.order(), 12);
        assert!(
            crate::semitop::is_semitopological(&w.finer, &w.coarser)
                .unwrap()
                .is_semitopological
        );
        assert_ne!(w.finer, w.coarser);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&build("C6")).unwrap();
        assert!(!r.is_perfect && !r.is_taimanov && !r.is_arnautov && !r.is_totally_taimanov);
        assert_eq!(r.normal_subgroups.len(), 4);
        assert_eq!(r.a_complete_indices(), vec![3]);
        assert_eq!(r.witnesses.taimanov, Some(3));

        let r = classify(&build("A5")).unwrap();
        assert!(r.is_perfect && r.is_taimanov && r.is_totally_taimanov && r.is_arnautov);
        assert_eq!(r.a_complete_indices(), vec![0, 1]);
        assert_eq!(r.witnesses, FlagWitnesses::default());

        let r = classify(&build("Dih(C9)")).unwrap();
        assert!(r.is_taimanov);
        assert!(!r.is_perfect);

        let r = classify(&build("C1")).unwrap();
        assert_eq!(r.normal_subgroups.len(), 1);
        assert!(r.is_arnautov && r.is_taimanov && r.is_perfect);
    }
}
