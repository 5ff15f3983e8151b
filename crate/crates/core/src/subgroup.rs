//! Subgroups, normal subgroups, commutators, central series and quotients.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// Upper bound on the size of a normal subgroup lattice we are willing to enumerate.
pub const MAX_NORMAL_SUBGROUPS: usize = 50_000;

/// A subgroup of a fixed parent group, identified by its element set.
#[derive(Clone)]
pub struct Subgroup {
    group: FiniteGroup,
    mask: FixedBitSet,
    members: Vec<Element>,
    generators: Vec<Element>,
    normal: bool,
}

/// Incremental subgroup closure (Dimino): the current subgroup is grown one
/// generator at a time as a union of right cosets of the previous one.
struct Closure<'g> {
    group: &'g FiniteGroup,
    members: Vec<Element>,
    mask: FixedBitSet,
    generators: Vec<Element>,
}

impl<'g> Closure<'g> {
    fn trivial(group: &'g FiniteGroup) -> Self {
        let mut mask = FixedBitSet::with_capacity(group.order());
        mask.insert(0);
        Closure {
            group,
            members: vec![Element::IDENTITY],
            mask,
            generators: Vec::new(),
        }
    }

    fn from_subgroup(sub: &'g Subgroup) -> Self {
        Closure {
            group: &sub.group,
            members: sub.members.clone(),
            mask: sub.mask.clone(),
            generators: sub.generators.clone(),
        }
    }

    fn contains(&self, x: Element) -> bool {
        self.mask.contains(x.index())
    }

    fn add_coset(&mut self, base: &[Element], x: Element) {
        for &h in base {
            let y = self.group.multiply(h, x);
            self.mask.insert(y.index());
            self.members.push(y);
        }
    }

    /// Adds `g` to the subgroup. Returns false if it was already a member.
    fn adjoin(&mut self, g: Element) -> bool {
        if self.contains(g) {
            return false;
        }
        let base = self.members.clone();
        self.generators.push(g);
        self.add_coset(&base, g);
        let mut reps = vec![Element::IDENTITY, g];
        let mut i = 1;
        while i < reps.len() {
            let r = reps[i];
            for s in 0..self.generators.len() {
                let x = self.group.multiply(r, self.generators[s]);
                if !self.contains(x) {
                    self.add_coset(&base, x);
                    reps.push(x);
                }
            }
            i += 1;
        }
        true
    }

    /// Adjoins conjugates `c g c^-1` of every generator from index `start` on,
    /// until the subgroup is invariant under all `conjugators`.
    fn close_under_conjugation(&mut self, conjugators: &[Element], start: usize) {
        let mut j = start;
        while j < self.generators.len() {
            let s = self.generators[j];
            for &c in conjugators {
                let t = self.group.conjugate(c, s);
                self.adjoin(t);
            }
            j += 1;
        }
    }

    fn finish(mut self) -> Subgroup {
        self.members.sort_unstable();
        let group = self.group.clone();
        let normal = group.generators().iter().all(|&g| {
            self.generators
                .iter()
                .all(|&s| self.mask.contains(group.conjugate(g, s).index()))
        });
        Subgroup {
            group,
            mask: self.mask,
            members: self.members,
            generators: self.generators,
            normal,
        }
    }
}

impl Subgroup {
    pub fn trivial(group: &FiniteGroup) -> Subgroup {
        Closure::trivial(group).finish()
    }

    pub fn whole(group: &FiniteGroup) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(group.order());
        mask.insert_range(..);
        Subgroup {
            group: group.clone(),
            mask,
            members: group.elements().collect(),
            generators: group.generators().to_vec(),
            normal: true,
        }
    }

    /// Wraps an element set already known to be a subgroup.
    pub(crate) fn from_closed_members(group: &FiniteGroup, members: Vec<Element>) -> Subgroup {
        let sub = generated_subgroup(group, &members);
        debug_assert_eq!(sub.order(), members.len(), "member set is not closed");
        sub
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Sorted element ids.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn contains(&self, x: Element) -> bool {
        self.mask.contains(x.index())
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.mask.is_subset(&other.mask)
    }

    fn same_parent(&self, other: &Subgroup) -> bool {
        self.group.same_group(&other.group)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        assert!(self.same_parent(other), "subgroups of different groups");
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup::from_closed_members(&self.group, members)
    }

    /// The subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        assert!(self.same_parent(other), "subgroups of different groups");
        let mut closure = Closure::from_subgroup(self);
        for &g in &other.generators {
            closure.adjoin(g);
        }
        closure.finish()
    }

    /// Promotes the subgroup to a standalone group, elements numbered in id order.
    pub fn as_group(&self) -> Embedding {
        let mut to_local = vec![u32::MAX; self.group.order()];
        for (i, &x) in self.members.iter().enumerate() {
            to_local[x.index()] = i as u32;
        }
        let generators = self
            .generators
            .iter()
            .map(|g| Element::new(to_local[g.index()] as usize))
            .collect();
        let group = FiniteGroup::derived(
            &self.group,
            self.members.clone(),
            to_local.clone(),
            generators,
        );
        Embedding {
            parent: self.group.clone(),
            group,
            inclusion: self.members.clone(),
            to_local,
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By order, then by sorted element set.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, normal {}", self.order(), self.normal)?;
        if self.order() <= 16 {
            let ids: Vec<String> = self.members.iter().map(|x| x.to_string()).collect();
            write!(f, ", {{{}}}", ids.join(","))?;
        }
        write!(f, ")")
    }
}

/// A subgroup viewed as a group of its own.
#[derive(Clone, Debug)]
pub struct Embedding {
    parent: FiniteGroup,
    group: FiniteGroup,
    inclusion: Vec<Element>,
    to_local: Vec<u32>,
}

impl Embedding {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn include(&self, x: Element) -> Element {
        self.inclusion[x.index()]
    }

    pub fn to_local(&self, x: Element) -> Option<Element> {
        match self.to_local[x.index()] {
            u32::MAX => None,
            i => Some(Element::new(i as usize)),
        }
    }

    /// `K ∩ H` as a subgroup of the local group.
    pub fn restrict(&self, sub: &Subgroup) -> Subgroup {
        assert!(
            sub.group.same_group(&self.parent),
            "subgroup of a different group"
        );
        let members = sub
            .members
            .iter()
            .filter_map(|&x| self.to_local(x))
            .collect();
        Subgroup::from_closed_members(&self.group, members)
    }

    /// Image of a local subgroup in the parent.
    pub fn extend(&self, sub: &Subgroup) -> Subgroup {
        assert!(
            sub.group.same_group(&self.group),
            "subgroup of a different group"
        );
        let members = sub.members.iter().map(|&x| self.include(x)).collect();
        Subgroup::from_closed_members(&self.parent, members)
    }
}

/// `⟨S⟩`, the smallest subgroup containing `set`.
pub fn generated_subgroup(group: &FiniteGroup, set: &[Element]) -> Subgroup {
    let mut closure = Closure::trivial(group);
    for &x in set {
        closure.adjoin(x);
    }
    closure.finish()
}

/// Smallest normal subgroup containing `set`.
pub fn normal_closure(group: &FiniteGroup, set: &[Element]) -> Subgroup {
    let mut closure = Closure::trivial(group);
    for &x in set {
        closure.adjoin(x);
    }
    closure.close_under_conjugation(group.generators(), 0);
    closure.finish()
}

/// Every normal subgroup, sorted by order and then element set.
///
/// Breadth-first over joins: each found normal subgroup is joined with the
/// normal closure of one more conjugacy class. Every normal subgroup is a
/// union of classes, so it is reached by a chain of such joins.
pub fn all_normal_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let reps: Vec<Element> = group
        .conjugacy_classes()
        .iter()
        .map(|class| class[0])
        .filter(|x| !x.is_identity())
        .collect();
    let trivial = Subgroup::trivial(group);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(trivial.mask.clone());
    let mut found = vec![trivial.clone()];
    let mut queue = VecDeque::from([trivial]);
    while let Some(n) = queue.pop_front() {
        for &x in &reps {
            if n.contains(x) {
                continue;
            }
            let mut closure = Closure::from_subgroup(&n);
            let start = closure.generators.len();
            closure.adjoin(x);
            closure.close_under_conjugation(group.generators(), start);
            if seen.contains(&closure.mask) {
                continue;
            }
            let m = closure.finish();
            seen.insert(m.mask.clone());
            if found.len() >= MAX_NORMAL_SUBGROUPS {
                return Err(Error::OrderCapExceeded {
                    cap: MAX_NORMAL_SUBGROUPS,
                });
            }
            found.push(m.clone());
            queue.push_back(m);
        }
    }
    found.sort();
    Ok(found)
}

/// `[H, K] = ⟨[h, k] : h ∈ H, k ∈ K⟩`.
///
/// Computed as the normal closure inside `⟨H, K⟩` of the commutators of
/// generators, which is the same subgroup.
pub fn commutator_subgroup(h: &Subgroup, k: &Subgroup) -> Subgroup {
    assert!(h.same_parent(k), "subgroups of different groups");
    let group = &h.group;
    let mut closure = Closure::trivial(group);
    for &a in &h.generators {
        for &b in &k.generators {
            closure.adjoin(group.commutator(a, b));
        }
    }
    let conjugators: Vec<Element> = h.generators.iter().chain(&k.generators).copied().collect();
    closure.close_under_conjugation(&conjugators, 0);
    closure.finish()
}

/// `[G, G]`.
pub fn derived_subgroup(group: &FiniteGroup) -> Subgroup {
    let whole = Subgroup::whole(group);
    commutator_subgroup(&whole, &whole)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Lower,
    Upper,
}

/// A central series, computed until it reaches its terminal term (`{e}` for the
/// lower series, `G` for the upper) or repeats. A repeated term is stored once
/// more at the end so stabilization is visible in the data.
#[derive(Clone, Debug)]
pub struct CentralSeries {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
    pub stabilized: bool,
}

impl CentralSeries {
    /// True if the series ends at `{e}` (lower) or `G` (upper).
    pub fn reaches_terminal(&self) -> bool {
        let last = self.terms.last().expect("series is never empty");
        match self.kind {
            SeriesKind::Lower => last.is_trivial(),
            SeriesKind::Upper => last.is_whole(),
        }
    }

    /// Number of steps taken to reach the terminal term, if it is reached.
    pub fn steps_to_terminal(&self) -> Option<usize> {
        self.reaches_terminal().then(|| self.terms.len() - 1)
    }
}

/// `γ_1 = G`, `γ_{n+1} = [G, γ_n]`.
pub fn lower_central_series(group: &FiniteGroup) -> CentralSeries {
    let whole = Subgroup::whole(group);
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(&whole, last);
        let repeated = next == *last;
        terms.push(next);
        if repeated {
            break;
        }
    }
    CentralSeries {
        kind: SeriesKind::Lower,
        terms,
        stabilized: true,
    }
}

/// `Z_0 = {e}`, `Z_{n+1}/Z_n = Z(G/Z_n)`.
///
/// `x Z_n` is central in `G/Z_n` exactly when `[x, g] ∈ Z_n` for every generator `g`.
pub fn upper_central_series(group: &FiniteGroup) -> CentralSeries {
    let mut terms = vec![Subgroup::trivial(group)];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_whole() {
            break;
        }
        let next = relative_center(last);
        let repeated = next == *last;
        terms.push(next);
        if repeated {
            break;
        }
    }
    CentralSeries {
        kind: SeriesKind::Upper,
        terms,
        stabilized: true,
    }
}

/// Preimage of `Z(G/N)` for a normal `N`.
pub(crate) fn relative_center(n: &Subgroup) -> Subgroup {
    let group = &n.group;
    let members = group
        .elements()
        .filter(|&x| {
            group
                .generators()
                .iter()
                .all(|&g| n.contains(group.commutator(x, g)))
        })
        .collect();
    Subgroup::from_closed_members(group, members)
}

/// Least `c ≥ 1` with `γ_{c+1}(G) = {e}`, if the group is nilpotent.
///
/// The trivial group gets class 1, the least admissible positive value.
pub fn nilpotency_class(group: &FiniteGroup) -> Option<usize> {
    lower_central_series(group)
        .steps_to_terminal()
        .map(|steps| steps.max(1))
}

/// The canonical projection `G → G/N`, cosets numbered by their smallest element.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: FiniteGroup,
    target: FiniteGroup,
    kernel: Subgroup,
    projection: Vec<Element>,
}

impl QuotientMap {
    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn projection(&self) -> &[Element] {
        &self.projection
    }

    pub fn project(&self, x: Element) -> Element {
        self.projection[x.index()]
    }

    pub fn image(&self, sub: &Subgroup) -> Subgroup {
        assert!(
            sub.group.same_group(&self.source),
            "subgroup of a different group"
        );
        let mut members: Vec<Element> = sub.members.iter().map(|&x| self.project(x)).collect();
        members.sort_unstable();
        members.dedup();
        Subgroup::from_closed_members(&self.target, members)
    }

    pub fn preimage(&self, sub: &Subgroup) -> Subgroup {
        assert!(
            sub.group.same_group(&self.target),
            "subgroup of a different group"
        );
        let members = self
            .source
            .elements()
            .filter(|&x| sub.contains(self.project(x)))
            .collect();
        Subgroup::from_closed_members(&self.source, members)
    }
}

pub fn quotient_group(group: &FiniteGroup, kernel: &Subgroup) -> Result<QuotientMap> {
    if !kernel.group.same_group(group) {
        return Err(Error::GroupMismatch);
    }
    if !kernel.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut to_local = vec![u32::MAX; group.order()];
    let mut reps = Vec::with_capacity(kernel.index());
    for x in group.elements() {
        if to_local[x.index()] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &n in &kernel.members {
            to_local[group.multiply(x, n).index()] = id;
        }
    }
    let generators = group
        .generators()
        .iter()
        .map(|g| Element::new(to_local[g.index()] as usize))
        .collect();
    let target = FiniteGroup::derived(group, reps, to_local.clone(), generators);
    let projection = to_local
        .into_iter()
        .map(|i| Element::new(i as usize))
        .collect();
    Ok(QuotientMap {
        source: group.clone(),
        target,
        kernel: kernel.clone(),
        projection,
    })
}

/// `N_A(S) = {h ∈ A : h S h^-1 = S}`.
pub fn normalizer(ambient: &Subgroup, sub: &Subgroup) -> Subgroup {
    assert!(ambient.same_parent(sub), "subgroups of different groups");
    let group = &ambient.group;
    let members = ambient
        .members
        .iter()
        .copied()
        .filter(|&h| {
            sub.generators
                .iter()
                .all(|&s| sub.contains(group.conjugate(h, s)))
        })
        .collect();
    Subgroup::from_closed_members(group, members)
}

/// Smallest `h ∈ A` with `S1^h = h^-1 S1 h = S2`, if any.
pub fn are_conjugate(ambient: &Subgroup, s1: &Subgroup, s2: &Subgroup) -> Option<Element> {
    assert!(
        ambient.same_parent(s1) && ambient.same_parent(s2),
        "subgroups of different groups"
    );
    if s1.order() != s2.order() {
        return None;
    }
    let group = &ambient.group;
    ambient.members.iter().copied().find(|&h| {
        let h_inv = group.invert(h);
        s1.generators
            .iter()
            .all(|&s| s2.contains(group.conjugate(h_inv, s)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::perm::Permutation;
    use crate::spec::GroupSpec;

    fn s(n: usize) -> FiniteGroup {
        build_group(&GroupSpec::Symmetric(n)).unwrap()
    }

    fn el(g: &FiniteGroup, cycles: &[&[usize]]) -> Element {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        let p = Permutation::from_cycles(g.degree().unwrap(), &cycles).unwrap();
        g.element_of(&p).unwrap()
    }

    /// Brute force closure: keep multiplying until nothing new appears.
    fn naive_closure(g: &FiniteGroup, set: &[Element]) -> Vec<Element> {
        let mut members: std::collections::BTreeSet<Element> = [g.identity()].into();
        members.extend(set);
        loop {
            let current: Vec<Element> = members.iter().copied().collect();
            let before = members.len();
            for &a in &current {
                for &b in &current {
                    members.insert(g.multiply(a, b));
                }
            }
            if members.len() == before {
                return members.into_iter().collect();
            }
        }
    }

    #[test]
    fn generated_subgroup_examples() {
        let g = s(4);
        assert!(generated_subgroup(&g, &[]).is_trivial());
        let s3 = s(3);
        assert_eq!(generated_subgroup(&s3, s3.generators()).order(), 6);
        let a = el(&g, &[&[0, 1], &[2, 3]]);
        let b = el(&g, &[&[0, 2], &[1, 3]]);
        let klein = generated_subgroup(&g, &[a, b]);
        assert_eq!(klein.order(), 4);
        assert_eq!(klein.members(), naive_closure(&g, &[a, b]).as_slice());
        assert!(klein.is_normal());
    }

    #[test]
    fn normal_closure_examples() {
        let g = s(4);
        assert!(normal_closure(&g, &[g.identity()]).is_trivial());
        assert_eq!(normal_closure(&g, &[el(&g, &[&[0, 1]])]).order(), 24);
        let a4 = normal_closure(&g, &[el(&g, &[&[0, 1, 2]])]);
        assert_eq!(a4.order(), 12);
        assert!(a4.is_normal());
    }

    #[test]
    fn normal_subgroup_counts() {
        let orders = |spec: GroupSpec| -> Vec<usize> {
            let g = build_group(&spec).unwrap();
            all_normal_subgroups(&g)
                .unwrap()
                .iter()
                .map(|n| n.order())
                .collect()
        };
        assert_eq!(orders(GroupSpec::Cyclic(6)), vec![1, 2, 3, 6]);
        assert_eq!(orders(GroupSpec::Symmetric(4)), vec![1, 4, 12, 24]);
        assert_eq!(orders(GroupSpec::Alternating(5)), vec![1, 60]);
        assert_eq!(orders(GroupSpec::Symmetric(5)), vec![1, 60, 120]);
        assert_eq!(orders(GroupSpec::Dihedral(8)).len(), 6);
        assert_eq!(orders(GroupSpec::Quaternion8).len(), 6);
        assert_eq!(orders(GroupSpec::Cyclic(1)), vec![1]);
    }

    #[test]
    fn commutator_examples() {
        let g = s(4);
        let whole = Subgroup::whole(&g);
        assert!(commutator_subgroup(&whole, &Subgroup::trivial(&g)).is_trivial());
        let derived = commutator_subgroup(&whole, &whole);
        assert_eq!(derived.order(), 12);
        let klein = generated_subgroup(
            &g,
            &[el(&g, &[&[0, 1], &[2, 3]]), el(&g, &[&[0, 2], &[1, 3]])],
        );
        assert_eq!(commutator_subgroup(&whole, &klein), klein);
    }

    #[test]
    fn commutator_matches_brute_force_on_non_normal_pairs() {
        let g = s(4);
        let h = generated_subgroup(&g, &[el(&g, &[&[0, 1, 2, 3]])]);
        let k = generated_subgroup(&g, &[el(&g, &[&[0, 1]])]);
        let all: Vec<Element> = h
            .members()
            .iter()
            .flat_map(|&a| k.members().iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.commutator(a, b))
            .collect();
        assert_eq!(
            commutator_subgroup(&h, &k).members(),
            naive_closure(&g, &all).as_slice()
        );
    }

    #[test]
    fn central_series_examples() {
        let c6 = build_group(&GroupSpec::Cyclic(6)).unwrap();
        let lower = lower_central_series(&c6);
        assert_eq!(
            lower.terms.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![6, 1]
        );
        let upper = upper_central_series(&c6);
        assert_eq!(
            upper.terms.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![1, 6]
        );

        let heis = build_group(&GroupSpec::Heisenberg(3)).unwrap();
        let lower = lower_central_series(&heis);
        assert_eq!(
            lower.terms.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![27, 3, 1]
        );
        let upper = upper_central_series(&heis);
        assert_eq!(
            upper.terms.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![1, 3, 27]
        );
        assert_eq!(lower.terms[1], upper.terms[1]);

        let s3 = s(3);
        let lower = lower_central_series(&s3);
        assert_eq!(
            lower.terms.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![6, 3, 3]
        );
        assert!(!lower.reaches_terminal());
        let upper = upper_central_series(&s3);
        assert_eq!(
            upper.terms.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![1, 1]
        );
    }

    #[test]
    fn nilpotency_examples() {
        let class = |spec| nilpotency_class(&build_group(&spec).unwrap());
        assert_eq!(class(GroupSpec::Cyclic(5)), Some(1));
        assert_eq!(class(GroupSpec::Heisenberg(3)), Some(2));
        assert_eq!(class(GroupSpec::Symmetric(3)), None);
        assert_eq!(class(GroupSpec::Dihedral(16)), Some(3));
        assert_eq!(class(GroupSpec::Cyclic(1)), Some(1));
    }

    #[test]
    fn quotient_examples() {
        let g = s(4);
        let q = quotient_group(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.target().order(), 24);
        let q = quotient_group(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.target().order(), 1);
        let klein = generated_subgroup(
            &g,
            &[el(&g, &[&[0, 1], &[2, 3]]), el(&g, &[&[0, 2], &[1, 3]])],
        );
        let q = quotient_group(&g, &klein).unwrap();
        assert_eq!(q.target().order(), 6);
        assert!(!q.target().is_abelian());
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(
                    q.project(g.multiply(x, y)),
                    q.target().multiply(q.project(x), q.project(y))
                );
            }
        }
        let not_normal = generated_subgroup(&g, &[el(&g, &[&[0, 1]])]);
        assert_eq!(
            quotient_group(&g, &not_normal).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn quotient_numbering_uses_smallest_coset_member() {
        let g = build_group(&GroupSpec::Dihedral(8)).unwrap();
        let z = crate::group::center(&g);
        let q = quotient_group(&g, &z).unwrap();
        let mut smallest = vec![usize::MAX; q.target().order()];
        for x in g.elements() {
            let c = q.project(x).index();
            smallest[c] = smallest[c].min(x.index());
        }
        assert!(smallest.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn normalizer_examples() {
        let g = s(4);
        let whole = Subgroup::whole(&g);
        let a4 = derived_subgroup(&g);
        assert_eq!(normalizer(&whole, &a4), whole);
        let t = generated_subgroup(&g, &[el(&g, &[&[0, 1]])]);
        let n = normalizer(&whole, &t);
        assert_eq!(
            n,
            generated_subgroup(&g, &[el(&g, &[&[0, 1]]), el(&g, &[&[2, 3]])])
        );
        assert_eq!(n.order(), 4);

        let s3 = s(3);
        let whole3 = Subgroup::whole(&s3);
        let stab = generated_subgroup(&s3, &[el(&s3, &[&[1, 2]])]);
        assert_eq!(normalizer(&whole3, &stab), stab);
    }

    #[test]
    fn conjugacy_examples() {
        let g = s(4);
        let whole = Subgroup::whole(&g);
        let t = generated_subgroup(&g, &[el(&g, &[&[0, 1]])]);
        assert_eq!(are_conjugate(&whole, &t, &t), Some(g.identity()));
        let stab0 = generated_subgroup(&g, &[el(&g, &[&[1, 2]]), el(&g, &[&[1, 2, 3]])]);
        let stab1 = generated_subgroup(&g, &[el(&g, &[&[0, 2]]), el(&g, &[&[0, 2, 3]])]);
        let h = are_conjugate(&whole, &stab0, &stab1).unwrap();
        for &s in stab0.members() {
            assert!(stab1.contains(g.conjugate(g.invert(h), s)));
        }
        let double = generated_subgroup(&g, &[el(&g, &[&[0, 1], &[2, 3]])]);
        assert_eq!(are_conjugate(&whole, &t, &double), None);
    }

    #[test]
    fn embedding_round_trip() {
        let g = s(4);
        let a4 = derived_subgroup(&g);
        let emb = a4.as_group();
        assert_eq!(emb.group().order(), 12);
        emb.group().verify_axioms(0).unwrap();
        let local_normals = all_normal_subgroups(emb.group()).unwrap();
        assert_eq!(
            local_normals
                .iter()
                .map(Subgroup::order)
                .collect::<Vec<_>>(),
            vec![1, 4, 12]
        );
        assert_eq!(emb.extend(&local_normals[1]).order(), 4);
        assert_eq!(emb.restrict(&Subgroup::whole(&g)).order(), 12);
    }
}
