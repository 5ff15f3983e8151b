//! Permutation groups `H ≤ S(X)` on a finite set `X = {0, .., degree - 1}`.
//!
//! The centralizer `c_{S(X)}(H)` is trivial iff, over a set of orbit
//! representatives,
//! - (a) every point stabilizer `S_x` is self-normalizing in `H`, and
//! - (b) no two representatives have stabilizers conjugate in `H`.
//!
//! When either condition fails, [`build_centralizing_witness`] produces a
//! non-identity permutation of `X` commuting with `H`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{BuildOptions, Element, FiniteGroup};
use crate::perm::Permutation;
use crate::spec::GroupSpec;
use crate::subgroup::{are_conjugate, normalizer, Subgroup};

/// Largest `H` materialized for orbit and stabilizer work.
pub const DEFAULT_ACTION_CAP: usize = 100_000;

/// Largest degree the exhaustive centralizer scan accepts (`8! = 40320`).
pub const ORACLE_MAX_DEGREE: usize = 8;

#[derive(Clone, Debug)]
pub struct PermAction {
    degree: usize,
    generators: Vec<Permutation>,
    group: FiniteGroup,
}

impl PermAction {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_cap(degree, generators, DEFAULT_ACTION_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidArgument(format!(
                "generator {g} has degree {} but the action has degree {degree}",
                g.degree()
            )));
        }
        let spec = GroupSpec::Perm {
            degree,
            generators: generators.iter().map(Permutation::cycles).collect(),
        };
        let images = generators
            .iter()
            .map(|g| g.images().iter().map(|&x| x as u16).collect())
            .collect();
        let options = BuildOptions {
            order_cap: cap,
            ..BuildOptions::default()
        };
        let group = FiniteGroup::from_permutations(degree, images, Some(spec), &options)?;
        Ok(PermAction {
            degree,
            generators,
            group,
        })
    }

    /// Parses each generator as juxtaposed cycles, e.g. `[[0, 1], [2, 3]]` for `(0 1)(2 3)`.
    pub fn from_cycles(degree: usize, generators: &[Vec<Vec<usize>>]) -> Result<Self> {
        let perms = generators
            .iter()
            .map(|cycles| Permutation::from_cycles(degree, cycles))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, perms)
    }

    /// One to three generators drawn uniformly from `S(X)`.
    pub fn random<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Result<Self> {
        let count = rng.random_range(1..=3);
        let generators = (0..count)
            .map(|_| {
                let mut images: Vec<usize> = (0..degree).collect();
                images.shuffle(rng);
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, generators)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// `H`, enumerated with the generators as its generating set.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn permutation(&self, h: Element) -> Permutation {
        self.group
            .permutation(h)
            .expect("action groups carry permutations")
    }

    fn apply(&self, h: Element, x: usize) -> usize {
        self.permutation(h).apply(x)
    }

    /// True iff `tau` commutes with every generator, hence with all of `H`.
    pub fn centralizes(&self, tau: &Permutation) -> bool {
        tau.degree() == self.degree && self.generators.iter().all(|g| g.commutes_with(tau))
    }
}

#[derive(Clone, Debug)]
pub struct OrbitData {
    /// Sorted orbits, ordered by smallest point.
    pub orbits: Vec<Vec<usize>>,
    /// Smallest point of each orbit, parallel to `orbits`.
    pub representatives: Vec<usize>,
    /// `S_x` for each representative, parallel to `orbits`.
    pub stabilizers: Vec<Subgroup>,
    /// For every point `p`, some `h ∈ H` with `h(rep) = p` for the representative of its orbit.
    transversal: Vec<Element>,
    orbit_of: Vec<usize>,
}

impl OrbitData {
    pub fn orbit_index(&self, point: usize) -> usize {
        self.orbit_of[point]
    }

    /// An element of `H` carrying the orbit representative of `point` to `point`.
    pub fn transversal(&self, point: usize) -> Element {
        self.transversal[point]
    }
}

/// Point stabilizer `Stab x ∩ H` as a subgroup of `H`.
pub fn stabilizer(action: &PermAction, x: usize) -> Subgroup {
    let group = action.group();
    let members = group
        .elements()
        .filter(|&h| action.apply(h, x) == x)
        .collect();
    Subgroup::from_closed_members(group, members)
}

pub fn orbit_data(action: &PermAction) -> Result<OrbitData> {
    let group = action.group();
    let n = action.degree();
    let mut orbit_of = vec![usize::MAX; n];
    let mut transversal = vec![Element::IDENTITY; n];
    let mut orbits = Vec::new();
    let mut representatives = Vec::new();
    let mut stabilizers = Vec::new();
    for rep in 0..n {
        if orbit_of[rep] != usize::MAX {
            continue;
        }
        let index = orbits.len();
        let mut orbit = Vec::new();
        for h in group.elements() {
            let p = action.apply(h, rep);
            if orbit_of[p] == usize::MAX {
                orbit_of[p] = index;
                transversal[p] = h;
                orbit.push(p);
            }
        }
        orbit.sort_unstable();
        let stab = stabilizer(action, rep);
        if orbit.len() * stab.order() != group.order() {
            return Err(Error::InternalInconsistency(format!(
                "orbit-stabilizer fails at {rep}: {} * {} != {}",
                orbit.len(),
                stab.order(),
                group.order()
            )));
        }
        orbits.push(orbit);
        representatives.push(rep);
        stabilizers.push(stab);
    }
    Ok(OrbitData {
        orbits,
        representatives,
        stabilizers,
        transversal,
        orbit_of,
    })
}

/// Exhaustive `c_{S(X)}(H)`, sorted.
pub fn full_symmetric_centralizer(action: &PermAction) -> Result<Vec<Permutation>> {
    let n = action.degree();
    if n > ORACLE_MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            max: ORACLE_MAX_DEGREE,
        });
    }
    let mut images: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        let tau = Permutation::from_images(images.clone())?;
        if action.centralizes(&tau) {
            out.push(tau);
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the next permutation in lexicographic order; false after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriterionFailure {
    /// `h0 ∈ N_H(S_x) \ S_x` at representative `x`.
    NotSelfNormalizing { representative: usize, h0: Element },
    /// `h^-1 S_x h = S_y` for distinct representatives `x < y`.
    ConjugateStabilizers {
        first: usize,
        second: usize,
        conjugator: Element,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub trivial_centralizer: bool,
    /// First failing condition, conjugate stabilizers checked before self-normalization.
    pub failure: Option<CriterionFailure>,
}

pub fn lemma_trivial_centralizer(action: &PermAction) -> Result<CriterionVerdict> {
    let data = orbit_data(action)?;
    lemma_with(action, &data)
}

fn lemma_with(action: &PermAction, data: &OrbitData) -> Result<CriterionVerdict> {
    let whole = Subgroup::whole(action.group());
    let reps = &data.representatives;
    let stabs = &data.stabilizers;
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if let Some(h) = are_conjugate(&whole, &stabs[i], &stabs[j]) {
                return Ok(failed(CriterionFailure::ConjugateStabilizers {
                    first: reps[i],
                    second: reps[j],
                    conjugator: h,
                }));
            }
        }
    }
    for (&x, s) in reps.iter().zip(stabs) {
        let norm = normalizer(&whole, s);
        if let Some(&h0) = norm.members().iter().find(|&&h| !s.contains(h)) {
            return Ok(failed(CriterionFailure::NotSelfNormalizing {
                representative: x,
                h0,
            }));
        }
    }
    Ok(CriterionVerdict {
        trivial_centralizer: true,
        failure: None,
    })
}

fn failed(failure: CriterionFailure) -> CriterionVerdict {
    CriterionVerdict {
        trivial_centralizer: false,
        failure: Some(failure),
    }
}

/// A non-identity `τ ∈ c_{S(X)}(H)` built from a failure of the criterion.
///
/// - `NotSelfNormalizing { x, h0 }`: `τ(h(x)) = h h0(x)` on the orbit of `x`,
///   identity elsewhere. Well defined because `h0` normalizes `S_x`.
/// - `ConjugateStabilizers { x, y, h }`: `τ(k(x)) = k h(y)` and
///   `τ(k(y)) = k h^-1(x)`, identity elsewhere, swapping the two orbits.
pub fn build_centralizing_witness(
    action: &PermAction,
    failure: &CriterionFailure,
) -> Result<Permutation> {
    let data = orbit_data(action)?;
    let group = action.group();
    let mut images: Vec<usize> = (0..action.degree()).collect();
    // τ(k(x)) = k(target) for every point k(x) of the orbit of x
    let mut fill = |x: usize, target: usize| {
        let orbit = &data.orbits[data.orbit_index(x)];
        for &p in orbit {
            let k = data.transversal(p);
            images[p] = action.apply(k, target);
        }
    };
    match *failure {
        CriterionFailure::NotSelfNormalizing {
            representative: x,
            h0,
        } => {
            fill(x, action.apply(h0, x));
        }
        CriterionFailure::ConjugateStabilizers {
            first: x,
            second: y,
            conjugator: h,
        } => {
            fill(x, action.apply(h, y));
            fill(y, action.apply(group.invert(h), x));
        }
    }
    let tau = Permutation::from_images(images).map_err(|_| {
        Error::InternalInconsistency("centralizing witness is not a bijection".into())
    })?;
    if tau.is_identity() || !action.centralizes(&tau) {
        return Err(Error::InternalInconsistency(format!(
            "witness {tau} does not centralize the action nontrivially"
        )));
    }
    Ok(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn action(degree: usize, gens: &[&[&[usize]]]) -> PermAction {
        let gens: Vec<Vec<Vec<usize>>> = gens
            .iter()
            .map(|g| g.iter().map(|c| c.to_vec()).collect())
            .collect();
        PermAction::from_cycles(degree, &gens).unwrap()
    }

    fn symmetric(n: usize) -> PermAction {
        let shift: Vec<usize> = (0..n).collect();
        action(n, &[&[&[0, 1]], &[&shift]])
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn orbits_of_three_cycle() {
        let a = action(5, &[&[&[0, 1, 2]]]);
        let d = orbit_data(&a).unwrap();
        assert_eq!(d.orbits, vec![vec![0, 1, 2], vec![3], vec![4]]);
        assert_eq!(d.representatives, vec![0, 3, 4]);
        assert_eq!(d.stabilizers[0].order(), 1);
        assert_eq!(d.stabilizers[1].order(), 3);
    }

    #[test]
    fn orbits_of_trivial_group() {
        let a = PermAction::new(4, vec![]).unwrap();
        let d = orbit_data(&a).unwrap();
        assert_eq!(d.orbits.len(), 4);
        assert!(d.stabilizers.iter().all(|s| s.order() == 1));
        assert_eq!(full_symmetric_centralizer(&a).unwrap().len(), 24);
    }

    #[test]
    fn natural_symmetric_action() {
        for n in 3..=6 {
            let a = symmetric(n);
            assert_eq!(a.group().order(), factorial(n));
            let d = orbit_data(&a).unwrap();
            assert_eq!(d.orbits.len(), 1);
            assert_eq!(d.stabilizers[0].order(), factorial(n - 1));
            assert!(lemma_trivial_centralizer(&a).unwrap().trivial_centralizer);
            assert_eq!(full_symmetric_centralizer(&a).unwrap().len(), 1);
        }
    }

    #[test]
    fn transposition_on_four_points() {
        let a = action(4, &[&[&[0, 1]]]);
        let c = full_symmetric_centralizer(&a).unwrap();
        assert_eq!(c.len(), 4);
        let expected = Permutation::from_cycles(4, &[vec![2, 3]]).unwrap();
        assert!(c.contains(&expected));
        let v = lemma_trivial_centralizer(&a).unwrap();
        assert!(!v.trivial_centralizer);
        let failure = v.failure.unwrap();
        assert_eq!(
            failure,
            CriterionFailure::ConjugateStabilizers {
                first: 2,
                second: 3,
                conjugator: Element::IDENTITY
            }
        );
        assert_eq!(build_centralizing_witness(&a, &failure).unwrap(), expected);
    }

    #[test]
    fn self_normalizing_failure_witness() {
        // regular C4: S_0 trivial, normalizer is all of H
        let a = action(4, &[&[&[0, 1, 2, 3]]]);
        let v = lemma_trivial_centralizer(&a).unwrap();
        let failure = v.failure.unwrap();
        let CriterionFailure::NotSelfNormalizing { representative, .. } = failure else {
            panic!("expected condition (a) to fail");
        };
        assert_eq!(representative, 0);
        let tau = build_centralizing_witness(&a, &failure).unwrap();
        assert!(!tau.is_identity());
        assert!(a.centralizes(&tau));
    }

    #[test]
    fn conjugate_stabilizers_with_nontrivial_conjugator() {
        // S3 on {0,1,2} and on {3,4,5} diagonally: the two orbits are isomorphic
        let a = action(6, &[&[&[0, 1], &[3, 4]], &[&[0, 1, 2], &[3, 4, 5]]]);
        let v = lemma_trivial_centralizer(&a).unwrap();
        let failure = v.failure.unwrap();
        assert!(matches!(
            failure,
            CriterionFailure::ConjugateStabilizers {
                first: 0,
                second: 3,
                ..
            }
        ));
        let tau = build_centralizing_witness(&a, &failure).unwrap();
        assert!(a.centralizes(&tau));
        assert_eq!(full_symmetric_centralizer(&a).unwrap().len(), 2);
    }

    #[test]
    fn oracle_rejects_large_degree() {
        let a = action(9, &[&[&[0, 1, 2, 3, 4, 5, 6, 7, 8]]]);
        assert_eq!(
            full_symmetric_centralizer(&a).unwrap_err(),
            Error::DegreeTooLarge { degree: 9, max: 8 }
        );
    }

    #[test]
    fn cap_is_enforced() {
        let a = PermAction::with_cap(6, symmetric(6).generators().to_vec(), 100);
        assert_eq!(a.unwrap_err(), Error::OrderCapExceeded { cap: 100 });
    }

    #[test]
    fn lemma_agrees_with_oracle_on_random_actions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for degree in 2..=6 {
            for _ in 0..40 {
                let a = PermAction::random(degree, &mut rng).unwrap();
                let v = lemma_trivial_centralizer(&a).unwrap();
                let c = full_symmetric_centralizer(&a).unwrap();
                assert_eq!(v.trivial_centralizer, c.len() == 1);
                if let Some(f) = v.failure {
                    let tau = build_centralizing_witness(&a, &f).unwrap();
                    assert!(c.contains(&tau));
                }
            }
        }
    }
}
