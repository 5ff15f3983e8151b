//! Finite groups with element-level arithmetic.
//!
//! Every group built from a [`GroupSpec`] starts life as a faithful permutation
//! group on a small point set. Elements are numbered by breadth-first search
//! over generator words: element 0 is the identity, and the queue is expanded
//! in id order, each element right-multiplied by the generators in spec order.
//! Each element therefore receives the id of its shortlex-least word, and the
//! numbering is reproducible bit for bit.
//!
//! Groups of order at most [`TABLE_ORDER_LIMIT`] keep a full multiplication
//! table. Larger groups multiply by composing point images and looking the
//! result up in a hash index. Quotients and subgroups promoted to groups
//! delegate to their source group when they are too large for a table.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::spec::GroupSpec;
use crate::subgroup::Subgroup;

pub const TABLE_ORDER_LIMIT: usize = 4096;
pub const DEFAULT_ORDER_CAP: usize = 20_000;
const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 128;
const SAMPLED_TRIPLES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Element(u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    pub fn new(id: usize) -> Self {
        Element(u32::try_from(id).expect("element id fits in u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub order_cap: usize,
    /// Seed for the sampled associativity check on large groups.
    pub seed: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            order_cap: DEFAULT_ORDER_CAP,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    Table,
    Permutation,
    Derived,
}

#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<Inner>,
}

struct Inner {
    order: usize,
    repr: Repr,
    inverses: Vec<u32>,
    generators: Vec<Element>,
    spec: Option<GroupSpec>,
    perms: Option<PermData>,
    classes: OnceLock<Vec<Vec<Element>>>,
    /// `(parent, generator index)` keyed by element id; `x = parent * generator`.
    tree: OnceLock<Vec<(u32, u16)>>,
}

struct PermData {
    degree: usize,
    points: Vec<u16>,
    index: HashMap<Box<[u16]>, u32>,
}

impl PermData {
    fn images(&self, x: Element) -> &[u16] {
        let d = self.degree;
        &self.points[x.index() * d..(x.index() + 1) * d]
    }

    fn lookup(&self, images: &[u16]) -> Option<Element> {
        self.index.get(images).map(|&i| Element(i))
    }
}

enum Repr {
    Table(Vec<u16>),
    Perm,
    Derived {
        source: FiniteGroup,
        reps: Vec<Element>,
        to_local: Vec<u32>,
    },
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("spec", &self.spec().map(|s| s.to_string()))
            .field("representation", &self.representation())
            .finish()
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_group_with(spec, &BuildOptions::default())
}

pub fn build_group_with(spec: &GroupSpec, options: &BuildOptions) -> Result<FiniteGroup> {
    spec.validate()?;
    let (degree, generators) = permutation_generators(spec, options)?;
    let group = FiniteGroup::from_permutations(degree, generators, Some(spec.clone()), options)?;
    group.verify_axioms(options.seed)?;
    Ok(group)
}

fn identity_images(degree: usize) -> Vec<u16> {
    (0..degree as u16).collect()
}

fn to_points(images: impl IntoIterator<Item = usize>) -> Vec<u16> {
    images.into_iter().map(|x| x as u16).collect()
}

fn check_degree(degree: usize) -> Result<()> {
    if degree > u16::MAX as usize {
        Err(Error::DegreeTooLarge {
            degree,
            max: u16::MAX as usize,
        })
    } else {
        Ok(())
    }
}

/// Faithful permutation generators for `spec`, in spec order.
fn permutation_generators(
    spec: &GroupSpec,
    options: &BuildOptions,
) -> Result<(usize, Vec<Vec<u16>>)> {
    use GroupSpec::*;
    let result = match spec {
        Cyclic(n) => (*n, vec![to_points((0..*n).map(|i| (i + 1) % n))]),
        Dihedral(order) => dihedral_on_cycle(order / 2),
        Quaternion8 => quaternion_regular(),
        Symmetric(n) => {
            if *n < 2 {
                (*n, vec![identity_images(*n)])
            } else {
                let transposition = Permutation::from_cycles(*n, &[vec![0, 1]])?;
                let shift = to_points((0..*n).map(|i| (i + 1) % n));
                (
                    *n,
                    vec![to_points(transposition.images().iter().copied()), shift],
                )
            }
        }
        Alternating(n) => {
            if *n < 3 {
                (*n, vec![identity_images(*n)])
            } else {
                let gens = (2..*n)
                    .map(|k| {
                        let p = Permutation::from_cycles(*n, &[vec![0, 1, k]])?;
                        Ok(to_points(p.images().iter().copied()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                (*n, gens)
            }
        }
        Heisenberg(m) => {
            // [[1,a,c],[0,1,b],[0,0,1]] acts on (u, v, 1) as (u + a v + c, v + b); point u*m + v
            let m = *m;
            let degree = m * m;
            check_degree(degree)?;
            let x = to_points((0..degree).map(|p| {
                let (u, v) = (p / m, p % m);
                ((u + v) % m) * m + v
            }));
            let y = to_points((0..degree).map(|p| {
                let (u, v) = (p / m, p % m);
                u * m + (v + 1) % m
            }));
            (degree, vec![x, y])
        }
        GeneralizedDihedral(inner) => {
            let base = build_group_with(inner, options)?;
            if !base.is_abelian() {
                return Err(Error::InvalidSpec(format!(
                    "Dih argument {inner} must be abelian"
                )));
            }
            generalized_dihedral(&base)?
        }
        SpecialLinear { n, p } => linear_generators(*n, *p, false)?,
        AffineSpecialLinear { n, p } => linear_generators(*n, *p, true)?,
        Perm { degree, generators } => {
            let gens = generators
                .iter()
                .map(|cycles| {
                    let p = Permutation::from_cycles(*degree, cycles)
                        .map_err(|e| Error::InvalidSpec(e.to_string()))?;
                    Ok(to_points(p.images().iter().copied()))
                })
                .collect::<Result<Vec<_>>>()?;
            (*degree, gens)
        }
        Product(a, b) => {
            let (da, ga) = permutation_generators(a, options)?;
            let (db, gb) = permutation_generators(b, options)?;
            let degree = da + db;
            check_degree(degree)?;
            let mut gens = Vec::with_capacity(ga.len() + gb.len());
            for g in ga {
                let mut images = g;
                images.extend((da..degree).map(|x| x as u16));
                gens.push(images);
            }
            for g in gb {
                let mut images = identity_images(da);
                images.extend(g.iter().map(|&x| x + da as u16));
                gens.push(images);
            }
            (degree, gens)
        }
    };
    check_degree(result.0)?;
    Ok(result)
}

/// Rotation and reflection acting on `Z/n` plus two marker points swapped by the reflection.
fn dihedral_on_cycle(n: usize) -> (usize, Vec<Vec<u16>>) {
    let degree = n + 2;
    let mut rotation: Vec<u16> = to_points((0..n).map(|i| (i + 1) % n));
    rotation.extend([n as u16, n as u16 + 1]);
    let mut reflection: Vec<u16> = to_points((0..n).map(|i| (n - i) % n));
    reflection.extend([n as u16 + 1, n as u16]);
    (degree, vec![rotation, reflection])
}

/// `A ⋊ C2` acting on the points of `A` (by `x -> a x^{±1}`) plus two marker points.
fn generalized_dihedral(base: &FiniteGroup) -> Result<(usize, Vec<Vec<u16>>)> {
    let n = base.order();
    let degree = n + 2;
    check_degree(degree)?;
    let markers = [n as u16, n as u16 + 1];
    let mut gens = Vec::new();
    for &a in base.generators() {
        let mut images = to_points(base.elements().map(|x| base.multiply(a, x).index()));
        images.extend(markers);
        gens.push(images);
    }
    let mut flip = to_points(base.elements().map(|x| base.invert(x).index()));
    flip.extend([markers[1], markers[0]]);
    gens.push(flip);
    Ok((degree, gens))
}

/// Left regular representation of `Q8 = {±1, ±i, ±j, ±k}`, point `4 * sign + unit`.
fn quaternion_regular() -> (usize, Vec<Vec<u16>>) {
    // unit products: (sign, unit) of e_a * e_b with units 0=1, 1=i, 2=j, 3=k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left = |unit: usize| {
        to_points((0..8).map(|q| {
            let (sign, u) = (q / 4, q % 4);
            let (s, w) = UNIT[unit][u];
            4 * ((sign + s) % 2) + w
        }))
    };
    (8, vec![left(1), left(2)])
}

/// `SL(n, p)` (and optionally the translations of `F_p^n`) acting on the vectors of `F_p^n`.
fn linear_generators(n: usize, p: usize, affine: bool) -> Result<(usize, Vec<Vec<u16>>)> {
    let degree = p
        .checked_pow(n as u32)
        .filter(|&d| d <= u16::MAX as usize)
        .ok_or(Error::DegreeTooLarge {
            degree: usize::MAX,
            max: u16::MAX as usize,
        })?;
    let decode = |mut idx: usize| {
        let mut v = vec![0; n];
        for c in v.iter_mut() {
            *c = idx % p;
            idx /= p;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * p + c);
    let mut gens = Vec::new();
    // elementary transvection I + E_ij: v_i += v_j
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            gens.push(to_points((0..degree).map(|idx| {
                let mut v = decode(idx);
                v[i] = (v[i] + v[j]) % p;
                encode(&v)
            })));
        }
    }
    if affine {
        for i in 0..n {
            gens.push(to_points((0..degree).map(|idx| {
                let mut v = decode(idx);
                v[i] = (v[i] + 1) % p;
                encode(&v)
            })));
        }
    }
    if gens.is_empty() {
        gens.push(identity_images(degree));
    }
    Ok((degree, gens))
}

impl FiniteGroup {
    /// Enumerates the group generated by the given point images, in canonical BFS order.
    pub fn from_permutations(
        degree: usize,
        generators: Vec<Vec<u16>>,
        spec: Option<GroupSpec>,
        options: &BuildOptions,
    ) -> Result<FiniteGroup> {
        check_degree(degree)?;
        for g in &generators {
            let p = Permutation::from_images(g.iter().map(|&x| x as usize).collect())?;
            if p.degree() != degree {
                return Err(Error::InvalidArgument("generator degree mismatch".into()));
            }
        }
        let k = generators.len();
        let mut points = identity_images(degree);
        let mut index: HashMap<Box<[u16]>, u32> = HashMap::new();
        index.insert(points.clone().into_boxed_slice(), 0);
        let mut tree = vec![(0u32, u16::MAX)];
        let mut right: Vec<u32> = Vec::new();
        let mut scratch = vec![0u16; degree];
        let mut i = 0;
        while i < tree.len() {
            for (s, g) in generators.iter().enumerate() {
                let base = &points[i * degree..(i + 1) * degree];
                for (slot, &gp) in scratch.iter_mut().zip(g) {
                    *slot = base[gp as usize];
                }
                let id = match index.get(scratch.as_slice()) {
                    Some(&id) => id,
                    None => {
                        if tree.len() >= options.order_cap {
                            return Err(Error::OrderCapExceeded {
                                cap: options.order_cap,
                            });
                        }
                        let id = tree.len() as u32;
                        index.insert(scratch.clone().into_boxed_slice(), id);
                        points.extend_from_slice(&scratch);
                        tree.push((i as u32, s as u16));
                        id
                    }
                };
                right.push(id);
            }
            i += 1;
        }
        let order = tree.len();
        let gens: Vec<Element> = (0..k).map(|s| Element(right[s])).collect();
        let perms = PermData {
            degree,
            points,
            index,
        };
        let inverses: Vec<u32> = (0..order)
            .map(|x| {
                let images = perms.images(Element(x as u32));
                let mut inv = vec![0u16; degree];
                for (p, &q) in images.iter().enumerate() {
                    inv[q as usize] = p as u16;
                }
                perms.index[inv.as_slice()]
            })
            .collect();
        let repr = if order <= TABLE_ORDER_LIMIT {
            // x * j = (x * parent(j)) * generator(j), and parent(j) < j
            let mut table = vec![0u16; order * order];
            for x in 0..order {
                let row = &mut table[x * order..(x + 1) * order];
                row[0] = x as u16;
                for j in 1..order {
                    let (parent, s) = tree[j];
                    let left = row[parent as usize] as usize;
                    row[j] = right[left * k + s as usize] as u16;
                }
            }
            Repr::Table(table)
        } else {
            Repr::Perm
        };
        let tree_lock = OnceLock::new();
        let _ = tree_lock.set(tree);
        Ok(FiniteGroup {
            inner: Arc::new(Inner {
                order,
                repr,
                inverses,
                generators: gens,
                spec,
                perms: Some(perms),
                classes: OnceLock::new(),
                tree: tree_lock,
            }),
        })
    }

    /// A group whose element `i` stands for `reps[i]` in `source`, multiplied there and
    /// mapped back through `to_local`. Used for quotients and subgroups.
    pub(crate) fn derived(
        source: &FiniteGroup,
        reps: Vec<Element>,
        to_local: Vec<u32>,
        generators: Vec<Element>,
    ) -> FiniteGroup {
        let order = reps.len();
        let inverses: Vec<u32> = reps
            .iter()
            .map(|&r| to_local[source.invert(r).index()])
            .collect();
        let repr = if order <= TABLE_ORDER_LIMIT {
            let mut table = vec![0u16; order * order];
            for (x, &rx) in reps.iter().enumerate() {
                for (y, &ry) in reps.iter().enumerate() {
                    table[x * order + y] = to_local[source.multiply(rx, ry).index()] as u16;
                }
            }
            Repr::Table(table)
        } else {
            Repr::Derived {
                source: source.clone(),
                reps,
                to_local,
            }
        };
        FiniteGroup {
            inner: Arc::new(Inner {
                order,
                repr,
                inverses,
                generators,
                spec: None,
                perms: None,
                classes: OnceLock::new(),
                tree: OnceLock::new(),
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.inner.order as u32).map(Element)
    }

    pub fn generators(&self) -> &[Element] {
        &self.inner.generators
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.inner.spec.as_ref()
    }

    pub fn representation(&self) -> Representation {
        match self.inner.repr {
            Repr::Table(_) => Representation::Table,
            Repr::Perm => Representation::Permutation,
            Repr::Derived { .. } => Representation::Derived,
        }
    }

    /// True when both handles refer to the same constructed group.
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn multiply(&self, x: Element, y: Element) -> Element {
        let n = self.inner.order;
        assert!(x.index() < n && y.index() < n, "element id out of range");
        match &self.inner.repr {
            Repr::Table(table) => Element(table[x.index() * n + y.index()] as u32),
            Repr::Perm => {
                let perms = self.inner.perms.as_ref().expect("permutation data");
                let (px, py) = (perms.images(x), perms.images(y));
                let composed: Vec<u16> = py.iter().map(|&p| px[p as usize]).collect();
                perms
                    .lookup(&composed)
                    .expect("closed under multiplication")
            }
            Repr::Derived {
                source,
                reps,
                to_local,
            } => Element(to_local[source.multiply(reps[x.index()], reps[y.index()]).index()]),
        }
    }

    pub fn invert(&self, x: Element) -> Element {
        Element(self.inner.inverses[x.index()])
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        let xy = self.multiply(x, y);
        let xyx = self.multiply(xy, self.invert(x));
        self.multiply(xyx, self.invert(y))
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.multiply(self.multiply(g, x), self.invert(g))
    }

    pub fn commutes(&self, x: Element, y: Element) -> bool {
        match (&self.inner.repr, &self.inner.perms) {
            (Repr::Perm, Some(perms)) => {
                let (px, py) = (perms.images(x), perms.images(y));
                py.iter()
                    .zip(px)
                    .all(|(&a, &b)| px[a as usize] == py[b as usize])
            }
            _ => self.multiply(x, y) == self.multiply(y, x),
        }
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    pub fn element_order(&self, x: Element) -> usize {
        let mut y = x;
        let mut k = 1;
        while !y.is_identity() {
            y = self.multiply(y, x);
            k += 1;
        }
        k
    }

    /// Degree of the faithful permutation representation, when the group has one.
    pub fn degree(&self) -> Option<usize> {
        self.inner.perms.as_ref().map(|p| p.degree)
    }

    pub fn permutation(&self, x: Element) -> Option<Permutation> {
        let perms = self.inner.perms.as_ref()?;
        let images = perms.images(x).iter().map(|&p| p as usize).collect();
        Some(Permutation::from_images(images).expect("stored images are bijections"))
    }

    pub fn element_of(&self, perm: &Permutation) -> Option<Element> {
        let perms = self.inner.perms.as_ref()?;
        if perm.degree() != perms.degree {
            return None;
        }
        let images: Vec<u16> = perm.images().iter().map(|&p| p as u16).collect();
        perms.lookup(&images)
    }

    /// Conjugacy classes ordered by smallest member, members sorted.
    pub fn conjugacy_classes(&self) -> &[Vec<Element>] {
        self.inner.classes.get_or_init(|| {
            let n = self.order();
            let mut seen = vec![false; n];
            let mut classes = Vec::new();
            for x in self.elements() {
                if seen[x.index()] {
                    continue;
                }
                seen[x.index()] = true;
                let mut class = vec![x];
                let mut i = 0;
                while i < class.len() {
                    let y = class[i];
                    for &g in self.generators() {
                        let z = self.conjugate(g, y);
                        if !seen[z.index()] {
                            seen[z.index()] = true;
                            class.push(z);
                        }
                    }
                    i += 1;
                }
                class.sort();
                classes.push(class);
            }
            classes
        })
    }

    fn tree(&self) -> &[(u32, u16)] {
        self.inner.tree.get_or_init(|| {
            let n = self.order();
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut order = vec![Element::IDENTITY];
            let mut tree = vec![(0u32, u16::MAX); n];
            let mut i = 0;
            while i < order.len() {
                let x = order[i];
                for (s, &g) in self.generators().iter().enumerate() {
                    let y = self.multiply(x, g);
                    if !seen[y.index()] {
                        seen[y.index()] = true;
                        tree[y.index()] = (x.0, s as u16);
                        order.push(y);
                    }
                }
                i += 1;
            }
            assert_eq!(order.len(), n, "generators must generate the group");
            tree
        })
    }

    /// Images of all elements under the homomorphism sending `generators()[s]` to
    /// `images[s]` in `target`. The caller asserts that such a homomorphism exists.
    pub fn extend_homomorphism(&self, target: &FiniteGroup, images: &[Element]) -> Vec<Element> {
        assert_eq!(
            images.len(),
            self.generators().len(),
            "one image per generator"
        );
        let n = self.order();
        let tree = self.tree();
        let mut out: Vec<Option<Element>> = vec![None; n];
        out[0] = Some(target.identity());
        // resolve parents first by walking up the tree with an explicit stack
        for x in 0..n {
            if out[x].is_some() {
                continue;
            }
            let mut stack = vec![x];
            while let Some(&top) = stack.last() {
                let (parent, s) = tree[top];
                match out[parent as usize] {
                    Some(p) => {
                        out[top] = Some(target.multiply(p, images[s as usize]));
                        stack.pop();
                    }
                    None => stack.push(parent as usize),
                }
            }
        }
        out.into_iter().map(|e| e.expect("resolved")).collect()
    }

    /// Identity and inverse laws everywhere; associativity exhaustively up to order 128,
    /// on 10,000 seeded random triples above.
    pub fn verify_axioms(&self, seed: u64) -> Result<()> {
        let e = self.identity();
        for x in self.elements() {
            if self.multiply(e, x) != x || self.multiply(x, e) != x {
                return Err(Error::AxiomViolation(format!("identity law fails at {x}")));
            }
            let y = self.invert(x);
            if !self.multiply(x, y).is_identity() || !self.multiply(y, x).is_identity() {
                return Err(Error::AxiomViolation(format!("inverse law fails at {x}")));
            }
        }
        let check = |a, b, c| {
            let lhs = self.multiply(self.multiply(a, b), c);
            let rhs = self.multiply(a, self.multiply(b, c));
            if lhs == rhs {
                Ok(())
            } else {
                Err(Error::AxiomViolation(format!(
                    "associativity fails at ({a}, {b}, {c})"
                )))
            }
        };
        let n = self.order();
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..SAMPLED_TRIPLES {
                let a = Element::new(rng.random_range(0..n));
                let b = Element::new(rng.random_range(0..n));
                let c = Element::new(rng.random_range(0..n));
                check(a, b, c)?;
            }
        }
        Ok(())
    }
}

/// Elements commuting with every generator, hence with all of `group`.
pub fn center(group: &FiniteGroup) -> Subgroup {
    centralizer(group, group.generators())
}

/// `c_G(S)`, the intersection of the centralizers of the elements of `set`; all of
/// `group` when `set` is empty.
pub fn centralizer(group: &FiniteGroup, set: &[Element]) -> Subgroup {
    let members: Vec<Element> = group
        .elements()
        .filter(|&x| set.iter().all(|&s| group.commutes(x, s)))
        .collect();
    Subgroup::from_closed_members(group, members)
}

/// `G1 × G2` rebuilt from the factors' specs, with both projections.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    group: FiniteGroup,
    left: FiniteGroup,
    right: FiniteGroup,
    to_left: Vec<Element>,
    to_right: Vec<Element>,
    from_pair: Vec<Element>,
}

impl DirectProduct {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn left(&self) -> &FiniteGroup {
        &self.left
    }

    pub fn right(&self) -> &FiniteGroup {
        &self.right
    }

    pub fn project_left(&self, x: Element) -> Element {
        self.to_left[x.index()]
    }

    pub fn project_right(&self, x: Element) -> Element {
        self.to_right[x.index()]
    }

    pub fn pair(&self, l: Element, r: Element) -> Element {
        self.from_pair[l.index() * self.right.order() + r.index()]
    }

    /// `A × B` for subgroups of the two factors.
    pub fn product_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        assert!(a.group().same_group(&self.left) && b.group().same_group(&self.right));
        let mut members: Vec<Element> = a
            .members()
            .iter()
            .flat_map(|&l| b.members().iter().map(move |&r| (l, r)))
            .map(|(l, r)| self.pair(l, r))
            .collect();
        members.sort_unstable();
        Subgroup::from_closed_members(&self.group, members)
    }
}

pub fn direct_product(
    left: &FiniteGroup,
    right: &FiniteGroup,
    options: &BuildOptions,
) -> Result<DirectProduct> {
    let (ls, rs) = match (left.spec(), right.spec()) {
        (Some(l), Some(r)) => (l.clone(), r.clone()),
        _ => return Err(Error::MissingSpec),
    };
    let group = build_group_with(&GroupSpec::product(ls, rs), options)?;
    let k = left.generators().len();
    let total = group.generators().len();
    if total != k + right.generators().len() {
        return Err(Error::InternalInconsistency(
            "product generator count".into(),
        ));
    }
    let left_images: Vec<Element> = (0..total)
        .map(|s| {
            if s < k {
                left.generators()[s]
            } else {
                left.identity()
            }
        })
        .collect();
    let right_images: Vec<Element> = (0..total)
        .map(|s| {
            if s < k {
                right.identity()
            } else {
                right.generators()[s - k]
            }
        })
        .collect();
    let to_left = group.extend_homomorphism(left, &left_images);
    let to_right = group.extend_homomorphism(right, &right_images);
    let mut from_pair = vec![Element::IDENTITY; group.order()];
    for x in group.elements() {
        from_pair[to_left[x.index()].index() * right.order() + to_right[x.index()].index()] = x;
    }
    Ok(DirectProduct {
        group,
        left: left.clone(),
        right: right.clone(),
        to_left,
        to_right,
        from_pair,
    })
}
