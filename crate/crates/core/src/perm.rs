//! Permutations of `{0, .., degree - 1}`.
//!
//! Composition is functional: `(a * b)(x) = a(b(x))`, so `b` acts first.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds the product of `cycles`, rightmost cycle acting first.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut result = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut seen = std::collections::BTreeSet::new();
            for &x in cycle {
                if x >= degree {
                    return Err(Error::InvalidArgument(format!(
                        "point {x} out of range for degree {degree}"
                    )));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidArgument(format!(
                        "point {x} repeated inside cycle {cycle:?}"
                    )));
                }
            }
            let mut step = Permutation::identity(degree);
            for (i, &x) in cycle.iter().enumerate() {
                step.images[x] = cycle[(i + 1) % cycle.len()];
            }
            result = step.compose(&result);
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self * other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        (0..self.degree()).all(|x| self.images[other.images[x]] == other.images[self.images[x]])
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_right_to_left() {
        let t = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        // c first: 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
        assert_eq!(t.compose(&c).images(), &[0, 2, 1]);
        assert_eq!(t.compose(&c).to_string(), "(1 2)");
    }

    #[test]
    fn cycles_multiply_right_first() {
        let p = Permutation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).unwrap();
        // (1 2) first then (0 1): 1 -> 2 -> 2, 2 -> 1 -> 0, 0 -> 0 -> 1
        assert_eq!(p.images(), &[1, 2, 0, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 3]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1, 0]]).is_err());
    }

    #[test]
    fn inverse_and_display() {
        let p = Permutation::from_cycles(5, &[vec![0, 2, 4], vec![1, 3]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.to_string(), "(0 2 4)(1 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
