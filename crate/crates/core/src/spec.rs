//! Abstract syntax of group specifications.
//!
//! The text form (see [`crate::parser`]) round-trips through [`fmt::Display`].

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// Cyclic group of order `n`.
    Cyclic(usize),
    /// Dihedral group of the given order (`2n` for the symmetries of an `n`-gon).
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    /// Unitriangular 3x3 matrices over `Z/m`.
    Heisenberg(usize),
    /// `A ⋊ C2` with the generator of `C2` acting by inversion; `A` must be abelian.
    GeneralizedDihedral(Box<GroupSpec>),
    SpecialLinear {
        n: usize,
        p: usize,
    },
    /// `SL(n, p) ⋉ F_p^n`; requires `gcd(n, p - 1) = 1`.
    AffineSpecialLinear {
        n: usize,
        p: usize,
    },
    /// Subgroup of `S(degree)` generated by the listed permutations, each a product of cycles.
    Perm {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn product(left: GroupSpec, right: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(left), Box::new(right))
    }

    /// Smallest degree that holds every point mentioned in `generators`.
    pub fn inferred_degree(generators: &[Vec<Vec<usize>>]) -> usize {
        generators
            .iter()
            .flatten()
            .flatten()
            .map(|&x| x + 1)
            .max()
            .unwrap_or(1)
    }

    /// Checks every numeric side condition that can be decided without building the group.
    pub fn validate(&self) -> Result<()> {
        use GroupSpec::*;
        let invalid = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            Cyclic(n) | Symmetric(n) | Alternating(n) | Heisenberg(n) if *n == 0 => {
                invalid(format!("{self}: parameter must be at least 1"))
            }
            Dihedral(order) if *order < 2 || order % 2 != 0 => invalid(format!(
                "{self}: dihedral order must be even and at least 2"
            )),
            SpecialLinear { n, p } | AffineSpecialLinear { n, p } => {
                if *n == 0 {
                    return invalid(format!("{self}: dimension must be at least 1"));
                }
                if !is_prime(*p) {
                    return invalid(format!("{self}: {p} is not prime"));
                }
                if matches!(self, AffineSpecialLinear { .. }) && gcd(*n, p - 1) != 1 {
                    return invalid(format!("{self}: requires gcd({n}, {}) = 1", p - 1));
                }
                Ok(())
            }
            Perm { degree, generators } => {
                if *degree == 0 || *degree > u16::MAX as usize {
                    return invalid(format!("perm degree {degree} out of range"));
                }
                if GroupSpec::inferred_degree(generators) > *degree {
                    return invalid(format!(
                        "perm generators move points beyond degree {degree}"
                    ));
                }
                Ok(())
            }
            GeneralizedDihedral(inner) => inner.validate(),
            Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn write_generator(f: &mut fmt::Formatter<'_>, cycles: &[Vec<usize>]) -> fmt::Result {
    if cycles.is_empty() {
        return write!(f, "()");
    }
    for cycle in cycles {
        let body: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", body.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Cyclic(n) => write!(f, "C{n}"),
            Dihedral(n) => write!(f, "D{n}"),
            Quaternion8 => write!(f, "Q8"),
            Symmetric(n) => write!(f, "S{n}"),
            Alternating(n) => write!(f, "A{n}"),
            Heisenberg(m) => write!(f, "Heis({m})"),
            GeneralizedDihedral(a) => write!(f, "Dih({a})"),
            SpecialLinear { n, p } => write!(f, "SL({n},{p})"),
            AffineSpecialLinear { n, p } => write!(f, "ASL({n},{p})"),
            Perm { degree, generators } => {
                write!(f, "perm")?;
                if *degree != GroupSpec::inferred_degree(generators) {
                    write!(f, "({degree})")?;
                }
                write!(f, "[")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write_generator(f, g)?;
                }
                write!(f, "]")
            }
            Product(a, b) => {
                if matches!(**b, Product(..)) {
                    write!(f, "{a} x ({b})")
                } else {
                    write!(f, "{a} x {b}")
                }
            }
        }
    }
}
