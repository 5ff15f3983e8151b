//! Recursive descent parser for the group-spec mini-language.
//!
//! ```text
//! spec  := term { "x" term }
//! term  := "C" int | "D" int | "Q8" | "S" int | "A" int
//!        | "Heis(" int ")" | "Dih(" spec ")"
//!        | "SL(" int "," int ")" | "ASL(" int "," int ")"
//!        | "perm" [ "(" int ")" ] "[" gen { "," gen } "]"
//!        | "(" spec ")"
//! gen   := cycle { cycle }
//! cycle := "(" { int } ")"
//! ```
//!
//! Whitespace between tokens is ignored. `x` is left associative. Error
//! positions are character offsets into the input.

use crate::error::{Error, Result};
use crate::spec::GroupSpec;

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser::new(text);
    let spec = p.spec()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&["x", "end of input"]));
    }
    Ok(spec)
}

/// Parses a comma separated generator list such as `(0 1 2),(0 1)(2 3)`.
pub fn parse_generators(text: &str) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut p = Parser::new(text);
    let gens = p.generator_list()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&[",", "end of input"]));
    }
    Ok(gens)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &[&str]) -> Error {
        Error::Syntax {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Consumes `word` if the input continues with it, after whitespace.
    fn eat(&mut self, word: &str) -> bool {
        self.skip_ws();
        let n = word.chars().count();
        if self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n]
                .iter()
                .copied()
                .eq(word.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, word: &str) -> Result<()> {
        if self.eat(word) {
            Ok(())
        } else {
            Err(self.error(&[word]))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["integer"]));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error(&["integer"])
        })
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let mut spec = self.term()?;
        while self.eat("x") {
            let right = self.term()?;
            spec = GroupSpec::product(spec, right);
        }
        Ok(spec)
    }

    fn term(&mut self) -> Result<GroupSpec> {
        const TERMS: &[&str] = &[
            "C", "D", "Q8", "S", "A", "Heis(", "Dih(", "SL(", "ASL(", "perm", "(",
        ];
        // longer keywords first so "ASL(" wins over "A", "Dih(" over "D", "SL(" over "S"
        if self.eat("ASL") {
            let (n, p) = self.pair()?;
            return Ok(GroupSpec::AffineSpecialLinear { n, p });
        }
        if self.eat("SL") {
            let (n, p) = self.pair()?;
            return Ok(GroupSpec::SpecialLinear { n, p });
        }
        if self.eat("Dih") {
            self.expect("(")?;
            let inner = self.spec()?;
            self.expect(")")?;
            return Ok(GroupSpec::GeneralizedDihedral(Box::new(inner)));
        }
        if self.eat("Heis") {
            self.expect("(")?;
            let m = self.int()?;
            self.expect(")")?;
            return Ok(GroupSpec::Heisenberg(m));
        }
        if self.eat("perm") {
            let degree = if self.eat("(") {
                let d = self.int()?;
                self.expect(")")?;
                Some(d)
            } else {
                None
            };
            self.expect("[")?;
            let generators = self.generator_list()?;
            self.expect("]")?;
            let degree = degree.unwrap_or_else(|| GroupSpec::inferred_degree(&generators));
            return Ok(GroupSpec::Perm { degree, generators });
        }
        if self.eat("Q8") {
            return Ok(GroupSpec::Quaternion8);
        }
        if self.eat("(") {
            let inner = self.spec()?;
            self.expect(")")?;
            return Ok(inner);
        }
        match self.peek() {
            Some('C') => {
                self.pos += 1;
                Ok(GroupSpec::Cyclic(self.int()?))
            }
            Some('D') => {
                self.pos += 1;
                Ok(GroupSpec::Dihedral(self.int()?))
            }
            Some('S') => {
                self.pos += 1;
                Ok(GroupSpec::Symmetric(self.int()?))
            }
            Some('A') => {
                self.pos += 1;
                Ok(GroupSpec::Alternating(self.int()?))
            }
            _ => Err(self.error(TERMS)),
        }
    }

    fn pair(&mut self) -> Result<(usize, usize)> {
        self.expect("(")?;
        let a = self.int()?;
        self.expect(",")?;
        let b = self.int()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn generator_list(&mut self) -> Result<Vec<Vec<Vec<usize>>>> {
        let mut gens = vec![self.generator()?];
        while self.eat(",") {
            gens.push(self.generator()?);
        }
        Ok(gens)
    }

    fn generator(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut cycles = vec![self.cycle()?];
        while self.peek() == Some('(') {
            cycles.push(self.cycle()?);
        }
        // "()" denotes the identity and contributes no cycle
        cycles.retain(|c| !c.is_empty());
        Ok(cycles)
    }

    fn cycle(&mut self) -> Result<Vec<usize>> {
        self.expect("(")?;
        let mut points = Vec::new();
        loop {
            match self.peek() {
                Some(')') => {
                    self.pos += 1;
                    return Ok(points);
                }
                Some(c) if c.is_ascii_digit() => points.push(self.int()?),
                _ => return Err(self.error(&["integer", ")"])),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syntax_position(text: &str) -> usize {
        match parse_group_spec(text) {
            Err(Error::Syntax { position, .. }) => position,
            other => panic!("expected syntax error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn atoms() {
        assert_eq!(parse_group_spec("S4").unwrap(), GroupSpec::Symmetric(4));
        assert_eq!(parse_group_spec("Q8").unwrap(), GroupSpec::Quaternion8);
        assert_eq!(parse_group_spec(" D 8 ").unwrap(), GroupSpec::Dihedral(8));
        assert_eq!(
            parse_group_spec("Heis(3)").unwrap(),
            GroupSpec::Heisenberg(3)
        );
        assert_eq!(
            parse_group_spec("ASL(3,2)").unwrap(),
            GroupSpec::AffineSpecialLinear { n: 3, p: 2 }
        );
        assert_eq!(
            parse_group_spec("SL( 2 , 3 )").unwrap(),
            GroupSpec::SpecialLinear { n: 2, p: 3 }
        );
    }

    #[test]
    fn products_are_left_associative() {
        let c2 = || GroupSpec::Cyclic(2);
        assert_eq!(
            parse_group_spec("C2 x C2").unwrap(),
            GroupSpec::product(c2(), c2())
        );
        assert_eq!(
            parse_group_spec("C2xC2xC2").unwrap(),
            GroupSpec::product(GroupSpec::product(c2(), c2()), c2())
        );
        assert_eq!(
            parse_group_spec("C2 x (C2 x C2)").unwrap(),
            GroupSpec::product(c2(), GroupSpec::product(c2(), c2()))
        );
    }

    #[test]
    fn dih_and_perm() {
        assert_eq!(
            parse_group_spec("Dih(C3 x C3)").unwrap(),
            GroupSpec::GeneralizedDihedral(Box::new(GroupSpec::product(
                GroupSpec::Cyclic(3),
                GroupSpec::Cyclic(3)
            )))
        );
        assert_eq!(
            parse_group_spec("perm[(0 1 2),(0 1)(3 4)]").unwrap(),
            GroupSpec::Perm {
                degree: 5,
                generators: vec![vec![vec![0, 1, 2]], vec![vec![0, 1], vec![3, 4]]],
            }
        );
        assert_eq!(
            parse_group_spec("perm(6)[()]").unwrap(),
            GroupSpec::Perm {
                degree: 6,
                generators: vec![vec![]],
            }
        );
    }

    #[test]
    fn error_positions() {
        assert_eq!(syntax_position("Heis("), 5);
        assert_eq!(syntax_position(""), 0);
        assert_eq!(syntax_position("C2 x"), 4);
        assert_eq!(syntax_position("C2 C3"), 3);
        assert_eq!(syntax_position("SL(3 2)"), 5);
        assert_eq!(syntax_position("perm[(0 1"), 9);
    }

    #[test]
    fn generator_lists() {
        assert_eq!(
            parse_generators("(0 1 2 3), (0 1)").unwrap(),
            vec![vec![vec![0, 1, 2, 3]], vec![vec![0, 1]]]
        );
        assert!(parse_generators("(0 1) x").is_err());
    }
}
