//! Permutations of `{0, .., n-1}` with 1-based cycle notation for input and output.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation stored as its image list, trimmed of trailing fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { images: Vec::new() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Permutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        let mut p = Permutation { images };
        p.trim();
        Ok(p)
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`, `(1 2)` or `()`.
    pub fn parse_cycles(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if rest_trim.is_empty() {
                break;
            }
            if !rest_trim.starts_with('(') {
                return Err(Error::Permutation(format!("expected '(' in {s:?}")));
            }
            let close = rest_trim
                .find(')')
                .ok_or_else(|| Error::Permutation(format!("unbalanced parentheses in {s:?}")))?;
            let body = &rest_trim[1..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let v: u32 = tok
                    .parse()
                    .map_err(|_| Error::Permutation(format!("bad point {tok:?} in {s:?}")))?;
                if v == 0 {
                    return Err(Error::Permutation(format!("points are 1-based in {s:?}")));
                }
                cycle.push(v - 1);
            }
            cycles.push(cycle);
            rest = &rest_trim[close + 1..];
        }
        let degree = cycles.iter().flatten().map(|&v| v as usize + 1).max().unwrap_or(0);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in &cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if touched[a as usize] {
                    return Err(Error::Permutation(format!("point {} repeated in {s:?}", a + 1)));
                }
                touched[a as usize] = true;
                images[a as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    fn trim(&mut self) {
        while let Some(&last) = self.images.last() {
            if last as usize == self.images.len() - 1 {
                self.images.pop();
            } else {
                break;
            }
        }
    }

    /// Number of points up to the largest moved one.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images.get(x as usize).copied().unwrap_or(x)
    }

    /// `self * other` acting on the left: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.degree().max(other.degree());
        let images = (0..n as u32).map(|x| self.apply(other.apply(x))).collect();
        let mut p = Permutation { images };
        p.trim();
        p
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse_cycles(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p: Permutation = "(1,2,3)(4,5)".parse().unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(4), 3);
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert!(Permutation::parse_cycles("()").unwrap().is_identity());
        assert_eq!(Permutation::parse_cycles("(1 2)").unwrap().to_string(), "(1,2)");
    }

    #[test]
    fn trailing_fixed_points_are_ignored() {
        let a = Permutation::parse_cycles("(1,2)").unwrap();
        let b = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn compose_is_left_action() {
        let a: Permutation = "(1,2)".parse().unwrap();
        let b: Permutation = "(2,3)".parse().unwrap();
        // a(b(1)) = a(1) = 2, a(b(2)) = a(3) = 3, a(b(3)) = a(2) = 1
        assert_eq!(a.compose(&b).to_string(), "(1,2,3)");
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_garbage() {
        assert!(Permutation::parse_cycles("(1,1)").is_err());
        assert!(Permutation::parse_cycles("(0,1)").is_err());
        assert!(Permutation::parse_cycles("1,2").is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
