//! Generator symbols and words, with the textual grammar used by the CLI:
//! `s<n>.<i>` (or `s<n>` for `i = 0`), `pi`, `iota`, `r0`, `r1`, separated
//! by whitespace or commas.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::RootIndex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    S(RootIndex),
    Pi,
    Iota,
    R0,
    R1,
}

impl Generator {
    pub fn s(n: u16, i: i16) -> Self {
        Generator::S(RootIndex::new(n, i))
    }

    pub fn root(&self) -> Option<RootIndex> {
        match self {
            Generator::S(r) => Some(*r),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown generator token `{0}`")]
pub struct ParseWordError(pub String);

impl FromStr for Generator {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseWordError(s.to_string());
        match s {
            "pi" => return Ok(Generator::Pi),
            "iota" => return Ok(Generator::Iota),
            "r0" => return Ok(Generator::R0),
            "r1" => return Ok(Generator::R1),
            _ => {}
        }
        let body = s.strip_prefix('s').ok_or_else(err)?;
        let (n, i) = match body.split_once('.') {
            Some((n, i)) => (n, i),
            None => (body, "0"),
        };
        let n: u16 = n.parse().map_err(|_| err())?;
        let i: i16 = i.parse().map_err(|_| err())?;
        Ok(Generator::s(n, i))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S(r) => write!(f, "{r}"),
            Generator::Pi => write!(f, "pi"),
            Generator::Iota => write!(f, "iota"),
            Generator::R0 => write!(f, "r0"),
            Generator::R1 => write!(f, "r1"),
        }
    }
}

/// `g_1 g_2 ... g_m`; as a lattice map the rightmost letter acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<Generator>);

impl WeylWord {
    pub fn new(g: Vec<Generator>) -> Self {
        WeylWord(g)
    }

    pub fn empty() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    /// `g * self`
    pub fn prepend(&self, g: Generator) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(g);
        v.extend_from_slice(&self.0);
        WeylWord(v)
    }

    pub fn concat(&self, other: &WeylWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    pub fn pow(&self, k: usize) -> Self {
        WeylWord(self.0.iter().cycle().take(self.0.len() * k).copied().collect())
    }
}

impl FromStr for WeylWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(Generator::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map(WeylWord)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let w: WeylWord = "s1.0 s2.-1, pi iota r0 r1 s3".parse().unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.0[1], Generator::s(2, -1));
        assert_eq!(w.0[6], Generator::s(3, 0));
        let again: WeylWord = w.to_string().parse().unwrap();
        assert_eq!(again, w);
    }

    #[test]
    fn unknown_token() {
        assert!("s1.0 foo".parse::<WeylWord>().is_err());
        assert!("".parse::<WeylWord>().unwrap().is_empty());
    }
}
