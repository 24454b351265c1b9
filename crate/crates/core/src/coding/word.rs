use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Finite window of a bi-infinite symbolic sequence.
///
/// Letters are chars. Lowercase letters stand for primed letters of a
/// second alphabet, so `a` is printed as `A′`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    pub letters: Vec<char>,
}

impl Word {
    pub fn new(letters: Vec<char>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_str(&self) -> String {
        self.letters.iter().collect()
    }

    /// Letters with lowercase rendered as primed uppercase.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        for &c in &self.letters {
            if c.is_ascii_lowercase() {
                s.push(c.to_ascii_uppercase());
                s.push('′');
            } else {
                s.push(c);
            }
        }
        s
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::new(self.letters[from..to].to_vec())
    }

    /// Smallest offset at which `self` occurs inside `other`.
    pub fn find_in(&self, other: &Word) -> Option<usize> {
        if self.len() > other.len() {
            return None;
        }
        (0..=other.len() - self.len()).find(|&i| other.letters[i..i + self.len()] == self.letters[..])
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word::new(self.letters.repeat(n))
    }
}

impl FromStr for Word {
    type Err = std::convert::Infallible;

    /// Accepts plain letters; `X′` or `X'` is read as the primed letter `x`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters: Vec<char> = Vec::new();
        for c in s.chars() {
            if c == '′' || c == '\'' {
                if let Some(last) = letters.last_mut() {
                    *last = last.to_ascii_lowercase();
                }
            } else if !c.is_whitespace() {
                letters.push(c);
            }
        }
        Ok(Word { letters })
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        s.parse().expect("infallible")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.pretty())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.pretty())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        Ok(Word::from(s.as_str()))
    }
}
