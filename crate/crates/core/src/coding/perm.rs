use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CodingError, Word};

/// A permutation of a finite alphabet of letters.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    map: BTreeMap<char, char>,
}

impl Permutation {
    pub fn identity(alphabet: &str) -> Self {
        Permutation { map: alphabet.chars().map(|c| (c, c)).collect() }
    }

    /// Parses cycle notation such as `(AD)(BC)`; `(ABC)` sends A to B.
    /// Letters of `alphabet` outside every cycle are fixed.
    pub fn from_cycles(alphabet: &str, cycles: &str) -> Self {
        let mut p = Self::identity(alphabet);
        for cyc in cycles.split(')') {
            let letters: Vec<char> = cyc.chars().filter(|c| c.is_alphabetic()).collect();
            for (i, &c) in letters.iter().enumerate() {
                p.map.insert(c, letters[(i + 1) % letters.len()]);
            }
        }
        p
    }

    pub fn apply(&self, c: char) -> Result<char, CodingError> {
        self.map.get(&c).copied().ok_or(CodingError::LetterOutside(c))
    }

    pub fn apply_word(&self, w: &Word) -> Result<Word, CodingError> {
        Ok(Word::new(w.letters.iter().map(|&c| self.apply(c)).collect::<Result<_, _>>()?))
    }

    pub fn inverse(&self) -> Self {
        Permutation { map: self.map.iter().map(|(&a, &b)| (b, a)).collect() }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation { map: other.map.iter().map(|(&a, b)| (a, self.map[b])).collect() }
    }

    pub fn is_bijection(&self) -> bool {
        let mut images: Vec<char> = self.map.values().copied().collect();
        images.sort_unstable();
        images.dedup();
        images.len() == self.map.len() && images.iter().all(|c| self.map.contains_key(c))
    }

    pub fn alphabet(&self) -> Vec<char> {
        self.map.keys().copied().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(a, b)| a == b)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = Vec::new();
        let mut out = String::new();
        for &start in self.map.keys() {
            if seen.contains(&start) || self.map[&start] == start {
                continue;
            }
            out.push('(');
            let mut c = start;
            loop {
                seen.push(c);
                out.push(c);
                c = self.map[&c];
                if c == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_cycles("ABC", "(ABC)");
        assert_eq!(p.apply_word(&Word::from("AAB")).unwrap(), Word::from("BBC"));
        assert_eq!(p.inverse().compose(&p), Permutation::identity("ABC"));
        assert_eq!(format!("{p:?}"), "(ABC)");
        assert_eq!(p.apply('D'), Err(CodingError::LetterOutside('D')));
        assert!(Permutation::from_cycles("ABCDEFGH", "(AD)(BC)(EH)(FG)").is_bijection());
    }
}
