use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CodingError, Word, GENERATION_LABELS, HEX_DIAGRAM_NODES};

/// The five arrows of the common diagram shape `0 ⇄ 1 ⇄ 2 ↺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Arrow {
    W1,
    W1Bar,
    W2,
    W2Bar,
    W3,
}

impl Arrow {
    pub const ALL: [Arrow; 5] = [Arrow::W1, Arrow::W1Bar, Arrow::W2, Arrow::W2Bar, Arrow::W3];

    pub fn ends(self) -> (usize, usize) {
        match self {
            Arrow::W1 => (0, 1),
            Arrow::W1Bar => (1, 0),
            Arrow::W2 => (1, 2),
            Arrow::W2Bar => (2, 1),
            Arrow::W3 => (2, 2),
        }
    }

    pub fn conj(self) -> Arrow {
        match self {
            Arrow::W1 => Arrow::W1Bar,
            Arrow::W1Bar => Arrow::W1,
            Arrow::W2 => Arrow::W2Bar,
            Arrow::W2Bar => Arrow::W2,
            Arrow::W3 => Arrow::W3,
        }
    }

    pub fn between(from: usize, to: usize) -> Option<Arrow> {
        Arrow::ALL.into_iter().find(|a| a.ends() == (from, to))
    }

    fn index(self) -> usize {
        Arrow::ALL.iter().position(|&a| a == self).unwrap()
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arrow::W1 => "w1",
            Arrow::W1Bar => "~w1",
            Arrow::W2 => "w2",
            Arrow::W2Bar => "~w2",
            Arrow::W3 => "w3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowWord {
    pub arrows: Vec<Arrow>,
}

impl ArrowWord {
    pub fn new(arrows: Vec<Arrow>) -> Self {
        ArrowWord { arrows }
    }

    /// Index of the first arrow that does not start where the previous ended.
    pub fn first_break(&self) -> Option<usize> {
        self.arrows.windows(2).position(|p| p[0].ends().1 != p[1].ends().0).map(|i| i + 1)
    }

    pub fn is_composable(&self) -> bool {
        self.first_break().is_none()
    }

    /// Read right to left with every arrow conjugated.
    pub fn conj(&self) -> ArrowWord {
        ArrowWord::new(self.arrows.iter().rev().map(|a| a.conj()).collect())
    }
}

impl fmt::Display for ArrowWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arrows.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

use Arrow::*;

/// Images of `[w₁, w̄₁, w₂, w̄₂, w₃]` under `σ₁ … σ₅`. The image of `w₃`
/// under `σ₃` is `w₁w₂w₃w̄₂w̄₁` and that of `w̄₂` is `w₁w₂w₃w̄₂`, the
/// conjugate of `σ₃(w₂)`; both follow from the generation labels.
const SUBSTITUTIONS: [[&[Arrow]; 5]; 5] = [
    [&[W1Bar], &[W1], &[W1, W2, W3], &[W3, W2Bar, W1Bar], &[W3]],
    [&[W2, W3], &[W3, W2Bar], &[W3, W2Bar, W1Bar], &[W1, W2, W3], &[W1, W2, W3, W2Bar, W1Bar]],
    [&[W3, W2Bar], &[W2, W3], &[W2, W3, W2Bar, W1Bar], &[W1, W2, W3, W2Bar], &[W1, W2, W3, W2Bar, W1Bar]],
    [&[W2Bar, W1Bar], &[W1, W2], &[W1, W2, W3, W2Bar], &[W2, W3, W2Bar, W1Bar], &[W2, W3, W2Bar]],
    [&[W1, W2], &[W2Bar, W1Bar], &[W2Bar], &[W2], &[W2, W3, W2Bar]],
];

pub fn substitution(i: usize, a: Arrow) -> ArrowWord {
    ArrowWord::new(SUBSTITUTIONS[i - 1][a.index()].to_vec())
}

/// `σᵢ` applied arrow by arrow, for `i ∈ 1..=5`.
pub fn substitution_apply(i: usize, a: &ArrowWord) -> Result<ArrowWord, CodingError> {
    if !(1..=5).contains(&i) {
        return Err(CodingError::NoDiagram);
    }
    if let Some(k) = a.first_break() {
        return Err(CodingError::NotComposable(k));
    }
    Ok(ArrowWord::new(a.arrows.iter().flat_map(|&x| substitution(i, x).arrows).collect()))
}

/// Letters visited by the arrow path in hexagon diagram `s0`.
pub fn arrows_to_letters(a: &ArrowWord, s0: usize) -> Result<Word, CodingError> {
    if let Some(k) = a.first_break() {
        return Err(CodingError::NotComposable(k));
    }
    let nodes = HEX_DIAGRAM_NODES[s0];
    let mut out = Vec::with_capacity(a.arrows.len() + 1);
    if let Some(first) = a.arrows.first() {
        out.push(nodes[first.ends().0]);
    }
    out.extend(a.arrows.iter().map(|x| nodes[x.ends().1]));
    Ok(Word::new(out))
}

/// Arrows of the path that `w` traces in hexagon diagram `s0`.
pub fn letters_to_arrows(w: &Word, s0: usize) -> Result<ArrowWord, CodingError> {
    let nodes = HEX_DIAGRAM_NODES[s0];
    let idx = |c: char, i: usize| {
        nodes.iter().position(|&n| n == c).ok_or_else(|| CodingError::NotAdmissible(format!("D{s0}"), i))
    };
    let mut out = Vec::new();
    for (i, p) in w.letters.windows(2).enumerate() {
        let a = Arrow::between(idx(p[0], i)?, idx(p[1], i + 1)?)
            .ok_or_else(|| CodingError::NotAdmissible(format!("D{s0}"), i))?;
        out.push(a);
    }
    Ok(ArrowWord::new(out))
}

/// Recomputes `σᵢ(a)` from the generation labels: the path in the first
/// diagram followed by the interpolated transition.
pub fn substitution_from_labels(i: usize, a: Arrow) -> ArrowWord {
    let nodes = HEX_DIAGRAM_NODES[i];
    let (s, t) = a.ends();
    let mut letters = vec![nodes[s]];
    letters.extend(GENERATION_LABELS[i][a.index()].chars());
    letters.push(nodes[t]);
    letters_to_arrows(&Word::new(letters), 0).expect("generated transitions are admissible")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_examples() {
        assert_eq!(substitution(5, W2).arrows, vec![W2Bar]);
        assert_eq!(substitution(1, W3).arrows, vec![W3]);
        let printed_typo = ArrowWord::new(vec![W1, W1, W3, W2Bar, W1Bar]);
        assert!(!printed_typo.is_composable());
    }

    #[test]
    fn table_matches_generation_labels() {
        for i in 1..=5 {
            for a in Arrow::ALL {
                assert_eq!(substitution(i, a), substitution_from_labels(i, a), "sigma_{i}({a})");
            }
        }
    }

    #[test]
    fn conjugate_arrows_read_backwards() {
        for i in 1..=5 {
            for a in Arrow::ALL {
                assert_eq!(substitution(i, a.conj()), substitution(i, a).conj(), "sigma_{i}({a})");
            }
        }
    }

    #[test]
    fn letters_round_trip() {
        let w = Word::from("ACBBBCACB");
        let a = letters_to_arrows(&w, 0).unwrap();
        assert_eq!(a.arrows, vec![W1, W2, W3, W3, W2Bar, W1Bar, W1, W2]);
        assert_eq!(arrows_to_letters(&a, 0).unwrap(), w);
        assert!(substitution_apply(1, &ArrowWord::new(vec![W1, W3])).is_err());
    }
}
