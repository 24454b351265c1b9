use serde::{Deserialize, Serialize};

use super::{CodingError, Word};

/// A derived window together with the positions its letters held in the
/// parent window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub word: Word,
    pub positions: Vec<usize>,
}

/// Keeps exactly the letters whose two neighbors coincide. The first and
/// last letters of the window have an unknown neighbor and are dropped.
pub fn derive_sandwich(w: &Word) -> Result<Derived, CodingError> {
    if w.len() < 3 {
        return Err(CodingError::WindowTooShort);
    }
    let positions: Vec<usize> = (1..w.len() - 1).filter(|&j| w.letters[j - 1] == w.letters[j + 1]).collect();
    let word = Word::new(positions.iter().map(|&j| w.letters[j]).collect());
    Ok(Derived { word, positions })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(derive_sandwich(&Word::from("BBBBB")).unwrap().word, Word::from("BBB"));
        let d = derive_sandwich(&Word::from("BCBCBC")).unwrap();
        assert_eq!(d.word, Word::from("CBCB"));
        assert_eq!(d.positions, vec![1, 2, 3, 4]);
        assert!(Word::from("CBC").find_in(&d.word).is_some());
        assert_eq!(derive_sandwich(&Word::from("ACBBA")).unwrap().word, Word::from(""));
        assert_eq!(derive_sandwich(&Word::from("AB")), Err(CodingError::WindowTooShort));
    }
}
