//! Square and flat-torus comparisons: Series derivation against sandwich
//! derivation, the shear that makes sandwich derivation work on the square,
//! and the hexagon to parallelogram dictionary.

use serde::{Deserialize, Serialize};

use crate::coding::{derive_sandwich, hexagon_scheme, CodingError, TransitionDiagram, Word};
use crate::exact::{Mat2, Vec2};
use crate::surface::{
    affine_image, cylinder_decomposition, diamond, square, trace, Polygon, SurfaceError, SurfacePresentation,
    Trajectory,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("window has no complete interior block")]
    NoInteriorBlock,
    #[error("window is not Sturmian: {0}")]
    NotSturmian(String),
    #[error(transparent)]
    Coding(#[from] CodingError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Maximal runs of one letter separated by single occurrences of another.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmianBlockForm {
    pub block: char,
    pub separator: char,
    pub n0: usize,
    /// Lengths of the complete blocks between the first and last separator.
    pub blocks: Vec<usize>,
}

impl SturmianBlockForm {
    pub fn parse(w: &Word) -> Result<Self, TorusError> {
        let mut letters: Vec<char> = w.letters.clone();
        letters.sort_unstable();
        letters.dedup();
        if letters.len() != 2 {
            return Err(TorusError::NotSturmian(format!("{} distinct letters", letters.len())));
        }
        let repeats = |c: char| w.letters.windows(2).any(|p| p[0] == c && p[1] == c);
        let (block, separator) = match (repeats(letters[0]), repeats(letters[1])) {
            (true, false) => (letters[0], letters[1]),
            (false, true) => (letters[1], letters[0]),
            (true, true) => return Err(TorusError::NotSturmian("both letters repeat".into())),
            (false, false) => return Err(TorusError::NoInteriorBlock),
        };
        let seps: Vec<usize> = (0..w.len()).filter(|&i| w.letters[i] == separator).collect();
        let blocks: Vec<usize> = seps.windows(2).map(|p| p[1] - p[0] - 1).collect();
        if blocks.is_empty() {
            return Err(TorusError::NoInteriorBlock);
        }
        let n0 = *blocks.iter().min().unwrap();
        if blocks.iter().any(|&b| b > n0 + 1) {
            return Err(TorusError::NotSturmian(format!("block lengths beyond {n0} and {}", n0 + 1)));
        }
        Ok(SturmianBlockForm { block, separator, n0, blocks })
    }

    /// The window from the first to the last separator.
    pub fn decode(&self) -> Word {
        let mut out = vec![self.separator];
        for &b in &self.blocks {
            out.extend(std::iter::repeat(self.block).take(b));
            out.push(self.separator);
        }
        Word::new(out)
    }
}

fn swap(w: &Word, a: char, b: char) -> Word {
    Word::new(w.letters.iter().map(|&c| if c == a { b } else if c == b { a } else { c }).collect())
}

/// Series derivation: every block loses `n₀` letters, then the two letters
/// trade places.
pub fn series_derive(w: &Word) -> Result<Word, TorusError> {
    let f = SturmianBlockForm::parse(w)?;
    let short = SturmianBlockForm { blocks: f.blocks.iter().map(|b| b - f.n0).collect(), ..f.clone() };
    Ok(swap(&short.decode(), f.block, f.separator))
}

/// One step of the slower derivation: every block loses one letter, with
/// no swap. The window is cut to its first and last separator.
pub fn single_step_derive(w: &Word, block: char, separator: char) -> Word {
    let seps: Vec<usize> = (0..w.len()).filter(|&i| w.letters[i] == separator).collect();
    let mut out = Vec::new();
    if let Some(&first) = seps.first() {
        out.push(w.letters[first]);
    }
    for p in seps.windows(2) {
        let len = p[1] - p[0] - 1;
        out.extend(std::iter::repeat(block).take(len.saturating_sub(1)));
        out.push(separator);
    }
    Word::new(out)
}

/// `n₀` single steps followed by the swap.
pub fn accelerated_single_steps(w: &Word) -> Result<Word, TorusError> {
    let f = SturmianBlockForm::parse(w)?;
    let mut cur = w.clone();
    for _ in 0..f.n0 {
        cur = single_step_derive(&cur, f.block, f.separator);
    }
    Ok(swap(&cur, f.block, f.separator))
}

/// Veech element of the square that makes sandwich derivation work.
pub fn square_gamma_prime() -> Mat2 {
    Mat2::ints(-1, 2, 0, 1)
}

/// The shear of the one-cylinder horizontal decomposition of the square.
pub fn square_sigma() -> Mat2 {
    Mat2::ints(1, 1, 0, 1)
}

/// Unit square cut along the diagonal `c` from `(0,0)` to `(1,1)`.
pub fn augmented_square() -> SurfacePresentation {
    let v = Vec2::ints;
    let low = Polygon::new(vec![v(0, 0), v(1, 0), v(1, 1)]);
    let high = Polygon::new(vec![v(0, 0), v(1, 1), v(0, 1)]);
    let labels = |s: &str| s.chars().collect::<Vec<char>>();
    SurfacePresentation::new("square+c", vec![low, high], vec![labels("ABc"), labels("cAB")]).expect("valid")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SquareCase {
    pub derived: String,
    pub sheared: String,
    /// Offset of the derived core in the sheared trace.
    pub offset: Option<usize>,
}

/// Derivation against the trace of the image under `Ψ_m`, for one
/// trajectory of the square with slope in `(0, 1)`.
pub fn square_case(m: &Mat2, t: &Trajectory, n: usize) -> Result<SquareCase, TorusError> {
    let s = square();
    let w = trace(&s, t, n)?;
    let core = derive_sandwich(&w)?.word;
    let image = affine_image(&s, m, t)?;
    let w2 = trace(&s, &image, n)?;
    Ok(SquareCase { offset: core.find_in(&w2), derived: core.as_str(), sheared: w2.as_str() })
}

/// Orientation-reversing counterpart of `σ`; the reflection in the
/// vertical axis does not change the labels of the square.
pub fn square_gamma() -> Mat2 {
    Mat2::ints(-1, 1, 0, 1)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SigmaCollapse {
    /// Augmented sequence with `B` dropped and the diagonal renamed `B`.
    pub hat: String,
    /// Trace of the image of `τ` under the shear of the one-cylinder
    /// decomposition.
    pub bar: String,
    pub equal: bool,
}

/// With the one-cylinder shear the new vertical side is the old diagonal,
/// so the sequence of the sheared trajectory is the augmented sequence
/// with `B` dropped: no information is gained.
pub fn sigma_collapse(t: &Trajectory, n: usize) -> Result<SigmaCollapse, TorusError> {
    let aug = trace(&augmented_square(), t, 3 * n)?;
    let hat: Vec<char> = aug.letters.iter().filter(|&&c| c != 'B').map(|&c| if c == 'c' { 'B' } else { c }).collect();
    let s = square();
    let bar = trace(&s, &affine_image(&s, &square_gamma(), t)?, n)?;
    let hat = Word::new(hat.into_iter().take(n).collect());
    Ok(SigmaCollapse { equal: hat == bar, hat: hat.as_str(), bar: bar.as_str() })
}

/// Inverse modulus of the horizontal cylinder of the square turned by π/4.
pub fn diamond_inverse_modulus() -> Result<crate::exact::FieldElement, TorusError> {
    let d = cylinder_decomposition(&diamond(), &crate::exact::Direction::from_ints(1, 0).unwrap())?;
    Ok(d.cylinders[0].inverse_modulus.clone())
}

/// First diagram with the crossings of the parallelogram sides: `e` is the
/// vertical diagonal from the bottom-left vertex, `f` the diagonal at π/6
/// leaving the bottom vertex.
pub fn dictionary_diagram() -> TransitionDiagram {
    TransitionDiagram::new(
        "D0 dictionary",
        "ACB",
        &[('A', 'C', ""), ('C', 'A', "e"), ('C', 'B', "e"), ('B', 'C', "ef"), ('B', 'B', "e")],
    )
}

/// Parallelogram letters read off a hexagon window admissible in the first
/// diagram: `e` becomes `B′` (vertical) and `f` becomes `A′` (slope π/6).
pub fn hex_to_parallelogram(w: &Word) -> Result<Word, TorusError> {
    let aug = dictionary_diagram().interpolate(w)?;
    Ok(Word::new(
        aug.letters
            .iter()
            .filter_map(|&c| match c {
                'e' => Some('b'),
                'f' => Some('a'),
                _ => None,
            })
            .collect(),
    ))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NoncommutationReport {
    pub word: String,
    pub derived: String,
    pub dictionary: String,
    pub dictionary_of_derived: String,
    pub derived_of_dictionary: String,
    pub commute: bool,
}

/// The periodic `BC` trajectory: its sandwich derivative is itself, its
/// parallelogram word is `A′B′B′` repeated, and the derivative of that is
/// not.
pub fn noncommutation_witness() -> Result<NoncommutationReport, TorusError> {
    let w = Word::from("BC").repeat(12);
    let derived = derive_sandwich(&w)?.word;
    let dict = hex_to_parallelogram(&w)?;
    let dict_of_derived = hex_to_parallelogram(&derived)?;
    let derived_of_dict = derive_sandwich(&dict)?.word;
    let commute = derived_of_dict.find_in(&dict_of_derived).is_some() || dict_of_derived.find_in(&derived_of_dict).is_some();
    debug_assert!(hexagon_scheme().diagrams[0].admits(&w));
    Ok(NoncommutationReport {
        word: w.pretty(),
        derived: derived.pretty(),
        dictionary: dict.pretty(),
        dictionary_of_derived: dict_of_derived.pretty(),
        derived_of_dictionary: derived_of_dict.pretty(),
        commute,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fe;

    #[test]
    fn series_example() {
        let w = Word::from("AABAAABAAB");
        let f = SturmianBlockForm::parse(&w).unwrap();
        assert_eq!((f.block, f.separator, f.n0), ('A', 'B', 2));
        assert_eq!(f.blocks, vec![3, 2]);
        // blocks (3, 2) lose two letters: B A B B, then swap
        assert_eq!(series_derive(&w).unwrap(), Word::from("ABAA"));
        assert_eq!(accelerated_single_steps(&w).unwrap(), Word::from("ABAA"));
        assert_eq!(series_derive(&Word::from("BBBB")), Err(TorusError::NotSturmian("1 distinct letters".into())));
        assert!(matches!(series_derive(&Word::from("BAABAAAAB")), Err(TorusError::NotSturmian(_))));
    }

    #[test]
    fn diamond_has_modulus_two() {
        assert_eq!(diamond_inverse_modulus().unwrap(), fe("2"));
        assert!((&square_gamma_prime() * &square_gamma_prime()).is_identity());
        assert_eq!(&square_sigma() * &square_sigma(), Mat2::ints(1, 2, 0, 1));
    }

    #[test]
    fn dictionary_examples() {
        let bc = hex_to_parallelogram(&Word::from("BCBCBC")).unwrap();
        assert!(Word::from("A′B′B′A′B′B′").find_in(&bc).is_some(), "{}", bc.pretty());
        assert_eq!(hex_to_parallelogram(&Word::from("AC")).unwrap(), Word::from(""));
        assert!(hex_to_parallelogram(&Word::from("AB")).is_err());
        let r = noncommutation_witness().unwrap();
        assert!(!r.commute);
        assert!(r.derived_of_dictionary.chars().all(|c| c == 'A' || c == '′'));
    }
}
