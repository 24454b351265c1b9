//! Words, transition diagrams, sandwich derivation, normal forms,
//! generation operators and arrow substitutions.

mod arrows;
mod derive;
mod diagram;
mod perm;
mod scheme;
mod verdict;
mod word;

pub use arrows::{
    arrows_to_letters, letters_to_arrows, substitution, substitution_apply, substitution_from_labels, Arrow,
    ArrowWord,
};
pub use derive::{derive_sandwich, Derived};
pub use diagram::{admissible_diagrams, Edge, TransitionDiagram};
pub use perm::Permutation;
pub use scheme::{
    augmented_d0, generate, generation_diagram, hexagon_gamma, hexagon_scheme, hexagon_symmetry, square_scheme,
    CodingScheme, SymmetryData, GENERATION_LABELS, HEX_DIAGRAM_NODES,
};
pub use verdict::{characterize, derivation_itinerary, Itinerary, Verdict, VerdictStatus};
pub use word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodingError {
    #[error("window too short")]
    WindowTooShort,
    #[error("word is not admissible in {0} (transition {1})")]
    NotAdmissible(String, usize),
    #[error("word is admissible in several diagrams: {0:?}")]
    Ambiguous(Vec<usize>),
    #[error("word is admissible in no diagram")]
    NoDiagram,
    #[error("letter {0:?} is outside the alphabet")]
    LetterOutside(char),
    #[error("arrow {0} does not continue the path")]
    NotComposable(usize),
}

/// Aligned comparison: `core` occurs in `window`; returns the offset.
pub fn aligned(core: &Word, window: &Word) -> Option<usize> {
    core.find_in(window)
}
