use serde::{Deserialize, Serialize};

use super::{admissible_diagrams, derive_sandwich, CodingError, Derived, Permutation, TransitionDiagram, Word};
use crate::exact::{fe, Mat2};

/// Matrices sending each sector back to the first one, with the label
/// permutations they induce.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetryData {
    pub matrices: Vec<Mat2>,
    pub perms: Vec<Permutation>,
}

/// Diagrams and symmetries of one surface's coding.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodingScheme {
    pub name: String,
    pub alphabet: String,
    pub diagrams: Vec<TransitionDiagram>,
    pub symmetry: SymmetryData,
}

impl CodingScheme {
    pub fn admissible(&self, w: &Word) -> Vec<usize> {
        admissible_diagrams(w, &self.diagrams)
    }

    /// `(π_k · w, k)` for the unique diagram `k` admitting `w`.
    pub fn normal_form(&self, w: &Word) -> Result<(Word, usize), CodingError> {
        match self.admissible(w).as_slice() {
            [] => Err(CodingError::NoDiagram),
            [k] => Ok((self.symmetry.perms[*k].apply_word(w)?, *k)),
            many => Err(CodingError::Ambiguous(many.to_vec())),
        }
    }

    /// One renormalization round: normal form, then sandwich derivation.
    pub fn normalize_and_derive(&self, w: &Word) -> Result<(usize, Word, Derived), CodingError> {
        let (n, k) = self.normal_form(w)?;
        let d = derive_sandwich(&n)?;
        Ok((k, n, d))
    }
}

fn hex_diagram(i: usize, nodes: [char; 3]) -> TransitionDiagram {
    TransitionDiagram::hex_shape(&format!("D{i}"), nodes, [""; 5])
}

/// Node orders `x y z` of the six hexagon diagrams (`x ⇄ y ⇄ z ↺`).
pub const HEX_DIAGRAM_NODES: [[char; 3]; 6] = [
    ['A', 'C', 'B'],
    ['C', 'A', 'B'],
    ['C', 'B', 'A'],
    ['B', 'C', 'A'],
    ['B', 'A', 'C'],
    ['A', 'B', 'C'],
];

pub fn hexagon_symmetry() -> SymmetryData {
    let m = |a: &str, b: &str, c: &str, d: &str| Mat2::new(fe(a), fe(b), fe(c), fe(d));
    let matrices = vec![
        Mat2::identity(),
        m("1/2", "1/2r3", "1/2r3", "-1/2"),
        m("1/2", "1/2r3", "-1/2r3", "1/2"),
        m("-1/2", "1/2r3", "1/2r3", "1/2"),
        m("-1/2", "1/2r3", "-1/2r3", "-1/2"),
        m("-1", "0", "0", "1"),
    ];
    let perms = ["", "(AC)", "(ABC)", "(BA)", "(ACB)", "(BC)"]
        .iter()
        .map(|c| Permutation::from_cycles("ABC", c))
        .collect();
    SymmetryData { matrices, perms }
}

pub fn hexagon_scheme() -> CodingScheme {
    CodingScheme {
        name: "hexagon".into(),
        alphabet: "ABC".into(),
        diagrams: (0..6).map(|i| hex_diagram(i, HEX_DIAGRAM_NODES[i])).collect(),
        symmetry: hexagon_symmetry(),
    }
}

/// The hexagon Veech element `γ = σ ∘ r₂`.
pub fn hexagon_gamma() -> Mat2 {
    Mat2::new(fe("-1"), fe("2r3"), fe("0"), fe("1"))
}

/// Square torus with `A` horizontal and `B` vertical: sector `[0, π/4]`
/// and its mirror `[π/4, π/2]` across the diagonal.
pub fn square_scheme() -> CodingScheme {
    let d0 = TransitionDiagram::new("D0", "AB", &[('A', 'B', ""), ('B', 'A', ""), ('B', 'B', "")]);
    let d1 = TransitionDiagram::new("D1", "AB", &[('A', 'B', ""), ('B', 'A', ""), ('A', 'A', "")]);
    CodingScheme {
        name: "square".into(),
        alphabet: "AB".into(),
        diagrams: vec![d0, d1],
        symmetry: SymmetryData {
            matrices: vec![Mat2::identity(), Mat2::ints(0, 1, 1, 0)],
            perms: vec![Permutation::identity("AB"), Permutation::from_cycles("AB", "(AB)")],
        },
    }
}

/// Arrow labels `[w₁, w̄₁, w₂, w̄₂, w₃]` used to generate a word admissible
/// in the first diagram from one admissible in diagram `j`. Arrows with no
/// printed label interpolate nothing.
pub const GENERATION_LABELS: [[&str; 5]; 6] = [
    ["", "", "", "", ""],
    ["", "", "CB", "BC", ""],
    ["B", "B", "BC", "CB", "CBBC"],
    ["B", "B", "BBC", "CBB", "CBBC"],
    ["C", "C", "CBB", "BBC", "BB"],
    ["C", "C", "", "", "BB"],
];

pub fn generation_diagram(j: usize) -> TransitionDiagram {
    TransitionDiagram::hex_shape(&format!("G{j}"), HEX_DIAGRAM_NODES[j], GENERATION_LABELS[j])
}

/// `𝔤ⱼⁱ w = πᵢ⁻¹ · 𝔤ⱼ⁰ w` for `w` admissible in diagram `j ∈ 1..=5`.
pub fn generate(w: &Word, from_diagram: usize, to_sector: usize) -> Result<Word, CodingError> {
    if !(1..=5).contains(&from_diagram) || to_sector > 5 {
        return Err(CodingError::NoDiagram);
    }
    let g = generation_diagram(from_diagram).interpolate(w)?;
    hexagon_symmetry().perms[to_sector].inverse().apply_word(&g)
}

/// First diagram augmented with crossings of the three auxiliary
/// diagonals `d`, `e`, `f` in directions 0 and π/6, numbered from the bottom.
pub fn augmented_d0() -> TransitionDiagram {
    TransitionDiagram::hex_shape("D0~", HEX_DIAGRAM_NODES[0], ["", "", "f", "d", "e"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{sector_of, Direction, SectorScheme, Vec2};

    #[test]
    fn admissibility_examples() {
        let s = hexagon_scheme();
        assert_eq!(s.admissible(&Word::from("BBBB")), vec![0, 1]);
        assert_eq!(s.admissible(&Word::from("ACBCA")), vec![0, 3]);
        assert_eq!(s.admissible(&Word::from("ACBBCA")), vec![0]);
        assert_eq!(s.admissible(&Word::from("A")), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn diagrams_are_relabelings_of_the_first() {
        let s = hexagon_scheme();
        for i in 0..6 {
            let moved = s.diagrams[i].relabel("x", &s.symmetry.perms[i]);
            for e in &s.diagrams[0].edges {
                assert!(moved.has_edge(e.from, e.to), "D{i}");
            }
        }
    }

    #[test]
    fn normal_forms() {
        let s = hexagon_scheme();
        let w = Word::from("ACBBCA");
        assert_eq!(s.normal_form(&w).unwrap(), (w.clone(), 0));
        assert_eq!(s.normal_form(&Word::from("BCBCBC")), Err(CodingError::Ambiguous(vec![0, 2, 3, 5])));
        // only in D5 = A ⇄ B ⇄ C ↺
        let w5 = Word::from("ABCCB");
        assert_eq!(s.normal_form(&w5).unwrap(), (Word::from("ACBBC"), 5));
    }

    #[test]
    fn symmetries_send_sectors_to_the_first() {
        let sym = hexagon_symmetry();
        for (i, m) in sym.matrices.iter().enumerate() {
            assert_eq!(m.det().abs(), fe("1"));
            // sample directions strictly inside sector i
            for k in 1..6 {
                let frac = crate::exact::FieldElement::ratio(k, 6);
                let b = crate::exact::hexagon_boundaries();
                let v = &b[i].scale(&(fe("1") - frac.clone())) + &b[i + 1].scale(&frac);
                let d = Direction::new(v).unwrap();
                assert_eq!(sector_of(&d, SectorScheme::Hexagon).unique(), Some(i));
                let img = d.transform(m).unwrap();
                assert_eq!(sector_of(&img, SectorScheme::Hexagon).unique(), Some(0), "nu_{i}");
            }
        }
        let g = hexagon_gamma();
        assert!((&g * &g).is_identity());
        assert_eq!(g.apply(&Vec2::ints(1, 0)), Vec2::ints(-1, 0));
    }

    #[test]
    fn generation_examples() {
        assert_eq!(generate(&Word::from("CC"), 5, 0).unwrap(), Word::from("CBBC"));
        assert_eq!(generate(&Word::from("BA"), 1, 0).unwrap(), Word::from("BBCA"));
        assert!(generate(&Word::from("AC"), 5, 0).is_err());
        for j in 1..=5 {
            let g = generation_diagram(j);
            for e in &g.edges {
                let w = Word::new(vec![e.from, e.to]);
                let big = generate(&w, j, 0).unwrap();
                assert!(hexagon_scheme().diagrams[0].admits(&big), "G{j} {w:?}");
                // the reverse arrow carries the reversed label
                let back = g.edge(e.to, e.from).unwrap();
                assert_eq!(back.label.chars().rev().collect::<String>(), e.label);
            }
        }
    }
}
