use serde::{Deserialize, Serialize};

use super::{CodingError, Permutation, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: char,
    pub to: char,
    /// Letters interpolated when the transition is read; often empty.
    pub label: String,
}

/// Directed graph of permitted transitions between consecutive letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionDiagram {
    pub name: String,
    pub nodes: Vec<char>,
    pub edges: Vec<Edge>,
}

impl TransitionDiagram {
    /// `edges` lists `(from, to, label)`.
    pub fn new(name: impl Into<String>, nodes: &str, edges: &[(char, char, &str)]) -> Self {
        TransitionDiagram {
            name: name.into(),
            nodes: nodes.chars().collect(),
            edges: edges
                .iter()
                .map(|&(from, to, l)| Edge { from, to, label: l.to_string() })
                .collect(),
        }
    }

    /// The common hexagon shape on nodes `x y z`: `x ⇄ y ⇄ z` and a loop at
    /// `z`. Labels follow the arrow order `w₁, w̄₁, w₂, w̄₂, w₃`.
    pub fn hex_shape(name: &str, nodes: [char; 3], labels: [&str; 5]) -> Self {
        let [x, y, z] = nodes;
        let edges = [(x, y, labels[0]), (y, x, labels[1]), (y, z, labels[2]), (z, y, labels[3]), (z, z, labels[4])];
        Self::new(name, &nodes.iter().collect::<String>(), &edges)
    }

    pub fn edge(&self, a: char, b: char) -> Option<&Edge> {
        self.edges.iter().find(|e| e.from == a && e.to == b)
    }

    pub fn has_edge(&self, a: char, b: char) -> bool {
        self.edge(a, b).is_some()
    }

    /// Every letter is a node and every consecutive pair is an edge.
    pub fn admits(&self, w: &Word) -> bool {
        w.letters.iter().all(|c| self.nodes.contains(c))
            && w.letters.windows(2).all(|p| self.has_edge(p[0], p[1]))
    }

    /// Index of the first consecutive pair that is not an edge.
    pub fn first_violation(&self, w: &Word) -> Option<usize> {
        if let Some(i) = w.letters.iter().position(|c| !self.nodes.contains(c)) {
            return Some(i);
        }
        w.letters.windows(2).position(|p| !self.has_edge(p[0], p[1]))
    }

    /// Reads `w` along the diagram, inserting each arrow's label between
    /// its two letters.
    pub fn interpolate(&self, w: &Word) -> Result<Word, CodingError> {
        let mut out = Vec::with_capacity(w.len() * 2);
        for (i, &c) in w.letters.iter().enumerate() {
            if i > 0 {
                let e = self
                    .edge(w.letters[i - 1], c)
                    .ok_or_else(|| CodingError::NotAdmissible(self.name.clone(), i - 1))?;
                out.extend(e.label.chars());
            }
            if !self.nodes.contains(&c) {
                return Err(CodingError::NotAdmissible(self.name.clone(), i));
            }
            out.push(c);
        }
        Ok(Word::new(out))
    }

    /// Image under a relabeling of the letters; labels are relabeled too.
    pub fn relabel(&self, name: impl Into<String>, p: &Permutation) -> Self {
        let f = |c: char| p.apply(c).unwrap_or(c);
        TransitionDiagram {
            name: name.into(),
            nodes: self.nodes.iter().map(|&c| f(c)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge { from: f(e.from), to: f(e.to), label: e.label.chars().map(f).collect() })
                .collect(),
        }
    }

    /// Same graph with every arrow label erased.
    pub fn unlabeled(&self) -> Self {
        let mut d = self.clone();
        for e in &mut d.edges {
            e.label.clear();
        }
        d
    }
}

/// Indices of the diagrams in which `w` is admissible.
pub fn admissible_diagrams(w: &Word, family: &[TransitionDiagram]) -> Vec<usize> {
    family.iter().enumerate().filter(|(_, d)| d.admits(w)).map(|(i, _)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_interpolation() {
        let d = TransitionDiagram::hex_shape("t", ['A', 'B', 'C'], ["C", "C", "", "", "BB"]);
        assert!(d.admits(&Word::from("ABCCB")));
        assert!(!d.admits(&Word::from("AC")));
        assert_eq!(d.first_violation(&Word::from("ABAC")), Some(2));
        assert_eq!(d.interpolate(&Word::from("ABCC")).unwrap(), Word::from("ACBCBBC"));
        assert!(d.interpolate(&Word::from("AA")).is_err());
    }
}
