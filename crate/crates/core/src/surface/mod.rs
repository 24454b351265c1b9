//! Polygonal presentations of translation surfaces, the exact trajectory
//! tracer, cut-and-paste maps and cylinder decompositions.

mod builtin;
mod cut;
mod cylinder;
mod svg;
mod trace;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::{ExactError, FieldElement, LinearShape, Vec2};

pub use builtin::{augmented_hexagon, diamond, hex_to_parallelogram_map, hexagon, parallelogram, square};
pub use cut::{affine_image, convex_disjoint, lattice_basis, torus_reduce, CutAndPaste, Piece};
pub use cylinder::{cylinder_decomposition, Cylinder, CylinderDecomposition, Strip};
pub use svg::{render_svg, SvgOptions};
pub use trace::{flow, locate, trace, trace_crossings, trace_segments, Crossing, Trajectory};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("polygon {0} is not strictly convex and counterclockwise")]
    NotConvex(usize),
    #[error("label {label:?} appears {count} times, expected 2")]
    LabelCount { label: char, count: usize },
    #[error("sides labeled {0:?} are not parallel, equal and opposite")]
    BadPairing(char),
    #[error("trajectory hits a vertex at crossing {0}")]
    VertexHit(usize),
    #[error("point is not in the interior of any polygon")]
    NotInside,
    #[error("point lies on a polygon boundary")]
    OnBoundary,
    #[error("presentation is not a genus-one single polygon")]
    NotGenusOne,
    #[error("no cylinder decomposition found: {0}")]
    NoDecomposition(String),
    #[error("cut-and-paste invalid: {0}")]
    BadCut(String),
    #[error("step bound exceeded")]
    StepBound,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Side labels that are digits mark internal gluings: the tracer crosses
/// them without emitting a letter.
pub fn is_internal_label(c: char) -> bool {
    c.is_ascii_digit()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polygon {
    pub vertices: Vec<Vec2>,
}

impl Polygon {
    pub fn new(vertices: Vec<Vec2>) -> Self {
        Polygon { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, k: usize) -> &Vec2 {
        &self.vertices[k % self.len()]
    }

    /// Side `k` as the vector from vertex `k` to vertex `k+1`.
    pub fn edge(&self, k: usize) -> Vec2 {
        self.vertex(k + 1) - self.vertex(k)
    }

    /// Twice the signed area.
    pub fn area2(&self) -> FieldElement {
        let n = self.len();
        let mut s = FieldElement::zero();
        for k in 0..n {
            s = s + self.vertex(k).cross(self.vertex(k + 1));
        }
        s
    }

    pub fn area(&self) -> FieldElement {
        self.area2() * FieldElement::ratio(1, 2)
    }

    pub fn is_strictly_convex(&self) -> bool {
        let n = self.len();
        n >= 3 && (0..n).all(|k| self.edge(k).cross(&self.edge(k + 1)).sign() > 0)
    }

    /// -1 outside, 0 on the boundary, 1 strictly inside.
    pub fn side_of(&self, p: &Vec2) -> i32 {
        let mut on_edge = false;
        for k in 0..self.len() {
            let s = self.edge(k).cross(&(p - self.vertex(k))).sign();
            if s < 0 {
                return -1;
            }
            if s == 0 {
                on_edge = true;
            }
        }
        if on_edge {
            0
        } else {
            1
        }
    }

    pub fn contains_strict(&self, p: &Vec2) -> bool {
        self.side_of(p) == 1
    }

    pub fn contains_closed(&self, p: &Vec2) -> bool {
        self.side_of(p) >= 0
    }

    pub fn translate(&self, t: &Vec2) -> Polygon {
        Polygon::new(self.vertices.iter().map(|v| v + t).collect())
    }

    /// Image under a linear map, re-oriented counterclockwise.
    pub fn transform(&self, m: &crate::exact::Mat2) -> Polygon {
        let mut vs: Vec<Vec2> = self.vertices.iter().map(|v| m.apply(v)).collect();
        if m.det().sign() < 0 {
            vs.reverse();
            vs.rotate_right(1);
        }
        Polygon::new(vs)
    }

    /// Vertex average; an interior point of a convex polygon.
    pub fn centroid(&self) -> Vec2 {
        let n = self.len() as i64;
        let mut s = Vec2::zero();
        for v in &self.vertices {
            s = &s + v;
        }
        s.scale(&FieldElement::ratio(1, n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideRef {
    pub poly: usize,
    pub side: usize,
}

/// Where a side is glued: the partner side and the translation taking
/// points of this side onto it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub target: SideRef,
    pub translation: Vec2,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfacePresentation {
    pub name: String,
    pub polygons: Vec<Polygon>,
    /// `labels[p][k]` names side `k` of polygon `p`.
    pub labels: Vec<Vec<char>>,
    pub pairing: Vec<Vec<Pairing>>,
    pub area: FieldElement,
}

impl SurfacePresentation {
    /// Builds a presentation, gluing the two sides that share each label.
    pub fn new(
        name: impl Into<String>,
        polygons: Vec<Polygon>,
        labels: Vec<Vec<char>>,
    ) -> Result<Self, SurfaceError> {
        let mut by_label: BTreeMap<char, Vec<SideRef>> = BTreeMap::new();
        for (p, poly) in polygons.iter().enumerate() {
            if !poly.is_strictly_convex() || labels[p].len() != poly.len() {
                return Err(SurfaceError::NotConvex(p));
            }
            for (k, &c) in labels[p].iter().enumerate() {
                by_label.entry(c).or_default().push(SideRef { poly: p, side: k });
            }
        }
        let mut pairing: Vec<Vec<Option<Pairing>>> =
            polygons.iter().map(|p| vec![None; p.len()]).collect();
        for (&label, sides) in &by_label {
            if sides.len() != 2 {
                return Err(SurfaceError::LabelCount { label, count: sides.len() });
            }
            let (s1, s2) = (&sides[0], &sides[1]);
            let (p1, p2) = (&polygons[s1.poly], &polygons[s2.poly]);
            if p1.edge(s1.side) != -p2.edge(s2.side) {
                return Err(SurfaceError::BadPairing(label));
            }
            let t12 = p2.vertex(s2.side + 1) - p1.vertex(s1.side);
            let t21 = -&t12;
            pairing[s1.poly][s1.side] = Some(Pairing { target: s2.clone(), translation: t12 });
            pairing[s2.poly][s2.side] = Some(Pairing { target: s1.clone(), translation: t21 });
        }
        let pairing = pairing
            .into_iter()
            .map(|v| v.into_iter().map(|p| p.expect("every side labeled")).collect())
            .collect();
        let area = polygons.iter().fold(FieldElement::zero(), |a, p| a + p.area());
        Ok(SurfacePresentation { name: name.into(), polygons, labels, pairing, area })
    }

    pub fn label(&self, poly: usize, side: usize) -> char {
        self.labels[poly][side]
    }

    pub fn alphabet(&self) -> Vec<char> {
        let mut a: Vec<char> = self
            .labels
            .iter()
            .flatten()
            .copied()
            .filter(|c| !is_internal_label(*c))
            .collect();
        a.sort_unstable();
        a.dedup();
        a
    }

    pub fn side_count(&self) -> usize {
        self.polygons.iter().map(Polygon::len).sum()
    }

    /// Applies a linear map (shape only for scaled matrices) to every
    /// polygon, keeping labels.
    pub fn transform<M: LinearShape>(&self, m: &M) -> Result<Self, SurfaceError> {
        let m = m.shape();
        if m.det().is_zero() {
            return Err(ExactError::Singular.into());
        }
        let flip = m.det().sign() < 0;
        let polygons = self.polygons.iter().map(|p| p.transform(m)).collect();
        let labels = self
            .labels
            .iter()
            .map(|ls| {
                if flip {
                    let n = ls.len();
                    (0..n).map(|j| ls[(2 * n - 1 - j) % n]).collect()
                } else {
                    ls.clone()
                }
            })
            .collect();
        SurfacePresentation::new(self.name.clone(), polygons, labels)
    }

    /// Vertex equivalence classes as lists of `(polygon, vertex)` corners.
    pub fn vertex_classes(&self) -> Vec<Vec<(usize, usize)>> {
        let index: Vec<usize> = self
            .polygons
            .iter()
            .scan(0, |acc, p| {
                let start = *acc;
                *acc += p.len();
                Some(start)
            })
            .collect();
        let total = self.side_count();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let corner = |p: usize, k: usize| index[p] + k % self.polygons[p].len();
        for (p, sides) in self.pairing.iter().enumerate() {
            for (k, pr) in sides.iter().enumerate() {
                let (q, j) = (pr.target.poly, pr.target.side);
                for (a, b) in [(corner(p, k), corner(q, j + 1)), (corner(p, k + 1), corner(q, j))] {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (p, poly) in self.polygons.iter().enumerate() {
            for k in 0..poly.len() {
                let r = find(&mut parent, corner(p, k));
                classes.entry(r).or_default().push((p, k));
            }
        }
        classes.into_values().collect()
    }

    /// Interior angle at a corner, in radians (a float shadow).
    pub fn corner_angle(&self, p: usize, k: usize) -> f64 {
        let poly = &self.polygons[p];
        let out = poly.edge(k).to_f64();
        let back = (-&poly.edge(k + poly.len() - 1)).to_f64();
        let cross = out.0 * back.1 - out.1 * back.0;
        let dot = out.0 * back.0 + out.1 * back.1;
        cross.atan2(dot)
    }

    /// Cone angle of each vertex class as a multiple of 2π.
    pub fn cone_multiplicities(&self) -> Vec<(Vec<(usize, usize)>, u32)> {
        self.vertex_classes()
            .into_iter()
            .map(|cls| {
                let total: f64 = cls.iter().map(|&(p, k)| self.corner_angle(p, k)).sum();
                let m = (total / (2.0 * std::f64::consts::PI)).round() as u32;
                (cls, m)
            })
            .collect()
    }

    pub fn genus(&self) -> i64 {
        let v = self.vertex_classes().len() as i64;
        let e = (self.side_count() / 2) as i64;
        let f = self.polygons.len() as i64;
        (2 - (v - e + f)) / 2
    }

    /// Checks the pairing invariants; used by tests and validators.
    pub fn check_pairings(&self) -> Result<(), SurfaceError> {
        for (p, sides) in self.pairing.iter().enumerate() {
            for (k, pr) in sides.iter().enumerate() {
                let q = &self.polygons[pr.target.poly];
                let j = pr.target.side;
                let poly = &self.polygons[p];
                let ok = poly.edge(k) == -q.edge(j)
                    && &(poly.vertex(k) + &pr.translation) == q.vertex(j + 1)
                    && &(poly.vertex(k + 1) + &pr.translation) == q.vertex(j)
                    && self.labels[p][k] == self.labels[pr.target.poly][j];
                if !ok {
                    return Err(SurfaceError::BadPairing(self.labels[p][k]));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{fe, Mat2};

    #[test]
    fn builtins_satisfy_pairing_invariants() {
        for s in [hexagon(), square(), diamond(), parallelogram()] {
            s.check_pairings().unwrap();
            assert!(s.area.sign() > 0);
            assert_eq!(s.genus(), 1, "{}", s.name);
        }
        assert_eq!(hexagon().area, fe("3/2r3"));
        assert_eq!(parallelogram().area, fe("3/2r3"));
    }

    #[test]
    fn transform_preserves_labels_and_area() {
        let h = hexagon();
        let id = h.transform(&Mat2::identity()).unwrap();
        assert_eq!(id.polygons, h.polygons);
        assert_eq!(id.labels, h.labels);
        let refl = Mat2::ints(1, 0, 0, -1);
        let r = h.transform(&refl).unwrap();
        r.check_pairings().unwrap();
        assert_eq!(r.area, h.area);
        let shear = Mat2::new(1.into(), fe("2r3"), 0.into(), 1.into());
        let e2 = h.transform(&shear).unwrap();
        assert_eq!(e2.area, h.area);
        assert!(h.transform(&Mat2::ints(1, 1, 1, 1)).is_err());
    }

    #[test]
    fn hexagon_vertices_are_regular_points() {
        let h = hexagon();
        let cones = h.cone_multiplicities();
        assert_eq!(cones.len(), 2);
        assert!(cones.iter().all(|(_, m)| *m == 1));
    }
}
