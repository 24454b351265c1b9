//! The grid graph of M(3,4) and its check against the orthogonal
//! presentations: cylinders are vertices, their intersection rectangles are
//! edges, and the cyclic edge order at each vertex says which rectangles
//! are glued side by side.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::exact::{Direction, FieldElement, Vec2};
use crate::surface::{cylinder_decomposition, flow, Polygon, SurfaceError, SurfacePresentation};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridVertex {
    /// 1-based, rows counted downwards.
    pub row: usize,
    pub col: usize,
    /// White vertices are horizontal cylinders, black ones vertical.
    pub white: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridEdge {
    pub name: char,
    pub ends: (usize, usize),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridGraph {
    pub vertices: Vec<GridVertex>,
    pub edges: Vec<GridEdge>,
    /// Pieces of the column decomposition (polygons of the first presentation).
    pub vertical_pieces: Vec<Vec<char>>,
    /// Pieces of the row decomposition (polygons of the second presentation).
    pub horizontal_pieces: Vec<Vec<char>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PieceFamily {
    Vertical,
    Horizontal,
}

/// Three rows and two columns, white in the top-left corner.
pub fn bm_grid_graph() -> GridGraph {
    let mut vertices = Vec::new();
    for row in 1..=3 {
        for col in 1..=2 {
            vertices.push(GridVertex { row, col, white: (row + col) % 2 == 0 });
        }
    }
    let at = |r: usize, c: usize| (r - 1) * 2 + (c - 1);
    let edges = [
        ('a', (1, 1), (1, 2)),
        ('b', (2, 1), (2, 2)),
        ('c', (3, 1), (3, 2)),
        ('d', (1, 1), (2, 1)),
        ('f', (2, 1), (3, 1)),
        ('e', (1, 2), (2, 2)),
        ('g', (2, 2), (3, 2)),
    ]
    .iter()
    .map(|&(name, x, y)| GridEdge { name, ends: (at(x.0, x.1), at(y.0, y.1)) })
    .collect();
    let pieces = |s: &[&str]| s.iter().map(|p| p.chars().collect()).collect();
    GridGraph {
        vertices,
        edges,
        vertical_pieces: pieces(&["df", "adbefcg", "eg"]),
        horizontal_pieces: pieces(&["a", "adeb", "bfgc", "c"]),
    }
}

impl GridGraph {
    /// Edges at vertex `v`, clockwise from north on odd columns and
    /// counterclockwise from north on even ones.
    pub fn cyclic_order(&self, v: usize) -> Vec<char> {
        let me = &self.vertices[v];
        let mut around: Vec<(usize, char)> = self
            .edges
            .iter()
            .filter_map(|e| {
                let other = if e.ends.0 == v {
                    e.ends.1
                } else if e.ends.1 == v {
                    e.ends.0
                } else {
                    return None;
                };
                let o = &self.vertices[other];
                let compass = match (o.row as i64 - me.row as i64, o.col as i64 - me.col as i64) {
                    (-1, 0) => 0,
                    (0, 1) => 1,
                    (1, 0) => 2,
                    _ => 3,
                };
                Some((compass, e.name))
            })
            .collect();
        around.sort_unstable();
        let mut names: Vec<char> = around.into_iter().map(|x| x.1).collect();
        if me.col % 2 == 0 {
            names[1..].reverse();
        }
        names
    }

    /// Arrows `x → y`: around a white vertex the right side of `x` is glued
    /// to the left side of `y`; around a black vertex the top of `x` is
    /// glued to the bottom of `y`.
    pub fn gluings(&self) -> (BTreeSet<(char, char)>, BTreeSet<(char, char)>) {
        let mut right = BTreeSet::new();
        let mut top = BTreeSet::new();
        for (v, vx) in self.vertices.iter().enumerate() {
            let ord = self.cyclic_order(v);
            for i in 0..ord.len() {
                let pair = (ord[i], ord[(i + 1) % ord.len()]);
                if vx.white {
                    right.insert(pair);
                } else {
                    top.insert(pair);
                }
            }
        }
        (right, top)
    }

    /// Share of each rectangle inside each piece: a rectangle listed in two
    /// pieces is split in halves.
    pub fn piece_shares(&self, family: PieceFamily) -> Vec<BTreeMap<char, FieldElement>> {
        let pieces = match family {
            PieceFamily::Vertical => &self.vertical_pieces,
            PieceFamily::Horizontal => &self.horizontal_pieces,
        };
        let count = |c: char| pieces.iter().filter(|p| p.contains(&c)).count() as i64;
        pieces.iter().map(|p| p.iter().map(|&c| (c, FieldElement::ratio(1, count(c)))).collect()).collect()
    }
}

/// Intersection of one horizontal and one vertical cylinder, as convex
/// regions of the polygons.
#[derive(Clone, Debug)]
struct Rect {
    h: usize,
    v: usize,
    regions: Vec<(usize, Polygon)>,
}

/// Part of a convex polygon where `f ≥ 0`, for an affine `f`.
fn clip(poly: &[Vec2], f: &dyn Fn(&Vec2) -> FieldElement) -> Vec<Vec2> {
    let mut out: Vec<Vec2> = Vec::new();
    let n = poly.len();
    for k in 0..n {
        let (p, q) = (&poly[k], &poly[(k + 1) % n]);
        let (fp, fq) = (f(p), f(q));
        if fp.sign() >= 0 {
            out.push(p.clone());
        }
        if fp.sign() * fq.sign() < 0 {
            let t = fp.checked_div(&(&fp - &fq)).expect("sign change");
            out.push(p + &(q - p).scale(&t));
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn slab(poly: &Polygon, d: &Vec2, lo: &FieldElement, hi: &FieldElement, out: Vec<Vec2>) -> Vec<Vec2> {
    let start = if out.is_empty() { poly.vertices.clone() } else { out };
    let a = clip(&start, &|x: &Vec2| &d.cross(x) - lo);
    if a.len() < 3 {
        return a;
    }
    clip(&a, &|x: &Vec2| hi - &d.cross(x))
}

fn rectangles(s: &SurfacePresentation) -> Result<(usize, usize, Vec<Rect>), SurfaceError> {
    let (dh, dv) = (Direction::from_ints(1, 0)?, Direction::from_ints(0, 1)?);
    let hd = cylinder_decomposition(s, &dh)?;
    let vd = cylinder_decomposition(s, &dv)?;
    let mut rects = Vec::new();
    for (i, hc) in hd.cylinders.iter().enumerate() {
        for (j, vc) in vd.cylinders.iter().enumerate() {
            let mut regions = Vec::new();
            for &a in &hc.strips {
                for &b in &vc.strips {
                    let (sa, sb) = (&hd.strips[a], &vd.strips[b]);
                    if sa.poly != sb.poly {
                        continue;
                    }
                    let poly = &s.polygons[sa.poly];
                    let r = slab(poly, dh.vector(), &sa.lo, &sa.hi, Vec::new());
                    let r = if r.len() < 3 { r } else { slab(poly, dv.vector(), &sb.lo, &sb.hi, r) };
                    let r = Polygon::new(r);
                    if r.len() >= 3 && r.area().sign() > 0 {
                        regions.push((sa.poly, r));
                    }
                }
            }
            if !regions.is_empty() {
                rects.push(Rect { h: i, v: j, regions });
            }
        }
    }
    Ok((hd.cylinders.len(), vd.cylinders.len(), rects))
}

fn owner(rects: &[Rect], poly: usize, p: &Vec2) -> Option<usize> {
    rects.iter().position(|r| r.regions.iter().any(|(q, reg)| *q == poly && reg.contains_strict(p)))
}

/// Rectangles met just across each side of each region of `r` whose
/// outward direction is `out`.
fn across(s: &SurfacePresentation, rects: &[Rect], r: usize, out: &Vec2) -> Result<BTreeSet<usize>, SurfaceError> {
    let mut found = BTreeSet::new();
    for (poly, reg) in &rects[r].regions {
        for k in 0..reg.len() {
            let e = reg.edge(k);
            // the side faces `out` when `out` points to its right
            if !(e.cross(out).sign() < 0 && e.dot(out).is_zero()) {
                continue;
            }
            let m = reg.vertex(k).midpoint(reg.vertex(k + 1));
            let mut delta = FieldElement::ratio(1, 64);
            let hit = loop {
                let start = &m - &out.scale(&delta);
                if reg.contains_strict(&start) {
                    if let Ok((q, end)) = flow(s, *poly, &start, &out.scale(&(&delta + &delta))) {
                        if let Some(o) = owner(rects, q, &end) {
                            break o;
                        }
                    }
                }
                delta = &delta * &FieldElement::ratio(1, 2);
                if delta < FieldElement::ratio(1, 1 << 20) {
                    return Err(SurfaceError::NoDecomposition(format!("no rectangle across side {k} of a region")));
                }
            };
            if hit != r {
                found.insert(hit);
            }
        }
    }
    Ok(found)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridValidation {
    pub presentation: String,
    pub rectangles: usize,
    /// Assignments of cylinders to graph vertices with no differences.
    pub consistent_labelings: usize,
    /// Differences for the best assignment, each naming an edge.
    pub diffs: Vec<String>,
    /// Geometric right-of and top-of relations under the best assignment.
    pub right: Vec<(char, char)>,
    pub top: Vec<(char, char)>,
}

impl GridValidation {
    pub fn passed(&self) -> bool {
        self.consistent_labelings > 0 && self.diffs.is_empty()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Recovers the rectangles of `s` from its horizontal and vertical cylinder
/// decompositions and compares them with the graph: which cylinders meet,
/// which rectangles are glued side by side and top to bottom, and which
/// share of each rectangle every polygon holds.
pub fn validate_grid_graph(
    g: &GridGraph,
    s: &SurfacePresentation,
    family: PieceFamily,
) -> Result<GridValidation, SurfaceError> {
    let (nh, nv, rects) = rectangles(s)?;
    let mut geo_right = BTreeSet::new();
    let mut geo_top = BTreeSet::new();
    for r in 0..rects.len() {
        for o in across(s, &rects, r, &Vec2::ints(1, 0))? {
            geo_right.insert((r, o));
        }
        for o in across(s, &rects, r, &Vec2::ints(0, 1))? {
            geo_top.insert((r, o));
        }
    }
    let total: Vec<FieldElement> = rects
        .iter()
        .map(|r| r.regions.iter().fold(FieldElement::zero(), |a, (_, p)| a + p.area()))
        .collect();
    let mut shares: Vec<BTreeMap<usize, FieldElement>> = vec![BTreeMap::new(); s.polygons.len()];
    for (i, r) in rects.iter().enumerate() {
        for (p, reg) in &r.regions {
            let e = shares[*p].entry(i).or_insert_with(FieldElement::zero);
            *e = &*e + &reg.area().checked_div(&total[i]).expect("positive area");
        }
    }

    let whites: Vec<usize> = (0..g.vertices.len()).filter(|&v| g.vertices[v].white).collect();
    let blacks: Vec<usize> = (0..g.vertices.len()).filter(|&v| !g.vertices[v].white).collect();
    let (g_right, g_top) = g.gluings();
    let expected_shares = g.piece_shares(family);

    let mut best: Option<(Vec<String>, Vec<(char, char)>, Vec<(char, char)>)> = None;
    let mut consistent = 0;
    let mut size_diffs = Vec::new();
    if whites.len() != nh {
        size_diffs.push(format!("{} horizontal cylinders for {} white vertices", nh, whites.len()));
    }
    if blacks.len() != nv {
        size_diffs.push(format!("{} vertical cylinders for {} black vertices", nv, blacks.len()));
    }
    if size_diffs.is_empty() {
        for pw in permutations(nh) {
            for pb in permutations(nv) {
                let mut diffs = Vec::new();
                // cylinder i is white vertex whites[pw[i]]
                let mut name: BTreeMap<usize, char> = BTreeMap::new();
                for (k, r) in rects.iter().enumerate() {
                    let (w, b) = (whites[pw[r.h]], blacks[pb[r.v]]);
                    match g.edges.iter().find(|e| e.ends == (w, b) || e.ends == (b, w)) {
                        Some(e) => {
                            name.insert(k, e.name);
                        }
                        None => diffs.push(format!("rectangle {k} has no edge")),
                    }
                }
                for e in &g.edges {
                    if !name.values().any(|&c| c == e.name) {
                        diffs.push(format!("edge {} has no rectangle", e.name));
                    }
                }
                let rename = |set: &BTreeSet<(usize, usize)>| -> BTreeSet<(char, char)> {
                    set.iter()
                        .filter_map(|(a, b)| Some((*name.get(a)?, *name.get(b)?)))
                        .collect()
                };
                let (r2, t2) = (rename(&geo_right), rename(&geo_top));
                for (x, y) in g_right.symmetric_difference(&r2) {
                    diffs.push(format!("edge {x}: right side against {y}"));
                }
                for (x, y) in g_top.symmetric_difference(&t2) {
                    diffs.push(format!("edge {x}: top against {y}"));
                }
                let mut got: Vec<BTreeMap<char, FieldElement>> = shares
                    .iter()
                    .map(|m| m.iter().filter_map(|(k, f)| Some((*name.get(k)?, f.clone()))).collect())
                    .collect();
                let mut want = expected_shares.clone();
                let key = |m: &BTreeMap<char, FieldElement>| format!("{m:?}");
                got.sort_by_key(key);
                want.sort_by_key(key);
                if got != want {
                    for m in got.iter().filter(|m| !want.contains(m)) {
                        let edges: String = m.keys().collect();
                        diffs.push(format!("polygon with edges {edges} matches no piece"));
                    }
                }
                if diffs.is_empty() {
                    consistent += 1;
                }
                let better = best.as_ref().map_or(true, |b| diffs.len() < b.0.len());
                if better {
                    best = Some((diffs, r2.into_iter().collect(), t2.into_iter().collect()));
                }
            }
        }
    }
    let (diffs, right, top) = best.unwrap_or((size_diffs, Vec::new(), Vec::new()));
    Ok(GridValidation {
        presentation: s.name.clone(),
        rectangles: rects.len(),
        consistent_labelings: consistent,
        diffs,
        right,
        top,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bouwmoller::{build_r1_perp, build_r2_perp};

    #[test]
    fn graph_shape() {
        let g = bm_grid_graph();
        assert_eq!(g.vertices.iter().filter(|v| v.white).count(), 3);
        assert_eq!(g.edges.len(), 7);
        let (right, top) = g.gluings();
        // b sits between e and g sideways and between d and f vertically
        assert!(right.iter().any(|&(x, y)| (x, y) == ('e', 'b') || (x, y) == ('b', 'e')));
        assert!(right.iter().any(|&(x, y)| (x, y) == ('g', 'b') || (x, y) == ('b', 'g')));
        assert!(top.iter().any(|&(x, y)| (x, y) == ('d', 'b') || (x, y) == ('b', 'd')));
        assert!(top.iter().any(|&(x, y)| (x, y) == ('f', 'b') || (x, y) == ('b', 'f')));
        // every edge in one vertical and one horizontal piece, counting halves
        for family in [PieceFamily::Vertical, PieceFamily::Horizontal] {
            let shares = g.piece_shares(family);
            for e in &g.edges {
                let sum = shares.iter().filter_map(|m| m.get(&e.name)).fold(FieldElement::zero(), |a, f| a + f.clone());
                assert_eq!(sum, FieldElement::one(), "{}", e.name);
            }
        }
        assert_eq!(g.vertical_pieces.len(), 3);
        assert_eq!(g.horizontal_pieces.len(), 4);
    }

    #[test]
    fn both_orthogonal_presentations_match_the_graph() {
        let g = bm_grid_graph();
        let r1 = validate_grid_graph(&g, &build_r1_perp(), PieceFamily::Vertical).unwrap();
        assert!(r1.passed(), "{r1:?}");
        let r2 = validate_grid_graph(&g, &build_r2_perp(), PieceFamily::Horizontal).unwrap();
        assert!(r2.passed(), "{r2:?}");
        assert_eq!(r1.rectangles, 7);
        assert_eq!(r1.right, r2.right);
    }

    #[test]
    fn wrong_graphs_are_caught() {
        let mut g = bm_grid_graph();
        g.edges.retain(|e| e.name != 'c');
        let r = validate_grid_graph(&g, &build_r1_perp(), PieceFamily::Vertical).unwrap();
        assert!(!r.passed());
        assert!(r.diffs.iter().any(|d| d.contains("no edge")), "{:?}", r.diffs);
        let mut h = bm_grid_graph();
        h.horizontal_pieces[1] = "adb".chars().collect();
        assert!(!validate_grid_graph(&h, &build_r2_perp(), PieceFamily::Horizontal).unwrap().passed());
    }
}
