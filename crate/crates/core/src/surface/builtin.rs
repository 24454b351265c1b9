use super::{CutAndPaste, Piece, Polygon, SurfacePresentation};
use crate::exact::{fe, Vec2};

fn v(x: &str, y: &str) -> Vec2 {
    Vec2::new(fe(x), fe(y))
}

fn labels(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn hexagon_vertices() -> Vec<Vec2> {
    vec![
        v("1", "0"),
        v("1/2", "1/2r3"),
        v("-1/2", "1/2r3"),
        v("-1", "0"),
        v("-1/2", "-1/2r3"),
        v("1/2", "-1/2r3"),
    ]
}

/// Regular hexagon with unit sides centered at the origin. The horizontal
/// pair is `A`; going clockwise from it come `B` and `C`.
pub fn hexagon() -> SurfacePresentation {
    SurfacePresentation::new("hexagon", vec![Polygon::new(hexagon_vertices())], vec![labels("BACBAC")])
        .expect("hexagon is valid")
}

/// Unit square: `A` horizontal sides, `B` vertical sides.
pub fn square() -> SurfacePresentation {
    let p = Polygon::new(vec![Vec2::ints(0, 0), Vec2::ints(1, 0), Vec2::ints(1, 1), Vec2::ints(0, 1)]);
    SurfacePresentation::new("square", vec![p], vec![labels("ABAB")]).expect("square is valid")
}

/// Hexagon cut into four triangles by the auxiliary diagonals: `d` at
/// angle π/6 from the bottom-left vertex, the horizontal `e`, and `f` at
/// angle π/6 from the left vertex.
pub fn augmented_hexagon() -> SurfacePresentation {
    let h = hexagon_vertices();
    let tri = |i: usize, j: usize, k: usize| Polygon::new(vec![h[i].clone(), h[j].clone(), h[k].clone()]);
    SurfacePresentation::new(
        "hexagon+def",
        vec![tri(4, 5, 0), tri(4, 0, 3), tri(3, 0, 1), tri(3, 1, 2)],
        vec![labels("ACd"), labels("deB"), labels("eBf"), labels("fAC")],
    )
    .expect("augmented hexagon is valid")
}

/// The unit square turned by π/4.
pub fn diamond() -> SurfacePresentation {
    let p = Polygon::new(vec![
        v("0", "-1/2r2"),
        v("1/2r2", "0"),
        v("0", "1/2r2"),
        v("-1/2r2", "0"),
    ]);
    SurfacePresentation::new("diamond", vec![p], vec![labels("ABAB")]).expect("diamond is valid")
}

/// Parallelogram cut and pasted from the hexagon: the side in direction
/// π/6 is `A′`, the vertical side is `B′`.
pub fn parallelogram() -> SurfacePresentation {
    let p = Polygon::new(vec![
        v("-1/2", "-1/2r3"),
        v("1", "0"),
        v("1", "r3"),
        v("-1/2", "1/2r3"),
    ]);
    SurfacePresentation::new("parallelogram", vec![p], vec![labels("abab")])
        .expect("parallelogram is valid")
}

/// Hexagon to parallelogram: keep the quadrilateral right of the long
/// diagonal, move the left triangle right and the bottom triangle up.
pub fn hex_to_parallelogram_map() -> CutAndPaste {
    let h = hexagon_vertices();
    let tri = |a: usize, b: usize, c: usize| Polygon::new(vec![h[a].clone(), h[b].clone(), h[c].clone()]);
    let pieces = vec![
        Piece {
            source_poly: 0,
            region: Polygon::new(vec![h[4].clone(), h[0].clone(), h[1].clone(), h[2].clone()]),
            translation: Vec2::zero(),
            target_poly: 0,
        },
        Piece { source_poly: 0, region: tri(2, 3, 4), translation: v("3/2", "1/2r3"), target_poly: 0 },
        Piece { source_poly: 0, region: tri(4, 5, 0), translation: v("0", "r3"), target_poly: 0 },
    ];
    CutAndPaste::new(hexagon(), parallelogram(), pieces).expect("hexagon to parallelogram map tiles")
}
