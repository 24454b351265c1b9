//! Exact arithmetic in Q(√2, √3): field elements, 2×2 matrices, vectors,
//! directions and sector classification.

mod direction;
mod field;
mod matrix;

pub use direction::{
    angle_cmp, hexagon_boundaries, octant_boundaries, sector_of, Direction, SectorResult,
    SectorScheme,
};
pub use field::FieldElement;
pub use matrix::{LinearShape, Mat2, ScaledMatrix, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("scale factor must be positive")]
    NonPositiveScale,
    #[error("cannot parse field element from {0:?}")]
    Parse(String),
}

/// Shorthand for parsing a constant such as `"1/2r3"`; panics on bad input.
pub fn fe(s: &str) -> FieldElement {
    s.parse().unwrap_or_else(|_| panic!("bad field constant {s:?}"))
}

/// Parses `x,y` into a vector of field elements.
pub fn parse_vec2(s: &str) -> Result<Vec2, ExactError> {
    let (x, y) = s.split_once(',').ok_or_else(|| ExactError::Parse(s.to_string()))?;
    Ok(Vec2::new(x.parse()?, y.parse()?))
}
