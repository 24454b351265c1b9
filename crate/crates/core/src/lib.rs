pub mod bouwmoller;
pub mod coding;
pub mod exact;
pub mod farey;
pub mod sampling;
pub mod surface;
pub mod teich;
pub mod torus;
pub mod verify;
