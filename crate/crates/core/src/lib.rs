//! Fox colorings of link diagrams: exact integer linear algebra, palette
//! minima, and checks of minimum-color predictions.

pub mod coloring;
pub mod diagram;
pub mod intlinalg;
pub mod json;
pub mod theory;

pub use coloring::{Coloring, ColoringError, MinPaletteMode, Palette, PaletteMinimum};
pub use diagram::{Crossing, Diagram, DiagramError, LinkTableEntry};
pub use intlinalg::{link_determinant, smith_normal_form, IntMatrix, LinalgError, SnfResult};
pub use theory::{Prediction, TheoryError, Verdict};
