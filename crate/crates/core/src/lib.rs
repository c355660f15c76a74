//! Knot diagrams as planar combinatorial maps, bracket/Jones invariants with
//! two independent engines, meander and potholder normal forms, weaver-tangle
//! algebra, and synthesis of knotholder diagrams (string-trick encodings) for
//! arbitrary input knots.

pub mod diagram;
pub mod error;
pub mod invariants;
pub mod knotholder;
pub mod laurent;
pub mod meander;
pub mod potholder;
pub mod render;
pub mod table;
pub mod trick;
pub mod weaver;

pub use diagram::{OrientedDiagram, PlanarDiagram, SliceForm};
pub use error::Error;
pub use laurent::LaurentPoly;

pub type Result<T> = std::result::Result<T, Error>;
