pub mod additive;
pub mod cline;
pub mod error;
pub mod hirano;
pub mod matrices;
pub mod oracle;
pub mod report;
pub mod rings;
pub mod spectral;

pub use error::{Error, Result};
pub use matrices::{Polynomial, SquareMatrix};
pub use rings::{RingDescriptor, RingElement};
