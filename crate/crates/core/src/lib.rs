pub mod error;
pub mod gf;

pub use error::{Error, Result};
pub use gf::{ArithOp, Field, FieldElement, Gf};
pub mod poly;
pub use poly::{factor, factor_xn_minus_1, Factorization, Poly};
pub mod ring;
pub use ring::{IdempotentSystem, Ring, RingElement, RingPoly, RootOrder};
pub mod matrix;
pub mod linear_code;
pub use linear_code::{DistanceReport, LinearCode, Method, WeightDistribution, DEFAULT_BUDGET};
pub mod graymap;
pub use graymap::GrayMatrix;
pub mod ring_code;
pub use ring_code::RingLinearCode;
pub mod ring_cyclic;
pub use ring_cyclic::{LcdCertificate, LcdViolation, RingCyclicCode};
pub mod codespec;
pub use codespec::{Coeff, CodeSpec, RootOrderSpec};
pub mod lcd_search;
pub use lcd_search::{search, SearchOutcome, SearchResult, SearchSpec};
pub mod tables;
