//! Negacyclic BCH codes over odd prime-power fields: construction, coset
//! leader arithmetic, distance bounds and exact minimum distance.

pub mod algebra;
pub mod bounds;
pub mod codes;
pub mod cosets;
pub mod distance;
pub mod report;
pub mod verify;

pub use algebra::{Field, FieldElem, Poly};
pub use bounds::{Bound, BoundReport};
pub use codes::linear::LinearCode;
pub use codes::{
    build_code, from_defining_set, CodeError, Codeword, NegacyclicBchCode, Parameters,
};
pub use cosets::LengthKind;
pub use distance::{min_distance, DistanceOptions, DistanceResult, Strategy};
pub use report::CodeReport;
pub use verify::{Status, VerificationReport, VerifyOptions};
