//! Serialisable summary of a constructed code.

use serde::{Deserialize, Serialize};

use crate::algebra::CoeffJson;
use crate::bounds::{Bound, BoundError, BoundReport};
use crate::codes::NegacyclicBchCode;
use crate::cosets::LengthKind;
use crate::distance::{DistanceResult, LowerProvenance, Method, UpperProvenance};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceSummary {
    pub lower: Bound<LowerProvenance>,
    pub upper: Bound<UpperProvenance>,
    pub exact: bool,
    pub method: Method,
    /// Packed symbols of a minimum-weight codeword, when one was found.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<u8>>,
}

impl From<&DistanceResult> for DistanceSummary {
    fn from(r: &DistanceResult) -> Self {
        DistanceSummary {
            lower: r.lower,
            upper: r.upper,
            exact: r.exact,
            method: r.method,
            witness: r.witness.as_ref().map(|w| w.symbols()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSummary {
    pub bch: Option<u64>,
    pub pang: Option<u64>,
    pub singleton: Option<u64>,
    pub sphere_packing: Option<u64>,
    pub rouayheb: Option<u64>,
}

impl From<&BoundReport> for BoundsSummary {
    fn from(b: &BoundReport) -> Self {
        BoundsSummary {
            bch: b.bch,
            pang: b.pang,
            singleton: b.singleton,
            sphere_packing: b.sphere_packing,
            rouayheb: b.rouayheb,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeReport {
    pub schema: u32,
    pub q: u64,
    pub n: u64,
    /// Designed distance and offset; absent for codes given by their zeros.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub length_kind: Option<LengthKind>,
    /// Coefficients, constant term first.
    pub generator: Vec<CoeffJson>,
    pub dimension: u64,
    pub defining_set: Vec<u64>,
    pub coset_leaders: Vec<u64>,
    pub lcd: bool,
    pub bounds: BoundsSummary,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub distance: Option<DistanceSummary>,
}

impl CodeReport {
    pub fn new(
        code: &NegacyclicBchCode,
        distance: Option<&DistanceResult>,
    ) -> Result<Self, BoundError> {
        let bounds = BoundReport::for_code(code)?;
        let kind = code.length_kind();
        Ok(CodeReport {
            schema: REPORT_SCHEMA,
            q: code.q,
            n: code.n,
            delta: code.designed.map(|d| d.delta),
            b: code.designed.map(|d| d.b),
            m: kind.map(|k| k.0),
            length_kind: kind.map(|k| k.1),
            generator: code.generator.to_json(),
            dimension: code.dimension(),
            defining_set: code.defining_set.exponents.clone(),
            coset_leaders: code.defining_set.leaders.clone(),
            lcd: code.is_lcd(),
            bounds: (&bounds).into(),
            distance: distance.map(Into::into),
        })
    }
}
