//! Minimum distance of linear codes: exhaustive enumeration over scalar
//! classes, support search on the parity-check matrix, and the
//! Brouwer-Zimmermann algorithm, with a dispatcher that picks between them.
//!
//! Every engine is deterministic for a fixed seed, independent of the
//! number of worker threads.

mod bz;
mod exhaustive;
mod support;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::checked_pow;
use crate::bounds::{Bound, BoundError, BoundReport, LowerSource, UpperSource};
use crate::codes::linear::{LinearCode, SymbolTables};
use crate::codes::{CodeError, Codeword, NegacyclicBchCode};

pub use bz::min_distance_bz;
pub use exhaustive::{min_distance_exhaustive, weight_distribution};
pub use support::min_weight_support_search;

pub const DEFAULT_EXHAUSTIVE_BUDGET: u64 = 1 << 24;
pub const DEFAULT_SUPPORT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_BZ_BUDGET: u64 = 1 << 25;

#[derive(Debug, Error)]
pub enum DistanceError {
    #[error("exhaustive enumeration needs {q}^{k} messages, over the budget of {budget}")]
    BudgetExceeded { q: u64, k: usize, budget: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

/// Where a lower bound on the distance came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerProvenance {
    Exhaustive,
    SupportSearch,
    BrouwerZimmermann,
    Bch,
    Pang,
    Trivial,
    ZeroCode,
}

impl From<LowerSource> for LowerProvenance {
    fn from(s: LowerSource) -> Self {
        match s {
            LowerSource::Bch => LowerProvenance::Bch,
            LowerSource::Pang => LowerProvenance::Pang,
            LowerSource::Theorem | LowerSource::Trivial => LowerProvenance::Trivial,
        }
    }
}

/// Where an upper bound on the distance came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperProvenance {
    /// A codeword of this weight was found.
    Witness,
    Singleton,
    SpherePacking,
    Rouayheb,
    ZeroCode,
}

impl From<UpperSource> for UpperProvenance {
    fn from(s: UpperSource) -> Self {
        match s {
            UpperSource::SpherePacking => UpperProvenance::SpherePacking,
            UpperSource::Rouayheb => UpperProvenance::Rouayheb,
            UpperSource::Singleton => UpperProvenance::Singleton,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    SupportSearch,
    BrouwerZimmermann,
    BoundsOnly,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::SupportSearch => "support_search",
            Method::BrouwerZimmermann => "brouwer_zimmermann",
            Method::BoundsOnly => "bounds_only",
        })
    }
}

/// Deterministic work counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Work {
    /// Messages (scalar classes) encoded.
    pub messages: u64,
    /// Supports scanned by the support search.
    pub supports: u64,
    /// Information sets used by Brouwer-Zimmermann.
    pub information_sets: u64,
}

impl Work {
    fn absorb(&mut self, other: Work) {
        self.messages += other.messages;
        self.supports += other.supports;
        self.information_sets += other.information_sets;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub lower: Bound<LowerProvenance>,
    pub upper: Bound<UpperProvenance>,
    pub exact: bool,
    pub method: Method,
    /// Minimum-weight codeword, leading nonzero entry scaled to 1.
    pub witness: Option<Codeword>,
    pub work: Work,
}

impl DistanceResult {
    /// Starting bracket `[lower, n - k + 1]` for a nonzero code.
    pub(crate) fn bracket(code: &LinearCode, lower: Bound<LowerProvenance>) -> Self {
        let (n, k) = (code.n() as u64, code.k() as u64);
        let mut r = DistanceResult {
            q: code.q(),
            n,
            k,
            lower,
            upper: Bound {
                value: n - k + 1,
                source: UpperProvenance::Singleton,
            },
            exact: false,
            method: Method::BoundsOnly,
            witness: None,
            work: Work::default(),
        };
        r.settle();
        r
    }

    fn zero_code(code: &LinearCode) -> Self {
        let n = code.n() as u64;
        DistanceResult {
            q: code.q(),
            n,
            k: 0,
            lower: Bound {
                value: n + 1,
                source: LowerProvenance::ZeroCode,
            },
            upper: Bound {
                value: n + 1,
                source: UpperProvenance::ZeroCode,
            },
            exact: true,
            method: Method::Exhaustive,
            witness: None,
            work: Work::default(),
        }
    }

    /// The distance, when known exactly.
    pub fn distance(&self) -> Option<u64> {
        self.exact.then_some(self.lower.value)
    }

    pub(crate) fn raise_lower(&mut self, value: u64, source: LowerProvenance) {
        if value > self.lower.value {
            self.lower = Bound { value, source };
        }
        self.settle();
    }

    pub(crate) fn offer_upper(&mut self, value: u64, source: UpperProvenance) {
        if value < self.upper.value {
            self.upper = Bound { value, source };
            if source != UpperProvenance::Witness {
                self.witness = None;
            }
        }
        self.settle();
    }

    pub(crate) fn offer_witness(&mut self, word: Vec<u8>, t: &SymbolTables) {
        let word = normalize(word, t);
        let w = word.iter().filter(|&&c| c != 0).count() as u64;
        let better = w < self.upper.value || (w == self.upper.value && self.witness.is_none());
        if w > 0 && better {
            self.upper = Bound {
                value: w,
                source: UpperProvenance::Witness,
            };
            self.witness = Some(Codeword::from_symbols(&word));
        }
        self.settle();
    }

    fn settle(&mut self) {
        if self.upper.value < self.lower.value {
            // a found codeword beats any bound
            debug_assert!(
                false,
                "lower bound {:?} above upper {:?}",
                self.lower, self.upper
            );
            self.lower = Bound {
                value: self.upper.value,
                source: LowerProvenance::Trivial,
            };
        }
        self.exact = self.lower.value == self.upper.value;
    }

    /// Combine the findings of another engine run on the same code.
    pub(crate) fn merge(&mut self, other: DistanceResult) {
        self.work.absorb(other.work);
        if other.upper.source == UpperProvenance::Witness {
            if let Some(w) = &other.witness {
                let w = w.weight as u64;
                if w < self.upper.value || (w == self.upper.value && self.witness.is_none()) {
                    self.upper = other.upper;
                    self.witness = other.witness.clone();
                }
            }
        } else if other.upper.value < self.upper.value {
            self.offer_upper(other.upper.value, other.upper.source);
        }
        self.raise_lower(other.lower.value, other.lower.source);
    }
}

/// Scale so that the first nonzero entry is 1.
fn normalize(mut word: Vec<u8>, t: &SymbolTables) -> Vec<u8> {
    if let Some(&lead) = word.iter().find(|&&c| c != 0) {
        if lead != 1 {
            let inv = t.inv(lead);
            word.iter_mut().for_each(|c| *c = t.mul(*c, inv));
        }
    }
    word
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    #[default]
    Auto,
    Exhaustive,
    Support,
    Bz,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Exhaustive => "exhaustive",
            Strategy::Support => "support",
            Strategy::Bz => "bz",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "support" | "support_search" => Ok(Strategy::Support),
            "bz" | "brouwer_zimmermann" => Ok(Strategy::Bz),
            _ => Err(format!(
                "unknown strategy {s:?} (auto, exhaustive, support, bz)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceOptions {
    /// Largest `q^k` enumerated exhaustively.
    pub exhaustive_budget: u64,
    /// Supports scanned by the support search, over all weights.
    pub support_budget: u64,
    /// Messages encoded by Brouwer-Zimmermann.
    pub bz_budget: u64,
    /// Seed for the column permutations.
    pub seed: u64,
    pub strategy: Strategy,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            exhaustive_budget: DEFAULT_EXHAUSTIVE_BUDGET,
            support_budget: DEFAULT_SUPPORT_BUDGET,
            bz_budget: DEFAULT_BZ_BUDGET,
            seed: 0,
            strategy: Strategy::Auto,
        }
    }
}

/// Minimum distance of a negacyclic BCH code. The BCH bound (with
/// multiplier search) and, for lengths `(q^m+1)/2`, the Pang bound seed the
/// lower end; sphere-packing, Rouayheb and Singleton bounds seed the upper.
pub fn min_distance(
    code: &NegacyclicBchCode,
    opts: &DistanceOptions,
) -> Result<DistanceResult, DistanceError> {
    let lin = code.to_linear()?;
    let report = BoundReport::for_code(code)?;
    let hint = report.lower.map(|b| Bound {
        value: b.value,
        source: b.source.into(),
    });
    min_distance_linear(&lin, hint, opts)
}

/// Minimum distance of an arbitrary linear code, with an optional proven
/// lower bound.
pub fn min_distance_linear(
    code: &LinearCode,
    hint: Option<Bound<LowerProvenance>>,
    opts: &DistanceOptions,
) -> Result<DistanceResult, DistanceError> {
    if code.k() == 0 {
        return Ok(DistanceResult::zero_code(code));
    }
    let trivial = Bound {
        value: 1,
        source: LowerProvenance::Trivial,
    };
    let lower = match hint {
        Some(h) if h.value > 1 => h,
        _ => trivial,
    };
    let mut res = DistanceResult::bracket(code, lower);
    let (q, n, k) = (code.q(), code.n() as u64, code.k() as u64);
    if let Some(up) = BoundReport::for_parameters(q, n, k, None)?.upper {
        res.offer_upper(up.value, up.source.into());
    }
    let fits_exhaustive = checked_pow(q, k as u32).is_some_and(|qk| qk <= opts.exhaustive_budget);
    match opts.strategy {
        Strategy::Exhaustive => {
            let r = min_distance_exhaustive(code, opts.exhaustive_budget)?;
            res.merge(r);
            res.method = Method::Exhaustive;
        }
        Strategy::Support => run_support(code, &mut res, opts.support_budget),
        Strategy::Bz => run_bz(code, &mut res, opts),
        Strategy::Auto => {
            if fits_exhaustive {
                res.merge(min_distance_exhaustive(code, opts.exhaustive_budget)?);
                res.method = Method::Exhaustive;
            } else {
                let affordable = |res: &DistanceResult| {
                    crate::algebra::binomial(n, res.lower.value) <= opts.support_budget as u128
                };
                if affordable(&res) {
                    run_support(code, &mut res, opts.support_budget);
                }
                if !settled(&res) {
                    run_bz(code, &mut res, opts);
                }
            }
        }
    }
    Ok(res)
}

/// Bounds alone may close the bracket; the engines still run then, to
/// produce a witness.
fn settled(res: &DistanceResult) -> bool {
    res.exact && res.witness.is_some()
}

fn run_support(code: &LinearCode, res: &mut DistanceResult, budget: u64) {
    if settled(res) {
        return;
    }
    let w_max = res.upper.value as usize;
    let r = min_weight_support_search(code, res.lower, w_max, budget);
    res.merge(r);
    if res.exact {
        res.method = Method::SupportSearch;
    } else if res.method == Method::BoundsOnly && res.work.supports > 0 {
        res.method = Method::SupportSearch;
    }
}

fn run_bz(code: &LinearCode, res: &mut DistanceResult, opts: &DistanceOptions) {
    if settled(res) {
        return;
    }
    let r = min_distance_bz(code, res.lower, opts.bz_budget, opts.seed);
    res.merge(r);
    if res.exact || res.method == Method::BoundsOnly {
        res.method = Method::BrouwerZimmermann;
    }
}

/// Generator matrix in systematic form on a chosen information set.
#[derive(Clone, Debug)]
pub(crate) struct Systematic {
    pub n: usize,
    /// Information columns; message symbol `i` sits at `info[i]`.
    pub info: Vec<usize>,
    /// Remaining columns, ascending.
    pub red: Vec<usize>,
    /// `a[i]`: row `i` restricted to `red`.
    pub a: Vec<Vec<u8>>,
}

impl Systematic {
    /// Row-reduce `rows` choosing pivots by scanning columns in `order`.
    pub fn new(rows: &[Vec<u8>], n: usize, order: &[usize], t: &SymbolTables) -> Self {
        let mut rows = rows.to_vec();
        let mut info = Vec::with_capacity(rows.len());
        let mut r = 0;
        for &c in order {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let inv = t.inv(rows[r][c]);
            rows[r].iter_mut().for_each(|x| *x = t.mul(*x, inv));
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = t.neg(row[c]);
                    t.axpy(row, f, &pivot_row);
                }
            }
            info.push(c);
            r += 1;
        }
        debug_assert_eq!(r, rows.len(), "generator rows must be independent");
        let mut is_info = vec![false; n];
        info.iter().for_each(|&c| is_info[c] = true);
        let red: Vec<usize> = (0..n).filter(|&c| !is_info[c]).collect();
        let a = rows
            .iter()
            .map(|row| red.iter().map(|&c| row[c]).collect())
            .collect();
        Systematic { n, info, red, a }
    }

    pub fn from_code(code: &LinearCode) -> Self {
        let order: Vec<usize> = (0..code.n()).collect();
        Systematic::new(code.rows(), code.n(), &order, code.tables())
    }

    pub fn k(&self) -> usize {
        self.info.len()
    }

    pub fn r(&self) -> usize {
        self.red.len()
    }

    /// `c * a[i]` for every row and scalar, flattened as
    /// `[(i * q + c) * r .. +r]`.
    pub fn scaled_rows(&self, t: &SymbolTables) -> Vec<u8> {
        let (q, r) = (t.q(), self.r());
        let mut out = vec![0u8; self.k() * q * r];
        for (i, row) in self.a.iter().enumerate() {
            for c in 0..q {
                let m = t.mul_row(c as u8);
                let dst = &mut out[(i * q + c) * r..(i * q + c + 1) * r];
                for (d, &s) in dst.iter_mut().zip(row) {
                    *d = m[s as usize];
                }
            }
        }
        out
    }

    /// Full codeword for a message.
    pub fn codeword(&self, msg: &[u8], t: &SymbolTables) -> Vec<u8> {
        let mut out = vec![0u8; self.n];
        let mut red = vec![0u8; self.r()];
        for (i, &m) in msg.iter().enumerate() {
            out[self.info[i]] = m;
            t.axpy(&mut red, m, &self.a[i]);
        }
        for (j, &c) in self.red.iter().enumerate() {
            out[c] = red[j];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::build_code;

    fn opts(strategy: Strategy) -> DistanceOptions {
        DistanceOptions {
            strategy,
            ..DistanceOptions::default()
        }
    }

    #[test]
    fn strategies_agree_on_small_codes() {
        for (q, n, delta) in [
            (3, 13, 2),
            (3, 14, 3),
            (5, 12, 3),
            (5, 13, 2),
            (7, 24, 3),
            (3, 40, 6),
        ] {
            let code = build_code(q, n, delta, 0).unwrap();
            let lin = code.to_linear().unwrap();
            let mut seen = Vec::new();
            for s in [
                Strategy::Exhaustive,
                Strategy::Support,
                Strategy::Bz,
                Strategy::Auto,
            ] {
                if s == Strategy::Exhaustive && q.pow(lin.k() as u32) > 1 << 24 {
                    continue;
                }
                let r = min_distance(&code, &opts(s)).unwrap();
                assert!(r.exact, "{q} {n} {delta} {s}");
                match &r.witness {
                    Some(w) => {
                        assert!(lin.contains(&w.symbols()));
                        assert_eq!(w.weight as u64, r.lower.value);
                    }
                    None => assert_ne!(r.upper.source, UpperProvenance::Witness),
                }
                seen.push(r.lower.value);
            }
            assert!(
                seen.windows(2).all(|p| p[0] == p[1]),
                "{q} {n} {delta}: {seen:?}"
            );
        }
    }

    #[test]
    fn zero_and_full_codes() {
        let odd: Vec<u64> = (0..13).map(|i| 2 * i + 1).collect();
        let code = crate::codes::from_defining_set(3, 13, &odd).unwrap();
        assert_eq!(code.dimension(), 0);
        let r = min_distance(&code, &DistanceOptions::default()).unwrap();
        assert_eq!(r.distance(), Some(14));
        let full = from_all(3, 13);
        let r = min_distance(&full, &opts(Strategy::Bz)).unwrap();
        assert_eq!(r.distance(), Some(1));
    }

    fn from_all(q: u64, n: u64) -> NegacyclicBchCode {
        crate::codes::from_defining_set(q, n, &[]).unwrap()
    }

    #[test]
    fn result_is_reproducible() {
        let code = build_code(3, 41, 2, 0).unwrap();
        let a = min_distance(&code, &opts(Strategy::Bz)).unwrap();
        let b = min_distance(&code, &opts(Strategy::Bz)).unwrap();
        assert_eq!(serde_json_like(&a), serde_json_like(&b));
        assert_eq!(a.distance(), Some(5));
    }

    fn serde_json_like(r: &DistanceResult) -> String {
        serde_json::to_string(r).unwrap()
    }

    #[test]
    fn strategy_parses() {
        for s in [
            Strategy::Auto,
            Strategy::Exhaustive,
            Strategy::Support,
            Strategy::Bz,
        ] {
            assert_eq!(s.to_string().parse::<Strategy>().unwrap(), s);
        }
        assert!("fast".parse::<Strategy>().is_err());
    }
}
