//! Lower bounds on minimum distance from the defining set, and
//! combinatorial upper bounds.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::arith::gcd;
use crate::codes::{detect_length, NegacyclicBchCode};
use crate::cosets::LengthKind;

/// Lengths above this only scan `e = 1` in [`bch_bound`].
pub const BCH_E_SEARCH_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("bound needs length (q^m+1)/2 and offset 0")]
    NotPlusLength,
    #[error("q must be at least 3")]
    SmallField,
    #[error("need 1 <= {what} <= n = {n}, got {value}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        n: u64,
    },
    #[error("q^m overflows")]
    Overflow,
}

/// Membership of every residue mod `2n` in the defining set.
fn membership(code: &NegacyclicBchCode) -> Vec<bool> {
    let mut inset = vec![false; 2 * code.n as usize];
    code.defining_set
        .exponents
        .iter()
        .for_each(|&e| inset[e as usize] = true);
    inset
}

/// Longest circular run of `j in Z_n` with `1 + 2ej mod 2n` in the defining
/// set, for the given `e`.
fn run_for(inset: &[bool], n: u64, e: u64) -> u64 {
    let two_n = 2 * n;
    let member: Vec<bool> = (0..n)
        .map(|j| inset[((1 + 2 * ((e * j) % n)) % two_n) as usize])
        .collect();
    if member.iter().all(|&b| b) {
        return n;
    }
    // start just after a gap so the circular run is seen contiguously
    let start = member.iter().position(|&b| !b).unwrap_or(0);
    let (mut best, mut cur) = (0u64, 0u64);
    for step in 1..=n as usize {
        if member[(start + step) % n as usize] {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

/// BCH bound: one more than the longest run `1+2eh, ..., 1+2e(h+r-1)` in
/// the defining set, maximised over units `e` mod `n` (or `e = 1` only).
/// The zero code gets `n + 1`.
pub fn bch_bound(code: &NegacyclicBchCode, search_e: bool) -> u64 {
    let n = code.n;
    let scan_all = search_e && n <= BCH_E_SEARCH_LIMIT;
    let inset = membership(code);
    let mut best = run_for(&inset, n, 1);
    if scan_all {
        for e in 2..n {
            if best >= n {
                break;
            }
            if gcd(e, n) == 1 {
                best = best.max(run_for(&inset, n, e));
            }
        }
    }
    best + 1
}

/// The exponent `e` achieving [`bch_bound`], for reporting.
pub fn bch_bound_witness(code: &NegacyclicBchCode) -> (u64, u64) {
    let n = code.n;
    let limit = if n <= BCH_E_SEARCH_LIMIT { n } else { 2 };
    let inset = membership(code);
    (1..limit.max(2))
        .filter(|&e| gcd(e, n) == 1)
        .map(|e| (run_for(&inset, n, e) + 1, e))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(d, e)| (e, d))
        .unwrap_or((1, 1))
}

/// `2δ - 1` for `C_(q,(q^m+1)/2,δ,0)`.
pub fn pang_bound(q: u64, m: u32, delta: u64) -> Result<u64, BoundError> {
    if q < 3 || m < 1 {
        return Err(BoundError::SmallField);
    }
    q.checked_pow(m).ok_or(BoundError::Overflow)?;
    Ok(2 * delta - 1)
}

/// Largest `δ` such that `1, 3, ..., 2δ-3` all lie in the defining set
/// (at least 1).
pub fn bose_distance(code: &NegacyclicBchCode) -> u64 {
    let mut delta = 1;
    while delta <= code.n && code.defining_set.contains(2 * delta - 1) {
        delta += 1;
    }
    delta
}

/// `2δ_B - 1` with `δ_B` the Bose distance, for codes of length
/// `(q^m+1)/2`. A code whose defining set contains `{1, 3, ..., 2δ-3}` is a
/// subcode of `C_(q,n,δ,0)`.
pub fn pang_bound_for_code(code: &NegacyclicBchCode) -> Result<u64, BoundError> {
    match detect_length(code.q, code.n) {
        Some((_, LengthKind::Plus)) => {
            let d = bose_distance(code);
            Ok(if d >= 2 { 2 * d - 1 } else { 1 })
        }
        _ => Err(BoundError::NotPlusLength),
    }
}

fn big_pow(q: u64, e: u64) -> BigUint {
    num_traits::pow(BigUint::from(q), e as usize)
}

/// Hamming ball volume `sum_{i<=t} C(n,i)(q-1)^i`.
pub fn ball_volume(n: u64, t: u64, q: u64) -> BigUint {
    let mut term = BigUint::one();
    let mut acc = BigUint::one();
    for i in 1..=t.min(n) {
        term = term * BigUint::from(n - i + 1) * BigUint::from(q - 1) / BigUint::from(i);
        acc += &term;
    }
    acc
}

/// Whether an `[n, k, d]_q` code passes the sphere-packing test. For even
/// `d = 2t + 2` the test is applied to the punctured `[n-1, k, 2t+1]` code.
pub fn sphere_packing_allows(n: u64, k: u64, d: u64, q: u64) -> bool {
    if d <= 1 {
        return true;
    }
    if d > n - k + 1 {
        return false;
    }
    let t = (d - 1) / 2;
    let len = if d % 2 == 0 { n - 1 } else { n };
    big_pow(q, k) * ball_volume(len, t, q) <= big_pow(q, len)
}

/// Largest `d` admitted by [`sphere_packing_allows`].
pub fn sphere_packing_max_d(n: u64, k: u64, q: u64) -> Result<u64, BoundError> {
    if k == 0 || k > n {
        return Err(BoundError::OutOfRange {
            what: "k",
            value: k,
            n,
        });
    }
    // the test is monotone in d
    let (mut lo, mut hi) = (1, n - k + 1);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if sphere_packing_allows(n, k, mid, q) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo)
}

/// Upper bound `q^(t+2r) / sum_{i<=r} C(t+2r,i)(q-1)^i` on `A_q(n,d)`,
/// `t = n-d+1`, `r = floor(min((n-t)/2, (t-1)/(q-2)))`.
pub fn rouayheb_bound(n: u64, d: u64, q: u64) -> Result<BigUint, BoundError> {
    if q < 3 {
        return Err(BoundError::SmallField);
    }
    if d == 0 || d > n {
        return Err(BoundError::OutOfRange {
            what: "d",
            value: d,
            n,
        });
    }
    let t = n - d + 1;
    let r = ((n - t) / 2).min((t - 1) / (q - 2));
    let len = t + 2 * r;
    Ok(big_pow(q, len) / ball_volume(len, r, q))
}

/// Largest `d` for which `q^k <= rouayheb_bound(n, d, q)`.
pub fn rouayheb_max_d(n: u64, k: u64, q: u64) -> Result<u64, BoundError> {
    let size = big_pow(q, k);
    // the bound is non-increasing in d
    let (mut lo, mut hi) = (1, n);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if rouayheb_bound(n, mid, q)? >= size {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo)
}

/// Provenance of a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerSource {
    Bch,
    Pang,
    Theorem,
    Trivial,
}

/// Provenance of an upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperSource {
    SpherePacking,
    Rouayheb,
    Singleton,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound<S> {
    pub value: u64,
    pub source: S,
}

/// Lower and upper bounds for one code or one parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub lower: Option<Bound<LowerSource>>,
    pub upper: Option<Bound<UpperSource>>,
    pub bch: Option<u64>,
    pub bch_e: Option<u64>,
    pub pang: Option<u64>,
    pub singleton: Option<u64>,
    pub sphere_packing: Option<u64>,
    pub rouayheb: Option<u64>,
    /// `A_q(n,d)` bound for a queried `d`, as a decimal string.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rouayheb_codewords: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub queried_d: Option<u64>,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// Upper bounds for `[n, k]_q`; with `d`, also whether `[n, k, d]` passes
    /// each test.
    pub fn for_parameters(q: u64, n: u64, k: u64, d: Option<u64>) -> Result<Self, BoundError> {
        if n == 0 || k > n {
            return Err(BoundError::OutOfRange {
                what: "k",
                value: k,
                n,
            });
        }
        let mut report = BoundReport {
            q,
            n,
            k,
            lower: None,
            upper: None,
            bch: None,
            bch_e: None,
            pang: None,
            singleton: None,
            sphere_packing: None,
            rouayheb: None,
            rouayheb_codewords: None,
            queried_d: d,
            notes: Vec::new(),
        };
        if k == 0 {
            report
                .notes
                .push("zero code: distance taken as n + 1".into());
            return Ok(report);
        }
        let singleton = n - k + 1;
        let sp = sphere_packing_max_d(n, k, q)?;
        let rh = rouayheb_max_d(n, k, q)?;
        report.singleton = Some(singleton);
        report.sphere_packing = Some(sp);
        report.rouayheb = Some(rh);
        let candidates = [
            (sp, UpperSource::SpherePacking),
            (rh, UpperSource::Rouayheb),
            (singleton, UpperSource::Singleton),
        ];
        let (value, source) = candidates
            .into_iter()
            .min_by_key(|&(v, _)| v)
            .expect("nonempty");
        report.upper = Some(Bound { value, source });
        if let Some(d) = d {
            if d >= 1 && d <= n {
                report.rouayheb_codewords = Some(rouayheb_bound(n, d, q)?.to_string());
            }
            if d > value {
                report
                    .notes
                    .push(format!("no [{n},{k},{d}] code exists over GF({q})"));
            } else if d == value {
                report
                    .notes
                    .push(format!("d = {d} meets the best upper bound"));
            }
        }
        Ok(report)
    }

    /// Bounds for a constructed code.
    pub fn for_code(code: &NegacyclicBchCode) -> Result<Self, BoundError> {
        let k = code.dimension();
        let mut report = Self::for_parameters(code.q, code.n, k, None)?;
        let (e, bch) = bch_bound_witness(code);
        report.bch = Some(bch);
        report.bch_e = Some(e);
        report.pang = pang_bound_for_code(code).ok();
        if k > 0 {
            let mut lower = Bound {
                value: bch,
                source: LowerSource::Bch,
            };
            if let Some(p) = report.pang {
                if p > lower.value {
                    lower = Bound {
                        value: p,
                        source: LowerSource::Pang,
                    };
                }
            }
            report.lower = Some(lower);
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_code, from_defining_set};
    use num_traits::Zero;
    use proptest::prelude::*;

    #[test]
    fn bch_examples() {
        let c = build_code(3, 40, 6, 0).unwrap();
        assert!(bch_bound(&c, false) >= 6);
        assert!(!c.defining_set.contains(11));
        let c3 = build_code(3, 41, 2, 0).unwrap();
        for e in [79u64, 81, 1, 3] {
            assert!(c3.defining_set.contains(e));
        }
        assert!(bch_bound(&c3, false) >= 5);
        let empty = from_defining_set(3, 40, &[]).unwrap();
        assert_eq!(bch_bound(&empty, true), 1);
    }

    #[test]
    fn e_search_dominates() {
        for (q, n, delta) in [
            (3u64, 40u64, 6u64),
            (5, 13, 3),
            (7, 24, 5),
            (3, 41, 4),
            (5, 62, 9),
        ] {
            let c = build_code(q, n, delta, 0).unwrap();
            assert!(bch_bound(&c, true) >= bch_bound(&c, false));
            assert!(bch_bound(&c, false) >= bose_distance(&c));
        }
    }

    #[test]
    fn pang_examples() {
        assert_eq!(pang_bound(3, 5, 3).unwrap(), 5);
        assert_eq!(pang_bound(5, 3, 5).unwrap(), 9);
        assert_eq!(pang_bound(7, 2, 2).unwrap(), 3);
        let c = build_code(5, 63, 5, 0).unwrap();
        assert_eq!(pang_bound_for_code(&c).unwrap(), 9);
        assert!(pang_bound_for_code(&build_code(3, 40, 3, 0).unwrap()).is_err());
    }

    #[test]
    fn sphere_packing_examples() {
        assert_eq!(sphere_packing_max_d(40, 36, 3).unwrap(), 3);
        assert_eq!(sphere_packing_max_d(41, 33, 3).unwrap(), 5);
        assert_eq!(sphere_packing_max_d(9, 9, 5).unwrap(), 1);
        // ternary Golay code [11,6,5] is perfect
        assert_eq!(sphere_packing_max_d(11, 6, 3).unwrap(), 5);
    }

    #[test]
    fn rouayheb_examples() {
        assert_eq!(rouayheb_bound(7, 1, 3).unwrap(), BigUint::from(3u64).pow(7));
        assert_eq!(rouayheb_bound(5, 3, 3).unwrap(), BigUint::from(22u32));
        for m in [3u32, 4, 5] {
            let n = (3u64.pow(m) + 1) / 2;
            let a = rouayheb_bound(n, 6, 3).unwrap();
            assert!(a < big_pow(3, n - 2 * m as u64), "m={m}");
        }
        assert!(rouayheb_bound(5, 3, 2).is_err());
    }

    /// Largest ternary code of length 5 and distance 3 found by a greedy
    /// lexicographic search, and the best linear one by exhaustion.
    #[test]
    fn rouayheb_dominates_small_searches() {
        let words: Vec<[u8; 5]> = (0..243u32)
            .map(|v| {
                let mut w = [0u8; 5];
                for (i, c) in w.iter_mut().enumerate() {
                    *c = ((v / 3u32.pow(i as u32)) % 3) as u8;
                }
                w
            })
            .collect();
        let dist = |a: &[u8; 5], b: &[u8; 5]| a.iter().zip(b).filter(|(x, y)| x != y).count();
        let mut lex: Vec<[u8; 5]> = Vec::new();
        for w in &words {
            if lex.iter().all(|c| dist(c, w) >= 3) {
                lex.push(*w);
            }
        }
        let mut best_linear = 1usize;
        for a in &words {
            for b in &words {
                let span: Vec<[u8; 5]> = (0..9)
                    .map(|i| {
                        let (x, y) = ((i % 3) as u8, (i / 3) as u8);
                        let mut w = [0u8; 5];
                        for j in 0..5 {
                            w[j] = (x * a[j] + y * b[j]) % 3;
                        }
                        w
                    })
                    .collect();
                let distinct = span.iter().collect::<std::collections::BTreeSet<_>>().len();
                let ok = span
                    .iter()
                    .filter(|w| **w != [0; 5])
                    .all(|w| w.iter().filter(|&&c| c != 0).count() >= 3);
                if ok && distinct > best_linear {
                    best_linear = distinct;
                }
            }
        }
        let bound = rouayheb_bound(5, 3, 3).unwrap();
        assert!(bound >= BigUint::from(lex.len()));
        assert!(bound >= BigUint::from(best_linear));
        assert_eq!(best_linear, 9);
    }

    #[test]
    fn report_for_code() {
        let c = build_code(3, 122, 3, 0).unwrap();
        let r = BoundReport::for_code(&c).unwrap();
        assert_eq!(r.k, 112);
        assert_eq!(r.pang, Some(5));
        assert!(r.lower.as_ref().unwrap().value <= r.upper.as_ref().unwrap().value);
        let r = BoundReport::for_parameters(3, 40, 36, Some(3)).unwrap();
        assert_eq!(r.upper.unwrap().value, 3);
    }

    proptest! {
        #[test]
        fn rouayheb_non_increasing(n in 2u64..40, qi in 0usize..4) {
            let q = [3u64, 5, 7, 9][qi];
            let mut prev = rouayheb_bound(n, 1, q).unwrap();
            for d in 2..=n {
                let cur = rouayheb_bound(n, d, q).unwrap();
                prop_assert!(cur <= prev, "n={} d={}", n, d);
                prev = cur;
            }
        }

        #[test]
        fn maxima_match_linear_scans(n in 2u64..60, k in 1u64..60, qi in 0usize..4) {
            prop_assume!(k <= n);
            let q = [3u64, 5, 7, 9][qi];
            let sp = (1..=n - k + 1).take_while(|&d| sphere_packing_allows(n, k, d, q)).last().unwrap();
            prop_assert_eq!(sphere_packing_max_d(n, k, q).unwrap(), sp);
            let size = big_pow(q, k);
            let rh = (1..=n).take_while(|&d| rouayheb_bound(n, d, q).unwrap() >= size).last().unwrap_or(1);
            prop_assert_eq!(rouayheb_max_d(n, k, q).unwrap(), rh);
        }

        #[test]
        fn ball_volume_is_the_sum(n in 0u64..50, t in 0u64..50, qi in 0usize..4) {
            let q = [3u64, 5, 7, 9][qi];
            let naive = (0..=t.min(n)).fold(BigUint::zero(), |acc, i| {
                let c = (0..i).fold(BigUint::one(), |c, j| c * BigUint::from(n - j) / BigUint::from(j + 1));
                acc + c * big_pow(q - 1, i)
            });
            prop_assert_eq!(ball_volume(n, t, q), naive);
        }

        #[test]
        fn sphere_packing_below_singleton(n in 2u64..60, k in 1u64..60, qi in 0usize..4) {
            prop_assume!(k <= n);
            let q = [3u64, 5, 7, 9][qi];
            let d = sphere_packing_max_d(n, k, q).unwrap();
            prop_assert!(d >= 1 && d <= n - k + 1);
        }
    }
}
