//! `q`-cyclotomic cosets modulo `N`, coset-leader tests, and the closed
//! forms for the three largest odd coset leaders modulo `q^m - 1` and
//! `q^m + 1`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::arith::{checked_pow, gcd, mul_mod, prime_power};

/// Default cap on the modulus for full odd-leader enumeration.
pub const DEFAULT_LEADER_BUDGET: u64 = 4_000_000;

/// Cosets of moduli above this size are computed but not cached.
const CACHE_MODULUS_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("{q} is not invertible modulo {modulus}")]
    NotCoprime { q: u64, modulus: u64 },
    #[error("{value} is outside the valid range {lo}..={hi}")]
    OutOfRange { value: u64, lo: u64, hi: u64 },
    #[error("modulus {modulus} exceeds the enumeration budget {budget}")]
    BudgetExceeded { modulus: u64, budget: u64 },
    #[error("{0} is not a power of an odd prime")]
    NotOddPrimePower(u64),
    #[error("m must be at least {min}, got {m}")]
    DegreeTooSmall { m: u32, min: u32 },
    #[error("q^m overflows")]
    Overflow,
}

/// Which of the two moduli `q^m - 1` / `q^m + 1` (equivalently, lengths
/// `(q^m - 1)/2` / `(q^m + 1)/2`) is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthKind {
    Minus,
    Plus,
}

impl fmt::Display for LengthKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LengthKind::Minus => "minus",
            LengthKind::Plus => "plus",
        })
    }
}

impl std::str::FromStr for LengthKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "minus" => Ok(LengthKind::Minus),
            "plus" => Ok(LengthKind::Plus),
            other => Err(format!("unknown length kind '{other}'")),
        }
    }
}

impl LengthKind {
    /// `q^m - 1` or `q^m + 1`.
    pub fn modulus(self, q: u64, m: u32) -> Result<u64, CosetError> {
        let qm = checked_pow(q, m).ok_or(CosetError::Overflow)?;
        Ok(match self {
            LengthKind::Minus => qm - 1,
            LengthKind::Plus => qm.checked_add(1).ok_or(CosetError::Overflow)?,
        })
    }
}

/// The orbit `{i, iq, iq^2, ...} mod N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicCoset {
    pub q: u64,
    pub modulus: u64,
    pub leader: u64,
    /// Orbit order starting from the leader.
    pub elements: Vec<u64>,
    pub size: usize,
}

impl CyclotomicCoset {
    pub fn contains(&self, x: u64) -> bool {
        self.elements.contains(&x)
    }
}

type CosetCache = RwLock<HashMap<(u64, u64), HashMap<u64, Arc<CyclotomicCoset>>>>;

fn coset_cache() -> &'static CosetCache {
    static CACHE: OnceLock<CosetCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_coprime(q: u64, modulus: u64) -> Result<(), CosetError> {
    if modulus == 0 || gcd(q % modulus, modulus) != 1 {
        return Err(CosetError::NotCoprime { q, modulus });
    }
    Ok(())
}

fn check_residue(i: u64, modulus: u64) -> Result<(), CosetError> {
    if i >= modulus {
        return Err(CosetError::OutOfRange {
            value: i,
            lo: 0,
            hi: modulus - 1,
        });
    }
    Ok(())
}

/// The coset `C_i^(q,N)`. Results are cached per `(q, N)`.
pub fn coset(i: u64, q: u64, modulus: u64) -> Result<Arc<CyclotomicCoset>, CosetError> {
    check_coprime(q, modulus)?;
    check_residue(i, modulus)?;
    let key = (q, modulus);
    if let Some(c) = coset_cache()
        .read()
        .expect("coset cache poisoned")
        .get(&key)
        .and_then(|m| m.get(&i))
    {
        return Ok(c.clone());
    }
    let orbit = orbit(i, q, modulus);
    let leader = *orbit.iter().min().expect("orbit is nonempty");
    let start = orbit.iter().position(|&x| x == leader).unwrap_or(0);
    let elements: Vec<u64> = orbit[start..]
        .iter()
        .chain(&orbit[..start])
        .copied()
        .collect();
    let c = Arc::new(CyclotomicCoset {
        q,
        modulus,
        leader,
        size: elements.len(),
        elements,
    });
    if modulus <= CACHE_MODULUS_LIMIT {
        let mut cache = coset_cache().write().expect("coset cache poisoned");
        let entry = cache.entry(key).or_default();
        for &x in &c.elements {
            entry.insert(x, c.clone());
        }
    }
    Ok(c)
}

fn orbit(i: u64, q: u64, modulus: u64) -> Vec<u64> {
    let mut out = vec![i];
    let mut j = mul_mod(i, q, modulus);
    while j != i {
        out.push(j);
        j = mul_mod(j, q, modulus);
    }
    out
}

/// True iff `i` is the smallest element of its coset.
pub fn is_coset_leader(i: u64, q: u64, modulus: u64) -> Result<bool, CosetError> {
    check_coprime(q, modulus)?;
    check_residue(i, modulus)?;
    let mut j = mul_mod(i, q, modulus);
    while j != i {
        if j < i {
            return Ok(false);
        }
        j = mul_mod(j, q, modulus);
    }
    Ok(true)
}

/// Base-`q` digits of an integer, most significant first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QadicSequence {
    /// `(s_{m-1}, ..., s_0)`.
    pub digits: Vec<u64>,
    pub weight: u64,
}

impl QadicSequence {
    pub fn value(&self, q: u64) -> u64 {
        self.digits.iter().fold(0, |acc, &d| acc * q + d)
    }

    /// Circular left shift by `j` positions.
    pub fn rotate_left(&self, j: usize) -> QadicSequence {
        let mut digits = self.digits.clone();
        let m = digits.len();
        if m > 0 {
            digits.rotate_left(j % m);
        }
        QadicSequence {
            digits,
            weight: self.weight,
        }
    }
}

pub fn q_weight_and_sequence(s: u64, q: u64, m: u32) -> Result<QadicSequence, CosetError> {
    let qm = checked_pow(q, m).ok_or(CosetError::Overflow)?;
    if s >= qm {
        return Err(CosetError::OutOfRange {
            value: s,
            lo: 0,
            hi: qm - 1,
        });
    }
    let mut digits = vec![0u64; m as usize];
    let mut v = s;
    for d in digits.iter_mut().rev() {
        *d = v % q;
        v /= q;
    }
    let weight = digits.iter().sum();
    Ok(QadicSequence { digits, weight })
}

/// Leader test modulo `q^m - 1` by digit rotation: `i` is a leader iff no
/// circular shift of its `q`-adic sequence is lexicographically smaller.
pub fn is_leader_by_sequence(i: u64, q: u64, m: u32) -> Result<bool, CosetError> {
    let modulus = LengthKind::Minus.modulus(q, m)?;
    if i == 0 || i >= modulus {
        return Err(CosetError::OutOfRange {
            value: i,
            lo: 1,
            hi: modulus.saturating_sub(1),
        });
    }
    let seq = q_weight_and_sequence(i, q, m)?;
    Ok((1..m as usize).all(|j| seq.rotate_left(j).digits >= seq.digits))
}

/// Leader test modulo `q^m + 1`: `i` is a leader iff `i <= (q^m+1)/2` and
/// `i` is not of the form `l q^(m-j) + h` with `1 <= j <= m-1`,
/// `1 <= l <= (q^j-1)/2` and
/// `-l(q^(m-j)-1)/(q^j+1) < h < l(q^(m-j)+1)/(q^j-1)`.
///
/// Clearing denominators, the excluded `i` are exactly those with
/// `i(q^j-1) < l(q^m+1) < i(q^j+1)` for some admissible `l`, so only the
/// smallest candidate `l` needs checking per `j`.
pub fn leader_predicate_zhu(i: u64, q: u64, m: u32) -> Result<bool, CosetError> {
    let modulus = LengthKind::Plus.modulus(q, m)?;
    if i >= modulus {
        return Err(CosetError::OutOfRange {
            value: i,
            lo: 0,
            hi: modulus - 1,
        });
    }
    if i > modulus / 2 {
        return Ok(false);
    }
    let i = i as u128;
    let big_n = modulus as u128;
    for j in 1..m {
        let pj = q.pow(j) as u128;
        let l = i * (pj - 1) / big_n + 1;
        if l <= (pj - 1) / 2 && l * big_n < i * (pj + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sufficient condition for `1 <= i <= (q^m+1)/2` NOT being a leader
/// modulo `q^m + 1`: some `1 <= j <= m-1` gives `a = i q^j mod (q^m+1)` with
/// `1 <= a < i` or `i + a > q^m + 1`. Returns true when the condition fires.
pub fn non_leader_by_residue(i: u64, q: u64, m: u32) -> Result<bool, CosetError> {
    let modulus = LengthKind::Plus.modulus(q, m)?;
    if i == 0 || i > modulus / 2 {
        return Err(CosetError::OutOfRange {
            value: i,
            lo: 1,
            hi: modulus / 2,
        });
    }
    let mut a = i;
    for _ in 1..m {
        a = mul_mod(a, q, modulus);
        if (1..i).contains(&a) || i + a > modulus {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Odd coset leaders modulo `N` in descending order with their coset sizes,
/// by full orbit enumeration.
pub fn all_odd_leaders_desc(
    q: u64,
    modulus: u64,
    budget: u64,
) -> Result<Vec<(u64, usize)>, CosetError> {
    check_coprime(q, modulus)?;
    if modulus > budget {
        return Err(CosetError::BudgetExceeded { modulus, budget });
    }
    let n = modulus as usize;
    let mut visited = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if visited[i] {
            continue;
        }
        let mut size = 0usize;
        let mut j = i as u64;
        loop {
            visited[j as usize] = true;
            size += 1;
            j = mul_mod(j, q, modulus);
            if j == i as u64 {
                break;
            }
        }
        if i % 2 == 1 {
            out.push((i as u64, size));
        }
    }
    out.reverse();
    Ok(out)
}

/// The `count` largest odd coset leaders modulo `N`, descending.
pub fn odd_leaders_desc(
    q: u64,
    modulus: u64,
    count: usize,
) -> Result<Vec<(u64, usize)>, CosetError> {
    odd_leaders_desc_budget(q, modulus, count, DEFAULT_LEADER_BUDGET)
}

pub fn odd_leaders_desc_budget(
    q: u64,
    modulus: u64,
    count: usize,
    budget: u64,
) -> Result<Vec<(u64, usize)>, CosetError> {
    let mut all = all_odd_leaders_desc(q, modulus, budget)?;
    all.truncate(count);
    Ok(all)
}

/// The three largest odd coset leaders modulo `q^m - 1` or `q^m + 1`, with
/// coset sizes. `delta3` is absent when `q^m < 25`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddLeaderTriple {
    pub q: u64,
    pub m: u32,
    pub kind: LengthKind,
    pub delta1: u64,
    pub size1: usize,
    pub delta2: u64,
    pub size2: usize,
    pub delta3: Option<u64>,
    pub size3: Option<usize>,
}

impl OddLeaderTriple {
    /// `(leader, size)` pairs in descending order.
    pub fn as_list(&self) -> Vec<(u64, usize)> {
        let mut v = vec![(self.delta1, self.size1), (self.delta2, self.size2)];
        if let (Some(d), Some(s)) = (self.delta3, self.size3) {
            v.push((d, s));
        }
        v
    }
}

fn check_q_m(q: u64, m: u32) -> Result<u64, CosetError> {
    match prime_power(q) {
        Some((p, _)) if p != 2 => {}
        _ => return Err(CosetError::NotOddPrimePower(q)),
    }
    if m < 2 {
        return Err(CosetError::DegreeTooSmall { m, min: 2 });
    }
    checked_pow(q, m)
        .filter(|&v| v < 1 << 62)
        .ok_or(CosetError::Overflow)
}

/// Closed forms modulo `q^m - 1`.
pub fn delta_formulas_minus(q: u64, m: u32) -> Result<OddLeaderTriple, CosetError> {
    let qm = check_q_m(q, m)?;
    let p = |e: u32| q.pow(e);
    let top = (q - 1) * p(m - 1);
    let delta1 = top - 1;
    let delta2 = top - p((2 * m - 1) / 3) - p((m - 1) / 3) - 1;
    let size2 = if m % 3 == 0 { m / 3 } else { m } as usize;
    let delta3 = (qm >= 25).then(|| {
        if (m + 1) % 3 != 0 {
            top - p((2 * m - 1).div_ceil(3)) - p(m / 3 - 1) - 1
        } else {
            top - p((2 * m - 1) / 3) - p((m + 1) / 3) - 1
        }
    });
    Ok(OddLeaderTriple {
        q,
        m,
        kind: LengthKind::Minus,
        delta1,
        size1: m as usize,
        delta2,
        size2,
        delta3,
        size3: delta3.map(|_| m as usize),
    })
}

/// Closed forms modulo `q^m + 1`.
///
/// For `q = 3 (mod 4)` and `m = 3` the third leader is taken as
/// `(q-1)(q^3-2q-1)/(2(q+1)) - (q+1)`.
pub fn delta_formulas_plus(q: u64, m: u32) -> Result<OddLeaderTriple, CosetError> {
    let qm = check_q_m(q, m)?;
    let p = |e: u32| q.pow(e);
    let n = (qm + 1) / 2;
    let one_mod_4 = qm % 4 == 1;
    let (delta1, size1) = if one_mod_4 {
        (n, 1)
    } else {
        ((q - 1) * n / (q + 1), 2)
    };
    let delta2 = if one_mod_4 {
        (qm - 1) / 2 - p(m - 1)
    } else {
        (q - 1) * (qm - 2 * p(m - 2) - 1) / (2 * (q + 1))
    };
    let delta3 = if qm < 25 {
        None
    } else if one_mod_4 {
        Some((qm - 1) / 2 - p(m - 1) - q + 1)
    } else if m >= 5 {
        Some(delta2 - (q - 1) * (q - 1))
    } else {
        Some((q - 1) * (qm - 2 * q - 1) / (2 * (q + 1)) - (q + 1))
    };
    let size = 2 * m as usize;
    Ok(OddLeaderTriple {
        q,
        m,
        kind: LengthKind::Plus,
        delta1,
        size1,
        delta2,
        size2: size,
        delta3,
        size3: delta3.map(|_| size),
    })
}

pub fn delta_formulas(q: u64, m: u32, kind: LengthKind) -> Result<OddLeaderTriple, CosetError> {
    match kind {
        LengthKind::Minus => delta_formulas_minus(q, m),
        LengthKind::Plus => delta_formulas_plus(q, m),
    }
}

/// Brute-force triple from the odd-leader oracle, in the same shape as the
/// closed forms.
pub fn delta_oracle(q: u64, m: u32, kind: LengthKind) -> Result<OddLeaderTriple, CosetError> {
    let qm = check_q_m(q, m)?;
    let modulus = kind.modulus(q, m)?;
    let top = odd_leaders_desc_budget(q, modulus, 3, modulus.max(DEFAULT_LEADER_BUDGET))?;
    let get = |i: usize| top.get(i).copied();
    let (delta1, size1) = get(0).ok_or(CosetError::OutOfRange {
        value: 0,
        lo: 1,
        hi: 0,
    })?;
    let (delta2, size2) = get(1).ok_or(CosetError::OutOfRange {
        value: 1,
        lo: 1,
        hi: 0,
    })?;
    let third = if qm >= 25 { get(2) } else { None };
    Ok(OddLeaderTriple {
        q,
        m,
        kind,
        delta1,
        size1,
        delta2,
        size2,
        delta3: third.map(|t| t.0),
        size3: third.map(|t| t.1),
    })
}

/// Leaders modulo `q - 1` (every residue) or `q + 1` (`0..=(q+1)/2`).
pub fn small_modulus_leaders(q: u64, kind: LengthKind) -> Result<Vec<u64>, CosetError> {
    match prime_power(q) {
        Some((p, _)) if p != 2 => {}
        _ => return Err(CosetError::NotOddPrimePower(q)),
    }
    Ok(match kind {
        LengthKind::Minus => (0..q - 1).collect(),
        LengthKind::Plus => (0..=(q + 1) / 2).collect(),
    })
}

/// Upper end of the range `1..=r` on which, modulo `q^m - 1` or `q^m + 1`,
/// `i` is a coset leader exactly when `q` does not divide `i`.
///
/// Minus: `q^((m+1)/2) - 1` for odd `m >= 3`, `2q^(m/2) - 1` for even
/// `m >= 2`. Plus: `q^(m/2)` for even `m >= 4`, `q^((m+1)/2) - q` for odd
/// `m >= 3`. `None` outside those cases.
pub fn leader_range_limit(q: u64, m: u32, kind: LengthKind) -> Option<u64> {
    match (kind, m % 2) {
        (LengthKind::Minus, 1) if m >= 3 => Some(q.pow(m.div_ceil(2)) - 1),
        (LengthKind::Minus, 0) if m >= 2 => Some(2 * q.pow(m / 2) - 1),
        (LengthKind::Plus, 0) if m >= 4 => Some(q.pow(m / 2)),
        (LengthKind::Plus, 1) if m >= 3 => Some(q.pow(m.div_ceil(2)) - q),
        _ => None,
    }
}

/// Coset size predicted on the leader range: `m/2` for `q^(m/2)+1` at even
/// `m` modulo `q^m - 1`, otherwise `m` (minus) or `2m` (plus).
pub fn leader_range_size(i: u64, q: u64, m: u32, kind: LengthKind) -> usize {
    match kind {
        LengthKind::Minus if m % 2 == 0 && i == q.pow(m / 2) + 1 => (m / 2) as usize,
        LengthKind::Minus => m as usize,
        LengthKind::Plus => 2 * m as usize,
    }
}
