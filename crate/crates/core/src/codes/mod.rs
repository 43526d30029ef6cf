//! Negacyclic BCH codes: construction from minimal polynomials of powers of
//! a primitive `2n`-th root of unity, encoding, membership, duality, LCD
//! testing and the map to cyclic codes.

pub mod linear;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::arith::{checked_pow, gcd, prime_power};
use crate::algebra::{
    extend_field, make_field, minimal_polynomial, ord_mod, AlgebraError, Field, FieldElem, Poly,
};
use crate::cosets::{coset, CosetError, LengthKind};

pub use linear::{LinearCode, SymbolTables};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error("{0} is not a power of an odd prime")]
    NotOddPrimePower(u64),
    #[error("length {n} is not coprime to q = {q}")]
    NotCoprime { q: u64, n: u64 },
    #[error("length must be positive")]
    ZeroLength,
    #[error("designed distance {delta} outside {lo}..={hi}")]
    DeltaOutOfRange { delta: u64, lo: u64, hi: u64 },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("length {0} is even")]
    EvenLength(u64),
    #[error("exponent {0} is not an odd residue")]
    NotOdd(u64),
    #[error("generator polynomial is zero")]
    ZeroGenerator,
    #[error("symbol tables need q <= 256, got {0}")]
    FieldTooLargeForTables(u64),
    #[error("{0}")]
    NotApplicable(String),
}

/// `(m, kind)` with `n = (q^m - 1)/2` or `n = (q^m + 1)/2`, `m >= 1`.
pub fn detect_length(q: u64, n: u64) -> Option<(u32, LengthKind)> {
    let mut pw = q;
    let mut m = 1u32;
    while pw <= 2 * n + 1 {
        if pw == 2 * n + 1 {
            return Some((m, LengthKind::Minus));
        }
        if pw + 1 == 2 * n {
            return Some((m, LengthKind::Plus));
        }
        pw = pw.checked_mul(q)?;
        m += 1;
    }
    None
}

/// Fields and root of unity shared by every code of a given `(q, n)`.
pub struct SplittingContext {
    pub q: u64,
    pub n: u64,
    pub base: Arc<Field>,
    pub ext: Arc<Field>,
    /// Primitive `2n`-th root of unity `alpha^((q^l - 1)/2n)`.
    pub beta: FieldElem,
    pub ext_degree: u32,
    minpolys: Mutex<HashMap<u64, Poly>>,
}

impl SplittingContext {
    /// Minimal polynomial over `GF(q)` of `beta^e`, cached by coset leader.
    pub fn minimal_polynomial(&self, e: u64) -> Result<Poly, CodeError> {
        let two_n = 2 * self.n;
        let leader = coset(e % two_n, self.q, two_n)?.leader;
        if let Some(p) = self.minpolys.lock().expect("poisoned").get(&leader) {
            return Ok(p.clone());
        }
        let p = minimal_polynomial(&self.ext, self.beta, two_n, leader as i64)?;
        self.minpolys
            .lock()
            .expect("poisoned")
            .insert(leader, p.clone());
        Ok(p)
    }

    pub fn beta_pow(&self, e: u64) -> FieldElem {
        self.ext.pow(self.beta, e % (2 * self.n))
    }
}

fn base_field(q: u64) -> Result<Arc<Field>, CodeError> {
    match prime_power(q) {
        Some((p, s)) if p != 2 => Ok(make_field(p, s)?),
        _ => Err(CodeError::NotOddPrimePower(q)),
    }
}

/// Cached splitting context for `x^n + 1` over `GF(q)`.
pub fn splitting_context(q: u64, n: u64) -> Result<Arc<SplittingContext>, CodeError> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<SplittingContext>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("poisoned").get(&(q, n)) {
        return Ok(c.clone());
    }
    let base = base_field(q)?;
    if n == 0 {
        return Err(CodeError::ZeroLength);
    }
    if gcd(n, q) != 1 {
        return Err(CodeError::NotCoprime { q, n });
    }
    let ell = ord_mod(q, 2 * n)? as u32;
    let ext = extend_field(&base, ell)?;
    let beta = ext.pow(ext.primitive(), (ext.order() - 1) / (2 * n));
    let ctx = Arc::new(SplittingContext {
        q,
        n,
        base,
        ext,
        beta,
        ext_degree: ell,
        minpolys: Mutex::new(HashMap::new()),
    });
    cache
        .lock()
        .expect("poisoned")
        .entry((q, n))
        .or_insert(ctx.clone());
    Ok(ctx)
}

/// Exponents `e` (odd residues mod `2n`) with `g(beta^e) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSet {
    pub q: u64,
    pub n: u64,
    /// Sorted, closed under `e -> qe mod 2n`.
    pub exponents: Vec<u64>,
    /// Sorted distinct coset leaders.
    pub leaders: Vec<u64>,
    /// The generating exponents `1+2b, ..., 1+2(b+delta-2)` reduced mod `2n`,
    /// empty when the set was given directly.
    pub base_range: Vec<u64>,
}

impl DefiningSet {
    /// Union of the cosets of the given odd exponents.
    pub fn from_exponents(q: u64, n: u64, generators: &[u64]) -> Result<Self, CodeError> {
        let two_n = 2 * n;
        let mut exps = BTreeSet::new();
        let mut leaders = BTreeSet::new();
        for &e in generators {
            let e = e % two_n;
            if e % 2 == 0 {
                return Err(CodeError::NotOdd(e));
            }
            if exps.contains(&e) {
                continue;
            }
            let c = coset(e, q, two_n)?;
            leaders.insert(c.leader);
            exps.extend(c.elements.iter().copied());
        }
        Ok(DefiningSet {
            q,
            n,
            exponents: exps.into_iter().collect(),
            leaders: leaders.into_iter().collect(),
            base_range: Vec::new(),
        })
    }

    pub fn contains(&self, e: u64) -> bool {
        self.exponents.binary_search(&(e % (2 * self.n))).is_ok()
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }
}

/// A nonzero-length vector over `GF(q)` with its Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codeword {
    pub coeffs: Vec<FieldElem>,
    pub weight: usize,
}

impl Codeword {
    pub fn new(coeffs: Vec<FieldElem>) -> Self {
        let weight = coeffs.iter().filter(|c| !c.is_zero()).count();
        Codeword { coeffs, weight }
    }

    pub fn from_symbols(symbols: &[u8]) -> Self {
        Codeword::new(
            symbols
                .iter()
                .map(|&s| FieldElem::from_raw(s as u64))
                .collect(),
        )
    }

    pub fn symbols(&self) -> Vec<u8> {
        self.coeffs.iter().map(|c| c.value() as u8).collect()
    }

    /// `(-c_{n-1}, c_0, ..., c_{n-2})`.
    pub fn negashift(&self, field: &Field) -> Codeword {
        let n = self.coeffs.len();
        let mut v = Vec::with_capacity(n);
        if n > 0 {
            v.push(field.neg(self.coeffs[n - 1]));
            v.extend_from_slice(&self.coeffs[..n - 1]);
        }
        Codeword::new(v)
    }
}

/// Designed distance and offset a code was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Designed {
    pub delta: u64,
    pub b: i64,
}

/// A negacyclic code of length `n` over `GF(q)`: an ideal of
/// `GF(q)[x]/(x^n + 1)` with generator `g | x^n + 1`.
#[derive(Clone, Debug)]
pub struct NegacyclicBchCode {
    pub q: u64,
    pub n: u64,
    pub designed: Option<Designed>,
    pub generator: Poly,
    pub check: Poly,
    pub defining_set: DefiningSet,
}

impl PartialEq for NegacyclicBchCode {
    /// Codes are equal when they have the same `(q, n, defining set)`;
    /// designed distance and offset are provenance only.
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
            && self.n == other.n
            && self.defining_set.exponents == other.defining_set.exponents
    }
}

impl Eq for NegacyclicBchCode {}

/// `C_(q,n,delta,b)`: generator is the lcm of the minimal polynomials of
/// `beta^(1+2(b+i))`, `0 <= i <= delta-2`.
pub fn build_code(q: u64, n: u64, delta: u64, b: i64) -> Result<NegacyclicBchCode, CodeError> {
    if n == 0 {
        return Err(CodeError::ZeroLength);
    }
    if delta < 2 || delta > n {
        return Err(CodeError::DeltaOutOfRange {
            delta,
            lo: 2,
            hi: n,
        });
    }
    let two_n = 2 * n as i64;
    let base_range: Vec<u64> = (0..delta - 1)
        .map(|i| (1 + 2 * (b + i as i64)).rem_euclid(two_n) as u64)
        .collect();
    let ctx = splitting_context(q, n)?;
    let mut ds = DefiningSet::from_exponents(q, n, &base_range)?;
    ds.base_range = base_range;
    let mut code = from_context(&ctx, ds)?;
    code.designed = Some(Designed { delta, b });
    Ok(code)
}

/// Code whose defining set is the union of the cosets of `exponents`.
pub fn from_defining_set(
    q: u64,
    n: u64,
    exponents: &[u64],
) -> Result<NegacyclicBchCode, CodeError> {
    let ctx = splitting_context(q, n)?;
    let ds = DefiningSet::from_exponents(q, n, exponents)?;
    from_context(&ctx, ds)
}

/// Code whose check polynomial is the product of the minimal polynomials of
/// `beta^e` over the cosets of `nonzeros`, i.e. whose defining set is every
/// other odd residue.
pub fn with_check_exponents(
    q: u64,
    n: u64,
    nonzeros: &[u64],
) -> Result<NegacyclicBchCode, CodeError> {
    let two_n = 2 * n;
    let mut excluded = BTreeSet::new();
    for &e in nonzeros {
        if e % 2 == 0 {
            return Err(CodeError::NotOdd(e));
        }
        excluded.extend(coset(e % two_n, q, two_n)?.elements.iter().copied());
    }
    let zeros: Vec<u64> = (1..two_n)
        .step_by(2)
        .filter(|e| !excluded.contains(e))
        .collect();
    from_defining_set(q, n, &zeros)
}

fn from_context(ctx: &SplittingContext, ds: DefiningSet) -> Result<NegacyclicBchCode, CodeError> {
    let mut g = Poly::one(ctx.base.clone());
    for &leader in &ds.leaders {
        g = g.mul(&ctx.minimal_polynomial(leader)?)?;
    }
    let xn1 = Poly::x_n_plus_one(ctx.base.clone(), ctx.n as usize);
    let (h, r) = xn1.div_rem(&g)?;
    if !r.is_zero() {
        return Err(CodeError::Algebra(AlgebraError::Internal(
            "generator does not divide x^n + 1",
        )));
    }
    Ok(NegacyclicBchCode {
        q: ctx.q,
        n: ctx.n,
        designed: None,
        generator: g,
        check: h,
        defining_set: ds,
    })
}

impl NegacyclicBchCode {
    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    pub fn dimension(&self) -> u64 {
        self.n - self.generator.degree().unwrap_or(0) as u64
    }

    pub fn context(&self) -> Result<Arc<SplittingContext>, CodeError> {
        splitting_context(self.q, self.n)
    }

    pub fn length_kind(&self) -> Option<(u32, LengthKind)> {
        detect_length(self.q, self.n)
    }

    fn check_len(&self, len: usize) -> Result<(), CodeError> {
        if len != self.n as usize {
            return Err(CodeError::LengthMismatch {
                expected: self.n as usize,
                got: len,
            });
        }
        Ok(())
    }

    /// Non-systematic encoding `m(x) g(x)`.
    pub fn encode(&self, message: &[FieldElem]) -> Result<Codeword, CodeError> {
        let k = self.dimension() as usize;
        if message.len() != k {
            return Err(CodeError::LengthMismatch {
                expected: k,
                got: message.len(),
            });
        }
        let m = Poly::new(self.field().clone(), message.to_vec());
        let c = m.mul(&self.generator)?;
        Ok(Codeword::new(c.to_vec(self.n as usize).expect("deg < n")))
    }

    /// Membership by division: `v(x) = 0 mod g(x)`.
    pub fn is_codeword(&self, v: &[FieldElem]) -> Result<bool, CodeError> {
        self.check_len(v.len())?;
        let p = Poly::new(self.field().clone(), v.to_vec());
        Ok(p.div_rem(&self.generator)?.1.is_zero())
    }

    /// Membership by evaluation: `v(beta^e) = 0` for each defining-set coset
    /// leader `e`.
    pub fn is_codeword_by_roots(&self, v: &[FieldElem]) -> Result<bool, CodeError> {
        self.check_len(v.len())?;
        let ctx = self.context()?;
        let p = Poly::new(self.field().clone(), v.to_vec());
        let embedded = p.embed_coeffs(&ctx.ext)?;
        for &e in &self.defining_set.leaders {
            let x = ctx.beta_pow(e);
            let val = embedded.iter().rev().fold(FieldElem::ZERO, |acc, &c| {
                ctx.ext.add(ctx.ext.mul(acc, x), c)
            });
            if !val.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// LCD iff the generator is self-reciprocal.
    pub fn is_lcd(&self) -> bool {
        self.generator.is_self_reciprocal()
    }

    /// Generator of the image cyclic code under `c(x) -> c(-x)`: the monic
    /// `g(-x)`, a divisor of `x^n - 1`.
    pub fn to_cyclic(&self) -> Result<Poly, CodeError> {
        if self.n % 2 == 0 {
            return Err(CodeError::EvenLength(self.n));
        }
        Ok(self.generator.neg_x().monic())
    }

    /// Generator of the dual code: the monic reciprocal of `h`.
    pub fn dual_generator(&self) -> Result<Poly, CodeError> {
        Ok(self.check.reciprocal()?)
    }

    /// Generator-matrix form for the distance engines.
    pub fn to_linear(&self) -> Result<LinearCode, CodeError> {
        LinearCode::from_generator_poly(&self.generator, self.n as usize)
    }
}

/// Closed-form dimension `n - m*ceil((2δ-3)(q-1)/2q)` (minus) or
/// `n - 2m*ceil(...)` (plus), on its range of validity:
/// minus `δ <= q^(m/2)+1` (even m) or `δ <= (q^((m+1)/2)+1)/2` (odd m);
/// plus `δ <= (q^(m/2)+3)/2` (even m >= 4) or `δ <= (q^((m+1)/2)-q+2)/2`
/// (odd m >= 3).
pub fn dimension_formula(q: u64, m: u32, delta: u64, kind: LengthKind) -> Result<u64, CodeError> {
    let hi = dimension_formula_max_delta(q, m, kind)?;
    if delta < 2 || delta > hi {
        return Err(CodeError::DeltaOutOfRange { delta, lo: 2, hi });
    }
    let qm = checked_pow(q, m).ok_or(CosetError::Overflow)?;
    let cosets = ((2 * delta - 3) * (q - 1)).div_ceil(2 * q);
    Ok(match kind {
        LengthKind::Minus => (qm - 1) / 2 - m as u64 * cosets,
        LengthKind::Plus => (qm + 1) / 2 - 2 * m as u64 * cosets,
    })
}

/// Largest designed distance covered by [`dimension_formula`].
pub fn dimension_formula_max_delta(q: u64, m: u32, kind: LengthKind) -> Result<u64, CodeError> {
    if !matches!(prime_power(q), Some((p, _)) if p != 2) {
        return Err(CodeError::NotOddPrimePower(q));
    }
    let pw = |e: u32| checked_pow(q, e).ok_or(CodeError::Coset(CosetError::Overflow));
    match kind {
        LengthKind::Minus if m >= 2 && m % 2 == 0 => Ok(pw(m / 2)? + 1),
        LengthKind::Minus if m >= 3 => Ok((pw(m.div_ceil(2))? + 1) / 2),
        LengthKind::Plus if m >= 4 && m % 2 == 0 => Ok((pw(m / 2)? + 3) / 2),
        LengthKind::Plus if m >= 3 && m % 2 == 1 => Ok((pw(m.div_ceil(2))? - q + 2) / 2),
        _ => Err(CodeError::NotApplicable(format!(
            "no dimension formula for m = {m}, {kind} length"
        ))),
    }
}

/// `[n, k, d]` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.n, self.k, self.d)
    }
}

/// MDS families of lengths `(q-1)/2` and `(q+1)/2`:
/// `[n, n-δ+1, δ]` for `2 <= δ <= (q-1)/2` (minus) and
/// `[n, n-2(δ-1), 2δ-1]` for `2 <= δ <= floor((q+3)/4)` (plus).
pub fn mds_family(q: u64, kind: LengthKind, delta: u64) -> Result<Parameters, CodeError> {
    if !matches!(prime_power(q), Some((p, _)) if p != 2) {
        return Err(CodeError::NotOddPrimePower(q));
    }
    let (n, hi) = match kind {
        LengthKind::Minus => ((q - 1) / 2, (q - 1) / 2),
        LengthKind::Plus => ((q + 1) / 2, (q + 3) / 4),
    };
    if delta < 2 || delta > hi {
        return Err(CodeError::DeltaOutOfRange { delta, lo: 2, hi });
    }
    Ok(match kind {
        LengthKind::Minus => Parameters {
            n,
            k: n - delta + 1,
            d: delta,
        },
        LengthKind::Plus => Parameters {
            n,
            k: n - 2 * (delta - 1),
            d: 2 * delta - 1,
        },
    })
}

/// Order of `q` modulo `2n`, the degree of the splitting field.
pub fn splitting_degree(q: u64, n: u64) -> Result<u64, CodeError> {
    Ok(ord_mod(q, 2 * n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::linear::weight;
    use rand::{Rng, SeedableRng};

    #[test]
    fn length_detection() {
        assert_eq!(detect_length(3, 40), Some((4, LengthKind::Minus)));
        assert_eq!(detect_length(3, 41), Some((4, LengthKind::Plus)));
        assert_eq!(detect_length(5, 13), Some((2, LengthKind::Plus)));
        assert_eq!(detect_length(13, 6), Some((1, LengthKind::Minus)));
        assert_eq!(detect_length(3, 10), None);
    }

    #[test]
    fn construction_examples() {
        assert_eq!(build_code(3, 40, 6, 0).unwrap().dimension(), 28);
        assert_eq!(build_code(3, 121, 6, 0).unwrap().dimension(), 106);
        for (q, m) in [(3u64, 3u32), (5, 2), (7, 2), (3, 4)] {
            let n = (q.pow(m) + 1) / 2;
            let c = build_code(q, n, 2, 0).unwrap();
            assert_eq!(c.dimension(), n - 2 * m as u64);
            let ctx = c.context().unwrap();
            assert_eq!(c.generator, ctx.minimal_polynomial(1).unwrap());
        }
        assert!(matches!(
            build_code(3, 40, 1, 0),
            Err(CodeError::DeltaOutOfRange { .. })
        ));
        assert!(matches!(
            build_code(3, 12, 2, 0),
            Err(CodeError::NotCoprime { .. })
        ));
        assert!(matches!(
            build_code(4, 5, 2, 0),
            Err(CodeError::NotOddPrimePower(4))
        ));
    }

    #[test]
    fn identical_codes_compare_equal() {
        assert_eq!(
            build_code(3, 40, 2, 0).unwrap(),
            build_code(3, 40, 3, 0).unwrap()
        );
        assert_ne!(
            build_code(3, 40, 2, 0).unwrap(),
            build_code(3, 40, 4, 0).unwrap()
        );
        assert_eq!(
            build_code(5, 12, 3, 0).unwrap(),
            build_code(5, 12, 4, 0).unwrap()
        );
    }

    #[test]
    fn negative_offset() {
        let c = build_code(5, 13, 3, -1).unwrap();
        assert_eq!(c.defining_set.base_range, vec![25, 1]);
    }

    #[test]
    fn generator_times_check_and_zero_set() {
        for (q, n, delta) in [
            (3u64, 40u64, 6u64),
            (3, 41, 3),
            (5, 12, 4),
            (5, 13, 4),
            (9, 41, 2),
            (7, 24, 5),
            (3, 14, 3),
        ] {
            let c = build_code(q, n, delta, 0).unwrap();
            assert_eq!(
                c.generator.mul(&c.check).unwrap(),
                Poly::x_n_plus_one(c.field().clone(), n as usize)
            );
            assert!(c.generator.is_monic());
            let ctx = c.context().unwrap();
            for e in (1..2 * n).step_by(2) {
                let zero = c
                    .generator
                    .eval_in(&ctx.ext, ctx.beta_pow(e))
                    .unwrap()
                    .is_zero();
                assert_eq!(zero, c.defining_set.contains(e), "q={q} n={n} e={e}");
            }
        }
    }

    #[test]
    fn encoding_and_membership() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for (q, n, delta) in [
            (3u64, 13u64, 2u64),
            (5, 12, 4),
            (9, 10, 3),
            (7, 25, 3),
            (3, 40, 6),
        ] {
            let c = build_code(q, n, delta, 0).unwrap();
            let f = c.field().clone();
            let k = c.dimension() as usize;
            let zero = c.encode(&vec![FieldElem::ZERO; k]).unwrap();
            assert_eq!(zero.weight, 0);
            let mut one = vec![FieldElem::ZERO; k];
            one[0] = FieldElem::ONE;
            assert_eq!(
                c.encode(&one).unwrap().coeffs,
                c.generator.to_vec(n as usize).unwrap()
            );
            for _ in 0..100 {
                let msg: Vec<FieldElem> = (0..k)
                    .map(|_| FieldElem::from_raw(rng.random_range(0..q)))
                    .collect();
                let w = c.encode(&msg).unwrap();
                assert!(c.is_codeword(&w.coeffs).unwrap());
                assert!(c.is_codeword_by_roots(&w.coeffs).unwrap());
                let s = w.negashift(&f);
                assert!(c.is_codeword(&s.coeffs).unwrap());
                assert!(c.is_codeword_by_roots(&s.coeffs).unwrap());
                let mut bad = w.coeffs.clone();
                bad[0] = f.add(bad[0], FieldElem::ONE);
                assert_eq!(
                    c.is_codeword(&bad).unwrap(),
                    c.is_codeword_by_roots(&bad).unwrap()
                );
            }
            assert!(c.encode(&[]).is_err() || k == 0);
            assert!(matches!(
                c.is_codeword(&[FieldElem::ZERO]),
                Err(CodeError::LengthMismatch { .. })
            ));
        }
    }

    #[test]
    fn lcd_for_plus_lengths() {
        for (q, m) in [(3u64, 2u32), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (9, 2)] {
            let n = (q.pow(m) + 1) / 2;
            for delta in 2..n.min(12) {
                assert!(
                    build_code(q, n, delta, 0).unwrap().is_lcd(),
                    "q={q} n={n} δ={delta}"
                );
            }
        }
    }

    #[test]
    fn lcd_matches_trivial_intersection() {
        for (q, n) in [
            (3u64, 4u64),
            (3, 13),
            (5, 12),
            (5, 13),
            (7, 4),
            (3, 5),
            (5, 6),
        ] {
            for delta in 2..=n {
                let c = build_code(q, n, delta, 0).unwrap();
                let lin = c.to_linear().unwrap();
                let dual = c.dual_generator().unwrap();
                assert_eq!(dual.degree(), Some(c.dimension() as usize));
                let dual_lin = LinearCode::from_generator_poly(&dual, n as usize).unwrap();
                let mut both = lin.rows().to_vec();
                both.extend(dual_lin.rows().iter().cloned());
                let joint = LinearCode::from_rows(c.field().clone(), n as usize, both).unwrap();
                let trivial = joint.k() == lin.k() + dual_lin.k();
                assert_eq!(c.is_lcd(), trivial, "q={q} n={n} δ={delta}");
            }
        }
    }

    #[test]
    fn dual_is_orthogonal() {
        let c = build_code(3, 40, 6, 0).unwrap();
        let lin = c.to_linear().unwrap();
        let dual = LinearCode::from_generator_poly(&c.dual_generator().unwrap(), 40).unwrap();
        let t = lin.tables();
        for a in lin.rows() {
            for b in dual.rows() {
                let ip = a
                    .iter()
                    .zip(b)
                    .fold(0u8, |acc, (&x, &y)| t.add(acc, t.mul(x, y)));
                assert_eq!(ip, 0);
            }
        }
    }

    #[test]
    fn cyclic_image() {
        let f3 = make_field(3, 1).unwrap();
        let c = build_code(3, 13, 2, 0).unwrap();
        let gc = c.to_cyclic().unwrap();
        let xn_1 = Poly::monomial(f3.clone(), FieldElem::ONE, 13)
            .sub(&Poly::one(f3.clone()))
            .unwrap();
        assert!(xn_1.div_rem(&gc).unwrap().1.is_zero());
        assert_eq!(gc.neg_x().monic(), c.generator);
        assert!(matches!(
            build_code(3, 40, 2, 0).unwrap().to_cyclic(),
            Err(CodeError::EvenLength(40))
        ));
        let xp1 = Poly::from_ints(f3.clone(), &[1, 1]);
        assert_eq!(xp1.neg_x().monic(), Poly::from_ints(f3, &[-1, 1]));
    }

    #[test]
    fn trivial_and_full_codes() {
        // every odd residue in the defining set: g = x^n + 1
        let c = from_defining_set(3, 4, &[1, 3, 5, 7]).unwrap();
        assert_eq!(c.dimension(), 0);
        assert!(c.is_lcd());
        let full = from_defining_set(3, 4, &[]).unwrap();
        assert_eq!(full.dimension(), 4);
        assert_eq!(
            full.dual_generator().unwrap(),
            Poly::x_n_plus_one(full.field().clone(), 4)
        );
    }

    #[test]
    fn dimension_formula_examples() {
        assert_eq!(dimension_formula(3, 5, 6, LengthKind::Minus).unwrap(), 106);
        assert_eq!(dimension_formula(3, 5, 3, LengthKind::Plus).unwrap(), 112);
        assert_eq!(dimension_formula(5, 3, 5, LengthKind::Plus).unwrap(), 45);
        assert!(dimension_formula(5, 2, 3, LengthKind::Plus).is_err());
        assert!(dimension_formula(3, 4, 11, LengthKind::Minus).is_err());
    }

    #[test]
    fn dimension_formula_matches_construction_small() {
        for q in [3u64, 5, 7] {
            for m in 2u32..=4 {
                if q.pow(m) > 400 {
                    continue;
                }
                for kind in [LengthKind::Minus, LengthKind::Plus] {
                    let Ok(hi) = dimension_formula_max_delta(q, m, kind) else {
                        continue;
                    };
                    let n = kind.modulus(q, m).unwrap() / 2;
                    for delta in 2..=hi {
                        let built = build_code(q, n, delta, 0).unwrap().dimension();
                        assert_eq!(dimension_formula(q, m, delta, kind).unwrap(), built);
                    }
                }
            }
        }
    }

    #[test]
    fn mds_parameters() {
        assert_eq!(
            mds_family(13, LengthKind::Minus, 3).unwrap(),
            Parameters { n: 6, k: 4, d: 3 }
        );
        assert_eq!(
            mds_family(13, LengthKind::Plus, 3).unwrap(),
            Parameters { n: 7, k: 3, d: 5 }
        );
        assert_eq!(
            mds_family(7, LengthKind::Minus, 2).unwrap(),
            Parameters { n: 3, k: 2, d: 2 }
        );
        assert!(mds_family(13, LengthKind::Plus, 5).is_err());
        let c = build_code(13, 6, 3, 0).unwrap();
        assert_eq!(c.dimension(), 4);
        let c = build_code(13, 7, 3, 0).unwrap();
        assert_eq!(c.dimension(), 3);
    }

    #[test]
    fn one_weight_code_by_check_polynomial() {
        let t = crate::cosets::delta_formulas_minus(3, 4).unwrap();
        let c = with_check_exponents(3, 40, &[t.delta1]).unwrap();
        assert_eq!(c.dimension(), 4);
        let lin = c.to_linear().unwrap();
        for idx in 1..81u32 {
            let msg: Vec<u8> = (0..4).map(|i| ((idx / 3u32.pow(i)) % 3) as u8).collect();
            assert_eq!(weight(&lin.encode(&msg).unwrap()), 27);
        }
    }
}
