//! Finite fields `GF(p^s)` for odd primes `p`.
//!
//! Every field, including an extension `GF(q^l)` of a non-prime `GF(q)`, is
//! represented as a single simple extension of the prime field: an element is
//! a coordinate vector over `GF(p)` in the power basis of the field's
//! modulus, packed into a `u64` as `sum c_i p^i`. Extension fields built with
//! [`extend_field`] additionally carry an explicit embedding of their base
//! field.
//!
//! Construction is canonical. The modulus is the lexicographically smallest
//! monic irreducible polynomial of degree `s` (coefficient tuples compared
//! from the constant term upwards) and the primitive element is the first
//! generator of the multiplicative group when coordinate vectors are listed
//! in lexicographic order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::arith::{checked_pow, is_prime, prime_divisors};
use super::AlgebraError;

/// Default cap on field cardinality.
pub const DEFAULT_MAX_FIELD_ORDER: u64 = 1 << 40;

/// Largest degree over the prime field that the fixed-size coordinate
/// buffers support (`3^40 > 2^63`).
const MAX_DEGREE: usize = 40;

/// Fields up to this size get log/exp multiplication tables.
const TABLE_LIMIT: u64 = 1 << 16;

/// An element of some [`Field`], stored as its packed prime-field
/// coordinates. Elements carry no reference to their field; every operation
/// goes through the owning `Field`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Wraps a packed coordinate value without checking it against a field.
    pub const fn from_raw(value: u64) -> Self {
        FieldElem(value)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct LogTables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

/// Embedding of a base field `GF(q)` into an extension `GF(q^l)`.
pub struct Subfield {
    base: Arc<Field>,
    ext_degree: u32,
    /// Powers `r^0..r^{s-1}` of the image of the base field's generator `x`.
    root_pows: Vec<FieldElem>,
    /// Echelon basis of the embedded image: `(pivot, vector, combination)`,
    /// where `vector = sum combination_i * root_pows[i]`.
    echelon: Vec<(usize, Vec<u64>, Vec<u64>)>,
}

impl Subfield {
    pub fn base(&self) -> &Arc<Field> {
        &self.base
    }

    pub fn ext_degree(&self) -> u32 {
        self.ext_degree
    }
}

/// The finite field `GF(p^s)`.
pub struct Field {
    p: u64,
    degree: u32,
    order: u64,
    modulus: Vec<u64>,
    primitive: FieldElem,
    group_primes: Vec<u64>,
    logs: Option<LogTables>,
    subfield: Option<Subfield>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .field(
                "base_degree",
                &self.subfield.as_ref().map(|s| s.base.degree),
            )
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.degree)
        }
    }
}

/// Construction is canonical, so `(p, degree, base degree)` identifies a field.
impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.degree == other.degree
            && self.subfield.as_ref().map(|s| s.base.degree)
                == other.subfield.as_ref().map(|s| s.base.degree)
    }
}

impl Eq for Field {}

fn field_cache() -> &'static Mutex<HashMap<(u64, u32, u32), Arc<Field>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32, u32), Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_order(p: u64, s: u32, cap: u64) -> Result<u64, AlgebraError> {
    if p == 2 || !is_prime(p) {
        return Err(AlgebraError::NotOddPrime(p));
    }
    if s == 0 {
        return Err(AlgebraError::ZeroDegree);
    }
    let order = checked_pow(p, s)
        .filter(|&o| o <= cap && (s as usize) <= MAX_DEGREE)
        .ok_or(AlgebraError::FieldTooLarge { p, degree: s, cap })?;
    Ok(order)
}

/// Builds the canonical field `GF(p^s)` with the default cardinality cap.
pub fn make_field(p: u64, s: u32) -> Result<Arc<Field>, AlgebraError> {
    make_field_capped(p, s, DEFAULT_MAX_FIELD_ORDER)
}

/// Builds the canonical field `GF(p^s)`, refusing cardinalities above `cap`.
pub fn make_field_capped(p: u64, s: u32, cap: u64) -> Result<Arc<Field>, AlgebraError> {
    check_order(p, s, cap)?;
    let mut cache = field_cache().lock().expect("field cache poisoned");
    if let Some(f) = cache.get(&(p, s, 0)) {
        return Ok(f.clone());
    }
    let field = Arc::new(Field::build(p, s, None));
    cache.insert((p, s, 0), field.clone());
    Ok(field)
}

/// Builds `GF(q^l)` over `base = GF(q)` with an explicit embedding of `base`.
pub fn extend_field(base: &Arc<Field>, ext_degree: u32) -> Result<Arc<Field>, AlgebraError> {
    extend_field_capped(base, ext_degree, DEFAULT_MAX_FIELD_ORDER)
}

pub fn extend_field_capped(
    base: &Arc<Field>,
    ext_degree: u32,
    cap: u64,
) -> Result<Arc<Field>, AlgebraError> {
    if ext_degree == 0 {
        return Err(AlgebraError::ZeroDegree);
    }
    if base.subfield.is_some() {
        return Err(AlgebraError::NestedExtension);
    }
    let degree = base
        .degree
        .checked_mul(ext_degree)
        .ok_or(AlgebraError::FieldTooLarge {
            p: base.p,
            degree: u32::MAX,
            cap,
        })?;
    check_order(base.p, degree, cap)?;
    let key = (base.p, degree, base.degree);
    let mut cache = field_cache().lock().expect("field cache poisoned");
    if let Some(f) = cache.get(&key) {
        return Ok(f.clone());
    }
    let mut field = Field::build(base.p, degree, None);
    field.subfield = Some(field.embedding_of(base.clone(), ext_degree));
    let field = Arc::new(field);
    cache.insert(key, field.clone());
    Ok(field)
}

impl Field {
    fn build(p: u64, degree: u32, _marker: Option<()>) -> Field {
        let order = checked_pow(p, degree).expect("order checked by caller");
        let modulus = if degree == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, degree as usize)
        };
        let mut field = Field {
            p,
            degree,
            order,
            modulus,
            primitive: FieldElem::ONE,
            group_primes: prime_divisors(order - 1),
            logs: None,
            subfield: None,
        };
        field.primitive = field.find_primitive();
        if degree > 1 && order <= TABLE_LIMIT {
            field.logs = Some(field.build_tables());
        }
        field
    }

    fn find_primitive(&self) -> FieldElem {
        (1..self.order)
            .map(|idx| self.enumerated(idx))
            .find(|&e| self.is_primitive(e))
            .expect("a finite field always has a primitive element")
    }

    /// The `idx`-th element in lexicographic order of coordinate vectors,
    /// constant coordinate most significant.
    fn enumerated(&self, mut idx: u64) -> FieldElem {
        let s = self.degree as usize;
        let mut coords = [0u64; MAX_DEGREE];
        for i in (0..s).rev() {
            coords[i] = idx % self.p;
            idx /= self.p;
        }
        self.encode(&coords[..s])
    }

    fn build_tables(&self) -> LogTables {
        let n = (self.order - 1) as usize;
        let mut exp = vec![0u64; 2 * n];
        let mut log = vec![0u32; self.order as usize];
        let mut acc = FieldElem::ONE;
        for (i, slot) in exp.iter_mut().take(n).enumerate() {
            *slot = acc.0;
            log[acc.0 as usize] = i as u32;
            acc = self.mul_poly(acc, self.primitive);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        LogTables { exp, log }
    }

    fn embedding_of(&self, base: Arc<Field>, ext_degree: u32) -> Subfield {
        let s = base.degree as usize;
        let root = if s == 1 {
            FieldElem::ONE
        } else {
            // Roots of the base modulus lie in the unique subgroup of order q-1.
            let gamma = self.pow(self.primitive, (self.order - 1) / (base.order - 1));
            let mut cand = FieldElem::ONE;
            let mut found = None;
            for _ in 0..base.order - 1 {
                if self.eval_prime_poly(&base.modulus, cand).is_zero() {
                    found = Some(cand);
                    break;
                }
                cand = self.mul(cand, gamma);
            }
            found.expect("base modulus splits in the extension")
        };
        let mut root_pows = Vec::with_capacity(s);
        let mut acc = FieldElem::ONE;
        for _ in 0..s {
            root_pows.push(acc);
            acc = self.mul(acc, root);
        }
        let mut echelon: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
        for (i, &r) in root_pows.iter().enumerate() {
            let mut v = self.coords(r);
            let mut comb = vec![0u64; s];
            comb[i] = 1;
            self.reduce_against(&echelon, &mut v, &mut comb);
            let pivot = v
                .iter()
                .position(|&c| c != 0)
                .expect("powers of a degree-s root are independent");
            let inv = prime_inv(v[pivot], self.p);
            v.iter_mut().for_each(|c| *c = *c * inv % self.p);
            comb.iter_mut().for_each(|c| *c = *c * inv % self.p);
            echelon.push((pivot, v, comb));
        }
        Subfield {
            base,
            ext_degree,
            root_pows,
            echelon,
        }
    }

    fn reduce_against(
        &self,
        echelon: &[(usize, Vec<u64>, Vec<u64>)],
        v: &mut [u64],
        comb: &mut [u64],
    ) {
        let p = self.p;
        for (pivot, row, rcomb) in echelon {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x = (*x + (p - c) * y) % p;
            }
            for (x, y) in comb.iter_mut().zip(rcomb) {
                *x = (*x + (p - c) * y) % p;
            }
        }
    }

    fn eval_prime_poly(&self, coeffs: &[u64], x: FieldElem) -> FieldElem {
        coeffs.iter().rev().fold(FieldElem::ZERO, |acc, &c| {
            self.add(self.mul(acc, x), FieldElem(c))
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Cardinality `p^s`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Ascending coefficients of the monic modulus over `GF(p)`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn primitive(&self) -> FieldElem {
        self.primitive
    }

    pub fn subfield(&self) -> Option<&Subfield> {
        self.subfield.as_ref()
    }

    /// The base field of an extension built by [`extend_field`].
    pub fn base_field(&self) -> Option<&Arc<Field>> {
        self.subfield.as_ref().map(|s| &s.base)
    }

    pub fn ext_degree(&self) -> Option<u32> {
        self.subfield.as_ref().map(|s| s.ext_degree)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    pub fn contains(&self, a: FieldElem) -> bool {
        a.0 < self.order
    }

    pub fn elem(&self, value: u64) -> Result<FieldElem, AlgebraError> {
        if value < self.order {
            Ok(FieldElem(value))
        } else {
            Err(AlgebraError::ElementOutOfRange {
                value,
                order: self.order,
            })
        }
    }

    /// The image of an integer under `Z -> GF(p) -> GF(p^s)`.
    pub fn from_int(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order).map(FieldElem)
    }

    /// Coordinates over `GF(p)`, constant term first.
    pub fn coords(&self, a: FieldElem) -> Vec<u64> {
        let mut v = a.0;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElem, AlgebraError> {
        if coords.len() != self.degree as usize || coords.iter().any(|&c| c >= self.p) {
            return Err(AlgebraError::BadCoordinates);
        }
        Ok(self.encode(coords))
    }

    fn encode(&self, coords: &[u64]) -> FieldElem {
        FieldElem(coords.iter().rev().fold(0u64, |acc, &c| acc * self.p + c))
    }

    fn decode(&self, a: FieldElem, out: &mut [u64; MAX_DEGREE]) {
        let mut v = a.0;
        for slot in out.iter_mut().take(self.degree as usize) {
            *slot = v % self.p;
            v /= self.p;
        }
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p;
        if self.degree == 1 {
            let s = a.0 + b.0;
            return FieldElem(if s >= p { s - p } else { s });
        }
        let (mut x, mut y, mut acc, mut pw) = (a.0, b.0, 0u64, 1u64);
        for _ in 0..self.degree {
            let d = (x % p + y % p) % p;
            acc += d * pw;
            pw = pw.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        FieldElem(acc)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let p = self.p;
        if self.degree == 1 {
            return FieldElem(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let (mut x, mut acc, mut pw) = (a.0, 0u64, 1u64);
        for _ in 0..self.degree {
            let d = x % p;
            acc += ((p - d) % p) * pw;
            pw = pw.wrapping_mul(p);
            x /= p;
        }
        FieldElem(acc)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        if self.degree == 1 {
            return FieldElem(((a.0 as u128 * b.0 as u128) % self.p as u128) as u64);
        }
        if let Some(t) = &self.logs {
            return FieldElem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]);
        }
        self.mul_poly(a, b)
    }

    fn mul_poly(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let s = self.degree as usize;
        let p = self.p;
        let mut ca = [0u64; MAX_DEGREE];
        let mut cb = [0u64; MAX_DEGREE];
        self.decode(a, &mut ca);
        self.decode(b, &mut cb);
        // degree >= 2 implies p^2 <= 2^62, so single products fit; reduce as we go.
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..s {
            if ca[i] == 0 {
                continue;
            }
            for j in 0..s {
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            }
        }
        for i in (s..2 * s - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..s {
                let m = self.modulus[j];
                if m != 0 {
                    prod[i - s + j] = (prod[i - s + j] + c * (p - m)) % p;
                }
            }
        }
        self.encode(&prod[..s])
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        if let (Some(t), false) = (&self.logs, a.is_zero()) {
            let n = self.order - 1;
            let l = (t.log[a.0 as usize] as u64 * (e % n)) % n;
            return FieldElem(t.exp[l as usize]);
        }
        let mut acc = FieldElem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.is_zero() {
            return None;
        }
        if let Some(t) = &self.logs {
            let n = (self.order - 1) as u32;
            let l = (n - t.log[a.0 as usize]) % n;
            return Some(FieldElem(t.exp[l as usize]));
        }
        Some(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Option<FieldElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut ord = self.order - 1;
        for &r in &self.group_primes {
            while ord % r == 0 && self.pow(a, ord / r) == FieldElem::ONE {
                ord /= r;
            }
        }
        Some(ord)
    }

    pub fn is_primitive(&self, a: FieldElem) -> bool {
        !a.is_zero()
            && self
                .group_primes
                .iter()
                .all(|&r| self.pow(a, (self.order - 1) / r) != FieldElem::ONE)
    }

    /// Image of a base-field element in this extension.
    pub fn embed(&self, a: FieldElem) -> Result<FieldElem, AlgebraError> {
        let sub = self.subfield.as_ref().ok_or(AlgebraError::NotAnExtension)?;
        if !sub.base.contains(a) {
            return Err(AlgebraError::FieldMismatch);
        }
        let coords = sub.base.coords(a);
        Ok(coords
            .iter()
            .zip(&sub.root_pows)
            .fold(FieldElem::ZERO, |acc, (&c, &r)| {
                self.add(acc, self.mul(FieldElem(c), r))
            }))
    }

    /// Preimage of an element of the embedded base field, or `None` when the
    /// element lies outside it.
    pub fn restrict(&self, a: FieldElem) -> Result<Option<FieldElem>, AlgebraError> {
        let sub = self.subfield.as_ref().ok_or(AlgebraError::NotAnExtension)?;
        let mut v = self.coords(a);
        let mut comb = vec![0u64; sub.base.degree as usize];
        let p = self.p;
        for (pivot, row, rcomb) in &sub.echelon {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x = (*x + (p - c) * y) % p;
            }
            for (x, y) in comb.iter_mut().zip(rcomb) {
                *x = (*x + c * y) % p;
            }
        }
        if v.iter().any(|&c| c != 0) {
            return Ok(None);
        }
        Ok(Some(sub.base.encode(&comb)))
    }

    /// Relative trace onto the base field (or onto `GF(p)` for a field built
    /// by [`make_field`]).
    pub fn trace(&self, a: FieldElem) -> Result<FieldElem, AlgebraError> {
        if !self.contains(a) {
            return Err(AlgebraError::FieldMismatch);
        }
        let (q, terms) = match &self.subfield {
            Some(sub) => (sub.base.order, sub.ext_degree),
            None => (self.p, self.degree),
        };
        let mut acc = FieldElem::ZERO;
        let mut conj = a;
        for _ in 0..terms {
            acc = self.add(acc, conj);
            conj = self.pow(conj, q);
        }
        match &self.subfield {
            Some(_) => self
                .restrict(acc)?
                .ok_or_else(|| unreachable_err("trace left the base field")),
            None => Ok(acc),
        }
    }
}

fn unreachable_err(msg: &'static str) -> AlgebraError {
    AlgebraError::Internal(msg)
}

fn prime_inv(a: u64, p: u64) -> u64 {
    super::arith::pow_mod(a, p - 2, p)
}

/// Lexicographically smallest monic irreducible polynomial of the given
/// degree over `GF(p)`, comparing coefficient tuples from the constant term.
fn smallest_irreducible(p: u64, degree: usize) -> Vec<u64> {
    let total = checked_pow(p, degree as u32).expect("degree bounded by field cap");
    // f[0] is the most significant digit of idx; start past f[0] = 0
    for idx in total / p..total {
        let mut f = vec![0u64; degree + 1];
        let mut v = idx;
        for i in (0..degree).rev() {
            f[i] = v % p;
            v /= p;
        }
        f[degree] = 1;
        if prime_poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Dense polynomials over `GF(p)` as raw coefficient vectors, used before any
/// `Field` exists.
pub(crate) mod prime_poly {
    use super::super::arith::{pow_mod, prime_divisors};

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        let lead_inv = pow_mod(f[df], p - 2, p);
        while r.len() > df {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            for j in 0..=df {
                let idx = top - df + j;
                r[idx] = (r[idx] + (p - c) * f[j] % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, f, p)
    }

    fn pow_mod_poly(a: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, f, p);
            }
            base = mul_mod(&base, &base, f, p);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    /// Rabin's test for a monic `f` of degree `n`: `x^(p^n) = x (mod f)` and
    /// `gcd(x^(p^(n/r)) - x, f) = 1` for every prime `r | n`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let n = f.len() - 1;
        if n == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        // frob[i] = x^(p^i) mod f
        let mut frob = vec![rem(&x, f, p)];
        for i in 0..n {
            let next = pow_mod_poly(&frob[i], p, f, p);
            frob.push(next);
        }
        if sub(&frob[n], &x, p) != Vec::<u64>::new() {
            return false;
        }
        prime_divisors(n as u64).into_iter().all(|r| {
            let d = sub(&frob[n / r as usize], &x, p);
            let g = gcd(&d, f, p);
            g.len() == 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent irreducibility oracle: no monic factor of degree <= s/2.
    fn brute_irreducible(f: &[u64], p: u64) -> bool {
        let s = f.len() - 1;
        for d in 1..=s / 2 {
            let count = checked_pow(p, d as u32).unwrap();
            for idx in 0..count {
                let mut g = vec![0u64; d + 1];
                let mut v = idx;
                for c in g.iter_mut().take(d) {
                    *c = v % p;
                    v /= p;
                }
                g[d] = 1;
                // long division remainder
                let mut r = f.to_vec();
                while r.len() > d {
                    let top = r.len() - 1;
                    let c = r[top];
                    for j in 0..=d {
                        let i = top - d + j;
                        r[i] = (r[i] + (p - c) * g[j]) % p;
                    }
                    prime_poly::trim(&mut r);
                    if r.len() <= d {
                        break;
                    }
                }
                prime_poly::trim(&mut r);
                if r.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn small_prime_fields() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.order(), 3);
        assert_eq!(f3.primitive(), FieldElem(2));
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.multiplicative_order(f5.primitive()), Some(4));
        assert_eq!(f5.primitive(), FieldElem(2));
    }

    #[test]
    fn gf9_modulus_is_smallest_irreducible() {
        let f9 = make_field(3, 2).unwrap();
        let m = f9.modulus().to_vec();
        assert_eq!(m.len(), 3);
        // no root among the three elements of GF(3)
        for x in 0..3u64 {
            assert_ne!((m[0] + m[1] * x + x * x) % 3, 0);
        }
        // every lexicographically smaller monic quadratic has a root
        for c0 in 0..3u64 {
            for c1 in 0..3u64 {
                if (c0, c1) >= (m[0], m[1]) {
                    continue;
                }
                assert!((0..3u64).any(|x| (c0 + c1 * x + x * x) % 3 == 0));
            }
        }
        assert_eq!(m, vec![1, 0, 1]);
    }

    #[test]
    fn moduli_pass_brute_force_irreducibility() {
        for (p, s) in [
            (3u64, 2u32),
            (3, 3),
            (3, 4),
            (3, 5),
            (3, 6),
            (5, 2),
            (5, 3),
            (7, 2),
            (7, 3),
            (11, 2),
            (13, 2),
        ] {
            let f = make_field(p, s).unwrap();
            assert!(brute_irreducible(f.modulus(), p), "p={p} s={s}");
        }
    }

    #[test]
    fn rabin_agrees_with_brute_force() {
        for (p, d) in [(3u64, 2usize), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)] {
            let count = checked_pow(p, d as u32).unwrap();
            for idx in 0..count {
                let mut f = vec![0u64; d + 1];
                let mut v = idx;
                for c in f.iter_mut().take(d) {
                    *c = v % p;
                    v /= p;
                }
                f[d] = 1;
                assert_eq!(
                    prime_poly::is_irreducible(&f, p),
                    brute_irreducible(&f, p),
                    "{f:?} over GF({p})"
                );
            }
        }
    }

    #[test]
    fn primitive_has_full_order_and_is_first() {
        for (p, s) in [(3u64, 2u32), (3, 4), (5, 2), (7, 2), (3, 8), (5, 4)] {
            let f = make_field(p, s).unwrap();
            let g = f.primitive();
            for d in 1..f.order() - 1 {
                if (f.order() - 1) % d == 0 {
                    assert_ne!(f.pow(g, d), FieldElem::ONE);
                }
            }
            assert_eq!(f.pow(g, f.order() - 1), FieldElem::ONE);
        }
    }

    #[test]
    fn deterministic_construction() {
        let a = Field::build(3, 4, None);
        let b = make_field(3, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.primitive(), b.primitive());
    }

    #[test]
    fn table_and_polynomial_multiplication_agree() {
        let f = make_field(3, 4).unwrap();
        for a in f.elements() {
            for b in f.elements().step_by(7) {
                assert_eq!(
                    f.mul(a, b),
                    if a.is_zero() || b.is_zero() {
                        FieldElem::ZERO
                    } else {
                        f.mul_poly(a, b)
                    }
                );
            }
        }
    }

    #[test]
    fn field_axioms_on_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (p, s) in [
            (3u64, 4u32),
            (5, 3),
            (3, 10),
            (7, 6),
            (3, 16),
            (1_000_003, 1),
        ] {
            let f = make_field(p, s).unwrap();
            for _ in 0..1000 {
                let a = FieldElem(rng.random_range(1..f.order()));
                let b = FieldElem(rng.random_range(0..f.order()));
                let c = FieldElem(rng.random_range(0..f.order()));
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(b, f.neg(b)), FieldElem::ZERO);
                assert_eq!(f.pow(a, f.order()), a);
            }
        }
    }

    #[test]
    fn extension_embedding_is_a_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (p, s, l) in [
            (3u64, 1u32, 4u32),
            (3, 2, 2),
            (3, 2, 3),
            (5, 1, 2),
            (3, 3, 2),
        ] {
            let base = make_field(p, s).unwrap();
            let ext = extend_field(&base, l).unwrap();
            assert_eq!(ext.order(), checked_pow(base.order(), l).unwrap());
            for _ in 0..300 {
                let a = FieldElem(rng.random_range(0..base.order()));
                let b = FieldElem(rng.random_range(0..base.order()));
                let ea = ext.embed(a).unwrap();
                let eb = ext.embed(b).unwrap();
                assert_eq!(ext.embed(base.add(a, b)).unwrap(), ext.add(ea, eb));
                assert_eq!(ext.embed(base.mul(a, b)).unwrap(), ext.mul(ea, eb));
                assert_eq!(ext.restrict(ea).unwrap(), Some(a));
            }
        }
    }

    #[test]
    fn extension_examples() {
        let f3 = make_field(3, 1).unwrap();
        let f81 = extend_field(&f3, 4).unwrap();
        assert_eq!(f81.order(), 81);
        // ord_80(3) = 4, so x^40 + 1 splits over GF(81)
        let beta = f81.pow(f81.primitive(), 80 / 80);
        assert_eq!(f81.pow(beta, 40), f81.neg(FieldElem::ONE));
        let f5 = make_field(5, 1).unwrap();
        let same = extend_field(&f5, 1).unwrap();
        assert_eq!(same.order(), 5);
        for a in f5.elements() {
            assert_eq!(same.embed(a).unwrap(), a);
        }
    }

    #[test]
    fn trace_properties() {
        let f3 = make_field(3, 1).unwrap();
        let ext = extend_field(&f3, 4).unwrap();
        assert_eq!(ext.trace(FieldElem::ZERO).unwrap(), FieldElem::ZERO);
        assert_eq!(ext.trace(FieldElem::ONE).unwrap(), f3.from_int(4));
        let f9 = make_field(3, 2).unwrap();
        let ext9 = extend_field(&f9, 3).unwrap();
        assert_eq!(ext9.trace(FieldElem::ONE).unwrap(), f9.from_int(3));
        for a in ext9.elements().step_by(13) {
            let t = ext9.trace(a).unwrap();
            assert_eq!(ext9.trace(ext9.pow(a, 9)).unwrap(), t);
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            make_field(2, 3),
            Err(AlgebraError::NotOddPrime(2))
        ));
        assert!(matches!(
            make_field(9, 1),
            Err(AlgebraError::NotOddPrime(9))
        ));
        assert!(matches!(
            make_field(3, 30),
            Err(AlgebraError::FieldTooLarge { .. })
        ));
        assert!(matches!(
            make_field_capped(3, 5, 100),
            Err(AlgebraError::FieldTooLarge { .. })
        ));
        assert!(matches!(make_field(3, 0), Err(AlgebraError::ZeroDegree)));
    }
}
