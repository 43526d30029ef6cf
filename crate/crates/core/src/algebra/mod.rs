//! Finite fields, polynomials over them, and minimal polynomials of roots of
//! unity.

pub mod arith;
mod field;
mod poly;

use std::sync::Arc;

use thiserror::Error;

pub use arith::{binomial, checked_pow, gcd, ord_mod, pow_mod, prime_power};
pub use field::{
    extend_field, extend_field_capped, make_field, make_field_capped, Field, FieldElem, Subfield,
    DEFAULT_MAX_FIELD_ORDER,
};
pub use poly::{CoeffJson, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not a power of an odd prime")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{degree} exceeds the configured cap {cap}")]
    FieldTooLarge { p: u64, degree: u32, cap: u64 },
    #[error("extensions can only be built over a field constructed by make_field")]
    NestedExtension,
    #[error("field has no embedded base field")]
    NotAnExtension,
    #[error("value {value} is not an element of a field of order {order}")]
    ElementOutOfRange { value: u64, order: u64 },
    #[error("coordinate vector has the wrong length or an out-of-range entry")]
    BadCoordinates,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("element has multiplicative order {actual}, expected {expected}")]
    WrongOrder { expected: u64, actual: u64 },
    #[error("element does not lie in the base field")]
    NotInBaseField,
    #[error("modulus {0} is too small")]
    InvalidModulus(u64),
    #[error("{q} is not invertible modulo {modulus}")]
    NotCoprime { q: u64, modulus: u64 },
    #[error("internal error: {0}")]
    Internal(&'static str),
}

/// Cardinality of the field the minimal polynomial is taken over: the
/// embedded base field, or the prime field for a plain field.
fn base_of(ext: &Arc<Field>) -> Result<Arc<Field>, AlgebraError> {
    match ext.base_field() {
        Some(b) => Ok(b.clone()),
        None => make_field(ext.characteristic(), 1),
    }
}

/// Minimal polynomial over the base field of `beta^exponent`, where `beta`
/// has multiplicative order exactly `order`:
/// `prod_{j in C_e} (x - beta^j)` with `C_e` the `q`-cyclotomic coset of
/// `exponent mod order`.
pub fn minimal_polynomial(
    ext: &Arc<Field>,
    beta: FieldElem,
    order: u64,
    exponent: i64,
) -> Result<Poly, AlgebraError> {
    let actual = ext
        .multiplicative_order(beta)
        .ok_or(AlgebraError::WrongOrder {
            expected: order,
            actual: 0,
        })?;
    if actual != order {
        return Err(AlgebraError::WrongOrder {
            expected: order,
            actual,
        });
    }
    let base = base_of(ext)?;
    let q = base.order() % order;
    let e = exponent.rem_euclid(order as i64) as u64;
    let mut product = Poly::one(ext.clone());
    let mut j = e;
    loop {
        let root = ext.pow(beta, j);
        let factor = Poly::new(ext.clone(), vec![ext.neg(root), FieldElem::ONE]);
        product = product.mul(&factor)?;
        j = arith::mul_mod(j, q, order);
        if j == e {
            break;
        }
    }
    let coeffs = product
        .coeffs()
        .iter()
        .map(|&c| restrict_to(ext, &base, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(base, coeffs))
}

fn restrict_to(ext: &Field, base: &Field, c: FieldElem) -> Result<FieldElem, AlgebraError> {
    if ext.base_field().is_some() {
        ext.restrict(c)?.ok_or(AlgebraError::NotInBaseField)
    } else if c.value() < base.order() {
        Ok(c)
    } else {
        Err(AlgebraError::NotInBaseField)
    }
}

/// Relative trace `a + a^q + ... + a^(q^(l-1))` onto the base field.
pub fn trace(ext: &Field, a: FieldElem) -> Result<FieldElem, AlgebraError> {
    ext.trace(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn splitting(q_p: u64, q_s: u32, two_n: u64) -> (Arc<Field>, Arc<Field>, FieldElem) {
        let base = make_field(q_p, q_s).unwrap();
        let l = ord_mod(base.order(), two_n).unwrap() as u32;
        let ext = extend_field(&base, l).unwrap();
        let beta = ext.pow(ext.primitive(), (ext.order() - 1) / two_n);
        (base, ext, beta)
    }

    #[test]
    fn minimal_polynomial_examples() {
        let (base, ext, beta) = splitting(3, 1, 80);
        let m0 = minimal_polynomial(&ext, beta, 80, 0).unwrap();
        assert_eq!(m0, Poly::from_ints(base.clone(), &[-1, 1]));
        let m40 = minimal_polynomial(&ext, beta, 80, 40).unwrap();
        assert_eq!(m40, Poly::from_ints(base.clone(), &[1, 1]));
        let m1 = minimal_polynomial(&ext, beta, 80, 1).unwrap();
        assert_eq!(m1.degree(), Some(4));
        assert!(m1.is_monic());
        for j in [1u64, 3, 9, 27] {
            assert!(m1.eval_in(&ext, ext.pow(beta, j)).unwrap().is_zero());
        }
        assert!(!m1.eval_in(&ext, ext.pow(beta, 5)).unwrap().is_zero());
    }

    #[test]
    fn minimal_polynomials_divide_x_2n_minus_1() {
        for (p, s, two_n) in [
            (3u64, 1u32, 80u64),
            (5, 1, 26),
            (3, 2, 82),
            (7, 1, 48),
            (3, 1, 244),
        ] {
            let (base, ext, beta) = splitting(p, s, two_n);
            let target = Poly::monomial(base.clone(), FieldElem::ONE, two_n as usize)
                .sub(&Poly::one(base.clone()))
                .unwrap();
            let mut e = 1u64;
            while e < two_n {
                let m = minimal_polynomial(&ext, beta, two_n, e as i64).unwrap();
                let (_, r) = target.div_rem(&m).unwrap();
                assert!(r.is_zero(), "q={} 2n={two_n} e={e}", base.order());
                let mut size = 1;
                let mut j = e * base.order() % two_n;
                while j != e {
                    j = j * base.order() % two_n;
                    size += 1;
                }
                assert_eq!(m.degree(), Some(size));
                e += 2;
            }
        }
    }

    #[test]
    fn wrong_order_is_rejected() {
        let (_, ext, beta) = splitting(3, 1, 80);
        let b2 = ext.mul(beta, beta);
        assert!(matches!(
            minimal_polynomial(&ext, b2, 80, 1),
            Err(AlgebraError::WrongOrder {
                expected: 80,
                actual: 40
            })
        ));
    }

    #[test]
    fn x40_plus_1_vanishes_at_beta() {
        let (base, ext, beta) = splitting(3, 1, 80);
        let f = Poly::monomial(base.clone(), FieldElem::ONE, 40)
            .add(&Poly::one(base))
            .unwrap();
        assert!(f.eval_in(&ext, beta).unwrap().is_zero());
    }
}
