use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Field, FieldElem};

/// Dense univariate polynomial over a [`Field`], coefficients ascending.
/// The coefficient vector never has a trailing zero.
#[derive(Clone)]
pub struct Poly {
    field: Arc<Field>,
    coeffs: Vec<FieldElem>,
}

/// One serialised coefficient: an integer over a prime field, otherwise the
/// prime-field coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Int(u64),
    Coords(Vec<u64>),
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Poly[{}]{:?}",
            self.field,
            self.coeffs.iter().map(|c| c.value()).collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                (_, v) => write!(f, "{v}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: Arc<Field>, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Arc<Field>) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Arc<Field>) -> Self {
        Poly {
            field,
            coeffs: vec![FieldElem::ONE],
        }
    }

    /// `c * x^deg`.
    pub fn monomial(field: Arc<Field>, c: FieldElem, deg: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(field, coeffs)
    }

    /// Polynomial with integer coefficients mapped into the prime subfield.
    pub fn from_ints(field: Arc<Field>, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.from_int(c)).collect();
        Poly::new(field, cs)
    }

    /// `x^n + 1`.
    pub fn x_n_plus_one(field: Arc<Field>, n: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; n + 1];
        coeffs[n] = FieldElem::ONE;
        coeffs[0] = field.add(coeffs[0], FieldElem::ONE);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FieldElem::ONE
    }

    fn same_field(&self, other: &Poly) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(f.clone(), coeffs))
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        let f = &self.field;
        Poly::new(
            f.clone(),
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.same_field(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f.clone()));
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f.clone(), out))
    }

    /// Quotient and remainder with `self = divisor * quot + rem`,
    /// `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), AlgebraError> {
        self.same_field(divisor)?;
        let f = &self.field;
        let db = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = f
            .inv(divisor.leading())
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![FieldElem::ZERO; rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - db] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, d));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(f.clone(), quot), Poly::new(f.clone(), rem)))
    }

    /// Monic normalisation; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.same_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple; zero if either operand is zero.
    pub fn lcm(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field.clone()));
        }
        let g = self.gcd(other)?;
        let (q, _) = self.mul(other)?.div_rem(&g)?;
        Ok(q.monic())
    }

    /// Evaluation at a point of the same field.
    pub fn eval(&self, x: FieldElem) -> Result<FieldElem, AlgebraError> {
        if !self.field.contains(x) {
            return Err(AlgebraError::FieldMismatch);
        }
        let f = &self.field;
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c)))
    }

    /// Evaluation at a point of an extension whose embedded base field is
    /// this polynomial's field (or of any field of the same characteristic,
    /// when this polynomial lives over the prime field).
    pub fn eval_in(&self, ext: &Field, x: FieldElem) -> Result<FieldElem, AlgebraError> {
        if !ext.contains(x) {
            return Err(AlgebraError::FieldMismatch);
        }
        let embedded = self.embed_coeffs(ext)?;
        Ok(embedded
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| ext.add(ext.mul(acc, x), c)))
    }

    /// Coefficients mapped into `ext`.
    pub fn embed_coeffs(&self, ext: &Field) -> Result<Vec<FieldElem>, AlgebraError> {
        if ext.characteristic() != self.field.characteristic() {
            return Err(AlgebraError::FieldMismatch);
        }
        match ext.base_field() {
            Some(b) if **b == *self.field => self.coeffs.iter().map(|&c| ext.embed(c)).collect(),
            _ if self.field.degree() == 1 => Ok(self.coeffs.clone()),
            _ if *ext == *self.field => Ok(self.coeffs.clone()),
            _ => Err(AlgebraError::FieldMismatch),
        }
    }

    /// `g0^{-1} x^{deg g} g(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly, AlgebraError> {
        let c0 = self.coeff(0);
        let inv = self.field.inv(c0).ok_or(AlgebraError::ZeroConstantTerm)?;
        let rev: Vec<FieldElem> = self.coeffs.iter().rev().copied().collect();
        Ok(Poly::new(self.field.clone(), rev).scale(inv))
    }

    /// True when `reciprocal(self) = self`; false for zero constant term.
    pub fn is_self_reciprocal(&self) -> bool {
        self.is_monic() && self.reciprocal().is_ok_and(|r| r == *self)
    }

    /// `self(-x)`.
    pub fn neg_x(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { f.neg(c) } else { c })
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    /// Coefficient vector of length `n`, zero padded. Fails if the degree is
    /// `n` or more.
    pub fn to_vec(&self, n: usize) -> Option<Vec<FieldElem>> {
        if self.coeffs.len() > n {
            return None;
        }
        let mut v = self.coeffs.clone();
        v.resize(n, FieldElem::ZERO);
        Some(v)
    }

    pub fn to_json(&self) -> Vec<CoeffJson> {
        self.coeffs
            .iter()
            .map(|&c| {
                if self.field.degree() == 1 {
                    CoeffJson::Int(c.value())
                } else {
                    CoeffJson::Coords(self.field.coords(c))
                }
            })
            .collect()
    }

    pub fn from_json(field: Arc<Field>, coeffs: &[CoeffJson]) -> Result<Poly, AlgebraError> {
        let cs = coeffs
            .iter()
            .map(|c| match c {
                CoeffJson::Int(v) if field.degree() == 1 => field.elem(*v),
                CoeffJson::Coords(v) => field.from_coords(v),
                _ => Err(AlgebraError::BadCoordinates),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(field, cs))
    }
}

#[cfg(test)]
mod tests {
    use super::super::make_field;
    use super::*;
    use proptest::prelude::*;

    fn arb_poly(field: Arc<Field>, max_deg: usize) -> impl Strategy<Value = Poly> {
        let order = field.order();
        prop::collection::vec(0..order, 0..=max_deg + 1).prop_map(move |v| {
            Poly::new(
                field.clone(),
                v.into_iter().map(FieldElem::from_raw).collect(),
            )
        })
    }

    #[test]
    fn basic_examples() {
        let f3 = make_field(3, 1).unwrap();
        let x2m1 = Poly::from_ints(f3.clone(), &[-1, 0, 1]);
        let xm1 = Poly::from_ints(f3.clone(), &[-1, 1]);
        assert_eq!(x2m1.gcd(&xm1).unwrap(), xm1);
        assert_eq!(xm1.lcm(&xm1).unwrap(), xm1);
        assert_eq!(xm1.reciprocal().unwrap(), xm1);
        let xp2 = Poly::from_ints(f3.clone(), &[2, 1]);
        assert_eq!(xp2.reciprocal().unwrap(), xp2);
        assert!(matches!(
            Poly::from_ints(f3.clone(), &[0, 1]).reciprocal(),
            Err(AlgebraError::ZeroConstantTerm)
        ));
        assert!(matches!(
            x2m1.div_rem(&Poly::zero(f3.clone())),
            Err(AlgebraError::DivisionByZero)
        ));
        let f5 = make_field(5, 1).unwrap();
        assert!(matches!(
            x2m1.add(&Poly::one(f5)),
            Err(AlgebraError::FieldMismatch)
        ));
        assert_eq!(
            Poly::from_ints(f3.clone(), &[1, 1]).neg_x(),
            Poly::from_ints(f3, &[1, -1])
        );
    }

    #[test]
    fn json_round_trip() {
        let f9 = make_field(3, 2).unwrap();
        let p = Poly::new(
            f9.clone(),
            vec![FieldElem::from_raw(5), FieldElem::ZERO, FieldElem::ONE],
        );
        let j = p.to_json();
        assert_eq!(j[0], CoeffJson::Coords(vec![2, 1]));
        assert_eq!(Poly::from_json(f9, &j).unwrap(), p);
        let f7 = make_field(7, 1).unwrap();
        let p7 = Poly::from_ints(f7.clone(), &[3, 0, 6]);
        assert_eq!(
            p7.to_json(),
            vec![CoeffJson::Int(3), CoeffJson::Int(0), CoeffJson::Int(6)]
        );
        assert_eq!(Poly::from_json(f7, &p7.to_json()).unwrap(), p7);
    }

    proptest! {
        #[test]
        fn div_rem_identity(a in arb_poly(make_field(3, 2).unwrap(), 12),
                            b in arb_poly(make_field(3, 2).unwrap(), 6)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert!(r.degree() < b.degree());
            prop_assert_eq!(b.mul(&q).unwrap().add(&r).unwrap(), a);
        }

        #[test]
        fn reciprocal_is_involution(a in arb_poly(make_field(5, 1).unwrap(), 10)) {
            prop_assume!(!a.coeff(0).is_zero());
            prop_assert_eq!(a.reciprocal().unwrap().reciprocal().unwrap(), a.monic());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(make_field(7, 1).unwrap(), 8),
                            b in arb_poly(make_field(7, 1).unwrap(), 8)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b).unwrap();
            prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
            let l = a.lcm(&b).unwrap();
            prop_assert!(l.div_rem(&a).unwrap().1.is_zero());
            prop_assert_eq!(l.mul(&g).unwrap(), a.mul(&b).unwrap().monic());
        }

        #[test]
        fn eval_is_ring_homomorphism(a in arb_poly(make_field(3, 3).unwrap(), 6),
                                     b in arb_poly(make_field(3, 3).unwrap(), 6),
                                     x in 0u64..27) {
            let f = a.field().clone();
            let x = FieldElem::from_raw(x);
            let prod = a.mul(&b).unwrap().eval(x).unwrap();
            prop_assert_eq!(prod, f.mul(a.eval(x).unwrap(), b.eval(x).unwrap()));
        }
    }
}
