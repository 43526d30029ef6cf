//! Generic linear codes over small fields as `u8` symbol matrices, with
//! precomputed field tables. This is the representation the distance
//! engines work on.

use std::sync::Arc;

use crate::algebra::{Field, FieldElem, Poly};

use super::CodeError;

/// Largest field order supported by the symbol tables.
pub const MAX_SYMBOL_FIELD: u64 = 256;

/// Addition, multiplication, negation and inversion tables of `GF(q)`,
/// indexed by packed element values.
#[derive(Clone, Debug)]
pub struct SymbolTables {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl SymbolTables {
    pub fn new(field: &Field) -> Result<Self, CodeError> {
        if field.order() > MAX_SYMBOL_FIELD {
            return Err(CodeError::FieldTooLargeForTables(field.order()));
        }
        let q = field.order() as usize;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            let ea = FieldElem::from_raw(a as u64);
            neg[a] = field.neg(ea).value() as u8;
            inv[a] = field.inv(ea).map_or(0, |x| x.value() as u8);
            for b in 0..q {
                let eb = FieldElem::from_raw(b as u64);
                add[a * q + b] = field.add(ea, eb).value() as u8;
                mul[a * q + b] = field.mul(ea, eb).value() as u8;
            }
        }
        Ok(SymbolTables {
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Inverse of a nonzero symbol; 0 maps to 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// Row of the multiplication table for a fixed left factor.
    #[inline]
    pub fn mul_row(&self, a: u8) -> &[u8] {
        &self.mul[a as usize * self.q..(a as usize + 1) * self.q]
    }

    /// Row of the addition table for a fixed left operand.
    #[inline]
    pub fn add_row(&self, a: u8) -> &[u8] {
        &self.add[a as usize * self.q..(a as usize + 1) * self.q]
    }

    /// `dst += c * src`, element-wise.
    pub fn axpy(&self, dst: &mut [u8], c: u8, src: &[u8]) {
        if c == 0 {
            return;
        }
        let mrow = self.mul_row(c);
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.add(*d, mrow[s as usize]);
        }
    }
}

/// Reduced row echelon form in place; returns pivot columns. Zero rows are
/// dropped.
pub fn rref(rows: &mut Vec<Vec<u8>>, t: &SymbolTables) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = t.inv(rows[r][c]);
        if inv != 1 {
            let mrow = t.mul_row(inv).to_vec();
            rows[r].iter_mut().for_each(|x| *x = mrow[*x as usize]);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = t.neg(row[c]);
                t.axpy(row, f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A linear `[n, k]` code over `GF(q)`, `q <= 256`, given by a full-rank
/// generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    tables: Arc<SymbolTables>,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl LinearCode {
    /// Code spanned by `rows`; dependent rows are removed.
    pub fn from_rows(field: Arc<Field>, n: usize, rows: Vec<Vec<u8>>) -> Result<Self, CodeError> {
        let tables = Arc::new(SymbolTables::new(&field)?);
        if rows.iter().any(|r| r.len() != n) {
            return Err(CodeError::LengthMismatch {
                expected: n,
                got: rows.iter().map(|r| r.len()).find(|&l| l != n).unwrap_or(0),
            });
        }
        let mut reduced = rows.clone();
        let rank = rref(&mut reduced, &tables).len();
        let rows = if rank == rows.len() { rows } else { reduced };
        Ok(LinearCode {
            field,
            tables,
            n,
            rows,
        })
    }

    /// Code generated by `x^i g(x)` for `0 <= i < n - deg g`.
    pub fn from_generator_poly(g: &Poly, n: usize) -> Result<Self, CodeError> {
        let deg = g.degree().ok_or(CodeError::ZeroGenerator)?;
        if deg > n {
            return Err(CodeError::LengthMismatch {
                expected: n,
                got: deg,
            });
        }
        let gs: Vec<u8> = g.coeffs().iter().map(|c| c.value() as u8).collect();
        let rows = (0..n - deg)
            .map(|i| {
                let mut r = vec![0u8; n];
                r[i..i + gs.len()].copy_from_slice(&gs);
                r
            })
            .collect();
        let tables = Arc::new(SymbolTables::new(g.field())?);
        Ok(LinearCode {
            field: g.field().clone(),
            tables,
            n,
            rows,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn tables(&self) -> &Arc<SymbolTables> {
        &self.tables
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// `sum_i msg_i * row_i`.
    pub fn encode(&self, msg: &[u8]) -> Result<Vec<u8>, CodeError> {
        if msg.len() != self.k() {
            return Err(CodeError::LengthMismatch {
                expected: self.k(),
                got: msg.len(),
            });
        }
        let mut out = vec![0u8; self.n];
        for (&c, row) in msg.iter().zip(&self.rows) {
            self.tables.axpy(&mut out, c, row);
        }
        Ok(out)
    }

    /// Generator matrix in reduced row echelon form, with pivot columns.
    pub fn systematic(&self) -> (Vec<Vec<u8>>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let pivots = rref(&mut rows, &self.tables);
        (rows, pivots)
    }

    /// Parity-check matrix `H` with `H c^T = 0` exactly on the code, one row
    /// per non-pivot column of the systematic generator.
    pub fn parity_check(&self) -> Vec<Vec<u8>> {
        let (g, pivots) = self.systematic();
        let t = &self.tables;
        let mut is_pivot = vec![false; self.n];
        pivots.iter().for_each(|&p| is_pivot[p] = true);
        (0..self.n)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut h = vec![0u8; self.n];
                h[j] = 1;
                for (row, &p) in g.iter().zip(&pivots) {
                    h[p] = t.neg(row[j]);
                }
                h
            })
            .collect()
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        word.len() == self.n
            && self.parity_check().iter().all(|h| {
                h.iter().zip(word).fold(0u8, |acc, (&a, &b)| {
                    self.tables.add(acc, self.tables.mul(a, b))
                }) == 0
            })
    }

    /// The dual code.
    pub fn dual(&self) -> Result<LinearCode, CodeError> {
        LinearCode::from_rows(self.field.clone(), self.n, self.parity_check())
    }
}

pub fn weight(word: &[u8]) -> usize {
    word.iter().filter(|&&c| c != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    #[test]
    fn tables_match_field() {
        let f = make_field(3, 2).unwrap();
        let t = SymbolTables::new(&f).unwrap();
        for a in 0..9u8 {
            if a != 0 {
                assert_eq!(t.mul(a, t.inv(a)), 1);
            }
            assert_eq!(t.add(a, t.neg(a)), 0);
        }
        assert!(SymbolTables::new(&make_field(17, 2).unwrap()).is_err());
    }

    #[test]
    fn parity_check_annihilates_code() {
        let f = make_field(5, 1).unwrap();
        let code = LinearCode::from_rows(
            f,
            6,
            vec![
                vec![1, 2, 3, 4, 0, 1],
                vec![0, 1, 1, 1, 1, 1],
                vec![2, 4, 1, 3, 0, 2],
            ],
        )
        .unwrap();
        assert_eq!(code.k(), 2);
        let h = code.parity_check();
        assert_eq!(h.len(), 4);
        for msg in [[1u8, 0], [0, 1], [3, 4]] {
            assert!(code.contains(&code.encode(&msg).unwrap()));
        }
        assert!(!code.contains(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(code.dual().unwrap().k(), 4);
    }
}
