//! Support search: a codeword of weight `w` exists iff some `w` columns of
//! the parity-check matrix are linearly dependent. Supports are scanned
//! weight by weight, ordered by their two largest columns, with the
//! elimination state extended one column at a time.

use rayon::prelude::*;

use super::{DistanceResult, LowerProvenance, Method, Work};
use crate::algebra::binomial;
use crate::bounds::Bound;
use crate::codes::linear::{LinearCode, SymbolTables};

/// Supports handed to the thread pool per batch.
const BATCH_SUPPORTS: u128 = 1 << 16;

/// Incremental echelon basis of the chosen columns, remembering each basis
/// vector as a combination of the chosen columns.
struct Basis<'a> {
    t: &'a SymbolTables,
    r: usize,
    w: usize,
    depth: usize,
    vecs: Vec<u8>,
    combs: Vec<u8>,
    pivots: Vec<usize>,
    scratch: Vec<u8>,
    scratch_comb: Vec<u8>,
}

impl<'a> Basis<'a> {
    fn new(t: &'a SymbolTables, r: usize, w: usize) -> Self {
        Basis {
            t,
            r,
            w,
            depth: 0,
            vecs: vec![0; r * w],
            combs: vec![0; w * w],
            pivots: vec![0; w],
            scratch: vec![0; r],
            scratch_comb: vec![0; w],
        }
    }

    /// Add a column. Returns the kernel combination if it is dependent on
    /// the columns already present; otherwise extends the basis.
    fn push(&mut self, col: &[u8]) -> Option<Vec<u8>> {
        let (t, r, w, d) = (self.t, self.r, self.w, self.depth);
        self.scratch.copy_from_slice(col);
        self.scratch_comb.iter_mut().for_each(|c| *c = 0);
        self.scratch_comb[d] = 1;
        for i in 0..d {
            let c = self.scratch[self.pivots[i]];
            if c != 0 {
                let f = t.neg(c);
                t.axpy(&mut self.scratch, f, &self.vecs[i * r..(i + 1) * r]);
                t.axpy(&mut self.scratch_comb, f, &self.combs[i * w..(i + 1) * w]);
            }
        }
        let Some(p) = self.scratch.iter().position(|&x| x != 0) else {
            return Some(self.scratch_comb.clone());
        };
        let inv = t.inv(self.scratch[p]);
        for (dst, &s) in self.vecs[d * r..(d + 1) * r].iter_mut().zip(&self.scratch) {
            *dst = t.mul(s, inv);
        }
        for (dst, &s) in self.combs[d * w..(d + 1) * w]
            .iter_mut()
            .zip(&self.scratch_comb)
        {
            *dst = t.mul(s, inv);
        }
        self.pivots[d] = p;
        self.depth += 1;
        None
    }

    fn pop(&mut self) {
        self.depth -= 1;
    }
}

/// Depth-first search over the remaining `left` columns below `below`.
fn dfs(
    basis: &mut Basis,
    cols: &[Vec<u8>],
    chosen: &mut Vec<usize>,
    below: usize,
    left: usize,
) -> Option<Vec<(usize, u8)>> {
    if left == 0 {
        return None;
    }
    for c in (left - 1)..below {
        chosen.push(c);
        if let Some(comb) = basis.push(&cols[c]) {
            let word = chosen.iter().zip(comb).map(|(&j, v)| (j, v)).collect();
            chosen.pop();
            return Some(word);
        }
        let found = dfs(basis, cols, chosen, c, left - 1);
        basis.pop();
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Search for a dependent set among columns `{top, second} ∪ S` with
/// `|S| = w - 2`, `S ⊂ [0, second)`.
fn search_pair(
    cols: &[Vec<u8>],
    t: &SymbolTables,
    w: usize,
    top: usize,
    second: usize,
) -> Option<Vec<(usize, u8)>> {
    let r = cols[0].len();
    let mut basis = Basis::new(t, r, w);
    let mut chosen = vec![top];
    if let Some(comb) = basis.push(&cols[top]) {
        return Some(vec![(top, comb[0])]);
    }
    chosen.push(second);
    if let Some(comb) = basis.push(&cols[second]) {
        return Some(chosen.iter().zip(comb).map(|(&j, v)| (j, v)).collect());
    }
    dfs(&mut basis, cols, &mut chosen, second, w - 2)
}

/// Smallest-weight codeword of weight in `known.value..=w_max`, assuming no
/// codeword is lighter than `known.value`. Scans at most about `budget`
/// supports over all weights; when the scan completes without a hit the
/// lower bound becomes `w_max + 1`.
pub fn min_weight_support_search(
    code: &LinearCode,
    known: Bound<LowerProvenance>,
    w_max: usize,
    budget: u64,
) -> DistanceResult {
    let mut res = DistanceResult::bracket(code, known);
    res.method = Method::SupportSearch;
    if code.k() == 0 {
        return DistanceResult::zero_code(code);
    }
    let t = code.tables();
    let n = code.n();
    let h = code.parity_check();
    let cols: Vec<Vec<u8>> = (0..n)
        .map(|j| h.iter().map(|row| row[j]).collect())
        .collect();
    let mut scanned: u128 = 0;
    let budget = budget as u128;
    let start = (known.value as usize).max(1);
    for w in start..=w_max.min(n) {
        if res.exact || scanned >= budget {
            break;
        }
        let outcome = if w == 1 {
            let hit = cols.iter().position(|c| c.iter().all(|&x| x == 0));
            scanned += hit.map_or(n, |j| j + 1) as u128;
            match hit {
                Some(j) => Level::Found(vec![(j, 1u8)]),
                None => Level::Clear,
            }
        } else {
            scan_level(&cols, t, w, &mut scanned, budget)
        };
        match outcome {
            Level::Found(word) => {
                let mut v = vec![0u8; n];
                word.into_iter().for_each(|(j, c)| v[j] = c);
                res.offer_witness(v, t);
            }
            Level::Clear => res.raise_lower(w as u64 + 1, LowerProvenance::SupportSearch),
            Level::OutOfBudget => break,
        }
    }
    res.work = Work {
        supports: scanned.min(u64::MAX as u128) as u64,
        ..Work::default()
    };
    res
}

enum Level {
    Found(Vec<(usize, u8)>),
    Clear,
    OutOfBudget,
}

/// Scan all `w`-subsets in order of their largest pair of columns. On a hit,
/// `scanned` counts the supports in every pair up to and including the hit.
fn scan_level(
    cols: &[Vec<u8>],
    t: &SymbolTables,
    w: usize,
    scanned: &mut u128,
    budget: u128,
) -> Level {
    let n = cols.len();
    let below = |second: usize| binomial(second as u64, (w - 2) as u64);
    let mut pairs = (1..n).flat_map(|top| (0..top).map(move |second| (top, second)));
    let mut done_level = false;
    while !done_level {
        if *scanned >= budget {
            return Level::OutOfBudget;
        }
        let mut batch = Vec::new();
        let mut batch_supports: u128 = 0;
        while batch_supports < BATCH_SUPPORTS {
            match pairs.next() {
                Some((top, second)) => {
                    let s = below(second);
                    if s > 0 {
                        batch.push((top, second));
                        batch_supports += s;
                    }
                }
                None => {
                    done_level = true;
                    break;
                }
            }
        }
        let hit = batch
            .par_iter()
            .enumerate()
            .find_map_first(|(i, &(top, second))| {
                search_pair(cols, t, w, top, second).map(|word| (i, word))
            });
        if let Some((i, word)) = hit {
            *scanned += batch[..=i].iter().map(|&(_, s)| below(s)).sum::<u128>();
            return Level::Found(word);
        }
        *scanned += batch_supports;
    }
    Level::Clear
}
