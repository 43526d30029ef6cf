//! Brouwer-Zimmermann: enumerate low-weight messages on several
//! systematic generator matrices whose information sets overlap as little
//! as possible. After all messages of weight `<= w` on every matrix, an
//! unseen codeword has weight at least `sum_j max(0, w + 1 - (k - r_j))`,
//! where `r_j` counts the columns first covered by matrix `j`.
//!
//! When a proven lower bound is supplied but not yet met, extra random
//! information sets are searched for a codeword reaching it.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{DistanceResult, LowerProvenance, Method, Systematic, Work};
use crate::algebra::binomial;
use crate::bounds::Bound;
use crate::codes::linear::{LinearCode, SymbolTables};

/// Share of the remaining budget one random information set may use.
const RANDOM_ROUND_SHARE: u64 = 8;

struct Matrix {
    sys: Systematic,
    scaled: Vec<u8>,
    /// Columns not covered by earlier matrices.
    own: usize,
}

/// Messages of weight exactly `w` up to scalars.
fn level_cost(k: usize, w: usize, q: u64) -> u128 {
    if w == 0 || w > k {
        return 0;
    }
    binomial(k as u64, w as u64).saturating_mul((q as u128 - 1).saturating_pow(w as u32 - 1))
}

/// Lightest codeword among messages of weight exactly `w` whose first
/// nonzero symbol is 1. Returns `(weight, message)`.
fn best_at_weight(m: &Matrix, t: &SymbolTables, w: usize) -> Option<(usize, Vec<(usize, u8)>)> {
    let k = m.sys.k();
    if w == 0 || w > k {
        return None;
    }
    let parts: Vec<_> = (0..=k - w)
        .into_par_iter()
        .map(|first| {
            let mut search = Search::new(m, t, w);
            search.chosen.push((first, 1));
            search.load(0, first, 1);
            search.descend(1, first + 1);
            search.best.map(|msg| (search.best_weight, msg))
        })
        .collect();
    parts
        .into_iter()
        .flatten()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
}

struct Search<'a> {
    m: &'a Matrix,
    t: &'a SymbolTables,
    w: usize,
    q: usize,
    r: usize,
    /// Partial sums of the redundancy part, one per depth.
    partial: Vec<u8>,
    chosen: Vec<(usize, u8)>,
    best_weight: usize,
    best: Option<Vec<(usize, u8)>>,
}

impl<'a> Search<'a> {
    fn new(m: &'a Matrix, t: &'a SymbolTables, w: usize) -> Self {
        let r = m.sys.r();
        Search {
            m,
            t,
            w,
            q: t.q(),
            r,
            partial: vec![0; r * w],
            chosen: Vec::with_capacity(w),
            best_weight: usize::MAX,
            best: None,
        }
    }

    fn row(&self, pos: usize, c: u8) -> &'a [u8] {
        let r = self.r;
        &self.m.scaled[(pos * self.q + c as usize) * r..][..r]
    }

    /// `partial[depth] = partial[depth-1] + c * a[pos]`.
    fn load(&mut self, depth: usize, pos: usize, c: u8) {
        let r = self.r;
        let row = self.row(pos, c);
        let (before, after) = self.partial.split_at_mut(depth * r);
        let dst = &mut after[..r];
        if depth == 0 {
            dst.copy_from_slice(row);
        } else {
            let src = &before[(depth - 1) * r..];
            for ((d, &s), &y) in dst.iter_mut().zip(src).zip(row) {
                *d = self.t.add(s, y);
            }
        }
    }

    fn descend(&mut self, depth: usize, from: usize) {
        let (k, w, r) = (self.m.sys.k(), self.w, self.r);
        if depth == w {
            let red = &self.partial[(w - 1) * r..w * r];
            let weight = w + red.iter().filter(|&&x| x != 0).count();
            if weight < self.best_weight {
                self.best_weight = weight;
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        if depth == w - 1 {
            // last symbol: count weight directly, stopping once no better
            let prev = &self.partial[(depth - 1) * r..depth * r];
            for pos in from..k {
                for c in 1..self.q as u8 {
                    let row = self.row(pos, c);
                    let limit = self.best_weight.saturating_sub(w);
                    let mut cnt = 0;
                    for (&s, &y) in prev.iter().zip(row) {
                        cnt += (self.t.add(s, y) != 0) as usize;
                        if cnt >= limit {
                            break;
                        }
                    }
                    if cnt < limit {
                        self.best_weight = w + cnt;
                        let mut msg = self.chosen.clone();
                        msg.push((pos, c));
                        self.best = Some(msg);
                    }
                }
            }
            return;
        }
        for pos in from..=k - (w - depth) {
            for c in 1..self.q as u8 {
                self.chosen.push((pos, c));
                self.load(depth, pos, c);
                self.descend(depth + 1, pos + 1);
                self.chosen.pop();
            }
        }
    }
}

fn message(k: usize, entries: &[(usize, u8)]) -> Vec<u8> {
    let mut msg = vec![0u8; k];
    entries.iter().for_each(|&(i, c)| msg[i] = c);
    msg
}

/// Minimum distance by Brouwer-Zimmermann. `known` is a proven lower bound
/// used as the stopping target. Encodes at most `budget` messages; the
/// column order of each information set comes from `seed`.
pub fn min_distance_bz(
    code: &LinearCode,
    known: Bound<LowerProvenance>,
    budget: u64,
    seed: u64,
) -> DistanceResult {
    if code.k() == 0 {
        return DistanceResult::zero_code(code);
    }
    let t = code.tables();
    let (n, k, q) = (code.n(), code.k(), code.q());
    let mut res = DistanceResult::bracket(code, known);
    res.method = Method::BrouwerZimmermann;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);

    let mut used = vec![false; n];
    let mut mats = Vec::new();
    loop {
        let order: Vec<usize> = perm
            .iter()
            .copied()
            .filter(|&c| !used[c])
            .chain(perm.iter().copied().filter(|&c| used[c]))
            .collect();
        let sys = Systematic::new(code.rows(), n, &order, t);
        let own = sys.info.iter().filter(|&&c| !used[c]).count();
        if own == 0 {
            break;
        }
        sys.info.iter().for_each(|&c| used[c] = true);
        let scaled = sys.scaled_rows(t);
        mats.push(Matrix { sys, scaled, own });
        if used.iter().all(|&u| u) {
            break;
        }
    }

    let mut spent: u128 = 0;
    let budget = budget as u128;
    let mut work = Work {
        information_sets: mats.len() as u64,
        ..Work::default()
    };
    let bound_after = |w: usize, done: usize| -> u64 {
        mats.iter()
            .enumerate()
            .map(|(j, m)| {
                let reach = if j < done { w + 1 } else { w };
                reach.saturating_sub(k - m.own) as u64
            })
            .sum()
    };
    'levels: for w in 1..=k {
        for (j, m) in mats.iter().enumerate() {
            let cost = level_cost(k, w, q);
            if spent + cost > budget {
                break 'levels;
            }
            spent += cost;
            if let Some((_, entries)) = best_at_weight(m, t, w) {
                res.offer_witness(m.sys.codeword(&message(k, &entries), t), t);
            }
            // codewords already seen weigh at least `upper`
            let bound = bound_after(w, j + 1).min(res.upper.value);
            res.raise_lower(bound, LowerProvenance::BrouwerZimmermann);
            if res.exact {
                break 'levels;
            }
        }
    }

    // random information sets, hunting for a codeword at the known bound
    while !res.exact && res.upper.value > known.value {
        let remaining = budget.saturating_sub(spent);
        let cap = (remaining / RANDOM_ROUND_SHARE as u128).max(remaining.min(1 << 16));
        let mut depth = 0;
        let mut round_cost = 0;
        while depth < k && round_cost + level_cost(k, depth + 1, q) <= cap {
            depth += 1;
            round_cost += level_cost(k, depth, q);
        }
        if depth == 0 {
            break;
        }
        perm.shuffle(&mut rng);
        let sys = Systematic::new(code.rows(), n, &perm, t);
        let scaled = sys.scaled_rows(t);
        let m = Matrix {
            sys,
            scaled,
            own: 0,
        };
        work.information_sets += 1;
        for w in 1..=depth {
            spent += level_cost(k, w, q);
            if let Some((_, entries)) = best_at_weight(&m, t, w) {
                res.offer_witness(m.sys.codeword(&message(k, &entries), t), t);
            }
            if res.upper.value <= known.value {
                break;
            }
        }
    }
    work.messages = spent.min(u64::MAX as u128) as u64;
    res.work = work;
    res
}
