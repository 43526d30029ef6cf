//! Exhaustive enumeration of one message per scalar class (first nonzero
//! symbol equal to 1), walking the free symbols in a q-ary Gray code so each
//! step adds a single scaled row.

use rayon::prelude::*;

use super::{DistanceError, DistanceResult, LowerProvenance, Method, Systematic, Work};
use crate::algebra::checked_pow;
use crate::bounds::Bound;
use crate::codes::linear::{LinearCode, SymbolTables};

/// Enumeration tasks per leading position aim for at least this many.
const TASKS_PER_LEAD: u64 = 64;

fn check_budget(code: &LinearCode, budget: u64) -> Result<(), DistanceError> {
    match checked_pow(code.q(), code.k() as u32) {
        Some(qk) if qk <= budget => Ok(()),
        _ => Err(DistanceError::BudgetExceeded {
            q: code.q(),
            k: code.k(),
            budget,
        }),
    }
}

/// Calls `visit(acc, weight, message)` once per scalar class of nonzero
/// messages. Returns the per-task accumulators in enumeration order.
fn for_each_class<A, M, V>(sys: &Systematic, t: &SymbolTables, make: M, visit: V) -> Vec<A>
where
    A: Send,
    M: Fn() -> A + Sync,
    V: Fn(&mut A, usize, &[u8]) + Sync,
{
    let (q, k, r) = (t.q(), sys.k(), sys.r());
    let scaled = sys.scaled_rows(t);
    let mut tasks = Vec::new();
    for lead in 0..k {
        let free = k - lead - 1;
        let mut split = 0;
        while split < free && (q as u64).pow(split as u32) < TASKS_PER_LEAD {
            split += 1;
        }
        for prefix in 0..(q as u64).pow(split as u32) {
            tasks.push((lead, split, prefix));
        }
    }
    tasks
        .into_par_iter()
        .map(|(lead, split, prefix)| {
            let mut acc = make();
            let mut msg = vec![0u8; k];
            msg[lead] = 1;
            let mut p = prefix;
            for pos in k - split..k {
                msg[pos] = (p % q as u64) as u8;
                p /= q as u64;
            }
            let mut red = vec![0u8; r];
            for (i, &m) in msg.iter().enumerate() {
                if m != 0 {
                    let row = &scaled[(i * q + m as usize) * r..][..r];
                    for (x, &y) in red.iter_mut().zip(row) {
                        *x = t.add(*x, y);
                    }
                }
            }
            let mut mw = msg.iter().filter(|&&m| m != 0).count();
            visit(&mut acc, mw + red.iter().filter(|&&x| x != 0).count(), &msg);
            let inner = k - lead - 1 - split;
            let steps = (q as u64).pow(inner as u32);
            for step in 1..steps {
                let mut s = step;
                let mut i = 0;
                while s % q as u64 == 0 {
                    s /= q as u64;
                    i += 1;
                }
                let pos = lead + 1 + i;
                let old = msg[pos];
                let new = ((old as usize + 1) % q) as u8;
                msg[pos] = new;
                if old == 0 {
                    mw += 1;
                } else if new == 0 {
                    mw -= 1;
                }
                let delta = t.sub(new, old) as usize;
                let row = &scaled[(pos * q + delta) * r..][..r];
                let mut w = 0;
                for (x, &y) in red.iter_mut().zip(row) {
                    *x = t.add(*x, y);
                    w += (*x != 0) as usize;
                }
                visit(&mut acc, mw + w, &msg);
            }
            acc
        })
        .collect()
}

/// Exact minimum distance by enumerating all `(q^k - 1)/(q - 1)` scalar
/// classes. Fails when `q^k` exceeds `budget`.
pub fn min_distance_exhaustive(
    code: &LinearCode,
    budget: u64,
) -> Result<DistanceResult, DistanceError> {
    check_budget(code, budget)?;
    if code.k() == 0 {
        return Ok(DistanceResult::zero_code(code));
    }
    let t = code.tables();
    let sys = Systematic::from_code(code);
    let parts = for_each_class(
        &sys,
        t,
        || (usize::MAX, Vec::new(), 0u64),
        |acc, w, msg| {
            acc.2 += 1;
            if w < acc.0 {
                acc.0 = w;
                acc.1 = msg.to_vec();
            }
        },
    );
    let messages = parts.iter().map(|p| p.2).sum();
    let (w, msg, _) = parts
        .into_iter()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
        .expect("k >= 1 gives at least one task");
    let mut res = DistanceResult::bracket(
        code,
        Bound {
            value: w as u64,
            source: LowerProvenance::Exhaustive,
        },
    );
    res.offer_witness(sys.codeword(&msg, t), t);
    res.method = Method::Exhaustive;
    res.work = Work {
        messages,
        ..Work::default()
    };
    debug_assert!(res.exact);
    Ok(res)
}

/// Number of codewords of each weight `0..=n`. Fails when `q^k` exceeds
/// `budget`.
pub fn weight_distribution(code: &LinearCode, budget: u64) -> Result<Vec<u64>, DistanceError> {
    check_budget(code, budget)?;
    let n = code.n();
    let mut dist = vec![0u64; n + 1];
    dist[0] = 1;
    if code.k() == 0 {
        return Ok(dist);
    }
    let sys = Systematic::from_code(code);
    let parts = for_each_class(
        &sys,
        code.tables(),
        || vec![0u64; n + 1],
        |acc, w, _| acc[w] += 1,
    );
    let units = code.q() - 1;
    for part in parts {
        for (d, c) in dist.iter_mut().zip(part) {
            *d += c * units;
        }
    }
    dist[0] = 1;
    Ok(dist)
}
