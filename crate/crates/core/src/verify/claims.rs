//! The registered claims and their grids.

use crate::algebra::arith::{mul_mod, prime_power};
use crate::algebra::{checked_pow, Poly};
use crate::bounds::{bch_bound, pang_bound_for_code, sphere_packing_max_d, BoundReport};
use crate::codes::linear::{rref, LinearCode};
use crate::codes::{
    build_code, dimension_formula, dimension_formula_max_delta, from_defining_set, mds_family,
    with_check_exponents, NegacyclicBchCode, Parameters,
};
use crate::cosets::{
    delta_formulas, delta_oracle, is_coset_leader, is_leader_by_sequence, leader_predicate_zhu,
    leader_range_limit, leader_range_size, non_leader_by_residue, small_modulus_leaders,
    LengthKind,
};
use crate::distance::{min_distance, weight_distribution, DistanceResult};

use super::{run_grid, Claim, Instance, Status, VerifyOptions};

pub(super) static REGISTRY: &[Claim] = &[
    Claim {
        id: "leaders-small-moduli",
        statement: "modulo q-1 every residue is a coset leader; modulo q+1 the leaders are 0..=(q+1)/2",
        grid: ("odd prime powers q <= 49", "odd prime powers q <= 243"),
        run: small_moduli,
    },
    Claim {
        id: "leaders-digit-rotation",
        statement: "modulo q^m-1, i is a leader iff no circular shift of its q-adic digits is smaller",
        grid: ("q in 3..=13, q^m <= 1e5, all residues", "q in 3..=13, q^m <= 1e6, all residues"),
        run: sequence_leader,
    },
    Claim {
        id: "leaders-window-test",
        statement: "modulo q^m+1, i is a leader iff i <= (q^m+1)/2 and i avoids every l q^(m-j) + h window",
        grid: ("q in 3..=13, q^m <= 1e5, all residues", "q in 3..=13, q^m <= 1e6, all residues"),
        run: window_test,
    },
    Claim {
        id: "leaders-residue-exclusion",
        statement: "modulo q^m+1, if some a = i q^j mod (q^m+1), 1 <= j < m, has 1 <= a < i or i + a > q^m+1 then i is not a leader",
        grid: ("q in 3..=13, q^m <= 1e5", "q in 3..=13, q^m <= 1e6"),
        run: residue_exclusion,
    },
    Claim {
        id: "leaders-low-range-minus",
        statement: "modulo q^m-1, for 1 <= i <= 2q^(m/2)-1 (even m) or q^((m+1)/2)-1 (odd m), i is a leader iff q does not divide i; coset size m, or m/2 at q^(m/2)+1",
        grid: ("q in 3..=13, q^m <= 1e6", "q in 3..=13, q^m <= 1e8"),
        run: |o| leader_range(o, LengthKind::Minus),
    },
    Claim {
        id: "leaders-low-range-plus",
        statement: "modulo q^m+1, for 1 <= i <= q^(m/2) (even m >= 4) or i < q^((m+1)/2)-q+1 (odd m >= 3), i is a leader iff q does not divide i; coset size 2m",
        grid: ("q in 3..=13, q^m <= 1e6", "q in 3..=13, q^m <= 1e8"),
        run: |o| leader_range(o, LengthKind::Plus),
    },
    Claim {
        id: "largest-odd-leaders-minus",
        statement: "closed forms of the three largest odd leaders modulo q^m-1 and their coset sizes",
        grid: ("q in 3..=13, m >= 2, q^m <= 1e6", "q in 3..=13, m >= 2, q^m <= 1e7"),
        run: |o| largest_odd_leaders(o, LengthKind::Minus),
    },
    Claim {
        id: "largest-odd-leaders-plus",
        statement: "closed forms of the three largest odd leaders modulo q^m+1 and their coset sizes",
        grid: ("q in 3..=13, m >= 2, q^m <= 1e6", "q in 3..=13, m >= 2, q^m <= 1e7"),
        run: |o| largest_odd_leaders(o, LengthKind::Plus),
    },
    Claim {
        id: "dimension-minus",
        statement: "n = (q^m-1)/2: dim C_(q,n,delta,0) = n - m ceil((2delta-3)(q-1)/2q) on the large-dimension range; d >= delta, or delta+1 when delta = (q+1)/2 mod q",
        grid: ("q in {3,5,7,9}, q^m <= 3^8, every delta", "q in {3,5,7,9,11,13}, q^m <= 3^10, every delta"),
        run: |o| dimension_range(o, LengthKind::Minus),
    },
    Claim {
        id: "dimension-plus",
        statement: "n = (q^m+1)/2: dim C_(q,n,delta,0) = n - 2m ceil((2delta-3)(q-1)/2q) on the large-dimension range; d >= 2delta-1, or 2delta+1 when delta = (q+1)/2 mod q",
        grid: ("q in {3,5,7,9}, q^m <= 3^8, every delta", "q in {3,5,7,9,11,13}, q^m <= 3^10, every delta"),
        run: |o| dimension_range(o, LengthKind::Plus),
    },
    Claim {
        id: "small-dimension-minus",
        statement: "n = (q^m-1)/2: between consecutive largest odd leaders the code has check polynomial M_delta1 [M_delta2 [M_delta3]], dimension m, m+kappa, 2m+kappa",
        grid: ("q in {3,5,7,9}, q^m <= 3^8, range endpoints", "q in {3,5,7,9}, q^m <= 3^8, every delta"),
        run: |o| small_dim(o, LengthKind::Minus),
    },
    Claim {
        id: "small-dimension-plus",
        statement: "n = (q^m+1)/2: between consecutive largest odd leaders the code has dimension kappa, 2m+kappa, 4m+kappa and d >= delta_i",
        grid: ("q in {3,5,7,9}, q^m <= 3^8, range endpoints", "q in {3,5,7,9}, q^m <= 3^8, every delta"),
        run: |o| small_dim(o, LengthKind::Plus),
    },
    Claim {
        id: "one-weight",
        statement: "n = (q^m-1)/2: the code with check polynomial M_delta1 is an [n, m] one-weight code of weight (q-1)q^(m-1)/2",
        grid: ("q in {3,5}, m in 2..=4, q^m <= 3^8", "q in {3,5,7,9}, q^m <= 3^10"),
        run: one_weight,
    },
    Claim {
        id: "distance-one-zero-plus",
        statement: "n = (q^m+1)/2: C_(q,n,2,0) = <M_1> is [n, n-2m, d], d = 5 (q = 3), 3 (odd m, q > 3), 4 (even m, q > 3); sphere-packing optimal for q = 3 or even m",
        grid: ("q in {3,5,7,9}, m in 2..=4, n <= 400", "q in {3,5,7,9}, m in 2..=5, n <= 2000"),
        run: plus_one_zero,
    },
    Claim {
        id: "distance-one-zero-minus",
        statement: "n = (q^m-1)/2: C_(q,n,2,0) = <M_1> is [n, n-m, d], d = 3 (q = 3) or 2, sphere-packing optimal",
        grid: ("q in {3,5,7,9}, m in 2..=4, n <= 400", "q in {3,5,7,9}, m in 2..=5, n <= 2000"),
        run: minus_one_zero,
    },
    Claim {
        id: "distance-two-zeros-minus",
        statement: "n = (q^m-1)/2, q >= 7: C_(q,n,3,0) = <M_1 M_3> is [n, n-2m, 3], within one of the sphere-packing maximum",
        grid: ("q in {7,9}, m in 2..=4, n <= 400", "q in {7,9,11,13}, m in 2..=4, n <= 2000"),
        run: minus_two_zeros,
    },
    Claim {
        id: "distance-two-zeros-q5",
        statement: "q = 5, n = (5^m-1)/2: C_(5,n,4,0) = C_(5,n,3,0) = <M_1 M_3> is [n, n-2m, 4], sphere-packing optimal",
        grid: ("m in 2..=4", "m in 2..=5"),
        run: q5_two_zeros,
    },
    Claim {
        id: "mds-minus",
        statement: "n = (q-1)/2, 2 <= delta <= (q-1)/2: C_(q,n,delta,0) is MDS [n, n-delta+1, delta]",
        grid: ("q in 5..=13", "q in 5..=31"),
        run: |o| mds(o, LengthKind::Minus),
    },
    Claim {
        id: "mds-plus",
        statement: "n = (q+1)/2, 2 <= delta <= (q+3)/4: C_(q,n,delta,0) is MDS [n, n-2delta+2, 2delta-1]",
        grid: ("q in 5..=13", "q in 5..=31"),
        run: |o| mds(o, LengthKind::Plus),
    },
    Claim {
        id: "lcd-plus",
        statement: "every negacyclic code of length (q^m+1)/2 is LCD (self-reciprocal generator)",
        grid: ("q in {3,5,7,9}, q^m <= 3^6, delta <= 8", "q in {3,5,7,9,11,13}, q^m <= 3^8, delta <= 16"),
        run: lcd,
    },
    Claim {
        id: "generator-check-product",
        statement: "g(x) h(x) = x^n + 1 and deg g = n - k for every designed distance",
        grid: ("q in {3,5,7,9}, q^m <= 3^6, both lengths, every delta", "q in {3,5,7,9,11,13}, q^m <= 3^8, both lengths, every delta"),
        run: generator_check,
    },
    Claim {
        id: "phi-cyclic-image",
        statement: "for odd n, c(x) -> c(-x) maps a negacyclic code to a cyclic code with the same parameters",
        grid: ("odd lengths, q in {3,5,7,9}, q^m <= 3^8, q^k <= 2^12", "odd lengths, q in {3,5,7,9,11,13}, q^m <= 3^10, q^k <= 2^16"),
        run: phi,
    },
    Claim {
        id: "bounds-consistency",
        statement: "BCH and Pang lower bounds never exceed the exact distance, which never exceeds the sphere-packing maximum",
        grid: ("q in {3,5,7,9}, q^m <= 3^5, q^k <= 2^16", "q in {3,5,7,9}, q^m <= 3^6, q^k <= 2^20"),
        run: bounds_consistency,
    },
    Claim {
        id: "examples",
        statement: "worked example codes have the stated [n, k, d]",
        grid: ("full example list", "full example list"),
        run: |o| super::examples::example_instances(o),
    },
];

const QS_SMALL: [u64; 4] = [3, 5, 7, 9];
const QS_LEADERS: [u64; 6] = [3, 5, 7, 9, 11, 13];

fn odd_prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi)
        .filter(|&q| matches!(prime_power(q), Some((p, _)) if p != 2))
        .collect()
}

/// `(q, m)` with `m >= min_m` and `q^m <= limit`.
fn qm_grid(qs: &[u64], min_m: u32, limit: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for &q in qs {
        let mut m = min_m;
        while checked_pow(q, m).is_some_and(|v| v <= limit) {
            out.push((q, m));
            m += 1;
        }
    }
    out
}

fn pick<T: Copy>(o: &VerifyOptions, default: T, extended: T) -> T {
    if o.extended {
        extended
    } else {
        default
    }
}

fn length(q: u64, m: u32, kind: LengthKind) -> u64 {
    kind.modulus(q, m).expect("grid q^m fits") / 2
}

fn orbit_size(i: u64, q: u64, modulus: u64) -> usize {
    let mut j = mul_mod(i, q, modulus);
    let mut size = 1;
    while j != i {
        j = mul_mod(j, q, modulus);
        size += 1;
    }
    size
}

fn small_moduli(o: &VerifyOptions) -> Vec<Instance> {
    let mut items = Vec::new();
    for q in odd_prime_powers(3, pick(o, 49, 243)) {
        items.push((q, LengthKind::Minus));
        items.push((q, LengthKind::Plus));
    }
    run_grid(items, o, |&(q, kind)| {
        let modulus = match kind {
            LengthKind::Minus => q - 1,
            LengthKind::Plus => q + 1,
        };
        let inst = Instance::new(q).kind(kind);
        let oracle: Result<Vec<u64>, _> = (0..modulus)
            .filter_map(|i| match is_coset_leader(i, q, modulus) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect();
        match (small_modulus_leaders(q, kind), oracle) {
            (Ok(formula), Ok(oracle)) => inst.compare(formula, oracle),
            (Err(e), _) | (_, Err(e)) => inst.error(String::new(), e),
        }
    })
}

/// Compare two leader predicates on a residue range, reporting mismatches.
fn predicate_instances<F>(o: &VerifyOptions, kind: LengthKind, f: F) -> Vec<Instance>
where
    F: Fn(u64, u64, u32, u64) -> Option<(u64, bool, bool)> + Sync,
{
    let items = qm_grid(&QS_LEADERS, 2, pick(o, 100_000, 1_000_000));
    run_grid(items, o, |&(q, m)| {
        let modulus = kind.modulus(q, m).expect("fits");
        let mut mismatches = 0u64;
        let mut first = None;
        for i in 0..modulus {
            if let Some((i, a, b)) = f(i, q, m, modulus) {
                if a != b {
                    mismatches += 1;
                    first.get_or_insert((i, a, b));
                }
            }
        }
        let inst = Instance::new(q).m(m).kind(kind).compare(0, mismatches);
        match first {
            Some((i, a, b)) => inst.note(format!("first mismatch i = {i}: {a} vs {b}")),
            None => inst,
        }
    })
}

fn sequence_leader(o: &VerifyOptions) -> Vec<Instance> {
    predicate_instances(o, LengthKind::Minus, |i, q, m, modulus| {
        (i >= 1).then(|| {
            (
                i,
                is_leader_by_sequence(i, q, m).unwrap_or(false),
                is_coset_leader(i, q, modulus).unwrap_or(true),
            )
        })
    })
}

fn window_test(o: &VerifyOptions) -> Vec<Instance> {
    predicate_instances(o, LengthKind::Plus, |i, q, m, modulus| {
        Some((
            i,
            leader_predicate_zhu(i, q, m).unwrap_or(false),
            is_coset_leader(i, q, modulus).unwrap_or(true),
        ))
    })
}

fn residue_exclusion(o: &VerifyOptions) -> Vec<Instance> {
    let items = qm_grid(&QS_LEADERS, 2, pick(o, 100_000, 1_000_000));
    run_grid(items, o, |&(q, m)| {
        let modulus = LengthKind::Plus.modulus(q, m).expect("fits");
        let (mut fired, mut violations, mut non_leaders) = (0u64, 0u64, 0u64);
        for i in 1..=modulus / 2 {
            let leader = is_coset_leader(i, q, modulus).unwrap_or(true);
            non_leaders += !leader as u64;
            if non_leader_by_residue(i, q, m).unwrap_or(false) {
                fired += 1;
                violations += leader as u64;
            }
        }
        Instance::new(q)
            .m(m)
            .kind(LengthKind::Plus)
            .compare(0, violations)
            .note(format!(
                "condition fires on {fired} of {non_leaders} non-leaders in 1..=(q^m+1)/2"
            ))
    })
}

fn leader_range(o: &VerifyOptions, kind: LengthKind) -> Vec<Instance> {
    let min_m = match kind {
        LengthKind::Minus => 2,
        LengthKind::Plus => 3,
    };
    let items = qm_grid(&QS_LEADERS, min_m, pick(o, 1_000_000, 100_000_000));
    run_grid(items, o, |&(q, m)| {
        let inst = Instance::new(q).m(m).kind(kind);
        let Some(limit) = leader_range_limit(q, m, kind) else {
            return inst.error("a leader range".into(), "no range for this m");
        };
        let modulus = kind.modulus(q, m).expect("fits");
        let mut bad = Vec::new();
        for i in 1..=limit {
            let leader = is_coset_leader(i, q, modulus).unwrap_or(false);
            if leader != (i % q != 0) {
                bad.push(format!("leader({i}) = {leader}"));
            } else if leader && orbit_size(i, q, modulus) != leader_range_size(i, q, m, kind) {
                bad.push(format!("|C_{i}| = {}", orbit_size(i, q, modulus)));
            }
        }
        let inst = inst
            .compare(0, bad.len())
            .note(format!("1 <= i <= {limit}"));
        match bad.first() {
            Some(b) => inst.note(format!("first failure {b}")),
            None => inst,
        }
    })
}

fn largest_odd_leaders(o: &VerifyOptions, kind: LengthKind) -> Vec<Instance> {
    let items = qm_grid(&QS_LEADERS, 2, pick(o, 1_000_000, 10_000_000));
    run_grid(items, o, |&(q, m)| {
        let inst = Instance::new(q).m(m).kind(kind).n(length(q, m, kind));
        let (f, b) = match (delta_formulas(q, m, kind), delta_oracle(q, m, kind)) {
            (Ok(f), Ok(b)) => (f, b),
            (Err(e), _) | (_, Err(e)) => return inst.error(String::new(), e),
        };
        let mut inst = inst.compare(f.as_list(), b.as_list());
        if f.delta3.is_none() {
            inst = inst.note("q^m < 25: no third leader claimed");
        }
        if kind == LengthKind::Plus && m == 3 && q % 4 == 3 {
            let num = (q - 1) * (q * q * q - 2 * q + 1);
            let den = 2 * (q + 1);
            let alt = if num % den == 0 {
                format!("{}", num / den - (q + 1))
            } else {
                format!("{num}/{den} - {}, not an integer", q + 1)
            };
            inst = inst.note(format!(
                "third leader uses (q-1)(q^3-2q-1)/(2(q+1)) - (q+1); the variant with q^3-2q+1 gives {alt}"
            ));
        }
        inst
    })
}

/// Lower bound on `d` claimed by the large-dimension claims.
fn claimed_lower(q: u64, delta: u64, kind: LengthKind) -> u64 {
    let bump = delta % q == (q + 1) / 2;
    match (kind, bump) {
        (LengthKind::Minus, false) => delta,
        (LengthKind::Minus, true) => delta + 1,
        (LengthKind::Plus, false) => 2 * delta - 1,
        (LengthKind::Plus, true) => 2 * delta + 1,
    }
}

fn dimension_range(o: &VerifyOptions, kind: LengthKind) -> Vec<Instance> {
    let qs: &[u64] = if o.extended { &QS_LEADERS } else { &QS_SMALL };
    let min_m = match kind {
        LengthKind::Minus => 2,
        LengthKind::Plus => 3,
    };
    let mut items = Vec::new();
    for (q, m) in qm_grid(qs, min_m, pick(o, 6561, 59049)) {
        let hi = dimension_formula_max_delta(q, m, kind).expect("valid m");
        items.extend((2..=hi).map(|delta| (q, m, delta)));
    }
    run_grid(items, o, |&(q, m, delta)| {
        let n = length(q, m, kind);
        let inst = Instance::new(q).m(m).n(n).delta(delta).kind(kind);
        let k_formula = match dimension_formula(q, m, delta, kind) {
            Ok(k) => k,
            Err(e) => return inst.error(String::new(), e),
        };
        let d_claim = claimed_lower(q, delta, kind);
        let expected = format!("k = {k_formula}, d >= {d_claim}");
        let code = match build_code(q, n, delta, 0) {
            Ok(c) => c,
            Err(e) => return inst.error(expected, e),
        };
        // the claimed bound must follow from the defining set itself
        let bch = bch_bound(&code, false);
        let lower = match kind {
            LengthKind::Plus => bch.max(pang_bound_for_code(&code).unwrap_or(0)),
            LengthKind::Minus => bch,
        };
        let k = code.dimension();
        let status = if k == k_formula && lower >= d_claim {
            Status::Pass
        } else {
            Status::Fail
        };
        inst.outcome(expected, format!("k = {k}, d >= {lower}"), status)
    })
}

/// Distance requirement checked against the engines.
#[derive(Clone, Copy)]
enum Want {
    Exactly(u64),
    AtLeast(u64),
}

/// Compute the distance and judge it. Out-of-budget brackets that still
/// allow the claim are reported as skipped.
fn judge_distance(
    code: &NegacyclicBchCode,
    o: &VerifyOptions,
    want: Want,
) -> (String, Status, Option<DistanceResult>) {
    if let Want::AtLeast(d) = want {
        // a proven bound settles the claim without a search
        if let Some(lower) = BoundReport::for_code(code).ok().and_then(|b| b.lower) {
            if lower.value >= d {
                return (
                    format!("d >= {} ({:?})", lower.value, lower.source).to_lowercase(),
                    Status::Pass,
                    None,
                );
            }
        }
    }
    let r = match min_distance(code, &o.distance) {
        Ok(r) => r,
        Err(e) => return (format!("error: {e}"), Status::Fail, None),
    };
    let (lo, hi) = (r.lower.value, r.upper.value);
    let observed = if r.exact {
        format!("d = {lo} ({})", r.method)
    } else {
        format!("{lo} <= d <= {hi} ({})", r.method)
    };
    let status = match want {
        Want::Exactly(d) if r.exact => pass_if(lo == d),
        Want::Exactly(d) if d < lo || d > hi => Status::Fail,
        Want::Exactly(_) => Status::Skipped,
        Want::AtLeast(d) if lo >= d => Status::Pass,
        Want::AtLeast(d) if hi < d => Status::Fail,
        Want::AtLeast(_) => Status::Skipped,
    };
    (observed, status, Some(r))
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Combine statuses: any failure fails, then any skip skips.
fn both(a: Status, b: Status) -> Status {
    match (a, b) {
        (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
        (Status::Skipped, _) | (_, Status::Skipped) => Status::Skipped,
        _ => Status::Pass,
    }
}

fn small_dim(o: &VerifyOptions, kind: LengthKind) -> Vec<Instance> {
    let mut items = Vec::new();
    for (q, m) in qm_grid(&QS_SMALL, 2, 6561) {
        let Ok(t) = delta_formulas(q, m, kind) else {
            continue;
        };
        let qm = q.pow(m);
        let (k1, k2, k3) = match kind {
            LengthKind::Minus => {
                let kappa = if m % 3 == 0 { m / 3 } else { m } as u64;
                (m as u64, m as u64 + kappa, 2 * m as u64 + kappa)
            }
            LengthKind::Plus => {
                let kappa = if qm % 4 == 1 { 1 } else { 2 };
                (kappa, 2 * m as u64 + kappa, 4 * m as u64 + kappa)
            }
        };
        let (d1, d2, d3) = match kind {
            LengthKind::Minus => (
                (t.delta1 + 1) / 2,
                (t.delta2 + 1) / 2,
                t.delta3.map(|d| (d + 1) / 2),
            ),
            LengthKind::Plus => (t.delta1, t.delta2, t.delta3),
        };
        let mut ranges = vec![(
            (t.delta2 + 3) / 2,
            (t.delta1 + 1) / 2,
            vec![t.delta1],
            k1,
            Want::AtLeast(d1),
        )];
        if let Some(delta3) = t.delta3 {
            ranges.push((
                (delta3 + 3) / 2,
                (t.delta2 + 1) / 2,
                vec![t.delta1, t.delta2],
                k2,
                Want::AtLeast(d2),
            ));
            let d3 = d3.expect("present with delta3");
            ranges.push((
                (delta3 + 1) / 2,
                (delta3 + 1) / 2,
                vec![t.delta1, t.delta2, delta3],
                k3,
                Want::AtLeast(d3),
            ));
        }
        if kind == LengthKind::Minus {
            // the top range is one-weight, so d is exact there
            ranges[0].4 = Want::Exactly(d1);
        }
        for (lo, hi, nonzeros, k, want) in ranges {
            // designed distances start at 2
            let lo = lo.max(2);
            if lo > hi {
                continue;
            }
            let deltas: Vec<u64> = if o.extended || hi - lo < 2 {
                (lo..=hi).collect()
            } else {
                vec![lo, hi]
            };
            for delta in deltas {
                items.push((q, m, delta, nonzeros.clone(), k, want));
            }
        }
    }
    run_grid(items, o, |(q, m, delta, nonzeros, k, want)| {
        let (q, m, delta) = (*q, *m, *delta);
        let n = length(q, m, kind);
        let inst = Instance::new(q).m(m).n(n).delta(delta).kind(kind);
        let d_text = match want {
            Want::Exactly(d) => format!("d = {d}"),
            Want::AtLeast(d) => format!("d >= {d}"),
        };
        let expected = format!("k = {k}, {d_text}, nonzeros {nonzeros:?}");
        let built =
            build_code(q, n, delta, 0).and_then(|c| Ok((with_check_exponents(q, n, nonzeros)?, c)));
        let (by_check, code) = match built {
            Ok(p) => p,
            Err(e) => return inst.error(expected, e),
        };
        let (dist, dstatus, _) = judge_distance(&code, o, *want);
        let same = by_check == code;
        let status = both(pass_if(code.dimension() == *k && same), dstatus);
        let observed = format!(
            "k = {}, {dist}, check polynomial {}",
            code.dimension(),
            if same { "matches" } else { "differs" }
        );
        inst.outcome(expected, observed, status)
    })
}

fn one_weight(o: &VerifyOptions) -> Vec<Instance> {
    let qs: &[u64] = if o.extended { &QS_SMALL } else { &[3, 5] };
    let m_max = pick(o, 4, 10);
    let items: Vec<_> = qm_grid(qs, 2, pick(o, 6561, 59049))
        .into_iter()
        .filter(|&(_, m)| m <= m_max)
        .collect();
    run_grid(items, o, |&(q, m)| {
        let n = length(q, m, LengthKind::Minus);
        let inst = Instance::new(q).m(m).n(n).kind(LengthKind::Minus);
        let weight = (q - 1) * q.pow(m - 1) / 2;
        let expected = format!(
            "k = {m}, all {} nonzero words of weight {weight}",
            q.pow(m) - 1
        );
        let t = match delta_oracle(q, m, LengthKind::Minus) {
            Ok(t) => t,
            Err(e) => return inst.error(expected, e),
        };
        let code = match with_check_exponents(q, n, &[t.delta1]) {
            Ok(c) => c,
            Err(e) => return inst.error(expected, e),
        };
        let dist = code
            .to_linear()
            .map_err(|e| e.to_string())
            .and_then(|l| weight_distribution(&l, 1 << 24).map_err(|e| e.to_string()));
        let dist = match dist {
            Ok(d) => d,
            Err(e) => return inst.error(expected, e),
        };
        let nonzero: Vec<(usize, u64)> = dist
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect();
        let ok = code.dimension() == m as u64 && nonzero == vec![(weight as usize, q.pow(m) - 1)];
        let same = build_code(q, n, (t.delta1 + 1) / 2, 0).is_ok_and(|c| c == code);
        inst.outcome(
            expected,
            format!(
                "k = {}, weights {nonzero:?}, equals C_(q,n,(delta1+1)/2,0): {same}",
                code.dimension()
            ),
            pass_if(ok && same),
        )
    })
}

/// `(q, m)` for the exact-distance claims, bounded by length.
fn exact_grid(qs: &[u64], kind: LengthKind, m_max: u32, n_max: u64) -> Vec<(u64, u32)> {
    qm_grid(qs, 2, u64::MAX / 4)
        .into_iter()
        .filter(|&(q, m)| m <= m_max && length(q, m, kind) <= n_max)
        .collect()
}

/// Shared body of the exact-distance claims.
fn exact_claim<F>(
    o: &VerifyOptions,
    items: Vec<(u64, u32)>,
    kind: LengthKind,
    f: F,
) -> Vec<Instance>
where
    F: Fn(u64, u32, u64) -> ExactSpec + Sync,
{
    run_grid(items, o, |&(q, m)| {
        let n = length(q, m, kind);
        let claim = f(q, m, n);
        let inst = Instance::new(q).m(m).n(n).delta(claim.delta).kind(kind);
        let optimality = match claim.sp_slack {
            Some(0) => ", sphere-packing optimal",
            Some(_) => ", within 1 of sphere-packing",
            None => "",
        };
        let expected = format!(
            "[{n}, {}, {}]{optimality}, generator from {:?}",
            claim.k, claim.d, claim.zeros
        );
        let built = build_code(q, n, claim.delta, 0)
            .and_then(|c| Ok((from_defining_set(q, n, &claim.zeros)?, c)));
        let (by_zeros, code) = match built {
            Ok(p) => p,
            Err(e) => return inst.error(expected, e),
        };
        let (dist, dstatus, r) = judge_distance(&code, o, Want::Exactly(claim.d));
        let k = code.dimension();
        let sp = sphere_packing_max_d(n, k, q).ok();
        let sp_ok = match (claim.sp_slack, r.and_then(|r| r.distance()), sp) {
            (None, _, _) => true,
            (Some(s), Some(d), Some(sp)) => d + s >= sp,
            _ => false,
        };
        let mut extra = true;
        let mut notes = Vec::new();
        for &alt in &claim.same_as {
            let same = build_code(q, n, alt, 0).is_ok_and(|c| c == code);
            extra &= same;
            notes.push(format!("equals C_(q,n,{alt},0): {same}"));
        }
        let status = both(
            pass_if(k == claim.k && by_zeros == code && sp_ok && extra),
            dstatus,
        );
        let observed = format!(
            "k = {k}, {dist}, sphere-packing max {}, generator {}",
            sp.map_or("?".into(), |v| v.to_string()),
            if by_zeros == code {
                "matches"
            } else {
                "differs"
            }
        );
        let inst = inst.outcome(expected, observed, status);
        if notes.is_empty() {
            inst
        } else {
            inst.note(notes.join(", "))
        }
    })
}

struct ExactSpec {
    delta: u64,
    k: u64,
    d: u64,
    zeros: Vec<u64>,
    /// `Some(s)`: `d >= sphere-packing maximum - s`.
    sp_slack: Option<u64>,
    same_as: Vec<u64>,
}

fn plus_one_zero(o: &VerifyOptions) -> Vec<Instance> {
    let items = exact_grid(
        &QS_SMALL,
        LengthKind::Plus,
        pick(o, 4, 5),
        pick(o, 400, 2000),
    );
    exact_claim(o, items, LengthKind::Plus, |q, m, n| ExactSpec {
        delta: 2,
        k: n - 2 * m as u64,
        d: match (q, m % 2) {
            (3, _) => 5,
            (_, 1) => 3,
            _ => 4,
        },
        zeros: vec![1],
        sp_slack: (q == 3 || m % 2 == 0).then_some(0),
        same_as: vec![],
    })
}

fn minus_one_zero(o: &VerifyOptions) -> Vec<Instance> {
    let items = exact_grid(
        &QS_SMALL,
        LengthKind::Minus,
        pick(o, 4, 5),
        pick(o, 400, 2000),
    );
    exact_claim(o, items, LengthKind::Minus, |q, m, n| ExactSpec {
        delta: 2,
        k: n - m as u64,
        d: if q == 3 { 3 } else { 2 },
        zeros: vec![1],
        sp_slack: Some(0),
        same_as: if q == 3 { vec![3] } else { vec![] },
    })
}

fn minus_two_zeros(o: &VerifyOptions) -> Vec<Instance> {
    let qs: &[u64] = if o.extended { &[7, 9, 11, 13] } else { &[7, 9] };
    let items = exact_grid(qs, LengthKind::Minus, 4, pick(o, 400, 2000));
    exact_claim(o, items, LengthKind::Minus, |_, m, n| ExactSpec {
        delta: 3,
        k: n - 2 * m as u64,
        d: 3,
        zeros: vec![1, 3],
        sp_slack: Some(1),
        same_as: vec![],
    })
}

fn q5_two_zeros(o: &VerifyOptions) -> Vec<Instance> {
    let items = exact_grid(&[5], LengthKind::Minus, pick(o, 4, 5), u64::MAX);
    exact_claim(o, items, LengthKind::Minus, |_, m, n| ExactSpec {
        delta: 4,
        k: n - 2 * m as u64,
        d: 4,
        zeros: vec![1, 3],
        sp_slack: Some(0),
        same_as: vec![3],
    })
}

fn mds(o: &VerifyOptions, kind: LengthKind) -> Vec<Instance> {
    let mut items = Vec::new();
    for q in odd_prime_powers(5, pick(o, 13, 31)) {
        let hi = match kind {
            LengthKind::Minus => (q - 1) / 2,
            LengthKind::Plus => (q + 3) / 4,
        };
        items.extend((2..=hi).map(|delta| (q, delta)));
    }
    run_grid(items, o, |&(q, delta)| {
        let inst = Instance::new(q).delta(delta).kind(kind);
        let expected = match mds_family(q, kind, delta) {
            Ok(p) => p,
            Err(e) => return inst.error(String::new(), e),
        };
        let inst = inst.n(expected.n);
        let code = match build_code(q, expected.n, delta, 0) {
            Ok(c) => c,
            Err(e) => return inst.error(expected.to_string(), e),
        };
        let observed = min_distance(&code, &o.distance)
            .ok()
            .and_then(|r| r.distance());
        let Some(d) = observed else {
            return inst.outcome(
                expected.to_string(),
                format!("[{}, {}, ?]", code.n, code.dimension()),
                Status::Skipped,
            );
        };
        let got = Parameters {
            n: code.n,
            k: code.dimension(),
            d,
        };
        let mds = got.d == got.n - got.k + 1;
        inst.outcome(
            expected.to_string(),
            format!("{got}, MDS: {mds}"),
            pass_if(got == expected && mds),
        )
    })
}

/// `C ∩ C⊥ = {0}` by rank: the stacked generator matrices have rank `n`.
fn trivial_hull(lin: &LinearCode) -> bool {
    let mut rows = lin.rows().to_vec();
    rows.extend(lin.parity_check());
    rref(&mut rows, lin.tables()).len() == lin.n()
}

fn lcd(o: &VerifyOptions) -> Vec<Instance> {
    let qs: &[u64] = if o.extended { &QS_LEADERS } else { &QS_SMALL };
    let dmax = pick(o, 8, 16);
    let mut items = Vec::new();
    for (q, m) in qm_grid(qs, 2, pick(o, 729, 6561)) {
        let n = length(q, m, LengthKind::Plus);
        items.extend((2..=dmax.min(n)).map(|delta| (q, m, delta)));
    }
    run_grid(items, o, |&(q, m, delta)| {
        let n = length(q, m, LengthKind::Plus);
        let inst = Instance::new(q)
            .m(m)
            .n(n)
            .delta(delta)
            .kind(LengthKind::Plus);
        let code = match build_code(q, n, delta, 0) {
            Ok(c) => c,
            Err(e) => return inst.error("lcd".into(), e),
        };
        let hull = code.to_linear().map(|l| trivial_hull(&l));
        match hull {
            Ok(h) => inst
                .compare((true, true), (code.is_lcd(), h))
                .note("(self-reciprocal g, trivial hull)"),
            Err(e) => inst.error("lcd".into(), e),
        }
    })
}

/// Codes `C_(q,n,delta,0)` with `0 < k` and `q^k <= budget`. Dimensions
/// come from the coset structure, so only the selected codes are built.
fn small_codes(
    q: u64,
    m: u32,
    kind: LengthKind,
    budget: u64,
) -> Vec<(u64, u32, u64, LengthKind, NegacyclicBchCode)> {
    let n = length(q, m, kind);
    let two_n = 2 * n;
    // each odd coset enters the defining set once delta - 2 reaches the
    // smallest (e - 1) / 2 over its members
    let mut seen = vec![false; two_n as usize];
    let mut entry = vec![0u64; n as usize + 1];
    for e in (1..two_n).step_by(2) {
        if seen[e as usize] {
            continue;
        }
        let (mut x, mut first, mut size) = (e, u64::MAX, 0);
        loop {
            seen[x as usize] = true;
            first = first.min((x - 1) / 2);
            size += 1;
            x = mul_mod(x, q, two_n);
            if x == e {
                break;
            }
        }
        entry[first as usize] += size;
    }
    let mut out = Vec::new();
    let mut k = n;
    for delta in 2..=n {
        k -= entry[delta as usize - 2];
        if k > 0 && checked_pow(q, k as u32).is_some_and(|v| v <= budget) {
            if let Ok(code) = build_code(q, n, delta, 0) {
                out.push((q, m, delta, kind, code));
            }
        }
    }
    out
}

fn generator_check(o: &VerifyOptions) -> Vec<Instance> {
    let qs: &[u64] = if o.extended { &QS_LEADERS } else { &QS_SMALL };
    let mut items = Vec::new();
    for (q, m) in qm_grid(qs, 2, pick(o, 729, 6561)) {
        for kind in [LengthKind::Minus, LengthKind::Plus] {
            items.push((q, m, kind));
        }
    }
    run_grid(items, o, |&(q, m, kind)| {
        let n = length(q, m, kind);
        let inst = Instance::new(q).m(m).n(n).kind(kind);
        let mut bad = Vec::new();
        for delta in 2..=n {
            let ok = build_code(q, n, delta, 0).is_ok_and(|c| {
                let xn1 = Poly::x_n_plus_one(c.field().clone(), n as usize);
                let deg = c.generator.degree().unwrap_or(0) as u64;
                c.generator.mul(&c.check).is_ok_and(|p| p == xn1) && deg + c.dimension() == n
            });
            if !ok {
                bad.push(delta);
            }
        }
        inst.compare(Vec::<u64>::new(), bad)
            .note(format!("failing delta among 2..={n}"))
    })
}

fn phi(o: &VerifyOptions) -> Vec<Instance> {
    let qs: &[u64] = if o.extended { &QS_LEADERS } else { &QS_SMALL };
    let budget: u64 = pick(o, 1 << 12, 1 << 16);
    let mut items = Vec::new();
    for (q, m) in qm_grid(qs, 2, pick(o, 6561, 59049)) {
        for kind in [LengthKind::Minus, LengthKind::Plus] {
            let n = length(q, m, kind);
            if n % 2 == 1 {
                items.extend(small_codes(q, m, kind, budget));
            }
        }
    }
    run_grid(items, o, |(q, m, delta, kind, code)| {
        let inst = Instance::new(*q).m(*m).n(code.n).delta(*delta).kind(*kind);
        let image = code
            .to_cyclic()
            .and_then(|g| LinearCode::from_generator_poly(&g, code.n as usize));
        let pair = image.and_then(|img| Ok((code.to_linear()?, img)));
        let (lin, img) = match pair {
            Ok(p) => p,
            Err(e) => return inst.error(String::new(), e),
        };
        match (
            weight_distribution(&lin, budget),
            weight_distribution(&img, budget),
        ) {
            (Ok(a), Ok(b)) => {
                let summary = |d: &[u64]| -> Vec<(usize, u64)> {
                    d.iter()
                        .enumerate()
                        .filter(|(_, &c)| c > 0)
                        .map(|(w, &c)| (w, c))
                        .collect()
                };
                inst.compare((lin.k(), summary(&a)), (img.k(), summary(&b)))
                    .note("(dimension, weight distribution)")
            }
            (Err(e), _) | (_, Err(e)) => inst.error(String::new(), e),
        }
    })
}

fn bounds_consistency(o: &VerifyOptions) -> Vec<Instance> {
    let budget: u64 = pick(o, 1 << 16, 1 << 20);
    let mut items = Vec::new();
    for (q, m) in qm_grid(&QS_SMALL, 2, pick(o, 243, 729)) {
        for kind in [LengthKind::Minus, LengthKind::Plus] {
            items.extend(small_codes(q, m, kind, budget));
        }
    }
    run_grid(items, o, |(q, m, delta, kind, code)| {
        let inst = Instance::new(*q).m(*m).n(code.n).delta(*delta).kind(*kind);
        let bch = bch_bound(code, true);
        let pang = pang_bound_for_code(code).ok();
        let k = code.dimension();
        let sp = sphere_packing_max_d(code.n, k, *q).ok();
        let d = min_distance(code, &o.distance)
            .ok()
            .and_then(|r| r.distance());
        let Some(d) = d else {
            return inst.outcome(
                "bch <= d <= sp".into(),
                "distance not settled".into(),
                Status::Skipped,
            );
        };
        let ok = bch <= d && pang.is_none_or(|p| p <= d) && sp.is_some_and(|s| d <= s);
        inst.outcome(
            "bch, pang <= d <= sphere-packing max".into(),
            format!("bch {bch}, pang {pang:?}, d {d}, sp {sp:?}"),
            pass_if(ok),
        )
    })
}
