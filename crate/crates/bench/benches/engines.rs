use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use negacode::bounds::Bound;
use negacode::codes::build_code;
use negacode::cosets::{all_odd_leaders_desc, delta_formulas, LengthKind};
use negacode::distance::{
    min_distance_bz, min_distance_exhaustive, min_weight_support_search, LowerProvenance,
};
use negacode_bench::{linear, EXHAUSTIVE_CODES, SEARCH_CODES};

fn trivial() -> Bound<LowerProvenance> {
    Bound {
        value: 1,
        source: LowerProvenance::Trivial,
    }
}

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_code");
    for &(label, q, n, delta) in &[
        ("121_106_q3", 3, 121, 6),
        ("63_45_q5", 5, 63, 5),
        ("365_q9", 9, 365, 3),
    ] {
        g.bench_function(label, |b| b.iter(|| build_code(q, n, delta, 0).unwrap()));
    }
    g.finish();
}

fn leaders(c: &mut Criterion) {
    let mut g = c.benchmark_group("odd_leaders");
    for (q, m) in [(3u64, 10u32), (5, 7), (13, 5)] {
        let modulus = LengthKind::Minus.modulus(q, m).unwrap();
        g.bench_with_input(
            BenchmarkId::new("oracle", format!("{q}^{m}")),
            &modulus,
            |b, &md| b.iter(|| all_odd_leaders_desc(q, md, u64::MAX).unwrap()),
        );
        g.bench_with_input(
            BenchmarkId::new("closed_form", format!("{q}^{m}")),
            &m,
            |b, &m| b.iter(|| delta_formulas(q, m, LengthKind::Minus).unwrap()),
        );
    }
    g.finish();
}

fn exhaustive(c: &mut Criterion) {
    let mut g = c.benchmark_group("exhaustive");
    for &(label, q, n, delta) in EXHAUSTIVE_CODES {
        let code = linear(q, n, delta);
        g.bench_function(label, |b| {
            b.iter(|| min_distance_exhaustive(&code, 1 << 24).unwrap())
        });
    }
    g.finish();
}

fn searches(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(20);
    for &(label, q, n, delta) in SEARCH_CODES {
        let code = linear(q, n, delta);
        let upper = (n - code.k() as u64 + 1) as usize;
        g.bench_function(BenchmarkId::new("support", label), |b| {
            b.iter(|| min_weight_support_search(&code, trivial(), upper, 100_000_000))
        });
        g.bench_function(BenchmarkId::new("bz", label), |b| {
            b.iter(|| min_distance_bz(&code, trivial(), 1 << 25, 0))
        });
    }
    g.finish();
}

criterion_group!(benches, construction, leaders, exhaustive, searches);
criterion_main!(benches);
