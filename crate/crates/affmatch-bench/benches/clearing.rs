use affmatch_bench::{consistent_market, random_market};
use affmatch_core::{
    deferred_acceptance, generate_market, solve, stable_set, AffiliationPattern, CutStrategy,
    GeneratorSpec, Objective, OracleLimits, ProfileStrategy, SolveConfig, StabilityNotion,
};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn bench_oracle(c: &mut Criterion) {
    let limits = OracleLimits::default();
    let market = random_market(3, 6);
    c.bench_function("oracle/greedy_stable_set/n6", |b| {
        b.iter(|| stable_set(black_box(&market), StabilityNotion::Greedy, &limits).unwrap())
    });
    let market = random_market(5, 5);
    c.bench_function("oracle/strict_stable_set/n5", |b| {
        b.iter(|| stable_set(black_box(&market), StabilityNotion::Strict, &limits).unwrap())
    });
}

fn bench_solver(c: &mut Criterion) {
    let market = random_market(11, 6);
    for cuts in [CutStrategy::NoGood, CutStrategy::NoGoodConditional] {
        let config = SolveConfig {
            cuts,
            ..SolveConfig::default()
        };
        c.bench_function(&format!("solver/feasibility/n6/{}", cuts.name()), |b| {
            b.iter(|| solve(black_box(&market), Objective::Feasibility, &config).unwrap())
        });
        c.bench_function(
            &format!("solver/min_applicant_rank_sum/n6/{}", cuts.name()),
            |b| {
                b.iter(|| {
                    solve(black_box(&market), Objective::MinApplicantRankSum, &config).unwrap()
                })
            },
        );
    }
}

fn bench_deferred_acceptance(c: &mut Criterion) {
    let market = consistent_market(17, 64);
    c.bench_function("deferred_acceptance/n64", |b| {
        b.iter(|| deferred_acceptance(black_box(&market)).unwrap())
    });
}

fn bench_generator(c: &mut Criterion) {
    let spec = GeneratorSpec {
        seed: 23,
        n: 7,
        affiliation: AffiliationPattern::Bijection,
        strategy: ProfileStrategy::UniformRandom,
    };
    c.bench_function("generator/uniform_random/n7", |b| {
        b.iter(|| generate_market(black_box(&spec)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_oracle,
    bench_solver,
    bench_deferred_acceptance,
    bench_generator
);
criterion_main!(benches);
