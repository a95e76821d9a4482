use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use olg::bracelab::{run_suite, FiniteAlgebra, Lab, SuiteConfig};
use olg::invertible::Invertible;
use olg::koszul::cross_check;
use olg::orbifold::{check_g_frobenius, OrbifoldAlgebra};
use olg::par::{set_mode, Mode};

const MODES: [(&str, Mode); 2] = [("parallel", Mode::Parallel), ("sequential", Mode::Sequential)];

fn frobenius(c: &mut Criterion) {
    let inv = Invertible::parse("x1^3 + x2^3").unwrap();
    let mut group = c.benchmark_group("frobenius x^3+x^3");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            set_mode(mode);
            b.iter(|| {
                let alg = OrbifoldAlgebra::full(&inv).unwrap();
                assert!(check_g_frobenius(&alg).passed());
            })
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let inv = Invertible::loop_type(&[2, 2, 2]).unwrap();
    let mut group = c.benchmark_group("cross-check loop(2,2,2)");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            set_mode(mode);
            b.iter(|| assert!(cross_check(&inv).unwrap().iter().all(|r| r.agree)))
        });
    }
    group.finish();
}

fn brace_suite(c: &mut Criterion) {
    let lab = Lab::new(FiniteAlgebra::truncated_polynomial(4, 3, Some(3)).unwrap());
    let config = SuiteConfig { samples: 10, ..SuiteConfig::default() };
    let mut group = c.benchmark_group("brace suite Q[x]/(x^4)");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            set_mode(mode);
            b.iter(|| assert!(run_suite(&lab, &config).unwrap().passed()))
        });
    }
    group.finish();
}

criterion_group!(benches, frobenius, oracle, brace_suite);
criterion_main!(benches);
