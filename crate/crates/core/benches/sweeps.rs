//! Compare the sequential and rayon-parallel sweep paths on the real
//! verification workloads. Build with the default `parallel` feature; the
//! sequential path is always compiled so both legs run from one binary.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use trispinor_core::delta::{check_dkp_relation, sorted_quadruples};
use trispinor_core::finsler::cubic_form;
use trispinor_core::scalar::GaussianRational;
use trispinor_core::sweep::{random_int_momentum, sweep_parallel, sweep_sequential, trial_rng};
use trispinor_core::verify::{equivalence_instance, offshell_instance};
use trispinor_core::wave::solution_space;
use trispinor_core::delta::assemble_linear;

#[derive(Clone, Copy)]
enum Mode {
    Sequential,
    Parallel,
}

impl Mode {
    fn label(self) -> &'static str {
        match self {
            Mode::Sequential => "sequential",
            Mode::Parallel => "parallel",
        }
    }

    fn run<T, F>(self, trials: u64, check: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        match self {
            Mode::Sequential => sweep_sequential(trials, check),
            Mode::Parallel => sweep_parallel(trials, check),
        }
    }
}

/// The quartic-identity sweep: X(p)^4 = G(p,p,p) X(p) on random momenta.
fn quartic_sweep(mode: Mode, trials: u64) -> usize {
    mode.run(trials, |k| {
        let mut rng = trial_rng(77, k);
        let p = random_int_momentum(&mut rng);
        let x = assemble_linear(&p);
        let rhs = x.scale(&GaussianRational::from_rational(cubic_form(&p)));
        (x.pow(4).unwrap() != rhs).then_some(k)
    })
    .len()
}

/// The exhaustive symmetrized-product sweep over sorted index multisets.
fn relation_sweep(mode: Mode, quadruples: &[(usize, usize, usize, usize)]) -> usize {
    mode.run(quadruples.len() as u64, |k| {
        let (a, b, c, d) = quadruples[k as usize];
        (!check_dkp_relation(a, b, c, d).unwrap()).then_some(k)
    })
    .len()
}

/// Exact solution spaces on alternating on-shell and off-shell instances.
fn solve_sweep(mode: Mode, trials: u64) -> usize {
    mode.run(trials, |k| {
        let (p, m) = if k % 2 == 0 {
            equivalence_instance(5, k)
        } else {
            offshell_instance(5, k)
        };
        let dim = solution_space(&p, &m).len();
        let expected_nonempty = k % 2 == 0;
        ((dim > 0) != expected_nonempty).then_some(k)
    })
    .len()
}

fn bench_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("quartic_identity");
    group.sample_size(20);
    for mode in [Mode::Sequential, Mode::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(mode.label()), &mode, |b, &mode| {
            b.iter(|| {
                let failures = quartic_sweep(mode, 64);
                assert_eq!(failures, 0);
            })
        });
    }
    group.finish();

    let quadruples = sorted_quadruples();
    let mut group = c.benchmark_group("dkp_relations_exhaustive");
    group.sample_size(10);
    for mode in [Mode::Sequential, Mode::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(mode.label()), &mode, |b, &mode| {
            b.iter(|| {
                let failures = relation_sweep(mode, &quadruples);
                assert_eq!(failures, 0);
            })
        });
    }
    group.finish();

    let mut group = c.benchmark_group("solution_spaces");
    group.sample_size(10);
    for mode in [Mode::Sequential, Mode::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(mode.label()), &mode, |b, &mode| {
            b.iter(|| {
                let failures = solve_sweep(mode, 32);
                assert_eq!(failures, 0);
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
