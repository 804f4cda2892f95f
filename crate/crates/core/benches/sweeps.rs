use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mvpw::highest::generalized_diagonal_check;
use mvpw::polytope::Frame;
use mvpw::random::random_polytopes;
use mvpw::sweep::{exhaustive_points, fold_reports, theorem_a_sweep, theorem_b_sweep, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn vertex_collapse(c: &mut Criterion) {
    let f = Frame::parse("A3").unwrap();
    let mut group = c.benchmark_group("theorem-a-a3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| theorem_a_sweep(&f, 1, exec).unwrap())
        });
    }
    group.finish();
}

fn valuation_oracle(c: &mut Criterion) {
    let f = Frame::parse("A2").unwrap();
    let points = exhaustive_points(&f, 2);
    let mut group = c.benchmark_group("theorem-b-a2");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| theorem_b_sweep(&f, &points, exec).unwrap())
        });
    }
    group.finish();
}

fn diagonals(c: &mut Criterion) {
    let f = Frame::parse("A3").unwrap();
    let ps = random_polytopes(&f, 200, 5, 9).unwrap();
    let mut group = c.benchmark_group("diagonals-a3");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| fold_reports("diagonals", &ps, exec, generalized_diagonal_check))
        });
    }
    group.finish();
}

criterion_group!(benches, vertex_collapse, valuation_oracle, diagonals);
criterion_main!(benches);
