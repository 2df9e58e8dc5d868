use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use symcodes_core::families::{grm_plotkin_codes, hamming_code, Grm};
use symcodes_core::lcdsearch::{self, Permutation};
use symcodes_core::rng::XorShift64Star;
use symcodes_core::{symplectic, Felt, Field, Matrix, SearchOptions};

fn gf(q: u32) -> Arc<Field> {
    Arc::new(Field::of_order(q).unwrap())
}

fn random_matrix(f: &Arc<Field>, rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut rng = XorShift64Star::new(seed);
    let data: Vec<Vec<Felt>> =
        (0..rows).map(|_| (0..cols).map(|_| Felt(rng.below(u64::from(f.order())) as u16)).collect()).collect();
    Matrix::from_rows(f, cols, &data).unwrap()
}

fn field_ops(c: &mut Criterion) {
    let f = gf(64);
    let a = random_matrix(&f, 1, 4096, 1).to_rows().remove(0);
    let mut b = random_matrix(&f, 1, 4096, 2).to_rows().remove(0);
    c.bench_function("axpy gf64 len4096", |bench| bench.iter(|| f.axpy(&mut b, black_box(Felt(7)), &a)));
}

fn linear_algebra(c: &mut Criterion) {
    let f = gf(4);
    let m = random_matrix(&f, 64, 128, 3);
    c.bench_function("rref gf4 64x128", |bench| bench.iter(|| black_box(&m).rref()));
}

fn distances(c: &mut Criterion) {
    let f = gf(3);
    let pair = grm_plotkin_codes(&f, 2, 1, 1).unwrap();
    let one = SearchOptions { workers: 1, ..SearchOptions::default() };
    c.bench_function("exhaustive d_s [18,12]_3", |bench| {
        bench.iter(|| symplectic::min_distance(black_box(&pair.dc), &one).unwrap())
    });
    let big = grm_plotkin_codes(&f, 3, 1, 1).unwrap();
    c.bench_function("bounded d_s w<=2 [54,46]_3", |bench| {
        bench.iter(|| symplectic::bounded_search(black_box(&big.dc), 2, 1).unwrap())
    });
}

fn grm(c: &mut Criterion) {
    let f = gf(7);
    let g = Grm::new(&f, 2, 3).unwrap();
    c.bench_function("grm generator q7 r2 m3", |bench| bench.iter(|| black_box(&g).generator()));
    let w = g.min_weight_codeword();
    c.bench_function("grm membership q7 r2 m3", |bench| bench.iter(|| g.contains(black_box(&w)).unwrap()));
}

fn lcd(c: &mut Criterion) {
    let f = gf(2);
    let code = hamming_code(&f, 6).unwrap();
    let p: Permutation = lcdsearch::reference_permutation("P63").unwrap();
    c.bench_function("lcd check [63,57]_2", |bench| bench.iter(|| lcdsearch::lcd_check(black_box(&code), &p).unwrap()));
}

criterion_group!(benches, field_ops, linear_algebra, distances, grm, lcd);
criterion_main!(benches);
