use criterion::{criterion_group, criterion_main, Criterion};
use redrep::functors::{u_ambient, u_image};
use redrep::{baby_verma, composition_series, hom_space_dim, Limits, PChar, RootDatum, Weight};
use redrep_bench::sl3_case;

fn construction(c: &mut Criterion) {
    let (d, chi, lambda) = sl3_case(false, [1, 2]);
    c.bench_function("baby_verma sl3 p3", |b| b.iter(|| baby_verma(&d, &chi, &lambda).unwrap()));
    let g = RootDatum::gl(4, 3).unwrap();
    let sub = PChar::subregular(4, 3).unwrap();
    let zero = Weight::eps(&[0, 0, 0, 0], 3);
    c.bench_function("baby_verma gl4 p3 (729)", |b| b.iter(|| baby_verma(&g, &sub, &zero).unwrap()));
}

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("composition_series");
    for (name, subregular, lambda) in [("regular (0,0)", false, [0, 0]), ("subregular (1,0)", true, [1, 0])] {
        let (d, chi, l) = sl3_case(subregular, lambda);
        let z = baby_verma(&d, &chi, &l).unwrap();
        group.bench_function(name, |b| b.iter(|| composition_series(&z).unwrap()));
    }
    group.finish();
    let (d, chi, l) = sl3_case(true, [0, 0]);
    let z = baby_verma(&d, &chi, &l).unwrap();
    c.bench_function("hom_space_dim sl3 27x27", |b| b.iter(|| hom_space_dim(&z, &z).unwrap()));
}

fn u_construction(c: &mut Criterion) {
    let ambient = u_ambient(3, 3, &Limits::default()).unwrap();
    c.bench_function("u_image 243-dim ambient", |b| b.iter(|| u_image(&ambient, &[3, 2, 1]).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = construction, decomposition, u_construction
}
criterion_main!(benches);
