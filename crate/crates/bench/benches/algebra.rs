use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use hopfforge::findim::compile;
use hopfforge::stdlib::{example, group_algebra, GroupPresentation};
use hopfforge::{coequalizer, coproduct, solve_antipode, Field, HopfMap, RewriteSystem};

fn completion(c: &mut Criterion) {
    let s3 = GroupPresentation::new(&["a", "b"], &["a^3", "b^2", "a b a b"]).unwrap();
    let p = group_algebra(&s3, Field::Rational).unwrap();
    let relations = p.relations().to_vec();
    c.bench_function("complete S3 group algebra, bound 10", |b| {
        b.iter(|| RewriteSystem::complete(p.signature(), black_box(&relations), 10).unwrap())
    });
}

fn validation(c: &mut Criterion) {
    let h4 = example("h4", Field::Rational).unwrap();
    c.bench_function("validate H4", |b| b.iter(|| black_box(&h4).validate().unwrap()));
}

fn colimits(c: &mut Criterion) {
    let z2 = Arc::new(example("z2", Field::Rational).unwrap());
    let h4 = Arc::new(example("h4", Field::Rational).unwrap());
    c.bench_function("coproduct z2 * H4, bound 8, validated", |b| {
        b.iter(|| {
            let (p, _) = coproduct(&[z2.clone(), h4.clone()], Some(8)).unwrap();
            p.validate().unwrap()
        })
    });
    let z = Arc::new(example("z", Field::Rational).unwrap());
    let images = ["t^4", "t_inv^4"].map(|s| hopfforge::parse::parse_poly(z.signature(), s).unwrap()).to_vec();
    let f = HopfMap::new(&z, &z, images).unwrap();
    let id = HopfMap::identity(&z);
    c.bench_function("coequalizer t -> t^4 on Z", |b| b.iter(|| coequalizer(&f, &id, None).unwrap()));
}

fn antipode(c: &mut Criterion) {
    let h4 = example("h4", Field::Rational).unwrap();
    let table = compile(&h4, 3).unwrap();
    c.bench_function("compile H4", |b| b.iter(|| compile(black_box(&h4), 3).unwrap()));
    c.bench_function("solve antipode H4", |b| b.iter(|| solve_antipode(black_box(&table)).unwrap()));
}

criterion_group!(benches, completion, validation, colimits, antipode);
criterion_main!(benches);
