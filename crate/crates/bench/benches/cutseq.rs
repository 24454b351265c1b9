use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cutseq::bouwmoller::{build_r1, theorem_case, BmAffineMap};
use cutseq::coding::{derive_sandwich, hexagon_scheme};
use cutseq::exact::{parse_vec2, Direction};
use cutseq::farey::farey_expansion;
use cutseq::sampling;
use cutseq::surface::{hexagon, trace, Trajectory};

fn hexagon_trajectory() -> Trajectory {
    let d = Direction::new(parse_vec2("10,1").unwrap()).unwrap();
    Trajectory::new(parse_vec2("0,-1/4").unwrap(), d)
}

fn bench_trace(c: &mut Criterion) {
    let h = hexagon();
    let t = hexagon_trajectory();
    c.bench_function("trace hexagon 400", |b| b.iter(|| trace(&h, black_box(&t), 400).unwrap()));
}

fn bench_derive(c: &mut Criterion) {
    let w = trace(&hexagon(), &hexagon_trajectory(), 400).unwrap();
    let sch = hexagon_scheme();
    let (n, _) = sch.normal_form(&w).unwrap();
    c.bench_function("derive_sandwich 400", |b| b.iter(|| derive_sandwich(black_box(&n)).unwrap()));
    c.bench_function("normalize_and_derive 400", |b| b.iter(|| sch.normalize_and_derive(black_box(&w)).unwrap()));
}

fn bench_farey(c: &mut Criterion) {
    let d = Direction::new(parse_vec2("1000003,117").unwrap()).unwrap();
    c.bench_function("farey_expansion depth 12", |b| b.iter(|| farey_expansion(black_box(&d), 12)));
}

fn bench_theorem_case(c: &mut Criterion) {
    let map = BmAffineMap::new().unwrap();
    let r1 = build_r1();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let t = loop {
        let d = sampling::octant_direction(&mut rng, 7);
        let t = sampling::trajectory(&mut rng, &r1, d);
        if theorem_case(&map, &t, 60).is_ok() {
            break t;
        }
    };
    let mut g = c.benchmark_group("bouw-moller");
    g.sample_size(20);
    g.bench_function("theorem_case 60", |b| b.iter(|| theorem_case(&map, black_box(&t), 60).unwrap()));
    g.finish();
}

criterion_group!(benches, bench_trace, bench_derive, bench_farey, bench_theorem_case);
criterion_main!(benches);
