use cutseq::farey::farey_expansion;
use cutseq::sampling;
use cutseq::surface::{hexagon, trace, SurfaceError};
use cutseq::teich::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn cutting_sequence_is_the_farey_itinerary() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for k in 0..100 {
        let d = sampling::hexagon_sector_direction(&mut rng, k % 6);
        let c = teich_cutting_sequence(&d, 9).unwrap();
        assert!(c.no_immediate_repeats(), "{:?}", c.labels);
        assert_eq!(c.labels[0], k % 6);
        assert_eq!(c.farey_entries(), farey_expansion(&d, 8).unwrap().entries);
    }
}

#[test]
fn geometry_agrees_with_the_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..50 {
        let i = rng.gen_range(0..6);
        let d = sampling::hexagon_sector_direction(&mut rng, i);
        let r = geometric_crossing_check(&d, 3).unwrap();
        assert!(r.passed, "{:?}", r.levels);
    }
}

#[test]
fn derived_sequences_follow_the_ray() {
    let h = hexagon();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut done = 0;
    while done < 100 {
        let d = sampling::hexagon_sector_direction(&mut rng, done % 6);
        let t = sampling::trajectory(&mut rng, &h, d);
        let r = match fact3_check(&t, 4, 800) {
            Err(TeichError::WindowTooShort(_)) => fact3_check(&t, 4, 6000),
            r => r,
        };
        match r {
            Ok(r) => {
                assert!(r.passed, "{:?}", r.levels);
                assert_eq!(r.levels.len(), 5);
                done += 1;
            }
            Err(TeichError::Surface(SurfaceError::VertexHit(_))) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn level_zero_is_the_trace() {
    let h = hexagon();
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let d = sampling::hexagon_sector_direction(&mut rng, 2);
    let t = sampling::trajectory(&mut rng, &h, d);
    let r = fact3_check(&t, 0, 50).unwrap();
    assert_eq!(r.levels[0].combinatorial, trace(&h, &t, 50).unwrap().as_str());
    assert_eq!(r.levels[0].offset, Some(66));
}
