use cutseq::coding::Word;
use cutseq::exact::{Direction, Vec2};
use cutseq::sampling;
use cutseq::surface::{hex_to_parallelogram_map, hexagon, parallelogram, square, trace, SurfaceError, Trajectory};
use cutseq::torus::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn square_trajectory(rng: &mut ChaCha8Rng) -> Trajectory {
    let d = sampling::direction_between(rng, &Vec2::ints(1, 0), &Vec2::ints(1, 1));
    sampling::trajectory(rng, &square(), d)
}

#[test]
fn square_sandwich_with_gamma_prime() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 60 {
        let t = square_trajectory(&mut rng);
        match square_case(&square_gamma_prime(), &t, 60) {
            Ok(c) => {
                assert!(c.offset.is_some(), "{c:?}");
                done += 1;
            }
            Err(TorusError::Surface(SurfaceError::VertexHit(_))) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn square_sandwich_with_sigma_fails_and_collapses() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut failures = 0;
    let mut checked = 0;
    while checked < 40 {
        let t = square_trajectory(&mut rng);
        let (Ok(c), Ok(col)) = (square_case(&square_gamma(), &t, 60), sigma_collapse(&t, 60)) else { continue };
        checked += 1;
        failures += c.offset.is_none() as usize;
        assert!(col.equal, "{col:?}");
    }
    assert!(failures > 0);
}

#[test]
fn series_is_accelerated_single_steps() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut done = 0;
    while done < 50 {
        let t = square_trajectory(&mut rng);
        let Ok(w) = trace(&square(), &t, 120) else { continue };
        match (series_derive(&w), accelerated_single_steps(&w)) {
            (Ok(a), Ok(b)) => {
                assert_eq!(a, b);
                done += 1;
            }
            (Err(_), Err(_)) => {}
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn dictionary_matches_the_parallelogram_trace() {
    let h = hexagon();
    let p = parallelogram();
    let map = hex_to_parallelogram_map();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut done = 0;
    while done < 60 {
        let d = sampling::hexagon_sector_direction(&mut rng, 0);
        let t = sampling::trajectory(&mut rng, &h, d.clone());
        let Ok(w) = trace(&h, &t, 60) else { continue };
        let dict = hex_to_parallelogram(&w).unwrap();
        let start = map.apply(&t.start).unwrap();
        let Ok(wp) = trace(&p, &Trajectory::new(start, d), 200) else { continue };
        assert!(dict.find_in(&wp).is_some(), "{} in {}", dict.as_str(), wp.as_str());
        done += 1;
    }
    let _ = Direction::from_ints(1, 0);
    let _ = Word::from("");
}
