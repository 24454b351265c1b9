use cutseq::coding::*;
use cutseq::exact::{sector_of, Direction, SectorScheme};
use cutseq::farey::{farey_expansion, recognize_direction};
use cutseq::sampling;
use cutseq::surface::{affine_image, hexagon, trace, SurfaceError, Trajectory};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn traced(s: &cutseq::surface::SurfacePresentation, rng: &mut ChaCha8Rng, d: Direction, n: usize) -> (Trajectory, Word) {
    loop {
        let t = sampling::trajectory(rng, s, d.clone());
        match trace(s, &t, n) {
            Ok(w) => return (t, w),
            Err(SurfaceError::VertexHit(_)) => continue,
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn traces_are_admissible_in_their_sector_diagram() {
    let h = hexagon();
    let sch = hexagon_scheme();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..120 {
        let i = k % 6;
        let d = sampling::hexagon_sector_direction(&mut rng, i);
        let (_, w) = traced(&h, &mut rng, d, 60);
        assert!(sch.admissible(&w).contains(&i), "sector {i}: {w:?}");
    }
}

#[test]
fn permutations_match_the_symmetries() {
    let h = hexagon();
    let sym = hexagon_symmetry();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..6 {
        for _ in 0..10 {
            let d = sampling::hexagon_sector_direction(&mut rng, i);
            let (t, w) = traced(&h, &mut rng, d, 40);
            let m = &sym.matrices[i];
            let moved = Trajectory::new(m.apply(&t.start), t.direction.transform(m).unwrap());
            let w2 = trace(&h, &moved, 40).unwrap();
            assert_eq!(w2, sym.perms[i].apply_word(&w).unwrap(), "pi_{i}");
            assert_eq!(sector_of(&moved.direction.upper(), SectorScheme::Hexagon).unique(), Some(0));
        }
    }
}

#[test]
fn derived_sequence_is_the_sheared_trajectory() {
    let h = hexagon();
    let g = hexagon_gamma();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let d = sampling::hexagon_sector_direction(&mut rng, 0);
        let (t, w) = traced(&h, &mut rng, d, 80);
        let core = derive_sandwich(&w).unwrap().word;
        let t2 = affine_image(&h, &g, &t).unwrap();
        let back = Trajectory::new(t2.start.clone(), t2.direction.clone());
        let w2 = trace(&h, &back, 80).unwrap();
        let rev = Trajectory::new(t2.start.clone(), Direction::new(-t2.direction.vector()).unwrap());
        let w3 = trace(&h, &rev, 80).unwrap();
        let mut both: Vec<char> = w3.letters.iter().rev().cloned().collect();
        both.extend(w2.letters.iter());
        let window = Word::new(both);
        assert!(aligned(&core, &window).is_some(), "{core:?} in {window:?}");
    }
}

#[test]
fn recognition_matches_expansion() {
    let h = hexagon();
    let sch = hexagon_scheme();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut ok = 0;
    for k in 0..30 {
        let d = sampling::hexagon_sector_direction(&mut rng, k % 6);
        let (_, w) = traced(&h, &mut rng, d.clone(), 1500);
        let e = farey_expansion(&d, 4).unwrap();
        match recognize_direction(&sch, &w, 4) {
            Ok(r) => {
                assert_eq!(r.entries, e.entries);
                ok += 1;
            }
            Err(err) => println!("{err} expected {:?}", e.entries),
        }
    }
    assert!(ok >= 20, "{ok}");
}
