//! The Tits cone of affine A1 is an open half space together with the
//! fixed line, so membership has a closed form: the pairing against the
//! null covector delta decides everything. The greedy descent recovers
//! the chamber of a point and the word that reaches it.

use kmflat::cone::{affine_delta_covector, causal_direction, singular_membership, tits_cone_membership, SingularResult};
use kmflat::gcm::validate_gcm_i64;
use kmflat::linalg::{rat, rat_to_string, Rat};
use kmflat::realization::{build_realization, RealFormPoint};
use kmflat::weyl::WeylGroup;

fn point(coords: &[i64]) -> RealFormPoint {
    RealFormPoint::new(coords.iter().map(|&x| rat(x)).collect())
}

fn main() {
    let m = validate_gcm_i64(&[&[2, -2], &[-2, 2]]).unwrap();
    let rd = build_realization(&m);
    let wg = WeylGroup::new(&rd);

    let delta = affine_delta_covector(&wg).expect("affine type");
    let delta: Vec<String> = delta.iter().map(rat_to_string).collect();
    println!("delta covector: ({})", delta.join(", "));

    for coords in [
        &[1i64, 0, 1][..],
        &[0, 5, 1],
        &[-3, 2, 1],
        &[1, 1, 0],
        &[1, 0, -1],
    ] {
        let q = tits_cone_membership(&wg, &point(coords), 200);
        let word: Vec<usize> = q.descent_word.iter().map(|i| i + 1).collect();
        println!("{coords:?}: {:?}, descent word {word:?}", q.status);
    }

    // Regular versus singular within a height window. The point
    // (1, 0, 1) happens to lie on the wall of the root alpha1 + 2 alpha2.
    for coords in [&[1i64, 0, 3][..], &[1, 0, 1], &[0, 0, 1]] {
        match singular_membership(&wg, &point(coords), 8) {
            SingularResult::Singular(r) => {
                let c: Vec<String> = r.coeffs.iter().map(|x| x.to_string()).collect();
                println!("{coords:?} lies on the wall of root ({})", c.join(", "));
            }
            SingularResult::RegularUpTo(h) => {
                println!("{coords:?} is regular for all roots of height <= {h}");
            }
        }
    }

    // Causal character of directions, decided on the closed cone: the
    // closure is the half space delta >= 0, so the sign of the last
    // coordinate tells the story.
    for coords in [&[0i64, 0, 1][..], &[1, 1, 0], &[0, 0, -1]] {
        let v: Vec<Rat> = coords.iter().map(|&x| rat(x)).collect();
        let c = causal_direction(&wg, &RealFormPoint::new(v), 200).unwrap();
        println!("direction {coords:?}: {c:?}");
    }
}
