//! Local transformations: linear maps of the realization that permute
//! the real-root hyperplanes. A Weyl reflection passes the test exactly;
//! a generic shear fails with a witness root whose image wall is not a
//! wall.

use kmflat::gcm::validate_gcm_i64;
use kmflat::linalg::{rat, RatMat};
use kmflat::local::{covector_as_root, is_local_transformation, LocalVerdict};
use kmflat::realization::build_realization;
use kmflat::weyl::WeylGroup;

fn main() {
    let m = validate_gcm_i64(&[&[2, -1], &[-1, 2]]).unwrap();
    let rd = build_realization(&m);
    let wg = WeylGroup::new(&rd);

    let s1 = wg.simple_reflection(0).unwrap();
    match is_local_transformation(&wg, &s1.matrix, 10).unwrap() {
        LocalVerdict::Yes { certified_height } => {
            println!("s1 is local, certified to height {certified_height}");
        }
        LocalVerdict::No { witness } => println!("unexpected witness {:?}", witness.coeffs),
    }

    // -id preserves every hyperplane.
    let minus_id = RatMat::from_int_rows(&[&[-1, 0], &[0, -1]]);
    match is_local_transformation(&wg, &minus_id, 10).unwrap() {
        LocalVerdict::Yes { certified_height } => {
            println!("-id is local, certified to height {certified_height}");
        }
        LocalVerdict::No { witness } => println!("unexpected witness {:?}", witness.coeffs),
    }

    let shear = RatMat::from_int_rows(&[&[1, 1], &[0, 1]]);
    match is_local_transformation(&wg, &shear, 10).unwrap() {
        LocalVerdict::Yes { .. } => println!("unexpected: shear certified local"),
        LocalVerdict::No { witness } => {
            let c: Vec<String> = witness.coeffs.iter().map(|x| x.to_string()).collect();
            println!("shear rejected, witness root ({})", c.join(", "));
        }
    }

    // Deciding whether a covector is proportional to a real root is exact.
    let c1_plus_c2: Vec<_> = rd.roots[0]
        .iter()
        .zip(&rd.roots[1])
        .map(|(a, b)| a + b)
        .collect();
    println!(
        "c1 + c2 is a root: {:?}",
        covector_as_root(&wg, &c1_plus_c2).map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    );
    let off_wall = vec![rat(1), rat(3)];
    println!("(1, 3) is a root: {:?}", covector_as_root(&wg, &off_wall).is_some());
}
