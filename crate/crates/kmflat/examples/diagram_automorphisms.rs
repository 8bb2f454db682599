//! Symmetries of the Dynkin diagram act on the realization. For most
//! matrices every Coxeter-system automorphism already preserves the GCM;
//! B2 shows the opposite: swapping the two nodes preserves the Coxeter
//! orders but not the arrow direction.

use kmflat::gcm::{symmetrize, validate_gcm_i64};
use kmflat::local::{
    diagram_automorphisms, factor_homothety, induced_map, induced_map_respects_pairings,
    HomothetyFactor,
};
use kmflat::realization::{build_bilinear_form, build_realization};

fn show(perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms.iter().map(|p| p.iter().map(|i| i + 1).collect()).collect()
}

fn main() {
    for (name, rows) in [
        ("A2", vec![vec![2i64, -1], vec![-1, 2]]),
        ("B2", vec![vec![2, -2], vec![-1, 2]]),
        ("affine A2", vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]),
    ] {
        let borrowed: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = validate_gcm_i64(&borrowed).unwrap();
        let (aut_gamma, aut_ws) = diagram_automorphisms(&m).unwrap();
        println!(
            "{name}: Aut(Gamma) = {:?}, Aut(W,S) = {:?}, equal = {}",
            show(&aut_gamma),
            show(&aut_ws),
            aut_gamma == aut_ws
        );
    }

    // The swap of A2 induces an exact isometry of the realization.
    let m = validate_gcm_i64(&[&[2, -1], &[-1, 2]]).unwrap();
    let rd = build_realization(&m);
    let f = induced_map(&rd, &[1, 0]);
    println!(
        "induced map of the A2 swap respects all pairings: {}",
        induced_map_respects_pairings(&rd, &[1, 0], &f)
    );
    let s = symmetrize(&m).unwrap();
    let form = build_bilinear_form(&rd, &s).unwrap();
    match factor_homothety(&f, &form).unwrap() {
        HomothetyFactor::Exact { r, .. } => {
            println!("homothety factor: exact, r = {r}");
        }
        HomothetyFactor::Approx { r, .. } => {
            println!("homothety factor: approximate, r = {r}");
        }
    }
}
