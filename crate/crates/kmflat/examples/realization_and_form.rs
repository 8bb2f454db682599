//! Build the extended realization of the affine A1 matrix. The space has
//! dimension 2n - l = 3; the extra coordinate makes the root covectors
//! linearly independent, and the invariant bilinear form extends by zero
//! on the added directions.

use kmflat::gcm::{symmetrize, validate_gcm_i64};
use kmflat::linalg::rat_to_string;
use kmflat::realization::{build_bilinear_form, build_realization, RealFormPoint};

fn main() {
    let m = validate_gcm_i64(&[&[2, -2], &[-2, 2]]).unwrap();
    let rd = build_realization(&m);
    println!("rank {} matrix, realization dimension {}", rd.rank, rd.dim);
    println!(
        "dependent rows (1-based): {:?}",
        rd.dependent_rows.iter().map(|i| i + 1).collect::<Vec<_>>()
    );

    let show = |v: &[kmflat::linalg::Rat]| {
        v.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")
    };
    for (i, h) in rd.coroots.iter().enumerate() {
        println!("coroot h{} = ({})", i + 1, show(h));
    }
    for (i, c) in rd.roots.iter().enumerate() {
        println!("root covector c{} = ({})", i + 1, show(c));
    }

    // Pairings <c_i, h_j> recover the Cartan matrix column by column.
    for j in 0..rd.coroots.len() {
        let p = RealFormPoint::new(rd.coroots[j].clone());
        let vals = rd.pairings(&p.coords);
        println!("pairings against h{} = ({})", j + 1, show(&vals));
    }

    let s = symmetrize(&m).unwrap();
    let form = build_bilinear_form(&rd, &s).unwrap();
    println!("Gram matrix of the invariant form:");
    for row in form.gram.to_rows() {
        println!("  ({})", show(&row));
    }
}
