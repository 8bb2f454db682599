//! Classify a handful of generalized Cartan matrices and print their
//! symmetrizers. The finite/affine/indefinite trichotomy comes with an
//! exact certificate: a positive kernel vector in the affine case.

use kmflat::gcm::{classify, symmetrize, validate_gcm_i64};
use kmflat::linalg::rat_to_string;

fn main() {
    let samples: Vec<(&str, Vec<Vec<i64>>)> = vec![
        ("A2", vec![vec![2, -1], vec![-1, 2]]),
        ("B2", vec![vec![2, -2], vec![-1, 2]]),
        ("G2", vec![vec![2, -3], vec![-1, 2]]),
        ("affine A1", vec![vec![2, -2], vec![-2, 2]]),
        ("affine A2", vec![
            vec![2, -1, -1],
            vec![-1, 2, -1],
            vec![-1, -1, 2],
        ]),
        ("rank-2 hyperbolic", vec![vec![2, -3], vec![-3, 2]]),
        ("A1 x A1", vec![vec![2, 0], vec![0, 2]]),
    ];

    for (name, rows) in samples {
        let borrowed: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = validate_gcm_i64(&borrowed).expect("valid GCM");
        println!("{name}:");
        for comp in classify(&m) {
            let support: Vec<usize> = comp.support.iter().map(|i| i + 1).collect();
            print!(
                "  component {:?}: {:?}, rank {}",
                support, comp.certificate.kind, comp.certificate.rank
            );
            if let Some(w) = &comp.certificate.witness {
                let w: Vec<String> = w.iter().map(rat_to_string).collect();
                print!(", witness {:?}", w);
            }
            println!();
        }
        match symmetrize(&m) {
            Ok(s) => {
                let d: Vec<String> = s.d.iter().map(rat_to_string).collect();
                println!("  symmetrizer d = {d:?}");
            }
            Err(e) => println!("  not symmetrizable: {e}"),
        }
    }
}
