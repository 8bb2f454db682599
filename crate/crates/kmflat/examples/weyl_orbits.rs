//! Walk the Weyl group of a rank-2 hyperbolic matrix: canonical words,
//! a ball in the Cayley graph, and the real roots below a height cutoff.

use kmflat::gcm::validate_gcm_i64;
use kmflat::realization::build_realization;
use kmflat::weyl::{coxeter_matrix, CoxeterOrder, WeylGroup};

fn main() {
    let m = validate_gcm_i64(&[&[2, -2], &[-1, 2]]).unwrap();
    let rd = build_realization(&m);
    let wg = WeylGroup::new(&rd);

    print!("Coxeter orders m_ij:");
    for row in coxeter_matrix(&m) {
        for entry in row {
            match entry {
                CoxeterOrder::Finite(k) => print!(" {k}"),
                CoxeterOrder::Infinite => print!(" inf"),
            }
        }
    }
    println!();

    // A non-reduced word collapses to its ShortLex normal form.
    let messy = [0, 1, 1, 0, 0];
    let w = wg.from_word(&messy).unwrap();
    println!(
        "word {:?} canonicalizes to {:?}, length {}",
        messy.iter().map(|i| i + 1).collect::<Vec<_>>(),
        w.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
        w.length()
    );

    let ball = wg.ball(4);
    println!("elements of length <= 4: {}", ball.len());
    for w in ball.iter().filter(|w| w.length() == 4) {
        println!(
            "  length-4 element {:?}",
            w.word.iter().map(|i| i + 1).collect::<Vec<_>>()
        );
    }

    let roots = wg.positive_real_roots(8);
    println!("positive real roots of height <= 8: {}", roots.len());
    for r in &roots {
        let coeffs: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
        println!("  height {:>2}: ({})", r.height, coeffs.join(", "));
    }
}
