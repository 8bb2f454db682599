//! The horizon complex of affine A1: ideal cells indexed by spherical
//! residues in a ball of the Weyl group, realized as polyhedral cones.
//! Points are located by descent, closure relations match the coset
//! combinatorics, and the poset exports to DOT.

use kmflat::gcm::validate_gcm_i64;
use kmflat::horizon::{Half, HorizonComplex};
use kmflat::linalg::rat_to_string;

fn main() {
    let m = validate_gcm_i64(&[&[2, -2], &[-2, 2]]).unwrap();
    let cx = HorizonComplex::build(&m, 3).unwrap();
    println!("radius 3 complex: {} cells", cx.cells.len());

    for (k, cell) in cx.cells.iter().enumerate().take(6) {
        let word: Vec<usize> = cell.residue.rep.word.iter().map(|i| i + 1).collect();
        let j: Vec<usize> = cell.residue.j.j.iter().map(|i| i + 1).collect();
        let rays: Vec<String> = cell
            .rays
            .iter()
            .map(|r| {
                let cs: Vec<String> = r.iter().map(rat_to_string).collect();
                format!("({})", cs.join(","))
            })
            .collect();
        println!(
            "cell {k}: w = {word:?}, J = {j:?}, {:?}, rays {rays:?}, lineality dim {}",
            cell.half,
            cell.lineality.len()
        );
    }

    // Locate the cell containing a relative-interior sample of each cell.
    let chamber = cx.find(&[], &[], Half::Positive).unwrap();
    let p = cx.sample_point(&cx.cells[chamber]);
    println!(
        "sample of the fundamental chamber cell relocates to index {:?}",
        cx.locate_point(&p)
    );

    // Closure order versus coset containment (an anti-isomorphism).
    let panel = cx.find(&[], &[0], Half::Positive).unwrap();
    println!(
        "panel J = [1] lies in the chamber closure: {} (coset check: {})",
        cx.in_closure(panel, chamber),
        cx.coset_contains(panel, chamber)
    );

    let dot = cx.poset_dot();
    println!("DOT export: {} lines", dot.lines().count());
    println!("{}", dot.lines().take(5).collect::<Vec<_>>().join("\n"));
}
