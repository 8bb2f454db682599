//! Three models of the same reflection structure on a maximal flat:
//! additive coordinates (mu(x,y) = 2x - y), the split torus
//! (mu(a,b) = a^2 b^{-1}), and positive definite matrices
//! (mu(x,y) = x y^{-1} x). Each is checked against the symmetric-space
//! axioms on a random sample.

use kmflat::flat::{
    check_loos_axioms, exp_flat, flat_distance, log_flat, mu_flat, mu_group_model, mu_torus,
    sample_flat_points, sample_posdef, FieldMode, FlatSpacePoint,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let pts = sample_flat_points(3, 40, &mut rng);
    let report = check_loos_axioms(&pts, |x, y| mu_flat(x, y).unwrap(), flat_distance, 1e-10);
    println!(
        "flat model: passed = {}, {} points, {} violations",
        report.passed,
        report.checked_points,
        report.violations.len()
    );

    let torus_pts: Vec<_> = sample_flat_points(2, 30, &mut rng)
        .into_iter()
        .map(|p| exp_flat(FieldMode::Real, &p.coords).unwrap())
        .collect();
    let torus_dist = |a: &kmflat::flat::TorusElement, b: &kmflat::flat::TorusElement| {
        let (la, lb) = (log_flat(a), log_flat(b));
        la.iter().zip(&lb).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
    };
    let report = check_loos_axioms(&torus_pts, |a, b| mu_torus(a, b), torus_dist, 1e-9);
    println!(
        "torus model: passed = {}, {} points",
        report.passed, report.checked_points
    );

    // The triple products in S3 amplify rounding with the condition
    // numbers of the sample, so the matrix model gets a looser tolerance.
    let mats = sample_posdef(3, 20, &mut rng);
    let mat_dist = |x: &nalgebra::DMatrix<f64>, y: &nalgebra::DMatrix<f64>| (x - y).norm();
    let report = check_loos_axioms(&mats, |x, y| mu_group_model(x, y).unwrap(), mat_dist, 1e-5);
    println!(
        "positive definite model: passed = {}, {} points",
        report.passed, report.checked_points
    );

    // The exponential intertwines the flat and torus products.
    let x = FlatSpacePoint::new(vec![0.3, -1.2]);
    let y = FlatSpacePoint::new(vec![0.9, 0.4]);
    let lhs = exp_flat(FieldMode::Real, &mu_flat(&x, &y).unwrap().coords).unwrap();
    let rhs = mu_torus(
        &exp_flat(FieldMode::Real, &x.coords).unwrap(),
        &exp_flat(FieldMode::Real, &y.coords).unwrap(),
    );
    println!(
        "exp intertwines the products: {}",
        torus_dist(&lhs, &rhs) < 1e-12
    );
}
