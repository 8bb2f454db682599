//! Upper half-space model of hyperbolic 3-space acted on by SL(2, C) via
//! Moebius transformations. Geodesic rays are followed to their ideal
//! endpoints on the boundary sphere C u {inf}, and asymptote classes are
//! preserved by the action.

use kmflat::sl2::{
    are_asymptotic, boundary_act, chordal_distance, moebius_act, ray_from_direction,
    ray_from_endpoint, transform_ray, BoundaryPoint, HPoint, Sl2,
};
use num_complex::Complex64;

fn main() {
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);

    // Diagonal elements scale: base point j = (0, 1) moves along the axis.
    let a = Sl2::new(2.0 * one, 0.0 * one, 0.0 * one, 0.5 * one).unwrap();
    let base = HPoint::h2(0.0, 1.0);
    let moved = moebius_act(&a, &base).unwrap();
    println!("diag(2, 1/2) moves (0, 1) to z = {}, h = {}", moved.z, moved.h);

    // A vertical ray from the base point ends at infinity; pushing it
    // around by a parabolic element keeps it a ray with a finite endpoint.
    let vertical = ray_from_direction(base.clone(), Complex64::new(0.0, 0.0), 1.0).unwrap();
    println!("vertical ray endpoint: {:?}", vertical.endpoint);

    let p = Sl2::new(one, i, 0.0 * one, one).unwrap();
    let w = Sl2::new(0.0 * one, one, -one, 0.0 * one).unwrap();
    let g = p.mul(&w);
    let moved_ray = transform_ray(&g, &vertical).unwrap();
    println!("after g, endpoint: {:?}", moved_ray.endpoint);
    println!(
        "endpoint transforms equivariantly: {}",
        chordal_distance(
            &moved_ray.endpoint,
            &boundary_act(&g, &vertical.endpoint)
        ) < 1e-10
    );

    // Two rays are asymptotic exactly when they share an endpoint.
    let target = BoundaryPoint::Finite(Complex64::new(1.0, 1.0));
    let r1 = ray_from_endpoint(HPoint::h2(0.0, 1.0), target.clone()).unwrap();
    let r2 = ray_from_endpoint(HPoint::h2(-2.0, 3.0), target).unwrap();
    println!("rays from different points, same endpoint: asymptotic = {}", are_asymptotic(&r1, &r2));
    println!("vertical ray vs r1: asymptotic = {}", are_asymptotic(&vertical, &r1));

    // Chordal metric treats infinity as an ordinary point of the sphere.
    let d = chordal_distance(
        &BoundaryPoint::Infinity,
        &BoundaryPoint::Finite(Complex64::new(0.0, 0.0)),
    );
    println!("chordal distance from 0 to infinity: {d}");
}
