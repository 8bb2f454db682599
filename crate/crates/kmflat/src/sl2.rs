//! Rank-one numeric laboratory: SL(2,R) and SL(2,C), the Chevalley
//! involution, the twist map, Iwasawa decompositions, the symmetric-element
//! criterion, and geodesic rays of the upper half-plane and half-space
//! with their boundary endpoints.

use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum Sl2Error {
    #[error("determinant {0} is not 1 within tolerance")]
    NotUnimodular(f64),
    #[error("matrix numerically singular (condition number above 1e12)")]
    NumericallySingular,
    #[error("point lies on the boundary (height must be positive)")]
    PointOnBoundary,
}

const DET_TOL: f64 = 1e-10;

/// Element of SL(2), stored as complex entries; real elements have zero
/// imaginary parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sl2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

fn cx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl Sl2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Sl2, Sl2Error> {
        let det = a * d - b * c;
        if (det - cx(1.0)).norm() > DET_TOL {
            return Err(Sl2Error::NotUnimodular((det - cx(1.0)).norm()));
        }
        Ok(Sl2 { a, b, c, d })
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Result<Sl2, Sl2Error> {
        Sl2::new(cx(a), cx(b), cx(c), cx(d))
    }

    pub fn identity() -> Sl2 {
        Sl2 { a: cx(1.0), b: cx(0.0), c: cx(0.0), d: cx(1.0) }
    }

    pub fn mul(&self, o: &Sl2) -> Sl2 {
        Sl2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// Inverse through the det-1 adjugate.
    pub fn inverse(&self) -> Sl2 {
        Sl2 { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Sl2 {
        Sl2 { a: self.a.conj(), b: self.c.conj(), c: self.b.conj(), d: self.d.conj() }
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    pub fn frobenius(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    pub fn dist(&self, o: &Sl2) -> f64 {
        Sl2 {
            a: self.a - o.a,
            b: self.b - o.b,
            c: self.c - o.c,
            d: self.d - o.d,
        }
        .frobenius()
    }

    pub fn is_real(&self) -> bool {
        self.a.im == 0.0 && self.b.im == 0.0 && self.c.im == 0.0 && self.d.im == 0.0
    }

    /// Condition-number estimate through Frobenius norms.
    pub fn condition(&self) -> f64 {
        self.frobenius() * self.inverse().frobenius()
    }
}

/// Chevalley involution Theta(g) = conj(g)^{-T}; fixes SO(2)/SU(2).
pub fn chevalley_theta(g: &Sl2) -> Sl2 {
    // transpose of conj(g), then det-1 inverse
    let t = Sl2 {
        a: g.a.conj(),
        b: g.c.conj(),
        c: g.b.conj(),
        d: g.d.conj(),
    };
    t.inverse()
}

/// Twist map tau(g) = g Theta(g)^{-1} = g g^H: Hermitian positive definite, det 1.
pub fn twist_sl2(g: &Sl2) -> Sl2 {
    g.mul(&g.adjoint())
}

/// Membership in K = Theta-fixed points, within tolerance.
pub fn is_in_k(g: &Sl2, tol: f64) -> bool {
    chevalley_theta(g).dist(g) <= tol
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IwasawaOrder {
    Uak,
    Kau,
}

#[derive(Clone, Copy, Debug)]
pub struct IwasawaTriple {
    pub u: Sl2,
    pub a: Sl2,
    pub k: Sl2,
    pub order: IwasawaOrder,
}

impl IwasawaTriple {
    pub fn compose(&self) -> Sl2 {
        match self.order {
            IwasawaOrder::Uak => self.u.mul(&self.a).mul(&self.k),
            IwasawaOrder::Kau => self.k.mul(&self.a).mul(&self.u),
        }
    }
}

/// Unique Iwasawa decomposition in the requested order: u upper
/// unitriangular, a positive diagonal det 1, k in SU(2) (or SO(2) for
/// real input).
pub fn iwasawa_decompose(g: &Sl2, order: IwasawaOrder) -> Result<IwasawaTriple, Sl2Error> {
    if g.condition() > 1e12 {
        return Err(Sl2Error::NumericallySingular);
    }
    match order {
        IwasawaOrder::Uak => {
            // k: unitary with second row proportional to (c, d); then
            // g k^H is upper triangular with positive diagonal
            let n = (g.c.norm_sqr() + g.d.norm_sqr()).sqrt();
            let k = Sl2 {
                a: g.d.conj() / n,
                b: -g.c.conj() / n,
                c: g.c / n,
                d: g.d / n,
            };
            let t = g.mul(&k.adjoint());
            // t = [[1/n, t12], [0, n]] with t12 = a c^H-combination
            let a = Sl2 { a: cx(1.0 / n), b: cx(0.0), c: cx(0.0), d: cx(n) };
            let u = Sl2 { a: cx(1.0), b: t.b / n, c: cx(0.0), d: cx(1.0) };
            Ok(IwasawaTriple { u, a, k, order })
        }
        IwasawaOrder::Kau => {
            // Gram-Schmidt on the columns: g = Q R, Q unitary det 1
            let col1 = (g.a, g.c);
            let n1 = (col1.0.norm_sqr() + col1.1.norm_sqr()).sqrt();
            let q1 = (col1.0 / n1, col1.1 / n1);
            let proj = q1.0.conj() * g.b + q1.1.conj() * g.d;
            let w = (g.b - proj * q1.0, g.d - proj * q1.1);
            let n2 = (w.0.norm_sqr() + w.1.norm_sqr()).sqrt();
            let q2 = (w.0 / n2, w.1 / n2);
            let k = Sl2 { a: q1.0, b: q2.0, c: q1.1, d: q2.1 };
            // R = K^H g has diagonal (n1, n2) with n1 n2 = |det g| = 1
            let r = k.adjoint().mul(g);
            let a = Sl2 { a: cx(n1), b: cx(0.0), c: cx(0.0), d: cx(n2) };
            let u = Sl2 { a: cx(1.0), b: r.b / n1, c: cx(0.0), d: cx(1.0) };
            Ok(IwasawaTriple { u, a, k, order })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SymmetricVerdict {
    Yes { spectrum: (f64, f64) },
    No,
}

/// Symmetric elements are exactly the Hermitian ones (Theta(g) = g^{-1});
/// their spectrum is real with product 1, conjugate into the diagonal torus.
pub fn is_symmetric_element(g: &Sl2) -> SymmetricVerdict {
    if chevalley_theta(g).dist(&g.inverse()) >= 1e-10 {
        return SymmetricVerdict::No;
    }
    let tr = g.trace().re;
    let disc = (tr * tr - 4.0).max(0.0).sqrt();
    let l1 = (tr + disc) / 2.0;
    let l2 = (tr - disc) / 2.0;
    SymmetricVerdict::Yes { spectrum: (l1, l2) }
}

/// Point of the upper half-space model of H^3; the real slice (z real)
/// is the upper half-plane H^2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HPoint {
    pub z: Complex64,
    pub h: f64,
}

impl HPoint {
    pub fn h2(x: f64, y: f64) -> HPoint {
        HPoint { z: cx(x), h: y }
    }
}

/// Moebius action of SL(2,C) on upper half-space (z, h); restricts to the
/// fractional-linear action on H^2 for real matrices and real z.
pub fn moebius_act(g: &Sl2, p: &HPoint) -> Result<HPoint, Sl2Error> {
    if p.h <= 0.0 {
        return Err(Sl2Error::PointOnBoundary);
    }
    let den = g.c * p.z + g.d;
    let big_d = den.norm_sqr() + g.c.norm_sqr() * p.h * p.h;
    let z = ((g.a * p.z + g.b) * den.conj() + g.a * g.c.conj() * p.h * p.h) / big_d;
    Ok(HPoint { z, h: p.h / big_d })
}

/// Boundary point of H^2 / H^3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryPoint {
    Finite(Complex64),
    Infinity,
}

/// Chordal metric on the boundary sphere C union {infinity}.
pub fn chordal_distance(p: &BoundaryPoint, q: &BoundaryPoint) -> f64 {
    match (p, q) {
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => 0.0,
        (BoundaryPoint::Finite(z), BoundaryPoint::Infinity)
        | (BoundaryPoint::Infinity, BoundaryPoint::Finite(z)) => {
            2.0 / (1.0 + z.norm_sqr()).sqrt()
        }
        (BoundaryPoint::Finite(z), BoundaryPoint::Finite(w)) => {
            2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
        }
    }
}

/// Action of g on the boundary sphere.
pub fn boundary_act(g: &Sl2, e: &BoundaryPoint) -> BoundaryPoint {
    match e {
        BoundaryPoint::Infinity => {
            if g.c.norm() == 0.0 {
                BoundaryPoint::Infinity
            } else {
                BoundaryPoint::Finite(g.a / g.c)
            }
        }
        BoundaryPoint::Finite(z) => {
            let den = g.c * z + g.d;
            if den.norm() < 1e-14 {
                BoundaryPoint::Infinity
            } else {
                BoundaryPoint::Finite((g.a * z + g.b) / den)
            }
        }
    }
}

/// Geodesic ray: start point, unit tangent, and the boundary endpoint it
/// converges to.
#[derive(Clone, Copy, Debug)]
pub struct HyperbolicRay {
    pub start: HPoint,
    /// Horizontal and vertical components of the unit tangent.
    pub dir_z: Complex64,
    pub dir_h: f64,
    pub endpoint: BoundaryPoint,
}

/// Ray from a start point and a tangent direction (normalized internally).
pub fn ray_from_direction(start: HPoint, dir_z: Complex64, dir_h: f64) -> Result<HyperbolicRay, Sl2Error> {
    if start.h <= 0.0 {
        return Err(Sl2Error::PointOnBoundary);
    }
    let norm = (dir_z.norm_sqr() + dir_h * dir_h).sqrt();
    assert!(norm > 0.0, "direction must be nonzero");
    let dir_z = dir_z / norm;
    let dir_h = dir_h / norm;
    let endpoint = if dir_z.norm() == 0.0 {
        if dir_h > 0.0 {
            BoundaryPoint::Infinity
        } else {
            BoundaryPoint::Finite(start.z)
        }
    } else {
        // in the vertical plane through the direction: the geodesic is a
        // half-circle with center at arc-length coordinate h*dir_h/|dir_z|
        // and radius h/|dir_z|; the ray runs toward increasing coordinate
        let v = dir_z.norm();
        let center = start.h * dir_h / v;
        let radius = start.h / v;
        BoundaryPoint::Finite(start.z + (dir_z / v) * (center + radius))
    };
    Ok(HyperbolicRay { start, dir_z, dir_h, endpoint })
}

/// Ray from a start point toward a prescribed boundary endpoint.
pub fn ray_from_endpoint(start: HPoint, endpoint: BoundaryPoint) -> Result<HyperbolicRay, Sl2Error> {
    if start.h <= 0.0 {
        return Err(Sl2Error::PointOnBoundary);
    }
    match endpoint {
        BoundaryPoint::Infinity => {
            Ok(HyperbolicRay { start, dir_z: cx(0.0), dir_h: 1.0, endpoint })
        }
        BoundaryPoint::Finite(e) => {
            let w = e - start.z;
            let d = w.norm();
            if d == 0.0 {
                return Ok(HyperbolicRay { start, dir_z: cx(0.0), dir_h: -1.0, endpoint });
            }
            // half-circle through (0, h) and (d, 0) in the vertical plane:
            // center (d^2 - h^2)/(2d), tangent at the start proportional to
            // (h, center)
            let center = (d * d - start.h * start.h) / (2.0 * d);
            let norm = (start.h * start.h + center * center).sqrt();
            Ok(HyperbolicRay {
                start,
                dir_z: (w / d) * (start.h / norm),
                dir_h: center / norm,
                endpoint,
            })
        }
    }
}

/// Image ray under g: transform the start point and the endpoint, rebuild.
pub fn transform_ray(g: &Sl2, r: &HyperbolicRay) -> Result<HyperbolicRay, Sl2Error> {
    let start = moebius_act(g, &r.start)?;
    let endpoint = boundary_act(g, &r.endpoint);
    ray_from_endpoint(start, endpoint)
}

/// Asymptotic rays converge to the same boundary point.
pub fn are_asymptotic(r1: &HyperbolicRay, r2: &HyperbolicRay) -> bool {
    chordal_distance(&r1.endpoint, &r2.endpoint) < 1e-9
}

/// Seeded random element of SL(2,C) (or SL(2,R)), det normalized exactly.
pub fn random_sl2(rng: &mut impl Rng, real: bool) -> Sl2 {
    loop {
        let mut e = |_: ()| {
            if real {
                cx(rng.gen_range(-2.0..2.0))
            } else {
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
            }
        };
        let (a, b, c, d) = (e(()), e(()), e(()), e(()));
        let det = a * d - b * c;
        if det.norm() < 1e-3 {
            continue;
        }
        let s = det.sqrt();
        return Sl2 { a: a / s, b: b / s, c: c / s, d: d / s };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rot(theta: f64) -> Sl2 {
        Sl2::from_real(theta.cos(), -theta.sin(), theta.sin(), theta.cos()).unwrap()
    }

    #[test]
    fn theta_examples() {
        let id = Sl2::identity();
        assert_eq!(chevalley_theta(&id), id);
        let g = Sl2::from_real(2.0, 0.0, 0.0, 0.5).unwrap();
        let th = chevalley_theta(&g);
        assert!(th.dist(&Sl2::from_real(0.5, 0.0, 0.0, 2.0).unwrap()) < 1e-14);
        let k = rot(0.7);
        assert!(chevalley_theta(&k).dist(&k) < 1e-14);
        // involution on random elements
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = random_sl2(&mut rng, false);
            assert!(chevalley_theta(&chevalley_theta(&g)).dist(&g) < 1e-10);
        }
    }

    #[test]
    fn twist_examples() {
        let k = rot(1.1);
        assert!(twist_sl2(&k).dist(&Sl2::identity()) < 1e-14);
        let g = Sl2::from_real(2.0, 0.0, 0.0, 0.5).unwrap();
        assert!(twist_sl2(&g).dist(&Sl2::from_real(4.0, 0.0, 0.0, 0.25).unwrap()) < 1e-14);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let g = random_sl2(&mut rng, false);
            let t = twist_sl2(&g);
            assert!(chevalley_theta(&t).dist(&t.inverse()) < 1e-9);
            assert!((t.det() - Complex64::new(1.0, 0.0)).norm() < 1e-9);
            // positive definite: Hermitian with positive trace and det
            assert!(t.trace().re > 0.0);
        }
    }

    #[test]
    fn iwasawa_examples() {
        let id = Sl2::identity();
        let t = iwasawa_decompose(&id, IwasawaOrder::Uak).unwrap();
        assert!(t.u.dist(&id) < 1e-14 && t.a.dist(&id) < 1e-14 && t.k.dist(&id) < 1e-14);

        let u0 = Sl2::from_real(1.0, 3.5, 0.0, 1.0).unwrap();
        let t = iwasawa_decompose(&u0, IwasawaOrder::Uak).unwrap();
        assert!(t.u.dist(&u0) < 1e-12 && t.a.dist(&id) < 1e-12 && t.k.dist(&id) < 1e-12);

        let s = Sl2::from_real(0.0, 1.0, -1.0, 0.0).unwrap();
        let t = iwasawa_decompose(&s, IwasawaOrder::Uak).unwrap();
        assert!(t.u.dist(&id) < 1e-12 && t.a.dist(&id) < 1e-12 && t.k.dist(&s) < 1e-12);
    }

    #[test]
    fn iwasawa_round_trip_and_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for i in 0..500 {
            let g = random_sl2(&mut rng, i % 2 == 0);
            for order in [IwasawaOrder::Uak, IwasawaOrder::Kau] {
                let t = iwasawa_decompose(&g, order).unwrap();
                assert!(t.compose().dist(&g) < 1e-10, "round trip");
                // structure
                assert!(t.u.a == cx(1.0) && t.u.d == cx(1.0) && t.u.c == cx(0.0));
                assert!(t.a.a.im == 0.0 && t.a.a.re > 0.0 && t.a.d.re > 0.0);
                assert!((t.a.a.re * t.a.d.re - 1.0).abs() < 1e-10);
                assert!(is_in_k(&t.k, 1e-10));
                // real input gives a real triple
                if g.is_real() {
                    assert!(t.u.is_real() && t.k.is_real());
                }
            }
        }
    }

    #[test]
    fn symmetric_element_examples() {
        let g = Sl2::from_real(2.0, 0.0, 0.0, 0.5).unwrap();
        match is_symmetric_element(&g) {
            SymmetricVerdict::Yes { spectrum } => {
                assert!((spectrum.0 - 2.0).abs() < 1e-12);
                assert!((spectrum.1 - 0.5).abs() < 1e-12);
            }
            SymmetricVerdict::No => panic!("diagonal is symmetric"),
        }

        let g = Sl2::from_real(2.0, 1.0, 1.0, 1.0).unwrap();
        match is_symmetric_element(&g) {
            SymmetricVerdict::Yes { spectrum } => {
                assert!(spectrum.0 > 0.0 && spectrum.1 > 0.0);
                assert!((spectrum.0 * spectrum.1 - 1.0).abs() < 1e-10);
            }
            SymmetricVerdict::No => panic!("real symmetric det-1 matrix"),
        }

        let g = Sl2::from_real(1.0, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(is_symmetric_element(&g), SymmetricVerdict::No);
    }

    #[test]
    fn moebius_examples() {
        let i = HPoint::h2(0.0, 1.0);
        let tr = Sl2::from_real(1.0, 1.0, 0.0, 1.0).unwrap();
        let p = moebius_act(&tr, &i).unwrap();
        assert!((p.z - cx(1.0)).norm() < 1e-14 && (p.h - 1.0).abs() < 1e-14);

        let s = Sl2::from_real(0.0, 1.0, -1.0, 0.0).unwrap();
        let p = moebius_act(&s, &i).unwrap();
        assert!(p.z.norm() < 1e-14 && (p.h - 1.0).abs() < 1e-14);

        let d = Sl2::from_real(2.0, 0.0, 0.0, 0.5).unwrap();
        let p = moebius_act(&d, &i).unwrap();
        assert!(p.z.norm() < 1e-14 && (p.h - 4.0).abs() < 1e-14);

        assert_eq!(moebius_act(&d, &HPoint::h2(0.0, 0.0)), Err(Sl2Error::PointOnBoundary));
    }

    #[test]
    fn moebius_h3_keeps_height_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let g = random_sl2(&mut rng, false);
            let p = HPoint {
                z: Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
                h: rng.gen_range(0.1..3.0),
            };
            let q = moebius_act(&g, &p).unwrap();
            assert!(q.h > 0.0);
            // action law: (gh).p = g.(h.p)
            let g2 = random_sl2(&mut rng, false);
            let lhs = moebius_act(&g.mul(&g2), &p).unwrap();
            let rhs = moebius_act(&g, &moebius_act(&g2, &p).unwrap()).unwrap();
            assert!((lhs.z - rhs.z).norm() < 1e-9 && (lhs.h - rhs.h).abs() < 1e-9);
        }
    }

    #[test]
    fn ray_endpoints() {
        // vertical ray: endpoint at infinity
        let r = ray_from_direction(HPoint::h2(0.0, 1.0), cx(0.0), 1.0).unwrap();
        assert_eq!(r.endpoint, BoundaryPoint::Infinity);
        // downward vertical ray ends at the foot
        let r = ray_from_direction(HPoint::h2(2.0, 1.0), cx(0.0), -1.0).unwrap();
        assert_eq!(r.endpoint, BoundaryPoint::Finite(cx(2.0)));
        // horizontal ray from i: half-circle of radius 1 around 0, endpoint 1
        let r = ray_from_direction(HPoint::h2(0.0, 1.0), cx(1.0), 0.0).unwrap();
        match r.endpoint {
            BoundaryPoint::Finite(e) => assert!((e - cx(1.0)).norm() < 1e-12),
            _ => panic!("finite endpoint expected"),
        }
        // ray toward -x from i: endpoint -1
        let r = ray_from_direction(HPoint::h2(0.0, 1.0), cx(-1.0), 0.0).unwrap();
        match r.endpoint {
            BoundaryPoint::Finite(e) => assert!((e - cx(-1.0)).norm() < 1e-12),
            _ => panic!("finite endpoint expected"),
        }
    }

    #[test]
    fn ray_endpoint_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let start = HPoint {
                z: Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
                h: rng.gen_range(0.1..3.0),
            };
            let dz = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let dh: f64 = rng.gen_range(-1.0..1.0);
            if dz.norm() + dh.abs() < 1e-3 {
                continue;
            }
            let r = ray_from_direction(start, dz, dh).unwrap();
            let rebuilt = ray_from_endpoint(start, r.endpoint).unwrap();
            assert!((r.dir_z - rebuilt.dir_z).norm() < 1e-9);
            assert!((r.dir_h - rebuilt.dir_h).abs() < 1e-9);
        }
    }

    #[test]
    fn asymptotic_examples() {
        let r1 = ray_from_direction(HPoint::h2(0.0, 1.0), cx(0.0), 1.0).unwrap();
        let r2 = ray_from_direction(HPoint::h2(0.0, 2.0), cx(0.0), 1.0).unwrap();
        assert!(are_asymptotic(&r1, &r2));

        let to_zero = ray_from_endpoint(HPoint::h2(0.0, 1.0), BoundaryPoint::Finite(cx(0.0))).unwrap();
        let to_one = ray_from_endpoint(HPoint::h2(0.0, 1.0), BoundaryPoint::Finite(cx(1.0))).unwrap();
        assert!(!are_asymptotic(&to_zero, &to_one));

        // parabolic fixing infinity preserves the class of vertical rays
        let par = Sl2::from_real(1.0, 1.0, 0.0, 1.0).unwrap();
        let img = transform_ray(&par, &r1).unwrap();
        assert!(are_asymptotic(&r1, &img));
    }

    #[test]
    fn k_meets_twist_image_trivially() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..500 {
            let g = random_sl2(&mut rng, false);
            let t = twist_sl2(&g);
            if is_in_k(&t, 1e-8) {
                assert!(t.dist(&Sl2::identity()) < 1e-6);
            }
        }
    }
}
