//! The torus T = M x A, the exponential chart of the maximal flat, the
//! Loos reflection mu in the flat model and the group model, and a
//! checker for the symmetric-space axioms S1-S4.

use nalgebra::DMatrix;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FlatError {
    #[error("non-finite coordinate at position {0}")]
    NonFinite(usize),
    #[error("points live on different flats: {0} vs {1}")]
    BaseMismatch(String, String),
    #[error("matrix is not symmetric positive definite")]
    NotPositiveDefinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Real,
    Complex,
}

/// Element of the torus T: unit phases (M-part) times positive radial
/// coordinates (A-part). Phases are angles in turns, so that conjugation
/// and inversion are exact; real mode restricts them to {0, 1/2}.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement {
    pub mode: FieldMode,
    /// Angle of each phase in turns, normalized to [0, 1).
    pub phase_turns: Vec<f64>,
    pub radial: Vec<f64>,
}

fn norm_turn(t: f64) -> f64 {
    let r = t - t.floor();
    if r == 1.0 {
        0.0
    } else {
        r
    }
}

impl TorusElement {
    pub fn new(mode: FieldMode, phase_turns: Vec<f64>, radial: Vec<f64>) -> Self {
        assert_eq!(phase_turns.len(), radial.len());
        assert!(radial.iter().all(|&r| r > 0.0), "radial part must be positive");
        let phase_turns: Vec<f64> = phase_turns.into_iter().map(norm_turn).collect();
        if mode == FieldMode::Real {
            assert!(
                phase_turns.iter().all(|&t| t == 0.0 || t == 0.5),
                "real phases are signs"
            );
        }
        TorusElement { mode, phase_turns, radial }
    }

    pub fn identity(mode: FieldMode, dim: usize) -> Self {
        TorusElement { mode, phase_turns: vec![0.0; dim], radial: vec![1.0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.radial.len()
    }

    pub fn multiply(&self, other: &TorusElement) -> TorusElement {
        assert_eq!(self.mode, other.mode);
        assert_eq!(self.dim(), other.dim());
        TorusElement {
            mode: self.mode,
            phase_turns: self
                .phase_turns
                .iter()
                .zip(&other.phase_turns)
                .map(|(a, b)| norm_turn(a + b))
                .collect(),
            radial: self.radial.iter().zip(&other.radial).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn inverse(&self) -> TorusElement {
        TorusElement {
            mode: self.mode,
            phase_turns: self.phase_turns.iter().map(|&t| norm_turn(-t)).collect(),
            radial: self.radial.iter().map(|r| 1.0 / r).collect(),
        }
    }

    /// True when the element lies in M, i.e. its A-part is trivial.
    pub fn is_phase_only(&self) -> bool {
        self.radial.iter().all(|&r| r == 1.0)
    }

    /// True when the element lies in A, i.e. all phases are trivial.
    pub fn is_radial_only(&self) -> bool {
        self.phase_turns.iter().all(|&t| t == 0.0)
    }
}

/// Theta(t) = conj(t)^{-1}: inverts the radial part, keeps the phase.
pub fn theta(t: &TorusElement) -> TorusElement {
    TorusElement {
        mode: t.mode,
        phase_turns: t.phase_turns.clone(),
        radial: t.radial.iter().map(|r| 1.0 / r).collect(),
    }
}

/// tau(t) = t * conj(t) = |t|^2: kills the phase, squares the radial part.
pub fn twist(t: &TorusElement) -> TorusElement {
    TorusElement {
        mode: t.mode,
        phase_turns: vec![0.0; t.dim()],
        radial: t.radial.iter().map(|r| r * r).collect(),
    }
}

/// Componentwise exponential onto A.
pub fn exp_flat(mode: FieldMode, x: &[f64]) -> Result<TorusElement, FlatError> {
    if let Some(k) = x.iter().position(|v| !v.is_finite()) {
        return Err(FlatError::NonFinite(k));
    }
    Ok(TorusElement {
        mode,
        phase_turns: vec![0.0; x.len()],
        radial: x.iter().map(|v| v.exp()).collect(),
    })
}

/// Componentwise logarithm, inverse of `exp_flat` on A.
pub fn log_flat(t: &TorusElement) -> Vec<f64> {
    assert!(t.is_radial_only(), "logarithm defined on A only");
    t.radial.iter().map(|r| r.ln()).collect()
}

/// A point of one maximal flat in its exponential chart.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatSpacePoint {
    pub coords: Vec<f64>,
    pub base: String,
}

impl FlatSpacePoint {
    pub fn new(coords: Vec<f64>) -> Self {
        FlatSpacePoint { coords, base: "e".to_string() }
    }

    pub fn with_base(coords: Vec<f64>, base: impl Into<String>) -> Self {
        FlatSpacePoint { coords, base: base.into() }
    }
}

/// Euclidean point reflection mu(x, y) = 2x - y in the chart.
pub fn mu_flat(x: &FlatSpacePoint, y: &FlatSpacePoint) -> Result<FlatSpacePoint, FlatError> {
    if x.base != y.base {
        return Err(FlatError::BaseMismatch(x.base.clone(), y.base.clone()));
    }
    assert_eq!(x.coords.len(), y.coords.len());
    Ok(FlatSpacePoint {
        coords: x.coords.iter().zip(&y.coords).map(|(a, b)| 2.0 * a - b).collect(),
        base: x.base.clone(),
    })
}

/// The same reflection on the A-side: mu(a, b) = a^2 b^{-1} componentwise.
pub fn mu_torus(a: &TorusElement, b: &TorusElement) -> TorusElement {
    a.multiply(a).multiply(&b.inverse())
}

fn is_spd(m: &DMatrix<f64>, tol: f64) -> bool {
    if m.nrows() != m.ncols() {
        return false;
    }
    if (m - m.transpose()).abs().max() > tol {
        return false;
    }
    m.clone().cholesky().is_some()
}

/// Group-model reflection mu_tau(x, y) = x y^{-1} x on positive definite
/// symmetric matrices.
pub fn mu_group_model(x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<DMatrix<f64>, FlatError> {
    let tol = 1e-9;
    if !is_spd(x, tol) || !is_spd(y, tol) {
        return Err(FlatError::NotPositiveDefinite);
    }
    let y_inv = y
        .clone()
        .cholesky()
        .expect("positive definite")
        .inverse();
    Ok(x * y_inv * x)
}

#[derive(Clone, Debug, Serialize)]
pub struct LoosViolation {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub defect: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LoosReport {
    pub passed: bool,
    pub checked_points: usize,
    pub tolerance: f64,
    pub violations: Vec<LoosViolation>,
}

/// Checks S1 (mu(x,x)=x), S2 (mu(x,mu(x,y))=y), S3 (mu distributes over
/// itself) on all triples, and the global S4 contrapositive (x != y
/// implies mu(x,y) != y) on all distinct pairs.
pub fn check_loos_axioms<P: Clone>(
    sample: &[P],
    mu: impl Fn(&P, &P) -> P,
    dist: impl Fn(&P, &P) -> f64,
    tol: f64,
) -> LoosReport {
    assert!(sample.len() >= 3, "need at least 3 sample points");
    let mut violations = Vec::new();
    for (i, x) in sample.iter().enumerate() {
        let d = dist(&mu(x, x), x);
        if d > tol {
            violations.push(LoosViolation { axiom: "S1".into(), indices: vec![i], defect: d });
        }
    }
    for (i, x) in sample.iter().enumerate() {
        for (j, y) in sample.iter().enumerate() {
            let d = dist(&mu(x, &mu(x, y)), y);
            if d > tol {
                violations.push(LoosViolation {
                    axiom: "S2".into(),
                    indices: vec![i, j],
                    defect: d,
                });
            }
            if i != j && dist(x, y) > tol {
                let d4 = dist(&mu(x, y), y);
                if d4 <= tol {
                    violations.push(LoosViolation {
                        axiom: "S4".into(),
                        indices: vec![i, j],
                        defect: d4,
                    });
                }
            }
        }
    }
    for (i, x) in sample.iter().enumerate() {
        for (j, y) in sample.iter().enumerate() {
            for (k, z) in sample.iter().enumerate() {
                let lhs = mu(x, &mu(y, z));
                let rhs = mu(&mu(x, y), &mu(x, z));
                let d = dist(&lhs, &rhs);
                if d > tol {
                    violations.push(LoosViolation {
                        axiom: "S3".into(),
                        indices: vec![i, j, k],
                        defect: d,
                    });
                }
            }
        }
    }
    LoosReport {
        passed: violations.is_empty(),
        checked_points: sample.len(),
        tolerance: tol,
        violations,
    }
}

/// Euclidean distance, the metric of the chart.
pub fn flat_distance(x: &FlatSpacePoint, y: &FlatSpacePoint) -> f64 {
    x.coords
        .iter()
        .zip(&y.coords)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// Random points of one flat, for axiom sampling.
pub fn sample_flat_points(dim: usize, count: usize, rng: &mut impl Rng) -> Vec<FlatSpacePoint> {
    (0..count)
        .map(|_| FlatSpacePoint::new((0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect()))
        .collect()
}

/// Random positive definite symmetric matrices with determinant 1.
pub fn sample_posdef(dim: usize, count: usize, rng: &mut impl Rng) -> Vec<DMatrix<f64>> {
    (0..count)
        .map(|_| {
            let g = DMatrix::from_fn(dim, dim, |_, _| rng.gen_range(-1.0..1.0))
                + DMatrix::identity(dim, dim) * 2.0;
            let x = &g * g.transpose();
            let det: f64 = x.determinant();
            x / det.powf(1.0 / dim as f64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn theta_examples() {
        let t = TorusElement::new(FieldMode::Real, vec![0.0, 0.0], vec![4.0, 1.0]);
        let th = theta(&t);
        assert_eq!(th.radial, vec![0.25, 1.0]);
        assert_eq!(th.phase_turns, vec![0.0, 0.0]);

        let u = TorusElement::new(FieldMode::Complex, vec![0.25], vec![1.0]);
        assert_eq!(theta(&u), u);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let t = TorusElement::new(
                FieldMode::Complex,
                vec![rng.gen_range(0.0..1.0); 3],
                (0..3).map(|_| rng.gen_range(0.1..10.0)).collect(),
            );
            let tt = theta(&theta(&t));
            assert_eq!(tt.phase_turns, t.phase_turns);
            for (a, b) in tt.radial.iter().zip(&t.radial) {
                assert!((a - b).abs() <= 1e-15 * b.abs());
            }
        }
    }

    #[test]
    fn twist_examples() {
        let t = TorusElement::new(FieldMode::Real, vec![0.5, 0.0], vec![3.0, 2.0]);
        let tw = twist(&t);
        assert_eq!(tw.radial, vec![9.0, 4.0]);
        assert!(tw.is_radial_only());

        let m = TorusElement::new(FieldMode::Real, vec![0.5, 0.5], vec![1.0, 1.0]);
        assert_eq!(twist(&m), TorusElement::identity(FieldMode::Real, 2));

        let a = TorusElement::new(FieldMode::Real, vec![0.0], vec![3.0]);
        assert_eq!(twist(&twist(&a)), twist(&a).multiply(&twist(&a)));
    }

    #[test]
    fn torus_splits_as_m_times_a() {
        // tau image lies in A; theta-fixed elements of real T are exactly M
        let t = TorusElement::new(FieldMode::Real, vec![0.5, 0.0], vec![2.0, 5.0]);
        assert!(twist(&t).is_radial_only());
        assert_ne!(theta(&t), t);
        let m = TorusElement::new(FieldMode::Real, vec![0.5, 0.0], vec![1.0, 1.0]);
        assert_eq!(theta(&m), m);
        // A intersect K: radial-only and theta-fixed forces identity
        let a = TorusElement::new(FieldMode::Real, vec![0.0], vec![2.0]);
        assert_ne!(theta(&a), a);
        let e = TorusElement::identity(FieldMode::Real, 1);
        assert_eq!(theta(&e), e);
    }

    #[test]
    fn exp_flat_examples() {
        let e = exp_flat(FieldMode::Real, &[0.0, 0.0]).unwrap();
        assert_eq!(e, TorusElement::identity(FieldMode::Real, 2));
        let t = exp_flat(FieldMode::Real, &[2.0f64.ln()]).unwrap();
        assert!(close(t.radial[0], 2.0, 1e-15));
        assert_eq!(exp_flat(FieldMode::Real, &[f64::NAN]), Err(FlatError::NonFinite(0)));

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let neg: Vec<f64> = x.iter().map(|v| -v).collect();
            let prod = exp_flat(FieldMode::Real, &x)
                .unwrap()
                .multiply(&exp_flat(FieldMode::Real, &neg).unwrap());
            for r in prod.radial {
                assert!(close(r, 1.0, 1e-12));
            }
            // log round trip, relative 1e-12
            let back = log_flat(&exp_flat(FieldMode::Real, &x).unwrap());
            for (a, b) in x.iter().zip(&back) {
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn mu_flat_examples() {
        let x = FlatSpacePoint::new(vec![1.0, -2.0]);
        let y = FlatSpacePoint::new(vec![0.5, 3.0]);
        assert_eq!(mu_flat(&x, &x).unwrap(), x);
        let zero = FlatSpacePoint::new(vec![0.0, 0.0]);
        assert_eq!(mu_flat(&zero, &y).unwrap().coords, vec![-0.5, -3.0]);

        // A-side: a = (4), b = (2) -> 16/2 = 8
        let a = TorusElement::new(FieldMode::Real, vec![0.0], vec![4.0]);
        let b = TorusElement::new(FieldMode::Real, vec![0.0], vec![2.0]);
        assert_eq!(mu_torus(&a, &b).radial, vec![8.0]);

        let other = FlatSpacePoint::with_base(vec![0.0, 0.0], "g");
        assert!(matches!(mu_flat(&x, &other), Err(FlatError::BaseMismatch(_, _))));
    }

    #[test]
    fn mu_group_examples() {
        let x = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![2.0, 0.5]));
        let y = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![4.0, 0.25]));
        let r = mu_group_model(&x, &y).unwrap();
        assert!((r - DMatrix::<f64>::identity(2, 2)).abs().max() < 1e-12);

        let r = mu_group_model(&x, &x).unwrap();
        assert!((r - &x).abs().max() < 1e-12);

        let i = DMatrix::<f64>::identity(2, 2);
        let r = mu_group_model(&i, &y).unwrap();
        let y_inv = y.clone().try_inverse().unwrap();
        assert!((r - y_inv).abs().max() < 1e-12);

        let bad = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]); // eigenvalues 3, -1
        assert_eq!(mu_group_model(&bad, &y), Err(FlatError::NotPositiveDefinite));
    }

    #[test]
    fn loos_axioms_euclidean() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pts = sample_flat_points(3, 20, &mut rng);
        let report = check_loos_axioms(
            &pts,
            |x, y| mu_flat(x, y).unwrap(),
            flat_distance,
            1e-10,
        );
        assert!(report.passed, "violations: {:?}", report.violations);
    }

    #[test]
    fn loos_axioms_detect_bad_mu() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let pts = sample_flat_points(2, 5, &mut rng);
        let report = check_loos_axioms(&pts, |_x, y| y.clone(), flat_distance, 1e-10);
        assert!(!report.passed);
        assert!(report.violations.iter().any(|v| v.axiom == "S4"));
    }

    #[test]
    fn loos_axioms_group_model() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let pts = sample_posdef(2, 10, &mut rng);
        let report = check_loos_axioms(
            &pts,
            |x, y| mu_group_model(x, y).unwrap(),
            |x, y| (x - y).abs().max(),
            1e-10,
        );
        assert!(report.passed, "violations: {:?}", report.violations);
        // det 1 preserved
        for x in &pts {
            for y in &pts {
                let d = mu_group_model(x, y).unwrap().determinant();
                assert!((d - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn flat_translations_commute() {
        // products of two point reflections are translations, and
        // translations of one flat commute
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let pts = sample_flat_points(3, 6, &mut rng);
        let refl = |x: &FlatSpacePoint, z: &FlatSpacePoint| mu_flat(x, z).unwrap();
        for x in &pts {
            for y in &pts {
                for u in &pts {
                    for v in &pts {
                        for z in &pts {
                            let a = refl(x, &refl(y, &refl(u, &refl(v, z))));
                            let b = refl(u, &refl(v, &refl(x, &refl(y, z))));
                            assert!(flat_distance(&a, &b) < 1e-10);
                        }
                    }
                }
            }
        }
    }
}
