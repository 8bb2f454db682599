//! Generalized Cartan matrices: validation, symmetrizers, type classification.
//!
//! Classification follows the finite / affine / indefinite trichotomy for
//! indecomposable matrices and ships an exact certificate with every answer:
//! affine type carries a strictly positive null vector, indefinite type a
//! positive vector whose image is strictly negative.

use crate::linalg::{primitive_integer_vector, Rat, RatMat};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GcmError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("diagonal entry at ({0},{0}) is not 2")]
    DiagonalNotTwo(usize),
    #[error("positive off-diagonal entry at ({0},{1})")]
    PositiveOffDiagonal(usize, usize),
    #[error("zero pattern asymmetric at ({0},{1})")]
    ZeroPatternAsymmetric(usize, usize),
    #[error("not symmetrizable: cycle-product condition fails on cycle {0:?}")]
    NotSymmetrizable(Vec<usize>),
}

/// A validated generalized Cartan matrix. Indices are 0-based internally;
/// error messages and serialized cycles use 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcmMatrix {
    entries: Vec<Vec<BigInt>>,
    n: usize,
}

impl GcmMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn entry_i64(&self, i: usize, j: usize) -> i64 {
        use num_traits::ToPrimitive;
        self.entries[i][j].to_i64().expect("GCM entry out of i64 range")
    }

    pub fn to_rat_mat(&self) -> RatMat {
        RatMat::from_rows(
            self.entries
                .iter()
                .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
                .collect(),
        )
    }

    /// Principal submatrix on the given (sorted, 0-based) index set.
    pub fn submatrix(&self, support: &[usize]) -> GcmMatrix {
        let entries = support
            .iter()
            .map(|&i| support.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        GcmMatrix { entries, n: support.len() }
    }

    /// Connected components of the Dynkin graph (edges where a_ij != 0),
    /// each sorted, ordered by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(i) = queue.pop() {
                for j in 0..self.n {
                    if !seen[j] && !self.entries[i][j].is_zero() {
                        seen[j] = true;
                        comp.push(j);
                        queue.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.components().len() == 1
    }
}

/// Checks the three GCM axioms. Reported positions are 1-based.
pub fn validate_gcm(raw: Vec<Vec<BigInt>>) -> Result<GcmMatrix, GcmError> {
    let n = raw.len();
    if raw.iter().any(|r| r.len() != n) || n == 0 {
        return Err(GcmError::NotSquare);
    }
    for i in 0..n {
        if raw[i][i] != BigInt::from(2) {
            return Err(GcmError::DiagonalNotTwo(i + 1));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && raw[i][j].is_positive() {
                return Err(GcmError::PositiveOffDiagonal(i + 1, j + 1));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && raw[i][j].is_zero() && !raw[j][i].is_zero() {
                return Err(GcmError::ZeroPatternAsymmetric(i + 1, j + 1));
            }
        }
    }
    Ok(GcmMatrix { entries: raw, n })
}

pub fn validate_gcm_i64(raw: &[&[i64]]) -> Result<GcmMatrix, GcmError> {
    validate_gcm(raw.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

/// D and B with A = diag(d) * B, B symmetric, d > 0 and d = 1 on the least
/// index of each Dynkin component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetrizer {
    pub d: Vec<Rat>,
    pub b: RatMat,
}

pub fn symmetrize(m: &GcmMatrix) -> Result<Symmetrizer, GcmError> {
    let n = m.n();
    let mut d = vec![Rat::zero(); n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for comp in m.components() {
        let root = comp[0];
        d[root] = Rat::from_integer(BigInt::from(1));
        // breadth-first propagation along the spanning tree
        let mut queue = std::collections::VecDeque::from([root]);
        let mut in_tree = vec![root];
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if m.entry(i, j).is_zero() || i == j || !d[j].is_zero() {
                    continue;
                }
                // symmetry of B forces d_j * a_ij = d_i * a_ji
                d[j] = &d[i]
                    * Rat::new(m.entry(j, i).clone(), m.entry(i, j).clone());
                parent[j] = Some(i);
                in_tree.push(j);
                queue.push_back(j);
            }
        }
        // every non-tree edge must be consistent; a failure names its cycle
        for &i in &in_tree {
            for &j in &in_tree {
                if i < j && !m.entry(i, j).is_zero() {
                    let lhs = &d[j] * Rat::from_integer(m.entry(i, j).clone());
                    let rhs = &d[i] * Rat::from_integer(m.entry(j, i).clone());
                    if lhs != rhs {
                        return Err(GcmError::NotSymmetrizable(violating_cycle(&parent, i, j)));
                    }
                }
            }
        }
    }
    let b = RatMat::from_rows(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rat::from_integer(m.entry(i, j).clone()) / &d[i])
                    .collect()
            })
            .collect(),
    );
    debug_assert!(b.is_symmetric());
    Ok(Symmetrizer { d, b })
}

/// Tree path from i to j plus the closing edge, 1-based, rotated so the
/// smallest index leads and its smaller neighbour comes second.
fn violating_cycle(parent: &[Option<usize>], i: usize, j: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while let Some(u) = parent[v] {
            p.push(u);
            v = u;
        }
        p
    };
    let pi = path_to_root(i);
    let pj = path_to_root(j);
    // lowest common ancestor: first shared vertex
    let lca = pi.iter().find(|v| pj.contains(v)).copied().unwrap();
    let mut cycle: Vec<usize> = pi.iter().take_while(|&&v| v != lca).copied().collect();
    cycle.push(lca);
    let mut down: Vec<usize> = pj.iter().take_while(|&&v| v != lca).copied().collect();
    down.reverse();
    cycle.extend(down);
    // canonical rotation
    let k = cycle.iter().enumerate().min_by_key(|(_, &v)| v).map(|(k, _)| k).unwrap();
    cycle.rotate_left(k);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle.iter().map(|&v| v + 1).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GcmKind {
    Finite,
    Affine,
    Indefinite,
}

/// Classification certificate for one indecomposable matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeCertificate {
    pub kind: GcmKind,
    /// Exact rank of the matrix.
    pub rank: usize,
    /// Affine: u > 0 with A u = 0. Indefinite: v > 0 with A v < 0. Finite: none.
    pub witness: Option<Vec<Rat>>,
}

/// Certificate plus the (sorted, 0-based) index support of the component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCertificate {
    pub support: Vec<usize>,
    pub certificate: TypeCertificate,
}

/// Classifies per indecomposable component.
pub fn classify(m: &GcmMatrix) -> Vec<ComponentCertificate> {
    m.components()
        .into_iter()
        .map(|support| {
            let sub = m.submatrix(&support);
            ComponentCertificate { certificate: classify_indecomposable(&sub), support }
        })
        .collect()
}

/// Exactly one of the three kinds for an indecomposable matrix.
pub fn classify_indecomposable(m: &GcmMatrix) -> TypeCertificate {
    let a = m.to_rat_mat();
    let n = m.n();
    let rank = a.rank();
    if rank == n && all_principal_minors_positive(&a) {
        return TypeCertificate { kind: GcmKind::Finite, rank, witness: None };
    }
    if rank == n - 1 {
        let kernel = a.kernel_basis();
        debug_assert_eq!(kernel.len(), 1);
        if let Some(u) = strictly_signed_positive(&kernel[0]) {
            debug_assert!(crate::linalg::is_zero_vec(&a.mul_vec(&u)));
            return TypeCertificate { kind: GcmKind::Affine, rank, witness: Some(u) };
        }
    }
    let witness = indefinite_witness(m).map(|v| {
        v.into_iter().map(Rat::from_integer).collect::<Vec<_>>()
    });
    TypeCertificate { kind: GcmKind::Indefinite, rank, witness }
}

fn all_principal_minors_positive(a: &RatMat) -> bool {
    let n = a.nrows();
    // every nonempty subset; n stays small at desk scale
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = RatMat::from_rows(
            idx.iter().map(|&i| idx.iter().map(|&j| a[(i, j)].clone()).collect()).collect(),
        );
        if !sub.det().is_positive() {
            return false;
        }
    }
    true
}

/// Normalizes a nowhere-zero constant-sign vector to a positive primitive
/// integer vector; `None` if any entry is zero or signs are mixed.
fn strictly_signed_positive(v: &[Rat]) -> Option<Vec<Rat>> {
    if v.iter().any(Zero::is_zero) {
        return None;
    }
    let pos = v.iter().filter(|x| x.is_positive()).count();
    if pos != 0 && pos != v.len() {
        return None;
    }
    let p = primitive_integer_vector(v)?;
    Some(p.into_iter().map(Rat::from_integer).collect())
}

/// Brute-force search for v > 0 with (A v)_i < 0 for all i, over positive
/// integer vectors of growing height.
fn indefinite_witness(m: &GcmMatrix) -> Option<Vec<BigInt>> {
    let n = m.n();
    let a: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    use num_traits::ToPrimitive;
                    m.entry(i, j).to_i128().expect("GCM entry out of range")
                })
                .collect()
        })
        .collect();
    for bound in [1i128, 2, 3, 5, 8, 13, 21, 34] {
        let mut v = vec![1i128; n];
        loop {
            let neg = (0..n).all(|i| (0..n).map(|j| a[i][j] * v[j]).sum::<i128>() < 0);
            if neg {
                return Some(v.into_iter().map(BigInt::from).collect());
            }
            // odometer over {1..bound}^n
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                v[k] += 1;
                if v[k] <= bound {
                    break;
                }
                v[k] = 1;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    None
}
