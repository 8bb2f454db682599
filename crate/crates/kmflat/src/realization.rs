//! Extended realization of a generalized Cartan matrix.
//!
//! For an n x n matrix of rank l the Cartan space is extended to dimension
//! 2n - l so that both the simple coroots and the simple roots come out
//! linearly independent, with the pairing of roots against coroots
//! reproducing the matrix exactly. The construction is deterministic: the
//! extension coordinates complete the lexicographically-first maximal
//! independent row set.

use crate::gcm::{GcmMatrix, Symmetrizer};
use crate::linalg::{dot, Rat, RatMat};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizationError {
    #[error("root index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("point has dimension {0}, expected {1}")]
    DimensionMismatch(usize, usize),
    #[error("bilinear form degenerate (internal assertion): det = 0")]
    DegenerateForm,
}

/// The root datum: coroots h_i, root covectors c_i in dimension 2n - l.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub gcm: GcmMatrix,
    pub dim: usize,
    /// Exact rank l of the matrix.
    pub rank: usize,
    /// h_1..h_n, each of length dim. By construction h_i = e_i.
    pub coroots: Vec<Vec<Rat>>,
    /// c_1..c_n as covectors of length dim.
    pub roots: Vec<Vec<Rat>>,
    /// 0-based indices of the rows outside the lex-first independent row set,
    /// in increasing order; extension coordinate k belongs to row
    /// `dependent_rows[k]`.
    pub dependent_rows: Vec<usize>,
}

/// A point of the real form, coordinates in the basis v_1..v_dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealFormPoint {
    pub coords: Vec<Rat>,
}

impl RealFormPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        RealFormPoint { coords }
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        let mut coords = vec![Rat::zero(); dim];
        coords[k] = Rat::one();
        RealFormPoint { coords }
    }

    pub fn zero(dim: usize) -> Self {
        RealFormPoint { coords: vec![Rat::zero(); dim] }
    }
}

pub fn build_realization(m: &GcmMatrix) -> RootDatum {
    let n = m.n();
    let a = m.to_rat_mat();
    // lexicographically-first maximal independent row set
    let mut kept: Vec<Vec<Rat>> = Vec::new();
    let mut kept_idx: Vec<usize> = Vec::new();
    let mut dependent_rows: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut candidate = kept.clone();
        candidate.push(a.row(i).to_vec());
        if RatMat::from_rows(candidate).rank() == kept.len() + 1 {
            kept.push(a.row(i).to_vec());
            kept_idx.push(i);
        } else {
            dependent_rows.push(i);
        }
    }
    let rank = kept_idx.len();
    let dim = 2 * n - rank;
    let coroots: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::one();
            v
        })
        .collect();
    let roots: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut c = vec![Rat::zero(); dim];
            for i in 0..n {
                c[i] = a[(i, j)].clone();
            }
            for (k, &jk) in dependent_rows.iter().enumerate() {
                if jk == j {
                    c[n + k] = Rat::one();
                }
            }
            c
        })
        .collect();
    debug_assert_eq!(RatMat::from_rows(roots.clone()).rank(), n);
    RootDatum { gcm: m.clone(), dim, rank, coroots, roots, dependent_rows }
}

impl RootDatum {
    /// <c_i, p> for a 0-based root index.
    pub fn pair(&self, root_index: usize, p: &RealFormPoint) -> Result<Rat, RealizationError> {
        if root_index >= self.gcm.n() {
            return Err(RealizationError::IndexOutOfRange(root_index + 1, self.gcm.n()));
        }
        if p.coords.len() != self.dim {
            return Err(RealizationError::DimensionMismatch(p.coords.len(), self.dim));
        }
        Ok(dot(&self.roots[root_index], &p.coords))
    }

    /// All n simple pairings of a point at once.
    pub fn pairings(&self, coords: &[Rat]) -> Vec<Rat> {
        self.roots.iter().map(|c| dot(c, coords)).collect()
    }

    /// Root covectors stacked as an n x dim matrix.
    pub fn root_matrix(&self) -> RatMat {
        RatMat::from_rows(self.roots.clone())
    }
}

/// Gram matrix of the invariant bilinear form on the extended space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: RatMat,
}

/// B(e_i, e_j) = a_ji d_i on the coroot block, B(e_{n+m}, e_i) = <c_i, e_{n+m}> d_i
/// on the cross block, zero on the extension block.
pub fn build_bilinear_form(
    rd: &RootDatum,
    s: &Symmetrizer,
) -> Result<BilinearForm, RealizationError> {
    let n = rd.gcm.n();
    let dim = rd.dim;
    let mut g = RatMat::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = Rat::from_integer(rd.gcm.entry(j, i).clone()) * &s.d[i];
        }
    }
    for ext in n..dim {
        for i in 0..n {
            let v = &rd.roots[i][ext] * &s.d[i];
            g[(ext, i)] = v.clone();
            g[(i, ext)] = v;
        }
    }
    if !g.is_symmetric() || g.det().is_zero() {
        return Err(RealizationError::DegenerateForm);
    }
    Ok(BilinearForm { gram: g })
}
