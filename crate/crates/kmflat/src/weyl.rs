//! The Weyl group as an exact matrix group on the extended real form.
//!
//! Elements carry a canonical reduced word (greedy smallest-left-descent,
//! i.e. the ShortLex-least reduced word) alongside their exact matrix and its
//! inverse. Real roots are enumerated by breadth-first orbit search on
//! integer coefficient vectors.

use crate::gcm::GcmMatrix;
use crate::linalg::{Rat, RatMat};
use crate::realization::RootDatum;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeSet, HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("generator index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
}

/// A Weyl group element: ShortLex-canonical reduced word plus exact matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: RatMat,
    pub inverse: RatMat,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// Entry of the Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxeterOrder {
    Finite(u32),
    Infinite,
}

impl std::fmt::Display for CoxeterOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoxeterOrder::Finite(m) => write!(f, "{m}"),
            CoxeterOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// Standard translation a_ij * a_ji in {0,1,2,3} -> m_ij in {2,3,4,6}, else infinity.
pub fn coxeter_matrix(m: &GcmMatrix) -> Vec<Vec<CoxeterOrder>> {
    let n = m.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        return CoxeterOrder::Finite(1);
                    }
                    let p = m.entry(i, j) * m.entry(j, i);
                    match p.to_u32() {
                        Some(0) => CoxeterOrder::Finite(2),
                        Some(1) => CoxeterOrder::Finite(3),
                        Some(2) => CoxeterOrder::Finite(4),
                        Some(3) => CoxeterOrder::Finite(6),
                        _ => CoxeterOrder::Infinite,
                    }
                })
                .collect()
        })
        .collect()
}

/// A real root in simple-root coordinates together with its covector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub coeffs: Vec<BigInt>,
    pub covector: Vec<Rat>,
    pub positive: bool,
    pub height: i64,
}

/// The Weyl group engine for one root datum.
pub struct WeylGroup<'a> {
    pub rd: &'a RootDatum,
    refl: Vec<RatMat>,
    /// Generator action on root coefficient vectors, n x n integer matrices.
    coeff_refl: Vec<RatMat>,
}

impl<'a> WeylGroup<'a> {
    pub fn new(rd: &'a RootDatum) -> Self {
        let n = rd.gcm.n();
        let dim = rd.dim;
        let refl = (0..n)
            .map(|i| {
                // h -> h - <c_i, h> h_i, columnwise on the basis
                let mut m = RatMat::identity(dim);
                for k in 0..dim {
                    let pairing = rd.roots[i][k].clone();
                    for r in 0..dim {
                        let v = &m[(r, k)] - &pairing * &rd.coroots[i][r];
                        m[(r, k)] = v;
                    }
                }
                m
            })
            .collect();
        let coeff_refl = (0..n)
            .map(|i| {
                // c -> c - (row_i(A) . c) e_i
                let mut s = RatMat::identity(n);
                for j in 0..n {
                    let v = &s[(i, j)] - Rat::from_integer(rd.gcm.entry(i, j).clone());
                    s[(i, j)] = v;
                }
                s
            })
            .collect();
        WeylGroup { rd, refl, coeff_refl }
    }

    pub fn n(&self) -> usize {
        self.rd.gcm.n()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            word: Vec::new(),
            matrix: RatMat::identity(self.rd.dim),
            inverse: RatMat::identity(self.rd.dim),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement, WeylError> {
        if i >= self.n() {
            return Err(WeylError::IndexOutOfRange(i + 1, self.n()));
        }
        Ok(WeylElement {
            word: vec![i],
            matrix: self.refl[i].clone(),
            inverse: self.refl[i].clone(),
        })
    }

    /// Action of a word on root coefficient vectors: product of generator
    /// coefficient reflections, applied right-to-left.
    pub fn coeff_action(&self, word: &[usize]) -> RatMat {
        word.iter()
            .fold(RatMat::identity(self.n()), |acc, &i| &acc * &self.coeff_refl[i])
    }

    /// ShortLex-canonical reduced word of the element given by `word`
    /// (which need not be reduced).
    pub fn canonicalize(&self, word: &[usize]) -> Vec<usize> {
        let n = self.n();
        let mut g = self.coeff_action(word);
        let mut ginv = {
            let rev: Vec<usize> = word.iter().rev().copied().collect();
            self.coeff_action(&rev)
        };
        let mut out = Vec::new();
        while !g.is_identity() {
            // smallest left descent: g^{-1}(alpha_i) negative
            let i = (0..n)
                .find(|&i| {
                    (0..n).all(|k| !ginv[(k, i)].is_positive())
                })
                .expect("non-identity element has a left descent");
            out.push(i);
            g = &self.coeff_refl[i] * &g;
            ginv = &ginv * &self.coeff_refl[i];
        }
        out
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement, WeylError> {
        for &i in word {
            if i >= self.n() {
                return Err(WeylError::IndexOutOfRange(i + 1, self.n()));
            }
        }
        let canonical = self.canonicalize(word);
        let matrix = canonical
            .iter()
            .fold(RatMat::identity(self.rd.dim), |acc, &i| &acc * &self.refl[i]);
        let inverse = canonical
            .iter()
            .rev()
            .fold(RatMat::identity(self.rd.dim), |acc, &i| &acc * &self.refl[i]);
        Ok(WeylElement { word: canonical, matrix, inverse })
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        let canonical = self.canonicalize(&word);
        let el = WeylElement {
            word: canonical,
            matrix: &a.matrix * &b.matrix,
            inverse: &b.inverse * &a.inverse,
        };
        debug_assert_eq!(el.matrix, self.from_word(&el.word).unwrap().matrix);
        el
    }

    pub fn invert(&self, a: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = a.word.iter().rev().copied().collect();
        WeylElement {
            word: self.canonicalize(&rev),
            matrix: a.inverse.clone(),
            inverse: a.matrix.clone(),
        }
    }

    pub fn apply(&self, w: &WeylElement, coords: &[Rat]) -> Vec<Rat> {
        w.matrix.mul_vec(coords)
    }

    /// Action of `w` on a root given by coefficients: coefficient vector of w.root.
    pub fn apply_to_root_coeffs(&self, word: &[usize], coeffs: &[BigInt]) -> Vec<BigInt> {
        let v: Vec<Rat> = coeffs.iter().map(|x| Rat::from_integer(x.clone())).collect();
        self.coeff_action(word)
            .mul_vec(&v)
            .into_iter()
            .map(|x| {
                debug_assert!(x.denom().is_one());
                x.numer().clone()
            })
            .collect()
    }

    /// True when `w(alpha_j) < 0`, i.e. j is a right descent of the word.
    pub fn sends_simple_negative(&self, word: &[usize], j: usize) -> bool {
        let mut e = vec![BigInt::zero(); self.n()];
        e[j] = BigInt::one();
        let img = self.apply_to_root_coeffs(word, &e);
        img.iter().all(|x| !x.is_positive())
    }

    /// Minimal-length representative of the coset w W_J (strip right descents in J).
    pub fn min_coset_rep(&self, w: &WeylElement, j_set: &[usize]) -> WeylElement {
        let mut cur = w.clone();
        loop {
            let Some(&j) = j_set.iter().find(|&&j| self.sends_simple_negative(&cur.word, j))
            else {
                return cur;
            };
            let s = self.simple_reflection(j).unwrap();
            cur = self.multiply(&cur, &s);
        }
    }

    /// All elements of length at most `radius`, sorted by (length, word).
    pub fn ball(&self, radius: usize) -> Vec<WeylElement> {
        let mut seen: HashMap<RatMat, WeylElement> = HashMap::new();
        let id = self.identity();
        seen.insert(id.matrix.clone(), id.clone());
        let mut frontier = vec![id];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..self.n() {
                    let s = self.simple_reflection(i).unwrap();
                    let ws = self.multiply(w, &s);
                    if ws.length() == w.length() + 1 && !seen.contains_key(&ws.matrix) {
                        seen.insert(ws.matrix.clone(), ws.clone());
                        next.push(ws);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<WeylElement> = seen.into_values().collect();
        out.sort_by(|a, b| (a.length(), &a.word).cmp(&(b.length(), &b.word)));
        out
    }

    fn make_root(&self, coeffs: Vec<BigInt>, positive: bool) -> RealRoot {
        let covector: Vec<Rat> = (0..self.rd.dim)
            .map(|k| {
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| Rat::from_integer(c.clone()) * &self.rd.roots[i][k])
                    .sum()
            })
            .collect();
        let height = coeffs.iter().map(|c| c.to_i64().expect("height overflow")).sum();
        RealRoot { coeffs, covector, positive, height }
    }

    /// Positive real roots of height <= max_height, sorted by (height, coeffs).
    pub fn positive_real_roots(&self, max_height: i64) -> Vec<RealRoot> {
        let n = self.n();
        let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<BigInt>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            if 1 <= max_height {
                seen.insert(e.clone());
                queue.push_back(e);
            }
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..n {
                // s_i(c) = c - (row_i(A) . c) e_i
                let pairing: BigInt =
                    (0..n).map(|j| self.rd.gcm.entry(i, j) * &c[j]).sum();
                let mut img = c.clone();
                img[i] = &img[i] - &pairing;
                if img.iter().any(|x| x.is_negative()) {
                    continue; // left the positive cone (only happens for simple roots)
                }
                let height: BigInt = img.iter().sum();
                if height > BigInt::from(max_height) {
                    continue;
                }
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut out: Vec<RealRoot> =
            seen.into_iter().map(|c| self.make_root(c, true)).collect();
        out.sort_by(|a, b| (a.height, a.coeffs.clone()).cmp(&(b.height, b.coeffs.clone())));
        out
    }

    /// Positive roots and their negatives, sorted by (height, coeffs);
    /// closed under negation.
    pub fn enumerate_real_roots(&self, max_height: i64) -> Vec<RealRoot> {
        let pos = self.positive_real_roots(max_height);
        let mut out: Vec<RealRoot> = pos
            .iter()
            .map(|r| {
                self.make_root(r.coeffs.iter().map(|x| -x).collect(), false)
            })
            .collect();
        out.extend(pos);
        out.sort_by(|a, b| (a.height, a.coeffs.clone()).cmp(&(b.height, b.coeffs.clone())));
        out
    }

    /// Exact decision: is the integer vector the coefficient vector of a real
    /// root? Decides by height descent, so it needs no enumeration window.
    pub fn is_real_root(&self, coeffs: &[BigInt]) -> bool {
        let n = self.n();
        if coeffs.len() != n {
            return false;
        }
        let negated: Vec<BigInt>;
        let mut c: &[BigInt] = coeffs;
        if coeffs.iter().all(|x| !x.is_positive()) {
            negated = coeffs.iter().map(|x| -x).collect();
            c = &negated;
        }
        if c.iter().any(|x| x.is_negative()) || c.iter().all(|x| x.is_zero()) {
            return false;
        }
        let mut cur = c.to_vec();
        loop {
            let height: BigInt = cur.iter().sum();
            if height.is_one() {
                // a unit vector is a simple root
                return cur.iter().all(|x| !x.is_negative());
            }
            // pick a reflection that strictly lowers height
            let mut lowered = false;
            for i in 0..n {
                let pairing: BigInt = (0..n).map(|j| self.rd.gcm.entry(i, j) * &cur[j]).sum();
                if pairing.is_positive() {
                    cur[i] = &cur[i] - &pairing;
                    if cur[i].is_negative() {
                        // crossed zero on a single coordinate: only roots do
                        // this at a simple root, which height-1 already caught
                        return false;
                    }
                    lowered = true;
                    break;
                }
            }
            if !lowered {
                return false; // imaginary cone: no descent available
            }
        }
    }

    /// Reflection along an arbitrary real root, as an exact matrix.
    pub fn root_reflection(&self, root: &RealRoot) -> RatMat {
        // r_alpha = w r_i w^{-1} for alpha = w(alpha_i); recover it by
        // height descent on the coefficient vector.
        let n = self.n();
        let mut cur: Vec<BigInt> = if root.positive {
            root.coeffs.clone()
        } else {
            root.coeffs.iter().map(|x| -x).collect()
        };
        let mut word_rev: Vec<usize> = Vec::new();
        loop {
            if cur.iter().map(|x| x.to_i64().unwrap()).sum::<i64>() == 1 {
                let i = cur.iter().position(|x| x.is_one()).unwrap();
                // the descent applies s_{i1} first, so alpha = s_{i1}...s_{ik}(alpha_i)
                // and w is the recorded sequence in order
                let mut word = word_rev.clone();
                word.push(i);
                word.extend(word_rev.iter().rev());
                return self
                    .from_word(&word)
                    .expect("indices are in range")
                    .matrix;
            }
            let i = (0..n)
                .find(|&i| {
                    let pairing: BigInt =
                        (0..n).map(|j| self.rd.gcm.entry(i, j) * &cur[j]).sum();
                    pairing.is_positive()
                })
                .expect("real root admits height descent");
            let pairing: BigInt = (0..n).map(|j| self.rd.gcm.entry(i, j) * &cur[j]).sum();
            cur[i] = &cur[i] - &pairing;
            word_rev.push(i);
        }
    }
}
