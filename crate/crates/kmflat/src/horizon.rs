//! The thin model of the horizon: spherical residues of the Coxeter
//! complex, their realization as a colored polyhedral fan of cone faces in
//! the flat, and the action of arrangement-preserving maps on the ideal
//! cells. Both halves of the twin structure live as opposite cones in one
//! space.

use crate::gcm::{classify, GcmKind, GcmMatrix};
use crate::linalg::{Rat, RatMat};
use crate::local::{induced_map, is_local_transformation, LocalVerdict};
use crate::realization::{build_realization, RealFormPoint, RootDatum};
use crate::weyl::{WeylElement, WeylGroup};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

/// Hard guard for brute-force parabolic order enumeration.
const ORDER_GUARD: u64 = 10_080;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HorizonError {
    #[error("parabolic order enumeration exceeded the guard {ORDER_GUARD}")]
    OrderOverflow,
    #[error("face degenerates to the origin")]
    EmptyFace,
    #[error("point does not lie in the named face")]
    PointNotInFace,
    #[error("map does not preserve the reflection arrangement")]
    NotArrangementPreserving,
    #[error("cell count {0} exceeds KMFLAT_MAX_CELLS = {1}")]
    CellBudgetExceeded(usize, u64),
    #[error("rank {0} exceeds the enumeration limit 10")]
    RankTooLarge(usize),
}

/// A subset J of the index set with finite parabolic W_J.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalSubset {
    /// 0-based indices, strictly increasing.
    pub j: Vec<usize>,
    pub parabolic_order: u64,
}

/// A spherical residue w W_J, stored through its minimal representative.
#[derive(Clone, Debug)]
pub struct Residue {
    pub rep: WeylElement,
    pub j: SphericalSubset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Half {
    Positive,
    Negative,
}

/// Realized open cone cell of the horizon fan.
#[derive(Clone, Debug)]
pub struct IdealCell {
    pub residue: Residue,
    pub half: Half,
    /// Extreme rays, primitive integer-scaled, sorted.
    pub rays: Vec<Vec<Rat>>,
    /// Basis of the lineality space shared by all cells.
    pub lineality: Vec<Vec<Rat>>,
    /// The color is the type J.
    pub color: Vec<usize>,
}

/// Scales a rational vector to primitive integer entries, keeping its
/// direction.
pub fn primitive_ray(v: &[Rat]) -> Vec<Rat> {
    let first_sign = v
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    let p = crate::linalg::primitive_integer_vector(v).expect("nonzero ray");
    let flip = first_sign; // primitive_integer_vector made the first nonzero positive
    p.into_iter()
        .map(|x| {
            let x = if flip { -x } else { x };
            Rat::from_integer(x)
        })
        .collect()
}

fn sort_rays(mut rays: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    rays.sort();
    rays
}

/// Order of the Weyl group of a finite-type GCM by breadth-first word
/// enumeration, with a hard guard.
pub fn weyl_order(m: &GcmMatrix) -> Result<u64, HorizonError> {
    if m.n() == 0 {
        return Ok(1);
    }
    let rd = build_realization(m);
    let wg = WeylGroup::new(&rd);
    let mut seen: HashSet<RatMat> = HashSet::new();
    let id = wg.identity();
    seen.insert(id.matrix.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..m.n() {
                let s = wg.simple_reflection(i).unwrap();
                let ws = wg.multiply(w, &s);
                if seen.insert(ws.matrix.clone()) {
                    next.push(ws);
                }
                if seen.len() as u64 > ORDER_GUARD {
                    return Err(HorizonError::OrderOverflow);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len() as u64)
}

/// All J with finite W_J, each with its order; sphericity decided by the
/// exact classification of the sub-GCM.
pub fn spherical_subsets(m: &GcmMatrix) -> Result<Vec<SphericalSubset>, HorizonError> {
    let n = m.n();
    if n > 10 {
        return Err(HorizonError::RankTooLarge(n));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let j: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = m.submatrix(&j);
        let spherical = j.is_empty()
            || classify(&sub)
                .iter()
                .all(|c| c.certificate.kind == GcmKind::Finite);
        if spherical {
            let order = weyl_order(&sub)?;
            out.push(SphericalSubset { j, parabolic_order: order });
        }
    }
    out.sort_by(|a, b| (a.j.len(), a.j.clone()).cmp(&(b.j.len(), b.j.clone())));
    Ok(out)
}

/// All spherical residues whose minimal representative has length at most
/// `radius`.
pub fn residues_in_ball(m: &GcmMatrix, radius: usize) -> Result<Vec<Residue>, HorizonError> {
    assert!(radius <= 12, "radius limited to 12");
    let subsets = spherical_subsets(m)?;
    let rd = build_realization(m);
    let wg = WeylGroup::new(&rd);
    let mut out = Vec::new();
    for w in wg.ball(radius) {
        for s in &subsets {
            let minimal = s.j.iter().all(|&j| !wg.sends_simple_negative(&w.word, j));
            if minimal {
                out.push(Residue { rep: w.clone(), j: s.clone() });
            }
        }
    }
    Ok(out)
}

/// Rays and lineality of the fundamental face F_J = {h | <c_i,h> = 0 on J,
/// <c_i,h> >= 0 off J}.
fn fundamental_face(rd: &RootDatum, j: &[usize]) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    let n = rd.gcm.n();
    let c = rd.root_matrix();
    let mut rays = Vec::new();
    for k in 0..n {
        if j.contains(&k) {
            continue;
        }
        let mut pattern = vec![Rat::zero(); n];
        pattern[k] = Rat::from_integer(BigInt::from(1));
        let r = c.solve(&pattern).expect("roots independent");
        rays.push(primitive_ray(&r));
    }
    let lineality = c.kernel_basis();
    (rays, lineality)
}

/// Realizes the cone cell of a residue in the requested half.
pub fn realize_cell(
    rd: &RootDatum,
    residue: &Residue,
    half: Half,
) -> Result<IdealCell, HorizonError> {
    let (rays0, lineality0) = fundamental_face(rd, &residue.j.j);
    if rays0.is_empty() && lineality0.is_empty() {
        return Err(HorizonError::EmptyFace);
    }
    let m = &residue.rep.matrix;
    let sign = match half {
        Half::Positive => Rat::from_integer(BigInt::from(1)),
        Half::Negative => Rat::from_integer(BigInt::from(-1)),
    };
    let rays = sort_rays(
        rays0
            .iter()
            .map(|r| primitive_ray(&crate::linalg::scale(&m.mul_vec(r), &sign)))
            .collect(),
    );
    let lineality = lineality0.iter().map(|v| m.mul_vec(v)).collect();
    Ok(IdealCell {
        residue: residue.clone(),
        half,
        rays,
        lineality,
        color: residue.j.j.clone(),
    })
}

/// Membership of a point in the open cell: after undoing the
/// representative, pairings vanish exactly on J and are positive off J.
pub fn point_in_open_cell(rd: &RootDatum, cell: &IdealCell, coords: &[Rat]) -> bool {
    let sign_fixed: Vec<Rat> = match cell.half {
        Half::Positive => coords.to_vec(),
        Half::Negative => crate::linalg::neg_vec(coords),
    };
    let back = cell.residue.rep.inverse.mul_vec(&sign_fixed);
    let pairings = rd.pairings(&back);
    (0..rd.gcm.n()).all(|i| {
        if cell.color.contains(&i) {
            pairings[i].is_zero()
        } else {
            pairings[i].is_positive()
        }
    })
}

/// Membership in the closed cone of the cell.
pub fn point_in_closed_cell(rd: &RootDatum, cell: &IdealCell, coords: &[Rat]) -> bool {
    let sign_fixed: Vec<Rat> = match cell.half {
        Half::Positive => coords.to_vec(),
        Half::Negative => crate::linalg::neg_vec(coords),
    };
    let back = cell.residue.rep.inverse.mul_vec(&sign_fixed);
    let pairings = rd.pairings(&back);
    (0..rd.gcm.n()).all(|i| {
        if cell.color.contains(&i) {
            pairings[i].is_zero()
        } else {
            !pairings[i].is_negative()
        }
    })
}

/// The immutable horizon fan of one ball: all realizable spherical cells
/// in both halves.
pub struct HorizonComplex {
    pub gcm: GcmMatrix,
    pub rd: RootDatum,
    pub radius: usize,
    pub cells: Vec<IdealCell>,
    index: HashMap<(Vec<usize>, Vec<usize>, Half), usize>,
}

fn cell_budget() -> u64 {
    std::env::var("KMFLAT_MAX_CELLS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1_000_000)
}

impl HorizonComplex {
    /// Builds with the budget from KMFLAT_MAX_CELLS (default one million).
    pub fn build(m: &GcmMatrix, radius: usize) -> Result<HorizonComplex, HorizonError> {
        Self::build_with_budget(m, radius, cell_budget())
    }

    pub fn build_with_budget(
        m: &GcmMatrix,
        radius: usize,
        budget: u64,
    ) -> Result<HorizonComplex, HorizonError> {
        let rd = build_realization(m);
        let residues = residues_in_ball(m, radius)?;
        let mut cells = Vec::new();
        let mut index = HashMap::new();
        for r in &residues {
            for half in [Half::Positive, Half::Negative] {
                match realize_cell(&rd, r, half) {
                    Ok(cell) => {
                        index.insert((r.rep.word.clone(), r.j.j.clone(), half), cells.len());
                        cells.push(cell);
                        if cells.len() as u64 > budget {
                            return Err(HorizonError::CellBudgetExceeded(cells.len(), budget));
                        }
                    }
                    Err(HorizonError::EmptyFace) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(HorizonComplex { gcm: m.clone(), rd, radius, cells, index })
    }

    pub fn find(&self, word: &[usize], j: &[usize], half: Half) -> Option<usize> {
        self.index.get(&(word.to_vec(), j.to_vec(), half)).copied()
    }

    /// An interior sample point of the cell: the ray sum (a relative
    /// interior point because the rays hit each off-J wall once).
    pub fn sample_point(&self, cell: &IdealCell) -> Vec<Rat> {
        let dim = self.rd.dim;
        let mut s = vec![Rat::zero(); dim];
        for r in &cell.rays {
            for k in 0..dim {
                s[k] = &s[k] + &r[k];
            }
        }
        if cell.rays.is_empty() {
            for k in 0..dim {
                s[k] = cell.lineality[0][k].clone();
            }
        }
        s
    }

    /// Locates the open spherical cell containing a point, if it lies in
    /// one inside the ball.
    pub fn locate_point(&self, coords: &[Rat]) -> Option<usize> {
        let wg = WeylGroup::new(&self.rd);
        for half in [Half::Positive, Half::Negative] {
            let q: Vec<Rat> = match half {
                Half::Positive => coords.to_vec(),
                Half::Negative => crate::linalg::neg_vec(coords),
            };
            let query = crate::cone::tits_cone_membership(
                &wg,
                &RealFormPoint::new(q.clone()),
                4 * (self.radius + 4),
            );
            use crate::cone::ConeStatus::*;
            if !matches!(query.status, InteriorC0 | BoundaryC0 | InTitsCone) {
                continue;
            }
            // descent applies s_{i1}, then s_{i2}, ...; undoing it in the
            // same order names the chamber holding q
            let w = wg.from_word(&query.descent_word).unwrap();
            let dominant = w.inverse.mul_vec(&q);
            let pairings = self.rd.pairings(&dominant);
            let j: Vec<usize> = (0..self.gcm.n()).filter(|&i| pairings[i].is_zero()).collect();
            let rep = wg.min_coset_rep(&w, &j);
            if let Some(idx) = self.find(&rep.word, &j, half) {
                return Some(idx);
            }
        }
        None
    }

    /// Asymptote-class equality of two pointed rays in the fan: same cell
    /// and positively proportional points.
    pub fn parallel_class(
        &self,
        cell1: usize,
        p1: &[Rat],
        cell2: usize,
        p2: &[Rat],
    ) -> Result<bool, HorizonError> {
        let c1 = &self.cells[cell1];
        let c2 = &self.cells[cell2];
        if !point_in_open_cell(&self.rd, c1, p1) || !point_in_open_cell(&self.rd, c2, p2) {
            return Err(HorizonError::PointNotInFace);
        }
        Ok(cell1 == cell2 && crate::linalg::positively_proportional(p1, p2))
    }

    /// Applies an arrangement-preserving map to every cell, returning for
    /// each cell the index of its image cell (None when the image leaves
    /// the ball).
    pub fn automorphism_action(
        &self,
        auto: &BoundaryAutomorphism,
    ) -> Result<Vec<Option<usize>>, HorizonError> {
        let wg = WeylGroup::new(&self.rd);
        let f = match auto {
            BoundaryAutomorphism::Weyl(word) => wg.from_word(word).unwrap().matrix,
            BoundaryAutomorphism::Diagram(perm) => induced_map(&self.rd, perm),
            BoundaryAutomorphism::MinusId => {
                RatMat::identity(self.rd.dim).scale(&Rat::from_integer(BigInt::from(-1)))
            }
        };
        let window = 2 * (self.radius as i64 + 2);
        match is_local_transformation(&wg, &f, window)
            .map_err(|_| HorizonError::NotArrangementPreserving)?
        {
            LocalVerdict::Yes { .. } => {}
            LocalVerdict::No { .. } => return Err(HorizonError::NotArrangementPreserving),
        }
        Ok(self
            .cells
            .iter()
            .map(|cell| {
                let sample = self.sample_point(cell);
                let image = f.mul_vec(&sample);
                self.locate_point(&image)
            })
            .collect())
    }

    /// True when cell `a` lies in the closure of cell `b`.
    pub fn in_closure(&self, a: usize, b: usize) -> bool {
        let ca = &self.cells[a];
        let cb = &self.cells[b];
        if ca.half != cb.half {
            return false;
        }
        let mut generators: Vec<Vec<Rat>> = ca.rays.clone();
        for l in &ca.lineality {
            generators.push(l.clone());
            generators.push(crate::linalg::neg_vec(l));
        }
        generators
            .iter()
            .all(|g| point_in_closed_cell(&self.rd, cb, g))
    }

    /// Algebraic face order: w_a W_{J_a} contains w_b W_{J_b}.
    pub fn coset_contains(&self, a: usize, b: usize) -> bool {
        let ca = &self.cells[a];
        let cb = &self.cells[b];
        if ca.half != cb.half {
            return false;
        }
        if !cb.color.iter().all(|i| ca.color.contains(i)) {
            return false;
        }
        let wg = WeylGroup::new(&self.rd);
        let rep_b = wg.min_coset_rep(&cb.residue.rep, &ca.color);
        rep_b.word == ca.residue.rep.word
    }

    /// DOT rendering of the residue poset (reverse inclusion, covering
    /// edges only, positive half).
    pub fn poset_dot(&self) -> String {
        let mut out = String::from("digraph horizon {\n  rankdir=BT;\n");
        let label = |c: &IdealCell| {
            format!(
                "w={:?} J={:?}",
                c.residue.rep.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
                c.color.iter().map(|i| i + 1).collect::<Vec<_>>()
            )
        };
        for (i, c) in self.cells.iter().enumerate() {
            if c.half != Half::Positive {
                continue;
            }
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, label(c)));
        }
        for (i, ci) in self.cells.iter().enumerate() {
            for (j, cj) in self.cells.iter().enumerate() {
                if i == j || ci.half != Half::Positive || cj.half != Half::Positive {
                    continue;
                }
                if ci.color.len() == cj.color.len() + 1 && self.coset_contains(i, j) {
                    out.push_str(&format!("  n{} -> n{};\n", i, j));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Maps acting on the horizon fan.
#[derive(Clone, Debug)]
pub enum BoundaryAutomorphism {
    /// Weyl element given by a word.
    Weyl(Vec<usize>),
    /// Diagram automorphism given by the image of each index.
    Diagram(Vec<usize>),
    MinusId,
}
