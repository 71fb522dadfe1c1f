//! Exhaustive check of the subcomplex dichotomy.
//!
//! For a full subcomplex `X ⊂ Y` with `ind(X) = n`, either `ind(Y) ≤ n`, or
//! some simplex `τ ⊂ Y ∖ X` has `ind(V_τ) ≤ n − dim(τ)`, where `V_τ` is the
//! subcomplex of `X` spanned by vertices adjacent in `Y` to all of `τ`.
//! Indices are homology indices; an acyclic complex never meets a bound.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::homology::{reduced_homology, HomologyIndex, HomologyProfile};
use crate::simplicial::{adjacency_subcomplex, Simplex, SimplicialComplex, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DichotomyError {
    #[error("{x} is not a full subcomplex of {y}")]
    NotFullSubcomplex { x: String, y: String },
    #[error("{0} is acyclic; the dichotomy needs a subcomplex with a defined index")]
    UndefinedIndex(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    YSmall,
    TauFound,
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DichotomyWitness {
    pub verdict: Verdict,
    pub tau: Option<Simplex>,
    pub tau_dim: Option<usize>,
    pub index_x: HomologyIndex,
    pub index_y: HomologyIndex,
    pub index_v: Option<HomologyIndex>,
    /// Simplices of `Y ∖ X` examined before stopping.
    pub candidates_checked: usize,
    /// Pairs `σ ⊂ τ` seen during the search with `V_τ ⊄ V_σ`; always zero
    /// unless adjacency is computed wrongly.
    pub monotonicity_violations: usize,
    pub profile_x: HomologyProfile,
    pub profile_y: HomologyProfile,
}

impl DichotomyWitness {
    pub fn lines(&self) -> Vec<String> {
        let verdict = match self.verdict {
            Verdict::YSmall => "Y_SMALL",
            Verdict::TauFound => "TAU_FOUND",
            Verdict::Failure => "FAILURE",
        };
        let mut out = vec![
            format!("verdict: {verdict}"),
            format!("ind(X) = {}", self.index_x),
            format!("ind(Y) = {}", self.index_y),
        ];
        if let (Some(t), Some(v)) = (&self.tau, self.index_v) {
            out.push(format!("tau = {t} (dim {}), ind(V_tau) = {v}", t.dim()));
        }
        out.push(format!("candidates checked: {}", self.candidates_checked));
        if self.verdict == Verdict::Failure {
            out.extend(self.profile_x.lines().into_iter().map(|l| format!("  X: {l}")));
            out.extend(self.profile_y.lines().into_iter().map(|l| format!("  Y: {l}")));
        }
        out
    }
}

/// Simplices of `y` with no vertex in `x`, by increasing dimension and then
/// lexicographically.
pub fn outside_simplices(x: &SimplicialComplex, y: &SimplicialComplex) -> Vec<Simplex> {
    let xv = x.vertices();
    y.faces_by_dim()
        .iter()
        .flat_map(|layer| layer.iter())
        .filter(|s| s.vertices().iter().all(|v| !xv.contains(v)))
        .cloned()
        .collect()
}

pub fn check_dichotomy(x: &SimplicialComplex, y: &SimplicialComplex) -> Result<DichotomyWitness, DichotomyError> {
    if !x.is_full_subcomplex_of(y) {
        return Err(DichotomyError::NotFullSubcomplex {
            x: x.name().to_owned(),
            y: y.name().to_owned(),
        });
    }
    let profile_x = reduced_homology(x);
    let index_x = profile_x.index();
    let n = index_x
        .value()
        .ok_or_else(|| DichotomyError::UndefinedIndex(x.name().to_owned()))?;
    let profile_y = reduced_homology(y);
    let index_y = profile_y.index();
    let mut witness = DichotomyWitness {
        verdict: Verdict::Failure,
        tau: None,
        tau_dim: None,
        index_x,
        index_y,
        index_v: None,
        candidates_checked: 0,
        monotonicity_violations: 0,
        profile_x,
        profile_y,
    };
    if index_y.at_most(i64::from(n)) {
        witness.verdict = Verdict::YSmall;
        return Ok(witness);
    }
    let mut seen: BTreeMap<Simplex, BTreeSet<Vertex>> = BTreeMap::new();
    for tau in outside_simplices(x, y) {
        witness.candidates_checked += 1;
        let v = adjacency_subcomplex(x, y, &tau).expect("validated inputs");
        let verts = v.vertices();
        for sigma in tau.boundary_faces() {
            if let Some(vs) = seen.get(&sigma) {
                if !verts.is_subset(vs) {
                    witness.monotonicity_violations += 1;
                }
            }
        }
        let index_v = reduced_homology(&v).index();
        if index_v.at_most(i64::from(n) - tau.dim() as i64) {
            witness.verdict = Verdict::TauFound;
            witness.tau_dim = Some(tau.dim());
            witness.tau = Some(tau);
            witness.index_v = Some(index_v);
            return Ok(witness);
        }
        seen.insert(tau, verts);
    }
    Ok(witness)
}
