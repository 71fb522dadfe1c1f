//! Reduced homology of joins from the homology of the factors.
//!
//! For nonempty `A` and `B`,
//!
//! ```text
//! H̃_k(A * B) ≅ ⊕_{i+j=k-1} H̃_i(A) ⊗ H̃_j(B)  ⊕  ⊕_{i+j=k-2} Tor(H̃_i(A), H̃_j(B))
//! ```
//!
//! Sums over an empty index range are zero. Joining with the empty complex
//! is the identity at the complex level and is never fed through the formula.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::homology::{reduced_homology, AbelianGroup, HomologyIndex, HomologyProfile};
use crate::simplicial::{join_disjoint, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JoinFormulaError {
    #[error("the join formula takes nonempty operands; join with the empty complex is the identity")]
    EmptyOperand,
}

fn cross_torsion(g: &AbelianGroup, h: &AbelianGroup) -> Vec<BigUint> {
    g.torsion
        .iter()
        .flat_map(|d| h.torsion.iter().map(move |e| d.gcd(e)))
        .collect()
}

/// `G ⊗ H`, expanded over the cyclic summands.
pub fn tensor(g: &AbelianGroup, h: &AbelianGroup) -> AbelianGroup {
    let mut orders = cross_torsion(g, h);
    for _ in 0..h.rank {
        orders.extend(g.torsion.iter().cloned());
    }
    for _ in 0..g.rank {
        orders.extend(h.torsion.iter().cloned());
    }
    AbelianGroup::new(g.rank * h.rank, orders)
}

/// `Tor(G, H)`; only torsion pairs contribute.
pub fn tor(g: &AbelianGroup, h: &AbelianGroup) -> AbelianGroup {
    AbelianGroup::new(0, cross_torsion(g, h))
}

/// Homology of `A * B` computed from the profiles of `A` and `B`.
pub fn join_homology_via_formula(
    a: &HomologyProfile,
    b: &HomologyProfile,
) -> Result<HomologyProfile, JoinFormulaError> {
    if a.empty || b.empty {
        return Err(JoinFormulaError::EmptyOperand);
    }
    let (la, lb) = (a.groups.len(), b.groups.len());
    if la == 0 || lb == 0 {
        return Ok(HomologyProfile::from_groups(Vec::new()));
    }
    let top = la + lb;
    let mut groups = vec![AbelianGroup::trivial(); top + 1];
    for (i, gi) in a.groups.iter().enumerate() {
        for (j, hj) in b.groups.iter().enumerate() {
            let t = &mut groups[i + j + 1];
            *t = t.sum(&tensor(gi, hj));
            let r = &mut groups[i + j + 2];
            *r = r.sum(&tor(gi, hj));
        }
    }
    Ok(HomologyProfile::from_groups(groups))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MilnorRule {
    /// Both operands nonempty; compared against the formula.
    Formula,
    /// One operand empty; the join is the other operand.
    EmptyIdentity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionVerdict {
    pub dim: usize,
    pub direct: String,
    pub formula: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MilnorReport {
    pub left: String,
    pub right: String,
    pub rule: MilnorRule,
    pub direct: HomologyProfile,
    pub predicted: HomologyProfile,
    pub dimensions: Vec<DimensionVerdict>,
    pub pass: bool,
}

impl MilnorReport {
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!(
            "milnor {} * {} ({}): {}",
            self.left,
            self.right,
            match self.rule {
                MilnorRule::Formula => "formula",
                MilnorRule::EmptyIdentity => "empty-join identity",
            },
            if self.pass { "PASS" } else { "FAIL" }
        )];
        for d in &self.dimensions {
            out.push(format!(
                "  H~{} direct = {}  formula = {}  {}",
                d.dim,
                d.direct,
                d.formula,
                if d.equal { "ok" } else { "MISMATCH" }
            ));
        }
        out
    }
}

/// Compares the homology of `join(A, B)` computed directly with the
/// prediction from the factors. Colliding vertex sets are relabeled first.
pub fn verify_milnor(a: &SimplicialComplex, b: &SimplicialComplex) -> MilnorReport {
    let joined = join_disjoint(a, b);
    let direct = reduced_homology(&joined);
    let pa = reduced_homology(a);
    let pb = reduced_homology(b);
    let (rule, predicted) = match join_homology_via_formula(&pa, &pb) {
        Ok(p) => (MilnorRule::Formula, p),
        Err(JoinFormulaError::EmptyOperand) => {
            let other = if pa.empty { pb } else { pa };
            (MilnorRule::EmptyIdentity, other)
        }
    };
    let n = direct.groups.len().max(predicted.groups.len());
    let dimensions: Vec<DimensionVerdict> = (0..n)
        .map(|k| {
            let (x, y) = (direct.group(k), predicted.group(k));
            DimensionVerdict {
                dim: k,
                direct: x.to_string(),
                formula: y.to_string(),
                equal: x == y,
            }
        })
        .collect();
    let pass = direct == predicted;
    MilnorReport {
        left: a.name().to_owned(),
        right: b.name().to_owned(),
        rule,
        direct,
        predicted,
        dimensions,
        pass,
    }
}

/// Index of a join from the indices of its factors: empty factors are
/// identities, an acyclic factor makes the join acyclic, and otherwise the
/// indices add.
pub fn index_sum_law(indices: &[HomologyIndex]) -> HomologyIndex {
    let mut total = 0u32;
    for idx in indices {
        match idx {
            HomologyIndex::Zero => {}
            HomologyIndex::Index(n) => total += n,
            HomologyIndex::Acyclic => return HomologyIndex::Acyclic,
        }
    }
    HomologyIndex::from_value(total)
}
