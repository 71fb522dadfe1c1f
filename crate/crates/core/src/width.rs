//! Width of a surface and its behavior under surgery.
//!
//! A connected surface has width `(-χ, |H ∩ T¹|)`. A disconnected surface has
//! the multiset of its components' widths, listed in non-increasing order and
//! compared lexicographically; the empty surface has width `(0, 0)`.
//! Surgery is tracked only through Euler characteristic and weight.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceComponent {
    pub chi: i64,
    pub weight: u64,
    /// Set on components bounding a ball; they are discarded and take no part
    /// in the width.
    #[serde(default)]
    pub in_ball: bool,
}

impl SurfaceComponent {
    pub fn new(chi: i64, weight: u64) -> Self {
        SurfaceComponent {
            chi,
            weight,
            in_ball: false,
        }
    }
}

/// Component widths `(-χ, weight)` sorted non-increasingly.
///
/// The derived order is the required one: lexicographic on the sorted
/// sequence, pairs compared lexicographically, and a proper prefix sorts
/// first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Width(Vec<(i64, u64)>);

impl Width {
    pub fn from_pairs(mut pairs: Vec<(i64, u64)>) -> Self {
        if pairs.is_empty() {
            pairs.push((0, 0));
        }
        pairs.sort_by(|a, b| b.cmp(a));
        Width(pairs)
    }

    pub fn pairs(&self) -> &[(i64, u64)] {
        &self.0
    }
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (c, w)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({c},{w})")?;
        }
        f.write_str("}")
    }
}

pub fn width(surface: &[SurfaceComponent]) -> Width {
    Width::from_pairs(
        surface
            .iter()
            .filter(|c| !c.in_ball)
            .map(|c| (-c.chi, c.weight))
            .collect(),
    )
}

pub fn compare_width(a: &Width, b: &Width) -> Ordering {
    a.cmp(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SurgeryMove {
    /// Honest compression along a nonseparating curve: χ rises by 2.
    HonestCompressNonsep { target: usize },
    /// Honest surgery along a separating curve or arc. The target is replaced
    /// by the two `(χ, weight)` parts. Their χ sum to χ + 2 for a compression
    /// and to χ + 1 for a separating ∂-compression.
    HonestCompressSep { target: usize, parts: [(i64, u64); 2] },
    /// Honest ∂-compression along a nonseparating arc: χ rises by 1.
    HonestBoundaryCompress { target: usize },
    /// Dishonest compression: the disk cut off meets T¹ `k` times and ends up
    /// in a discarded sphere, so the surviving surface loses `k` weight.
    Dishonest { target: usize, k: u64 },
}

impl SurgeryMove {
    pub fn target(&self) -> usize {
        match *self {
            SurgeryMove::HonestCompressNonsep { target }
            | SurgeryMove::HonestCompressSep { target, .. }
            | SurgeryMove::HonestBoundaryCompress { target }
            | SurgeryMove::Dishonest { target, .. } => target,
        }
    }
}

impl fmt::Display for SurgeryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryMove::HonestCompressNonsep { target } => write!(f, "honest nonseparating compression of #{target}"),
            SurgeryMove::HonestCompressSep { target, parts } => write!(
                f,
                "honest separating surgery of #{target} into (chi={},w={}) and (chi={},w={})",
                parts[0].0, parts[0].1, parts[1].0, parts[1].1
            ),
            SurgeryMove::HonestBoundaryCompress { target } => write!(f, "honest boundary compression of #{target}"),
            SurgeryMove::Dishonest { target, k } => write!(f, "dishonest compression of #{target}, weight -{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("no component #{0}")]
    NoSuchComponent(usize),
    #[error("component #{0} has been discarded")]
    Discarded(usize),
    #[error("component #{target} has χ = {chi}; no essential curve or arc to surger along")]
    NoEssentialCurve { target: usize, chi: i64 },
    #[error("split of χ = {chi}, weight {weight} into {parts:?} is inconsistent")]
    InvalidSplit {
        chi: i64,
        weight: u64,
        parts: [(i64, u64); 2],
    },
    #[error("dishonest reduction k = {k} must satisfy 1 <= k <= weight {weight}")]
    InvalidReduction { k: u64, weight: u64 },
}

/// Checks the move against the surface without applying it.
pub fn validate_move(surface: &[SurfaceComponent], mv: &SurgeryMove) -> Result<(), SurgeryError> {
    let t = mv.target();
    let c = surface.get(t).ok_or(SurgeryError::NoSuchComponent(t))?;
    if c.in_ball {
        return Err(SurgeryError::Discarded(t));
    }
    match *mv {
        SurgeryMove::HonestCompressNonsep { .. } | SurgeryMove::HonestBoundaryCompress { .. } => {
            // disks and spheres carry no essential curves or arcs
            if c.chi > 0 {
                return Err(SurgeryError::NoEssentialCurve { target: t, chi: c.chi });
            }
        }
        SurgeryMove::HonestCompressSep { parts, .. } => {
            let chi_sum = parts[0].0 + parts[1].0;
            let ok = (chi_sum == c.chi + 2 || chi_sum == c.chi + 1)
                && parts.iter().all(|p| p.0 > c.chi)
                && parts[0].1.checked_add(parts[1].1) == Some(c.weight);
            if !ok {
                return Err(SurgeryError::InvalidSplit {
                    chi: c.chi,
                    weight: c.weight,
                    parts,
                });
            }
        }
        SurgeryMove::Dishonest { k, .. } => {
            if k == 0 || k > c.weight {
                return Err(SurgeryError::InvalidReduction { k, weight: c.weight });
            }
        }
    }
    Ok(())
}

pub fn apply_surgery(surface: &[SurfaceComponent], mv: &SurgeryMove) -> Result<Vec<SurfaceComponent>, SurgeryError> {
    validate_move(surface, mv)?;
    let mut out = surface.to_vec();
    let t = mv.target();
    match *mv {
        SurgeryMove::HonestCompressNonsep { .. } => out[t].chi += 2,
        SurgeryMove::HonestBoundaryCompress { .. } => out[t].chi += 1,
        SurgeryMove::HonestCompressSep { parts, .. } => {
            out[t] = SurfaceComponent::new(parts[0].0, parts[0].1);
            out.push(SurfaceComponent::new(parts[1].0, parts[1].1));
        }
        SurgeryMove::Dishonest { k, .. } => {
            out[t].weight -= k;
            out.push(SurfaceComponent {
                chi: 2,
                weight: k,
                in_ball: true,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthVerdict {
    pub before: Width,
    pub after: Width,
    pub pass: bool,
}

/// Applies the move and checks that width strictly drops.
pub fn verify_width_decrease(surface: &[SurfaceComponent], mv: &SurgeryMove) -> Result<WidthVerdict, SurgeryError> {
    let after_surface = apply_surgery(surface, mv)?;
    let before = width(surface);
    let after = width(&after_surface);
    let pass = compare_width(&after, &before) == Ordering::Less;
    Ok(WidthVerdict { before, after, pass })
}

/// Every move family that applies to some component, with one canonical
/// instance each. A surface with no available moves is terminal.
pub fn available_moves(surface: &[SurfaceComponent]) -> Vec<SurgeryMove> {
    let mut out = Vec::new();
    for (t, c) in surface.iter().enumerate().filter(|(_, c)| !c.in_ball) {
        if c.chi <= 0 {
            out.push(SurgeryMove::HonestCompressNonsep { target: t });
            out.push(SurgeryMove::HonestBoundaryCompress { target: t });
            let a = (c.chi + 2) / 2;
            out.push(SurgeryMove::HonestCompressSep {
                target: t,
                parts: [(a, c.weight / 2), (c.chi + 2 - a, c.weight - c.weight / 2)],
            });
        }
        if c.weight > 0 {
            out.push(SurgeryMove::Dishonest { target: t, k: 1 });
        }
    }
    out.retain(|m| validate_move(surface, m).is_ok());
    out
}
