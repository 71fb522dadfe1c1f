//! Reduced integral homology and the homology index.
//!
//! The index of a complex is 0 when it is empty, otherwise the smallest `n`
//! with nonvanishing `H̃_{n-1}`. Complexes whose reduced homology vanishes
//! entirely carry no index and are reported as [`HomologyIndex::Acyclic`].

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::simplicial::{Simplex, SimplicialComplex};
use crate::smith::{normalize_chain, smith_normal_form, IntegerMatrix};

/// A finitely generated abelian group `Z^rank ⊕ Z/d1 ⊕ Z/d2 ⊕ ...` with
/// `d1 | d2 | ...` and every `di ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    #[serde(with = "orders")]
    pub torsion: Vec<BigUint>,
}

/// Torsion orders as JSON numbers, falling back to decimal strings past
/// `u64`.
mod orders {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Order {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let out: Vec<Order> = v
            .iter()
            .map(|d| d.to_u64().map_or_else(|| Order::Big(d.to_string()), Order::Small))
            .collect();
        out.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Order>::deserialize(d)?
            .into_iter()
            .map(|o| match o {
                Order::Small(n) => Ok(BigUint::from(n)),
                Order::Big(s) => s.parse().map_err(serde::de::Error::custom),
            })
            .collect()
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::new(0, [BigUint::from(order)])
    }

    /// Builds a group from any list of cyclic orders; orders 0 and 1 are
    /// dropped and the rest normalized into a divisibility chain.
    pub fn new(rank: usize, orders: impl IntoIterator<Item = BigUint>) -> Self {
        let chain = normalize_chain(orders.into_iter().map(BigInt::from));
        AbelianGroup {
            rank,
            torsion: chain
                .into_iter()
                .filter(|d| !d.is_one())
                .map(|d| d.to_biguint().expect("positive"))
                .collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, renormalized.
    pub fn sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::new(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    pub fn is_chain(&self) -> bool {
        self.torsion.iter().all(|d| *d >= BigUint::from(2u8))
            && self.torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_owned()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Reduced homology of a complex, by dimension starting at 0.
///
/// Trailing trivial groups are trimmed, so an acyclic complex has no groups.
/// The empty complex is flagged separately: its only reduced group sits in
/// degree −1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub empty: bool,
    pub groups: Vec<AbelianGroup>,
}

impl HomologyProfile {
    pub fn empty_complex() -> Self {
        HomologyProfile {
            empty: true,
            groups: Vec::new(),
        }
    }

    pub fn from_groups(mut groups: Vec<AbelianGroup>) -> Self {
        while groups.last().is_some_and(AbelianGroup::is_trivial) {
            groups.pop();
        }
        HomologyProfile { empty: false, groups }
    }

    /// `H̃_k`, trivial beyond the stored range.
    pub fn group(&self, k: usize) -> AbelianGroup {
        self.groups.get(k).cloned().unwrap_or_default()
    }

    pub fn is_acyclic(&self) -> bool {
        !self.empty && self.groups.is_empty()
    }

    /// Rational Betti numbers of reduced homology.
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    pub fn index(&self) -> HomologyIndex {
        if self.empty {
            return HomologyIndex::Zero;
        }
        match self.groups.iter().position(|g| !g.is_trivial()) {
            Some(k) => HomologyIndex::Index(k as u32 + 1),
            None => HomologyIndex::Acyclic,
        }
    }

    /// One line per degree: `H~k = Z^r + Z/d`.
    pub fn lines(&self) -> Vec<String> {
        if self.empty {
            return vec!["H~-1 = Z (empty complex)".to_owned()];
        }
        if self.groups.is_empty() {
            return vec!["H~* = 0".to_owned()];
        }
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| format!("H~{k} = {g}"))
            .collect()
    }
}

/// Index of a complex read off from reduced homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "tag", content = "n", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum HomologyIndex {
    /// The empty complex.
    Zero,
    /// Smallest `n ≥ 1` with `H̃_{n-1} ≠ 0`.
    Index(u32),
    /// Nonempty with vanishing reduced homology; the index is undefined.
    Acyclic,
}

impl HomologyIndex {
    /// The numeric index, or `None` when undefined.
    pub fn value(self) -> Option<u32> {
        match self {
            HomologyIndex::Zero => Some(0),
            HomologyIndex::Index(n) => Some(n),
            HomologyIndex::Acyclic => None,
        }
    }

    pub fn from_value(n: u32) -> Self {
        if n == 0 {
            HomologyIndex::Zero
        } else {
            HomologyIndex::Index(n)
        }
    }

    /// Whether this index is defined and at most `bound`. Undefined indices
    /// never satisfy a bound.
    pub fn at_most(self, bound: i64) -> bool {
        self.value().is_some_and(|n| i64::from(n) <= bound)
    }
}

impl fmt::Display for HomologyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyIndex::Zero => f.write_str("ZERO"),
            HomologyIndex::Index(n) => write!(f, "INDEX({n})"),
            HomologyIndex::Acyclic => f.write_str("ACYCLIC"),
        }
    }
}

/// Augmented boundary operators `∂_0, ∂_1, ..., ∂_dim`.
///
/// `∂_0` is the augmentation `C_0 → Z` (a single row of ones); `∂_k` maps
/// `k`-chains to `(k-1)`-chains with columns and rows in the sorted face
/// order of [`SimplicialComplex::faces_by_dim`]. Deleting the vertex in
/// position `i` carries sign `(-1)^i`.
pub fn boundary_matrices(k: &SimplicialComplex) -> Vec<IntegerMatrix> {
    let faces = k.faces_by_dim();
    if faces.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(faces.len());
    let mut aug = IntegerMatrix::zeros(1, faces[0].len());
    for c in 0..faces[0].len() {
        aug.set(0, c, BigInt::one());
    }
    out.push(aug);
    for d in 1..faces.len() {
        let index: HashMap<&Simplex, usize> = faces[d - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut m = IntegerMatrix::zeros(faces[d - 1].len(), faces[d].len());
        for (c, s) in faces[d].iter().enumerate() {
            for (i, face) in s.boundary_faces().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(index[&face], c, BigInt::from(sign));
            }
        }
        out.push(m);
    }
    out
}

pub fn reduced_homology(k: &SimplicialComplex) -> HomologyProfile {
    let faces = k.faces_by_dim();
    if faces.is_empty() {
        return HomologyProfile::empty_complex();
    }
    let factors: Vec<Vec<BigInt>> = boundary_matrices(k).iter().map(smith_normal_form).collect();
    let top = faces.len();
    let groups = (0..top)
        .map(|d| {
            let rank_out = factors[d].len();
            let (rank_in, torsion) = match factors.get(d + 1) {
                Some(f) => (
                    f.len(),
                    f.iter()
                        .filter(|x| !x.is_one())
                        .map(|x| x.abs().to_biguint().expect("positive"))
                        .collect(),
                ),
                None => (0, Vec::new()),
            };
            AbelianGroup::new(faces[d].len() - rank_out - rank_in, torsion)
        })
        .collect();
    HomologyProfile::from_groups(groups)
}

pub fn homology_index(k: &SimplicialComplex) -> HomologyIndex {
    reduced_homology(k).index()
}
