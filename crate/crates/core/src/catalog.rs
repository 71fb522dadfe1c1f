//! Surface pieces in a single tetrahedron.
//!
//! Tetrahedron conventions used throughout the crate:
//!
//! * vertices `0..4`;
//! * edges in the order `01, 02, 03, 12, 13, 23`;
//! * face `f` is the face opposite vertex `f`; its three corners are the
//!   remaining vertices in increasing order, and normal-arc type `k` on that
//!   face is the arc cutting off corner `k`.
//!
//! Every piece carries a small model disk complex whose homology index is its
//! declared local index: empty for index 0, two points for index 1 and a
//! square for index 2.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::{homology_index, HomologyIndex};
use crate::simplicial::SimplicialComplex;

pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Vertices of face `f` (the face opposite vertex `f`), ascending.
pub fn face_corners(f: usize) -> [usize; 3] {
    let mut out = [0; 3];
    let mut i = 0;
    for v in 0..4 {
        if v != f {
            out[i] = v;
            i += 1;
        }
    }
    out
}

pub fn edge_index(a: usize, b: usize) -> usize {
    let key = (a.min(b), a.max(b));
    EDGES
        .iter()
        .position(|&e| e == key)
        .expect("distinct tetrahedron vertices")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PieceKind {
    #[serde(rename = "TRI_0")]
    Tri0,
    #[serde(rename = "TRI_1")]
    Tri1,
    #[serde(rename = "TRI_2")]
    Tri2,
    #[serde(rename = "TRI_3")]
    Tri3,
    #[serde(rename = "QUAD_1")]
    Quad1,
    #[serde(rename = "QUAD_2")]
    Quad2,
    #[serde(rename = "QUAD_3")]
    Quad3,
    #[serde(rename = "OCT_1")]
    Oct1,
    #[serde(rename = "OCT_2")]
    Oct2,
    #[serde(rename = "OCT_3")]
    Oct3,
    #[serde(rename = "TUBE")]
    Tube,
    #[serde(rename = "HELICAL_12GON")]
    Helical12Gon,
    #[serde(rename = "TRIPLE_TUBE")]
    TripleTube,
    #[serde(rename = "OCT_TUBE_DISK")]
    OctTubeDisk,
    #[serde(rename = "OCT_TUBE_SELF")]
    OctTubeSelf,
}

impl PieceKind {
    pub const ALL: [PieceKind; 15] = [
        PieceKind::Tri0,
        PieceKind::Tri1,
        PieceKind::Tri2,
        PieceKind::Tri3,
        PieceKind::Quad1,
        PieceKind::Quad2,
        PieceKind::Quad3,
        PieceKind::Oct1,
        PieceKind::Oct2,
        PieceKind::Oct3,
        PieceKind::Tube,
        PieceKind::Helical12Gon,
        PieceKind::TripleTube,
        PieceKind::OctTubeDisk,
        PieceKind::OctTubeSelf,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            PieceKind::Tri0 => "TRI_0",
            PieceKind::Tri1 => "TRI_1",
            PieceKind::Tri2 => "TRI_2",
            PieceKind::Tri3 => "TRI_3",
            PieceKind::Quad1 => "QUAD_1",
            PieceKind::Quad2 => "QUAD_2",
            PieceKind::Quad3 => "QUAD_3",
            PieceKind::Oct1 => "OCT_1",
            PieceKind::Oct2 => "OCT_2",
            PieceKind::Oct3 => "OCT_3",
            PieceKind::Tube => "TUBE",
            PieceKind::Helical12Gon => "HELICAL_12GON",
            PieceKind::TripleTube => "TRIPLE_TUBE",
            PieceKind::OctTubeDisk => "OCT_TUBE_DISK",
            PieceKind::OctTubeSelf => "OCT_TUBE_SELF",
        }
    }

    pub fn is_normal(self) -> bool {
        matches!(
            self,
            PieceKind::Tri0
                | PieceKind::Tri1
                | PieceKind::Tri2
                | PieceKind::Tri3
                | PieceKind::Quad1
                | PieceKind::Quad2
                | PieceKind::Quad3
        )
    }

    /// Local index required of this kind.
    pub fn expected_index(self) -> HomologyIndex {
        match self {
            k if k.is_normal() => HomologyIndex::Zero,
            PieceKind::Oct1 | PieceKind::Oct2 | PieceKind::Oct3 | PieceKind::Tube => HomologyIndex::Index(1),
            _ => HomologyIndex::Index(2),
        }
    }
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown piece kind {0:?}")]
pub struct UnknownKind(pub String);

impl FromStr for PieceKind {
    type Err = UnknownKind;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PieceKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| UnknownKind(s.to_owned()))
    }
}

/// Arc counts on the four faces of the tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FaceArcs {
    /// `normal[f][k]`: arcs on face `f` cutting off corner `k`.
    pub normal: [[u32; 3]; 4],
    /// Arcs with both ends on the same edge of face `f`.
    #[serde(default)]
    pub returning: [u32; 4],
    /// Closed curves lying in the interior of face `f`.
    #[serde(default)]
    pub loops: [u32; 4],
}

impl FaceArcs {
    pub const fn normal(normal: [[u32; 3]; 4]) -> Self {
        FaceArcs {
            normal,
            returning: [0; 4],
            loops: [0; 4],
        }
    }

    pub fn total_normal(&self) -> u32 {
        self.normal.iter().flatten().sum()
    }

    /// Number of points on each edge implied by the arcs of face `f`.
    pub fn edge_weights_from_face(&self, f: usize) -> [(usize, u32); 3] {
        let c = face_corners(f);
        let arcs = self.normal[f];
        // an arc at corner k crosses the two face edges incident to corner k
        [
            (edge_index(c[0], c[1]), arcs[0] + arcs[1]),
            (edge_index(c[0], c[2]), arcs[0] + arcs[2]),
            (edge_index(c[1], c[2]), arcs[1] + arcs[2]),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalPiece {
    pub kind: PieceKind,
    /// Intersection counts with the edges, in [`EDGES`] order.
    pub edge_weights: [u32; 6],
    pub face_arcs: FaceArcs,
    pub euler: i64,
    pub declared_index: HomologyIndex,
    pub model_complex: SimplicialComplex,
}

impl LocalPiece {
    pub fn total_weight(&self) -> u32 {
        self.edge_weights.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{kind}: model complex has index {computed}, declared {declared}")]
    IndexMismatch {
        kind: PieceKind,
        computed: HomologyIndex,
        declared: HomologyIndex,
    },
    #[error("{kind}: declared index {declared}, but this kind requires {required}")]
    WrongIndexForKind {
        kind: PieceKind,
        declared: HomologyIndex,
        required: HomologyIndex,
    },
    #[error("{kind}: face data contains non-normal arcs or loops")]
    NonNormalArcs { kind: PieceKind },
    #[error("{kind}: face {face} implies weight {from_face} on edge {edge}, edge weight is {declared}")]
    InconsistentWeights {
        kind: PieceKind,
        face: usize,
        edge: usize,
        from_face: u32,
        declared: u32,
    },
    #[error("catalog has no entry for {0}")]
    Missing(PieceKind),
}

/// Outcome of [`check_normal_arcs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArcVerdict {
    pub pass: bool,
    pub non_normal: u32,
    pub loops: u32,
}

/// Passes iff every arc on every face is one of the three normal types.
pub fn check_normal_arcs(arcs: &FaceArcs) -> ArcVerdict {
    let non_normal: u32 = arcs.returning.iter().sum();
    let loops: u32 = arcs.loops.iter().sum();
    ArcVerdict {
        pass: non_normal == 0 && loops == 0,
        non_normal,
        loops,
    }
}

/// Index of the piece computed from its model complex.
pub fn local_index(p: &LocalPiece) -> Result<HomologyIndex, CatalogError> {
    let computed = homology_index(&p.model_complex);
    if computed != p.declared_index {
        return Err(CatalogError::IndexMismatch {
            kind: p.kind,
            computed,
            declared: p.declared_index,
        });
    }
    Ok(computed)
}

pub fn validate_piece(p: &LocalPiece) -> Result<(), CatalogError> {
    let required = p.kind.expected_index();
    if p.declared_index != required {
        return Err(CatalogError::WrongIndexForKind {
            kind: p.kind,
            declared: p.declared_index,
            required,
        });
    }
    local_index(p)?;
    if !check_normal_arcs(&p.face_arcs).pass {
        return Err(CatalogError::NonNormalArcs { kind: p.kind });
    }
    for f in 0..4 {
        for (edge, from_face) in p.face_arcs.edge_weights_from_face(f) {
            if from_face != p.edge_weights[edge] {
                return Err(CatalogError::InconsistentWeights {
                    kind: p.kind,
                    face: f,
                    edge,
                    from_face,
                    declared: p.edge_weights[edge],
                });
            }
        }
    }
    Ok(())
}

pub fn validate_catalog(pieces: &[LocalPiece]) -> Result<(), CatalogError> {
    for kind in PieceKind::ALL {
        if !pieces.iter().any(|p| p.kind == kind) {
            return Err(CatalogError::Missing(kind));
        }
    }
    pieces.iter().try_for_each(validate_piece)
}

pub fn model_for(index: HomologyIndex) -> SimplicialComplex {
    let build = |name: &str, faces: &[&[i64]]| {
        SimplicialComplex::from_facets(name, faces.iter().map(|f| f.to_vec())).expect("static model")
    };
    match index {
        HomologyIndex::Zero => SimplicialComplex::empty("empty"),
        HomologyIndex::Index(1) => build("S0", &[&[0], &[1]]),
        HomologyIndex::Index(2) => build("C4", &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
        other => panic!("no catalog model for {other}"),
    }
}

// Edge weights and face arcs.
//
// A connected normal curve on the boundary of a tetrahedron that is not a
// vertex link puts equal weight on each pair of opposite edges, say p, q, r
// on {01,23}, {02,13}, {03,12}, with one weight the sum of the other two.
// The boundary has length 2(p + q + r):
//   quad:          (0, 1, 1) and permutations, length 4
//   octagon:       (2, 1, 1) and permutations, length 8
//   helical 12-gon (3, 2, 1), length 12
// QUAD_k and OCT_k share their distinguished pair: QUAD_1 misses 01 and 23,
// OCT_1 meets them twice. A vertex-linking triangle TRI_v meets the three
// edges at v once. Tubed pieces are built from disjoint disks, so their
// boundary data is the sum of the disks': TUBE and TRIPLE_TUBE from parallel
// copies of TRI_0, OCT_TUBE_DISK from OCT_1 and TRI_0, OCT_TUBE_SELF from
// OCT_1. Face arcs follow from the weights: on a face with corners a, b, c
// the arcs at a number (w_ab + w_ac - w_bc) / 2. Each tube lowers χ by 2.
type Row = (PieceKind, [u32; 6], [[u32; 3]; 4], i64);
const RAW: [Row; 15] = [
    (
        PieceKind::Tri0,
        [1, 1, 1, 0, 0, 0],
        [[0, 0, 0], [1, 0, 0], [1, 0, 0], [1, 0, 0]],
        1,
    ),
    (
        PieceKind::Tri1,
        [1, 0, 0, 1, 1, 0],
        [[1, 0, 0], [0, 0, 0], [0, 1, 0], [0, 1, 0]],
        1,
    ),
    (
        PieceKind::Tri2,
        [0, 1, 0, 1, 0, 1],
        [[0, 1, 0], [0, 1, 0], [0, 0, 0], [0, 0, 1]],
        1,
    ),
    (
        PieceKind::Tri3,
        [0, 0, 1, 0, 1, 1],
        [[0, 0, 1], [0, 0, 1], [0, 0, 1], [0, 0, 0]],
        1,
    ),
    (
        PieceKind::Quad1,
        [0, 1, 1, 1, 1, 0],
        [[1, 0, 0], [1, 0, 0], [0, 0, 1], [0, 0, 1]],
        1,
    ),
    (
        PieceKind::Quad2,
        [1, 0, 1, 1, 0, 1],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0], [0, 1, 0]],
        1,
    ),
    (
        PieceKind::Quad3,
        [1, 1, 0, 0, 1, 1],
        [[0, 0, 1], [0, 1, 0], [0, 1, 0], [1, 0, 0]],
        1,
    ),
    (
        PieceKind::Oct1,
        [2, 1, 1, 1, 1, 2],
        [[0, 1, 1], [0, 1, 1], [1, 1, 0], [1, 1, 0]],
        1,
    ),
    (
        PieceKind::Oct2,
        [1, 2, 1, 1, 2, 1],
        [[1, 0, 1], [1, 1, 0], [0, 1, 1], [1, 0, 1]],
        1,
    ),
    (
        PieceKind::Oct3,
        [1, 1, 2, 2, 1, 1],
        [[1, 1, 0], [1, 0, 1], [1, 0, 1], [0, 1, 1]],
        1,
    ),
    (
        PieceKind::Tube,
        [2, 2, 2, 0, 0, 0],
        [[0, 0, 0], [2, 0, 0], [2, 0, 0], [2, 0, 0]],
        0,
    ),
    (
        PieceKind::Helical12Gon,
        [3, 2, 1, 1, 2, 3],
        [[0, 1, 2], [0, 2, 1], [1, 2, 0], [2, 1, 0]],
        1,
    ),
    (
        PieceKind::TripleTube,
        [3, 3, 3, 0, 0, 0],
        [[0, 0, 0], [3, 0, 0], [3, 0, 0], [3, 0, 0]],
        -1,
    ),
    (
        PieceKind::OctTubeDisk,
        [3, 2, 2, 1, 1, 2],
        [[0, 1, 1], [1, 1, 1], [2, 1, 0], [2, 1, 0]],
        0,
    ),
    (
        PieceKind::OctTubeSelf,
        [2, 1, 1, 1, 1, 2],
        [[0, 1, 1], [0, 1, 1], [1, 1, 0], [1, 1, 0]],
        -1,
    ),
];

fn build_catalog() -> Vec<LocalPiece> {
    RAW.iter()
        .map(|&(kind, edge_weights, arcs, euler)| {
            let declared_index = kind.expected_index();
            LocalPiece {
                kind,
                edge_weights,
                face_arcs: FaceArcs::normal(arcs),
                euler,
                declared_index,
                model_complex: model_for(declared_index).with_name(kind.tag()),
            }
        })
        .collect()
}

/// The validated built-in catalog, one entry per [`PieceKind`].
pub fn catalog() -> &'static [LocalPiece] {
    static CATALOG: OnceLock<Vec<LocalPiece>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let pieces = build_catalog();
        if let Err(e) = validate_catalog(&pieces) {
            panic!("built-in catalog is corrupt: {e}");
        }
        pieces
    })
}

pub fn piece(kind: PieceKind) -> &'static LocalPiece {
    catalog()
        .iter()
        .find(|p| p.kind == kind)
        .expect("catalog covers every kind")
}
