//! Surface configurations over glued tetrahedra.
//!
//! A configuration places catalog pieces in the tetrahedra of a face-glued
//! skeleton. This module checks the normal-arc matching across glued faces,
//! counts the Euler characteristic of the assembled surface, and builds the
//! global disk complex as the join of the local model complexes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{edge_index, face_corners, LocalPiece, PieceKind};
use crate::homology::{homology_index, HomologyIndex};
use crate::milnor::index_sum_law;
use crate::simplicial::{join, SimplicialComplex};

/// Identification of face `face_a` of `tet_a` with face `face_b` of `tet_b`.
///
/// Corner `k` of face A (corners in increasing vertex order) is matched to
/// corner `perm[k]` of face B, so arc type `k` on A is glued to arc type
/// `perm[k]` on B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet_a: usize,
    pub face_a: usize,
    pub tet_b: usize,
    pub face_b: usize,
    pub perm: [usize; 3],
}

impl Gluing {
    /// Image in tet B of a vertex of face A.
    fn map_vertex(&self, v: usize) -> usize {
        let ca = face_corners(self.face_a);
        let cb = face_corners(self.face_b);
        let k = ca.iter().position(|&c| c == v).expect("vertex on glued face");
        cb[self.perm[k]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TetGluing {
    pub tets: usize,
    pub gluings: Vec<Gluing>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlacedPiece {
    pub tet: usize,
    pub kind: PieceKind,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "ConfigFile", try_from = "ConfigFile")]
pub struct SurfaceConfiguration {
    pub skeleton: TetGluing,
    pub pieces: Vec<PlacedPiece>,
}

/// File form: `{"tets": N, "gluings": [[tA,fA,tB,fB,[p0,p1,p2]],...],
/// "pieces": [[tet,"KIND",mult],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigFile {
    pub tets: usize,
    #[serde(default)]
    pub gluings: Vec<(usize, usize, usize, usize, [usize; 3])>,
    #[serde(default)]
    pub pieces: Vec<(usize, PieceKind, u32)>,
}

impl From<SurfaceConfiguration> for ConfigFile {
    fn from(c: SurfaceConfiguration) -> Self {
        ConfigFile {
            tets: c.skeleton.tets,
            gluings: c
                .skeleton
                .gluings
                .iter()
                .map(|g| (g.tet_a, g.face_a, g.tet_b, g.face_b, g.perm))
                .collect(),
            pieces: c.pieces.iter().map(|p| (p.tet, p.kind, p.multiplicity)).collect(),
        }
    }
}

impl TryFrom<ConfigFile> for SurfaceConfiguration {
    type Error = ConfigError;
    fn try_from(f: ConfigFile) -> Result<Self, Self::Error> {
        let config = SurfaceConfiguration {
            skeleton: TetGluing {
                tets: f.tets,
                gluings: f
                    .gluings
                    .into_iter()
                    .map(|(tet_a, face_a, tet_b, face_b, perm)| Gluing {
                        tet_a,
                        face_a,
                        tet_b,
                        face_b,
                        perm,
                    })
                    .collect(),
            },
            pieces: f
                .pieces
                .into_iter()
                .map(|(tet, kind, multiplicity)| PlacedPiece {
                    tet,
                    kind,
                    multiplicity,
                })
                .collect(),
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("tetrahedron {tet} out of range (have {tets})")]
    MissingTet { tet: usize, tets: usize },
    #[error("face {face} out of range 0..4")]
    MissingFace { face: usize },
    #[error("face {face} of tetrahedron {tet} is glued more than once")]
    FaceGluedTwice { tet: usize, face: usize },
    #[error("face {face} of tetrahedron {tet} is glued to itself")]
    FaceGluedToItself { tet: usize, face: usize },
    #[error("gluing permutation {0:?} is not a bijection of 0..3")]
    BadPermutation([usize; 3]),
    #[error("edge {edge} of tetrahedron {tet} is identified with itself in reverse")]
    EdgeSelfReversed { tet: usize, edge: usize },
    #[error("catalog has no entry for {0}")]
    MissingPiece(PieceKind),
    #[error("normal arcs do not match across {failures} glued face pair(s)")]
    Matching { failures: usize },
}

impl SurfaceConfiguration {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let tets = self.skeleton.tets;
        let check_tet = |tet: usize| {
            if tet < tets {
                Ok(())
            } else {
                Err(ConfigError::MissingTet { tet, tets })
            }
        };
        let mut used = BTreeMap::new();
        for g in &self.skeleton.gluings {
            check_tet(g.tet_a)?;
            check_tet(g.tet_b)?;
            for face in [g.face_a, g.face_b] {
                if face >= 4 {
                    return Err(ConfigError::MissingFace { face });
                }
            }
            let mut p = g.perm;
            p.sort_unstable();
            if p != [0, 1, 2] {
                return Err(ConfigError::BadPermutation(g.perm));
            }
            if (g.tet_a, g.face_a) == (g.tet_b, g.face_b) {
                return Err(ConfigError::FaceGluedToItself {
                    tet: g.tet_a,
                    face: g.face_a,
                });
            }
            for key in [(g.tet_a, g.face_a), (g.tet_b, g.face_b)] {
                if used.insert(key, ()).is_some() {
                    return Err(ConfigError::FaceGluedTwice {
                        tet: key.0,
                        face: key.1,
                    });
                }
            }
        }
        for p in &self.pieces {
            check_tet(p.tet)?;
        }
        Ok(())
    }
}

fn lookup(catalog: &[LocalPiece], kind: PieceKind) -> Result<&LocalPiece, ConfigError> {
    catalog
        .iter()
        .find(|p| p.kind == kind)
        .ok_or(ConfigError::MissingPiece(kind))
}

/// `arcs[tet][face][type]` summed over all pieces with multiplicity.
pub fn face_arc_counts(
    config: &SurfaceConfiguration,
    catalog: &[LocalPiece],
) -> Result<Vec<[[u64; 3]; 4]>, ConfigError> {
    config.validate()?;
    let mut out = vec![[[0u64; 3]; 4]; config.skeleton.tets];
    for p in &config.pieces {
        let arcs = lookup(catalog, p.kind)?.face_arcs.normal;
        for f in 0..4 {
            for k in 0..3 {
                out[p.tet][f][k] += u64::from(p.multiplicity) * u64::from(arcs[f][k]);
            }
        }
    }
    Ok(out)
}

/// Edge weights per tetrahedron, in [`EDGES`] order.
pub fn edge_weights(config: &SurfaceConfiguration, catalog: &[LocalPiece]) -> Result<Vec<[u64; 6]>, ConfigError> {
    config.validate()?;
    let mut out = vec![[0u64; 6]; config.skeleton.tets];
    for p in &config.pieces {
        let w = lookup(catalog, p.kind)?.edge_weights;
        for e in 0..6 {
            out[p.tet][e] += u64::from(p.multiplicity) * u64::from(w[e]);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceResidual {
    pub gluing: usize,
    pub tet_a: usize,
    pub face_a: usize,
    pub tet_b: usize,
    pub face_b: usize,
    /// `arcs_a[k] - arcs_b[perm[k]]` for each arc type `k` of face A.
    pub residual: [i64; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub pass: bool,
    pub residuals: Vec<FaceResidual>,
}

impl MatchingReport {
    pub fn failures(&self) -> usize {
        self.residuals.iter().filter(|r| r.residual != [0; 3]).count()
    }
}

pub fn check_matching(config: &SurfaceConfiguration, catalog: &[LocalPiece]) -> Result<MatchingReport, ConfigError> {
    let arcs = face_arc_counts(config, catalog)?;
    let residuals: Vec<FaceResidual> = config
        .skeleton
        .gluings
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let a = arcs[g.tet_a][g.face_a];
            let b = arcs[g.tet_b][g.face_b];
            let residual = [0, 1, 2].map(|k| a[k] as i64 - b[g.perm[k]] as i64);
            FaceResidual {
                gluing: i,
                tet_a: g.tet_a,
                face_a: g.face_a,
                tet_b: g.tet_b,
                face_b: g.face_b,
                residual,
            }
        })
        .collect();
    let pass = residuals.iter().all(|r| r.residual == [0; 3]);
    Ok(MatchingReport { pass, residuals })
}

fn require_matching(config: &SurfaceConfiguration, catalog: &[LocalPiece]) -> Result<(), ConfigError> {
    let report = check_matching(config, catalog)?;
    if report.pass {
        Ok(())
    } else {
        Err(ConfigError::Matching {
            failures: report.failures(),
        })
    }
}

/// Classes of tetrahedron edges under the identifications induced by the
/// face gluings. Each class lists `(tet, edge)` members; a class may stop at
/// boundary faces.
pub fn edge_classes(skeleton: &TetGluing) -> Result<Vec<Vec<(usize, usize)>>, ConfigError> {
    let n = skeleton.tets * 6;
    // union-find with orientation parity relative to the root
    let mut parent: Vec<usize> = (0..n).collect();
    let mut flip: Vec<bool> = vec![false; n];
    fn find(parent: &mut [usize], flip: &mut [bool], i: usize) -> (usize, bool) {
        if parent[i] == i {
            return (i, false);
        }
        let (root, f) = find(parent, flip, parent[i]);
        flip[i] ^= f;
        parent[i] = root;
        (root, flip[i])
    }
    for g in &skeleton.gluings {
        let c = face_corners(g.face_a);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let (u, v) = (c[i], c[j]);
            let (mu, mv) = (g.map_vertex(u), g.map_vertex(v));
            let a = g.tet_a * 6 + edge_index(u, v);
            let b = g.tet_b * 6 + edge_index(mu, mv);
            let reversed = mu > mv;
            let (ra, fa) = find(&mut parent, &mut flip, a);
            let (rb, fb) = find(&mut parent, &mut flip, b);
            if ra == rb {
                if fa ^ fb != reversed {
                    return Err(ConfigError::EdgeSelfReversed {
                        tet: g.tet_a,
                        edge: edge_index(u, v),
                    });
                }
            } else {
                parent[ra] = rb;
                flip[ra] = fa ^ fb ^ reversed;
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..n {
        let (root, _) = find(&mut parent, &mut flip, i);
        classes.entry(root).or_default().push((i / 6, i % 6));
    }
    Ok(classes.into_values().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellCounts {
    /// Points of the surface on the 1-skeleton.
    pub vertices: u64,
    /// Normal arcs on the 2-skeleton.
    pub edges: u64,
    /// Sum of the pieces' Euler characteristics; the piece count when every
    /// piece is a disk.
    pub pieces_chi: i64,
}

impl CellCounts {
    pub fn euler(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.pieces_chi
    }
}

/// `V − E + Σ χ(piece)` after identifying glued faces and edges.
pub fn cell_counts(config: &SurfaceConfiguration, catalog: &[LocalPiece]) -> Result<CellCounts, ConfigError> {
    require_matching(config, catalog)?;
    let weights = edge_weights(config, catalog)?;
    let vertices = edge_classes(&config.skeleton)?
        .iter()
        .map(|class| class.iter().map(|&(t, e)| weights[t][e]).max().unwrap_or(0))
        .sum();
    let arcs = face_arc_counts(config, catalog)?;
    let total_arcs: u64 = arcs.iter().flatten().flatten().sum();
    let glued_arcs: u64 = config
        .skeleton
        .gluings
        .iter()
        .map(|g| arcs[g.tet_a][g.face_a].iter().sum::<u64>())
        .sum();
    let mut pieces_chi = 0;
    for p in &config.pieces {
        pieces_chi += i64::from(p.multiplicity) * lookup(catalog, p.kind)?.euler;
    }
    Ok(CellCounts {
        vertices,
        edges: total_arcs - glued_arcs,
        pieces_chi,
    })
}

pub fn euler_characteristic(config: &SurfaceConfiguration, catalog: &[LocalPiece]) -> Result<i64, ConfigError> {
    Ok(cell_counts(config, catalog)?.euler())
}

/// Iterated join of the pieces' model complexes, one namespaced copy per
/// unit of multiplicity. Empty models drop out as join identities.
pub fn global_complex(config: &SurfaceConfiguration, catalog: &[LocalPiece]) -> Result<SimplicialComplex, ConfigError> {
    require_matching(config, catalog)?;
    let mut acc = SimplicialComplex::empty("global");
    for (i, p) in config.pieces.iter().enumerate() {
        let model = &lookup(catalog, p.kind)?.model_complex;
        if model.is_empty() {
            continue;
        }
        for copy in 0..p.multiplicity {
            let local = model.namespaced(&format!("t{}.{}.{i}.{copy}:", p.tet, p.kind));
            acc = join(&acc, &local).expect("namespaces are disjoint");
        }
    }
    Ok(acc.with_name("global"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalIndexEntry {
    pub tet: usize,
    pub kind: PieceKind,
    pub multiplicity: u32,
    pub index: HomologyIndex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexSumReport {
    pub local: Vec<LocalIndexEntry>,
    /// Index of the global join, from its homology.
    pub direct: HomologyIndex,
    /// Index predicted from the local declared indices.
    pub summed: HomologyIndex,
    pub pass: bool,
}

impl IndexSumReport {
    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .local
            .iter()
            .map(|e| format!("  tet {} {} x{}: {}", e.tet, e.kind, e.multiplicity, e.index))
            .collect();
        out.push(format!("global join index: {}", self.direct));
        out.push(format!("sum of local indices: {}", self.summed));
        out.push(if self.pass {
            "PASS".to_owned()
        } else {
            "FAIL".to_owned()
        });
        out
    }
}

/// Computes the global index two ways: from the homology of the joined
/// complex and from the local declared indices.
pub fn verify_index_sum(config: &SurfaceConfiguration, catalog: &[LocalPiece]) -> Result<IndexSumReport, ConfigError> {
    let global = global_complex(config, catalog)?;
    let direct = homology_index(&global);
    let mut local = Vec::new();
    let mut expanded = Vec::new();
    for p in &config.pieces {
        let index = lookup(catalog, p.kind)?.declared_index;
        local.push(LocalIndexEntry {
            tet: p.tet,
            kind: p.kind,
            multiplicity: p.multiplicity,
            index,
        });
        expanded.extend(std::iter::repeat_n(index, p.multiplicity as usize));
    }
    let summed = index_sum_law(&expanded);
    Ok(IndexSumReport {
        local,
        direct,
        summed,
        pass: direct == summed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn cfg(
        tets: usize,
        gluings: &[(usize, usize, usize, usize, [usize; 3])],
        pieces: &[(usize, &str, u32)],
    ) -> SurfaceConfiguration {
        SurfaceConfiguration::try_from(ConfigFile {
            tets,
            gluings: gluings.to_vec(),
            pieces: pieces.iter().map(|&(t, k, m)| (t, k.parse().unwrap(), m)).collect(),
        })
        .unwrap()
    }

    /// Two tetrahedra with face f of one glued to face f of the other by the
    /// identity on vertex labels: a closed triangulation of S³.
    fn doubled(pieces: &[(usize, &str, u32)]) -> SurfaceConfiguration {
        let gl: Vec<_> = (0..4).map(|f| (0, f, 1, f, [0, 1, 2])).collect();
        cfg(2, &gl, pieces)
    }

    #[test]
    fn single_triangle() {
        let c = cfg(1, &[], &[(0, "TRI_0", 1)]);
        assert!(check_matching(&c, catalog()).unwrap().pass);
        let cc = cell_counts(&c, catalog()).unwrap();
        assert_eq!((cc.vertices, cc.edges, cc.pieces_chi), (3, 3, 1));
        assert_eq!(cc.euler(), 1);
    }

    #[test]
    fn single_octagon_is_a_disk() {
        let c = cfg(1, &[], &[(0, "OCT_2", 1)]);
        assert_eq!(euler_characteristic(&c, catalog()).unwrap(), 1);
    }

    #[test]
    fn vertex_link_in_doubled_tetrahedron_is_a_sphere() {
        let c = doubled(&[(0, "TRI_2", 1), (1, "TRI_2", 1)]);
        assert!(check_matching(&c, catalog()).unwrap().pass);
        assert_eq!(euler_characteristic(&c, catalog()).unwrap(), 2);
    }

    #[test]
    fn mismatched_quads_fail_matching() {
        let c = cfg(2, &[(0, 3, 1, 3, [0, 1, 2])], &[(0, "QUAD_1", 1), (1, "QUAD_2", 1)]);
        let r = check_matching(&c, catalog()).unwrap();
        assert!(!r.pass);
        assert_ne!(r.residuals[0].residual, [0, 0, 0]);
        assert!(matches!(
            euler_characteristic(&c, catalog()),
            Err(ConfigError::Matching { failures: 1 })
        ));
    }

    #[test]
    fn structural_errors() {
        let bad = ConfigFile {
            tets: 1,
            gluings: vec![(0, 1, 3, 0, [0, 1, 2])],
            pieces: vec![],
        };
        assert_eq!(
            SurfaceConfiguration::try_from(bad).unwrap_err(),
            ConfigError::MissingTet { tet: 3, tets: 1 }
        );
        let bad = ConfigFile {
            tets: 1,
            gluings: vec![(0, 1, 0, 1, [0, 1, 2])],
            pieces: vec![],
        };
        assert!(matches!(
            SurfaceConfiguration::try_from(bad),
            Err(ConfigError::FaceGluedToItself { .. })
        ));
        let bad = ConfigFile {
            tets: 2,
            gluings: vec![(0, 1, 1, 1, [0, 0, 2])],
            pieces: vec![],
        };
        assert!(matches!(
            SurfaceConfiguration::try_from(bad),
            Err(ConfigError::BadPermutation(_))
        ));
        let bad = ConfigFile {
            tets: 2,
            gluings: vec![(0, 1, 1, 1, [0, 1, 2]), (0, 1, 1, 2, [0, 1, 2])],
            pieces: vec![],
        };
        assert!(matches!(
            SurfaceConfiguration::try_from(bad),
            Err(ConfigError::FaceGluedTwice { .. })
        ));
        let bad = ConfigFile {
            tets: 1,
            gluings: vec![(0, 7, 0, 1, [0, 1, 2])],
            pieces: vec![],
        };
        assert!(matches!(
            SurfaceConfiguration::try_from(bad),
            Err(ConfigError::MissingFace { face: 7 })
        ));
    }

    #[test]
    fn global_complex_examples() {
        let normal = cfg(2, &[], &[(0, "TRI_0", 2), (1, "QUAD_3", 1)]);
        let g = global_complex(&normal, catalog()).unwrap();
        assert!(g.is_empty());
        assert_eq!(homology_index(&g), HomologyIndex::Zero);

        let one = cfg(2, &[], &[(0, "TRI_0", 1), (1, "OCT_1", 1)]);
        assert_eq!(
            homology_index(&global_complex(&one, catalog()).unwrap()),
            HomologyIndex::Index(1)
        );

        let two = cfg(2, &[], &[(0, "OCT_1", 1), (1, "OCT_3", 1)]);
        let g = global_complex(&two, catalog()).unwrap();
        assert_eq!(g.f_vector(), vec![4, 4]);
        assert_eq!(homology_index(&g), HomologyIndex::Index(2));
    }

    #[test]
    fn index_sum_examples() {
        let c = cfg(3, &[], &[(0, "TRI_1", 1), (1, "QUAD_2", 1), (2, "OCT_1", 1)]);
        let r = verify_index_sum(&c, catalog()).unwrap();
        assert_eq!(
            (r.direct, r.summed, r.pass),
            (HomologyIndex::Index(1), HomologyIndex::Index(1), true)
        );

        let c = cfg(2, &[], &[(0, "OCT_1", 1), (1, "TUBE", 1)]);
        let r = verify_index_sum(&c, catalog()).unwrap();
        assert_eq!(
            (r.direct, r.summed, r.pass),
            (HomologyIndex::Index(2), HomologyIndex::Index(2), true)
        );

        let c = cfg(1, &[], &[(0, "HELICAL_12GON", 1)]);
        let r = verify_index_sum(&c, catalog()).unwrap();
        assert_eq!(
            (r.direct, r.summed, r.pass),
            (HomologyIndex::Index(2), HomologyIndex::Index(2), true)
        );
    }

    #[test]
    fn edge_classes_of_doubled_tetrahedron() {
        let c = doubled(&[]);
        let classes = edge_classes(&c.skeleton).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|cl| cl.len() == 2));
    }

    #[test]
    fn reversed_self_identification_is_rejected() {
        // face 3 (vertices 0,1,2) glued to face 2 (vertices 0,1,3) of the same
        // tetrahedron with 0->1, 1->0: edge 01 maps to itself reversed
        let c = cfg(1, &[(0, 3, 0, 2, [1, 0, 2])], &[]);
        assert!(matches!(
            edge_classes(&c.skeleton),
            Err(ConfigError::EdgeSelfReversed { .. })
        ));
    }

    #[test]
    fn config_json_round_trip() {
        let text = r#"{"tets":2,"gluings":[[0,3,1,3,[0,1,2]]],"pieces":[[0,"TRI_0",1],[1,"TRI_0",1]]}"#;
        let c: SurfaceConfiguration = serde_json::from_str(text).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), text);
    }
}
