//! Finite abstract simplicial complexes stored by their maximal faces.
//!
//! Every disk complex, every auxiliary complex of the dichotomy search and the
//! global join of local disk complexes is a [`SimplicialComplex`]. Vertices are
//! opaque ordered tokens ([`Vertex`]); a complex only ever records its facets
//! and enumerates lower faces on demand.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face {} repeats a vertex", show_face(.0))]
    RepeatedVertex(Vec<Vertex>),
    #[error("empty face is not a simplex")]
    EmptyFace,
    #[error("vertex {0} occurs in both operands of the join")]
    VertexCollision(Vertex),
    #[error("simplex {simplex} is not a face of {complex}")]
    NotAFace { simplex: Simplex, complex: String },
    #[error("{sub} is not a subcomplex of {sup}")]
    NotASubcomplex { sub: String, sup: String },
}

fn show_face(vs: &[Vertex]) -> String {
    let parts: Vec<String> = vs.iter().map(Vertex::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// An opaque, totally ordered vertex label. Integers sort before names.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Vertex {
    Int(i64),
    Name(String),
}

impl From<i64> for Vertex {
    fn from(v: i64) -> Self {
        Vertex::Int(v)
    }
}

impl From<&str> for Vertex {
    fn from(v: &str) -> Self {
        Vertex::Name(v.to_owned())
    }
}

impl From<String> for Vertex {
    fn from(v: String) -> Self {
        Vertex::Name(v)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Int(v) => write!(f, "{v}"),
            Vertex::Name(v) => f.write_str(v),
        }
    }
}

/// A nonempty, strictly sorted vertex set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new<I, V>(vertices: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vertex>,
    {
        let mut vs: Vec<Vertex> = vertices.into_iter().map(Into::into).collect();
        if vs.is_empty() {
            return Err(ComplexError::EmptyFace);
        }
        let original = vs.clone();
        vs.sort();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::RepeatedVertex(original));
        }
        Ok(Simplex(vs))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains_vertex(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    /// Codimension-one faces, in the order obtained by deleting vertex `i` for
    /// `i = 0, 1, ...`. A vertex has none.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |i| {
            let mut vs = self.0.clone();
            vs.remove(i);
            Simplex(vs)
        })
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 64, "simplex too large to enumerate faces");
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i].clone())
                    .collect(),
            )
        })
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let set: BTreeSet<Vertex> = self.0.iter().chain(other.0.iter()).cloned().collect();
        Simplex(set.into_iter().collect())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs = Vec::<Vertex>::deserialize(d)?;
        Simplex::new(vs).map_err(serde::de::Error::custom)
    }
}

fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    'outer: for v in small {
        for w in it.by_ref() {
            match w.cmp(v) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// On-disk form of a complex: `{"name": ..., "facets": [[v, ...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(default)]
    pub name: String,
    pub facets: Vec<Vec<Vertex>>,
}

/// A finite abstract simplicial complex, stored as an antichain of facets.
///
/// Facets are kept sorted, so two complexes with the same simplices compare
/// equal regardless of how they were built. The name is a label only and
/// takes no part in equality.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(into = "ComplexFile", try_from = "ComplexFile")]
pub struct SimplicialComplex {
    name: String,
    facets: Vec<Simplex>,
    faces: OnceLock<Vec<Vec<Simplex>>>,
}

impl From<SimplicialComplex> for ComplexFile {
    fn from(k: SimplicialComplex) -> Self {
        ComplexFile {
            name: k.name,
            facets: k.facets.into_iter().map(|f| f.0).collect(),
        }
    }
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = ComplexError;
    fn try_from(f: ComplexFile) -> Result<Self, Self::Error> {
        SimplicialComplex::from_facets(f.name, f.facets)
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from arbitrary candidate faces, dropping duplicates
    /// and faces dominated by larger ones.
    pub fn from_facets<I, F, V>(name: impl Into<String>, faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = V>,
        V: Into<Vertex>,
    {
        let simplices = faces.into_iter().map(Simplex::new).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_simplices(name, simplices))
    }

    pub fn from_simplices(name: impl Into<String>, simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut candidates: Vec<Simplex> = simplices.into_iter().collect();
        candidates.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.cmp(b)));
        candidates.dedup();
        let mut facets: Vec<Simplex> = Vec::with_capacity(candidates.len());
        for c in candidates {
            if !facets.iter().any(|f| c.is_face_of(f)) {
                facets.push(c);
            }
        }
        facets.sort();
        SimplicialComplex {
            name: name.into(),
            facets,
            faces: OnceLock::new(),
        }
    }

    pub fn empty(name: impl Into<String>) -> Self {
        Self::from_simplices(name, [])
    }

    pub fn point(v: impl Into<Vertex>) -> Self {
        let v = v.into();
        Self::from_simplices(format!("pt({v})"), [Simplex(vec![v])])
    }

    /// The full simplex on the given vertices.
    pub fn simplex(name: impl Into<String>, s: Simplex) -> Self {
        Self::from_simplices(name, [s])
    }

    /// Boundary of the standard `(k+1)`-simplex on vertices `0..=k+1`, a
    /// combinatorial `k`-sphere.
    pub fn sphere(k: usize) -> Self {
        let full: Vec<i64> = (0..=(k as i64 + 1)).collect();
        let facets = (0..full.len()).map(|skip| {
            full.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect::<Vec<_>>()
        });
        Self::from_facets(format!("S{k}"), facets).expect("distinct vertices")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(Simplex::dim).max()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.facets.iter().flat_map(|f| f.0.iter().cloned()).collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// Faces grouped by dimension, each group sorted. Computed once per value.
    pub fn faces_by_dim(&self) -> &[Vec<Simplex>] {
        self.faces.get_or_init(|| {
            let Some(dim) = self.dim() else {
                return Vec::new();
            };
            let mut sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); dim + 1];
            for f in &self.facets {
                for face in f.faces() {
                    let d = face.dim();
                    sets[d].insert(face);
                }
            }
            sets.into_iter().map(|s| s.into_iter().collect()).collect()
        })
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// Alternating face count; zero for the empty complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn edge_set(&self) -> HashSet<(Vertex, Vertex)> {
        let mut edges = HashSet::new();
        for f in &self.facets {
            for (i, a) in f.0.iter().enumerate() {
                for b in &f.0[i + 1..] {
                    edges.insert((a.clone(), b.clone()));
                }
            }
        }
        edges
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    /// True when every simplex of `other` spanned by vertices of `self` is
    /// already in `self`.
    pub fn is_full_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.is_subcomplex_of(other) && other.induced(&self.vertices()) == *self
    }

    /// Subcomplex of all simplices whose vertices lie in `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> SimplicialComplex {
        let pieces = self.facets.iter().filter_map(|f| {
            let vs: Vec<Vertex> = f.0.iter().filter(|v| keep.contains(v)).cloned().collect();
            (!vs.is_empty()).then_some(Simplex(vs))
        });
        SimplicialComplex::from_simplices(format!("{}|induced", self.name), pieces)
    }

    pub fn relabel(&self, mut map: impl FnMut(&Vertex) -> Vertex) -> SimplicialComplex {
        let facets = self.facets.iter().map(|f| {
            let vs: BTreeSet<Vertex> = f.0.iter().map(&mut map).collect();
            assert_eq!(vs.len(), f.0.len(), "relabeling must be injective");
            Simplex(vs.into_iter().collect())
        });
        SimplicialComplex::from_simplices(self.name.clone(), facets)
    }

    /// Prefixes every vertex label with `prefix`.
    pub fn namespaced(&self, prefix: &str) -> SimplicialComplex {
        self.relabel(|v| Vertex::Name(format!("{prefix}{v}")))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {{", self.name)?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Join of complexes on disjoint vertex sets. Joining with the empty complex
/// returns the other operand.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
    let va = a.vertices();
    if let Some(v) = b.vertices().into_iter().find(|v| va.contains(v)) {
        return Err(ComplexError::VertexCollision(v));
    }
    if a.is_empty() {
        return Ok(b.clone());
    }
    if b.is_empty() {
        return Ok(a.clone());
    }
    let facets = a
        .facets
        .iter()
        .flat_map(|fa| b.facets.iter().map(move |fb| fa.union(fb)));
    Ok(SimplicialComplex::from_simplices(
        format!("({} * {})", a.name, b.name),
        facets,
    ))
}

/// Join that relabels both operands with `L.`/`R.` prefixes when their
/// vertex sets collide. The relabeling is recorded in the name.
pub fn join_disjoint(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    match join(a, b) {
        Ok(j) => j,
        Err(_) => {
            let j = join(&a.namespaced("L."), &b.namespaced("R.")).expect("prefixes are disjoint");
            let name = format!("{}[relabeled L./R.]", j.name);
            j.with_name(name)
        }
    }
}

pub fn cone(k: &SimplicialComplex, apex: impl Into<Vertex>) -> Result<SimplicialComplex, ComplexError> {
    let apex = apex.into();
    let name = format!("cone({}, {apex})", k.name);
    Ok(join(k, &SimplicialComplex::point(apex))?.with_name(name))
}

fn require_face(k: &SimplicialComplex, s: &Simplex) -> Result<(), ComplexError> {
    if k.contains(s) {
        Ok(())
    } else {
        Err(ComplexError::NotAFace {
            simplex: s.clone(),
            complex: k.name.clone(),
        })
    }
}

/// `{t : t ∩ s = ∅, t ∪ s ∈ K}`.
pub fn link(k: &SimplicialComplex, s: &Simplex) -> Result<SimplicialComplex, ComplexError> {
    require_face(k, s)?;
    let facets = k.facets.iter().filter(|f| s.is_face_of(f)).filter_map(|f| {
        let rest: Vec<Vertex> = f.0.iter().filter(|v| !s.contains_vertex(v)).cloned().collect();
        (!rest.is_empty()).then_some(Simplex(rest))
    });
    Ok(SimplicialComplex::from_simplices(
        format!("lk({}, {s})", k.name),
        facets,
    ))
}

/// Closed star: every facet containing `s`, with all of its faces.
pub fn star(k: &SimplicialComplex, s: &Simplex) -> Result<SimplicialComplex, ComplexError> {
    require_face(k, s)?;
    let facets = k.facets.iter().filter(|f| s.is_face_of(f)).cloned();
    Ok(SimplicialComplex::from_simplices(
        format!("st({}, {s})", k.name),
        facets,
    ))
}

/// First barycentric subdivision. Each new vertex is named after the simplex
/// it subdivides, e.g. `[1,2]`.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> SimplicialComplex {
    let mut chains = Vec::new();
    for f in &k.facets {
        let n = f.0.len();
        // every ordering of the facet's vertices gives one maximal flag
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let mut flag = Vec::with_capacity(n);
            let mut acc: Vec<Vertex> = Vec::with_capacity(n);
            for &i in &perm {
                acc.push(f.0[i].clone());
                let mut sorted = acc.clone();
                sorted.sort();
                flag.push(Vertex::Name(Simplex(sorted).to_string()));
            }
            flag.sort();
            chains.push(Simplex(flag));
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    SimplicialComplex::from_simplices(format!("sd({})", k.name), chains)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// The subcomplex of `x` spanned by the vertices adjacent in `y` to every
/// vertex of `tau` outside `x`. When `tau` lies in `x` this is all of `x`.
pub fn adjacency_subcomplex(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    tau: &Simplex,
) -> Result<SimplicialComplex, ComplexError> {
    if !x.is_subcomplex_of(y) {
        return Err(ComplexError::NotASubcomplex {
            sub: x.name.clone(),
            sup: y.name.clone(),
        });
    }
    require_face(y, tau)?;
    let xv = x.vertices();
    let outside: Vec<&Vertex> = tau.0.iter().filter(|v| !xv.contains(v)).collect();
    let edges = y.edge_set();
    let adjacent = |a: &Vertex, b: &Vertex| {
        let key = if a < b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        edges.contains(&key)
    };
    let keep: BTreeSet<Vertex> = xv
        .iter()
        .filter(|v| outside.iter().all(|o| adjacent(v, o)))
        .cloned()
        .collect();
    Ok(x.induced(&keep).with_name(format!("V({tau})")))
}

/// Connected components of the 1-skeleton, as vertex sets.
pub fn components(k: &SimplicialComplex) -> Vec<BTreeSet<Vertex>> {
    let verts: Vec<Vertex> = k.vertices().into_iter().collect();
    let index: BTreeMap<&Vertex, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for f in &k.facets {
        let first = index[&f.0[0]];
        for v in &f.0[1..] {
            let (a, b) = (find(&mut parent, first), find(&mut parent, index[v]));
            parent[a] = b;
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<Vertex>> = BTreeMap::new();
    for (i, v) in verts.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().insert(v.clone());
    }
    let mut out: Vec<_> = groups.into_values().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(faces: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_facets("t", faces.iter().map(|f| f.to_vec())).unwrap()
    }

    fn s(vs: &[i64]) -> Simplex {
        Simplex::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn from_facets_dedups_and_drops_dominated() {
        let k = cx(&[&[1, 2], &[2, 1], &[1]]);
        assert_eq!(k.facets(), &[s(&[1, 2])]);
        assert!(cx(&[]).is_empty());
        let k = cx(&[&[1, 2, 3], &[3, 4]]);
        assert_eq!(k.facets(), &[s(&[1, 2, 3]), s(&[3, 4])]);
    }

    #[test]
    fn repeated_vertex_is_rejected() {
        let err = SimplicialComplex::from_facets("bad", vec![vec![1, 1]]).unwrap_err();
        assert_eq!(err, ComplexError::RepeatedVertex(vec![Vertex::Int(1), Vertex::Int(1)]));
    }

    #[test]
    fn empty_differs_from_point() {
        assert_ne!(SimplicialComplex::empty("e"), SimplicialComplex::point(0));
        assert_eq!(SimplicialComplex::empty("e").dim(), None);
    }

    #[test]
    fn join_of_two_zero_spheres_is_a_square() {
        let a = cx(&[&[1], &[2]]);
        let b = cx(&[&[3], &[4]]);
        let j = join(&a, &b).unwrap();
        assert_eq!(j, cx(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
    }

    #[test]
    fn join_with_empty_is_identity() {
        let a = cx(&[&[1, 2], &[2, 3]]);
        let e = SimplicialComplex::empty("e");
        assert_eq!(join(&a, &e).unwrap(), a);
        assert_eq!(join(&e, &a).unwrap(), a);
    }

    #[test]
    fn join_collision_is_named() {
        let a = cx(&[&[1, 2]]);
        let b = cx(&[&[2, 3]]);
        assert_eq!(join(&a, &b).unwrap_err(), ComplexError::VertexCollision(Vertex::Int(2)));
        let j = join_disjoint(&a, &b);
        assert_eq!(j.facets().len(), 1);
        assert_eq!(j.vertices().len(), 4);
        assert!(j.name().contains("relabeled"));
    }

    #[test]
    fn point_join_is_cone() {
        let a = cx(&[&[1], &[2]]);
        assert_eq!(join(&SimplicialComplex::point(9), &a).unwrap(), cone(&a, 9).unwrap());
    }

    #[test]
    fn cones() {
        assert_eq!(
            cone(&SimplicialComplex::empty("e"), 0).unwrap(),
            SimplicialComplex::point(0)
        );
        assert_eq!(cone(&cx(&[&[1], &[2]]), 0).unwrap(), cx(&[&[0, 1], &[0, 2]]));
        assert_eq!(cone(&SimplicialComplex::sphere(1), 9).unwrap().facets().len(), 3);
        assert!(matches!(cone(&cx(&[&[1]]), 1), Err(ComplexError::VertexCollision(_))));
    }

    #[test]
    fn link_and_star() {
        let tri = cx(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(link(&tri, &s(&[1])).unwrap(), cx(&[&[2], &[3]]));
        assert_eq!(star(&tri, &s(&[1])).unwrap(), cx(&[&[1, 2], &[1, 3]]));
        let square = cx(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert!(link(&square, &s(&[1, 3])).unwrap().is_empty());
        assert!(matches!(link(&square, &s(&[1, 2])), Err(ComplexError::NotAFace { .. })));
    }

    #[test]
    fn closed_star_is_simplex_joined_with_link() {
        let k = SimplicialComplex::sphere(2);
        for sigma in k.faces_by_dim().concat() {
            let st = star(&k, &sigma).unwrap();
            let lk = link(&k, &sigma).unwrap();
            let rebuilt = join(&SimplicialComplex::simplex("s", sigma.clone()), &lk).unwrap();
            assert_eq!(st, rebuilt, "at {sigma}");
        }
    }

    #[test]
    fn subdivision_counts() {
        let tri = cx(&[&[1, 2, 3]]);
        let sd = barycentric_subdivision(&tri);
        assert_eq!(sd.f_vector(), vec![7, 12, 6]);
        assert_eq!(
            barycentric_subdivision(&SimplicialComplex::point(5)).f_vector(),
            vec![1]
        );
        let circle = barycentric_subdivision(&cx(&[&[1, 2], &[1, 3], &[2, 3]]));
        assert_eq!(circle.f_vector(), vec![6, 6]);
        assert!(circle.facets().iter().all(|f| f.dim() == 1));
    }

    #[test]
    fn adjacency_examples() {
        let x = cx(&[&[1], &[2]]);
        let y = cx(&[&[1, 3], &[2, 3]]);
        assert_eq!(adjacency_subcomplex(&x, &y, &s(&[3])).unwrap(), x);
        assert_eq!(adjacency_subcomplex(&x, &y, &s(&[1])).unwrap(), x);
        let y2 = cx(&[&[1, 3], &[2]]);
        assert_eq!(adjacency_subcomplex(&x, &y2, &s(&[3])).unwrap(), cx(&[&[1]]));
        let not_sub = cx(&[&[7]]);
        assert!(matches!(
            adjacency_subcomplex(&not_sub, &y, &s(&[3])),
            Err(ComplexError::NotASubcomplex { .. })
        ));
        assert!(matches!(
            adjacency_subcomplex(&x, &y, &s(&[1, 2])),
            Err(ComplexError::NotAFace { .. })
        ));
    }

    #[test]
    fn full_subcomplex_detection() {
        let y = cx(&[&[1, 2], &[2, 3]]);
        assert!(cx(&[&[1, 2]]).is_full_subcomplex_of(&y));
        assert!(!cx(&[&[1], &[2]]).is_full_subcomplex_of(&y));
    }

    #[test]
    fn components_of_disjoint_pieces() {
        let k = cx(&[&[1, 2], &[3], &[4, 5], &[5, 6]]);
        assert_eq!(components(&k).len(), 3);
    }

    #[test]
    fn string_and_int_vertices_mix() {
        let k = SimplicialComplex::from_facets("m", vec![vec![Vertex::from("a"), Vertex::from(1)]]).unwrap();
        assert_eq!(k.facets()[0].vertices()[0], Vertex::Int(1));
    }
}
