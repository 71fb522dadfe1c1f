//! Cube lattices, the cube realization of a cone `σ * z`, and dual cell
//! decompositions of combinatorial balls.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::simplicial::{Simplex, SimplicialComplex, Vertex};

/// Largest dimension accepted by [`cube_from_cone`].
pub const MAX_CONE_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("cone dimension {0} outside 1..={MAX_CONE_DIM}")]
    DimensionOutOfRange(usize),
    #[error("complex is empty")]
    Empty,
    #[error("not a ball: {0}")]
    NotABall(String),
}

/// A cell of a cube lattice: the box spanned from `base` by one unit step
/// along every axis flagged in `free`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CubeCell {
    pub base: Vec<u32>,
    pub free: Vec<bool>,
}

impl CubeCell {
    pub fn dim(&self) -> usize {
        self.free.iter().filter(|&&f| f).count()
    }

    /// Lattice corners of the cell.
    pub fn corners(&self) -> Vec<Vec<u32>> {
        let axes: Vec<usize> = (0..self.free.len()).filter(|&i| self.free[i]).collect();
        (0u32..(1 << axes.len()))
            .map(|mask| {
                let mut p = self.base.clone();
                for (bit, &ax) in axes.iter().enumerate() {
                    p[ax] += mask >> bit & 1;
                }
                p
            })
            .collect()
    }

    /// Codimension-one faces.
    pub fn facets(&self) -> Vec<CubeCell> {
        let mut out = Vec::new();
        for i in (0..self.free.len()).filter(|&i| self.free[i]) {
            for shift in 0..2 {
                let mut c = self.clone();
                c.free[i] = false;
                c.base[i] += shift;
                out.push(c);
            }
        }
        out
    }
}

/// The cubical subdivision of `[0,1]^n` into `segments[i]` slabs along axis
/// `i`, with every cell of every dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicalComplex {
    pub segments: Vec<u32>,
    pub cells: Vec<CubeCell>,
    #[serde(skip)]
    index: HashMap<CubeCell, usize>,
}

impl CubicalComplex {
    pub fn lattice(segments: Vec<u32>) -> Self {
        let n = segments.len();
        let mut cells = Vec::new();
        for mask in 0u32..(1 << n) {
            let free: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            // free axes range over slabs, fixed axes over lattice planes
            let ranges: Vec<u32> = (0..n)
                .map(|i| if free[i] { segments[i] } else { segments[i] + 1 })
                .collect();
            let total: u64 = ranges.iter().map(|&r| u64::from(r)).product();
            for mut code in 0..total {
                let mut base = vec![0; n];
                for i in 0..n {
                    base[i] = (code % u64::from(ranges[i])) as u32;
                    code /= u64::from(ranges[i]);
                }
                cells.push(CubeCell {
                    base,
                    free: free.clone(),
                });
            }
        }
        cells.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        let index = cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        CubicalComplex { segments, cells, index }
    }

    pub fn dim(&self) -> usize {
        self.segments.len()
    }

    pub fn cell_index(&self, c: &CubeCell) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut out = vec![0; self.dim() + 1];
        for c in &self.cells {
            out[c.dim()] += 1;
        }
        out
    }

    pub fn top_cells(&self) -> usize {
        self.counts_by_dim()[self.dim()]
    }

    pub fn vertex_count(&self) -> usize {
        self.counts_by_dim()[0]
    }

    /// Position of a lattice point in the unit cube: `x(i) / segments[i]`.
    pub fn coordinates(&self, point: &[u32]) -> Vec<Ratio<u32>> {
        point
            .iter()
            .zip(&self.segments)
            .map(|(&x, &m)| Ratio::new(x, m))
            .collect()
    }

    pub fn to_cell_complex(&self) -> CellComplex {
        let cells = self
            .cells
            .iter()
            .map(|c| Cell {
                dim: c.dim(),
                boundary: c.facets().iter().map(|f| self.index[f]).collect(),
                label: format!(
                    "{:?}/{:?}",
                    c.base,
                    c.free.iter().map(|&f| u8::from(f)).collect::<Vec<_>>()
                ),
            })
            .collect();
        CellComplex { cells }
    }
}

/// Cut the unit `n`-cube by `counts[i]` hyperplanes orthogonal to axis `i`.
pub fn subdivide_cube(counts: &[u32]) -> CubicalComplex {
    CubicalComplex::lattice(counts.iter().map(|&c| c + 1).collect())
}

/// The unit cube realizing the cone `σ * z` on an `(n-1)`-simplex
/// `σ = [v1..vn]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeCube {
    pub cube: CubicalComplex,
    /// Corner `p` carries the face of the cone whose barycenter sits there:
    /// the apex `z` at the origin, and `{v_i : p_i = 1}` elsewhere.
    pub corner_labels: BTreeMap<Vec<u32>, Simplex>,
}

pub fn apex() -> Vertex {
    Vertex::Name("z".to_owned())
}

pub fn cone_vertex(i: usize) -> Vertex {
    Vertex::Name(format!("v{i}"))
}

pub fn cube_from_cone(n: usize) -> Result<ConeCube, CellError> {
    if !(1..=MAX_CONE_DIM).contains(&n) {
        return Err(CellError::DimensionOutOfRange(n));
    }
    let cube = CubicalComplex::lattice(vec![1; n]);
    let corner_labels = cube
        .cells
        .iter()
        .filter(|c| c.dim() == 0)
        .map(|c| {
            let p = c.base.clone();
            let label = if p.iter().all(|&x| x == 0) {
                Simplex::new([apex()])
            } else {
                Simplex::new((0..n).filter(|&i| p[i] == 1).map(|i| cone_vertex(i + 1)))
            }
            .expect("distinct labels");
            (p, label)
        })
        .collect();
    Ok(ConeCube { cube, corner_labels })
}

/// A regular cell complex given by cell dimensions and codimension-one
/// incidences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub dim: usize,
    pub boundary: Vec<usize>,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CellComplex {
    pub cells: Vec<Cell>,
}

impl CellComplex {
    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.dim).max()
    }

    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut out = vec![0; self.dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            out[c.dim] += 1;
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.iter().map(|c| if c.dim % 2 == 0 { 1 } else { -1 }).sum()
    }

    pub fn cofaces(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cells.len()];
        for (i, c) in self.cells.iter().enumerate() {
            for &f in &c.boundary {
                out[f].push(i);
            }
        }
        out
    }

    /// All cells below `seeds` in the face order, seeds included.
    pub fn closure(&self, seeds: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<usize> = seeds.into_iter().collect();
        while let Some(c) = stack.pop() {
            if seen.insert(c) {
                stack.extend(self.cells[c].boundary.iter().copied());
            }
        }
        seen
    }
}

impl From<&SimplicialComplex> for CellComplex {
    fn from(k: &SimplicialComplex) -> Self {
        let all: Vec<&Simplex> = k.faces_by_dim().iter().flatten().collect();
        let index: HashMap<&Simplex, usize> = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let cells = all
            .iter()
            .map(|s| Cell {
                dim: s.dim(),
                boundary: s.boundary_faces().map(|f| index[&f]).collect(),
                label: s.to_string(),
            })
            .collect();
        CellComplex { cells }
    }
}

impl From<&CubicalComplex> for CellComplex {
    fn from(k: &CubicalComplex) -> Self {
        k.to_cell_complex()
    }
}

/// Dual cells of the interior of a ball. `primal[i]` is the primal cell that
/// dual cell `i` is dual to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualComplex {
    pub complex: CellComplex,
    pub primal: Vec<usize>,
    /// Primal cells lying in the boundary sphere; they have no dual.
    pub boundary_cells: usize,
}

/// Cells of the boundary sphere of a pure `n`-dimensional complex: the
/// closure of the `(n-1)`-cells with exactly one coface.
pub fn boundary_subcomplex(k: &CellComplex) -> BTreeSet<usize> {
    let Some(n) = k.dim() else {
        return BTreeSet::new();
    };
    if n == 0 {
        return BTreeSet::new();
    }
    let cof = k.cofaces();
    let free = (0..k.cells.len()).filter(|&i| k.cells[i].dim == n - 1 && cof[i].len() == 1);
    k.closure(free)
}

/// Validates that `k` looks like a combinatorial `n`-ball: pure, every
/// `(n-1)`-cell on at most two `n`-cells, `χ = 1` and a boundary with the
/// Euler characteristic of an `(n-1)`-sphere.
pub fn validate_ball(k: &CellComplex) -> Result<usize, CellError> {
    let n = k.dim().ok_or(CellError::Empty)?;
    let cof = k.cofaces();
    let tops: Vec<usize> = (0..k.cells.len()).filter(|&i| k.cells[i].dim == n).collect();
    if k.closure(tops).len() != k.cells.len() {
        return Err(CellError::NotABall("not pure".into()));
    }
    if (0..k.cells.len()).any(|i| k.cells[i].dim + 1 == n && cof[i].len() > 2) {
        return Err(CellError::NotABall(
            "a codimension-one cell has more than two cofaces".into(),
        ));
    }
    let chi = k.euler_characteristic();
    if chi != 1 {
        return Err(CellError::NotABall(format!("euler characteristic {chi}")));
    }
    let boundary = boundary_subcomplex(k);
    let chi_b: i64 = boundary
        .iter()
        .map(|&i| if k.cells[i].dim.is_multiple_of(2) { 1 } else { -1 })
        .sum();
    let expected = if n % 2 == 1 { 2 } else { 0 };
    if chi_b != expected {
        return Err(CellError::NotABall(format!(
            "boundary euler characteristic {chi_b}, sphere needs {expected}"
        )));
    }
    Ok(n)
}

/// One dual `(n-d)`-cell per interior primal `d`-cell, with incidence
/// reversed.
pub fn dual_cells(k: &CellComplex) -> Result<DualComplex, CellError> {
    let n = validate_ball(k)?;
    let boundary = boundary_subcomplex(k);
    let interior: Vec<usize> = (0..k.cells.len()).filter(|i| !boundary.contains(i)).collect();
    let dual_of: HashMap<usize, usize> = interior.iter().enumerate().map(|(d, &p)| (p, d)).collect();
    let cof = k.cofaces();
    let cells = interior
        .iter()
        .map(|&p| Cell {
            dim: n - k.cells[p].dim,
            boundary: cof[p].iter().filter_map(|q| dual_of.get(q).copied()).collect(),
            label: format!("*{}", k.cells[p].label),
        })
        .collect();
    Ok(DualComplex {
        complex: CellComplex { cells },
        primal: interior,
        boundary_cells: boundary.len(),
    })
}
