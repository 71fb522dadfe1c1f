//! Fixtures shared by the benchmarks.

use topmin_core::corpus::rp2;
use topmin_core::simplicial::{barycentric_subdivision, join_disjoint, SimplicialComplex};

pub fn rp2_join_rp2() -> SimplicialComplex {
    let p = rp2();
    join_disjoint(&p, &p)
}

/// First barycentric subdivision of the boundary of the `(k+1)`-simplex.
pub fn subdivided_sphere(k: usize) -> SimplicialComplex {
    barycentric_subdivision(&SimplicialComplex::sphere(k))
}
