//! Cross-checks of the exact homology and cell counting against
//! independent, deliberately naive computations.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use topmin_core::additivity::{edge_weights, euler_characteristic, SurfaceConfiguration};
use topmin_core::catalog::{catalog, face_corners, EDGES};
use topmin_core::corpus::{random_complex, random_configuration, rng, rp2};
use topmin_core::homology::{boundary_matrices, reduced_homology, AbelianGroup, HomologyIndex};
use topmin_core::milnor::verify_milnor;
use topmin_core::simplicial::{join_disjoint, Simplex, SimplicialComplex};

/// Rank of an integer matrix over the prime field `F_p`.
fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Signed incidence matrices built straight from the definition, with the
/// augmentation as degree 0.
fn naive_boundaries(k: &SimplicialComplex) -> Vec<Vec<Vec<i64>>> {
    let mut by_dim: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
    for f in k.facets() {
        for s in f.faces() {
            by_dim.entry(s.dim()).or_default().push(s);
        }
    }
    for v in by_dim.values_mut() {
        v.sort();
        v.dedup();
    }
    let mut out = Vec::new();
    let Some(&top) = by_dim.keys().last() else { return out };
    out.push(vec![vec![1; by_dim[&0].len()]]);
    for d in 1..=top {
        let rows = &by_dim[&(d - 1)];
        let cols = &by_dim[&d];
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, s) in cols.iter().enumerate() {
            for i in 0..=d {
                let face: Vec<_> = s
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|&(x, _)| x != i)
                    .map(|(_, v)| v.clone())
                    .collect();
                let r = rows.binary_search(&Simplex::new(face).unwrap()).unwrap();
                m[r][j] = if i % 2 == 0 { 1 } else { -1 };
            }
        }
        out.push(m);
    }
    out
}

/// `dim H̃_k(K; F_p)` for every `k`, from the naive matrices.
fn reduced_betti_mod(k: &SimplicialComplex, p: i64) -> Vec<usize> {
    let ds = naive_boundaries(k);
    let ranks: Vec<usize> = ds.iter().map(|m| rank_mod(m, p)).collect();
    (0..ds.len())
        .map(|d| {
            let chains = ds[d][0].len();
            chains - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0)
        })
        .collect()
}

/// Universal coefficients: `dim H̃_k(F_p) = rank H̃_k + #{p | d in H̃_k} + #{p | d in H̃_{k-1}}`.
fn check_against_fields(k: &SimplicialComplex) {
    let profile = reduced_homology(k);
    let divisible = |g: &AbelianGroup, p: i64| {
        g.torsion
            .iter()
            .filter(|d| (*d % BigUint::from(p as u64)).to_u64() == Some(0))
            .count()
    };
    // a large prime sees only the free part
    for p in [2, 3, 5, 1_000_003] {
        let field = reduced_betti_mod(k, p);
        for (d, &dim) in field.iter().enumerate() {
            let mut want = profile.group(d).rank + divisible(&profile.group(d), p);
            if d > 0 {
                want += divisible(&profile.group(d - 1), p);
            }
            assert_eq!(dim, want, "{} degree {d} mod {p}: {:?}", k.name(), profile.lines());
        }
    }
}

/// `n × n` grid on the torus (`twist` false) or Klein bottle (`twist` true).
fn grid_surface(n: i64, twist: bool) -> SimplicialComplex {
    let v = |i: i64, j: i64| {
        let (i, j) = if i == n && twist {
            (0, (n - j).rem_euclid(n))
        } else {
            (i % n, j % n)
        };
        i * n + j
    };
    let mut facets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            facets.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            facets.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    SimplicialComplex::from_facets(if twist { "K" } else { "T2" }, facets).unwrap()
}

#[test]
fn projective_plane() {
    let p = rp2();
    assert_eq!(reduced_homology(&p).lines(), vec!["H~0 = 0", "H~1 = Z/2"]);
    check_against_fields(&p);
}

#[test]
fn torus_and_klein_bottle() {
    let t = grid_surface(4, false);
    assert_eq!(reduced_homology(&t).group(1), AbelianGroup::free(2));
    assert_eq!(reduced_homology(&t).group(2), AbelianGroup::free(1));
    check_against_fields(&t);
    let k = grid_surface(4, true);
    assert_eq!(
        reduced_homology(&k).group(1),
        AbelianGroup::new(1, [BigUint::from(2u32)])
    );
    assert!(reduced_homology(&k).group(2).is_trivial());
    check_against_fields(&k);
}

#[test]
fn random_complexes_agree_with_field_ranks() {
    let mut r = rng(11);
    for _ in 0..60 {
        check_against_fields(&random_complex(&mut r, 8, 3, "K"));
    }
}

#[test]
fn joins_agree_with_field_ranks() {
    check_against_fields(&join_disjoint(&rp2(), &rp2()));
    let mut r = rng(12);
    for _ in 0..10 {
        let a = random_complex(&mut r, 5, 2, "A");
        let b = random_complex(&mut r, 5, 2, "B");
        check_against_fields(&join_disjoint(&a, &b));
    }
}

#[test]
fn boundary_of_boundary_vanishes() {
    let mut r = rng(13);
    for _ in 0..60 {
        let k = random_complex(&mut r, 8, 3, "K");
        let ds = boundary_matrices(&k);
        for w in ds.windows(2) {
            assert!(w[0].mul(&w[1]).is_zero(), "{:?}", k.facets());
        }
    }
}

#[test]
fn library_matrices_match_naive_ones() {
    let mut r = rng(14);
    for _ in 0..30 {
        let k = random_complex(&mut r, 7, 3, "K");
        let lib: Vec<Vec<Vec<i64>>> = boundary_matrices(&k)
            .iter()
            .map(|m| {
                m.to_dense()
                    .iter()
                    .map(|row| row.iter().map(|x| x.to_i64().unwrap()).collect())
                    .collect()
            })
            .collect();
        assert_eq!(lib, naive_boundaries(&k));
    }
}

#[test]
fn fixed_joins() {
    let s0 = SimplicialComplex::sphere(0);
    let p = rp2();
    let z2 = AbelianGroup::cyclic(2);

    let h = reduced_homology(&join_disjoint(&s0, &s0));
    assert_eq!(h.group(1), AbelianGroup::free(1));
    assert_eq!(h.index(), HomologyIndex::Index(2));

    let h = reduced_homology(&join_disjoint(&p, &s0));
    assert_eq!(h.group(2), z2);
    assert!((0..2).all(|k| h.group(k).is_trivial()));

    let h = reduced_homology(&join_disjoint(&p, &p));
    assert!((0..3).all(|k| h.group(k).is_trivial()));
    assert_eq!(h.group(3), z2);
    // Z/2 ⊗ Z/2 in degree 3 and Tor(Z/2, Z/2) in degree 4
    assert_eq!(h.group(4), z2);

    for (a, b) in [(&s0, &s0), (&p, &s0), (&p, &p)] {
        assert!(verify_milnor(a, b).pass);
    }
}

/// `V − E + Σ χ` with the surface points glued one at a time along the
/// edges, instead of through edge classes.
fn brute_force_euler(c: &SurfaceConfiguration) -> i64 {
    let cat = catalog();
    let weights = edge_weights(c, cat).unwrap();
    let mut id: BTreeMap<(usize, usize, u64), usize> = BTreeMap::new();
    for (t, row) in weights.iter().enumerate() {
        for (e, &w) in row.iter().enumerate() {
            for i in 0..w {
                let n = id.len();
                id.insert((t, e, i), n);
            }
        }
    }
    let mut parent: Vec<usize> = (0..id.len()).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let edge_of = |a: usize, b: usize| EDGES.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let mut arcs: u64 = 0;
    for t in 0..c.skeleton.tets {
        for p in c.pieces.iter().filter(|p| p.tet == t) {
            let piece = cat.iter().find(|x| x.kind == p.kind).unwrap();
            arcs += u64::from(p.multiplicity) * u64::from(piece.face_arcs.total_normal());
        }
    }
    for g in &c.skeleton.gluings {
        let ca = face_corners(g.face_a);
        let cb = face_corners(g.face_b);
        let image = |v: usize| cb[g.perm[ca.iter().position(|&x| x == v).unwrap()]];
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            let (u, v) = (ca[x], ca[y]);
            let (mu, mv) = (image(u), image(v));
            let ea = edge_of(u, v);
            let eb = edge_of(mu, mv);
            let w = weights[g.tet_a][ea];
            assert_eq!(w, weights[g.tet_b][eb]);
            for i in 0..w {
                // points are numbered from the lower vertex of each edge
                let j = if mu < mv { i } else { w - 1 - i };
                let a = root(&mut parent, id[&(g.tet_a, ea, i)]);
                let b = root(&mut parent, id[&(g.tet_b, eb, j)]);
                parent[a] = b;
            }
        }
    }
    let glued_arcs: u64 = c
        .skeleton
        .gluings
        .iter()
        .map(|g| {
            c.pieces
                .iter()
                .filter(|p| p.tet == g.tet_a)
                .map(|p| {
                    let piece = cat.iter().find(|x| x.kind == p.kind).unwrap();
                    u64::from(p.multiplicity)
                        * piece.face_arcs.normal[g.face_a]
                            .iter()
                            .map(|&a| u64::from(a))
                            .sum::<u64>()
                })
                .sum::<u64>()
        })
        .sum();
    let points = (0..id.len()).filter(|&x| root(&mut parent, x) == x).count() as i64;
    let chi: i64 = c
        .pieces
        .iter()
        .map(|p| i64::from(p.multiplicity) * cat.iter().find(|x| x.kind == p.kind).unwrap().euler)
        .sum();
    points - (arcs - glued_arcs) as i64 + chi
}

#[test]
fn euler_characteristic_matches_point_gluing() {
    let mut r = rng(15);
    for _ in 0..200 {
        let c = random_configuration(&mut r, catalog(), 5, 3);
        assert_eq!(
            euler_characteristic(&c, catalog()).unwrap(),
            brute_force_euler(&c),
            "{:?}",
            c
        );
    }
}
