//! The seeded property suite behind `topmin suite`.
//!
//! Each property draws its cases from its own stream derived from the run
//! seed, so the report is a pure function of the [`RunConfig`] and the
//! catalog.

use std::collections::BTreeSet;

use rand::Rng;
use serde::Serialize;

use crate::additivity::{check_matching, verify_index_sum, Gluing, PlacedPiece, SurfaceConfiguration, TetGluing};
use crate::catalog::{check_normal_arcs, validate_catalog, validate_piece, LocalPiece, PieceKind};
use crate::corpus::{random_complex, random_configuration, random_full_pair, random_move, random_surface, rp2, stream};
use crate::cubical::{apex, cone_vertex, cube_from_cone, dual_cells, subdivide_cube};
use crate::dichotomy::{check_dichotomy, DichotomyWitness, Verdict};
use crate::homology::{homology_index, HomologyIndex};
use crate::io::canonical_json;
use crate::milnor::verify_milnor;
use crate::simplicial::{barycentric_subdivision, cone, Simplex, SimplicialComplex};
use crate::width::{apply_surgery, verify_width_decrease, width};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Failure messages kept per property.
const KEEP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    /// Cases per randomized property; `None` uses each property's default.
    pub counts: Option<usize>,
    pub output: OutputMode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            counts: None,
            output: OutputMode::Text,
        }
    }
}

impl RunConfig {
    fn count(&self, default: usize) -> usize {
        self.counts.unwrap_or(default)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub passed: usize,
    /// The first few failures, in case order.
    pub failures: Vec<String>,
}

impl PropertyResult {
    fn new(name: &'static str) -> Self {
        PropertyResult {
            name,
            cases: 0,
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, why: impl FnOnce() -> String) {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < KEEP {
            self.failures.push(format!("case {}: {}", self.cases - 1, why()));
        }
    }

    pub fn pass(&self) -> bool {
        self.passed == self.cases
    }
}

/// A dichotomy case with no witness, kept whole for inspection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArchivedFailure {
    pub case: usize,
    pub x: SimplicialComplex,
    pub y: SimplicialComplex,
    pub witness: DichotomyWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub counts: Option<usize>,
    pub properties: Vec<PropertyResult>,
    pub archive: Vec<ArchivedFailure>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn exit_code(&self) -> u8 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn render(&self, mode: OutputMode) -> String {
        match mode {
            OutputMode::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            OutputMode::Text => {
                let mut out = format!(
                    "suite seed={} counts={}\n",
                    self.seed,
                    self.counts.map_or("default".to_owned(), |c| c.to_string())
                );
                for p in &self.properties {
                    let tag = if p.pass() { "PASS" } else { "FAIL" };
                    out.push_str(&format!("{tag} {} {}/{}\n", p.name, p.passed, p.cases));
                    for f in &p.failures {
                        out.push_str(&format!("    {f}\n"));
                    }
                }
                out.push_str(&format!("archived failure witnesses: {}\n", self.archive.len()));
                for a in &self.archive {
                    out.push_str(&format!("  case {}: X = {}, Y = {}\n", a.case, show(&a.x), show(&a.y)));
                    for l in a.witness.lines() {
                        out.push_str(&format!("    {l}\n"));
                    }
                }
                out.push_str(if self.pass { "result: PASS\n" } else { "result: FAIL\n" });
                out
            }
        }
    }
}

fn show(k: &SimplicialComplex) -> String {
    canonical_json(k).trim_end().to_owned()
}

pub fn run_suite(config: &RunConfig, catalog: &[LocalPiece]) -> SuiteReport {
    let mut archive = Vec::new();
    let properties = vec![
        sphere_ladder(),
        milnor(config),
        index_additivity(config, catalog),
        census(catalog),
        dichotomy(config, &mut archive),
        width_descent(config),
        width_walks(config),
        subdivision_euler(config),
        cone_cube(),
        cube_counts(),
        dual_counts(config),
        catalog_integrity(catalog),
    ];
    let pass = properties.iter().all(PropertyResult::pass) && archive.is_empty();
    SuiteReport {
        seed: config.seed,
        counts: config.counts,
        properties,
        archive,
        pass,
    }
}

fn sphere_ladder() -> PropertyResult {
    let mut r = PropertyResult::new("sphere_ladder");
    for k in 1..=4 {
        let got = homology_index(&SimplicialComplex::sphere(k));
        let want = HomologyIndex::Index(k as u32 + 1);
        r.record(got == want, || format!("S{k}: {got}, expected {want}"));
    }
    r
}

fn milnor(config: &RunConfig) -> PropertyResult {
    let mut r = PropertyResult::new("milnor");
    let s0 = SimplicialComplex::sphere(0);
    let p = rp2();
    for (a, b) in [(&s0, &s0), (&p, &s0), (&p, &p)] {
        let rep = verify_milnor(a, b);
        r.record(rep.pass, || rep.lines().join("; "));
    }
    let mut rng = stream(config.seed, "milnor");
    for _ in 0..config.count(50) {
        let a = random_complex(&mut rng, 7, 3, "A");
        let b = random_complex(&mut rng, 7, 3, "B");
        let rep = verify_milnor(&a, &b);
        r.record(rep.pass, || {
            format!("{} * {}: {}", show(&a), show(&b), rep.lines().join("; "))
        });
    }
    r
}

fn index_additivity(config: &RunConfig, catalog: &[LocalPiece]) -> PropertyResult {
    let mut r = PropertyResult::new("index_additivity");
    let mut rng = stream(config.seed, "additivity");
    for _ in 0..config.count(100) {
        let c = random_configuration(&mut rng, catalog, 5, 3);
        match verify_index_sum(&c, catalog) {
            Ok(rep) => r.record(rep.pass, || rep.lines().join("; ")),
            Err(e) => r.record(false, || e.to_string()),
        }
    }
    r
}

/// Low-index cases of the local census, each on two tetrahedra glued along
/// face 0, with the global index the census predicts.
pub fn census_cases() -> Vec<(&'static str, SurfaceConfiguration, HomologyIndex)> {
    use PieceKind::*;
    let build = |t0: &[(PieceKind, u32)], t1: &[(PieceKind, u32)]| {
        let place = |tet: usize, ps: &[(PieceKind, u32)]| {
            ps.iter()
                .map(|&(kind, multiplicity)| PlacedPiece {
                    tet,
                    kind,
                    multiplicity,
                })
                .collect::<Vec<_>>()
        };
        SurfaceConfiguration {
            skeleton: TetGluing {
                tets: 2,
                gluings: vec![Gluing {
                    tet_a: 0,
                    face_a: 0,
                    tet_b: 1,
                    face_b: 0,
                    perm: [0, 1, 2],
                }],
            },
            pieces: [place(0, t0), place(1, t1)].concat(),
        }
    };
    let zero = HomologyIndex::Zero;
    let one = HomologyIndex::Index(1);
    let two = HomologyIndex::Index(2);
    vec![
        ("all normal", build(&[(Tri0, 1), (Quad1, 1)], &[(Tri1, 1)]), zero),
        ("one octagon", build(&[(Oct1, 1)], &[(Tri2, 1), (Tri3, 1)]), one),
        ("one tube", build(&[(Tube, 1)], &[(Tri0, 1)]), one),
        ("two octagons", build(&[(Oct1, 1)], &[(Oct1, 1)]), two),
        (
            "octagon and tube",
            build(&[(Tube, 1), (Tri2, 1), (Tri3, 1)], &[(Oct1, 1)]),
            two,
        ),
        ("two tubes", build(&[(Tube, 1)], &[(Tube, 1)]), two),
        (
            "helical 12-gon",
            build(&[(Helical12Gon, 1)], &[(Tri2, 1), (Tri3, 2)]),
            two,
        ),
        ("triple tube", build(&[(TripleTube, 1)], &[(Tri0, 1)]), two),
        (
            "octagon tubed to a disk",
            build(&[(OctTubeDisk, 1)], &[(Tri2, 1), (Tri3, 1)]),
            two,
        ),
        (
            "octagon tubed to itself",
            build(&[(OctTubeSelf, 1)], &[(Tri2, 1), (Tri3, 1)]),
            two,
        ),
    ]
}

fn census(catalog: &[LocalPiece]) -> PropertyResult {
    let mut r = PropertyResult::new("census");
    for (label, c, want) in census_cases() {
        let outcome = check_matching(&c, catalog).and_then(|m| {
            if !m.pass {
                return Ok(Err(format!("{label}: matching fails")));
            }
            let rep = verify_index_sum(&c, catalog)?;
            Ok(if rep.pass && rep.direct == want {
                Ok(())
            } else {
                Err(format!(
                    "{label}: direct {}, summed {}, census {want}",
                    rep.direct, rep.summed
                ))
            })
        });
        match outcome {
            Ok(Ok(())) => r.record(true, String::new),
            Ok(Err(msg)) => r.record(false, || msg),
            Err(e) => r.record(false, || format!("{label}: {e}")),
        }
    }
    r
}

fn dichotomy(config: &RunConfig, archive: &mut Vec<ArchivedFailure>) -> PropertyResult {
    let mut r = PropertyResult::new("dichotomy");
    let mut rng = stream(config.seed, "dichotomy");
    for case in 0..config.count(100) {
        let (x, y) = random_full_pair(&mut rng, 8, 3);
        match check_dichotomy(&x, &y) {
            Ok(w) => {
                let ok = w.verdict != Verdict::Failure && w.monotonicity_violations == 0;
                r.record(ok, || format!("{} in {}: {:?}", show(&x), show(&y), w.verdict));
                if w.verdict == Verdict::Failure {
                    archive.push(ArchivedFailure { case, x, y, witness: w });
                }
            }
            Err(e) => r.record(false, || e.to_string()),
        }
    }
    r
}

fn width_descent(config: &RunConfig) -> PropertyResult {
    let mut r = PropertyResult::new("width_descent");
    let mut rng = stream(config.seed, "width");
    let target = config.count(1000);
    while r.cases < target {
        let s = random_surface(&mut rng, 6, 10, 20);
        let Some(mv) = random_move(&mut rng, &s) else { continue };
        match verify_width_decrease(&s, &mv) {
            Ok(v) => r.record(v.pass, || format!("{mv}: {} -> {}", v.before, v.after)),
            Err(e) => r.record(false, || e.to_string()),
        }
    }
    r
}

/// Longest walk tolerated before a walk counts as non-terminating.
const WALK_LIMIT: usize = 100_000;

fn width_walks(config: &RunConfig) -> PropertyResult {
    let mut r = PropertyResult::new("width_walks");
    let mut rng = stream(config.seed, "walks");
    for _ in 0..config.count(100) {
        let mut s = random_surface(&mut rng, 6, 10, 20);
        let mut steps = 0;
        let mut error = None;
        while let Some(mv) = random_move(&mut rng, &s) {
            match verify_width_decrease(&s, &mv) {
                Ok(v) if v.pass => {}
                Ok(v) => {
                    error = Some(format!("step {steps}: {mv} does not lower {}", v.before));
                    break;
                }
                Err(e) => {
                    error = Some(e.to_string());
                    break;
                }
            }
            s = apply_surgery(&s, &mv).expect("validated move");
            steps += 1;
            if steps > WALK_LIMIT {
                error = Some(format!(
                    "no terminal surface after {WALK_LIMIT} steps, width {}",
                    width(&s)
                ));
                break;
            }
        }
        r.record(error.is_none(), || error.unwrap_or_default());
    }
    r
}

fn subdivision_euler(config: &RunConfig) -> PropertyResult {
    let mut r = PropertyResult::new("subdivision_euler");
    let mut rng = stream(config.seed, "subdivision");
    for _ in 0..config.count(50) {
        let k = random_complex(&mut rng, 7, 3, "K");
        let sd = barycentric_subdivision(&k);
        let (a, b) = (k.euler_characteristic(), sd.euler_characteristic());
        r.record(a == b, || format!("{}: chi {a}, after subdivision {b}", show(&k)));
    }
    r
}

/// Corner labels of the cone cube are exactly the apex and the faces of the
/// base simplex, each once.
fn cone_cube() -> PropertyResult {
    let mut r = PropertyResult::new("cone_cube");
    for n in 1..=4 {
        let cube = match cube_from_cone(n) {
            Ok(c) => c,
            Err(e) => {
                r.record(false, || e.to_string());
                continue;
            }
        };
        let base = Simplex::new((1..=n).map(cone_vertex)).expect("distinct");
        let mut want: BTreeSet<Simplex> = base.faces().collect();
        want.insert(Simplex::new([apex()]).expect("vertex"));
        let got: BTreeSet<Simplex> = cube.corner_labels.values().cloned().collect();
        let injective = got.len() == cube.corner_labels.len();
        // the apex-to-corner map must also respect the cone: the corner of a
        // face sums the unit vectors of its vertices
        let placed = cube.corner_labels.iter().all(|(p, s)| {
            s.vertices() == [apex()] || (1..=n).all(|i| (p[i - 1] == 1) == s.contains_vertex(&cone_vertex(i)))
        });
        let sigma_z = cone(&SimplicialComplex::from_simplices("sigma", [base]), apex()).expect("fresh apex");
        let in_cone = got.iter().all(|s| sigma_z.contains(s));
        r.record(injective && got == want && placed && in_cone, || {
            format!("n = {n}: {} labels for {} expected faces", got.len(), want.len())
        });
    }
    r
}

/// Number of `d`-cells in the lattice with `counts[i]` cuts on axis `i`,
/// restricted to cells off the boundary when `interior` is set.
pub fn closed_form_cells(counts: &[u32], d: usize, interior: bool) -> u64 {
    let n = counts.len();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == d)
        .map(|m| {
            (0..n)
                .map(|i| {
                    let c = u64::from(counts[i]);
                    match (m >> i & 1 == 1, interior) {
                        (true, _) => c + 1,
                        (false, false) => c + 2,
                        (false, true) => c,
                    }
                })
                .product::<u64>()
        })
        .sum()
}

fn cube_counts() -> PropertyResult {
    let mut r = PropertyResult::new("subdivide_cube");
    for n in 1..=3usize {
        for code in 0..3u32.pow(n as u32) {
            let counts: Vec<u32> = (0..n).map(|i| code / 3u32.pow(i as u32) % 3).collect();
            let k = subdivide_cube(&counts);
            let got: Vec<u64> = k.counts_by_dim().iter().map(|&c| c as u64).collect();
            let want: Vec<u64> = (0..=n).map(|d| closed_form_cells(&counts, d, false)).collect();
            let top: u64 = counts.iter().map(|&c| u64::from(c) + 1).product();
            r.record(got == want && got[n] == top, || {
                format!("{counts:?}: {got:?} vs {want:?}")
            });
        }
    }
    r
}

fn dual_counts(config: &RunConfig) -> PropertyResult {
    let mut r = PropertyResult::new("dual_cells");
    let mut rng = stream(config.seed, "dual");
    for _ in 0..config.count(20) {
        let n = rng.gen_range(1..=3usize);
        let counts: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        let primal = subdivide_cube(&counts).to_cell_complex();
        let dual = match dual_cells(&primal) {
            Ok(d) => d,
            Err(e) => {
                r.record(false, || format!("{counts:?}: {e}"));
                continue;
            }
        };
        let got = dual.complex.counts_by_dim();
        let counts_ok = (0..=n).all(|d| {
            let dual_d = got.get(d).copied().unwrap_or(0) as u64;
            dual_d == closed_form_cells(&counts, n - d, true)
        });
        // b in the boundary of a* means a is in the boundary of b
        let reversed = dual.complex.cells.iter().enumerate().all(|(i, c)| {
            c.boundary
                .iter()
                .all(|&b| primal.cells[dual.primal[b]].boundary.contains(&dual.primal[i]))
        });
        r.record(counts_ok && reversed, || format!("{counts:?}: dual counts {got:?}"));
    }
    r
}

fn catalog_integrity(catalog: &[LocalPiece]) -> PropertyResult {
    let mut r = PropertyResult::new("catalog");
    if let Err(e) = validate_catalog(catalog) {
        r.record(false, || e.to_string());
    }
    for p in catalog {
        let arcs = check_normal_arcs(&p.face_arcs);
        r.record(arcs.pass, || format!("{}: non-normal face data", p.kind));
        let valid = validate_piece(p);
        r.record(valid.is_ok(), || valid.unwrap_err().to_string());
    }
    r
}
