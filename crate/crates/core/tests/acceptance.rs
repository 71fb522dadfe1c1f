//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always show; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use topmin_core::additivity::{check_matching, verify_index_sum};
use topmin_core::catalog::{catalog, check_normal_arcs, local_index, PieceKind};
use topmin_core::corpus::{
    random_complex, random_configuration, random_full_pair, random_move, random_surface, rp2, stream,
};
use topmin_core::cubical::{apex, cone_vertex, cube_from_cone, dual_cells, subdivide_cube};
use topmin_core::dichotomy::{check_dichotomy, Verdict};
use topmin_core::homology::{homology_index, reduced_homology, AbelianGroup, HomologyIndex};
use topmin_core::milnor::verify_milnor;
use topmin_core::simplicial::{barycentric_subdivision, join_disjoint, Simplex, SimplicialComplex};
use topmin_core::suite::{census_cases, closed_form_cells, run_suite, OutputMode, RunConfig};
use topmin_core::width::{apply_surgery, verify_width_decrease};

const SEED: u64 = 0x5eed;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn sphere_ladder() -> Outcome {
    let mut worst = Duration::ZERO;
    for k in 1..=4 {
        let start = Instant::now();
        let got = homology_index(&SimplicialComplex::sphere(k));
        let took = start.elapsed();
        worst = worst.max(took);
        if got != HomologyIndex::Index(k as u32 + 1) {
            return outcome(false, format!("boundary of the {}-simplex: {got}", k + 1));
        }
        if took >= Duration::from_secs(1) {
            return outcome(false, format!("k = {k} took {took:?}"));
        }
    }
    outcome(true, format!("k = 1..4, slowest {worst:?}"))
}

fn milnor() -> Outcome {
    let start = Instant::now();
    let s0 = SimplicialComplex::sphere(0);
    let p = rp2();
    let z2 = AbelianGroup::cyclic(2);
    let fixed = [
        (&s0, &s0, vec![(1, AbelianGroup::free(1))]),
        (&p, &s0, vec![(2, z2.clone())]),
        (&p, &p, vec![(3, z2.clone()), (4, z2.clone())]),
    ];
    for (a, b, expected) in fixed {
        let rep = verify_milnor(a, b);
        let direct = reduced_homology(&join_disjoint(a, b));
        let nonzero: Vec<(usize, AbelianGroup)> = (0..direct.groups.len())
            .map(|k| (k, direct.group(k)))
            .filter(|(_, g)| !g.is_trivial())
            .collect();
        if !rep.pass || nonzero != expected {
            return outcome(false, rep.lines().join("; "));
        }
    }
    let mut rng = stream(SEED, "milnor");
    for i in 0..50 {
        let a = random_complex(&mut rng, 7, 3, "A");
        let b = random_complex(&mut rng, 7, 3, "B");
        let rep = verify_milnor(&a, &b);
        if !rep.pass {
            return outcome(false, format!("random pair {i}: {}", rep.lines().join("; ")));
        }
    }
    let took = start.elapsed();
    outcome(
        took < Duration::from_secs(30),
        format!("3 fixed + 50 random pairs equal, {took:?}"),
    )
}

fn additivity() -> Outcome {
    let mut rng = stream(SEED, "additivity");
    let mut indexed = 0;
    for i in 0..100 {
        let c = random_configuration(&mut rng, catalog(), 5, 3);
        match verify_index_sum(&c, catalog()) {
            Ok(rep) if rep.pass => indexed += usize::from(rep.direct != HomologyIndex::Zero),
            Ok(rep) => return outcome(false, format!("configuration {i}: {}", rep.lines().join("; "))),
            Err(e) => return outcome(false, format!("configuration {i}: {e}")),
        }
    }
    outcome(true, format!("100/100 configurations, {indexed} with nonzero index"))
}

fn census() -> Outcome {
    let cases = census_cases();
    for (label, c, want) in &cases {
        let matching = check_matching(c, catalog()).map(|m| m.pass);
        let rep = verify_index_sum(c, catalog());
        match (matching, rep) {
            (Ok(true), Ok(rep)) if rep.pass && rep.direct == *want => {}
            (m, r) => return outcome(false, format!("{label}: matching {m:?}, report {r:?}")),
        }
    }
    outcome(
        true,
        format!("{} census configurations at their stated index", cases.len()),
    )
}

fn dichotomy() -> Outcome {
    let mut rng = stream(SEED, "dichotomy");
    let (mut small, mut found) = (0, 0);
    for i in 0..100 {
        let (x, y) = random_full_pair(&mut rng, 8, 3);
        if y.vertices().len() > 8 || y.dim().unwrap_or(0) > 3 {
            return outcome(false, format!("pair {i} out of bounds"));
        }
        match check_dichotomy(&x, &y) {
            Ok(w) if w.verdict == Verdict::Failure => {
                return outcome(false, format!("pair {i} has no witness: {}", w.lines().join("; ")))
            }
            Ok(w) if w.monotonicity_violations > 0 => return outcome(false, format!("pair {i}: V_tau not monotone")),
            Ok(w) if w.verdict == Verdict::YSmall => small += 1,
            Ok(_) => found += 1,
            Err(e) => return outcome(false, format!("pair {i}: {e}")),
        }
    }
    outcome(
        true,
        format!("100 pairs: {small} Y_SMALL, {found} TAU_FOUND, 0 FAILURE"),
    )
}

fn width_descent() -> Outcome {
    let mut rng = stream(SEED, "width");
    let mut cases = 0;
    while cases < 1000 {
        let s = random_surface(&mut rng, 6, 10, 20);
        let Some(mv) = random_move(&mut rng, &s) else { continue };
        match verify_width_decrease(&s, &mv) {
            Ok(v) if v.pass => cases += 1,
            Ok(v) => return outcome(false, format!("{mv}: {} -> {}", v.before, v.after)),
            Err(e) => return outcome(false, e.to_string()),
        }
    }
    let mut longest = 0;
    for i in 0..100 {
        let mut s = random_surface(&mut rng, 6, 10, 20);
        let mut steps = 0;
        while let Some(mv) = random_move(&mut rng, &s) {
            let next = apply_surgery(&s, &mv).expect("generated move");
            if !verify_width_decrease(&s, &mv).expect("generated move").pass {
                return outcome(false, format!("walk {i} step {steps}: {mv} does not lower width"));
            }
            s = next;
            steps += 1;
            if steps > 100_000 {
                return outcome(false, format!("walk {i} does not terminate"));
            }
        }
        longest = longest.max(steps);
    }
    outcome(
        true,
        format!("1000 moves decrease width; 100 walks terminate, longest {longest} steps"),
    )
}

fn constructions() -> Outcome {
    let mut rng = stream(SEED, "constructions");
    for i in 0..50 {
        let k = random_complex(&mut rng, 7, 3, "K");
        let sd = barycentric_subdivision(&k);
        if k.euler_characteristic() != sd.euler_characteristic() {
            return outcome(false, format!("complex {i}: chi changes under subdivision"));
        }
    }
    for n in 1..=4 {
        let cube = cube_from_cone(n).expect("in range");
        let base = Simplex::new((1..=n).map(cone_vertex)).unwrap();
        let mut faces: BTreeSet<Simplex> = base.faces().collect();
        faces.insert(Simplex::new([apex()]).unwrap());
        let labels: BTreeSet<Simplex> = cube.corner_labels.values().cloned().collect();
        if labels != faces || cube.corner_labels.len() != 1 << n {
            return outcome(false, format!("cone cube n = {n}: labels are not the faces"));
        }
    }
    for counts in [vec![1, 0], vec![1, 1, 1], vec![2, 3], vec![0, 2, 1, 1]] {
        let top: usize = counts.iter().map(|&c| c as usize + 1).product();
        if subdivide_cube(&counts).top_cells() != top {
            return outcome(false, format!("subdivide {counts:?}"));
        }
    }
    use rand::Rng;
    for i in 0..20 {
        let n = rng.gen_range(1..=3usize);
        let counts: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        let primal = subdivide_cube(&counts).to_cell_complex();
        let dual = dual_cells(&primal).expect("cube is a ball");
        let got = dual.complex.counts_by_dim();
        // count primal interior cells directly
        let boundary = topmin_core::cubical::boundary_subcomplex(&primal);
        for d in 0..=n {
            let interior = (0..primal.cells.len())
                .filter(|c| !boundary.contains(c) && primal.cells[*c].dim == n - d)
                .count();
            if got.get(d).copied().unwrap_or(0) != interior
                || interior as u64 != closed_form_cells(&counts, n - d, true)
            {
                return outcome(false, format!("cube {i} {counts:?}: dual {got:?}"));
            }
        }
    }
    outcome(
        true,
        "chi under subdivision x50, cone cubes n<=4, cube counts, 20 duals",
    )
}

fn catalog_integrity() -> Outcome {
    let cat = catalog();
    for kind in PieceKind::ALL {
        let Some(p) = cat.iter().find(|p| p.kind == kind) else {
            return outcome(false, format!("{kind} missing"));
        };
        if local_index(p) != Ok(p.declared_index) || homology_index(&p.model_complex) != kind.expected_index() {
            return outcome(false, format!("{kind}: model index disagrees"));
        }
        if !check_normal_arcs(&p.face_arcs).pass {
            return outcome(false, format!("{kind}: non-normal arcs"));
        }
    }
    outcome(true, format!("{} piece kinds", PieceKind::ALL.len()))
}

fn determinism() -> Outcome {
    let config = RunConfig {
        seed: SEED,
        counts: None,
        output: OutputMode::Text,
    };
    let a = run_suite(&config, catalog());
    let b = run_suite(&config, catalog());
    let same = a.render(OutputMode::Text) == b.render(OutputMode::Text)
        && a.render(OutputMode::Json) == b.render(OutputMode::Json);
    outcome(
        same && a.pass,
        format!("two runs byte-identical: {same}, suite passes: {}", a.pass),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 sphere ladder", sphere_ladder),
        ("2 join formula", milnor),
        ("3 index additivity", additivity),
        ("4 census", census),
        ("5 dichotomy", dichotomy),
        ("6 width descent", width_descent),
        ("7 constructions", constructions),
        ("8 catalog integrity", catalog_integrity),
        ("9 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    if failed == 0 {
        println!("acceptance: 9/9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
