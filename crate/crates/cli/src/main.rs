use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use topmin_core::additivity::{check_matching, euler_characteristic, verify_index_sum};
use topmin_core::catalog::catalog;
use topmin_core::corpus::{random_move, random_surface, rng};
use topmin_core::cubical::{cube_from_cone, dual_cells, subdivide_cube, CellComplex};
use topmin_core::dichotomy::check_dichotomy;
use topmin_core::homology::reduced_homology;
use topmin_core::io::{canonical_json, parse_catalog, parse_complex, parse_configuration, write_complex};
use topmin_core::milnor::verify_milnor;
use topmin_core::simplicial::{join, join_disjoint};
use topmin_core::suite::{run_suite, OutputMode, RunConfig, DEFAULT_SEED};
use topmin_core::width::{apply_surgery, verify_width_decrease, width, SurfaceComponent, SurgeryMove};

#[derive(Parser)]
#[command(
    name = "topmin",
    version,
    about = "Disk complexes, homology index, join additivity and width checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced integral homology of a complex file.
    Homology {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Homology index of a complex file.
    Index {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Join of two complexes.
    Join {
        a: PathBuf,
        b: PathBuf,
        /// Prefix the vertices of each side instead of rejecting shared labels.
        #[arg(long)]
        relabel: bool,
        /// Write the join here instead of printing it.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the homology of a join with the join formula.
    Milnor {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Global index of a surface configuration computed two ways.
    Additivity {
        config: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Search for a dichotomy witness for a full subcomplex X of Y.
    Dichotomy {
        x: PathBuf,
        y: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Widths along a sequence of surgeries.
    Width {
        /// File with {"surface": [{"chi", "weight"}, ...], "moves": [...]}.
        #[arg(required_unless_present = "demo", conflicts_with = "demo")]
        file: Option<PathBuf>,
        /// Run a random surgery cascade until no move applies.
        #[arg(long)]
        demo: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// The catalog of local pieces.
    Catalog {
        #[command(flatten)]
        out: Output,
    },
    /// Cube realization of a cone, or a subdivided cube.
    Cube {
        /// Dimension of the cube realizing the cone on an (n-1)-simplex.
        #[arg(
            long,
            value_name = "N",
            conflicts_with = "subdivide",
            required_unless_present = "subdivide"
        )]
        cone: Option<usize>,
        /// Dimension and comma-separated cut counts, e.g. `--subdivide 2 2,3`.
        #[arg(long, num_args = 2, value_names = ["N", "COUNTS"])]
        subdivide: Option<Vec<String>>,
        #[command(flatten)]
        out: Output,
    },
    /// Dual cells of a simplicial ball.
    Dual {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Run the seeded property suite.
    Suite {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Cases per randomized property, overriding the defaults.
        #[arg(long)]
        counts: Option<usize>,
        /// Replacement catalog (JSON array of pieces), for negative controls.
        #[arg(long, hide = true)]
        catalog_file: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn put(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: stdout: {e}");
        std::process::exit(2);
    }
}

fn emit(out: Output, value: Value, lines: Vec<String>) {
    if out.json {
        put(&(serde_json::to_string_pretty(&value).expect("json") + "\n"));
    } else {
        put(&lines.iter().map(|l| format!("{l}\n")).collect::<String>());
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Homology { file, out } => {
            let k = parse_complex(&file)?;
            let p = reduced_homology(&k);
            let mut lines = vec![format!("{}:", k.name())];
            lines.extend(p.lines());
            lines.push(format!("index: {}", p.index()));
            emit(
                out,
                json!({"name": k.name(), "profile": p, "index": p.index(), "lines": p.lines()}),
                lines,
            );
        }
        Command::Index { file, out } => {
            let k = parse_complex(&file)?;
            let index = reduced_homology(&k).index();
            emit(out, json!({"name": k.name(), "index": index}), vec![index.to_string()]);
        }
        Command::Join {
            a,
            b,
            relabel,
            output,
            out,
        } => {
            let (a, b) = (parse_complex(&a)?, parse_complex(&b)?);
            let k = if relabel { join_disjoint(&a, &b) } else { join(&a, &b)? };
            match output {
                Some(path) => {
                    write_complex(&k, &path)?;
                    emit(
                        out,
                        json!({"written": path, "facets": k.facets().len()}),
                        vec![format!("wrote {} ({} facets)", path.display(), k.facets().len())],
                    );
                }
                // the complex file format is already JSON
                None => put(&canonical_json(&k)),
            }
        }
        Command::Milnor { a, b, out } => {
            let rep = verify_milnor(&parse_complex(&a)?, &parse_complex(&b)?);
            emit(out, serde_json::to_value(&rep)?, rep.lines());
            if !rep.pass {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Additivity { config, out } => {
            let c = parse_configuration(&config)?;
            let cat = catalog();
            let matching = check_matching(&c, cat)?;
            if !matching.pass {
                emit(
                    out,
                    json!({"matching": matching, "report": null}),
                    matching
                        .residuals
                        .iter()
                        .filter(|r| r.residual != [0; 3])
                        .map(|r| {
                            format!(
                                "gluing {} (tet {} face {} / tet {} face {}): residual {:?}",
                                r.gluing, r.tet_a, r.face_a, r.tet_b, r.face_b, r.residual
                            )
                        })
                        .collect(),
                );
                return Ok(ExitCode::FAILURE);
            }
            let rep = verify_index_sum(&c, cat)?;
            let chi = euler_characteristic(&c, cat)?;
            let mut lines = rep.lines();
            lines.insert(0, format!("euler characteristic: {chi}"));
            emit(out, json!({"matching": matching, "euler": chi, "report": rep}), lines);
            if !rep.pass {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Dichotomy { x, y, out } => {
            let w = check_dichotomy(&parse_complex(&x)?, &parse_complex(&y)?)?;
            emit(out, serde_json::to_value(&w)?, w.lines());
            if w.verdict == topmin_core::Verdict::Failure {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Width { file, demo, seed, out } => {
            let (surface, moves) = if demo {
                demo_cascade(seed)
            } else {
                let path = file.expect("required by clap");
                let text = std::fs::read_to_string(&path).with_context(|| path.display().to_string())?;
                let doc: WidthFile = serde_json::from_str(&text).with_context(|| path.display().to_string())?;
                (doc.surface, doc.moves)
            };
            let (value, lines, ok) = cascade(&surface, &moves)?;
            emit(out, value, lines);
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Catalog { out } => {
            let cat = catalog();
            let lines = cat
                .iter()
                .map(|p| {
                    format!(
                        "{:<14} weights {:?}  chi {:>2}  index {:<9} model {:?}",
                        p.kind.tag(),
                        p.edge_weights,
                        p.euler,
                        p.declared_index.to_string(),
                        p.model_complex.facets()
                    )
                })
                .collect();
            emit(out, serde_json::to_value(cat)?, lines);
        }
        Command::Cube { cone, subdivide, out } => {
            if let Some(n) = cone {
                let c = cube_from_cone(n)?;
                let mut lines = vec![format!(
                    "cube for the cone on a {}-simplex: cells by dimension {:?}",
                    n - 1,
                    c.cube.counts_by_dim()
                )];
                lines.extend(c.corner_labels.iter().map(|(p, s)| format!("  {p:?} -> {s}")));
                let corners: Vec<Value> = c
                    .corner_labels
                    .iter()
                    .map(|(p, s)| json!({"corner": p, "label": s}))
                    .collect();
                emit(
                    out,
                    json!({"dim": n, "cells_by_dim": c.cube.counts_by_dim(), "corners": corners}),
                    lines,
                );
            } else {
                let args = subdivide.expect("required by clap");
                let n: usize = args[0]
                    .parse()
                    .with_context(|| format!("bad dimension {:?}", args[0]))?;
                let counts: Vec<u32> = args[1]
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.trim().parse().with_context(|| format!("bad count {s:?}")))
                    .collect::<Result<_>>()?;
                if counts.len() != n {
                    bail!("expected {n} counts, got {}", counts.len());
                }
                let k = subdivide_cube(&counts);
                let vertices: Vec<Value> = k
                    .cells
                    .iter()
                    .filter(|c| c.dim() == 0)
                    .map(|c| {
                        let xs: Vec<String> = k.coordinates(&c.base).iter().map(|r| r.to_string()).collect();
                        json!({"lattice": c.base, "coordinates": xs})
                    })
                    .collect();
                emit(
                    out,
                    json!({
                        "dim": n,
                        "counts": counts,
                        "cells_by_dim": k.counts_by_dim(),
                        "top_cells": k.top_cells(),
                        "vertices": vertices,
                    }),
                    vec![
                        format!("cube [0,1]^{n} cut by {counts:?}"),
                        format!("cells by dimension: {:?}", k.counts_by_dim()),
                        format!("top cells: {}", k.top_cells()),
                    ],
                );
            }
        }
        Command::Dual { file, out } => {
            let k = parse_complex(&file)?;
            let primal = CellComplex::from(&k);
            let d = dual_cells(&primal)?;
            let cells: Vec<Value> = d
                .complex
                .cells
                .iter()
                .zip(&d.primal)
                .map(|(c, &p)| json!({"dim": c.dim, "dual_of": primal.cells[p].label, "boundary": c.boundary}))
                .collect();
            emit(
                out,
                json!({
                    "primal_cells_by_dim": primal.counts_by_dim(),
                    "boundary_cells": d.boundary_cells,
                    "dual_cells_by_dim": d.complex.counts_by_dim(),
                    "cells": cells,
                }),
                vec![
                    format!("primal cells by dimension: {:?}", primal.counts_by_dim()),
                    format!("primal cells on the boundary: {}", d.boundary_cells),
                    format!("dual cells by dimension: {:?}", d.complex.counts_by_dim()),
                ],
            );
        }
        Command::Suite {
            seed,
            counts,
            catalog_file,
            out,
        } => {
            let owned;
            let cat = match catalog_file {
                Some(path) => {
                    owned = parse_catalog(path)?;
                    &owned[..]
                }
                None => catalog(),
            };
            let output = if out.json { OutputMode::Json } else { OutputMode::Text };
            let report = run_suite(&RunConfig { seed, counts, output }, cat);
            put(&report.render(output));
            return Ok(ExitCode::from(report.exit_code()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Deserialize)]
struct WidthFile {
    surface: Vec<SurfaceComponent>,
    #[serde(default)]
    moves: Vec<SurgeryMove>,
}

fn demo_cascade(seed: u64) -> (Vec<SurfaceComponent>, Vec<SurgeryMove>) {
    let mut r = rng(seed);
    let start = random_surface(&mut r, 3, 4, 8);
    let mut s = start.clone();
    let mut moves = Vec::new();
    while let Some(mv) = random_move(&mut r, &s) {
        s = apply_surgery(&s, &mv).expect("generated moves are valid");
        moves.push(mv);
    }
    (start, moves)
}

/// Applies the moves in order, recording the width before and after each.
fn cascade(surface: &[SurfaceComponent], moves: &[SurgeryMove]) -> Result<(Value, Vec<String>, bool)> {
    let mut s = surface.to_vec();
    let mut lines = vec![format!("start: {}", width(&s))];
    let mut steps = Vec::new();
    let mut ok = true;
    for (i, mv) in moves.iter().enumerate() {
        let v = verify_width_decrease(&s, mv).with_context(|| format!("move {i}"))?;
        ok &= v.pass;
        lines.push(format!(
            "{:>3}. {mv}: {} -> {}{}",
            i + 1,
            v.before,
            v.after,
            if v.pass { "" } else { "  NOT SMALLER" }
        ));
        steps.push(json!({"move": mv, "before": v.before, "after": v.after, "decreased": v.pass}));
        s = apply_surgery(&s, mv)?;
    }
    lines.push(format!("end: {} after {} move(s)", width(&s), moves.len()));
    let value = json!({
        "start": width(surface),
        "surface": surface,
        "steps": steps,
        "final": width(&s),
        "final_surface": s,
        "all_decreased": ok,
    });
    Ok((value, lines, ok))
}
