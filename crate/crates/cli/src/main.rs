//! minorkit: planarity and free-planarity verdicts, obstruction-set
//! operators, triconnected decompositions, reduced-Kuratowski certificates,
//! and the exhaustive theorem-verification harness.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use minorkit::canon::canonical_key;
use minorkit::freeplanar::{
    is_free_planar_def, is_free_planar_minors, is_free_planar_structural, FreePlanarVerdict,
};
use minorkit::graph6::write_graph6;
use minorkit::planarity::is_planar_fast;
use minorkit_cli::cache::VerdictCache;
use minorkit_cli::input::{read_graphs, ParsedGraph};
use minorkit_cli::records::{freeplanar_record, planar_record, OutputFormat};
use minorkit_cli::verify::{render_reports, verify_theorems};

#[derive(Parser)]
#[command(name = "minorkit", version, about)]
struct Cli {
    /// Worker threads for the verification harness and batch commands.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Output format for records and reports.
    #[arg(long, global = true, default_value = "text")]
    format: OutputFormat,
    /// Directory for the append-only verdict cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Planarity verdict per input graph.
    Planar {
        /// graph6 or edge-list files.
        inputs: Vec<PathBuf>,
    },
    /// Free-planarity verdict per input graph.
    Freeplanar {
        /// Recognition route: def, minors, structure, or all (cross-checked).
        #[arg(long, default_value = "all")]
        method: String,
        inputs: Vec<PathBuf>,
    },
    /// Apply the free-class obstruction operator to a forbidden set.
    Freeop {
        /// Number of operator applications.
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        inputs: Vec<PathBuf>,
    },
    /// Extract a reduced-Kuratowski certificate for a non-edge.
    Certify {
        /// The non-edge, as `x,y`.
        #[arg(long)]
        pair: String,
        input: PathBuf,
    },
    /// Decompose 2-connected graphs into triconnected components.
    Decompose { inputs: Vec<PathBuf> },
    /// Enumerate isomorphism classes on n vertices as graph6 lines.
    Enumerate {
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Run the exhaustive theorem-verification harness.
    VerifyTheorems {
        /// Enumeration bound (7 by default; 8 is the slow opt-in).
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_inputs(paths: &[PathBuf]) -> Result<Vec<ParsedGraph>, String> {
    if paths.is_empty() {
        return Err("no input files given".into());
    }
    let mut graphs = Vec::new();
    for p in paths {
        graphs.extend(read_graphs(p).map_err(|e| e.to_string())?);
    }
    Ok(graphs)
}

fn open_cache(dir: &Option<PathBuf>) -> Result<Option<VerdictCache>, String> {
    match dir {
        None => Ok(None),
        Some(d) => VerdictCache::open(d).map(Some).map_err(|e| e.to_string()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Planar { inputs } => {
            let graphs = load_inputs(&inputs)?;
            let mut cache = open_cache(&cli.cache_dir)?;
            for pg in &graphs {
                let key = String::from_utf8(canonical_key(&pg.graph)).expect("ascii");
                let planar = match cache.as_ref().and_then(|c| c.get(&key, "planar")) {
                    Some(v) => v,
                    None => {
                        let v = is_planar_fast(&pg.graph);
                        if let Some(c) = cache.as_mut() {
                            c.put(key, "planar".into(), v);
                        }
                        v
                    }
                };
                println!("{}", planar_record(cli.format, &pg.graph, planar));
            }
            if let Some(c) = cache.as_mut() {
                c.flush().map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Freeplanar { method, inputs } => {
            let graphs = load_inputs(&inputs)?;
            let mut cache = open_cache(&cli.cache_dir)?;
            let mut disagreement = false;
            for pg in &graphs {
                let g = &pg.graph;
                let planar = is_planar_fast(g);
                let verdicts: Vec<(&str, FreePlanarVerdict)> = match method.as_str() {
                    "def" => vec![("def", is_free_planar_def(g))],
                    "minors" => vec![("minors", is_free_planar_minors(g))],
                    "structure" => vec![("structure", is_free_planar_structural(g))],
                    "all" => vec![
                        ("def", is_free_planar_def(g)),
                        ("minors", is_free_planar_minors(g)),
                        ("structure", is_free_planar_structural(g)),
                    ],
                    other => return Err(format!("unknown method `{other}`")),
                };
                let agree = verdicts
                    .windows(2)
                    .all(|w| w[0].1.is_free_planar == w[1].1.is_free_planar);
                if !agree {
                    disagreement = true;
                    eprintln!(
                        "{}:{}: route disagreement on {}",
                        pg.source,
                        pg.line,
                        write_graph6(g)
                    );
                }
                let (route, verdict) = if method == "all" {
                    ("all", verdicts.into_iter().next().unwrap().1)
                } else {
                    let (r, v) = verdicts.into_iter().next().unwrap();
                    (r, v)
                };
                if let Some(c) = cache.as_mut() {
                    let key = String::from_utf8(canonical_key(g)).expect("ascii");
                    c.put(key, format!("freeplanar:{method}"), verdict.is_free_planar);
                }
                println!(
                    "{}",
                    freeplanar_record(cli.format, g, planar, route, &verdict)
                );
            }
            if let Some(c) = cache.as_mut() {
                c.flush().map_err(|e| e.to_string())?;
            }
            Ok(if disagreement {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Freeop { iterations, inputs } => {
            let graphs = load_inputs(&inputs)?;
            if iterations == 0 {
                return Err("--iterations must be at least 1".into());
            }
            let mut b: minorkit::GraphSet = graphs.iter().map(|pg| pg.graph).collect();
            for it in 1..=iterations {
                let deleted = minorkit::freeop::edge_deleted_set(&b);
                let splits = minorkit::freeop::vertex_split_set(&b);
                let result = minorkit::freeop::free_forbidden(&b);
                match cli.format {
                    OutputFormat::Text => {
                        println!(
                            "# iteration {it}: |B-|={} |Bsplit|={} |result|={}",
                            deleted.len(),
                            splits.len(),
                            result.len()
                        );
                        for g in result.iter() {
                            println!("{}", write_graph6(g));
                        }
                    }
                    OutputFormat::Jsonl => {
                        let members: Vec<String> =
                            result.iter().map(write_graph6).collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "iteration": it,
                                "edge_deleted": deleted.len(),
                                "splits": splits.len(),
                                "result": members,
                            })
                        );
                    }
                }
                b = result;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { pair, input } => {
            let graphs = load_inputs(&[input])?;
            let (x, y) = parse_pair(&pair)?;
            let mut failed = false;
            for pg in &graphs {
                match minorkit::bridges::extract_certificate(&pg.graph, x, y) {
                    Ok(cert) => match cli.format {
                        OutputFormat::Text => print!("{}", cert.to_text()),
                        OutputFormat::Jsonl => {
                            let sets: Vec<Vec<usize>> = (0..cert.model.pattern().n())
                                .map(|p| cert.model.branch_set(p))
                                .collect();
                            println!(
                                "{}",
                                serde_json::json!({
                                    "graph6": write_graph6(&pg.graph),
                                    "target": cert.target.name(),
                                    "case": cert.case_used.name(),
                                    "branch_sets": sets,
                                })
                            );
                        }
                    },
                    Err(e) => {
                        eprintln!("{}:{}: {e}", pg.source, pg.line);
                        failed = true;
                    }
                }
            }
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Decompose { inputs } => {
            let graphs = load_inputs(&inputs)?;
            let mut failed = false;
            for pg in &graphs {
                match minorkit::triconnected::decompose_3connected(&pg.graph) {
                    Ok(tree) => match cli.format {
                        OutputFormat::Text => {
                            println!("graph {}", write_graph6(&pg.graph));
                            print!("{}", tree.report());
                        }
                        OutputFormat::Jsonl => {
                            let comps: Vec<serde_json::Value> = tree
                                .components
                                .iter()
                                .map(|c| {
                                    serde_json::json!({
                                        "kind": format!("{:?}", c.kind),
                                        "vertices": c.vertices,
                                        "edges": c.edges.iter().map(|e| {
                                            serde_json::json!([e.u, e.v, e.is_virtual])
                                        }).collect::<Vec<_>>(),
                                    })
                                })
                                .collect();
                            println!(
                                "{}",
                                serde_json::json!({
                                    "graph6": write_graph6(&pg.graph),
                                    "components": comps,
                                })
                            );
                        }
                    },
                    Err(e) => {
                        eprintln!("{}:{}: {e}", pg.source, pg.line);
                        failed = true;
                    }
                }
            }
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Enumerate { n, connected } => {
            let graphs = if cli.jobs > 1 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(cli.jobs)
                    .build()
                    .map_err(|e| e.to_string())?;
                pool.install(|| minorkit::enumerate::enumerate_graphs_par(n, connected))
            } else {
                minorkit::enumerate::enumerate_graphs(n, connected)
            }
            .map_err(|e| e.to_string())?;
            for g in &graphs {
                println!("{}", write_graph6(g));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTheorems { max_n } => {
            let reports = verify_theorems(max_n, cli.jobs)?;
            print!("{}", render_reports(&reports, cli.format));
            for r in &reports {
                eprintln!("timing: {} {:?}", r.id, r.wall);
            }
            let ok = reports.iter().all(|r| r.passed());
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("--pair expects `x,y`, got `{s}`"));
    }
    let x = parts[0].trim().parse().map_err(|_| format!("bad vertex `{}`", parts[0]))?;
    let y = parts[1].trim().parse().map_err(|_| format!("bad vertex `{}`", parts[1]))?;
    Ok((x, y))
}
