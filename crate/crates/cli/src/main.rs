//! Batch front end: parse complexes and graphs, run any checker or
//! computation, and emit deterministic reports. A false verdict is a normal
//! result (exit 0); only malformed input (exit 2) or an exceeded resource
//! cap (exit 3) is an error.

mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use serre_core::error::Error;
use serre_core::{
    betti_face_ring, betti_ideal, io, is_cm, is_cw_linear_first_r, is_linear_first_r, is_seq_cm,
    is_seq_s2_local, is_seq_sr_relative, is_seq_sr_skeleton, is_shellable, is_sr,
    is_vertex_decomposable, koszul_betti_face_ring, koszul_betti_ideal, reduced_homology,
    relative_homology, sr_ideal, BettiTable, Caps, CheckReport, Face, FieldSpec, RelativePair,
    SimplicialComplex,
};

const SCHEMA: &str = "serre-report/1";

#[derive(Parser)]
#[command(name = "serre", version, about = "Serre-condition checks for simplicial complexes and graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: `q` for the rationals or a prime p for GF(p)
    #[arg(long, global = true, default_value = "q")]
    field: String,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Serre index r (defaults to 2 where one is needed)
    #[arg(long, global = true)]
    r: Option<u32>,

    /// Ground-set cap for the exponential enumerations
    #[arg(long = "cap-n", global = true)]
    cap_n: Option<usize>,

    /// Facet-count cap for the shelling search
    #[arg(long = "cap-facets", global = true)]
    cap_facets: Option<usize>,

    /// Fallback seed for random generators
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetKind {
    Graph,
    Complex,
}

#[derive(Subcommand)]
enum Command {
    /// Run a decision procedure (s, cm, seq-s, seq-s-relative, seq-s-local,
    /// seq-cm, vertex-decomposable, shellable, linear, cw-linear,
    /// condition-iv, thm-conditions, whiskered-even-cycles)
    Check {
        property: String,
        /// Serre index r, positional shorthand for --r
        r_arg: Option<u32>,
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Print a graded Betti table
    Betti {
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        /// Table of the Stanley-Reisner ideal instead of the face ring
        #[arg(long)]
        ideal: bool,
        /// Table of the Stanley-Reisner ideal of the Alexander dual
        #[arg(long = "ideal-of-dual")]
        ideal_of_dual: bool,
        /// Use the brute-force Koszul path instead of vertex restrictions
        #[arg(long)]
        koszul: bool,
    },
    /// Print the Alexander dual
    Dual {
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        /// Relabel the result onto its support (the map is emitted as comments)
        #[arg(long = "support-only")]
        support_only: bool,
    },
    /// Print a skeleton (or pure skeleton) of the complex
    Skeleton {
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        /// Skeleton dimension
        #[arg(short, long, allow_hyphen_values = true)]
        i: i64,
        /// The pure i-skeleton instead of the i-skeleton
        #[arg(long)]
        pure: bool,
        #[arg(long = "support-only")]
        support_only: bool,
    },
    /// Print the link of a face ("1 2"; "-" is the empty face)
    Link {
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        face: String,
        #[arg(long = "support-only")]
        support_only: bool,
    },
    /// Print reduced (or relative) homology dimensions
    Homology {
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        /// Subcomplex file or generator for relative homology
        #[arg(long = "relative-to")]
        relative_to: Option<String>,
    },
    /// Tabulate sequential S_r for the cycles C_3..C_max
    ClassifyCycles {
        #[arg(long)]
        max: usize,
    },
    /// Run the five equivalent checks for a bipartite graph
    BipartiteBattery {
        #[arg(long)]
        graph: String,
    },
    /// Report sequential S_r for two complexes and their join
    JoinExperiment { a: String, b: String },
    /// Emit a generated graph (or its independence complex)
    Generate {
        spec: String,
        #[arg(long = "as", value_enum, default_value_t = TargetKind::Graph)]
        kind: TargetKind,
    },
}

struct Context {
    field: FieldSpec,
    format: Format,
    r: Option<u32>,
    caps: Caps,
    seed: u64,
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe (e.g. `serre ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let field = match cli.field.parse::<FieldSpec>() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut caps = Caps::default();
    if let Some(n) = cli.cap_n {
        caps.max_n = n;
    }
    if let Some(f) = cli.cap_facets {
        caps.max_shelling_facets = f;
    }
    let ctx = Context {
        field,
        format: cli.format,
        r: cli.r,
        caps,
        seed: cli.seed,
    };
    match run(&cli.command, &ctx) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load_target(
    complex: &Option<String>,
    graph: &Option<String>,
    ctx: &Context,
) -> Result<(SimplicialComplex, String), Error> {
    match (complex, graph) {
        (Some(c), None) => Ok((input::load_complex(c, ctx.seed, &ctx.caps)?, c.clone())),
        (None, Some(g)) => Ok((
            input::load_graph(g, ctx.seed)?.independence_complex(&ctx.caps)?,
            g.clone(),
        )),
        _ => Err(Error::Parse {
            line: 0,
            message: "exactly one of --complex or --graph is required".into(),
        }),
    }
}

fn caps_json(caps: &Caps) -> Value {
    json!({
        "max_n": caps.max_n,
        "max_shelling_facets": caps.max_shelling_facets,
        "max_betti_n": caps.max_betti_n,
        "max_koszul_n": caps.max_koszul_n,
    })
}

fn print_check(report: &CheckReport, input: &str, ctx: &Context) {
    match ctx.format {
        Format::Text => {
            println!("input: {input}");
            println!("property: {}", report.property);
            if let Some(r) = report.r {
                println!("r: {r}");
            }
            if let Some(field) = report.field {
                println!("field: {field}");
            }
            println!("verdict: {}", report.verdict);
            if let Some(w) = &report.witness {
                println!("witness: {w}");
            }
        }
        Format::Json => {
            let value = json!({
                "schema": SCHEMA,
                "input": input,
                "report": report,
                "caps": caps_json(&ctx.caps),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
}

fn print_complex(
    delta: &SimplicialComplex,
    support_only: bool,
    ctx: &Context,
) -> Result<(), Error> {
    let (emitted, map) = if support_only {
        let (small, map) = delta.restrict_to_support();
        (small, Some(map))
    } else {
        (delta.clone(), None)
    };
    match ctx.format {
        Format::Text => {
            if let Some(map) = &map {
                for (new, old) in map.iter().enumerate() {
                    println!("# {} = {}", new + 1, old);
                }
            }
            print!("{}", io::emit_complex(&emitted));
        }
        Format::Json => {
            let facets: Vec<Vec<usize>> =
                emitted.facets().iter().map(|f| f.vertices()).collect();
            let value = json!({
                "schema": SCHEMA,
                "n": emitted.n(),
                "facets": facets,
                "support_map": map,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
    Ok(())
}

fn print_betti(table: &BettiTable, input: &str, ctx: &Context) {
    match ctx.format {
        Format::Text => {
            println!("input: {input}");
            print!("{table}");
        }
        Format::Json => {
            let value = json!({
                "schema": SCHEMA,
                "input": input,
                "field": ctx.field.to_string(),
                "table": table,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
}

fn parse_face(text: &str) -> Result<Face, Error> {
    if text.trim() == "-" {
        return Ok(Face::EMPTY);
    }
    let labels: Vec<usize> = text
        .split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("invalid vertex label `{t}` in face"),
            })
        })
        .collect::<Result<_, _>>()?;
    Face::from_vertices(labels)
}

fn run(command: &Command, ctx: &Context) -> Result<(), Error> {
    match command {
        Command::Check {
            property,
            r_arg,
            complex,
            graph,
        } => {
            let r = r_arg.or(ctx.r).unwrap_or(2);
            let report = match property.as_str() {
                "s" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_sr(&delta, r, ctx.field, &ctx.caps)?
                }
                "cm" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_cm(&delta, ctx.field, &ctx.caps)?
                }
                "seq-s" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_seq_sr_skeleton(&delta, r, ctx.field, &ctx.caps)?
                }
                "seq-s-relative" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_seq_sr_relative(&delta, r, ctx.field, &ctx.caps)?
                }
                "seq-s-local" => {
                    if r != 2 {
                        return Err(Error::Parse {
                            line: 0,
                            message: "the local criterion only decides r = 2".into(),
                        });
                    }
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_seq_s2_local(&delta, ctx.field, &ctx.caps)?
                }
                "seq-cm" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_seq_cm(&delta, ctx.field, &ctx.caps)?
                }
                "vertex-decomposable" | "vd" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_vertex_decomposable(&delta, &ctx.caps)?
                }
                "shellable" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_shellable(&delta, &ctx.caps)?
                }
                "linear" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_linear_first_r(&sr_ideal(&delta)?, r, ctx.field, &ctx.caps)?
                }
                "cw-linear" => {
                    let (delta, _) = load_target(complex, graph, ctx)?;
                    is_cw_linear_first_r(&sr_ideal(&delta)?, r, ctx.field, &ctx.caps)?
                }
                "condition-iv" | "thm-conditions" | "whiskered-even-cycles" => {
                    let Some(spec) = graph else {
                        return Err(Error::Parse {
                            line: 0,
                            message: format!("property `{property}` needs --graph"),
                        });
                    };
                    let g = input::load_graph(spec, ctx.seed)?;
                    match property.as_str() {
                        "condition-iv" => g.condition_iv(&ctx.caps)?,
                        "thm-conditions" => g.thm_conditions(&ctx.caps)?,
                        _ => g.whiskered_even_cycles(&ctx.caps)?,
                    }
                }
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("unknown property `{other}`"),
                    });
                }
            };
            let input = complex.as_deref().or(graph.as_deref()).unwrap_or("-");
            print_check(&report, input, ctx);
            Ok(())
        }

        Command::Betti {
            complex,
            graph,
            ideal,
            ideal_of_dual,
            koszul,
        } => {
            let (delta, input) = load_target(complex, graph, ctx)?;
            let table = if *ideal_of_dual {
                let dual = delta.alexander_dual(&ctx.caps)?;
                let id = sr_ideal(&dual)?;
                if *koszul {
                    koszul_betti_ideal(&id, ctx.field, &ctx.caps)?
                } else {
                    betti_ideal(&id, ctx.field, &ctx.caps)?
                }
            } else if *ideal {
                let id = sr_ideal(&delta)?;
                if *koszul {
                    koszul_betti_ideal(&id, ctx.field, &ctx.caps)?
                } else {
                    betti_ideal(&id, ctx.field, &ctx.caps)?
                }
            } else if *koszul {
                koszul_betti_face_ring(&delta, ctx.field, &ctx.caps)?
            } else {
                betti_face_ring(&delta, ctx.field, &ctx.caps)?
            };
            print_betti(&table, &input, ctx);
            Ok(())
        }

        Command::Dual {
            complex,
            graph,
            support_only,
        } => {
            let (delta, _) = load_target(complex, graph, ctx)?;
            print_complex(&delta.alexander_dual(&ctx.caps)?, *support_only, ctx)
        }

        Command::Skeleton {
            complex,
            graph,
            i,
            pure,
            support_only,
        } => {
            let (delta, _) = load_target(complex, graph, ctx)?;
            let skeleton = if *pure {
                delta.pure_skeleton(*i)?
            } else {
                delta.skeleton(*i)?
            };
            print_complex(&skeleton, *support_only, ctx)
        }

        Command::Link {
            complex,
            graph,
            face,
            support_only,
        } => {
            let (delta, _) = load_target(complex, graph, ctx)?;
            let link = delta.link(parse_face(face)?)?;
            print_complex(&link, *support_only, ctx)
        }

        Command::Homology {
            complex,
            graph,
            relative_to,
        } => {
            let (delta, input) = load_target(complex, graph, ctx)?;
            let hv = match relative_to {
                Some(sub_spec) => {
                    let sub = input::load_complex(sub_spec, ctx.seed, &ctx.caps)?;
                    let pair = RelativePair::new(delta, sub)?;
                    relative_homology(&pair, ctx.field, &ctx.caps)?
                }
                None => reduced_homology(&delta, ctx.field, &ctx.caps)?,
            };
            match ctx.format {
                Format::Text => {
                    println!("input: {input}");
                    println!("field: {}", ctx.field);
                    println!("homology: {hv}");
                }
                Format::Json => {
                    let dims: Vec<Value> =
                        hv.iter().map(|(d, v)| json!({"degree": d, "dim": v})).collect();
                    let value = json!({
                        "schema": SCHEMA,
                        "input": input,
                        "field": ctx.field.to_string(),
                        "homology": dims,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                }
            }
            Ok(())
        }

        Command::ClassifyCycles { max } => {
            let r = ctx.r.unwrap_or(2);
            let mut rows = Vec::new();
            for n in 3..=*max {
                let delta = input::generate_graph(&format!("cycle:{n}"), ctx.seed)?
                    .independence_complex(&ctx.caps)?;
                let verdict = is_seq_sr_skeleton(&delta, r, ctx.field, &ctx.caps)?.verdict;
                rows.push((n, verdict));
            }
            match ctx.format {
                Format::Text => {
                    println!("sequentially S_{r} over {}", ctx.field);
                    for (n, verdict) in rows {
                        println!("C_{n}: {verdict}");
                    }
                }
                Format::Json => {
                    let table: Vec<Value> =
                        rows.iter().map(|(n, v)| json!({"n": n, "verdict": v})).collect();
                    let value = json!({
                        "schema": SCHEMA,
                        "r": r,
                        "field": ctx.field.to_string(),
                        "cycles": table,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                }
            }
            Ok(())
        }

        Command::BipartiteBattery { graph } => {
            let g = input::load_graph(graph, ctx.seed)?;
            let battery = g.bipartite_battery(ctx.field, &ctx.caps)?;
            match ctx.format {
                Format::Text => {
                    println!("input: {graph}");
                    for (name, verdict) in battery.verdicts() {
                        println!("{name}: {verdict}");
                    }
                    println!("agreement: {}", battery.unanimous());
                }
                Format::Json => {
                    let value = json!({
                        "schema": SCHEMA,
                        "input": graph,
                        "field": ctx.field.to_string(),
                        "battery": battery,
                        "agreement": battery.unanimous(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                }
            }
            Ok(())
        }

        Command::JoinExperiment { a, b } => {
            let r = ctx.r.unwrap_or(2);
            let left = input::load_complex(a, ctx.seed, &ctx.caps)?;
            let right = input::load_complex(b, ctx.seed, &ctx.caps)?;
            let joined = left.join(&right)?;
            let verdicts = [
                ("left", &left),
                ("right", &right),
                ("join", &joined),
            ]
            .map(|(name, delta)| {
                is_seq_sr_skeleton(delta, r, ctx.field, &ctx.caps).map(|rep| (name, rep.verdict))
            });
            let mut resolved = Vec::new();
            for v in verdicts {
                resolved.push(v?);
            }
            match ctx.format {
                Format::Text => {
                    println!("r: {r}");
                    println!("field: {}", ctx.field);
                    for (name, verdict) in &resolved {
                        println!("{name} sequentially S_{r}: {verdict}");
                    }
                }
                Format::Json => {
                    let value = json!({
                        "schema": SCHEMA,
                        "r": r,
                        "field": ctx.field.to_string(),
                        "left": a,
                        "right": b,
                        "verdicts": resolved.iter().map(|(k, v)| json!({"part": k, "verdict": v})).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                }
            }
            Ok(())
        }

        Command::Generate { spec, kind } => match kind {
            TargetKind::Graph => {
                let g = input::load_graph(spec, ctx.seed)?;
                match ctx.format {
                    Format::Text => print!("{}", io::emit_graph(&g)),
                    Format::Json => {
                        let value = json!({
                            "schema": SCHEMA,
                            "n": g.n(),
                            "edges": g.edges(),
                        });
                        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                    }
                }
                Ok(())
            }
            TargetKind::Complex => {
                let delta = input::load_complex(spec, ctx.seed, &ctx.caps)?;
                print_complex(&delta, false, ctx)
            }
        },
    }
}
