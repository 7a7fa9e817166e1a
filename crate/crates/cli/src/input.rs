//! Input resolution: a target is either a generator spec or a file path.
//!
//! Generator grammar:
//!
//! ```text
//! cycle:<n>                      the cycle C_n
//! path:<n>                       the path P_n
//! whisker:<gen>:<arg>:<v1,v2>    whiskers at the listed vertices of the
//!                                inner generator (e.g. whisker:cycle:6:1,4)
//! bipartite-random:<a>:<b>:<p>[:<seed>]
//!                                seeded random bipartite graph; the seed
//!                                falls back to --seed when omitted
//! ```
//!
//! Anything else is read as a file in the graph or complex text format.

use std::fs;

use serre_core::error::{Error, Result};
use serre_core::{io, Caps, Graph, SimplicialComplex};

pub const GENERATOR_PREFIXES: [&str; 4] = ["cycle", "path", "whisker", "bipartite-random"];

pub fn is_generator(spec: &str) -> bool {
    GENERATOR_PREFIXES
        .iter()
        .any(|p| spec.starts_with(&format!("{p}:")))
}

fn parse_usize(token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line: 0,
        message: format!("invalid {what} `{token}` in generator spec"),
    })
}

pub fn generate_graph(spec: &str, default_seed: u64) -> Result<Graph> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["cycle", n] => Graph::cycle(parse_usize(n, "cycle length")?),
        ["path", n] => Graph::path(parse_usize(n, "path length")?),
        ["whisker", rest @ ..] if rest.len() >= 2 => {
            let (vertices, inner) = rest.split_last().expect("len checked");
            let base = generate_graph(&inner.join(":"), default_seed)?;
            let anchors: Vec<usize> = vertices
                .split(',')
                .filter(|t| !t.is_empty())
                .map(|t| parse_usize(t, "whisker vertex"))
                .collect::<Result<_>>()?;
            base.add_whiskers(&anchors)
        }
        ["bipartite-random", a, b, p] | ["bipartite-random", a, b, p, _] => {
            let a = parse_usize(a, "part size")?;
            let b = parse_usize(b, "part size")?;
            let p: f64 = p.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("invalid probability `{p}` in generator spec"),
            })?;
            let seed = match parts.as_slice() {
                [.., s] if parts.len() == 5 => s.parse().map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("invalid seed `{s}` in generator spec"),
                })?,
                _ => default_seed,
            };
            Graph::random_bipartite(a, b, p, seed)
        }
        _ => Err(Error::Parse {
            line: 0,
            message: format!("unknown generator spec `{spec}`"),
        }),
    }
}

pub fn load_graph(target: &str, default_seed: u64) -> Result<Graph> {
    if is_generator(target) {
        return generate_graph(target, default_seed);
    }
    let text = fs::read_to_string(target).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read `{target}`: {e}"),
    })?;
    io::parse_graph(&text)
}

/// A complex target: a complex file, or a graph generator whose independence
/// complex is taken.
pub fn load_complex(target: &str, default_seed: u64, caps: &Caps) -> Result<SimplicialComplex> {
    if is_generator(target) {
        return generate_graph(target, default_seed)?.independence_complex(caps);
    }
    let text = fs::read_to_string(target).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read `{target}`: {e}"),
    })?;
    io::parse_complex(&text)
}
