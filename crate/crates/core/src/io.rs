//! Plain-text edge lists.
//!
//! ```text
//! # comments and blank lines are ignored
//! n 4        optional header: vertex count
//! 0 1        one edge per line, whitespace separated
//! 1 2
//! ```
//!
//! Without a header the vertex count is the largest label plus one, unless
//! [`Labels::Compact`] is requested, in which case the labels that occur are
//! renumbered `0..k` in ascending order and the original labels are kept in
//! [`GraphSource::relabel_map`].

use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::generators::Family;
use crate::graph::Graph;

/// Largest vertex count accepted from an edge list without compaction.
pub const MAX_DENSE_VERTICES: u64 = u32::MAX as u64;

#[derive(Debug, Clone, PartialEq)]
pub enum Origin {
    File(PathBuf),
    Generator(Family),
    Text,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::File(p) => write!(f, "file:{}", p.display()),
            Origin::Generator(fam) => write!(f, "gen:{fam}"),
            Origin::Text => f.write_str("text"),
        }
    }
}

/// A graph together with where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSource {
    pub graph: Graph,
    pub origin: Origin,
    /// `relabel_map[i]` is the label vertex `i` had in the input.
    pub relabel_map: Option<Vec<u64>>,
}

impl GraphSource {
    pub fn generated(family: Family, default_seed: u64) -> Result<Self> {
        Ok(Self {
            graph: family.build(default_seed)?,
            origin: Origin::Generator(family),
            relabel_map: None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Labels {
    /// Labels are vertex ids.
    #[default]
    Dense,
    /// Renumber sparse labels when the file has no header.
    Compact,
}

pub fn read_edge_list(text: &str) -> Result<GraphSource> {
    read_edge_list_with(text, Labels::Dense)
}

pub fn read_edge_list_with(text: &str, labels: Labels) -> Result<GraphSource> {
    let mut header: Option<u64> = None;
    let mut edges: Vec<(u64, u64)> = Vec::new();

    for (i, raw) in text.split('\n').enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let num = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a non-negative integer, found {tok:?}"),
            })
        };
        match tokens.as_slice() {
            ["n", count] => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate 'n' header".into(),
                    });
                }
                let count = num(count)?;
                if count > MAX_DENSE_VERTICES {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex count {count} is too large"),
                    });
                }
                header = Some(count);
            }
            [a, b] => {
                let (u, v) = (num(a)?, num(b)?);
                if u == v {
                    return Err(Error::SelfLoop {
                        vertex: u as usize,
                        line: Some(line),
                    });
                }
                if let Some(n) = header {
                    if u.max(v) >= n {
                        return Err(Error::Parse {
                            line,
                            message: format!(
                                "label {} is not below the declared vertex count {n}",
                                u.max(v)
                            ),
                        });
                    }
                }
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected \"u v\" or \"n <count>\", found {content:?}"),
                })
            }
        }
    }

    if header.is_none() && labels == Labels::Compact {
        let mut map: Vec<u64> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        map.sort_unstable();
        map.dedup();
        let index = |x: u64| map.binary_search(&x).expect("label collected above");
        let graph = Graph::from_edges(map.len(), edges.iter().map(|&(u, v)| (index(u), index(v))))?;
        return Ok(GraphSource {
            graph,
            origin: Origin::Text,
            relabel_map: Some(map),
        });
    }

    let n = match header {
        Some(n) => n,
        None => {
            let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
            if n > MAX_DENSE_VERTICES {
                return Err(Error::Input(format!(
                    "label {} is too large for dense labels; use label compaction",
                    n - 1
                )));
            }
            n
        }
    };
    let graph = Graph::from_edges(
        n as usize,
        edges.into_iter().map(|(u, v)| (u as usize, v as usize)),
    )?;
    Ok(GraphSource {
        graph,
        origin: Origin::Text,
        relabel_map: None,
    })
}

pub fn read_edge_list_file(path: &Path, labels: Labels) -> std::io::Result<Result<GraphSource>> {
    let text = std::fs::read_to_string(path)?;
    Ok(read_edge_list_with(&text, labels).map(|mut s| {
        s.origin = Origin::File(path.to_path_buf());
        s
    }))
}

/// Header line, then one `u v` line per edge with `u < v` in lexicographic
/// order. No trailing newline.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("\n{u} {v}"));
    }
    out
}
