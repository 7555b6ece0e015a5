//! Deterministic constructors for the graph families used throughout.
//!
//! `erdos_renyi` is reproducible across platforms: it uses `ChaCha8Rng`
//! (rand_chacha 0.3) seeded with `seed_from_u64(seed)`, visits pairs `(i, j)`
//! with `i < j` in lexicographic order, draws one `next_u64` per pair, and
//! keeps the pair iff `(x >> 11) * 2^-53 < p`.

use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Input("complete graph needs n >= 1".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// K_{a,b} with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::Input(
            "complete bipartite graph needs both parts nonempty".into(),
        ));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("static edge list")
}

fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Paley graph on the integers mod a prime `q ≡ 1 (mod 4)`.
pub fn paley(q: usize) -> Result<Graph> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(Error::Input(format!(
            "paley graph needs a prime q with q = 1 (mod 4), got {q}"
        )));
    }
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    Graph::from_edges(
        q,
        (0..q).flat_map(|u| {
            let residue = &residue;
            (u + 1..q)
                .filter(move |&v| residue[v - u])
                .map(move |v| (u, v))
        }),
    )
}

pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!(
            "edge probability {p} is not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = 1.0 / (1u64 << 53) as f64;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let x = (rng.next_u64() >> 11) as f64 * scale;
            if x < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// A named generator with its parameters, e.g. `paley:13` or `er:10,0.5,42`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Bipartite(usize, usize),
    Petersen,
    Paley(usize),
    ErdosRenyi { n: usize, p: f64, seed: Option<u64> },
}

impl Family {
    /// `default_seed` applies to `er:n,p` specs that omit the seed.
    pub fn build(&self, default_seed: u64) -> Result<Graph> {
        match *self {
            Family::Complete(n) => complete(n),
            Family::Cycle(n) => cycle(n),
            Family::Path(n) => path(n),
            Family::Bipartite(a, b) => complete_bipartite(a, b),
            Family::Petersen => Ok(petersen()),
            Family::Paley(q) => paley(q),
            Family::ErdosRenyi { n, p, seed } => erdos_renyi(n, p, seed.unwrap_or(default_seed)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Bipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Paley(q) => write!(f, "paley:{q}"),
            Family::ErdosRenyi {
                n,
                p,
                seed: Some(s),
            } => write!(f, "er:{n},{p},{s}"),
            Family::ErdosRenyi { n, p, seed: None } => write!(f, "er:{n},{p}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, args.split(',').map(str::trim).collect::<Vec<_>>()),
            None => (s, Vec::new()),
        };
        let bad = || Error::Input(format!("bad generator spec {s:?}"));
        let int = |a: &str| a.parse::<usize>().map_err(|_| bad());
        let family = match (name.trim(), args.as_slice()) {
            ("complete", [n]) => Family::Complete(int(n)?),
            ("cycle", [n]) => Family::Cycle(int(n)?),
            ("path", [n]) => Family::Path(int(n)?),
            ("bipartite", [a, b]) => Family::Bipartite(int(a)?, int(b)?),
            ("petersen", []) => Family::Petersen,
            ("paley", [q]) => Family::Paley(int(q)?),
            ("er", [n, p, rest @ ..]) if rest.len() <= 1 => Family::ErdosRenyi {
                n: int(n)?,
                p: p.parse().map_err(|_| bad())?,
                seed: match rest {
                    [s] => Some(s.parse().map_err(|_| bad())?),
                    _ => None,
                },
            },
            _ => {
                return Err(Error::Input(format!(
                    "unknown generator spec {s:?}; expected one of complete:n, cycle:n, path:n, \
                 bipartite:a,b, petersen, paley:q, er:n,p[,seed]"
                )))
            }
        };
        Ok(family)
    }
}
