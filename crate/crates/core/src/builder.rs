//! Builder strings `name:key=val,...` naming reproducible instances.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::complex::Face;
use crate::error::{Error, Result};
use crate::geom::{
    connected_sum, cross_polytope, cyclic_polytope, join_of_simplex_boundary_pair, random_polytope, simplex_boundary,
    stacked_polytope, stellar_cross, EmbeddedComplex,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builder {
    Simplex { d: usize },
    Cross { d: usize },
    Cyclic { d: usize, n: usize },
    Stacked { d: usize, n: usize },
    StellarCross { d: usize },
    /// `∂Δ^k * ∂Δ^l`; `l` defaults to `k`.
    JoinSimplices { k: usize, l: usize, seed: u64 },
    /// `count` copies of the `d`-cross-polytope, each new copy glued on the
    /// lexicographically last facet of the sum so far.
    ConnectedSum { d: usize, count: usize },
    /// Random paraboloid hull with `stack` stacked facets.
    Random { d: usize, n: usize, stack: usize, seed: u64 },
}

impl Builder {
    pub fn build(&self) -> Result<EmbeddedComplex> {
        match *self {
            Builder::Simplex { d } => simplex_boundary(d),
            Builder::Cross { d } => cross_polytope(d),
            Builder::Cyclic { d, n } => cyclic_polytope(d, n),
            Builder::Stacked { d, n } => stacked_polytope(d, n),
            Builder::StellarCross { d } => stellar_cross(d),
            Builder::JoinSimplices { k, l, seed } => join_of_simplex_boundary_pair(k, l, seed),
            Builder::ConnectedSum { d, count } => {
                if count == 0 {
                    return Err(Error::InvalidParameter("connected-sum needs count >= 1".into()));
                }
                let piece = cross_polytope(d)?;
                let glue = Face::from_vertices(1..=d as u32);
                let mut ec = piece.clone();
                for _ in 1..count {
                    let last = *ec.complex.facets().last().unwrap();
                    ec = connected_sum(&ec, &piece, last, glue)?;
                }
                Ok(ec)
            }
            Builder::Random { d, n, stack, seed } => random_polytope(d, n, stack, seed),
        }
    }
}

impl fmt::Display for Builder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builder::Simplex { d } => write!(f, "simplex:d={d}"),
            Builder::Cross { d } => write!(f, "cross:d={d}"),
            Builder::Cyclic { d, n } => write!(f, "cyclic:d={d},n={n}"),
            Builder::Stacked { d, n } => write!(f, "stacked:d={d},n={n}"),
            Builder::StellarCross { d } => write!(f, "stellar-cross:d={d}"),
            Builder::JoinSimplices { k, l, seed } if k == l => write!(f, "join-simplices:k={k},seed={seed}"),
            Builder::JoinSimplices { k, l, seed } => write!(f, "join-simplices:k={k},l={l},seed={seed}"),
            Builder::ConnectedSum { d, count } => write!(f, "connected-sum:d={d},count={count}"),
            Builder::Random { d, n, stack, seed } => write!(f, "random:d={d},n={n},stack={stack},seed={seed}"),
        }
    }
}

struct Params<'a> {
    spec: &'a str,
    map: BTreeMap<&'a str, &'a str>,
}

impl<'a> Params<'a> {
    fn take<T: FromStr>(&mut self, key: &str, default: Option<T>) -> Result<T> {
        match self.map.remove(key) {
            Some(v) => v.parse().map_err(|_| Error::Parse(format!("{}: bad value {v:?} for {key}", self.spec))),
            None => default.ok_or_else(|| Error::Parse(format!("{}: missing parameter {key}", self.spec))),
        }
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            Some(k) => Err(Error::Parse(format!("{}: unknown parameter {k}", self.spec))),
            None => Ok(()),
        }
    }
}

impl FromStr for Builder {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let mut map = BTreeMap::new();
        for kv in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("{spec}: expected key=val, got {kv:?}")))?;
            if map.insert(k.trim(), v.trim()).is_some() {
                return Err(Error::Parse(format!("{spec}: repeated parameter {k}")));
            }
        }
        let mut p = Params { spec, map };
        let b = match name {
            "simplex" => Builder::Simplex { d: p.take("d", None)? },
            "cross" => Builder::Cross { d: p.take("d", None)? },
            "cyclic" => Builder::Cyclic { d: p.take("d", None)?, n: p.take("n", None)? },
            "stacked" => Builder::Stacked { d: p.take("d", None)?, n: p.take("n", None)? },
            "stellar-cross" => Builder::StellarCross { d: p.take("d", None)? },
            "join-simplices" => {
                let k = p.take("k", None)?;
                Builder::JoinSimplices { k, l: p.take("l", Some(k))?, seed: p.take("seed", Some(0))? }
            }
            "connected-sum" => Builder::ConnectedSum { d: p.take("d", None)?, count: p.take("count", None)? },
            "random" => Builder::Random {
                d: p.take("d", Some(3))?,
                n: p.take("n", None)?,
                stack: p.take("stack", Some(0))?,
                seed: p.take("seed", Some(0))?,
            },
            other => return Err(Error::Parse(format!("unknown builder {other:?}"))),
        };
        p.finish()?;
        Ok(b)
    }
}

/// Parses and builds in one step.
pub fn build(spec: &str) -> Result<EmbeddedComplex> {
    spec.parse::<Builder>()?.build()
}
