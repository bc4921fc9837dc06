//! Named, swappable implementations. Every family has a fast default and a
//! brute-force oracle with the same contract, so callers (and the CLI's
//! `--oracle` switch) can run either and compare.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{brute_force_is_stag, brute_force_stag, brute_force_trees, MAX_PREIMAGE_N};
use crate::factor::{prime_factorize, DEFAULT_FACTOR_LIMIT};
use crate::recognition::{invert_with, InvertOptions, Inversion};
use crate::spanning::{count_spanning_trees, enumerate_spanning_trees, SpanningTree};
use crate::stag::{build_stag, StagGraph};

pub trait TreeEnumerator: Sync {
    fn name(&self) -> &'static str;
    fn enumerate(&self, g: &Graph, limit: usize) -> Result<Vec<SpanningTree>>;
}

pub trait StagBuilder: Sync {
    fn name(&self) -> &'static str;
    fn build(&self, g: &Graph, max_trees: usize) -> Result<StagGraph>;
}

pub trait TreeCounter: Sync {
    fn name(&self) -> &'static str;
    fn count(&self, g: &Graph) -> Result<BigUint>;
}

/// Returns a verified minimal preimage, or `NotAStag`.
pub trait Recognizer: Sync {
    fn name(&self) -> &'static str;
    fn recognize(&self, h: &Graph) -> Result<Inversion>;
}

struct Exchange;
struct SubsetScan;
struct Kirchhoff;
struct ByEnumeration;
struct Structural;
struct Exhaustive;

impl TreeEnumerator for Exchange {
    fn name(&self) -> &'static str {
        "exchange"
    }
    fn enumerate(&self, g: &Graph, limit: usize) -> Result<Vec<SpanningTree>> {
        enumerate_spanning_trees(g, limit)
    }
}

impl TreeEnumerator for SubsetScan {
    fn name(&self) -> &'static str {
        "subset"
    }
    fn enumerate(&self, g: &Graph, limit: usize) -> Result<Vec<SpanningTree>> {
        let trees = brute_force_trees(g)?;
        if trees.len() > limit {
            return Err(Error::TooManyTrees {
                count: trees.len().to_string(),
                limit,
            });
        }
        Ok(trees)
    }
}

impl StagBuilder for Exchange {
    fn name(&self) -> &'static str {
        "exchange"
    }
    fn build(&self, g: &Graph, max_trees: usize) -> Result<StagGraph> {
        build_stag(g, max_trees)
    }
}

impl StagBuilder for SubsetScan {
    fn name(&self) -> &'static str {
        "pairwise"
    }
    fn build(&self, g: &Graph, max_trees: usize) -> Result<StagGraph> {
        let s = brute_force_stag(g)?;
        if s.vertex_count() > max_trees {
            return Err(Error::TooManyTrees {
                count: s.vertex_count().to_string(),
                limit: max_trees,
            });
        }
        Ok(s)
    }
}

impl TreeCounter for Kirchhoff {
    fn name(&self) -> &'static str {
        "kirchhoff"
    }
    fn count(&self, g: &Graph) -> Result<BigUint> {
        Ok(count_spanning_trees(g))
    }
}

impl TreeCounter for ByEnumeration {
    fn name(&self) -> &'static str {
        "enumerate"
    }
    fn count(&self, g: &Graph) -> Result<BigUint> {
        Ok(brute_force_trees(g)?.len().into())
    }
}

impl Recognizer for Structural {
    fn name(&self) -> &'static str {
        "structural"
    }
    fn recognize(&self, h: &Graph) -> Result<Inversion> {
        invert_with(h, &InvertOptions::default())
    }
}

impl Recognizer for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }
    fn recognize(&self, h: &Graph) -> Result<Inversion> {
        let graph = brute_force_is_stag(h, MAX_PREIMAGE_N)?.ok_or_else(|| {
            Error::NotAStag(format!("no bridgeless preimage on at most {MAX_PREIMAGE_N} vertices"))
        })?;
        let factor_sizes = prime_factorize(h, DEFAULT_FACTOR_LIMIT)?
            .factors
            .iter()
            .map(Graph::vertex_count)
            .collect();
        Ok(Inversion { graph, factor_sizes })
    }
}

static ENUMERATORS: [&dyn TreeEnumerator; 2] = [&Exchange, &SubsetScan];
static BUILDERS: [&dyn StagBuilder; 2] = [&Exchange, &SubsetScan];
static COUNTERS: [&dyn TreeCounter; 2] = [&Kirchhoff, &ByEnumeration];
static RECOGNIZERS: [&dyn Recognizer; 2] = [&Structural, &Exhaustive];

/// Strategy lookup. Index 0 of each family is the default, index 1 the oracle.
#[derive(Clone, Copy, Debug, Default)]
pub struct Registry {
    oracle: bool,
}

fn pick<T: ?Sized>(
    family: &'static str,
    all: &[&'static T],
    name: Option<&str>,
    oracle: bool,
    name_of: impl Fn(&T) -> &'static str,
) -> Result<&'static T> {
    match name {
        None => Ok(all[oracle as usize]),
        Some(name) => all
            .iter()
            .copied()
            .find(|s| name_of(s) == name)
            .ok_or_else(|| Error::UnknownStrategy {
                family,
                name: name.to_string(),
            }),
    }
}

impl Registry {
    /// Registry whose defaults are the fast implementations, or the oracles.
    pub fn new(oracle: bool) -> Self {
        Registry { oracle }
    }

    pub fn enumerator(&self, name: Option<&str>) -> Result<&'static dyn TreeEnumerator> {
        pick("tree enumeration", &ENUMERATORS, name, self.oracle, |s| s.name())
    }

    pub fn builder(&self, name: Option<&str>) -> Result<&'static dyn StagBuilder> {
        pick("STAG construction", &BUILDERS, name, self.oracle, |s| s.name())
    }

    pub fn counter(&self, name: Option<&str>) -> Result<&'static dyn TreeCounter> {
        pick("tree counting", &COUNTERS, name, self.oracle, |s| s.name())
    }

    pub fn recognizer(&self, name: Option<&str>) -> Result<&'static dyn Recognizer> {
        pick("recognition", &RECOGNIZERS, name, self.oracle, |s| s.name())
    }

    /// `(family, [names])` for help output.
    pub fn catalogue() -> Vec<(&'static str, Vec<&'static str>)> {
        vec![
            ("trees", ENUMERATORS.iter().map(|s| s.name()).collect()),
            ("aux", BUILDERS.iter().map(|s| s.name()).collect()),
            ("count", COUNTERS.iter().map(|s| s.name()).collect()),
            ("invert", RECOGNIZERS.iter().map(|s| s.name()).collect()),
        ]
    }
}
