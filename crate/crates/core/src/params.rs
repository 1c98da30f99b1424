//! Generation parameters shared by both generators.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::DEFAULT_SPLIT_PROBABILITY;

/// The generator's random source. Seeded through `SeedableRng::seed_from_u64`.
pub type GenRng = ChaCha8Rng;

/// Recorded in output metadata so runs can be reproduced elsewhere.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng/rand_chacha-0.3/seed_from_u64";

/// Graphs up to this many vertices are certified by the oracle in `auto` mode.
pub const DEFAULT_GATE_THRESHOLD: usize = 64;

pub fn rng_from_seed(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Tree, square layout, then case-driven edge insertion.
    Separator,
    /// Random tree plus repeated two-pair insertion.
    TwoPair,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Separator => "separator",
            Method::TwoPair => "two-pair",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "separator" => Ok(Method::Separator),
            "two-pair" => Ok(Method::TwoPair),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// When to certify accepted insertions with the recognizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GateMode {
    On,
    Off,
    /// On for graphs with at most [`DEFAULT_GATE_THRESHOLD`] vertices.
    Auto,
}

impl GateMode {
    pub fn enabled_for(self, n: usize) -> bool {
        match self {
            GateMode::On => true,
            GateMode::Off => false,
            GateMode::Auto => n <= DEFAULT_GATE_THRESHOLD,
        }
    }
}

impl FromStr for GateMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "on" => Ok(GateMode::On),
            "off" => Ok(GateMode::Off),
            "auto" => Ok(GateMode::Auto),
            other => Err(format!("unknown oracle gate mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ParamError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("m = {m} is below the spanning-tree minimum {min}")]
    TooFewEdges { m: usize, min: usize },
    #[error("m = {m} exceeds the maximum {max} edges on n vertices")]
    TooManyEdges { m: usize, max: usize },
    #[error("split probability {0} is outside [0, 1]")]
    SplitProbability(f64),
}

/// Checks `n ≥ 1` and `n - 1 ≤ m ≤ n(n-1)/2`.
pub fn validate(n: usize, m: usize) -> Result<(), ParamError> {
    if n == 0 {
        return Err(ParamError::NoVertices);
    }
    let max = n * (n - 1) / 2;
    if m < n - 1 {
        return Err(ParamError::TooFewEdges { m, min: n - 1 });
    }
    if m > max {
        return Err(ParamError::TooManyEdges { m, max });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub method: Method,
    pub gate: GateMode,
    /// Probability that a tree growth step splits an edge.
    pub split_probability: f64,
}

impl GenParams {
    pub fn new(n: usize, m: usize, seed: u64) -> Self {
        GenParams {
            n,
            m,
            seed,
            method: Method::Separator,
            gate: GateMode::Auto,
            split_probability: DEFAULT_SPLIT_PROBABILITY,
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn with_gate(mut self, gate: GateMode) -> Self {
        self.gate = gate;
        self
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if !(0.0..=1.0).contains(&self.split_probability) {
            return Err(ParamError::SplitProbability(self.split_probability));
        }
        validate(self.n, self.m)
    }
}
