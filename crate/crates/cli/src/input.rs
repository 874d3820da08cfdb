//! Space descriptions: builtin shorthand names and the JSON space file.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use serde::{Deserialize, Serialize};

use cobord::rootdata::{
    builtin_space, BlockPartition, Builtin, FixedPointDatum, M10Structure, SpaceSpec,
    StabilityMode, Weight,
};

/// JSON document describing an input manifold. Indices are 1-based in the
/// file and converted internally.
#[derive(Debug, Serialize, Deserialize)]
pub struct SpaceFile {
    pub name: String,
    pub rank: usize,
    pub mode: SpaceMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity_weights: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_points: Option<Vec<FixedPointFile>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceMode {
    UnitaryQuotient,
    Explicit,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FixedPointFile {
    pub sign: i8,
    pub weights: Vec<Vec<i64>>,
}

impl SpaceFile {
    pub fn to_spec(&self, stability: StabilityMode) -> Result<SpaceSpec> {
        match self.mode {
            SpaceMode::UnitaryQuotient => {
                let blocks = self
                    .blocks
                    .clone()
                    .ok_or_else(|| anyhow!("unitary_quotient mode requires \"blocks\""))?;
                let weights = self
                    .identity_weights
                    .clone()
                    .ok_or_else(|| anyhow!("unitary_quotient mode requires \"identity_weights\""))?;
                let bp = BlockPartition::new(blocks, self.rank)
                    .map_err(|e| anyhow!("invalid blocks: {e}"))?;
                let weights = weights.into_iter().map(Weight::new).collect();
                SpaceSpec::unitary_quotient(self.rank, bp, weights, stability)
                    .map_err(|e| anyhow!("invalid space: {e}"))
            }
            SpaceMode::Explicit => {
                let points = self
                    .fixed_points
                    .clone()
                    .ok_or_else(|| anyhow!("explicit mode requires \"fixed_points\""))?;
                let points = points
                    .into_iter()
                    .map(|p| {
                        FixedPointDatum::new(
                            p.sign,
                            p.weights.into_iter().map(Weight::new).collect(),
                        )
                        .map_err(|e| anyhow!("invalid fixed point: {e}"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                SpaceSpec::explicit(self.rank, points).map_err(|e| anyhow!("invalid space: {e}"))
            }
        }
    }
}

impl Clone for FixedPointFile {
    fn clone(&self) -> Self {
        FixedPointFile { sign: self.sign, weights: self.weights.clone() }
    }
}

/// Parses the builtin shorthand grammar
/// `flag:N | grassmann:N:K | cp:N | m10:(J1|J2|J3)`.
pub fn parse_builtin(name: &str) -> Option<Result<Builtin>> {
    let mut parts = name.split(':');
    let head = parts.next()?;
    let parsed = match head {
        "flag" => {
            let n = parts.next()?.parse().ok()?;
            if parts.next().is_some() {
                return Some(Err(anyhow!("flag takes one parameter")));
            }
            Builtin::Flag(n)
        }
        "grassmann" => {
            let n = parts.next()?.parse().ok()?;
            let k = parts.next()?.parse().ok()?;
            if parts.next().is_some() {
                return Some(Err(anyhow!("grassmann takes two parameters")));
            }
            Builtin::Grassmann(n, k)
        }
        "cp" => {
            let n = parts.next()?.parse().ok()?;
            if parts.next().is_some() {
                return Some(Err(anyhow!("cp takes one parameter")));
            }
            Builtin::ProjectiveSpace(n)
        }
        "m10" => {
            let j = match parts.next()? {
                "J1" | "j1" => M10Structure::J1,
                "J2" | "j2" => M10Structure::J2,
                "J3" | "j3" => M10Structure::J3,
                other => return Some(Err(anyhow!("unknown structure {other}; expected J1|J2|J3"))),
            };
            if parts.next().is_some() {
                return Some(Err(anyhow!("m10 takes one parameter")));
            }
            Builtin::M10(j)
        }
        _ => return None,
    };
    Some(Ok(parsed))
}

/// Resolves a CLI input argument: builtin shorthand first, otherwise a path
/// to a space file.
pub fn load_space(input: &str, stability: StabilityMode) -> Result<(String, SpaceSpec)> {
    if let Some(builtin) = parse_builtin(input) {
        let b = builtin?;
        let spec = builtin_space(b).map_err(|e| anyhow!("bad builtin parameters: {e}"))?;
        return Ok((input.to_string(), spec));
    }
    let path = Path::new(input);
    let raw = fs::read_to_string(path).with_context(|| format!("cannot read {input}"))?;
    let file: SpaceFile =
        serde_json::from_str(&raw).with_context(|| format!("cannot parse {input}"))?;
    let spec = file.to_spec(stability)?;
    Ok((file.name, spec))
}
