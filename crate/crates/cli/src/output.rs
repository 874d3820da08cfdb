//! Machine-readable result document and the human table renderer.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use cobord::exactalg::{CobordismClass, OmegaIndex};

/// Arbitrary-precision integer rendered as a JSON number when it fits an
/// `i64` and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => serializer.serialize_i64(v),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(|v| JsonInt(BigInt::from(v)))
                .ok_or_else(|| D::Error::custom("integer out of range")),
            serde_json::Value::String(s) => {
                s.parse().map(JsonInt).map_err(|e| D::Error::custom(e))
            }
            _ => Err(D::Error::custom("expected integer or string")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassTerm {
    pub omega: Vec<u32>,
    pub coefficient: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checks {
    pub lower_vanishing: bool,
    pub integrality: bool,
    pub point_independence: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<bool>,
}

/// Full machine-readable result of a genus or exact-route run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub name: String,
    pub dimension: usize,
    pub euler_characteristic: i64,
    pub cobordism_class: Vec<ClassTerm>,
    pub s_numbers: BTreeMap<String, JsonInt>,
    pub chern_numbers: BTreeMap<String, JsonInt>,
    pub checks: Checks,
}

/// Key for the `s_numbers` map: the omega exponents padded to length `n`,
/// comma-joined.
pub fn omega_key(omega: &OmegaIndex, n: usize) -> String {
    omega
        .padded(n)
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Human rendering of a Chern monomial exponent vector: `c1^3*c2` style.
pub fn chern_label(xi: &OmegaIndex) -> String {
    let mut out = String::new();
    for (idx, &e) in xi.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        if e == 1 {
            let _ = write!(out, "c{}", idx + 1);
        } else {
            let _ = write!(out, "c{}^{}", idx + 1, e);
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

pub fn class_terms(class: &CobordismClass, n: usize) -> Vec<ClassTerm> {
    let mut terms: Vec<ClassTerm> = class
        .terms()
        .map(|(w, c)| ClassTerm { omega: w.padded(n), coefficient: JsonInt(c.clone()) })
        .collect();
    terms.sort_by(|a, b| a.omega.cmp(&b.omega));
    terms
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "space: {}", self.name);
        let _ = writeln!(
            out,
            "dimension: {}    euler characteristic: {}",
            self.dimension, self.euler_characteristic
        );
        let _ = writeln!(out, "cobordism class:");
        for t in &self.cobordism_class {
            let omega = t
                .omega
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let _ = writeln!(out, "  s_({omega}) = {}", t.coefficient.0);
        }
        if !self.chern_numbers.is_empty() {
            let _ = writeln!(out, "chern numbers:");
            // render keys as c-monomials, sorted by exponent vector
            let mut entries: Vec<(Vec<u32>, &JsonInt)> = self
                .chern_numbers
                .iter()
                .map(|(k, v)| {
                    let xi: Vec<u32> =
                        k.split(',').map(|p| p.parse().unwrap_or(0)).collect();
                    (xi, v)
                })
                .collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            for (xi, v) in entries {
                let label = chern_label(&OmegaIndex::new(xi));
                let _ = writeln!(out, "  {label} = {}", v.0);
            }
        }
        let _ = writeln!(
            out,
            "checks: lower vanishing {}, integrality {}{}{}",
            verdict(self.checks.lower_vanishing),
            verdict(self.checks.integrality),
            match self.checks.point_independence {
                Some(v) => format!(", point independence {}", verdict(v)),
                None => String::new(),
            },
            match self.checks.cross_check {
                Some(v) => format!(", cross-check {}", verdict(v)),
                None => String::new(),
            },
        );
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}
