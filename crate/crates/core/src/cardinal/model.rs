use std::collections::BTreeMap;

use serde::Deserialize;

use super::{CardValue, Cardinal, Ordinal};
use crate::error::{Error, Result};

/// How `2^κ` is evaluated for infinite `κ`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub enum ContinuumModel {
    /// `2^ℵ_α = ℵ_{α+1}` everywhere.
    #[default]
    Gch,
    /// `2^ℵ_α = ℵ_β` at finitely many regular `ℵ_α`, keyed by `α`.
    Custom(BTreeMap<Ordinal, Ordinal>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    gch: bool,
    #[serde(default)]
    continuum: BTreeMap<String, OrdinalText>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OrdinalText {
    Text(String),
    Number(u64),
}

impl OrdinalText {
    fn parse(&self) -> Result<Ordinal> {
        match self {
            OrdinalText::Text(s) => s.parse(),
            OrdinalText::Number(n) => Ok(Ordinal::natural(*n)),
        }
    }
}

impl ContinuumModel {
    /// Validates the assignment: each key indexes a regular cardinal, each
    /// value satisfies `cf(2^κ) > κ`, and `κ < λ ⇒ 2^κ ≤ 2^λ`.
    pub fn custom(assignment: impl IntoIterator<Item = (Ordinal, Ordinal)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, v) in assignment {
            let kappa = Cardinal::Aleph(k.clone());
            if !kappa.is_regular() {
                return Err(Error::Model(format!(
                    "{kappa} is singular; only regular cardinals can be assigned"
                )));
            }
            let value = Cardinal::Aleph(v.clone());
            if !super::konig_holds(&kappa, &value) {
                return Err(Error::Model(format!("2^{kappa} = {value} violates cf(2^κ) > κ")));
            }
            if map.insert(k, v).is_some() {
                return Err(Error::Model(format!("{kappa} assigned twice")));
            }
        }
        let values: Vec<&Ordinal> = map.values().collect();
        if let Some(w) = values.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::Model(format!(
                "assignment is not monotone: aleph({}) is followed by the smaller aleph({})",
                w[0], w[1]
            )));
        }
        Ok(ContinuumModel::Custom(map))
    }

    /// Reads `{"gch": bool, "continuum": {"α": "β", …}}`. With `"gch": true`
    /// the continuum table must be empty.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| Error::Model(format!("bad model file: {e}")))?;
        if file.gch {
            if !file.continuum.is_empty() {
                return Err(Error::Model("a GCH model takes no continuum table".into()));
            }
            return Ok(ContinuumModel::Gch);
        }
        let pairs = file
            .continuum
            .iter()
            .map(|(k, v)| Ok((k.parse()?, v.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        ContinuumModel::custom(pairs)
    }

    pub fn is_gch(&self) -> bool {
        matches!(self, ContinuumModel::Gch)
    }

    /// `2^ℵ_α`. For a custom model without an entry at `α`, the bounds are
    /// `ℵ_{α+1}` raised by monotonicity and König below, and the nearest
    /// assigned value above.
    pub fn continuum(&self, alpha: &Ordinal) -> CardValue {
        let map = match self {
            ContinuumModel::Gch => return CardValue::Exact(Cardinal::Aleph(alpha.succ())),
            ContinuumModel::Custom(map) => map,
        };
        if let Some(v) = map.get(alpha) {
            return CardValue::Exact(Cardinal::Aleph(v.clone()));
        }
        let below = map.range(..alpha).map(|(_, v)| v).max();
        let mut lower = match below {
            Some(v) if *v > alpha.succ() => v.clone(),
            _ => alpha.succ(),
        };
        // A limit index has cofinality ℵ₀ ≤ κ, which König forbids for 2^κ.
        if lower.is_limit() {
            lower = lower.succ();
        }
        let upper = map.range(alpha..).map(|(_, v)| v).min().cloned();
        CardValue::between(Cardinal::Aleph(lower), upper.map(Cardinal::Aleph))
    }
}
