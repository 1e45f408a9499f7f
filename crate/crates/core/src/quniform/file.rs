//! JSON forms of entourages, chains and finite topologies.

use serde::{Deserialize, Serialize};

use super::{Entourage, FiniteSpace};
use crate::error::{Error, Result};
use crate::words::Alphabet;

/// `points` plus a 0/1 relation matrix; reflexivity is checked, not repaired.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntourageFile {
    pub points: Vec<String>,
    pub relation: Vec<Vec<u8>>,
}

impl EntourageFile {
    pub fn into_entourage(self) -> Result<Entourage> {
        let points = Alphabet::new(&self.points)?;
        let matrix = self
            .relation
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| match v {
                        0 => Ok(false),
                        1 => Ok(true),
                        _ => Err(Error::Parse(format!("relation entries must be 0 or 1, got {v}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Entourage::new(points, matrix)
    }
}

impl Entourage {
    pub fn from_json(text: &str) -> Result<Entourage> {
        let file: EntourageFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("entourage file: {e}")))?;
        file.into_entourage()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("entourage serializes")
    }
}

/// A chain or sequence file: entourages given inline or as paths to entourage files.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFile {
    pub entourages: Vec<ChainEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChainEntry {
    Path(String),
    Inline(EntourageFile),
}

impl ChainFile {
    pub fn from_json(text: &str) -> Result<ChainFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("chain file: {e}")))
    }
}

/// `points` plus a list of open sets; `∅` and the whole set are implied.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopologyFile {
    pub points: Vec<String>,
    pub open_sets: Vec<Vec<String>>,
}

impl FiniteSpace {
    pub fn from_json(text: &str) -> Result<FiniteSpace> {
        let file: TopologyFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("topology file: {e}")))?;
        let points = Alphabet::new(&file.points)?;
        let opens = file
            .open_sets
            .iter()
            .map(|set| set.iter().map(|name| points.lookup(name).map(|g| g.0)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteSpace::new(points, opens)
    }
}
