//! JSON lattice documents:
//! `{"n": 4, "covers": [[0,1],...], "labels": [...], "involution": [...], "brouwer": [...]}`.
//!
//! `labels`, `involution` and `brouwer` are optional; unknown fields are
//! rejected. Output has a fixed field order and sorted covers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::involution::{InvolutionError, InvolutionLattice, Structure};
use crate::order::{FiniteLattice, LatticeError};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error("a Brouwer complement needs an involution")]
    BrouwerWithoutInvolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDocument {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brouwer: Option<Vec<usize>>,
}

impl LatticeDocument {
    pub fn from_structure(s: &Structure) -> Self {
        let l = s.lattice();
        LatticeDocument {
            n: l.n(),
            covers: l.covers().into_iter().map(|(x, y)| [x, y]).collect(),
            labels: l.labels().map(<[String]>::to_vec),
            involution: s.inv().map(<[usize]>::to_vec),
            brouwer: s.brouwer().map(<[usize]>::to_vec),
        }
    }

    pub fn to_structure(&self) -> Result<Structure, DocumentError> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[x, y]| (x, y)).collect();
        let mut lattice = FiniteLattice::from_cover_relation(self.n, &covers)?;
        if let Some(labels) = &self.labels {
            lattice = lattice.with_labels(labels.clone())?;
        }
        match (&self.involution, &self.brouwer) {
            (None, None) => Ok(Structure::Lattice(lattice)),
            (None, Some(_)) => Err(DocumentError::BrouwerWithoutInvolution),
            (Some(inv), brouwer) => {
                let mut s = InvolutionLattice::new(lattice, inv.clone())?;
                if let Some(b) = brouwer {
                    s = s.with_brouwer(b.clone())?;
                }
                Ok(Structure::Involution(s))
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("document serializes");
        out.push('\n');
        out
    }
}

pub fn load_structure(text: &str) -> Result<Structure, DocumentError> {
    LatticeDocument::from_json(text)?.to_structure()
}

pub fn dump_structure(s: &Structure) -> String {
    LatticeDocument::from_structure(s).to_json()
}
