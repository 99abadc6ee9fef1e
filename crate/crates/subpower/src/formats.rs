//! On-disk JSON formats.
//!
//! Semigroup: `{"names": [...], "table": [[...]], "identity": int|null,
//! "zero": int|null}` with the table row index being the left factor.
//!
//! Rees structure: `{"matrix": [[0|1, ...], ...], "adjoin_identity": bool}`.
//!
//! SMP instance: `{"semigroup": <semigroup JSON | rees JSON | catalog
//! name>, "n": int, "generators": [[int, ...], ...], "target": [int, ...]}`.
//!
//! Solver output: `{"member": bool, "witness": [int, ...]|null,
//! "closure_size": int}`.

use crate::catalog;
use crate::error::{Error, Result};
use crate::rees::ReesStructure;
use crate::semigroup::{AssocCheck, FiniteSemigroup};
use crate::smp::SmpInstance;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemigroupJson {
    #[serde(default)]
    pub names: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: Option<usize>,
    #[serde(default)]
    pub zero: Option<usize>,
}

impl SemigroupJson {
    pub fn from_semigroup(sg: &FiniteSemigroup) -> Self {
        SemigroupJson {
            names: Some(sg.names().to_vec()),
            table: sg.rows(),
            identity: sg.identity(),
            zero: sg.zero(),
        }
    }

    pub fn to_semigroup(&self) -> Result<FiniteSemigroup> {
        let sg = FiniteSemigroup::from_rows(&self.table, self.names.clone(), AssocCheck::Auto)?;
        // declared identity and zero are re-derived; reject mismatches
        if self.identity.is_some() && self.identity != sg.identity() {
            return Err(Error::input(format!(
                "declared identity {:?} is not the identity of the table",
                self.identity
            )));
        }
        if self.zero.is_some() && self.zero != sg.zero() {
            return Err(Error::input(format!(
                "declared zero {:?} is not the zero of the table",
                self.zero
            )));
        }
        Ok(sg)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReesJson {
    pub matrix: Vec<Vec<u8>>,
    #[serde(default)]
    pub adjoin_identity: bool,
}

impl ReesJson {
    pub fn from_structure(rees: &ReesStructure) -> Self {
        ReesJson {
            matrix: rees.matrix_rows(),
            adjoin_identity: rees.adjoins_identity(),
        }
    }

    pub fn to_structure(&self) -> Result<ReesStructure> {
        ReesStructure::new(self.matrix.clone(), self.adjoin_identity)
    }
}

/// The `semigroup` field of an instance file: a catalog name, a Rees
/// structure, or a full table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AmbientSpec {
    Catalog(String),
    Rees(ReesJson),
    Table(SemigroupJson),
}

impl AmbientSpec {
    /// Resolves to a semigroup plus the Rees structure when one is known.
    pub fn resolve(&self) -> Result<(FiniteSemigroup, Option<ReesStructure>)> {
        match self {
            AmbientSpec::Catalog(name) => {
                let entry = catalog::entry(name)?;
                Ok((entry.semigroup, entry.rees))
            }
            AmbientSpec::Rees(rj) => {
                let rees = rj.to_structure()?;
                let sg = rees.build()?;
                Ok((sg, Some(rees)))
            }
            AmbientSpec::Table(sj) => Ok((sj.to_semigroup()?, None)),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceJson {
    pub semigroup: AmbientSpec,
    pub n: usize,
    pub generators: Vec<Vec<usize>>,
    pub target: Vec<usize>,
}

impl InstanceJson {
    /// Serializes an instance, embedding the ambient as a full table.
    pub fn from_instance(inst: &SmpInstance) -> Self {
        InstanceJson {
            semigroup: AmbientSpec::Table(SemigroupJson::from_semigroup(inst.ambient())),
            n: inst.n(),
            generators: inst
                .generators()
                .iter()
                .map(|g| g.coords().to_vec())
                .collect(),
            target: inst.target().coords().to_vec(),
        }
    }

    /// Like [`from_instance`](Self::from_instance) but with a compact
    /// ambient reference instead of the embedded table.
    pub fn with_ambient(inst: &SmpInstance, ambient: AmbientSpec) -> Self {
        InstanceJson {
            semigroup: ambient,
            n: inst.n(),
            generators: inst
                .generators()
                .iter()
                .map(|g| g.coords().to_vec())
                .collect(),
            target: inst.target().coords().to_vec(),
        }
    }

    /// Resolves to a solvable instance plus the declared Rees structure.
    pub fn to_instance(&self) -> Result<(SmpInstance, Option<ReesStructure>)> {
        let (sg, rees) = self.semigroup.resolve()?;
        for g in &self.generators {
            if g.len() != self.n {
                return Err(Error::input(format!(
                    "generator of length {} in an instance with n = {}",
                    g.len(),
                    self.n
                )));
            }
        }
        if self.target.len() != self.n {
            return Err(Error::input(format!(
                "target has length {}, expected n = {}",
                self.target.len(),
                self.n
            )));
        }
        let inst = SmpInstance::from_coords(sg, &self.generators, self.target.clone())?;
        Ok((inst, rees))
    }
}
