// Copyright 2026 The hetsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! File formats: JSON input documents, JSON and CSV reports.
//!
//! Field names are listed in `docs/formats.md`. Unknown fields are rejected
//! so that a typo surfaces as a schema error naming the field.

mod tables;

use std::collections::BTreeMap;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub use tables::{
    comparison_csv, import_raw_profiles, report_csv, sweep_csv, SweepRow, RAW_PROFILE_HEADER,
};

use crate::error::{FormatError, ModelError};
use crate::model::{
    Cluster, ComponentSpec, Machine, MachineId, MachineType, ProfileEntry, ProfileTable,
    UserTopology, DEFAULT_CAPACITY,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopologyDoc {
    pub name: String,
    pub components: Vec<ComponentSpec>,
}

impl TopologyDoc {
    pub fn build(self) -> Result<UserTopology, ModelError> {
        UserTopology::new(self.name, self.components)
    }
}

/// A run of `count` identical machines of one type.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineGroup {
    pub type_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub count: usize,
}

/// A machine present in the cluster but not available for scheduling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReservedMachine {
    pub type_id: String,
    #[serde(default)]
    pub label: String,
    #[serde(default)]
    pub role: String,
}

fn one() -> usize {
    1
}

fn is_one(n: &usize) -> bool {
    *n == 1
}

fn default_capacity() -> f64 {
    DEFAULT_CAPACITY
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusterDoc {
    #[serde(default)]
    pub name: String,
    #[serde(default = "default_capacity")]
    pub capacity: f64,
    pub types: Vec<MachineType>,
    /// Schedulable machines; ids are assigned densely in listed order.
    pub machines: Vec<MachineGroup>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reserved: Vec<ReservedMachine>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl ClusterDoc {
    pub fn build(self) -> Result<Cluster, ModelError> {
        let mut machines = Vec::new();
        for group in self.machines {
            for k in 0..group.count {
                let label = match (&group.label, group.count) {
                    (Some(l), 1) => l.clone(),
                    (Some(l), _) => format!("{l}-{k}"),
                    (None, _) => format!("{}-{k}", group.type_id),
                };
                machines.push(Machine {
                    id: MachineId(machines.len()),
                    type_id: group.type_id.clone(),
                    label,
                });
            }
        }
        Cluster::new(self.capacity, self.types, machines)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileUnits {
    /// `e` is already in capacity units per (tuple/s).
    CapacityUnits,
    /// `e` is CPU seconds per tuple; scaled by `capacity / cores` on load.
    SecondsPerTuple,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileRecord {
    pub profile_key: String,
    pub type_id: String,
    pub e: f64,
    #[serde(default)]
    pub met: f64,
}

/// How a capacity-unit table was derived from seconds-per-tuple data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub converted_from: ProfileUnits,
    pub rule: String,
    pub capacity: f64,
    pub cores: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDoc {
    pub units: ProfileUnits,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    /// Seconds since the Unix epoch, when requested at import time.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub entries: Vec<ProfileRecord>,
}

impl ProfileDoc {
    /// Builds the table in capacity units. Seconds-per-tuple slopes are
    /// converted with the cluster's capacity and per-type core counts, so
    /// every entry must name a type the cluster declares.
    pub fn build(self, cluster: &Cluster) -> Result<ProfileTable, ModelError> {
        let mut table = ProfileTable::new();
        for r in self.entries {
            let e = match self.units {
                ProfileUnits::CapacityUnits => r.e,
                ProfileUnits::SecondsPerTuple => {
                    let cores = cluster
                        .types()
                        .iter()
                        .find(|t| t.type_id == r.type_id)
                        .map(|t| t.cores)
                        .ok_or_else(|| ModelError::InvalidProfileEntry {
                            profile_key: r.profile_key.clone(),
                            type_id: r.type_id.clone(),
                            reason: "machine type not declared in the cluster".into(),
                        })?;
                    r.e * cluster.capacity() / cores
                }
            };
            table.insert(r.profile_key, r.type_id, ProfileEntry::new(e, r.met))?;
        }
        Ok(table)
    }

    pub fn from_table(table: &ProfileTable) -> Self {
        Self {
            units: ProfileUnits::CapacityUnits,
            provenance: None,
            note: String::new(),
            generated_at: None,
            entries: table
                .iter()
                .map(|(k, t, e)| ProfileRecord {
                    profile_key: k.to_string(),
                    type_id: t.to_string(),
                    e: e.e,
                    met: e.met,
                })
                .collect(),
        }
    }
}

/// Parses a JSON document; `document` names it in error messages.
pub fn parse<T: DeserializeOwned>(text: &str, document: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Schema {
        document: document.to_string(),
        message: e.to_string(),
    })
}

pub fn read_text(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), FormatError> {
    std::fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_doc<T: DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    parse(&read_text(path)?, &path.display().to_string())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn load_topology(path: &Path) -> crate::Result<UserTopology> {
    Ok(read_doc::<TopologyDoc>(path)?.build()?)
}

pub fn load_cluster(path: &Path) -> crate::Result<Cluster> {
    Ok(read_doc::<ClusterDoc>(path)?.build()?)
}

pub fn load_profiles(path: &Path, cluster: &Cluster) -> crate::Result<ProfileTable> {
    Ok(read_doc::<ProfileDoc>(path)?.build(cluster)?)
}
