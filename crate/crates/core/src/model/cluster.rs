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

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::MachineId;
use crate::error::ModelError;

/// Capacity budget of every machine, in capacity units.
pub const DEFAULT_CAPACITY: f64 = 100.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MachineType {
    pub type_id: String,
    #[serde(default)]
    pub label: String,
    /// Used only when converting seconds-per-tuple profiles.
    #[serde(default = "default_cores")]
    pub cores: f64,
}

fn default_cores() -> f64 {
    1.0
}

impl MachineType {
    pub fn new(type_id: impl Into<String>, label: impl Into<String>) -> Self {
        Self {
            type_id: type_id.into(),
            label: label.into(),
            cores: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Machine {
    pub id: MachineId,
    pub type_id: String,
    #[serde(default)]
    pub label: String,
}

/// The schedulable machines. Every machine shares one capacity budget;
/// heterogeneity lives in the profile slopes.
#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    capacity: f64,
    types: Vec<MachineType>,
    machines: Vec<Machine>,
    type_of: Vec<usize>,
}

impl Cluster {
    pub fn new(
        capacity: f64,
        types: Vec<MachineType>,
        machines: Vec<Machine>,
    ) -> Result<Self, ModelError> {
        if !capacity.is_finite() || capacity <= 0.0 {
            return Err(ModelError::InvalidCapacity(capacity));
        }
        if machines.is_empty() {
            return Err(ModelError::EmptyCluster);
        }
        let mut seen = BTreeSet::new();
        for t in &types {
            if !seen.insert(t.type_id.as_str()) {
                return Err(ModelError::DuplicateMachineType(t.type_id.clone()));
            }
            if !t.cores.is_finite() || t.cores <= 0.0 {
                return Err(ModelError::InvalidCores {
                    type_id: t.type_id.clone(),
                    cores: t.cores,
                });
            }
        }
        let mut type_of = Vec::with_capacity(machines.len());
        for (i, m) in machines.iter().enumerate() {
            if m.id.0 != i {
                return Err(ModelError::NonDenseMachineIds {
                    expected: i,
                    found: m.id.0,
                });
            }
            let t = types
                .iter()
                .position(|t| t.type_id == m.type_id)
                .ok_or_else(|| ModelError::UnknownMachineType {
                    machine: m.id,
                    type_id: m.type_id.clone(),
                })?;
            type_of.push(t);
        }
        Ok(Self {
            capacity,
            types,
            machines,
            type_of,
        })
    }

    /// Builds a cluster with `counts[i]` machines of `types[i]`, ids assigned
    /// type by type.
    pub fn from_counts(
        capacity: f64,
        types: Vec<MachineType>,
        counts: &[usize],
    ) -> Result<Self, ModelError> {
        let mut machines = Vec::new();
        for (t, &count) in types.iter().zip(counts) {
            for k in 0..count {
                machines.push(Machine {
                    id: MachineId(machines.len()),
                    type_id: t.type_id.clone(),
                    label: format!("{}-{}", t.type_id, k + 1),
                });
            }
        }
        Self::new(capacity, types, machines)
    }

    pub fn capacity(&self) -> f64 {
        self.capacity
    }

    pub fn types(&self) -> &[MachineType] {
        &self.types
    }

    pub fn machines(&self) -> &[Machine] {
        &self.machines
    }

    pub fn len(&self) -> usize {
        self.machines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.machines.is_empty()
    }

    pub fn machine_ids(&self) -> impl Iterator<Item = MachineId> + '_ {
        (0..self.machines.len()).map(MachineId)
    }

    /// Index into [`Cluster::types`] of a machine's type.
    pub fn type_index(&self, machine: MachineId) -> usize {
        self.type_of[machine.0]
    }

    pub fn machine_type(&self, machine: MachineId) -> &MachineType {
        &self.types[self.type_of[machine.0]]
    }

    /// Indices of machine types that have at least one machine.
    pub fn present_types(&self) -> Vec<usize> {
        let present: BTreeSet<usize> = self.type_of.iter().copied().collect();
        present.into_iter().collect()
    }
}
