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

use super::{Cluster, ComponentId, MachineId, ProfileEntry, ProfileTable, UserTopology};
use crate::error::ModelError;

/// A topology, a cluster and the profiles that connect them, validated
/// together and resolved into dense `(component, machine)` lookups.
#[derive(Debug, Clone)]
pub struct Problem {
    topology: UserTopology,
    cluster: Cluster,
    profiles: ProfileTable,
    // [component][machine]
    entries: Vec<Vec<ProfileEntry>>,
}

impl Problem {
    pub fn new(topology: UserTopology, cluster: Cluster, profiles: ProfileTable) -> Result<Self, ModelError> {
        profiles.check_coverage(&topology, &cluster)?;
        let entries = topology
            .components()
            .iter()
            .map(|c| {
                cluster
                    .machines()
                    .iter()
                    .map(|m| profiles.get(&c.profile_key, &m.type_id).copied())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            topology,
            cluster,
            profiles,
            entries,
        })
    }

    pub fn topology(&self) -> &UserTopology {
        &self.topology
    }

    pub fn cluster(&self) -> &Cluster {
        &self.cluster
    }

    pub fn profiles(&self) -> &ProfileTable {
        &self.profiles
    }

    pub fn capacity(&self) -> f64 {
        self.cluster.capacity()
    }

    pub fn entry(&self, component: ComponentId, machine: MachineId) -> &ProfileEntry {
        &self.entries[component.0][machine.0]
    }
}
