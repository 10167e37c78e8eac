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

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Cluster, UserTopology};
use crate::error::ModelError;

/// Linear CPU model of one task kind on one machine type.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileEntry {
    /// Capacity units consumed per tuple/second of input.
    pub e: f64,
    /// Rate-independent overhead, in capacity units.
    pub met: f64,
}

impl ProfileEntry {
    pub fn new(e: f64, met: f64) -> Self {
        Self { e, met }
    }

    /// Predicted capacity units used by one task at input rate `ir`.
    pub fn tcu(&self, ir: f64) -> f64 {
        self.e * ir + self.met
    }
}

/// Profiling data keyed by `(profile_key, type_id)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ProfileTable {
    entries: BTreeMap<(String, String), ProfileEntry>,
}

impl ProfileTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(
        &mut self,
        profile_key: impl Into<String>,
        type_id: impl Into<String>,
        entry: ProfileEntry,
    ) -> Result<(), ModelError> {
        let profile_key = profile_key.into();
        let type_id = type_id.into();
        let invalid = |reason: &str| ModelError::InvalidProfileEntry {
            profile_key: profile_key.clone(),
            type_id: type_id.clone(),
            reason: reason.to_string(),
        };
        if !entry.e.is_finite() || entry.e <= 0.0 {
            return Err(invalid("slope e must be finite and > 0"));
        }
        if !entry.met.is_finite() || entry.met < 0.0 {
            return Err(invalid("met must be finite and >= 0"));
        }
        if self.entries.contains_key(&(profile_key.clone(), type_id.clone())) {
            return Err(ModelError::DuplicateProfileEntry { profile_key, type_id });
        }
        self.entries.insert((profile_key, type_id), entry);
        Ok(())
    }

    pub fn get(&self, profile_key: &str, type_id: &str) -> Result<&ProfileEntry, ModelError> {
        self.entries
            .get(&(profile_key.to_string(), type_id.to_string()))
            .ok_or_else(|| ModelError::MissingProfileEntry {
                profile_key: profile_key.to_string(),
                type_id: type_id.to_string(),
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, &ProfileEntry)> {
        self.entries.iter().map(|((k, t), e)| (k.as_str(), t.as_str(), e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every profile key of the topology must have an entry for every machine
    /// type present in the cluster, and no overhead may reach the capacity.
    pub fn check_coverage(&self, topology: &UserTopology, cluster: &Cluster) -> Result<(), ModelError> {
        for key in topology.profile_keys() {
            for t in cluster.present_types() {
                let type_id = &cluster.types()[t].type_id;
                let entry = self.get(key, type_id)?;
                if entry.met >= cluster.capacity() {
                    return Err(ModelError::InvalidProfileEntry {
                        profile_key: key.to_string(),
                        type_id: type_id.clone(),
                        reason: format!("met {} must be below capacity {}", entry.met, cluster.capacity()),
                    });
                }
            }
        }
        Ok(())
    }
}

/// `e * ir + met` for the entry of `(profile_key, type_id)`.
pub fn predict_tcu(
    profiles: &ProfileTable,
    profile_key: &str,
    type_id: &str,
    ir: f64,
) -> Result<f64, ModelError> {
    Ok(profiles.get(profile_key, type_id)?.tcu(ir))
}
