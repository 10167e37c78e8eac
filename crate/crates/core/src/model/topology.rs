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

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::ComponentId;
use crate::error::ModelError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Spout,
    Bolt,
}

/// One vertex of the user topology.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub id: ComponentId,
    pub name: String,
    pub kind: ComponentKind,
    /// Key into the profile table. Several components may share one key.
    pub profile_key: String,
    /// Output tuples emitted per input tuple.
    pub alpha: f64,
    #[serde(default)]
    pub downstream: Vec<ComponentId>,
}

impl ComponentSpec {
    pub fn new(
        id: usize,
        name: impl Into<String>,
        kind: ComponentKind,
        profile_key: impl Into<String>,
        alpha: f64,
        downstream: &[usize],
    ) -> Self {
        Self {
            id: ComponentId(id),
            name: name.into(),
            kind,
            profile_key: profile_key.into(),
            alpha,
            downstream: downstream.iter().copied().map(ComponentId).collect(),
        }
    }

    pub fn is_spout(&self) -> bool {
        self.kind == ComponentKind::Spout
    }
}

/// A validated, acyclic user topology.
///
/// Construction computes a deterministic topological order (Kahn's algorithm,
/// lowest ready id first) and the upstream adjacency, both reused by the rate
/// model.
#[derive(Debug, Clone, PartialEq)]
pub struct UserTopology {
    name: String,
    components: Vec<ComponentSpec>,
    spout_ids: Vec<ComponentId>,
    order: Vec<ComponentId>,
    upstream: Vec<Vec<ComponentId>>,
}

impl UserTopology {
    pub fn new(name: impl Into<String>, components: Vec<ComponentSpec>) -> Result<Self, ModelError> {
        validate_topology(&components)?;
        let order = topological_order(&components).expect("validated topology is acyclic");
        let mut upstream = vec![Vec::new(); components.len()];
        for c in &components {
            for d in &c.downstream {
                upstream[d.0].push(c.id);
            }
        }
        let spout_ids = components.iter().filter(|c| c.is_spout()).map(|c| c.id).collect();
        Ok(Self {
            name: name.into(),
            components,
            spout_ids,
            order,
            upstream,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn components(&self) -> &[ComponentSpec] {
        &self.components
    }

    pub fn component(&self, id: ComponentId) -> &ComponentSpec {
        &self.components[id.0]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn spout_ids(&self) -> &[ComponentId] {
        &self.spout_ids
    }

    /// Components in topological order.
    pub fn order(&self) -> &[ComponentId] {
        &self.order
    }

    pub fn upstream(&self, id: ComponentId) -> &[ComponentId] {
        &self.upstream[id.0]
    }

    pub fn find(&self, name: &str) -> Option<ComponentId> {
        self.components.iter().find(|c| c.name == name).map(|c| c.id)
    }

    /// Distinct profile keys used by the topology, sorted.
    pub fn profile_keys(&self) -> Vec<&str> {
        let keys: BTreeSet<&str> = self.components.iter().map(|c| c.profile_key.as_str()).collect();
        keys.into_iter().collect()
    }
}

/// Checks every structural invariant of a user topology.
///
/// Errors name the offending component. Checks run in a fixed order so the
/// reported error is deterministic when several invariants are broken.
pub fn validate_topology(components: &[ComponentSpec]) -> Result<(), ModelError> {
    let n = components.len();
    for (i, c) in components.iter().enumerate() {
        if c.id.0 != i {
            return Err(ModelError::NonDenseComponentIds {
                expected: i,
                found: c.id.0,
            });
        }
        if !c.alpha.is_finite() || c.alpha < 0.0 {
            return Err(ModelError::InvalidAlpha {
                component: c.id,
                alpha: c.alpha,
            });
        }
    }
    for c in components {
        let mut seen = BTreeSet::new();
        for d in &c.downstream {
            if d.0 >= n {
                return Err(ModelError::DanglingEdge { from: c.id, to: d.0 });
            }
            if *d == c.id {
                return Err(ModelError::CycleDetected { component: c.id });
            }
            if !seen.insert(*d) {
                return Err(ModelError::DuplicateEdge { from: c.id, to: *d });
            }
            if components[d.0].is_spout() {
                return Err(ModelError::SpoutHasUpstream { spout: *d, from: c.id });
            }
        }
    }
    if !components.iter().any(ComponentSpec::is_spout) {
        return Err(ModelError::NoSpout);
    }
    if components.iter().all(ComponentSpec::is_spout) {
        return Err(ModelError::NoBolt);
    }
    topological_order(components)?;

    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = components
        .iter()
        .filter(|c| c.is_spout())
        .map(|c| c.id.0)
        .collect();
    for &s in &queue {
        reached[s] = true;
    }
    while let Some(u) = queue.pop_front() {
        for d in &components[u].downstream {
            if !reached[d.0] {
                reached[d.0] = true;
                queue.push_back(d.0);
            }
        }
    }
    if let Some(i) = reached.iter().position(|r| !r) {
        return Err(ModelError::UnreachableBolt {
            component: ComponentId(i),
        });
    }
    Ok(())
}

/// Assumes edges are in range.
fn topological_order(components: &[ComponentSpec]) -> Result<Vec<ComponentId>, ModelError> {
    let n = components.len();
    let mut indegree = vec![0usize; n];
    for c in components {
        for d in &c.downstream {
            indegree[d.0] += 1;
        }
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = ready.pop_first() {
        order.push(ComponentId(u));
        for d in &components[u].downstream {
            indegree[d.0] -= 1;
            if indegree[d.0] == 0 {
                ready.insert(d.0);
            }
        }
    }
    if order.len() < n {
        let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap_or(0);
        return Err(ModelError::CycleDetected {
            component: ComponentId(stuck),
        });
    }
    Ok(order)
}
