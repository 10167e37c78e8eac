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

use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::{Cluster, ComponentId, MachineId, TaskId, UserTopology};
use crate::error::ModelError;

/// An execution graph plus its placement: how many instances each component
/// has, where each task runs, and the topology input rate.
///
/// Tasks are numbered component-major: all instances of component 0 first,
/// then component 1, and so on (see [`ExecutionPlan::task_index`]).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExecutionPlan {
    pub instance_counts: Vec<u32>,
    pub assignment: Vec<MachineId>,
    pub input_rate: f64,
}

impl ExecutionPlan {
    pub fn new(
        instance_counts: Vec<u32>,
        assignment: Vec<MachineId>,
        input_rate: f64,
    ) -> Result<Self, ModelError> {
        let plan = Self {
            instance_counts,
            assignment,
            input_rate,
        };
        plan.check_shape()?;
        Ok(plan)
    }

    /// Builds a plan from per-component machine lists (one entry per instance).
    pub fn from_placements(placements: &[Vec<MachineId>], input_rate: f64) -> Result<Self, ModelError> {
        let counts = placements.iter().map(|p| p.len() as u32).collect();
        let assignment = placements.iter().flatten().copied().collect();
        Self::new(counts, assignment, input_rate)
    }

    fn check_shape(&self) -> Result<(), ModelError> {
        if let Some(j) = self.instance_counts.iter().position(|&n| n == 0) {
            return Err(ModelError::InvalidPlan(format!("component c{j} has no instances")));
        }
        let total: usize = self.instance_counts.iter().map(|&n| n as usize).sum();
        if total != self.assignment.len() {
            return Err(ModelError::InvalidPlan(format!(
                "{} tasks but {} assignments",
                total,
                self.assignment.len()
            )));
        }
        if !self.input_rate.is_finite() || self.input_rate < 0.0 {
            return Err(ModelError::InvalidPlan(format!("input rate {} is invalid", self.input_rate)));
        }
        Ok(())
    }

    /// Checks the plan against the topology and cluster it is meant for.
    pub fn validate(&self, topology: &UserTopology, cluster: &Cluster) -> Result<(), ModelError> {
        self.check_shape()?;
        if self.instance_counts.len() != topology.len() {
            return Err(ModelError::InvalidPlan(format!(
                "plan has {} components, topology has {}",
                self.instance_counts.len(),
                topology.len()
            )));
        }
        if let Some((t, m)) = self
            .assignment
            .iter()
            .enumerate()
            .find(|(_, m)| m.0 >= cluster.len())
        {
            return Err(ModelError::InvalidPlan(format!("task t{t} assigned to unknown machine {m}")));
        }
        Ok(())
    }

    pub fn task_count(&self) -> usize {
        self.assignment.len()
    }

    /// Zero-based task id of the `k`-th (1-based) instance of `component`:
    /// the instance count of all preceding components plus `k - 1`.
    pub fn task_index(&self, component: ComponentId, k: u32) -> Result<TaskId, ModelError> {
        let count = *self
            .instance_counts
            .get(component.0)
            .ok_or(ModelError::UnknownComponent(component.0))?;
        if k == 0 || k > count {
            return Err(ModelError::OrdinalOutOfRange { component, k, count });
        }
        Ok(TaskId(self.offset(component) + (k as usize - 1)))
    }

    fn offset(&self, component: ComponentId) -> usize {
        self.instance_counts[..component.0].iter().map(|&n| n as usize).sum()
    }

    /// Task ids of all instances of `component`.
    pub fn tasks_of(&self, component: ComponentId) -> Range<usize> {
        let start = self.offset(component);
        start..start + self.instance_counts[component.0] as usize
    }

    /// Owning component of every task, indexed by task id.
    pub fn task_components(&self) -> Vec<ComponentId> {
        self.instance_counts
            .iter()
            .enumerate()
            .flat_map(|(j, &n)| std::iter::repeat_n(ComponentId(j), n as usize))
            .collect()
    }

    pub fn machine_of(&self, task: TaskId) -> MachineId {
        self.assignment[task.0]
    }

    /// Per-component machine lists, the inverse of [`ExecutionPlan::from_placements`].
    pub fn placements(&self) -> Vec<Vec<MachineId>> {
        (0..self.instance_counts.len())
            .map(|j| self.assignment[self.tasks_of(ComponentId(j))].to_vec())
            .collect()
    }

    pub fn with_rate(&self, input_rate: f64) -> Self {
        Self {
            input_rate,
            ..self.clone()
        }
    }
}
