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

use serde::{Deserialize, Serialize};

use super::weights::weighted_utilization;
use crate::model::{ComponentId, ExecutionPlan, MachineId, Problem, TaskId};
use crate::rates::{apply_overload, propagate_rates, utilization};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MachineReport {
    pub machine: MachineId,
    pub type_id: String,
    /// Capacity units in use (may exceed capacity).
    pub used: f64,
    /// Remaining capacity; negative when over-utilized.
    pub mac: f64,
    /// `min(used, capacity) / capacity`.
    pub utilization: f64,
    pub tasks: Vec<TaskId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskReport {
    pub task: TaskId,
    pub component: ComponentId,
    pub machine: MachineId,
    pub ir: f64,
    pub or: f64,
    pub pr: f64,
    pub tcu: f64,
}

/// Steady-state evaluation of one plan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub input_rate: f64,
    /// Sum of the processing rates of all tasks, spouts included.
    pub overall_throughput: f64,
    pub feasible: bool,
    /// Profile-weighted utilization summed over machine types.
    pub weighted_utilization: f64,
    /// `weighted_utilization` divided by the number of distinct task kinds.
    pub normalized_utilization: f64,
    pub machines: Vec<MachineReport>,
    pub tasks: Vec<TaskReport>,
}

impl SimulationReport {
    pub fn machine_used(&self) -> Vec<f64> {
        self.machines.iter().map(|m| m.used).collect()
    }

    pub fn max_used(&self) -> f64 {
        self.machines.iter().map(|m| m.used).fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Evaluates a plan with the analytic rate and CPU model.
///
/// Processing rates equal input rates on machines within capacity and are
/// scaled by `capacity / used` on over-utilized ones.
pub fn simulate(plan: &ExecutionPlan, problem: &Problem) -> SimulationReport {
    let mut rates = propagate_rates(plan, problem.topology());
    let util = utilization(plan, &rates, problem);
    apply_overload(plan, &mut rates, &util);
    let components = plan.task_components();
    let capacity = problem.capacity();

    let mut machines: Vec<MachineReport> = problem
        .cluster()
        .machines()
        .iter()
        .map(|m| MachineReport {
            machine: m.id,
            type_id: m.type_id.clone(),
            used: util.used[m.id.0],
            mac: util.mac(m.id),
            utilization: util.used[m.id.0].min(capacity) / capacity,
            tasks: Vec::new(),
        })
        .collect();
    let tasks = rates
        .tasks
        .iter()
        .enumerate()
        .map(|(t, r)| {
            let machine = plan.assignment[t];
            machines[machine.0].tasks.push(TaskId(t));
            TaskReport {
                task: TaskId(t),
                component: components[t],
                machine,
                ir: r.ir,
                or: r.or,
                pr: r.pr,
                tcu: util.task_tcu[t],
            }
        })
        .collect::<Vec<_>>();
    let mut report = SimulationReport {
        input_rate: plan.input_rate,
        overall_throughput: tasks.iter().map(|t| t.pr).sum(),
        feasible: util.feasible(),
        weighted_utilization: 0.0,
        normalized_utilization: 0.0,
        machines,
        tasks,
    };
    let w = weighted_utilization(&report, problem);
    report.weighted_utilization = w.value;
    report.normalized_utilization = w.normalized;
    report
}
