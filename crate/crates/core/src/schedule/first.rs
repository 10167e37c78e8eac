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

use super::SchedulerConfig;
use crate::error::ScheduleError;
use crate::model::{ExecutionPlan, MachineId, Problem};
use crate::rates::stage_factors;

/// One instance per component, each on the machine where it costs the least
/// at the rates implied by `config.r0`. Components are visited in
/// topological order; ties go to the lowest machine id.
///
/// Placement looks only at each component's own predicted cost, not at what
/// is already on a machine. If the result over-utilizes some machine the
/// plan is rejected.
pub fn first_assignment(problem: &Problem, config: &SchedulerConfig) -> Result<ExecutionPlan, ScheduleError> {
    config.validate()?;
    let topology = problem.topology();
    let machines = problem.cluster().len();
    let stage = stage_factors(topology);
    let mut placement = vec![MachineId(0); topology.len()];
    let mut used = vec![0.0; machines];
    for &c in topology.order() {
        let ir = config.r0 * stage[c.0];
        let mut best = MachineId(0);
        let mut best_tcu = f64::INFINITY;
        for m in problem.cluster().machine_ids() {
            let tcu = problem.entry(c, m).tcu(ir);
            if tcu < best_tcu {
                best = m;
                best_tcu = tcu;
            }
        }
        placement[c.0] = best;
        used[best.0] += best_tcu;
    }
    let capacity = problem.capacity();
    if let Some(w) = used.iter().position(|&u| u > capacity + config.capacity_epsilon) {
        return Err(ScheduleError::InfeasibleInitialPlan {
            machine: MachineId(w),
            used: used[w],
            capacity,
            rate: config.r0,
        });
    }
    Ok(ExecutionPlan::new(vec![1; topology.len()], placement, config.r0)?)
}
