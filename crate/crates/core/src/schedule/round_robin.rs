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

use crate::error::ScheduleError;
use crate::model::{ExecutionPlan, MachineId, Problem};
use crate::rates::max_feasible_rate;

/// Deals tasks, in task-id order, to machines `0, 1, ..., m-1` cyclically.
///
/// The plan's input rate is the largest one the resulting placement can
/// sustain, so the baseline is evaluated at its best.
pub fn round_robin_schedule(instance_counts: &[u32], problem: &Problem) -> Result<ExecutionPlan, ScheduleError> {
    let machines = problem.cluster().len();
    let total: usize = instance_counts.iter().map(|&n| n as usize).sum();
    let assignment = (0..total).map(|t| MachineId(t % machines)).collect();
    let plan = ExecutionPlan::new(instance_counts.to_vec(), assignment, 0.0)?;
    plan.validate(problem.topology(), problem.cluster())?;
    let rate = max_feasible_rate(&plan, problem)?;
    Ok(plan.with_rate(rate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{
        Cluster, ComponentKind::*, ComponentSpec, MachineType, ProfileEntry, ProfileTable,
        UserTopology,
    };

    fn problem(components: usize, machines: usize) -> Problem {
        let comps = (0..components)
            .map(|i| {
                let kind = if i == 0 { Spout } else { Bolt };
                let next: Vec<usize> = if i + 1 < components { vec![i + 1] } else { vec![] };
                ComponentSpec::new(i, format!("c{i}"), kind, "k", 1.0, &next)
            })
            .collect();
        let topo = UserTopology::new("chain", comps).unwrap();
        let cluster = Cluster::from_counts(100.0, vec![MachineType::new("m", "")], &[machines]).unwrap();
        let mut p = ProfileTable::new();
        p.insert("k", "m", ProfileEntry::new(1.0, 0.0)).unwrap();
        Problem::new(topo, cluster, p).unwrap()
    }

    fn per_machine(plan: &ExecutionPlan, machines: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); machines];
        for (t, m) in plan.assignment.iter().enumerate() {
            out[m.0].push(t);
        }
        out
    }

    #[test]
    fn five_tasks_three_machines() {
        let plan = round_robin_schedule(&[2, 3], &problem(2, 3)).unwrap();
        assert_eq!(per_machine(&plan, 3), vec![vec![0, 3], vec![1, 4], vec![2]]);
    }

    #[test]
    fn one_task_per_machine() {
        let plan = round_robin_schedule(&[1, 1, 1], &problem(3, 3)).unwrap();
        assert_eq!(per_machine(&plan, 3), vec![vec![0], vec![1], vec![2]]);
        // every machine carries one unit-slope task at the full rate
        assert!((plan.input_rate - 100.0).abs() < 1e-9);
    }

    #[test]
    fn eleven_tasks_four_machines() {
        let plan = round_robin_schedule(&[1, 4, 2, 3, 1], &problem(5, 4)).unwrap();
        let sizes: Vec<usize> = per_machine(&plan, 4).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3, 3, 2]);
    }
}
