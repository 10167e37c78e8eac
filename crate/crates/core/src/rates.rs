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

//! Tuple-rate propagation and CPU utilization prediction.
//!
//! A task's CPU use is affine in its input rate (`e * ir + met`), and every
//! input rate is a linear function of the topology input rate. The schedulers
//! rely on both facts: loads scale with the input rate, and the largest
//! sustainable rate of a fixed placement has a closed form
//! ([`max_feasible_rate`]).

use serde::{Deserialize, Serialize};

use crate::error::RateError;
use crate::model::{ComponentId, ExecutionPlan, MachineId, Problem, TaskId, UserTopology};

/// Slack used when classifying a machine as over-utilized.
pub const OVERLOAD_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct TaskRate {
    /// Input rate, tuples/s.
    pub ir: f64,
    /// Output rate toward each downstream component, tuples/s.
    pub or: f64,
    /// Processing rate, tuples/s.
    pub pr: f64,
}

/// Rates of every task, indexed by task id.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TaskRates {
    pub tasks: Vec<TaskRate>,
}

impl TaskRates {
    pub fn get(&self, task: TaskId) -> &TaskRate {
        &self.tasks[task.0]
    }
}

/// Propagates the plan's input rate through the execution graph.
///
/// Each spout component receives the full input rate, split evenly over its
/// instances. A task emits `ir * alpha` tuples/s to every downstream
/// component, shuffled evenly over that component's instances; a task's
/// input is the sum of the shares it receives. `pr` is set to `ir`; see
/// [`apply_overload`] for the over-utilized case.
pub fn propagate_rates(plan: &ExecutionPlan, topology: &UserTopology) -> TaskRates {
    let mut rates = vec![TaskRate::default(); plan.task_count()];
    for &s in topology.spout_ids() {
        let range = plan.tasks_of(s);
        let share = plan.input_rate / range.len() as f64;
        for t in range {
            rates[t].ir = share;
        }
    }
    for &c in topology.order() {
        let spec = topology.component(c);
        let feeders = plan.tasks_of(c);
        for t in feeders.clone() {
            rates[t].or = rates[t].ir * spec.alpha;
            rates[t].pr = rates[t].ir;
        }
        for &d in &spec.downstream {
            let receivers = plan.tasks_of(d);
            let x = receivers.len() as f64;
            let received: f64 = feeders.clone().map(|t| rates[t].or / x).sum();
            for u in receivers {
                rates[u].ir += received;
            }
        }
    }
    TaskRates { tasks: rates }
}

/// Total input rate of each component per unit of topology input rate.
///
/// This does not depend on instance counts: splitting a stream over more
/// instances changes the per-instance rate, not the component total.
pub fn stage_factors(topology: &UserTopology) -> Vec<f64> {
    let mut k = vec![0.0; topology.len()];
    for &s in topology.spout_ids() {
        k[s.0] = 1.0;
    }
    for &c in topology.order() {
        let out = k[c.0] * topology.component(c).alpha;
        for d in &topology.component(c).downstream {
            k[d.0] += out;
        }
    }
    k
}

/// Predicted CPU use of every task and machine.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilizationMap {
    pub capacity: f64,
    /// Capacity units used by each task on its machine.
    pub task_tcu: Vec<f64>,
    /// Capacity units used on each machine.
    pub used: Vec<f64>,
}

impl UtilizationMap {
    /// Remaining capacity of a machine; negative when over-utilized.
    pub fn mac(&self, machine: MachineId) -> f64 {
        self.capacity - self.used[machine.0]
    }

    pub fn is_overloaded(&self, machine: MachineId) -> bool {
        self.used[machine.0] > self.capacity + OVERLOAD_EPSILON
    }

    pub fn feasible(&self) -> bool {
        (0..self.used.len()).all(|w| !self.is_overloaded(MachineId(w)))
    }
}

pub fn utilization(plan: &ExecutionPlan, rates: &TaskRates, problem: &Problem) -> UtilizationMap {
    let mut used = vec![0.0; problem.cluster().len()];
    let components = plan.task_components();
    let task_tcu = rates
        .tasks
        .iter()
        .enumerate()
        .map(|(t, r)| {
            let m = plan.assignment[t];
            let tcu = problem.entry(components[t], m).tcu(r.ir);
            used[m.0] += tcu;
            tcu
        })
        .collect();
    UtilizationMap {
        capacity: problem.capacity(),
        task_tcu,
        used,
    }
}

/// Degrades processing rates on over-utilized machines in proportion to the
/// overload: `pr = ir * min(1, capacity / used)`.
pub fn apply_overload(plan: &ExecutionPlan, rates: &mut TaskRates, util: &UtilizationMap) {
    for (t, r) in rates.tasks.iter_mut().enumerate() {
        let m = plan.assignment[t];
        r.pr = if util.is_overloaded(m) {
            r.ir * (util.capacity / util.used[m.0]).min(1.0)
        } else {
            r.ir
        };
    }
}

/// Largest topology input rate at which no machine of the placement exceeds
/// its capacity. The plan's own `input_rate` is ignored.
///
/// Returns `f64::INFINITY` when no machine's load grows with the input rate.
pub fn max_feasible_rate(plan: &ExecutionPlan, problem: &Problem) -> Result<f64, RateError> {
    let unit = propagate_rates(&plan.with_rate(1.0), problem.topology());
    let components = plan.task_components();
    let m = problem.cluster().len();
    let mut slope = vec![0.0; m];
    let mut fixed = vec![0.0; m];
    for (t, r) in unit.tasks.iter().enumerate() {
        let w = plan.assignment[t];
        let entry = problem.entry(components[t], w);
        slope[w.0] += entry.e * r.ir;
        fixed[w.0] += entry.met;
    }
    rate_limit(&slope, &fixed, problem.capacity())
}

/// `min_w (capacity - fixed_w) / slope_w` over machines with a positive slope.
pub(crate) fn rate_limit(slope: &[f64], fixed: &[f64], capacity: f64) -> Result<f64, RateError> {
    let mut best = f64::INFINITY;
    for (w, (&s, &f)) in slope.iter().zip(fixed).enumerate() {
        if f > capacity + OVERLOAD_EPSILON {
            return Err(RateError::InfeasibleAtZeroRate {
                machine: MachineId(w),
                met: f,
                capacity,
            });
        }
        if s > 0.0 {
            best = best.min(((capacity - f) / s).max(0.0));
        }
    }
    Ok(best)
}

/// Sum of the processing rates of all instances of each component.
pub fn component_throughput(plan: &ExecutionPlan, rates: &TaskRates) -> Vec<f64> {
    (0..plan.instance_counts.len())
        .map(|j| plan.tasks_of(ComponentId(j)).map(|t| rates.tasks[t].pr).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{
        Cluster, ComponentKind::*, ComponentSpec, MachineType, ProfileEntry, ProfileTable,
    };

    fn linear(alpha_a: f64) -> UserTopology {
        UserTopology::new(
            "linear",
            vec![
                ComponentSpec::new(0, "spout", Spout, "k", 1.0, &[1]),
                ComponentSpec::new(1, "a", Bolt, "k", alpha_a, &[2]),
                ComponentSpec::new(2, "b", Bolt, "k", 1.0, &[]),
            ],
        )
        .unwrap()
    }

    fn uniform(counts: &[u32], rate: f64) -> ExecutionPlan {
        let total = counts.iter().sum::<u32>() as usize;
        ExecutionPlan::new(counts.to_vec(), vec![MachineId(0); total], rate).unwrap()
    }

    #[test]
    fn linear_chain_rates() {
        let r = propagate_rates(&uniform(&[1, 1, 1], 100.0), &linear(0.5));
        assert_eq!(r.tasks[1].ir, 100.0);
        assert_eq!(r.tasks[1].or, 50.0);
        assert_eq!(r.tasks[2].ir, 50.0);
    }

    #[test]
    fn even_split_over_instances() {
        let t = UserTopology::new(
            "pair",
            vec![
                ComponentSpec::new(0, "spout", Spout, "k", 1.0, &[1]),
                ComponentSpec::new(1, "a", Bolt, "k", 1.0, &[]),
            ],
        )
        .unwrap();
        let r = propagate_rates(&uniform(&[1, 2], 100.0), &t);
        assert_eq!(r.tasks[1].ir, 50.0);
        assert_eq!(r.tasks[2].ir, 50.0);
    }

    #[test]
    fn diamond_sums_feeders() {
        let t = UserTopology::new(
            "diamond",
            vec![
                ComponentSpec::new(0, "spout", Spout, "k", 1.0, &[1, 2]),
                ComponentSpec::new(1, "a", Bolt, "k", 1.0, &[3]),
                ComponentSpec::new(2, "b", Bolt, "k", 1.0, &[3]),
                ComponentSpec::new(3, "c", Bolt, "k", 1.0, &[]),
            ],
        )
        .unwrap();
        let r = propagate_rates(&uniform(&[1, 1, 1, 1], 100.0), &t);
        assert_eq!(r.tasks[3].ir, 200.0);
        assert_eq!(stage_factors(&t), vec![1.0, 1.0, 1.0, 2.0]);
    }

    fn one_machine(entries: &[(&str, f64, f64)], topo: UserTopology) -> Problem {
        let cluster = Cluster::from_counts(100.0, vec![MachineType::new("m", "M")], &[1]).unwrap();
        let mut p = ProfileTable::new();
        for &(k, e, met) in entries {
            p.insert(k, "m", ProfileEntry::new(e, met)).unwrap();
        }
        Problem::new(topo, cluster, p).unwrap()
    }

    #[test]
    fn utilization_sums_and_signs() {
        let problem = one_machine(&[("k", 0.3, 0.0)], linear(1.0));
        let plan = uniform(&[1, 1, 1], 100.0);
        let rates = propagate_rates(&plan, problem.topology());
        let u = utilization(&plan, &rates, &problem);
        assert!((u.used[0] - 90.0).abs() < 1e-12);
        assert!((u.mac(MachineId(0)) - 10.0).abs() < 1e-12);
        let plan = plan.with_rate(400.0 / 3.0);
        let rates = propagate_rates(&plan, problem.topology());
        let u = utilization(&plan, &rates, &problem);
        assert!((u.mac(MachineId(0)) + 20.0).abs() < 1e-9);
        assert!(!u.feasible());
    }

    #[test]
    fn max_rate_single_constraint() {
        let problem = one_machine(&[("k", 1.0 / 3.0, 0.0)], linear(1.0));
        let r = max_feasible_rate(&uniform(&[1, 1, 1], 0.0), &problem).unwrap();
        assert!((r - 100.0).abs() < 1e-9);
    }

    #[test]
    fn max_rate_reports_overhead_infeasibility() {
        let problem = one_machine(&[("k", 1.0, 40.0)], linear(1.0));
        assert_eq!(
            max_feasible_rate(&uniform(&[1, 1, 1], 0.0), &problem),
            Err(RateError::InfeasibleAtZeroRate {
                machine: MachineId(0),
                met: 120.0,
                capacity: 100.0
            })
        );
    }
}
