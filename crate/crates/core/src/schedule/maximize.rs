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

use super::{ScheduleResult, SchedulerConfig};
use crate::error::ScheduleError;
use crate::model::{ComponentId, ExecutionPlan, MachineId, Problem, TaskId};
use crate::rates::stage_factors;
use crate::sim::simulate;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "snake_case")]
pub enum TraceAction {
    /// No machine over-utilized: snapshot taken, rate raised.
    IncreaseRate { to: f64 },
    /// New instance of the hottest task's component placed on `machine`.
    AddInstance {
        overloaded: MachineId,
        hottest: TaskId,
        component: ComponentId,
        machine: MachineId,
    },
    /// Nothing fits: scale doubled, last snapshot restored.
    Refine { overloaded: MachineId, scale: f64 },
    Terminate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub iteration: u64,
    /// Input rate under evaluation in this iteration.
    pub rate: f64,
    /// Input rate of the latest feasible snapshot after this iteration.
    pub snapshot_rate: f64,
    #[serde(flatten)]
    pub action: TraceAction,
}

#[derive(Debug, Clone)]
struct State {
    placements: Vec<Vec<MachineId>>,
    // instances of [component] on [machine]
    on: Vec<Vec<u32>>,
    rate: f64,
}

struct Model<'p> {
    problem: &'p Problem,
    stage: Vec<f64>,
    eps: f64,
}

impl Model<'_> {
    /// Load of one instance of `c` on `m` when `c` has `n` instances.
    fn tcu(&self, c: usize, m: usize, n: usize, rate: f64) -> f64 {
        let entry = self.problem.entry(ComponentId(c), MachineId(m));
        entry.e * rate * self.stage[c] / n as f64 + entry.met
    }

    fn used(&self, s: &State) -> Vec<f64> {
        let mut used = vec![0.0; self.problem.cluster().len()];
        for (c, row) in s.on.iter().enumerate() {
            let n = s.placements[c].len();
            for (m, &k) in row.iter().enumerate() {
                if k > 0 {
                    used[m] += k as f64 * self.tcu(c, m, n, s.rate);
                }
            }
        }
        used
    }

    fn first_overloaded(&self, used: &[f64]) -> Option<usize> {
        let cap = self.problem.capacity();
        used.iter().position(|&u| u > cap + self.eps)
    }

    /// Component and task id of the task with the highest load on `w`.
    fn hottest(&self, s: &State, w: usize) -> (usize, TaskId) {
        let mut best: Option<(usize, f64)> = None;
        for (c, row) in s.on.iter().enumerate() {
            if row[w] == 0 {
                continue;
            }
            let tcu = self.tcu(c, w, s.placements[c].len(), s.rate);
            if best.is_none_or(|(_, b)| tcu > b) {
                best = Some((c, tcu));
            }
        }
        let (c, _) = best.expect("an over-utilized machine hosts at least one task");
        let offset: usize = s.placements[..c].iter().map(Vec::len).sum();
        let ordinal = s.placements[c]
            .iter()
            .position(|m| m.0 == w)
            .expect("component has an instance on w");
        (c, TaskId(offset + ordinal))
    }

    /// Machine with the least load for a new instance of `c` among those
    /// that stay within capacity after it is added.
    fn best_host(&self, s: &State, used: &[f64], c: usize) -> Option<usize> {
        let n = s.placements[c].len();
        let cap = self.problem.capacity();
        let mut best: Option<(usize, f64)> = None;
        for (m, &u) in used.iter().enumerate() {
            let k = s.on[c][m] as f64;
            let before = if k > 0.0 { k * self.tcu(c, m, n, s.rate) } else { 0.0 };
            let new_tcu = self.tcu(c, m, n + 1, s.rate);
            let after = u - before + (k + 1.0) * new_tcu;
            if after > cap + self.eps {
                continue;
            }
            if best.is_none_or(|(_, b)| new_tcu < b) {
                best = Some((m, new_tcu));
            }
        }
        best.map(|(m, _)| m)
    }
}

/// Grows a feasible plan until the cluster is full.
///
/// Each iteration evaluates machine loads at the current rate:
///
/// * no machine over-utilized: the plan becomes the latest snapshot and the
///   rate grows by `rate / scale`;
/// * otherwise the hottest task of the lowest-numbered over-utilized machine
///   gets a new instance of its component, placed on the machine where it
///   costs least among those that stay within capacity;
/// * if no machine can take it, `scale` doubles and the snapshot is restored,
///   unless the increment has reached the refinement floor, in which case the
///   snapshot is returned.
///
/// A new instance takes an even share of its component's input, so it also
/// relieves the instance that was hot.
pub fn maximize_throughput(
    initial: &ExecutionPlan,
    problem: &Problem,
    config: &SchedulerConfig,
) -> Result<ScheduleResult, ScheduleError> {
    config.validate()?;
    initial.validate(problem.topology(), problem.cluster())?;
    let model = Model {
        problem,
        stage: stage_factors(problem.topology()),
        eps: config.capacity_epsilon,
    };
    let machines = problem.cluster().len();
    let placements = initial.placements();
    let mut on = vec![vec![0u32; machines]; placements.len()];
    for (c, p) in placements.iter().enumerate() {
        for m in p {
            on[c][m.0] += 1;
        }
    }
    let mut current = State {
        placements,
        on,
        rate: initial.input_rate,
    };
    let used = model.used(&current);
    if let Some(w) = model.first_overloaded(&used) {
        return Err(ScheduleError::InfeasibleInitialPlan {
            machine: MachineId(w),
            used: used[w],
            capacity: problem.capacity(),
            rate: current.rate,
        });
    }

    let mut snapshot = current.clone();
    let mut scale = config.scale_init;
    let mut trace = config.record_trace.then(Vec::new);
    let mut log = |iteration: u64, rate: f64, snapshot_rate: f64, action: TraceAction| {
        if let Some(t) = trace.as_mut() {
            t.push(TraceEvent {
                iteration,
                rate,
                snapshot_rate,
                action,
            });
        }
    };

    for iteration in 0..config.max_iterations {
        let used = model.used(&current);
        let rate = current.rate;
        let Some(w) = model.first_overloaded(&used) else {
            snapshot = current.clone();
            current.rate += current.rate / scale;
            log(iteration, rate, snapshot.rate, TraceAction::IncreaseRate { to: current.rate });
            continue;
        };
        let (c, hottest) = model.hottest(&current, w);
        if let Some(v) = model.best_host(&current, &used, c) {
            current.placements[c].push(MachineId(v));
            current.on[c][v] += 1;
            log(
                iteration,
                rate,
                snapshot.rate,
                TraceAction::AddInstance {
                    overloaded: MachineId(w),
                    hottest,
                    component: ComponentId(c),
                    machine: MachineId(v),
                },
            );
        } else if config.refinement.keep_refining(current.rate, scale) {
            scale *= 2.0;
            current = snapshot.clone();
            log(
                iteration,
                rate,
                snapshot.rate,
                TraceAction::Refine {
                    overloaded: MachineId(w),
                    scale,
                },
            );
        } else {
            log(iteration, rate, snapshot.rate, TraceAction::Terminate);
            let plan = ExecutionPlan::from_placements(&snapshot.placements, snapshot.rate)?;
            let report = simulate(&plan, problem);
            return Ok(ScheduleResult {
                plan,
                report,
                iterations: iteration + 1,
                trace,
            });
        }
    }
    Err(ScheduleError::IterationLimitExceeded(config.max_iterations))
}
