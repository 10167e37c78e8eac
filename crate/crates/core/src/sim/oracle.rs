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

//! Discrete-event token simulation, used to check the analytic model.
//!
//! Tuples are individual tokens. Spout instances receive tokens at their
//! configured rate on a lattice of `tick`-sized time steps (evenly spaced, or
//! jittered with a seeded RNG). Every machine is a processor delivering
//! `capacity` units of work per second, minus the constant overhead of the
//! tasks it hosts. Backlogged tasks on one machine share the remaining
//! capacity equally; a task serves its queue FIFO and one token costs the
//! task's profile slope `e` units·s. A completed token yields `alpha` output
//! tokens (fractional alpha accumulates as credit) on every downstream
//! stream, dealt round-robin over the receiving component's instances.
//!
//! Between events the simulation jumps straight to the next arrival or
//! completion, so cost scales with the number of tokens, not ticks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::weights::weighted_utilization;
use super::{MachineReport, SimulationReport, TaskReport};
use crate::error::SimError;
use crate::model::{ComponentId, ExecutionPlan, MachineId, Problem, TaskId};
use crate::rates::propagate_rates;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Simulated seconds.
    pub horizon: f64,
    /// Arrival-time resolution, seconds.
    pub tick: f64,
    /// Leading share of the horizon excluded from measurement.
    pub warmup_fraction: f64,
    /// Seed for jittered arrivals; `None` keeps arrivals evenly spaced.
    pub jitter_seed: Option<u64>,
}

impl OracleConfig {
    pub fn new(horizon: f64, tick: f64) -> Self {
        Self {
            horizon,
            tick,
            warmup_fraction: 0.1,
            jitter_seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    /// Time-averaged rates and loads over the measurement window.
    pub report: SimulationReport,
    /// Queued tokens per task when measurement started.
    pub backlog_at_warmup: Vec<u64>,
    /// Queued tokens per task at the horizon.
    pub final_backlog: Vec<u64>,
    pub events: u64,
}

/// Largest tick the oracle accepts for a plan: 1% of the fastest
/// single-token service time `e / capacity` among its tasks.
pub fn max_tick(plan: &ExecutionPlan, problem: &Problem) -> f64 {
    let components = plan.task_components();
    let min_e = plan
        .assignment
        .iter()
        .zip(&components)
        .map(|(&m, &c)| problem.entry(c, m).e)
        .fold(f64::INFINITY, f64::min);
    0.01 * min_e / problem.capacity()
}

struct TaskState {
    machine: usize,
    e: f64,
    alpha: f64,
    queue: u64,
    remaining: f64,
    credit: f64,
    // next receiving instance, one cursor per downstream component
    cursors: Vec<usize>,
    arrivals: u64,
    completions: u64,
    emitted: u64,
    work: f64,
}

struct Source {
    task: usize,
    interval: f64,
    emitted: u64,
    next: f64,
}

pub fn discrete_oracle(
    plan: &ExecutionPlan,
    problem: &Problem,
    config: &OracleConfig,
) -> Result<OracleReport, SimError> {
    plan.validate(problem.topology(), problem.cluster())?;
    let limit = max_tick(plan, problem);
    if config.tick.is_nan() || config.tick <= 0.0 || config.tick > limit {
        return Err(SimError::TickTooCoarse {
            tick: config.tick,
            max: limit,
        });
    }
    if config.horizon.is_nan() || config.horizon < 100.0 * config.tick {
        return Err(SimError::HorizonTooShort {
            horizon: config.horizon,
            tick: config.tick,
        });
    }

    let topology = problem.topology();
    let capacity = problem.capacity();
    let components = plan.task_components();
    let machine_count = problem.cluster().len();

    let mut overhead = vec![0.0; machine_count];
    let mut tasks: Vec<TaskState> = components
        .iter()
        .enumerate()
        .map(|(t, &c)| {
            let m = plan.assignment[t];
            let entry = problem.entry(c, m);
            overhead[m.0] += entry.met;
            TaskState {
                machine: m.0,
                e: entry.e,
                alpha: topology.component(c).alpha,
                queue: 0,
                remaining: 0.0,
                credit: 0.0,
                cursors: vec![0; topology.component(c).downstream.len()],
                arrivals: 0,
                completions: 0,
                emitted: 0,
                work: 0.0,
            }
        })
        .collect();
    let service: Vec<f64> = overhead.iter().map(|&f| (capacity - f).max(0.0)).collect();
    let receivers: Vec<Vec<std::ops::Range<usize>>> = components
        .iter()
        .map(|&c| {
            topology
                .component(c)
                .downstream
                .iter()
                .map(|&d| plan.tasks_of(d))
                .collect()
        })
        .collect();

    let mut rng = config.jitter_seed.map(ChaCha8Rng::seed_from_u64);
    let analytic = propagate_rates(plan, topology);
    let mut sources: Vec<Source> = topology
        .spout_ids()
        .iter()
        .flat_map(|&s| plan.tasks_of(s))
        .filter(|&t| analytic.tasks[t].ir > 0.0)
        .map(|t| Source {
            task: t,
            interval: 1.0 / analytic.tasks[t].ir,
            emitted: 0,
            next: 0.0,
        })
        .collect();
    for s in &mut sources {
        s.next = arrival_time(s, 0.0, config.tick, rng.as_mut());
    }

    let warmup = config.warmup_fraction * config.horizon;
    let mut measuring = false;
    let mut backlog_at_warmup = vec![0; tasks.len()];
    let mut now = 0.0;
    let mut events = 0u64;
    let mut busy = vec![0usize; machine_count];

    loop {
        busy.iter_mut().for_each(|b| *b = 0);
        for t in tasks.iter().filter(|t| t.queue > 0) {
            busy[t.machine] += 1;
        }
        let share = |t: &TaskState| {
            if t.queue > 0 {
                service[t.machine] / busy[t.machine] as f64
            } else {
                0.0
            }
        };
        let next_completion = tasks
            .iter()
            .filter_map(|t| {
                let s = share(t);
                (s > 0.0).then(|| now + t.remaining / s)
            })
            .fold(f64::INFINITY, f64::min);
        let next_arrival = sources.iter().map(|s| s.next).fold(f64::INFINITY, f64::min);
        let boundary = if measuring { config.horizon } else { warmup };
        let until = next_completion.min(next_arrival).min(boundary);

        let dt = until - now;
        let shares: Vec<f64> = tasks.iter().map(share).collect();
        for (t, s) in tasks.iter_mut().zip(&shares) {
            if *s > 0.0 {
                let work = (s * dt).min(t.remaining);
                t.remaining -= work;
                if measuring {
                    t.work += work;
                }
            }
        }
        now = until;
        events += 1;

        if now >= boundary && next_completion > now && next_arrival > now {
            if measuring {
                break;
            }
            measuring = true;
            for (b, t) in backlog_at_warmup.iter_mut().zip(&tasks) {
                *b = t.queue;
            }
            continue;
        }

        let done: Vec<usize> = (0..tasks.len())
            .filter(|&i| shares[i] > 0.0 && tasks[i].remaining <= 1e-9 * tasks[i].e)
            .collect();
        for i in done {
            let t = &mut tasks[i];
            t.queue -= 1;
            t.remaining = if t.queue > 0 { t.e } else { 0.0 };
            if measuring {
                t.completions += 1;
            }
            t.credit += t.alpha;
            let mut outputs = 0u64;
            while t.credit >= 1.0 - 1e-12 {
                t.credit -= 1.0;
                outputs += 1;
            }
            for _ in 0..outputs {
                for (stream, range) in receivers[i].iter().enumerate() {
                    let t = &mut tasks[i];
                    let target = range.start + t.cursors[stream];
                    t.cursors[stream] = (t.cursors[stream] + 1) % range.len();
                    if measuring {
                        t.emitted += 1;
                    }
                    enqueue(&mut tasks[target], measuring);
                }
            }
        }
        for s in sources.iter_mut().filter(|s| s.next <= now) {
            enqueue(&mut tasks[s.task], measuring);
            s.emitted += 1;
            s.next = arrival_time(s, now, config.tick, rng.as_mut());
        }
    }

    let window = config.horizon - warmup;
    let mut machines: Vec<MachineReport> = problem
        .cluster()
        .machines()
        .iter()
        .map(|m| MachineReport {
            machine: m.id,
            type_id: m.type_id.clone(),
            used: overhead[m.id.0].min(capacity),
            mac: 0.0,
            utilization: 0.0,
            tasks: Vec::new(),
        })
        .collect();
    let task_reports: Vec<TaskReport> = tasks
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let entry = problem.entry(components[i], MachineId(t.machine));
            machines[t.machine].used += t.work / window;
            machines[t.machine].tasks.push(TaskId(i));
            let pr = t.completions as f64 / window;
            let or = if receivers[i].is_empty() {
                pr * t.alpha
            } else {
                t.emitted as f64 / receivers[i].len() as f64 / window
            };
            TaskReport {
                task: TaskId(i),
                component: ComponentId(components[i].0),
                machine: MachineId(t.machine),
                ir: t.arrivals as f64 / window,
                or,
                pr,
                tcu: entry.met + t.work / window,
            }
        })
        .collect();
    for m in &mut machines {
        m.mac = capacity - m.used;
        m.utilization = m.used.min(capacity) / capacity;
    }
    let final_backlog: Vec<u64> = tasks.iter().map(|t| t.queue).collect();
    let feasible = final_backlog
        .iter()
        .zip(&backlog_at_warmup)
        .zip(&tasks)
        .all(|((&end, &start), t)| end <= start + 2 + t.arrivals / 100);
    let mut report = SimulationReport {
        input_rate: plan.input_rate,
        overall_throughput: task_reports.iter().map(|t| t.pr).sum(),
        feasible,
        weighted_utilization: 0.0,
        normalized_utilization: 0.0,
        machines,
        tasks: task_reports,
    };
    let w = weighted_utilization(&report, problem);
    report.weighted_utilization = w.value;
    report.normalized_utilization = w.normalized;
    Ok(OracleReport {
        report,
        backlog_at_warmup,
        final_backlog,
        events,
    })
}

fn enqueue(t: &mut TaskState, measuring: bool) {
    if t.queue == 0 {
        t.remaining = t.e;
    }
    t.queue += 1;
    if measuring {
        t.arrivals += 1;
    }
}

/// Time of the source's next token, snapped up to the tick lattice.
fn arrival_time(s: &Source, now: f64, tick: f64, rng: Option<&mut ChaCha8Rng>) -> f64 {
    let mut ideal = (s.emitted + 1) as f64 * s.interval;
    if let Some(rng) = rng {
        ideal += s.interval * (rng.gen::<f64>() - 0.5);
    }
    let snapped = (ideal / tick).ceil() * tick;
    snapped.max(now)
}
