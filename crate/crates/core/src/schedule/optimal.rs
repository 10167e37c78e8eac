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

//! Exhaustive search over instance counts and placements.
//!
//! Instances of one component are interchangeable, so a placement is
//! enumerated as, per component, a multiset of machines (how many of its
//! instances land on each machine), never as a permutation. Each candidate is
//! scored at its own largest feasible input rate.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{InstanceVectors, ScheduleResult};
use crate::error::ScheduleError;
use crate::model::{ComponentId, ExecutionPlan, MachineId, Problem};
use crate::rates::{rate_limit, stage_factors};
use crate::sim::simulate;

pub const DEFAULT_COST_CAP: f64 = 5e7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimalConfig {
    /// Maximum number of tasks per machine, one entry per machine. Their sum
    /// bounds the total number of tasks.
    pub budget_per_machine: Vec<u32>,
    /// Refuse to search when [`search_space_estimate`] exceeds this.
    pub cost_cap: f64,
}

impl OptimalConfig {
    pub fn uniform(machines: usize, per_machine: u32) -> Self {
        Self {
            budget_per_machine: vec![per_machine; machines],
            cost_cap: DEFAULT_COST_CAP,
        }
    }
}

fn binomial(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Upper bound on the placements the search visits, ignoring per-machine
/// caps: the sum over count vectors of `prod_j C(x_j + m - 1, m - 1)`.
pub fn search_space_estimate(components: usize, machines: usize, budget: u32) -> f64 {
    let b = budget as usize;
    let m = machines as u64;
    let f: Vec<f64> = (0..=b).map(|x| binomial(x as u64 + m - 1, m - 1)).collect();
    // poly[s]: weighted count of partial vectors with sum s
    let mut poly = vec![0.0; b + 1];
    poly[0] = 1.0;
    for _ in 0..components {
        let mut next = vec![0.0; b + 1];
        for (s, &w) in poly.iter().enumerate() {
            if w == 0.0 {
                continue;
            }
            for x in 1..=b - s {
                next[s + x] += w * f[x];
            }
        }
        poly = next;
    }
    poly.iter().sum()
}

/// Best candidate of one count vector, or a partial reduction of several.
#[derive(Debug, Clone)]
struct Best {
    throughput: f64,
    rate: f64,
    counts: Vec<u32>,
    // sorted machine ids, component-major
    assignment: Vec<usize>,
}

impl Best {
    /// `Greater` means `self` is preferred: higher throughput, then the
    /// lexicographically smaller `(counts, assignment)`.
    fn preference(&self, other: &Best) -> Ordering {
        self.throughput
            .total_cmp(&other.throughput)
            .then_with(|| other.counts.cmp(&self.counts))
            .then_with(|| other.assignment.cmp(&self.assignment))
    }
}

fn pick(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.preference(&a) == Ordering::Greater { b } else { a }),
        (a, b) => a.or(b),
    }
}

struct Search<'p> {
    problem: &'p Problem,
    stage: Vec<f64>,
    total_stage: f64,
    caps: Vec<u32>,
}

struct Walk {
    counts: Vec<u32>,
    slope: Vec<f64>,
    fixed: Vec<f64>,
    load: Vec<u32>,
    assignment: Vec<usize>,
    visited: u64,
    best: Option<Best>,
}

impl Search<'_> {
    fn run(&self, counts: &[u32]) -> (u64, Option<Best>) {
        let m = self.caps.len();
        let mut walk = Walk {
            counts: counts.to_vec(),
            slope: vec![0.0; m],
            fixed: vec![0.0; m],
            load: vec![0; m],
            assignment: Vec::with_capacity(counts.iter().sum::<u32>() as usize),
            visited: 0,
            best: None,
        };
        self.component(&mut walk, 0);
        (walk.visited, walk.best)
    }

    fn component(&self, walk: &mut Walk, c: usize) {
        if c == walk.counts.len() {
            walk.visited += 1;
            self.score(walk);
            return;
        }
        let n = walk.counts[c];
        self.spread(walk, c, 0, n);
    }

    /// Places the `left` remaining instances of `c` on machines `m..`,
    /// most instances on the lowest machine first, so leaves come out in
    /// lexicographic order of their sorted assignment.
    fn spread(&self, walk: &mut Walk, c: usize, m: usize, left: u32) {
        let machines = self.caps.len();
        if left == 0 {
            self.component(walk, c + 1);
            return;
        }
        if m == machines {
            return;
        }
        let room = self.caps[m] - walk.load[m];
        let entry = *self.problem.entry(ComponentId(c), MachineId(m));
        let per_instance = entry.e * self.stage[c] / walk.counts[c] as f64;
        let lowest = if m + 1 == machines { left } else { 0 };
        let (slope, fixed) = (walk.slope[m], walk.fixed[m]);
        for k in (lowest..=left.min(room)).rev() {
            walk.slope[m] += k as f64 * per_instance;
            walk.fixed[m] += k as f64 * entry.met;
            walk.load[m] += k;
            walk.assignment.extend(std::iter::repeat_n(m, k as usize));
            self.spread(walk, c, m + 1, left - k);
            walk.assignment.truncate(walk.assignment.len() - k as usize);
            walk.load[m] -= k;
            walk.slope[m] = slope;
            walk.fixed[m] = fixed;
        }
    }

    fn score(&self, walk: &mut Walk) {
        let Ok(rate) = rate_limit(&walk.slope, &walk.fixed, self.problem.capacity()) else {
            return;
        };
        let candidate = Best {
            throughput: rate * self.total_stage,
            rate,
            counts: walk.counts.clone(),
            assignment: walk.assignment.clone(),
        };
        let better = match &walk.best {
            None => true,
            Some(b) => candidate.preference(b) == Ordering::Greater,
        };
        if better {
            walk.best = Some(candidate);
        }
    }
}

/// Number of distinct placements visited for every count vector within
/// the per-machine caps.
pub fn canonical_assignment_count(problem: &Problem, budget_per_machine: &[u32]) -> Result<u64, ScheduleError> {
    let search = searcher(problem, budget_per_machine)?;
    let budget: u32 = budget_per_machine.iter().sum();
    Ok(InstanceVectors::new(problem.topology().len(), budget)?
        .map(|counts| search.run(&counts).0)
        .sum())
}

fn searcher<'p>(problem: &'p Problem, caps: &[u32]) -> Result<Search<'p>, ScheduleError> {
    let machines = problem.cluster().len();
    if caps.len() != machines {
        return Err(ScheduleError::BudgetLengthMismatch {
            got: caps.len(),
            machines,
        });
    }
    let stage = stage_factors(problem.topology());
    Ok(Search {
        problem,
        total_stage: stage.iter().sum(),
        stage,
        caps: caps.to_vec(),
    })
}

/// Finds the plan with the highest throughput among all instance-count
/// vectors within the total budget and all placements within the
/// per-machine caps. Ties go to the lexicographically smallest
/// `(counts, assignment)`, independent of evaluation order.
pub fn optimal_schedule(problem: &Problem, config: &OptimalConfig) -> Result<ScheduleResult, ScheduleError> {
    let search = searcher(problem, &config.budget_per_machine)?;
    let n = problem.topology().len();
    let budget: u32 = config.budget_per_machine.iter().sum();
    let vectors: Vec<Vec<u32>> = InstanceVectors::new(n, budget)?.collect();
    let estimate = search_space_estimate(n, problem.cluster().len(), budget);
    if estimate > config.cost_cap {
        return Err(ScheduleError::SearchSpaceTooLarge {
            estimate,
            cap: config.cost_cap,
        });
    }
    let (visited, best) = vectors
        .par_iter()
        .map(|counts| search.run(counts))
        .reduce(|| (0, None), |(va, a), (vb, b)| (va + vb, pick(a, b)));
    let best = best.ok_or(ScheduleError::NoFeasiblePlan)?;
    let assignment = best.assignment.iter().map(|&m| MachineId(m)).collect();
    let plan = ExecutionPlan::new(best.counts, assignment, best.rate)?;
    let report = simulate(&plan, problem);
    Ok(ScheduleResult {
        plan,
        report,
        iterations: visited,
        trace: None,
    })
}
