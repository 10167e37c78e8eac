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

//! Producers of execution plans.
//!
//! * [`propose`]: the two-phase heuristic. [`first_assignment`] places one
//!   instance of every component on its cheapest machine, then
//!   [`maximize_throughput`] alternately raises the input rate and replicates
//!   bottleneck components until the cluster is full.
//! * [`round_robin_schedule`]: deals tasks to machines cyclically, as the
//!   stock framework scheduler does.
//! * [`optimal_schedule`]: exhaustive search over instance counts and
//!   placements, for small instances.

mod config;
mod design_space;
mod first;
mod maximize;
mod optimal;
mod round_robin;

use serde::{Deserialize, Serialize};

pub use config::{RefinementFloor, SchedulerConfig};
pub use design_space::{design_space_size, InstanceVectors};
pub use first::first_assignment;
pub use maximize::{maximize_throughput, TraceAction, TraceEvent};
pub use optimal::{
    canonical_assignment_count, optimal_schedule, search_space_estimate, OptimalConfig,
    DEFAULT_COST_CAP,
};
pub use round_robin::round_robin_schedule;

use crate::error::ScheduleError;
use crate::model::{ExecutionPlan, Problem};
use crate::sim::SimulationReport;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleResult {
    pub plan: ExecutionPlan,
    pub report: SimulationReport,
    /// Loop iterations for the heuristic, visited placements for the
    /// exhaustive search.
    pub iterations: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEvent>>,
}

/// Runs [`first_assignment`] followed by [`maximize_throughput`].
///
/// If the initial placement over-utilizes a machine at `config.r0`, the
/// initial rate is halved and the placement retried, up to
/// `config.r0_retries` times.
pub fn propose(problem: &Problem, config: &SchedulerConfig) -> Result<ScheduleResult, ScheduleError> {
    config.validate()?;
    let mut cfg = config.clone();
    let mut attempt = 0;
    let initial = loop {
        match first_assignment(problem, &cfg) {
            Ok(plan) => break plan,
            Err(ScheduleError::InfeasibleInitialPlan { .. }) if attempt < config.r0_retries => {
                attempt += 1;
                cfg.r0 /= 2.0;
            }
            Err(e) => return Err(e),
        }
    };
    maximize_throughput(&initial, problem, &cfg)
}
