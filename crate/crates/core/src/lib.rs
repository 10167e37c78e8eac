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

//! Heterogeneity-aware scheduling for stream-processing topologies.
//!
//! Given a topology DAG, a cluster of machines of different types, and
//! per-(component kind, machine type) CPU profiles, the crate
//!
//! * chooses how many instances each component gets and where each instance
//!   runs, maximizing the sustainable input rate without over-utilizing any
//!   machine ([`schedule::propose`]);
//! * provides Round-Robin and exhaustive-optimal baselines
//!   ([`schedule::round_robin_schedule`], [`schedule::optimal_schedule`]);
//! * evaluates any plan analytically ([`sim::simulate`]) and with an
//!   independent discrete-event oracle ([`sim::discrete_oracle`]).
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod bundled;
pub mod cli;
pub mod error;
pub mod io;
pub mod model;
pub mod rates;
pub mod schedule;
pub mod sim;

pub use error::{Error, Result};
pub use model::{
    Cluster, ComponentId, ComponentKind, ComponentSpec, ExecutionPlan, MachineId, MachineType,
    Problem, ProfileEntry, ProfileTable, TaskId, UserTopology,
};
