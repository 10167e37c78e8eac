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

//! Plan evaluation: the analytic steady-state model, an independent
//! discrete-event oracle, utilization weighting and scheduler comparison.

mod analytic;
mod compare;
mod oracle;
mod weights;

pub use analytic::{simulate, MachineReport, SimulationReport, TaskReport};
pub use compare::{compare, Comparison, ComparisonRow, PairwiseGain};
pub use oracle::{discrete_oracle, max_tick, OracleConfig, OracleReport};
pub use weights::{kind_weights, type_weights, weighted_utilization, WeightedUtilization};
