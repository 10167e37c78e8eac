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

//! Profile-weighted cluster utilization.
//!
//! Faster machine types count for more: for each task kind `j`, a type's
//! weight is its relative speed `(1/e_ij) / sum_k (1/e_kj)`. A type's total
//! weight sums over the distinct kinds used by the topology, so the weights
//! of all types add up to the number of kinds, not to one.

use serde::{Deserialize, Serialize};

use super::SimulationReport;
use crate::model::Problem;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedUtilization {
    /// `sum_i x_i * mean_utilization_i`.
    pub value: f64,
    /// `value` divided by the number of task kinds.
    pub normalized: f64,
    pub kinds: usize,
}

/// Per-kind weights `x_ij`, rows indexed like `Problem::topology().profile_keys()`,
/// columns like `Problem::cluster().present_types()`.
pub fn kind_weights(problem: &Problem) -> Vec<Vec<f64>> {
    let cluster = problem.cluster();
    let types = cluster.present_types();
    problem
        .topology()
        .profile_keys()
        .into_iter()
        .map(|key| {
            let speed: Vec<f64> = types
                .iter()
                .map(|&t| {
                    let e = problem
                        .profiles()
                        .get(key, &cluster.types()[t].type_id)
                        .expect("coverage checked by Problem")
                        .e;
                    1.0 / e
                })
                .collect();
            let total: f64 = speed.iter().sum();
            speed.into_iter().map(|s| s / total).collect()
        })
        .collect()
}

/// Weight `x_i` of every present machine type, as `(type index, weight)`.
pub fn type_weights(problem: &Problem) -> Vec<(usize, f64)> {
    let per_kind = kind_weights(problem);
    problem
        .cluster()
        .present_types()
        .into_iter()
        .enumerate()
        .map(|(col, t)| (t, per_kind.iter().map(|row| row[col]).sum()))
        .collect()
}

pub fn weighted_utilization(report: &SimulationReport, problem: &Problem) -> WeightedUtilization {
    let cluster = problem.cluster();
    let kinds = problem.topology().profile_keys().len();
    let value = type_weights(problem)
        .into_iter()
        .map(|(t, x)| {
            let utils: Vec<f64> = report
                .machines
                .iter()
                .filter(|m| cluster.type_index(m.machine) == t)
                .map(|m| m.utilization)
                .collect();
            x * utils.iter().sum::<f64>() / utils.len() as f64
        })
        .sum();
    WeightedUtilization {
        value,
        normalized: value / kinds as f64,
        kinds,
    }
}
