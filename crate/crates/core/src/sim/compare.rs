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

use super::{simulate, SimulationReport};
use crate::error::SimError;
use crate::model::{ExecutionPlan, Problem};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub label: String,
    pub input_rate: f64,
    pub throughput: f64,
    pub weighted_utilization: f64,
    pub normalized_utilization: f64,
    pub feasible: bool,
    pub machine_utilization: Vec<f64>,
}

/// Relative gains of plan `a` over plan `b`.
///
/// `ratio` is the throughput gain divided by the utilization gain; above 1
/// means `a` turns extra CPU into proportionally more throughput. It is
/// `None` ("n/a") when the utilization gain is zero or undefined.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairwiseGain {
    pub a: String,
    pub b: String,
    pub throughput_gain: Option<f64>,
    pub utilization_gain: Option<f64>,
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub rows: Vec<ComparisonRow>,
    pub pairs: Vec<PairwiseGain>,
}

fn relative_gain(a: f64, b: f64) -> Option<f64> {
    if b.abs() > 0.0 {
        Some((a - b) / b)
    } else if a == b {
        Some(0.0)
    } else {
        None
    }
}

pub fn compare(plans: &[(String, ExecutionPlan)], problem: &Problem) -> Result<Comparison, SimError> {
    if plans.len() < 2 {
        return Err(SimError::TooFewPlans(plans.len()));
    }
    for (_, p) in plans {
        p.validate(problem.topology(), problem.cluster())?;
    }
    let reports: Vec<SimulationReport> = plans.iter().map(|(_, p)| simulate(p, problem)).collect();
    let rows: Vec<ComparisonRow> = plans
        .iter()
        .zip(&reports)
        .map(|((label, plan), r)| ComparisonRow {
            label: label.clone(),
            input_rate: plan.input_rate,
            throughput: r.overall_throughput,
            weighted_utilization: r.weighted_utilization,
            normalized_utilization: r.normalized_utilization,
            feasible: r.feasible,
            machine_utilization: r.machines.iter().map(|m| m.utilization).collect(),
        })
        .collect();
    let mut pairs = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (a, b) = (&rows[i], &rows[j]);
            let tg = relative_gain(a.throughput, b.throughput);
            let ug = relative_gain(a.weighted_utilization, b.weighted_utilization);
            let ratio = match (tg, ug) {
                (Some(t), Some(u)) if u.abs() > 1e-12 => Some(t / u),
                _ => None,
            };
            pairs.push(PairwiseGain {
                a: a.label.clone(),
                b: b.label.clone(),
                throughput_gain: tg,
                utilization_gain: ug,
                ratio,
            });
        }
    }
    Ok(Comparison { rows, pairs })
}
