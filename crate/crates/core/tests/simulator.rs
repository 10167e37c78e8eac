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

//! Analytic evaluation, the discrete-event oracle, weighted utilization and
//! plan comparison.

mod common;

use common::rel_diff;
use hetsched::bundled;
use hetsched::model::ExecutionPlan;
use hetsched::rates::max_feasible_rate;
use hetsched::schedule::{propose, round_robin_schedule, SchedulerConfig};
use hetsched::sim::{
    compare, discrete_oracle, kind_weights, max_tick, simulate, type_weights, weighted_utilization,
    OracleConfig,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kind_weights_sum_to_one(seed in any::<u64>()) {
        let problem = common::problem(&mut common::rng(seed), 6, 6);
        let weights = kind_weights(&problem);
        prop_assert_eq!(weights.len(), problem.topology().profile_keys().len());
        for row in &weights {
            prop_assert!((row.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            prop_assert!(row.iter().all(|&x| x > 0.0));
        }
        let total: f64 = type_weights(&problem).iter().map(|(_, x)| x).sum();
        prop_assert!((total - weights.len() as f64).abs() <= 1e-12 * weights.len() as f64);
    }

    #[test]
    fn analytic_report_is_self_consistent(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let problem = common::problem(&mut rng, 6, 4);
        let plan = common::plan(&mut rng, &problem, 3, 20.0);
        let r = simulate(&plan, &problem);
        let cap = problem.capacity();
        for m in &r.machines {
            let sum: f64 = m.tasks.iter().map(|t| r.tasks[t.0].tcu).sum();
            prop_assert!((sum - m.used).abs() <= 1e-9 * m.used.max(1.0));
            prop_assert!((m.mac - (cap - m.used)).abs() <= 1e-9 * cap);
            prop_assert!(m.utilization <= 1.0 && m.utilization >= 0.0);
        }
        prop_assert_eq!(r.feasible, r.max_used() <= cap + 1e-9);
        for t in &r.tasks {
            prop_assert!(t.pr <= t.ir * (1.0 + 1e-12));
        }
        let w = weighted_utilization(&r, &problem);
        prop_assert!((w.value - r.weighted_utilization).abs() <= 1e-12);
    }
}

#[test]
fn oracle_tracks_the_model_on_heuristic_plans() {
    for chain in bundled::CHAINS {
        let problem = bundled::chain_problem(chain);
        let best = propose(&problem, &SchedulerConfig::default()).unwrap();
        let plan = best.plan.with_rate(0.8 * best.plan.input_rate);
        let o = discrete_oracle(&plan, &problem, &OracleConfig::new(30.0, max_tick(&plan, &problem))).unwrap();
        let a = simulate(&plan, &problem);
        assert!(rel_diff(o.report.overall_throughput, a.overall_throughput) < 0.02, "{chain}");
        for (x, y) in o.report.machines.iter().zip(&a.machines) {
            assert!((x.used - y.used).abs() < 3.0, "{chain}: {} vs {}", x.used, y.used);
        }
    }
}

#[test]
fn overloaded_plans_lose_throughput_in_both_models() {
    let problem = bundled::chain_problem("rolling_count");
    let plan = ExecutionPlan::new(vec![1, 1, 1], vec![hetsched::MachineId(0); 3], 1.0).unwrap();
    let limit = max_feasible_rate(&plan, &problem).unwrap();
    let over = plan.with_rate(1.5 * limit);
    let a = simulate(&over, &problem);
    assert!(!a.feasible);
    let o = discrete_oracle(&over, &problem, &OracleConfig::new(20.0, max_tick(&over, &problem))).unwrap();
    assert!(!o.report.feasible);
    assert!((o.report.machines[0].used - problem.capacity()).abs() < 1e-6);
}

#[test]
fn heuristic_beats_round_robin_on_the_scaled_linear_cluster() {
    let problem = bundled::benchmark_problem("linear", "scenario1");
    let proposed = propose(&problem, &SchedulerConfig::default()).unwrap().plan;
    let rr = round_robin_schedule(&proposed.instance_counts, &problem).unwrap();
    let cmp = compare(&[("proposed".into(), proposed), ("roundrobin".into(), rr)], &problem).unwrap();
    let pair = &cmp.pairs[0];
    assert!(pair.throughput_gain.unwrap() > 0.0);
    assert!(pair.ratio.unwrap() > 1.0, "{:?}", pair.ratio);
}

#[test]
fn three_plans_give_three_pairs() {
    let problem = bundled::benchmark_problem("diamond", "testbed");
    let proposed = propose(&problem, &SchedulerConfig::default()).unwrap().plan;
    let rr = round_robin_schedule(&proposed.instance_counts, &problem).unwrap();
    let half = proposed.with_rate(proposed.input_rate / 2.0);
    let plans = vec![("p".to_string(), proposed), ("r".to_string(), rr), ("h".to_string(), half)];
    let cmp = compare(&plans, &problem).unwrap();
    let labels: Vec<(&str, &str)> = cmp.pairs.iter().map(|p| (p.a.as_str(), p.b.as_str())).collect();
    assert_eq!(labels, [("p", "r"), ("p", "h"), ("r", "h")]);
    assert!((cmp.pairs[1].throughput_gain.unwrap() - 1.0).abs() < 1e-12);
    assert!(compare(&plans[..1], &problem).is_err());
}
