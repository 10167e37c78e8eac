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

//! Pairwise gains of the heuristic, Round-Robin and the exhaustive optimum
//! restricted to two tasks per machine.
//!
//! ```bash
//! cargo run --release --example compare_schedulers
//! ```

use hetsched::bundled;
use hetsched::schedule::{
    optimal_schedule, propose, round_robin_schedule, OptimalConfig, SchedulerConfig,
};
use hetsched::sim::compare;

pub fn run() -> hetsched::Result<()> {
    let problem = bundled::benchmark_problem("diamond", "testbed");
    let proposed = propose(&problem, &SchedulerConfig::default())?.plan;
    let rr = round_robin_schedule(&proposed.instance_counts, &problem)?;
    let optimal = optimal_schedule(&problem, &OptimalConfig::uniform(problem.cluster().len(), 2))?.plan;
    let plans = vec![
        ("proposed".to_string(), proposed),
        ("roundrobin".to_string(), rr),
        ("optimal-2".to_string(), optimal),
    ];
    let cmp = compare(&plans, &problem)?;
    for r in &cmp.rows {
        println!("{:<10} throughput {:8.3} weighted utilization {:.3}", r.label, r.throughput, r.weighted_utilization);
    }
    for p in &cmp.pairs {
        let show = |v: Option<f64>| v.map_or("n/a".to_string(), |x| format!("{x:+.3}"));
        println!(
            "{} vs {}: throughput {} utilization {} ratio {}",
            p.a,
            p.b,
            show(p.throughput_gain),
            show(p.utilization_gain),
            show(p.ratio)
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
