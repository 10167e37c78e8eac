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

//! Round-Robin placement with the heuristic's instance counts, on every
//! bundled cluster.
//!
//! ```bash
//! cargo run --example round_robin_baseline
//! ```

use hetsched::bundled;
use hetsched::schedule::{propose, round_robin_schedule, SchedulerConfig};
use hetsched::sim::simulate;

pub fn run() -> hetsched::Result<()> {
    for cluster in std::iter::once("testbed").chain(bundled::SCENARIOS) {
        for topology in bundled::BENCHMARK_TOPOLOGIES {
            let problem = bundled::benchmark_problem(topology, cluster);
            let proposed = propose(&problem, &SchedulerConfig::default())?;
            let rr = round_robin_schedule(&proposed.plan.instance_counts, &problem)?;
            let rr_tp = simulate(&rr, &problem).overall_throughput;
            let tp = proposed.report.overall_throughput;
            println!(
                "{cluster:<10} {topology:<8} proposed {tp:9.2}  round-robin {rr_tp:9.2}  gain {:+6.1}%",
                100.0 * (tp / rr_tp - 1.0)
            );
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
