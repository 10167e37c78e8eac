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

//! Exhaustive search on a small chain, next to the heuristic's answer.
//!
//! ```bash
//! cargo run --release --example optimal_search
//! ```

use hetsched::bundled;
use hetsched::schedule::{
    optimal_schedule, propose, search_space_estimate, OptimalConfig, SchedulerConfig,
};

pub fn run() -> hetsched::Result<()> {
    let problem = bundled::chain_problem("rolling_count");
    let machines = problem.cluster().len();
    let config = OptimalConfig::uniform(machines, 3);
    println!(
        "at most {:.0} placements for {} tasks per machine",
        search_space_estimate(problem.topology().len(), machines, 3 * machines as u32),
        3
    );
    let best = optimal_schedule(&problem, &config)?;
    let heuristic = propose(&problem, &SchedulerConfig::default())?;
    println!(
        "optimal   counts {:?} rate {:.3} throughput {:.3} ({} placements visited)",
        best.plan.instance_counts, best.plan.input_rate, best.report.overall_throughput, best.iterations
    );
    println!(
        "heuristic counts {:?} rate {:.3} throughput {:.3}",
        heuristic.plan.instance_counts, heuristic.plan.input_rate, heuristic.report.overall_throughput
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
