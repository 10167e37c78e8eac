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

//! Schedules the bundled linear topology on the three-machine testbed and
//! prints where every instance runs.
//!
//! ```bash
//! cargo run --example schedule_linear
//! ```

use hetsched::bundled;
use hetsched::schedule::{propose, SchedulerConfig};

pub fn run() -> hetsched::Result<()> {
    let problem = bundled::benchmark_problem("linear", "testbed");
    let result = propose(&problem, &SchedulerConfig::default())?;
    let plan = &result.plan;
    println!("input rate {:.3} tuples/s after {} iterations", plan.input_rate, result.iterations);
    for spec in problem.topology().components() {
        let hosts: Vec<String> = plan
            .tasks_of(spec.id)
            .map(|t| problem.cluster().machines()[plan.assignment[t].0].label.clone())
            .collect();
        println!("{:<10} x{} on {}", spec.name, hosts.len(), hosts.join(", "));
    }
    for m in &result.report.machines {
        println!("{:<10} {:6.2} / 100 units", m.type_id, m.used);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
