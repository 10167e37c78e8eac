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

//! Profile-weighted utilization of the heuristic's plan on the 6-machine
//! scenario.
//!
//! ```bash
//! cargo run --example weighted_utilization
//! ```

use hetsched::bundled;
use hetsched::schedule::{propose, SchedulerConfig};
use hetsched::sim::{kind_weights, type_weights, weighted_utilization};

pub fn run() -> hetsched::Result<()> {
    let problem = bundled::benchmark_problem("star", "scenario1");
    let types = problem.cluster().types();
    for (key, row) in problem.topology().profile_keys().iter().zip(kind_weights(&problem)) {
        println!("{key:<12} {row:.3?}");
    }
    for (t, x) in type_weights(&problem) {
        println!("{:<10} weight {x:.3}", types[t].type_id);
    }
    let result = propose(&problem, &SchedulerConfig::default())?;
    let w = weighted_utilization(&result.report, &problem);
    println!("weighted {:.3}, normalized over {} kinds {:.3}", w.value, w.kinds, w.normalized);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
