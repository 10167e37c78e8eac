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

//! Propagates an input rate through the diamond topology and shows how the
//! per-task rates and machine loads follow from it.
//!
//! ```bash
//! cargo run --example rate_propagation
//! ```

use hetsched::bundled;
use hetsched::model::{ExecutionPlan, MachineId};
use hetsched::rates::{max_feasible_rate, propagate_rates, stage_factors, utilization};

pub fn run() -> hetsched::Result<()> {
    let problem = bundled::benchmark_problem("diamond", "testbed");
    let topo = problem.topology();
    // source, two instances of left, right, sink
    let plan = ExecutionPlan::from_placements(
        &[
            vec![MachineId(0)],
            vec![MachineId(0), MachineId(1)],
            vec![MachineId(1)],
            vec![MachineId(2)],
        ],
        2.0,
    )?;
    let rates = propagate_rates(&plan, topo);
    for (t, r) in rates.tasks.iter().enumerate() {
        let c = plan.task_components()[t];
        println!("task {t} ({:<6}) ir {:5.2} or {:5.2}", topo.component(c).name, r.ir, r.or);
    }
    println!("tuples per input tuple, by component: {:?}", stage_factors(topo));
    let util = utilization(&plan, &rates, &problem);
    println!("machine loads at 2 tuples/s: {:?}", util.used);
    println!("largest sustainable rate: {:.4}", max_feasible_rate(&plan, &problem)?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
