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

//! Runs the discrete-event oracle on a scheduled plan below and above its
//! sustainable rate.
//!
//! ```bash
//! cargo run --release --example oracle_vs_analytic
//! ```

use hetsched::bundled;
use hetsched::schedule::{propose, SchedulerConfig};
use hetsched::sim::{discrete_oracle, max_tick, simulate, OracleConfig};

pub fn run() -> hetsched::Result<()> {
    let problem = bundled::chain_problem("unique_visitor");
    let best = propose(&problem, &SchedulerConfig::default())?.plan;
    for factor in [0.5, 0.9, 1.2] {
        let plan = best.with_rate(factor * best.input_rate);
        let mut config = OracleConfig::new(30.0, max_tick(&plan, &problem));
        config.jitter_seed = Some(1);
        let oracle = discrete_oracle(&plan, &problem, &config)?;
        let analytic = simulate(&plan, &problem);
        println!(
            "{:.1}x rate: throughput analytic {:8.2} oracle {:8.2}; backlog {} -> {} tokens",
            factor,
            analytic.overall_throughput,
            oracle.report.overall_throughput,
            oracle.backlog_at_warmup.iter().sum::<u64>(),
            oracle.final_backlog.iter().sum::<u64>()
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
