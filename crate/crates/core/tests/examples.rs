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

//! Every example runs to completion.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[allow(dead_code)]
        #[path = $path]
        mod $name;
    };
}

example!(schedule_linear, "../examples/schedule_linear.rs");
example!(rate_propagation, "../examples/rate_propagation.rs");
example!(optimal_search, "../examples/optimal_search.rs");
example!(round_robin_baseline, "../examples/round_robin_baseline.rs");
example!(oracle_vs_analytic, "../examples/oracle_vs_analytic.rs");
example!(weighted_utilization, "../examples/weighted_utilization.rs");
example!(instance_sweep, "../examples/instance_sweep.rs");
example!(compare_schedulers, "../examples/compare_schedulers.rs");
example!(import_profiles, "../examples/import_profiles.rs");

#[test]
fn all_examples_run() {
    schedule_linear::run().unwrap();
    rate_propagation::run().unwrap();
    optimal_search::run().unwrap();
    round_robin_baseline::run().unwrap();
    oracle_vs_analytic::run().unwrap();
    weighted_utilization::run().unwrap();
    instance_sweep::run().unwrap();
    compare_schedulers::run().unwrap();
    import_profiles::run().unwrap();
}
