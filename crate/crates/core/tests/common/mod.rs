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

//! Seeded generators and independent oracles shared by the integration
//! tests.
#![allow(dead_code)]

use hetsched::model::{
    Cluster, ComponentKind, ComponentSpec, ExecutionPlan, MachineId, MachineType, Problem,
    ProfileEntry, ProfileTable, UserTopology,
};
use hetsched::rates::{propagate_rates, utilization};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random DAG: one or two spouts first, every bolt fed by at least one
/// lower-numbered component, extra forward edges at random.
pub fn topology(rng: &mut ChaCha8Rng, n: usize) -> UserTopology {
    assert!(n >= 2);
    let spouts = if n >= 4 && rng.gen_bool(0.3) { 2 } else { 1 };
    let kinds = rng.gen_range(1..=n);
    let mut down: Vec<Vec<usize>> = vec![Vec::new(); n];
    for b in spouts..n {
        let feeder = rng.gen_range(0..b);
        down[feeder].push(b);
        for (u, d) in down.iter_mut().enumerate().take(b) {
            if u != feeder && rng.gen_bool(0.2) {
                d.push(b);
            }
        }
    }
    let comps = (0..n)
        .map(|i| {
            let kind = if i < spouts { ComponentKind::Spout } else { ComponentKind::Bolt };
            let key = format!("k{}", rng.gen_range(0..kinds));
            let alpha = if rng.gen_bool(0.5) { 1.0 } else { rng.gen_range(0.5..2.0) };
            let mut d = down[i].clone();
            d.sort_unstable();
            ComponentSpec::new(i, format!("c{i}"), kind, key, alpha, &d)
        })
        .collect();
    UserTopology::new("random", comps).expect("generator builds valid DAGs")
}

/// `m` machines drawn from up to `m` types.
pub fn cluster(rng: &mut ChaCha8Rng, m: usize) -> Cluster {
    let t = rng.gen_range(1..=m);
    let types: Vec<MachineType> = (0..t).map(|i| MachineType::new(format!("T{i}"), "")).collect();
    let mut counts = vec![0; t];
    for _ in 0..m {
        counts[rng.gen_range(0..t)] += 1;
    }
    Cluster::from_counts(100.0, types, &counts).unwrap()
}

/// Slopes `base_key * speed_type * noise` with speeds spanning `spread`,
/// overheads uniform in `[0, met_max)`.
pub fn profiles(
    rng: &mut ChaCha8Rng,
    topology: &UserTopology,
    cluster: &Cluster,
    spread: f64,
    met_max: f64,
) -> ProfileTable {
    let speed: Vec<f64> = cluster.types().iter().map(|_| rng.gen_range(1.0..spread)).collect();
    let mut table = ProfileTable::new();
    for key in topology.profile_keys() {
        let base = rng.gen_range(1.0..5.0);
        for (t, ty) in cluster.types().iter().enumerate() {
            let e = base * speed[t] * rng.gen_range(0.9..1.1);
            let met = if met_max > 0.0 { rng.gen_range(0.0..met_max) } else { 0.0 };
            table.insert(key, ty.type_id.clone(), ProfileEntry::new(e, met)).unwrap();
        }
    }
    table
}

pub fn problem(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Problem {
    let n = rng.gen_range(2..=max_n);
    let m = rng.gen_range(1..=max_m);
    let t = topology(rng, n);
    let c = cluster(rng, m);
    let p = profiles(rng, &t, &c, 3.0, 2.0);
    Problem::new(t, c, p).unwrap()
}

/// Random counts in `1..=max_count` and a random assignment at `rate`.
pub fn plan(rng: &mut ChaCha8Rng, problem: &Problem, max_count: u32, rate: f64) -> ExecutionPlan {
    let m = problem.cluster().len();
    let counts: Vec<u32> = (0..problem.topology().len()).map(|_| rng.gen_range(1..=max_count)).collect();
    let total: u32 = counts.iter().sum();
    let assignment = (0..total).map(|_| MachineId(rng.gen_range(0..m))).collect();
    ExecutionPlan::new(counts, assignment, rate).unwrap()
}

/// A plan whose tasks are shuffled within each component.
pub fn shuffle_within_components(rng: &mut ChaCha8Rng, plan: &ExecutionPlan) -> ExecutionPlan {
    let mut placements = plan.placements();
    for p in &mut placements {
        p.shuffle(rng);
    }
    ExecutionPlan::from_placements(&placements, plan.input_rate).unwrap()
}

pub fn feasible_at(plan: &ExecutionPlan, problem: &Problem, rate: f64) -> bool {
    let p = plan.with_rate(rate);
    let rates = propagate_rates(&p, problem.topology());
    utilization(&p, &rates, problem).feasible()
}

/// Largest feasible input rate by bisection on the full rate and
/// utilization model; `None` when even rate 0 is infeasible.
pub fn bisect_rate(plan: &ExecutionPlan, problem: &Problem) -> Option<f64> {
    if !feasible_at(plan, problem, 0.0) {
        return None;
    }
    let mut hi = 1.0;
    while feasible_at(plan, problem, hi) {
        hi *= 2.0;
        if hi > 1e12 {
            return Some(f64::INFINITY);
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if feasible_at(plan, problem, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
