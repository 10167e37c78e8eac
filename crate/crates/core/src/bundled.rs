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

//! Datasets compiled into the crate.
//!
//! * Topologies: `linear`, `diamond`, `star` built from the low/mid/high
//!   compute kinds, and the two-bolt chains `rolling_count` and
//!   `unique_visitor`.
//! * Clusters: `testbed` (three schedulable machines, one per type, plus a
//!   reserved coordinator) and `scenario1`..`scenario3` with 2/2/2,
//!   10/10/10 and 20/70/90 machines per type.
//! * Profiles: `benchmark` (seconds per tuple, no fixed overhead) for the
//!   compute kinds and `chains` (capacity units, synthetic) for the chains.
//!
//! The same files are on disk under `data/` for use with the CLI.

use crate::io::{parse, ClusterDoc, ProfileDoc, TopologyDoc};
use crate::model::{Cluster, Problem, ProfileTable, UserTopology};

pub const TOPOLOGIES: &[(&str, &str)] = &[
    ("linear", include_str!("../data/topologies/linear.json")),
    ("diamond", include_str!("../data/topologies/diamond.json")),
    ("star", include_str!("../data/topologies/star.json")),
    ("rolling_count", include_str!("../data/topologies/rolling_count.json")),
    ("unique_visitor", include_str!("../data/topologies/unique_visitor.json")),
];

pub const CLUSTERS: &[(&str, &str)] = &[
    ("testbed", include_str!("../data/clusters/testbed.json")),
    ("scenario1", include_str!("../data/clusters/scenario1.json")),
    ("scenario2", include_str!("../data/clusters/scenario2.json")),
    ("scenario3", include_str!("../data/clusters/scenario3.json")),
];

pub const PROFILES: &[(&str, &str)] = &[
    ("benchmark", include_str!("../data/profiles/benchmark.json")),
    ("chains", include_str!("../data/profiles/chains.json")),
];

/// Raw seconds-per-tuple table of the compute kinds, importer input format.
pub const BENCHMARK_RAW_CSV: &str = include_str!("../data/profiles/benchmark_raw.csv");

/// The three compute-kind topologies.
pub const BENCHMARK_TOPOLOGIES: [&str; 3] = ["linear", "diamond", "star"];
/// The two-bolt chains.
pub const CHAINS: [&str; 2] = ["rolling_count", "unique_visitor"];
pub const SCENARIOS: [&str; 3] = ["scenario1", "scenario2", "scenario3"];

fn lookup<'a>(set: &[(&str, &'a str)], name: &str) -> &'a str {
    set.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .unwrap_or_else(|| panic!("no bundled dataset named `{name}`"))
}

/// Panics if `name` is not bundled.
pub fn topology(name: &str) -> UserTopology {
    parse::<TopologyDoc>(lookup(TOPOLOGIES, name), name)
        .expect("bundled topology parses")
        .build()
        .expect("bundled topology is valid")
}

/// Panics if `name` is not bundled.
pub fn cluster(name: &str) -> Cluster {
    parse::<ClusterDoc>(lookup(CLUSTERS, name), name)
        .expect("bundled cluster parses")
        .build()
        .expect("bundled cluster is valid")
}

/// Panics if `name` is not bundled.
pub fn profiles(name: &str, cluster: &Cluster) -> ProfileTable {
    parse::<ProfileDoc>(lookup(PROFILES, name), name)
        .expect("bundled profiles parse")
        .build(cluster)
        .expect("bundled profiles are valid")
}

/// A compute-kind topology on a bundled cluster with the benchmark profiles.
pub fn benchmark_problem(topology_name: &str, cluster_name: &str) -> Problem {
    let c = cluster(cluster_name);
    let p = profiles("benchmark", &c);
    Problem::new(topology(topology_name), c, p).expect("bundled problem is consistent")
}

/// A two-bolt chain on the testbed cluster with the synthetic profiles.
pub fn chain_problem(chain: &str) -> Problem {
    let c = cluster("testbed");
    let p = profiles("chains", &c);
    Problem::new(topology(chain), c, p).expect("bundled problem is consistent")
}
