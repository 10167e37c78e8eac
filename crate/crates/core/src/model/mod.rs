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

//! Domain types shared by the rate model, the schedulers and the simulator.

mod cluster;
mod plan;
mod problem;
mod profile;
mod topology;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use cluster::{Cluster, Machine, MachineType, DEFAULT_CAPACITY};
pub use plan::ExecutionPlan;
pub use problem::Problem;
pub use profile::{predict_tcu, ProfileEntry, ProfileTable};
pub use topology::{validate_topology, ComponentKind, ComponentSpec, UserTopology};

macro_rules! dense_id {
    ($(#[$meta:meta])* $name:ident, $prefix:literal) => {
        $(#[$meta])*
        #[derive(
            Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
        )]
        #[serde(transparent)]
        pub struct $name(pub usize);

        impl $name {
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }

        impl From<usize> for $name {
            fn from(v: usize) -> Self {
                Self(v)
            }
        }
    };
}

dense_id!(
    /// Dense index of a component in its topology.
    ComponentId,
    "c"
);
dense_id!(
    /// Dense index of a schedulable machine.
    MachineId,
    "m"
);
dense_id!(
    /// Dense, zero-based index of one task (component instance) in a plan.
    TaskId,
    "t"
);
