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

//! Error types for every layer of the crate.
//!
//! Each module reports through its own enum; [`Error`] unifies them for the
//! CLI, which maps every leaf variant to a distinct process exit code.

use thiserror::Error;

use crate::model::{ComponentId, MachineId};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("topology has no spout")]
    NoSpout,
    #[error("topology has no bolt")]
    NoBolt,
    #[error("component ids must be dense 0..{expected}, found {found} at position {expected}")]
    NonDenseComponentIds { expected: usize, found: usize },
    #[error("cycle detected through component {component}")]
    CycleDetected { component: ComponentId },
    #[error("bolt {component} is not reachable from any spout")]
    UnreachableBolt { component: ComponentId },
    #[error("component {from} has an edge to unknown component {to}")]
    DanglingEdge { from: ComponentId, to: usize },
    #[error("component {from} lists downstream {to} more than once")]
    DuplicateEdge { from: ComponentId, to: ComponentId },
    #[error("spout {spout} has an upstream edge from {from}")]
    SpoutHasUpstream { spout: ComponentId, from: ComponentId },
    #[error("component {component} has invalid alpha {alpha} (must be finite and >= 0)")]
    InvalidAlpha { component: ComponentId, alpha: f64 },
    #[error("cluster has no machines")]
    EmptyCluster,
    #[error("cluster capacity must be finite and > 0, got {0}")]
    InvalidCapacity(f64),
    #[error("machine type `{0}` is declared twice")]
    DuplicateMachineType(String),
    #[error("machine type `{type_id}` has invalid core count {cores}")]
    InvalidCores { type_id: String, cores: f64 },
    #[error("machine ids must be dense 0..{expected}, found {found}")]
    NonDenseMachineIds { expected: usize, found: usize },
    #[error("machine {machine} refers to unknown machine type `{type_id}`")]
    UnknownMachineType { machine: MachineId, type_id: String },
    #[error("profile entry ({profile_key}, {type_id}) is invalid: {reason}")]
    InvalidProfileEntry {
        profile_key: String,
        type_id: String,
        reason: String,
    },
    #[error("profile entry ({profile_key}, {type_id}) is defined twice")]
    DuplicateProfileEntry { profile_key: String, type_id: String },
    #[error("no profile entry for ({profile_key}, {type_id})")]
    MissingProfileEntry { profile_key: String, type_id: String },
    #[error("instance ordinal {k} out of range 1..={count} for component {component}")]
    OrdinalOutOfRange {
        component: ComponentId,
        k: u32,
        count: u32,
    },
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("invalid execution plan: {0}")]
    InvalidPlan(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RateError {
    #[error("machine {machine} is over capacity at zero input rate (fixed overhead {met} > {capacity})")]
    InfeasibleAtZeroRate {
        machine: MachineId,
        met: f64,
        capacity: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScheduleError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Rate(#[from] RateError),
    #[error("initial plan over-utilizes machine {machine} ({used:.3} > {capacity}) at input rate {rate}; try a smaller r0")]
    InfeasibleInitialPlan {
        machine: MachineId,
        used: f64,
        capacity: f64,
        rate: f64,
    },
    #[error("iteration limit {0} exceeded")]
    IterationLimitExceeded(u64),
    #[error("budget {budget} is smaller than the component count {components}")]
    BudgetTooSmall { budget: u32, components: usize },
    #[error("search space estimate {estimate:.3e} exceeds the cost cap {cap:.3e}")]
    SearchSpaceTooLarge { estimate: f64, cap: f64 },
    #[error("per-machine budget has {got} entries but the cluster has {machines} machines")]
    BudgetLengthMismatch { got: usize, machines: usize },
    #[error("invalid scheduler configuration: {0}")]
    InvalidConfig(String),
    #[error("no feasible plan exists within the search space")]
    NoFeasiblePlan,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("tick {tick} is too coarse; must be <= {max}")]
    TickTooCoarse { tick: f64, max: f64 },
    #[error("horizon {horizon} must span at least 100 ticks of {tick}")]
    HorizonTooShort { horizon: f64, tick: f64 },
    #[error("comparison needs at least two plans, got {0}")]
    TooFewPlans(usize),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("schema error in {document}: {message}")]
    Schema { document: String, message: String },
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("profile table is incomplete: missing ({profile_key}, {type_id})")]
    IncompleteTable { profile_key: String, type_id: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Rate(#[from] RateError),
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("usage: {0}")]
    Usage(String),
    #[error("sweep range for `{0}` is empty")]
    RangeEmpty(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
