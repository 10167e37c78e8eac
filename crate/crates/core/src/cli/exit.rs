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

//! Process exit codes. Every leaf error variant has its own code; the
//! table is mirrored in `docs/formats.md`.

use crate::error::{Error, FormatError, ModelError, RateError, ScheduleError, SimError};

fn model(e: &ModelError) -> i32 {
    match e {
        ModelError::NoSpout => 20,
        ModelError::NoBolt => 21,
        ModelError::NonDenseComponentIds { .. } => 22,
        ModelError::CycleDetected { .. } => 23,
        ModelError::UnreachableBolt { .. } => 24,
        ModelError::DanglingEdge { .. } => 25,
        ModelError::DuplicateEdge { .. } => 26,
        ModelError::SpoutHasUpstream { .. } => 27,
        ModelError::InvalidAlpha { .. } => 28,
        ModelError::EmptyCluster => 29,
        ModelError::InvalidCapacity(_) => 30,
        ModelError::DuplicateMachineType(_) => 31,
        ModelError::InvalidCores { .. } => 32,
        ModelError::NonDenseMachineIds { .. } => 33,
        ModelError::UnknownMachineType { .. } => 34,
        ModelError::InvalidProfileEntry { .. } => 35,
        ModelError::DuplicateProfileEntry { .. } => 36,
        ModelError::MissingProfileEntry { .. } => 37,
        ModelError::OrdinalOutOfRange { .. } => 38,
        ModelError::UnknownComponent(_) => 39,
        ModelError::InvalidPlan(_) => 40,
    }
}

fn rate(e: &RateError) -> i32 {
    match e {
        RateError::InfeasibleAtZeroRate { .. } => 45,
    }
}

fn schedule(e: &ScheduleError) -> i32 {
    match e {
        ScheduleError::Model(m) => model(m),
        ScheduleError::Rate(r) => rate(r),
        ScheduleError::InfeasibleInitialPlan { .. } => 50,
        ScheduleError::IterationLimitExceeded(_) => 51,
        ScheduleError::BudgetTooSmall { .. } => 52,
        ScheduleError::SearchSpaceTooLarge { .. } => 53,
        ScheduleError::BudgetLengthMismatch { .. } => 54,
        ScheduleError::InvalidConfig(_) => 55,
        ScheduleError::NoFeasiblePlan => 56,
    }
}

fn sim(e: &SimError) -> i32 {
    match e {
        SimError::Model(m) => model(m),
        SimError::TickTooCoarse { .. } => 60,
        SimError::HorizonTooShort { .. } => 61,
        SimError::TooFewPlans(_) => 62,
    }
}

fn format(e: &FormatError) -> i32 {
    match e {
        FormatError::Io { .. } => 10,
        FormatError::Schema { .. } => 11,
        FormatError::Csv(_) => 12,
        FormatError::IncompleteTable { .. } => 13,
    }
}

/// Exit code for `e`. Code 2 is shared with command-line parse errors.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => 2,
        Error::RangeEmpty(_) => 3,
        Error::Format(f) => format(f),
        Error::Model(m) => model(m),
        Error::Rate(r) => rate(r),
        Error::Schedule(s) => schedule(s),
        Error::Sim(s) => sim(s),
    }
}
