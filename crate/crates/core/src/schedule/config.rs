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

use serde::{Deserialize, Serialize};

use crate::error::ScheduleError;

/// When the heuristic stops refining its input rate.
///
/// Refinement continues while the next rate increment `rate / scale` is
/// larger than the floor. `Absolute(1.0)` stops once the increment drops to
/// one tuple/s (`rate <= scale`); `Relative(r)` stops once it drops to
/// `r * rate`, which makes the final precision independent of units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RefinementFloor {
    Absolute(f64),
    Relative(f64),
}

impl RefinementFloor {
    pub fn keep_refining(&self, rate: f64, scale: f64) -> bool {
        let step = rate / scale;
        match *self {
            RefinementFloor::Absolute(a) => step > a,
            RefinementFloor::Relative(r) => step > r * rate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchedulerConfig {
    /// Initial topology input rate, tuples/s.
    pub r0: f64,
    /// Initial rate-increment divisor.
    pub scale_init: f64,
    pub max_iterations: u64,
    /// Slack before a machine counts as over-utilized.
    pub capacity_epsilon: f64,
    pub refinement: RefinementFloor,
    /// Halvings of `r0` tried when the initial placement does not fit.
    pub r0_retries: u32,
    pub record_trace: bool,
}

impl Default for SchedulerConfig {
    fn default() -> Self {
        Self {
            r0: 1.0,
            scale_init: 1.0,
            max_iterations: 1_000_000,
            capacity_epsilon: 1e-9,
            refinement: RefinementFloor::Relative(1e-7),
            r0_retries: 20,
            record_trace: false,
        }
    }
}

impl SchedulerConfig {
    pub fn validate(&self) -> Result<(), ScheduleError> {
        let bad = |m: &str| Err(ScheduleError::InvalidConfig(m.to_string()));
        if !(self.r0.is_finite() && self.r0 > 0.0) {
            return bad("r0 must be finite and > 0");
        }
        if !(self.scale_init.is_finite() && self.scale_init >= 1.0) {
            return bad("scale_init must be >= 1");
        }
        if !(self.capacity_epsilon.is_finite() && self.capacity_epsilon >= 0.0) {
            return bad("capacity_epsilon must be >= 0");
        }
        let floor = match self.refinement {
            RefinementFloor::Absolute(v) | RefinementFloor::Relative(v) => v,
        };
        if !(floor.is_finite() && floor > 0.0) {
            return bad("refinement floor must be finite and > 0");
        }
        Ok(())
    }
}
