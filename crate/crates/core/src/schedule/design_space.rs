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

use crate::error::ScheduleError;

/// Every instance-count vector `x` with `x_i >= 1` and `sum(x) <= budget`,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct InstanceVectors {
    budget: u32,
    current: Vec<u32>,
    sum: u32,
    started: bool,
    done: bool,
}

impl InstanceVectors {
    pub fn new(components: usize, budget: u32) -> Result<Self, ScheduleError> {
        if components == 0 || (budget as usize) < components {
            return Err(ScheduleError::BudgetTooSmall { budget, components });
        }
        Ok(Self {
            budget,
            current: vec![1; components],
            sum: components as u32,
            started: false,
            done: false,
        })
    }

    fn advance(&mut self) -> bool {
        for j in (0..self.current.len()).rev() {
            if self.sum < self.budget {
                self.current[j] += 1;
                self.sum += 1;
                return true;
            }
            // reset position j and carry into j - 1
            self.sum -= self.current[j] - 1;
            self.current[j] = 1;
        }
        false
    }
}

impl Iterator for InstanceVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        if self.advance() {
            Some(self.current.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// Number of vectors [`InstanceVectors`] yields: `C(budget, components)`.
pub fn design_space_size(components: usize, budget: u32) -> Result<u128, ScheduleError> {
    if components == 0 || (budget as usize) < components {
        return Err(ScheduleError::BudgetTooSmall { budget, components });
    }
    let (n, k) = (budget as u128, components as u128);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Ok(acc)
}
