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

//! Converts a seconds-per-tuple table into capacity units for a cluster
//! whose fast type has four cores.
//!
//! ```bash
//! cargo run --example import_profiles
//! ```

use hetsched::io::{import_raw_profiles, to_json};
use hetsched::model::{Cluster, MachineType};

const RAW: &str = "\
profile_key,type_id,seconds_per_tuple,met
parse,small,0.012,0.5
parse,large,0.004,0.5
score,small,0.030,1
score,large,0.009,1
";

pub fn run() -> hetsched::Result<()> {
    let mut large = MachineType::new("large", "4-core");
    large.cores = 4.0;
    let cluster = Cluster::from_counts(100.0, vec![MachineType::new("small", "1-core"), large], &[2, 1])?;
    let doc = import_raw_profiles(RAW, &cluster, &["parse", "score"])?;
    print!("{}", to_json(&doc));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
