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

//! Round-Robin throughput over a grid of bolt instance counts, written as
//! CSV.
//!
//! ```bash
//! cargo run --example instance_sweep
//! ```

use hetsched::bundled;
use hetsched::cli::sweep_rows;
use hetsched::io::sweep_csv;

pub fn run() -> hetsched::Result<()> {
    let problem = bundled::chain_problem("rolling_count");
    let rows = sweep_rows(&problem, &[1, 1, 1], &[(1, 1, 4), (2, 1, 4)])?;
    print!("{}", sweep_csv(&[("split".into(), 1), ("count".into(), 2)], &rows)?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
