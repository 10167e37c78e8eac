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

//! Flat CSV outputs and the raw profile importer.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;

use super::{ProfileDoc, ProfileUnits, Provenance};
use crate::error::{FormatError, ModelError};
use crate::model::{Cluster, ProfileEntry, ProfileTable};
use crate::sim::{Comparison, SimulationReport};

pub const RAW_PROFILE_HEADER: &str = "profile_key,type_id,seconds_per_tuple[,met]";

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, FormatError> {
    let bytes = w.into_inner().map_err(|e| FormatError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

/// One row per machine, then one row per task. Columns that do not apply
/// to a row kind are left empty.
pub fn report_csv(report: &SimulationReport) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "record", "id", "type_id", "component", "machine", "used", "mac", "utilization", "ir", "or",
        "pr", "tcu",
    ])?;
    for m in &report.machines {
        w.write_record([
            "machine".to_string(),
            m.machine.0.to_string(),
            m.type_id.clone(),
            String::new(),
            m.machine.0.to_string(),
            m.used.to_string(),
            m.mac.to_string(),
            m.utilization.to_string(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
        ])?;
    }
    for t in &report.tasks {
        w.write_record([
            "task".to_string(),
            t.task.0.to_string(),
            String::new(),
            t.component.0.to_string(),
            t.machine.0.to_string(),
            String::new(),
            String::new(),
            String::new(),
            t.ir.to_string(),
            t.or.to_string(),
            t.pr.to_string(),
            t.tcu.to_string(),
        ])?;
    }
    finish(w)
}

/// One `plan` row per scheduler, then one `pair` row per ordered pair
/// `(a, b)` with the gains of `a` over `b`.
pub fn comparison_csv(cmp: &Comparison) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "record",
        "label",
        "baseline",
        "input_rate",
        "throughput",
        "weighted_utilization",
        "normalized_utilization",
        "feasible",
        "throughput_gain",
        "utilization_gain",
        "ratio",
    ])?;
    for r in &cmp.rows {
        w.write_record([
            "plan".to_string(),
            r.label.clone(),
            String::new(),
            r.input_rate.to_string(),
            r.throughput.to_string(),
            r.weighted_utilization.to_string(),
            r.normalized_utilization.to_string(),
            r.feasible.to_string(),
            String::new(),
            String::new(),
            String::new(),
        ])?;
    }
    for p in &cmp.pairs {
        w.write_record([
            "pair".to_string(),
            p.a.clone(),
            p.b.clone(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            opt(p.throughput_gain),
            opt(p.utilization_gain),
            opt(p.ratio),
        ])?;
    }
    finish(w)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub counts: Vec<u32>,
    pub input_rate: f64,
    pub throughput: f64,
    pub argmax: bool,
}

/// `swept` holds `(column name, component index)` for the varied
/// components; the full count vector is in the `counts` column.
pub fn sweep_csv(swept: &[(String, usize)], rows: &[SweepRow]) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = swept.iter().map(|(n, _)| n.clone()).collect();
    header.extend(["counts", "input_rate", "throughput", "argmax"].map(String::from));
    w.write_record(&header)?;
    for r in rows {
        let mut rec: Vec<String> = swept.iter().map(|&(_, c)| r.counts[c].to_string()).collect();
        rec.push(r.counts.iter().map(u32::to_string).collect::<Vec<_>>().join(";"));
        rec.push(r.input_rate.to_string());
        rec.push(r.throughput.to_string());
        rec.push(r.argmax.to_string());
        w.write_record(&rec)?;
    }
    finish(w)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRow {
    profile_key: String,
    type_id: String,
    seconds_per_tuple: f64,
    #[serde(default)]
    met: f64,
}

/// Converts a raw `profile_key,type_id,seconds_per_tuple[,met]` table into a
/// capacity-unit profile document: `e = seconds_per_tuple * capacity / cores`.
///
/// Every key in the table or in `required_keys` must have a row for every
/// machine type the cluster declares.
pub fn import_raw_profiles(
    csv_text: &str,
    cluster: &Cluster,
    required_keys: &[&str],
) -> crate::Result<ProfileDoc> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(csv_text.as_bytes());
    let mut table = ProfileTable::new();
    let mut keys: BTreeSet<String> = required_keys.iter().map(|k| k.to_string()).collect();
    let cores: BTreeMap<String, f64> =
        cluster.types().iter().map(|t| (t.type_id.clone(), t.cores)).collect();
    for row in reader.deserialize::<RawRow>() {
        let row = row.map_err(FormatError::Csv)?;
        let Some(&c) = cores.get(&row.type_id) else {
            return Err(ModelError::InvalidProfileEntry {
                profile_key: row.profile_key,
                type_id: row.type_id,
                reason: "machine type not declared in the cluster".into(),
            }
            .into());
        };
        let e = row.seconds_per_tuple * cluster.capacity() / c;
        keys.insert(row.profile_key.clone());
        table.insert(row.profile_key, row.type_id, ProfileEntry::new(e, row.met))?;
    }
    for key in &keys {
        for type_id in cores.keys() {
            if table.get(key, type_id).is_err() {
                return Err(FormatError::IncompleteTable {
                    profile_key: key.clone(),
                    type_id: type_id.clone(),
                }
                .into());
            }
        }
    }
    let mut doc = ProfileDoc::from_table(&table);
    doc.provenance = Some(Provenance {
        converted_from: ProfileUnits::SecondsPerTuple,
        rule: "e = seconds_per_tuple * capacity / cores".into(),
        capacity: cluster.capacity(),
        cores,
    });
    Ok(doc)
}
