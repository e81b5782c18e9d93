//! The atlas sweep: one record per (family, rank ≤ k, node), JSON-lines plus
//! a CSV summary, deterministic and sorted by (family, rank, node).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use qchev_core::{
    enumerate_group, CartanType, Family, NormalizationScale, ParabolicChoice, RootSystem,
};

use crate::descriptor::SpaceDescriptor;
use crate::error::CliError;
use crate::records::{analyze_space_with, AtlasRecord, CSV_HEADER};

pub struct AtlasOptions {
    pub max_rank: usize,
    pub out: Option<PathBuf>,
    pub dedup: bool,
    pub decimal: bool,
    pub cap: usize,
}

/// All admissible types with rank at most `max_rank`, in (family, rank)
/// order.
fn types_up_to(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for rank in 1..=max_rank {
            if let Ok(t) = CartanType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out
}

pub fn run(options: &AtlasOptions) -> Result<(), CliError> {
    if options.max_rank == 0 {
        return Err(CliError::Usage("--max-rank must be at least 1".into()));
    }

    let mut records: Vec<AtlasRecord> = Vec::new();
    for t in types_up_to(options.max_rank) {
        let over_cap = t.weyl_order() > options.cap as u128;
        // One root system and one group enumeration per type, shared by all
        // nodes.
        let shared = if over_cap {
            None
        } else {
            let system = Arc::new(RootSystem::new(t));
            let enumeration =
                enumerate_group(&system, options.cap).map_err(CliError::from)?;
            Some((system, enumeration))
        };
        for node in 1..=t.rank() {
            let descriptor = SpaceDescriptor::new(t.family(), t.rank(), node)
                .expect("sweep generates valid descriptors");
            if options.dedup && !descriptor.is_canonical() {
                continue;
            }
            match &shared {
                None => records.push(AtlasRecord::skipped(
                    descriptor,
                    format!(
                        "weyl order {} exceeds enumeration cap {}",
                        t.weyl_order(),
                        options.cap
                    ),
                )),
                Some((system, enumeration)) => {
                    let parabolic = ParabolicChoice::new(Arc::clone(system), node)
                        .expect("sweep nodes are valid");
                    let analysis = analyze_space_with(
                        descriptor,
                        parabolic,
                        enumeration,
                        NormalizationScale::default(),
                    )?;
                    records.push(AtlasRecord::computed(&analysis, options.decimal));
                }
            }
        }
    }
    records.sort_by_key(|r| (r.family.clone(), r.rank, r.node));

    match &options.out {
        Some(path) => {
            write_jsonl(path, &records)?;
            write_csv(&path.with_extension("csv"), &records)?;
            print_summary_table(&records);
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for record in &records {
                serde_json::to_writer(&mut lock, record)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                writeln!(lock)?;
            }
        }
    }
    Ok(())
}

fn write_jsonl(path: &Path, records: &[AtlasRecord]) -> Result<(), CliError> {
    let file = File::create(path)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    let mut writer = BufWriter::new(file);
    for record in records {
        serde_json::to_writer(&mut writer, record).map_err(|e| CliError::Io(e.to_string()))?;
        writeln!(writer)?;
    }
    writer.flush()?;
    Ok(())
}

fn write_csv(path: &Path, records: &[AtlasRecord]) -> Result<(), CliError> {
    let file = File::create(path)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    let mut writer = BufWriter::new(file);
    writeln!(writer, "{CSV_HEADER}")?;
    for record in records {
        writeln!(writer, "{}", record.csv_row())?;
    }
    writer.flush()?;
    Ok(())
}

fn print_summary_table(records: &[AtlasRecord]) {
    println!(
        "{:<6} {:<5} {:<5} {:<5} {:<6} {:<9} {:<13} {:<9} {:<8} {}",
        "family", "rank", "node", "dim", "index", "classes", "width_upper", "seshadri", "time_ms", "status"
    );
    for r in records {
        let status = if r.skipped {
            "skipped"
        } else if r.canonical {
            "ok"
        } else {
            "ok (non-canonical)"
        };
        println!(
            "{:<6} {:<5} {:<5} {:<5} {:<6} {:<9} {:<13} {:<9} {:<8} {}",
            r.family,
            r.rank,
            r.node,
            r.complex_dimension.map(|v| v.to_string()).unwrap_or_default(),
            r.index.map(|v| v.to_string()).unwrap_or_default(),
            r.schubert_count.map(|v| v.to_string()).unwrap_or_default(),
            r.width_upper_pi.clone().map(|v| format!("{v} π")).unwrap_or_default(),
            r.seshadri_upper.clone().unwrap_or_default(),
            r.timing_ms,
            status
        );
    }
}
