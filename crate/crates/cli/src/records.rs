//! Serializable report records and the shared per-space pipeline.
//!
//! Records never contain floats unless `--decimal` asked for them, never
//! contain timestamps, and serialize with a fixed field order, so identical
//! inputs produce byte-identical output. Per-record timing is kept on the
//! side, outside serialization.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use qchev_core::{
    enumerate_group, single_space_bound, BoundReport, GwWitness, NormalizationScale,
    ParabolicChoice, Rational,
};

use crate::descriptor::SpaceDescriptor;
use crate::error::CliError;
use crate::render::{pi_multiple_to_f64, pi_string, rational_string};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WitnessSummary {
    pub alpha_codim: u64,
    pub alpha_real_dim: i64,
    pub beta_complex_dim: u64,
    pub beta_real_dim: i64,
    pub coefficient: u64,
    pub real_dim_sum: i64,
    pub expected_dim_sum: i64,
    pub dim_relation_ok: bool,
}

impl WitnessSummary {
    pub fn from_witness(witness: &GwWitness, dimension: usize, index: i64) -> Self {
        let n = dimension as i64;
        let expected = 4 * n - 2 * index;
        Self {
            alpha_codim: witness.alpha_class.level() as u64,
            alpha_real_dim: 2 * (n - 1),
            beta_complex_dim: witness.beta_class.level() as u64,
            beta_real_dim: 2 * witness.beta_class.level() as i64,
            coefficient: witness.coefficient,
            real_dim_sum: witness.real_dim_sum,
            expected_dim_sum: expected,
            dim_relation_ok: witness.real_dim_sum == expected,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Citation {
    pub id: String,
    pub note: String,
}

pub fn citations_of(report: &BoundReport) -> Vec<Citation> {
    report
        .citations
        .iter()
        .map(|step| Citation { id: step.id().to_string(), note: step.note().to_string() })
        .collect()
}

/// Everything the pipeline computes for one space.
pub struct SpaceAnalysis {
    pub descriptor: SpaceDescriptor,
    pub parabolic: ParabolicChoice,
    pub weyl_order: u64,
    pub schubert_count: u64,
    pub complex_dimension: usize,
    pub index: i64,
    pub witness: GwWitness,
    pub report: BoundReport,
    pub elapsed_ms: u128,
}

/// Runs roots → Weyl → Schubert → divisor product → witness → bound for one
/// descriptor. The Weyl order is pre-checked against `cap` so oversized
/// groups fail with the cap error before any enumeration starts.
pub fn analyze_space(
    descriptor: SpaceDescriptor,
    cap: usize,
    scale: NormalizationScale,
) -> Result<SpaceAnalysis, CliError> {
    let t = descriptor.cartan_type();
    if t.weyl_order() > cap as u128 {
        return Err(CliError::Cap(format!(
            "Weyl group of {t} has order {} exceeding cap {cap}",
            t.weyl_order()
        )));
    }
    let parabolic = ParabolicChoice::build(t, descriptor.node)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let enumeration = enumerate_group(parabolic.system(), cap).map_err(CliError::from)?;
    analyze_space_with(descriptor, parabolic, &enumeration, scale)
}

/// Same pipeline with a pre-built group enumeration; the atlas sweep shares
/// one enumeration across all nodes of a type.
pub fn analyze_space_with(
    descriptor: SpaceDescriptor,
    parabolic: ParabolicChoice,
    enumeration: &qchev_core::GroupEnumeration,
    scale: NormalizationScale,
) -> Result<SpaceAnalysis, CliError> {
    let started = Instant::now();
    let basis = parabolic.schubert_basis_from(enumeration);
    let invariants = parabolic.space_invariants();
    debug_assert_eq!(basis.len() as u128, invariants.schubert_count);

    let report = single_space_bound(&parabolic, scale).map_err(CliError::from)?;
    let witness = report.witnesses.first().expect("single-space report has a witness").clone();

    Ok(SpaceAnalysis {
        descriptor,
        parabolic,
        weyl_order: enumeration.order() as u64,
        schubert_count: basis.len() as u64,
        complex_dimension: invariants.complex_dimension,
        index: invariants.index,
        witness,
        report,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AnalyzeReport {
    pub descriptor: String,
    pub family: String,
    pub rank: usize,
    pub node: usize,
    pub canonical: bool,
    pub scale: String,
    pub complex_dimension: u64,
    pub index: i64,
    pub weyl_order: u64,
    pub schubert_count: u64,
    pub witness: WitnessSummary,
    pub width_upper: String,
    pub gw_capacity: String,
    pub seshadri_upper: Option<String>,
    pub monotone_lambda: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub width_upper_decimal: Option<f64>,
    pub citations: Vec<Citation>,
    pub sharpness: String,
}

impl AnalyzeReport {
    pub fn build(analysis: &SpaceAnalysis, scale: Rational, decimal: bool) -> Self {
        let monotone = qchev_core::monotone_constant(
            &analysis.parabolic,
            NormalizationScale::new(scale).expect("scale validated by caller"),
        );
        Self {
            descriptor: analysis.descriptor.to_string(),
            family: analysis.descriptor.family.letter().to_string(),
            rank: analysis.descriptor.rank,
            node: analysis.descriptor.node,
            canonical: analysis.descriptor.is_canonical(),
            scale: rational_string(scale),
            complex_dimension: analysis.complex_dimension as u64,
            index: analysis.index,
            weyl_order: analysis.weyl_order,
            schubert_count: analysis.schubert_count,
            witness: WitnessSummary::from_witness(
                &analysis.witness,
                analysis.complex_dimension,
                analysis.index,
            ),
            width_upper: pi_string(analysis.report.gromov_width_upper),
            gw_capacity: pi_string(
                analysis.report.gw_capacity_value.expect("single-space capacity is pinned"),
            ),
            seshadri_upper: analysis.report.seshadri_upper.map(rational_string),
            monotone_lambda: pi_string(monotone),
            width_upper_decimal: decimal
                .then(|| pi_multiple_to_f64(analysis.report.gromov_width_upper)),
            citations: citations_of(&analysis.report),
            sharpness: analysis.report.sharpness.to_string(),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| out.push_str(&format!("{k:<18} {v}\n"));
        line("space", &self.descriptor);
        line("canonical", &self.canonical.to_string());
        line("complex dim", &self.complex_dimension.to_string());
        line("index", &self.index.to_string());
        line("weyl order", &self.weyl_order.to_string());
        line("schubert classes", &self.schubert_count.to_string());
        line(
            "witness",
            &format!(
                "coefficient {} at real dims ({}, {}), sum {} = {}",
                self.witness.coefficient,
                self.witness.alpha_real_dim,
                self.witness.beta_real_dim,
                self.witness.real_dim_sum,
                self.witness.expected_dim_sum
            ),
        );
        line("width upper", &self.width_upper);
        line("gw capacity", &self.gw_capacity);
        if let Some(s) = &self.seshadri_upper {
            line("seshadri upper", s);
        }
        line("monotone lambda", &self.monotone_lambda);
        out.push_str("citations:\n");
        for c in &self.citations {
            out.push_str(&format!("  {} — {}\n", c.id, c.note));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AtlasRecord {
    pub family: String,
    pub rank: usize,
    pub node: usize,
    pub canonical: bool,
    pub skipped: bool,
    pub reason: Option<String>,
    pub weyl_order: Option<u64>,
    pub schubert_count: Option<u64>,
    pub complex_dimension: Option<u64>,
    pub index: Option<i64>,
    pub witness: Option<WitnessSummary>,
    pub width_upper_pi: Option<String>,
    pub seshadri_upper: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub width_upper_decimal: Option<f64>,
    #[serde(skip)]
    pub timing_ms: u128,
}

impl AtlasRecord {
    pub fn skipped(descriptor: SpaceDescriptor, reason: String) -> Self {
        Self {
            family: descriptor.family.letter().to_string(),
            rank: descriptor.rank,
            node: descriptor.node,
            canonical: descriptor.is_canonical(),
            skipped: true,
            reason: Some(reason),
            weyl_order: None,
            schubert_count: None,
            complex_dimension: None,
            index: None,
            witness: None,
            width_upper_pi: None,
            seshadri_upper: None,
            width_upper_decimal: None,
            timing_ms: 0,
        }
    }

    pub fn computed(analysis: &SpaceAnalysis, decimal: bool) -> Self {
        Self {
            family: analysis.descriptor.family.letter().to_string(),
            rank: analysis.descriptor.rank,
            node: analysis.descriptor.node,
            canonical: analysis.descriptor.is_canonical(),
            skipped: false,
            reason: None,
            weyl_order: Some(analysis.weyl_order),
            schubert_count: Some(analysis.schubert_count),
            complex_dimension: Some(analysis.complex_dimension as u64),
            index: Some(analysis.index),
            witness: Some(WitnessSummary::from_witness(
                &analysis.witness,
                analysis.complex_dimension,
                analysis.index,
            )),
            width_upper_pi: Some(rational_string(analysis.report.gromov_width_upper)),
            seshadri_upper: analysis.report.seshadri_upper.map(rational_string),
            width_upper_decimal: decimal
                .then(|| pi_multiple_to_f64(analysis.report.gromov_width_upper)),
            timing_ms: analysis.elapsed_ms,
        }
    }

    pub fn csv_row(&self) -> String {
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.family,
            self.rank,
            self.node,
            self.complex_dimension.map(|v| v.to_string()).unwrap_or_default(),
            self.index.map(|v| v.to_string()).unwrap_or_default(),
            self.schubert_count.map(|v| v.to_string()).unwrap_or_default(),
            opt(&self.width_upper_pi),
            opt(&self.seshadri_upper),
        )
    }
}

pub const CSV_HEADER: &str =
    "family,rank,node,dim,index,schubert_count,width_upper_pi,seshadri_upper";
