//! Product bounds from factor specs like `A1:1:1 A3:2:-1/2 any`.

use serde::{Deserialize, Serialize};

use qchev_core::{product_bound, NormalizedFactor, ParabolicChoice, Rational};

use crate::descriptor::SpaceDescriptor;
use crate::error::CliError;
use crate::records::{citations_of, Citation};
use crate::render::{parse_rational, pi_multiple_to_f64, pi_string, rational_string};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FactorEcho {
    pub descriptor: String,
    pub scaling: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProductReport {
    pub factors: Vec<FactorEcho>,
    pub width_upper: String,
    pub seshadri_upper: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub width_upper_decimal: Option<f64>,
    pub citations: Vec<Citation>,
    pub sharpness: String,
}

/// Parses one factor spec: `descriptor:a` for a homogeneous factor, or the
/// `any` / `any:0` token for an arbitrary closed factor. The scaling slot of
/// the `any` token is a placeholder; the factor contributes no constraint.
fn parse_factor(spec: &str, cap: usize) -> Result<(FactorEcho, NormalizedFactor), CliError> {
    if spec == "any" || spec == "any:0" {
        let factor = NormalizedFactor::any_closed(Rational::from_integer(1))
            .expect("placeholder scaling is nonzero");
        return Ok((
            FactorEcho { descriptor: "any".into(), scaling: String::new() },
            factor,
        ));
    }
    let (head, tail) = spec
        .rsplit_once(':')
        .ok_or_else(|| CliError::Usage(format!("factor {spec:?} must look like A3:2:1")))?;
    let descriptor = SpaceDescriptor::parse(head).map_err(CliError::Usage)?;
    let scaling = parse_rational(tail).map_err(CliError::Usage)?;
    if scaling == Rational::from_integer(0) {
        return Err(CliError::Usage(format!("factor {spec:?} has zero scaling")));
    }
    let t = descriptor.cartan_type();
    if t.weyl_order() > cap as u128 {
        return Err(CliError::Cap(format!(
            "Weyl group of {t} has order {} exceeding cap {cap}",
            t.weyl_order()
        )));
    }
    let parabolic = ParabolicChoice::build(t, descriptor.node)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let factor =
        NormalizedFactor::homogeneous(parabolic, scaling).map_err(CliError::from)?;
    Ok((
        FactorEcho { descriptor: descriptor.to_string(), scaling: rational_string(scaling) },
        factor,
    ))
}

pub fn run(specs: &[String], cap: usize, decimal: bool) -> Result<ProductReport, CliError> {
    if specs.is_empty() {
        return Err(CliError::Usage("product needs at least one factor spec".into()));
    }
    let mut echoes = Vec::new();
    let mut factors = Vec::new();
    for spec in specs {
        let (echo, factor) = parse_factor(spec, cap)?;
        echoes.push(echo);
        factors.push(factor);
    }
    let report = product_bound(&factors).map_err(|e| match e {
        qchev_core::Error::NoHomogeneousFactor | qchev_core::Error::ZeroScaling => {
            CliError::Usage(e.to_string())
        }
        other => CliError::from(other),
    })?;

    Ok(ProductReport {
        factors: echoes,
        width_upper: pi_string(report.gromov_width_upper),
        seshadri_upper: report.seshadri_upper.map(rational_string),
        width_upper_decimal: decimal.then(|| pi_multiple_to_f64(report.gromov_width_upper)),
        citations: citations_of(&report),
        sharpness: report.sharpness.to_string(),
    })
}

impl ProductReport {
    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str("factors:\n");
        for f in &self.factors {
            if f.scaling.is_empty() {
                out.push_str("  any closed symplectic factor\n");
            } else {
                out.push_str(&format!("  {}  scaled by {}\n", f.descriptor, f.scaling));
            }
        }
        out.push_str(&format!("gromov width   ≤ {}\n", self.width_upper));
        if let Some(s) = &self.seshadri_upper {
            out.push_str(&format!("seshadri const ≤ {s}\n"));
        }
        out.push_str("citations:\n");
        for c in &self.citations {
            out.push_str(&format!("  {} — {}\n", c.id, c.note));
        }
        out
    }
}
