//! Exact width and Seshadri bound reports derived from a verified witness.
//!
//! Every bound is an exact rational multiple of π under the normalization
//! that the symplectic area of the curve generator is π. The analytic
//! inequality chain between a nonvanishing invariant and the width bound is
//! recorded as ordered citation steps on each report rather than recomputed:
//! the intermediate capacities are not finitely computable objects, but the
//! order of the steps is part of the artifact's contract.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::chevalley::{verify_nonvanishing_lemma, GwWitness};
use crate::error::{Error, Result};
use crate::schubert::ParabolicChoice;

/// Exact rational scalar used for all bound arithmetic.
pub type Rational = Rational64;

/// One inequality step in a bound derivation, ordered as in the underlying
/// proof. The identifiers are stable strings used by reports and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CitationStep {
    /// A degree-one three-point genus-zero invariant with two point
    /// insertions is nonzero on each homogeneous factor.
    GwWitness,
    /// The factors are monotone (Kähler–Einstein), so the analytic invariants
    /// agree with the algebraic ones the witness computes.
    MonotoneAgreement,
    /// Three-point invariants of a product against a curve class supported in
    /// one factor split through that factor.
    ProductSplitting,
    /// Both Hofer–Zehnder-type pseudo-capacities are bounded by the
    /// Gromov-Witten capacities, which the witness pins to the generator
    /// area.
    CapacityVsGw,
    /// The Gromov width is bounded by the pseudo-capacity chain.
    WidthVsCapacity,
    /// Width of a single normalized factor is at most π, rescaled by
    /// conformality.
    SingleSpaceBound,
    /// Width of a scaled product is at most `min |a_i| · π`.
    ProductMinBound,
    /// A product with an arbitrary closed factor is bounded by `|a| · π`.
    ClosedFactorBound,
    /// The Seshadri constant of the normalized ample line bundle is bounded
    /// by the width.
    SeshadriTransfer,
}

impl CitationStep {
    pub fn id(self) -> &'static str {
        match self {
            CitationStep::GwWitness => "gw-witness",
            CitationStep::MonotoneAgreement => "monotone-agreement",
            CitationStep::ProductSplitting => "product-splitting",
            CitationStep::CapacityVsGw => "capacity-vs-gw",
            CitationStep::WidthVsCapacity => "width-vs-capacity",
            CitationStep::SingleSpaceBound => "single-space-bound",
            CitationStep::ProductMinBound => "product-min-bound",
            CitationStep::ClosedFactorBound => "closed-factor-bound",
            CitationStep::SeshadriTransfer => "seshadri-transfer",
        }
    }

    pub fn note(self) -> &'static str {
        match self {
            CitationStep::GwWitness => {
                "a degree-one three-point genus-zero invariant with two point insertions \
                 is nonzero on each homogeneous factor"
            }
            CitationStep::MonotoneAgreement => {
                "each factor is monotone (Kahler-Einstein), so analytic and algebraic \
                 Gromov-Witten invariants agree"
            }
            CitationStep::ProductSplitting => {
                "three-point invariants of a product against a curve class in one factor \
                 split through that factor"
            }
            CitationStep::CapacityVsGw => {
                "both Hofer-Zehnder-type pseudo-capacities are bounded by the GW \
                 capacities, pinned to the generator area by the witness"
            }
            CitationStep::WidthVsCapacity => {
                "the Gromov width is bounded by the pseudo-capacity chain"
            }
            CitationStep::SingleSpaceBound => {
                "width of a normalized homogeneous factor is at most pi, rescaled by \
                 conformality"
            }
            CitationStep::ProductMinBound => {
                "width of the scaled product is at most min |a_i| times pi"
            }
            CitationStep::ClosedFactorBound => {
                "adding an arbitrary closed symplectic factor keeps the bound |a| times pi"
            }
            CitationStep::SeshadriTransfer => {
                "the Seshadri constant of the normalized ample line bundle is bounded by \
                 the Gromov width"
            }
        }
    }
}

impl fmt::Display for CitationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id(), self.note())
    }
}

/// Normalization of the symplectic form: the area of the curve generator in
/// units of π. Strictly positive; defaults to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizationScale {
    omega_on_generator: Rational,
}

impl NormalizationScale {
    pub fn new(omega_on_generator: Rational) -> Result<Self> {
        if omega_on_generator <= Rational::zero() {
            return Err(Error::ZeroScaling);
        }
        Ok(Self { omega_on_generator })
    }

    pub fn omega_on_generator(self) -> Rational {
        self.omega_on_generator
    }
}

impl Default for NormalizationScale {
    fn default() -> Self {
        Self { omega_on_generator: Rational::one() }
    }
}

/// A product factor: either a verified homogeneous space or an opaque closed
/// symplectic manifold contributing no constraint.
#[derive(Debug, Clone)]
pub enum FactorSpace {
    Homogeneous(ParabolicChoice),
    AnyClosedSymplectic,
}

/// A factor together with its nonzero form scaling.
#[derive(Debug, Clone)]
pub struct NormalizedFactor {
    space: FactorSpace,
    scaling: Rational,
}

impl NormalizedFactor {
    pub fn homogeneous(space: ParabolicChoice, scaling: Rational) -> Result<Self> {
        if scaling.is_zero() {
            return Err(Error::ZeroScaling);
        }
        Ok(Self { space: FactorSpace::Homogeneous(space), scaling })
    }

    pub fn any_closed(scaling: Rational) -> Result<Self> {
        if scaling.is_zero() {
            return Err(Error::ZeroScaling);
        }
        Ok(Self { space: FactorSpace::AnyClosedSymplectic, scaling })
    }

    pub fn space(&self) -> &FactorSpace {
        &self.space
    }

    pub fn scaling(&self) -> Rational {
        self.scaling
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.space, FactorSpace::Homogeneous(_))
    }
}

/// An exact bound report. All rational values are in units of π except
/// `seshadri_upper`, which is a plain number.
#[derive(Debug, Clone)]
pub struct BoundReport {
    /// Upper bound for the Gromov width, in units of π. Strictly positive.
    pub gromov_width_upper: Rational,
    /// The capacity value pinned by the witness for a single space, in units
    /// of π; absent for products.
    pub gw_capacity_value: Option<Rational>,
    /// Upper bound for the Seshadri constant of the normalized line bundle;
    /// present only when it applies (unscaled homogeneous factors).
    pub seshadri_upper: Option<Rational>,
    /// One witness per homogeneous factor, in factor order.
    pub witnesses: Vec<GwWitness>,
    /// The inequality chain justifying the bound, in proof order; never empty
    /// and always starting with the witness step.
    pub citations: Vec<CitationStep>,
    /// Sharpness annotation carried by every report.
    pub sharpness: &'static str,
}

const SHARPNESS_NOTE: &str =
    "exact for Hermitian symmetric factors, conjectural lower bound pi otherwise";

/// Width bound for a single homogeneous space: the generator area, i.e.
/// `scale · 1` in units of π, with the capacity value pinned to the same
/// number. Propagates a witness failure unchanged.
pub fn single_space_bound(
    p: &ParabolicChoice,
    scale: NormalizationScale,
) -> Result<BoundReport> {
    let witness = verify_nonvanishing_lemma(p)?;
    let value = scale.omega_on_generator();
    let seshadri = (value == Rational::one()).then(Rational::one);
    Ok(BoundReport {
        gromov_width_upper: value,
        gw_capacity_value: Some(value),
        seshadri_upper: seshadri,
        witnesses: vec![witness],
        citations: vec![
            CitationStep::GwWitness,
            CitationStep::MonotoneAgreement,
            CitationStep::CapacityVsGw,
            CitationStep::WidthVsCapacity,
            CitationStep::SingleSpaceBound,
        ],
        sharpness: SHARPNESS_NOTE,
    })
}

/// Width bound for a scaled product: the minimum of `|a_i|` over homogeneous
/// factors, in units of π. Arbitrary closed factors contribute no constraint
/// but require at least one homogeneous factor to accompany them.
pub fn product_bound(factors: &[NormalizedFactor]) -> Result<BoundReport> {
    if factors.iter().any(|f| f.scaling().is_zero()) {
        return Err(Error::ZeroScaling);
    }
    let mut witnesses = Vec::new();
    let mut minimum: Option<Rational> = None;
    for factor in factors {
        if let FactorSpace::Homogeneous(p) = factor.space() {
            witnesses.push(verify_nonvanishing_lemma(p)?);
            let magnitude = factor.scaling().abs();
            minimum = Some(match minimum {
                Some(current) if current <= magnitude => current,
                _ => magnitude,
            });
        }
    }
    let Some(bound) = minimum else {
        return Err(Error::NoHomogeneousFactor);
    };

    let mut citations = vec![
        CitationStep::GwWitness,
        CitationStep::MonotoneAgreement,
        CitationStep::ProductSplitting,
        CitationStep::CapacityVsGw,
        CitationStep::WidthVsCapacity,
        CitationStep::ProductMinBound,
    ];
    let has_closed_factor = factors.iter().any(|f| !f.is_homogeneous());
    if has_closed_factor {
        citations.push(CitationStep::ClosedFactorBound);
    }

    let all_unscaled =
        !has_closed_factor && factors.iter().all(|f| f.scaling() == Rational::one());
    Ok(BoundReport {
        gromov_width_upper: bound,
        gw_capacity_value: None,
        seshadri_upper: all_unscaled.then(Rational::one),
        witnesses,
        citations,
        sharpness: SHARPNESS_NOTE,
    })
}

/// Seshadri upper bound for the normalized very ample line bundle on an
/// unscaled product of homogeneous factors: exactly 1.
pub fn seshadri_bound(factors: &[NormalizedFactor]) -> Result<Rational> {
    if factors.is_empty() {
        return Err(Error::NoHomogeneousFactor);
    }
    if factors.iter().any(|f| !f.is_homogeneous()) {
        return Err(Error::ClosedFactorUnsupported);
    }
    if factors.iter().any(|f| f.scaling() != Rational::one()) {
        return Err(Error::ScaledFactorsUnsupported);
    }
    for factor in factors {
        if let FactorSpace::Homogeneous(p) = factor.space() {
            verify_nonvanishing_lemma(p)?;
        }
    }
    Ok(Rational::one())
}

/// The monotonicity constant of a verified space in units of π: the generator
/// area divided by the index.
pub fn monotone_constant(p: &ParabolicChoice, scale: NormalizationScale) -> Rational {
    scale.omega_on_generator() / Rational::from_integer(p.fano_index())
}
