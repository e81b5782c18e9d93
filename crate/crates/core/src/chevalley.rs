//! Divisor quantum multiplication on the Schubert basis and the degree-one
//! nonvanishing witness it produces.
//!
//! For a codimension-graded class `σ_u` and the divisor class `σ_s` indexed by
//! the excluded node, the product is
//!
//! ```text
//! σ_s ⋆ σ_u = Σ ⟨ω, α∨⟩ σ_{u s_α}            over α outside the parabolic with
//!                                            ℓ(u s_α) = ℓ(u) + 1
//!           + Σ ⟨ω, α∨⟩ q^{d(α)} σ_{[u s_α]}  over α outside the parabolic with
//!                                            ℓ([u s_α]) = ℓ(u) + 1 − d(α)·I
//! ```
//!
//! where `ω` is the fundamental weight of the excluded node, `d(α)` the
//! coefficient of the excluded simple coroot in `α∨`, `I` the index, and
//! `[·]` the minimal coset representative. In the classical sum the length
//! condition already forces `u s_α` minimal; in the quantum sum lengths are
//! taken of the projected representative. The degree-`d` coefficients are
//! three-point genus-zero Gromov-Witten invariants of curve degree `d`.
//!
//! All arithmetic is exact integers; coefficients are strictly positive by
//! construction, so zero terms are simply absent.

use std::collections::BTreeMap;

use crate::cartan::Weight;
use crate::error::{Error, Result};
use crate::schubert::{Grading, ParabolicChoice, SchubertClass};
use crate::weyl::{reflection_from_root, WeylElement};

/// A finite sum of terms `coefficient · q^degree · σ_rep`, keyed by
/// `(degree, representative)` so iteration is deterministic and the least
/// representative of a degree slice is the first one encountered.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuantumProduct {
    terms: BTreeMap<(u32, WeylElement), u64>,
}

impl QuantumProduct {
    /// The multiplicative unit: `1 · q⁰ · σ_id`.
    pub fn unit(p: &ParabolicChoice) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, p.identity_class().rep().clone()), 1);
        Self { terms }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^degree · σ_rep`; absent terms read as zero.
    pub fn coefficient(&self, rep: &WeylElement, degree: u32) -> u64 {
        self.terms.get(&(degree, rep.clone())).copied().unwrap_or(0)
    }

    /// Terms in (degree, representative) order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &WeylElement, u64)> {
        self.terms.iter().map(|((d, rep), &c)| (*d, rep, c))
    }

    /// The terms of curve degree `d`, in representative order.
    pub fn degree_terms(&self, d: u32) -> Vec<(&WeylElement, u64)> {
        self.terms
            .iter()
            .filter(|((deg, _), _)| *deg == d)
            .map(|((_, rep), &c)| (rep, c))
            .collect()
    }

    pub fn has_classical_terms(&self) -> bool {
        self.terms.keys().any(|(d, _)| *d == 0)
    }

    fn add_term(&mut self, degree: u32, rep: WeylElement, coefficient: u64) {
        debug_assert!(coefficient > 0);
        *self.terms.entry((degree, rep)).or_insert(0) += coefficient;
    }
}

/// The curve degree attached to a root outside the parabolic: the coefficient
/// of the excluded simple coroot when `α∨` is expanded in simple coroots.
/// Always ≥ 1 on such roots.
pub fn curve_degree_of_root(p: &ParabolicChoice, root: &[i64]) -> Result<u32> {
    let rs = p.system();
    let k = rs.root_index(root).ok_or(Error::NotARoot)?;
    if root[p.excluded_node() - 1] == 0 {
        return Err(Error::RootInParabolic);
    }
    let coroot = &rs.positive_coroots()[k];
    let d = coroot[p.excluded_node() - 1];
    debug_assert!(d >= 1);
    Ok(d as u32)
}

/// Multiplies the divisor class into a codimension-graded basis class.
///
/// Returns [`Error::GradingError`] on a dimension-graded input; the formula
/// reads levels as codimensions throughout.
pub fn chevalley_multiply(p: &ParabolicChoice, u: &SchubertClass) -> Result<QuantumProduct> {
    if u.grading() == Grading::Dimension {
        return Err(Error::GradingError);
    }
    debug_assert!(p.is_minimal(u.rep()));

    let rs = p.system();
    let index = p.fano_index();
    let level = u.level() as i64;
    let omega = Weight::fundamental(rs.rank(), p.excluded_node())?;

    let mut product = QuantumProduct::default();
    for k in p.boundary_root_indices() {
        let root = &rs.positive_roots()[k];
        let coroot = &rs.positive_coroots()[k];
        let coefficient = omega.pair_coroot(coroot)?;
        debug_assert!(coefficient >= 1);

        let reflection = reflection_from_root(rs, root)?;
        let moved = u.rep().multiply(&reflection)?;
        let projected = p.minimal_coset_rep(&moved);
        let projected_level = projected.length(rs) as i64;

        if moved == projected && projected_level == level + 1 {
            product.add_term(0, projected, coefficient as u64);
        } else {
            let degree = coefficient; // equals the curve degree for b₂ = 1
            let target = level + 1 - degree * index;
            if target >= 0 && projected_level == target {
                product.add_term(degree as u32, projected, coefficient as u64);
            }
        }
    }
    Ok(product)
}

/// Extends [`chevalley_multiply`] linearly over a finite combination,
/// shifting curve degrees. Iterating from [`QuantumProduct::unit`] computes
/// divisor powers.
pub fn divisor_multiply_combination(
    p: &ParabolicChoice,
    combination: &QuantumProduct,
) -> Result<QuantumProduct> {
    let mut out = QuantumProduct::default();
    for (degree, rep, coefficient) in combination.iter() {
        let class = p.class_from_rep(rep.clone());
        let partial = chevalley_multiply(p, &class)?;
        for (d, term_rep, c) in partial.iter() {
            out.add_term(degree + d, term_rep.clone(), coefficient * c);
        }
    }
    Ok(out)
}

/// Reads a coefficient of `prod` as the three-point genus-zero invariant of
/// curve degree `d` with insertions: the divisor class, the class multiplied,
/// and the dimension-graded class carried by `target`'s representative.
/// Absent terms are zero.
pub fn extract_gw_invariant(prod: &QuantumProduct, target: &SchubertClass, d: u32) -> u64 {
    prod.coefficient(target.rep(), d)
}

/// A certified nonvanishing degree-one invariant with two point insertions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwWitness {
    /// The codimension-one class (real dimension `2n − 2`).
    pub alpha_class: SchubertClass,
    /// The dimension-graded third insertion (complex dimension `n + 1 − I`).
    pub beta_class: SchubertClass,
    /// The invariant's value; a strictly positive integer.
    pub coefficient: u64,
    /// `dim_ℝ(alpha) + dim_ℝ(beta)`, exactly `4n − 2I`.
    pub real_dim_sum: i64,
}

/// Certifies the degree-one nonvanishing statement for a space: the divisor
/// times the point class has no classical part and at least one degree-one
/// quantum term, and the witness dimensions satisfy the relation `4n − 2I`.
///
/// [`Error::LemmaViolation`] can only indicate an implementation bug: the
/// underlying statement holds for every single-node parabolic.
pub fn verify_nonvanishing_lemma(p: &ParabolicChoice) -> Result<GwWitness> {
    let rs = p.system();
    let n = p.complex_dimension() as i64;
    let index = p.fano_index();

    let point = p.point_class();
    let product = chevalley_multiply(p, &point)?;

    if product.has_classical_terms() {
        return Err(Error::LemmaViolation {
            reason: "divisor times point class produced a classical term".into(),
        });
    }
    let degree_one = product.degree_terms(1);
    let Some((target, coefficient)) = degree_one.first() else {
        return Err(Error::LemmaViolation {
            reason: format!("no degree-one quantum term for {}:{}", rs.cartan_type(), p.excluded_node()),
        });
    };

    let alpha_class = p.divisor_class();
    let beta_class = p.as_dimension_class(&p.class_from_rep((*target).clone()));

    let alpha_real_dim = 2 * (n - 1);
    let beta_real_dim = 2 * beta_class.level() as i64;
    let real_dim_sum = alpha_real_dim + beta_real_dim;
    if real_dim_sum != 4 * n - 2 * index {
        return Err(Error::LemmaViolation {
            reason: format!(
                "dimension relation failed: {real_dim_sum} != {}",
                4 * n - 2 * index
            ),
        });
    }

    Ok(GwWitness { alpha_class, beta_class, coefficient: *coefficient, real_dim_sum })
}
