//! Parabolic quotients `W^P` with a single excluded node, Schubert bases,
//! Poincaré duality, space invariants and the adjacent-partner construction.
//!
//! A parabolic choice names the one simple node *excluded* from the parabolic,
//! which makes the `b₂(G/P) = 1` condition structural: there is no way to
//! express a multi-node exclusion. All public indices are 1-based Bourbaki.

use std::sync::Arc;

use crate::cartan::{CartanType, RootSystem};
use crate::error::{Error, Result};
use crate::weyl::{
    enumerate_closure, longest_element, simple_reflection, GroupEnumeration, WeylElement,
};

/// Whether a class is graded by complex dimension or complex codimension.
///
/// One coset representative underlies both readings of a Schubert class; the
/// flag keeps dimension and codimension from being silently confused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grading {
    Dimension,
    Codimension,
}

/// A Schubert class: a minimal-length coset representative together with its
/// grading flag. `level` is always the length of the representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchubertClass {
    rep: WeylElement,
    grading: Grading,
    level: usize,
}

impl SchubertClass {
    pub fn rep(&self) -> &WeylElement {
        &self.rep
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn level(&self) -> usize {
        self.level
    }
}

/// Exact invariants of the space `G/P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceInvariants {
    /// Complex dimension `n = |R+| − |R_P+|`.
    pub complex_dimension: usize,
    /// Pairing of the anticanonical class with the curve generator; controls
    /// the grading drop of quantum terms. Always ≥ 2 here.
    pub index: i64,
    /// Number of Schubert classes, `|W^P| = |W| / |W_P|`.
    pub schubert_count: u128,
}

/// A maximal parabolic datum: the root system together with the single simple
/// node excluded from the parabolic.
#[derive(Debug, Clone)]
pub struct ParabolicChoice {
    system: Arc<RootSystem>,
    excluded: usize,
}

impl ParabolicChoice {
    /// `excluded` is the 1-based index of the unique node outside the
    /// parabolic, i.e. the node whose divisor class generates degree two
    /// homology.
    pub fn new(system: Arc<RootSystem>, excluded: usize) -> Result<Self> {
        let rank = system.rank();
        if excluded == 0 || excluded > rank {
            return Err(Error::IndexOutOfRange { index: excluded, rank });
        }
        Ok(Self { system, excluded })
    }

    /// Convenience constructor building the root system in place.
    pub fn build(cartan_type: CartanType, excluded: usize) -> Result<Self> {
        Self::new(Arc::new(RootSystem::new(cartan_type)), excluded)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.system)
    }

    /// The excluded node (1-based).
    pub fn excluded_node(&self) -> usize {
        self.excluded
    }

    /// The included simple indices `S` (1-based).
    pub fn included_set(&self) -> Vec<usize> {
        (1..=self.system.rank()).filter(|&i| i != self.excluded).collect()
    }

    /// Indices into `positive_roots()` of the roots outside the parabolic
    /// subsystem, i.e. those whose coordinate at the excluded node is nonzero.
    pub fn boundary_root_indices(&self) -> Vec<usize> {
        let e = self.excluded - 1;
        self.system
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| r[e] != 0)
            .map(|(k, _)| k)
            .collect()
    }

    /// Whether `w` is the minimal-length representative of its coset, i.e.
    /// `w(α_i)` is positive for every included `i`.
    pub fn is_minimal(&self, w: &WeylElement) -> bool {
        self.included_set().iter().all(|&i| !w.sends_simple_negative(i))
    }

    /// The minimal-length representative of `w`'s coset: while some included
    /// `s_i` shortens `w`, right-multiply by it. The result is independent of
    /// the reduction order.
    pub fn minimal_coset_rep(&self, w: &WeylElement) -> WeylElement {
        let mut current = w.clone();
        'reduce: loop {
            for i in self.included_set() {
                if current.sends_simple_negative(i) {
                    let s = simple_reflection(&self.system, i).expect("valid index");
                    current = current.multiply(&s).expect("same system");
                    continue 'reduce;
                }
            }
            return current;
        }
    }

    /// The complete Schubert basis, codimension-graded, ordered by level then
    /// representative. Enumerates the full group and keeps the minimal coset
    /// representatives.
    pub fn schubert_basis(&self, cap: usize) -> Result<Vec<SchubertClass>> {
        let enumeration = crate::weyl::enumerate_group(&self.system, cap)?;
        Ok(self.schubert_basis_from(&enumeration))
    }

    /// Schubert basis extracted from an existing group enumeration.
    pub fn schubert_basis_from(&self, enumeration: &GroupEnumeration) -> Vec<SchubertClass> {
        let mut classes: Vec<SchubertClass> = enumeration
            .elements()
            .iter()
            .zip(enumeration.lengths())
            .filter(|(w, _)| self.is_minimal(w))
            .map(|(w, &level)| SchubertClass {
                rep: w.clone(),
                grading: Grading::Codimension,
                level,
            })
            .collect();
        classes.sort_by(|a, b| (a.level, &a.rep).cmp(&(b.level, &b.rep)));
        classes
    }

    /// Re-expresses a class through the longest element: the representative
    /// becomes the minimal representative of `w₀·rep` and the grading flag
    /// flips. An involution, with `level(u) + level(dual(u)) = n`.
    pub fn dual_class(&self, class: &SchubertClass) -> SchubertClass {
        let w0 = longest_element(&self.system);
        let rep = self.minimal_coset_rep(&w0.multiply(&class.rep).expect("same system"));
        let level = rep.length(&self.system);
        let grading = match class.grading {
            Grading::Dimension => Grading::Codimension,
            Grading::Codimension => Grading::Dimension,
        };
        SchubertClass { rep, grading, level }
    }

    /// The partner construction: the dual of the minimal representative of
    /// `rep · s_e`, where `e` is the excluded node.
    pub fn adjacent_partner(&self, class: &SchubertClass) -> SchubertClass {
        let s = simple_reflection(&self.system, self.excluded).expect("valid index");
        let moved = self.minimal_coset_rep(&class.rep.multiply(&s).expect("same system"));
        let level = moved.length(&self.system);
        self.dual_class(&SchubertClass { rep: moved, grading: class.grading, level })
    }

    /// Complex dimension `n = |R+ ∖ R_P+|`.
    pub fn complex_dimension(&self) -> usize {
        self.boundary_root_indices().len()
    }

    /// The grading-drop constant: the sum of the roots outside the parabolic,
    /// paired against the excluded simple coroot.
    pub fn fano_index(&self) -> i64 {
        let rs = &self.system;
        let mut sum = vec![0i64; rs.rank()];
        for k in self.boundary_root_indices() {
            for (s, c) in sum.iter_mut().zip(&rs.positive_roots()[k]) {
                *s += c;
            }
        }
        rs.pair_root_simple_coroot(&sum, self.excluded).expect("validated index")
    }

    /// Exact space invariants. The Schubert count is the Weyl order divided by
    /// the order of the parabolic subgroup, which is enumerated directly from
    /// its generators; intended for desk-scale systems (through E₇ parabolic
    /// subgroups).
    pub fn space_invariants(&self) -> SpaceInvariants {
        let subgroup = enumerate_closure(&self.system, &self.included_set(), usize::MAX)
            .expect("cap is effectively unbounded");
        let weyl_order = self.system.cartan_type().weyl_order();
        let parabolic_order = subgroup.order() as u128;
        debug_assert_eq!(weyl_order % parabolic_order, 0);
        SpaceInvariants {
            complex_dimension: self.complex_dimension(),
            index: self.fano_index(),
            schubert_count: weyl_order / parabolic_order,
        }
    }

    /// The codimension-one class indexed by the reflection of the excluded
    /// node.
    pub fn divisor_class(&self) -> SchubertClass {
        let rep = simple_reflection(&self.system, self.excluded).expect("valid index");
        debug_assert!(self.is_minimal(&rep));
        SchubertClass { rep, grading: Grading::Codimension, level: 1 }
    }

    /// The point class: codimension `n`, minimal representative of the coset
    /// of the longest element.
    pub fn point_class(&self) -> SchubertClass {
        let rep = self.minimal_coset_rep(&longest_element(&self.system));
        let level = rep.length(&self.system);
        debug_assert_eq!(level, self.complex_dimension());
        SchubertClass { rep, grading: Grading::Codimension, level }
    }

    /// The fundamental class viewed at codimension zero.
    pub fn identity_class(&self) -> SchubertClass {
        SchubertClass {
            rep: WeylElement::identity(&self.system),
            grading: Grading::Codimension,
            level: 0,
        }
    }

    /// Wraps a representative in a codimension-graded class, computing its
    /// level. Debug-asserts minimality.
    pub fn class_from_rep(&self, rep: WeylElement) -> SchubertClass {
        debug_assert!(self.is_minimal(&rep));
        let level = rep.length(&self.system);
        SchubertClass { rep, grading: Grading::Codimension, level }
    }

    /// The same geometric class re-read in the dimension grading, keeping the
    /// representative. This is the Poincaré pairing partner of a
    /// codimension-graded class.
    pub fn as_dimension_class(&self, class: &SchubertClass) -> SchubertClass {
        SchubertClass { rep: class.rep.clone(), grading: Grading::Dimension, level: class.level }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;
    use crate::weyl::enumerate_group;
    use std::collections::BTreeMap;

    fn parabolic(family: Family, rank: usize, node: usize) -> ParabolicChoice {
        ParabolicChoice::build(CartanType::new(family, rank).unwrap(), node).unwrap()
    }

    #[test]
    fn excluded_node_is_validated() {
        let t = CartanType::new(Family::A, 3).unwrap();
        assert!(ParabolicChoice::build(t, 0).is_err());
        assert!(ParabolicChoice::build(t, 4).is_err());
        assert!(ParabolicChoice::build(t, 2).is_ok());
    }

    #[test]
    fn minimal_rep_trivial_cases() {
        let p = parabolic(Family::A, 3, 1);
        let id = WeylElement::identity(p.system());
        assert_eq!(p.minimal_coset_rep(&id), id);
        for i in p.included_set() {
            let s = simple_reflection(p.system(), i).unwrap();
            assert!(p.minimal_coset_rep(&s).is_identity());
        }
    }

    #[test]
    fn minimal_rep_matches_brute_force_on_projective_space() {
        // Exclude node 1 of A3; the subgroup generated by {2,3} is brute-force
        // enumerable, so the coset minimum is checkable directly.
        let p = parabolic(Family::A, 3, 1);
        let rs = p.system();
        let w0 = longest_element(rs);
        let subgroup = enumerate_closure(rs, &[2, 3], 1000).unwrap();
        let brute = subgroup
            .elements()
            .iter()
            .map(|pi| w0.multiply(pi).unwrap().length(rs))
            .min()
            .unwrap();
        let rep = p.minimal_coset_rep(&w0);
        assert_eq!(rep.length(rs), brute);
        assert_eq!(rep.length(rs), 3);
        assert!(p.is_minimal(&rep));
    }

    #[test]
    fn projective_space_basis_is_one_class_per_level() {
        for n in 2..=4 {
            let p = parabolic(Family::A, n, 1);
            let basis = p.schubert_basis(10_000).unwrap();
            assert_eq!(basis.len(), n + 1);
            let levels: Vec<usize> = basis.iter().map(|c| c.level()).collect();
            assert_eq!(levels, (0..=n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn grassmannian_basis_levels() {
        // Levels of the six classes follow the Gaussian binomial [4 choose 2].
        let p = parabolic(Family::A, 3, 2);
        let basis = p.schubert_basis(1000).unwrap();
        let levels: Vec<usize> = basis.iter().map(|c| c.level()).collect();
        assert_eq!(levels, vec![0, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn basis_count_times_parabolic_order_is_group_order() {
        for (family, rank, node) in
            [(Family::A, 3, 2), (Family::B, 3, 1), (Family::C, 3, 3), (Family::G, 2, 2)]
        {
            let p = parabolic(family, rank, node);
            let basis = p.schubert_basis(100_000).unwrap();
            let subgroup = enumerate_closure(p.system(), &p.included_set(), 100_000).unwrap();
            let group = enumerate_group(p.system(), 100_000).unwrap();
            assert_eq!(basis.len() * subgroup.order(), group.order());
            assert_eq!(basis.len() as u128, p.space_invariants().schubert_count);
        }
    }

    #[test]
    fn minimality_characterization_holds_on_every_basis_rep() {
        let p = parabolic(Family::B, 3, 2);
        for class in p.schubert_basis(10_000).unwrap() {
            for i in p.included_set() {
                let image = class.rep().image_of_simple(i);
                assert!(image.iter().all(|&x| x >= 0), "rep sends α_{i} negative");
            }
        }
    }

    #[test]
    fn dual_class_examples() {
        let p = parabolic(Family::A, 3, 2);
        let n = p.complex_dimension();
        let id = p.identity_class();
        let dual = p.dual_class(&id);
        assert_eq!(dual.level(), n);
        assert_eq!(dual.grading(), Grading::Dimension);

        for class in p.schubert_basis(1000).unwrap() {
            let dd = p.dual_class(&p.dual_class(&class));
            assert_eq!(dd, class);
            assert_eq!(class.level() + p.dual_class(&class).level(), n);
        }
    }

    #[test]
    fn cp2_middle_class_is_self_dual() {
        let p = parabolic(Family::A, 2, 1);
        let basis = p.schubert_basis(100).unwrap();
        let middle = basis.iter().find(|c| c.level() == 1).unwrap();
        let dual = p.dual_class(middle);
        assert_eq!(dual.level(), 1);
        assert_eq!(dual.rep(), middle.rep());
    }

    #[test]
    fn level_multiset_is_symmetric() {
        for (family, rank, node) in [
            (Family::A, 4, 2),
            (Family::B, 3, 3),
            (Family::C, 3, 2),
            (Family::D, 4, 1),
            (Family::F, 4, 4),
            (Family::G, 2, 1),
        ] {
            let p = parabolic(family, rank, node);
            let n = p.complex_dimension();
            let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
            for class in p.schubert_basis(100_000).unwrap() {
                *histogram.entry(class.level()).or_default() += 1;
            }
            for (&level, &count) in &histogram {
                assert_eq!(histogram.get(&(n - level)), Some(&count), "{family}{rank}:{node}");
            }
        }
    }

    #[test]
    fn space_invariants_fixtures() {
        for n in 1..=5 {
            let p = parabolic(Family::A, n, 1);
            let inv = p.space_invariants();
            assert_eq!(inv.complex_dimension, n);
            assert_eq!(inv.index, n as i64 + 1);
            assert_eq!(inv.schubert_count, n as u128 + 1);
        }
        let gr24 = parabolic(Family::A, 3, 2).space_invariants();
        assert_eq!((gr24.complex_dimension, gr24.index), (4, 4));
        let q3 = parabolic(Family::B, 2, 1).space_invariants();
        assert_eq!((q3.complex_dimension, q3.index), (3, 3));
    }

    #[test]
    fn index_is_at_least_two() {
        for family in [Family::A, Family::B, Family::C, Family::D, Family::F, Family::G] {
            for rank in 1..=4 {
                let Ok(t) = CartanType::new(family, rank) else { continue };
                for node in 1..=rank {
                    let p = ParabolicChoice::build(t, node).unwrap();
                    assert!(p.fano_index() >= 2, "{t}:{node}");
                }
            }
        }
    }

    #[test]
    fn point_coset_moved_by_the_excluded_reflection_dualizes_to_the_divisor() {
        // Instantiating the partner construction at the longest element
        // itself: [w₀·s_e]∨ = [s_e], the codimension-one class.
        for (family, rank, node) in [(Family::A, 3, 2), (Family::B, 2, 1), (Family::G, 2, 2)] {
            let p = parabolic(family, rank, node);
            let w0 = longest_element(p.system());
            let s = simple_reflection(p.system(), node).unwrap();
            let moved = p.minimal_coset_rep(&w0.multiply(&s).unwrap());
            let partner = p.dual_class(&p.class_from_rep(moved));
            assert_eq!(partner.level(), 1);
            assert_eq!(partner.rep(), p.divisor_class().rep());
        }
    }

    #[test]
    fn adjacent_partner_of_identity_is_dual_of_divisor() {
        let p = parabolic(Family::A, 3, 2);
        let partner = p.adjacent_partner(&p.identity_class());
        let expected = p.dual_class(&p.divisor_class());
        assert_eq!(partner.rep(), expected.rep());
        assert_eq!(partner.level(), p.complex_dimension() - 1);
    }

    #[test]
    fn adjacent_partner_stays_in_the_basis() {
        let p = parabolic(Family::A, 3, 2);
        let reps: Vec<_> =
            p.schubert_basis(1000).unwrap().iter().map(|c| c.rep().clone()).collect();
        for class in p.schubert_basis(1000).unwrap() {
            let partner = p.adjacent_partner(&class);
            assert!(reps.contains(partner.rep()));
        }
    }
}
