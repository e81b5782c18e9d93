//! Weyl group elements as integer action matrices, lengths, reflections and
//! capped breadth-first enumeration.
//!
//! An element is canonically its rank×rank matrix on simple-root coordinates
//! (column `j` = image of `α_j`), so equality and hashing need no word
//! normalization. Composition follows `(a·b)(x) = a(b(x))`.

use std::collections::HashSet;

use crate::cartan::{CartanType, RootSystem};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    cartan_type: CartanType,
    matrix: SquareMatrix,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        Self { cartan_type: rs.cartan_type(), matrix: SquareMatrix::identity(rs.rank()) }
    }

    pub fn from_matrix(rs: &RootSystem, matrix: SquareMatrix) -> Self {
        debug_assert_eq!(matrix.dim(), rs.rank());
        Self { cartan_type: rs.cartan_type(), matrix }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Group product; `self` acts after `other`.
    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.cartan_type != other.cartan_type {
            return Err(Error::SystemMismatch);
        }
        Ok(WeylElement { cartan_type: self.cartan_type, matrix: self.matrix.mul(&other.matrix) })
    }

    /// Image of a vector in simple-root coordinates.
    pub fn apply(&self, coords: &[i64]) -> Vec<i64> {
        self.matrix.apply(coords)
    }

    /// Image of the simple root `α_i` (1-based).
    pub fn image_of_simple(&self, i: usize) -> Vec<i64> {
        self.matrix.column(i - 1)
    }

    /// Whether `w(α_i) < 0`, i.e. `i` is a right descent: `ℓ(w·s_i) = ℓ(w)−1`.
    pub fn sends_simple_negative(&self, i: usize) -> bool {
        // Root images are roots, hence all-nonnegative or all-nonpositive.
        let col = i - 1;
        (0..self.matrix.dim()).all(|r| self.matrix.get(r, col) <= 0)
    }

    /// Coxeter length as the inversion count
    /// `|{α ∈ R+ : w(α) ∈ −R+}|`, which equals the minimal word length.
    pub fn length(&self, rs: &RootSystem) -> usize {
        debug_assert_eq!(rs.cartan_type(), self.cartan_type);
        rs.positive_roots()
            .iter()
            .filter(|r| {
                let image = self.matrix.apply(r);
                image.iter().all(|&x| x <= 0)
            })
            .count()
    }
}

/// The simple reflection `s_i` (1-based) as a group element.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<WeylElement> {
    Ok(WeylElement::from_matrix(rs, rs.simple_reflection_matrix(i)?))
}

/// The longest element `w₀`, found by greedy ascent: while some simple
/// reflection increases the length, right-multiply by the least such one.
/// Terminates at the unique element with `ℓ(w₀) = |R+|`, an involution.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let generators: Vec<WeylElement> =
        (1..=rs.rank()).map(|i| simple_reflection(rs, i).expect("valid index")).collect();
    let mut w = WeylElement::identity(rs);
    loop {
        let ascent = (1..=rs.rank()).find(|&i| !w.sends_simple_negative(i));
        match ascent {
            Some(i) => w = w.multiply(&generators[i - 1]).expect("same system"),
            None => return w,
        }
    }
}

/// The reflection `s_α` for a positive root `α`, acting as
/// `x ↦ x − ⟨x, α∨⟩·α`. An involution of odd length.
pub fn reflection_from_root(rs: &RootSystem, root: &[i64]) -> Result<WeylElement> {
    let k = rs.root_index(root).ok_or(Error::NotARoot)?;
    let coroot = &rs.positive_coroots()[k];
    let rank = rs.rank();
    // ⟨α_j, α∨⟩ expands through columns of the Cartan matrix.
    let pair_with_simple: Vec<i64> = (0..rank)
        .map(|j| (0..rank).map(|m| rs.cartan_matrix().get(m, j) * coroot[m]).sum())
        .collect();
    let matrix = SquareMatrix::from_fn(rank, |i, j| {
        i64::from(i == j) - root[i] * pair_with_simple[j]
    });
    Ok(WeylElement::from_matrix(rs, matrix))
}

/// A full enumeration of a Weyl group in deterministic order: by length,
/// then lexicographically by action matrix.
#[derive(Debug, Clone)]
pub struct GroupEnumeration {
    elements: Vec<WeylElement>,
    lengths: Vec<usize>,
    order: usize,
}

impl GroupEnumeration {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Lengths parallel to [`elements`](Self::elements); the BFS level of an
    /// element is its Coxeter length.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// Breadth-first enumeration from the identity by right multiplication with
/// the simple reflections. Fails cleanly with [`Error::CapExceeded`] once more
/// than `cap` elements have been discovered.
pub fn enumerate_group(rs: &RootSystem, cap: usize) -> Result<GroupEnumeration> {
    enumerate_closure(rs, &(1..=rs.rank()).collect::<Vec<_>>(), cap)
}

/// BFS closure under right multiplication by the given simple generators
/// (1-based indices). With all generators this enumerates `W`; with a subset
/// `S` it enumerates the standard parabolic subgroup `W_S`.
pub(crate) fn enumerate_closure(
    rs: &RootSystem,
    generator_indices: &[usize],
    cap: usize,
) -> Result<GroupEnumeration> {
    let generators: Vec<WeylElement> = generator_indices
        .iter()
        .map(|&i| simple_reflection(rs, i).expect("valid index"))
        .collect();

    let identity = WeylElement::identity(rs);
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity.clone()];
    let mut lengths = vec![0usize];
    let mut frontier = vec![identity];
    let mut level = 0usize;

    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for g in &generators {
                let product = w.multiply(g).expect("same system");
                if !seen.contains(&product) {
                    seen.insert(product.clone());
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { order_lower_bound: seen.len() });
                    }
                    next.push(product);
                }
            }
        }
        next.sort();
        for w in &next {
            elements.push(w.clone());
            lengths.push(level);
        }
        frontier = next;
    }

    let order = elements.len();
    Ok(GroupEnumeration { elements, lengths, order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanType, Family};
    use proptest::prelude::*;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::new(CartanType::new(family, rank).unwrap())
    }

    #[test]
    fn simple_reflection_is_involution() {
        let rs = rs(Family::A, 2);
        let s1 = simple_reflection(&rs, 1).unwrap();
        assert!(s1.multiply(&s1).unwrap().is_identity());
        let id = WeylElement::identity(&rs);
        assert_eq!(id.multiply(&s1).unwrap(), s1);
    }

    #[test]
    fn braid_relation_in_a2() {
        let rs = rs(Family::A, 2);
        let s1 = simple_reflection(&rs, 1).unwrap();
        let s2 = simple_reflection(&rs, 2).unwrap();
        let lhs = s1.multiply(&s2).unwrap().multiply(&s1).unwrap();
        let rhs = s2.multiply(&s1).unwrap().multiply(&s2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn system_mismatch_detected() {
        let a2 = rs(Family::A, 2);
        let b2 = rs(Family::B, 2);
        let s1 = simple_reflection(&a2, 1).unwrap();
        let t1 = simple_reflection(&b2, 1).unwrap();
        assert_eq!(s1.multiply(&t1), Err(Error::SystemMismatch));
    }

    #[test]
    fn lengths_of_small_elements() {
        let rs = rs(Family::A, 2);
        assert_eq!(WeylElement::identity(&rs).length(&rs), 0);
        for i in 1..=2 {
            assert_eq!(simple_reflection(&rs, i).unwrap().length(&rs), 1);
        }
        let w0 = longest_element(&rs);
        assert_eq!(w0.length(&rs), 3);
    }

    #[test]
    fn longest_element_properties() {
        let a1 = rs(Family::A, 1);
        assert_eq!(longest_element(&a1), simple_reflection(&a1, 1).unwrap());

        let a2 = rs(Family::A, 2);
        let w0 = longest_element(&a2);
        for r in a2.positive_roots() {
            let image = w0.apply(r);
            assert!(image.iter().all(|&x| x <= 0));
        }
        assert!(w0.multiply(&w0).unwrap().is_identity());

        let f4 = rs(Family::F, 4);
        let w0 = longest_element(&f4);
        assert_eq!(w0.length(&f4), 24);
        assert!(w0.multiply(&w0).unwrap().is_identity());
    }

    #[test]
    fn reflection_from_root_examples() {
        let rs = rs(Family::A, 2);
        for i in 1..=2 {
            let e: Vec<i64> = (1..=2).map(|j| i64::from(j == i)).collect();
            assert_eq!(reflection_from_root(&rs, &e).unwrap(), simple_reflection(&rs, i).unwrap());
        }
        let s1 = simple_reflection(&rs, 1).unwrap();
        let s2 = simple_reflection(&rs, 2).unwrap();
        let s121 = s1.multiply(&s2).unwrap().multiply(&s1).unwrap();
        let r = reflection_from_root(&rs, &[1, 1]).unwrap();
        assert_eq!(r, s121);
        assert!(r.multiply(&r).unwrap().is_identity());
        assert_eq!(r.length(&rs) % 2, 1);
        assert_eq!(reflection_from_root(&rs, &[2, 1]), Err(Error::NotARoot));
    }

    #[test]
    fn reflection_lengths_are_odd_in_b3() {
        let rs = rs(Family::B, 3);
        for root in rs.positive_roots() {
            let s = reflection_from_root(&rs, root).unwrap();
            assert_eq!(s.length(&rs) % 2, 1, "root {root:?}");
            assert!(s.multiply(&s).unwrap().is_identity());
        }
    }

    #[test]
    fn enumeration_orders() {
        assert_eq!(enumerate_group(&rs(Family::A, 2), 100).unwrap().order(), 6);
        assert_eq!(enumerate_group(&rs(Family::A, 3), 100).unwrap().order(), 24);
        // Product of fundamental degrees 2·6·8·12.
        assert_eq!(enumerate_group(&rs(Family::F, 4), 10_000).unwrap().order(), 1152);
    }

    #[test]
    fn enumeration_cap_exceeded() {
        let err = enumerate_group(&rs(Family::E, 6), 1000).unwrap_err();
        match err {
            Error::CapExceeded { order_lower_bound } => assert!(order_lower_bound > 1000),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn enumeration_matches_closed_form_orders() {
        for (family, rank) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 4),
            (Family::G, 2),
        ] {
            let system = rs(family, rank);
            let expected = system.cartan_type().weyl_order();
            let order = enumerate_group(&system, 100_000).unwrap().order();
            assert_eq!(order as u128, expected, "{family}{rank}");
        }
    }

    #[test]
    fn enumeration_is_closed_and_deterministic() {
        let system = rs(Family::B, 2);
        let first = enumerate_group(&system, 100).unwrap();
        let second = enumerate_group(&system, 100).unwrap();
        assert_eq!(first.elements(), second.elements());
        let all: HashSet<_> = first.elements().iter().cloned().collect();
        for w in first.elements() {
            for i in 1..=2 {
                let s = simple_reflection(&system, i).unwrap();
                assert!(all.contains(&w.multiply(&s).unwrap()));
            }
        }
        // Ordered by length.
        let lengths: Vec<usize> = first.elements().iter().map(|w| w.length(&system)).collect();
        assert_eq!(lengths, first.lengths());
        assert!(lengths.windows(2).all(|p| p[0] <= p[1]));
    }

    #[test]
    fn longest_element_complements_lengths() {
        // ℓ(w₀·w) = ℓ(w₀) − ℓ(w) across small groups.
        for (family, rank) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
            let system = rs(family, rank);
            let w0 = longest_element(&system);
            let l0 = w0.length(&system);
            for w in enumerate_group(&system, 1000).unwrap().elements() {
                let prod = w0.multiply(w).unwrap();
                assert_eq!(prod.length(&system), l0 - w.length(&system));
            }
        }
    }

    fn small_type() -> impl Strategy<Value = (Family, usize)> {
        prop_oneof![
            (Just(Family::A), 1usize..=4),
            (Just(Family::B), 2usize..=4),
            (Just(Family::C), 2usize..=4),
            Just((Family::D, 4)),
            Just((Family::G, 2)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn right_multiplication_changes_length_by_one(
            (family, rank) in small_type(),
            word in proptest::collection::vec(0usize..4, 0..8),
        ) {
            let system = rs(family, rank);
            let mut w = WeylElement::identity(&system);
            for step in word {
                let i = step % rank + 1;
                w = w.multiply(&simple_reflection(&system, i).unwrap()).unwrap();
            }
            let l = w.length(&system);
            for i in 1..=rank {
                let ws = w.multiply(&simple_reflection(&system, i).unwrap()).unwrap();
                let ls = ws.length(&system);
                prop_assert!(ls == l + 1 || ls + 1 == l);
            }
        }

        #[test]
        fn action_preserves_the_root_set(
            (family, rank) in small_type(),
            word in proptest::collection::vec(0usize..4, 0..10),
        ) {
            let system = rs(family, rank);
            let mut w = WeylElement::identity(&system);
            for step in word {
                let i = step % rank + 1;
                w = w.multiply(&simple_reflection(&system, i).unwrap()).unwrap();
            }
            for r in system.positive_roots() {
                prop_assert!(system.is_root(&w.apply(r)));
            }
        }
    }
}
