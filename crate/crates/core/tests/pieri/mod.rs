//! Independent quantum Pieri oracle for Grassmannians.
//!
//! Schubert classes of the Grassmannian of `k`-planes in `n`-space are indexed
//! by partitions inside the k×(n−k) box. Multiplication by the divisor class:
//! classically, add one box in every admissible row; the quantum correction is
//! a single degree-one term `q·σ_(λ₂−1, …, λ_k−1)` present exactly when
//! `λ₁ = n−k` and `λ_k ≥ 1`. Everything here works on partitions only; the
//! bridge to the engine's matrix representatives goes through reduced words,
//! so no product logic is shared with the implementation under test.

use std::collections::BTreeSet;

use qchev_core::{
    chevalley_multiply, simple_reflection, CartanType, Family, ParabolicChoice, SchubertClass,
    WeylElement,
};

/// Trailing-zero-free partition.
type Partition = Vec<usize>;

fn trim(mut p: Partition) -> Partition {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Classical Pieri: all ways to add a single box inside the k×(n−k) box.
fn classical_terms(lambda: &Partition, k: usize, width: usize) -> BTreeSet<Partition> {
    let mut padded = lambda.clone();
    padded.resize(k, 0);
    let mut out = BTreeSet::new();
    for row in 0..k {
        let above = if row == 0 { width } else { padded[row - 1] };
        if padded[row] < above {
            let mut mu = padded.clone();
            mu[row] += 1;
            out.insert(trim(mu));
        }
    }
    out
}

/// Degree-one quantum term, when present: strip the full first row and one
/// box from every remaining row.
fn quantum_term(lambda: &Partition, k: usize, width: usize) -> Option<Partition> {
    let mut padded = lambda.clone();
    padded.resize(k, 0);
    (padded[0] == width && padded[k - 1] >= 1)
        .then(|| trim(padded[1..].iter().map(|&x| x - 1).collect()))
}

/// Extracts a reduced word from a representative by right descents and folds
/// it into a one-line permutation (`s_i` swaps positions `i`, `i+1`).
fn one_line(p: &ParabolicChoice, rep: &WeylElement, n: usize) -> Vec<usize> {
    let rank = n - 1;
    let mut word = Vec::new();
    let mut current = rep.clone();
    while !current.is_identity() {
        let i = (1..=rank)
            .find(|&i| current.sends_simple_negative(i))
            .expect("non-identity element has a right descent");
        word.push(i);
        let s = simple_reflection(p.system(), i).unwrap();
        current = current.multiply(&s).unwrap();
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    for &i in word.iter().rev() {
        perm.swap(i - 1, i);
    }
    perm
}

/// Partition of a Grassmannian permutation: `λ_j = w(k+1−j) − (k+1−j)`.
fn partition_of(p: &ParabolicChoice, class: &SchubertClass, k: usize, n: usize) -> Partition {
    let perm = one_line(p, class.rep(), n);
    let lambda: Vec<usize> = (1..=k).map(|j| perm[k - j] - (k + 1 - j)).collect();
    assert!(lambda.windows(2).all(|w| w[0] >= w[1]), "not a partition: {lambda:?}");
    assert!(lambda.first().copied().unwrap_or(0) <= n - k);
    assert_eq!(lambda.iter().sum::<usize>(), class.level(), "size must equal the level");
    trim(lambda)
}

/// Checks every basis class of the Grassmannian of `k`-planes in `n`-space
/// against the oracle; returns the number of classes checked.
pub fn check_grassmannian(k: usize, n: usize) -> usize {
    let t = CartanType::new(Family::A, n - 1).unwrap();
    let p = ParabolicChoice::build(t, k).unwrap();
    let width = n - k;
    let basis = p.schubert_basis(100_000).unwrap();

    // Convention anchor: the point class carries the full box.
    let point = basis.iter().max_by_key(|c| c.level()).unwrap();
    assert_eq!(partition_of(&p, point, k, n), vec![width; k]);

    for class in &basis {
        let lambda = partition_of(&p, class, k, n);
        let expected_classical = classical_terms(&lambda, k, width);
        let expected_quantum = quantum_term(&lambda, k, width);

        let product = chevalley_multiply(&p, class).unwrap();
        let mut got_classical = BTreeSet::new();
        let mut got_quantum = None;
        for (d, rep, coefficient) in product.iter() {
            assert_eq!(coefficient, 1, "Pieri products are multiplicity-free");
            let target = p.class_from_rep(rep.clone());
            let mu = partition_of(&p, &target, k, n);
            match d {
                0 => {
                    got_classical.insert(mu);
                }
                1 => {
                    assert!(got_quantum.is_none(), "at most one quantum term");
                    got_quantum = Some(mu);
                }
                other => panic!("unexpected curve degree {other} on Gr({k},{n})"),
            }
        }
        assert_eq!(got_classical, expected_classical, "Gr({k},{n}) λ = {lambda:?}");
        assert_eq!(got_quantum, expected_quantum, "Gr({k},{n}) λ = {lambda:?}");
    }
    basis.len()
}
