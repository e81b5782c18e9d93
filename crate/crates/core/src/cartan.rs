//! Finite Cartan types and their root systems in exact integer arithmetic.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * Cartan matrix `C[i][j] = ⟨α_j, α_i∨⟩ = 2(α_i,α_j)/(α_i,α_i)`.
//! * Bourbaki node numbering:
//!
//!   ```text
//!   A_n   1 - 2 - ... - n
//!   B_n   1 - 2 - ... - (n-1) => n          (α_n short)
//!   C_n   1 - 2 - ... - (n-1) <= n          (α_n long)
//!   D_n   1 - 2 - ... - (n-2) < { n-1, n }
//!   E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]     with 2 attached to 4
//!   F_4   1 - 2 => 3 - 4                    (α_1, α_2 long)
//!   G_2   1 <<= 2                           (α_1 short)
//!   ```
//!
//! * Roots are stored in simple-root integer coordinates, coroots in
//!   simple-coroot coordinates; the `i`-th simple root is the `i`-th standard
//!   basis vector. No Euclidean embedding is ever materialized: every pairing
//!   the crate needs is expressible through the Cartan matrix.
//!
//! Positive roots are generated by a breadth-first reflection orbit from the
//! simple roots, uniformly across types, and ordered by height then
//! lexicographically.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// The seven families of finite simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated (family, rank) pair.
///
/// Admissible ranks: A ≥ 1, B ≥ 2, C ≥ 2, D ≥ 4, E ∈ {6,7,8}, F = 4, G = 2.
/// B₂ and C₂ are both admitted even though they present isomorphic systems;
/// atlas-level canonicalization is responsible for deduplicating them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Order of the Weyl group, from the classical closed forms.
    pub fn weyl_order(self) -> u128 {
        fn factorial(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        let n = self.rank;
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => (1u128 << n) * factorial(n),
            Family::D => (1u128 << (n - 1)) * factorial(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A weight in fundamental-weight coordinates, so `⟨ω_i, α_j∨⟩ = δ_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    /// The `i`-th fundamental weight (1-based) of a rank-`rank` system.
    pub fn fundamental(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        Ok(Self::new((1..=rank).map(|j| i64::from(j == i)).collect()))
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Pairing with a coroot in simple-coroot coordinates. Because both sides
    /// are expressed in dual bases this is a plain dot product; it is exactly
    /// bilinear in each argument.
    pub fn pair_coroot(&self, coroot: &[i64]) -> Result<i64> {
        if coroot.len() != self.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.len(),
                got: coroot.len(),
            });
        }
        Ok(self.coords.iter().zip(coroot).map(|(w, c)| w * c).sum())
    }
}

/// Pairing of a weight with a coroot; see [`Weight::pair_coroot`].
pub fn pair_weight_coroot(weight: &Weight, coroot: &[i64]) -> Result<i64> {
    weight.pair_coroot(coroot)
}

/// A finite root system: Cartan matrix plus the full positive root and coroot
/// lists, generated by reflection closure from the simple roots.
///
/// Immutable after construction; all operations are pure reads.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: SquareMatrix,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
}

/// Builds the root system of a Cartan type; see [`RootSystem::new`].
pub fn build_root_system(cartan_type: CartanType) -> RootSystem {
    RootSystem::new(cartan_type)
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_matrix(cartan_type);
        let (positive_roots, positive_coroots) = closure(&cartan);
        let root_index =
            positive_roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        Self { cartan_type, cartan, positive_roots, positive_coroots, root_index }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &SquareMatrix {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, ordered by height then
    /// lexicographically. The first `rank` entries are the simple roots.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive coroots in simple-coroot coordinates, parallel to
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index of a positive root given in simple-root coordinates.
    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// Whether `v` is a root of the system (positive or negative).
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.root_index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.root_index.contains_key(&neg)
    }

    /// `⟨v, α_i∨⟩` for a vector `v` in simple-root coordinates and a simple
    /// coroot index `i` (1-based): row `i` of the Cartan matrix dotted with
    /// `v`.
    pub fn pair_root_simple_coroot(&self, v: &[i64], i: usize) -> Result<i64> {
        let rank = self.rank();
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        if v.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, got: v.len() });
        }
        Ok((0..rank).map(|j| self.cartan.get(i - 1, j) * v[j]).sum())
    }

    /// Matrix of the simple reflection `s_i` (1-based) acting on simple-root
    /// coordinates: `s_i(α_j) = α_j − C[i][j]·α_i`. The result is an
    /// involution.
    pub fn simple_reflection_matrix(&self, i: usize) -> Result<SquareMatrix> {
        let rank = self.rank();
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        let r = i - 1;
        Ok(SquareMatrix::from_fn(rank, |a, b| {
            i64::from(a == b) - i64::from(a == r) * self.cartan.get(r, b)
        }))
    }
}

/// Matrix of `s_i` acting on simple-root coordinates; see
/// [`RootSystem::simple_reflection_matrix`].
pub fn simple_reflection_action(rs: &RootSystem, i: usize) -> Result<SquareMatrix> {
    rs.simple_reflection_matrix(i)
}

fn cartan_matrix(t: CartanType) -> SquareMatrix {
    let n = t.rank();
    let mut m = SquareMatrix::from_fn(n, |i, j| i64::from(i == j) * 2);
    // 1-based edge helper: C[i][j] = a, C[j][i] = b.
    let edge = |m: &mut SquareMatrix, i: usize, j: usize, a: i64, b: i64| {
        m.set(i - 1, j - 1, a);
        m.set(j - 1, i - 1, b);
    };
    match t.family() {
        Family::A => {
            for i in 1..n {
                edge(&mut m, i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 1..n - 1 {
                edge(&mut m, i, i + 1, -1, -1);
            }
            edge(&mut m, n - 1, n, -1, -2);
        }
        Family::C => {
            for i in 1..n - 1 {
                edge(&mut m, i, i + 1, -1, -1);
            }
            edge(&mut m, n - 1, n, -2, -1);
        }
        Family::D => {
            for i in 1..n - 1 {
                edge(&mut m, i, i + 1, -1, -1);
            }
            edge(&mut m, n - 2, n, -1, -1);
        }
        Family::E => {
            let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if n >= 7 {
                edges.push((6, 7));
            }
            if n >= 8 {
                edges.push((7, 8));
            }
            for (i, j) in edges {
                edge(&mut m, i, j, -1, -1);
            }
        }
        Family::F => {
            edge(&mut m, 1, 2, -1, -1);
            edge(&mut m, 2, 3, -1, -2);
            edge(&mut m, 3, 4, -1, -1);
        }
        Family::G => {
            edge(&mut m, 1, 2, -3, -1);
        }
    }
    m
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

/// Breadth-first reflection orbit from the simple roots, tracking each root
/// together with its coroot. Root coordinates reflect through rows of `C`,
/// coroot coordinates through columns.
fn closure(cartan: &SquareMatrix) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = cartan.dim();
    let reflect_root = |v: &[i64], i: usize| {
        let s: i64 = (0..n).map(|j| cartan.get(i, j) * v[j]).sum();
        let mut out = v.to_vec();
        out[i] -= s;
        out
    };
    let reflect_coroot = |g: &[i64], i: usize| {
        let s: i64 = (0..n).map(|j| cartan.get(j, i) * g[j]).sum();
        let mut out = g.to_vec();
        out[i] -= s;
        out
    };

    let mut coroot_of: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let e: Vec<i64> = (0..n).map(|j| i64::from(j == i)).collect();
        coroot_of.insert(e.clone(), e.clone());
        frontier.push(e);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for r in frontier {
            let g = coroot_of.get(&r).expect("frontier root is recorded").clone();
            for i in 0..n {
                let r2 = reflect_root(&r, i);
                if is_positive(&r2) && !coroot_of.contains_key(&r2) {
                    coroot_of.insert(r2.clone(), reflect_coroot(&g, i));
                    next.push(r2);
                }
            }
        }
        frontier = next;
    }

    let mut roots: Vec<Vec<i64>> = coroot_of.keys().cloned().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    let coroots = roots.iter().map(|r| coroot_of[r].clone()).collect();
    (roots, coroots)
}
