//! Space descriptors `FAMILYrank:node` with Bourbaki node numbering, and
//! their canonical representatives under diagram symmetries.

use std::fmt;

use qchev_core::{CartanType, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpaceDescriptor {
    pub family: Family,
    pub rank: usize,
    pub node: usize,
}

impl SpaceDescriptor {
    pub fn new(family: Family, rank: usize, node: usize) -> Result<Self, String> {
        let t = CartanType::new(family, rank).map_err(|e| e.to_string())?;
        if node == 0 || node > t.rank() {
            return Err(format!("node {node} out of range 1..={rank}"));
        }
        Ok(Self { family, rank, node })
    }

    /// Parses `"A3:2"`-style descriptors.
    pub fn parse(text: &str) -> Result<Self, String> {
        let (type_part, node_part) = text
            .split_once(':')
            .ok_or_else(|| format!("descriptor {text:?} must look like A3:2"))?;
        let mut chars = type_part.chars();
        let letter = chars.next().ok_or_else(|| format!("descriptor {text:?} is empty"))?;
        let family = Family::from_letter(letter)
            .ok_or_else(|| format!("unknown family letter {letter:?}"))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| format!("bad rank in descriptor {text:?}"))?;
        let node: usize =
            node_part.parse().map_err(|_| format!("bad node in descriptor {text:?}"))?;
        Self::new(family, rank, node)
    }

    pub fn cartan_type(&self) -> CartanType {
        CartanType::new(self.family, self.rank).expect("descriptor was validated")
    }

    /// The least equivalent descriptor under diagram symmetries, plus the
    /// exceptional rank-two coincidence between the B and C families.
    pub fn canonical_form(&self) -> SpaceDescriptor {
        let (family, rank, node) = (self.family, self.rank, self.node);
        let canon = |node| SpaceDescriptor { family, rank, node };
        match (family, rank) {
            // A_n reverses the chain: node j ≅ node n+1−j.
            (Family::A, n) => canon(node.min(n + 1 - node)),
            // C2 is B2 with the chain reversed.
            (Family::C, 2) => SpaceDescriptor { family: Family::B, rank: 2, node: 3 - node },
            // D4 permutes nodes {1, 3, 4}; larger D_n swap the two tail nodes.
            (Family::D, 4) if node != 2 => canon(1),
            (Family::D, n) if node == n => canon(n - 1),
            // E6 reverses the chain: 1 ≅ 6, 3 ≅ 5.
            (Family::E, 6) if node == 6 => canon(1),
            (Family::E, 6) if node == 5 => canon(3),
            _ => *self,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_form() == *self
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:{}", self.family.letter(), self.rank, self.node)
    }
}
