//! The minuscule catalog and per-entry pipelines.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynamics::OrbitDecomposition;
use crate::error::{Error, Result};
use crate::heap::{Heap, OrderIdeal};
use crate::homomesy::{self, OrbitReport};
use crate::rootsys::{CartanType, Family, RootSystem, Weight};
use crate::weight_orbit::{self, WeightLattice};

/// A minuscule fundamental weight: `ω_{weight_index}` of `family_rank`,
/// with a 1-based Bourbaki index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub family: Family,
    pub rank: usize,
    pub weight_index: usize,
}

impl CatalogEntry {
    pub fn new(family: Family, rank: usize, weight_index: usize) -> Result<Self> {
        let rs = RootSystem::new(CartanType::new(family, rank)?)?;
        if weight_index == 0 || weight_index > rank {
            return Err(Error::IndexOutOfRange { index: weight_index, rank });
        }
        let lambda = rs.fundamental(weight_index - 1);
        if !weight_orbit::is_minuscule(&rs, &lambda) {
            return Err(Error::NotMinuscule(lambda.0));
        }
        Ok(CatalogEntry { family, rank, weight_index })
    }

    /// Entry whose weight is the fundamental weight `lambda`.
    pub fn from_weight(ty: CartanType, lambda: &Weight) -> Result<Self> {
        let nonzero: Vec<usize> = (0..lambda.rank()).filter(|&i| lambda.coords()[i] != 0).collect();
        match nonzero.as_slice() {
            [i] if lambda.coords()[*i] == 1 => Self::new(ty.family(), ty.rank(), i + 1),
            _ => Err(Error::NotMinuscule(lambda.0.clone())),
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        CartanType::new(self.family, self.rank).expect("validated at construction")
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(self.cartan_type()).expect("validated at construction")
    }

    pub fn lambda(&self) -> Weight {
        Weight::fundamental(self.rank, self.weight_index - 1)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan_type().is_simply_laced()
    }

    /// `[k]×[n-k]` for `ω_k` of `A_{n-1}`.
    pub fn poset_name(&self) -> Option<String> {
        match self.family {
            Family::A => Some(format!(
                "[{}]×[{}]",
                self.weight_index,
                self.rank + 1 - self.weight_index
            )),
            _ => None,
        }
    }

    /// The simply-laced entry with the same minuscule poset, for the
    /// multiply-laced families.
    pub fn simply_laced_twin(&self) -> Option<CatalogEntry> {
        match self.family {
            // B₂ spin: D₃ is only reachable as A₃, where it is ω_1
            Family::B if self.rank == 2 => Some(CatalogEntry { family: Family::A, rank: 3, weight_index: 1 }),
            // spin weight of B_n: same poset as a spin weight of D_{n+1}
            Family::B => Some(CatalogEntry { family: Family::D, rank: self.rank + 1, weight_index: self.rank + 1 }),
            // ω_1 of C_n: a chain of 2n - 1 elements
            Family::C => Some(CatalogEntry { family: Family::A, rank: 2 * self.rank - 1, weight_index: 1 }),
            _ => None,
        }
    }

    pub fn check_caps(&self, caps: &RankCaps) -> Result<()> {
        caps.check(self.family, self.rank)
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} ω{}", self.family, self.rank, self.weight_index)
    }
}

/// Largest rank enumerated or audited per family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCaps {
    caps: BTreeMap<Family, usize>,
}

impl Default for RankCaps {
    fn default() -> Self {
        RankCaps {
            caps: BTreeMap::from([
                (Family::A, 9),
                (Family::B, 6),
                (Family::C, 6),
                (Family::D, 7),
                (Family::E, 7),
            ]),
        }
    }
}

impl RankCaps {
    pub fn cap(&self, family: Family) -> Option<usize> {
        self.caps.get(&family).copied()
    }

    /// Rejects ranks above the cap without building anything.
    pub fn check(&self, family: Family, rank: usize) -> Result<()> {
        match self.cap(family) {
            Some(cap) if rank > cap => Err(Error::RankCapExceeded { family, rank, cap }),
            _ => Ok(()),
        }
    }

    pub fn set(&mut self, family: Family, cap: usize) {
        self.caps.insert(family, cap);
    }

    /// Minuscule entries with rank at most `min(max_rank, cap)`, ordered by
    /// family, rank, then weight index.
    pub fn catalog(&self, max_rank: usize) -> Vec<CatalogEntry> {
        let mut out = Vec::new();
        for family in Family::ALL {
            let limit = self.cap(family).unwrap_or(usize::MAX).min(max_rank);
            for rank in 1..=limit {
                let Ok(ty) = CartanType::new(family, rank) else {
                    continue;
                };
                let rs = RootSystem::new(ty).expect("admissible type");
                for i in weight_orbit::minuscule_weights(&rs) {
                    out.push(CatalogEntry { family, rank, weight_index: i + 1 });
                }
            }
        }
        out
    }

    /// The full capped catalog.
    pub fn full_catalog(&self) -> Vec<CatalogEntry> {
        self.catalog(usize::MAX)
    }
}

/// Everything built for one catalog entry.
#[derive(Debug, Clone)]
pub struct EntryData {
    pub entry: CatalogEntry,
    pub lattice: WeightLattice,
    pub heap: Heap,
    pub ideals: Vec<OrderIdeal>,
    pub decomposition: OrbitDecomposition,
}

impl EntryData {
    pub fn build(entry: CatalogEntry) -> Result<Self> {
        let rs = entry.root_system();
        let lattice = WeightLattice::generate(&rs, &entry.lambda())?;
        let heap = Heap::build(&lattice)?;
        let ideals = heap.ideals(&lattice)?;
        let decomposition = OrbitDecomposition::new(&heap, &ideals)?;
        Ok(EntryData { entry, lattice, heap, ideals, decomposition })
    }

    pub fn audit(&self) -> Result<Vec<OrbitReport>> {
        homomesy::audit(&self.heap, &self.lattice, &self.decomposition)
    }
}
