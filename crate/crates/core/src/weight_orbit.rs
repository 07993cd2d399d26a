//! The weight lattice `Λ_λ` of a minuscule weight.
//!
//! Elements are generated level by level from `λ`: an up-cover labeled `i`
//! leaves `μ` exactly when `(μ, α_i^∨) = 1` and lands on `μ - α_i = s_i(μ)`.
//! Within a level elements are sorted by coordinate vector, which fixes the
//! element indices once and for all.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Dominant, nonzero, and `(λ, β^∨) ∈ {0, 1}` for every positive root `β`.
pub fn is_minuscule(rs: &RootSystem, lambda: &Weight) -> bool {
    lambda.rank() == rs.rank()
        && lambda.is_dominant()
        && lambda.coords().iter().any(|&c| c != 0)
        && rs
            .positive_coroot_values(lambda)
            .into_iter()
            .all(|v| v == 0 || v == 1)
}

/// The minuscule fundamental weights of `rs`, as 0-based node indices.
pub fn minuscule_weights(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank())
        .filter(|&i| is_minuscule(rs, &rs.fundamental(i)))
        .collect()
}

#[derive(Debug, Clone)]
pub struct WeightLattice {
    rs: RootSystem,
    lambda: Weight,
    elements: Vec<Weight>,
    levels: Vec<usize>,
    up_covers: Vec<Vec<(usize, usize)>>,
    index: HashMap<Weight, usize>,
}

impl WeightLattice {
    pub fn generate(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        rs.check_weight(lambda)?;
        if !is_minuscule(rs, lambda) {
            return Err(Error::NotMinuscule(lambda.0.clone()));
        }

        let mut elements = vec![lambda.clone()];
        let mut levels = vec![0];
        let mut index = HashMap::from([(lambda.clone(), 0)]);
        let mut up_covers: Vec<Vec<(usize, usize)>> = vec![Vec::new()];

        let mut frontier = vec![0usize];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next: Vec<Weight> = Vec::new();
            for &k in &frontier {
                let mu = &elements[k];
                for (i, &c) in mu.coords().iter().enumerate() {
                    if !(-1..=1).contains(&c) {
                        return Err(Error::NotMinuscule(lambda.0.clone()));
                    }
                    if c == 1 {
                        next.push(rs.reflect_unchecked(i, mu));
                    }
                }
            }
            next.sort();
            next.dedup();
            for nu in &next {
                if index.contains_key(nu) {
                    return Err(Error::Invariant(format!("weight {nu} reached at two levels")));
                }
                index.insert(nu.clone(), elements.len());
                elements.push(nu.clone());
                levels.push(level);
                up_covers.push(Vec::new());
            }
            for &k in &frontier {
                let covers: Vec<(usize, usize)> = elements[k]
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| c == 1)
                    .map(|(i, _)| (i, index[&rs.reflect_unchecked(i, &elements[k])]))
                    .collect();
                up_covers[k] = covers;
            }
            frontier = (elements.len() - next.len()..elements.len()).collect();
        }

        let lat = WeightLattice {
            rs: rs.clone(),
            lambda: lambda.clone(),
            elements,
            levels,
            up_covers,
            index,
        };
        let top = lat.top();
        if !lat.elements[top].is_antidominant() || lat.maximal_elements().len() != 1 {
            return Err(Error::Invariant(format!("{lambda} has no unique antidominant top")));
        }
        Ok(lat)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &Weight {
        &self.elements[k]
    }

    pub fn index_of(&self, mu: &Weight) -> Option<usize> {
        self.index.get(mu).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of `w₀λ`, the last generated element.
    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Number of simple roots subtracted from `λ` to reach element `k`.
    pub fn level(&self, k: usize) -> usize {
        self.levels[k]
    }

    pub fn height(&self) -> usize {
        self.levels[self.top()]
    }

    /// `(label, target)` pairs sorted by label.
    pub fn up_covers(&self, k: usize) -> &[(usize, usize)] {
        &self.up_covers[k]
    }

    /// `(label, source)` pairs sorted by label: `μ + α_i` whenever
    /// `(μ, α_i^∨) = -1`.
    pub fn down_covers(&self, k: usize) -> Vec<(usize, usize)> {
        let mu = &self.elements[k];
        mu.coords()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == -1)
            .map(|(i, _)| (i, self.index[&self.rs.reflect_unchecked(i, mu)]))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.up_covers[k].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.down_covers(k).is_empty()).collect()
    }

    /// Element indices grouped by level.
    pub fn rank_decomposition(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.height() + 1];
        for (k, &l) in self.levels.iter().enumerate() {
            out[l].push(k);
        }
        out
    }

    /// `μ ≤ ν` in `Λ_λ`: some chain of up-covers leads from `μ` to `ν`.
    pub fn leq(&self, mu: usize, nu: usize) -> bool {
        if self.levels[mu] > self.levels[nu] {
            return false;
        }
        let mut reach = vec![false; self.len()];
        reach[mu] = true;
        for k in mu..=nu {
            if reach[k] {
                for &(_, t) in &self.up_covers[k] {
                    reach[t] = true;
                }
            }
        }
        reach[nu]
    }

    pub fn to_export(&self) -> LatticeExport {
        LatticeExport {
            family: self.rs.cartan_type().family().to_string(),
            rank: self.rs.rank(),
            lambda: self.lambda.clone(),
            elements: self
                .elements
                .iter()
                .enumerate()
                .map(|(index, w)| LatticeElement { index, coords: w.clone(), level: self.levels[index] })
                .collect(),
            covers: (0..self.len())
                .flat_map(|k| {
                    self.up_covers[k]
                        .iter()
                        .map(move |&(label, to)| LatticeCover { from: k, label: label + 1, to })
                })
                .collect(),
        }
    }
}

/// JSON shape for a weight lattice; cover labels are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeExport {
    pub family: String,
    pub rank: usize,
    pub lambda: Weight,
    pub elements: Vec<LatticeElement>,
    pub covers: Vec<LatticeCover>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeElement {
    pub index: usize,
    pub coords: Weight,
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeCover {
    pub from: usize,
    pub label: usize,
    pub to: usize,
}
