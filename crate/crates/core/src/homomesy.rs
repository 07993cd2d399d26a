//! Orbit statistics, predicted constants and verdicts.
//!
//! For a minuscule weight `λ` with heap `P_λ`:
//!
//! * `f^i(I) = |I ∩ P_λ^i|` averages to `2(λ, ω_i)/(α_i, α_i)` on every
//!   rowmotion orbit, in every type;
//! * in simply-laced types, `|I|` averages to `2(λ, ρ)/Ω²` and the number of
//!   maximal elements of `I` averages to `2(λ, λ)/Ω²`.
//!
//! The audit checks each orbit separately and compares exact rationals.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::catalog::CatalogEntry;
use crate::dynamics::{rowmotion, OrbitDecomposition};
use crate::error::{Error, Result};
use crate::heap::{Heap, OrderIdeal};
use crate::rootsys::{RootSystem, Weight};
use crate::weight_orbit::WeightLattice;
use crate::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatisticKind {
    /// `f^i`, 0-based label.
    PerLabel(usize),
    TotalCardinality,
    AntichainCardinality,
    /// `g^i`: maximal elements of `I` labeled `i`. Reported, never judged.
    AntichainPerLabel(usize),
}

impl StatisticKind {
    /// Every statistic the audit reports for a rank-`rank` type, in report
    /// order.
    pub fn all(rank: usize) -> Vec<StatisticKind> {
        let mut v: Vec<_> = (0..rank).map(StatisticKind::PerLabel).collect();
        v.push(StatisticKind::TotalCardinality);
        v.push(StatisticKind::AntichainCardinality);
        v.extend((0..rank).map(StatisticKind::AntichainPerLabel));
        v
    }

    pub fn evaluate(&self, heap: &Heap, ideal: &OrderIdeal) -> usize {
        match *self {
            StatisticKind::PerLabel(i) => stat_per_label(heap, ideal, i),
            StatisticKind::TotalCardinality => ideal.len(),
            StatisticKind::AntichainCardinality => stat_antichain(heap, ideal),
            StatisticKind::AntichainPerLabel(i) => stat_antichain_per_label(heap, ideal, i),
        }
    }
}

impl fmt::Display for StatisticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatisticKind::PerLabel(i) => write!(f, "per_label:{}", i + 1),
            StatisticKind::TotalCardinality => f.write_str("total_cardinality"),
            StatisticKind::AntichainCardinality => f.write_str("antichain_cardinality"),
            StatisticKind::AntichainPerLabel(i) => write!(f, "antichain_per_label:{}", i + 1),
        }
    }
}

impl Serialize for StatisticKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `f^i(I) = |I ∩ P_λ^i|`.
pub fn stat_per_label(heap: &Heap, ideal: &OrderIdeal, i: usize) -> usize {
    heap.by_label(i).iter().filter(|&&p| ideal.contains(p)).count()
}

/// `g(I)`: the number of `p` with `t_p(I) = I ∖ {p}`.
pub fn stat_antichain(heap: &Heap, ideal: &OrderIdeal) -> usize {
    heap.maximal_elements(ideal).len()
}

/// `g^i(I)`: maximal elements of `I` labeled `i`.
pub fn stat_antichain_per_label(heap: &Heap, ideal: &OrderIdeal, i: usize) -> usize {
    heap.maximal_elements(ideal)
        .iter()
        .filter(|&p| heap.label(p) == i)
        .count()
}

/// `2((λ, ω_i) - (μ, ω_i)) / (α_i, α_i)`: the number of `α_i` subtracted
/// from `λ` to reach `μ`.
pub fn per_label_from_weight(rs: &RootSystem, lambda: &Weight, mu: &Weight, i: usize) -> Q {
    let w = rs.fundamental(i);
    Q::from_integer(2) * (rs.inner(lambda, &w) - rs.inner(mu, &w)) / rs.root_length_sq(i)
}

/// The constant each statistic should average to, or `None` where no
/// prediction applies (totals and antichains outside simply-laced types,
/// per-label antichain counts everywhere).
pub fn predicted_constant(rs: &RootSystem, lambda: &Weight, kind: StatisticKind) -> Result<Option<Q>> {
    let two = Q::from_integer(2);
    Ok(match kind {
        StatisticKind::PerLabel(i) => {
            rs.check_index(i)?;
            Some(two * rs.inner(lambda, &rs.fundamental(i)) / rs.root_length_sq(i))
        }
        StatisticKind::TotalCardinality => match rs.common_root_length_sq() {
            Some(omega_sq) => {
                let rho = rs.rho();
                let half_sum = rs.half_sum_positive_roots();
                if rho.coords().iter().zip(&half_sum).any(|(&c, h)| Q::from_integer(c as i64) != *h) {
                    return Err(Error::Invariant(format!(
                        "ρ of {} disagrees with the half-sum of positive roots",
                        rs.cartan_type()
                    )));
                }
                Some(two * rs.inner(lambda, &rho) / omega_sq)
            }
            None => None,
        },
        StatisticKind::AntichainCardinality => rs
            .common_root_length_sq()
            .map(|omega_sq| two * rs.inner(lambda, lambda) / omega_sq),
        StatisticKind::AntichainPerLabel(i) => {
            rs.check_index(i)?;
            None
        }
    })
}

/// Exact rational in `"p/q"` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction(pub Q);

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatReport {
    pub kind: StatisticKind,
    pub average: Fraction,
    pub predicted: Option<Fraction>,
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub entry: CatalogEntry,
    pub orbit_id: usize,
    pub size: usize,
    pub stats: Vec<StatReport>,
}

impl OrbitReport {
    /// `false` iff some judged statistic failed.
    pub fn passes(&self) -> bool {
        self.stats.iter().all(|s| s.pass != Some(false))
    }

    pub fn stat(&self, kind: StatisticKind) -> Option<&StatReport> {
        self.stats.iter().find(|s| s.kind == kind)
    }
}

pub fn orbit_average(heap: &Heap, orbit: &[OrderIdeal], kind: StatisticKind) -> Q {
    let sum: usize = orbit.iter().map(|i| kind.evaluate(heap, i)).sum();
    Q::new(sum as i64, orbit.len() as i64)
}

/// One report per orbit, in decomposition order.
pub fn audit(heap: &Heap, lattice: &WeightLattice, decomposition: &OrbitDecomposition) -> Result<Vec<OrbitReport>> {
    let rs = lattice.root_system();
    let lambda = lattice.lambda();
    if heap.lambda() != lambda || heap.root_system().cartan_type() != rs.cartan_type() {
        return Err(Error::Invariant("heap and lattice come from different entries".into()));
    }
    let entry = CatalogEntry::from_weight(rs.cartan_type(), lambda)?;
    let kinds = StatisticKind::all(rs.rank());
    let predicted: Vec<Option<Q>> = kinds
        .iter()
        .map(|&k| predicted_constant(rs, lambda, k))
        .collect::<Result<_>>()?;

    Ok(decomposition
        .orbits()
        .iter()
        .enumerate()
        .map(|(orbit_id, orbit)| OrbitReport {
            entry,
            orbit_id,
            size: orbit.len(),
            stats: kinds
                .iter()
                .zip(&predicted)
                .map(|(&kind, &pred)| {
                    let average = orbit_average(heap, orbit, kind);
                    StatReport {
                        kind,
                        average: Fraction(average),
                        predicted: pred.map(Fraction),
                        pass: pred.map(|p| p == average),
                    }
                })
                .collect(),
        })
        .collect())
}

/// `Σ_k (φ(Ψ^k I), α_i^∨) = 0` on every orbit.
pub fn orbit_sum_identity_check(decomposition: &OrbitDecomposition, heap: &Heap, i: usize) -> bool {
    decomposition.orbits().iter().all(|orbit| {
        orbit
            .iter()
            .map(|ideal| heap.phi(ideal).coords()[i] as i64)
            .sum::<i64>()
            == 0
    })
}

/// Ideals and labels where `(φ(I), α_i^∨) = 1` and `(φ(Ψ(I)), α_i^∨) = -1`
/// fail to be equivalent.
pub fn sign_flip_violations(heap: &Heap, ideals: &[OrderIdeal]) -> Vec<(OrderIdeal, usize)> {
    let mut out = Vec::new();
    for ideal in ideals {
        let mu = heap.phi(ideal);
        let nu = heap.phi(&rowmotion(heap, ideal));
        for i in 0..mu.rank() {
            if (mu.coords()[i] == 1) != (nu.coords()[i] == -1) {
                out.push((*ideal, i));
            }
        }
    }
    out
}

/// Both sides of `Σ_k g^i(Ψ^k I) = Σ_k 2(φ, α_i^∨)(φ, ω_i)/(α_i, α_i)`,
/// summed over one orbit with `φ = φ(Ψ^k I)`.
pub fn antichain_label_identity(heap: &Heap, orbit: &[OrderIdeal], i: usize) -> (Q, Q) {
    let rs = heap.root_system();
    let w = rs.fundamental(i);
    let two = Q::from_integer(2);
    let mut lhs = Q::zero();
    let mut rhs = Q::zero();
    for ideal in orbit {
        lhs += Q::from_integer(stat_antichain_per_label(heap, ideal, i) as i64);
        let mu = heap.phi(ideal);
        rhs += two * rs.inner(&mu, &w) * mu.coords()[i] as i64 / rs.root_length_sq(i);
    }
    (lhs, rhs)
}

/// Both sides of `Σ_k g(Ψ^k I) = Σ_k 2(φ, φ)/Ω²` on one orbit; `None` outside
/// simply-laced types.
pub fn antichain_orbit_identity(heap: &Heap, orbit: &[OrderIdeal]) -> Option<(Q, Q)> {
    let rs = heap.root_system();
    let omega_sq = rs.common_root_length_sq()?;
    let two = Q::from_integer(2);
    let lhs = orbit
        .iter()
        .map(|i| Q::from_integer(stat_antichain(heap, i) as i64))
        .fold(Q::zero(), |a, b| a + b);
    let rhs = orbit
        .iter()
        .map(|i| {
            let mu = heap.phi(i);
            two * rs.inner(&mu, &mu) / omega_sq
        })
        .fold(Q::zero(), |a, b| a + b);
    Some((lhs, rhs))
}
